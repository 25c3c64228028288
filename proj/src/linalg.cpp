#include "jjarray/linalg.hpp"

#include <cassert>
#include <cmath>

namespace jjarray {

std::vector<double> multiply(const RealMatrix& a, std::span<const double> x) {
    assert(x.size() == a.size());
    std::vector<double> y(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j) acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

double bilinear(std::span<const double> x, const RealMatrix& a, std::span<const double> y) {
    const auto ay = multiply(a, y);
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * ay[i];
    return acc;
}

std::optional<Cholesky> Cholesky::factor(const RealMatrix& a, double pivot_tolerance) {
    const std::size_t n = a.size();
    RealMatrix l(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double pivot = a(j, j);
        for (std::size_t k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
        if (!(pivot > pivot_tolerance)) return std::nullopt;
        const double d = std::sqrt(pivot);
        l(j, j) = d;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / d;
        }
    }
    return Cholesky(std::move(l));
}

std::vector<double> Cholesky::solve(std::span<const double> b) const {
    const std::size_t n = size();
    assert(b.size() == n);
    std::vector<double> y(b.begin(), b.end());
    // forward: L y = b
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) y[i] -= lower_(i, k) * y[k];
        y[i] /= lower_(i, i);
    }
    // backward: Lᵀ x = y
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t k = ii + 1; k < n; ++k) y[ii] -= lower_(k, ii) * y[k];
        y[ii] /= lower_(ii, ii);
    }
    return y;
}

RealMatrix Cholesky::inverse() const {
    const std::size_t n = size();
    RealMatrix inv(n);
    std::vector<double> e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e.assign(n, 0.0);
        e[j] = 1.0;
        const auto col = solve(e);
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    }
    // symmetrize away rounding asymmetry
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double m = 0.5 * (inv(i, j) + inv(j, i));
            inv(i, j) = m;
            inv(j, i) = m;
        }
    return inv;
}

}  // namespace jjarray
