#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace jjarray {

/// Dense square matrix, row-major. Sizes here are a few dozen at most.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    [[nodiscard]] std::span<const T> row(std::size_t i) const {
        return std::span<const T>(data_).subspan(i * n_, n_);
    }

    [[nodiscard]] bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    template <typename U>
    [[nodiscard]] SquareMatrix<U> cast() const {
        SquareMatrix<U> out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out(i, j) = static_cast<U>((*this)(i, j));
        return out;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using IntMatrix = SquareMatrix<int>;
using RealMatrix = SquareMatrix<double>;

/// y = A x
std::vector<double> multiply(const RealMatrix& a, std::span<const double> x);

/// xᵀ A y
double bilinear(std::span<const double> x, const RealMatrix& a, std::span<const double> y);

/// Lower-triangular Cholesky factor A = L Lᵀ of a symmetric positive definite matrix.
class Cholesky {
public:
    /// Returns nullopt when any pivot (diagonal of L squared) falls at or below
    /// `pivot_tolerance`, i.e. the matrix is singular or indefinite.
    static std::optional<Cholesky> factor(const RealMatrix& a, double pivot_tolerance = 1e-12);

    [[nodiscard]] std::size_t size() const noexcept { return lower_.size(); }

    [[nodiscard]] std::vector<double> solve(std::span<const double> b) const;

    /// A⁻¹, column by column.
    [[nodiscard]] RealMatrix inverse() const;

    [[nodiscard]] const RealMatrix& lower() const noexcept { return lower_; }

private:
    explicit Cholesky(RealMatrix lower) : lower_(std::move(lower)) {}

    RealMatrix lower_;
};

}  // namespace jjarray
