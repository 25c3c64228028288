#include "jjarray/error.hpp"

namespace jjarray {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Syntax: return "syntax";
        case ErrorKind::Validation: return "validation";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Singular: return "singular";
        case ErrorKind::Numerical: return "numerical";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

}  // namespace jjarray
