#include "aifs/error.hpp"

namespace aifs {

const char *to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::shape: return "shape";
    case ErrorKind::singular: return "singular";
    case ErrorKind::not_expansive: return "not_expansive";
    case ErrorKind::borderline: return "borderline";
    case ErrorKind::index: return "index";
    case ErrorKind::cardinality: return "cardinality";
    case ErrorKind::parse: return "parse";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::budget: return "budget";
    case ErrorKind::inapplicable: return "inapplicable";
    case ErrorKind::not_certified: return "not_certified";
    }
    return "unknown";
}

} // namespace aifs
