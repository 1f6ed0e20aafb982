#pragma once

#include <stdexcept>
#include <string>

namespace aifs {

enum class ErrorKind {
    shape,          // malformed dimensions
    singular,       // matrix not invertible
    not_expansive,  // some eigenvalue clearly inside the unit disk
    borderline,     // some eigenvalue within the certification margin of 1
    index,          // index out of range
    cardinality,    // |B| != |L| and similar
    parse,          // malformed input document
    unsupported,    // e.g. exact path requested for non-rational data
    budget,         // work or size cap exceeded
    inapplicable,   // a criterion's hypothesis does not hold
    not_certified,  // operation requires a certified object
};

const char *to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace aifs
