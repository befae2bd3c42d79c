#pragma once

#include <stdexcept>
#include <string>

namespace qpart {

/* Binary series operations require both operands to carry the same
 * truncation order; there is no implicit re-truncation. */
class OrderMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/* Raised when a coefficient sequence is longer than the requested
 * truncation order allows. */
class LengthError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/* Raised by inversion when the constant term is not a unit (+1 or -1). */
class NotInvertibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/* Raised by infinite Pochhammer products for the argument +q^0, whose
 * product is identically zero and has no useful truncation. */
class DegenerateArgumentError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/* Raised when a documented precondition is violated (unsorted partition
 * input, out-of-range family parameters, and the like). */
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/* Raised by the Jacobi triple product checker for specializations that
 * would place negative exponents inside the truncation window. */
class UnsupportedSpecializationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace qpart
