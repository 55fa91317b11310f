#ifndef UCONF_SCALAR_HPP
#define UCONF_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace uconf {

/// Exact rational scalar. GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Scalar = mpq_class;

/// Parses "n", "-n" or "n/d" (d > 0). Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "3", "-2/3".
std::string to_string(const Scalar& s);

}  // namespace uconf

#endif  // UCONF_SCALAR_HPP
