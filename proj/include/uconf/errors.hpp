#ifndef UCONF_ERRORS_HPP
#define UCONF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace uconf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of a fibrewise operation live over different configurations.
class ConfigMismatch : public Error {
 public:
  using Error::Error;
};

/// A Cauchy-type operation was given configurations that share a point.
class OverlappingConfigurations : public Error {
 public:
  using Error::Error;
};

class UnknownPoint : public Error {
 public:
  using Error::Error;
};

class BasisOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A kernel was queried or populated on two generators at one point.
class SamePoint : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace uconf

#endif  // UCONF_ERRORS_HPP
