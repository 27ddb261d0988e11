#ifndef HKDEHN_ERRORS_HPP
#define HKDEHN_ERRORS_HPP

#include <stdexcept>

namespace hkdehn {

/// Argument outside the open interval where a function is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inversion target outside the range of a monotone map.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Adaptive quadrature ran out of subdivision budget.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid caller-supplied data (nonpositive volume, empty list, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hkdehn

#endif  // HKDEHN_ERRORS_HPP
