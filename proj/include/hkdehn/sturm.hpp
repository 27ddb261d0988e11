#ifndef HKDEHN_STURM_HPP
#define HKDEHN_STURM_HPP

#include <stdexcept>
#include <vector>

#include "hkdehn/polynomial.hpp"

namespace hkdehn {

/// Raised when a Sturm count is requested at an endpoint that is itself a
/// root. Callers are expected to perturb the endpoint rationally.
class EndpointRootError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rational interval [lo, hi] certified to hold exactly one real root.
struct RootEnclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  /// Outward-rounded double bounds.
  double lo_down() const { return round_down(lo); }
  double hi_up() const { return round_up(hi); }
  double midpoint() const { return to_double((lo + hi) / 2); }
};

/// Canonical Sturm sequence p, p', -rem(p, p'), ...
std::vector<RationalPoly> sturm_sequence(const RationalPoly& p);

/// Number of distinct real roots of p in the open interval (a, b).
/// Requires a < b and p(a), p(b) nonzero.
int sturm_count(const RationalPoly& p, const Rational& a, const Rational& b);

/// Shrinks `bracket` to width <= tol by exact bisection. The bracket must
/// hold exactly one root (Sturm count 1).
RootEnclosure refine_root(const RationalPoly& p, RootEnclosure bracket, double tol);

}  // namespace hkdehn

#endif  // HKDEHN_STURM_HPP
