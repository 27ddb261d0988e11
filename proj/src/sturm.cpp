#include "hkdehn/sturm.hpp"

#include <cmath>

namespace hkdehn {

namespace {

int sign_variations(const std::vector<RationalPoly>& seq, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sgn(p(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

std::vector<RationalPoly> sturm_sequence(const RationalPoly& p) {
  std::vector<RationalPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  RationalPoly next = derivative(p);
  while (!next.is_zero()) {
    seq.push_back(next);
    next = -divmod(seq[seq.size() - 2], seq.back()).second;
  }
  return seq;
}

int sturm_count(const RationalPoly& p, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::domain_error("sturm_count requires a < b");
  if (p.is_zero()) throw std::domain_error("sturm_count of the zero polynomial");
  if (p(a) == 0) throw EndpointRootError("left endpoint " + a.get_str() + " is a root");
  if (p(b) == 0) throw EndpointRootError("right endpoint " + b.get_str() + " is a root");
  const auto seq = sturm_sequence(p);
  return sign_variations(seq, a) - sign_variations(seq, b);
}

RootEnclosure refine_root(const RationalPoly& p, RootEnclosure bracket, double tol) {
  if (!(tol > 0) || !std::isfinite(tol)) throw std::domain_error("refine_root needs a positive finite tolerance");
  if (sturm_count(p, bracket.lo, bracket.hi) != 1)
    throw std::domain_error("refine_root bracket does not isolate exactly one root");

  const Rational width_goal = to_rational(tol);
  const auto seq = sturm_sequence(p);
  int s_lo = sgn(p(bracket.lo));
  const int s_hi = sgn(p(bracket.hi));

  while (bracket.width() > width_goal) {
    Rational mid = (bracket.lo + bracket.hi) / 2;
    const int s_mid = sgn(p(mid));
    if (s_mid == 0) {
      // Exact rational root: centre a fresh enclosure on it.
      Rational half = width_goal / 4;
      if (half > bracket.width() / 4) half = bracket.width() / 4;
      return {mid - half, mid + half};
    }
    bool root_left;
    if (s_lo != s_hi) {
      root_left = (s_mid != s_lo);
    } else {
      // Even-multiplicity root: no sign change, fall back to counting.
      root_left = sign_variations(seq, bracket.lo) - sign_variations(seq, mid) == 1;
    }
    if (root_left) {
      bracket.hi = mid;
    } else {
      bracket.lo = mid;
      s_lo = s_mid;
    }
  }
  return bracket;
}

}  // namespace hkdehn
