#ifndef HKDEHN_POLYNOMIAL_HPP
#define HKDEHN_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hkdehn/rational.hpp"

namespace hkdehn {

/// Univariate polynomial with coefficients in ascending degree order.
///
/// The stored coefficient vector never ends in a zero, so the zero
/// polynomial has no coefficients and `degree()` is the index of the last
/// stored entry. Division and GCD require `Scalar` to be a field; they are
/// meant for `Rational`. The `double` instantiation is used only for fast
/// evaluation of forms that were derived exactly.
template <class Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }
  /// c * z^n
  static Polynomial monomial(const Scalar& c, std::size_t n) {
    std::vector<Scalar> v(n + 1, Scalar(0));
    v[n] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Scalar> coeffs() const { return coeffs_; }
  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  Scalar leading() const { return is_zero() ? Scalar(0) : coeffs_.back(); }

  /// Horner evaluation. Exact for exact scalar types.
  template <class X>
  X operator()(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = X(acc * x + X(*it));
    return acc;
  }

  Polynomial operator-() const {
    std::vector<Scalar> v(coeffs_);
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) { return *this += -rhs; }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Scalar> v(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(Polynomial lhs, const Scalar& s) { return lhs *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial rhs) { return rhs *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using RationalPoly = Polynomial<Rational>;

/// The identity polynomial z.
template <class Scalar>
Polynomial<Scalar> variable() {
  return Polynomial<Scalar>::monomial(Scalar(1), 1);
}

template <class Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
  if (p.degree() < 1) return {};
  std::vector<Scalar> v(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i <= v.size(); ++i) v[i - 1] = Scalar(p.coeff(i) * Scalar(static_cast<long>(i)));
  return Polynomial<Scalar>(std::move(v));
}

template <class Scalar>
Polynomial<Scalar> pow(Polynomial<Scalar> base, unsigned n) {
  Polynomial<Scalar> acc = Polynomial<Scalar>::constant(Scalar(1));
  while (n) {
    if (n & 1u) acc *= base;
    base *= base;
    n >>= 1u;
  }
  return acc;
}

/// Euclidean division a = q*b + r with deg r < deg b.
template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a,
                                                         const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial<Scalar> q, r = a;
  const Scalar lead = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    auto term = Polynomial<Scalar>::monomial(Scalar(r.leading() / lead), shift);
    q += term;
    r -= term * b;
  }
  return {std::move(q), std::move(r)};
}

/// Scales p to leading coefficient 1 (zero stays zero).
template <class Scalar>
Polynomial<Scalar> monic(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return p;
  return p * Scalar(Scalar(1) / p.leading());
}

/// Monic greatest common divisor.
template <class Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// True when every odd-degree coefficient is zero.
template <class Scalar>
bool is_even(const Polynomial<Scalar>& p) {
  for (std::size_t i = 1; i < p.coeffs().size(); i += 2)
    if (p.coeffs()[i] != Scalar(0)) return false;
  return true;
}

/// For even p returns q with p(z) = q(z^2); throws otherwise.
template <class Scalar>
Polynomial<Scalar> in_square(const Polynomial<Scalar>& p) {
  if (!is_even(p)) throw std::domain_error("polynomial is not even");
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < p.coeffs().size(); i += 2) v.push_back(p.coeffs()[i]);
  return Polynomial<Scalar>(std::move(v));
}

/// Coefficient-wise conversion to double (nearest).
Polynomial<double> to_double(const RationalPoly& p);

std::string to_string(const RationalPoly& p, char var = 'z');

}  // namespace hkdehn

#endif  // HKDEHN_POLYNOMIAL_HPP
