#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace nutforge {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. coeff(i) holds the coefficient of x^i. The zero
/// polynomial has an empty coefficient vector; its degree() is the
/// sentinel kZeroDegree, which must never be used as an index.
class IntPoly {
 public:
  static constexpr long kZeroDegree = -1;

  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(unsigned long exponent, mpz_class coefficient = 1);
  /// x^n - 1, the polynomial whose roots are the n-th roots of unity.
  static IntPoly roots_of_unity_poly(unsigned long n);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  const mpz_class& coeff(std::size_t i) const;
  const mpz_class& leading() const;
  /// Smallest exponent with a non-zero coefficient (0 for the zero poly).
  unsigned long trailing_exponent() const;

  mpz_class operator()(const mpz_class& point) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);

  IntPoly scaled(const mpz_class& factor) const;
  IntPoly times_x_power(unsigned long k) const;
  /// p(-x): flips the sign of every odd-degree coefficient.
  IntPoly at_minus_x() const;
  /// Divides out x^trailing_exponent().
  IntPoly without_trailing_zeros() const;
  IntPoly derivative() const;

  /// gcd of all coefficients, non-negative; 0 for the zero polynomial.
  mpz_class content() const;
  /// this / content, sign-normalized so the leading coefficient is positive.
  IntPoly primitive_part() const;

  bool operator==(const IntPoly&) const = default;

  /// Human-readable form, e.g. "x^3 - 4*x".
  std::string to_string() const;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

struct PolyDivRem {
  IntPoly quotient;
  IntPoly remainder;
};

/// Exact division with remainder by a monic divisor. Throws
/// std::invalid_argument if b is zero or not monic.
PolyDivRem divrem(const IntPoly& a, const IntPoly& b);

/// True iff the monic polynomial d divides a exactly.
bool divides(const IntPoly& d, const IntPoly& a);

/// Quotient a / b when b divides a exactly over the integers (b need not
/// be monic). Throws std::invalid_argument otherwise.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// Squarefree layers of a non-zero polynomial: element k-1 is the
/// product of the distinct irreducible factors of multiplicity >= k.
std::vector<IntPoly> squarefree_layers(const IntPoly& p);

/// Pseudo-remainder: the remainder of lc(b)^(deg a - deg b + 1) * a
/// divided by b. Requires b non-zero.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

/// Primitive gcd (content 1, positive leading coefficient), computed by a
/// pseudo-remainder sequence with content stripping at each step. Throws
/// std::invalid_argument on gcd(0, 0).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

}  // namespace nutforge
