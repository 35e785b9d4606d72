#include "nutforge/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace nutforge {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(unsigned long exponent, mpz_class coefficient) {
  if (coefficient == 0) return {};
  std::vector<mpz_class> c(exponent + 1, kZero);
  c.back() = std::move(coefficient);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::roots_of_unity_poly(unsigned long n) {
  std::vector<mpz_class> c(n + 1, kZero);
  c.front() = -1;
  c.back() = 1;
  return IntPoly(std::move(c));
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const mpz_class& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::invalid_argument("leading(): zero polynomial");
  return coeffs_.back();
}

unsigned long IntPoly::trailing_exponent() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return 0;
}

mpz_class IntPoly::operator()(const mpz_class& point) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
  return acc;
}

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<mpz_class> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const mpz_class& factor) const {
  if (factor == 0) return {};
  std::vector<mpz_class> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * factor;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::times_x_power(unsigned long k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : IntPoly{};
  std::vector<mpz_class> c(coeffs_.size() + k, kZero);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + static_cast<long>(k));
  return IntPoly(std::move(c));
}

IntPoly IntPoly::at_minus_x() const {
  std::vector<mpz_class> c = coeffs_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::without_trailing_zeros() const {
  if (is_zero()) return {};
  unsigned long t = trailing_exponent();
  std::vector<mpz_class> c(coeffs_.begin() + static_cast<long>(t), coeffs_.end());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    c[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(c));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    mpz_divexact(c[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) {
      out << a.get_str();
      if (i != 0) out << "*";
    }
    if (i > 0) out << "x";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

PolyDivRem divrem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
  if (!b.is_monic()) throw std::invalid_argument("divrem: divisor must be monic");
  if (a.degree() < b.degree()) return {IntPoly{}, a};
  std::vector<mpz_class> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<mpz_class> quot(rem.size() - db, mpz_class(0));
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    mpz_class q = rem[i];
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

bool divides(const IntPoly& d, const IntPoly& a) {
  return divrem(a, d).remainder.is_zero();
}

IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_rem: division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  const mpz_class& lc = b.leading();
  std::vector<mpz_class> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  // Scale lazily: each elimination step multiplies the tail by lc once.
  for (std::size_t i = rem.size(); i-- > db;) {
    mpz_class top = rem[i];
    for (std::size_t j = 0; j < i; ++j) rem[j] *= lc;
    for (std::size_t j = 0; j < db; ++j) rem[i - db + j] -= top * b.coeff(j);
    rem[i] = 0;
  }
  rem.resize(db);
  return IntPoly(std::move(rem));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree())
    throw std::invalid_argument("exact_div: divisor does not divide exactly");
  std::vector<mpz_class> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const mpz_class& lc = b.leading();
  std::vector<mpz_class> quot(rem.size() - db, mpz_class(0));
  mpz_class q, check;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    mpz_fdiv_qr(q.get_mpz_t(), check.get_mpz_t(), rem[i].get_mpz_t(), lc.get_mpz_t());
    if (check != 0)
      throw std::invalid_argument("exact_div: divisor does not divide exactly");
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
  }
  for (const auto& r : rem) {
    if (r != 0)
      throw std::invalid_argument("exact_div: divisor does not divide exactly");
  }
  return IntPoly(std::move(quot));
}

std::vector<IntPoly> squarefree_layers(const IntPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument("squarefree_layers: zero polynomial");
  std::vector<IntPoly> layers;
  IntPoly g = p.primitive_part();
  while (g.degree() > 0) {
    IntPoly next = poly_gcd(g, g.derivative());
    layers.push_back(exact_div(g, next).primitive_part());
    g = std::move(next);
  }
  return layers;
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("poly_gcd: gcd(0, 0) is undefined");
  IntPoly g = a.primitive_part();
  IntPoly h = b.primitive_part();
  if (g.degree() < h.degree()) std::swap(g, h);
  while (!h.is_zero()) {
    IntPoly r = pseudo_rem(g, h);
    g = std::move(h);
    h = r.primitive_part();
  }
  return g;
}

}  // namespace nutforge
