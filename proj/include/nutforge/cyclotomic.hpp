#pragma once

#include "nutforge/intpoly.hpp"

#include <vector>

namespace nutforge {

unsigned long euler_phi(unsigned long n);

/// Divisors of n in increasing order.
std::vector<unsigned long> divisors(unsigned long n);

/// The b-th cyclotomic polynomial: monic, degree phi(b), obtained by
/// exact division of x^b - 1 by the cyclotomic polynomials of the proper
/// divisors of b. Results are memoized. Requires b >= 1.
IntPoly cyclotomic(unsigned long b);

/// The orders b such that the b-th cyclotomic polynomial divides a
/// scanned polynomial, i.e. the orders of the roots of unity among its
/// roots.
struct CyclotomicFactorSet {
  std::vector<unsigned long> orders;  // sorted ascending

  bool contains(unsigned long b) const;
  bool empty() const { return orders.empty(); }
  /// Largest order present; 0 when the set is empty.
  unsigned long max_order() const { return orders.empty() ? 0 : orders.back(); }
};

/// All b with Phi_b dividing p. Phi_b | p forces phi(b) <= deg p, and
/// phi(b) >= sqrt(b/2) bounds the search by b <= 2*deg(p)^2; the phi
/// filter is applied before any division. Throws on the zero polynomial
/// (every cyclotomic divides it).
CyclotomicFactorSet cyclotomic_factors(const IntPoly& p);

/// Given chi monic of degree N >= 1 and the cleared numerator q_pos of a
/// Laurent connection sum q_pos(x)/x^alpha, returns the integer
/// polynomial r(x) = x^(alpha*N) * chi(-q_pos(x)/x^alpha). For every
/// non-zero complex zeta, r(zeta) = 0 iff lambda*zeta^alpha +
/// q_pos(zeta) = 0 for some root lambda of chi.
IntPoly laurent_substitute(const IntPoly& chi, const IntPoly& q_pos,
                           unsigned long alpha);

}  // namespace nutforge
