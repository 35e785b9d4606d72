#include "nutforge/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace nutforge {

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

IntPoly cyclotomic(unsigned long b) {
  if (b == 0) throw std::invalid_argument("cyclotomic: order must be positive");
  static std::mutex mutex;
  static std::map<unsigned long, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(b);
    if (it != cache.end()) return it->second;
  }
  IntPoly result = IntPoly::roots_of_unity_poly(b);
  for (unsigned long d : divisors(b)) {
    if (d == b) continue;
    result = divrem(result, cyclotomic(d)).quotient;
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(b, std::move(result)).first->second;
}

bool CyclotomicFactorSet::contains(unsigned long b) const {
  return std::binary_search(orders.begin(), orders.end(), b);
}

CyclotomicFactorSet cyclotomic_factors(const IntPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument(
        "cyclotomic_factors: zero polynomial has every cyclotomic factor");
  const unsigned long deg = static_cast<unsigned long>(p.degree());
  CyclotomicFactorSet found;
  if (deg == 0) return found;
  const unsigned long ceiling = 2 * deg * deg;
  // Sieve of Euler totients up to the hard ceiling.
  std::vector<unsigned long> phi(ceiling + 1);
  for (unsigned long i = 0; i <= ceiling; ++i) phi[i] = i;
  for (unsigned long i = 2; i <= ceiling; ++i) {
    if (phi[i] == i) {  // prime
      for (unsigned long j = i; j <= ceiling; j += i) phi[j] -= phi[j] / i;
    }
  }
  for (unsigned long b = 1; b <= ceiling; ++b) {
    if (phi[b] > deg) continue;
    if (divides(cyclotomic(b), p)) found.orders.push_back(b);
  }
  return found;
}

IntPoly laurent_substitute(const IntPoly& chi, const IntPoly& q_pos,
                           unsigned long alpha) {
  if (!chi.is_monic())
    throw std::invalid_argument("laurent_substitute: chi must be monic");
  const long n = chi.degree();
  if (n < 1)
    throw std::invalid_argument("laurent_substitute: chi must have degree >= 1");
  // Horner in y = -q_pos(x)/x^alpha with the denominator cleared at each
  // step: after the step for coefficient i, acc holds
  //   sum_{j >= i} chi_j * (-q_pos)^(j-i) * x^(alpha*(n-j)).
  const IntPoly neg_q = -q_pos;
  IntPoly acc{1};
  for (long i = n - 1; i >= 0; --i) {
    acc = acc * neg_q;
    acc += IntPoly::monomial(alpha * static_cast<unsigned long>(n - i),
                             chi.coeff(static_cast<std::size_t>(i)));
  }
  return acc;
}

}  // namespace nutforge
