#pragma once

#include "nutforge/intpoly.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace nutforge {

/// Square matrix of arbitrary-precision integers, row-major.
struct ExactMatrix {
  int n = 0;
  std::vector<mpz_class> entries;

  ExactMatrix() = default;
  explicit ExactMatrix(int order);

  mpz_class& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
  const mpz_class& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * n + j];
  }
};

struct KernelResult {
  int nullity = 0;
  /// Present iff nullity == 1: the canonical primitive kernel vector
  /// (coprime entries, first non-zero entry positive), verified by exact
  /// multiplication.
  std::optional<std::vector<mpz_class>> kernel_vector;
  /// Present iff kernel_vector is: true iff every entry is non-zero.
  std::optional<bool> full;
};

/// Exact nullity over the rationals by fraction-free (Bareiss)
/// elimination with partial pivoting on the first non-zero column entry.
KernelResult nullity_kernel(const ExactMatrix& a);

/// Monic characteristic polynomial det(xI - A) by the division-free
/// Samuelson-Berkowitz recursion.
IntPoly charpoly(const ExactMatrix& a);

/// Divides by the gcd of the entries and flips signs so the first
/// non-zero entry is positive. The zero vector is returned unchanged.
std::vector<mpz_class> canonical_primitive(std::vector<mpz_class> v);

}  // namespace nutforge
