#pragma once

#include "nutforge/cyclotomic.hpp"
#include "nutforge/exactla.hpp"
#include "nutforge/graph.hpp"
#include "nutforge/intpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nutforge {

enum class CertRoute { direct_kernel, circulant_cyclotomic, product_polynomial };

std::string to_string(CertRoute route);

enum class FailureKind { nullity_not_one, kernel_has_zero, shared_nonzero_eigenvalue };

std::string to_string(FailureKind kind);

struct FailureReason {
  FailureKind kind;
  /// Cyclotomic orders witnessing extra zero eigenvalues (circulant route).
  std::vector<unsigned long> witness_orders;
  /// Shared non-zero eigenvalue factor (product polynomial route).
  std::optional<IntPoly> witness_factor;
};

/// Auditable verdict of a nut test. When is_nut is true the nullity is 1
/// and the kernel vector is present, primitive, and has no zero entry.
struct NutCertificate {
  bool is_nut = false;
  int order = 0;
  std::optional<int> degree;  // nullopt: irregular
  int nullity = 0;
  std::optional<std::vector<mpz_class>> kernel_vector;
  CertRoute route = CertRoute::direct_kernel;
  std::optional<FailureReason> failure_reason;
  /// Circulant route only: every divisor order b of n whose cyclotomic
  /// polynomial divides the connection polynomial.
  std::vector<unsigned long> cyclotomic_orders;
};

/// Largest order the direct (dense elimination) route accepts. Defaults
/// to 5000; the NUTFORGE_MAX_ORDER environment variable overrides it.
int max_direct_order();

/// Direct route: exact nullity and kernel by fraction-free elimination.
/// Throws std::invalid_argument above max_direct_order().
NutCertificate is_nut(const Graph& g);

/// Circulant fast path: scans the divisors b of n for cyclotomic factors
/// of the connection polynomial. The graph is a nut iff the only such
/// order is 2, in which case the alternating vector is the kernel.
NutCertificate circulant_is_nut(const CirculantSpec& spec);

/// Characteristic polynomial of a circulant assembled from the spectrum
/// structure: for each divisor b of n, the block of eigenvalues at the
/// primitive b-th roots of unity contributes the characteristic
/// polynomial of multiplication by the connection polynomial modulo the
/// b-th cyclotomic polynomial.
IntPoly circulant_charpoly(const CirculantSpec& spec);

enum class ProductStrategy { direct, polynomial };

/// Nut test for a cartesian product. The direct strategy builds the
/// product and runs is_nut. The polynomial strategy requires both
/// factors to be nut graphs; the product is a nut iff the primitive gcd
/// of charpoly(G)(x) and the monic-normalized charpoly(H)(-x) is exactly
/// x, and the kernel vector is the entrywise product of the factor
/// kernels, verified by exact multiplication.
NutCertificate product_is_nut(const Graph& g, const Graph& h,
                              ProductStrategy strategy);

/// Polynomial-route core used when factor certificates and
/// characteristic polynomials are already available (e.g. computed via
/// the circulant structure).
NutCertificate product_nut_via_charpolys(const Graph& g,
                                         const NutCertificate& cert_g,
                                         const IntPoly& chi_g, const Graph& h,
                                         const NutCertificate& cert_h,
                                         const IntPoly& chi_h);

enum class FeasibilityFamily {
  reg3, reg4, reg5, reg6, reg7, reg8, reg9, reg10, reg11, reg12,
  circ, vt, cay,
};

std::optional<FeasibilityFamily> parse_feasibility_family(std::string_view name);
std::string to_string(FeasibilityFamily family);

struct FeasibilityQuery {
  FeasibilityFamily family;
  int d = 0;
  int n = 0;
};

enum class Feasibility { member, non_member, unknown_beyond_theorems };

std::string to_string(Feasibility verdict);

/// Closed-form order-degree feasibility for d-regular nut graphs in the
/// regular (d = 3..12), circulant, vertex-transitive and Cayley classes.
/// For vt/cay with d = 2 (mod 4) the answer is definitive only where the
/// necessary conditions fail or the explicit Cayley family provides a
/// witness; otherwise unknown_beyond_theorems.
Feasibility feasible(const FeasibilityQuery& query);

}  // namespace nutforge
