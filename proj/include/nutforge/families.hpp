#pragma once

#include "nutforge/cyclotomic.hpp"
#include "nutforge/graph.hpp"
#include "nutforge/nutcert.hpp"

#include <vector>

namespace nutforge {

/// Jump set for the product construction: t odd and t even positive
/// integers, pairwise distinct.
struct JumpSet {
  std::vector<int> jumps;  // sorted ascending
  int t = 0;

  explicit JumpSet(std::vector<int> jump_set);

  int alpha() const { return jumps.back(); }
};

/// Outcome of the admissible-prime computation for the product
/// construction: ell = 1 + max(alpha, beta), where alpha = max S and
/// beta is the largest order of a root of unity annihilating some
/// eigenvalue slice of the substituted polynomial r(x).
struct EllReport {
  int alpha = 0;
  unsigned long beta = 0;
  unsigned long ell = 0;
  CyclotomicFactorSet factor_orders;
  long r_degree = 0;
};

/// Scans r(x) = x^(alpha*N) * chi_G(-q_pos(x)/x^alpha) for cyclotomic
/// factors. Requires G to be a regular nut graph of degree d < 4t.
/// For every prime p >= ell, the cartesian product of G with
/// Circ(2p, S) is a (d + 4t)-regular nut graph.
EllReport compute_ell(const Graph& g, const JumpSet& s);

struct LemmaBuildResult {
  Graph graph;
  NutCertificate certificate;
};

/// Builds the product of G with Circ(2p, S) and certifies it directly
/// (the construction is never trusted without verification). Requires p
/// prime and p >= compute_ell(g, s).ell.
LemmaBuildResult build_main_lemma(const Graph& g, const JumpSet& s, int p);

bool is_prime(int p);

/// The 4t-regular circulant family D(n, t) on n = 2 (mod 4) vertices,
/// n >= 4t + 6: jumps {1..t-1} u {(n+2)/4, (n+6)/4} u {n/2-(t-1)..n/2-1}.
CirculantSpec d_family(int n, int t);

struct CayleyFamilyResult {
  CirculantSpec spec;  // the circulant factor, including the m/2 jump
  Graph graph;         // circulant x K2
  NutCertificate certificate;
};

/// The (4t+2)-regular Cayley family on 2m vertices (m = 2 (mod 4),
/// m >= 4t + 6): the D(m, t) circulant with the extra m/2 jump, times
/// K2. Certified by direct verification.
CayleyFamilyResult cayley_family(int m, int t);

struct CauxPolyReport {
  unsigned long stripped_exponent = 0;
  CyclotomicFactorSet orders;
};

struct CauxReport {
  int t = 0;
  CauxPolyReport p1;
  CauxPolyReport p2;
  /// Orders b >= 3 with b != 0 (mod 4) found in either polynomial; the
  /// Cayley construction needs this empty, and the scan checks it.
  std::vector<unsigned long> violations;
};

/// Scans 2x^(4t+3) + x^(2t+8) - x^(2t) - 2x^5 and its sign twin for
/// cyclotomic factors, for each t = 1..t_max. The power of x is stripped
/// first (0 is not a root of unity).
std::vector<CauxReport> caux_scan(int t_max);

enum class ConjectureVariant { i, ii, iii };

std::string to_string(ConjectureVariant variant);

/// One cell of the conjecture grid: variant i is D(4t+6, t) x F5 of
/// degree 4t+5 (any t >= 1); variant ii is D(4t+6, t) x F3 of degree
/// 4t+3 (t != 0 mod 3); variant iii is D(4t+10, t) x F3 (t = 0 mod 3).
struct ConjectureCase {
  ConjectureVariant variant;
  int t = 0;

  ConjectureCase(ConjectureVariant v, int t_value);

  int circulant_order() const;
  std::string factor_name() const;
  int expected_degree() const;
};

/// Product order at or below which the conjecture harness certifies by
/// direct elimination; larger cells use the polynomial route.
inline constexpr int kConjectureDirectMaxOrder = 700;

/// Builds the cell's circulant and product and certifies it. Cells with
/// product order <= kConjectureDirectMaxOrder run the direct route,
/// larger ones the polynomial route with the circulant factor handled
/// through its spectral structure. For t = 0 (mod 3) also checks that
/// D(4t+6, t) has eigenvalue -3, the reason those t belong to variant
/// iii.
NutCertificate conjecture_check(const ConjectureCase& c);

}  // namespace nutforge
