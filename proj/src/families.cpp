#include "nutforge/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace nutforge {

JumpSet::JumpSet(std::vector<int> jump_set) : jumps(std::move(jump_set)) {
  if (jumps.empty()) throw std::invalid_argument("JumpSet: empty jump set");
  std::sort(jumps.begin(), jumps.end());
  int odd = 0, even = 0;
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    if (jumps[i] < 1)
      throw std::invalid_argument("JumpSet: jump " + std::to_string(jumps[i]) +
                                  " is not positive");
    if (i > 0 && jumps[i] == jumps[i - 1])
      throw std::invalid_argument("JumpSet: repeated jump " + std::to_string(jumps[i]));
    (jumps[i] % 2 == 0 ? even : odd)++;
  }
  if (odd != even)
    throw std::invalid_argument(
        "JumpSet: need equally many odd and even jumps, got " +
        std::to_string(odd) + " odd and " + std::to_string(even) + " even");
  t = odd;
}

namespace {

/// q_pos(x) = sum_j (x^(alpha+s_j) + x^(alpha-s_j)), the cleared
/// numerator of the connection sum at alpha = max S.
IntPoly connection_numerator(const JumpSet& s) {
  const unsigned long alpha = static_cast<unsigned long>(s.alpha());
  IntPoly q;
  for (int j : s.jumps) {
    q += IntPoly::monomial(alpha + static_cast<unsigned long>(j));
    q += IntPoly::monomial(alpha - static_cast<unsigned long>(j));
  }
  return q;
}

}  // namespace

EllReport compute_ell(const Graph& g, const JumpSet& s) {
  const NutCertificate cert = is_nut(g);
  if (!cert.is_nut)
    throw std::invalid_argument("compute_ell: factor graph is not a nut graph");
  if (!cert.degree)
    throw std::invalid_argument("compute_ell: factor graph is not regular");
  if (*cert.degree >= 4 * s.t)
    throw std::invalid_argument("compute_ell: requires degree d < 4t, got d = " +
                                std::to_string(*cert.degree) +
                                ", t = " + std::to_string(s.t));
  EllReport report;
  report.alpha = s.alpha();
  const IntPoly chi = charpoly(g.adjacency());
  const IntPoly r = laurent_substitute(chi, connection_numerator(s),
                                       static_cast<unsigned long>(report.alpha));
  report.r_degree = r.degree();
  report.factor_orders = cyclotomic_factors(r);
  report.beta = report.factor_orders.max_order();
  report.ell = std::max<unsigned long>(static_cast<unsigned long>(report.alpha),
                                       report.beta) + 1;
  return report;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

LemmaBuildResult build_main_lemma(const Graph& g, const JumpSet& s, int p) {
  if (!is_prime(p))
    throw std::invalid_argument("build_main_lemma: " + std::to_string(p) +
                                " is not prime");
  const EllReport report = compute_ell(g, s);
  if (static_cast<unsigned long>(p) < report.ell)
    throw std::invalid_argument("build_main_lemma: prime " + std::to_string(p) +
                                " is below ell = " + std::to_string(report.ell));
  const Graph ring = circulant(CirculantSpec(2 * p, s.jumps));
  Graph product = cartesian_product(g, ring);
  NutCertificate cert = is_nut(product);
  return {std::move(product), std::move(cert)};
}

namespace {

std::vector<int> d_family_jumps(int n, int t) {
  std::vector<int> jumps;
  for (int j = 1; j <= t - 1; ++j) jumps.push_back(j);
  jumps.push_back((n + 2) / 4);
  jumps.push_back((n + 6) / 4);
  for (int j = n / 2 - (t - 1); j <= n / 2 - 1; ++j) jumps.push_back(j);
  return jumps;
}

void check_family_params(const char* who, int n, int t) {
  if (t < 1) throw std::invalid_argument(std::string(who) + ": t must be >= 1");
  if (n % 4 != 2)
    throw std::invalid_argument(std::string(who) + ": order " + std::to_string(n) +
                                " is not 2 (mod 4)");
  if (n < 4 * t + 6)
    throw std::invalid_argument(std::string(who) + ": order " + std::to_string(n) +
                                " is below 4t + 6 = " + std::to_string(4 * t + 6));
}

}  // namespace

CirculantSpec d_family(int n, int t) {
  check_family_params("d_family", n, t);
  return CirculantSpec(n, d_family_jumps(n, t));
}

CayleyFamilyResult cayley_family(int m, int t) {
  check_family_params("cayley_family", m, t);
  std::vector<int> jumps = d_family_jumps(m, t);
  jumps.push_back(m / 2);
  CirculantSpec spec(m, std::move(jumps));
  Graph product = cartesian_product(circulant(spec), named_graph("k2"));
  NutCertificate cert = is_nut(product);
  return {std::move(spec), std::move(product), std::move(cert)};
}

namespace {

CauxPolyReport scan_caux_poly(IntPoly p) {
  CauxPolyReport report;
  report.stripped_exponent = p.trailing_exponent();
  report.orders = cyclotomic_factors(p.without_trailing_zeros());
  return report;
}

}  // namespace

std::vector<CauxReport> caux_scan(int t_max) {
  if (t_max < 1) throw std::invalid_argument("caux_scan: t_max must be >= 1");
  std::vector<CauxReport> reports;
  reports.reserve(static_cast<std::size_t>(t_max));
  for (int t = 1; t <= t_max; ++t) {
    const unsigned long e1 = static_cast<unsigned long>(4 * t + 3);
    const unsigned long e2 = static_cast<unsigned long>(2 * t + 8);
    const unsigned long e3 = static_cast<unsigned long>(2 * t);
    IntPoly p1 = IntPoly::monomial(e1, 2) + IntPoly::monomial(e2) -
                 IntPoly::monomial(e3) - IntPoly::monomial(5, 2);
    IntPoly p2 = IntPoly::monomial(e1, 2) - IntPoly::monomial(e2) +
                 IntPoly::monomial(e3) - IntPoly::monomial(5, 2);
    CauxReport report;
    report.t = t;
    report.p1 = scan_caux_poly(std::move(p1));
    report.p2 = scan_caux_poly(std::move(p2));
    for (const auto* part : {&report.p1, &report.p2}) {
      for (unsigned long b : part->orders.orders) {
        if (b >= 3 && b % 4 != 0) report.violations.push_back(b);
      }
    }
    std::sort(report.violations.begin(), report.violations.end());
    report.violations.erase(
        std::unique(report.violations.begin(), report.violations.end()),
        report.violations.end());
    reports.push_back(std::move(report));
  }
  return reports;
}

std::string to_string(ConjectureVariant variant) {
  switch (variant) {
    case ConjectureVariant::i: return "i";
    case ConjectureVariant::ii: return "ii";
    case ConjectureVariant::iii: return "iii";
  }
  return "?";
}

ConjectureCase::ConjectureCase(ConjectureVariant v, int t_value)
    : variant(v), t(t_value) {
  if (t < 1) throw std::invalid_argument("ConjectureCase: t must be >= 1");
  if (variant == ConjectureVariant::ii && t % 3 == 0)
    throw std::invalid_argument("ConjectureCase: variant ii requires t != 0 (mod 3)");
  if (variant == ConjectureVariant::iii && t % 3 != 0)
    throw std::invalid_argument("ConjectureCase: variant iii requires t = 0 (mod 3)");
}

int ConjectureCase::circulant_order() const {
  return variant == ConjectureVariant::iii ? 4 * t + 10 : 4 * t + 6;
}

std::string ConjectureCase::factor_name() const {
  return variant == ConjectureVariant::i ? "f5" : "frucht_f3";
}

int ConjectureCase::expected_degree() const {
  return variant == ConjectureVariant::i ? 4 * t + 5 : 4 * t + 3;
}

NutCertificate conjecture_check(const ConjectureCase& c) {
  const CirculantSpec spec = d_family(c.circulant_order(), c.t);
  const Graph factor = named_graph(c.factor_name());

  if (c.t % 3 == 0) {
    // D(4t+6, t) picks up the eigenvalue -3 exactly when 3 | t, which is
    // what forces those t into variant iii.
    const IntPoly chi_smaller = circulant_charpoly(d_family(4 * c.t + 6, c.t));
    if (!divides(IntPoly{3, 1}, chi_smaller))
      throw std::logic_error(
          "conjecture_check: expected eigenvalue -3 of D(4t+6, t) for t = 0 (mod 3)");
  }

  const Graph ring = circulant(spec);
  NutCertificate cert;
  if (ring.n * factor.n <= kConjectureDirectMaxOrder) {
    cert = is_nut(cartesian_product(ring, factor));
  } else {
    const NutCertificate ring_cert = circulant_is_nut(spec);
    const NutCertificate factor_cert = is_nut(factor);
    cert = product_nut_via_charpolys(ring, ring_cert, circulant_charpoly(spec),
                                     factor, factor_cert,
                                     charpoly(factor.adjacency()));
  }
  if (cert.degree != std::optional<int>(c.expected_degree()))
    throw std::logic_error("conjecture_check: unexpected product degree");
  return cert;
}

}  // namespace nutforge
