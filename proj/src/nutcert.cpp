#include "nutforge/nutcert.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace nutforge {

std::string to_string(CertRoute route) {
  switch (route) {
    case CertRoute::direct_kernel: return "direct-kernel";
    case CertRoute::circulant_cyclotomic: return "circulant-cyclotomic";
    case CertRoute::product_polynomial: return "product-polynomial";
  }
  return "?";
}

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::nullity_not_one: return "nullity_not_one";
    case FailureKind::kernel_has_zero: return "kernel_has_zero";
    case FailureKind::shared_nonzero_eigenvalue: return "shared_nonzero_eigenvalue";
  }
  return "?";
}

int max_direct_order() {
  if (const char* env = std::getenv("NUTFORGE_MAX_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v <= 1000000) return static_cast<int>(v);
  }
  return 5000;
}

namespace {

void verify_kernel_on_graph(const Graph& g, const std::vector<mpz_class>& v) {
  std::vector<mpz_class> sums(static_cast<std::size_t>(g.n), mpz_class(0));
  for (const auto& [a, b] : g.edges) {
    sums[static_cast<std::size_t>(a)] += v[static_cast<std::size_t>(b)];
    sums[static_cast<std::size_t>(b)] += v[static_cast<std::size_t>(a)];
  }
  for (const auto& s : sums) {
    if (s != 0)
      throw std::logic_error("kernel verification failed: A*v != 0");
  }
}

}  // namespace

NutCertificate is_nut(const Graph& g) {
  if (g.n > max_direct_order())
    throw std::invalid_argument(
        "is_nut: order " + std::to_string(g.n) + " exceeds the direct-route limit " +
        std::to_string(max_direct_order()) +
        " (use the polynomial route, or set NUTFORGE_MAX_ORDER)");
  NutCertificate cert;
  cert.route = CertRoute::direct_kernel;
  cert.order = g.n;
  cert.degree = g.regular_degree();
  KernelResult kernel = nullity_kernel(g.adjacency());
  cert.nullity = kernel.nullity;
  cert.kernel_vector = kernel.kernel_vector;
  if (kernel.nullity != 1) {
    cert.is_nut = false;
    cert.failure_reason = FailureReason{FailureKind::nullity_not_one, {}, {}};
  } else if (!kernel.full.value()) {
    cert.is_nut = false;
    cert.failure_reason = FailureReason{FailureKind::kernel_has_zero, {}, {}};
  } else {
    cert.is_nut = true;
  }
  return cert;
}

NutCertificate circulant_is_nut(const CirculantSpec& spec) {
  NutCertificate cert;
  cert.route = CertRoute::circulant_cyclotomic;
  cert.order = spec.n;
  cert.degree = spec.degree();
  const IntPoly conn = connection_poly(spec);
  int nullity = 0;
  for (unsigned long b : divisors(static_cast<unsigned long>(spec.n))) {
    const bool zero_at_b =
        conn.is_zero() || divides(cyclotomic(b), conn);
    if (zero_at_b) {
      cert.cyclotomic_orders.push_back(b);
      nullity += static_cast<int>(euler_phi(b));
    }
  }
  cert.nullity = nullity;
  const bool kernel_at_minus_one =
      cert.cyclotomic_orders == std::vector<unsigned long>{2};
  // Order set {1} only happens for the one-vertex graph, whose kernel is
  // the (trivially full) all-ones vector at the root of unity 1.
  const bool kernel_at_one = cert.cyclotomic_orders == std::vector<unsigned long>{1};
  if (kernel_at_minus_one || kernel_at_one) {
    cert.is_nut = true;
    std::vector<mpz_class> v(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i)
      v[static_cast<std::size_t>(i)] = (kernel_at_one || i % 2 == 0) ? 1 : -1;
    verify_kernel_on_graph(circulant(spec), v);
    cert.kernel_vector = std::move(v);
  } else {
    cert.is_nut = false;
    cert.failure_reason =
        FailureReason{FailureKind::nullity_not_one, cert.cyclotomic_orders, {}};
  }
  return cert;
}

IntPoly circulant_charpoly(const CirculantSpec& spec) {
  const IntPoly conn = connection_poly(spec);
  IntPoly result{1};
  for (unsigned long b : divisors(static_cast<unsigned long>(spec.n))) {
    const IntPoly phi_b = cyclotomic(b);
    const int m = static_cast<int>(phi_b.degree());
    // Matrix of multiplication by the connection polynomial on
    // Z[x]/(Phi_b): column j holds x^j * conn mod Phi_b.
    ExactMatrix mult(m);
    IntPoly column = divrem(conn, phi_b).remainder;
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < m; ++i)
        mult.at(i, j) = column.coeff(static_cast<std::size_t>(i));
      if (j + 1 < m) column = divrem(column.times_x_power(1), phi_b).remainder;
    }
    result = result * charpoly(mult);
  }
  return result;
}

NutCertificate product_nut_via_charpolys(const Graph& g,
                                         const NutCertificate& cert_g,
                                         const IntPoly& chi_g, const Graph& h,
                                         const NutCertificate& cert_h,
                                         const IntPoly& chi_h) {
  if (!cert_g.is_nut || !cert_h.is_nut)
    throw std::invalid_argument(
        "product_is_nut: polynomial strategy requires both factors to be "
        "certified nut graphs");
  const Graph product = cartesian_product(g, h);
  NutCertificate cert;
  cert.route = CertRoute::product_polynomial;
  cert.order = product.n;
  cert.degree = product.regular_degree();

  // Shared eigenvalue test: lambda in spec(G) with -lambda in spec(H)
  // iff lambda is a common root of chi_g(x) and chi_h(-x).
  IntPoly chi_h_neg = chi_h.at_minus_x();
  if (chi_h_neg.leading() < 0) chi_h_neg = -chi_h_neg;
  const IntPoly shared = poly_gcd(chi_g, chi_h_neg);
  const IntPoly just_x{0, 1};
  if (shared == just_x) {
    cert.is_nut = true;
    cert.nullity = 1;
    const auto& u = cert_g.kernel_vector.value();
    const auto& v = cert_h.kernel_vector.value();
    std::vector<mpz_class> w(static_cast<std::size_t>(product.n));
    for (int a = 0; a < g.n; ++a) {
      for (int b = 0; b < h.n; ++b)
        w[static_cast<std::size_t>(a) * h.n + b] =
            u[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(b)];
    }
    w = canonical_primitive(std::move(w));
    verify_kernel_on_graph(product, w);
    cert.kernel_vector = std::move(w);
  } else {
    cert.is_nut = false;
    // Exact nullity of the product: each shared irreducible factor q
    // contributes mult_g(q) * mult_h(q) * deg(q) zero eigenvalues, which
    // the squarefree layers of the two characteristic polynomials count.
    int nullity = 0;
    const std::vector<IntPoly> layers_h = squarefree_layers(chi_h_neg);
    for (const IntPoly& lg : squarefree_layers(chi_g)) {
      for (const IntPoly& lh : layers_h) {
        const IntPoly common = poly_gcd(lg, lh);
        if (common.degree() > 0) nullity += static_cast<int>(common.degree());
      }
    }
    cert.nullity = nullity;
    cert.failure_reason = FailureReason{FailureKind::shared_nonzero_eigenvalue,
                                        {},
                                        divrem(shared, just_x).quotient};
  }
  return cert;
}

NutCertificate product_is_nut(const Graph& g, const Graph& h,
                              ProductStrategy strategy) {
  if (strategy == ProductStrategy::direct) return is_nut(cartesian_product(g, h));
  const NutCertificate cert_g = is_nut(g);
  const NutCertificate cert_h = is_nut(h);
  return product_nut_via_charpolys(g, cert_g, charpoly(g.adjacency()), h, cert_h,
                                   charpoly(h.adjacency()));
}

std::optional<FeasibilityFamily> parse_feasibility_family(std::string_view name) {
  if (name == "circ") return FeasibilityFamily::circ;
  if (name == "vt") return FeasibilityFamily::vt;
  if (name == "cay") return FeasibilityFamily::cay;
  if (name.substr(0, 3) == "reg") {
    const std::string digits(name.substr(3));
    if (digits == "3") return FeasibilityFamily::reg3;
    if (digits == "4") return FeasibilityFamily::reg4;
    if (digits == "5") return FeasibilityFamily::reg5;
    if (digits == "6") return FeasibilityFamily::reg6;
    if (digits == "7") return FeasibilityFamily::reg7;
    if (digits == "8") return FeasibilityFamily::reg8;
    if (digits == "9") return FeasibilityFamily::reg9;
    if (digits == "10") return FeasibilityFamily::reg10;
    if (digits == "11") return FeasibilityFamily::reg11;
    if (digits == "12") return FeasibilityFamily::reg12;
  }
  return std::nullopt;
}

std::string to_string(FeasibilityFamily family) {
  switch (family) {
    case FeasibilityFamily::reg3: return "reg3";
    case FeasibilityFamily::reg4: return "reg4";
    case FeasibilityFamily::reg5: return "reg5";
    case FeasibilityFamily::reg6: return "reg6";
    case FeasibilityFamily::reg7: return "reg7";
    case FeasibilityFamily::reg8: return "reg8";
    case FeasibilityFamily::reg9: return "reg9";
    case FeasibilityFamily::reg10: return "reg10";
    case FeasibilityFamily::reg11: return "reg11";
    case FeasibilityFamily::reg12: return "reg12";
    case FeasibilityFamily::circ: return "circ";
    case FeasibilityFamily::vt: return "vt";
    case FeasibilityFamily::cay: return "cay";
  }
  return "?";
}

std::string to_string(Feasibility verdict) {
  switch (verdict) {
    case Feasibility::member: return "member";
    case Feasibility::non_member: return "non-member";
    case Feasibility::unknown_beyond_theorems: return "unknown-beyond-theorems";
  }
  return "?";
}

namespace {

Feasibility membership(bool in) {
  return in ? Feasibility::member : Feasibility::non_member;
}

int reg_family_degree(FeasibilityFamily family) {
  switch (family) {
    case FeasibilityFamily::reg3: return 3;
    case FeasibilityFamily::reg4: return 4;
    case FeasibilityFamily::reg5: return 5;
    case FeasibilityFamily::reg6: return 6;
    case FeasibilityFamily::reg7: return 7;
    case FeasibilityFamily::reg8: return 8;
    case FeasibilityFamily::reg9: return 9;
    case FeasibilityFamily::reg10: return 10;
    case FeasibilityFamily::reg11: return 11;
    case FeasibilityFamily::reg12: return 12;
    default: return -1;
  }
}

Feasibility feasible_regular(int d, int n) {
  const bool even = n % 2 == 0;
  switch (d) {
    case 3: return membership(n == 12 || (even && n >= 18));
    case 4: return membership(n == 8 || n == 10 || n == 12 || n >= 14);
    case 5: return membership(even && n >= 10);
    case 6: return membership(n >= 12);
    case 7: return membership(even && n >= 12);
    case 8: return membership(n == 12 || n >= 14);
    case 9: return membership(even && n >= 16);
    case 10: return membership(n >= 15);
    case 11: return membership(even && n >= 16);
    case 12: return membership(n >= 16);
    default: throw std::invalid_argument("feasible: regular family requires d in 3..12");
  }
}

Feasibility feasible_circulant(int d, int n) {
  if (d % 4 != 0) return Feasibility::non_member;
  const bool even = n % 2 == 0;
  if (d % 8 == 4) return membership(even && n >= d + 4);
  if (d == 8) return membership(n == 14 || (even && n >= 18));
  return membership(even && n >= d + 6);  // d = 0 (mod 8), d >= 16
}

Feasibility feasible_vt_cay(int d, int n) {
  if (d % 2 == 1) return Feasibility::non_member;
  if (d == 2) return Feasibility::non_member;  // cycles have nullity 0 or 2
  if (d % 4 == 0) return membership(n % 2 == 0 && n >= d + 4);
  // d = 2 (mod 4): necessary conditions, then the explicit Cayley family
  // covering n = 2d + 8, 2d + 16, ...
  if (n % 4 != 0 || n < d + 6) return Feasibility::non_member;
  if (n % 8 == 4 && n >= 2 * d + 8) return Feasibility::member;
  return Feasibility::unknown_beyond_theorems;
}

}  // namespace

Feasibility feasible(const FeasibilityQuery& query) {
  if (query.d < 1 || query.n < 1)
    throw std::invalid_argument("feasible: d and n must be positive");
  const int reg_d = reg_family_degree(query.family);
  if (reg_d > 0) {
    if (query.d != reg_d)
      throw std::invalid_argument("feasible: family " + to_string(query.family) +
                                  " requires d = " + std::to_string(reg_d));
    return feasible_regular(query.d, query.n);
  }
  if (query.family == FeasibilityFamily::circ)
    return feasible_circulant(query.d, query.n);
  return feasible_vt_cay(query.d, query.n);
}

}  // namespace nutforge
