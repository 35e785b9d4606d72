#include "nutforge/nutcert.hpp"

#include "nutforge/families.hpp"
#include "nutforge/serialize.hpp"

#include <doctest.h>

#include <random>
#include <set>

using nutforge::CertRoute;
using nutforge::CirculantSpec;
using nutforge::FailureKind;
using nutforge::Graph;
using nutforge::IntPoly;
using nutforge::NutCertificate;
using nutforge::ProductStrategy;

TEST_CASE("direct certification") {
  SUBCASE("4-cycle fails with nullity 2") {
    const NutCertificate cert =
        nutforge::is_nut(nutforge::circulant(CirculantSpec(4, {1})));
    CHECK_FALSE(cert.is_nut);
    CHECK(cert.nullity == 2);
    CHECK(cert.degree == 2);
    REQUIRE(cert.failure_reason.has_value());
    CHECK(cert.failure_reason->kind == FailureKind::nullity_not_one);
  }

  SUBCASE("the Frucht graph is a cubic nut graph") {
    const NutCertificate cert = nutforge::is_nut(nutforge::named_graph("frucht_f3"));
    CHECK(cert.is_nut);
    CHECK(cert.order == 12);
    CHECK(cert.degree == 3);
    CHECK(cert.nullity == 1);
    CHECK(cert.route == CertRoute::direct_kernel);
    REQUIRE(cert.kernel_vector.has_value());
    CHECK(*cert.kernel_vector ==
          std::vector<mpz_class>{2, -1, -1, -1, -1, -1, 2, -1, 2, 2, -1, -1});
  }

  SUBCASE("product of Circ(10,{3,4}) with f5") {
    const Graph product = nutforge::cartesian_product(
        nutforge::circulant(CirculantSpec(10, {3, 4})), nutforge::named_graph("f5"));
    const NutCertificate cert = nutforge::is_nut(product);
    CHECK(cert.is_nut);
    CHECK(cert.order == 100);
    CHECK(cert.degree == 9);
  }

  SUBCASE("size guard") {
    CHECK(nutforge::max_direct_order() == 5000);
    CHECK_THROWS_AS(nutforge::is_nut(Graph(5001, {})), std::invalid_argument);
  }
}

TEST_CASE("circulant certification") {
  SUBCASE("Circ(10, {3,4})") {
    const NutCertificate cert = nutforge::circulant_is_nut(CirculantSpec(10, {3, 4}));
    CHECK(cert.is_nut);
    CHECK(cert.route == CertRoute::circulant_cyclotomic);
    CHECK(cert.nullity == 1);
    CHECK(cert.cyclotomic_orders == std::vector<unsigned long>{2});
    REQUIRE(cert.kernel_vector.has_value());
    CHECK(cert.kernel_vector->front() == 1);
    CHECK(cert.kernel_vector->back() == -1);
  }

  SUBCASE("4-cycle: the connection polynomial vanishes at order 4") {
    const NutCertificate cert = nutforge::circulant_is_nut(CirculantSpec(4, {1}));
    CHECK_FALSE(cert.is_nut);
    CHECK(cert.cyclotomic_orders == std::vector<unsigned long>{4});
    CHECK(cert.nullity == 2);
    REQUIRE(cert.failure_reason.has_value());
    CHECK(cert.failure_reason->witness_orders == std::vector<unsigned long>{4});
  }

  SUBCASE("Circ(38, S) from the product example is itself a nut") {
    const CirculantSpec spec(38, {1, 2, 3, 6, 7, 10});
    const NutCertificate cert = nutforge::circulant_is_nut(spec);
    CHECK(cert.is_nut);
    CHECK(cert.cyclotomic_orders == std::vector<unsigned long>{2});
    // Cross-check against brute-force elimination: the nullity must be
    // the totient sum over the detected orders.
    const NutCertificate direct = nutforge::is_nut(nutforge::circulant(spec));
    CHECK(direct.is_nut == cert.is_nut);
    CHECK(direct.nullity == cert.nullity);
  }

  SUBCASE("odd order never has the alternating eigenvector") {
    const NutCertificate cert = nutforge::circulant_is_nut(CirculantSpec(9, {1, 3}));
    CHECK_FALSE(cert.is_nut);
    CHECK(cert.nullity == nutforge::is_nut(
        nutforge::circulant(CirculantSpec(9, {1, 3}))).nullity);
  }
}

TEST_CASE("one-vertex circulant is the trivial nut graph on both routes") {
  const NutCertificate fast = nutforge::circulant_is_nut(CirculantSpec(1, {}));
  CHECK(fast.is_nut);
  CHECK(fast.kernel_vector == std::vector<mpz_class>{1});
  CHECK(nutforge::is_nut(nutforge::circulant(CirculantSpec(1, {}))).is_nut);
  // Empty jump sets on larger orders leave the whole space in the kernel.
  const NutCertificate empty5 = nutforge::circulant_is_nut(CirculantSpec(5, {}));
  CHECK_FALSE(empty5.is_nut);
  CHECK(empty5.nullity == 5);
}

TEST_CASE("route equivalence on random circulants") {
  std::mt19937 rng(67);
  for (int iter = 0; iter < 120; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 60);
    std::set<int> jumps;
    const int count = static_cast<int>(rng() % 5);
    for (int k = 0; k < count && n >= 2; ++k)
      jumps.insert(1 + static_cast<int>(rng() % (n / 2)));
    const CirculantSpec spec(n, std::vector<int>(jumps.begin(), jumps.end()));
    const NutCertificate fast = nutforge::circulant_is_nut(spec);
    const NutCertificate direct = nutforge::is_nut(nutforge::circulant(spec));
    CHECK(fast.is_nut == direct.is_nut);
    CHECK(fast.nullity == direct.nullity);
    if (fast.is_nut) CHECK(fast.kernel_vector == direct.kernel_vector);
  }
}

TEST_CASE("circulant charpoly matches the dense computation") {
  const std::vector<CirculantSpec> specs = {
      CirculantSpec(10, {3, 4}),     CirculantSpec(12, {1, 2, 6}),
      CirculantSpec(9, {1, 3}),      CirculantSpec(8, {4}),
      CirculantSpec(14, {1, 4, 5, 6}), CirculantSpec(38, {1, 2, 3, 6, 7, 10}),
      CirculantSpec(1, {}),          CirculantSpec(6, {1, 2, 3})};
  for (const auto& spec : specs) {
    CHECK(nutforge::circulant_charpoly(spec) ==
          nutforge::charpoly(nutforge::circulant(spec).adjacency()));
  }
}

TEST_CASE("product certification") {
  const Graph f3 = nutforge::named_graph("frucht_f3");
  const Graph f5 = nutforge::named_graph("f5");
  const Graph g10 = nutforge::named_graph("g10_example");

  SUBCASE("frucht x frucht shares the eigenvalue pair +-2") {
    const NutCertificate cert = nutforge::product_is_nut(f3, f3, ProductStrategy::polynomial);
    CHECK_FALSE(cert.is_nut);
    CHECK(cert.route == CertRoute::product_polynomial);
    REQUIRE(cert.failure_reason.has_value());
    CHECK(cert.failure_reason->kind == FailureKind::shared_nonzero_eigenvalue);
    REQUIRE(cert.failure_reason->witness_factor.has_value());
    CHECK(*cert.failure_reason->witness_factor == IntPoly{-4, 0, 1});
    const NutCertificate direct = nutforge::product_is_nut(f3, f3, ProductStrategy::direct);
    CHECK_FALSE(direct.is_nut);
    CHECK(direct.nullity == cert.nullity);
    CHECK(cert.nullity == 3);
  }

  SUBCASE("D(10,1) x f5 is a 9-regular nut graph both ways") {
    const Graph d10 = nutforge::circulant(CirculantSpec(10, {3, 4}));
    const NutCertificate poly = nutforge::product_is_nut(d10, f5, ProductStrategy::polynomial);
    const NutCertificate direct = nutforge::product_is_nut(d10, f5, ProductStrategy::direct);
    CHECK(poly.is_nut);
    CHECK(direct.is_nut);
    CHECK(poly.degree == 9);
    CHECK(poly.order == 100);
    REQUIRE(poly.kernel_vector.has_value());
    CHECK(poly.kernel_vector == direct.kernel_vector);
  }

  SUBCASE("g10 x Circ(38, S): the worked example product") {
    const Graph ring = nutforge::circulant(CirculantSpec(38, {1, 2, 3, 6, 7, 10}));
    const NutCertificate poly = nutforge::product_is_nut(g10, ring, ProductStrategy::polynomial);
    CHECK(poly.is_nut);
    CHECK(poly.order == 380);
    CHECK(poly.degree == 17);
  }

  SUBCASE("polynomial strategy rejects non-nut factors") {
    const Graph c4 = nutforge::circulant(CirculantSpec(4, {1}));
    CHECK_THROWS_AS(nutforge::product_is_nut(c4, f5, ProductStrategy::polynomial),
                    std::invalid_argument);
  }
}

TEST_CASE("route equivalence over the fixture pairs") {
  std::vector<Graph> fixtures = {
      nutforge::named_graph("frucht_f3"), nutforge::named_graph("f5"),
      nutforge::named_graph("g10_example"),
      nutforge::circulant(nutforge::d_family(10, 1)),
      nutforge::circulant(nutforge::d_family(14, 2))};
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    for (std::size_t j = i; j < fixtures.size(); ++j) {
      const NutCertificate direct =
          nutforge::product_is_nut(fixtures[i], fixtures[j], ProductStrategy::direct);
      const NutCertificate poly =
          nutforge::product_is_nut(fixtures[i], fixtures[j], ProductStrategy::polynomial);
      CHECK(direct.is_nut == poly.is_nut);
      CHECK(direct.nullity == poly.nullity);
      if (direct.is_nut) CHECK(direct.kernel_vector == poly.kernel_vector);
    }
  }
}

TEST_CASE("certified kernels are full and exact") {
  // Verified again here, independently of the library's own check.
  std::vector<NutCertificate> certs = {
      nutforge::is_nut(nutforge::named_graph("frucht_f3")),
      nutforge::circulant_is_nut(CirculantSpec(10, {3, 4})),
      nutforge::product_is_nut(nutforge::named_graph("g10_example"),
                               nutforge::named_graph("f5"),
                               ProductStrategy::polynomial)};
  std::vector<Graph> graphs = {
      nutforge::named_graph("frucht_f3"),
      nutforge::circulant(CirculantSpec(10, {3, 4})),
      nutforge::cartesian_product(nutforge::named_graph("g10_example"),
                                  nutforge::named_graph("f5"))};
  for (std::size_t k = 0; k < certs.size(); ++k) {
    REQUIRE(certs[k].is_nut);
    const auto& v = *certs[k].kernel_vector;
    for (const auto& e : v) CHECK(abs(e) >= 1);
    const nutforge::ExactMatrix a = graphs[k].adjacency();
    for (int i = 0; i < a.n; ++i) {
      mpz_class dot = 0;
      for (int j = 0; j < a.n; ++j) dot += a.at(i, j) * v[static_cast<std::size_t>(j)];
      CHECK(dot == 0);
    }
    mpz_class g = 0;
    for (const auto& e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    CHECK(g == 1);
  }
}

TEST_CASE("bipartite graphs never certify as non-trivial nuts") {
  std::mt19937 rng(71);
  for (int iter = 0; iter < 40; ++iter) {
    const int left = 1 + static_cast<int>(rng() % 5);
    const int right = 1 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < left; ++u)
      for (int v = 0; v < right; ++v)
        if (rng() % 2 == 0) edges.emplace_back(u, left + v);
    const Graph g(left + right, std::move(edges));
    REQUIRE(g.is_bipartite());
    CHECK_FALSE(nutforge::is_nut(g).is_nut);
  }
}

TEST_CASE("feasibility spot checks") {
  using nutforge::Feasibility;
  using nutforge::FeasibilityFamily;
  using nutforge::FeasibilityQuery;
  using nutforge::feasible;

  CHECK(feasible({FeasibilityFamily::circ, 8, 14}) == Feasibility::member);
  CHECK(feasible({FeasibilityFamily::circ, 8, 16}) == Feasibility::non_member);
  CHECK(feasible({FeasibilityFamily::circ, 8, 18}) == Feasibility::member);
  CHECK(feasible({FeasibilityFamily::vt, 4, 7}) == Feasibility::non_member);
  CHECK(feasible({FeasibilityFamily::reg3, 3, 12}) == Feasibility::member);
  CHECK(feasible({FeasibilityFamily::reg3, 3, 14}) == Feasibility::non_member);
  CHECK(feasible({FeasibilityFamily::vt, 6, 12}) == Feasibility::unknown_beyond_theorems);
  CHECK(feasible({FeasibilityFamily::cay, 10, 24}) == Feasibility::unknown_beyond_theorems);
  CHECK(feasible({FeasibilityFamily::cay, 10, 28}) == Feasibility::member);
  CHECK_THROWS_AS(feasible({FeasibilityFamily::reg3, 4, 12}), std::invalid_argument);
  CHECK_THROWS_AS(feasible({FeasibilityFamily::circ, 4, 0}), std::invalid_argument);
  CHECK(nutforge::parse_feasibility_family("reg10") == FeasibilityFamily::reg10);
  CHECK_FALSE(nutforge::parse_feasibility_family("reg13").has_value());
}

TEST_CASE("circulant members obey the degree and parity shape") {
  using nutforge::Feasibility;
  using nutforge::FeasibilityFamily;
  for (int d = 1; d <= 20; ++d) {
    for (int n = 1; n <= 40; ++n) {
      if (nutforge::feasible({FeasibilityFamily::circ, d, n}) == Feasibility::member) {
        CHECK(d % 4 == 0);
        CHECK(n % 2 == 0);
      }
    }
  }
}

TEST_CASE("certificate JSON schema") {
  const NutCertificate cert = nutforge::is_nut(nutforge::named_graph("frucht_f3"));
  const nlohmann::json j = nutforge::certificate_json(cert);
  const std::vector<std::string> keys = {"is_nut",        "order", "degree",
                                         "nullity",       "kernel_vector",
                                         "route",         "failure_reason"};
  CHECK(j.size() == keys.size());
  for (const auto& k : keys) CHECK(j.contains(k));
  CHECK(j["is_nut"] == true);
  CHECK(j["degree"] == 3);
  CHECK(j["kernel_vector"][0] == "2");
  CHECK(j["kernel_vector"][1] == "-1");
  CHECK(j["route"] == "direct-kernel");
  CHECK(j["failure_reason"].is_null());

  // Irregular graphs carry a sentinel degree.
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const nlohmann::json js = nutforge::certificate_json(nutforge::is_nut(star));
  CHECK(js["degree"] == "irregular");
  CHECK(js["is_nut"] == false);
  CHECK(js["nullity"] == 2);
  CHECK(js["failure_reason"]["kind"] == "nullity_not_one");
}
