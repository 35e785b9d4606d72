#include "nutforge/intpoly.hpp"

#include <doctest.h>

#include <random>

using nutforge::IntPoly;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::vector<mpz_class> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& e : c) e = coeff(rng);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("arithmetic basics") {
  const IntPoly x_plus_1{1, 1};
  const IntPoly x_minus_1{-1, 1};
  CHECK(x_plus_1 * x_minus_1 == IntPoly{-1, 0, 1});

  const IntPoly p{3, 0, -2, 7};
  CHECK(p + IntPoly{} == p);
  CHECK(p - p == IntPoly{});
  CHECK(-(-p) == p);
  CHECK(p.scaled(3) == IntPoly{9, 0, -6, 21});
  CHECK(p.times_x_power(2) == IntPoly{0, 0, 3, 0, -2, 7});
  CHECK(p.times_x_power(0) == p);

  // (x-1)^2 (x+1)^4 + 4x^3 expanded
  const IntPoly square = x_minus_1 * x_minus_1;
  const IntPoly fourth = x_plus_1 * x_plus_1 * x_plus_1 * x_plus_1;
  const IntPoly expanded = square * fourth + IntPoly::monomial(3, 4);
  CHECK(expanded == IntPoly{1, 2, -1, 0, -1, 2, 1});
}

TEST_CASE("normalization and accessors") {
  CHECK(IntPoly{0, 0, 0} == IntPoly{});
  CHECK(IntPoly{}.degree() == IntPoly::kZeroDegree);
  CHECK(IntPoly{0, 1, 0}.degree() == 1);
  const IntPoly p{0, 0, 5, 1};
  CHECK(p.trailing_exponent() == 2);
  CHECK(p.without_trailing_zeros() == IntPoly{5, 1});
  CHECK(p.coeff(7) == 0);
  CHECK(p(2) == 28);
  CHECK(IntPoly{1, -1}.at_minus_x() == IntPoly{1, 1});
  CHECK(IntPoly{-4, 0, 0, 1}.to_string() == "x^3 - 4");
  CHECK(IntPoly{0, -4, 0, 1}.to_string() == "x^3 - 4*x");
  CHECK(IntPoly{}.to_string() == "0");
}

TEST_CASE("divrem by monic divisors") {
  const IntPoly x_plus_1{1, 1};
  auto [q, r] = nutforge::divrem(IntPoly{-1, 0, 1}, x_plus_1);
  CHECK(q == IntPoly{-1, 1});
  CHECK(r.is_zero());

  auto [q2, r2] = nutforge::divrem(IntPoly::monomial(3), IntPoly::monomial(2));
  CHECK(q2 == IntPoly{0, 1});
  CHECK(r2.is_zero());

  // The degree-six polynomial above has no root of unity as a root, in
  // particular -1 is not one.
  const IntPoly caux{1, 2, -1, 0, -1, 2, 1};
  CHECK_FALSE(nutforge::divrem(caux, x_plus_1).remainder.is_zero());

  CHECK_THROWS_AS(nutforge::divrem(x_plus_1, IntPoly{}), std::invalid_argument);
  CHECK_THROWS_AS(nutforge::divrem(x_plus_1, IntPoly{1, 2}), std::invalid_argument);

  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    IntPoly a = random_poly(rng, 12);
    IntPoly b = random_poly(rng, 6);
    if (b.is_zero()) continue;
    std::vector<mpz_class> c = b.coeffs();
    c.back() = 1;
    b = IntPoly(std::move(c));
    auto [quot, rem] = nutforge::divrem(a, b);
    CHECK(quot * b + rem == a);
    CHECK(rem.degree() < b.degree());
  }
}

TEST_CASE("pseudo remainder and exact division") {
  // prem(x^2, 2x+1) = 4x^2 mod (2x+1) = 1
  CHECK(nutforge::pseudo_rem(IntPoly{0, 0, 1}, IntPoly{1, 2}) == IntPoly{1});

  const IntPoly a = IntPoly{2, 4} * IntPoly{-3, 0, 5};
  CHECK(nutforge::exact_div(a, IntPoly{2, 4}) == IntPoly{-3, 0, 5});
  CHECK(nutforge::exact_div(a, IntPoly{-3, 0, 5}) == IntPoly{2, 4});
  CHECK_THROWS_AS(nutforge::exact_div(IntPoly{1, 1}, IntPoly{1, 2}),
                  std::invalid_argument);
}

TEST_CASE("content and primitive part") {
  const IntPoly p{6, -9, 12};
  CHECK(p.content() == 3);
  CHECK(p.primitive_part() == IntPoly{2, -3, 4});
  CHECK(IntPoly{-2, 0, -4}.primitive_part() == IntPoly{1, 0, 2});
  CHECK(IntPoly{}.content() == 0);
}

TEST_CASE("gcd") {
  CHECK(nutforge::poly_gcd(IntPoly{-1, 0, 1}, IntPoly{-1, 0, 0, 1}) == IntPoly{-1, 1});
  const IntPoly p{4, -2, 6};
  CHECK(nutforge::poly_gcd(p, p) == p.primitive_part());
  CHECK(nutforge::poly_gcd(p, IntPoly{}) == p.primitive_part());
  CHECK_THROWS_AS(nutforge::poly_gcd(IntPoly{}, IntPoly{}), std::invalid_argument);

  SUBCASE("gcd divides both inputs") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 150; ++iter) {
      IntPoly a = random_poly(rng, 8);
      IntPoly b = random_poly(rng, 8);
      if (a.is_zero() && b.is_zero()) continue;
      IntPoly g = nutforge::poly_gcd(a, b);
      CHECK(g.leading() > 0);
      CHECK(g.content() == 1);
      if (!a.is_zero()) CHECK(nutforge::pseudo_rem(a, g).is_zero());
      if (!b.is_zero()) CHECK(nutforge::pseudo_rem(b, g).is_zero());
    }
  }

  SUBCASE("common factors are found") {
    std::mt19937 rng(13);
    for (int iter = 0; iter < 100; ++iter) {
      IntPoly common = random_poly(rng, 4);
      if (common.degree() < 1) continue;
      IntPoly a = common * random_poly(rng, 4);
      IntPoly b = common * random_poly(rng, 4);
      if (a.is_zero() && b.is_zero()) continue;
      IntPoly g = nutforge::poly_gcd(a, b);
      CHECK(nutforge::pseudo_rem(g, common.primitive_part()).is_zero());
    }
  }
}

TEST_CASE("gcd of a spectrum polynomial with its reflection") {
  // Characteristic polynomial of the Frucht graph, from its known
  // factorization; the only eigenvalues shared with the negated spectrum
  // are 0 and +-2.
  const IntPoly chi = IntPoly{0, 1} * IntPoly{-3, 1} * IntPoly{-2, 1} *
                      IntPoly{1, 1} * IntPoly{2, 1} * IntPoly{-1, -2, 1, 1} *
                      IntPoly{4, -5, -6, 1, 1};
  const IntPoly reflected = chi.at_minus_x();  // degree 12: already monic
  const IntPoly g = nutforge::poly_gcd(chi, reflected);
  CHECK(g == IntPoly{0, -4, 0, 1});
  CHECK(nutforge::divides(IntPoly{0, 1}, g));
  CHECK(nutforge::divides(IntPoly{-4, 0, 1}, g));
}

TEST_CASE("squarefree layers") {
  const IntPoly x_minus_1{-1, 1};
  const IntPoly x_plus_1{1, 1};
  const IntPoly p = x_minus_1 * x_minus_1 * x_plus_1;
  auto layers = nutforge::squarefree_layers(p);
  REQUIRE(layers.size() == 2);
  CHECK(layers[0] == x_minus_1 * x_plus_1);
  CHECK(layers[1] == x_minus_1);

  auto single = nutforge::squarefree_layers(IntPoly{0, 1});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == IntPoly{0, 1});
}

TEST_CASE("derivative") {
  CHECK(IntPoly{5, 3, 0, 2}.derivative() == IntPoly{3, 0, 6});
  CHECK(IntPoly{7}.derivative().is_zero());
}
