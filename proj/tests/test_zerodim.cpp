#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polardeg/zerodim.hpp"

#include <random>

using namespace polardeg;

static Ring xy() { return Ring({"x", "y"}); }
static Ideal ideal(const Ring& r, std::initializer_list<const char*> gens) {
  Ideal I{r, {}};
  for (const char* g : gens) I.gens.push_back(parse_polynomial(r, g));
  return I;
}

TEST_CASE("rational roots with multiplicity deflation") {
  Ring r = xy();
  Polynomial f = parse_polynomial(r, "(2*x - 1)*(x + 3)^2*x");
  std::vector<Rational> roots = rational_roots(f, 0);
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<Rational>({Rational(-3), Rational(0), Rational(1, 2)}));
  CHECK(rational_roots(parse_polynomial(r, "x^2 + 1"), 0).empty());
}

TEST_CASE("simple rational points") {
  Ring r = xy();
  ZeroDimScheme Z = point_clusters(ideal(r, {"(x-1)*(x+2)", "y - x^2"}));
  CHECK(Z.total == 2);
  REQUIRE(Z.clusters.size() == 2);
  for (const PointCluster& c : Z.clusters) {
    REQUIRE(c.point.has_value());
    CHECK(c.multiplicity == 1);
    CHECK((*c.point)[1] == (*c.point)[0] * (*c.point)[0]);
  }
}

TEST_CASE("multiplicities at fat points") {
  Ring r = xy();
  // V(x^2(x-1), y^2(y-1), (x-1)(y-1)) = {(1,0), (0,1), (1,1)}.
  // Local hand computation: at (1,0) the ideal is <x-1, y^2> (mult 2), at
  // (0,1) it is <y-1, x^2> (mult 2), at (1,1) it is maximal (mult 1).
  ZeroDimScheme Z = point_clusters(
      ideal(r, {"x^2*(x-1)", "y^2*(y-1)", "x*y - x - y + 1"}));
  CHECK(Z.total == 5);
  REQUIRE(Z.clusters.size() == 3);
  for (const PointCluster& c : Z.clusters) {
    REQUIRE(c.point.has_value());
    int expected = (*c.point == std::vector<Rational>({1, 1})) ? 1 : 2;
    CHECK(c.multiplicity == expected);
  }
  // m-primary fat origin: <x^2, y^2> has multiplicity 4 at the origin
  ZeroDimScheme F = point_clusters(ideal(r, {"x^2", "y^2"}));
  REQUIRE(F.clusters.size() == 1);
  CHECK(F.clusters[0].multiplicity == 4);
  CHECK(F.total == 4);
}

TEST_CASE("non-rational residual cluster") {
  Ring r = xy();
  ZeroDimScheme Z = point_clusters(ideal(r, {"x^2 + 1", "y"}));
  CHECK(Z.total == 2);
  REQUIRE(Z.clusters.size() == 1);
  CHECK_FALSE(Z.clusters[0].point.has_value());
  CHECK(Z.clusters[0].degree == 2);
  CHECK(Z.clusters[0].multiplicity == 1);
}

TEST_CASE("mixed rational and non-rational points") {
  Ring r = xy();
  // x^3 - 2x = x(x^2-2): rational root 0, quadratic cluster of degree 2
  ZeroDimScheme Z = point_clusters(ideal(r, {"x^3 - 2*x", "y - 1"}));
  CHECK(Z.total == 3);
  int rational = 0, residual = 0;
  for (const PointCluster& c : Z.clusters)
    c.point ? ++rational : ++residual;
  CHECK(rational == 1);
  CHECK(residual == 1);
}

TEST_CASE("positive-dimensional input is rejected") {
  Ring r = xy();
  CHECK_THROWS_AS(point_clusters(ideal(r, {"x*y"})), PositiveDimensionalError);
}

TEST_CASE("local multiplicity agrees with the truncation oracle") {
  Ring r = xy();
  std::vector<Ideal> cases = {
      ideal(r, {"x^2", "y^3"}),                     // m-primary, mult 6
      ideal(r, {"x^2*(x-1)", "y"}),                 // 2 at origin, 1 elsewhere
      ideal(r, {"y - x^2", "y^2"}),                 // A1-type tangency, mult 2
      ideal(r, {"x^3 - y^2", "x*y"}),
  };
  std::vector<Rational> origin{0, 0};
  for (const Ideal& I : cases)
    CHECK(local_multiplicity(I, point_ideal(r, origin)) ==
          local_multiplicity_oracle(I, origin));
  CHECK(local_multiplicity(ideal(r, {"x - 1", "y"}), point_ideal(r, origin)) == 0);
  CHECK(local_multiplicity(ideal(r, {"x^2", "y^3"}), point_ideal(r, origin)) == 6);
}

TEST_CASE("partition invariant on randomized zero-dimensional ideals") {
  Ring r = xy();
  std::mt19937_64 rng(20240823);
  std::uniform_int_distribution<int> root(-3, 3), deg(1, 3), coef(-4, 4);
  auto univariate = [&](std::size_t var) {
    Polynomial f = Polynomial::constant(r, 1);
    int k = deg(rng);
    for (int i = 0; i < k; ++i) {
      Polynomial lin = Polynomial::variable(r, var) -
                       Polynomial::constant(r, root(rng));
      f = f * lin;
    }
    if (rng() % 3 == 0) {  // sometimes an irreducible quadratic factor
      Polynomial q = Polynomial::variable(r, var, 2) +
                     Polynomial::constant(r, 1 + static_cast<int>(rng() % 3));
      f = f * q;
    }
    return f;
  };
  for (int trial = 0; trial < 50; ++trial) {
    Ideal I{r, {univariate(0), univariate(1)}};
    if (rng() % 2) {  // extra generator; keeps the ideal zero-dimensional
      Polynomial extra(r);
      extra.add_term({1, 1}, coef(rng));
      extra.add_term({1, 0}, coef(rng));
      extra.add_term({0, 0}, coef(rng));
      if (!extra.is_zero()) I.gens.push_back(extra);
    }
    GroebnerBasis G = groebner_basis(I);
    if (G.is_unit()) continue;
    ZeroDimScheme Z = point_clusters(I);
    int sum = 0;
    for (const PointCluster& c : Z.clusters) sum += c.degree * c.multiplicity;
    CHECK(sum == quotient_dimension(G));
    CHECK(Z.total == quotient_dimension(G));
  }
}
