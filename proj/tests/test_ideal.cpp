#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polardeg/groebner.hpp"

using namespace polardeg;

static Ring xyz() { return Ring({"x", "y", "z"}); }
static Ideal ideal(const Ring& r, std::initializer_list<const char*> gens) {
  Ideal I{r, {}};
  for (const char* g : gens) I.gens.push_back(parse_polynomial(r, g));
  return I;
}

// Post-hoc Buchberger certificate: every S-polynomial reduces to zero.
static bool spoly_check(const GroebnerBasis& G) {
  for (std::size_t i = 0; i < G.basis.size(); ++i)
    for (std::size_t j = i + 1; j < G.basis.size(); ++j) {
      Exponents li = G.leads[i], lj = G.leads[j], lcm = li;
      for (std::size_t k = 0; k < lcm.size(); ++k)
        lcm[k] = std::max(li[k], lj[k]);
      Polynomial mi(G.ring), mj(G.ring);
      Exponents ei = lcm, ej = lcm;
      for (std::size_t k = 0; k < lcm.size(); ++k) {
        ei[k] -= li[k];
        ej[k] -= lj[k];
      }
      mi.add_term(ei, 1);
      mj.add_term(ej, 1);
      if (!normal_form(mi * G.basis[i] - mj * G.basis[j], G).is_zero())
        return false;
    }
  return true;
}

TEST_CASE("monomial orders") {
  MonomialOrder gr = MonomialOrder::grevlex();
  // grevlex in 3 vars: x^2 > x*y > y^2 > x*z > y*z > z^2 (hand-checked)
  CHECK(gr.compare({2, 0, 0}, {1, 1, 0}) > 0);
  CHECK(gr.compare({0, 2, 0}, {1, 0, 1}) > 0);
  CHECK(gr.compare({0, 1, 1}, {0, 0, 2}) > 0);
  CHECK(gr.compare({1, 0, 0}, {1, 0, 0}) == 0);
  MonomialOrder lx = MonomialOrder::lex();
  CHECK(lx.compare({1, 0, 0}, {0, 5, 5}) > 0);
  // block order: the first block dominates regardless of total degree
  MonomialOrder bl = MonomialOrder::block_elim(1);
  CHECK(bl.compare({1, 0, 0}, {0, 9, 9}) > 0);
}

TEST_CASE("groebner basis of the twisted cubic") {
  Ring r = xyz();
  GroebnerBasis G = groebner_basis(ideal(r, {"y - x^2", "z - x^3"}));
  CHECK(spoly_check(G));
  CHECK(ideal_contains(G, parse_polynomial(r, "z - x*y")));
  CHECK(ideal_contains(G, parse_polynomial(r, "y^3 - z^2")));
  CHECK_FALSE(ideal_contains(G, parse_polynomial(r, "x")));
  // reduced GB is canonical: independent of generator order
  GroebnerBasis G2 = groebner_basis(ideal(r, {"z - x^3", "y - x^2"}));
  REQUIRE(G.basis.size() == G2.basis.size());
  for (std::size_t i = 0; i < G.basis.size(); ++i)
    CHECK(G.basis[i] == G2.basis[i]);
}

TEST_CASE("normal form is idempotent and linear") {
  Ring r = xyz();
  GroebnerBasis G = groebner_basis(ideal(r, {"x^2 - y", "y^2 - z"}));
  Polynomial f = parse_polynomial(r, "x^5 + x^2*y^2 - 3*z");
  Polynomial n1 = normal_form(f, G);
  CHECK(normal_form(n1, G) == n1);
  Polynomial g = parse_polynomial(r, "x*y - z^2");
  CHECK(normal_form(f + g, G) == normal_form(f, G) + normal_form(g, G));
  CHECK(ideal_contains(G, f - n1));
}

TEST_CASE("unit ideal detection") {
  Ring r = xyz();
  GroebnerBasis G = groebner_basis(ideal(r, {"x", "x + 1"}));
  CHECK(G.is_unit());
  CHECK(quotient_dimension(G) == 0);
  CHECK(krull_dimension(G) == -1);
}

TEST_CASE("elimination") {
  Ring r = xyz();
  Ideal E = eliminate(ideal(r, {"y - x^2", "z - x^3"}), {0});
  // the projection to the (y,z)-plane is the cuspidal curve y^3 = z^2
  CHECK(equal_ideals(E, ideal(r, {"y^3 - z^2"})));
}

TEST_CASE("intersection, colon, saturation") {
  Ring r = xyz();
  CHECK(equal_ideals(intersect_ideals(ideal(r, {"x"}), ideal(r, {"y"})),
                     ideal(r, {"x*y"})));
  CHECK(equal_ideals(colon(ideal(r, {"x*y"}), parse_polynomial(r, "x")),
                     ideal(r, {"y"})));
  CHECK(equal_ideals(saturate(ideal(r, {"x^3*y"}), parse_polynomial(r, "x")),
                     ideal(r, {"y"})));
  // saturation by an ideal removes the whole component at once
  CHECK(equal_ideals(saturate_ideal(ideal(r, {"x*y", "x*z"}), ideal(r, {"x"})),
                     ideal(r, {"y", "z"})));
  // embedded point: (x) meet (x^2, y) saturated by the origin gives (x)
  CHECK(equal_ideals(
      saturate_ideal(ideal(r, {"x^2", "x*y"}), ideal(r, {"x", "y"})),
      ideal(r, {"x"})));
  CHECK(equal_ideals(saturate_rabinowitsch(ideal(r, {"x^3*y"}),
                                           parse_polynomial(r, "x")),
                     ideal(r, {"y"})));
}

TEST_CASE("exact division") {
  Ring r = xyz();
  Polynomial f = parse_polynomial(r, "(x + y)*(x^2 - z)");
  CHECK(divide_exact(f, parse_polynomial(r, "x + y")) ==
        parse_polynomial(r, "x^2 - z"));
  CHECK_THROWS(divide_exact(f, parse_polynomial(r, "x + z")));
}

TEST_CASE("krull dimension") {
  Ring r = xyz();
  CHECK(krull_dimension(ideal(r, {"x*y", "x*z"})) == 2);  // plane union line
  CHECK(krull_dimension(ideal(r, {"x", "y"})) == 1);
  CHECK(krull_dimension(ideal(r, {"x", "y", "z"})) == 0);
  CHECK(krull_dimension(Ideal{r, {Polynomial(r)}}) == 3);  // zero ideal
}

TEST_CASE("quotient dimension") {
  Ring r = xyz();
  CHECK(quotient_dimension(ideal(r, {"x^2", "y^3", "z"})) == 6);
  // staircase with a non-monomial basis: leads x^2, x*y, y^3 -> {1,x,y,y^2}
  CHECK(quotient_dimension(ideal(r, {"x^2 + y^2", "x*y", "z"})) == 4);
  CHECK_THROWS_AS(quotient_dimension(ideal(r, {"x", "y"})),
                  PositiveDimensionalError);
}

TEST_CASE("gcd and squarefree part") {
  Ring r = xyz();
  CHECK(gcd_multivariate(parse_polynomial(r, "(x+y)*x"),
                         parse_polynomial(r, "(x+y)*y"))
            .normalized() == parse_polynomial(r, "x+y"));
  CHECK(squarefree_part(parse_polynomial(r, "x^2*y^3")).normalized() ==
        parse_polynomial(r, "x*y"));
  Polynomial f = parse_polynomial(r, "(x^2+y^2)^2*(x - z)");
  CHECK(squarefree_part(f).normalized() ==
        parse_polynomial(r, "(x^2+y^2)*(x-z)").normalized());
  // squarefree reduction of an ideal
  Ideal red = squarefree_reduce_ideal(ideal(r, {"x^2", "y^2*z^2"}));
  GroebnerBasis G = groebner_basis(red);
  CHECK(ideal_contains(G, parse_polynomial(r, "x")));
  CHECK(ideal_contains(G, parse_polynomial(r, "y*z")));
}

TEST_CASE("step budget aborts long computations") {
  long long saved = step_budget();
  set_step_budget(5);
  Ring r = xyz();
  CHECK_THROWS_AS(
      groebner_basis(ideal(r, {"x^3*y - z^2 + 1", "y^4 - x*z", "z^3 - x*y^2"})),
      ResourceError);
  set_step_budget(saved);
}

TEST_CASE("S-polynomial certificate on assorted bases") {
  Ring r = xyz();
  for (auto gens : {ideal(r, {"x^2*y + x*z^2", "x^2", "y^2 - z^2"}),
                    ideal(r, {"x^3 - y", "y^3 - z", "x*z - y^2"}),
                    ideal(r, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"})})
    CHECK(spoly_check(groebner_basis(gens)));
}
