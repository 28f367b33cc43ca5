// Acceptance suite: one criterion per invocation (argv[1] = 1..7), printing a
// single "criterion N: PASS/FAIL" line. Failures list every violated
// sub-assertion.
#include "polardeg/report.hpp"

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace polardeg;

namespace {

struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

InputSpec spec_of(const std::string& text, const char* h = nullptr) {
  InputSpec s = parse_input(text);
  if (h) s.hyperplane = parse_linear_form(s.ring, h);
  return s;
}

bool spoly_check(const GroebnerBasis& G) {
  for (std::size_t i = 0; i < G.basis.size(); ++i)
    for (std::size_t j = i + 1; j < G.basis.size(); ++j) {
      Exponents lcm = G.leads[i];
      for (std::size_t k = 0; k < lcm.size(); ++k)
        lcm[k] = std::max(G.leads[i][k], G.leads[j][k]);
      Polynomial mi(G.ring), mj(G.ring);
      Exponents ei = lcm, ej = lcm;
      for (std::size_t k = 0; k < lcm.size(); ++k) {
        ei[k] -= G.leads[i][k];
        ej[k] -= G.leads[j][k];
      }
      mi.add_term(ei, 1);
      mj.add_term(ej, 1);
      if (!normal_form(mi * G.basis[i] - mj * G.basis[j], G).is_zero())
        return false;
    }
  return true;
}

struct CorpusEntry {
  std::string name;
  std::string text;
  const char* hyperplane;  // an admissible one, when used
  int pol;
};

std::vector<CorpusEntry> corpus() {
  return {
      {"nodal-cubic", "vars: x y z\nf: x*(x*y+z^2)\n", "z", 1},
      {"cubic-sing-at-inf", "vars: x y z\nf: x*(x*y+z^2)-z^3\n", "z", 2},
      {"cubic-surface-a", "vars: x y z w\nf: x^2*z+x*y*w+y^3\n", "w", 1},
      {"cubic-surface-b", "vars: x y z w\nf: x^2*z+y^2*w\n", "w-x-y", 2},
      {"vanishing-hessian",
       "vars: z0 z1 z2 z3 z4\nf: z3^2*z0+z3*z4*z1+z4^2*z2\n",
       "z0+5z1-3z3+7z4", 0},
      {"fermat-cubic", "vars: x y z\nf: x^3+y^3+z^3\n", "z", 4},
      {"smooth-quadric", "vars: x y z\nf: x^2+y^2+z^2\n", "z", 1},
  };
}

// ---- criteria ----

void criterion1(Checker& c) {
  DecompositionReport r = decompose(spec_of("vars: x y z\nf: x*(x*y+z^2)\n", "z"));
  c.expect(r.admissible_ok, "hyperplane z admissible");
  c.expect(r.alpha == 1, "alpha == 1");
  c.expect(r.alpha_points.size() == 1 &&
               r.alpha_points[0].first == std::vector<Rational>({0, 1, 0}) &&
               r.alpha_points[0].second == 1,
           "alpha = 1 concentrated at [0;1;0]");
  c.expect(r.beta.beta_aff == 0, "beta_aff == 0");
  c.expect(r.beta.beta_inf == 0, "beta_inf == 0");
  c.expect(r.beta.t_singularities.empty(), "no counted t-singularity");
  bool t0 = r.beta.informational.size() == 1 &&
            r.beta.informational[0].t_rational &&
            r.beta.informational[0].t == 0;
  c.expect(t0, "the sole t-singularity candidate sits at t = 0 and is excluded");
  c.expect(r.pol == 1, "pol == 1");
  c.expect(r.identity_ok, "identity 1 = 1 + 0");
}

void criterion2(Checker& c) {
  DecompositionReport r =
      decompose(spec_of("vars: x y z\nf: x*(x*y+z^2)-z^3\n", "z"));
  c.expect(r.pol == 2, "pol == 2");
  c.expect(r.beta.t_singularities.size() == 1, "exactly one t-singularity");
  if (r.beta.t_singularities.size() == 1) {
    const TSingularity& s = r.beta.t_singularities[0];
    c.expect(s.p == std::vector<Rational>({0, 1, 0}),
             "t-singularity at [0;1;0]");
    c.expect(s.t_rational && s.t == 1,
             "t == 1 (computed t = " + s.t_description +
                 "; the affine part x^2*y + x - 1 has its atypical fiber at "
                 "-1, see README: known discrepancies)");
    c.expect(s.lambda == 1, "lambda == 1");
  }
  c.expect(r.alpha == 1 && r.beta.beta_total == 1 && r.identity_ok,
           "decomposition 2 = 1 + 1");
}

void criterion3(Checker& c) {
  InputSpec s = spec_of("vars: x y z w\nf: x^2*z+x*y*w+y^3\n", "w");
  DecompositionReport r = decompose(s);
  c.expect(r.admissible_ok, "hyperplane w admissible");
  c.expect(r.special.special.size() == 1 &&
               r.special.special[0] == std::vector<Rational>({0, 0, 1, 0}),
           "special points == {[0;0;1;0]}");
  bool a1 = false;
  for (std::size_t i = 0; i < r.special.candidates.size(); ++i)
    if (r.special.candidates[i] == std::vector<Rational>({0, 0, 1, 0}))
      a1 = r.special.alpha[i] == 1;
  c.expect(a1, "alpha_p(V) == 1 at the special point");
  c.expect(r.pol == 1 && r.alpha == 1 && r.beta.beta_total == 0 && r.identity_ok,
           "decomposition 1 = 1 + 0");
  c.expect(!r.cone.is_cone, "cone verdict false");
}

void criterion4(Checker& c) {
  const std::string text = "vars: x y z w\nf: x^2*z+y^2*w\n";
  InputSpec s = spec_of(text, "w-x-y");
  c.expect(pol_degree(s.f, 42) == 2, "pol == 2");
  SpecialPointReport sp = special_points(s.f, 42);
  bool both = sp.special.size() == 2;
  for (const auto& p : sp.special)
    both = both && (p == std::vector<Rational>({0, 0, 1, 0}) ||
                    p == std::vector<Rational>({0, 0, 0, 1}));
  c.expect(both, "special points == {[0;0;1;0],[0;0;0;1]}");
  for (std::size_t i = 0; i < sp.candidates.size(); ++i)
    c.expect(sp.alpha[i] == 1, "alpha == 1 at each special point");

  AdmissibilityVerdict bad = check_admissible(s.f, parse_linear_form(s.ring, "w"));
  c.expect(bad.verdict == Admissibility::kFailsStar, "w rejected with fails(*)");
  c.expect(!bad.nt.finite && bad.nt.evidence_dimension == 1 &&
               !bad.nt.evidence_generators.empty(),
           "1-dimensional non-transversality locus in evidence");

  DecompositionReport r = decompose(s);
  c.expect(r.admissible_ok, "w-x-y admissible");
  c.expect(r.beta.t_singularities.size() == 1, "exactly one t-singularity");
  if (r.beta.t_singularities.size() == 1) {
    const TSingularity& t = r.beta.t_singularities[0];
    c.expect(t.p == std::vector<Rational>({0, 0, 1, 0}),
             "t-singularity at [0;0;1;0]");
    c.expect(t.t_rational && t.t == Rational(4, 27), "t == 4/27");
    c.expect(t.lambda == 1, "lambda == 1");
  }
  c.expect(r.pol == 2 && r.alpha == 1 && r.beta.beta_total == 1 && r.identity_ok,
           "decomposition 2 = 1 + 1");
}

void criterion5(Checker& c) {
  InputSpec s =
      spec_of("vars: z0 z1 z2 z3 z4\nf: z3^2*z0+z3*z4*z1+z4^2*z2\n");
  c.expect(pol_degree(s.f, 42) == 0, "pol == 0");
  c.expect(!cone_apex_set(s.f).is_cone, "cone verdict false");
  c.expect(special_points(s.f, 42).special.empty(), "no special points");
  // sampled hyperplanes through p = [0;0;1;0;0]
  std::vector<Rational> p{0, 0, 1, 0, 0};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    LinearForm l = sample_generic_form(5, seed, &p);
    AdmissibilityVerdict v = check_admissible(s.f, l);
    std::ostringstream what;
    what << "sampled hyperplane (seed " << seed
         << ") through [0;0;1;0;0] fails(ii) with polar dimension 2 "
            "(computed verdict: "
         << (v.verdict == Admissibility::kAdmissible    ? "admissible"
             : v.verdict == Admissibility::kFailsStar ? "fails(*)"
                                                      : "fails(ii)")
         << ", polar dimension " << v.polar_dimension
         << "; see README: known discrepancies)";
    c.expect(v.verdict == Admissibility::kFailsII && v.polar_dimension == 2,
             what.str());
  }
}

void criterion6(Checker& c) {
  DecompositionReport r = decompose(spec_of("vars: x y z\nf: x^3+y^3+z^3\n", "z"));
  c.expect(r.pol == 4, "pol == 4 == (d-1)^n");
  c.expect(r.alpha == 0, "alpha == 0");
  c.expect(r.beta.beta_aff == 4, "beta_aff == 4");
  c.expect(r.beta.beta_inf == 0, "beta_inf == 0");
  c.expect(r.identity_ok, "identity 4 = 0 + 4");
  InputSpec q = spec_of("vars: x y z\nf: x^2+y^2+z^2\n");
  c.expect(pol_degree(q.f, 42) == 1, "smooth quadric pol == 1");
}

void criterion7(Checker& c) {
  // (a) seed stability of pol
  for (const CorpusEntry& e : corpus()) {
    InputSpec s = spec_of(e.text);
    for (std::uint64_t seed : {11ull, 22ull, 33ull})
      c.expect(pol_degree(s.f, seed) == e.pol,
               e.name + ": pol stable across seeds");
  }
  // (b) pol invariance under random invertible coordinate changes
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (const CorpusEntry& e : corpus()) {
    InputSpec s = spec_of(e.text);
    std::size_t n = s.ring.size();
    for (int rep = 0; rep < 3; ++rep) {
      CoordinateChange M;
      for (;;) {
        M.matrix.assign(n, std::vector<Rational>(n));
        for (auto& row : M.matrix)
          for (auto& v : row) v = entry(rng);
        try {
          M.inverse();
          break;
        } catch (...) {
        }
      }
      c.expect(pol_degree(linear_change(s.f, M), 42) == e.pol,
               e.name + ": pol invariant under a coordinate change");
    }
  }
  // (c) bound suite
  for (const CorpusEntry& e : corpus()) {
    InputSpec s = spec_of(e.text);
    std::size_t n = s.ring.size() - 1;
    int bound = 1;
    for (std::size_t i = 0; i < n; ++i) bound *= s.f.degree() - 1;
    c.expect(e.pol <= bound, e.name + ": pol <= (d-1)^n");
    SpecialPointReport sp = special_points(s.f, 42);
    int max_alpha = 0;
    for (int a : sp.alpha) max_alpha = std::max(max_alpha, a);
    if (!cone_apex_set(s.f).is_cone)
      c.expect(e.pol >= max_alpha, e.name + ": pol >= max alpha_p (non-cone)");
    Filtration filt = singular_filtration(s.f);
    bool isolated = filt.layers.empty() || filt.affine_dims[0] <= 1;
    if (isolated)
      c.expect(e.pol >= max_alpha,
               e.name + ": pol >= max alpha_p (isolated singularities)");
  }
  // (d) zero-dimensional partition invariant on randomized ideals
  {
    Ring r({"x", "y"});
    std::uniform_int_distribution<int> root(-3, 3), deg(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
      Ideal I{r, {}};
      for (std::size_t var = 0; var < 2; ++var) {
        Polynomial f = Polynomial::constant(r, 1);
        int k = deg(rng);
        for (int i = 0; i < k; ++i)
          f = f * (Polynomial::variable(r, var) -
                   Polynomial::constant(r, root(rng)));
        if (rng() % 3 == 0)
          f = f * (Polynomial::variable(r, var, 2) +
                   Polynomial::constant(r, 1 + static_cast<int>(rng() % 3)));
        I.gens.push_back(f);
      }
      GroebnerBasis G = groebner_basis(I);
      if (G.is_unit()) continue;
      ZeroDimScheme Z = point_clusters(I);
      int sum = 0;
      for (const PointCluster& cl : Z.clusters) sum += cl.degree * cl.multiplicity;
      c.expect(sum == quotient_dimension(G),
               "partition invariant on a randomized zero-dimensional ideal");
    }
  }
  // (e) S-polynomial certificate on bases the reference runs produce
  for (const CorpusEntry& e : corpus()) {
    InputSpec s = spec_of(e.text);
    LinearForm l = parse_linear_form(s.ring, e.hyperplane);
    PolarLocus locus = polar_ideal(s.f, l);
    c.expect(spoly_check(groebner_basis(locus.ideal)),
             e.name + ": polar-ideal basis passes the S-polynomial check");
    Ideal jac{s.ring, {s.f}};
    for (std::size_t i = 0; i < s.ring.size(); ++i)
      jac.gens.push_back(s.f.derivative(i));
    c.expect(spoly_check(groebner_basis(jac)),
             e.name + ": singular-scheme basis passes the S-polynomial check");
  }
  // (f) lambda chart-independence via hyperplane-fixing coordinate changes
  {
    InputSpec s = spec_of("vars: x y z\nf: x*(x*y+z^2)-z^3\n", "z");
    CoordinateChange M{{{1, 2, 0}, {0, 1, 0}, {0, 0, 1}}};
    Polynomial g = linear_change(s.f, M);
    auto cands = t_singularity_candidates(g, *s.hyperplane, 42);
    bool ok = cands.size() == 1 && cands[0].t_rational && cands[0].t == -1 &&
              lambda_multiplicity(g, *s.hyperplane, cands[0]) == 1;
    c.expect(ok, "lambda is chart-independent for the plane-curve t-singularity");

    InputSpec s4 = spec_of("vars: x y z w\nf: x^2*z+y^2*w\n", "w-x-y");
    CoordinateChange S{
        {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    Polynomial h = linear_change(s4.f, S);
    bool found = false;
    for (const auto& cand : t_singularity_candidates(h, *s4.hyperplane, 42))
      if (cand.t_rational && !(cand.t == 0) &&
          cand.t == Rational(4, 27) &&
          lambda_multiplicity(h, *s4.hyperplane, cand) == 1)
        found = true;
    c.expect(found, "lambda is chart-independent for the surface t-singularity");
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <criterion 1..7>\n";
    return 64;
  }
  int n = std::atoi(argv[1]);
  Checker c;
  try {
    switch (n) {
      case 1: criterion1(c); break;
      case 2: criterion2(c); break;
      case 3: criterion3(c); break;
      case 4: criterion4(c); break;
      case 5: criterion5(c); break;
      case 6: criterion6(c); break;
      case 7: criterion7(c); break;
      default:
        std::cerr << "unknown criterion " << n << "\n";
        return 64;
    }
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("unexpected exception: ") + e.what());
  }
  if (c.failures.empty()) {
    std::cout << "criterion " << n << ": PASS\n";
    return 0;
  }
  std::cout << "criterion " << n << ": FAIL";
  for (const std::string& f : c.failures) std::cout << "\n  - " << f;
  std::cout << "\n";
  return 1;
}
