// Groebner-basis kernel and ideal operations: Buchberger, normal form,
// elimination, intersection, colon, saturation, dimensions, gcd, squarefree.
#pragma once

#include "polardeg/poly.hpp"

#include <set>
#include <vector>

namespace polardeg {

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PositiveDimensionalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduction-step budget for one top-level groebner_basis computation.
// Overridable through the POLARDEG_STEP_BUDGET environment variable (CLI).
long long step_budget();
void set_step_budget(long long steps);

struct MonomialOrder {
  enum Kind { kGrevlex, kLex, kBlock } kind = kGrevlex;
  std::size_t block = 0;  // size of the eliminated leading block (kBlock)
  static MonomialOrder grevlex() { return {kGrevlex, 0}; }
  static MonomialOrder lex() { return {kLex, 0}; }
  static MonomialOrder block_elim(std::size_t k) { return {kBlock, k}; }
  // Returns negative / zero / positive as a < b / a == b / a > b.
  int compare(const Exponents& a, const Exponents& b) const;
};

struct Ideal {
  Ring ring;
  std::vector<Polynomial> gens;
  Ideal() = default;
  Ideal(Ring r, std::vector<Polynomial> g) : ring(std::move(r)), gens(std::move(g)) {}
};

struct GroebnerBasis {
  Ring ring;
  MonomialOrder order;
  std::vector<Polynomial> basis;   // reduced, monic
  std::vector<Exponents> leads;    // leading exponents of basis entries
  bool is_unit() const;
  bool is_zero() const { return basis.empty(); }
};

Exponents leading_exponents(const Polynomial& p, const MonomialOrder& order);
Rational leading_coefficient(const Polynomial& p, const MonomialOrder& order);

GroebnerBasis groebner_basis(const Ideal& I,
                             MonomialOrder order = MonomialOrder::grevlex());
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
bool ideal_contains(const GroebnerBasis& G, const Polynomial& f);
bool equal_ideals(const Ideal& I, const Ideal& J);

// Generators of I intersected with the subring omitting drop_vars
// (returned in the original ring; no generator mentions a dropped variable).
Ideal eliminate(const Ideal& I, const std::set<std::size_t>& drop_vars);

Ideal intersect_ideals(const Ideal& I, const Ideal& J);

// Exact division (throws if g does not divide f).
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

Ideal colon(const Ideal& I, const Polynomial& g);                 // I : g
Ideal saturate(const Ideal& I, const Polynomial& g);              // I : g^inf, colon chain
Ideal saturate_rabinowitsch(const Ideal& I, const Polynomial& g); // via 1 - u*g
Ideal colon_ideal(const Ideal& I, const Ideal& J);                // I : J
Ideal saturate_ideal(const Ideal& I, const Ideal& J);             // I : J^inf

// Affine Krull dimension of the zero set; -1 for the unit ideal.
int krull_dimension(const Ideal& I);
int krull_dimension(const GroebnerBasis& G);

// dim_Q of ring/I for zero-dimensional I (0 for the unit ideal).
int quotient_dimension(const Ideal& I);
int quotient_dimension(const GroebnerBasis& G);

Polynomial gcd_multivariate(const Polynomial& f, const Polynomial& g);
Polynomial squarefree_part(const Polynomial& f);

// Replaces generators by their squarefree parts and interreduces, iterating
// until stable; a cheap reduced structure adequate for the singular filtration.
Ideal squarefree_reduce_ideal(const Ideal& I);

}  // namespace polardeg
