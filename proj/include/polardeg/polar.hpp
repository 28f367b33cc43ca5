// Polar loci, the cone test, the polar degree and the singular polar degree.
#pragma once

#include "polardeg/zerodim.hpp"

namespace polardeg {

struct PolarLocus {
  Ideal ideal;     // saturate(<2x2 minors of [grad f; coeffs l]>, f)
  int dimension;   // affine (cone) dimension; -1 when empty
};

struct ConeTestResult {
  bool is_cone = false;
  // Basis of the projective apex space: vectors p with sum p_i df/dx_i == 0.
  std::vector<std::vector<Rational>> apex_space;
};

// 2x2 minors of [grad g; a] (a the coefficient row).
std::vector<Polynomial> gradient_minors(const Polynomial& g,
                                        const std::vector<Rational>& a);

PolarLocus polar_ideal(const Polynomial& f, const LinearForm& l_hat);

ConeTestResult cone_apex_set(const Polynomial& f);

// Degree of the polar cone: 0 when empty, else the quotient dimension of the
// slice by a generic hyperplane {l_slice = 1}.
int polar_cone_degree(const PolarLocus& locus, std::uint64_t seed);

// pol(V) via seeded generic forms, certified by 3-seed agreement
// (resampled up to 5 times; GenericityError on persistent disagreement).
int pol_degree(const Polynomial& f, std::uint64_t seed, int trials = 3);

// mult_0 of the polar cone for a fixed l_hat; requires dimension <= 1.
int singular_polar_degree(const Polynomial& f, const LinearForm& l_hat);

struct NonAdmissibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polardeg
