#include "polardeg/polar.hpp"

#include <algorithm>

namespace polardeg {

std::vector<Polynomial> gradient_minors(const Polynomial& g,
                                        const std::vector<Rational>& a) {
  const Ring& ring = g.ring();
  std::size_t n = ring.size();
  std::vector<Polynomial> grad;
  for (std::size_t i = 0; i < n; ++i) grad.push_back(g.derivative(i));
  std::vector<Polynomial> minors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Polynomial m = grad[i] * a[j] - grad[j] * a[i];
      if (!m.is_zero()) minors.push_back(m.normalized());
    }
  return minors;
}

PolarLocus polar_ideal(const Polynomial& f, const LinearForm& l_hat) {
  if (!f.is_homogeneous()) throw ParseError("polar_ideal: f must be homogeneous");
  if (l_hat.is_zero()) throw ParseError("polar_ideal: zero hyperplane form");
  Ideal minors{f.ring(), gradient_minors(f, l_hat.coeffs)};
  if (minors.gens.empty()) minors.gens.push_back(Polynomial(f.ring()));
  Ideal sat = saturate(minors, f);
  PolarLocus locus;
  locus.ideal = sat;
  locus.dimension = krull_dimension(sat);
  return locus;
}

ConeTestResult cone_apex_set(const Polynomial& f) {
  const Ring& ring = f.ring();
  std::size_t n = ring.size();
  // Row i of the linear system is the coefficient vector of df/dx_i; we solve
  // for p with sum_i p_i df/dx_i == 0 by exact Gaussian elimination on the
  // matrix whose columns are indexed by the monomials appearing in any partial.
  std::vector<Polynomial> grad;
  std::map<Exponents, std::size_t> cols;
  for (std::size_t i = 0; i < n; ++i) {
    grad.push_back(f.derivative(i));
    for (const auto& [e, c] : grad.back().terms())
      cols.emplace(e, cols.size());
  }
  std::size_t m = cols.size();
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [e, c] : grad[i].terms()) A[i][cols[e]] = c;
  // Row-reduce A (kernel of p -> p^T A).
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  std::vector<std::vector<Rational>> R = A;
  std::vector<std::vector<Rational>> ops(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) ops[i][i] = 1;
  for (std::size_t col = 0; col < m && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && R[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(R[piv], R[rank]);
    std::swap(ops[piv], ops[rank]);
    Rational d = R[rank][col];
    for (std::size_t j = 0; j < m; ++j) R[rank][j] /= d;
    for (std::size_t j = 0; j < n; ++j) ops[rank][j] /= d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || R[r][col] == 0) continue;
      Rational mfac = R[r][col];
      for (std::size_t j = 0; j < m; ++j) R[r][j] -= mfac * R[rank][j];
      for (std::size_t j = 0; j < n; ++j) ops[r][j] -= mfac * ops[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  ConeTestResult out;
  for (std::size_t r = rank; r < n; ++r) {
    bool zero_row = true;
    for (std::size_t j = 0; j < m; ++j)
      if (R[r][j] != 0) zero_row = false;
    if (zero_row) out.apex_space.push_back(ops[r]);
  }
  out.is_cone = !out.apex_space.empty();
  return out;
}

int polar_cone_degree(const PolarLocus& locus, std::uint64_t seed) {
  if (locus.dimension < 0) return 0;
  const Ring& ring = locus.ideal.ring;
  for (std::uint64_t attempt = 0; attempt < 8; ++attempt) {
    LinearForm slice = sample_generic_form(ring.size(), seed * 1000003 + attempt);
    Ideal J{ring, locus.ideal.gens};
    J.gens.push_back(slice.to_polynomial(ring) - Polynomial::constant(ring, 1));
    GroebnerBasis G = groebner_basis(J);
    if (krull_dimension(G) > 0) continue;  // slice not transverse; resample
    return quotient_dimension(G);
  }
  throw GenericityError("polar slice remained positive-dimensional after resampling");
}

int pol_degree(const Polynomial& f, std::uint64_t seed, int trials) {
  if (trials < 1) trials = 1;
  std::size_t n = f.ring().size();
  for (int round = 0; round < 5; ++round) {
    std::vector<int> vals;
    for (int s = 0; s < trials; ++s) {
      std::uint64_t sub_seed = seed + static_cast<std::uint64_t>(round) * 7919 +
                               static_cast<std::uint64_t>(s) * 104729 + 1;
      LinearForm l = sample_generic_form(n, sub_seed);
      PolarLocus locus = polar_ideal(f, l);
      if (locus.dimension > 1) { vals.clear(); break; }  // degenerate sample
      vals.push_back(polar_cone_degree(locus, sub_seed));
    }
    if (vals.size() == static_cast<std::size_t>(trials) &&
        std::all_of(vals.begin(), vals.end(),
                    [&](int v) { return v == vals[0]; }))
      return vals[0];
  }
  throw GenericityError("pol_degree: no 3-seed agreement after 5 resamples");
}

int singular_polar_degree(const Polynomial& f, const LinearForm& l_hat) {
  PolarLocus locus = polar_ideal(f, l_hat);
  if (locus.dimension > 1)
    throw NonAdmissibleError("polar locus has dimension " +
                             std::to_string(locus.dimension));
  if (locus.dimension < 0) return 0;
  return polar_cone_degree(locus, 20240817);
}

}  // namespace polardeg
