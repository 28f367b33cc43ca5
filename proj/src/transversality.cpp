#include "polardeg/transversality.hpp"

#include <algorithm>
#include <set>

namespace polardeg {

namespace {

// Determinant of a square polynomial matrix by cofactor expansion.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, const Ring& ring) {
  std::size_t k = m.size();
  if (k == 0) return Polynomial::constant(ring, 1);
  if (k == 1) return m[0][0];
  Polynomial acc(ring);
  for (std::size_t j = 0; j < k; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial cof = m[0][j] * poly_det(minor, ring);
    acc = (j % 2 == 0) ? acc + cof : acc - cof;
  }
  return acc;
}

void subsets_rec(std::size_t n, std::size_t k, std::size_t start,
                 std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) { out.push_back(cur); return; }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  if (k <= n) subsets_rec(n, k, 0, cur, out);
  return out;
}

// All k x k minors of a polynomial matrix.
std::vector<Polynomial> matrix_minors(const std::vector<std::vector<Polynomial>>& m,
                                      std::size_t k, const Ring& ring) {
  std::vector<Polynomial> out;
  if (m.empty()) return out;
  auto rows = subsets(m.size(), k);
  auto cols = subsets(m[0].size(), k);
  for (const auto& rs : rows)
    for (const auto& cs : cols) {
      std::vector<std::vector<Polynomial>> sub;
      for (std::size_t r : rs) {
        std::vector<Polynomial> row;
        for (std::size_t c : cs) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      Polynomial d = poly_det(sub, ring);
      if (!d.is_zero()) out.push_back(d.normalized());
    }
  return out;
}

std::vector<std::vector<Polynomial>> jacobian(const std::vector<Polynomial>& gens,
                                              const Ring& ring) {
  std::vector<std::vector<Polynomial>> J;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (std::size_t i = 0; i < ring.size(); ++i) row.push_back(g.derivative(i));
    J.push_back(std::move(row));
  }
  return J;
}

std::vector<std::vector<Polynomial>> hessian(const Polynomial& f) {
  const Ring& ring = f.ring();
  std::vector<std::vector<Polynomial>> H;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    std::vector<Polynomial> row;
    Polynomial di = f.derivative(i);
    for (std::size_t j = 0; j < ring.size(); ++j) row.push_back(di.derivative(j));
    H.push_back(std::move(row));
  }
  return H;
}

// Generic rank of the Hessian of f along V(L): the largest k such that some
// k-minor of Hess(f) is nonzero modulo L.
std::size_t hessian_generic_rank(const Polynomial& f, const GroebnerBasis& L) {
  auto H = hessian(f);
  const Ring& ring = f.ring();
  for (std::size_t k = ring.size(); k >= 1; --k) {
    for (const auto& m : matrix_minors(H, k, ring))
      if (!normal_form(m, L).is_zero()) return k;
  }
  return 0;
}

std::vector<Rational> normalize_projective(std::vector<Rational> p) {
  for (const auto& c : p) {
    if (c != 0) {
      Rational inv = 1 / c;
      for (auto& x : p) x *= inv;
      return p;
    }
  }
  return p;
}

}  // namespace

std::vector<std::vector<Rational>> projective_points(const Ideal& I, bool* nonrational) {
  const Ring& ring = I.ring;
  std::set<std::vector<Rational>> points;
  if (nonrational) *nonrational = false;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    // Chart x_i = 1.
    Ring chart = ring.without(i);
    std::vector<Polynomial> images;
    for (std::size_t j = 0, k = 0; j < ring.size(); ++j) {
      if (j == i) images.push_back(Polynomial::constant(chart, 1));
      else images.push_back(Polynomial::variable(chart, k++));
    }
    Ideal C{chart, {}};
    for (const auto& g : I.gens) C.gens.push_back(g.substitute(chart, images));
    GroebnerBasis G = groebner_basis(C);
    if (G.is_unit()) continue;
    if (krull_dimension(G) > 0)
      throw PositiveDimensionalError("projective_points: chart scheme has positive dimension");
    ZeroDimScheme scheme = point_clusters(C);
    for (const auto& cl : scheme.clusters) {
      if (!cl.point) {
        if (nonrational) *nonrational = true;
        continue;
      }
      std::vector<Rational> p;
      for (std::size_t j = 0, k = 0; j < ring.size(); ++j) {
        if (j == i) p.push_back(1);
        else p.push_back((*cl.point)[k++]);
      }
      points.insert(normalize_projective(std::move(p)));
    }
  }
  return {points.begin(), points.end()};
}

Filtration singular_filtration(const Polynomial& f) {
  const Ring& ring = f.ring();
  std::size_t n = ring.size();
  Filtration filt;

  Ideal raw{ring, {f}};
  for (std::size_t i = 0; i < n; ++i) raw.gens.push_back(f.derivative(i));
  Ideal L = squarefree_reduce_ideal(raw);

  for (;;) {
    GroebnerBasis G = groebner_basis(L);
    int dim = krull_dimension(G);
    if (dim < 1) break;  // empty (or the irrelevant origin only)
    filt.layers.push_back(L);
    filt.affine_dims.push_back(dim);
    if (dim == 1) break;  // finitely many lines: projective points, last layer

    // Next layer: singular locus of the reduced layer plus the locus where the
    // transversal type of V degenerates (Hessian rank drop along the layer).
    std::size_t c = n - static_cast<std::size_t>(dim);
    Ideal next{ring, G.basis};
    auto J = jacobian(G.basis, ring);
    for (const auto& m : matrix_minors(J, c + 1, ring)) next.gens.push_back(m);
    std::size_t r = hessian_generic_rank(f, G);
    if (r >= 1)
      for (const auto& m : matrix_minors(hessian(f), r, ring)) next.gens.push_back(m);
    Ideal reduced = squarefree_reduce_ideal(next);
    if (equal_ideals(reduced, L)) break;  // no progress
    L = reduced;
  }

  // Candidates: 0-dimensional layers plus isolated singular points of
  // positive-dimensional layers.
  std::set<std::vector<Rational>> cand;
  for (std::size_t k = 0; k < filt.layers.size(); ++k) {
    if (filt.affine_dims[k] == 1) {
      bool nr = false;
      for (auto& p : projective_points(filt.layers[k], &nr)) cand.insert(p);
      filt.has_nonrational_candidates |= nr;
    } else {
      GroebnerBasis G = groebner_basis(filt.layers[k]);
      std::size_t c = n - static_cast<std::size_t>(filt.affine_dims[k]);
      Ideal sing{ring, G.basis};
      auto J = jacobian(G.basis, ring);
      for (const auto& m : matrix_minors(J, c + 1, ring)) sing.gens.push_back(m);
      Ideal reduced = squarefree_reduce_ideal(sing);
      GroebnerBasis S = groebner_basis(reduced);
      if (!S.is_unit() && krull_dimension(S) == 1) {
        bool nr = false;
        for (auto& p : projective_points(reduced, &nr)) cand.insert(p);
        filt.has_nonrational_candidates |= nr;
      }
    }
  }
  filt.candidates.assign(cand.begin(), cand.end());
  return filt;
}

NonTransversalityReport non_transversality_points(const Polynomial& f,
                                                  const LinearForm& l_hat) {
  return non_transversality_points(f, l_hat, singular_filtration(f));
}

NonTransversalityReport non_transversality_points(const Polynomial& f,
                                                  const LinearForm& l_hat,
                                                  const Filtration& filt) {
  const Ring& ring = f.ring();
  std::size_t n = ring.size();
  Polynomial lp = l_hat.to_polynomial(ring);
  if (lp.is_zero()) throw ParseError("zero hyperplane form");

  NonTransversalityReport report;
  report.hyperplane = l_hat;

  std::vector<Ideal> loci;

  // Smooth stratum: tangency of H to V \ F1.
  {
    Ideal N{ring, {f, lp}};
    for (const auto& m : gradient_minors(f, l_hat.coeffs)) N.gens.push_back(m);
    if (!filt.layers.empty()) N = saturate_ideal(N, filt.layers.front());
    loci.push_back(std::move(N));
  }

  // Layer strata: l_hat in the row space of the layer Jacobian on S and H.
  for (std::size_t k = 0; k < filt.layers.size(); ++k) {
    GroebnerBasis G = groebner_basis(filt.layers[k]);
    std::size_t c = n - static_cast<std::size_t>(filt.affine_dims[k]);
    Ideal N{ring, G.basis};
    N.gens.push_back(lp);
    std::vector<std::vector<Polynomial>> M = jacobian(G.basis, ring);
    std::vector<Polynomial> arow;
    for (std::size_t j = 0; j < n; ++j)
      arow.push_back(Polynomial::constant(ring, l_hat.coeffs[j]));
    M.push_back(std::move(arow));
    for (const auto& m : matrix_minors(M, c + 1, ring)) N.gens.push_back(m);
    if (k + 1 < filt.layers.size()) N = saturate_ideal(N, filt.layers[k + 1]);
    loci.push_back(std::move(N));
  }

  std::set<std::vector<Rational>> pts;
  for (const auto& N : loci) {
    GroebnerBasis G = groebner_basis(N);
    int dim = krull_dimension(G);
    if (dim > 1) {
      report.finite = false;
      report.evidence_dimension = dim - 1;  // projective dimension of the locus
      for (const auto& g : G.basis)
        report.evidence_generators.push_back(g.to_string());
      return report;
    }
    if (dim < 1) continue;
    bool nr = false;
    for (auto& p : projective_points(N, &nr)) pts.insert(p);
    report.has_nonrational_points |= nr;
  }
  report.points.assign(pts.begin(), pts.end());
  return report;
}

AdmissibilityVerdict check_admissible(const Polynomial& f, const LinearForm& l_hat) {
  AdmissibilityVerdict v;
  v.nt = non_transversality_points(f, l_hat);
  PolarLocus locus = polar_ideal(f, l_hat);
  v.polar_dimension = locus.dimension;
  if (!v.nt.finite) v.verdict = Admissibility::kFailsStar;
  else if (locus.dimension > 1) v.verdict = Admissibility::kFailsII;
  else v.verdict = Admissibility::kAdmissible;
  return v;
}

int alpha_at_point(const Polynomial& f, const std::vector<Rational>& p,
                   const LinearForm& l_hat) {
  const Ring& ring = f.ring();
  std::size_t n = ring.size();
  if (p.size() != n) throw ParseError("alpha_at_point: point arity mismatch");
  // l_hat must vanish at p and p must lie on V.
  Rational lv = 0;
  for (std::size_t i = 0; i < n; ++i) lv += l_hat.coeffs[i] * p[i];
  if (lv != 0) throw ParseError("alpha_at_point: hyperplane does not pass through p");
  if (f.evaluate(p) != 0) throw ParseError("alpha_at_point: point not on V");

  std::size_t chart = n;
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] != 0) { chart = i; break; }
  if (chart == n) throw ParseError("alpha_at_point: zero point");

  // Chart x_chart = 1 with p translated to the origin.
  Ring cring = ring.without(chart);
  std::vector<Polynomial> images;
  for (std::size_t j = 0, k = 0; j < ring.size(); ++j) {
    if (j == chart) {
      images.push_back(Polynomial::constant(cring, 1));
    } else {
      Rational q = p[j] / p[chart];
      images.push_back(Polynomial::variable(cring, k) + Polynomial::constant(cring, q));
      ++k;
    }
  }
  Polynomial fp = f.substitute(cring, images);
  // Chart form of l_hat: constant part vanishes because l_hat(p) = 0.
  std::vector<Rational> a;
  for (std::size_t j = 0; j < n; ++j)
    if (j != chart) a.push_back(l_hat.coeffs[j]);
  LinearForm lc{a};
  Polynomial lpoly = lc.to_polynomial(cring);
  if (lpoly.is_zero())
    throw ParseError("alpha_at_point: hyperplane degenerates in the chart");

  Ideal minors{cring, gradient_minors(fp, a)};
  if (minors.gens.empty()) minors.gens.push_back(Polynomial(cring));
  Ideal gamma = saturate(minors, fp);
  Ideal Z{cring, gamma.gens};
  Z.gens.push_back(lpoly);
  GroebnerBasis G = groebner_basis(Z);
  if (G.is_unit()) return 0;
  if (krull_dimension(G) > 0)
    throw NonAdmissibleError("alpha_at_point: positive-dimensional intersection");
  std::vector<Rational> origin(cring.size(), 0);
  return local_multiplicity(Z, point_ideal(cring, origin), 1);
}

int alpha_generic(const Polynomial& f, const std::vector<Rational>& p,
                  std::uint64_t seed) {
  std::size_t n = f.ring().size();
  for (int round = 0; round < 5; ++round) {
    std::vector<int> vals;
    for (int s = 0; s < 3; ++s) {
      std::uint64_t sub_seed = seed + static_cast<std::uint64_t>(round) * 7919 +
                               static_cast<std::uint64_t>(s) * 104729 + 11;
      LinearForm l = sample_generic_form(n, sub_seed, &p);
      try {
        vals.push_back(alpha_at_point(f, p, l));
      } catch (const NonAdmissibleError&) {
        vals.clear();
        break;  // degenerate sample; resample
      }
    }
    if (vals.size() == 3 && vals[0] == vals[1] && vals[1] == vals[2])
      return vals[0];
  }
  throw GenericityError("alpha_generic: no 3-seed agreement after 5 resamples");
}

SpecialPointReport special_points(const Polynomial& f, std::uint64_t seed) {
  Filtration filt = singular_filtration(f);
  SpecialPointReport report;
  report.candidates = filt.candidates;
  for (const auto& p : filt.candidates) {
    int a = alpha_generic(f, p, seed);
    report.alpha.push_back(a);
    if (a > 0) report.special.push_back(p);
  }
  return report;
}

}  // namespace polardeg
