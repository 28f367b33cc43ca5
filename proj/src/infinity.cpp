#include "polardeg/infinity.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace polardeg {

namespace {

// Copy a polynomial into a ring that extends its own ring on the right.
Polynomial extend_to(const Polynomial& p, const Ring& target) {
  Polynomial out(target);
  std::size_t extra = target.size() - p.ring().size();
  for (const auto& [e, c] : p.terms()) {
    Exponents e2 = e;
    e2.insert(e2.end(), extra, 0);
    out.add_term(e2, c);
  }
  return out;
}

std::vector<Rational> normalize_proj(std::vector<Rational> v) {
  for (const Rational& c : v) {
    if (c != 0) {
      Rational d = c;
      for (Rational& x : v) x /= d;
      return v;
    }
  }
  return v;
}

std::string point_key(const std::vector<Rational>& v) {
  std::string s;
  for (const Rational& c : v) {
    s += rational_to_string(c);
    s += ',';
  }
  return s;
}

std::vector<Polynomial> nonzero_partials(const Polynomial& P,
                                         std::optional<std::size_t> skip) {
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < P.ring().size(); ++j) {
    if (skip && *skip == j) continue;
    Polynomial d = P.derivative(j);
    if (!d.is_zero()) out.push_back(d.normalized());
  }
  return out;
}

// The graph-closure boundary machinery shared by detection and lambda:
// gens (in the chart ring) -> lift with P - t, homogenize the x-block by the
// hyperplane variable, saturate by it. Returns the ideal in ring_ext =
// chart + [hyperplane var, "@tau"].
Ideal lifted_closure(const AffineModel& M, const Ring& ring_ext,
                     const std::vector<Polynomial>& gens) {
  std::size_t n = M.chart.size();  // hyperplane var index n, @tau index n + 1
  std::vector<std::size_t> hom_vars(n);
  for (std::size_t j = 0; j < n; ++j) hom_vars[j] = j;
  std::vector<Polynomial> lifted;
  for (const Polynomial& g : gens)
    lifted.push_back(homogenize_in_vars(extend_to(g, ring_ext), n, hom_vars));
  Polynomial graph =
      extend_to(M.P, ring_ext) - Polynomial::variable(ring_ext, n + 1);
  lifted.push_back(homogenize_in_vars(graph, n, hom_vars));
  return saturate(Ideal{ring_ext, lifted}, Polynomial::variable(ring_ext, n));
}

// Substitute x_i = 1, mapping an ideal into ring.without(i).
Ideal chart_ideal(const Ideal& I, std::size_t i) {
  Ring target = I.ring.without(i);
  std::vector<Polynomial> images;
  std::size_t pos = 0;
  for (std::size_t j = 0; j < I.ring.size(); ++j) {
    if (j == i)
      images.push_back(Polynomial::constant(target, 1));
    else
      images.push_back(Polynomial::variable(target, pos++));
  }
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.gens) {
    Polynomial h = g.substitute(target, images);
    if (!h.is_zero()) gens.push_back(h.normalized());
  }
  Ideal out{target, gens};
  if (out.gens.empty()) out.gens.push_back(Polynomial(target));
  return out;
}

// Eliminant of @tau (last variable) from a zero-dimensional cluster ideal.
Polynomial tau_eliminant(const Ideal& cluster) {
  std::set<std::size_t> drop;
  for (std::size_t j = 0; j + 1 < cluster.ring.size(); ++j) drop.insert(j);
  Ideal E = eliminate(cluster, drop);
  for (const Polynomial& g : E.gens)
    if (!g.is_zero() && !g.is_constant()) return g;
  throw GenericityError("t-cluster has no eliminant in t");
}

}  // namespace

AffineModel affine_model(const Polynomial& f, const LinearForm& l_hat) {
  if (!f.is_homogeneous())
    throw ParseError("affine_model: f must be homogeneous");
  if (l_hat.is_zero()) throw ParseError("affine_model: zero hyperplane form");
  const Ring& ring = f.ring();
  std::size_t N = ring.size();
  if (l_hat.coeffs.size() != N)
    throw ParseError("affine_model: hyperplane form has wrong arity");
  std::size_t pivot = N;
  for (std::size_t j = N; j-- > 0;)
    if (l_hat.coeffs[j] != 0) { pivot = j; break; }

  AffineModel M;
  M.hyper_var = N - 1;
  M.A.matrix.assign(N, std::vector<Rational>(N, 0));
  for (std::size_t i = 0; i + 1 < N; ++i) {
    std::size_t src = (i == pivot) ? N - 1 : i;
    M.A.matrix[i][src] = 1;
  }
  M.A.matrix[N - 1] = l_hat.coeffs;
  M.A_inv = M.A.inverse();
  M.f_new = linear_change(f, M.A_inv);
  M.chart = ring.without(N - 1);
  M.P = dehomogenize(M.f_new, N - 1);
  if (M.P.degree() != f.degree())
    throw NonAdmissibleError(
        "the hyperplane at infinity is contained in the hypersurface");
  return M;
}

int beta_affine(const Polynomial& f, const LinearForm& l_hat,
                ZeroDimScheme* scheme) {
  AffineModel M = affine_model(f, l_hat);
  std::vector<Polynomial> partials = nonzero_partials(M.P, std::nullopt);
  if (partials.empty())
    throw NonAdmissibleError("affine part of f has identically zero gradient");
  Ideal J = saturate(Ideal{M.chart, partials}, M.P);
  GroebnerBasis G = groebner_basis(J);
  if (G.is_unit()) {
    if (scheme) *scheme = ZeroDimScheme{J, {}, 0};
    return 0;
  }
  if (krull_dimension(G) > 0)
    throw NonAdmissibleError(
        "affine singularities outside the zero fiber are not isolated");
  ZeroDimScheme Z = point_clusters(J);
  int beta = Z.total;
  if (scheme) *scheme = std::move(Z);
  return beta;
}

std::vector<TSingularity> t_singularity_candidates(const Polynomial& f,
                                                   const LinearForm& l_hat,
                                                   std::uint64_t seed) {
  AffineModel M = affine_model(f, l_hat);
  std::size_t n = M.chart.size();
  Ideal sing_p{M.chart, nonzero_partials(M.P, std::nullopt)};
  if (sing_p.gens.empty())
    throw NonAdmissibleError("affine part of f has identically zero gradient");
  Ring ring_ext = M.chart.with_appended(f.ring().name(M.hyper_var))
                      .with_appended("@tau");

  // Candidate forms: one seeded generic form plus every coordinate form.
  std::vector<std::pair<std::vector<Rational>, std::optional<std::size_t>>>
      forms;
  forms.push_back({sample_generic_form(n, seed).coeffs, std::nullopt});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> e(n, 0);
    e[i] = 1;
    forms.push_back({std::move(e), i});
  }

  std::vector<TSingularity> out;
  std::set<std::string> seen;
  for (const auto& [coeffs, coord] : forms) {
    std::vector<Polynomial> gens =
        coord ? nonzero_partials(M.P, coord) : gradient_minors(M.P, coeffs);
    if (gens.empty()) continue;
    Ideal gamma = saturate_ideal(Ideal{M.chart, gens}, sing_p);
    if (groebner_basis(gamma).is_unit()) continue;

    Ideal closure = lifted_closure(M, ring_ext, gamma.gens);
    Ideal boundary = closure;
    boundary.gens.push_back(Polynomial::variable(ring_ext, n));

    for (std::size_t i = 0; i < n; ++i) {
      Ideal B = chart_ideal(boundary, i);
      GroebnerBasis GB = groebner_basis(B);
      if (GB.is_unit()) continue;
      ZeroDimScheme Z;
      try {
        Z = point_clusters(B);
      } catch (const PositiveDimensionalError&) {
        throw NonAdmissibleError(
            "t-singularity candidate scheme at infinity is not finite");
      }
      for (const PointCluster& C : Z.clusters) {
        TSingularity cand;
        cand.detection_chart = i;
        cand.degree = C.degree;
        if (C.point) {
          // B's variables: x_j (j != i), then the hyperplane var, then @tau.
          const std::vector<Rational>& q = *C.point;
          std::vector<Rational> p_new(n, 0);
          std::size_t pos = 0;
          for (std::size_t j = 0; j < n; ++j)
            p_new[j] = (j == i) ? Rational(1) : q[pos++];
          if (q[pos] != 0) continue;  // hyperplane coordinate must vanish
          cand.t = q[pos + 1];
          cand.t_rational = true;
          cand.t_description = rational_to_string(cand.t);
          cand.p_new = normalize_proj(p_new);
          std::vector<Rational> full = cand.p_new;
          full.push_back(0);  // the hyperplane coordinate
          std::vector<Rational> orig(full.size(), 0);
          for (std::size_t r = 0; r < full.size(); ++r)
            for (std::size_t c = 0; c < full.size(); ++c)
              orig[r] += M.A_inv.matrix[r][c] * full[c];
          cand.p = normalize_proj(orig);
          std::string key = point_key(cand.p) + "|" + cand.t_description;
          if (!seen.insert(key).second) continue;
        } else {
          cand.t_rational = false;
          cand.cluster_ideal = C.ideal;
          Polynomial elim = tau_eliminant(C.ideal);
          cand.t_description = elim.to_string();
          std::ostringstream key;
          key << "cluster@" << i << ":";
          for (const Polynomial& g : C.ideal.gens) key << g.to_string() << ";";
          if (!seen.insert(key.str()).second) continue;
        }
        out.push_back(std::move(cand));
      }
    }
  }
  return out;
}

int lambda_multiplicity(const Polynomial& f, const LinearForm& l_hat,
                        const TSingularity& candidate) {
  AffineModel M = affine_model(f, l_hat);
  std::size_t n = M.chart.size();
  Ideal sing_p{M.chart, nonzero_partials(M.P, std::nullopt)};
  Ring ring_ext = M.chart.with_appended(f.ring().name(M.hyper_var))
                      .with_appended("@tau");

  std::size_t i = candidate.detection_chart;
  if (candidate.t_rational)
    for (std::size_t j = 0; j < n; ++j)
      if (candidate.p_new[j] != 0) { i = j; break; }

  // Gamma-bar for the coordinate form x_i, then the boundary chart x_i = 1.
  std::vector<Polynomial> gens = nonzero_partials(M.P, i);
  if (gens.empty()) return 0;
  Ideal gamma = saturate_ideal(Ideal{M.chart, gens}, sing_p);
  if (groebner_basis(gamma).is_unit()) return 0;
  Ideal Z = chart_ideal(lifted_closure(M, ring_ext, gamma.gens), i);
  std::size_t tau_pos = Z.ring.size() - 1;

  Ideal point_C;
  if (candidate.t_rational) {
    Z.gens.push_back(Polynomial::variable(Z.ring, tau_pos) -
                     Polynomial::constant(Z.ring, candidate.t));
    // Point: x_j = p_j / p_i (j != i), hyperplane coordinate 0, @tau = t.
    std::vector<Rational> pt;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) pt.push_back(candidate.p_new[j] / candidate.p_new[i]);
    pt.push_back(0);
    pt.push_back(candidate.t);
    point_C = point_ideal(Z.ring, pt);
  } else {
    Polynomial elim = tau_eliminant(candidate.cluster_ideal);
    if (!(elim.ring() == Z.ring))
      throw GenericityError("t-cluster chart mismatch in lambda computation");
    Z.gens.push_back(std::move(elim));
    point_C = candidate.cluster_ideal;
  }

  GroebnerBasis G = groebner_basis(Z);
  if (G.is_unit()) return 0;
  if (krull_dimension(G) > 0)
    throw GenericityError(
        "polar slice at an atypical value is positive-dimensional");
  return local_multiplicity(Z, point_C, candidate.degree);
}

BetaReport beta_total(const Polynomial& f, const LinearForm& l_hat,
                      std::uint64_t seed) {
  BetaReport R;
  R.beta_aff = beta_affine(f, l_hat, &R.affine_singularities);
  std::vector<TSingularity> cands = t_singularity_candidates(f, l_hat, seed);
  for (TSingularity& c : cands) {
    bool t_zero = c.t_rational && c.t == 0;
    if (t_zero) {
      R.informational.push_back(std::move(c));
      continue;
    }
    c.lambda = lambda_multiplicity(f, l_hat, c);
    if (c.lambda >= 1) {
      R.beta_inf += c.degree * c.lambda;
      R.t_singularities.push_back(std::move(c));
    } else {
      R.informational.push_back(std::move(c));
    }
  }
  R.beta_total = R.beta_aff + R.beta_inf;
  return R;
}

}  // namespace polardeg
