#include "polardeg/zerodim.hpp"

#include <algorithm>
#include <set>

namespace polardeg {

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  std::vector<std::pair<mpz_class, int>> factors;
  mpz_class d = 2;
  while (d * d <= n && d < 1000000) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) { n /= d; ++e; }
      factors.push_back({d, e});
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) factors.push_back({n, 1});  // prime or unfactored cofactor
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    std::vector<mpz_class> next;
    mpz_class pw = 1;
    for (int k = 0; k <= e; ++k) {
      for (const auto& q : divs) next.push_back(q * pw);
      pw *= p;
    }
    divs = next;
    if (divs.size() > 100000) break;  // cap; missing divisors only skip candidates
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

// Dense univariate coefficients of f in variable var (f must involve only var).
std::vector<Rational> univariate_coeffs(const Polynomial& f, std::size_t var) {
  std::vector<Rational> c(static_cast<std::size_t>(f.degree_in(var)) + 1, 0);
  for (const auto& [e, k] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0)
        throw ParseError("univariate_coeffs: polynomial not univariate");
    c[static_cast<std::size_t>(e[var])] = k;
  }
  return c;
}

Rational eval_univariate(const std::vector<Rational>& c, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// Deflate c by the root r (exact synthetic division).
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
  std::vector<Rational> q(c.size() - 1, 0);
  Rational carry = 0;
  for (std::size_t i = c.size(); i-- > 1;) {
    carry = c[i] + carry * r;
    q[i - 1] = carry;
    carry = q[i - 1];
  }
  return q;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& f, std::size_t var) {
  std::vector<Rational> roots;
  if (f.is_zero() || f.is_constant()) return roots;
  std::vector<Rational> c = univariate_coeffs(squarefree_part(f), var);
  // Strip the root 0.
  while (c.size() > 1 && c[0] == 0) {
    roots.push_back(0);
    c.erase(c.begin());
    break;  // squarefree: at most one zero root
  }
  if (c.size() <= 1) return roots;
  // Integer-normalize.
  mpz_class den_lcm = 1;
  for (const auto& k : c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), k.get_den().get_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& k : c) ic.push_back(mpz_class(k * Rational(den_lcm)));
  auto p_divs = divisors_of(ic.front());
  auto q_divs = divisors_of(ic.back());
  std::set<Rational> candidates;
  for (const auto& p : p_divs)
    for (const auto& q : q_divs) {
      Rational r(p, q);
      r.canonicalize();
      candidates.insert(r);
      candidates.insert(-r);
    }
  for (const auto& r : candidates) {
    if (c.size() <= 1) break;
    if (eval_univariate(c, r) == 0) {
      roots.push_back(r);
      c = deflate(c, r);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Ideal point_ideal(const Ring& ring, const std::vector<Rational>& p) {
  Ideal m{ring, {}};
  for (std::size_t i = 0; i < ring.size(); ++i)
    m.gens.push_back(Polynomial::variable(ring, i) -
                     Polynomial::constant(ring, p[i]));
  return m;
}

int local_multiplicity(const Ideal& I, const Ideal& cluster_ideal, int degree) {
  Ideal S = saturate_ideal(I, cluster_ideal);
  if (equal_ideals(S, I)) return 0;  // cluster not on the scheme
  Ideal primary = colon_ideal(I, S);
  int total = quotient_dimension(primary);
  if (degree <= 0 || total % degree != 0)
    throw ParseError("local_multiplicity: cluster degree does not divide the local length");
  return total / degree;
}

int local_multiplicity_oracle(const Ideal& I, const std::vector<Rational>& p) {
  const Ring& ring = I.ring;
  Ideal m = point_ideal(ring, p);
  int prev = -1;
  for (int k = 1; k < 64; ++k) {
    // I + m^k
    Ideal Mk{ring, {}};
    std::vector<Polynomial> power = m.gens;
    for (int j = 1; j < k; ++j) {
      std::vector<Polynomial> next;
      for (const auto& a : power)
        for (const auto& b : m.gens) next.push_back(a * b);
      power = next;
    }
    Ideal J{ring, I.gens};
    for (const auto& g : power) J.gens.push_back(g);
    int q = quotient_dimension(J);
    if (q == prev) return q;
    prev = q;
  }
  throw ParseError("local multiplicity oracle did not stabilize");
}

ZeroDimScheme point_clusters(const Ideal& I) {
  GroebnerBasis G = groebner_basis(I);
  int dim = krull_dimension(G);
  if (dim > 0)
    throw PositiveDimensionalError("point_clusters: ideal has dimension " +
                                   std::to_string(dim));
  ZeroDimScheme scheme;
  scheme.ideal = I;
  scheme.total = 0;
  if (G.is_unit()) return scheme;  // empty scheme
  int total = quotient_dimension(G);
  scheme.total = total;
  const Ring& ring = I.ring;
  std::size_t n = ring.size();

  // Per-variable rational root lists from the univariate eliminants.
  std::vector<std::vector<Rational>> roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::size_t> drop;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) drop.insert(j);
    Ideal uni = eliminate(I, drop);
    if (uni.gens.empty())
      throw ParseError("point_clusters: missing eliminant for a variable");
    GroebnerBasis U = groebner_basis(uni);
    roots[i] = rational_roots(U.basis.front(), i);
  }

  // Verified rational points: candidate grid filtered by exact evaluation.
  std::vector<std::vector<Rational>> points;
  std::vector<Rational> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      for (const auto& g : I.gens)
        if (g.evaluate(cur) != 0) return;
      points.push_back(cur);
      return;
    }
    for (const auto& r : roots[i]) { cur[i] = r; self(self, i + 1); }
  };
  rec(rec, 0);
  std::sort(points.begin(), points.end());

  int accounted = 0;
  for (const auto& p : points) {
    PointCluster c;
    c.ideal = point_ideal(ring, p);
    c.point = p;
    c.degree = 1;
    c.multiplicity = local_multiplicity(I, c.ideal, 1);
    accounted += c.multiplicity;
    scheme.clusters.push_back(std::move(c));
  }

  if (accounted < total) {
    // Non-rational residual: keep as one stated cluster preserving the
    // partition invariant (degree x multiplicity accounts for the rest).
    Ideal R = I;
    for (const auto& p : points) R = saturate_ideal(R, point_ideal(ring, p));
    PointCluster c;
    c.ideal = R;
    c.degree = total - accounted;
    c.multiplicity = 1;
    scheme.clusters.push_back(std::move(c));
  }
  return scheme;
}

}  // namespace polardeg
