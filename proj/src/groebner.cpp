#include "polardeg/groebner.hpp"

#include <algorithm>
#include <map>

namespace polardeg {

namespace {
thread_local long long g_budget = 10'000'000;
}

long long step_budget() { return g_budget; }
void set_step_budget(long long steps) { g_budget = steps; }

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  auto grevlex_cmp = [](const Exponents& x, const Exponents& y, std::size_t lo,
                        std::size_t hi) {
    int dx = 0, dy = 0;
    for (std::size_t i = lo; i < hi; ++i) { dx += x[i]; dy += y[i]; }
    if (dx != dy) return dx < dy ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
      if (x[i] != y[i]) return x[i] > y[i] ? -1 : 1;  // smaller last exponent wins
    }
    return 0;
  };
  switch (kind) {
    case kLex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case kGrevlex:
      return grevlex_cmp(a, b, 0, a.size());
    case kBlock: {
      int c = grevlex_cmp(a, b, 0, block);
      if (c != 0) return c;
      return grevlex_cmp(a, b, block, a.size());
    }
  }
  return 0;
}

Exponents leading_exponents(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw ParseError("leading term of zero");
  const Exponents* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (!best || order.compare(e, *best) > 0) best = &e;
  return *best;
}

Rational leading_coefficient(const Polynomial& p, const MonomialOrder& order) {
  return p.terms().at(leading_exponents(p, order));
}

bool GroebnerBasis::is_unit() const {
  return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm_exp(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Polynomial mono_mul(const Polynomial& p, const Exponents& m, const Rational& c) {
  Polynomial r(p.ring());
  for (const auto& [e, k] : p.terms()) {
    Exponents x = e;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += m[i];
    r.add_term(x, k * c);
  }
  return r;
}

struct Reducer {
  const std::vector<Polynomial>& basis;
  const std::vector<Exponents>& leads;
  const MonomialOrder& order;
  long long* steps;

  Polynomial reduce(Polynomial p) const {
    Polynomial tail(p.ring());
    while (!p.is_zero()) {
      Exponents lt = leading_exponents(p, order);
      Rational lc = p.terms().at(lt);
      bool reduced = false;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!divides(leads[i], lt)) continue;
        if (++*steps > g_budget)
          throw ResourceError("reduction-step budget exceeded");
        Exponents q = lt;
        for (std::size_t k = 0; k < q.size(); ++k) q[k] -= leads[i][k];
        Rational factor = lc / basis[i].terms().at(leads[i]);
        p = p - mono_mul(basis[i], q, factor);
        reduced = true;
        break;
      }
      if (!reduced) {
        tail.add_term(lt, lc);
        Polynomial drop(p.ring());
        drop.add_term(lt, lc);
        p = p - drop;
      }
    }
    return tail;
  }
};

}  // namespace

GroebnerBasis groebner_basis(const Ideal& I, MonomialOrder order) {
  long long steps = 0;
  std::vector<Polynomial> G;
  std::vector<Exponents> leads;
  for (const auto& g : I.gens)
    if (!g.is_zero()) G.push_back(g.normalized());
  for (const auto& g : G) leads.push_back(leading_exponents(g, order));

  struct Pair { std::size_t i, j; Exponents lcm; int deg; };
  std::vector<Pair> pairs;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Exponents l = lcm_exp(leads[i], leads[j]);
      pairs.push_back({i, j, l, total_degree(l)});
    }
  };
  for (std::size_t j = 0; j < G.size(); ++j) push_pairs(j);

  auto pending = [&](std::size_t a, std::size_t b) {
    for (const auto& p : pairs)
      if ((p.i == a && p.j == b) || (p.i == b && p.j == a)) return true;
    return false;
  };

  Reducer red{G, leads, order, &steps};
  while (!pairs.empty()) {
    // Normal strategy: smallest lcm degree first.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (pairs[k].deg < pairs[best].deg) best = k;
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

    if (coprime(leads[pr.i], leads[pr.j])) continue;  // product criterion
    bool chained = false;  // chain criterion
    for (std::size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (divides(leads[k], pr.lcm) && !pending(pr.i, k) && !pending(pr.j, k))
        chained = true;
    }
    if (chained) continue;

    Exponents qi = pr.lcm, qj = pr.lcm;
    for (std::size_t k = 0; k < qi.size(); ++k) {
      qi[k] -= leads[pr.i][k];
      qj[k] -= leads[pr.j][k];
    }
    Polynomial s = mono_mul(G[pr.i], qi, Rational(1) / G[pr.i].terms().at(leads[pr.i])) -
                   mono_mul(G[pr.j], qj, Rational(1) / G[pr.j].terms().at(leads[pr.j]));
    Polynomial r = red.reduce(s);
    if (!r.is_zero()) {
      G.push_back(r.normalized());
      leads.push_back(leading_exponents(G.back(), order));
      push_pairs(G.size() - 1);
    }
  }

  // Minimalize: drop generators whose lead is divisible by another lead.
  std::vector<Polynomial> M;
  std::vector<Exponents> mleads;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j)
      if (i != j && divides(leads[j], leads[i]) &&
          !(leads[i] == leads[j] && j > i))
        redundant = true;
    if (!redundant) { M.push_back(G[i]); mleads.push_back(leads[i]); }
  }
  // Tail-reduce each generator against the others, make monic.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < M.size(); ++i) {
      std::vector<Polynomial> others;
      std::vector<Exponents> oleads;
      for (std::size_t j = 0; j < M.size(); ++j)
        if (j != i) { others.push_back(M[j]); oleads.push_back(mleads[j]); }
      Reducer r2{others, oleads, order, &steps};
      Polynomial h = r2.reduce(M[i]);
      if (h.is_zero()) {
        M.erase(M.begin() + static_cast<std::ptrdiff_t>(i));
        mleads.erase(mleads.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      if (!(h == M[i])) { M[i] = h; mleads[i] = leading_exponents(h, order); changed = true; }
    }
  }
  for (auto& g : M) g = g * (Rational(1) / g.terms().at(leading_exponents(g, order)));

  // Deterministic ordering of the basis.
  std::vector<std::size_t> idx(M.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(mleads[a], mleads[b]) < 0;
  });
  GroebnerBasis out;
  out.ring = I.ring;
  out.order = order;
  for (std::size_t i : idx) { out.basis.push_back(M[i]); out.leads.push_back(mleads[i]); }
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  long long steps = 0;
  Reducer red{G.basis, G.leads, G.order, &steps};
  return red.reduce(f);
}

bool ideal_contains(const GroebnerBasis& G, const Polynomial& f) {
  return normal_form(f, G).is_zero();
}

bool equal_ideals(const Ideal& I, const Ideal& J) {
  GroebnerBasis A = groebner_basis(I), B = groebner_basis(J);
  if (A.basis.size() != B.basis.size()) return false;
  for (std::size_t i = 0; i < A.basis.size(); ++i)
    if (!(A.basis[i] == B.basis[i])) return false;
  return true;
}

namespace {

// Map a polynomial between rings with permuted/extended variable lists by name.
Polynomial transport(const Polynomial& p, const Ring& target) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < p.ring().size(); ++i) {
    auto idx = target.index_of(p.ring().name(i));
    if (!idx) {
      if (p.depends_on(i))
        throw ParseError("transport: variable missing in target ring");
      images.push_back(Polynomial(target));  // unused; placeholder
      continue;
    }
    images.push_back(Polynomial::variable(target, *idx));
  }
  return p.substitute(target, images);
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::set<std::size_t>& drop_vars) {
  if (drop_vars.empty()) return I;
  std::vector<std::string> names;
  for (std::size_t i : drop_vars) names.push_back(I.ring.name(i));
  for (std::size_t i = 0; i < I.ring.size(); ++i)
    if (!drop_vars.count(i)) names.push_back(I.ring.name(i));
  Ring permuted{names};
  Ideal J{permuted, {}};
  for (const auto& g : I.gens) J.gens.push_back(transport(g, permuted));
  GroebnerBasis G = groebner_basis(J, MonomialOrder::block_elim(drop_vars.size()));
  Ideal out{I.ring, {}};
  for (const auto& g : G.basis) {
    bool free = true;
    for (std::size_t i = 0; i < drop_vars.size() && free; ++i)
      if (g.depends_on(i)) free = false;
    if (free) out.gens.push_back(transport(g, I.ring));
  }
  return out;
}

Ideal intersect_ideals(const Ideal& I, const Ideal& J) {
  Ring ext = I.ring.with_prepended("@t");
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one = Polynomial::constant(ext, 1);
  Ideal K{ext, {}};
  for (const auto& g : I.gens) K.gens.push_back(t * transport(g, ext));
  for (const auto& g : J.gens) K.gens.push_back((one - t) * transport(g, ext));
  GroebnerBasis G = groebner_basis(K, MonomialOrder::block_elim(1));
  Ideal out{I.ring, {}};
  for (const auto& g : G.basis)
    if (!g.depends_on(0)) out.gens.push_back(transport(g, I.ring));
  return out;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw ParseError("division by zero polynomial");
  MonomialOrder order = MonomialOrder::grevlex();
  Exponents lg = leading_exponents(g, order);
  Rational cg = g.terms().at(lg);
  Polynomial p = f, q(f.ring());
  while (!p.is_zero()) {
    Exponents lt = leading_exponents(p, order);
    if (!divides(lg, lt)) throw ParseError("divide_exact: not divisible");
    Exponents m = lt;
    for (std::size_t i = 0; i < m.size(); ++i) m[i] -= lg[i];
    Rational c = p.terms().at(lt) / cg;
    q.add_term(m, c);
    p = p - mono_mul(g, m, c);
  }
  return q;
}

Ideal colon(const Ideal& I, const Polynomial& g) {
  if (g.is_zero()) throw ParseError("colon by zero");
  if (g.is_constant()) return I;
  Ideal gi{I.ring, {g}};
  Ideal L = intersect_ideals(I, gi);
  Ideal out{I.ring, {}};
  for (const auto& h : L.gens) out.gens.push_back(divide_exact(h, g).normalized());
  if (out.gens.empty()) out.gens.push_back(Polynomial(I.ring));  // zero ideal
  return out;
}

Ideal saturate(const Ideal& I, const Polynomial& g) {
  Ideal cur = I;
  for (;;) {
    Ideal next = colon(cur, g);
    if (equal_ideals(cur, next)) return next;
    cur = next;
  }
}

Ideal saturate_rabinowitsch(const Ideal& I, const Polynomial& g) {
  Ring ext = I.ring.with_prepended("@u");
  Polynomial u = Polynomial::variable(ext, 0);
  Ideal K{ext, {}};
  for (const auto& h : I.gens) K.gens.push_back(transport(h, ext));
  K.gens.push_back(Polynomial::constant(ext, 1) - u * transport(g, ext));
  GroebnerBasis G = groebner_basis(K, MonomialOrder::block_elim(1));
  Ideal out{I.ring, {}};
  for (const auto& h : G.basis)
    if (!h.depends_on(0)) out.gens.push_back(transport(h, I.ring));
  if (out.gens.empty()) out.gens.push_back(Polynomial(I.ring));
  return out;
}

Ideal colon_ideal(const Ideal& I, const Ideal& J) {
  Ideal acc = I;
  bool first = true;
  for (const auto& g : J.gens) {
    if (g.is_zero()) continue;
    Ideal c = colon(I, g);
    acc = first ? c : intersect_ideals(acc, c);
    first = false;
  }
  return acc;
}

Ideal saturate_ideal(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  for (;;) {
    Ideal next = colon_ideal(cur, J);
    if (equal_ideals(cur, next)) return next;
    cur = next;
  }
}

int krull_dimension(const GroebnerBasis& G) {
  if (G.is_unit()) return -1;
  std::size_t n = G.ring.size();
  if (G.basis.empty()) return static_cast<int>(n);
  int best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    int size = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) ++size;
    if (size <= best) continue;
    bool independent = true;
    for (const auto& lead : G.leads) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i)
        if (lead[i] > 0 && !(mask & (1ull << i))) inside = false;
      if (inside) { independent = false; break; }
    }
    if (independent) best = size;
  }
  return best;
}

int krull_dimension(const Ideal& I) { return krull_dimension(groebner_basis(I)); }

int quotient_dimension(const GroebnerBasis& G) {
  if (G.is_unit()) return 0;
  std::size_t n = G.ring.size();
  std::vector<int> bound(n, -1);
  for (const auto& lead : G.leads) {
    int support = -1;
    bool pure = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (lead[i] > 0) {
        if (support >= 0) { pure = false; break; }
        support = static_cast<int>(i);
      }
    }
    if (pure && support >= 0) {
      std::size_t i = static_cast<std::size_t>(support);
      if (bound[i] < 0 || lead[i] < bound[i]) bound[i] = lead[i];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] < 0)
      throw PositiveDimensionalError("quotient_dimension: ideal is not zero-dimensional");
  // Enumerate the staircase below the pure-power bounds.
  int count = 0;
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      for (const auto& lead : G.leads)
        if (divides(lead, e)) return;
      ++count;
      return;
    }
    for (e[i] = 0; e[i] < bound[i]; ++e[i]) self(self, i + 1);
    e[i] = 0;
  };
  rec(rec, 0);
  return count;
}

int quotient_dimension(const Ideal& I) { return quotient_dimension(groebner_basis(I)); }

Polynomial gcd_multivariate(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  if (f.is_constant() || g.is_constant())
    return Polynomial::constant(f.ring(), 1);
  Ideal L = intersect_ideals(Ideal{f.ring(), {f}}, Ideal{g.ring(), {g}});
  GroebnerBasis G = groebner_basis(L);
  if (G.basis.size() != 1)
    throw ParseError("gcd: intersection of principal ideals not principal");
  Polynomial lcm = G.basis[0];
  return divide_exact(f * g, lcm).normalized();
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero() || f.is_constant()) return f;
  Polynomial g(f.ring());
  bool first = true;
  for (std::size_t i = 0; i < f.ring().size(); ++i) {
    Polynomial d = f.derivative(i);
    if (d.is_zero()) continue;
    g = first ? gcd_multivariate(f, d) : gcd_multivariate(g, d);
    first = false;
  }
  if (first) return f.normalized();
  return divide_exact(f, g).normalized();
}

Ideal squarefree_reduce_ideal(const Ideal& I) {
  Ideal cur = I;
  for (;;) {
    GroebnerBasis G = groebner_basis(cur);
    Ideal next{I.ring, {}};
    for (const auto& g : G.basis) next.gens.push_back(squarefree_part(g));
    if (equal_ideals(cur, next)) return next;
    cur = next;
  }
}

}  // namespace polardeg
