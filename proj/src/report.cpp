#include "polardeg/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace polardeg {

namespace {

using nlohmann::json;

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

json json_rational(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p())
    return json(r.get_num().get_si());
  return json(rational_to_string(r));
}

json json_point(const std::vector<Rational>& p) {
  json a = json::array();
  for (const Rational& c : p) a.push_back(json_rational(c));
  return a;
}

std::string point_text(const std::vector<Rational>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ";";
    s += rational_to_string(p[i]);
  }
  return s + "]";
}

std::string verdict_name(Admissibility v) {
  switch (v) {
    case Admissibility::kAdmissible: return "admissible";
    case Admissibility::kFailsStar: return "fails(*)";
    case Admissibility::kFailsII: return "fails(ii)";
  }
  return "?";
}

int power_int(int base, std::size_t exp) {
  int r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

InputSpec parse_input(const std::string& text) {
  InputSpec spec;
  std::istringstream in(text);
  std::string line;
  std::optional<std::string> f_text;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    std::size_t colon = s.find(':');
    if (colon == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected 'key: value'");
    std::string key = strip(s.substr(0, colon));
    std::string value = strip(s.substr(colon + 1));
    if (key == "vars") {
      std::istringstream vs(value);
      std::vector<std::string> names;
      std::string v;
      while (vs >> v) names.push_back(v);
      if (names.empty())
        throw ParseError("line " + std::to_string(lineno) + ": empty vars list");
      spec.ring = Ring(names);
    } else if (key == "f") {
      f_text = value;
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" +
                       key + "'");
    }
  }
  if (spec.ring.size() == 0) throw ParseError("missing 'vars:' line");
  if (!f_text) throw ParseError("missing 'f:' line");
  spec.f = parse_polynomial(spec.ring, *f_text);
  if (spec.f.is_zero()) throw ParseError("f is zero");
  if (!spec.f.is_homogeneous()) throw ParseError("f is not homogeneous");
  Polynomial red = squarefree_part(spec.f).normalized();
  if (!(red == spec.f.normalized())) spec.reduced = true;
  spec.f = red;
  return spec;
}

DecompositionReport decompose(const InputSpec& spec) {
  if (!spec.hyperplane) throw ParseError("decompose requires a hyperplane");
  const Polynomial& f = spec.f;
  const LinearForm& l = *spec.hyperplane;
  DecompositionReport r;
  r.seed = spec.seed;
  r.trials = spec.trials;
  r.reduced = spec.reduced;

  r.verdict = check_admissible(f, l);
  r.cone = cone_apex_set(f);
  r.special = special_points(f, spec.seed);
  r.admissible_ok = r.verdict.verdict == Admissibility::kAdmissible;
  if (!r.admissible_ok) return r;

  if (r.verdict.nt.has_nonrational_points)
    throw GenericityError(
        "non-rational non-transversality point: alpha is not computable "
        "in exact rational arithmetic");
  for (const auto& p : r.verdict.nt.points) {
    int a = alpha_at_point(f, p, l);
    r.alpha += a;
    r.alpha_points.emplace_back(p, a);
  }
  r.beta = beta_total(f, l, spec.seed);
  r.pol = pol_degree(f, spec.seed, spec.trials);
  r.identity_ok = (r.pol == r.alpha + r.beta.beta_total);

  int max_alpha = 0;
  for (int a : r.special.alpha) max_alpha = std::max(max_alpha, a);
  std::size_t n = f.ring().size() - 1;
  int bound = power_int(f.degree() - 1, n);

  r.checks["identity"] = {r.identity_ok ? "pass" : "fail",
                          std::to_string(r.pol) + " = " +
                              std::to_string(r.alpha) + " + " +
                              std::to_string(r.beta.beta_total)};
  r.checks["degree_bound"] = {r.pol <= bound ? "pass" : "fail",
                              "pol <= (d-1)^n = " + std::to_string(bound)};
  if (!r.cone.is_cone)
    r.checks["special_point_bound"] = {r.pol >= max_alpha ? "pass" : "fail",
                                       "pol >= max alpha_p = " +
                                           std::to_string(max_alpha)};
  else
    r.checks["special_point_bound"] = {"n/a", "V is a cone"};
  Filtration filt = singular_filtration(f);
  bool isolated = filt.layers.empty() || filt.affine_dims[0] <= 1;
  if (isolated)
    r.checks["huh_bound"] = {r.pol >= max_alpha ? "pass" : "fail",
                             "pol >= max alpha_p = " +
                                 std::to_string(max_alpha)};
  else
    r.checks["huh_bound"] = {"n/a", "non-isolated singularities"};
  // mult_0 of the polar cone of l itself: the singular polar degree relative
  // to H. Reported, not compared to pol (they differ for non-generic H).
  r.checks["singular_polar_degree"] = {
      "pass", "mult_0 polar cone = " + std::to_string(singular_polar_degree(f, l))};

  if (!r.identity_ok) {
    r.failed = true;
    PolarLocus locus = polar_ideal(f, l);
    GroebnerBasis G = groebner_basis(locus.ideal);
    std::string dump = "polar ideal GB:";
    for (const Polynomial& g : G.basis) dump += " " + g.to_string() + ";";
    r.audit_bases.push_back(dump);
    GroebnerBasis A = groebner_basis(r.beta.affine_singularities.ideal);
    dump = "affine singular scheme GB:";
    for (const Polynomial& g : A.basis) dump += " " + g.to_string() + ";";
    r.audit_bases.push_back(dump);
  }
  return r;
}

std::string emit_json(const DecompositionReport& r) {
  json j;
  j["pol"] = r.pol;
  j["alpha"] = r.alpha;
  json ap = json::array();
  for (const auto& [p, a] : r.alpha_points)
    ap.push_back({{"point", json_point(p)}, {"alpha", a}});
  j["alpha_points"] = ap;
  j["beta_aff"] = r.beta.beta_aff;
  j["beta_inf"] = r.beta.beta_inf;
  json ts = json::array();
  for (const TSingularity& s : r.beta.t_singularities) {
    json e;
    e["point"] = s.p.empty() ? json("non-rational") : json_point(s.p);
    e["t"] = s.t_rational ? json_rational(s.t) : json(s.t_description);
    e["t_rational"] = s.t_rational;
    e["lambda"] = s.lambda;
    e["degree"] = s.degree;
    ts.push_back(e);
  }
  j["t_singularities"] = ts;
  json sp = json::array();
  for (const auto& p : r.special.special) sp.push_back(json_point(p));
  j["special_points"] = sp;
  json adm;
  adm["ok"] = r.admissible_ok;
  adm["verdict"] = verdict_name(r.verdict.verdict);
  adm["polar_dimension"] = r.verdict.polar_dimension;
  json ntp = json::array();
  for (const auto& p : r.verdict.nt.points) ntp.push_back(json_point(p));
  adm["nt_points"] = ntp;
  adm["evidence"] = r.verdict.nt.evidence_generators;
  j["admissible"] = adm;
  j["cone"] = r.cone.is_cone;
  json checks = json::object();
  for (const auto& [name, c] : r.checks)
    checks[name] = {{"status", c.status}, {"detail", c.detail}};
  if (r.failed) checks["audit"] = r.audit_bases;
  j["checks"] = checks;
  j["seeds"] = {{"seed", r.seed}, {"trials", r.trials}};
  j["reduced"] = r.reduced;
  return j.dump(2) + "\n";
}

std::string emit_text(const DecompositionReport& r) {
  std::ostringstream out;
  out << "hyperplane: " << verdict_name(r.verdict.verdict)
      << " (polar dimension " << r.verdict.polar_dimension << ")\n";
  if (!r.admissible_ok) {
    if (!r.verdict.nt.finite) {
      out << "non-transversality locus is not finite; evidence (dimension "
          << r.verdict.nt.evidence_dimension << "):\n";
      for (const auto& g : r.verdict.nt.evidence_generators)
        out << "  " << g << "\n";
    }
    return out.str();
  }
  out << "pol = " << r.pol << "\n";
  out << "alpha = " << r.alpha << "\n";
  for (const auto& [p, a] : r.alpha_points)
    out << "  alpha at " << point_text(p) << " = " << a << "\n";
  out << "beta = " << r.beta.beta_total << " (aff " << r.beta.beta_aff
      << " + inf " << r.beta.beta_inf << ")\n";
  for (const TSingularity& s : r.beta.t_singularities)
    out << "  t-singularity at "
        << (s.p.empty() ? std::string("non-rational") : point_text(s.p))
        << ", t = " << s.t_description << ", lambda = " << s.lambda
        << ", degree = " << s.degree << "\n";
  out << "identity pol = alpha + beta: "
      << (r.identity_ok ? "PASS" : "FAILED") << "\n";
  if (r.failed)
    for (const auto& d : r.audit_bases) out << "  audit: " << d << "\n";
  out << "cone: " << (r.cone.is_cone ? "yes" : "no") << "\n";
  out << "special points:";
  if (r.special.special.empty()) out << " none";
  for (const auto& p : r.special.special) out << " " << point_text(p);
  out << "\n";
  for (const auto& [name, c] : r.checks)
    out << "check " << name << ": " << c.status << " (" << c.detail << ")\n";
  out << "seed = " << r.seed << ", trials = " << r.trials
      << ", reduced = " << (r.reduced ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace polardeg
