#include "polardeg/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace polardeg;
using nlohmann::json;

namespace {

InputSpec load_spec(const std::string& path, std::uint64_t seed, int trials,
                    bool json_out, const std::string& hyperplane) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  InputSpec spec = parse_input(buf.str());
  spec.seed = seed;
  spec.trials = trials;
  spec.json = json_out;
  if (!hyperplane.empty())
    spec.hyperplane = parse_linear_form(spec.ring, hyperplane);
  return spec;
}

json admissible_json(const AdmissibilityVerdict& v) {
  json adm;
  adm["ok"] = v.verdict == Admissibility::kAdmissible;
  adm["verdict"] = v.verdict == Admissibility::kAdmissible ? "admissible"
                   : v.verdict == Admissibility::kFailsStar ? "fails(*)"
                                                            : "fails(ii)";
  adm["polar_dimension"] = v.polar_dimension;
  json pts = json::array();
  for (const auto& p : v.nt.points) {
    json q = json::array();
    for (const Rational& c : p) q.push_back(rational_to_string(c));
    pts.push_back(q);
  }
  adm["nt_points"] = pts;
  adm["finite"] = v.nt.finite;
  adm["evidence"] = v.nt.evidence_generators;
  return adm;
}

std::string point_text(const std::vector<Rational>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ";";
    s += rational_to_string(p[i]);
  }
  return s + "]";
}

int run(int argc, char** argv) {
  CLI::App app{"polar degree of a singular projective hypersurface"};
  app.require_subcommand(1);

  std::string file, hyperplane;
  std::uint64_t seed = 42;
  int trials = 3;
  bool json_out = false;

  auto add_common = [&](CLI::App* sub, bool needs_hyperplane) {
    sub->add_option("-f,--file", file, "input file (vars:/f: lines)")
        ->required();
    sub->add_option("--seed", seed, "seed for generic-form sampling");
    sub->add_option("--trials", trials, "agreeing trials required for pol");
    sub->add_flag("--json", json_out, "emit JSON");
    auto* h = sub->add_option("--hyperplane", hyperplane,
                              "hyperplane linear form, e.g. \"z\" or \"w-x-y\"");
    if (needs_hyperplane) h->required();
  };

  CLI::App* cmd_pol = app.add_subcommand("pol", "polar degree pol(V)");
  add_common(cmd_pol, false);
  CLI::App* cmd_dec =
      app.add_subcommand("decompose", "pol = alpha + beta for a hyperplane");
  add_common(cmd_dec, true);
  CLI::App* cmd_sp =
      app.add_subcommand("special-points", "special points and alpha_p(V)");
  add_common(cmd_sp, false);
  CLI::App* cmd_cone = app.add_subcommand("is-cone", "cone test");
  add_common(cmd_cone, false);
  CLI::App* cmd_adm =
      app.add_subcommand("admissible", "admissibility of a hyperplane");
  add_common(cmd_adm, true);

  CLI11_PARSE(app, argc, argv);

  if (const char* budget = std::getenv("POLARDEG_STEP_BUDGET"))
    set_step_budget(std::atoll(budget));

  InputSpec spec = load_spec(file, seed, trials, json_out, hyperplane);

  if (app.got_subcommand(cmd_pol)) {
    int pol = pol_degree(spec.f, spec.seed, spec.trials);
    if (json_out) {
      json j = {{"pol", pol},
                {"seeds", {{"seed", seed}, {"trials", trials}}},
                {"reduced", spec.reduced}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "pol = " << pol << "\n";
    }
  } else if (app.got_subcommand(cmd_dec)) {
    DecompositionReport r = decompose(spec);
    std::cout << (json_out ? emit_json(r) : emit_text(r));
    if (!r.admissible_ok) return 2;
  } else if (app.got_subcommand(cmd_sp)) {
    SpecialPointReport r = special_points(spec.f, spec.seed);
    if (json_out) {
      json pts = json::array();
      json cands = json::array();
      for (std::size_t i = 0; i < r.candidates.size(); ++i) {
        json q = json::array();
        for (const Rational& c : r.candidates[i])
          q.push_back(rational_to_string(c));
        cands.push_back({{"point", q}, {"alpha", r.alpha[i]}});
      }
      for (const auto& p : r.special) {
        json q = json::array();
        for (const Rational& c : p) q.push_back(rational_to_string(c));
        pts.push_back(q);
      }
      json j = {{"special_points", pts},
                {"candidates", cands},
                {"seeds", {{"seed", seed}, {"trials", trials}}},
                {"reduced", spec.reduced}};
      std::cout << j.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < r.candidates.size(); ++i)
        std::cout << "candidate " << point_text(r.candidates[i])
                  << ": alpha = " << r.alpha[i] << "\n";
      std::cout << "special points:";
      if (r.special.empty()) std::cout << " none";
      for (const auto& p : r.special) std::cout << " " << point_text(p);
      std::cout << "\n";
    }
  } else if (app.got_subcommand(cmd_cone)) {
    ConeTestResult r = cone_apex_set(spec.f);
    if (json_out) {
      json apex = json::array();
      for (const auto& v : r.apex_space) {
        json q = json::array();
        for (const Rational& c : v) q.push_back(rational_to_string(c));
        apex.push_back(q);
      }
      json j = {{"cone", r.is_cone},
                {"apex_space", apex},
                {"reduced", spec.reduced}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "cone: " << (r.is_cone ? "yes" : "no") << "\n";
      for (const auto& v : r.apex_space)
        std::cout << "  apex direction " << point_text(v) << "\n";
    }
  } else if (app.got_subcommand(cmd_adm)) {
    AdmissibilityVerdict v = check_admissible(spec.f, *spec.hyperplane);
    if (json_out) {
      json j = {{"admissible", admissible_json(v)}, {"reduced", spec.reduced}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "verdict: "
                << (v.verdict == Admissibility::kAdmissible ? "admissible"
                    : v.verdict == Admissibility::kFailsStar
                        ? "fails(*)"
                        : "fails(ii)")
                << " (polar dimension " << v.polar_dimension << ")\n";
      for (const auto& p : v.nt.points)
        std::cout << "  non-transversality point " << point_text(p) << "\n";
      if (!v.nt.finite) {
        std::cout << "  non-finite locus (dimension "
                  << v.nt.evidence_dimension << "):\n";
        for (const auto& g : v.nt.evidence_generators)
          std::cout << "    " << g << "\n";
      }
    }
    if (v.verdict != Admissibility::kAdmissible) return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const NonAdmissibleError& e) {
    std::cerr << "non-admissible: " << e.what() << "\n";
    return 2;
  } catch (const GenericityError& e) {
    std::cerr << "genericity failure: " << e.what() << "\n";
    return 3;
  } catch (const ResourceError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return 4;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
