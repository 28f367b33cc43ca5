// Input parsing, orchestration of the decomposition pol = alpha + beta,
// bound checks and deterministic JSON / text reporting.
#pragma once

#include "polardeg/infinity.hpp"

#include <iosfwd>

namespace polardeg {

struct InputSpec {
  Ring ring;
  Polynomial f;            // homogeneous, squarefree (after reduction)
  bool reduced = false;    // true when a squarefree reduction was applied
  std::optional<LinearForm> hyperplane;
  std::uint64_t seed = 42;
  int trials = 3;
  bool json = false;
};

// Parses "vars: x y z" / "f: ..." text (comments with '#', blank lines
// ignored). Throws ParseError with a line reference on malformed input.
InputSpec parse_input(const std::string& text);

struct BoundCheck {
  std::string status;  // "pass", "fail" or "n/a"
  std::string detail;
};

struct DecompositionReport {
  bool admissible_ok = false;
  AdmissibilityVerdict verdict;
  int pol = 0;
  int alpha = 0;
  std::vector<std::pair<std::vector<Rational>, int>> alpha_points;
  BetaReport beta;
  SpecialPointReport special;
  ConeTestResult cone;
  bool identity_ok = false;
  bool failed = false;                    // identity violated: audit dump below
  std::vector<std::string> audit_bases;   // Groebner bases of the intermediates
  std::map<std::string, BoundCheck> checks;
  std::uint64_t seed = 0;
  int trials = 0;
  bool reduced = false;
};

// Full pipeline for an explicit hyperplane. When the hyperplane is not
// admissible the report carries the verdict and no decomposition data.
DecompositionReport decompose(const InputSpec& spec);

std::string emit_json(const DecompositionReport& r);
std::string emit_text(const DecompositionReport& r);

}  // namespace polardeg
