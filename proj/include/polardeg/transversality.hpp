// Singular filtration of V, non-transversality points of a hyperplane,
// the admissibility verdict, alpha invariants and special-point detection.
#pragma once

#include "polardeg/polar.hpp"

namespace polardeg {

struct Filtration {
  std::vector<Ideal> layers;      // F1 > F2 > ... (reduced defining ideals)
  std::vector<int> affine_dims;   // affine cone dimensions of the layers
  // Candidate special points: 0-dimensional layers plus isolated singular
  // points of positive-dimensional layers; projective, first nonzero coord 1.
  std::vector<std::vector<Rational>> candidates;
  bool has_nonrational_candidates = false;
};

struct NonTransversalityReport {
  LinearForm hyperplane;
  bool finite = true;
  std::vector<std::vector<Rational>> points;  // projective, normalized
  bool has_nonrational_points = false;
  // Evidence for a positive-dimensional verdict: generator strings and the
  // projective dimension of the offending locus.
  std::vector<std::string> evidence_generators;
  int evidence_dimension = -1;
};

enum class Admissibility { kAdmissible, kFailsStar, kFailsII };

struct AdmissibilityVerdict {
  Admissibility verdict = Admissibility::kAdmissible;
  int polar_dimension = -1;  // affine dimension of the polar cone
  NonTransversalityReport nt;
};

struct SpecialPointReport {
  std::vector<std::vector<Rational>> candidates;
  std::vector<int> alpha;  // alpha_p(V) per candidate (generic hyperplane)
  std::vector<std::vector<Rational>> special;  // candidates with alpha > 0
};

// Projective rational points of a homogeneous ideal whose zero set is a finite
// union of lines through the origin (affine dimension <= 1); normalized so the
// first nonzero coordinate is 1. Sets *nonrational when a chart scheme has a
// non-rational cluster.
std::vector<std::vector<Rational>> projective_points(const Ideal& I,
                                                     bool* nonrational = nullptr);

Filtration singular_filtration(const Polynomial& f);

NonTransversalityReport non_transversality_points(const Polynomial& f,
                                                  const LinearForm& l_hat);
NonTransversalityReport non_transversality_points(const Polynomial& f,
                                                  const LinearForm& l_hat,
                                                  const Filtration& filt);

AdmissibilityVerdict check_admissible(const Polynomial& f, const LinearForm& l_hat);

// alpha_p(V, H) at a rational projective point p with l_hat(p) = 0.
int alpha_at_point(const Polynomial& f, const std::vector<Rational>& p,
                   const LinearForm& l_hat);

SpecialPointReport special_points(const Polynomial& f, std::uint64_t seed);

// alpha_p(V): generic value, certified by 3-seed agreement.
int alpha_generic(const Polynomial& f, const std::vector<Rational>& p,
                  std::uint64_t seed);

}  // namespace polardeg
