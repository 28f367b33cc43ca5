// The graph closure of the affine polynomial P_H, beta^aff, t-singularities
// at infinity, lambda multiplicities and beta(V, H).
#pragma once

#include "polardeg/transversality.hpp"

namespace polardeg {

// Affine model of (f, H): coordinates changed so H = {x_n = 0}.
struct AffineModel {
  CoordinateChange A;        // y = A x with y_n = l_hat(x)
  CoordinateChange A_inv;
  Ring chart;                // x_0..x_{n-1} (new coordinates)
  Polynomial f_new;          // f in the new coordinates (same ring shape)
  Polynomial P;              // dehomogenized by the last variable
  std::size_t hyper_var;     // index n in the full ring
};

AffineModel affine_model(const Polynomial& f, const LinearForm& l_hat);

struct TSingularity {
  std::vector<Rational> p;   // projective point at infinity, original coordinates
  bool t_rational = true;
  Rational t;                // when t_rational
  std::string t_description; // printable value or cluster eliminant
  int degree = 1;            // cluster degree of the (p, t) candidate
  int lambda = 0;
  // Internal data used by lambda_multiplicity.
  std::vector<Rational> p_new;   // the point in the changed coordinates (chart of
                                 // the hyperplane at infinity; length n, no x_n)
  std::size_t detection_chart = 0;  // chart x_i = 1 where the cluster was found
  Ideal cluster_ideal;           // in the boundary chart ring (non-rational case)
};

struct BetaReport {
  int beta_aff = 0;
  ZeroDimScheme affine_singularities;       // Milnor data in the chart
  std::vector<TSingularity> t_singularities; // t != 0 and lambda >= 1
  std::vector<TSingularity> informational;   // t = 0 candidates and t-regular ones
  int beta_inf = 0;
  int beta_total = 0;
};

int beta_affine(const Polynomial& f, const LinearForm& l_hat,
                ZeroDimScheme* scheme = nullptr);

// Candidate (p, t) pairs from the union over a seeded generic form and all
// coordinate forms; t = 0 candidates included (flagged by the caller).
std::vector<TSingularity> t_singularity_candidates(const Polynomial& f,
                                                   const LinearForm& l_hat,
                                                   std::uint64_t seed);

int lambda_multiplicity(const Polynomial& f, const LinearForm& l_hat,
                        const TSingularity& candidate);

BetaReport beta_total(const Polynomial& f, const LinearForm& l_hat,
                      std::uint64_t seed);

}  // namespace polardeg
