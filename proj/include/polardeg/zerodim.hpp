// Zero-dimensional ideals: decomposition into point clusters over Q and
// local multiplicities via the double-colon primary-component trick.
#pragma once

#include "polardeg/groebner.hpp"

#include <optional>

namespace polardeg {

struct PointCluster {
  Ideal ideal;                                   // maximal / stated cluster ideal
  std::optional<std::vector<Rational>> point;    // present iff degree == 1
  int degree = 1;                                // field-extension degree
  int multiplicity = 1;
};

struct ZeroDimScheme {
  Ideal ideal;
  std::vector<PointCluster> clusters;
  int total = 0;  // quotient dimension; equals sum of degree * multiplicity
};

// The maximal ideal of a rational point.
Ideal point_ideal(const Ring& ring, const std::vector<Rational>& p);

// Decompose a zero-dimensional ideal; throws PositiveDimensionalError
// (message carries the dimension) on positive-dimensional input.
ZeroDimScheme point_clusters(const Ideal& I);

// Multiplicity of the primary component of I at the cluster, per conjugate
// point: quotient_dimension(I : (I : C^inf)) / degree. Returns 0 when the
// cluster does not lie on the scheme.
int local_multiplicity(const Ideal& I, const Ideal& cluster_ideal, int degree = 1);

// Oracle used by tests: stabilized quotient_dimension(I + m^k).
int local_multiplicity_oracle(const Ideal& I, const std::vector<Rational>& p);

// Rational roots (with deflation) of a univariate polynomial in variable var.
std::vector<Rational> rational_roots(const Polynomial& f, std::size_t var);

}  // namespace polardeg
