// Exact sparse multivariate polynomials over Q, plus variable bookkeeping,
// charts, coordinate changes and seeded generic-form sampling.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polardeg {

// Arbitrary-precision rational, always in lowest terms (mpq_class keeps the
// canonical form: positive denominator, reduced fraction).
using Rational = mpq_class;

std::string rational_to_string(const Rational& r);     // "3", "-4/27"
Rational rational_from_string(const std::string& s);   // inverse of the above

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A ring is an ordered list of variable names. Polynomials referring to rings
// with the same name list are compatible.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<std::string> names);
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  bool operator==(const Ring& o) const { return names_ == o.names_; }

  // Derived rings.
  Ring without(std::size_t var) const;            // drop one variable
  Ring with_appended(const std::string& v) const; // add a variable at the end
  Ring with_prepended(const std::string& v) const;

 private:
  std::vector<std::string> names_;
};

// Exponent vector; length always equals the ring size.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Sparse polynomial: map from exponent vector to nonzero coefficient.
// The map key order (lexicographic on the exponent vector) is an arbitrary
// but fixed storage order; monomial orders live in groebner.hpp.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  static Polynomial constant(const Ring& ring, const Rational& c);
  static Polynomial variable(const Ring& ring, std::size_t i, int power = 1);

  const Ring& ring() const { return ring_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;  // total degree; -1 for the zero polynomial
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  bool depends_on(std::size_t var) const;

  void add_term(const Exponents& e, const Rational& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  bool operator==(const Polynomial& o) const;

  Rational evaluate(const std::vector<Rational>& point) const;
  Polynomial derivative(std::size_t var) const;
  // Substitute each variable by the given polynomial (all in target ring).
  Polynomial substitute(const Ring& target,
                        const std::vector<Polynomial>& images) const;

  // Divide all coefficients so that the content is 1 and the storage-order
  // leading coefficient is positive (canonical representative up to scaling).
  Polynomial normalized() const;

  std::string to_string() const;  // deterministic: graded, then storage order

 private:
  Ring ring_;
  std::map<Exponents, Rational> terms_;
};

Polynomial parse_polynomial(const Ring& ring, const std::string& text);

// Chart maps (spec: chart_maps).
Polynomial dehomogenize(const Polynomial& f, std::size_t var);  // sets x_var=1, drops it
Polynomial homogenize(const Polynomial& f, const Ring& target, std::size_t var,
                      int degree);  // inserts x_var; per-term filler to reach degree

// Homogenize only with respect to a subset of variables, in the same ring:
// each term is multiplied by x_var^(d - deg restricted to hom_vars).
Polynomial homogenize_in_vars(const Polynomial& f, std::size_t var,
                              const std::vector<std::size_t>& hom_vars);

// Linear form sum a_i x_i (no constant term).
struct LinearForm {
  std::vector<Rational> coeffs;
  Polynomial to_polynomial(const Ring& ring) const;
  bool is_zero() const;
};

LinearForm parse_linear_form(const Ring& ring, const std::string& text);

// Invertible square matrix acting on the variable column vector.
struct CoordinateChange {
  std::vector<std::vector<Rational>> matrix;
  std::size_t size() const { return matrix.size(); }
  CoordinateChange inverse() const;  // throws on singular matrix
};

// f o M: substitutes x_i -> sum_j M[i][j] x_j.
Polynomial linear_change(const Polynomial& f, const CoordinateChange& M);

// Deterministic seeded sampling of a generic linear form: nonzero integer
// coefficients in [-1000, 1000]; with a constraint point p the coefficients at
// the nonzero coordinates of p are adjusted so the form vanishes at p.
LinearForm sample_generic_form(std::size_t n_vars, std::uint64_t seed,
                               const std::vector<Rational>* constraint = nullptr);

struct GenericityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace polardeg
