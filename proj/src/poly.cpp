#include "polardeg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace polardeg {

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << "/" << r.get_den();
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
  r.canonicalize();
  return r;
}

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw ParseError("duplicate variable " + names_[i]);
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Ring Ring::without(std::size_t var) const {
  std::vector<std::string> n = names_;
  n.erase(n.begin() + static_cast<std::ptrdiff_t>(var));
  return Ring(n);
}

Ring Ring::with_appended(const std::string& v) const {
  std::vector<std::string> n = names_;
  n.push_back(v);
  return Ring(n);
}

Ring Ring::with_prepended(const std::string& v) const {
  std::vector<std::string> n;
  n.push_back(v);
  n.insert(n.end(), names_.begin(), names_.end());
  return Ring(n);
}

int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

Polynomial Polynomial::constant(const Ring& ring, const Rational& c) {
  Polynomial p(ring);
  p.add_term(Exponents(ring.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t i, int power) {
  Polynomial p(ring);
  Exponents e(ring.size(), 0);
  e.at(i) = power;
  p.add_term(e, 1);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

bool Polynomial::depends_on(std::size_t var) const {
  for (const auto& [e, c] : terms_)
    if (e.at(var) > 0) return true;
  return false;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  if (e.size() != ring_.size()) throw ParseError("exponent length mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (!(ring_ == o.ring_)) throw ParseError("ring mismatch");
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (!(ring_ == o.ring_)) throw ParseError("ring mismatch");
  Polynomial r(ring_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e = e1;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return ring_ == o.ring_ && terms_ == o.terms_;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_.size()) throw ParseError("point length mismatch");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

Polynomial Polynomial::substitute(const Ring& target,
                                  const std::vector<Polynomial>& images) const {
  if (images.size() != ring_.size()) throw ParseError("substitution arity mismatch");
  Polynomial result(target);
  // Per-variable power cache.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(k)];
  };
  for (const auto& [e, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * power(i, e[i]);
    result = result + t;
  }
  return result;
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty()) return *this;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (terms_.rbegin()->second * scale < 0) scale = -scale;
  return *this * scale;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Graded order, highest degree first; ties broken by storage order descending.
  std::vector<const std::pair<const Exponents, Rational>*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::stable_sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
    int da = total_degree(a->first), db = total_degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    Rational c = t->second;
    if (first) {
      if (c < 0) { os << "-"; c = -c; }
    } else {
      if (c < 0) { os << " - "; c = -c; } else { os << " + "; }
    }
    first = false;
    bool has_vars = total_degree(t->first) > 0;
    bool coeff_shown = (c != 1) || !has_vars;
    if (coeff_shown) os << rational_to_string(c);
    bool star = coeff_shown;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      int e = t->first[i];
      if (e == 0) continue;
      if (star) os << "*";
      os << ring_.name(i);
      if (e > 1) os << "^" << e;
      star = true;
    }
  }
  return os.str();
}

namespace {

struct Lexer {
  std::string s;
  std::size_t pos = 0;
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() { skip(); return pos >= s.size(); }
  char peek() { skip(); return pos < s.size() ? s[pos] : '\0'; }
  char get() { skip(); return s[pos++]; }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(pos) + " in '" + s + "'");
  }
};

class Parser {
 public:
  Parser(const Ring& ring, const std::string& text) : ring_(ring) { lx_.s = text; }

  Polynomial run() {
    Polynomial p = expr();
    if (!lx_.eof()) lx_.fail("unexpected trailing input");
    return p;
  }

 private:
  const Ring& ring_;
  Lexer lx_;

  Polynomial expr() {
    Polynomial acc(ring_);
    bool neg = false;
    char c = lx_.peek();
    if (c == '+' || c == '-') { neg = (lx_.get() == '-'); }
    acc = term();
    if (neg) acc = -acc;
    while (!lx_.eof()) {
      c = lx_.peek();
      if (c == '+' || c == '-') {
        lx_.get();
        Polynomial t = term();
        acc = (c == '+') ? acc + t : acc - t;
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (!lx_.eof()) {
      char c = lx_.peek();
      if (c == '*') {
        lx_.get();
        acc = acc * factor();
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        acc = acc * factor();  // implicit multiplication
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (!lx_.eof() && lx_.peek() == '^') {
      lx_.get();
      int e = integer();
      if (e < 0) lx_.fail("negative exponent");
      Polynomial acc = Polynomial::constant(ring_, 1);
      for (int i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  Polynomial atom() {
    char c = lx_.peek();
    if (c == '(') {
      lx_.get();
      Polynomial p = expr();
      if (lx_.peek() != ')') lx_.fail("expected ')'");
      lx_.get();
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = natural();
      if (!lx_.eof() && lx_.peek() == '/') {
        lx_.get();
        mpz_class den = natural();
        if (den == 0) lx_.fail("zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return Polynomial::constant(ring_, r);
      }
      return Polynomial::constant(ring_, Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      lx_.skip();
      while (lx_.pos < lx_.s.size() &&
             (std::isalnum(static_cast<unsigned char>(lx_.s[lx_.pos])) || lx_.s[lx_.pos] == '_')) {
        name += lx_.s[lx_.pos++];
      }
      auto idx = ring_.index_of(name);
      if (!idx) lx_.fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, *idx);
    }
    lx_.fail("unexpected character");
  }

  mpz_class natural() {
    lx_.skip();
    std::string digits;
    while (lx_.pos < lx_.s.size() && std::isdigit(static_cast<unsigned char>(lx_.s[lx_.pos])))
      digits += lx_.s[lx_.pos++];
    if (digits.empty()) lx_.fail("expected number");
    return mpz_class(digits);
  }

  int integer() {
    bool neg = false;
    if (lx_.peek() == '-') { lx_.get(); neg = true; }
    mpz_class n = natural();
    int v = static_cast<int>(n.get_si());
    return neg ? -v : v;
  }
};

}  // namespace

Polynomial parse_polynomial(const Ring& ring, const std::string& text) {
  return Parser(ring, text).run();
}

Polynomial dehomogenize(const Polynomial& f, std::size_t var) {
  if (!f.is_homogeneous()) throw ParseError("dehomogenize requires a homogeneous input");
  Ring target = f.ring().without(var);
  Polynomial r(target);
  for (const auto& [e, c] : f.terms()) {
    Exponents d;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var) d.push_back(e[i]);
    r.add_term(d, c);
  }
  return r;
}

Polynomial homogenize(const Polynomial& f, const Ring& target, std::size_t var,
                      int degree) {
  if (degree < f.degree()) throw ParseError("homogenize target degree too small");
  Polynomial r(target);
  for (const auto& [e, c] : f.terms()) {
    Exponents d;
    for (std::size_t i = 0, j = 0; i < target.size(); ++i) {
      if (i == var) d.push_back(degree - total_degree(e));
      else d.push_back(e[j]), ++j;
    }
    r.add_term(d, c);
  }
  return r;
}

Polynomial homogenize_in_vars(const Polynomial& f, std::size_t var,
                              const std::vector<std::size_t>& hom_vars) {
  int d = 0;
  auto restricted_degree = [&](const Exponents& e) {
    int s = 0;
    for (std::size_t i : hom_vars) s += e.at(i);
    return s;
  };
  for (const auto& [e, c] : f.terms()) d = std::max(d, restricted_degree(e));
  Polynomial r(f.ring());
  for (const auto& [e, c] : f.terms()) {
    Exponents x = e;
    x.at(var) += d - restricted_degree(e);
    r.add_term(x, c);
  }
  return r;
}

Polynomial LinearForm::to_polynomial(const Ring& ring) const {
  if (coeffs.size() != ring.size()) throw ParseError("linear form arity mismatch");
  Polynomial p(ring);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(ring.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

bool LinearForm::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

LinearForm parse_linear_form(const Ring& ring, const std::string& text) {
  Polynomial p = parse_polynomial(ring, text);
  LinearForm l;
  l.coeffs.assign(ring.size(), 0);
  for (const auto& [e, c] : p.terms()) {
    if (total_degree(e) != 1) throw ParseError("not a linear form: " + text);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] == 1) l.coeffs[i] = c;
  }
  return l;
}

CoordinateChange CoordinateChange::inverse() const {
  std::size_t n = size();
  std::vector<std::vector<Rational>> a = matrix, inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw ParseError("singular coordinate-change matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) { a[col][j] /= d; inv[col][j] /= d; }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational m = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= m * a[col][j];
        inv[r][j] -= m * inv[col][j];
      }
    }
  }
  return CoordinateChange{inv};
}

Polynomial linear_change(const Polynomial& f, const CoordinateChange& M) {
  const Ring& ring = f.ring();
  if (M.size() != ring.size()) throw ParseError("coordinate change size mismatch");
  M.inverse();  // validates invertibility
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    Polynomial img(ring);
    for (std::size_t j = 0; j < ring.size(); ++j) {
      if (M.matrix[i][j] == 0) continue;
      img = img + Polynomial::variable(ring, j) * M.matrix[i][j];
    }
    images.push_back(img);
  }
  return f.substitute(ring, images);
}

LinearForm sample_generic_form(std::size_t n_vars, std::uint64_t seed,
                               const std::vector<Rational>* constraint) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  auto draw_nonzero = [&]() {
    int v = 0;
    while (v == 0) v = dist(rng);
    return v;
  };
  std::vector<std::size_t> support;  // constrained coordinates
  if (constraint) {
    if (constraint->size() != n_vars) throw ParseError("constraint length mismatch");
    for (std::size_t i = 0; i < n_vars; ++i)
      if ((*constraint)[i] != 0) support.push_back(i);
  }
  for (int attempt = 0; attempt < 50; ++attempt) {
    LinearForm l;
    l.coeffs.assign(n_vars, 0);
    for (std::size_t i = 0; i < n_vars; ++i) l.coeffs[i] = draw_nonzero();
    if (support.empty()) return l;
    // Solve the last constrained coefficient so the form vanishes at p.
    std::size_t j = support.back();
    Rational acc = 0;
    for (std::size_t i = 0; i < n_vars; ++i)
      if (i != j) acc += l.coeffs[i] * (*constraint)[i];
    l.coeffs[j] = -acc / (*constraint)[j];
    if (l.coeffs[j] != 0 || support.size() == 1) return l;
  }
  throw GenericityError("constraint unsatisfiable with nonzero coefficients after bounded retries");
}

}  // namespace polardeg
