#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bruhat/bigint.hpp"
#include "bruhat/rootsys.hpp"

namespace bruhat {

// Degree-one integer form c0 + c1*a1 + ... + cn*an in the simple-root
// variables. Denominator factors are kept primitive with the first nonzero
// coefficient positive; extracted content moves into the fraction scalar.
struct LinForm {
  int constant = 0;
  std::vector<int> coeffs;

  LinForm() = default;
  LinForm(int c0, std::vector<int> cs) : constant(c0), coeffs(std::move(cs)) {}
  static LinForm of_root(const RootVec& r) { return LinForm(0, r.c); }
  static LinForm one_plus(const RootVec& r) { return LinForm(1, r.c); }

  int nvars() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  bool is_constant() const;
  bool operator==(const LinForm& o) const { return constant == o.constant && coeffs == o.coeffs; }
  bool operator<(const LinForm& o) const {
    if (constant != o.constant) return constant < o.constant;
    return coeffs < o.coeffs;
  }
  std::string to_string() const;  // "1+a2", "a1+2a2+2a3"
};

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients; monomials keyed by exponent vectors.
class Poly {
 public:
  using Terms = std::map<std::vector<int>, Int>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly constant(int nvars, Int c);
  static Poly variable(int nvars, int i);
  static Poly from_linform(const LinForm& l);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  size_t num_terms() const { return terms_.size(); }
  int degree() const;

  void add_term(const std::vector<int>& exps, const Int& coeff);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Int& k) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Int content() const;  // gcd of coefficients, nonnegative
  Rat eval(const std::vector<Rat>& point) const;
  Int eval_int(const std::vector<Int>& point) const;

  // Exact quotient by a degree-one form; nullopt when not divisible.
  std::optional<Poly> div_exact(const LinForm& l) const;

  std::string to_string() const;

 private:
  int nvars_ = 0;
  Terms terms_;
};

// Exact rational function: integer polynomial numerator over a positive
// integer scalar times a multiset of primitive degree-one forms. Normal form:
// no denominator form divides the numerator, and gcd(content(num), scalar) = 1.
class FactoredFraction {
 public:
  FactoredFraction() = default;
  explicit FactoredFraction(int nvars) : num_(Poly(nvars)), scalar_(1) {}

  static FactoredFraction zero(int nvars) { return FactoredFraction(nvars); }
  static FactoredFraction one(int nvars) { return of_int(nvars, 1); }
  static FactoredFraction of_int(int nvars, const Int& k);
  static FactoredFraction of_poly(Poly p);
  static FactoredFraction of_linform(const LinForm& l);
  static FactoredFraction inv_linform(const LinForm& l);  // throws on zero form

  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  const Poly& num() const { return num_; }
  const Int& den_scalar() const { return scalar_; }
  const std::map<LinForm, int>& den() const { return den_; }
  Poly den_expanded() const;

  FactoredFraction operator+(const FactoredFraction& o) const;
  FactoredFraction operator-(const FactoredFraction& o) const;
  FactoredFraction operator*(const FactoredFraction& o) const;
  FactoredFraction scaled(const Int& k) const;

  // Exact equality of values by cross-multiplied polynomial comparison.
  friend bool ff_equal(const FactoredFraction& a, const FactoredFraction& b);

  // Exact evaluation; throws precondition_error at a pole.
  Rat eval(const std::vector<Rat>& point) const;

  std::string to_string() const;
  std::string to_json() const;
  static FactoredFraction from_json(const std::string& text);

 private:
  Poly num_;
  Int scalar_ = 1;
  std::map<LinForm, int> den_;

  void normalize();
};

// Probabilistic pre-filter for equality: evaluates both sides at random
// non-pole points. Never a substitute for ff_equal.
bool ff_probably_equal(const FactoredFraction& a, const FactoredFraction& b,
                       unsigned seed = 0, int trials = 4);

}  // namespace bruhat
