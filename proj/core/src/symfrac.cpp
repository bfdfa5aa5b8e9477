#include "bruhat/symfrac.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace bruhat {

using json = nlohmann::json;

bool LinForm::is_zero() const {
  if (constant != 0) return false;
  return std::all_of(coeffs.begin(), coeffs.end(), [](int x) { return x == 0; });
}

bool LinForm::is_constant() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int x) { return x == 0; });
}

std::string LinForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (constant != 0) {
    os << constant;
    first = false;
  }
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (coeffs[i] > 0 && !first) os << "+";
    if (coeffs[i] == -1) os << "-";
    else if (coeffs[i] != 1) os << coeffs[i];
    os << "a" << (i + 1);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

Poly Poly::constant(int nvars, Int c) {
  Poly p(nvars);
  if (c != 0) p.terms_.emplace(std::vector<int>(nvars, 0), std::move(c));
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.terms_.emplace(std::move(e), 1);
  return p;
}

Poly Poly::from_linform(const LinForm& l) {
  Poly p(l.nvars());
  if (l.constant != 0) p.terms_.emplace(std::vector<int>(l.nvars(), 0), l.constant);
  for (int i = 0; i < l.nvars(); ++i) {
    if (l.coeffs[i] == 0) continue;
    std::vector<int> e(l.nvars(), 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), l.coeffs[i]);
  }
  return p;
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void Poly::add_term(const std::vector<int>& exps, const Int& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  check_internal(nvars_ == o.nvars_, "poly nvars mismatch");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_internal(nvars_ == o.nvars_, "poly nvars mismatch");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_internal(nvars_ == o.nvars_, "poly nvars mismatch");
  Poly r(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::operator*(const Int& k) const {
  Poly r(nvars_);
  if (k == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
  return r;
}

Int Poly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g < 0 ? Int(-g) : g;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  check_internal(static_cast<int>(point.size()) == nvars_, "eval point rank mismatch");
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

Int Poly::eval_int(const std::vector<Int>& point) const {
  check_internal(static_cast<int>(point.size()) == nvars_, "eval point rank mismatch");
  Int total = 0;
  for (const auto& [e, c] : terms_) {
    Int t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

std::optional<Poly> Poly::div_exact(const LinForm& l) const {
  check_internal(!l.is_zero(), "division by zero form");
  if (is_zero()) return Poly(nvars_);
  if (l.is_constant()) {
    Poly q(nvars_);
    for (const auto& [e, c] : terms_) {
      if (c % l.constant != 0) return std::nullopt;
      q.add_term(e, c / l.constant);
    }
    return q;
  }
  // Pivot on the first variable of l; its monomial is lex-largest among the
  // terms of l, so plain division by a single divisor applies.
  int pivot = 0;
  while (l.coeffs[pivot] == 0) ++pivot;
  const Int lc = l.coeffs[pivot];
  std::map<std::vector<int>, Rat> rem;
  for (const auto& [e, c] : terms_) rem.emplace(e, Rat(c));
  std::map<std::vector<int>, Rat> quot;
  while (!rem.empty()) {
    auto lead = std::prev(rem.end());
    std::vector<int> m = lead->first;
    Rat c = lead->second;
    if (m[pivot] == 0) return std::nullopt;  // nonzero remainder
    m[pivot] -= 1;
    Rat qc = c / Rat(lc);
    quot[m] += qc;
    if (quot[m] == 0) quot.erase(m);
    // Subtract qc * m * l from the remainder.
    rem.erase(lead);
    if (l.constant != 0) {
      auto& slot = rem[m];
      slot -= qc * l.constant;
      if (slot == 0) rem.erase(m);
    }
    std::vector<int> e = m;
    for (int i = 0; i < nvars_; ++i) {
      if (l.coeffs[i] == 0 || i == pivot) continue;
      e[i] += 1;
      auto& slot = rem[e];
      slot -= qc * l.coeffs[i];
      if (slot == 0) rem.erase(e);
      e[i] -= 1;
    }
  }
  Poly q(nvars_);
  for (const auto& [e, c] : quot) {
    if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
    q.add_term(e, boost::multiprecision::numerator(c));
  }
  return q;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Leading variables first reads naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = c;
    if (!first) os << (a > 0 ? "+" : "-");
    else if (a < 0) os << "-";
    if (a < 0) a = -a;
    bool mono = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
    if (a != 1 || !mono) os << a.str();
    bool star = false;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      os << "a" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      star = true;
    }
    first = false;
  }
  return os.str();
}

namespace {

// Splits l as sign * content * primitive with positive leading coefficient.
struct NormalizedForm {
  LinForm primitive;
  Int content;  // > 0
  int sign;     // +1 or -1
};

NormalizedForm normalize_linform(const LinForm& l) {
  check_internal(!l.is_zero(), "zero linear form");
  long long g = std::abs(static_cast<long long>(l.constant));
  for (int c : l.coeffs) g = std::gcd(g, std::abs(static_cast<long long>(c)));
  int lead = l.constant;
  if (lead == 0)
    for (int c : l.coeffs)
      if (c != 0) { lead = c; break; }
  int sign = lead > 0 ? 1 : -1;
  LinForm prim = l;
  prim.constant = static_cast<int>(sign * l.constant / g);
  for (auto& c : prim.coeffs) c = static_cast<int>(sign * c / g);
  return {prim, Int(g), sign};
}

}  // namespace

FactoredFraction FactoredFraction::of_int(int nvars, const Int& k) {
  FactoredFraction f(nvars);
  f.num_ = Poly::constant(nvars, k);
  return f;
}

FactoredFraction FactoredFraction::of_poly(Poly p) {
  FactoredFraction f(p.nvars());
  f.num_ = std::move(p);
  f.normalize();
  return f;
}

FactoredFraction FactoredFraction::of_linform(const LinForm& l) {
  return of_poly(Poly::from_linform(l));
}

FactoredFraction FactoredFraction::inv_linform(const LinForm& l) {
  if (l.is_zero()) throw precondition_error("cannot invert the zero form");
  auto nf = normalize_linform(l);
  FactoredFraction f(l.nvars());
  f.num_ = Poly::constant(l.nvars(), nf.sign);
  f.scalar_ = nf.content;
  if (nf.primitive.is_constant()) {
    // Content already captured the constant; primitive constant is 1.
    check_internal(nf.primitive.constant == 1, "constant form normalization");
  } else {
    f.den_[nf.primitive] = 1;
  }
  f.normalize();
  return f;
}

Poly FactoredFraction::den_expanded() const {
  Poly d = Poly::constant(nvars(), scalar_);
  for (const auto& [l, e] : den_)
    for (int k = 0; k < e; ++k) d = d * Poly::from_linform(l);
  return d;
}

void FactoredFraction::normalize() {
  if (num_.is_zero()) {
    scalar_ = 1;
    den_.clear();
    return;
  }
  // Cancel denominator factors into the numerator by exact trial division.
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = num_.div_exact(it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    if (it->second == 0) it = den_.erase(it);
    else ++it;
  }
  Int g = boost::multiprecision::gcd(num_.content(), scalar_);
  if (g > 1) {
    Poly reduced(nvars());
    for (const auto& [e, c] : num_.terms()) reduced.add_term(e, c / g);
    num_ = std::move(reduced);
    scalar_ /= g;
  }
  check_internal(scalar_ > 0, "scalar positivity");
}

FactoredFraction FactoredFraction::operator+(const FactoredFraction& o) const {
  check_internal(nvars() == o.nvars(), "ff nvars mismatch");
  FactoredFraction r(nvars());
  Int g = boost::multiprecision::gcd(scalar_, o.scalar_);
  Int lcm = scalar_ / g * o.scalar_;
  std::map<LinForm, int> den;
  for (const auto& [l, e] : den_) den[l] = e;
  for (const auto& [l, e] : o.den_) den[l] = std::max(den[l], e);
  Poly na = num_ * (lcm / scalar_);
  Poly nb = o.num_ * (lcm / o.scalar_);
  for (const auto& [l, e] : den) {
    auto ita = den_.find(l);
    int ea = ita == den_.end() ? 0 : ita->second;
    auto itb = o.den_.find(l);
    int eb = itb == o.den_.end() ? 0 : itb->second;
    for (int k = ea; k < e; ++k) na = na * Poly::from_linform(l);
    for (int k = eb; k < e; ++k) nb = nb * Poly::from_linform(l);
  }
  r.num_ = na + nb;
  r.scalar_ = lcm;
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

FactoredFraction FactoredFraction::operator-(const FactoredFraction& o) const {
  return *this + o.scaled(-1);
}

FactoredFraction FactoredFraction::operator*(const FactoredFraction& o) const {
  check_internal(nvars() == o.nvars(), "ff nvars mismatch");
  FactoredFraction r(nvars());
  r.num_ = num_ * o.num_;
  r.scalar_ = scalar_ * o.scalar_;
  r.den_ = den_;
  for (const auto& [l, e] : o.den_) r.den_[l] += e;
  r.normalize();
  return r;
}

FactoredFraction FactoredFraction::scaled(const Int& k) const {
  FactoredFraction r = *this;
  r.num_ = r.num_ * k;
  r.normalize();
  return r;
}

bool ff_equal(const FactoredFraction& a, const FactoredFraction& b) {
  check_internal(a.nvars() == b.nvars(), "ff nvars mismatch");
  return a.num_ * b.den_expanded() == b.num_ * a.den_expanded();
}

Rat FactoredFraction::eval(const std::vector<Rat>& point) const {
  Rat n = num_.eval(point);
  Rat d = scalar_;
  for (const auto& [l, e] : den_) {
    Rat v = Poly::from_linform(l).eval(point);
    if (v == 0) throw precondition_error("pole at evaluation point: " + l.to_string());
    for (int k = 0; k < e; ++k) d *= v;
  }
  return n / d;
}

std::string FactoredFraction::to_string() const {
  std::ostringstream os;
  bool paren = num_.num_terms() > 1 && (scalar_ != 1 || !den_.empty());
  if (paren) os << "(" << num_.to_string() << ")";
  else os << num_.to_string();
  if (scalar_ == 1 && den_.empty()) return os.str();
  os << " / ";
  bool first = true;
  if (scalar_ != 1) {
    os << scalar_.str();
    first = false;
  }
  for (const auto& [l, e] : den_) {
    if (!first) os << " ";
    os << "(" << l.to_string() << ")";
    if (e > 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

std::string FactoredFraction::to_json() const {
  json j;
  j["nvars"] = nvars();
  json terms = json::array();
  for (const auto& [e, c] : num_.terms()) {
    json t;
    t["exps"] = e;
    t["coeff"] = c.str();
    terms.push_back(t);
  }
  j["num"] = terms;
  j["den_scalar"] = scalar_.str();
  json den = json::array();
  for (const auto& [l, e] : den_) {
    json d;
    d["constant"] = l.constant;
    d["coeffs"] = l.coeffs;
    d["power"] = e;
    den.push_back(d);
  }
  j["den"] = den;
  j["text"] = to_string();
  return j.dump();
}

FactoredFraction FactoredFraction::from_json(const std::string& text) {
  json j = json::parse(text);
  int nvars = j.at("nvars").get<int>();
  FactoredFraction f(nvars);
  Poly num(nvars);
  for (const auto& t : j.at("num")) {
    num.add_term(t.at("exps").get<std::vector<int>>(), Int(t.at("coeff").get<std::string>()));
  }
  f.num_ = std::move(num);
  f.scalar_ = Int(j.at("den_scalar").get<std::string>());
  for (const auto& d : j.at("den")) {
    LinForm l(d.at("constant").get<int>(), d.at("coeffs").get<std::vector<int>>());
    f.den_[l] = d.at("power").get<int>();
  }
  f.normalize();
  return f;
}

bool ff_probably_equal(const FactoredFraction& a, const FactoredFraction& b, unsigned seed,
                       int trials) {
  std::mt19937 rng(seed ? seed : 0x5eed);
  std::uniform_int_distribution<int> dist(2, 97);
  for (int t = 0; t < trials; ++t) {
    std::vector<Rat> pt(a.nvars());
    for (auto& x : pt) x = Rat(dist(rng), dist(rng));
    try {
      if (a.eval(pt) != b.eval(pt)) return false;
    } catch (const precondition_error&) {
      --t;  // hit a pole, resample
      continue;
    }
  }
  return true;
}

}  // namespace bruhat
