#include "bruhat/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace bruhat {

ParabolicSet ParabolicSet::parse(const std::string& s, int rank) {
  std::string body = s;
  auto lb = body.find('{');
  if (lb != std::string::npos) {
    auto rb = body.find('}');
    if (rb == std::string::npos || rb < lb) throw parse_error("bad parabolic set: " + s);
    body = body.substr(lb + 1, rb - lb - 1);
  }
  ParabolicSet p;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    size_t b = tok.find_last_not_of(" \t");
    tok = tok.substr(a, b - a + 1);
    int idx;
    try {
      idx = std::stoi(tok);
    } catch (const std::exception&) {
      throw parse_error("bad parabolic set: " + s);
    }
    if (idx < 1 || idx > rank) throw parse_error("parabolic index out of range: " + s);
    p.mask |= 1u << (idx - 1);
  }
  return p;
}

ParabolicSet ParabolicSet::of_indices(const std::vector<int>& zero_based) {
  ParabolicSet p;
  for (int i : zero_based) p.mask |= 1u << i;
  return p;
}

std::vector<int> ParabolicSet::indices(int rank) const {
  std::vector<int> out;
  for (int i = 0; i < rank; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string ParabolicSet::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) {
      if (!first) os << ",";
      os << (i + 1);
      first = false;
    }
  os << "}";
  return os.str();
}

WeylElt WeylElt::identity(const RootSystem& rs) {
  WeylElt w;
  w.rs_ = &rs;
  w.rho_ = rs.rho();
  return w;
}

WeylElt WeylElt::simple(const RootSystem& rs, int i) { return from_word(rs, {i}); }

WeylElt WeylElt::from_rho_image(const RootSystem& rs, const WeightVec& mu) {
  WeylElt w;
  w.rs_ = &rs;
  w.rho_ = mu;
  // Walk back to rho by smallest left descents; this both validates mu and
  // produces the canonical reduced word.
  WeightVec cur = mu;
  std::vector<int> rev;
  const WeightVec rho = rs.rho();
  while (cur != rho) {
    int i = -1;
    for (int k = 0; k < rs.rank(); ++k)
      if (cur.c[k] < 0) { i = k; break; }
    check_internal(i >= 0, "not a rho image: " + bruhat::to_string(mu));
    rev.push_back(i);
    cur = rs.simple_reflect(i, cur);
    check_internal(rev.size() <= 1u << 24, "rho walk does not terminate");
  }
  w.word_ = std::move(rev);
  return w;
}

WeylElt WeylElt::from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeightVec mu = rs.rho();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rs.rank()) throw parse_error("word letter out of range");
    mu = rs.simple_reflect(*it, mu);
  }
  return from_rho_image(rs, mu);
}

WeylElt WeylElt::operator*(const WeylElt& o) const {
  check_internal(rs_ == o.rs_, "mixing root systems");
  WeightVec mu = o.rho_;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) mu = rs_->simple_reflect(*it, mu);
  return from_rho_image(*rs_, mu);
}

WeylElt WeylElt::inverse() const {
  WeightVec mu = rs_->rho();
  for (int i : word_) mu = rs_->simple_reflect(i, mu);
  return from_rho_image(*rs_, mu);
}

RootVec WeylElt::act(const RootVec& x) const {
  RootVec r = x;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) r = rs_->simple_reflect(*it, r);
  return r;
}

WeightVec WeylElt::act(const WeightVec& x) const {
  WeightVec r = x;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) r = rs_->simple_reflect(*it, r);
  return r;
}

bool WeylElt::right_descent(int i) const {
  // l(w s_i) < l(w) iff w(alpha_i) < 0 iff <rho, w(alpha_i)^vee>... cheapest via
  // action on alpha_i.
  std::vector<int> a(rs_->rank(), 0);
  a[i] = 1;
  return is_negative(act(RootVec(a)));
}

std::string WeylElt::to_string() const {
  if (word_.empty()) return "id";
  std::ostringstream os;
  for (size_t k = 0; k < word_.size(); ++k) {
    if (k) os << " ";
    os << (word_[k] + 1);
  }
  return os.str();
}

std::vector<int> parse_word(const std::string& s, int rank) {
  std::vector<int> w;
  std::stringstream ss(s);
  std::string tok;
  while (ss >> tok) {
    if (tok == "id" || tok == "e") continue;
    int v;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      throw parse_error("bad word: " + s);
    }
    if (v < 1 || v > rank) throw parse_error("word letter out of range: " + s);
    w.push_back(v - 1);
  }
  return w;
}

bool bruhat_leq(const WeylElt& v, const WeylElt& w) {
  check_internal(&v.system() == &w.system(), "mixing root systems");
  if (v.length() > w.length()) return false;
  if (v.is_identity()) return true;
  if (w.is_identity()) return false;
  // Lifting property along the first left descent of w.
  const RootSystem& rs = v.system();
  int i = w.word()[0];
  WeylElt sw = WeylElt::from_rho_image(rs, rs.simple_reflect(i, w.rho_image()));
  if (v.left_descent(i)) {
    WeylElt sv = WeylElt::from_rho_image(rs, rs.simple_reflect(i, v.rho_image()));
    return bruhat_leq(sv, sw);
  }
  return bruhat_leq(v, sw);
}

WeylElt min_coset_rep(const WeylElt& w, ParabolicSet P) {
  const RootSystem& rs = w.system();
  WeylElt cur = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (!P.contains(i)) continue;
      std::vector<int> a(rs.rank(), 0);
      a[i] = 1;
      if (is_negative(cur.act(RootVec(a)))) {
        cur = cur * WeylElt::simple(rs, i);
        moved = true;
      }
    }
  }
  return cur;
}

bool is_min_coset_rep(const WeylElt& w, ParabolicSet P) {
  const RootSystem& rs = w.system();
  for (int i = 0; i < rs.rank(); ++i) {
    if (!P.contains(i)) continue;
    std::vector<int> a(rs.rank(), 0);
    a[i] = 1;
    if (!is_positive(w.act(RootVec(a)))) return false;
  }
  return true;
}

namespace {

// Positive roots outside R_P^+, i.e. with some coefficient off Delta_P.
std::vector<int> parabolic_complement(const RootSystem& rs, ParabolicSet P) {
  std::vector<int> out;
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    const RootVec& r = rs.positive_root(k);
    bool outside = false;
    for (int i = 0; i < rs.rank(); ++i)
      if (r.c[i] != 0 && !P.contains(i)) { outside = true; break; }
    if (outside) out.push_back(k);
  }
  return out;
}

}  // namespace

std::vector<WeylElt> interval(const WeylElt& v, const WeylElt& w, ParabolicSet P) {
  const RootSystem& rs = v.system();
  if (!is_min_coset_rep(v, P) || !is_min_coset_rep(w, P))
    throw precondition_error("interval endpoints must be minimal coset representatives");
  if (!bruhat_leq(v, w)) throw precondition_error("empty interval: v is not below w");
  std::vector<int> comp = parabolic_complement(rs, P);
  // Downward reflection reachability from w collects everything below it in W^P.
  std::map<WeightVec, WeylElt> seen;
  std::deque<WeylElt> work{w};
  seen.emplace(w.rho_image(), w);
  while (!work.empty()) {
    WeylElt x = work.front();
    work.pop_front();
    for (int k : comp) {
      const RootVec& gamma = rs.positive_root(k);
      if (!is_negative(x.act(gamma))) continue;
      WeylElt y = min_coset_rep(x * reflection(rs, gamma), P);
      if (seen.emplace(y.rho_image(), y).second) work.push_back(y);
    }
  }
  std::vector<WeylElt> out;
  for (auto& [mu, x] : seen)
    if (bruhat_leq(v, x)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootVec> inversion_reflections(const WeylElt& w) {
  const RootSystem& rs = w.system();
  WeylElt winv = w.inverse();
  std::vector<RootVec> out;
  for (int k = 0; k < rs.num_positive_roots(); ++k)
    if (is_negative(winv.act(rs.positive_root(k)))) out.push_back(rs.positive_root(k));
  check_internal(static_cast<int>(out.size()) == w.length(), "inversion count != length");
  return out;
}

std::vector<RootVec> skew_set(const WeylElt& v, const WeylElt& w, ParabolicSet P) {
  const RootSystem& rs = v.system();
  if (!bruhat_leq(v, w)) throw precondition_error("skew set requires v <= w");
  std::vector<RootVec> out;
  for (int k : parabolic_complement(rs, P)) {
    const RootVec& alpha = rs.positive_root(k);
    RootVec img = w.act(alpha);
    if (!is_negative(img)) continue;
    WeylElt y = min_coset_rep(w * reflection(rs, alpha), P);
    if (bruhat_leq(v, y)) out.push_back(-img);
  }
  std::sort(out.begin(), out.end(), [](const RootVec& a, const RootVec& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a.c < b.c;
  });
  return out;
}

WeylElt reflection(const RootSystem& rs, const RootVec& beta) {
  const CorootVec& bv = rs.coroot_of(beta);
  WeightVec mu = rs.rho();
  long long p = rs.pairing(mu, bv);
  WeightVec bw = rs.to_weight(beta);
  for (int j = 0; j < rs.rank(); ++j) mu.c[j] -= static_cast<int>(p) * bw.c[j];
  return WeylElt::from_rho_image(rs, mu);
}

namespace {

void reduced_words_rec(const WeylElt& w, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  const RootSystem& rs = w.system();
  for (int i = 0; i < rs.rank(); ++i) {
    if (!w.left_descent(i)) continue;
    prefix.push_back(i);
    reduced_words_rec(WeylElt::from_rho_image(rs, rs.simple_reflect(i, w.rho_image())), prefix, out);
    prefix.pop_back();
  }
}

Int count_reduced_words_rec(const WeylElt& w, std::map<WeightVec, Int>& memo) {
  if (w.is_identity()) return 1;
  auto it = memo.find(w.rho_image());
  if (it != memo.end()) return it->second;
  const RootSystem& rs = w.system();
  Int total = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    if (!w.left_descent(i)) continue;
    total += count_reduced_words_rec(
        WeylElt::from_rho_image(rs, rs.simple_reflect(i, w.rho_image())), memo);
  }
  memo.emplace(w.rho_image(), total);
  return total;
}

}  // namespace

std::vector<std::vector<int>> reduced_words(const WeylElt& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  reduced_words_rec(w, prefix, out);
  return out;
}

Int count_reduced_words(const WeylElt& w) {
  std::map<WeightVec, Int> memo;
  return count_reduced_words_rec(w, memo);
}

bool is_pi_minuscule(const WeylElt& w, const WeightVec& pi) {
  const RootSystem& rs = w.system();
  WeightVec mu = pi;
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (mu.c[*it] != 1) return false;  // <mu, alpha_i^vee> must be 1
    mu = rs.simple_reflect(*it, mu);
  }
  return true;
}

bool is_predominant(const RootSystem& rs, const WeightVec& lambda) {
  for (int k = 0; k < rs.num_positive_roots(); ++k)
    if (rs.pairing(lambda, rs.coroot(k)) < -1) return false;
  return true;
}

std::vector<RootVec> diagram_D(const RootSystem& rs, const WeightVec& lambda) {
  std::vector<RootVec> out;
  for (int k = 0; k < rs.num_positive_roots(); ++k)
    if (rs.pairing(lambda, rs.coroot(k)) == -1) out.push_back(rs.positive_root(k));
  return out;
}

namespace {

void lambda_paths_rec(const RootSystem& rs, const WeightVec& lam, int remaining,
                      std::vector<RootVec>& steps, std::vector<LambdaPath>& out) {
  out.push_back(LambdaPath{steps});
  if (remaining == 0) return;
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    if (rs.pairing(lam, rs.coroot(k)) != -1) continue;
    const RootVec& beta = rs.positive_root(k);
    WeightVec next = lam + rs.to_weight(beta);  // s_beta(lam) = lam + beta here
    steps.push_back(beta);
    lambda_paths_rec(rs, next, remaining - 1, steps, out);
    steps.pop_back();
  }
}

}  // namespace

std::vector<LambdaPath> lambda_paths(const RootSystem& rs, const WeightVec& lambda, int max_len) {
  if (!is_predominant(rs, lambda))
    throw precondition_error("lambda is not pre-dominant: " + to_string(lambda));
  int bound = static_cast<int>(diagram_D(rs, lambda).size());
  if (max_len >= 0 && max_len < bound) bound = max_len;
  std::vector<LambdaPath> out;
  std::vector<RootVec> steps;
  lambda_paths_rec(rs, lambda, bound, steps, out);
  return out;
}

std::pair<WeightVec, WeylElt> mpath_to_minuscule(const RootSystem& rs, const WeightVec& lambda) {
  if (!is_predominant(rs, lambda))
    throw precondition_error("lambda is not pre-dominant: " + to_string(lambda));
  // A maximal path uses only simple roots; greedily take the first available.
  WeightVec cur = lambda;
  std::vector<int> word;
  size_t d = diagram_D(rs, lambda).size();
  for (size_t step = 0; step < d; ++step) {
    int i = -1;
    for (int k = 0; k < rs.rank(); ++k)
      if (cur.c[k] == -1) { i = k; break; }
    check_internal(i >= 0, "maximal path stalled before |D(lambda)| steps");
    word.push_back(i);
    cur = rs.simple_reflect(i, cur);
  }
  check_internal(is_dominant(cur), "maximal path did not end dominant");
  WeylElt w = WeylElt::from_word(rs, word);
  check_internal(w.length() == static_cast<int>(d), "maximal path word not reduced");
  return {cur, w};
}

ParabolicSet stabilizer_parabolic(const RootSystem& rs, const WeightVec& pi) {
  ParabolicSet P;
  for (int i = 0; i < rs.rank(); ++i)
    if (pi.c[i] == 0) P.mask |= 1u << i;
  return P;
}

bool weak_strong_interval_check(const WeylElt& u, const WeylElt& w, const WeightVec& pi) {
  ParabolicSet P = stabilizer_parabolic(u.system(), pi);
  if (!is_min_coset_rep(u, P) || !is_min_coset_rep(w, P)) return false;
  if (!bruhat_leq(u, w)) return false;
  WeylElt uinv = u.inverse();
  for (const WeylElt& x : interval(u, w, P)) {
    // u <=_L x <=_L w in the left weak order.
    if ((x * uinv).length() != x.length() - u.length()) return false;
    if ((w * x.inverse()).length() != w.length() - x.length()) return false;
  }
  return true;
}

std::vector<WeylElt> all_elements(const RootSystem& rs, size_t cap) {
  std::map<WeightVec, WeylElt> seen;
  std::deque<WeylElt> work;
  WeylElt e = WeylElt::identity(rs);
  seen.emplace(e.rho_image(), e);
  work.push_back(e);
  while (!work.empty()) {
    WeylElt x = work.front();
    work.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      WeylElt y = x * WeylElt::simple(rs, i);
      if (seen.size() >= cap && !seen.count(y.rho_image()))
        throw precondition_error("group too large to enumerate: " + rs.name());
      if (seen.emplace(y.rho_image(), y).second) work.push_back(y);
    }
  }
  std::vector<WeylElt> out;
  for (auto& [mu, x] : seen) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeylElt> min_reps(const RootSystem& rs, ParabolicSet P, size_t cap) {
  std::vector<WeylElt> out;
  for (const WeylElt& x : all_elements(rs, cap))
    if (is_min_coset_rep(x, P)) out.push_back(x);
  return out;
}

std::vector<WeylElt> pi_minuscule_elements(const RootSystem& rs, const WeightVec& pi) {
  if (!is_dominant(pi)) throw precondition_error("pi must be dominant");
  // Grow words on the left: s_i w is pi-minuscule when <w(pi), alpha_i^vee> = 1.
  std::map<WeightVec, std::pair<WeylElt, WeightVec>> seen;  // rho image -> (w, w(pi))
  std::deque<WeylElt> work;
  WeylElt e = WeylElt::identity(rs);
  seen.emplace(e.rho_image(), std::make_pair(e, pi));
  work.push_back(e);
  while (!work.empty()) {
    WeylElt x = work.front();
    work.pop_front();
    WeightVec xpi = seen.at(x.rho_image()).second;
    for (int i = 0; i < rs.rank(); ++i) {
      if (xpi.c[i] != 1) continue;
      WeylElt y = WeylElt::simple(rs, i) * x;
      check_internal(y.length() == x.length() + 1, "minuscule growth must ascend");
      if (seen.emplace(y.rho_image(), std::make_pair(y, rs.simple_reflect(i, xpi))).second)
        work.push_back(y);
    }
  }
  std::vector<WeylElt> out;
  for (auto& [mu, p] : seen) out.push_back(p.first);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bruhat
