#include "bruhat/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "bruhat/bigint.hpp"

namespace bruhat {

Int factorial(int n) {
  Int r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

bool RootVec::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

RootVec RootVec::operator+(const RootVec& o) const {
  RootVec r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

RootVec RootVec::operator-(const RootVec& o) const {
  RootVec r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

RootVec RootVec::operator-() const {
  RootVec r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

CorootVec CorootVec::operator-() const {
  CorootVec r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

bool WeightVec::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

WeightVec WeightVec::operator+(const WeightVec& o) const {
  WeightVec r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

WeightVec WeightVec::operator-(const WeightVec& o) const {
  WeightVec r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

int height(const RootVec& r) { return std::accumulate(r.c.begin(), r.c.end(), 0); }

bool is_positive(const RootVec& r) {
  return !r.is_zero() && std::all_of(r.c.begin(), r.c.end(), [](int x) { return x >= 0; });
}

bool is_negative(const RootVec& r) {
  return !r.is_zero() && std::all_of(r.c.begin(), r.c.end(), [](int x) { return x <= 0; });
}

bool is_dominant(const WeightVec& w) {
  return std::all_of(w.c.begin(), w.c.end(), [](int x) { return x >= 0; });
}

namespace {

std::vector<std::vector<int>> chain_matrix(int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

}  // namespace

CartanDatum build_cartan(char series, int rank) {
  auto bad = [&] {
    std::ostringstream os;
    os << "invalid Dynkin type " << series << rank;
    throw parse_error(os.str());
  };
  CartanDatum cd;
  cd.series = series;
  cd.rank = rank;
  switch (series) {
    case 'A':
      if (rank < 1) bad();
      cd.cartan = chain_matrix(rank);
      break;
    case 'B':
      // alpha_rank short: <alpha_{n-1}, alpha_n^vee> = -2.
      if (rank < 2) bad();
      cd.cartan = chain_matrix(rank);
      cd.cartan[rank - 1][rank - 2] = -2;
      break;
    case 'C':
      // alpha_rank long: <alpha_n, alpha_{n-1}^vee> = -2.
      if (rank < 3) bad();
      cd.cartan = chain_matrix(rank);
      cd.cartan[rank - 2][rank - 1] = -2;
      break;
    case 'D':
      if (rank < 4) bad();
      cd.cartan = chain_matrix(rank - 1);
      cd.cartan.resize(rank);
      for (auto& row : cd.cartan) row.resize(rank, 0);
      cd.cartan[rank - 1][rank - 1] = 2;
      cd.cartan[rank - 1][rank - 3] = cd.cartan[rank - 3][rank - 1] = -1;
      break;
    case 'E': {
      if (rank < 6 || rank > 8) bad();
      // chain 1-3-4-5-...-rank, with node 2 attached to 4.
      cd.cartan.assign(rank, std::vector<int>(rank, 0));
      for (int i = 0; i < rank; ++i) cd.cartan[i][i] = 2;
      auto link = [&](int i, int j) { cd.cartan[i - 1][j - 1] = cd.cartan[j - 1][i - 1] = -1; };
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < rank; ++i) link(i, i + 1);
      break;
    }
    case 'F':
      // alpha_1, alpha_2 short: <alpha_3, alpha_2^vee> = -2.
      if (rank != 4) bad();
      cd.cartan = chain_matrix(4);
      cd.cartan[1][2] = -2;
      break;
    case 'G':
      // alpha_1 short: <alpha_2, alpha_1^vee> = -3.
      if (rank != 2) bad();
      cd.cartan = chain_matrix(2);
      cd.cartan[0][1] = -3;
      break;
    default:
      bad();
  }
  return cd;
}

CartanDatum build_cartan(const std::string& name) {
  if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0])))
    throw parse_error("bad root system name: " + name);
  char series = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  int rank = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw parse_error("bad root system name: " + name);
    rank = rank * 10 + (name[i] - '0');
  }
  if (rank <= 0 || rank > 16) throw parse_error("unsupported rank in: " + name);
  return build_cartan(series, rank);
}

RootSystem::RootSystem(CartanDatum cd) : cd_(std::move(cd)) {
  const int n = cd_.rank;
  check_internal(static_cast<int>(cd_.cartan.size()) == n, "cartan size");
  for (int i = 0; i < n; ++i) {
    check_internal(cd_.cartan[i][i] == 2, "cartan diagonal");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int v = cd_.cartan[i][j];
      check_internal(v <= 0 && v >= -3, "cartan off-diagonal range");
      check_internal((v == 0) == (cd_.cartan[j][i] == 0), "cartan zero pattern");
      if (v < -1) simply_laced_ = false;
    }
  }
  generate_roots();

  // Adjugate and determinant of the Cartan matrix, for weight -> root conversion.
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = cd_.cartan[i][j];
    inv[i][i] = 1;
  }
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) { piv = r; break; }
    check_internal(piv >= 0, "cartan matrix singular");
    if (piv != col) {
      std::swap(m[piv], m[col]);
      std::swap(inv[piv], inv[col]);
      det = -det;
    }
    det *= m[col][col];
    Rat p = m[col][col];
    for (int j = 0; j < n; ++j) { m[col][j] /= p; inv[col][j] /= p; }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = 0; j < n; ++j) { m[r][j] -= f * m[col][j]; inv[r][j] -= f * inv[col][j]; }
    }
  }
  check_internal(boost::multiprecision::denominator(det) == 1, "cartan det");
  det_ = static_cast<long long>(boost::multiprecision::numerator(det));
  adjugate_.assign(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat adj = inv[i][j] * det;
      check_internal(boost::multiprecision::denominator(adj) == 1, "adjugate integrality");
      adjugate_[i][j] = static_cast<long long>(boost::multiprecision::numerator(adj));
    }
}

RootSystem RootSystem::from_name(const std::string& name) { return RootSystem(build_cartan(name)); }

std::string RootSystem::name() const { return std::string(1, cd_.series) + std::to_string(cd_.rank); }

void RootSystem::generate_roots() {
  const int n = cd_.rank;
  std::map<std::vector<int>, CorootVec> seen;
  std::vector<RootVec> work;
  for (int i = 0; i < n; ++i) {
    std::vector<int> r(n, 0), cv(n, 0);
    r[i] = 1;
    cv[i] = 1;
    seen.emplace(r, CorootVec(cv));
    work.push_back(RootVec(r));
  }
  // Closure of the simple roots under simple reflections, coroots in lockstep.
  while (!work.empty()) {
    RootVec beta = work.back();
    work.pop_back();
    CorootVec bv = seen.at(beta.c);
    for (int i = 0; i < n; ++i) {
      RootVec img = simple_reflect(i, beta);
      if (!is_positive(img)) continue;
      auto [it, inserted] = seen.emplace(img.c, simple_reflect(i, bv));
      if (inserted) {
        work.push_back(img);
      } else {
        check_internal(it->second == simple_reflect(i, bv), "coroot closure mismatch");
      }
    }
  }
  for (auto& [r, cv] : seen) {
    roots_.push_back(RootVec(r));
    coroots_.push_back(cv);
  }
  std::vector<int> order(roots_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    int hx = height(roots_[x]), hy = height(roots_[y]);
    if (hx != hy) return hx < hy;
    return roots_[x].c > roots_[y].c;  // a1 before a2 within a height level
  });
  std::vector<RootVec> rs;
  std::vector<CorootVec> cs;
  for (int k : order) {
    rs.push_back(roots_[k]);
    cs.push_back(coroots_[k]);
  }
  roots_ = std::move(rs);
  coroots_ = std::move(cs);
}

int RootSystem::root_index(const RootVec& r) const {
  for (int k = 0; k < num_positive_roots(); ++k)
    if (roots_[k] == r) return k;
  return -1;
}

bool RootSystem::is_root(const RootVec& r) const {
  if (is_positive(r)) return root_index(r) >= 0;
  if (is_negative(r)) return root_index(-r) >= 0;
  return false;
}

const CorootVec& RootSystem::coroot_of(const RootVec& beta) const {
  int k = root_index(beta);
  if (k < 0) throw precondition_error("not a positive root: " + to_string(beta));
  return coroots_[k];
}

WeightVec RootSystem::rho() const { return WeightVec(std::vector<int>(cd_.rank, 1)); }

WeightVec RootSystem::alpha_in_weights(int j) const {
  std::vector<int> w(cd_.rank);
  for (int i = 0; i < cd_.rank; ++i) w[i] = cd_.cartan[i][j];
  return WeightVec(w);
}

WeightVec RootSystem::to_weight(const RootVec& r) const {
  std::vector<int> w(cd_.rank, 0);
  for (int i = 0; i < cd_.rank; ++i)
    for (int j = 0; j < cd_.rank; ++j) w[i] += cd_.cartan[i][j] * r.c[j];
  return WeightVec(w);
}

RootVec RootSystem::to_root(const WeightVec& w) const {
  const int n = cd_.rank;
  std::vector<int> r(n);
  for (int j = 0; j < n; ++j) {
    long long s = 0;
    for (int i = 0; i < n; ++i) s += adjugate_[j][i] * w.c[i];
    if (s % det_ != 0)
      throw precondition_error("weight not in the root lattice: " + to_string(w));
    r[j] = static_cast<int>(s / det_);
  }
  return RootVec(r);
}

long long RootSystem::pairing(const WeightVec& lam, const CorootVec& cv) const {
  if (lam.rank() != cv.rank()) throw precondition_error("rank mismatch in pairing");
  long long s = 0;
  for (int i = 0; i < lam.rank(); ++i) s += static_cast<long long>(lam.c[i]) * cv.c[i];
  return s;
}

long long RootSystem::pairing(const RootVec& r, const CorootVec& cv) const {
  return pairing(to_weight(r), cv);
}

RootVec RootSystem::simple_reflect(int i, const RootVec& x) const {
  RootVec r = x;
  long long p = 0;
  for (int j = 0; j < cd_.rank; ++j) p += static_cast<long long>(cd_.cartan[i][j]) * x.c[j];
  r.c[i] -= static_cast<int>(p);
  return r;
}

WeightVec RootSystem::simple_reflect(int i, const WeightVec& x) const {
  WeightVec w = x;
  int p = x.c[i];  // <x, alpha_i^vee>
  for (int k = 0; k < cd_.rank; ++k) w.c[k] -= p * cd_.cartan[k][i];
  return w;
}

CorootVec RootSystem::simple_reflect(int i, const CorootVec& x) const {
  CorootVec v = x;
  long long p = 0;  // <alpha_i, x>
  for (int k = 0; k < cd_.rank; ++k) p += static_cast<long long>(cd_.cartan[k][i]) * x.c[k];
  v.c[i] -= static_cast<int>(p);
  return v;
}

RootVec RootSystem::reflect(const RootVec& x, const RootVec& beta) const {
  const CorootVec& bv = coroot_of(beta);
  long long p = pairing(x, bv);
  RootVec r = x;
  for (int j = 0; j < cd_.rank; ++j) r.c[j] -= static_cast<int>(p) * beta.c[j];
  return r;
}

WeightVec RootSystem::reflect(const WeightVec& x, const RootVec& beta) const {
  const CorootVec& bv = coroot_of(beta);
  long long p = pairing(x, bv);
  WeightVec bw = to_weight(beta);
  WeightVec r = x;
  for (int j = 0; j < cd_.rank; ++j) r.c[j] -= static_cast<int>(p) * bw.c[j];
  return r;
}

namespace {

std::string vec_to_string(const std::vector<int>& c, char var) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (c[i] > 0 && !first) os << "+";
    if (c[i] == -1) os << "-";
    else if (c[i] != 1) os << c[i];
    os << var << (i + 1);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::vector<int> parse_linear(const std::string& s, char var, int rank) {
  std::vector<int> c(rank, 0);
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  if (i == s.size()) throw parse_error("empty expression");
  if (s == "0") return c;
  while (i < s.size()) {
    int sign = 1;
    skip_ws();
    if (s[i] == '+') { ++i; }
    else if (s[i] == '-') { sign = -1; ++i; }
    skip_ws();
    int coeff = 1;
    bool have_digits = false;
    int val = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      val = val * 10 + (s[i] - '0');
      have_digits = true;
      ++i;
    }
    if (have_digits) coeff = val;
    skip_ws();
    if (i >= s.size() || std::tolower(static_cast<unsigned char>(s[i])) != var)
      throw parse_error("expected variable '" + std::string(1, var) + "' in: " + s);
    ++i;
    int idx = 0;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw parse_error("expected index after variable in: " + s);
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      idx = idx * 10 + (s[i] - '0');
      ++i;
    }
    if (idx < 1 || idx > rank) throw parse_error("index out of range in: " + s);
    c[idx - 1] += sign * coeff;
    skip_ws();
  }
  return c;
}

}  // namespace

std::string to_string(const RootVec& r) { return vec_to_string(r.c, 'a'); }
std::string to_string(const WeightVec& w) { return vec_to_string(w.c, 'w'); }

RootVec parse_root(const std::string& s, int rank) { return RootVec(parse_linear(s, 'a', rank)); }

WeightVec parse_weight(const std::string& s, int rank) {
  if (s.find(',') != std::string::npos) {
    std::vector<int> c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        c.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw parse_error("bad weight coordinates: " + s);
      }
    }
    if (static_cast<int>(c.size()) != rank) throw parse_error("weight rank mismatch: " + s);
    return WeightVec(c);
  }
  return WeightVec(parse_linear(s, 'w', rank));
}

}  // namespace bruhat
