#pragma once

#include <string>
#include <vector>

#include "bruhat/errors.hpp"

namespace bruhat {

// Integer vector in the simple-root basis.
struct RootVec {
  std::vector<int> c;

  RootVec() = default;
  explicit RootVec(std::vector<int> v) : c(std::move(v)) {}

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const;
  bool operator==(const RootVec& o) const { return c == o.c; }
  bool operator!=(const RootVec& o) const { return c != o.c; }
  bool operator<(const RootVec& o) const { return c < o.c; }
  RootVec operator+(const RootVec& o) const;
  RootVec operator-(const RootVec& o) const;
  RootVec operator-() const;
};

// Integer vector in the simple-coroot basis. Generated and stored in lockstep
// with its root partner during root closure.
struct CorootVec {
  std::vector<int> c;

  CorootVec() = default;
  explicit CorootVec(std::vector<int> v) : c(std::move(v)) {}

  int rank() const { return static_cast<int>(c.size()); }
  bool operator==(const CorootVec& o) const { return c == o.c; }
  bool operator<(const CorootVec& o) const { return c < o.c; }
  CorootVec operator-() const;
};

// Integer vector in the fundamental-weight basis.
struct WeightVec {
  std::vector<int> c;

  WeightVec() = default;
  explicit WeightVec(std::vector<int> v) : c(std::move(v)) {}

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const;
  bool operator==(const WeightVec& o) const { return c == o.c; }
  bool operator!=(const WeightVec& o) const { return c != o.c; }
  bool operator<(const WeightVec& o) const { return c < o.c; }
  WeightVec operator+(const WeightVec& o) const;
  WeightVec operator-(const WeightVec& o) const;
};

int height(const RootVec& r);           // sum of simple-root coefficients
bool is_positive(const RootVec& r);     // all >= 0, not all zero
bool is_negative(const RootVec& r);     // all <= 0, not all zero
bool is_dominant(const WeightVec& w);   // all >= 0

// Dynkin type and Cartan matrix. Convention: cartan[i][j] = <alpha_j, alpha_i^vee>
// (0-based). Types B have alpha_rank short; type F has alpha_1, alpha_2 short.
struct CartanDatum {
  char series = 0;  // 'A'..'G'
  int rank = 0;
  std::vector<std::vector<int>> cartan;
};

CartanDatum build_cartan(char series, int rank);
CartanDatum build_cartan(const std::string& name);  // "B3", "E8", ...

// A finite root system: Cartan data plus the full table of positive roots with
// matched coroots, in a deterministic order (height, then lexicographic).
class RootSystem {
 public:
  explicit RootSystem(CartanDatum cd);
  static RootSystem from_name(const std::string& name);

  const CartanDatum& cartan() const { return cd_; }
  int rank() const { return cd_.rank; }
  int a(int i, int j) const { return cd_.cartan[i][j]; }  // <alpha_j, alpha_i^vee>
  char series() const { return cd_.series; }
  bool simply_laced() const { return simply_laced_; }
  std::string name() const;

  int num_positive_roots() const { return static_cast<int>(roots_.size()); }
  const RootVec& positive_root(int k) const { return roots_[k]; }
  const CorootVec& coroot(int k) const { return coroots_[k]; }
  const std::vector<RootVec>& positive_roots() const { return roots_; }

  // Index of a positive root in the table, or -1.
  int root_index(const RootVec& r) const;
  bool is_root(const RootVec& r) const;  // positive or negative root
  const CorootVec& coroot_of(const RootVec& beta) const;  // beta must be positive

  WeightVec rho() const;                      // sum of fundamental weights
  WeightVec alpha_in_weights(int j) const;    // column j of the Cartan matrix
  WeightVec to_weight(const RootVec& r) const;
  // Inverse of to_weight; throws precondition_error if w is not in the root lattice.
  RootVec to_root(const WeightVec& w) const;

  long long pairing(const WeightVec& lam, const CorootVec& cv) const;
  long long pairing(const RootVec& r, const CorootVec& cv) const;

  RootVec simple_reflect(int i, const RootVec& x) const;
  WeightVec simple_reflect(int i, const WeightVec& x) const;
  CorootVec simple_reflect(int i, const CorootVec& x) const;

  // s_beta(x) = x - <x, beta^vee> beta; beta must be a root of the system.
  RootVec reflect(const RootVec& x, const RootVec& beta) const;
  WeightVec reflect(const WeightVec& x, const RootVec& beta) const;

 private:
  CartanDatum cd_;
  bool simply_laced_ = true;
  std::vector<RootVec> roots_;
  std::vector<CorootVec> coroots_;
  std::vector<std::vector<long long>> adjugate_;  // adj(cartan), for to_root
  long long det_ = 0;

  void generate_roots();
};

// Printing: roots as "a1+2a2+2a3", weights as "w1+3w2"; zero prints as "0".
std::string to_string(const RootVec& r);
std::string to_string(const WeightVec& w);
RootVec parse_root(const std::string& s, int rank);
// Accepts "w2", "w1+3w2", "2w1-w2" or comma coordinates "1,0,1".
WeightVec parse_weight(const std::string& s, int rank);

}  // namespace bruhat
