#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bruhat/bigint.hpp"
#include "bruhat/rootsys.hpp"

namespace bruhat {

// Set Delta_P of simple-root indices generating the parabolic. Empty = Borel.
struct ParabolicSet {
  uint32_t mask = 0;

  static ParabolicSet parse(const std::string& s, int rank);  // "1,3" or "P={1,3}" or ""
  static ParabolicSet of_indices(const std::vector<int>& zero_based);
  bool contains(int i) const { return (mask >> i) & 1u; }     // 0-based
  bool empty() const { return mask == 0; }
  bool full(int rank) const { return mask + 1 == (1u << rank); }
  std::vector<int> indices(int rank) const;                   // 0-based
  std::string to_string() const;                              // "{1,3}", 1-based
  bool operator==(const ParabolicSet& o) const { return mask == o.mask; }
};

// A Weyl group element in canonical form. The canonical reduced word is the one
// obtained by repeatedly taking the smallest left descent; identity is decided
// by the cached image of rho, which is a faithful fingerprint.
class WeylElt {
 public:
  WeylElt() = default;

  static WeylElt identity(const RootSystem& rs);
  static WeylElt simple(const RootSystem& rs, int i);                       // s_{i+1}, 0-based i
  static WeylElt from_word(const RootSystem& rs, const std::vector<int>& word);
  static WeylElt from_rho_image(const RootSystem& rs, const WeightVec& mu);

  bool valid() const { return rs_ != nullptr; }
  const RootSystem& system() const { return *rs_; }
  const std::vector<int>& word() const { return word_; }  // 0-based letters
  int length() const { return static_cast<int>(word_.size()); }
  const WeightVec& rho_image() const { return rho_; }
  bool is_identity() const { return word_.empty(); }

  WeylElt operator*(const WeylElt& o) const;
  WeylElt inverse() const;

  RootVec act(const RootVec& x) const;
  WeightVec act(const WeightVec& x) const;

  // Left and right descent tests, 0-based generator index.
  bool left_descent(int i) const { return rho_.c[i] < 0; }
  bool right_descent(int i) const;

  bool operator==(const WeylElt& o) const { return rho_ == o.rho_; }
  bool operator!=(const WeylElt& o) const { return !(*this == o); }
  // Deterministic order: length, then canonical word.
  bool operator<(const WeylElt& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return word_ < o.word_;
  }

  std::string to_string() const;  // "2 1 3 2" (1-based) or "id"

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<int> word_;
  WeightVec rho_;
};

// Parses "2 1 3 2" (1-based, applied left to right as written); "" and "id"
// give the empty word.
std::vector<int> parse_word(const std::string& s, int rank);

bool bruhat_leq(const WeylElt& v, const WeylElt& w);

WeylElt min_coset_rep(const WeylElt& w, ParabolicSet P);
bool is_min_coset_rep(const WeylElt& w, ParabolicSet P);

// All x in W^P with v <= x <= w, sorted. Throws precondition_error when the
// interval is empty or v, w are not minimal representatives.
std::vector<WeylElt> interval(const WeylElt& v, const WeylElt& w, ParabolicSet P);

// S(w) = {beta in R^+ : w^{-1}(beta) < 0}; |S(w)| = l(w). Sorted by root order.
std::vector<RootVec> inversion_reflections(const WeylElt& w);

// S(w/v) read on W^P: positive beta = -w(alpha) over alpha in R^+ \ R_P^+ with
// w(alpha) < 0 such that v <= min_coset_rep(s_beta w).
std::vector<RootVec> skew_set(const WeylElt& v, const WeylElt& w, ParabolicSet P);

// The reflection s_beta as a group element; beta must be a positive root.
WeylElt reflection(const RootSystem& rs, const RootVec& beta);

std::vector<std::vector<int>> reduced_words(const WeylElt& w);
Int count_reduced_words(const WeylElt& w);  // descent DP, no enumeration

// Condition that pi loses exactly one simple root per letter along a reduced
// word of w; checking one word suffices.
bool is_pi_minuscule(const WeylElt& w, const WeightVec& pi);

bool is_predominant(const RootSystem& rs, const WeightVec& lambda);
std::vector<RootVec> diagram_D(const RootSystem& rs, const WeightVec& lambda);

struct LambdaPath {
  std::vector<RootVec> steps;
};

// All lambda-paths (sequences of pairing -1 reflections) up to max_len;
// max_len < 0 means unbounded (paths are finite anyway).
std::vector<LambdaPath> lambda_paths(const RootSystem& rs, const WeightVec& lambda,
                                     int max_len = -1);

// Follows one maximal path through simple roots; returns (pi, w) with
// lambda = w(pi), pi dominant, w pi-minuscule.
std::pair<WeightVec, WeylElt> mpath_to_minuscule(const RootSystem& rs, const WeightVec& lambda);

// True when the interval [u,w]^P (P = stabilizer of pi) is the same set in the
// left weak order and the Bruhat order.
bool weak_strong_interval_check(const WeylElt& u, const WeylElt& w, const WeightVec& pi);

ParabolicSet stabilizer_parabolic(const RootSystem& rs, const WeightVec& pi);

// Full group / quotient enumeration; guarded against huge groups.
std::vector<WeylElt> all_elements(const RootSystem& rs, size_t cap = 2000000);
std::vector<WeylElt> min_reps(const RootSystem& rs, ParabolicSet P, size_t cap = 2000000);

// All pi-minuscule elements (pi dominant), found by growing words on the left.
std::vector<WeylElt> pi_minuscule_elements(const RootSystem& rs, const WeightVec& pi);

}  // namespace bruhat
