#pragma once

#include <string>
#include <vector>

#include "bruhat/lgraph.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

// The colored poset of a reduced word: p_j < p_k forced whenever j < k and the
// letters do not commute; colors are the letters themselves.
struct Heap {
  const RootSystem* rs = nullptr;
  std::vector<int> word;                 // source reduced word, 0-based colors
  std::vector<std::vector<bool>> below;  // strict order, below[a][b] = (p_a < p_b)
  std::vector<std::pair<int, int>> covers;

  int size() const { return static_cast<int>(word.size()); }
  int color(int k) const { return word[k]; }
  bool lt(int a, int b) const { return below[a][b]; }
  bool comparable(int a, int b) const { return a == b || below[a][b] || below[b][a]; }
  std::vector<int> maximal_elements() const;
  std::vector<std::vector<int>> components() const;  // connected Hasse components
};

Heap heap_of_word(const RootSystem& rs, const std::vector<int>& word);

// Colored poset isomorphism test (small heaps only).
bool heaps_isomorphic(const Heap& a, const Heap& b);

// A subset of heap elements, kept sorted.
using Diagram = std::vector<int>;

// All order filters of the subposet induced on `ground` (defaults to all).
std::vector<Diagram> order_filters(const Heap& h, const Diagram& ground);
std::vector<Diagram> order_filters(const Heap& h);

// Embedding of H(v) as an order filter of H(w), found by the right-greedy
// subword extraction; requires v <= w and both pi-minuscule.
Diagram filter_of(const WeylElt& v, const Heap& hw, const WeightVec& pi);

// Single moves D |> D': slide q in D down to the previous element p of the
// same color, allowed when no element of D in [p,q] carries an adjacent color.
std::vector<Diagram> elementary_excitations(const Diagram& d, const Heap& h);

// The closure of F under elementary excitations.
std::vector<Diagram> excited_diagrams(const Diagram& f, const Heap& h);

// |excited_diagrams| of the filter of v in H(w); simply-laced only, where it
// equals the multiplicity of Y(v) at w. Cross-checked internally against the
// fundamental-class localization evaluated at the principal point.
Int multiplicity(const WeylElt& v, const WeylElt& w, const WeightVec& pi);

struct DominantMinusculeResult {
  bool ok = false;
  WeightVec pi;           // recovered weight, when ok
  bool degenerate = false;  // empty word
};

// Letter-by-letter criterion on a reduced word; when it holds, pi is the sum
// of fundamental weights at the maximal heap elements.
DominantMinusculeResult is_dominant_minuscule(const RootSystem& rs, const std::vector<int>& word);

struct SmoothnessReport {
  bool hook_smooth = false;
  bool kumar = false;
  bool excited_unique = false;
  bool dominant_minuscule = false;
  bool agree = false;
  Int excited_count = 0;
  WeightVec pi_prime;
  // Only evaluated in the smooth case:
  bool skew_sets_match = false;
  bool graph_isomorphic = false;
};

// Simply-laced equivalences for pi-minuscule w and v <= w in W^pi: hook
// identity, Kumar test, unique excited diagram, and quotient-to-straight
// transport (skew inversion sets and the decorated graph isomorphism
// [v,w] = [id, w v^{-1}] under z -> z v^{-1}).
SmoothnessReport smoothness_equiv(const WeylElt& v, const WeylElt& w, const WeightVec& pi);

struct SkewRedCount {
  Int count = 0;      // excited-diagram formula value
  Int oracle = 0;     // descent-DP count of Red(w v^{-1})
  Int diagrams = 0;   // |excited_diagrams|
  Int factorial = 0;  // (l(w)-l(v))!
};

// (l(w)-l(v))! * sum over excited diagrams D of 1/prod ht(beta_w(p)) over the
// complement of D; exact rational arithmetic, asserted integral.
SkewRedCount skew_red_count(const WeylElt& v, const WeylElt& w, const WeightVec& pi);

}  // namespace bruhat
