#pragma once

#include <map>
#include <string>
#include <vector>

#include "bruhat/symfrac.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

// Weight assignment x -> lambda_x on a Bruhat interval, subject to
// x(lambda_x) != w(lambda_x) for every x strictly below w.
struct AdmissibleFn {
  std::string kind;  // "standard", "constant", "table"
  std::map<WeylElt, WeightVec> lambda;

  const WeightVec& at(const WeylElt& x) const;
};

// Builders validate membership in X*(T)_P and the admissibility condition;
// violations name the offending vertex.
AdmissibleFn standard_admissible(const std::vector<WeylElt>& interval, const WeylElt& w,
                                 ParabolicSet P);
AdmissibleFn constant_admissible(const WeightVec& pi, const std::vector<WeylElt>& interval,
                                 const WeylElt& w, ParabolicSet P);
AdmissibleFn custom_admissible(std::map<WeylElt, WeightVec> table,
                               const std::vector<WeylElt>& interval, const WeylElt& w,
                               ParabolicSet P);

struct LEdge {
  int from = -1, to = -1;   // vertex indices
  RootVec gamma;            // w s_gamma jump on the right
  RootVec beta;             // positive root with s_beta x = y on cosets
  long long mult = 0;       // Chevalley multiplicity <lambda_x, gamma^vee>
};

// Decorated directed graph on [v,w]^P: ascending reflection edges with
// Chevalley multiplicities, vertex weights W(x) = x(lambda_x) - w(lambda_x).
struct LGraph {
  const RootSystem* rs = nullptr;
  ParabolicSet P;
  WeylElt v, w;
  AdmissibleFn lambda;
  std::vector<WeylElt> vertices;        // sorted: length, then word
  std::vector<LinForm> weight;          // W(x) in root coordinates
  std::vector<LEdge> edges;             // sorted by (from, to)
  std::vector<std::vector<int>> out;    // edge indices by source vertex

  int index_of(const WeylElt& x) const;
  bool same_as(const LGraph& o) const;  // structural equality
};

struct BuildOptions {
  bool include_zero_multiplicity = false;  // audit mode; dropped edges add 0 to sums
};

LGraph build_lgraph(const WeylElt& v, const WeylElt& w, ParabolicSet P, const AdmissibleFn& fn,
                    BuildOptions opts = {});

// Convenience: interval + standard admissible function + graph.
LGraph build_lgraph_standard(const WeylElt& v, const WeylElt& w, ParabolicSet P);

struct PathSum {
  FactoredFraction total;                   // sum of F(x) over all vertices
  std::vector<FactoredFraction> per_vertex; // F(x), indexed like vertices
};

// F(w) = 1 and F(x) = sum over edges x->y of (mult/W(x)) F(y), computed by a
// memoized sweep over the length-graded DAG.
PathSum path_sum(const LGraph& g);

// All directed paths ending at w, as vertex index sequences (explicit
// enumeration; the DP above is the default route).
std::vector<std::vector<int>> enumerate_paths(const LGraph& g);

// prod over S(w/v) of (1 + 1/beta).
FactoredFraction hook_product(const WeylElt& v, const WeylElt& w, ParabolicSet P);

struct HookVerdict {
  bool smooth = false;
  FactoredFraction path_total;
  FactoredFraction hook;
};

HookVerdict smooth_via_hook(const WeylElt& v, const WeylElt& w, ParabolicSet P,
                            const AdmissibleFn& fn);
HookVerdict smooth_via_hook(const WeylElt& v, const WeylElt& w, ParabolicSet P);

struct SkewPeterson {
  bool smooth = false;           // smooth route (maximal-path corollary) taken
  Int count = 0;                 // #Red(w v^{-1}) from the formula
  Int oracle = 0;                // descent-DP count of reduced words
  Int factorial = 0;             // (l(w)-l(v))!
  Int height_product = 0;        // prod ht(beta), beta in S(w/v) (smooth route)
  Int max_paths = 0;             // number of maximal-length paths (smooth route)
  bool maxpath_identity = false; // sum over maximal paths == prod 1/beta
};

// Smooth route: counts maximal paths and checks the degree-lowest identity;
// single-formula count (l(w)-l(v))! / prod ht(beta). Non-smooth route: height
// specialization of the localization ratio. Requires v, w pi-minuscule.
SkewPeterson max_paths_and_skew_peterson(const WeylElt& v, const WeylElt& w, ParabolicSet P,
                                         const WeightVec& pi);

std::string export_dot(const LGraph& g);
std::string export_json(const LGraph& g);
LGraph lgraph_from_json(const RootSystem& rs, const std::string& text);

}  // namespace bruhat
