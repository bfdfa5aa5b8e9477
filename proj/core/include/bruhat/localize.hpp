#pragma once

#include <functional>
#include <map>
#include <vector>

#include "bruhat/symfrac.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

// beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}) along the canonical reduced
// word; the set {beta_j} is S(w).
struct BetaSequence {
  std::vector<int> word;
  std::vector<RootVec> betas;
};

BetaSequence beta_sequence(const WeylElt& w);

// Equivariant fundamental-class localization [Y(v)]|_w: sum over reduced
// subwords of w's word multiplying to v of prod beta_j. Zero when v is not
// below w.
Poly billey_loc(const WeylElt& v, const WeylElt& w, ParabolicSet P);

// Segre-MacPherson cell localization s_M(Y(u)o)|_v: all subwords with product
// in u W_P, over prod (1 + beta_j).
FactoredFraction sm_cell_loc(const WeylElt& u, const WeylElt& v, ParabolicSet P);

// Variety localization s_M(Y(v))|_w = sum of cell localizations over u >= v.
FactoredFraction sm_variety_loc(const WeylElt& v, const WeylElt& w, ParabolicSet P);

// s_M(Y(v))|_w / s_M(Y(w))|_w: subword sum with coset condition v <= product,
// over prod beta_j. Equals the weighted path sum of the decorated graph.
FactoredFraction eq_mult_richardson(const WeylElt& v, const WeylElt& w, ParabolicSet P);

// Torus weights at w: tangent space of G/P, split against Y(v) by the Bruhat
// test v <= min rep of w s_alpha.
struct WeightSets {
  std::vector<RootVec> tangent;    // Phi(T_w G/P), all -w(alpha)
  std::vector<RootVec> tangent_v;  // v <= w s_alpha part
  std::vector<RootVec> normal_v;   // v not<= w s_alpha part (positive roots)
};

WeightSets weight_sets(const WeylElt& v, const WeylElt& w, ParabolicSet P);

// Smooth iff [Y(v)]|_w equals the product of the normal weights.
bool kumar_smooth(const WeylElt& v, const WeylElt& w, ParabolicSet P);

// First Chern class multiplication coefficients on SM classes of cells:
// diagonal term w(lambda) plus -<lambda,gamma^vee> on each ascending jump.
struct ChevalleyCoeffs {
  WeightVec diagonal;                // c^w_{lambda,w} = w(lambda)
  std::map<WeylElt, long long> off;  // target u -> c^u_{lambda,w}
};

ChevalleyCoeffs chevalley_coeffs(const WeightVec& lambda, const WeylElt& w, ParabolicSet P);

// Structure constants d_{u,v}^w of SM-class multiplication, solved by the
// Chevalley-driven recursion with memoization over one (system, P) session.
class SmlrSession {
 public:
  using LambdaChooser = std::function<WeightVec(const WeylElt& u, const WeylElt& w)>;

  SmlrSession(const RootSystem& rs, ParabolicSet P);

  const FactoredFraction& coeff(const WeylElt& u, const WeylElt& v, const WeylElt& w);
  void set_lambda_chooser(LambdaChooser chooser) { chooser_ = std::move(chooser); }

  // Deterministic scan: fundamental weights off Delta_P, then their small
  // positive combinations, first with w(lambda) != u(lambda).
  WeightVec default_lambda(const WeylElt& u, const WeylElt& w) const;

 private:
  const RootSystem& rs_;
  ParabolicSet P_;
  LambdaChooser chooser_;
  std::map<std::tuple<WeightVec, WeightVec, WeightVec>, FactoredFraction> memo_;
};

FactoredFraction smlr(const WeylElt& u, const WeylElt& v, const WeylElt& w, ParabolicSet P);

// Full table d_{u,v}^w for u, v <= v_max and w <= w_max in W^P.
std::map<std::tuple<WeylElt, WeylElt, WeylElt>, FactoredFraction> smlr_table(
    const WeylElt& v_max, const WeylElt& w_max, ParabolicSet P);

// Substitutes alpha_i -> <-w(pi), alpha_i^vee>; simply-laced only. Sends every
// beta in S(w) to 1.
Int phi_evaluate(const Poly& p, const WeylElt& w, const WeightVec& pi);

}  // namespace bruhat
