#include "bruhat/localize.hpp"

#include <algorithm>
#include <set>

namespace bruhat {

BetaSequence beta_sequence(const WeylElt& w) {
  const RootSystem& rs = w.system();
  BetaSequence bs;
  bs.word = w.word();
  WeylElt prefix = WeylElt::identity(rs);
  std::set<RootVec> seen;
  for (int i : bs.word) {
    std::vector<int> a(rs.rank(), 0);
    a[i] = 1;
    RootVec beta = prefix.act(RootVec(a));
    check_internal(is_positive(beta), "beta sequence entry must be positive");
    check_internal(seen.insert(beta).second, "beta sequence entries must be distinct");
    bs.betas.push_back(beta);
    prefix = prefix * WeylElt::simple(rs, i);
  }
  return bs;
}

Poly billey_loc(const WeylElt& v_in, const WeylElt& w, ParabolicSet P) {
  const RootSystem& rs = w.system();
  WeylElt v = min_coset_rep(v_in, P);
  const int n = rs.rank();
  if (!bruhat_leq(v, w)) return Poly(n);
  BetaSequence bs = beta_sequence(w);
  // Reduced-subword DP. States are left weak-order prefixes of v; the value of
  // a state is the beta-product sum over the subwords reaching it.
  std::map<WeightVec, std::pair<WeylElt, Poly>> states;
  WeylElt e = WeylElt::identity(rs);
  states.emplace(e.rho_image(), std::make_pair(e, Poly::constant(n, 1)));
  auto weak_prefix_of_v = [&](const WeylElt& g) {
    return (g.inverse() * v).length() == v.length() - g.length();
  };
  for (size_t j = 0; j < bs.word.size(); ++j) {
    Poly bj = Poly::from_linform(LinForm::of_root(bs.betas[j]));
    std::map<WeightVec, std::pair<WeylElt, Poly>> next = states;
    for (const auto& [mu, gp] : states) {
      const WeylElt& g = gp.first;
      WeylElt g2 = g * WeylElt::simple(rs, bs.word[j]);
      if (g2.length() != g.length() + 1) continue;
      if (!weak_prefix_of_v(g2)) continue;
      Poly contrib = gp.second * bj;
      auto it = next.find(g2.rho_image());
      if (it == next.end()) next.emplace(g2.rho_image(), std::make_pair(g2, std::move(contrib)));
      else it->second.second = it->second.second + contrib;
    }
    states = std::move(next);
  }
  auto it = states.find(v.rho_image());
  return it == states.end() ? Poly(n) : it->second.second;
}

namespace {

// Sums of beta-products over all (not necessarily reduced) subwords of v's
// word, grouped by the group element they multiply to.
std::map<WeightVec, std::pair<WeylElt, Poly>> subword_sums(const WeylElt& v) {
  const RootSystem& rs = v.system();
  const int n = rs.rank();
  BetaSequence bs = beta_sequence(v);
  std::map<WeightVec, std::pair<WeylElt, Poly>> states;
  WeylElt e = WeylElt::identity(rs);
  states.emplace(e.rho_image(), std::make_pair(e, Poly::constant(n, 1)));
  for (size_t j = 0; j < bs.word.size(); ++j) {
    Poly bj = Poly::from_linform(LinForm::of_root(bs.betas[j]));
    std::map<WeightVec, std::pair<WeylElt, Poly>> next = states;
    for (const auto& [mu, gp] : states) {
      WeylElt g2 = gp.first * WeylElt::simple(rs, bs.word[j]);
      Poly contrib = gp.second * bj;
      auto it = next.find(g2.rho_image());
      if (it == next.end()) next.emplace(g2.rho_image(), std::make_pair(g2, std::move(contrib)));
      else it->second.second = it->second.second + contrib;
    }
    states = std::move(next);
  }
  return states;
}

FactoredFraction over_one_plus_betas(Poly num, const WeylElt& v) {
  FactoredFraction f = FactoredFraction::of_poly(std::move(num));
  for (const RootVec& beta : beta_sequence(v).betas)
    f = f * FactoredFraction::inv_linform(LinForm::one_plus(beta));
  return f;
}

}  // namespace

FactoredFraction sm_cell_loc(const WeylElt& u, const WeylElt& v, ParabolicSet P) {
  const RootSystem& rs = v.system();
  const int n = rs.rank();
  if (!bruhat_leq(min_coset_rep(u, P), v)) return FactoredFraction::zero(n);
  Poly num(n);
  for (const auto& [mu, gp] : subword_sums(v))
    if (min_coset_rep(gp.first, P) == min_coset_rep(u, P)) num = num + gp.second;
  return over_one_plus_betas(std::move(num), v);
}

FactoredFraction sm_variety_loc(const WeylElt& v, const WeylElt& w, ParabolicSet P) {
  const RootSystem& rs = w.system();
  const int n = rs.rank();
  WeylElt vm = min_coset_rep(v, P);
  Poly num(n);
  for (const auto& [mu, gp] : subword_sums(w))
    if (bruhat_leq(vm, min_coset_rep(gp.first, P))) num = num + gp.second;
  return over_one_plus_betas(std::move(num), w);
}

FactoredFraction eq_mult_richardson(const WeylElt& v, const WeylElt& w, ParabolicSet P) {
  const RootSystem& rs = w.system();
  const int n = rs.rank();
  if (!bruhat_leq(v, w)) throw precondition_error("equivariant multiplicity requires v <= w");
  WeylElt vm = min_coset_rep(v, P);
  Poly num(n);
  for (const auto& [mu, gp] : subword_sums(w))
    if (bruhat_leq(vm, min_coset_rep(gp.first, P))) num = num + gp.second;
  FactoredFraction f = FactoredFraction::of_poly(std::move(num));
  for (const RootVec& beta : beta_sequence(w).betas)
    f = f * FactoredFraction::inv_linform(LinForm::of_root(beta));
  return f;
}

WeightSets weight_sets(const WeylElt& v, const WeylElt& w, ParabolicSet P) {
  const RootSystem& rs = w.system();
  if (!bruhat_leq(v, w)) throw precondition_error("weight sets require v <= w");
  WeightSets ws;
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    const RootVec& alpha = rs.positive_root(k);
    bool outside = false;
    for (int i = 0; i < rs.rank(); ++i)
      if (alpha.c[i] != 0 && !P.contains(i)) { outside = true; break; }
    if (!outside) continue;
    RootVec chi = -w.act(alpha);
    ws.tangent.push_back(chi);
    if (!is_positive(chi)) {
      // w s_alpha ascends past w, hence stays above v.
      ws.tangent_v.push_back(chi);
      continue;
    }
    WeylElt y = min_coset_rep(w * reflection(rs, alpha), P);
    if (bruhat_leq(v, y)) ws.tangent_v.push_back(chi);
    else ws.normal_v.push_back(chi);
  }
  auto by_order = [](const RootVec& a, const RootVec& b) { return a.c < b.c; };
  std::sort(ws.tangent.begin(), ws.tangent.end(), by_order);
  std::sort(ws.tangent_v.begin(), ws.tangent_v.end(), by_order);
  std::sort(ws.normal_v.begin(), ws.normal_v.end(), by_order);
  return ws;
}

bool kumar_smooth(const WeylElt& v, const WeylElt& w, ParabolicSet P) {
  const RootSystem& rs = w.system();
  Poly lhs = billey_loc(v, w, P);
  Poly rhs = Poly::constant(rs.rank(), 1);
  for (const RootVec& chi : weight_sets(v, w, P).normal_v)
    rhs = rhs * Poly::from_linform(LinForm::of_root(chi));
  return lhs == rhs;
}

ChevalleyCoeffs chevalley_coeffs(const WeightVec& lambda, const WeylElt& w, ParabolicSet P) {
  const RootSystem& rs = w.system();
  for (int i = 0; i < rs.rank(); ++i)
    if (P.contains(i) && lambda.c[i] != 0)
      throw precondition_error("lambda must vanish on Delta_P");
  ChevalleyCoeffs cc;
  cc.diagonal = w.act(lambda);
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    const RootVec& gamma = rs.positive_root(k);
    long long pair = rs.pairing(lambda, rs.coroot(k));
    if (pair == 0) continue;  // includes all of R_P^+
    if (!is_positive(w.act(gamma))) continue;  // w s_gamma below w
    WeylElt u = min_coset_rep(w * reflection(rs, gamma), P);
    cc.off[u] -= pair;
  }
  return cc;
}

SmlrSession::SmlrSession(const RootSystem& rs, ParabolicSet P) : rs_(rs), P_(P) {
  chooser_ = [this](const WeylElt& u, const WeylElt& w) { return default_lambda(u, w); };
}

WeightVec SmlrSession::default_lambda(const WeylElt& u, const WeylElt& w) const {
  std::vector<int> free;
  for (int i = 0; i < rs_.rank(); ++i)
    if (!P_.contains(i)) free.push_back(i);
  auto try_lambda = [&](const WeightVec& lam) {
    return u.act(lam) != w.act(lam);
  };
  for (int i : free) {
    std::vector<int> c(rs_.rank(), 0);
    c[i] = 1;
    WeightVec lam(c);
    if (try_lambda(lam)) return lam;
  }
  // omega_P and then small positive combinations.
  for (int bound = 1; bound <= 4; ++bound) {
    std::vector<int> coeff(free.size(), 1);
    std::function<bool(size_t, WeightVec&)> scan = [&](size_t pos, WeightVec& lam) -> bool {
      if (pos == free.size()) return try_lambda(lam);
      for (int c = 1; c <= bound; ++c) {
        lam.c[free[pos]] = c;
        if (scan(pos + 1, lam)) return true;
      }
      lam.c[free[pos]] = 1;
      return false;
    };
    WeightVec lam(std::vector<int>(rs_.rank(), 0));
    if (scan(0, lam)) return lam;
  }
  throw internal_error("no separating lambda found for " + u.to_string() + " vs " +
                       w.to_string());
}

const FactoredFraction& SmlrSession::coeff(const WeylElt& u_in, const WeylElt& v_in,
                                           const WeylElt& w_in) {
  WeylElt u = min_coset_rep(u_in, P_);
  WeylElt v = min_coset_rep(v_in, P_);
  WeylElt w = min_coset_rep(w_in, P_);
  if (v < u) std::swap(u, v);  // the product is symmetric in u, v
  auto key = std::make_tuple(u.rho_image(), v.rho_image(), w.rho_image());
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const int n = rs_.rank();
  FactoredFraction result(n);
  if (!bruhat_leq(u, w) || !bruhat_leq(v, w)) {
    result = FactoredFraction::zero(n);
  } else if (u == w) {
    result = sm_cell_loc(v, w, P_);
  } else {
    WeightVec lam = chooser_(u, w);
    check_internal(u.act(lam) != w.act(lam), "lambda does not separate u and w");
    // Ascending Chevalley terms from u, and descending ones into w.
    FactoredFraction acc = FactoredFraction::zero(n);
    ChevalleyCoeffs cu = chevalley_coeffs(lam, u, P_);
    for (const auto& [x, c] : cu.off) {
      if (c == 0 || !bruhat_leq(x, w)) continue;
      acc = acc + coeff(x, v, w).scaled(c);
    }
    for (int k = 0; k < rs_.num_positive_roots(); ++k) {
      const RootVec& delta = rs_.positive_root(k);
      bool outside = false;
      for (int i = 0; i < n; ++i)
        if (delta.c[i] != 0 && !P_.contains(i)) { outside = true; break; }
      if (!outside) continue;
      if (is_positive(w.act(delta))) continue;  // need w s_delta below w
      WeylElt y = min_coset_rep(w * reflection(rs_, delta), P_);
      // c^w_{lambda,y} = -<lambda, gamma^vee> for the unique jump y -> w.
      RootVec beta = -w.act(delta);
      RootVec gamma = y.inverse().act(beta);
      check_internal(is_positive(gamma), "jump root must be positive");
      long long c = -rs_.pairing(lam, rs_.coroot_of(gamma));
      if (c == 0 || !bruhat_leq(u, y)) continue;
      acc = acc - coeff(u, v, y).scaled(c);
    }
    WeightVec diff = w.act(lam) - u.act(lam);
    LinForm denom = LinForm::of_root(rs_.to_root(diff));
    result = acc * FactoredFraction::inv_linform(denom);
  }
  auto [pos, inserted] = memo_.emplace(key, std::move(result));
  check_internal(inserted, "smlr memo collision");
  return pos->second;
}

FactoredFraction smlr(const WeylElt& u, const WeylElt& v, const WeylElt& w, ParabolicSet P) {
  SmlrSession session(u.system(), P);
  return session.coeff(u, v, w);
}

std::map<std::tuple<WeylElt, WeylElt, WeylElt>, FactoredFraction> smlr_table(
    const WeylElt& v_max, const WeylElt& w_max, ParabolicSet P) {
  const RootSystem& rs = v_max.system();
  SmlrSession session(rs, P);
  WeylElt id = WeylElt::identity(rs);
  std::vector<WeylElt> uvs = interval(id, v_max, P);
  std::vector<WeylElt> ws = interval(id, w_max, P);
  std::map<std::tuple<WeylElt, WeylElt, WeylElt>, FactoredFraction> out;
  for (const WeylElt& u : uvs)
    for (const WeylElt& v : uvs)
      for (const WeylElt& w : ws) out.emplace(std::make_tuple(u, v, w), session.coeff(u, v, w));
  return out;
}

Int phi_evaluate(const Poly& p, const WeylElt& w, const WeightVec& pi) {
  const RootSystem& rs = w.system();
  if (!rs.simply_laced())
    throw precondition_error("phi evaluation identifies roots and coroots; simply-laced only");
  WeightVec wpi = w.act(pi);
  std::vector<Int> point(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) point[i] = -wpi.c[i];
  return p.eval_int(point);
}

}  // namespace bruhat
