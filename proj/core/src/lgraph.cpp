#include "bruhat/lgraph.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bruhat/localize.hpp"

namespace bruhat {

using json = nlohmann::json;

const WeightVec& AdmissibleFn::at(const WeylElt& x) const {
  auto it = lambda.find(x);
  check_internal(it != lambda.end(), "no weight assigned to " + x.to_string());
  return it->second;
}

namespace {

void require_in_xtp(const RootSystem& rs, const WeightVec& lam, ParabolicSet P) {
  for (int i = 0; i < rs.rank(); ++i)
    if (P.contains(i) && lam.c[i] != 0)
      throw precondition_error("weight " + to_string(lam) + " does not vanish on Delta_P");
}

AdmissibleFn validate(AdmissibleFn fn, const std::vector<WeylElt>& interval, const WeylElt& w,
                      ParabolicSet P) {
  const RootSystem& rs = w.system();
  for (const WeylElt& x : interval) {
    const WeightVec& lam = fn.at(x);
    require_in_xtp(rs, lam, P);
    if (x != w && x.act(lam) == w.act(lam))
      throw precondition_error("inadmissible function: x(lambda_x) = w(lambda_x) at x = " +
                               x.to_string());
  }
  return fn;
}

}  // namespace

AdmissibleFn standard_admissible(const std::vector<WeylElt>& interval, const WeylElt& w,
                                 ParabolicSet P) {
  const RootSystem& rs = w.system();
  if (P.full(rs.rank()))
    throw precondition_error("P = G is not a proper parabolic context");
  std::vector<int> c(rs.rank(), 0);
  for (int i = 0; i < rs.rank(); ++i)
    if (!P.contains(i)) c[i] = 1;
  WeightVec omega_p(c);
  AdmissibleFn fn;
  fn.kind = "standard";
  for (const WeylElt& x : interval) fn.lambda.emplace(x, omega_p);
  return validate(std::move(fn), interval, w, P);
}

AdmissibleFn constant_admissible(const WeightVec& pi, const std::vector<WeylElt>& interval,
                                 const WeylElt& w, ParabolicSet P) {
  AdmissibleFn fn;
  fn.kind = "constant";
  for (const WeylElt& x : interval) fn.lambda.emplace(x, pi);
  return validate(std::move(fn), interval, w, P);
}

AdmissibleFn custom_admissible(std::map<WeylElt, WeightVec> table,
                               const std::vector<WeylElt>& interval, const WeylElt& w,
                               ParabolicSet P) {
  AdmissibleFn fn;
  fn.kind = "table";
  fn.lambda = std::move(table);
  for (const WeylElt& x : interval)
    if (!fn.lambda.count(x))
      throw precondition_error("table misses interval vertex " + x.to_string());
  return validate(std::move(fn), interval, w, P);
}

int LGraph::index_of(const WeylElt& x) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
  if (it == vertices.end() || *it != x) return -1;
  return static_cast<int>(it - vertices.begin());
}

bool LGraph::same_as(const LGraph& o) const {
  if (vertices.size() != o.vertices.size() || edges.size() != o.edges.size()) return false;
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] != o.vertices[i]) return false;
    if (!(weight[i] == o.weight[i])) return false;
  }
  for (size_t i = 0; i < edges.size(); ++i) {
    const LEdge &a = edges[i], &b = o.edges[i];
    if (a.from != b.from || a.to != b.to || a.mult != b.mult) return false;
    if (a.gamma != b.gamma || a.beta != b.beta) return false;
  }
  return true;
}

LGraph build_lgraph(const WeylElt& v, const WeylElt& w, ParabolicSet P, const AdmissibleFn& fn,
                    BuildOptions opts) {
  const RootSystem& rs = v.system();
  LGraph g;
  g.rs = &rs;
  g.P = P;
  g.v = v;
  g.w = w;
  g.lambda = fn;
  g.vertices = interval(v, w, P);
  g.weight.resize(g.vertices.size());
  // Complement roots index the possible right jumps x s_gamma.
  std::vector<int> comp;
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    const RootVec& r = rs.positive_root(k);
    for (int i = 0; i < rs.rank(); ++i)
      if (r.c[i] != 0 && !P.contains(i)) { comp.push_back(k); break; }
  }
  for (size_t xi = 0; xi < g.vertices.size(); ++xi) {
    const WeylElt& x = g.vertices[xi];
    const WeightVec& lam = fn.at(x);
    WeightVec diff = x.act(lam) - w.act(lam);
    g.weight[xi] = LinForm::of_root(rs.to_root(diff));
    if (x == w) check_internal(g.weight[xi].is_zero(), "W(w) must vanish");
    else check_internal(!g.weight[xi].is_zero(), "W(x) must not vanish below w");

    for (int k : comp) {
      const RootVec& gamma = rs.positive_root(k);
      long long mult = rs.pairing(lam, rs.coroot(k));
      if (mult == 0 && !opts.include_zero_multiplicity) continue;
      RootVec beta = x.act(gamma);
      if (!is_positive(beta)) continue;  // descending jump
      WeylElt y = min_coset_rep(x * reflection(rs, gamma), P);
      int yi = g.index_of(y);
      if (yi < 0) continue;  // outside the interval
      check_internal(g.vertices[yi].length() > x.length(), "edge must ascend");
      LEdge e;
      e.from = static_cast<int>(xi);
      e.to = yi;
      e.gamma = gamma;
      e.beta = beta;
      e.mult = mult;
      g.edges.push_back(std::move(e));
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const LEdge& a, const LEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.gamma.c < b.gamma.c;
  });
  g.out.assign(g.vertices.size(), {});
  for (size_t i = 0; i < g.edges.size(); ++i) g.out[g.edges[i].from].push_back(static_cast<int>(i));
  return g;
}

LGraph build_lgraph_standard(const WeylElt& v, const WeylElt& w, ParabolicSet P) {
  auto iv = interval(v, w, P);
  return build_lgraph(v, w, P, standard_admissible(iv, w, P));
}

PathSum path_sum(const LGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  const int nv = g.rs->rank();
  PathSum ps;
  ps.per_vertex.assign(n, FactoredFraction::zero(nv));
  // Vertices are sorted by length, so a reverse sweep sees all targets first.
  for (int xi = n - 1; xi >= 0; --xi) {
    if (g.vertices[xi] == g.w) {
      ps.per_vertex[xi] = FactoredFraction::one(nv);
      continue;
    }
    FactoredFraction acc = FactoredFraction::zero(nv);
    for (int ei : g.out[xi]) {
      const LEdge& e = g.edges[ei];
      if (e.mult == 0) continue;
      acc = acc + ps.per_vertex[e.to].scaled(e.mult);
    }
    ps.per_vertex[xi] = acc * FactoredFraction::inv_linform(g.weight[xi]);
  }
  ps.total = FactoredFraction::zero(nv);
  for (const auto& f : ps.per_vertex) ps.total = ps.total + f;
  return ps;
}

namespace {

void paths_rec(const LGraph& g, int xi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (g.vertices[xi] == g.w) {
    out.push_back(cur);
    return;
  }
  for (int ei : g.out[xi]) {
    if (g.edges[ei].mult == 0) continue;
    cur.push_back(g.edges[ei].to);
    paths_rec(g, g.edges[ei].to, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_paths(const LGraph& g) {
  std::vector<std::vector<int>> out;
  for (int xi = 0; xi < static_cast<int>(g.vertices.size()); ++xi) {
    std::vector<int> cur{xi};
    paths_rec(g, xi, cur, out);
  }
  return out;
}

FactoredFraction hook_product(const WeylElt& v, const WeylElt& w, ParabolicSet P) {
  const RootSystem& rs = v.system();
  FactoredFraction acc = FactoredFraction::one(rs.rank());
  for (const RootVec& beta : skew_set(v, w, P)) {
    FactoredFraction factor = FactoredFraction::of_linform(LinForm::one_plus(beta)) *
                              FactoredFraction::inv_linform(LinForm::of_root(beta));
    acc = acc * factor;
  }
  return acc;
}

HookVerdict smooth_via_hook(const WeylElt& v, const WeylElt& w, ParabolicSet P,
                            const AdmissibleFn& fn) {
  LGraph g = build_lgraph(v, w, P, fn);
  HookVerdict verdict;
  verdict.path_total = path_sum(g).total;
  verdict.hook = hook_product(v, w, P);
  verdict.smooth = ff_equal(verdict.path_total, verdict.hook);
  return verdict;
}

HookVerdict smooth_via_hook(const WeylElt& v, const WeylElt& w, ParabolicSet P) {
  auto iv = interval(v, w, P);
  return smooth_via_hook(v, w, P, standard_admissible(iv, w, P));
}

SkewPeterson max_paths_and_skew_peterson(const WeylElt& v, const WeylElt& w, ParabolicSet P,
                                         const WeightVec& pi) {
  const RootSystem& rs = v.system();
  if (!is_pi_minuscule(v, pi) || !is_pi_minuscule(w, pi))
    throw precondition_error("skew Peterson formula requires pi-minuscule endpoints");
  auto iv = interval(v, w, P);
  AdmissibleFn fn = constant_admissible(pi, iv, w, P);
  LGraph g = build_lgraph(v, w, P, fn);

  SkewPeterson out;
  out.oracle = count_reduced_words(w * v.inverse());
  out.factorial = factorial(w.length() - v.length());
  HookVerdict hv;
  hv.path_total = path_sum(g).total;
  hv.hook = hook_product(v, w, P);
  hv.smooth = ff_equal(hv.path_total, hv.hook);
  out.smooth = hv.smooth;

  if (hv.smooth) {
    // Maximal paths from v: every step is a cover; each contributes
    // prod_r 1/(beta_1 + ... + beta_r) read from the w end.
    const int d = w.length() - v.length();
    const int vi = g.index_of(v);
    std::vector<std::vector<int>> paths;  // edge index sequences
    std::vector<int> cur;
    std::function<void(int)> dfs = [&](int xi) {
      if (static_cast<int>(cur.size()) == d) {
        if (g.vertices[xi] == w) paths.push_back(cur);
        return;
      }
      for (int ei : g.out[xi]) {
        cur.push_back(ei);
        dfs(g.edges[ei].to);
        cur.pop_back();
      }
    };
    dfs(vi);
    out.max_paths = static_cast<long long>(paths.size());
    FactoredFraction lhs = FactoredFraction::zero(rs.rank());
    for (const auto& path : paths) {
      // betas in path order start at v; partial sums accumulate from the top.
      FactoredFraction term = FactoredFraction::one(rs.rank());
      RootVec partial(std::vector<int>(rs.rank(), 0));
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        partial = partial + g.edges[*it].beta;
        term = term * FactoredFraction::inv_linform(LinForm::of_root(partial));
      }
      lhs = lhs + term;
    }
    FactoredFraction rhs = FactoredFraction::one(rs.rank());
    Int htprod = 1;
    for (const RootVec& beta : skew_set(v, w, P)) {
      rhs = rhs * FactoredFraction::inv_linform(LinForm::of_root(beta));
      htprod *= height(beta);
    }
    out.maxpath_identity = ff_equal(lhs, rhs);
    out.height_product = htprod;
    check_internal(out.factorial % htprod == 0, "hook count must divide the factorial");
    out.count = out.factorial / htprod;
  } else {
    // Height specialization of the localization ratio.
    Poly bil = billey_loc(v, w, P);
    BetaSequence bs = beta_sequence(w);
    std::vector<Int> ones(rs.rank(), 1);
    Int numer = out.factorial * bil.eval_int(ones);
    Int denom = 1;
    for (const RootVec& b : bs.betas) denom *= height(b);
    check_internal(numer % denom == 0, "skew count must be integral");
    out.count = numer / denom;
  }
  check_internal(out.count == out.oracle, "skew reduced-word count disagrees with the DP oracle");
  return out;
}

std::string export_dot(const LGraph& g) {
  std::ostringstream os;
  os << "digraph lbruhat {\n  rankdir=BT;\n  node [shape=box];\n";
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    os << "  \"" << g.vertices[i].to_string() << "\" [label=\"" << g.vertices[i].to_string()
       << " / " << g.weight[i].to_string() << "\"];\n";
  }
  for (const LEdge& e : g.edges) {
    os << "  \"" << g.vertices[e.from].to_string() << "\" -> \"" << g.vertices[e.to].to_string()
       << "\" [label=\"m=" << e.mult << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const LGraph& g) {
  json j;
  j["type"] = g.rs->name();
  j["p"] = g.P.to_string();
  j["v"] = g.v.to_string();
  j["w"] = g.w.to_string();
  j["lambda_kind"] = g.lambda.kind;
  json vs = json::array();
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    json v;
    v["word"] = g.vertices[i].to_string();
    v["weight"] = g.weight[i].to_string();
    v["weight_coeffs"] = g.weight[i].coeffs;
    v["lambda"] = to_string(g.lambda.at(g.vertices[i]));
    vs.push_back(v);
  }
  j["vertices"] = vs;
  json es = json::array();
  for (const LEdge& e : g.edges) {
    json je;
    je["from"] = g.vertices[e.from].to_string();
    je["to"] = g.vertices[e.to].to_string();
    je["gamma"] = to_string(e.gamma);
    je["beta"] = to_string(e.beta);
    je["mult"] = e.mult;
    es.push_back(je);
  }
  j["edges"] = es;
  return j.dump(2);
}

LGraph lgraph_from_json(const RootSystem& rs, const std::string& text) {
  json j = json::parse(text);
  if (j.at("type").get<std::string>() != rs.name())
    throw parse_error("graph JSON is for type " + j.at("type").get<std::string>());
  ParabolicSet P = ParabolicSet::parse(j.at("p").get<std::string>(), rs.rank());
  WeylElt v = WeylElt::from_word(rs, parse_word(j.at("v").get<std::string>(), rs.rank()));
  WeylElt w = WeylElt::from_word(rs, parse_word(j.at("w").get<std::string>(), rs.rank()));
  std::map<WeylElt, WeightVec> table;
  for (const auto& jv : j.at("vertices")) {
    WeylElt x = WeylElt::from_word(rs, parse_word(jv.at("word").get<std::string>(), rs.rank()));
    table.emplace(x, parse_weight(jv.at("lambda").get<std::string>(), rs.rank()));
  }
  auto iv = interval(v, w, P);
  AdmissibleFn fn = custom_admissible(std::move(table), iv, w, P);
  fn.kind = j.at("lambda_kind").get<std::string>();
  return build_lgraph(v, w, P, fn);
}

}  // namespace bruhat
