// Acceptance suite: every criterion below is exact (no tolerances) and runs
// against a wall-clock budget. One PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "bruhat/heaps.hpp"
#include "bruhat/lgraph.hpp"
#include "bruhat/localize.hpp"

using namespace bruhat;

namespace {

struct Criterion {
  int id;
  std::string description;
  double budget_seconds;
  std::function<void(std::ostringstream&)> run;  // throws or writes on failure
};

FactoredFraction inv_root(const RootSystem& rs, const std::string& s) {
  return FactoredFraction::inv_linform(LinForm::of_root(parse_root(s, rs.rank())));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

std::vector<ParabolicSet> maximal_parabolics_and_borel(const RootSystem& rs) {
  std::vector<ParabolicSet> out{ParabolicSet{}};
  for (int drop = 0; drop < rs.rank(); ++drop) {
    ParabolicSet P;
    for (int i = 0; i < rs.rank(); ++i)
      if (i != drop) P.mask |= 1u << i;
    out.push_back(P);
  }
  return out;
}

void criterion1(std::ostringstream& note) {
  RootSystem b3 = RootSystem::from_name("B3");
  ParabolicSet P = ParabolicSet::parse("1,3", 3);
  WeylElt id = WeylElt::identity(b3);
  WeylElt w = WeylElt::from_word(b3, parse_word("2 1 3 2", 3));
  LGraph g = build_lgraph_standard(id, w, P);
  require(g.vertices.size() == 7, "expected 7 vertices");
  require(g.edges.size() == 15, "expected 15 edges");
  const std::map<std::string, std::string> weights{
      {"id", "a1+3a2+2a3"}, {"2", "a1+2a2+2a3"}, {"3 2", "a1+2a2"},    {"1 2", "2a2+2a3"},
      {"2 3 2", "a1+a2"},   {"1 3 2", "2a2"},    {"2 1 3 2", "0"}};
  for (size_t i = 0; i < g.vertices.size(); ++i)
    require(weights.at(g.vertices[i].to_string()) == g.weight[i].to_string(),
            "weight mismatch at " + g.vertices[i].to_string());
  int doubles = 0;
  for (const LEdge& e : g.edges) {
    require(e.mult == 1 || e.mult == 2, "unexpected multiplicity");
    if (e.mult == 2) ++doubles;
  }
  require(doubles == 5, "expected 5 double edges");
  note << "7 vertices, 15 edges, 5 double";
}

void criterion2(std::ostringstream& note) {
  RootSystem b3 = RootSystem::from_name("B3");
  ParabolicSet P = ParabolicSet::parse("1,3", 3);
  WeylElt v = WeylElt::from_word(b3, parse_word("3 2", 3));
  WeylElt w = WeylElt::from_word(b3, parse_word("2 1 3 2", 3));
  PathSum ps = path_sum(build_lgraph_standard(v, w, P));
  FactoredFraction hook = (FactoredFraction::one(3) + inv_root(b3, "a2")) *
                          (FactoredFraction::one(3) + inv_root(b3, "a1+a2"));
  require(ff_equal(ps.total, hook), "path sum must equal the two-factor hook product");
  note << "total = " << ps.total.to_string();
}

void criterion3(std::ostringstream& note) {
  RootSystem b3 = RootSystem::from_name("B3");
  ParabolicSet P = ParabolicSet::parse("1,3", 3);
  WeylElt v = WeylElt::from_word(b3, {1});
  WeylElt w = WeylElt::from_word(b3, parse_word("2 3 2", 3));
  HookVerdict hv = smooth_via_hook(v, w, P);
  require(!hv.smooth, "pair must be singular");
  require(kumar_smooth(v, w, P) == false, "Kumar test must agree");
  note << "singular, Kumar agrees";
}

void criterion4(std::ostringstream& note) {
  int swept = 0;
  for (const char* name : {"A1", "A2", "A3", "A4", "B3", "D4"}) {
    RootSystem rs = RootSystem::from_name(name);
    WeylElt id = WeylElt::identity(rs);
    for (int k = 0; k < rs.rank(); ++k) {
      std::vector<int> c(rs.rank(), 0);
      c[k] = 1;
      WeightVec pi(c);
      ParabolicSet P = stabilizer_parabolic(rs, pi);
      for (const WeylElt& w : pi_minuscule_elements(rs, pi)) {
        auto iv = interval(id, w, P);
        HookVerdict hv = smooth_via_hook(id, w, P, constant_admissible(pi, iv, w, P));
        require(hv.smooth, std::string(name) + ": identity fails at w = " + w.to_string());
        ++swept;
      }
    }
  }
  note << swept << " minuscule elements swept";
}

void criterion5(std::ostringstream& note) {
  int pairs = 0;
  for (const char* name : {"A2", "A3", "B2", "B3"}) {
    RootSystem rs = RootSystem::from_name(name);
    for (ParabolicSet P : maximal_parabolics_and_borel(rs)) {
      auto reps = min_reps(rs, P);
      for (const WeylElt& w : reps)
        for (const WeylElt& v : reps) {
          if (!bruhat_leq(v, w)) continue;
          PathSum ps = path_sum(build_lgraph_standard(v, w, P));
          require(ff_equal(ps.total, eq_mult_richardson(v, w, P)),
                  std::string(name) + ": mismatch at (" + v.to_string() + ", " + w.to_string() +
                      ") P=" + P.to_string());
          ++pairs;
        }
    }
  }
  note << pairs << " pairs checked";
}

void criterion6(std::ostringstream& note) {
  int checked = 0;
  bool saw22 = false, saw33 = false;
  for (const char* name : {"A4", "D4", "B3"}) {
    RootSystem rs = RootSystem::from_name(name);
    for (const WeylElt& w : all_elements(rs)) {
      if (w.length() > 12) continue;
      auto dm = is_dominant_minuscule(rs, w.word());
      if (!dm.ok || w.is_identity()) continue;
      Int prod = 1;
      for (const RootVec& beta : inversion_reflections(w)) prod *= height(beta);
      require(count_reduced_words(w) * prod == factorial(w.length()),
              std::string(name) + ": hook count fails at " + w.to_string());
      ++checked;
      if (std::string(name) == "A4") {
        if (w == WeylElt::from_word(rs, parse_word("2 1 3 2", 4))) {
          require(count_reduced_words(w) == 2, "two-row square must count 2 tableaux");
          saw22 = true;
        }
        if (w == WeylElt::from_word(rs, parse_word("3 2 1 4 3 2", 4))) {
          require(count_reduced_words(w) == 5, "two-column rectangle must count 5 tableaux");
          saw33 = true;
        }
      }
    }
  }
  require(saw22 && saw33, "classical tableau cases must appear in the sweep");
  note << checked << " dominant minuscule elements";
}

void criterion7(std::ostringstream& note) {
  RootSystem a9 = RootSystem::from_name("A9");
  WeylElt w = WeylElt::from_word(a9, parse_word("2 1 3 2 5 8 7 6 9 8 7", 9));
  WeylElt v = WeylElt::from_word(a9, parse_word("2 8 7", 9));
  WeightVec pi = parse_weight("w2+w7", 9);
  ParabolicSet P = stabilizer_parabolic(a9, pi);

  Heap hw = heap_of_word(a9, w.word());
  auto diagrams = excited_diagrams(filter_of(v, hw, pi), hw);
  require(diagrams.size() == 6, "expected 6 excited diagrams");
  require(phi_evaluate(billey_loc(v, w, P), w, pi) == 6, "principal evaluation must be 6");
  SkewRedCount c = skew_red_count(v, w, pi);
  Int dfs = Int(reduced_words(w * v.inverse()).size());
  require(c.count == dfs, "formula count must match the DFS oracle");
  note << "6 diagrams, #Red = " << c.count.str();
}

void criterion8(std::ostringstream& note) {
  RootSystem e8 = RootSystem::from_name("E8");
  WeylElt w = WeylElt::from_word(e8, parse_word("2 4 5 3 4 2 1 3 4 5 6 7 8", 8));
  WeylElt v = WeylElt::from_word(e8, parse_word("2 4 5 6 7 8", 8));
  WeightVec pi = parse_weight("w8", 8);
  Heap hw = heap_of_word(e8, w.word());
  auto diagrams = excited_diagrams(filter_of(v, hw, pi), hw);
  require(diagrams.size() == 5, "expected 5 excited diagrams");
  require(multiplicity(v, w, pi) == 5, "multiplicity must be 5");
  note << "5 diagrams, multiplicity 5";
}

void criterion9(std::ostringstream& note) {
  RootSystem a9 = RootSystem::from_name("A9");
  WeylElt w = WeylElt::from_word(a9, parse_word("2 1 3 2 5 4 3 8 7 6 5 4 9 8 7 6 5", 9));
  WeylElt v = WeylElt::from_word(a9, parse_word("4 3 5 4 6 5", 9));
  WeightVec pi = parse_weight("w5", 9);
  SmoothnessReport rep = smoothness_equiv(v, w, pi);
  require(rep.excited_count == 1, "expected a unique excited diagram");
  require(rep.kumar, "Kumar test must report smooth");
  require(rep.dominant_minuscule, "w v^{-1} must be dominant minuscule");
  require(rep.skew_sets_match, "skew inversion sets must transport");
  require(rep.graph_isomorphic, "decorated graphs must be isomorphic vertex-by-vertex");
  note << "smooth, quotient graph isomorphic, pi' = " << to_string(rep.pi_prime);
}

void criterion10(std::ostringstream& note) {
  int pairs = 0;
  for (const char* name : {"A3", "D4"}) {
    RootSystem rs = RootSystem::from_name(name);
    for (int k = 0; k < rs.rank(); ++k) {
      std::vector<int> c(rs.rank(), 0);
      c[k] = 1;
      WeightVec pi(c);
      auto mins = pi_minuscule_elements(rs, pi);
      for (const WeylElt& w : mins)
        for (const WeylElt& v : mins) {
          if (!bruhat_leq(v, w)) continue;
          SmoothnessReport rep = smoothness_equiv(v, w, pi);  // throws on disagreement
          require(rep.agree, "three-way agreement failed");
          ++pairs;
        }
    }
  }
  note << pairs << " minuscule pairs";
}

void criterion11(std::ostringstream& note) {
  RootSystem f4 = RootSystem::from_name("F4");
  WeylElt w = WeylElt::from_word(f4, parse_word("1 3 2 4 3 2 1", 4));
  WeylElt v = WeylElt::from_word(f4, {0});
  auto dm = is_dominant_minuscule(f4, w.word());
  require(dm.ok, "w itself must be dominant minuscule");
  ParabolicSet P = stabilizer_parabolic(f4, dm.pi);
  require(kumar_smooth(v, w, P), "Kumar test must report smooth");
  require(!is_dominant_minuscule(f4, (w * v.inverse()).word()).ok,
          "w v^{-1} must not be dominant minuscule");
  note << "smooth but w v^{-1} not dominant minuscule";
}

void criterion12(std::ostringstream& note) {
  int verified = 0;
  struct Case {
    const char* type;
    const char* p;
  };
  for (Case c : {Case{"A2", ""}, Case{"A3", "1,3"}}) {
    RootSystem rs = RootSystem::from_name(c.type);
    ParabolicSet P = ParabolicSet::parse(c.p, rs.rank());
    auto reps = min_reps(rs, P);
    SmlrSession session(rs, P);
    SmlrSession alt(rs, P);
    alt.set_lambda_chooser([&rs, P](const WeylElt& u, const WeylElt& w) {
      for (int i = rs.rank() - 1; i >= 0; --i) {
        if (P.contains(i)) continue;
        std::vector<int> cc(rs.rank(), 0);
        cc[i] = 3;
        WeightVec lam(cc);
        if (u.act(lam) != w.act(lam)) return lam;
      }
      return SmlrSession(rs, P).default_lambda(u, w);
    });
    std::map<WeylElt, std::map<WeylElt, FactoredFraction>> cell;  // z -> w -> value
    for (const WeylElt& z : reps)
      for (const WeylElt& w : reps) cell[z].emplace(w, sm_cell_loc(w, z, P));
    for (const WeylElt& u : reps)
      for (const WeylElt& v : reps) {
        for (const WeylElt& z : reps) {
          FactoredFraction sum = FactoredFraction::zero(rs.rank());
          for (const WeylElt& w : reps) sum = sum + session.coeff(u, v, w) * cell[z].at(w);
          require(ff_equal(sum, cell[z].at(u) * cell[z].at(v)),
                  std::string(c.type) + ": localization identity fails");
          ++verified;
        }
        for (const WeylElt& w : reps)
          require(ff_equal(session.coeff(u, v, w), alt.coeff(u, v, w)),
                  std::string(c.type) + ": lambda choice changed a coefficient");
      }
  }
  note << verified << " localized identities";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "submaximal isotropic graph fidelity (7 vertices, weights, 15 edges, 5 double)", 1.0,
       criterion1},
      {2, "smooth interval: path sum equals the hook product", 1.0, criterion2},
      {3, "singular interval: path sum differs; Kumar agrees", 1.0, criterion3},
      {4, "hook identity for all fundamental minuscule elements (A1-A4, B3, D4)", 120.0,
       criterion4},
      {5, "path sums equal localization ratios on all small quotients", 300.0, criterion5},
      {6, "hook count formula for dominant minuscule elements up to length 12", 60.0, criterion6},
      {7, "rank-nine skew pair: six excited diagrams and matching counts", 10.0, criterion7},
      {8, "E8 skew pair: five excited diagrams, multiplicity five", 10.0, criterion8},
      {9, "Gr(5,10) smooth pair: all criteria plus the quotient graph isomorphism", 30.0,
       criterion9},
      {10, "three-way smoothness agreement over all minuscule pairs (A3, D4)", 300.0, criterion10},
      {11, "F4 boundary: smooth without dominant minusculeness", 5.0, criterion11},
      {12, "structure-constant tables satisfy localization and lambda independence", 300.0,
       criterion12},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::ostringstream note;
    std::string error;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(note);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = error.empty() && elapsed <= c.budget_seconds;
    if (!ok) ++failures;
    std::printf("%s criterion %2d [%6.2fs / budget %6.0fs] %s", ok ? "PASS" : "FAIL", c.id,
                elapsed, c.budget_seconds, c.description.c_str());
    if (!note.str().empty()) std::printf(" -- %s", note.str().c_str());
    if (!error.empty()) std::printf(" -- ERROR: %s", error.c_str());
    if (error.empty() && elapsed > c.budget_seconds) std::printf(" -- OVER BUDGET");
    std::printf("\n");
    std::fflush(stdout);
  }
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
