#include "bruhat/heaps.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bruhat/localize.hpp"

namespace bruhat {

Heap heap_of_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElt w = WeylElt::from_word(rs, word);
  if (w.length() != static_cast<int>(word.size()))
    throw precondition_error("heap requires a reduced word");
  Heap h;
  h.rs = &rs;
  h.word = word;
  const int n = h.size();
  h.below.assign(n, std::vector<bool>(n, false));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      if (word[j] != word[k] && rs.a(word[j], word[k]) != 0) h.below[j][k] = true;
  // Transitive closure in position order.
  for (int m = 0; m < n; ++m)
    for (int j = 0; j < m; ++j)
      if (h.below[j][m])
        for (int k = m + 1; k < n; ++k)
          if (h.below[m][k]) h.below[j][k] = true;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      if (!h.below[j][k]) continue;
      bool cover = true;
      for (int m = j + 1; m < k && cover; ++m)
        if (h.below[j][m] && h.below[m][k]) cover = false;
      if (cover) h.covers.emplace_back(j, k);
    }
  return h;
}

std::vector<int> Heap::maximal_elements() const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j) {
    bool maximal = true;
    for (int k = j + 1; k < size() && maximal; ++k)
      if (below[j][k]) maximal = false;
    if (maximal) out.push_back(j);
  }
  return out;
}

std::vector<std::vector<int>> Heap::components() const {
  const int n = size();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (const auto& [x, y] : covers) {
        int other = -1;
        if (x == a) other = y;
        else if (y == a) other = x;
        if (other >= 0 && comp[other] < 0) {
          comp[other] = next;
          stack.push_back(other);
        }
      }
    }
    ++next;
  }
  std::vector<std::vector<int>> out(next);
  for (int j = 0; j < n; ++j) out[comp[j]].push_back(j);
  return out;
}

namespace {

bool iso_backtrack(const Heap& a, const Heap& b, std::vector<int>& img, std::vector<bool>& used,
                   int pos) {
  const int n = a.size();
  if (pos == n) return true;
  for (int t = 0; t < n; ++t) {
    if (used[t] || a.color(pos) != b.color(t)) continue;
    bool ok = true;
    for (int j = 0; j < pos && ok; ++j) {
      if (a.lt(j, pos) != b.lt(img[j], t)) ok = false;
      if (a.lt(pos, j) != b.lt(t, img[j])) ok = false;
    }
    if (!ok) continue;
    img[pos] = t;
    used[t] = true;
    if (iso_backtrack(a, b, img, used, pos + 1)) return true;
    used[t] = false;
  }
  return false;
}

}  // namespace

bool heaps_isomorphic(const Heap& a, const Heap& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> ca = a.word, cb = b.word;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return false;
  std::vector<int> img(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  return iso_backtrack(a, b, img, used, 0);
}

std::vector<Diagram> order_filters(const Heap& h, const Diagram& ground) {
  // BFS over filters of the induced subposet: grow by any element whose
  // up-set within ground is already present.
  std::set<Diagram> seen{{}};
  std::vector<Diagram> work{{}};
  while (!work.empty()) {
    Diagram f = work.back();
    work.pop_back();
    for (int g : ground) {
      if (std::binary_search(f.begin(), f.end(), g)) continue;
      bool can_add = true;
      for (int x : ground)
        if (h.lt(g, x) && !std::binary_search(f.begin(), f.end(), x)) { can_add = false; break; }
      if (!can_add) continue;
      Diagram f2 = f;
      f2.insert(std::lower_bound(f2.begin(), f2.end(), g), g);
      if (seen.insert(f2).second) work.push_back(f2);
    }
  }
  return std::vector<Diagram>(seen.begin(), seen.end());
}

std::vector<Diagram> order_filters(const Heap& h) {
  Diagram ground(h.size());
  for (int j = 0; j < h.size(); ++j) ground[j] = j;
  return order_filters(h, ground);
}

Diagram filter_of(const WeylElt& v, const Heap& hw, const WeightVec& pi) {
  const RootSystem& rs = v.system();
  if (!is_pi_minuscule(v, pi))
    throw precondition_error("filter embedding requires a pi-minuscule v");
  Diagram f;
  WeylElt u = v;
  for (int k = hw.size() - 1; k >= 0; --k) {
    int i = hw.color(k);
    if (u.right_descent(i)) {
      f.push_back(k);
      u = u * WeylElt::simple(rs, i);
    }
  }
  if (!u.is_identity()) throw precondition_error("v is not below the heap word");
  std::sort(f.begin(), f.end());
  // The selection must be an order filter of the heap.
  for (int p : f)
    for (int q = p + 1; q < hw.size(); ++q)
      if (hw.lt(p, q))
        check_internal(std::binary_search(f.begin(), f.end(), q),
                       "greedy embedding is not an order filter");
  return f;
}

std::vector<Diagram> elementary_excitations(const Diagram& d, const Heap& h) {
  std::vector<Diagram> out;
  for (int q : d) {
    for (int p = 0; p < h.size(); ++p) {
      if (!h.lt(p, q) || h.color(p) != h.color(q)) continue;
      if (std::binary_search(d.begin(), d.end(), p)) continue;
      bool consecutive = true;
      for (int z = 0; z < h.size() && consecutive; ++z)
        if (z != p && z != q && h.color(z) == h.color(p) && h.lt(p, z) && h.lt(z, q))
          consecutive = false;
      if (!consecutive) continue;
      bool clear = true;
      for (int u : d) {
        if (u != q && !(h.lt(p, u) && h.lt(u, q))) continue;
        if (u == q) continue;  // same color as p
        if (h.rs->a(h.color(p), h.color(u)) != 0 && h.color(p) != h.color(u)) { clear = false; break; }
      }
      if (!clear) continue;
      Diagram d2;
      for (int x : d)
        if (x != q) d2.push_back(x);
      d2.insert(std::lower_bound(d2.begin(), d2.end(), p), p);
      out.push_back(std::move(d2));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagram> excited_diagrams(const Diagram& f, const Heap& h) {
  std::set<Diagram> seen{f};
  std::vector<Diagram> work{f};
  while (!work.empty()) {
    Diagram d = work.back();
    work.pop_back();
    for (Diagram& d2 : elementary_excitations(d, h))
      if (seen.insert(d2).second) work.push_back(d2);
  }
  return std::vector<Diagram>(seen.begin(), seen.end());
}

Int multiplicity(const WeylElt& v, const WeylElt& w, const WeightVec& pi) {
  const RootSystem& rs = w.system();
  if (!rs.simply_laced())
    throw precondition_error(
        "excited-diagram multiplicity needs a simply-laced system; use the Kumar test instead");
  if (!is_pi_minuscule(w, pi)) throw precondition_error("w must be pi-minuscule");
  ParabolicSet P = stabilizer_parabolic(rs, pi);
  if (!is_min_coset_rep(v, P) || !bruhat_leq(v, w))
    throw precondition_error("v must be a minimal representative below w");
  Heap hw = heap_of_word(rs, w.word());
  Diagram f = filter_of(v, hw, pi);
  Int count = static_cast<long long>(excited_diagrams(f, hw).size());
  Int via_loc = phi_evaluate(billey_loc(v, w, P), w, pi);
  check_internal(count == via_loc, "excited-diagram count disagrees with localization");
  return count;
}

namespace {

// len(alpha_j) <= len(alpha_i) read off the Cartan matrix.
bool length_at_most(const RootSystem& rs, int j, int i) {
  return std::abs(rs.a(i, j)) <= std::abs(rs.a(j, i));
}

}  // namespace

DominantMinusculeResult is_dominant_minuscule(const RootSystem& rs, const std::vector<int>& word) {
  DominantMinusculeResult res;
  res.pi = WeightVec(std::vector<int>(rs.rank(), 0));
  WeylElt w = WeylElt::from_word(rs, word);
  if (w.length() != static_cast<int>(word.size()))
    throw precondition_error("dominant-minuscule test requires a reduced word");
  if (word.empty()) {
    res.ok = true;
    res.degenerate = true;
    return res;
  }
  const int n = static_cast<int>(word.size());
  // Between consecutive occurrences of a generator: either two non-commuting
  // letters of length at most alpha_i, or one with pairing -2.
  for (int a = 0; a < n; ++a) {
    int i = word[a];
    int b = -1;
    for (int k = a + 1; k < n; ++k)
      if (word[k] == i) { b = k; break; }
    if (b < 0) continue;
    std::vector<int> between;
    for (int k = a + 1; k < b; ++k)
      if (word[k] != i && rs.a(i, word[k]) != 0) between.push_back(word[k]);
    if (between.size() == 2) {
      if (!length_at_most(rs, between[0], i) || !length_at_most(rs, between[1], i)) return res;
    } else if (between.size() == 1) {
      if (rs.a(i, between[0]) != -2) return res;
    } else {
      return res;
    }
  }
  // After the last occurrence of each generator: at most one non-commuting
  // letter, of length at most alpha_i.
  for (int i = 0; i < rs.rank(); ++i) {
    int last = -1;
    for (int k = 0; k < n; ++k)
      if (word[k] == i) last = k;
    if (last < 0) continue;
    std::vector<int> after;
    for (int k = last + 1; k < n; ++k)
      if (word[k] != i && rs.a(i, word[k]) != 0) after.push_back(word[k]);
    if (after.size() > 1) return res;
    if (after.size() == 1 && !length_at_most(rs, after[0], i)) return res;
  }
  res.ok = true;
  Heap h = heap_of_word(rs, word);
  for (int m : h.maximal_elements()) res.pi.c[h.color(m)] += 1;
  check_internal(is_pi_minuscule(w, res.pi), "recovered weight fails the minuscule walk");
  return res;
}

SmoothnessReport smoothness_equiv(const WeylElt& v, const WeylElt& w, const WeightVec& pi) {
  const RootSystem& rs = w.system();
  if (!rs.simply_laced())
    throw precondition_error("three-way smoothness equivalence is simply-laced only");
  if (!is_pi_minuscule(w, pi)) throw precondition_error("w must be pi-minuscule");
  ParabolicSet P = stabilizer_parabolic(rs, pi);
  if (!is_min_coset_rep(v, P) || !bruhat_leq(v, w))
    throw precondition_error("v must be a minimal representative below w");

  SmoothnessReport rep;
  auto iv = interval(v, w, P);
  AdmissibleFn fn = constant_admissible(pi, iv, w, P);
  HookVerdict hv = smooth_via_hook(v, w, P, fn);
  rep.hook_smooth = hv.smooth;
  rep.kumar = kumar_smooth(v, w, P);

  Heap hw = heap_of_word(rs, w.word());
  Diagram f = filter_of(v, hw, pi);
  rep.excited_count = static_cast<long long>(excited_diagrams(f, hw).size());
  rep.excited_unique = (rep.excited_count == 1);

  WeylElt wv = w * v.inverse();
  DominantMinusculeResult dm = is_dominant_minuscule(rs, wv.word());
  rep.dominant_minuscule = dm.ok;
  rep.pi_prime = dm.pi;

  rep.agree = (rep.hook_smooth == rep.kumar) && (rep.kumar == rep.excited_unique) &&
              (rep.excited_unique == rep.dominant_minuscule);
  check_internal(rep.agree, "smoothness criteria disagree");

  if (rep.hook_smooth) {
    // Skew inversion sets match the straight ones of z v^{-1}.
    rep.skew_sets_match = true;
    for (const WeylElt& z : iv) {
      auto skew = skew_set(v, z, P);
      auto straight = inversion_reflections(z * v.inverse());
      std::sort(straight.begin(), straight.end(),
                [](const RootVec& a, const RootVec& b) {
                  if (height(a) != height(b)) return height(a) < height(b);
                  return a.c < b.c;
                });
      if (skew != straight) rep.skew_sets_match = false;
    }
    // Decorated graph isomorphism under z -> z v^{-1}.
    ParabolicSet Pp = stabilizer_parabolic(rs, dm.pi);
    WeylElt id = WeylElt::identity(rs);
    auto iv2 = interval(id, wv, Pp);
    LGraph g1 = build_lgraph(v, w, P, fn);
    LGraph g2 = build_lgraph(id, wv, Pp, constant_admissible(dm.pi, iv2, wv, Pp));
    rep.graph_isomorphic = g1.vertices.size() == g2.vertices.size();
    if (rep.graph_isomorphic) {
      WeylElt vinv = v.inverse();
      std::vector<int> map(g1.vertices.size(), -1);
      for (size_t i = 0; i < g1.vertices.size() && rep.graph_isomorphic; ++i) {
        int j = g2.index_of(g1.vertices[i] * vinv);
        if (j < 0 || !(g1.weight[i] == g2.weight[j])) rep.graph_isomorphic = false;
        map[i] = j;
      }
      if (rep.graph_isomorphic) {
        auto key = [](int a, int b, const RootVec& beta, long long m) {
          return std::make_tuple(a, b, beta.c, m);
        };
        std::set<std::tuple<int, int, std::vector<int>, long long>> e1, e2;
        for (const LEdge& e : g1.edges) e1.insert(key(map[e.from], map[e.to], e.beta, e.mult));
        for (const LEdge& e : g2.edges) e2.insert(key(e.from, e.to, e.beta, e.mult));
        rep.graph_isomorphic = (e1 == e2);
      }
    }
  }
  return rep;
}

SkewRedCount skew_red_count(const WeylElt& v, const WeylElt& w, const WeightVec& pi) {
  const RootSystem& rs = w.system();
  if (!is_pi_minuscule(w, pi)) throw precondition_error("w must be pi-minuscule");
  ParabolicSet P = stabilizer_parabolic(rs, pi);
  if (!is_min_coset_rep(v, P) || !bruhat_leq(v, w))
    throw precondition_error("v must be a minimal representative below w");
  Heap hw = heap_of_word(rs, w.word());
  BetaSequence bs = beta_sequence(w);
  check_internal(bs.word == hw.word, "heap and beta sequence must share the word");
  Diagram f = filter_of(v, hw, pi);
  auto diagrams = excited_diagrams(f, hw);

  SkewRedCount out;
  out.diagrams = static_cast<long long>(diagrams.size());
  out.factorial = factorial(w.length() - v.length());
  Rat sum = 0;
  for (const Diagram& d : diagrams) {
    Int denom = 1;
    for (int p = 0; p < hw.size(); ++p) {
      if (std::binary_search(d.begin(), d.end(), p)) continue;
      denom *= height(bs.betas[p]);
    }
    sum += Rat(1, denom);
  }
  Rat total = Rat(out.factorial) * sum;
  check_internal(boost::multiprecision::denominator(total) == 1,
                 "excited-diagram count must be integral");
  out.count = boost::multiprecision::numerator(total);
  out.oracle = count_reduced_words(w * v.inverse());
  check_internal(out.count == out.oracle, "excited-diagram count disagrees with the DP oracle");
  return out;
}

}  // namespace bruhat
