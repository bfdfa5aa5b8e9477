#include "bruhat/jobspec.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bruhat/heaps.hpp"
#include "bruhat/localize.hpp"

namespace bruhat {

using json = nlohmann::json;

std::string JobSpec::to_json() const {
  json j;
  j["command"] = command;
  j["type"] = type;
  j["p"] = p;
  j["u"] = u;
  j["v"] = v;
  j["w"] = w;
  j["lambda"] = lambda;
  j["word"] = word;
  j["filter"] = filter;
  j["pi"] = pi;
  j["format"] = format;
  j["out"] = out;
  j["dot"] = dot;
  j["at"] = at;
  j["batch"] = batch;
  j["oracle"] = oracle;
  j["list_excited"] = list_excited;
  return j.dump(2);
}

JobSpec JobSpec::from_json(const std::string& text) {
  json j = json::parse(text);
  JobSpec s;
  s.command = j.value("command", "");
  s.type = j.value("type", "");
  s.p = j.value("p", "");
  s.u = j.value("u", "");
  s.v = j.value("v", "");
  s.w = j.value("w", "");
  s.lambda = j.value("lambda", "standard");
  s.word = j.value("word", "");
  s.filter = j.value("filter", "");
  s.pi = j.value("pi", "");
  s.format = j.value("format", "text");
  s.out = j.value("out", "");
  s.dot = j.value("dot", "");
  s.at = j.value("at", "");
  s.batch = j.value("batch", false);
  s.oracle = j.value("oracle", false);
  s.list_excited = j.value("list_excited", false);
  return s;
}

bool JobSpec::operator==(const JobSpec& o) const {
  return command == o.command && type == o.type && p == o.p && u == o.u && v == o.v &&
         w == o.w && lambda == o.lambda && word == o.word && filter == o.filter && pi == o.pi &&
         format == o.format && out == o.out && dot == o.dot && at == o.at && batch == o.batch &&
         oracle == o.oracle && list_excited == o.list_excited;
}

namespace {

AdmissibleFn make_admissible(const JobSpec& spec, const RootSystem& rs,
                             const std::vector<WeylElt>& iv, const WeylElt& w, ParabolicSet P) {
  if (spec.lambda.empty() || spec.lambda == "standard")
    return standard_admissible(iv, w, P);
  if (spec.lambda.rfind("constant:", 0) == 0) {
    WeightVec pi = parse_weight(spec.lambda.substr(9), rs.rank());
    return constant_admissible(pi, iv, w, P);
  }
  if (spec.lambda.rfind("table:", 0) == 0) {
    std::ifstream in(spec.lambda.substr(6));
    if (!in) throw parse_error("cannot read lambda table " + spec.lambda.substr(6));
    json j = json::parse(in, nullptr, true);
    std::map<WeylElt, WeightVec> table;
    for (auto it = j.begin(); it != j.end(); ++it) {
      WeylElt x = WeylElt::from_word(rs, parse_word(it.key(), rs.rank()));
      table.emplace(x, parse_weight(it.value().get<std::string>(), rs.rank()));
    }
    return custom_admissible(std::move(table), iv, w, P);
  }
  throw parse_error("unknown lambda spec: " + spec.lambda);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write " + path);
  out << content;
}

std::vector<Rat> parse_point(const std::string& s, int rank) {
  std::vector<Rat> pt;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto slash = tok.find('/');
    try {
      if (slash == std::string::npos) pt.push_back(Rat(std::stoll(tok)));
      else pt.push_back(Rat(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1))));
    } catch (const std::exception&) {
      throw parse_error("bad evaluation point: " + s);
    }
  }
  if (static_cast<int>(pt.size()) != rank) throw parse_error("evaluation point rank mismatch");
  return pt;
}

std::string heap_dot(const Heap& h) {
  std::ostringstream os;
  os << "digraph heap {\n  rankdir=BT;\n";
  for (int j = 0; j < h.size(); ++j)
    os << "  p" << (j + 1) << " [label=\"p" << (j + 1) << " : " << (h.color(j) + 1) << "\"];\n";
  for (const auto& [a, b] : h.covers) os << "  p" << (a + 1) << " -> p" << (b + 1) << ";\n";
  os << "}\n";
  return os.str();
}

json verdict_json(const HookVerdict& hv) {
  json j;
  j["lhs"] = json::parse(hv.path_total.to_json());
  j["rhs"] = json::parse(hv.hook.to_json());
  j["equal"] = hv.smooth;
  j["verdict"] = hv.smooth ? "smooth" : "singular";
  return j;
}

int cmd_graph(const JobSpec& spec, std::ostringstream& os) {
  auto rs = std::make_shared<RootSystem>(RootSystem::from_name(spec.type));
  ParabolicSet P = ParabolicSet::parse(spec.p, rs->rank());
  WeylElt v = WeylElt::from_word(*rs, parse_word(spec.v, rs->rank()));
  WeylElt w = WeylElt::from_word(*rs, parse_word(spec.w, rs->rank()));
  auto iv = interval(v, w, P);
  AdmissibleFn fn = make_admissible(spec, *rs, iv, w, P);
  LGraph g = build_lgraph(v, w, P, fn);
  std::string js = export_json(g);
  if (!spec.dot.empty()) write_file(spec.dot, export_dot(g));
  if (!spec.out.empty()) write_file(spec.out, js);
  if (spec.format == "json") {
    os << js << "\n";
    return 0;
  }
  os << "graph on [" << v.to_string() << ", " << w.to_string() << "]^P, P=" << P.to_string()
     << ", " << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
  for (size_t i = 0; i < g.vertices.size(); ++i)
    os << "  " << g.vertices[i].to_string() << "  W = " << g.weight[i].to_string() << "\n";
  for (const LEdge& e : g.edges)
    os << "  " << g.vertices[e.from].to_string() << " -> " << g.vertices[e.to].to_string()
       << "  m=" << e.mult << "  beta=" << to_string(e.beta) << "\n";
  return 0;
}

int cmd_verify(const JobSpec& spec, std::ostringstream& os) {
  auto rs = std::make_shared<RootSystem>(RootSystem::from_name(spec.type));
  ParabolicSet P = ParabolicSet::parse(spec.p, rs->rank());
  if (spec.batch) {
    WeylElt id = WeylElt::identity(*rs);
    std::vector<WeylElt> reps = min_reps(*rs, P);
    json rows = json::array();
    for (const WeylElt& w : reps)
      for (const WeylElt& v : reps) {
        if (!bruhat_leq(v, w)) continue;
        auto iv = interval(v, w, P);
        HookVerdict hv = smooth_via_hook(v, w, P, make_admissible(spec, *rs, iv, w, P));
        bool kumar_ok = true;
        if (spec.oracle) kumar_ok = (kumar_smooth(v, w, P) == hv.smooth);
        if (spec.format == "json") {
          json r;
          r["v"] = v.to_string();
          r["w"] = w.to_string();
          r["verdict"] = hv.smooth ? "smooth" : "singular";
          if (spec.oracle) r["kumar_agrees"] = kumar_ok;
          rows.push_back(r);
        } else {
          os << v.to_string() << " | " << w.to_string() << " | "
             << (hv.smooth ? "smooth" : "singular");
          if (spec.oracle) os << (kumar_ok ? "  [kumar ok]" : "  [KUMAR MISMATCH]");
          os << "\n";
        }
        if (!kumar_ok) throw internal_error("hook identity and Kumar test disagree");
      }
    if (spec.format == "json") os << rows.dump(2) << "\n";
    return 0;
  }
  WeylElt v = WeylElt::from_word(*rs, parse_word(spec.v, rs->rank()));
  WeylElt w = WeylElt::from_word(*rs, parse_word(spec.w, rs->rank()));
  auto iv = interval(v, w, P);
  HookVerdict hv = smooth_via_hook(v, w, P, make_admissible(spec, *rs, iv, w, P));
  json j = verdict_json(hv);
  if (spec.oracle) {
    bool k = kumar_smooth(v, w, P);
    j["kumar_agrees"] = (k == hv.smooth);
    if (k != hv.smooth) throw internal_error("hook identity and Kumar test disagree");
  }
  if (!spec.out.empty()) write_file(spec.out, j.dump(2));
  if (spec.format == "json") {
    os << j.dump(2) << "\n";
  } else {
    os << "lhs  = " << hv.path_total.to_string() << "\n";
    os << "rhs  = " << hv.hook.to_string() << "\n";
    os << "equal: " << (hv.smooth ? "true" : "false") << "\n";
    os << "verdict: " << (hv.smooth ? "smooth" : "singular") << "\n";
  }
  return 0;
}

int cmd_billey(const JobSpec& spec, std::ostringstream& os) {
  auto rs = std::make_shared<RootSystem>(RootSystem::from_name(spec.type));
  ParabolicSet P = ParabolicSet::parse(spec.p, rs->rank());
  WeylElt v = WeylElt::from_word(*rs, parse_word(spec.v, rs->rank()));
  WeylElt w = WeylElt::from_word(*rs, parse_word(spec.w, rs->rank()));
  Poly p = billey_loc(v, w, P);
  json j;
  j["value"] = p.to_string();
  if (!spec.at.empty()) {
    Rat val = p.eval(parse_point(spec.at, rs->rank()));
    j["at"] = spec.at;
    j["evaluated"] = val.str();
  }
  if (!spec.pi.empty()) {
    WeightVec pi = parse_weight(spec.pi, rs->rank());
    j["phi"] = phi_evaluate(p, w, pi).str();
  }
  if (!spec.out.empty()) write_file(spec.out, j.dump(2));
  if (spec.format == "json") os << j.dump(2) << "\n";
  else {
    os << "[Y(v)]|_w = " << p.to_string() << "\n";
    if (j.contains("evaluated")) os << "value at (" << spec.at << ") = " << j["evaluated"].get<std::string>() << "\n";
    if (j.contains("phi")) os << "phi evaluation = " << j["phi"].get<std::string>() << "\n";
  }
  return 0;
}

int cmd_smloc(const JobSpec& spec, std::ostringstream& os) {
  auto rs = std::make_shared<RootSystem>(RootSystem::from_name(spec.type));
  ParabolicSet P = ParabolicSet::parse(spec.p, rs->rank());
  WeylElt v = WeylElt::from_word(*rs, parse_word(spec.v, rs->rank()));
  WeylElt w = WeylElt::from_word(*rs, parse_word(spec.w, rs->rank()));
  FactoredFraction f = sm_cell_loc(v, w, P);
  json j;
  j["value"] = json::parse(f.to_json());
  if (!spec.at.empty()) j["evaluated"] = f.eval(parse_point(spec.at, rs->rank())).str();
  if (!spec.out.empty()) write_file(spec.out, j.dump(2));
  if (spec.format == "json") os << j.dump(2) << "\n";
  else {
    os << "s_M(Y(v)o)|_w = " << f.to_string() << "\n";
    if (j.contains("evaluated")) os << "value at (" << spec.at << ") = " << j["evaluated"].get<std::string>() << "\n";
  }
  return 0;
}

int cmd_eqmult(const JobSpec& spec, std::ostringstream& os) {
  auto rs = std::make_shared<RootSystem>(RootSystem::from_name(spec.type));
  ParabolicSet P = ParabolicSet::parse(spec.p, rs->rank());
  WeylElt v = WeylElt::from_word(*rs, parse_word(spec.v, rs->rank()));
  WeylElt w = WeylElt::from_word(*rs, parse_word(spec.w, rs->rank()));
  FactoredFraction f = eq_mult_richardson(v, w, P);
  json j;
  j["value"] = json::parse(f.to_json());
  if (!spec.at.empty()) j["evaluated"] = f.eval(parse_point(spec.at, rs->rank())).str();
  if (spec.oracle) {
    auto iv = interval(v, w, P);
    PathSum ps = path_sum(build_lgraph(v, w, P, make_admissible(spec, *rs, iv, w, P)));
    bool ok = ff_equal(f, ps.total);
    j["path_sum_agrees"] = ok;
    if (!ok) throw internal_error("localization ratio disagrees with the path sum");
  }
  if (!spec.out.empty()) write_file(spec.out, j.dump(2));
  if (spec.format == "json") os << j.dump(2) << "\n";
  else {
    os << "e_w(R_w^v) = " << f.to_string() << "\n";
    if (j.contains("path_sum_agrees")) os << "path sum agrees: true\n";
  }
  return 0;
}

int cmd_smlr(const JobSpec& spec, std::ostringstream& os) {
  auto rs = std::make_shared<RootSystem>(RootSystem::from_name(spec.type));
  ParabolicSet P = ParabolicSet::parse(spec.p, rs->rank());
  SmlrSession session(*rs, P);
  if (spec.batch) {
    std::vector<WeylElt> reps = min_reps(*rs, P);
    json rows = json::array();
    for (const WeylElt& u : reps)
      for (const WeylElt& v : reps)
        for (const WeylElt& w : reps) {
          const FactoredFraction& d = session.coeff(u, v, w);
          if (d.is_zero()) continue;
          json r;
          r["u"] = u.to_string();
          r["v"] = v.to_string();
          r["w"] = w.to_string();
          r["d"] = d.to_string();
          rows.push_back(r);
        }
    bool verified = false;
    if (spec.oracle) {
      for (const WeylElt& u : reps)
        for (const WeylElt& v : reps)
          for (const WeylElt& z : reps) {
            FactoredFraction sum = FactoredFraction::zero(rs->rank());
            for (const WeylElt& w : reps)
              sum = sum + session.coeff(u, v, w) * sm_cell_loc(w, z, P);
            FactoredFraction prod = sm_cell_loc(u, z, P) * sm_cell_loc(v, z, P);
            if (!ff_equal(sum, prod))
              throw internal_error("structure constants fail the localization identity");
          }
      verified = true;
    }
    if (spec.format == "json") {
      json j;
      j["coefficients"] = rows;
      if (spec.oracle) j["localization_identity"] = verified;
      os << j.dump(2) << "\n";
    } else {
      for (const auto& r : rows)
        os << "d[" << r["u"].get<std::string>() << ", " << r["v"].get<std::string>() << "; "
           << r["w"].get<std::string>() << "] = " << r["d"].get<std::string>() << "\n";
      if (spec.oracle) os << "localization identity: verified\n";
    }
    return 0;
  }
  WeylElt u = WeylElt::from_word(*rs, parse_word(spec.u, rs->rank()));
  WeylElt v = WeylElt::from_word(*rs, parse_word(spec.v, rs->rank()));
  WeylElt w = WeylElt::from_word(*rs, parse_word(spec.w, rs->rank()));
  const FactoredFraction& d = session.coeff(u, v, w);
  json j;
  j["value"] = json::parse(d.to_json());
  if (!spec.at.empty()) j["evaluated"] = d.eval(parse_point(spec.at, rs->rank())).str();
  if (!spec.out.empty()) write_file(spec.out, j.dump(2));
  if (spec.format == "json") os << j.dump(2) << "\n";
  else os << "d = " << d.to_string() << "\n";
  return 0;
}

int cmd_heap(const JobSpec& spec, std::ostringstream& os) {
  auto rs = std::make_shared<RootSystem>(RootSystem::from_name(spec.type));
  std::vector<int> word = parse_word(spec.word, rs->rank());
  Heap h = heap_of_word(*rs, word);
  DominantMinusculeResult dm = is_dominant_minuscule(*rs, word);
  json j;
  j["elements"] = h.size();
  json cov = json::array();
  for (const auto& [a, b] : h.covers) cov.push_back({a + 1, b + 1});
  j["covers"] = cov;
  json comps = json::array();
  for (const auto& comp : h.components()) {
    json c = json::array();
    for (int x : comp) c.push_back(x + 1);
    comps.push_back(c);
  }
  j["components"] = comps;
  j["dominant_minuscule"] = dm.ok;
  if (dm.ok) j["pi"] = to_string(dm.pi);
  if (!spec.filter.empty()) {
    WeylElt v = WeylElt::from_word(*rs, parse_word(spec.filter, rs->rank()));
    if (!dm.ok) throw precondition_error("filters require a dominant minuscule heap word");
    Diagram f = filter_of(v, h, dm.pi);
    auto diagrams = excited_diagrams(f, h);
    json jf = json::array();
    for (int x : f) jf.push_back(x + 1);
    j["filter"] = jf;
    j["excited_count"] = diagrams.size();
    if (spec.list_excited) {
      json listed = json::array();
      for (const Diagram& d : diagrams) {
        json one = json::array();
        for (int x : d) one.push_back(x + 1);
        listed.push_back(one);
      }
      j["excited"] = listed;
    }
  }
  if (!spec.dot.empty()) write_file(spec.dot, heap_dot(h));
  if (!spec.out.empty()) write_file(spec.out, j.dump(2));
  if (spec.format == "json") {
    os << j.dump(2) << "\n";
    return 0;
  }
  os << "heap on " << h.size() << " elements, " << h.covers.size() << " covers, "
     << h.components().size() << " components\n";
  os << "dominant minuscule: " << (dm.ok ? "true" : "false");
  if (dm.ok) os << "  pi = " << to_string(dm.pi);
  os << "\n";
  if (j.contains("excited_count")) {
    os << "filter: {";
    bool first = true;
    for (int x : j["filter"]) {
      if (!first) os << ",";
      os << "p" << x;
      first = false;
    }
    os << "}\n";
    os << "excited diagrams: " << j["excited_count"].get<size_t>() << "\n";
    if (spec.list_excited)
      for (const auto& d : j["excited"]) {
        os << "  {";
        bool f1 = true;
        for (int x : d) {
          if (!f1) os << ",";
          os << "p" << x;
          f1 = false;
        }
        os << "}\n";
      }
  }
  return 0;
}

int cmd_redcount(const JobSpec& spec, std::ostringstream& os) {
  auto rs = std::make_shared<RootSystem>(RootSystem::from_name(spec.type));
  WeylElt v = WeylElt::from_word(*rs, parse_word(spec.v, rs->rank()));
  WeylElt w = WeylElt::from_word(*rs, parse_word(spec.w, rs->rank()));
  WeightVec pi;
  if (!spec.pi.empty()) {
    pi = parse_weight(spec.pi, rs->rank());
  } else {
    DominantMinusculeResult dm = is_dominant_minuscule(*rs, w.word());
    if (!dm.ok) throw precondition_error("w is not dominant minuscule; pass an explicit weight");
    pi = dm.pi;
  }
  SkewRedCount c = skew_red_count(v, w, pi);
  json j;
  j["count"] = c.count.str();
  j["excited_diagrams"] = c.diagrams.str();
  j["dp_oracle"] = c.oracle.str();
  WeylElt wv = w * v.inverse();
  if (wv.length() <= 12) j["dfs_oracle"] = std::to_string(reduced_words(wv).size());
  if (!spec.out.empty()) write_file(spec.out, j.dump(2));
  if (spec.format == "json") os << j.dump(2) << "\n";
  else {
    os << "#Red(w v^-1) = " << c.count.str() << " (over " << c.diagrams.str()
       << " excited diagrams)\n";
    os << "descent DP oracle = " << c.oracle.str() << "\n";
    if (j.contains("dfs_oracle")) os << "DFS oracle = " << j["dfs_oracle"].get<std::string>() << "\n";
  }
  return 0;
}

}  // namespace

int run_job(const JobSpec& spec, std::string& text) {
  std::ostringstream os;
  int code = 0;
  try {
    if (spec.type.empty()) throw parse_error("--type is required");
    if (spec.command == "graph") code = cmd_graph(spec, os);
    else if (spec.command == "verify") code = cmd_verify(spec, os);
    else if (spec.command == "billey") code = cmd_billey(spec, os);
    else if (spec.command == "smloc") code = cmd_smloc(spec, os);
    else if (spec.command == "eqmult") code = cmd_eqmult(spec, os);
    else if (spec.command == "smlr") code = cmd_smlr(spec, os);
    else if (spec.command == "heap") code = cmd_heap(spec, os);
    else if (spec.command == "redcount") code = cmd_redcount(spec, os);
    else throw parse_error("unknown command: " + spec.command);
  } catch (const parse_error& e) {
    os << "error: " << e.what() << "\n";
    code = 2;
  } catch (const precondition_error& e) {
    os << "error: " << e.what() << "\n";
    code = 3;
  } catch (const internal_error& e) {
    os << "internal error: " << e.what() << "\n";
    code = 4;
  }
  text = os.str();
  return code;
}

}  // namespace bruhat
