#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bruhat/lgraph.hpp"

namespace bruhat {

// One fully-described invocation: root system, parabolic, elements, weight
// assignment, command, and output options. Round-trips through JSON.
struct JobSpec {
  std::string command;            // graph | verify | billey | smloc | eqmult | smlr | heap | redcount
  std::string type;               // "B3"
  std::string p;                  // "1,3"
  std::string u;                  // extra element for smlr
  std::string v;
  std::string w;
  std::string lambda = "standard";  // standard | constant:<weight> | table:<file>
  std::string word;               // heap word
  std::string filter;             // heap filter word
  std::string pi;                 // weight for minuscule-dependent commands
  std::string format = "text";    // text | json
  std::string out;                // artifact file (json)
  std::string dot;                // DOT file
  std::string at;                 // evaluation point "1,1,1"
  bool batch = false;
  bool oracle = false;
  bool list_excited = false;

  std::string to_json() const;
  static JobSpec from_json(const std::string& text);
  bool operator==(const JobSpec& o) const;
};

// Resolved context for commands operating on a (type, P, v, w) tuple.
struct ResolvedJob {
  std::shared_ptr<RootSystem> rs;
  ParabolicSet P;
  WeylElt u, v, w;
  AdmissibleFn lambda;  // built over [v,w]^P when needed
};

// Executes the job, writing human or JSON output to `text` and optional
// artifacts to spec.out / spec.dot. Returns the process exit code contract:
// 0 ok, 2 parse error, 3 precondition violation, 4 internal invariant breach.
int run_job(const JobSpec& spec, std::string& text);

}  // namespace bruhat
