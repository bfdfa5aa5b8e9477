#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bruhat/jobspec.hpp"

namespace {

void add_common(CLI::App* cmd, bruhat::JobSpec& spec) {
  cmd->add_option("--type", spec.type, "root system, e.g. B3")->required();
  cmd->add_option("--p", spec.p, "parabolic set Delta_P, e.g. 1,3");
  cmd->add_option("--format", spec.format, "text | json");
  cmd->add_option("--out", spec.out, "write JSON artifact to file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat interval graphs, hook products, localizations, and heaps"};
  app.require_subcommand(1);
  bruhat::JobSpec spec;

  auto* graph = app.add_subcommand("graph", "build and export the decorated interval graph");
  add_common(graph, spec);
  graph->add_option("--v", spec.v, "lower word, e.g. \"3 2\" (empty = id)");
  graph->add_option("--w", spec.w, "upper word")->required();
  graph->add_option("--lambda", spec.lambda, "standard | constant:<weight> | table:<file>");
  graph->add_option("--dot", spec.dot, "write DOT to file");

  auto* verify = app.add_subcommand("verify", "compare path sum against the hook product");
  add_common(verify, spec);
  verify->add_option("--v", spec.v, "lower word");
  verify->add_option("--w", spec.w, "upper word");
  verify->add_option("--lambda", spec.lambda, "standard | constant:<weight> | table:<file>");
  verify->add_flag("--batch", spec.batch, "sweep all pairs v <= w in W^P");
  verify->add_flag("--oracle", spec.oracle, "cross-check with the Kumar test");

  auto* billey = app.add_subcommand("billey", "fundamental-class localization [Y(v)]|_w");
  add_common(billey, spec);
  billey->add_option("--v", spec.v, "lower word");
  billey->add_option("--w", spec.w, "upper word")->required();
  billey->add_option("--at", spec.at, "evaluate at rational point, e.g. 1,1,1");
  billey->add_option("--pi", spec.pi, "weight for the principal evaluation");

  auto* smloc = app.add_subcommand("smloc", "Segre-MacPherson cell localization");
  add_common(smloc, spec);
  smloc->add_option("--v", spec.v, "cell word");
  smloc->add_option("--w", spec.w, "fixed-point word")->required();
  smloc->add_option("--at", spec.at, "evaluate at rational point");

  auto* eqmult = app.add_subcommand("eqmult", "equivariant multiplicity of a Richardson variety");
  add_common(eqmult, spec);
  eqmult->add_option("--v", spec.v, "lower word");
  eqmult->add_option("--w", spec.w, "upper word")->required();
  eqmult->add_option("--at", spec.at, "evaluate at rational point");
  eqmult->add_flag("--oracle", spec.oracle, "cross-check against the path sum");

  auto* smlr = app.add_subcommand("smlr", "structure constants of SM-class multiplication");
  add_common(smlr, spec);
  smlr->add_option("--u", spec.u, "first factor word");
  smlr->add_option("--v", spec.v, "second factor word");
  smlr->add_option("--w", spec.w, "target word");
  smlr->add_option("--at", spec.at, "evaluate at rational point");
  smlr->add_flag("--batch", spec.batch, "full table over W^P");
  smlr->add_flag("--oracle", spec.oracle, "verify the localization identity");

  auto* heap = app.add_subcommand("heap", "heap of a reduced word and its excited diagrams");
  add_common(heap, spec);
  heap->add_option("--word", spec.word, "reduced word")->required();
  heap->add_option("--filter", spec.filter, "lower word embedded as an order filter");
  heap->add_flag("--list-excited", spec.list_excited, "list all excited diagrams");
  heap->add_option("--dot", spec.dot, "write the Hasse diagram as DOT");

  auto* redcount = app.add_subcommand("redcount", "reduced-word counts via hooks");
  add_common(redcount, spec);
  redcount->add_option("--v", spec.v, "lower word");
  redcount->add_option("--w", spec.w, "upper word")->required();
  redcount->add_option("--pi", spec.pi, "minuscule weight (default: recovered from w)");

  CLI11_PARSE(app, argc, argv);
  spec.command = app.get_subcommands().front()->get_name();

  std::string text;
  int code = bruhat::run_job(spec, text);
  if (code == 0) std::cout << text;
  else std::cerr << text;
  return code;
}
