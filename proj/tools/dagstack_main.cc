// Copyright 2026 The dagstack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "dagstack/adversary.h"
#include "dagstack/block_cut_tree.h"
#include "dagstack/engine.h"
#include "dagstack/error.h"
#include "dagstack/hpartition.h"
#include "dagstack/io.h"
#include "dagstack/layout.h"
#include "dagstack/oracle.h"
#include "dagstack/outerplanar.h"
#include "dagstack/random_graphs.h"
#include "dagstack/twotree.h"

namespace {

using namespace dagstack;

enum ExitCode { kOk = 0, kFailure = 1, kViolation = 2, kBudget = 3, kParse = 4 };

struct RunConfig {
  std::uint64_t seed = 1;
  int exact_threshold = 12;
  std::int64_t vertex_cap = kDefaultVertexCap;
  std::string output;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kIoError:
    case ErrorCode::kInvariantViolation:
      return kParse;
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kSizeExceeded:
    case ErrorCode::kCapExceeded:
    case ErrorCode::kTooLarge:
      return kBudget;
    default:
      return kViolation;
  }
}

void emit(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << canonical_dump(j);
  } else {
    write_file(path, canonical_dump(j));
  }
}

Edge parse_edge_option(const std::string& s) {
  const auto sep = s.find_first_of(",-");
  if (sep == std::string::npos) {
    throw Error(ErrorCode::kParseError, "edge must look like TAIL,HEAD");
  }
  try {
    return {std::stoi(s.substr(0, sep)), std::stoi(s.substr(sep + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, "edge must look like TAIL,HEAD");
  }
}

std::string sidecar_path(const std::string& out) {
  const auto dot = out.rfind('.');
  const auto slash = out.find_last_of('/');
  const bool has_ext =
      dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? out.substr(0, dot) : out) + ".spec.json";
}

int cmd_recognize(const std::string& path) {
  const DirectedGraph g = load_graph(path);
  Json j;
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["acyclic"] = is_acyclic(g);
  j["connected"] = is_connected(g);
  const auto op = is_outerplanar(g);
  j["outerplanar"] = op.outerplanar;
  if (!op.outerplanar) {
    Json w = Json::array();
    for (const Edge& e : op.witness) w.push_back({e.tail, e.head});
    j["witness"] = std::move(w);
  }
  bool two_tree = false;
  if (g.num_edges() > 0 && g.num_edges() == 2 * g.num_vertices() - 3) {
    try {
      build_construction_sequence(g, g.edge(0));
      two_tree = true;
    } catch (const Error&) {
    }
  }
  j["two_tree"] = two_tree;
  j["maximal_outerplanar"] = two_tree && op.outerplanar;
  if (j["acyclic"].get<bool>()) {
    try {
      const auto prof = monotonicity_profile(g);
      j["block_monotone"] = prof.block_monotone;
      Json blocks = Json::array();
      for (const auto& b : prof.blocks) {
        Json jb{{"vertices", b.vertices},
                {"monotone", b.monotone},
                {"transitive", b.transitive}};
        if (b.monotone_base) {
          jb["monotone_base"] = {b.monotone_base->tail, b.monotone_base->head};
        }
        blocks.push_back(std::move(jb));
      }
      j["blocks"] = std::move(blocks);
    } catch (const Error& e) {
      j["block_monotone"] = nullptr;
      j["block_monotone_error"] = std::string(error_code_name(e.code()));
    }
  }
  emit(j, "");
  return kOk;
}

int cmd_layout(const std::string& path, const RunConfig& cfg,
               const std::string& base_edge, const std::string& svg,
               const std::string& report_path) {
  const DirectedGraph g = load_graph(path);
  PipelineConfig pc;
  pc.block.exact_threshold = cfg.exact_threshold;
  if (!base_edge.empty()) pc.base_edge = parse_edge_option(base_edge);
  const PipelineResult res = layout_outerplanar_dag(g, pc);
  const LayoutCheck check = verify_layout(res.layout);
  emit(layout_to_json(res.layout), cfg.output);
  if (!svg.empty()) render_arc_diagram(res.layout, svg);
  if (!report_path.empty()) {
    Json r = bound_report_to_json(res.report);
    r["seed"] = cfg.seed;
    emit(r, report_path);
  }
  if (!check.ok()) {
    std::cerr << "layout failed verification: " << check.message << "\n";
    return kViolation;
  }
  std::cerr << "stacks: " << res.layout.num_stacks << "\n";
  return kOk;
}

int cmd_verify(const std::string& path) {
  const Layout l = layout_from_json(Json::parse(read_file(path)));
  const LayoutCheck check = verify_layout(l);
  Json j;
  j["ok"] = check.ok();
  j["num_stacks"] = l.num_stacks;
  j["message"] = check.message;
  Json edges = Json::array();
  for (int id : check.edges) {
    if (id >= 0 && id < l.graph.num_edges()) {
      edges.push_back({l.graph.edge(id).tail, l.graph.edge(id).head});
    }
  }
  j["edges"] = std::move(edges);
  emit(j, "");
  return check.ok() ? kOk : kViolation;
}

int cmd_oracle(const std::string& which, const std::string& path,
               std::int64_t max_orderings, double time_cap,
               const std::string& out) {
  const DirectedGraph g = load_graph(path);
  OracleBudget budget;
  budget.max_orderings = max_orderings;
  budget.time_cap_seconds = time_cap;
  Json j;
  j["quantity"] = which;
  try {
    const OracleResult r = which == "tn" ? exact_twist_number(g, budget)
                                         : exact_stack_number(g, budget);
    j["value"] = r.value;
    j["ordering"] = r.ordering;
    j["orderings_examined"] = r.orderings_examined;
    if (which == "sn") j["layout"] = layout_to_json(r.layout);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    j["error"] = std::string(error_code_name(e.code()));
    j["reason"] = e.what();
    emit(j, out);
    return kBudget;
  }
  emit(j, out);
  return kOk;
}

int cmd_gen(const std::string& kind, int k, std::optional<int> n_override,
            int n, const std::string& random_kind, const RunConfig& cfg,
            const std::string& spec_out) {
  DirectedGraph g;
  Json spec;
  if (kind == "path-matching" || kind == "fig1") {
    g = gen_path_matching(k);
    spec = {{"generator", "path_matching"}, {"k", k}};
  } else if (kind == "fence") {
    g = gen_three_fence();
    spec = {{"generator", "three_fence"}};
  } else if (kind == "adversary") {
    AdversaryInstance inst = gen_unbounded_twist(k, n_override, cfg.vertex_cap);
    g = inst.graph;
    spec = adversary_spec_to_json(inst.spec);
    spec["generator"] = "unbounded_twist";
  } else {
    Rng rng(cfg.seed);
    if (random_kind == "maximal") {
      g = random_maximal_outerplanar_dag(rng, n);
    } else if (random_kind == "monotone") {
      g = random_monotone_outerplanar_dag(rng, n);
    } else {
      g = random_outerplanar_dag(rng, n);
    }
    spec = {{"generator", "random_" + random_kind},
            {"n", n},
            {"seed", cfg.seed}};
  }
  emit(graph_to_json(g), cfg.output);
  std::string side = spec_out;
  if (side.empty() && !cfg.output.empty() && cfg.output != "-") {
    side = sidecar_path(cfg.output);
  }
  if (!side.empty()) emit(spec, side);
  return kOk;
}

int cmd_hpartition(const std::string& path, const std::string& base_edge,
                   const std::string& out, const std::string& dot_quotient,
                   const std::string& dot_bct) {
  const DirectedGraph input = load_graph(path);
  const DirectedGraph g = augment_to_maximal_outerplanar(input);
  const Edge base =
      base_edge.empty() ? g.edge(0) : parse_edge_option(base_edge);
  const ConstructionSequence seq = build_construction_sequence(g, base);
  const ConstructionTree tree = build_construction_tree(seq, g);
  const DirectedHPartition hp = construct_directed_h_partition(g, seq, tree);
  const PartitionReport rep = verify_partition_properties(g, hp, tree);
  Json j;
  j["augmented"] = g.num_edges() != input.num_edges();
  j["graph"] = graph_to_json(g);
  j["sequence"] = sequence_to_json(seq);
  j["partition"] = partition_to_json(hp);
  j["report"] = {{"ok", rep.ok()},          {"precheck", rep.precheck},
                 {"p1", rep.p1},            {"p2", rep.p2},
                 {"p3", rep.p3},            {"p4", rep.p4},
                 {"max_cut_cover", rep.max_cut_cover},
                 {"failures", rep.failures}};
  emit(j, out);
  if (!dot_quotient.empty()) write_file(dot_quotient, quotient_to_dot(hp));
  if (!dot_bct.empty() && hp.quotient.num_vertices() > 0) {
    write_file(dot_bct, block_cut_tree_to_dot(hp.quotient,
                                              block_cut_tree(hp.quotient)));
  }
  return rep.ok() ? kOk : kViolation;
}

int cmd_render(const std::string& path, const std::string& out) {
  const Layout l = layout_from_json(Json::parse(read_file(path)));
  const std::string svg = render_arc_diagram_svg(l);
  if (out.empty() || out == "-") {
    std::cout << svg;
  } else {
    write_file(out, svg);
  }
  return kOk;
}

int cmd_bounds(int max_k) {
  Json davies = Json::array();
  for (int k = 1; k <= max_k; ++k) {
    davies.push_back({{"k", k}, {"stacks", davies_bound(k)}});
  }
  const long long monotone = 2 * davies_bound(4);
  const long long block_monotone = 2 * monotone + 2;
  const long long w = 4;
  const long long s = 3 * w * block_monotone + 1;
  const long long p = 2;
  const long long t = 1;
  Json j;
  j["twist_to_stacks"] = std::move(davies);
  j["monotone_outerplanar"] = monotone;
  j["block_monotone_outerplanar"] = block_monotone;
  j["cut_cover"] = w;
  j["expanding_block"] = s;
  j["p"] = p;
  j["t"] = t;
  j["outerplanar_dag"] = 4 * s * p * t;
  emit(j, "");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stack layouts of outerplanar DAGs"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string path;
  auto* recognize = app.add_subcommand("recognize", "Classify a graph");
  recognize->add_option("graph", path, "Graph file (JSON or edge list)")
      ->required();

  std::string base_edge, svg, report;
  auto* layout = app.add_subcommand("layout", "Compute a stack layout");
  layout->add_option("graph", path, "Graph file")->required();
  layout->add_option("-o,--output", cfg.output, "Layout JSON path");
  layout->add_option("--base-edge", base_edge, "TAIL,HEAD of the base edge");
  layout->add_option("--exact-threshold", cfg.exact_threshold,
                     "Largest block solved exactly");
  layout->add_option("--seed", cfg.seed, "Random seed");
  layout->add_option("--emit-svg", svg, "Write an arc diagram");
  layout->add_option("--report-json", report, "Write the bound report");

  auto* verify = app.add_subcommand("verify", "Check a layout JSON file");
  verify->add_option("layout", path, "Layout file")->required();

  std::string which;
  std::int64_t max_orderings = OracleBudget{}.max_orderings;
  double time_cap = OracleBudget{}.time_cap_seconds;
  auto* oracle = app.add_subcommand("oracle", "Exact twist or stack number");
  oracle->add_option("quantity", which, "tn or sn")
      ->required()
      ->check(CLI::IsMember({"tn", "sn"}));
  oracle->add_option("graph", path, "Graph file")->required();
  oracle->add_option("--max-orderings", max_orderings,
                     "Budget of complete orderings");
  oracle->add_option("--time-cap", time_cap, "Budget in seconds");
  oracle->add_option("-o,--output", cfg.output, "Result JSON path");

  std::string gen_kind, random_kind = "outerplanar", spec_out;
  int k = 2;
  int n = 20;
  std::optional<int> n_override;
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("kind", gen_kind, "path-matching (alias fig1), fence, adversary or random")
      ->required()
      ->check(CLI::IsMember({"path-matching", "fig1", "fence", "adversary", "random"}));
  gen->add_option("-k", k, "Target twist");
  gen->add_option("--n-override", n_override, "Gadget width override");
  gen->add_option("--vertex-cap", cfg.vertex_cap, "Largest instance built");
  gen->add_option("-n", n, "Vertices of a random graph");
  gen->add_option("--random-kind", random_kind,
                  "maximal, outerplanar or monotone")
      ->check(CLI::IsMember({"maximal", "outerplanar", "monotone"}));
  gen->add_option("--seed", cfg.seed, "Random seed");
  gen->add_option("-o,--output", cfg.output, "Graph JSON path");
  gen->add_option("--spec-out", spec_out, "Sidecar JSON path");

  std::string dot_quotient, dot_bct;
  auto* hpart = app.add_subcommand("hpartition", "Directed H-partition");
  hpart->add_option("graph", path, "Graph file")->required();
  hpart->add_option("--base-edge", base_edge, "TAIL,HEAD of the base edge");
  hpart->add_option("-o,--output", cfg.output, "Partition JSON path");
  hpart->add_option("--dot-quotient", dot_quotient, "Quotient graph as DOT");
  hpart->add_option("--dot-bct", dot_bct, "Quotient block-cut tree as DOT");

  auto* render = app.add_subcommand("render", "Arc diagram of a layout");
  render->add_option("layout", path, "Layout file")->required();
  render->add_option("-o,--output", cfg.output, "SVG path");

  int max_k = 8;
  auto* bounds = app.add_subcommand("bounds", "Table of stack bounds");
  bounds->add_option("-k", max_k, "Largest twist in the table")
      ->check(CLI::Range(1, 1000));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*recognize) return cmd_recognize(path);
    if (*layout) return cmd_layout(path, cfg, base_edge, svg, report);
    if (*verify) return cmd_verify(path);
    if (*oracle) {
      return cmd_oracle(which, path, max_orderings, time_cap, cfg.output);
    }
    if (*gen) {
      return cmd_gen(gen_kind, k, n_override, n, random_kind, cfg, spec_out);
    }
    if (*hpart) {
      return cmd_hpartition(path, base_edge, cfg.output, dot_quotient,
                            dot_bct);
    }
    if (*render) return cmd_render(path, cfg.output);
    if (*bounds) return cmd_bounds(max_k);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const Json::exception& e) {
    std::cerr << "ParseError: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
