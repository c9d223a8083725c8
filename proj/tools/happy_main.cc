// happy: command-line front end for the threshold-coloring toolkit.

#include <CLI11.hpp>

#include <iostream>
#include <random>

#include "happy/colorers.h"
#include "happy/hardness.h"
#include "happy/io.h"
#include "happy/lattice.h"
#include "happy/puzzle.h"
#include "happy/service.h"
#include "happy/solver.h"

using namespace happy;

namespace {

// Seeded Near/Far labels for a topology.
LabeledGraph random_labels(const LabeledGraph& topo, double far_prob, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<EdgeLabel> labels(topo.edge_count());
  for (EdgeLabel& l : labels) {
    l = static_cast<double>(rng() >> 11) * 0x1.0p-53 < far_prob ? EdgeLabel::kFar : EdgeLabel::kNear;
  }
  return topo.relabeled(labels);
}

Json report_json(const VerifyReport& r) {
  Json violations = Json::array();
  for (const Edge& e : r.violations) violations.push_back({e.u, e.v, std::string(1, to_char(e.label))});
  return {{"valid", r.valid},
          {"violations", std::move(violations)},
          {"range_used", r.range_used},
          {"min_color", r.min_color},
          {"max_color", r.max_color}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold-coloring toolkit: lattices, colorers, solver, gadgets and the edge-labeling puzzle"};
  app.require_subcommand(1);
  std::string out = "-";

  // lattice
  auto* lattice = app.add_subcommand("lattice", "Lattice patches");
  lattice->require_subcommand(1);
  auto* lat_list = lattice->add_subcommand("list", "Print the 19 lattice names");
  auto* lat_gen = lattice->add_subcommand("gen", "Generate a patch");
  std::string lat_name;
  int rows = 3, cols = 3;
  lat_gen->add_option("--name", lat_name, "Lattice name, e.g. 6^3 or D(3^4.6)")->required();
  lat_gen->add_option("--rows", rows, "Cells along the second basis vector");
  lat_gen->add_option("--cols", cols, "Cells along the first basis vector");
  lat_gen->add_option("-o,--output", out, "Output file ('-' for stdout)");
  auto* lat_check = lattice->add_subcommand("validate", "Check a patch's structural annotations");
  std::string patch_file;
  lat_check->add_option("--patch", patch_file, "Patch file")->required();

  // color
  auto* color = app.add_subcommand("color", "Color a labeled patch constructively");
  std::string algorithm = "auto", labels_file;
  double far_prob = 0.35;
  std::uint64_t seed = 0;
  color->add_option("--algorithm", algorithm, "forest, patch, linear or auto")
      ->check(CLI::IsMember({"auto", "forest", "patch", "linear"}));
  color->add_option("--patch", patch_file, "Patch file")->required();
  auto* labels_opt = color->add_option("--labels", labels_file, "Graph or {\"labels\":[...]} file");
  color->add_option("--far-prob", far_prob, "Far probability for random labels (without --labels)");
  color->add_option("--seed", seed, "Seed for random labels");
  color->add_option("-o,--output", out, "Output file");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a coloring against a labeled graph");
  std::string graph_file, coloring_file;
  std::optional<std::int64_t> t_opt;
  verify->add_option("--graph", graph_file, "Graph file")->required();
  verify->add_option("--coloring", coloring_file, "Coloring file")->required();
  verify->add_option("--t", t_opt, "Threshold (defaults to the coloring file's t)");

  // solve
  auto* solve = app.add_subcommand("solve", "Exact threshold-colorability search");
  std::int64_t r = 0, r_max = 16;
  std::uint64_t budget = 100'000'000;
  bool min_mode = false, all_labelings = false, order_pruning = false;
  solve->add_option("--graph", graph_file, "Graph file")->required();
  solve->add_option("--r", r, "Palette size {0..r-1}");
  solve->add_option("--t", t_opt, "Threshold (default: try every t)");
  solve->add_option("--budget", budget, "Node budget");
  solve->add_flag("--min-colors", min_mode, "Find the smallest r (then t)");
  solve->add_option("--r-max", r_max, "Upper bound for --min-colors");
  solve->add_flag("--all-labelings", all_labelings, "Decide every labeling of the topology (needs --t)");
  solve->add_flag("--order-pruning", order_pruning, "Prune with the triangle/4-cycle order rules");
  solve->add_option("-o,--output", out, "Output file");

  // hardness
  auto* hard = app.add_subcommand("hardness", "Non-colorability gadgets and spirals");
  hard->require_subcommand(1);
  auto* gadget = hard->add_subcommand("gadget", "Write a gadget");
  std::string gadget_name, family = "square";
  int n = 3;
  gadget->add_option("--name", gadget_name, "fig6a..fig6e")->required();
  gadget->add_option("-o,--output", out, "Output file");
  auto* spiral = hard->add_subcommand("spiral", "Write a spiral");
  spiral->add_option("--family", family, "square, d3464 or d3636");
  spiral->add_option("--n", n, "Odd side (square) or ring count (dual families)");
  spiral->add_option("-o,--output", out, "Output file");

  // puzzle
  auto* puzzle = app.add_subcommand("puzzle", "Threshold-coloring puzzles");
  puzzle->require_subcommand(1);
  auto* pz_gen = puzzle->add_subcommand("gen", "Generate a puzzle");
  std::string pz_lattice = "6^3", puzzle_file, state_file;
  int givens = 0;
  bool with_witness = false;
  pz_gen->add_option("--lattice", pz_lattice, "Lattice name");
  pz_gen->add_option("--rows", rows, "Rows");
  pz_gen->add_option("--cols", cols, "Cols");
  pz_gen->add_option("--far-prob", far_prob, "Per-edge Far probability");
  pz_gen->add_option("--seed", seed, "Seed");
  pz_gen->add_option("--givens", givens, "Witness values to reveal");
  pz_gen->add_flag("--with-witness", with_witness, "Include the hidden witness");
  pz_gen->add_option("-o,--output", out, "Output file");
  auto* pz_check = puzzle->add_subcommand("check", "Edge statuses for a play state");
  auto* pz_hint = puzzle->add_subcommand("hint", "Suggest one move");
  auto* pz_solve = puzzle->add_subcommand("solve", "Print the witness");
  for (auto* sc : {pz_check, pz_hint, pz_solve}) {
    sc->add_option("--puzzle", puzzle_file, "Puzzle file or request JSON")->required();
    sc->add_option("-o,--output", out, "Output file");
  }
  for (auto* sc : {pz_check, pz_hint}) sc->add_option("--state", state_file, "Assignment JSON");

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "HTTP API and static files");
  ServiceOptions service;
  serve_cmd->add_option("--host", service.host, "Bind address");
  serve_cmd->add_option("--port", service.port, "Port");
  serve_cmd->add_option("--static", service.static_dir, "Directory served at /");
  serve_cmd->add_flag("--enable-solve", service.enable_solve, "Expose POST /api/solve");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*lat_list) {
      for (LatticeName l : all_lattices()) std::cout << to_string(l) << '\n';
    } else if (*lat_gen) {
      write_json_file(out, patch_to_json(generate(parse_lattice(lat_name), {rows, cols})));
    } else if (*lat_check) {
      const AnnotationReport rep = validate_annotations(patch_from_json(read_json_file(patch_file)));
      write_json_file("-", Json{{"valid", rep.valid}, {"violations", rep.violations}});
      return rep.valid ? 0 : 1;
    } else if (*color) {
      const LatticePatch patch = patch_from_json(read_json_file(patch_file));
      const LabeledGraph labeled = *labels_opt ? labels_from_json(read_json_file(labels_file), patch.graph)
                                               : random_labels(patch.graph, far_prob, seed);
      Json j = scheme_to_json(color_constructively(patch, labeled, algorithm));
      if (!*labels_opt) j["graph"] = graph_to_json(labeled);
      write_json_file(out, j);
    } else if (*verify) {
      const LabeledGraph g = graph_from_json(read_json_file(graph_file));
      const ColoringFile c = coloring_from_json(read_json_file(coloring_file));
      const auto t = t_opt ? t_opt : c.t;
      if (!t) throw InputError("no threshold: pass --t or put \"t\" in the coloring file");
      const VerifyReport rep = verify_coloring(g, c.coloring, *t);
      write_json_file("-", report_json(rep));
      return rep.valid ? 0 : 1;
    } else if (*solve) {
      const LabeledGraph g = graph_from_json(read_json_file(graph_file));
      SolveOptions opts;
      opts.budget = budget;
      opts.order_pruning = order_pruning;
      if (min_mode) {
        write_json_file(out, min_colors_to_json(min_colors(g, r_max, t_opt, opts)));
      } else if (all_labelings) {
        if (!t_opt || r < 1) throw InputError("--all-labelings needs --r and --t");
        const LabelingCheck c = check_all_labelings(g, r, *t_opt, 20, opts);
        Json j{{"all_colorable", c.all_colorable}, {"budget_exceeded", c.budget_exceeded}};
        if (c.counterexample) {
          Json labels = Json::array();
          for (EdgeLabel l : *c.counterexample) labels.push_back(std::string(1, to_char(l)));
          j["counterexample"] = std::move(labels);
        }
        write_json_file(out, j);
      } else {
        if (r < 1) throw InputError("--r is required (or use --min-colors)");
        write_json_file(out, solve_result_to_json(decide(g, {r, t_opt, opts})));
      }
    } else if (*gadget) {
      write_json_file(out, graph_to_json(build_gadget(parse_gadget(gadget_name))));
    } else if (*spiral) {
      const SpiralFamily f = parse_spiral_family(family);
      Json j;
      Json coords = Json::array();
      if (f == SpiralFamily::kSquare) {
        j = graph_to_json(build_square_spiral(n));
        for (const Vec2& p : square_spiral_coords(n)) coords.push_back({p.x, p.y});
      } else {
        const DualSpiral d = build_dual_spiral(f, n);
        j = graph_to_json(d.graph);
        for (const Vec2& p : d.coords) coords.push_back({p.x, p.y});
        j["faces"] = d.faces;
        if (d.exempt_face) j["exempt_face"] = *d.exempt_face;
      }
      j["coords"] = std::move(coords);
      write_json_file(out, j);
    } else if (*pz_gen) {
      PuzzleRequest req{parse_lattice(pz_lattice), rows, cols, far_prob, seed, givens};
      write_json_file(out, puzzle_to_json(generate_puzzle(req), with_witness));
    } else if (*pz_check || *pz_hint || *pz_solve) {
      Json body{{"puzzle", read_json_file(puzzle_file)}};
      if (!state_file.empty()) body["assignment"] = read_json_file(state_file);
      const std::string path = *pz_check ? "/api/check" : *pz_hint ? "/api/hint" : "/api/solve";
      const ApiResponse res = handle_api("POST", path, body.dump(), true);
      write_json_file(out, res.body);
      return res.status == 200 ? 0 : 2;
    } else if (*serve_cmd) {
      serve(service);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const GenerationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
