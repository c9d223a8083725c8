#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "happy/hardness.h"
#include "happy/io.h"
#include "happy/lattice.h"
#include "happy/solver.h"
#include "oracle.h"

using namespace happy;

namespace {

TEST(GraphJson, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const LabeledGraph g = oracle::random_graph(rng, 1 + rng() % 9, 0.5, 0.5);
    const LabeledGraph back = graph_from_json(Json::parse(graph_to_json(g).dump()));
    EXPECT_EQ(back.vertex_count(), g.vertex_count());
    EXPECT_EQ(back.edges(), g.edges());
  }
}

TEST(GraphJson, Format) {
  const Json j = graph_to_json(LabeledGraph(3, {{0, 1, EdgeLabel::kNear}, {1, 2, EdgeLabel::kFar}}));
  EXPECT_EQ(j, Json::parse(R"({"version":1,"vertex_count":3,"edges":[[0,1,"N"],[1,2,"F"]]})"));
}

TEST(GraphJson, Rejects) {
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertex_count":2,"edges":[[0,1,"Q"]]})")), InputError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertex_count":2,"edges":[[0,5,"N"]]})")), InputError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"edges":[]})")), InputError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"version":2,"vertex_count":1,"edges":[]})")), InputError);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"vertex_count":2,"edges":[[0]]})")), InputError);
}

TEST(ColoringJson, RoundTrip) {
  const Coloring c{{-2, 0, 7}};
  const ColoringFile f = coloring_from_json(coloring_to_json(c, 3));
  EXPECT_EQ(f.coloring, c);
  EXPECT_EQ(f.t, 3);
  EXPECT_FALSE(coloring_from_json(coloring_to_json(c)).t);
}

TEST(PatchJson, RoundTripEveryLattice) {
  for (LatticeName name : all_lattices()) {
    const LatticePatch p = generate(name, {2, 2});
    const LatticePatch back = patch_from_json(Json::parse(patch_to_json(p).dump()));
    EXPECT_EQ(back.name, p.name);
    EXPECT_EQ(back.params.rows, p.params.rows);
    EXPECT_EQ(back.graph.edges(), p.graph.edges());
    EXPECT_EQ(back.keys, p.keys);
    EXPECT_EQ(back.annotations, p.annotations) << to_string(name);
    ASSERT_EQ(back.coords.size(), p.coords.size());
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
      EXPECT_DOUBLE_EQ(back.coords[i].x, p.coords[i].x);
      EXPECT_DOUBLE_EQ(back.coords[i].y, p.coords[i].y);
    }
  }
}

TEST(LabelsJson, ListOrGraph) {
  const LatticePatch p = generate(LatticeName::k6_3, {1, 1});
  std::vector<std::string> labels(p.graph.edge_count(), "N");
  labels[2] = "F";
  const LabeledGraph a = labels_from_json(Json{{"labels", labels}}, p.graph);
  EXPECT_EQ(a.edge(2).label, EdgeLabel::kFar);
  EXPECT_EQ(labels_from_json(graph_to_json(a), p.graph).edges(), a.edges());
  labels.pop_back();
  EXPECT_THROW(labels_from_json(Json{{"labels", labels}}, p.graph), InputError);
  EXPECT_THROW(labels_from_json(graph_to_json(LabeledGraph(2, {})), p.graph), InputError);
}

TEST(ResultJson, Shapes) {
  const SolveResult sat = decide(LabeledGraph(2, {{0, 1, EdgeLabel::kFar}}), {2, std::nullopt, {}});
  const Json j = solve_result_to_json(sat);
  EXPECT_EQ(j["status"], "SAT");
  EXPECT_EQ(j["t"], 0);
  EXPECT_EQ(j["colors"].size(), 2u);
  const Json u = solve_result_to_json(decide(build_gadget(GadgetName::kFig6d), {3, std::nullopt, {}}));
  EXPECT_EQ(u["status"], "UNSAT");
  EXPECT_TRUE(u["colors"].is_null());
  EXPECT_TRUE(u["t"].is_null());
}

TEST(Files, WriteReadAndErrors) {
  const auto path = std::filesystem::temp_directory_path() / "happy_io_test.json";
  write_json_file(path.string(), Json{{"a", 1}});
  EXPECT_EQ(read_json_file(path.string())["a"], 1);
  std::filesystem::remove(path);
  EXPECT_THROW(read_json_file(path.string()), InputError);
  {
    std::FILE* f = std::fopen(path.string().c_str(), "w");
    std::fputs("{not json", f);
    std::fclose(f);
  }
  EXPECT_THROW(read_json_file(path.string()), InputError);
  std::filesystem::remove(path);
}

}  // namespace
