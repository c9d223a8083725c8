#include <gtest/gtest.h>

#include <set>

#include "happy/puzzle.h"
#include "happy/service.h"

using namespace happy;

namespace {

ApiResponse post(const std::string& path, const Json& body, bool solve = false) {
  return handle_api("POST", path, body.dump(), solve);
}

TEST(Api, Lattices) {
  const ApiResponse r = handle_api("GET", "/api/lattices", "");
  ASSERT_EQ(r.status, 200);
  ASSERT_EQ(r.body.size(), 19u);
  std::set<std::string> names;
  for (const Json& e : r.body) names.insert(e["name"].get<std::string>());
  EXPECT_EQ(names.size(), 19u);
  EXPECT_EQ(r.body[0]["name"], "6^3");
  EXPECT_EQ(r.body[0]["r"], 5);
  EXPECT_EQ(r.body[0]["t"], 1);
  EXPECT_EQ(handle_api("POST", "/api/lattices", "").status, 405);
}

TEST(Api, RoutingErrors) {
  EXPECT_EQ(handle_api("GET", "/api/puzzle", "").status, 405);
  EXPECT_EQ(handle_api("POST", "/api/nope", "{}").status, 404);
  EXPECT_EQ(handle_api("POST", "/api/puzzle", "{oops").status, 400);
  EXPECT_EQ(handle_api("POST", "/api/puzzle", "[1]").status, 400);
  EXPECT_EQ(post("/api/puzzle", {{"lattice", "7^7"}}).status, 400);
  EXPECT_EQ(post("/api/solve", {{"puzzle", "v1:6^3:2:2:0.35:1:0"}}).status, 403);
}

TEST(Api, PuzzleCheckHintSolve) {
  const ApiResponse gen = post("/api/puzzle", {{"lattice", "4.8^2"}, {"rows", 2}, {"cols", 2}, {"seed", 5}});
  ASSERT_EQ(gen.status, 200);
  EXPECT_FALSE(gen.body.contains("witness"));
  const std::string id = gen.body["puzzle_id"];
  EXPECT_EQ(gen.body, post("/api/puzzle", {{"lattice", "4.8^2"}, {"rows", 2}, {"cols", 2}, {"seed", 5}}).body);

  const ApiResponse check = post("/api/check", {{"puzzle_id", id}, {"assignment", Json::object()}});
  ASSERT_EQ(check.status, 200);
  EXPECT_EQ(check.body["edges"].size(), gen.body["graph"]["edges"].size());
  EXPECT_EQ(check.body["solved"], false);

  const ApiResponse h = post("/api/hint", {{"puzzle", id}});
  ASSERT_EQ(h.status, 200);
  EXPECT_EQ(h.body["vertex"], 0);

  const ApiResponse solved = post("/api/solve", {{"puzzle", gen.body}}, true);
  ASSERT_EQ(solved.status, 200);
  EXPECT_EQ(solved.body["status"], "SAT");
  Json assignment = Json::object();
  const auto colors = solved.body["colors"].get<std::vector<Color>>();
  for (std::size_t v = 0; v < colors.size(); ++v) assignment[std::to_string(v)] = colors[v];
  const ApiResponse done = post("/api/check", {{"puzzle", id}, {"assignment", assignment}});
  EXPECT_EQ(done.body["solved"], true);
  EXPECT_EQ(post("/api/hint", {{"puzzle", id}, {"assignment", assignment}}).body["status"], "complete");
}

TEST(Api, BadAssignment) {
  const std::string id = puzzle_id({LatticeName::k6_3, 2, 2, 0.35, 1, 0});
  EXPECT_EQ(post("/api/check", {{"puzzle", id}, {"assignment", {{"0", 99}}}}).status, 400);
  EXPECT_EQ(post("/api/check", {{"puzzle", "garbage"}}).status, 400);
}

TEST(Api, OversizedSolverPatch) {
  const ApiResponse r = post("/api/puzzle", {{"lattice", "3^6"}, {"rows", 40}, {"cols", 40}});
  EXPECT_EQ(r.status, 400);
}

}  // namespace
