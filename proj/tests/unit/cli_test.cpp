#include "d43/graph_io.hpp"
#include "d43/report.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace d43;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(D43_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST(Graph, B1Counts) {
  const auto g = crystal_graph(1);
  EXPECT_EQ(g.nodes.size(), 8u);
  EXPECT_EQ(g.edges.size(), 10u);
  EXPECT_EQ(g.count_edges(0), 4u);
  EXPECT_EQ(g.count_edges(1), 4u);
  EXPECT_EQ(g.count_edges(2), 2u);
  const auto g12 = crystal_graph(1, parse_arrows("12"));
  EXPECT_EQ(g12.edges.size(), 6u);
  EXPECT_EQ(g12.nodes.size(), 8u);
}

TEST(Graph, LabelsAreUnique) {
  const auto g = crystal_graph(3);
  std::set<std::string> ids;
  for (const auto& n : g.nodes) EXPECT_TRUE(ids.insert(n.id).second) << n.id;
  EXPECT_EQ(g.nodes.front().id, "phi");
}

TEST(Graph, DotRoundTrip) {
  for (long l = 1; l <= 3; ++l) {
    const auto g = crystal_graph(l);
    EXPECT_EQ(parse_dot(to_dot(g)), g);
  }
}

TEST(Graph, JsonRoundTrip) {
  for (long l = 1; l <= 3; ++l) {
    const auto g = crystal_graph(l);
    EXPECT_EQ(graph_from_json(to_json(g)), g);
    EXPECT_EQ(graph_from_json(to_json(parse_dot(to_dot(g)))), g);
  }
}

TEST(Graph, Malformed) {
  EXPECT_THROW(parse_dot("graph x {}"), std::runtime_error);
  EXPECT_THROW(parse_dot("digraph B1 {\n  \"a\" -> \"b\" [label=0];\n}\n"), std::runtime_error);
  EXPECT_THROW(graph_from_json("{"), std::runtime_error);
  auto j = nlohmann::json::parse(to_json(crystal_graph(1)));
  j["schema_version"] = 99;
  EXPECT_THROW(graph_from_json(j.dump()), std::runtime_error);
  j = nlohmann::json::parse(to_json(crystal_graph(1)));
  j["edges"][0]["label"] = 7;
  EXPECT_THROW(graph_from_json(j.dump()), std::runtime_error);
}

TEST(ReportTest, Status) {
  Report r("demo");
  r.add("a", true);
  r.add("b", Status::Skipped, "not run");
  EXPECT_TRUE(r.ok());
  r.add("c", false, "broken").data.emplace_back("where", "here");
  EXPECT_FALSE(r.ok());
  EXPECT_STREQ(status_name(Status::Skipped), "skipped");
}

TEST(ReportTest, Json) {
  Report r("demo");
  r.add("a", true);
  r.add("b", false, "broken").data.emplace_back("where", "here");
  r.add_timing("a", 0.5);
  const auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["suite"], "demo");
  EXPECT_EQ(j["status"], "fail");
  ASSERT_EQ(j["checks"].size(), 2u);
  EXPECT_EQ(j["checks"][1]["data"]["where"], "here");
  EXPECT_FALSE(j.contains("timings"));
  EXPECT_TRUE(nlohmann::json::parse(r.to_json(true)).contains("timings"));
  EXPECT_EQ(r.to_json(), r.to_json());
}

TEST(ReportTest, Text) {
  Report r("demo");
  r.add("a", true, "fine");
  r.add("b", Status::Skipped);
  EXPECT_EQ(r.to_text(), "PASS a: fine\nSKIPPED b\n");
}

TEST(Cli, Enumerate) {
  const auto r = run_cli("enumerate --level 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 8u);
  const auto j = run_cli("enumerate --level 2 --format json");
  EXPECT_EQ(nlohmann::json::parse(j.out)["count"], 35);
}

TEST(Cli, GraphMatchesLibrary) {
  const auto dot = run_cli("graph --level 1 --format dot");
  ASSERT_EQ(dot.code, 0);
  EXPECT_EQ(parse_dot(dot.out), crystal_graph(1));
  const auto json = run_cli("graph --level 2 --format json --arrows 01");
  ASSERT_EQ(json.code, 0);
  EXPECT_EQ(graph_from_json(json.out), crystal_graph(2, parse_arrows("01")));
}

TEST(Cli, CheckPerfect) {
  const auto r = run_cli("check perfect --level 1");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  std::map<std::string, std::string> status;
  for (const auto& c : j["checks"]) status[c["name"]] = c["status"];
  for (const char* p : {"P1", "P2", "P4", "P5"}) EXPECT_EQ(status[p], "pass") << p;
  EXPECT_EQ(status["P3"], "skipped");
}

TEST(Cli, Suites) {
  EXPECT_EQ(run_cli("decompose --level 3").code, 0);
  EXPECT_EQ(run_cli("tensor --level 2 --check-connected").code, 0);
  EXPECT_EQ(run_cli("verify appendix --lmax 3").code, 0);
  EXPECT_EQ(run_cli("verify lemmas --lmax 3").code, 0);
  EXPECT_EQ(run_cli("verify coherent --level 2 --box 1").code, 0);
  EXPECT_EQ(run_cli("verify relations").code, 0);
}

TEST(Cli, Deterministic) {
  const auto a = run_cli("decompose --level 4 --format json");
  const auto b = run_cli("decompose --level 4 --format json");
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(nlohmann::json::parse(a.out).contains("timings"));
  EXPECT_TRUE(nlohmann::json::parse(run_cli("--timings decompose --level 2 --format json").out).contains("timings"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli("").code, 2);
  EXPECT_EQ(run_cli("enumerate").code, 2);
  EXPECT_EQ(run_cli("enumerate --level 0").code, 2);
  EXPECT_EQ(run_cli("graph --level 1 --format svg").code, 2);
  EXPECT_EQ(run_cli("graph --level 1 --arrows 3").code, 2);
  EXPECT_EQ(run_cli("verify").code, 2);
  EXPECT_EQ(run_cli("frobnicate").code, 2);
  EXPECT_EQ(run_cli("--help").code, 0);
}
