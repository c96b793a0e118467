#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace morseflow;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, false);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(MORSEFLOW_FIXTURES) + "/" + name; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

} // namespace

TEST(Cli, Homology) {
  const auto r = run({"homology", "Sng(4,2)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"ranks\":{\"0\":1,\"1\":2,\"3\":2,\"4\":1}}\n");
  EXPECT_EQ(graded_group_from_json(Json::parse(r.out)), homology(s_ng(4, 2)));
}

TEST(Cli, HumanHomologyListsEveryDegree) {
  const auto r = run({"--format", "human", "homology", "S2 x S1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "H_0 = Z\nH_1 = Z\nH_2 = Z\nH_3 = Z\n");
  const auto after = run({"homology", "Sng(4,2)", "--format", "human"});
  EXPECT_EQ(lines(after.out).at(2), "H_2 = 0");
}

TEST(Cli, Poincare) {
  const auto r = run({"poincare", "S3 x S1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"coefficients\":[1,1,0,1,1],\"polynomial\":\"1 + t + t^3 + t^4\"}\n");
}

TEST(Cli, Betti) {
  EXPECT_EQ(run({"betti", "Sng(6,4)", "--degree", "5"}).out, "4\n");
  EXPECT_EQ(run({"betti", "Sng(6,4)", "--degree", "2"}).out, "0\n");
  EXPECT_EQ(run({"betti", "S3"}).code, 2);
}

TEST(Cli, CheckFlowAdmissible) {
  const auto r = run({"check-flow", fixture("flow_handle.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto report = validation_report_from_json(Json::parse(r.out));
  EXPECT_TRUE(report.admissible);
  EXPECT_EQ(report.genus, 1);
  EXPECT_EQ(report.k, 0);
  EXPECT_NE(report.find("connections"), nullptr);
  EXPECT_EQ(to_json(report).dump() + "\n", r.out);
}

TEST(Cli, CheckFlowInadmissible) {
  const auto r = run({"check-flow", fixture("flow_middle_index.json")});
  EXPECT_EQ(r.code, 1);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["genus"], "parity_error");
  EXPECT_FALSE(doc["admissible"].get<bool>());
  EXPECT_EQ(run({"check-flow", fixture("flow_extra_node.json")}).code, 0);
}

TEST(Cli, CheckFlowMalformed) {
  const auto bad_len = run({"check-flow", fixture("flow_bad_length.json")});
  EXPECT_EQ(bad_len.code, 2);
  EXPECT_NE(bad_len.err.find("counts"), std::string::npos);
  const auto bad_json = run({"check-flow", fixture("not_json.json")});
  EXPECT_EQ(bad_json.code, 2);
  EXPECT_NE(bad_json.err.find("malformed JSON"), std::string::npos);
  EXPECT_EQ(run({"check-flow", fixture("missing.json")}).code, 2);
}

TEST(Cli, Enumerate) {
  const auto r = run({"enumerate", "--n", "4", "--g", "0", "--k-max", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"c\":[1,0,0,0,1],\"k\":0}\n");
  const auto more = run({"enumerate", "--n", "5", "--g", "2", "--k-max", "3"});
  const auto rows = lines(more.out);
  EXPECT_EQ(rows.size(), enumerate_flows(5, 2, 3).size());
  for (const auto& row : rows) {
    const auto doc = Json::parse(row);
    EXPECT_EQ(doc["c"].size(), 6u);
  }
}

TEST(Cli, Obstruction) {
  const auto r = run({"obstruction", "--n", "6", "--index", "3"});
  EXPECT_EQ(r.code, 0);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["result"], "Forbidden");
  EXPECT_NE(doc["reason"].get<std::string>().find("intersection number"), std::string::npos);
  EXPECT_EQ(Json::parse(run({"obstruction", "--n", "4", "--index", "1", "--g", "2"}).out)["result"],
            "Admissible");
  const auto human = run({"--format", "human", "obstruction", "--n", "6", "--index", "3"});
  EXPECT_EQ(human.out.rfind("Forbidden: ", 0), 0u);
  EXPECT_EQ(run({"obstruction", "--n", "6", "--index", "6"}).code, 2);
}

TEST(Cli, Oracle) {
  const auto r = run({"oracle", "S2 x S1"});
  EXPECT_EQ(r.code, 0);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(graded_group_from_json(doc), homology(parse_manifold("S2 x S1")));
  const auto big = run({"oracle", "S4 x S4"});
  EXPECT_EQ(big.code, 2);
  EXPECT_NE(big.err.find("constructible"), std::string::npos);
}

TEST(Cli, OracleComplexReportsTorsion) {
  const auto r = run({"oracle-complex", fixture("rp2.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"ranks\":{\"0\":1},\"torsion\":{\"1\":[2]}}\n");
  const auto human = run({"--format", "human", "oracle-complex", fixture("rp2.json")});
  EXPECT_EQ(human.out, "H_0 = Z\nH_1 = Z/2\nH_2 = 0\n");
  EXPECT_EQ(run({"oracle-complex", fixture("flow_handle.json")}).code, 2);
}

TEST(Cli, Crosscheck) {
  for (const char* e : {"S1", "S4", "S1 x S1", "S3 x S1", "Sng(2,3)", "Sng(3,2)"}) {
    const auto r = run({"crosscheck", e});
    EXPECT_EQ(r.code, 0) << e;
    EXPECT_TRUE(Json::parse(r.out)["match"].get<bool>()) << e;
  }
  const auto human = run({"--format", "human", "crosscheck", "S2 x S1"});
  EXPECT_EQ(lines(human.out).size(), 4u);
  EXPECT_NE(human.out.find("MATCH"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  const auto syntax = run({"homology", "S3 x ?"});
  EXPECT_EQ(syntax.code, 2);
  EXPECT_NE(syntax.err.find("position 5"), std::string::npos);
  EXPECT_EQ(run({"homology", "S2 # S3"}).code, 2);
  EXPECT_EQ(run({"homology", "S0"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--n", "3", "--g", "0", "--k-max", "0"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "homology", "S2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
