#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "wedgekit/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
  json body() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Outcome r;
  r.code = wedgekit::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST(Cli, ClassCountExample) {
  const Outcome r = invoke({"classify-count", "--group", R"({"factors":[5]})", "--dim", "1"});
  ASSERT_EQ(r.code, 0) << r.out;
  const json j = r.body();
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "classify-count");
  EXPECT_EQ(j["result"]["count"], 2);
  EXPECT_EQ(j["result"]["representatives"].size(), 2u);
  EXPECT_EQ(j["provenance"]["statement"], "class-count");
  EXPECT_EQ(j["input"]["group"], json::parse(R"({"factors":[5]})"));
}

TEST(Cli, QuantumTorusExample) {
  const Outcome r = invoke({"qtorus", "--degrees", "5", "--exponents", "2"});
  ASSERT_EQ(r.code, 0);
  const json j = r.body();
  EXPECT_EQ(j["result"]["k_isomorphic"], false);
  EXPECT_EQ(j["result"]["wedge_criterion"], false);
  EXPECT_EQ(j["result"]["brauer"], false);
  EXPECT_EQ(j["verdict"], false);
  EXPECT_EQ(j["provenance"]["statement"], "quantum-torus-criterion");
}

TEST(Cli, AssertTurnsNoIntoExitOne) {
  EXPECT_EQ(invoke({"--assert", "qtorus", "--degrees", "5", "--exponents", "2"}).code, 1);
  EXPECT_EQ(invoke({"qtorus", "--assert", "--degrees", "5", "--exponents", "2"}).code, 1);
  EXPECT_EQ(invoke({"--assert", "qtorus", "--degrees", "5", "--exponents", "4"}).code, 0);
  EXPECT_EQ(invoke({"--assert", "katsylo", "--group", "[7]"}).code, 1);
  EXPECT_EQ(invoke({"--assert", "katsylo", "--group", "[6]"}).code, 0);
  // Counting is not a yes/no query.
  EXPECT_EQ(invoke({"--assert", "classify-count", "--group", "[5]", "--dim", "1"}).code, 0);
}

TEST(Cli, SnfOnIdentity) {
  const Outcome r = invoke({"snf", "--matrix", "[[1,0],[0,1]]"});
  ASSERT_EQ(r.code, 0);
  const json res = r.body()["result"];
  const json id = json::parse("[[1,0],[0,1]]");
  EXPECT_EQ(res["s"], id);
  EXPECT_EQ(res["u"], id);
  EXPECT_EQ(res["v"], id);
}

TEST(Cli, StdinRequest) {
  const Outcome r = invoke({"classify-count"}, R"({"command":"classify-count","group":{"factors":[7,7]},"dim":2})");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.body()["result"]["count"], 3);
  EXPECT_EQ(invoke({"classify-count"}, R"({"command":"katsylo","group":[5],"dim":1})").code, 2);
}

TEST(Cli, InvalidInputExitsTwo) {
  const Outcome bad_json = invoke({"classify-count"}, "{not json");
  EXPECT_EQ(bad_json.code, 2);
  EXPECT_EQ(bad_json.body()["error"]["kind"], "invalid-input");
  EXPECT_EQ(invoke({"classify-count"}).code, 2);
  EXPECT_EQ(invoke({"classify-count", "--group", "[4,6]", "--dim", "2"}).code, 2);
  EXPECT_EQ(invoke({"qtorus", "--degrees", "5", "--exponents", "5"}).code, 2);
  EXPECT_EQ(invoke({"classify-count", "--group", "[5]"}).code, 2);
  const Outcome usage = invoke({"no-such-command"});
  EXPECT_EQ(usage.code, 2);
  EXPECT_EQ(usage.body()["error"]["kind"], "usage");
  EXPECT_EQ(invoke({}).code, 2);
}

TEST(Cli, Wedge) {
  const Outcome r = invoke({"wedge", "--group", "[2,4]", "--tuple", "[[1,0],[0,1]]"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.body()["result"]["is_generator"], true);
}

TEST(Cli, ElemopsAndGlz) {
  const Outcome e = invoke({"elemops", "--group", "[5,5]", "--a", "[[1,0],[0,1]]", "--b", "[[1,1],[0,1]]"});
  ASSERT_EQ(e.code, 0) << e.out;
  EXPECT_EQ(e.body()["result"]["reachable"], true);
  const Outcome no = invoke({"--assert", "elemops", "--group", "[5,5]", "--a", "[[1,0],[0,1]]", "--b", "[[2,0],[0,1]]"});
  EXPECT_EQ(no.code, 1);
  const Outcome g = invoke({"glz-witness", "--group", "[5,5]", "--a", "[[1,0],[0,1]]", "--b", "[[0,1],[1,0]]"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(g.body()["result"]["witness"], json::parse("[[0,1],[1,0]]"));
  EXPECT_EQ(invoke({"glz-witness", "--group", "[5,5]", "--a", "[[1,0],[0,1]]", "--b", "[[1,0],[1,0]]"}).code, 2);
}

TEST(Cli, SymplecticCheck) {
  const Outcome r = invoke({"symplectic-check", "--base", "[2,2]", "--enumerate", "true"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.body()["result"]["automorphisms"], 720);
  EXPECT_EQ(r.body()["result"]["all_det_one"], true);
  const Outcome m = invoke({"symplectic-check", "--base", "[5]", "--matrix", "[[2,1],[1,1]]"});
  ASSERT_EQ(m.code, 0);
  EXPECT_EQ(m.body()["result"]["det_mod_n1"], 1);
  EXPECT_EQ(m.body()["result"]["pfaffian_det_mod_n1"], 1);
  EXPECT_EQ(invoke({"--assert", "symplectic-check", "--base", "[5]", "--matrix", "[[2,0],[0,1]]"}).code, 1);
}

TEST(Cli, ClassifyEquiv) {
  const Outcome yes = invoke({"classify-equiv", "--v", R"({"group":[5],"chars":[[1]]})", "--w", R"({"group":[5],"chars":[[4]]})"});
  ASSERT_EQ(yes.code, 0) << yes.out;
  EXPECT_EQ(yes.body()["result"]["witness"], json::parse("[[-1]]"));
  const Outcome no = invoke({"classify-equiv", "--v", R"({"group":[5],"chars":[[1]]})", "--w", R"({"group":[5],"chars":[[2]]})"});
  EXPECT_EQ(no.body()["verdict"], false);
  EXPECT_TRUE(no.body()["result"]["witness"].is_null());
}

TEST(Cli, Counterexamples) {
  const Outcome s = invoke({"counterexample", "--n", "5", "--r", "1"});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(s.body()["result"]["m"], 2);
  EXPECT_EQ(s.body()["result"]["lower_bound"], 2);
  const Outcome eight = invoke({"counterexample", "--n", "8", "--r", "1"});
  EXPECT_EQ(eight.body()["result"]["m"], 3);
  EXPECT_EQ(eight.body()["result"]["sufficient_by_exponent"], false);
  EXPECT_EQ(invoke({"--assert", "counterexample", "--n", "5", "--r", "2"}).code, 1);
  const Outcome p = invoke({"counterexample", "--params", "[[5,1],[5,1]]"});
  EXPECT_EQ(p.body()["result"]["exponents"], json::parse("[2,1]"));
}

TEST(Cli, Heisenberg) {
  const Outcome r = invoke({"heisenberg", "--group", "[2]", "--prime", "3"});
  ASSERT_EQ(r.code, 0) << r.out;
  const json res = r.body()["result"];
  EXPECT_EQ(res["commutator_form"], json::parse(R"([["0/1","1/2"],["1/2","0/1"]])"));
  EXPECT_EQ(res["span"], true);
  EXPECT_EQ(res["negated_standard_form"], true);
  EXPECT_EQ(invoke({"heisenberg", "--group", "[5]", "--prime", "7"}).code, 2);
}

TEST(Cli, OutputIsByteStableAndSorted) {
  const std::vector<std::string> args{"katsylo", "--group", "[7,14]"};
  const Outcome a = invoke(args), b = invoke(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, a.body().dump(2) + "\n");
  // Flag and stdin requests give the same document.
  EXPECT_EQ(invoke({"katsylo"}, R"({"group":[7,14]})").out, a.out);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "wedgekit_cli_test_out.json";
  std::filesystem::remove(path);
  const Outcome r = invoke({"--out", path.string(), "katsylo", "--group", "[5]"});
  ASSERT_EQ(r.code, 0);
  std::ifstream f(path);
  ASSERT_TRUE(f.good());
  const json j = json::parse(f);
  EXPECT_EQ(j["result"]["fails"], true);
  std::filesystem::remove(path);
}

TEST(Cli, Selftest) {
  const Outcome r = invoke({"selftest"});
  ASSERT_EQ(r.code, 0) << r.out;
  const json j = r.body();
  EXPECT_EQ(j["result"]["passed"], true);
  EXPECT_EQ(j["result"]["suites"].size(), 6u);
  EXPECT_EQ(invoke({"selftest", "--bound", "0"}).code, 2);
}
