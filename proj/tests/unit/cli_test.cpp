#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "run.hpp"

using namespace gorwb::cli;
namespace fs = std::filesystem;

namespace {

const std::string kCorpus = GORWB_CORPUS_DIR;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(const std::string& command, std::vector<std::string> inputs, Format f = Format::Text,
               std::size_t bound = 20) {
  RunConfig c;
  c.command = command;
  for (auto& p : inputs) c.inputPaths.push_back(kCorpus + "/" + p);
  c.format = f;
  c.bound = bound;
  c.corpusDir = kCorpus;
  std::ostringstream out, err;
  int code = run(c, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, ProfileOfA2) {
  auto o = invoke("profile", {"algebras/a2.alg"});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(contains(o.out, "spdi=1 sidp=1 gorensteinDim=1")) << o.out;
  auto q = invoke("profile", {"quivers/a2.quiver"});
  EXPECT_EQ(q.out, o.out);
}

TEST(Cli, MalformedInputExitsTwo) {
  fs::path bad = fs::temp_directory_path() / "gorwb_cli_bad.alg";
  std::ofstream(bad) << R"({"field":{"char":2},"basis":["e"],"table":[[["1"]]]})";
  RunConfig c;
  c.command = "profile";
  c.inputPaths = {bad.string()};
  std::ostringstream out, err;
  EXPECT_EQ(run(c, out, err), 2);
  EXPECT_TRUE(contains(err.str(), "gorwb_cli_bad.alg")) << err.str();
  EXPECT_TRUE(contains(err.str(), "'unit'")) << err.str();
  fs::remove(bad);

  EXPECT_EQ(invoke("no-such-command", {}).code, 2);
  EXPECT_EQ(invoke("profile", {}).code, 2);
  EXPECT_EQ(invoke("profile", {"modules/a2__S1.mod"}).code, 2);
  EXPECT_EQ(invoke("profile", {"algebras/a2.alg"}, Format::Text, 0).code, 2);
}

TEST(Cli, TransferTableHasEqualColumns) {
  auto o = invoke("transfer-check", {"extensions/a2_trunc2.ext"}, Format::Csv);
  EXPECT_EQ(o.code, 0) << o.err;
  std::istringstream lines(o.out);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("Gpd transfer,", 0) != 0) continue;
    ++rows;
    EXPECT_TRUE(line.size() > 4 && line.substr(line.size() - 4) == ",yes") << line;
  }
  EXPECT_GE(rows, 16u);
}

TEST(Cli, PreconditionsAndProperties) {
  EXPECT_EQ(invoke("glgdim-check", {"extensions/f2_a2.ext"}).code, 2);
  EXPECT_EQ(invoke("glgdim-check", {"extensions/f3_c3.ext"}).code, 0);
  EXPECT_EQ(invoke("transfer-check", {"extensions/f2_a2.ext"}).code, 2);
  auto c = invoke("counterexample-product", {"algebras/f2.alg", "algebras/a2.alg", "modules/a2__S1.mod"});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(invoke("counterexample-product", {"algebras/f2.alg", "algebras/a2.alg", "modules/a2__P1.mod"}).code, 2);
  auto t = invoke("triequiv-check", {"extensions/f2_c2.ext"});
  EXPECT_EQ(t.code, 0);
  EXPECT_TRUE(contains(t.out, "Ker(eps)  S1"));
  auto f = invoke("frobenius-verify", {"extensions/f2_a2.ext"});
  EXPECT_TRUE(contains(f.out, "Frobenius extension  no"));
  auto k = invoke("complex-check", {"complexes/a2_stalk_S1.cpx", "graded/a2_S1.gr"});
  EXPECT_EQ(k.code, 0) << k.out;
}

TEST(Cli, ModuleCommands) {
  auto g = invoke("gpd", {"modules/a2__S1.mod"});
  EXPECT_EQ(g.code, 0);
  EXPECT_TRUE(contains(g.out, "Gpd                    1")) << g.out;
  auto t = invoke("totalize", {"modules/a2_trunc2__S1.mod"}, Format::Json);
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_TRUE(contains(t.out, "\"passed\": true"));
  EXPECT_EQ(invoke("resolve", {"modules/nakayama2__S1.mod"}, Format::Text, 5).code, 0);
  EXPECT_EQ(invoke("module-info", {"modules/a3__I2.mod"}).code, 0);
  EXPECT_EQ(invoke("algebra-info", {"algebras/mat2_trunc2.alg"}).code, 0);
}

TEST(Cli, ReportsAreDeterministic) {
  for (Format f : {Format::Text, Format::Csv, Format::Json}) {
    auto a = invoke("triequiv-check", {"bimodules/morita_mat2_trunc2.bimod"}, f);
    auto b = invoke("triequiv-check", {"bimodules/morita_mat2_trunc2.bimod"}, f);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}
