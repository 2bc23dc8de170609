#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gorwb/corpus.hpp"

using namespace gorwb;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> filesUnder(const fs::path& dir) {
  std::vector<std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) out.push_back(fs::relative(e.path(), dir).string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Corpus, Shape) {
  Corpus c = buildCorpus();
  EXPECT_GE(c.algebras.size(), 15u);
  for (const auto& na : c.algebras) EXPECT_GE(c.modulesOf(na.name).size(), 8u) << na.name;
  EXPECT_GE(c.complexes.size(), 20u);
  EXPECT_FALSE(c.graded.empty());
  for (const auto& e : c.extensions) {
    EXPECT_TRUE(sameAlgebra(e.ext.base, c.algebra(e.base))) << e.name;
    EXPECT_TRUE(sameAlgebra(e.ext.total, c.algebra(e.total))) << e.name;
  }
  EXPECT_THROW(c.algebra("nope"), PreconditionFailed);
}

TEST(Corpus, ModulesAreDistinct) {
  auto a = pathAlgebra({2, {{0, 1, "a"}}, {}}, Field(2));
  auto mods = moduleCorpus(a);
  ASSERT_GE(mods.size(), 8u);
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = i + 1; j < mods.size(); ++j)
      EXPECT_NE(isIsomorphic(mods[i].module, mods[j].module).verdict, Verdict::Yes)
          << mods[i].label << " " << mods[j].label;
}

TEST(Corpus, BundledFilesMatchBuilders) {
  fs::path tmp = fs::temp_directory_path() / "gorwb_corpus_test";
  fs::remove_all(tmp);
  writeCorpus(buildCorpus(), tmp);
  const fs::path bundled = GORWB_CORPUS_DIR;
  auto files = filesUnder(tmp);
  ASSERT_EQ(files, filesUnder(bundled));
  for (const auto& f : files) EXPECT_EQ(slurp(tmp / f), slurp(bundled / f)) << f;
  fs::remove_all(tmp);
}

TEST(Corpus, LoadsFromFiles) {
  Corpus built = buildCorpus();
  Corpus loaded = loadCorpus(GORWB_CORPUS_DIR);
  ASSERT_EQ(loaded.algebras.size(), built.algebras.size());
  for (std::size_t i = 0; i < built.algebras.size(); ++i) {
    EXPECT_EQ(loaded.algebras[i].name, built.algebras[i].name);
    EXPECT_TRUE(sameAlgebra(loaded.algebras[i].algebra, built.algebras[i].algebra));
  }
  for (const auto& [name, mods] : built.modules) {
    const auto& lm = loaded.modulesOf(name);
    ASSERT_EQ(lm.size(), mods.size());
    for (std::size_t i = 0; i < mods.size(); ++i) {
      EXPECT_EQ(lm[i].label, mods[i].label);
      EXPECT_TRUE(lm[i].module.sameAs(mods[i].module));
      EXPECT_EQ(lm[i].module.algebra().get(), loaded.algebra(name).get());
    }
  }
  EXPECT_EQ(loaded.complexes.size(), built.complexes.size());
  EXPECT_EQ(loaded.graded.size(), built.graded.size());
  EXPECT_EQ(loaded.extension("a2_trunc2").ext.base.get(), loaded.algebra("a2").get());
  EXPECT_EQ(loaded.bimodule("morita_mat2_trunc2").bimodule.dim(), built.bimodule("morita_mat2_trunc2").bimodule.dim());
  EXPECT_THROW(loadCorpus(fs::temp_directory_path() / "gorwb_no_such_corpus"), ParseError);
}
