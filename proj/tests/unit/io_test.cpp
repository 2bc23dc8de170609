#include <gtest/gtest.h>

#include <filesystem>

#include "gorwb/io.hpp"

using namespace gorwb;
namespace fs = std::filesystem;

namespace {

const Field F2(2);

AlgebraPtr a2(const Field& f = F2) { return pathAlgebra({2, {{0, 1, "a"}}, {}}, f); }

fs::path scratch(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("gorwb_io_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

bool sameActions(const Module& m, const Module& n) {
  if (m.dim() != n.dim() || m.actions().size() != n.actions().size()) return false;
  for (std::size_t i = 0; i < m.actions().size(); ++i)
    if (!(m.actions()[i] == n.actions()[i])) return false;
  return true;
}

}  // namespace

TEST(Io, AlgebraRoundTrip) {
  for (const auto& a : {a2(), a2(Field(0)), groupAlgebra(symmetricGroup3Table(), Field(7)),
                        truncatedExtension(a2(), 2).total}) {
    auto b = io::parseAlgebra(io::algebraJson(*a));
    EXPECT_TRUE(sameAlgebra(a, b));
    EXPECT_EQ(a->labels(), b->labels());
    EXPECT_EQ(a->idempotents().size(), b->idempotents().size());
    EXPECT_EQ(io::algebraJson(*a), io::algebraJson(*b));
  }
}

TEST(Io, QuiverDocument) {
  Quiver q{2, {{0, 1, "a"}, {1, 0, "b"}}, {{{{"a", "b"}, "1"}}, {{{"b", "a"}, "1"}}}};
  auto a = io::parseQuiverAlgebra(io::quiverJson(q, F2));
  EXPECT_TRUE(sameAlgebra(a, pathAlgebra(q, F2)));
  EXPECT_EQ(a->dim(), 4u);
}

TEST(Io, FilesAndReferences) {
  auto d = scratch("files");
  auto a = a2();
  io::writeFile(d / "algebras/a2.alg", io::algebraJson(*a));
  auto s = structuralModules(a);
  io::writeFile(d / "modules/p1.mod", io::moduleJson(s.projectives[0].module, "../algebras/a2.alg"));
  io::writeFile(d / "modules/s2.mod", io::moduleJson(s.simples[1], "../algebras/a2.alg"));

  ComplexObj c = stalkComplex(s.simples[0], 2);
  io::writeFile(d / "c.cpx", io::complexJson(c, "algebras/a2.alg"));
  GradedModule g = makeGraded(a, -1, {s.simples[0], Module::zero(a), s.simples[1]});
  io::writeFile(d / "g.gr", io::gradedJson(g, "algebras/a2.alg"));
  auto ext = truncatedExtensionOf(a, 2);
  io::writeFile(d / "t.alg", io::algebraJson(*ext.total));
  io::writeFile(d / "e.ext", io::extensionJson(ext, "algebras/a2.alg", "t.alg"));
  auto bim = regularBimodule(ext);
  io::writeFile(d / "b.bimod", io::bimoduleJson(bim, "t.alg", "algebras/a2.alg"));

  io::Loader loader;
  Module p1 = loader.module(d / "modules/p1.mod");
  Module s2 = loader.module(d / "modules/s2.mod");
  EXPECT_EQ(p1.algebra().get(), s2.algebra().get());
  EXPECT_EQ(p1.algebra().get(), loader.algebra(d / "algebras/a2.alg").get());
  EXPECT_TRUE(sameActions(p1, s.projectives[0].module));

  ComplexObj c2 = loader.complex(d / "c.cpx");
  EXPECT_EQ(c2.lo, 2);
  EXPECT_EQ(c2.hi(), 2);
  EXPECT_TRUE(sameActions(c2.at(2), s.simples[0]));

  GradedModule g2 = loader.graded(d / "g.gr");
  EXPECT_EQ(g2.lo, -1);
  EXPECT_EQ(g2.hi(), 1);
  EXPECT_EQ(g2.totalDim(), 2u);

  auto ext2 = loader.extension(d / "e.ext");
  EXPECT_EQ(ext2.embedding, ext.embedding);
  auto bim2 = loader.bimodule(d / "b.bimod");
  EXPECT_EQ(bim2.dim(), bim.dim());
  fs::remove_all(d);
}

TEST(Io, ComplexWithDifferentials) {
  auto d = scratch("cpx");
  auto a = a2();
  auto s = structuralModules(a);
  auto r = resolve(s.simples[0], Direction::Projective, 2);
  // [P(2) -> P(1)] in degrees -1, 0
  ComplexObj c = makeComplex(a, -1, {r.terms[1], r.terms[0]}, {r.differentials[0]});
  io::writeFile(d / "a.alg", io::algebraJson(*a));
  io::writeFile(d / "c.cpx", io::complexJson(c, "a.alg"));
  io::Loader loader;
  ComplexObj c2 = loader.complex(d / "c.cpx");
  EXPECT_EQ(cohomologyDim(c2, 0), 1u);
  EXPECT_EQ(cohomologyDim(c2, -1), 0u);
  fs::remove_all(d);
}

TEST(Io, MalformedInput) {
  EXPECT_THROW(io::parseAlgebra("{not json"), ParseError);
  EXPECT_THROW(io::parseAlgebra(R"({"field":{"char":2},"basis":["e"]})"), ParseError);
  EXPECT_THROW(io::parseAlgebra(R"({"field":{"char":4},"basis":["e"],"table":[[["1"]]],"unit":["1"]})"), ParseError);
  // e*e = 0 has no unit
  EXPECT_THROW(io::parseAlgebra(R"({"field":{"char":2},"basis":["e"],"table":[[["0"]]],"unit":["1"]})"),
               InvalidAlgebra);
  EXPECT_THROW(io::parseQuiverAlgebra(R"({"field":{"char":2},"vertices":1,"arrows":[[0,0,"x"]],"relations":[]})"),
               InfiniteDimensional);
  try {
    io::parseAlgebra(R"({"field":{"char":2},"basis":["e"],"table":[[["1"]]],"unit":["1","0"]})", "bad.alg");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.alg"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("unit"), std::string::npos);
  }

  auto d = scratch("bad");
  io::writeFile(d / "a.alg", io::algebraJson(*a2()));
  // action of a on a 1-dimensional module must square to itself for e1
  io::writeFile(d / "m.mod", R"({"algebra":"a.alg","dim":1,"action":[[["1"]],[["1"]],[["1"]]]})");
  io::Loader loader;
  EXPECT_THROW(loader.module(d / "m.mod"), InvalidModule);
  EXPECT_THROW(loader.module(d / "missing.mod"), ParseError);
  fs::remove_all(d);
}
