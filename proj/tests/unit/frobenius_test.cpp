#include <gtest/gtest.h>

#include "gorwb/frobenius.hpp"

using namespace gorwb;

namespace {

const Field F2(2);
const Field F3(3);

AlgebraPtr a2(const Field& f = F2) { return pathAlgebra({2, {{0, 1, "a"}}, {}}, f); }
AlgebraPtr cyclic(std::size_t p) { return groupAlgebra(cyclicGroupTable(p), Field(static_cast<std::uint32_t>(p))); }

RingExtension groupExtension(std::size_t p) { return unitExtension(cyclic(p)); }

std::vector<LabeledModule> corpusOf(const AlgebraPtr& a) {
  auto s = structuralModules(a);
  std::vector<LabeledModule> out;
  for (std::size_t c = 0; c < s.simples.size(); ++c) {
    out.push_back({"S" + std::to_string(c + 1), s.simples[c]});
    out.push_back({"P" + std::to_string(c + 1), s.projectives[c].module});
    out.push_back({"I" + std::to_string(c + 1), s.injectives[c]});
  }
  out.push_back({"A", regularModule(a)});
  return out;
}

}  // namespace

TEST(Extension, Validation) {
  auto a = a2();
  EXPECT_NO_THROW(identityExtension(a));
  EXPECT_NO_THROW(unitExtension(a));
  Mat bad(F2, a->dim(), 1);
  EXPECT_THROW(makeExtension(fieldAlgebra(F2), a, bad), InvalidAlgebra);
}

TEST(Functors, InduceRestrictCoinduce) {
  auto ext = groupExtension(2);
  Module k = regularModule(ext.base);
  Module ind = induce(ext, k);
  EXPECT_EQ(ind.dim(), 2u);
  EXPECT_EQ(isIsomorphic(ind, regularModule(ext.total)).verdict, Verdict::Yes);
  auto t3 = truncatedExtensionOf(a2(), 2);
  for (const auto& lm : corpusOf(t3.base)) {
    EXPECT_EQ(induce(t3, lm.module).dim(), 2 * lm.module.dim());
    EXPECT_EQ(coinduce(t3, lm.module).dim(), 2 * lm.module.dim());
  }
  Module resS = restrict(t3, regularModule(t3.total));
  EXPECT_EQ(isIsomorphic(resS, directSum(regularModule(t3.base), regularModule(t3.base))).verdict, Verdict::Yes);
  auto id = identityExtension(a2());
  for (const auto& lm : corpusOf(id.base)) {
    EXPECT_EQ(isIsomorphic(induce(id, lm.module), lm.module).verdict, Verdict::Yes);
    EXPECT_EQ(isIsomorphic(coinduce(id, lm.module), lm.module).verdict, Verdict::Yes);
    EXPECT_TRUE(restrict(id, lm.module).sameAs(lm.module));
  }
}

TEST(Adjunctions, TriangleIdentities) {
  for (auto ext : {groupExtension(2), truncatedExtensionOf(a2(), 2), unitExtension(a2()), identityExtension(a2())}) {
    for (const auto& adj : {indRes(ext), resCoind(ext)}) {
      for (const auto& lm : corpusOf(adj.source)) EXPECT_TRUE(triangleAtSource(adj, lm.module)) << adj.name << lm.label;
      for (const auto& lm : corpusOf(adj.target)) EXPECT_TRUE(triangleAtTarget(adj, lm.module)) << adj.name << lm.label;
    }
    Adjunction th = tensorHom(regularBimodule(ext));
    for (const auto& lm : corpusOf(th.source)) EXPECT_TRUE(triangleAtSource(th, lm.module));
    for (const auto& lm : corpusOf(th.target)) EXPECT_TRUE(triangleAtTarget(th, lm.module));
  }
}

TEST(Adjunctions, FaithfulnessReport) {
  auto ext = groupExtension(2);
  auto r = faithfulnessReport(indRes(ext), corpusOf(ext.base), corpusOf(ext.total));
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.addGenerationSource);
  EXPECT_TRUE(r.addGenerationTarget);
  // k -> A2: Res(A2) contains k, Ind(k) = A2 generates
  auto u = unitExtension(a2());
  auto ru = faithfulnessReport(indRes(u), corpusOf(u.base), corpusOf(u.total));
  EXPECT_TRUE(ru.passed());
}

TEST(Frobenius, Extensions) {
  EXPECT_EQ(isFrobeniusExtension(identityExtension(a2())).verdict, Verdict::Yes);
  for (std::size_t t : {2u, 3u}) {
    auto e = truncatedExtensionOf(fieldAlgebra(F2), t);
    auto v = isFrobeniusExtension(e);
    EXPECT_EQ(v.verdict, Verdict::Yes) << v.detail;
    EXPECT_TRUE(v.witness.has_value());
  }
  EXPECT_EQ(isFrobeniusExtension(groupExtension(2)).verdict, Verdict::Yes);
  EXPECT_EQ(isFrobeniusExtension(groupExtension(3)).verdict, Verdict::Yes);
  EXPECT_EQ(isFrobeniusExtension(truncatedExtensionOf(a2(), 2)).verdict, Verdict::Yes);
  EXPECT_EQ(isFrobeniusExtension(unitExtension(a2())).verdict, Verdict::No);
}

TEST(Frobenius, Bimodules) {
  auto k = fieldAlgebra(F2);
  EXPECT_EQ(isFrobeniusBimodule(regularBimodule(identityExtension(k))).verdict, Verdict::Yes);
  EXPECT_EQ(isFrobeniusBimodule(regularBimodule(groupExtension(2))).verdict, Verdict::Yes);
  EXPECT_EQ(isFrobeniusBimodule(regularBimodule(unitExtension(a2()))).verdict, Verdict::No);
  // simple module of F2[C2] as an F2[C2]-k-bimodule is not projective on the left
  auto s = cyclic(2);
  Module triv = structuralModules(s).simples[0];
  Bimodule m(s, k, 1, triv.actions(), {Mat::identity(F2, 1)});
  auto v = isFrobeniusBimodule(m);
  EXPECT_EQ(v.verdict, Verdict::No);
  EXPECT_NE(v.detail.find("left"), std::string::npos);
}

TEST(Frobenius, IndIsoCoind) {
  for (auto ext : {groupExtension(2), groupExtension(3), truncatedExtensionOf(fieldAlgebra(F2), 3),
                   truncatedExtensionOf(a2(), 2)})
    for (const auto& lm : corpusOf(ext.base))
      EXPECT_EQ(isIsomorphic(induce(ext, lm.module), coinduce(ext, lm.module)).verdict, Verdict::Yes);
}

TEST(Transfer, GpdTables) {
  auto ext = truncatedExtensionOf(a2(), 2);
  auto t = verifyGpdTransfer(ext, corpusOf(ext.total), corpusOf(ext.base), 20);
  EXPECT_TRUE(t.allEqual);
  EXPECT_TRUE(t.indFaithful);
  bool nonzero = false;
  for (const auto& row : t.rows) nonzero |= row.gpdSource.value_or(0) > 0;
  EXPECT_TRUE(nonzero);
  EXPECT_THROW(verifyGpdTransfer(unitExtension(a2()), {}, {}, 20), PreconditionFailed);
}

TEST(Transfer, GlobalDimension) {
  auto g = globalGdimTransfer(groupExtension(3), 20);
  EXPECT_TRUE(g.equal);
  EXPECT_EQ(g.base.gorensteinDim, 0u);
  auto h = globalGdimTransfer(truncatedExtensionOf(a2(), 2), 20);
  EXPECT_TRUE(h.equal);
  EXPECT_EQ(h.total.gorensteinDim, 1u);
  // both functors faithful, but k -> A2 is not Frobenius
  EXPECT_THROW(globalGdimTransfer(unitExtension(a2()), 20), PreconditionFailed);
}

TEST(Counterexample, ProductAlgebra) {
  auto b = fieldAlgebra(F2);
  auto bp = a2();
  Module s1 = structuralModules(bp).simples[0];
  auto c = counterexampleProduct(b, bp, s1, 20);
  EXPECT_TRUE(c.certified);
  EXPECT_EQ(c.prX.dim(), 0u);
  EXPECT_TRUE(c.prInc.trianglesHold);
  EXPECT_TRUE(c.incPr.trianglesHold);
  EXPECT_THROW(counterexampleProduct(b, bp, regularModule(bp), 20), PreconditionFailed);
  EXPECT_THROW(counterexampleProduct(b, b, regularModule(b), 20), PreconditionFailed);
}

TEST(TriEquiv, IdentityAndMorita) {
  auto id = identityExtension(a2());
  auto r = triEquivConditions(indRes(id), corpusOf(id.base), corpusOf(id.total), 20);
  EXPECT_TRUE(r.allPass());
  auto rr = truncatedExtension(fieldAlgebra(F2), 2).total;
  auto mat = matrixAlgebra(rr, 2);
  Bimodule col = columnBimodule(mat, rr, 2);
  auto adj = tensorHom(col);
  auto m = triEquivConditions(adj, corpusOf(rr), corpusOf(mat), 20);
  EXPECT_TRUE(m.allPass());
}

TEST(TriEquiv, GroupExtensionFails) {
  auto ext = groupExtension(2);
  auto r = triEquivConditions(indRes(ext), corpusOf(ext.base), corpusOf(ext.total), 20);
  EXPECT_FALSE(r.allProjective);
  EXPECT_FALSE(r.stableHomMatches);
  bool kerNonProjective = false;
  for (const auto& d : r.defects)
    if (!d.sourceSide && d.label == "S1") kerNonProjective = !(d.pd.finite() && *d.pd.value == 0);
  EXPECT_TRUE(kerNonProjective);
}
