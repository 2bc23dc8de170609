#include <gtest/gtest.h>

#include "gorwb/dgcplx.hpp"

using namespace gorwb;

namespace {

const Field F2(2);

AlgebraPtr a2() { return pathAlgebra({2, {{0, 1, "a"}}, {}}, F2); }
AlgebraPtr groupC2() { return groupAlgebra(cyclicGroupTable(2), F2); }

}  // namespace

TEST(FunctorF, Basics) {
  auto k = fieldAlgebra(F2);
  GradedModule zero = makeGraded(k, 0, {});
  EXPECT_TRUE(functorF(zero).components.empty());
  GradedModule x = makeGraded(k, 0, {regularModule(k)});
  ComplexObj fx = functorF(x);
  EXPECT_EQ(fx.lo, 0);
  ASSERT_EQ(fx.components.size(), 2u);
  EXPECT_EQ(fx.at(0).dim(), 1u);
  EXPECT_EQ(fx.at(1).dim(), 1u);
  EXPECT_TRUE(fx.d(0).matrix().isIdentity());
  auto c = isContractible(fx);
  EXPECT_EQ(c.verdict, Verdict::Yes);
  EXPECT_TRUE(c.homotopy.at(1).matrix().isIdentity());
  GradedModule u = functorU(fx);
  EXPECT_EQ(u.totalDim(), 2u);
}

TEST(Contractible, StalkIsNot) {
  auto a = a2();
  EXPECT_EQ(isContractible(stalkComplex(structuralModules(a).simples[0])).verdict, Verdict::No);
  EXPECT_EQ(isContractible(makeComplex(a, 0, {}, {})).verdict, Verdict::Yes);
}

TEST(Shift, SignsAndCohomology) {
  auto a = a2();
  auto s = structuralModules(a);
  Resolution r = resolve(s.simples[0], Direction::Projective, 4);
  ComplexObj c = makeComplex(a, -1, {r.terms[1], r.terms[0]}, {r.differentials[0]});
  ComplexObj s1 = shiftSigma(c);
  ComplexObj s2 = shiftSigma(s1);
  EXPECT_EQ(s2.lo, c.lo - 2);
  EXPECT_TRUE(s2.differentials[0].matrix() == c.differentials[0].matrix());
  for (int p = -3; p <= 1; ++p) EXPECT_EQ(cohomologyDim(s1, p), cohomologyDim(c, p + 1));
}

TEST(FrobeniusPairFU, Corpus) {
  auto g = groupC2();
  auto s = structuralModules(g);
  std::vector<GradedModule> graded{makeGraded(g, 0, {s.simples[0]}), makeGraded(g, -1, {regularModule(g), s.simples[0]})};
  std::vector<ComplexObj> complexes{stalkComplex(s.simples[0]), stalkComplex(regularModule(g), 2),
                                    functorF(graded[1])};
  FUReport r = checkFrobeniusPairFU(graded, complexes);
  EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures[0]);
  EXPECT_TRUE(checkFrobeniusPairFU({}, {}).passed());
  auto a = a2();
  auto sa = structuralModules(a);
  GradedModule p = makeGraded(a, 0, {sa.projectives[0].module, sa.projectives[1].module});
  ComplexObj fp = functorF(p);
  EXPECT_EQ(isContractible(fp).verdict, Verdict::Yes);
  for (const auto& m : fp.components) EXPECT_TRUE(isProjective(m));
  EXPECT_TRUE(checkFrobeniusPairFU({p}, {fp}).passed());
}

TEST(ComponentwiseGP, Verdicts) {
  auto a = a2();
  auto prof = gorensteinProfile(a);
  auto s = structuralModules(a);
  EXPECT_FALSE(componentwiseGpCheck(stalkComplex(s.simples[0]), prof).componentwiseGP);
  ComplexObj proj = functorF(makeGraded(a, 0, {s.projectives[0].module}));
  EXPECT_TRUE(componentwiseGpCheck(proj, prof).componentwiseGP);
  EXPECT_EQ(componentwiseGpCheck(shiftSigma(proj), prof).componentwiseGP, true);
  auto g = groupC2();
  auto pg = gorensteinProfile(g);
  EXPECT_TRUE(componentwiseGpCheck(stalkComplex(structuralModules(g).simples[0]), pg).componentwiseGP);
  GorensteinProfile none;
  EXPECT_THROW(componentwiseGpCheck(proj, none), PreconditionFailed);
}
