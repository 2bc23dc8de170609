#include <gtest/gtest.h>

#include "gorwb/algebra.hpp"

using namespace gorwb;

namespace {

const Field F2(2);
const Field F3(3);
const Field F7(7);
const Field QQ = Field::rationals();

Quiver a2Quiver() { return {2, {{0, 1, "a"}}, {}}; }

Quiver loopSquared() { return {1, {{0, 0, "x"}}, {{{{"x", "x"}, "1"}}}}; }

void expectRadicalInvariants(const Algebra& a) {
  EXPECT_NO_THROW(verifyRadical(a));
  EXPECT_LE(radicalNilpotencyIndex(a), a.dim());
}

}  // namespace

TEST(PathAlgebra, EmptyQuiverIsField) {
  auto a = pathAlgebra({1, {}, {}}, F2);
  EXPECT_EQ(a->dim(), 1u);
  EXPECT_EQ(a->radical().cols(), 0u);
}

TEST(PathAlgebra, A2) {
  auto a = pathAlgebra(a2Quiver(), F2);
  ASSERT_EQ(a->dim(), 3u);
  EXPECT_EQ(a->labels(), (std::vector<std::string>{"e1", "e2", "a"}));
  // a = e2 * a * e1
  Mat arrow = a->basisVector(2);
  EXPECT_EQ(a->multiply(a->multiply(a->basisVector(1), arrow), a->basisVector(0)), arrow);
  EXPECT_TRUE(a->multiply(a->basisVector(0), arrow).isZero());
  EXPECT_EQ(a->radical().cols(), 1u);
  EXPECT_EQ(a->idempotents().size(), 2u);
  EXPECT_EQ(a->leftIdealBasis(0).cols(), 2u);  // P(1) = span{e1, a}
  EXPECT_EQ(a->leftIdealBasis(1).cols(), 1u);
  EXPECT_EQ(a->classRepresentatives().size(), 2u);
  expectRadicalInvariants(*a);
}

TEST(PathAlgebra, LoopSquaredIsDualNumbers) {
  auto a = pathAlgebra(loopSquared(), QQ);
  EXPECT_EQ(a->dim(), 2u);
  EXPECT_TRUE(a->multiply(a->basisVector(1), a->basisVector(1)).isZero());
  expectRadicalInvariants(*a);
}

TEST(PathAlgebra, CommutativitySquareAndErrors) {
  Quiver sq{4, {{0, 1, "a"}, {0, 2, "b"}, {1, 3, "c"}, {2, 3, "d"}},
            {{{{"a", "c"}, "1"}, {{"b", "d"}, "-1"}}}};
  auto a = pathAlgebra(sq, F3);
  EXPECT_EQ(a->dim(), 9u);  // 4 vertices, 4 arrows, one path of length 2
  expectRadicalInvariants(*a);

  Quiver loop{1, {{0, 0, "x"}}, {}};
  EXPECT_THROW(pathAlgebra(loop, F2, 8), InfiniteDimensional);
  Quiver bad{2, {{0, 1, "a"}}, {{{{"a", "a"}, "1"}}}};
  EXPECT_THROW(pathAlgebra(bad, F2), MalformedRelation);
  Quiver mixed{1, {{0, 0, "x"}}, {{{{"x", "x"}, "1"}, {{"x", "x", "x"}, "1"}}}};
  EXPECT_THROW(pathAlgebra(mixed, F2), MalformedRelation);
  EXPECT_THROW(pathAlgebra({2, {{0, 5, "a"}}, {}}, F2), MalformedRelation);
}

TEST(PathAlgebra, NakayamaTwoCycleRadicalSquareZero) {
  Quiver q{2, {{0, 1, "a"}, {1, 0, "b"}}, {{{{"a", "b"}, "1"}}, {{{"b", "a"}, "1"}}}};
  auto a = pathAlgebra(q, F2);
  EXPECT_EQ(a->dim(), 4u);
  EXPECT_EQ(radicalNilpotencyIndex(*a), 2u);
  expectRadicalInvariants(*a);
}

TEST(GroupAlgebra, TrivialAndValidation) {
  auto a = groupAlgebra({{0}}, F2);
  EXPECT_EQ(a->dim(), 1u);
  EXPECT_THROW(groupAlgebra({{0, 1}, {0, 1}}, F2), NotAGroup);
  EXPECT_THROW(groupAlgebra({{0, 1}, {1, 2}}, F2), NotAGroup);
}

TEST(GroupAlgebra, C2OverF2IsLocal) {
  auto a = groupAlgebra(cyclicGroupTable(2), F2);
  ASSERT_EQ(a->dim(), 2u);
  ASSERT_EQ(a->radical().cols(), 1u);
  // radical spanned by 1 + g
  EXPECT_EQ(a->radical().column(0), Mat::fromRows(F2, {{1}, {1}}));
  EXPECT_EQ(a->idempotents().size(), 1u);
  // g -> 1 + x identifies F2[C2] with F2[x]/(x^2): (g - 1)^2 = 0
  Mat x = a->radical().column(0);
  EXPECT_TRUE(a->multiply(x, x).isZero());
  expectRadicalInvariants(*a);
}

TEST(GroupAlgebra, S3OverF7IsSemisimpleAndSplits) {
  auto a = groupAlgebra(symmetricGroup3Table(), F7);
  EXPECT_EQ(a->radical().cols(), 0u);
  EXPECT_EQ(genericRadical(*a).cols(), 0u);
  // 1 + 1 + 2*2 = 6: two linear characters, the 2-dim irrep appears twice
  EXPECT_EQ(a->idempotents().size(), 4u);
  EXPECT_EQ(a->classRepresentatives().size(), 3u);
  EXPECT_NO_THROW(a->requireSplitBasicData());
}

TEST(GroupAlgebra, S3OverF2AndF3MatchGenericRadical) {
  for (const Field& f : {F2, F3}) {
    auto a = groupAlgebra(symmetricGroup3Table(), f);
    EXPECT_NO_THROW(verifyRadical(*a));
    EXPECT_NO_THROW(a->requireSplitBasicData());
  }
  EXPECT_EQ(genericRadical(*groupAlgebra(symmetricGroup3Table(), F3)).cols(), 4u);
  EXPECT_EQ(genericRadical(*groupAlgebra(cyclicGroupTable(3), F3)).cols(), 2u);
  EXPECT_EQ(genericRadical(*groupAlgebra(cyclicGroupTable(4), F2)).cols(), 3u);
}

TEST(TruncatedExtension, DimensionsAndRadical) {
  auto a2 = pathAlgebra(a2Quiver(), F2);
  auto t1 = truncatedExtension(a2, 1);
  EXPECT_EQ(t1.total->dim(), 3u);
  EXPECT_EQ(t1.embedding.rank(), 3u);
  auto t2 = truncatedExtension(a2, 2);
  EXPECT_EQ(t2.total->dim(), 6u);
  EXPECT_EQ(t2.total->radical().cols(), 4u);
  expectRadicalInvariants(*t2.total);
  auto k3 = truncatedExtension(fieldAlgebra(F2), 3);
  EXPECT_EQ(radicalNilpotencyIndex(*k3.total), 3u);
  expectRadicalInvariants(*k3.total);
}

TEST(DerivedAlgebras, OppositeMatrixProductTensor) {
  auto dual = pathAlgebra(loopSquared(), F2);
  auto op = oppositeAlgebra(dual);
  EXPECT_EQ(op->leftMuls(), dual->leftMuls());

  auto a2 = pathAlgebra(a2Quiver(), F2);
  auto a2op = oppositeAlgebra(a2);
  // in A2^op, P(2) is the two-dimensional projective
  EXPECT_EQ(a2op->leftIdealBasis(0).cols(), 1u);
  EXPECT_EQ(a2op->leftIdealBasis(1).cols(), 2u);
  expectRadicalInvariants(*a2op);

  auto prod = productAlgebra(fieldAlgebra(F2), a2);
  EXPECT_EQ(prod->dim(), 4u);
  EXPECT_EQ(prod->centralIdempotents().size(), 2u);
  EXPECT_EQ(prod->idempotents().size(), 3u);
  expectRadicalInvariants(*prod);

  auto m2 = matrixAlgebra(dual, 2);
  EXPECT_EQ(m2->dim(), 8u);
  EXPECT_EQ(m2->idempotents().size(), 2u);
  EXPECT_EQ(m2->classRepresentatives().size(), 1u);
  expectRadicalInvariants(*m2);

  auto env = tensorAlgebra(a2, a2op);
  EXPECT_EQ(env->dim(), 9u);
  EXPECT_EQ(env->classRepresentatives().size(), 4u);
  expectRadicalInvariants(*env);
}

TEST(Algebra, RejectsNonAssociativeTable) {
  AlgebraData d;
  d.field = F2;
  d.labels = {"1", "x"};
  d.leftMul = {Mat::identity(F2, 2), Mat::fromRows(F2, {{0, 1}, {1, 0}})};
  d.unit = Mat::unitVector(F2, 2, 0);
  EXPECT_NO_THROW(Algebra::make(d));
  d.unit = Mat::unitVector(F2, 2, 1);
  EXPECT_THROW(Algebra::make(d), InvalidAlgebra);
  d.unit = Mat::unitVector(F2, 2, 0);
  d.idempotents = std::vector<Mat>{Mat::unitVector(F2, 2, 1)};
  EXPECT_THROW(Algebra::make(d), InvalidAlgebra);
}

TEST(Algebra, GeneratorsGenerate) {
  auto a = pathAlgebra({3, {{0, 1, "a"}, {1, 2, "b"}}, {}}, QQ);
  EXPECT_EQ(a->dim(), 6u);
  // e1, e2, e3 span needs two vertices plus both arrows (1 is given)
  EXPECT_LE(a->generators().size(), 4u);
}
