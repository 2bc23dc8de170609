#include <gtest/gtest.h>

#include <random>

#include "gorwb/exactlin.hpp"
#include "oracles.hpp"

using namespace gorwb;

namespace {

const Field F2(2);
const Field F101(101);
const Field QQ = Field::rationals();

}  // namespace

TEST(Field, RejectsNonPrimes) {
  EXPECT_THROW(Field(4), InputShapeError);
  EXPECT_THROW(Field(1), InputShapeError);
  EXPECT_NO_THROW(Field(7));
  EXPECT_EQ(Field(0).name(), "Q");
}

TEST(Scalar, ParseAndCanonicalForm) {
  EXPECT_EQ(Scalar::parse(QQ, " 6/4 ").toString(), "3/2");
  EXPECT_EQ(Scalar::parse(QQ, "-4/2").toString(), "-2");
  EXPECT_EQ(Scalar::parse(Field(7), "-1").residue(), 6u);
  EXPECT_EQ(Scalar::parse(Field(7), "1/2").residue(), 4u);
  EXPECT_THROW(Scalar::parse(QQ, "1/0"), ParseError);
  EXPECT_THROW(Scalar::parse(Field(7), "1/7"), ParseError);
  EXPECT_THROW(Scalar::parse(QQ, "x"), ParseError);
}

TEST(Rref, IdentityAndDuplicateRows) {
  auto id = Mat::identity(F2, 2).rref();
  EXPECT_EQ(id.rank, 2u);
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1}));
  auto dup = Mat::fromRows(F2, {{1, 1}, {1, 1}}).rref();
  EXPECT_EQ(dup.rank, 1u);
  EXPECT_EQ(dup.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, MatchesFractionFreeOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    for (const Field& f : {F101, QQ, F2}) {
      Mat m = oracle::randomMat(f, 5, 7, rng, trial % 2 ? 40 : 100);
      auto r = m.rref();
      EXPECT_EQ(r.rank, oracle::fractionFreeRank(m));
      EXPECT_EQ(r.rank, r.pivots.size());
      EXPECT_EQ(r.reduced.rref().reduced, r.reduced) << "rref must be idempotent";
    }
  }
}

TEST(Solve, IdentitySystem) {
  Mat b = Mat::fromRows(F101, {{3, 4}, {5, 6}});
  auto s = solve(Mat::identity(F101, 2), b);
  EXPECT_TRUE(s.allConsistent());
  EXPECT_EQ(s.particular, b);
  EXPECT_EQ(s.kernelBasis.cols(), 0u);
}

TEST(Solve, InconsistencyFlaggedPerColumn) {
  Mat a = Mat::fromRows(QQ, {{1, 0}, {0, 0}});
  Mat b = Mat::fromRows(QQ, {{1, 1}, {0, 1}});
  auto s = solve(a, b);
  ASSERT_EQ(s.consistent.size(), 2u);
  EXPECT_TRUE(s.consistent[0]);
  EXPECT_FALSE(s.consistent[1]);
  EXPECT_FALSE(solveExact(a, b).has_value());
  EXPECT_THROW(solve(a, Mat(QQ, 3, 1)), InputShapeError);
}

TEST(Solve, RandomSystemsSatisfyContract) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Field& f = trial % 3 == 0 ? QQ : (trial % 3 == 1 ? F101 : F2);
    Mat a = oracle::randomMat(f, 4 + trial % 3, 6, rng, 60);
    Mat b = oracle::randomMat(f, a.rows(), 2, rng);
    auto s = solve(a, b);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      EXPECT_EQ(s.consistent[j], oracle::fractionFreeConsistent(a, b.column(j)));
      if (s.consistent[j]) EXPECT_EQ(a * s.particular.column(j), b.column(j));
    }
    EXPECT_TRUE((a * s.kernelBasis).isZero());
    EXPECT_EQ(s.kernelBasis.cols(), a.cols() - oracle::fractionFreeRank(a));
  }
}

TEST(Mat, RationalsStayReduced) {
  Mat m = Mat::fromScalars(QQ, 1, 2, {Scalar::parse(QQ, "2/6"), Scalar::parse(QQ, "3/9")});
  Mat s = m + m;
  EXPECT_EQ(s.at(0, 0).toString(), "2/3");
  mpq_class q = s.at(0, 1).rational();
  EXPECT_EQ(gcd(q.get_num(), q.get_den()), 1);
}

TEST(Mat, InverseKronAndSpans) {
  Mat a = Mat::fromRows(QQ, {{2, 1}, {1, 1}});
  auto inv = a.inverse();
  ASSERT_TRUE(inv);
  EXPECT_TRUE((a * *inv).isIdentity());
  EXPECT_FALSE(Mat::fromRows(F2, {{1, 1}, {1, 1}}).inverse());
  Mat k = kron(Mat::identity(F2, 2), Mat::fromRows(F2, {{0, 1}, {0, 0}}));
  EXPECT_EQ(k.rank(), 2u);
  Mat u = Mat::fromRows(F101, {{1, 0}, {0, 1}, {0, 0}});
  Mat v = Mat::fromRows(F101, {{1, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(intersectSpans(u, v).cols(), 1u);
  EXPECT_TRUE(inSpan(u, Mat::fromRows(F101, {{4}, {5}, {0}})));
  EXPECT_FALSE(inSpan(u, Mat::fromRows(F101, {{0}, {0}, {1}})));
  EXPECT_THROW(coordinates(u, Mat::fromRows(F101, {{0}, {0}, {1}})), VerificationFailure);
}
