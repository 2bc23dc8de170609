#pragma once

// Independent reference computations used to cross-check the elimination
// routines. Nothing here calls rref, rank or solve from exactlin.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "gorwb/exactlin.hpp"

namespace gorwb::oracle {

/// Rank by division-free (Bareiss-style) elimination. Over Q the rows are
/// first scaled to integers; over F_p rows are combined by cross
/// multiplication, never dividing.
inline std::size_t fractionFreeRank(const Mat& m) {
  const std::size_t r = m.rows(), c = m.cols();
  if (m.field().isRational()) {
    std::vector<std::vector<mpz_class>> a(r, std::vector<mpz_class>(c));
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class l = 1;
      for (std::size_t j = 0; j < c; ++j) l = lcm(l, m.at(i, j).rational().get_den());
      for (std::size_t j = 0; j < c; ++j) {
        mpq_class q = m.at(i, j).rational() * l;
        a[i][j] = q.get_num();
      }
    }
    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < c && rank < r; ++col) {
      std::size_t piv = rank;
      while (piv < r && a[piv][col] == 0) ++piv;
      if (piv == r) continue;
      std::swap(a[piv], a[rank]);
      for (std::size_t i = rank + 1; i < r; ++i) {
        for (std::size_t j = col + 1; j < c; ++j) {
          mpz_class v = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
          mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
          a[i][j] = v;
        }
        a[i][col] = 0;
      }
      prev = a[rank][col];
      ++rank;
    }
    return rank;
  }
  const std::uint64_t p = m.field().characteristic();
  std::vector<std::vector<std::uint64_t>> a(r, std::vector<std::uint64_t>(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a[i][j] = m.at(i, j).residue();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t piv = rank;
    while (piv < r && a[piv][col] == 0) ++piv;
    if (piv == r) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < r; ++i) {
      std::uint64_t f = a[i][col], g = a[rank][col];
      for (std::size_t j = col; j < c; ++j) a[i][j] = (g * a[i][j] % p + (p - f) * a[rank][j] % p) % p;
    }
    ++rank;
  }
  return rank;
}

/// a*x = b is solvable iff rank a = rank [a | b].
inline bool fractionFreeConsistent(const Mat& a, const Mat& b) {
  return fractionFreeRank(a) == fractionFreeRank(hcat(a, b));
}

inline Mat randomMat(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int density = 100) {
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (static_cast<int>(rng() % 100) >= density) continue;
      if (f.isRational()) {
        long num = static_cast<long>(rng() % 19) - 9;
        long den = static_cast<long>(rng() % 4) + 1;
        m.set(i, j, Scalar(f, mpq_class(num, den)));
      } else {
        m.set(i, j, static_cast<long>(rng() % f.characteristic()));
      }
    }
  return m;
}

}  // namespace gorwb::oracle
