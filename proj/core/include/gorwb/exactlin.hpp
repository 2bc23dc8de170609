#pragma once

// Exact dense linear algebra over prime fields F_p and the rationals.
//
// Vectors are columns. A matrix with `rows` x `cols` maps a cols-dimensional
// space into a rows-dimensional one, so f(v) = M * v.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gorwb/errors.hpp"

namespace gorwb {

/// The base field: characteristic 0 means Q, otherwise F_p with p prime.
class Field {
 public:
  Field() = default;
  /// Throws InputShapeError unless p is 0 or a prime below 2^31.
  explicit Field(std::uint32_t characteristic);

  static Field rationals() { return Field(0); }

  std::uint32_t characteristic() const { return p_; }
  bool isRational() const { return p_ == 0; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t p_ = 2;
};

bool isPrime(std::uint64_t n);

class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& f, long value);
  Scalar(const Field& f, const mpq_class& value);

  static Scalar parse(const Field& f, const std::string& text);
  static Scalar residue(std::uint32_t p, std::uint32_t r);

  const Field& field() const { return field_; }
  bool isZero() const;
  bool isOne() const;

  /// Residue in [0, p) for F_p scalars.
  std::uint32_t residue() const;
  /// Value as a rational; F_p residues are returned as their integer rep.
  mpq_class rational() const;

  Scalar inverse() const;
  std::string toString() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Field field_;
  std::variant<std::uint32_t, mpq_class> v_{std::uint32_t{0}};
};

class Mat;

struct RrefResult;
struct SolveResult;

class Mat {
 public:
  Mat() = default;
  Mat(const Field& f, std::size_t rows, std::size_t cols);

  static Mat identity(const Field& f, std::size_t n);
  static Mat fromRows(const Field& f, const std::vector<std::vector<long>>& rows);
  static Mat fromScalars(const Field& f, std::size_t rows, std::size_t cols,
                         const std::vector<Scalar>& rowMajor);
  /// Column vector with a single 1 at position i.
  static Mat unitVector(const Field& f, std::size_t n, std::size_t i);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& s);
  void set(std::size_t i, std::size_t j, long value);
  /// this(i, j) += s * other(k, l), used by assembly loops.
  void addScaled(std::size_t i, std::size_t j, const Scalar& s);

  bool isZero() const;
  bool isIdentity() const;
  bool isSquare() const { return rows_ == cols_; }

  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void setBlock(std::size_t r0, std::size_t c0, const Mat& b);
  Mat column(std::size_t j) const { return block(0, j, rows_, 1); }
  Mat columns(const std::vector<std::size_t>& idx) const;
  Mat rowsOf(const std::vector<std::size_t>& idx) const;
  /// Flatten column-major into a single column.
  Mat vec() const;
  static Mat unvec(const Mat& v, std::size_t rows, std::size_t cols);

  Mat scaled(const Scalar& s) const;

  RrefResult rref() const;
  std::size_t rank() const;
  /// Columns form a basis of the null space.
  Mat kernel() const;
  /// Pivot columns of this matrix: a basis of the column space drawn from it.
  Mat columnSpace() const;
  std::optional<Mat> inverse() const;

  std::string toString() const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  Mat operator-() const;
  friend bool operator==(const Mat& a, const Mat& b);

  friend Mat hcat(const Mat& a, const Mat& b);
  friend Mat vcat(const Mat& a, const Mat& b);
  friend Mat directSum(const Mat& a, const Mat& b);
  friend Mat kron(const Mat& a, const Mat& b);

 private:
  template <class Fn>
  friend decltype(auto) withOps(const Mat& m, Fn&& fn);
  template <class Fn>
  friend decltype(auto) withOpsMut(Mat& m, Fn&& fn);

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> fp_;
  std::vector<mpq_class> q_;
};

Mat hcat(const Mat& a, const Mat& b);
Mat vcat(const Mat& a, const Mat& b);
Mat directSum(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);
Mat hcat(const Field& f, std::size_t rows, const std::vector<Mat>& parts);
Mat vcat(const Field& f, std::size_t cols, const std::vector<Mat>& parts);

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

struct SolveResult {
  /// One flag per column of b.
  std::vector<bool> consistent;
  /// a.cols x b.cols; columns for inconsistent right-hand sides are zero.
  Mat particular;
  Mat kernelBasis;

  bool allConsistent() const;
};

/// Solve a * x = b column by column. Throws InputShapeError if a.rows != b.rows.
SolveResult solve(const Mat& a, const Mat& b);

/// x with a * x = b, or nullopt if some column is inconsistent.
std::optional<Mat> solveExact(const Mat& a, const Mat& b);

/// Coordinates of `vectors` in the column basis `basis`. Throws if not in span.
Mat coordinates(const Mat& basis, const Mat& vectors);

/// Columns of `candidates` extending the independent columns of `sub` to a
/// basis of span(sub, candidates).
Mat extendBasis(const Mat& sub, const Mat& candidates);

/// Basis of the intersection of two column spans.
Mat intersectSpans(const Mat& a, const Mat& b);

/// True if every column of `vectors` lies in the span of `basis`.
bool inSpan(const Mat& basis, const Mat& vectors);

}  // namespace gorwb
