#include "gorwb/exactlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace gorwb {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t characteristic) : p_(characteristic) {
  if (p_ != 0 && (p_ >= (1u << 31) || !isPrime(p_)))
    throw InputShapeError("field characteristic must be 0 or a prime below 2^31, got " +
                          std::to_string(p_));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

namespace {

std::uint32_t powMod(std::uint64_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

struct FpOps {
  using T = std::uint32_t;
  std::uint32_t p;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool isZero(T a) const { return a == 0; }
  T add(T a, T b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T mul(T a, T b) const { return static_cast<T>(std::uint64_t{a} * b % p); }
  T neg(T a) const { return a ? p - a : 0; }
  T inv(T a) const { return powMod(a, p - 2, p); }
  // dst[k] -= f * src[k]
  void axpy(T* dst, const T* src, T f, std::size_t n) const {
    const std::uint64_t g = p - f;
    for (std::size_t k = 0; k < n; ++k)
      if (src[k]) dst[k] = static_cast<T>((dst[k] + g * src[k]) % p);
  }
  void scale(T* row, T f, std::size_t n) const {
    for (std::size_t k = 0; k < n; ++k) row[k] = mul(row[k], f);
  }
};

struct QOps {
  using T = mpq_class;

  T zero() const { return T(0); }
  T one() const { return T(1); }
  bool isZero(const T& a) const { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const { return T(1) / a; }
  void axpy(T* dst, const T* src, const T& f, std::size_t n) const {
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(src[k]) != 0) dst[k] -= f * src[k];
  }
  void scale(T* row, const T& f, std::size_t n) const {
    for (std::size_t k = 0; k < n; ++k) row[k] *= f;
  }
};

void requireSameField(const Mat& a, const Mat& b, const char* what) {
  if (!(a.field() == b.field()))
    throw InputShapeError(std::string(what) + ": field mismatch " + a.field().name() + " vs " +
                          b.field().name());
}

}  // namespace

template <class Fn>
decltype(auto) withOps(const Mat& m, Fn&& fn) {
  if (m.field_.isRational()) return fn(QOps{}, m.q_);
  return fn(FpOps{m.field_.characteristic()}, m.fp_);
}

template <class Fn>
decltype(auto) withOpsMut(Mat& m, Fn&& fn) {
  if (m.field_.isRational()) return fn(QOps{}, m.q_);
  return fn(FpOps{m.field_.characteristic()}, m.fp_);
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const Field& f, long value) : field_(f) {
  if (f.isRational()) {
    v_ = mpq_class(value);
  } else {
    long p = f.characteristic();
    long r = value % p;
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
  }
}

Scalar::Scalar(const Field& f, const mpq_class& value) : field_(f) {
  if (f.isRational()) {
    mpq_class q = value;
    q.canonicalize();
    v_ = q;
    return;
  }
  const std::uint32_t p = f.characteristic();
  mpz_class num = value.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = value.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw InputShapeError("denominator vanishes in " + f.name());
  auto n = static_cast<std::uint32_t>(num.get_ui());
  auto d = static_cast<std::uint32_t>(den.get_ui());
  FpOps ops{p};
  v_ = ops.mul(n, ops.inv(d));
}

Scalar Scalar::residue(std::uint32_t p, std::uint32_t r) {
  Scalar s;
  s.field_ = Field(p);
  s.v_ = static_cast<std::uint32_t>(r % p);
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t') t.push_back(c);
  if (t.empty()) throw ParseError("empty scalar");
  auto validInt = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = t.find('/');
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!validInt(num) || !validInt(den)) throw ParseError("malformed scalar '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  try {
    return Scalar(f, mpq_class(n, d));
  } catch (const InputShapeError& e) {
    throw ParseError(std::string(e.what()) + " in '" + text + "'");
  }
}

bool Scalar::isZero() const {
  if (field_.isRational()) return sgn(std::get<mpq_class>(v_)) == 0;
  return std::get<std::uint32_t>(v_) == 0;
}

bool Scalar::isOne() const {
  if (field_.isRational()) return std::get<mpq_class>(v_) == 1;
  return std::get<std::uint32_t>(v_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (field_.isRational()) throw InputShapeError("residue() on a rational scalar");
  return std::get<std::uint32_t>(v_);
}

mpq_class Scalar::rational() const {
  if (field_.isRational()) return std::get<mpq_class>(v_);
  return mpq_class(std::get<std::uint32_t>(v_));
}

Scalar Scalar::inverse() const {
  if (isZero()) throw InputShapeError("inverse of zero");
  Scalar r;
  r.field_ = field_;
  if (field_.isRational())
    r.v_ = mpq_class(1) / std::get<mpq_class>(v_);
  else
    r.v_ = FpOps{field_.characteristic()}.inv(std::get<std::uint32_t>(v_));
  return r;
}

std::string Scalar::toString() const {
  if (field_.isRational()) return std::get<mpq_class>(v_).get_str();
  return std::to_string(std::get<std::uint32_t>(v_));
}

namespace {
template <class Op>
Scalar binary(const Scalar& a, const Scalar& b, Op op) {
  if (!(a.field() == b.field())) throw InputShapeError("scalar field mismatch");
  if (a.field().isRational()) return Scalar(a.field(), op(QOps{}, a.rational(), b.rational()));
  FpOps ops{a.field().characteristic()};
  return Scalar::residue(ops.p, op(ops, a.residue(), b.residue()));
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](auto ops, const auto& x, const auto& y) { return ops.add(x, y); });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](auto ops, const auto& x, const auto& y) { return ops.sub(x, y); });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](auto ops, const auto& x, const auto& y) { return ops.mul(x, y); });
}
Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
Scalar Scalar::operator-() const { return Scalar(field_, 0) - *this; }
bool operator==(const Scalar& a, const Scalar& b) {
  return a.field() == b.field() && a.v_ == b.v_;
}

// ---------------------------------------------------------------- Mat basics

Mat::Mat(const Field& f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {
  if (f.isRational())
    q_.assign(rows * cols, mpq_class(0));
  else
    fp_.assign(rows * cols, 0);
}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::fromRows(const Field& f, const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  Mat m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw InputShapeError("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::fromScalars(const Field& f, std::size_t rows, std::size_t cols,
                     const std::vector<Scalar>& rowMajor) {
  if (rowMajor.size() != rows * cols) throw InputShapeError("entry count != rows*cols");
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rowMajor[i * cols + j]);
  return m;
}

Mat Mat::unitVector(const Field& f, std::size_t n, std::size_t i) {
  Mat m(f, n, 1);
  m.set(i, 0, 1);
  return m;
}

Scalar Mat::at(std::size_t i, std::size_t j) const {
  if (field_.isRational()) return Scalar(field_, q_[i * cols_ + j]);
  return Scalar::residue(field_.characteristic(), fp_[i * cols_ + j]);
}

void Mat::set(std::size_t i, std::size_t j, const Scalar& s) {
  if (!(s.field() == field_)) throw InputShapeError("scalar field mismatch in set");
  if (field_.isRational())
    q_[i * cols_ + j] = s.rational();
  else
    fp_[i * cols_ + j] = s.residue();
}

void Mat::set(std::size_t i, std::size_t j, long value) { set(i, j, Scalar(field_, value)); }

void Mat::addScaled(std::size_t i, std::size_t j, const Scalar& s) {
  if (field_.isRational())
    q_[i * cols_ + j] += s.rational();
  else
    fp_[i * cols_ + j] = FpOps{field_.characteristic()}.add(fp_[i * cols_ + j], s.residue());
}

bool Mat::isZero() const {
  return withOps(*this, [](auto ops, const auto& d) {
    return std::all_of(d.begin(), d.end(), [&](const auto& x) { return ops.isZero(x); });
  });
}

bool Mat::isIdentity() const {
  if (rows_ != cols_) return false;
  return *this == identity(field_, rows_);
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  auto copy = [&](auto& dst, const auto& src) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) dst[j * rows_ + i] = src[i * cols_ + j];
  };
  if (field_.isRational())
    copy(t.q_, this->q_);
  else
    copy(t.fp_, this->fp_);
  return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InputShapeError("block out of range");
  Mat b(field_, nr, nc);
  auto copy = [&](auto& dst, const auto& src) {
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) dst[i * nc + j] = src[(r0 + i) * cols_ + c0 + j];
  };
  if (field_.isRational())
    copy(b.q_, this->q_);
  else
    copy(b.fp_, this->fp_);
  return b;
}

void Mat::setBlock(std::size_t r0, std::size_t c0, const Mat& b) {
  requireSameField(*this, b, "setBlock");
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw InputShapeError("setBlock out of range");
  auto copy = [&](auto& dst, const auto& src) {
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) dst[(r0 + i) * cols_ + c0 + j] = src[i * b.cols_ + j];
  };
  if (field_.isRational())
    copy(q_, b.q_);
  else
    copy(fp_, b.fp_);
}

Mat Mat::columns(const std::vector<std::size_t>& idx) const {
  Mat r(field_, rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) r.setBlock(0, k, column(idx[k]));
  return r;
}

Mat Mat::rowsOf(const std::vector<std::size_t>& idx) const {
  Mat r(field_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k) r.setBlock(k, 0, block(idx[k], 0, 1, cols_));
  return r;
}

Mat Mat::vec() const {
  Mat v(field_, rows_ * cols_, 1);
  auto copy = [&](auto& dst, const auto& src) {
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) dst[j * rows_ + i] = src[i * cols_ + j];
  };
  if (field_.isRational())
    copy(v.q_, this->q_);
  else
    copy(v.fp_, this->fp_);
  return v;
}

Mat Mat::unvec(const Mat& v, std::size_t rows, std::size_t cols) {
  if (v.rows_ != rows * cols || v.cols_ != 1) throw InputShapeError("unvec shape");
  Mat m(v.field_, rows, cols);
  auto copy = [&](auto& dst, const auto& src) {
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i) dst[i * cols + j] = src[j * rows + i];
  };
  if (v.field_.isRational())
    copy(m.q_, v.q_);
  else
    copy(m.fp_, v.fp_);
  return m;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat r = *this;
  if (field_.isRational()) {
    auto q = s.rational();
    for (auto& x : r.q_) x *= q;
  } else {
    FpOps ops{field_.characteristic()};
    r.fp_.assign(fp_.begin(), fp_.end());
    ops.scale(r.fp_.data(), s.residue(), r.fp_.size());
  }
  return r;
}

Mat operator+(const Mat& a, const Mat& b) {
  requireSameField(a, b, "+");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputShapeError("+ shape mismatch");
  Mat r = a;
  withOpsMut(r, [&](auto ops, auto& dst) {
    withOps(b, [&](auto, const auto& src) {
      if constexpr (std::is_same_v<std::decay_t<decltype(dst)>, std::decay_t<decltype(src)>>)
        for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = ops.add(dst[k], src[k]);
    });
  });
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  withOpsMut(r, [](auto ops, auto& d) {
    for (auto& x : d) x = ops.neg(x);
  });
  return r;
}

Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

Mat operator*(const Mat& a, const Mat& b) {
  requireSameField(a, b, "*");
  if (a.cols_ != b.rows_)
    throw InputShapeError("* shape mismatch " + std::to_string(a.rows_) + "x" +
                          std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                          std::to_string(b.cols_));
  Mat c(a.field_, a.rows_, b.cols_);
  const std::size_t n = a.rows_, m = a.cols_, k = b.cols_;
  if (a.field_.isRational()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < m; ++l) {
        const auto& x = a.q_[i * m + l];
        if (sgn(x) == 0) continue;
        for (std::size_t j = 0; j < k; ++j)
          if (sgn(b.q_[l * k + j]) != 0) c.q_[i * k + j] += x * b.q_[l * k + j];
      }
    return c;
  }
  const std::uint64_t p = a.field_.characteristic();
  std::vector<std::uint64_t> acc(k);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    unsigned pending = 0;
    for (std::size_t l = 0; l < m; ++l) {
      const std::uint64_t x = a.fp_[i * m + l];
      if (!x) continue;
      const std::uint32_t* brow = &b.fp_[l * k];
      for (std::size_t j = 0; j < k; ++j) acc[j] += x * brow[j];
      // each term < 2^62; reduce before the sum can overflow
      if (++pending == 3) {
        for (auto& v : acc) v %= p;
        pending = 0;
      }
    }
    for (std::size_t j = 0; j < k; ++j) c.fp_[i * k + j] = static_cast<std::uint32_t>(acc[j] % p);
  }
  return c;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.fp_ == b.fp_ &&
         a.q_ == b.q_;
}

Mat hcat(const Mat& a, const Mat& b) {
  requireSameField(a, b, "hcat");
  if (a.rows_ != b.rows_) throw InputShapeError("hcat row mismatch");
  Mat r(a.field_, a.rows_, a.cols_ + b.cols_);
  r.setBlock(0, 0, a);
  r.setBlock(0, a.cols_, b);
  return r;
}

Mat vcat(const Mat& a, const Mat& b) {
  requireSameField(a, b, "vcat");
  if (a.cols_ != b.cols_) throw InputShapeError("vcat column mismatch");
  Mat r(a.field_, a.rows_ + b.rows_, a.cols_);
  r.setBlock(0, 0, a);
  r.setBlock(a.rows_, 0, b);
  return r;
}

Mat hcat(const Field& f, std::size_t rows, const std::vector<Mat>& parts) {
  std::size_t c = 0;
  for (const auto& p : parts) c += p.cols();
  Mat r(f, rows, c);
  std::size_t off = 0;
  for (const auto& p : parts) {
    r.setBlock(0, off, p);
    off += p.cols();
  }
  return r;
}

Mat vcat(const Field& f, std::size_t cols, const std::vector<Mat>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.rows();
  Mat r(f, n, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    r.setBlock(off, 0, p);
    off += p.rows();
  }
  return r;
}

Mat directSum(const Mat& a, const Mat& b) {
  requireSameField(a, b, "directSum");
  Mat r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  r.setBlock(0, 0, a);
  r.setBlock(a.rows_, a.cols_, b);
  return r;
}

Mat kron(const Mat& a, const Mat& b) {
  requireSameField(a, b, "kron");
  Mat r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      Scalar s = a.at(i, j);
      if (!s.isZero()) r.setBlock(i * b.rows_, j * b.cols_, b.scaled(s));
    }
  return r;
}

// ---------------------------------------------------------------- elimination

namespace {

// In-place reduced row echelon form of a row-major buffer. Pivots are chosen
// only among the first `pivotLimit` columns, first nonzero entry top-down.
template <class Ops, class Vec>
std::vector<std::size_t> rrefInPlace(const Ops& ops, Vec& d, std::size_t rows, std::size_t cols,
                                     std::size_t pivotLimit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivotLimit && row < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t i = row; i < rows; ++i)
      if (!ops.isZero(d[i * cols + col])) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != row)
      for (std::size_t j = col; j < cols; ++j) std::swap(d[piv * cols + j], d[row * cols + j]);
    auto inv = ops.inv(d[row * cols + col]);
    ops.scale(&d[row * cols + col], inv, cols - col);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row) continue;
      auto f = d[i * cols + col];
      if (ops.isZero(f)) continue;
      ops.axpy(&d[i * cols + col], &d[row * cols + col], f, cols - col);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RrefResult Mat::rref() const {
  RrefResult r;
  r.reduced = *this;
  r.pivots = withOpsMut(r.reduced, [&](auto ops, auto& d) {
    return rrefInPlace(ops, d, rows_, cols_, cols_);
  });
  r.rank = r.pivots.size();
  return r;
}

std::size_t Mat::rank() const {
  // eliminate on the smaller orientation
  if (rows_ > cols_) return transpose().rref().rank;
  return rref().rank;
}

Mat Mat::kernel() const {
  auto r = rref();
  std::vector<bool> isPivot(cols_, false);
  for (auto c : r.pivots) isPivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!isPivot[c]) free.push_back(c);
  Mat k(field_, cols_, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k.set(free[f], f, 1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      k.set(r.pivots[i], f, -r.reduced.at(i, free[f]));
  }
  return k;
}

Mat Mat::columnSpace() const { return columns(rref().pivots); }

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Mat aug = hcat(*this, identity(field_, rows_));
  auto pivots = withOpsMut(aug, [&](auto ops, auto& d) {
    return rrefInPlace(ops, d, rows_, 2 * cols_, cols_);
  });
  if (pivots.size() != rows_) return std::nullopt;
  return aug.block(0, cols_, rows_, cols_);
}

std::string Mat::toString() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).toString();
  }
  os << "]";
  return os.str();
}

bool SolveResult::allConsistent() const {
  return std::all_of(consistent.begin(), consistent.end(), [](bool b) { return b; });
}

SolveResult solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows())
    throw InputShapeError("solve: a has " + std::to_string(a.rows()) + " rows, b has " +
                          std::to_string(b.rows()));
  requireSameField(a, b, "solve");
  const std::size_t n = a.cols(), m = b.cols(), rows = a.rows();
  Mat aug = hcat(a, b);
  auto pivots = withOpsMut(aug, [&](auto ops, auto& d) {
    return rrefInPlace(ops, d, rows, n + m, n);
  });
  SolveResult res;
  res.consistent.assign(m, true);
  res.particular = Mat(a.field(), n, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = pivots.size(); i < rows; ++i)
      if (!aug.at(i, n + j).isZero()) {
        res.consistent[j] = false;
        break;
      }
    if (!res.consistent[j]) continue;
    for (std::size_t i = 0; i < pivots.size(); ++i) res.particular.set(pivots[i], j, aug.at(i, n + j));
  }
  // kernel from the reduced left block
  std::vector<bool> isPivot(n, false);
  for (auto c : pivots) isPivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!isPivot[c]) free.push_back(c);
  res.kernelBasis = Mat(a.field(), n, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    res.kernelBasis.set(free[f], f, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      res.kernelBasis.set(pivots[i], f, -aug.at(i, free[f]));
  }
  return res;
}

std::optional<Mat> solveExact(const Mat& a, const Mat& b) {
  auto r = solve(a, b);
  if (!r.allConsistent()) return std::nullopt;
  return std::move(r.particular);
}

Mat coordinates(const Mat& basis, const Mat& vectors) {
  auto x = solveExact(basis, vectors);
  if (!x) throw VerificationFailure("coordinates: vector outside the span of the basis");
  return *x;
}

Mat extendBasis(const Mat& sub, const Mat& candidates) {
  requireSameField(sub, candidates, "extendBasis");
  auto r = hcat(sub, candidates).rref();
  std::vector<std::size_t> pick;
  for (auto c : r.pivots)
    if (c >= sub.cols()) pick.push_back(c - sub.cols());
  return candidates.columns(pick);
}

Mat intersectSpans(const Mat& a, const Mat& b) {
  if (a.cols() == 0 || b.cols() == 0) return Mat(a.field(), a.rows(), 0);
  Mat k = hcat(a, -b).kernel();
  Mat v = a * k.block(0, 0, a.cols(), k.cols());
  return v.columnSpace();
}

bool inSpan(const Mat& basis, const Mat& vectors) {
  if (vectors.cols() == 0) return true;
  if (basis.cols() == 0) return vectors.isZero();
  return hcat(basis, vectors).rank() == basis.rank();
}

}  // namespace gorwb
