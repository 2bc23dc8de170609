#include "gorwb/algebra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace gorwb {

namespace {

Mat combine(const Field& f, const std::vector<Mat>& mats, const Mat& coeffs) {
  Mat r(f, mats.front().rows(), mats.front().cols());
  for (std::size_t i = 0; i < mats.size(); ++i) {
    Scalar c = coeffs.at(i, 0);
    if (!c.isZero()) r = r + mats[i].scaled(c);
  }
  return r;
}

}  // namespace

Algebra::Algebra(AlgebraData data) : data_(std::move(data)) { validate(); }

AlgebraPtr Algebra::make(AlgebraData data) { return std::make_shared<const Algebra>(std::move(data)); }

void Algebra::validate() const {
  const std::size_t n = dim();
  const Field& f = field();
  if (n == 0) throw InvalidAlgebra("algebra must have positive dimension");
  if (data_.leftMul.size() != n) throw InvalidAlgebra("structure table must have one entry per basis element");
  for (const auto& m : data_.leftMul)
    if (m.rows() != n || m.cols() != n || !(m.field() == f))
      throw InvalidAlgebra("structure table entries must be dim x dim over the algebra field");
  if (data_.unit.rows() != n || data_.unit.cols() != 1) throw InvalidAlgebra("unit must be a dim-vector");

  // unit law: 1*e_i = e_i and e_i*1 = e_i
  if (!combine(f, data_.leftMul, data_.unit).isIdentity())
    throw InvalidAlgebra("unit law fails: 1*e_i != e_i");
  for (std::size_t i = 0; i < n; ++i)
    if (!(data_.leftMul[i] * data_.unit == basisVector(i)))
      throw InvalidAlgebra("unit law fails: e_" + std::to_string(i) + "*1 != e_" + std::to_string(i));

  // associativity: L_{e_i e_j} = L_i L_j
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat lhs = combine(f, data_.leftMul, product(i, j));
      if (!(lhs == data_.leftMul[i] * data_.leftMul[j]))
        throw InvalidAlgebra("associativity fails for basis triple starting (" + std::to_string(i) +
                             ", " + std::to_string(j) + ")");
    }

  if (data_.idempotents) {
    const auto& es = *data_.idempotents;
    if (es.empty()) throw InvalidAlgebra("idempotent set must be nonempty");
    Mat sum(f, n, 1);
    for (std::size_t a = 0; a < es.size(); ++a) {
      if (es[a].rows() != n || es[a].cols() != 1) throw InvalidAlgebra("idempotent must be a dim-vector");
      if (es[a].isZero()) throw InvalidAlgebra("idempotent is zero");
      sum = sum + es[a];
      for (std::size_t b = 0; b < es.size(); ++b) {
        Mat prod = multiply(es[a], es[b]);
        if (a == b ? !(prod == es[a]) : !prod.isZero())
          throw InvalidAlgebra("idempotents are not orthogonal idempotents at pair (" +
                               std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
    if (!(sum == data_.unit)) throw InvalidAlgebra("idempotents do not sum to 1");
  }
}

const std::vector<Mat>& Algebra::idempotents() const {
  if (!data_.idempotents)
    throw UnsupportedAlgebra("no idempotent data for algebra (" + data_.provenance.kind + ")");
  return *data_.idempotents;
}

Mat Algebra::multiply(const Mat& x, const Mat& y) const { return leftMultiplication(x) * y; }

Mat Algebra::leftMultiplication(const Mat& x) const { return combine(field(), data_.leftMul, x); }

Mat Algebra::rightMultiplication(const Mat& x) const {
  Mat r(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) r.setBlock(0, j, data_.leftMul[j] * x);
  return r;
}

const Mat& Algebra::radical() const {
  std::call_once(radicalOnce_, [this] {
    radical_ = data_.radicalHint ? data_.radicalHint->columnSpace() : genericRadical(*this);
  });
  return radical_;
}

const std::vector<std::size_t>& Algebra::generators() const {
  std::call_once(generatorsOnce_, [this] {
    const std::size_t n = dim();
    auto closure = [&](const std::vector<std::size_t>& gens) {
      Mat span = data_.unit;
      for (;;) {
        Mat grown = span;
        for (auto g : gens) grown = hcat(grown, data_.leftMul[g] * span);
        grown = grown.columnSpace();
        if (grown.cols() == span.cols()) return span;
        span = grown;
      }
    };
    Mat span = closure({});
    for (std::size_t i = 0; i < n && span.cols() < n; ++i) {
      if (inSpan(span, basisVector(i))) continue;
      generators_.push_back(i);
      span = closure(generators_);
    }
  });
  return generators_;
}

void Algebra::computeStructure() const {
  std::call_once(structureOnce_, [this] {
    const auto& es = idempotents();
    const Mat& rad = radical();
    const std::size_t radRank = rad.cols();
    leftIdeals_.clear();
    for (const auto& e : es) leftIdeals_.push_back(rightMultiplication(e).columnSpace());
    const std::size_t m = es.size();
    classes_.assign(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      // End(top P(i)) = e_i A e_i / e_i rad e_i
      Mat corner = leftMultiplication(es[i]) * leftIdeals_[i];
      std::size_t cornerRank = corner.rank();
      std::size_t withRad = hcat(rad, corner).rank();
      if (withRad - radRank != 1 && split_) {
        split_ = false;
        splitDiagnostic_ = "idempotent " + std::to_string(i) + " has End(top) of dimension " +
                           std::to_string(withRad - radRank) +
                           (cornerRank == withRad - radRank ? "" : " (corner not local)");
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (classes_[i] != m) continue;
      classes_[i] = classReps_.size();
      for (std::size_t j = i + 1; j < m; ++j) {
        if (classes_[j] != m) continue;
        // A e_i ~ A e_j iff e_j A e_i is not inside the radical
        Mat corner = leftMultiplication(es[j]) * leftIdeals_[i];
        if (!inSpan(rad, corner)) classes_[j] = classReps_.size();
      }
      classReps_.push_back(i);
    }
  });
}

const Mat& Algebra::leftIdealBasis(std::size_t i) const {
  computeStructure();
  return leftIdeals_.at(i);
}

const std::vector<std::size_t>& Algebra::idempotentClasses() const {
  computeStructure();
  return classes_;
}

const std::vector<std::size_t>& Algebra::classRepresentatives() const {
  computeStructure();
  return classReps_;
}

void Algebra::requireSplitBasicData() const {
  computeStructure();
  if (!split_) throw UnsupportedAlgebra("non-split or non-primitive idempotent data: " + splitDiagnostic_);
}

AlgebraPtr Algebra::opposite() const {
  if (auto back = oppositeOf_.lock()) return back;
  std::call_once(oppositeOnce_, [this] {
    auto op = oppositeAlgebra(shared_from_this());
    op->oppositeOf_ = shared_from_this();
    opposite_ = op;
  });
  return opposite_;
}

bool Algebra::sameAs(const Algebra& other) const {
  if (this == &other) return true;
  return field() == other.field() && dim() == other.dim() && data_.unit == other.data_.unit &&
         data_.leftMul == other.data_.leftMul;
}

bool sameAlgebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && a->sameAs(*b));
}

std::string Algebra::summary() const {
  std::ostringstream os;
  os << provenance().kind << " algebra over " << field().name() << ", dim " << dim();
  if (!provenance().description.empty()) os << " [" << provenance().description << "]";
  return os.str();
}

// ---------------------------------------------------------------- radical

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::vector<u64> intMatMul(const std::vector<u64>& a, const std::vector<u64>& b, std::size_t n, u64 mod) {
  std::vector<u64> c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      u64 x = a[i * n + k];
      if (!x) continue;
      for (std::size_t j = 0; j < n; ++j)
        c[i * n + j] = static_cast<u64>((c[i * n + j] + static_cast<u128>(x) * b[k * n + j]) % mod);
    }
  return c;
}

// (Tr(lift(M)^(p^i)) / p^i) mod p, computed modulo p^(i+1).
std::uint32_t generalizedTrace(const Mat& m, std::uint32_t p, std::size_t i) {
  const std::size_t n = m.rows();
  u64 pi = 1;
  for (std::size_t k = 0; k < i; ++k) pi *= p;
  const u64 mod = pi * p;
  std::vector<u64> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m.at(r, c).residue() % mod;
  for (std::size_t k = 0; k < i; ++k) {
    // raise to the p-th power
    std::vector<u64> acc = a;
    for (std::uint32_t e = 1; e < p; ++e) acc = intMatMul(acc, a, n, mod);
    a = std::move(acc);
  }
  u64 tr = 0;
  for (std::size_t r = 0; r < n; ++r) tr = (tr + a[r * n + r]) % mod;
  if (tr % pi != 0) throw VerificationFailure("generalized trace not divisible by p^i");
  return static_cast<std::uint32_t>((tr / pi) % p);
}

}  // namespace

Mat genericRadical(const Algebra& a) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  if (f.isRational()) {
    Mat t(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Mat prod = a.leftMul(i) * a.leftMul(j);
        Scalar tr(f, 0);
        for (std::size_t k = 0; k < n; ++k) tr = tr + prod.at(k, k);
        t.set(i, j, tr);
      }
    return t.kernel();
  }
  const std::uint32_t p = f.characteristic();
  std::size_t levels = 0;
  for (u64 pw = p; pw <= n; pw *= p) ++levels;
  Mat space = Mat::identity(f, n);
  for (std::size_t i = 0; i <= levels && space.cols() > 0; ++i) {
    Mat g(f, n, space.cols());
    for (std::size_t k = 0; k < space.cols(); ++k) {
      Mat lv = a.leftMultiplication(space.column(k));
      for (std::size_t j = 0; j < n; ++j) {
        Mat lab = lv * a.leftMul(j);
        g.set(j, k, Scalar::residue(p, generalizedTrace(lab, p, i)));
      }
    }
    Mat ker = g.kernel();
    space = space * ker;
  }
  return space.columnSpace();
}

AlgebraPtr quotientByRadical(const Algebra& a) {
  const Field& f = a.field();
  const Mat& rad = a.radical();
  Mat comp = extendBasis(rad, Mat::identity(f, a.dim()));
  Mat basis = hcat(rad, comp);
  const std::size_t r = rad.cols(), q = comp.cols();
  AlgebraData d;
  d.field = f;
  for (std::size_t i = 0; i < q; ++i) d.labels.push_back("q" + std::to_string(i));
  for (std::size_t i = 0; i < q; ++i) {
    Mat lm(f, q, q);
    Mat li = a.leftMultiplication(comp.column(i));
    Mat coords = coordinates(basis, li * comp);
    lm = coords.block(r, 0, q, q);
    d.leftMul.push_back(lm);
  }
  d.unit = coordinates(basis, a.unit()).block(r, 0, q, 1);
  d.provenance = {"quotient", "A/rad A"};
  return Algebra::make(std::move(d));
}

std::size_t radicalNilpotencyIndex(const Algebra& a) {
  const Mat& rad = a.radical();
  Mat power = rad;
  std::size_t n = 1;
  while (power.cols() > 0) {
    if (n > a.dim() + 1) throw VerificationFailure("radical is not nilpotent");
    Mat next(a.field(), a.dim(), 0);
    for (std::size_t k = 0; k < rad.cols(); ++k) next = hcat(next, a.leftMultiplication(rad.column(k)) * power);
    power = next.columnSpace();
    ++n;
  }
  return n;
}

void verifyRadical(const Algebra& a) {
  const Mat& rad = a.radical();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!inSpan(rad, a.leftMul(i) * rad)) throw VerificationFailure("radical is not a left ideal");
    if (!inSpan(rad, a.rightMultiplication(a.basisVector(i)) * rad))
      throw VerificationFailure("radical is not a right ideal");
  }
  radicalNilpotencyIndex(a);
  if (rad.cols() < a.dim()) {
    auto quotient = quotientByRadical(a);
    if (genericRadical(*quotient).cols() != 0)
      throw VerificationFailure("A/rad A is not semisimple");
  }
  if (a.radicalHint()) {
    Mat generic = genericRadical(a);
    if (generic.cols() != rad.cols() || !inSpan(rad, generic))
      throw VerificationFailure("closed-form radical disagrees with the generic computation");
  }
}

// ---------------------------------------------------------------- idempotent splitting

namespace {

using Poly = std::vector<u64>;  // low degree first, coefficients mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 invMod(u64 a, u64 p) {
  u64 r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

Poly polyMul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

Poly polySub(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// a = q*b + r
std::pair<Poly, Poly> polyDivMod(Poly a, const Poly& b, u64 p) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  u64 lead = invMod(b.back(), p);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    u64 c = a[k] * lead % p;
    q[k - b.size() + 1] = c;
    if (c)
      for (std::size_t j = 0; j < b.size(); ++j)
        a[k - b.size() + 1 + j] = (a[k - b.size() + 1 + j] + p - c * b[j] % p) % p;
    if (k == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

// inverse of a modulo m (assumes gcd 1)
Poly polyInvMod(const Poly& a, const Poly& m, u64 p) {
  Poly r0 = m, r1 = polyDivMod(a, m, p).second;
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    auto [q, r] = polyDivMod(r0, r1, p);
    Poly s = polySub(s0, polyMul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw VerificationFailure("polynomial not invertible");
  u64 c = invMod(r0[0], p);
  for (auto& x : s0) x = x * c % p;
  return s0;
}

u64 evalPoly(const Poly& a, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t k = a.size(); k-- > 0;) r = (r * x + a[k]) % p;
  return r;
}

}  // namespace

std::vector<Mat> splitPrimitiveIdempotents(const Algebra& a, std::uint64_t seed) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const Mat& rad = a.radical();
  std::mt19937_64 rng(seed);
  std::vector<Mat> result;
  std::vector<Mat> stack{a.unit()};
  constexpr std::uint32_t kMaxBruteForcePrime = 1u << 20;

  while (!stack.empty()) {
    Mat e = stack.back();
    stack.pop_back();
    Mat corner = (a.leftMultiplication(e) * a.rightMultiplication(e)).columnSpace();
    std::size_t topDim = hcat(rad, corner).rank() - rad.cols();
    if (topDim == 1) {
      result.push_back(e);
      continue;
    }
    if (f.isRational())
      throw UnsupportedAlgebra("idempotent splitting over Q is not supported; supply idempotents");
    const u64 p = f.characteristic();
    if (p > kMaxBruteForcePrime)
      throw UnsupportedAlgebra("idempotent splitting needs root finding over " + f.name());
    bool split = false;
    for (int attempt = 0; attempt < 64 && !split; ++attempt) {
      Mat r(f, n, 1);
      for (std::size_t k = 0; k < n; ++k) r.set(k, 0, Scalar::residue(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(rng() % p)));
      Mat x = a.multiply(a.multiply(e, r), e);
      // minimal polynomial of x inside eAe, with e as the identity
      std::vector<Mat> powers{e};
      Poly minpoly;
      for (;;) {
        Mat next = a.multiply(x, powers.back());
        Mat span = hcat(f, n, powers);
        auto c = solveExact(span, next);
        if (c) {
          minpoly.assign(powers.size() + 1, 0);
          for (std::size_t k = 0; k < powers.size(); ++k) minpoly[k] = (p - c->at(k, 0).residue()) % p;
          minpoly[powers.size()] = 1;
          break;
        }
        powers.push_back(next);
      }
      std::vector<u64> roots;
      for (u64 v = 0; v < p; ++v)
        if (evalPoly(minpoly, v, p) == 0) roots.push_back(v);
      if (roots.size() < 2) continue;
      // split off the generalized eigenspace of the first root
      Poly q{1}, h = minpoly;
      Poly lin{(p - roots[0]) % p, 1};
      for (;;) {
        auto [quot, rem] = polyDivMod(h, lin, p);
        if (!rem.empty()) break;
        h = quot;
        q = polyMul(q, lin, p);
      }
      Poly u = polyDivMod(polyMul(h, polyInvMod(h, q, p), p), minpoly, p).second;
      Mat idem(f, n, 1);
      Mat pw = e;
      for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k]) idem = idem + pw.scaled(Scalar::residue(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(u[k])));
        pw = a.multiply(x, pw);
      }
      if (!(a.multiply(idem, idem) == idem) || idem.isZero() || idem == e)
        throw VerificationFailure("idempotent splitting produced a non-idempotent");
      stack.push_back(e - idem);
      stack.push_back(idem);
      split = true;
    }
    if (!split)
      throw UnsupportedAlgebra("could not split idempotent (non-split semisimple quotient?) over " + f.name());
  }
  return result;
}

// ---------------------------------------------------------------- constructors

AlgebraPtr fieldAlgebra(const Field& f) {
  AlgebraData d;
  d.field = f;
  d.labels = {"1"};
  d.leftMul = {Mat::identity(f, 1)};
  d.unit = Mat::identity(f, 1);
  d.idempotents = std::vector<Mat>{Mat::identity(f, 1)};
  d.radicalHint = Mat(f, 1, 0);
  d.provenance = {"field", f.name()};
  return Algebra::make(std::move(d));
}

namespace {

struct PathRec {
  std::size_t source = 0, target = 0;
  std::vector<std::size_t> arrows;  // traversal order; empty for a vertex
};

}  // namespace

AlgebraPtr pathAlgebra(const Quiver& q, const Field& f, std::size_t maxPathLength) {
  const std::size_t nv = q.vertexCount;
  if (nv == 0) throw MalformedRelation("quiver needs at least one vertex");
  std::map<std::string, std::size_t> arrowIndex;
  for (std::size_t k = 0; k < q.arrows.size(); ++k) {
    const auto& a = q.arrows[k];
    if (a.source >= nv || a.target >= nv)
      throw MalformedRelation("arrow '" + a.label + "' has an endpoint outside the vertex range");
    if (!arrowIndex.emplace(a.label, k).second) throw MalformedRelation("duplicate arrow label '" + a.label + "'");
  }

  struct ParsedRelation {
    std::size_t length = 0, source = 0, target = 0;
    std::vector<std::pair<std::vector<std::size_t>, Scalar>> terms;
  };
  std::vector<ParsedRelation> rels;
  for (std::size_t r = 0; r < q.relations.size(); ++r) {
    ParsedRelation pr;
    const std::string where = "relation " + std::to_string(r);
    if (q.relations[r].empty()) throw MalformedRelation(where + " is empty");
    for (const auto& term : q.relations[r]) {
      if (term.path.size() < 2) throw MalformedRelation(where + ": paths must have length >= 2");
      std::vector<std::size_t> idx;
      for (const auto& lbl : term.path) {
        auto it = arrowIndex.find(lbl);
        if (it == arrowIndex.end()) throw MalformedRelation(where + ": unknown arrow '" + lbl + "'");
        if (!idx.empty() && q.arrows[idx.back()].target != q.arrows[it->second].source)
          throw MalformedRelation(where + ": path is not composable at '" + lbl + "'");
        idx.push_back(it->second);
      }
      std::size_t s = q.arrows[idx.front()].source, t = q.arrows[idx.back()].target;
      if (pr.terms.empty()) {
        pr.length = idx.size();
        pr.source = s;
        pr.target = t;
      } else if (pr.length != idx.size()) {
        throw MalformedRelation(where + ": relations must be homogeneous (equal path lengths)");
      } else if (pr.source != s || pr.target != t) {
        throw MalformedRelation(where + ": paths in a relation must be parallel");
      }
      pr.terms.emplace_back(idx, Scalar::parse(f, term.coefficient));
    }
    rels.push_back(std::move(pr));
  }

  // paths by length
  std::vector<std::vector<PathRec>> byLength;
  byLength.push_back({});
  for (std::size_t v = 0; v < nv; ++v) byLength[0].push_back({v, v, {}});
  byLength.push_back({});
  for (std::size_t k = 0; k < q.arrows.size(); ++k)
    byLength[1].push_back({q.arrows[k].source, q.arrows[k].target, {k}});

  // normal-form data per length >= 2: for each path index, either normal
  // (basis index) or a reduction into normal paths of the same length
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> pathIndex(2);
  for (std::size_t L = 0; L < 2; ++L)
    for (std::size_t k = 0; k < byLength[L].size(); ++k) pathIndex[L][byLength[L][k].arrows] = k;
  std::vector<RrefResult> reductions(2);
  std::vector<std::vector<bool>> isNormal(2);
  isNormal[0].assign(byLength[0].size(), true);
  isNormal[1].assign(byLength[1].size(), true);

  std::size_t stopLength = 0;
  for (std::size_t L = 2;; ++L) {
    std::vector<PathRec> paths;
    for (const auto& pth : byLength[L - 1])
      for (std::size_t k = 0; k < q.arrows.size(); ++k)
        if (q.arrows[k].source == pth.target) {
          PathRec np = pth;
          np.arrows.push_back(k);
          np.target = q.arrows[k].target;
          paths.push_back(std::move(np));
        }
    byLength.push_back(paths);
    pathIndex.emplace_back();
    for (std::size_t k = 0; k < paths.size(); ++k) pathIndex[L][paths[k].arrows] = k;
    if (paths.empty()) {
      stopLength = L;
      reductions.emplace_back();
      isNormal.emplace_back();
      break;
    }
    // ideal in degree L: prefix * relation * suffix (traversal order)
    std::vector<Mat> gens;
    for (const auto& rel : rels) {
      if (rel.length > L) continue;
      for (std::size_t pre = 0; pre + rel.length <= L; ++pre) {
        std::size_t suf = L - rel.length - pre;
        for (const auto& pp : byLength[pre]) {
          if (pp.target != rel.source) continue;
          for (const auto& sp : byLength[suf]) {
            if (sp.source != rel.target) continue;
            Mat v(f, paths.size(), 1);
            for (const auto& [idx, coeff] : rel.terms) {
              std::vector<std::size_t> full = pp.arrows;
              full.insert(full.end(), idx.begin(), idx.end());
              full.insert(full.end(), sp.arrows.begin(), sp.arrows.end());
              v.addScaled(pathIndex[L].at(full), 0, coeff);
            }
            gens.push_back(v);
          }
        }
      }
    }
    RrefResult red;
    if (gens.empty()) {
      red.reduced = Mat(f, 0, paths.size());
    } else {
      red = hcat(f, paths.size(), gens).transpose().rref();
      red.reduced = red.reduced.block(0, 0, red.rank, paths.size());
    }
    std::vector<bool> normal(paths.size(), true);
    for (auto c : red.pivots) normal[c] = false;
    reductions.push_back(red);
    isNormal.push_back(normal);
    if (std::none_of(normal.begin(), normal.end(), [](bool b) { return b; })) {
      stopLength = L;
      break;
    }
    if (L > maxPathLength)
      throw InfiniteDimensional("irreducible path of length " + std::to_string(L) +
                                " exceeds maxPathLength " + std::to_string(maxPathLength));
  }

  // basis
  struct BasisRef {
    std::size_t length, index;
  };
  std::vector<BasisRef> basis;
  std::vector<std::map<std::size_t, std::size_t>> basisOf(stopLength);
  bool shortLabels = std::all_of(q.arrows.begin(), q.arrows.end(), [](const Arrow& a) { return a.label.size() == 1; });
  std::vector<std::string> labels;
  for (std::size_t L = 0; L < stopLength; ++L)
    for (std::size_t k = 0; k < byLength[L].size(); ++k)
      if (isNormal[L][k]) {
        basisOf[L][k] = basis.size();
        basis.push_back({L, k});
        const auto& pth = byLength[L][k];
        if (L == 0) {
          labels.push_back("e" + std::to_string(pth.source + 1));
        } else {
          std::string s;
          for (std::size_t a = 0; a < pth.arrows.size(); ++a)
            s += (a && !shortLabels ? "." : "") + q.arrows[pth.arrows[a]].label;
          labels.push_back(s);
        }
      }
  const std::size_t n = basis.size();

  // coordinates of a path (length L, index k) in the basis
  auto pathVector = [&](std::size_t L, std::size_t k) {
    Mat v(f, n, 1);
    if (L >= stopLength) return v;
    if (isNormal[L][k]) {
      v.set(basisOf[L].at(k), 0, 1);
      return v;
    }
    const auto& red = reductions[L];
    for (std::size_t row = 0; row < red.rank; ++row) {
      if (red.pivots[row] != k) continue;
      for (std::size_t c = 0; c < byLength[L].size(); ++c)
        if (isNormal[L][c] && !red.reduced.at(row, c).isZero())
          v.set(basisOf[L].at(c), 0, -red.reduced.at(row, c));
    }
    return v;
  };

  AlgebraData d;
  d.field = f;
  d.labels = labels;
  for (std::size_t i = 0; i < n; ++i) {
    Mat lm(f, n, n);
    const auto& x = byLength[basis[i].length][basis[i].index];
    for (std::size_t j = 0; j < n; ++j) {
      const auto& y = byLength[basis[j].length][basis[j].index];
      // x*y: first y, then x
      if (y.target != x.source) continue;
      if (x.arrows.empty()) {
        lm.setBlock(0, j, Mat::unitVector(f, n, j));
        continue;
      }
      if (y.arrows.empty()) {
        lm.setBlock(0, j, Mat::unitVector(f, n, i));
        continue;
      }
      std::vector<std::size_t> full = y.arrows;
      full.insert(full.end(), x.arrows.begin(), x.arrows.end());
      std::size_t L = full.size();
      if (L >= stopLength) continue;
      lm.setBlock(0, j, pathVector(L, pathIndex[L].at(full)));
    }
    d.leftMul.push_back(lm);
  }
  d.unit = Mat(f, n, 1);
  std::vector<Mat> idems;
  for (std::size_t v = 0; v < nv; ++v) {
    d.unit.set(v, 0, 1);
    idems.push_back(Mat::unitVector(f, n, v));
  }
  d.idempotents = idems;
  Mat rad(f, n, n - nv);
  for (std::size_t i = nv; i < n; ++i) rad.set(i, i - nv, 1);
  d.radicalHint = rad;
  std::ostringstream desc;
  desc << nv << " vertices, " << q.arrows.size() << " arrows, " << q.relations.size() << " relations";
  d.provenance = {"path", desc.str()};
  return Algebra::make(std::move(d));
}

std::vector<std::vector<std::size_t>> cyclicGroupTable(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::vector<std::vector<std::size_t>> symmetricGroup3Table() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t h = 0; h < 6; ++h) {
      std::array<std::size_t, 3> c{};
      for (std::size_t x = 0; x < 3; ++x) c[x] = perms[g][perms[h][x]];
      t[g][h] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

AlgebraPtr groupAlgebra(const std::vector<std::vector<std::size_t>>& table, const Field& f) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("empty multiplication table");
  for (const auto& row : table) {
    if (row.size() != n) throw NotAGroup("multiplication table is not square");
    for (auto x : row)
      if (x >= n) throw NotAGroup("table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw NotAGroup("table is not associative");
  std::size_t id = n;
  for (std::size_t e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) id = e;
  }
  if (id == n) throw NotAGroup("no identity element");
  for (std::size_t g = 0; g < n; ++g) {
    bool inv = false;
    for (std::size_t h = 0; h < n && !inv; ++h) inv = table[g][h] == id;
    if (!inv) throw NotAGroup("element " + std::to_string(g) + " has no inverse");
  }

  AlgebraData d;
  d.field = f;
  for (std::size_t g = 0; g < n; ++g) d.labels.push_back(g == id ? "1" : "g" + std::to_string(g));
  for (std::size_t g = 0; g < n; ++g) {
    Mat lm(f, n, n);
    for (std::size_t h = 0; h < n; ++h) lm.set(table[g][h], h, 1);
    d.leftMul.push_back(lm);
  }
  d.unit = Mat::unitVector(f, n, id);
  const std::uint32_t p = f.characteristic();
  if (p == 0 || n % p != 0) {
    d.radicalHint = Mat(f, n, 0);
  } else {
    std::size_t m = n;
    while (m % p == 0) m /= p;
    if (m == 1) {
      // p-group over F_p: the augmentation ideal, spanned by g - 1
      Mat aug(f, n, n - 1);
      std::size_t c = 0;
      for (std::size_t g = 0; g < n; ++g) {
        if (g == id) continue;
        aug.set(g, c, 1);
        aug.set(id, c, -1);
        ++c;
      }
      d.radicalHint = aug;
    }
  }
  d.provenance = {"group", "order " + std::to_string(n) + " over " + f.name()};
  auto bare = Algebra::make(d);
  d.idempotents = splitPrimitiveIdempotents(*bare, 0);
  return Algebra::make(std::move(d));
}

TruncatedExtension truncatedExtension(const AlgebraPtr& r, std::size_t t) {
  if (t == 0) throw InputShapeError("truncation degree must be >= 1");
  const Field& f = r->field();
  const std::size_t m = r->dim(), n = m * t;
  Mat shift(f, t, t);
  for (std::size_t k = 0; k + 1 < t; ++k) shift.set(k + 1, k, 1);
  std::vector<Mat> shiftPow{Mat::identity(f, t)};
  for (std::size_t j = 1; j < t; ++j) shiftPow.push_back(shift * shiftPow.back());

  AlgebraData d;
  d.field = f;
  for (std::size_t j = 0; j < t; ++j)
    for (std::size_t i = 0; i < m; ++i)
      d.labels.push_back(j == 0 ? r->labels()[i] : r->labels()[i] + "x" + (j > 1 ? "^" + std::to_string(j) : ""));
  for (std::size_t j = 0; j < t; ++j)
    for (std::size_t i = 0; i < m; ++i) d.leftMul.push_back(kron(shiftPow[j], r->leftMul(i)));
  Mat embedding(f, n, m);
  embedding.setBlock(0, 0, Mat::identity(f, m));
  d.unit = embedding * r->unit();
  if (r->hasIdempotents()) {
    std::vector<Mat> es;
    for (const auto& e : r->idempotents()) es.push_back(embedding * e);
    d.idempotents = es;
  }
  const Mat& rr = r->radical();
  Mat rad(f, n, rr.cols() + (t - 1) * m);
  rad.setBlock(0, 0, rr);
  if (t > 1) rad.setBlock(m, rr.cols(), Mat::identity(f, (t - 1) * m));
  d.radicalHint = rad;
  d.provenance = {"truncated", "(" + r->provenance().kind + ")[x]/(x^" + std::to_string(t) + ")"};
  return {Algebra::make(std::move(d)), embedding};
}

AlgebraPtr oppositeAlgebra(const AlgebraPtr& a) {
  AlgebraData d;
  d.field = a->field();
  d.labels = a->labels();
  for (std::size_t i = 0; i < a->dim(); ++i) d.leftMul.push_back(a->rightMultiplication(a->basisVector(i)));
  d.unit = a->unit();
  if (a->hasIdempotents()) d.idempotents = a->idempotents();
  d.radicalHint = a->radical();
  d.centralIdempotents = a->centralIdempotents();
  d.provenance = {"opposite", "(" + a->provenance().kind + ")^op"};
  return Algebra::make(std::move(d));
}

AlgebraPtr matrixAlgebra(const AlgebraPtr& a, std::size_t n) {
  if (n == 0) throw InputShapeError("matrix size must be >= 1");
  const Field& f = a->field();
  const std::size_t m = a->dim(), dim = n * n * m;
  auto unitE = [&](std::size_t p, std::size_t q) {
    Mat e(f, n, n);
    e.set(p, q, 1);
    return e;
  };
  AlgebraData d;
  d.field = f;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t i = 0; i < m; ++i) {
        d.labels.push_back("E" + std::to_string(p + 1) + std::to_string(q + 1) + "(" + a->labels()[i] + ")");
        d.leftMul.push_back(kron(kron(unitE(p, q), Mat::identity(f, n)), a->leftMul(i)));
      }
  auto embed = [&](std::size_t p, std::size_t q, const Mat& x) {
    Mat v(f, dim, 1);
    v.setBlock((p * n + q) * m, 0, x);
    return v;
  };
  d.unit = Mat(f, dim, 1);
  for (std::size_t p = 0; p < n; ++p) d.unit = d.unit + embed(p, p, a->unit());
  if (a->hasIdempotents()) {
    std::vector<Mat> es;
    for (std::size_t p = 0; p < n; ++p)
      for (const auto& e : a->idempotents()) es.push_back(embed(p, p, e));
    d.idempotents = es;
  }
  const Mat& ra = a->radical();
  Mat rad(f, dim, n * n * ra.cols());
  for (std::size_t pq = 0; pq < n * n; ++pq) rad.setBlock(pq * m, pq * ra.cols(), ra);
  d.radicalHint = rad;
  d.provenance = {"matrix", "M_" + std::to_string(n) + "(" + a->provenance().kind + ")"};
  return Algebra::make(std::move(d));
}

AlgebraPtr productAlgebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!(a->field() == b->field())) throw InputShapeError("product of algebras over different fields");
  const Field& f = a->field();
  const std::size_t na = a->dim(), nb = b->dim();
  AlgebraData d;
  d.field = f;
  for (const auto& l : a->labels()) d.labels.push_back("(" + l + ",0)");
  for (const auto& l : b->labels()) d.labels.push_back("(0," + l + ")");
  for (std::size_t i = 0; i < na; ++i) d.leftMul.push_back(directSum(a->leftMul(i), Mat(f, nb, nb)));
  for (std::size_t j = 0; j < nb; ++j) d.leftMul.push_back(directSum(Mat(f, na, na), b->leftMul(j)));
  Mat ea = vcat(a->unit(), Mat(f, nb, 1)), eb = vcat(Mat(f, na, 1), b->unit());
  d.unit = ea + eb;
  if (a->hasIdempotents() && b->hasIdempotents()) {
    std::vector<Mat> es;
    for (const auto& e : a->idempotents()) es.push_back(vcat(e, Mat(f, nb, 1)));
    for (const auto& e : b->idempotents()) es.push_back(vcat(Mat(f, na, 1), e));
    d.idempotents = es;
  }
  d.centralIdempotents = {ea, eb};
  d.radicalHint = directSum(a->radical(), b->radical());
  d.provenance = {"product", a->provenance().kind + " x " + b->provenance().kind};
  return Algebra::make(std::move(d));
}

AlgebraPtr tensorAlgebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!(a->field() == b->field())) throw InputShapeError("tensor of algebras over different fields");
  const Field& f = a->field();
  const std::size_t na = a->dim(), nb = b->dim();
  AlgebraData d;
  d.field = f;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      d.labels.push_back(a->labels()[i] + "(x)" + b->labels()[j]);
      d.leftMul.push_back(kron(a->leftMul(i), b->leftMul(j)));
    }
  d.unit = kron(a->unit(), b->unit());
  if (a->hasIdempotents() && b->hasIdempotents()) {
    std::vector<Mat> es;
    for (const auto& e : a->idempotents())
      for (const auto& g : b->idempotents()) es.push_back(kron(e, g));
    d.idempotents = es;
  }
  Mat rad = hcat(kron(a->radical(), Mat::identity(f, nb)), kron(Mat::identity(f, na), b->radical()));
  d.radicalHint = rad.columnSpace();
  d.provenance = {"tensor", a->provenance().kind + " (x) " + b->provenance().kind};
  return Algebra::make(std::move(d));
}

}  // namespace gorwb
