#include "gorwb/frobenius.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace gorwb {

// ---------------------------------------------------------------- extensions

RingExtension makeExtension(AlgebraPtr base, AlgebraPtr total, Mat embedding) {
  if (!base || !total) throw InvalidAlgebra("extension needs both algebras");
  if (base->field() != total->field()) throw InvalidAlgebra("extension algebras over different fields");
  if (embedding.rows() != total->dim() || embedding.cols() != base->dim())
    throw InvalidAlgebra("embedding must be dim S x dim R");
  if (!(embedding * base->unit() == total->unit())) throw InvalidAlgebra("embedding does not preserve the unit");
  for (std::size_t i = 0; i < base->dim(); ++i)
    for (std::size_t j = 0; j < base->dim(); ++j)
      if (!(embedding * base->product(i, j) == total->multiply(embedding.column(i), embedding.column(j))))
        throw InvalidAlgebra("embedding is not multiplicative on basis pair (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")");
  if (embedding.rank() != base->dim()) throw InvalidAlgebra("embedding is not injective");
  return {std::move(base), std::move(total), std::move(embedding)};
}

RingExtension identityExtension(const AlgebraPtr& a) { return makeExtension(a, a, Mat::identity(a->field(), a->dim())); }

RingExtension unitExtension(const AlgebraPtr& a) { return makeExtension(fieldAlgebra(a->field()), a, a->unit()); }

RingExtension truncatedExtensionOf(const AlgebraPtr& r, std::size_t t) {
  TruncatedExtension te = truncatedExtension(r, t);
  return makeExtension(r, te.total, te.embedding);
}

// ---------------------------------------------------------------- bimodules

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> leftAction,
                   std::vector<Mat> rightAction)
    : left_(std::move(left)), right_(std::move(right)), dim_(dim), leftAction_(std::move(leftAction)),
      rightAction_(std::move(rightAction)) {
  if (leftAction_.size() != left_->dim() || rightAction_.size() != right_->dim())
    throw InvalidModule("bimodule needs one action matrix per basis element on each side");
  leftModule();
  rightModule();
  for (const auto& l : leftAction_)
    for (const auto& r : rightAction_)
      if (!(l * r == r * l)) throw InvalidModule("left and right actions do not commute");
}

Module Bimodule::leftModule() const { return Module(left_, dim_, leftAction_); }
Module Bimodule::rightModule() const { return Module(right_->opposite(), dim_, rightAction_); }

Module Bimodule::asModule() const {
  AlgebraPtr env = envelopingAlgebra(left_, right_);
  std::vector<Mat> action;
  for (const auto& l : leftAction_)
    for (const auto& r : rightAction_) action.push_back(l * r);
  return Module(env, dim_, std::move(action));
}

AlgebraPtr envelopingAlgebra(const AlgebraPtr& s, const AlgebraPtr& r) {
  static std::mutex mu;
  static std::map<std::pair<const Algebra*, const Algebra*>, std::tuple<AlgebraPtr, AlgebraPtr, AlgebraPtr>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(s.get(), r.get());
  auto it = cache.find(key);
  if (it != cache.end()) return std::get<2>(it->second);
  AlgebraPtr env = tensorAlgebra(s, r->opposite());
  cache.emplace(key, std::make_tuple(s, r, env));
  return env;
}

namespace {

// Basis of a Hom space as columns of vec'd matrices.
Mat vecBasis(const Field& f, std::size_t rows, std::size_t cols, const std::vector<ModHom>& maps) {
  std::vector<Mat> v;
  for (const auto& h : maps) v.push_back(h.matrix().vec());
  return v.empty() ? Mat(f, rows * cols, 0) : hcat(f, rows * cols, v);
}

// Matrix of f -> op(f) on the span of `basis`, where op is linear.
template <class Op>
Mat actOnHomBasis(const Mat& basis, std::size_t rows, std::size_t cols, Op op) {
  const Field& f = basis.field();
  Mat out(f, basis.cols(), basis.cols());
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    Mat img = op(Mat::unvec(basis.column(k), rows, cols)).vec();
    out.setBlock(0, k, coordinates(basis, img));
  }
  return out;
}

struct TensorData {
  Module module;
  Mat projection;  // M (x)_k X -> M (x)_R X
  Mat section;
  Mat relations;
};

TensorData tensorData(const Bimodule& m, const Module& x) {
  requireSameAlgebra(Module::zero(m.right()), x, "tensor product");
  const Field& f = x.field();
  const std::size_t dm = m.dim(), dx = x.dim();
  std::vector<Mat> rel;
  for (std::size_t g : m.right()->generators())
    rel.push_back(kron(m.rightAction()[g], Mat::identity(f, dx)) + kron(Mat::identity(f, dm), x.action(g)).scaled(Scalar(f, -1)));
  Mat relations = rel.empty() ? Mat(f, dm * dx, 0) : hcat(f, dm * dx, rel).columnSpace();
  std::vector<Mat> action;
  for (const auto& l : m.leftAction()) action.push_back(kron(l, Mat::identity(f, dx)));
  Module big(m.left(), dm * dx, std::move(action));
  Quotient q = quotient(big, relations);
  return {q.module, q.projection.matrix(), q.section, relations};
}

struct HomData {
  Module module;
  Mat basis;  // vec'd S-maps M -> y
};

HomData homData(const Bimodule& m, const Module& y) {
  const Field& f = y.field();
  Mat basis = vecBasis(f, y.dim(), m.dim(), homSpace(m.leftModule(), y));
  std::vector<Mat> action;
  for (const auto& r : m.rightAction())
    action.push_back(actOnHomBasis(basis, y.dim(), m.dim(), [&](const Mat& phi) { return phi * r; }));
  return {Module(m.right(), basis.cols(), std::move(action)), basis};
}

struct CoindData {
  Module module;
  Mat basis;  // vec'd R-maps Res S -> x
};

CoindData coindData(const RingExtension& ext, const Module& x) {
  const auto& s = ext.total;
  Module resS = restrict(ext, regularModule(s));
  Mat basis = vecBasis(x.field(), x.dim(), s->dim(), homSpace(resS, x));
  std::vector<Mat> action;
  for (std::size_t i = 0; i < s->dim(); ++i) {
    Mat right = s->rightMultiplication(s->basisVector(i));
    action.push_back(actOnHomBasis(basis, x.dim(), s->dim(), [&](const Mat& phi) { return phi * right; }));
  }
  return {Module(s, basis.cols(), std::move(action)), basis};
}

}  // namespace

Bimodule regularBimodule(const RingExtension& ext) {
  const auto& s = ext.total;
  std::vector<Mat> right;
  for (std::size_t j = 0; j < ext.base->dim(); ++j) right.push_back(s->rightMultiplication(ext.embedding.column(j)));
  return Bimodule(s, ext.base, s->dim(), s->leftMuls(), std::move(right));
}

Bimodule dualBimodule(const RingExtension& ext) {
  const auto& s = ext.total;
  const auto& r = ext.base;
  Module resS = restrict(ext, regularModule(s));
  Mat basis = vecBasis(r->field(), r->dim(), s->dim(), homSpace(resS, regularModule(r)));
  std::vector<Mat> left, right;
  for (std::size_t i = 0; i < s->dim(); ++i) {
    Mat rm = s->rightMultiplication(s->basisVector(i));
    left.push_back(actOnHomBasis(basis, r->dim(), s->dim(), [&](const Mat& phi) { return phi * rm; }));
  }
  for (std::size_t j = 0; j < r->dim(); ++j) {
    Mat rm = r->rightMultiplication(r->basisVector(j));
    right.push_back(actOnHomBasis(basis, r->dim(), s->dim(), [&](const Mat& phi) { return rm * phi; }));
  }
  return Bimodule(s, r, basis.cols(), std::move(left), std::move(right));
}

Bimodule projectionBimodule(const AlgebraPtr& big, const AlgebraPtr& small, const Mat& projection, bool bigOnLeft) {
  if (projection.rows() != small->dim() || projection.cols() != big->dim())
    throw InputShapeError("projection must be dim small x dim big");
  std::vector<Mat> viaBig, own;
  for (std::size_t i = 0; i < big->dim(); ++i)
    viaBig.push_back(bigOnLeft ? small->leftMultiplication(projection.column(i))
                               : small->rightMultiplication(projection.column(i)));
  for (std::size_t j = 0; j < small->dim(); ++j)
    own.push_back(bigOnLeft ? small->rightMultiplication(small->basisVector(j)) : small->leftMul(j));
  if (bigOnLeft) return Bimodule(big, small, small->dim(), std::move(viaBig), std::move(own));
  return Bimodule(small, big, small->dim(), std::move(own), std::move(viaBig));
}

Bimodule columnBimodule(const AlgebraPtr& matrix, const AlgebraPtr& r, std::size_t n) {
  const Field& f = r->field();
  const std::size_t d = r->dim();
  if (matrix->dim() != n * n * d) throw InputShapeError("matrix algebra dimension does not match n^2 dim R");
  std::vector<Mat> left, right;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t i = 0; i < d; ++i) {
        Mat l(f, n * d, n * d);
        l.setBlock(p * d, q * d, r->leftMul(i));
        left.push_back(l);
      }
  for (std::size_t j = 0; j < d; ++j)
    right.push_back(kron(Mat::identity(f, n), r->rightMultiplication(r->basisVector(j))));
  return Bimodule(matrix, r, n * d, std::move(left), std::move(right));
}

// ---------------------------------------------------------------- functors

Module induce(const RingExtension& ext, const Module& x) { return tensorData(regularBimodule(ext), x).module; }

Module restrict(const RingExtension& ext, const Module& y) {
  requireSameAlgebra(Module::zero(ext.total), y, "restrict");
  std::vector<Mat> action;
  for (std::size_t j = 0; j < ext.base->dim(); ++j) action.push_back(y.act(ext.embedding.column(j)));
  return Module(ext.base, y.dim(), std::move(action));
}

Module coinduce(const RingExtension& ext, const Module& x) { return coindData(ext, x).module; }

Module tensorOver(const Bimodule& m, const Module& x) { return tensorData(m, x).module; }
Module homFrom(const Bimodule& m, const Module& y) { return homData(m, y).module; }

namespace {

ModHom tensorMap(const Bimodule& m, const ModHom& f) {
  TensorData s = tensorData(m, f.source());
  TensorData t = tensorData(m, f.target());
  Mat big = kron(Mat::identity(f.source().field(), m.dim()), f.matrix());
  return ModHom(s.module, t.module, t.projection * big * s.section);
}

// Counit M (x)_R G(Y) -> Y for the linear evaluation `eval` on M (x)_k G(Y).
ModHom descend(const TensorData& t, const Module& y, const Mat& eval) {
  if (!(eval * t.relations).isZero()) throw VerificationFailure("counit does not vanish on the balancing relations");
  return ModHom(t.module, y, eval * t.section);
}

}  // namespace

Adjunction tensorHom(const Bimodule& m) {
  Adjunction a;
  a.name = "(M (x) -, Hom(M, -))";
  a.source = m.right();
  a.target = m.left();
  a.F = [m](const Module& x) { return tensorOver(m, x); };
  a.G = [m](const Module& y) { return homFrom(m, y); };
  a.Fmap = [m](const ModHom& f) { return tensorMap(m, f); };
  a.Gmap = [m](const ModHom& g) {
    HomData s = homData(m, g.source());
    HomData t = homData(m, g.target());
    Mat out(g.source().field(), t.basis.cols(), s.basis.cols());
    for (std::size_t k = 0; k < s.basis.cols(); ++k)
      out.setBlock(0, k, coordinates(t.basis, (g.matrix() * Mat::unvec(s.basis.column(k), g.source().dim(), m.dim())).vec()));
    return ModHom(s.module, t.module, out);
  };
  a.unit = [m](const Module& x) {
    const Field& f = x.field();
    TensorData t = tensorData(m, x);
    HomData h = homData(m, t.module);
    Mat out(f, h.basis.cols(), x.dim());
    for (std::size_t b = 0; b < x.dim(); ++b) {
      Mat phi = t.projection * kron(Mat::identity(f, m.dim()), Mat::unitVector(f, x.dim(), b));
      out.setBlock(0, b, coordinates(h.basis, phi.vec()));
    }
    return ModHom(x, h.module, out);
  };
  a.counit = [m](const Module& y) {
    const Field& f = y.field();
    HomData h = homData(m, y);
    TensorData t = tensorData(m, h.module);
    const std::size_t hd = h.basis.cols();
    Mat eval(f, y.dim(), m.dim() * hd);
    for (std::size_t k = 0; k < hd; ++k) {
      Mat phi = Mat::unvec(h.basis.column(k), y.dim(), m.dim());
      for (std::size_t c = 0; c < m.dim(); ++c) eval.setBlock(0, c * hd + k, phi.column(c));
    }
    return descend(t, y, eval);
  };
  return a;
}

Adjunction indRes(const RingExtension& ext) {
  Adjunction a;
  a.name = "(Ind, Res)";
  a.source = ext.base;
  a.target = ext.total;
  Bimodule m = regularBimodule(ext);
  a.F = [m](const Module& x) { return tensorOver(m, x); };
  a.G = [ext](const Module& y) { return restrict(ext, y); };
  a.Fmap = [m](const ModHom& f) { return tensorMap(m, f); };
  a.Gmap = [ext](const ModHom& g) { return ModHom(restrict(ext, g.source()), restrict(ext, g.target()), g.matrix()); };
  a.unit = [m, ext](const Module& x) {
    const Field& f = x.field();
    TensorData t = tensorData(m, x);
    Mat img = t.projection * kron(ext.total->unit(), Mat::identity(f, x.dim()));
    return ModHom(x, restrict(ext, t.module), img);
  };
  a.counit = [m, ext](const Module& y) {
    TensorData t = tensorData(m, restrict(ext, y));
    Mat eval(y.field(), y.dim(), ext.total->dim() * y.dim());
    for (std::size_t i = 0; i < ext.total->dim(); ++i) eval.setBlock(0, i * y.dim(), y.action(i));
    return descend(t, y, eval);
  };
  return a;
}

Adjunction resCoind(const RingExtension& ext) {
  Adjunction a;
  a.name = "(Res, Coind)";
  a.source = ext.total;
  a.target = ext.base;
  a.F = [ext](const Module& y) { return restrict(ext, y); };
  a.G = [ext](const Module& x) { return coinduce(ext, x); };
  a.Fmap = [ext](const ModHom& g) { return ModHom(restrict(ext, g.source()), restrict(ext, g.target()), g.matrix()); };
  a.Gmap = [ext](const ModHom& f) {
    CoindData s = coindData(ext, f.source());
    CoindData t = coindData(ext, f.target());
    const std::size_t ds = ext.total->dim();
    Mat out(f.source().field(), t.basis.cols(), s.basis.cols());
    for (std::size_t k = 0; k < s.basis.cols(); ++k)
      out.setBlock(0, k, coordinates(t.basis, (f.matrix() * Mat::unvec(s.basis.column(k), f.source().dim(), ds)).vec()));
    return ModHom(s.module, t.module, out);
  };
  a.unit = [ext](const Module& y) {
    const Field& f = y.field();
    const std::size_t ds = ext.total->dim();
    CoindData c = coindData(ext, restrict(ext, y));
    Mat out(f, c.basis.cols(), y.dim());
    for (std::size_t b = 0; b < y.dim(); ++b) {
      Mat phi(f, y.dim(), ds);
      for (std::size_t i = 0; i < ds; ++i) phi.setBlock(0, i, y.action(i).column(b));
      out.setBlock(0, b, coordinates(c.basis, phi.vec()));
    }
    return ModHom(y, c.module, out);
  };
  a.counit = [ext](const Module& x) {
    const std::size_t ds = ext.total->dim();
    CoindData c = coindData(ext, x);
    Mat out(x.field(), x.dim(), c.basis.cols());
    for (std::size_t k = 0; k < c.basis.cols(); ++k)
      out.setBlock(0, k, Mat::unvec(c.basis.column(k), x.dim(), ds) * ext.total->unit());
    return ModHom(restrict(ext, c.module), x, out);
  };
  return a;
}

bool triangleAtSource(const Adjunction& adj, const Module& x) {
  Module fx = adj.F(x);
  ModHom lhs = compose(adj.counit(fx), adj.Fmap(adj.unit(x)));
  return lhs.matrix().isIdentity();
}

bool triangleAtTarget(const Adjunction& adj, const Module& y) {
  Module gy = adj.G(y);
  ModHom lhs = compose(adj.Gmap(adj.counit(y)), adj.unit(gy));
  return lhs.matrix().isIdentity();
}

// ---------------------------------------------------------------- diagnostics

bool isSummandOf(const Module& p, const Module& m) {
  if (p.dim() == 0) return true;
  auto fs = homSpace(p, m);
  auto gs = homSpace(m, p);
  for (const auto& f : fs)
    for (const auto& g : gs)
      if (compose(g, f).isIso()) return true;
  return false;
}

namespace {

bool exactOnRadicalSequence(const std::function<ModHom(const ModHom&)>& fmap, const Module& x) {
  Submodule rad = submodule(x, radicalOf(x));
  Quotient top = quotient(x, radicalOf(x));
  ModHom fi = fmap(rad.inclusion);
  ModHom fp = fmap(top.projection);
  if (!(fp.matrix() * fi.matrix()).isZero()) return false;
  return fi.isMono() && fp.isEpi() && fi.matrix().rank() + fp.matrix().rank() == fp.source().dim();
}

bool allSummands(const std::vector<ProjectiveModule>& ps, const Module& m) {
  for (const auto& p : ps)
    if (!isSummandOf(p.module, m)) return false;
  return true;
}

}  // namespace

AdjunctionReport faithfulnessReport(const Adjunction& adj, const std::vector<LabeledModule>& corpusSource,
                                    const std::vector<LabeledModule>& corpusTarget) {
  AdjunctionReport r;
  r.name = adj.name;
  for (const auto& [label, x] : corpusSource) {
    AdjunctionRecord rec;
    rec.label = label;
    rec.sourceSide = true;
    rec.triangle = triangleAtSource(adj, x);
    ModHom eta = adj.unit(x);
    rec.unitMono = eta.isMono();
    rec.exactnessPreserved = exactOnRadicalSequence(adj.Fmap, x);
    Submodule rad = submodule(x, radicalOf(x));
    ModHom a = rad.inclusion;
    rec.naturality = compose(adj.Gmap(adj.Fmap(a)), adj.unit(rad.module)).matrix() == compose(eta, a).matrix();
    r.trianglesHold &= rec.triangle;
    r.unitMonoAll &= rec.unitMono;
    r.exactnessHolds &= rec.exactnessPreserved;
    r.naturalityHolds &= rec.naturality;
    r.records.push_back(rec);
  }
  for (const auto& [label, y] : corpusTarget) {
    AdjunctionRecord rec;
    rec.label = label;
    rec.sourceSide = false;
    rec.triangle = triangleAtTarget(adj, y);
    ModHom eps = adj.counit(y);
    rec.counitEpi = eps.isEpi();
    rec.exactnessPreserved = exactOnRadicalSequence(adj.Gmap, y);
    Quotient top = quotient(y, radicalOf(y));
    ModHom b = top.projection;
    rec.naturality = compose(b, eps).matrix() == compose(adj.counit(top.module), adj.Fmap(adj.Gmap(b))).matrix();
    r.trianglesHold &= rec.triangle;
    r.counitEpiAll &= rec.counitEpi;
    r.exactnessHolds &= rec.exactnessPreserved;
    r.naturalityHolds &= rec.naturality;
    r.records.push_back(rec);
  }
  StructuralModules ss = structuralModules(adj.source);
  StructuralModules st = structuralModules(adj.target);
  for (const auto& p : ss.projectives) r.projectivesPreserved &= isProjective(adj.F(p.module));
  for (const auto& p : st.projectives) r.projectivesPreserved &= isProjective(adj.G(p.module));
  r.addGenerationSource = allSummands(ss.projectives, adj.G(regularModule(adj.target)));
  r.addGenerationTarget = allSummands(st.projectives, adj.F(regularModule(adj.source)));
  r.faithfulnessConsistent = (r.unitMonoAll == r.addGenerationSource) && (r.counitEpiAll == r.addGenerationTarget);
  if (!r.faithfulnessConsistent)
    r.notes.push_back("unit-mono / add-generation verdicts disagree on this corpus");
  r.notes.push_back(std::string("F faithful: ") + (r.addGenerationSource ? "yes" : "no") +
                    "; G faithful: " + (r.addGenerationTarget ? "yes" : "no"));
  return r;
}

// ---------------------------------------------------------------- Frobenius tests

namespace {

FrobeniusVerdict compareBimodules(const Module& a, const Module& b, std::uint64_t seed) {
  FrobeniusVerdict v;
  if (a.dim() != b.dim()) {
    v.verdict = Verdict::No;
    v.detail = "bimodule dimensions differ (" + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")";
    return v;
  }
  IsoResult iso = isIsomorphic(a, b, seed);
  v.verdict = iso.verdict;
  v.witness = iso.witness;
  v.detail = iso.reason;
  return v;
}

}  // namespace

FrobeniusVerdict isFrobeniusExtension(const RingExtension& ext, std::uint64_t seed) {
  Module resS = restrict(ext, regularModule(ext.total));
  if (!isProjective(resS)) return {Verdict::No, std::nullopt, "S is not projective as a left R-module"};
  FrobeniusVerdict v = compareBimodules(regularBimodule(ext).asModule(), dualBimodule(ext).asModule(), seed);
  if (v.verdict == Verdict::Yes) v.detail = "S projective over R; S ~ Hom_R(S, R) as S-R-bimodules";
  return v;
}

FrobeniusVerdict isFrobeniusBimodule(const Bimodule& m, std::uint64_t seed) {
  if (!isProjective(m.leftModule())) return {Verdict::No, std::nullopt, "M is not projective as a left module"};
  if (!isProjective(m.rightModule())) return {Verdict::No, std::nullopt, "M is not projective as a right module"};
  const auto& s = m.left();
  const auto& r = m.right();
  // Hom_S(M, S): (r f)(v) = f(v r), (f s)(v) = f(v) s
  Mat b1 = vecBasis(s->field(), s->dim(), m.dim(), homSpace(m.leftModule(), regularModule(s)));
  std::vector<Mat> l1, r1;
  for (const auto& rho : m.rightAction())
    l1.push_back(actOnHomBasis(b1, s->dim(), m.dim(), [&](const Mat& phi) { return phi * rho; }));
  for (std::size_t i = 0; i < s->dim(); ++i) {
    Mat rm = s->rightMultiplication(s->basisVector(i));
    r1.push_back(actOnHomBasis(b1, s->dim(), m.dim(), [&](const Mat& phi) { return rm * phi; }));
  }
  // Hom_{R^op}(M, R): (r g)(v) = r g(v), (g s)(v) = g(s v)
  Mat b2 = vecBasis(r->field(), r->dim(), m.dim(), homSpace(m.rightModule(), regularModule(r->opposite())));
  std::vector<Mat> l2, r2;
  for (std::size_t j = 0; j < r->dim(); ++j) {
    const Mat& lm = r->leftMul(j);
    l2.push_back(actOnHomBasis(b2, r->dim(), m.dim(), [&](const Mat& phi) { return lm * phi; }));
  }
  for (const auto& lambda : m.leftAction())
    r2.push_back(actOnHomBasis(b2, r->dim(), m.dim(), [&](const Mat& phi) { return phi * lambda; }));
  Bimodule n1(r, s, b1.cols(), std::move(l1), std::move(r1));
  Bimodule n2(r, s, b2.cols(), std::move(l2), std::move(r2));
  FrobeniusVerdict v = compareBimodules(n1.asModule(), n2.asModule(), seed);
  if (v.verdict == Verdict::Yes) v.detail = "both sides projective; Hom_S(M, S) ~ Hom_R^op(M, R) as R-S-bimodules";
  return v;
}

// ---------------------------------------------------------------- transfer

namespace {

bool indFaithfulCertified(const RingExtension& ext) {
  return allSummands(structuralModules(ext.base).projectives, restrict(ext, regularModule(ext.total)));
}

bool resFaithfulCertified(const RingExtension& ext) {
  return allSummands(structuralModules(ext.total).projectives, induce(ext, regularModule(ext.base)));
}

}  // namespace

TransferTable verifyGpdTransfer(const RingExtension& ext, const std::vector<LabeledModule>& corpusS,
                                const std::vector<LabeledModule>& corpusR, std::size_t bound, std::uint64_t seed) {
  FrobeniusVerdict fr = isFrobeniusExtension(ext, seed);
  if (fr.verdict != Verdict::Yes) throw PreconditionFailed("Frobenius extension not certified: " + fr.detail);
  GorensteinProfile pr = gorensteinProfile(ext.base, bound);
  GorensteinProfile ps = gorensteinProfile(ext.total, bound);
  if (!pr.certified()) throw PreconditionFailed("base algebra not certified Gorenstein: " + pr.toString());
  if (!ps.certified()) throw PreconditionFailed("total algebra not certified Gorenstein: " + ps.toString());
  TransferTable t;
  for (const auto& [label, m] : corpusS) {
    TransferRow row{label, "Res", gpd(m, ps), gpd(restrict(ext, m), pr), false};
    row.equal = row.gpdSource == row.gpdImage;
    t.allEqual &= row.equal;
    t.rows.push_back(row);
  }
  t.indFaithful = indFaithfulCertified(ext);
  if (t.indFaithful)
    for (const auto& [label, x] : corpusR) {
      TransferRow row{label, "Ind", gpd(x, pr), gpd(induce(ext, x), ps), false};
      row.equal = row.gpdSource == row.gpdImage;
      t.allEqual &= row.equal;
      t.rows.push_back(row);
    }
  return t;
}

GlobalDimTransfer globalGdimTransfer(const RingExtension& ext, std::size_t bound) {
  if (isFrobeniusExtension(ext).verdict != Verdict::Yes)
    throw PreconditionFailed("not a certified Frobenius extension: (Ind, Res) is not a Frobenius pair");
  if (!indFaithfulCertified(ext)) throw PreconditionFailed("Ind not certified faithful: add Res(P(S)) != P(R)");
  if (!resFaithfulCertified(ext)) throw PreconditionFailed("Res not certified faithful: add Ind(P(R)) != P(S)");
  GlobalDimTransfer g;
  g.base = gorensteinProfile(ext.base, bound);
  g.total = gorensteinProfile(ext.total, bound);
  g.equal = g.base.gorensteinDim == g.total.gorensteinDim && g.base.spdi == g.total.spdi;
  return g;
}

namespace {

std::vector<LabeledModule> structuralCorpus(const AlgebraPtr& a) {
  StructuralModules s = structuralModules(a);
  std::vector<LabeledModule> out;
  for (std::size_t c = 0; c < s.simples.size(); ++c) {
    out.push_back({"S" + std::to_string(c + 1), s.simples[c]});
    out.push_back({"P" + std::to_string(c + 1), s.projectives[c].module});
    out.push_back({"I" + std::to_string(c + 1), s.injectives[c]});
  }
  return out;
}

}  // namespace

ProductCounterexample counterexampleProduct(const AlgebraPtr& b, const AlgebraPtr& bPrime, const Module& bad,
                                            std::size_t bound) {
  requireSameAlgebra(Module::zero(bPrime), bad, "counterexample module");
  GorensteinProfile pPrime = gorensteinProfile(bPrime, bound);
  if (!pPrime.certified()) throw PreconditionFailed("B' not certified Gorenstein: " + pPrime.toString());
  GPResult badGP = isGorensteinProjective(bad, pPrime);
  if (badGP.verdict != Verdict::No)
    throw PreconditionFailed("module is not certified non-Gorenstein-projective over B' (" + toString(badGP.verdict) + ")");

  ProductCounterexample c;
  c.product = productAlgebra(b, bPrime);
  const Field& f = b->field();
  std::vector<Mat> action;
  for (std::size_t i = 0; i < b->dim(); ++i) action.push_back(Mat(f, bad.dim(), bad.dim()));
  for (std::size_t i = 0; i < bPrime->dim(); ++i) action.push_back(bad.action(i));
  c.x = Module(c.product, bad.dim(), std::move(action));

  Mat projection(f, b->dim(), c.product->dim());
  projection.setBlock(0, 0, Mat::identity(f, b->dim()));
  Adjunction prInc = tensorHom(projectionBimodule(c.product, b, projection, false));
  prInc.name = "(Pr, Inc)";
  Adjunction incPr = tensorHom(projectionBimodule(c.product, b, projection, true));
  incPr.name = "(Inc, Pr)";

  std::vector<LabeledModule> corpusP = structuralCorpus(c.product);
  corpusP.push_back({"X", c.x});
  std::vector<LabeledModule> corpusB = structuralCorpus(b);
  c.prInc = faithfulnessReport(prInc, corpusP, corpusB);
  c.incPr = faithfulnessReport(incPr, corpusB, corpusP);

  c.prX = prInc.F(c.x);
  c.prGP = isGorensteinProjective(c.prX, gorensteinProfile(b, bound));
  c.xGP = isGorensteinProjective(c.x, gorensteinProfile(c.product, bound));
  c.certified = c.prInc.passed() && c.incPr.passed() && c.prGP.verdict == Verdict::Yes &&
                c.xGP.verdict == Verdict::No && !c.prInc.addGenerationSource && !c.prInc.unitMonoAll;
  return c;
}

// ---------------------------------------------------------------- triangle equivalences

TriEquivReport triEquivConditions(const Adjunction& adj, const std::vector<LabeledModule>& corpusSource,
                                  const std::vector<LabeledModule>& corpusTarget, std::size_t bound) {
  std::vector<ModHom> units, counits;
  for (const auto& lm : corpusSource) {
    units.push_back(adj.unit(lm.module));
    if (!units.back().isMono()) throw PreconditionFailed("unit not mono at " + lm.label + ": F not faithful");
  }
  for (const auto& lm : corpusTarget) {
    counits.push_back(adj.counit(lm.module));
    if (!counits.back().isEpi()) throw PreconditionFailed("counit not epic at " + lm.label + ": G not faithful");
  }
  GorensteinProfile ps = gorensteinProfile(adj.source, bound);
  GorensteinProfile pt = gorensteinProfile(adj.target, bound);
  TriEquivReport r;
  auto record = [&](const std::string& label, bool sourceSide, const Module& obj, const Module& defect,
                    const GorensteinProfile& p) {
    DefectRecord d;
    d.label = label;
    d.sourceSide = sourceSide;
    d.dim = defect.dim();
    d.objectGP = isGorensteinProjective(obj, p).verdict == Verdict::Yes;
    d.pd = finDimension(defect, DimKind::Pd, bound);
    d.gpd = gpd(defect, p);
    const bool projective = d.pd.finite() && *d.pd.value == 0;
    if (d.objectGP) {
      if (sourceSide)
        r.stableGP &= d.pd.finite() && *d.pd.value <= 1;
      else
        r.stableGP &= projective;
    }
    r.singularity &= d.pd.finite();
    r.defect &= d.gpd.has_value();
    r.allProjective &= projective;
    r.defects.push_back(d);
  };
  for (std::size_t k = 0; k < corpusSource.size(); ++k) {
    Quotient cok = quotient(units[k].target(), units[k].matrix().columnSpace());
    record(corpusSource[k].label, true, corpusSource[k].module, cok.module, ps);
  }
  for (std::size_t k = 0; k < corpusTarget.size(); ++k) {
    Submodule ker = submodule(counits[k].source(), counits[k].matrix().kernel());
    record(corpusTarget[k].label, false, corpusTarget[k].module, ker.module, pt);
  }
  auto compare = [&](const std::vector<LabeledModule>& corpus, bool sourceSide,
                     const std::function<Module(const Module&)>& func) {
    std::vector<Module> images;
    for (const auto& lm : corpus) images.push_back(func(lm.module));
    for (std::size_t i = 0; i < corpus.size(); ++i)
      for (std::size_t j = 0; j < corpus.size(); ++j) {
        StableHomRow row{corpus[i].label + "," + corpus[j].label, sourceSide,
                         stableHomDim(corpus[i].module, corpus[j].module), stableHomDim(images[i], images[j])};
        r.stableHomMatches &= row.before == row.after;
        r.stableHom.push_back(row);
      }
  };
  compare(corpusSource, true, adj.F);
  compare(corpusTarget, false, adj.G);
  return r;
}

}  // namespace gorwb
