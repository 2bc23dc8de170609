#include "gorwb/modrep.hpp"

#include <map>
#include <mutex>
#include <random>

namespace gorwb {

namespace {

Mat zeroMat(const Field& f, std::size_t r, std::size_t c) { return Mat(f, r, c); }

}  // namespace

// ---------------------------------------------------------------- Module

Module::Module(AlgebraPtr algebra, std::size_t dim, std::vector<Mat> action) {
  if (!algebra) throw InvalidModule("module without algebra");
  const Field& f = algebra->field();
  if (action.size() != algebra->dim())
    throw InvalidModule("module needs one action matrix per algebra basis element (" +
                        std::to_string(algebra->dim()) + "), got " + std::to_string(action.size()));
  for (std::size_t i = 0; i < action.size(); ++i)
    if (action[i].rows() != dim || action[i].cols() != dim || !(action[i].field() == f))
      throw InvalidModule("action matrix " + std::to_string(i) + " must be " + std::to_string(dim) + "x" +
                          std::to_string(dim) + " over " + f.name());
  auto d = std::make_shared<Data>();
  d->algebra = std::move(algebra);
  d->dim = dim;
  d->action = std::move(action);
  data_ = std::move(d);

  const Algebra& a = *data_->algebra;
  if (!act(a.unit()).isIdentity()) throw InvalidModule("unit does not act as the identity");
  for (auto g : a.generators())
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(act(a.product(g, j)) == data_->action[g] * data_->action[j]))
        throw InvalidModule("action is not multiplicative at (" + a.labels()[g] + ", " + a.labels()[j] + ")");
}

Module Module::zero(AlgebraPtr algebra) {
  const Field f = algebra->field();
  std::vector<Mat> action(algebra->dim(), Mat(f, 0, 0));
  return Module(std::move(algebra), 0, std::move(action));
}

Mat Module::act(const Mat& x) const {
  Mat r(field(), dim(), dim());
  for (std::size_t i = 0; i < data_->action.size(); ++i) {
    Scalar c = x.at(i, 0);
    if (!c.isZero()) r = r + data_->action[i].scaled(c);
  }
  return r;
}

bool Module::sameAs(const Module& other) const {
  if (data_ == other.data_) return true;
  return sameAlgebra(algebra(), other.algebra()) && dim() == other.dim() && actions() == other.actions();
}

void requireSameAlgebra(const Module& a, const Module& b, const char* what) {
  if (!sameAlgebra(a.algebra(), b.algebra()))
    throw AlgebraMismatch(std::string(what) + ": modules over different algebras");
}

// ---------------------------------------------------------------- ModHom

ModHom::ModHom(Module source, Module target, Mat matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  requireSameAlgebra(source_, target_, "ModHom");
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw InvalidModule("module map matrix has shape " + std::to_string(matrix_.rows()) + "x" +
                        std::to_string(matrix_.cols()) + ", expected " + std::to_string(target_.dim()) + "x" +
                        std::to_string(source_.dim()));
  for (auto g : source_.algebra()->generators())
    if (!(matrix_ * source_.action(g) == target_.action(g) * matrix_))
      throw InvalidModule("matrix does not intertwine the action of " + source_.algebra()->labels()[g]);
}

ModHom ModHom::identity(const Module& m) { return ModHom(m, m, Mat::identity(m.field(), m.dim())); }

ModHom ModHom::zero(const Module& source, const Module& target) {
  return ModHom(source, target, zeroMat(source.field(), target.dim(), source.dim()));
}

ModHom compose(const ModHom& g, const ModHom& f) {
  if (f.target().dim() != g.source().dim() || !sameAlgebra(f.target().algebra(), g.source().algebra()))
    throw InputShapeError("compose: target of the first map is not the source of the second");
  return ModHom(f.source(), g.target(), g.matrix() * f.matrix());
}

ModHom operator+(const ModHom& a, const ModHom& b) { return ModHom(a.source(), a.target(), a.matrix() + b.matrix()); }

ModHom scaled(const ModHom& f, const Scalar& s) { return ModHom(f.source(), f.target(), f.matrix().scaled(s)); }

// ---------------------------------------------------------------- sums, sub, quotient

Module regularModule(const AlgebraPtr& a) { return Module(a, a->dim(), a->leftMuls()); }

Module directSum(const Module& a, const Module& b) {
  requireSameAlgebra(a, b, "directSum");
  std::vector<Mat> action;
  for (std::size_t i = 0; i < a.actions().size(); ++i) action.push_back(directSum(a.action(i), b.action(i)));
  return Module(a.algebra(), a.dim() + b.dim(), std::move(action));
}

Module directSum(const AlgebraPtr& a, const std::vector<Module>& parts) {
  Module r = Module::zero(a);
  for (const auto& p : parts) r = directSum(r, p);
  return r;
}

ModHom directSumMap(const ModHom& f, const ModHom& g) {
  return ModHom(directSum(f.source(), g.source()), directSum(f.target(), g.target()),
                directSum(f.matrix(), g.matrix()));
}

ModHom summandInclusion(const std::vector<Module>& parts, std::size_t k) {
  const auto& a = parts.at(k).algebra();
  Module total = directSum(a, parts);
  std::size_t off = 0;
  for (std::size_t i = 0; i < k; ++i) off += parts[i].dim();
  Mat m(a->field(), total.dim(), parts[k].dim());
  m.setBlock(off, 0, Mat::identity(a->field(), parts[k].dim()));
  return ModHom(parts[k], total, m);
}

ModHom summandProjection(const std::vector<Module>& parts, std::size_t k) {
  ModHom inc = summandInclusion(parts, k);
  return ModHom(inc.target(), inc.source(), inc.matrix().transpose());
}

Mat submoduleClosure(const Module& m, const Mat& vectors) {
  Mat span = vectors.columnSpace();
  const auto& gens = m.algebra()->generators();
  for (;;) {
    std::vector<Mat> parts{span};
    for (auto g : gens) parts.push_back(m.action(g) * span);
    Mat grown = hcat(m.field(), m.dim(), parts).columnSpace();
    if (grown.cols() == span.cols()) return span;
    span = grown;
  }
}

Submodule submodule(const Module& m, const Mat& basis) {
  const Field& f = m.field();
  const std::size_t k = basis.cols();
  if (basis.rank() != k) throw InvalidModule("submodule basis is not independent");
  std::vector<Mat> images;
  for (const auto& r : m.actions()) images.push_back(r * basis);
  Mat coords = coordinates(basis, hcat(f, m.dim(), images));
  std::vector<Mat> action;
  for (std::size_t i = 0; i < images.size(); ++i) action.push_back(coords.block(0, i * k, k, k));
  Module sub(m.algebra(), k, std::move(action));
  return {sub, ModHom(sub, m, basis)};
}

Quotient quotient(const Module& m, const Mat& submoduleBasis) {
  const Field& f = m.field();
  Mat w = submoduleBasis.columnSpace();
  Mat comp = extendBasis(w, Mat::identity(f, m.dim()));
  Mat change = hcat(w, comp);
  auto inv = change.inverse();
  if (!inv) throw VerificationFailure("quotient: basis change is singular");
  const std::size_t q = comp.cols();
  Mat proj = inv->block(w.cols(), 0, q, m.dim());
  std::vector<Mat> action;
  for (const auto& r : m.actions()) {
    if (!inSpan(w, r * w)) throw InvalidModule("quotient: subspace is not a submodule");
    action.push_back(proj * r * comp);
  }
  Module qm(m.algebra(), q, std::move(action));
  return {qm, ModHom(m, qm, proj), comp};
}

Factorization homFactorization(const ModHom& f) {
  const Mat& a = f.matrix();
  Submodule ker = submodule(f.source(), a.kernel());
  Mat im = a.columnSpace();
  Submodule image = submodule(f.target(), im);
  ModHom coimage(f.source(), image.module, coordinates(im, a));
  Quotient coker = quotient(f.target(), im);
  if (ker.module.dim() + image.module.dim() != f.source().dim() ||
      image.module.dim() + coker.module.dim() != f.target().dim())
    throw VerificationFailure("factorization dimensions do not add up");
  if (!compose(coimage, ker.inclusion).isZero() || !coimage.isEpi() ||
      !compose(coker.projection, image.inclusion).isZero() || !coker.projection.isEpi())
    throw VerificationFailure("factorization sequences are not exact");
  return {ker, image.module, coimage, image.inclusion, coker};
}

// ---------------------------------------------------------------- duality

Module dualModule(const Module& m) {
  std::vector<Mat> action;
  for (const auto& r : m.actions()) action.push_back(r.transpose());
  return Module(m.algebra()->opposite(), m.dim(), std::move(action));
}

ModHom dualMap(const ModHom& f) {
  return ModHom(dualModule(f.target()), dualModule(f.source()), f.matrix().transpose());
}

// ---------------------------------------------------------------- projectives

namespace {

struct IndecProjective {
  Mat basis;               // columns in algebra coordinates
  std::vector<Mat> action;  // per algebra basis element
  Mat generator;           // coordinates of e_i
};

const IndecProjective& indecProjective(const AlgebraPtr& a, std::size_t i) {
  struct Entry {
    std::weak_ptr<const Algebra> owner;
    std::map<std::size_t, IndecProjective> byIdempotent;
  };
  static std::mutex mu;
  static std::map<const Algebra*, Entry> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& entry = cache[a.get()];
  if (entry.owner.expired() || entry.owner.lock() != a) {
    entry.owner = a;
    entry.byIdempotent.clear();
  }
  auto it = entry.byIdempotent.find(i);
  if (it != entry.byIdempotent.end()) return it->second;
  IndecProjective p;
  p.basis = a->leftIdealBasis(i);
  const std::size_t k = p.basis.cols();
  std::vector<Mat> images;
  for (const auto& l : a->leftMuls()) images.push_back(l * p.basis);
  Mat coords = coordinates(p.basis, hcat(a->field(), a->dim(), images));
  for (std::size_t j = 0; j < images.size(); ++j) p.action.push_back(coords.block(0, j * k, k, k));
  p.generator = coordinates(p.basis, a->idempotents()[i]);
  return entry.byIdempotent.emplace(i, std::move(p)).first->second;
}

// Block of the map A e_i -> n sending e_i to v: column l is b_l . v.
Mat generatorBlock(const AlgebraPtr& a, std::size_t i, const Module& n, const Mat& v) {
  const auto& ip = indecProjective(a, i);
  Mat block(n.field(), n.dim(), ip.basis.cols());
  for (std::size_t l = 0; l < ip.basis.cols(); ++l) block.setBlock(0, l, n.act(ip.basis.column(l)) * v);
  return block;
}

}  // namespace

ProjectiveModule projectiveModule(const AlgebraPtr& a, const std::vector<std::size_t>& summands) {
  const Field& f = a->field();
  ProjectiveModule p;
  p.summands = summands;
  std::size_t total = 0;
  for (auto i : summands) {
    p.offsets.push_back(total);
    total += indecProjective(a, i).basis.cols();
  }
  std::vector<Mat> action(a->dim(), Mat(f, total, total));
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const auto& ip = indecProjective(a, summands[k]);
    for (std::size_t j = 0; j < a->dim(); ++j) action[j].setBlock(p.offsets[k], p.offsets[k], ip.action[j]);
    Mat g(f, total, 1);
    g.setBlock(p.offsets[k], 0, ip.generator);
    p.generators.push_back(g);
  }
  p.module = Module(a, total, std::move(action));
  return p;
}

ModHom mapFromGenerators(const ProjectiveModule& p, const Module& n, const std::vector<Mat>& images) {
  const auto& a = p.module.algebra();
  if (images.size() != p.summands.size()) throw InputShapeError("one generator image per summand required");
  Mat m(n.field(), n.dim(), p.module.dim());
  for (std::size_t k = 0; k < p.summands.size(); ++k) {
    const Mat& e = a->idempotents()[p.summands[k]];
    if (!(n.act(e) * images[k] == images[k]))
      throw InputShapeError("generator image does not lie in e_i N");
    m.setBlock(0, p.offsets[k], generatorBlock(a, p.summands[k], n, images[k]));
  }
  return ModHom(p.module, n, m);
}

ModHom liftThroughSurjection(const ProjectiveModule& p, const ModHom& g, const ModHom& s) {
  const auto& a = p.module.algebra();
  std::vector<Mat> images;
  for (std::size_t k = 0; k < p.summands.size(); ++k) {
    Mat target = g.matrix() * p.generators[k];
    auto x = solveExact(s.matrix(), target);
    if (!x) throw LiftFailed("lift: generator image is not in the image of the surjection");
    images.push_back(s.source().act(a->idempotents()[p.summands[k]]) * *x);
  }
  ModHom h = mapFromGenerators(p, s.source(), images);
  if (!(s.matrix() * h.matrix() == g.matrix())) throw LiftFailed("lift does not commute");
  return h;
}

// ---------------------------------------------------------------- radical, socle, top

Mat radicalOf(const Module& m) {
  const Field& f = m.field();
  const Mat& rad = m.algebra()->radical();
  if (m.dim() == 0) return Mat(f, 0, 0);
  std::vector<Mat> parts;
  for (std::size_t k = 0; k < rad.cols(); ++k) parts.push_back(m.act(rad.column(k)));
  if (parts.empty()) return Mat(f, m.dim(), 0);
  return hcat(f, m.dim(), parts).columnSpace();
}

Mat socleOf(const Module& m) {
  const Field& f = m.field();
  const Mat& rad = m.algebra()->radical();
  if (rad.cols() == 0) return Mat::identity(f, m.dim());
  std::vector<Mat> parts;
  for (std::size_t k = 0; k < rad.cols(); ++k) parts.push_back(m.act(rad.column(k)));
  return vcat(f, m.dim(), parts).kernel();
}

std::vector<std::size_t> radicalSeries(const Module& m) {
  const Field& f = m.field();
  const Mat& rad = m.algebra()->radical();
  std::vector<Mat> radActs;
  for (std::size_t k = 0; k < rad.cols(); ++k) radActs.push_back(m.act(rad.column(k)));
  std::vector<std::size_t> dims;
  Mat layer = Mat::identity(f, m.dim());
  while (layer.cols() > 0) {
    dims.push_back(layer.cols());
    std::vector<Mat> parts;
    for (const auto& r : radActs) parts.push_back(r * layer);
    Mat next = parts.empty() ? Mat(f, m.dim(), 0) : hcat(f, m.dim(), parts).columnSpace();
    if (next.cols() == layer.cols()) throw VerificationFailure("radical does not act nilpotently");
    layer = next;
  }
  dims.push_back(0);
  return dims;
}

std::vector<std::size_t> topVector(const Module& m) {
  const auto& a = *m.algebra();
  a.requireSplitBasicData();
  Mat radM = radicalOf(m);
  std::vector<std::size_t> v;
  for (auto c : a.classRepresentatives()) {
    Mat e = m.act(a.idempotents()[c]);
    v.push_back(e.rank() - (e * radM).rank());
  }
  return v;
}

std::vector<std::size_t> dimensionVector(const Module& m) {
  std::vector<std::size_t> v;
  for (const auto& e : m.algebra()->idempotents()) v.push_back(m.act(e).rank());
  return v;
}

// ---------------------------------------------------------------- covers

Cover projectiveCover(const Module& m) {
  const auto& a = m.algebra();
  a->requireSplitBasicData();
  Mat radM = radicalOf(m);
  std::vector<std::size_t> summands;
  std::vector<Mat> images;
  for (auto c : a->classRepresentatives()) {
    Mat e = m.act(a->idempotents()[c]);
    Mat eM = e.columnSpace();
    Mat eRad = (e * radM).columnSpace();
    Mat tops = extendBasis(eRad, eM);
    for (std::size_t k = 0; k < tops.cols(); ++k) {
      summands.push_back(c);
      images.push_back(tops.column(k));
    }
  }
  Cover cov;
  cov.projective = projectiveModule(a, summands);
  cov.map = mapFromGenerators(cov.projective, m, images);
  if (!cov.map.isEpi()) throw VerificationFailure("projective cover map is not surjective");
  cov.kernel = cov.map.matrix().kernel();
  return cov;
}

Envelope injectiveEnvelope(const Module& m) {
  Cover dc = projectiveCover(dualModule(m));
  Module inj = dualModule(dc.projective.module);
  ModHom map(m, inj, dc.map.matrix().transpose());
  if (!map.isMono()) throw VerificationFailure("injective envelope map is not injective");
  return {inj, map, dc};
}

bool isProjective(const Module& m) { return projectiveCover(m).projective.module.dim() == m.dim(); }

bool isInjective(const Module& m) { return isProjective(dualModule(m)); }

StructuralModules structuralModules(const AlgebraPtr& a) {
  a->requireSplitBasicData();
  StructuralModules s;
  auto op = a->opposite();
  for (auto c : a->classRepresentatives()) {
    auto p = projectiveModule(a, {c});
    s.simples.push_back(quotient(p.module, radicalOf(p.module)).module);
    s.projectives.push_back(p);
    s.injectives.push_back(dualModule(projectiveModule(op, {c}).module));
  }
  return s;
}

// ---------------------------------------------------------------- Hom spaces

std::vector<ModHom> homSpaceDirect(const Module& m, const Module& n) {
  requireSameAlgebra(m, n, "homSpace");
  const Field& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  std::vector<ModHom> out;
  if (dm == 0 || dn == 0) return out;
  std::vector<Mat> blocks;
  Mat idM = Mat::identity(f, dm), idN = Mat::identity(f, dn);
  for (auto g : m.algebra()->generators())
    blocks.push_back(kron(m.action(g).transpose(), idN) - kron(idM, n.action(g)));
  Mat sys = blocks.empty() ? Mat(f, 0, dm * dn) : vcat(f, dm * dn, blocks);
  Mat ker = sys.kernel();
  for (std::size_t k = 0; k < ker.cols(); ++k) out.emplace_back(m, n, Mat::unvec(ker.column(k), dn, dm));
  return out;
}

std::vector<ModHom> homSpace(const Module& m, const Module& n) {
  requireSameAlgebra(m, n, "homSpace");
  const auto& a = m.algebra();
  const Field& f = m.field();
  std::vector<ModHom> out;
  if (m.dim() == 0 || n.dim() == 0) return out;
  if (!a->hasIdempotents()) return homSpaceDirect(m, n);
  try {
    a->requireSplitBasicData();
  } catch (const UnsupportedAlgebra&) {
    return homSpaceDirect(m, n);
  }
  Cover cov = projectiveCover(m);
  const auto& p = cov.projective;
  auto section = solveExact(cov.map.matrix(), Mat::identity(f, m.dim()));
  if (!section) throw VerificationFailure("cover map has no linear section");
  // candidate maps P -> n, one per basis vector of each e_{i_k} n
  std::vector<Mat> psi;
  for (std::size_t k = 0; k < p.summands.size(); ++k) {
    Mat eN = n.act(a->idempotents()[p.summands[k]]).columnSpace();
    for (std::size_t l = 0; l < eN.cols(); ++l) {
      Mat full(f, n.dim(), p.module.dim());
      full.setBlock(0, p.offsets[k], generatorBlock(a, p.summands[k], n, eN.column(l)));
      psi.push_back(full);
    }
  }
  if (psi.empty()) return out;
  Mat coeffs;
  if (cov.kernel.cols() == 0) {
    coeffs = Mat::identity(f, psi.size());
  } else {
    std::vector<Mat> constraint;
    for (const auto& x : psi) constraint.push_back((x * cov.kernel).vec());
    coeffs = hcat(f, n.dim() * cov.kernel.cols(), constraint).kernel();
  }
  for (std::size_t c = 0; c < coeffs.cols(); ++c) {
    Mat phi(f, n.dim(), p.module.dim());
    for (std::size_t k = 0; k < psi.size(); ++k) {
      Scalar s = coeffs.at(k, c);
      if (!s.isZero()) phi = phi + psi[k].scaled(s);
    }
    out.emplace_back(m, n, phi * *section);
  }
  return out;
}

std::size_t homDim(const Module& m, const Module& n) { return homSpace(m, n).size(); }

std::size_t stableHomDim(const Module& m, const Module& n) {
  requireSameAlgebra(m, n, "stableHomDim");
  auto homs = homSpace(m, n);
  if (homs.empty()) return 0;
  Cover cov = projectiveCover(n);
  std::vector<Mat> factoring;
  for (const auto& h : homSpace(m, cov.projective.module)) factoring.push_back((cov.map.matrix() * h.matrix()).vec());
  if (factoring.empty()) return homs.size();
  return homs.size() - hcat(m.field(), m.dim() * n.dim(), factoring).rank();
}

// ---------------------------------------------------------------- isomorphism

std::string toString(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::optional<ModHom> findInvertible(const std::vector<ModHom>& maps, std::uint64_t seed, bool& exhausted) {
  exhausted = false;
  if (maps.empty()) {
    exhausted = true;
    return std::nullopt;
  }
  const Field& f = maps.front().source().field();
  const std::size_t h = maps.size();
  auto combine = [&](const std::vector<Scalar>& c) {
    Mat r(f, maps.front().matrix().rows(), maps.front().matrix().cols());
    for (std::size_t k = 0; k < h; ++k)
      if (!c[k].isZero()) r = r + maps[k].matrix().scaled(c[k]);
    return r;
  };
  if (!maps.front().matrix().isSquare()) {
    exhausted = true;
    return std::nullopt;
  }
  const std::size_t d = maps.front().matrix().rows();
  for (const auto& m : maps)
    if (m.matrix().rank() == d) return m;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<Scalar> c;
    for (std::size_t k = 0; k < h; ++k) {
      if (f.isRational())
        c.emplace_back(f, static_cast<long>(rng() % 21) - 10);
      else
        c.emplace_back(f, static_cast<long>(rng() % f.characteristic()));
    }
    Mat x = combine(c);
    if (x.rank() == d) return ModHom(maps.front().source(), maps.front().target(), x);
  }
  if (f.isRational()) return std::nullopt;
  const std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < h; ++k) {
    total *= p;
    if (total > (1u << 20)) return std::nullopt;
  }
  std::vector<std::uint64_t> digits(h, 0);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    for (std::size_t k = 0; k < h; ++k) {
      if (++digits[k] < p) break;
      digits[k] = 0;
    }
    std::vector<Scalar> c;
    for (auto dgt : digits) c.emplace_back(f, static_cast<long>(dgt));
    Mat x = combine(c);
    if (x.rank() == d) return ModHom(maps.front().source(), maps.front().target(), x);
  }
  exhausted = true;
  return std::nullopt;
}

IsoResult isIsomorphic(const Module& m, const Module& n, std::uint64_t seed) {
  requireSameAlgebra(m, n, "isIsomorphic");
  if (m.dim() != n.dim()) return {Verdict::No, std::nullopt, "dimension " + std::to_string(m.dim()) + " vs " + std::to_string(n.dim())};
  if (m.sameAs(n)) return {Verdict::Yes, ModHom::identity(m), "identical"};
  if (m.dim() == 0) return {Verdict::Yes, ModHom::zero(m, n), "zero"};
  if (radicalSeries(m) != radicalSeries(n)) return {Verdict::No, std::nullopt, "radical-series dimensions differ"};
  if (m.algebra()->hasIdempotents() && dimensionVector(m) != dimensionVector(n))
    return {Verdict::No, std::nullopt, "dimension vectors differ"};
  auto homs = homSpace(m, n);
  std::size_t endM = homDim(m, m), endN = homDim(n, n);
  if (endM != endN) return {Verdict::No, std::nullopt, "dim End differs"};
  if (homs.size() != endM) return {Verdict::No, std::nullopt, "dim Hom(M,N) differs from dim End(M)"};
  bool exhausted = false;
  auto w = findInvertible(homs, seed, exhausted);
  if (w) return {Verdict::Yes, w, "invertible intertwiner"};
  if (exhausted) return {Verdict::No, std::nullopt, "exhaustive search found no invertible intertwiner"};
  return {Verdict::Inconclusive, std::nullopt, "randomized search failed; exhaustion infeasible"};
}

}  // namespace gorwb
