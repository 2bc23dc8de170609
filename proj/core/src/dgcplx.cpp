#include "gorwb/dgcplx.hpp"

#include <algorithm>

namespace gorwb {

Module GradedModule::at(int p) const {
  if (p < lo || p > hi()) return Module::zero(algebra);
  return components[static_cast<std::size_t>(p - lo)];
}

std::size_t GradedModule::totalDim() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.dim();
  return n;
}

GradedModule makeGraded(const AlgebraPtr& a, int lo, std::vector<Module> components) {
  for (const auto& c : components)
    if (!sameAlgebra(c.algebra(), a)) throw AlgebraMismatch("graded component over a different algebra");
  return {a, lo, std::move(components)};
}

ModHom GradedMap::at(int p) const {
  auto it = components.find(p);
  return it != components.end() ? it->second : ModHom::zero(source.at(p), target.at(p));
}

ModHom ComplexMap::at(int p) const {
  auto it = components.find(p);
  return it != components.end() ? it->second : ModHom::zero(source.at(p), target.at(p));
}

namespace {

int lowest(int a, int b, bool ea, bool eb) { return ea ? b : (eb ? a : std::min(a, b)); }
int highest(int a, int b, bool ea, bool eb) { return ea ? b : (eb ? a : std::max(a, b)); }

std::pair<int, int> span(const ComplexObj& s, const ComplexObj& t) {
  bool es = s.components.empty(), et = t.components.empty();
  if (es && et) return {0, -1};
  return {lowest(s.lo, t.lo, es, et), highest(s.hi(), t.hi(), es, et)};
}

std::pair<int, int> span(const GradedModule& s, const GradedModule& t) {
  bool es = s.components.empty(), et = t.components.empty();
  if (es && et) return {0, -1};
  return {lowest(s.lo, t.lo, es, et), highest(s.hi(), t.hi(), es, et)};
}

// (a, b) in A + B; the two summand blocks of a 2x2 block matrix.
Mat blockDiag(const Mat& a, const Mat& b) { return directSum(a, b); }

}  // namespace

bool ComplexMap::commutes() const {
  auto [lo, hi] = span(source, target);
  for (int p = lo - 1; p <= hi; ++p)
    if (!(target.d(p).matrix() * at(p).matrix() == at(p + 1).matrix() * source.d(p).matrix())) return false;
  return true;
}

bool isIdentity(const GradedMap& f) {
  auto [lo, hi] = span(f.source, f.target);
  for (int p = lo; p <= hi; ++p)
    if (!f.source.at(p).sameAs(f.target.at(p)) || !f.at(p).matrix().isIdentity()) return false;
  return true;
}

bool isIdentity(const ComplexMap& f) {
  auto [lo, hi] = span(f.source, f.target);
  for (int p = lo; p <= hi; ++p)
    if (!f.source.at(p).sameAs(f.target.at(p)) || !f.at(p).matrix().isIdentity()) return false;
  return true;
}

// ---------------------------------------------------------------- functors

ComplexObj functorF(const GradedModule& x) {
  if (x.components.empty()) return makeComplex(x.algebra, 0, {}, {});
  const int lo = x.lo, hi = x.hi() + 1;
  std::vector<Module> comps;
  for (int p = lo; p <= hi; ++p) comps.push_back(directSum(x.at(p), x.at(p - 1)));
  std::vector<ModHom> diffs;
  for (int p = lo; p < hi; ++p) {
    // X^p + X^{p-1} -> X^{p+1} + X^p, (x, y) -> (0, x)
    const std::size_t a = x.at(p).dim(), b = x.at(p - 1).dim(), c = x.at(p + 1).dim();
    Mat d(x.algebra->field(), c + a, a + b);
    if (a > 0) d.setBlock(c, 0, Mat::identity(x.algebra->field(), a));
    diffs.push_back(ModHom(comps[static_cast<std::size_t>(p - lo)], comps[static_cast<std::size_t>(p - lo + 1)], d));
  }
  return makeComplex(x.algebra, lo, std::move(comps), std::move(diffs));
}

ComplexMap functorF(const GradedMap& f) {
  ComplexMap g{functorF(f.source), functorF(f.target), {}};
  auto [lo, hi] = span(g.source, g.target);
  for (int p = lo; p <= hi; ++p)
    g.components.emplace(p, ModHom(g.source.at(p), g.target.at(p), blockDiag(f.at(p).matrix(), f.at(p - 1).matrix())));
  return g;
}

GradedModule functorU(const ComplexObj& c) { return {c.algebra, c.lo, c.components}; }

GradedMap functorU(const ComplexMap& f) { return {functorU(f.source), functorU(f.target), f.components}; }

ComplexObj shiftSigma(const ComplexObj& c) {
  std::vector<ModHom> diffs;
  for (const auto& d : c.differentials) diffs.push_back(scaled(d, Scalar(d.source().field(), -1)));
  return makeComplex(c.algebra, c.lo - 1, c.components, std::move(diffs));
}

ComplexMap shiftSigma(const ComplexMap& f) {
  ComplexMap g{shiftSigma(f.source), shiftSigma(f.target), {}};
  for (const auto& [p, h] : f.components) g.components.emplace(p - 1, h);
  return g;
}

GradedModule shiftGraded(const GradedModule& x) { return {x.algebra, x.lo - 1, x.components}; }

GradedMap unitFU(const GradedModule& x) {
  GradedModule ufx = functorU(functorF(x));
  GradedMap m{x, ufx, {}};
  const Field& f = x.algebra->field();
  for (int p = x.lo; p <= x.hi(); ++p) {
    const std::size_t a = x.at(p).dim(), b = x.at(p - 1).dim();
    Mat inc(f, a + b, a);
    if (a > 0) inc.setBlock(0, 0, Mat::identity(f, a));
    m.components.emplace(p, ModHom(x.at(p), ufx.at(p), inc));
  }
  return m;
}

ComplexMap counitFU(const ComplexObj& c) {
  ComplexObj fuc = functorF(functorU(c));
  ComplexMap m{fuc, c, {}};
  const Field& f = c.algebra->field();
  for (int p = c.lo; p <= c.hi(); ++p) {
    const std::size_t a = c.at(p).dim(), b = c.at(p - 1).dim();
    Mat e(f, a, a + b);
    if (a > 0) e.setBlock(0, 0, Mat::identity(f, a));
    if (a > 0 && b > 0) e.setBlock(0, a, c.d(p - 1).matrix());
    m.components.emplace(p, ModHom(fuc.at(p), c.at(p), e));
  }
  return m;
}

ComplexMap unitUSigmaF(const ComplexObj& c) {
  ComplexObj g = shiftSigma(functorF(functorU(c)));
  ComplexMap m{c, g, {}};
  const Field& f = c.algebra->field();
  for (int p = c.lo; p <= c.hi(); ++p) {
    // C^p -> C^{p+1} + C^p, c -> (-d c, c)
    const std::size_t a = c.at(p).dim(), up = c.at(p + 1).dim();
    Mat u(f, up + a, a);
    if (a > 0 && up > 0) u.setBlock(0, 0, c.d(p).matrix().scaled(Scalar(f, -1)));
    if (a > 0) u.setBlock(up, 0, Mat::identity(f, a));
    m.components.emplace(p, ModHom(c.at(p), g.at(p), u));
  }
  return m;
}

GradedMap counitUSigmaF(const GradedModule& x) {
  GradedModule usfx = functorU(shiftSigma(functorF(x)));
  GradedMap m{usfx, x, {}};
  const Field& f = x.algebra->field();
  for (int p = x.lo; p <= x.hi(); ++p) {
    const std::size_t a = x.at(p + 1).dim(), b = x.at(p).dim();
    Mat proj(f, b, a + b);
    if (b > 0) proj.setBlock(0, a, Mat::identity(f, b));
    m.components.emplace(p, ModHom(usfx.at(p), x.at(p), proj));
  }
  return m;
}

// ---------------------------------------------------------------- contractibility

ContractibleResult isContractible(const ComplexObj& c) {
  ContractibleResult r;
  if (c.components.empty()) {
    r.verdict = Verdict::Yes;
    return r;
  }
  const Field& f = c.algebra->field();
  const int lo = c.lo, hi = c.hi();
  // unknowns s^p for p in [lo, hi + 1]; s^p: C^p -> C^{p-1}
  std::map<int, std::vector<ModHom>> bases;
  std::map<int, std::size_t> varOffset, eqOffset;
  std::size_t vars = 0, eqs = 0;
  for (int p = lo; p <= hi + 1; ++p) {
    bases[p] = homSpace(c.at(p), c.at(p - 1));
    varOffset[p] = vars;
    vars += bases[p].size();
  }
  for (int p = lo; p <= hi; ++p) {
    eqOffset[p] = eqs;
    eqs += c.at(p).dim() * c.at(p).dim();
  }
  Mat a(f, eqs, vars), rhs(f, eqs, 1);
  for (int p = lo; p <= hi; ++p) rhs.setBlock(eqOffset[p], 0, Mat::identity(f, c.at(p).dim()).vec());
  for (int p = lo; p <= hi + 1; ++p)
    for (std::size_t k = 0; k < bases[p].size(); ++k) {
      const Mat& h = bases[p][k].matrix();
      const std::size_t col = varOffset[p] + k;
      // d^{p-1} s^p in equation p; s^p d^{p-1} in equation p - 1
      if (p <= hi) a.setBlock(eqOffset[p], col, (c.d(p - 1).matrix() * h).vec());
      if (p - 1 >= lo) a.setBlock(eqOffset[p - 1], col, (h * c.d(p - 1).matrix()).vec());
    }
  auto sol = solveExact(a, rhs);
  if (!sol) return r;
  r.verdict = Verdict::Yes;
  for (int p = lo; p <= hi + 1; ++p) {
    Mat s(f, c.at(p - 1).dim(), c.at(p).dim());
    for (std::size_t k = 0; k < bases[p].size(); ++k)
      s = s + bases[p][k].matrix().scaled(sol->at(varOffset[p] + k, 0));
    r.homotopy.emplace(p, ModHom(c.at(p), c.at(p - 1), s));
  }
  for (int p = lo; p <= hi; ++p) {
    Mat lhs = c.d(p - 1).matrix() * r.homotopy.at(p).matrix() + r.homotopy.at(p + 1).matrix() * c.d(p).matrix();
    if (!lhs.isIdentity()) throw VerificationFailure("contracting homotopy fails in degree " + std::to_string(p));
  }
  return r;
}

// ---------------------------------------------------------------- reports

namespace {

bool sameGraded(const GradedModule& a, const GradedModule& b) {
  auto [lo, hi] = span(a, b);
  for (int p = lo; p <= hi; ++p)
    if (!a.at(p).sameAs(b.at(p))) return false;
  return true;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  GradedMap h{f.source, g.target, {}};
  auto [lo, hi] = span(f.source, g.target);
  for (int p = lo; p <= hi; ++p) h.components.emplace(p, gorwb::compose(g.at(p), f.at(p)));
  return h;
}

ComplexMap compose(const ComplexMap& g, const ComplexMap& f) {
  ComplexMap h{f.source, g.target, {}};
  auto [lo, hi] = span(f.source, g.target);
  for (int p = lo; p <= hi; ++p) h.components.emplace(p, gorwb::compose(g.at(p), f.at(p)));
  return h;
}

// Componentwise exactness of 0 -> a -> b -> c -> 0 given by i, q.
bool exactAt(const ModHom& i, const ModHom& q) {
  return i.isMono() && q.isEpi() && (q.matrix() * i.matrix()).isZero() &&
         i.matrix().rank() + q.matrix().rank() == q.source().dim();
}

bool allProjective(const ComplexObj& c) {
  for (const auto& m : c.components)
    if (!isProjective(m)) return false;
  return true;
}

}  // namespace

FUReport checkFrobeniusPairFU(const std::vector<GradedModule>& graded, const std::vector<ComplexObj>& complexes) {
  FUReport r;
  r.gradedCount = graded.size();
  r.complexCount = complexes.size();
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    r.failures.push_back(what);
  };
  for (std::size_t n = 0; n < graded.size(); ++n) {
    const GradedModule& x = graded[n];
    const std::string tag = "graded #" + std::to_string(n);
    ComplexObj fx = functorF(x);
    // (F, U) at X: eps_{F X} o F(eta_X) = id
    GradedMap eta = unitFU(x);
    ComplexMap feta = functorF(eta);
    ComplexMap epsFx = counitFU(fx);
    if (!feta.commutes() || !epsFx.commutes()) fail(r.chainMapsValid, tag + ": F(eta) or eps is not a chain map");
    if (!isIdentity(compose(epsFx, feta))) fail(r.trianglesFU, tag + ": (eps F)(F eta) != id");
    for (int p = x.lo; p <= x.hi(); ++p)
      if (!eta.at(p).isMono()) fail(r.unitMono, tag + ": unit of (F, U) not mono");
    // (U, Sigma F) at X: Sigma F(eps_X) o eta_{Sigma F X} = id
    ComplexObj sfx = shiftSigma(fx);
    ComplexMap etaS = unitUSigmaF(sfx);
    ComplexMap sfEps = shiftSigma(functorF(counitUSigmaF(x)));
    if (!etaS.commutes() || !sfEps.commutes()) fail(r.chainMapsValid, tag + ": unit of (U, Sigma F) is not a chain map");
    if (!isIdentity(compose(sfEps, etaS))) fail(r.trianglesUSigmaF, tag + ": (Sigma F eps)(eta Sigma F) != id");
    GradedMap epsX = counitUSigmaF(x);
    for (int p = x.lo; p <= x.hi(); ++p)
      if (!epsX.at(p).isEpi()) fail(r.counitEpi, tag + ": counit of (U, Sigma F) not epic");
    // F exact on 0 -> rad X -> X -> top X -> 0
    GradedMap inc{{}, x, {}}, proj{x, {}, {}};
    std::vector<Module> rads, tops;
    for (const auto& m : x.components) {
      rads.push_back(submodule(m, radicalOf(m)).module);
      tops.push_back(quotient(m, radicalOf(m)).module);
    }
    inc.source = makeGraded(x.algebra, x.lo, rads);
    proj.target = makeGraded(x.algebra, x.lo, tops);
    for (int p = x.lo; p <= x.hi(); ++p) {
      const Module& m = x.at(p);
      inc.components.emplace(p, submodule(m, radicalOf(m)).inclusion);
      proj.components.emplace(p, quotient(m, radicalOf(m)).projection);
    }
    ComplexMap fi = functorF(inc), fp = functorF(proj);
    for (int p = fx.lo; p <= fx.hi(); ++p)
      if (!exactAt(fi.at(p), fp.at(p))) fail(r.exactF, tag + ": F not exact in degree " + std::to_string(p));
    // degreewise projective X: F(X) contractible with projective components
    bool projective = true;
    for (const auto& m : x.components) projective &= isProjective(m);
    if (projective && (!allProjective(fx) || isContractible(fx).verdict != Verdict::Yes))
      fail(r.projectivesToContractible, tag + ": F(P) not a contractible complex of projectives");
    if (isContractible(fx).verdict != Verdict::Yes) fail(r.projectivesToContractible, tag + ": F(X) not contractible");
  }
  for (std::size_t n = 0; n < complexes.size(); ++n) {
    const ComplexObj& c = complexes[n];
    const std::string tag = "complex #" + std::to_string(n);
    // (F, U) at C: U(eps_C) o eta_{U C} = id
    ComplexMap eps = counitFU(c);
    if (!eps.commutes()) fail(r.chainMapsValid, tag + ": counit of (F, U) is not a chain map");
    if (!isIdentity(compose(functorU(eps), unitFU(functorU(c))))) fail(r.trianglesFU, tag + ": (U eps)(eta U) != id");
    // (U, Sigma F) at C: eps_{U C} o U(eta_C) = id
    ComplexMap eta = unitUSigmaF(c);
    if (!eta.commutes()) fail(r.chainMapsValid, tag + ": unit of (U, Sigma F) is not a chain map");
    if (!isIdentity(compose(counitUSigmaF(functorU(c)), functorU(eta))))
      fail(r.trianglesUSigmaF, tag + ": (eps U)(U eta) != id");
    if (!sameGraded(functorU(shiftSigma(c)), shiftGraded(functorU(c))))
      fail(r.shiftCompatible, tag + ": U Sigma differs from the degree shift");
    // U exact on the brutal truncation 0 -> sigma_{>=k} C -> C -> sigma_{<k} C -> 0
    if (!c.components.empty()) {
      const int k = c.lo + static_cast<int>(c.components.size()) / 2;
      for (int p = c.lo; p <= c.hi(); ++p) {
        const Module& m = c.at(p);
        const bool upper = p >= k;
        ModHom i = upper ? ModHom::identity(m) : ModHom::zero(Module::zero(c.algebra), m);
        ModHom q = upper ? ModHom::zero(m, Module::zero(c.algebra)) : ModHom::identity(m);
        if (!exactAt(i, q)) fail(r.exactU, tag + ": U not exact in degree " + std::to_string(p));
      }
    }
  }
  return r;
}

ComponentwiseGP componentwiseGpCheck(const ComplexObj& c, const GorensteinProfile& profile) {
  if (!profile.certified()) throw PreconditionFailed("componentwise GP check needs a certified profile: " + profile.toString());
  ComponentwiseGP r;
  for (int p = c.lo; p <= c.hi(); ++p) {
    GPResult g = isGorensteinProjective(c.at(p), profile);
    r.componentwiseGP &= g.verdict == Verdict::Yes;
    r.components.emplace_back(p, std::move(g));
  }
  r.note =
      "GP verdict for the complex obtained through the faithful Frobenius functor U: a complex is GP in C(A-mod) "
      "iff each component is GP; in the product category GP objects are exactly componentwise GP sequences";
  return r;
}

}  // namespace gorwb
