#include "run.hpp"

#include <filesystem>
#include <functional>
#include <map>

#include "gorwb/corpus.hpp"
#include "gorwb/io.hpp"
#include "gorwb/suite.hpp"

namespace gorwb::cli {

namespace fs = std::filesystem;

namespace {

std::string str(std::size_t n) { return std::to_string(n); }
std::string str(const std::optional<std::size_t>& n) { return n ? std::to_string(*n) : "unknown"; }
std::string yesNo(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::size_t>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string fieldName(const Field& f) { return f.isRational() ? "Q" : "F" + std::to_string(f.characteristic()); }

// Input problems that are not parse errors but still mean "bad input".
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string extensionOf(const std::string& path) { return fs::path(path).extension().string(); }

void requireInputs(const RunConfig& c, std::size_t n, const char* what) {
  if (c.inputPaths.size() != n) throw UsageError(c.command + " expects " + what);
}

std::string summandLabels(const Algebra& a, const std::vector<std::size_t>& summands, const char* prefix) {
  std::string s;
  for (std::size_t k = 0; k < summands.size(); ++k)
    s += (k ? "+" : "") + std::string(prefix) + std::to_string(a.idempotentClasses()[summands[k]] + 1);
  return s.empty() ? "0" : s;
}

struct Context {
  const RunConfig& config;
  io::Loader loader;
  Report report;

  AlgebraPtr algebraInput(const std::string& path) {
    const std::string ext = extensionOf(path);
    if (ext != ".alg" && ext != ".quiver") throw UsageError(path + ": expected an .alg or .quiver file");
    return loader.algebra(path);
  }
  Module moduleInput(const std::string& path) {
    if (extensionOf(path) != ".mod") throw UsageError(path + ": expected a .mod file");
    return loader.module(path);
  }
  GorensteinProfile profile(const AlgebraPtr& a) { return gorensteinProfile(a, config.bound); }
  std::vector<LabeledModule> corpus(const AlgebraPtr& a) { return moduleCorpus(a, 8, config.seed); }
};

// ---------------------------------------------------------------- commands

void algebraInfo(Context& cx) {
  requireInputs(cx.config, 1, "one algebra file");
  AlgebraPtr a = cx.algebraInput(cx.config.inputPaths[0]);
  Report& r = cx.report;
  r.field("field", fieldName(a->field()));
  r.field("dim", str(a->dim()));
  std::string basis;
  for (const auto& l : a->labels()) basis += (basis.empty() ? "" : " ") + l;
  r.field("basis", basis);
  r.field("provenance", a->provenance().kind + (a->provenance().description.empty() ? "" : ": " + a->provenance().description));
  r.field("radical dim", str(a->radical().cols()));
  r.field("Loewy length", str(radicalNilpotencyIndex(*a)));
  if (!a->hasIdempotents()) {
    r.notes.push_back("no idempotent data: simple, projective and injective modules are not available");
    return;
  }
  auto s = structuralModules(a);
  r.field("isoclasses of simples", str(s.simples.size()));
  Table& t = r.table("indecomposable projectives and injectives", {"class", "dim S", "dim P", "dim I", "P injective"});
  for (std::size_t c = 0; c < s.simples.size(); ++c)
    t.rows.push_back({str(c + 1), str(s.simples[c].dim()), str(s.projectives[c].module.dim()),
                      str(s.injectives[c].dim()), yesNo(isInjective(s.projectives[c].module))});
}

void moduleInfo(Context& cx) {
  requireInputs(cx.config, 1, "one module file");
  Module m = cx.moduleInput(cx.config.inputPaths[0]);
  Report& r = cx.report;
  r.field("dim", str(m.dim()));
  r.field("dimension vector", join(dimensionVector(m)));
  r.field("top", join(topVector(m)));
  r.field("radical series", join(radicalSeries(m)));
  r.field("projective", yesNo(isProjective(m)));
  r.field("injective", yesNo(isInjective(m)));
  r.field("pd", finDimension(m, DimKind::Pd, cx.config.bound).toString());
  r.field("id", finDimension(m, DimKind::Id, cx.config.bound).toString());
}

void profileCmd(Context& cx) {
  requireInputs(cx.config, 1, "one algebra file");
  AlgebraPtr a = cx.algebraInput(cx.config.inputPaths[0]);
  Report& r = cx.report;
  GorensteinProfile p;
  try {
    p = cx.profile(a);
  } catch (const VerificationFailure& e) {
    r.check("spdi = sidp", false, e.what());
    return;
  }
  r.field("profile", p.toString());
  r.field("bound", str(p.bound));
  Table& t = r.table("per class", {"class", "pd I", "id P"});
  for (std::size_t c = 0; c < p.injectivePd.size(); ++c)
    t.rows.push_back({str(c + 1), p.injectivePd[c].toString(),
                      c < p.projectiveId.size() ? p.projectiveId[c].toString() : ""});
  if (p.spdi.finite() && p.sidp.finite())
    r.check("spdi = sidp", p.spdi == p.sidp, "spdi=" + p.spdi.toString() + " sidp=" + p.sidp.toString());
}

void gorensteinDimCmd(Context& cx, bool injective) {
  requireInputs(cx.config, 1, "one module file");
  Module m = cx.moduleInput(cx.config.inputPaths[0]);
  Report& r = cx.report;
  GorensteinProfile p = cx.profile(m.algebra());
  r.field("profile", p.toString());
  const char* name = injective ? "Gid" : "Gpd";
  if (!p.certified()) {
    r.field(name, "unknown");
    r.notes.push_back("the algebra is not certified Gorenstein within the bound; no GP test is available");
    return;
  }
  auto v = injective ? gid(m, p) : gpd(m, p);
  r.field(name, str(v));
  if (!injective) {
    GPResult gp = isGorensteinProjective(m, p);
    r.field("Gorenstein projective", toString(gp.verdict));
  }
  r.check(std::string(name) + " bounded by the Gorenstein dimension", v && *v <= *p.gorensteinDim,
          str(v) + " <= " + str(*p.gorensteinDim));
}

void resolveCmd(Context& cx) {
  requireInputs(cx.config, 1, "one module file");
  Module m = cx.moduleInput(cx.config.inputPaths[0]);
  const bool inj = cx.config.injective;
  Resolution res = resolve(m, inj ? Direction::Injective : Direction::Projective, cx.config.bound);
  verifyResolution(res);
  Report& r = cx.report;
  r.field("direction", inj ? "injective" : "projective");
  r.field(inj ? "id" : "pd", res.complete ? str(res.length() == 0 ? 0 : res.length() - 1)
                                           : ">= " + str(cx.config.bound));
  const Algebra& labelsFrom = inj ? *m.algebra()->opposite() : *m.algebra();
  Table& t = r.table(inj ? "injective coresolution" : "projective resolution",
                     {"k", inj ? "I^k" : "P_k", "dim", inj ? "cosyzygy dim" : "syzygy dim"});
  for (std::size_t k = 0; k < res.length(); ++k)
    t.rows.push_back({str(k), summandLabels(labelsFrom, res.projectives[k].summands, inj ? "I" : "P"),
                      str(res.terms[k].dim()), k + 1 < res.syzygies.size() ? str(res.syzygies[k + 1].dim()) : "0"});
  r.check("resolution is exact and minimal", true);
}

void totalizeCmd(Context& cx) {
  requireInputs(cx.config, 1, "one module file");
  Module m = cx.moduleInput(cx.config.inputPaths[0]);
  GorensteinProfile p = cx.profile(m.algebra());
  Report& r = cx.report;
  r.field("profile", p.toString());
  Totalization t = totalizeQuasiBicomplex(m, p);
  r.field("total complex support", std::to_string(t.total.lo) + ".." + std::to_string(t.total.hi()));
  r.field("dim Z^0", str(t.cycles.module.dim()));
  r.field("dim B^0", str(t.boundaries.module.dim()));
  r.field("pd B^0", t.pdBoundaries.toString());
  r.field("Gpd M", str(t.gpdIndependent));
  for (const auto& c : t.checks) r.check("quasi-bicomplex totalization: " + c, true);
}

std::pair<std::string, std::string> frobeniusRows(const FrobeniusVerdict& v) {
  return {toString(v.verdict), v.detail};
}

void frobeniusVerify(Context& cx) {
  requireInputs(cx.config, 1, "one .ext or .bimod file");
  const std::string& path = cx.config.inputPaths[0];
  Report& r = cx.report;
  if (extensionOf(path) == ".bimod") {
    Bimodule b = cx.loader.bimodule(path);
    auto [verdict, detail] = frobeniusRows(isFrobeniusBimodule(b, cx.config.seed));
    r.field("Frobenius bimodule", verdict);
    if (!detail.empty()) r.field("detail", detail);
    return;
  }
  if (extensionOf(path) != ".ext") throw UsageError(path + ": expected an .ext or .bimod file");
  RingExtension e = cx.loader.extension(path);
  FrobeniusVerdict v = isFrobeniusExtension(e, cx.config.seed);
  r.field("Frobenius extension", toString(v.verdict));
  if (!v.detail.empty()) r.field("detail", v.detail);
  if (v.verdict == Verdict::Inconclusive) {
    r.check("Frobenius verdict decided", false, v.detail);
    return;
  }
  if (v.verdict != Verdict::Yes) return;
  r.check("bimodule isomorphism witness verified", v.witness.has_value());
  Table& t = r.table("Ind vs Coind", {"module", "dim Ind", "Ind = Coind"});
  bool all = true;
  for (const auto& lm : cx.corpus(e.base)) {
    Module ind = induce(e, lm.module);
    Verdict iso = isIsomorphic(ind, coinduce(e, lm.module), cx.config.seed).verdict;
    all = all && iso == Verdict::Yes;
    t.rows.push_back({lm.label, str(ind.dim()), toString(iso)});
  }
  r.check("Ind = Coind for a Frobenius extension", all);
}

void transferCheck(Context& cx) {
  requireInputs(cx.config, 1, "one .ext file");
  RingExtension e = cx.loader.extension(cx.config.inputPaths[0]);
  TransferTable tt = verifyGpdTransfer(e, cx.corpus(e.total), cx.corpus(e.base), cx.config.bound, cx.config.seed);
  Report& r = cx.report;
  r.field("Ind faithful", yesNo(tt.indFaithful));
  Table& t = r.table("Gpd transfer", {"functor", "module", "Gpd", "Gpd of image", "equal"});
  for (const auto& row : tt.rows)
    t.rows.push_back({row.direction, row.label, str(row.gpdSource), str(row.gpdImage), yesNo(row.equal)});
  r.check("Gpd transfer along faithful Frobenius functor", tt.allEqual);
}

void glgdimCheck(Context& cx) {
  requireInputs(cx.config, 1, "one .ext file");
  RingExtension e = cx.loader.extension(cx.config.inputPaths[0]);
  GlobalDimTransfer g = globalGdimTransfer(e, cx.config.bound);
  Report& r = cx.report;
  r.field("base", g.base.toString());
  r.field("total", g.total.toString());
  r.check("gl.Gdim invariance under a faithful Frobenius pair", g.equal);
}

void counterexampleCmd(Context& cx) {
  requireInputs(cx.config, 3, "B.alg B'.alg M.mod (M over B', not Gorenstein projective)");
  AlgebraPtr b = cx.algebraInput(cx.config.inputPaths[0]);
  AlgebraPtr bp = cx.algebraInput(cx.config.inputPaths[1]);
  Module bad = cx.moduleInput(cx.config.inputPaths[2]);
  ProductCounterexample pc = counterexampleProduct(b, bp, bad, cx.config.bound);
  Report& r = cx.report;
  r.field("product dim", str(pc.product->dim()));
  r.field("dim X", str(pc.x.dim()));
  r.field("dim Pr(X)", str(pc.prX.dim()));
  r.field("Pr(X) Gorenstein projective", toString(pc.prGP.verdict));
  r.field("X Gorenstein projective", toString(pc.xGP.verdict));
  r.field("(Pr, Inc) unit mono", yesNo(pc.prInc.unitMonoAll));
  r.field("(Inc, Pr) counit epic", yesNo(pc.incPr.counitEpiAll));
  r.check("adjunction triangle identities for Pr and Inc", pc.prInc.trianglesHold && pc.incPr.trianglesHold);
  r.check("faithfulness is necessary: Pr(X) GP while X is not", pc.certified);
}

Adjunction adjunctionInput(Context& cx, std::vector<LabeledModule>& source, std::vector<LabeledModule>& target) {
  const std::string& path = cx.config.inputPaths[0];
  if (extensionOf(path) == ".bimod") {
    Bimodule b = cx.loader.bimodule(path);
    source = cx.corpus(b.right());
    target = cx.corpus(b.left());
    return tensorHom(b);
  }
  if (extensionOf(path) != ".ext") throw UsageError(path + ": expected an .ext or .bimod file");
  RingExtension e = cx.loader.extension(path);
  source = cx.corpus(e.base);
  target = cx.corpus(e.total);
  return indRes(e);
}

void triequivCheck(Context& cx) {
  requireInputs(cx.config, 1, "one .ext or .bimod file");
  std::vector<LabeledModule> source, target;
  Adjunction adj = adjunctionInput(cx, source, target);
  TriEquivReport t = triEquivConditions(adj, source, target, cx.config.bound);
  Report& r = cx.report;
  r.field("adjunction", adj.name);
  r.field("pd Cok(eta) <= 1 and Ker(eps) projective on GP objects", yesNo(t.stableGP));
  r.field("Cok(eta), Ker(eps) of finite pd", yesNo(t.singularity));
  r.field("Cok(eta), Ker(eps) of finite Gpd", yesNo(t.defect));
  r.field("Cok(eta), Ker(eps) projective", yesNo(t.allProjective));
  r.field("stable Hom dimensions preserved", yesNo(t.stableHomMatches));
  Table& d = r.table("defects", {"object", "module", "dim", "GP", "pd", "Gpd"});
  for (const auto& x : t.defects)
    d.rows.push_back({x.sourceSide ? "Cok(eta)" : "Ker(eps)", x.label, str(x.dim), yesNo(x.objectGP), x.pd.toString(),
                      str(x.gpd)});
  Table& s = r.table("stable Hom", {"side", "pair", "before", "after"});
  for (const auto& x : t.stableHom)
    s.rows.push_back({x.sourceSide ? "source" : "target", x.pair, str(x.before), str(x.after)});
  r.check("stable Hom dimensions preserved when Cok(eta) and Ker(eps) are projective",
          !t.allProjective || t.stableHomMatches);
}

void complexCheck(Context& cx) {
  if (cx.config.inputPaths.empty()) throw UsageError("complex-check expects .cpx and/or .gr files");
  std::vector<std::pair<std::string, ComplexObj>> complexes;
  std::vector<std::pair<std::string, GradedModule>> graded;
  for (const auto& p : cx.config.inputPaths) {
    const std::string ext = extensionOf(p);
    const std::string name = fs::path(p).stem().string();
    if (ext == ".cpx")
      complexes.emplace_back(name, cx.loader.complex(p));
    else if (ext == ".gr")
      graded.emplace_back(name, cx.loader.graded(p));
    else
      throw UsageError(p + ": expected a .cpx or .gr file");
  }
  std::vector<ComplexObj> cs;
  std::vector<GradedModule> gs;
  for (const auto& [n, c] : complexes) cs.push_back(c);
  for (const auto& [n, g] : graded) gs.push_back(g);
  FUReport fu = checkFrobeniusPairFU(gs, cs);
  Report& r = cx.report;
  r.check("(F, U) triangle identities", fu.trianglesFU);
  r.check("(U, Sigma F) triangle identities", fu.trianglesUSigmaF);
  r.check("units and counits are chain maps", fu.chainMapsValid);
  r.check("F and U are exact", fu.exactF && fu.exactU);
  r.check("F sends projectives to contractible complexes", fu.projectivesToContractible);
  r.check("U Sigma is the degree shift", fu.shiftCompatible);
  for (const auto& f : fu.failures) r.notes.push_back(f);

  Table& gt = r.table("graded modules", {"name", "support", "dim", "F(X) contractible"});
  bool contractible = true;
  for (const auto& [n, g] : graded) {
    const bool ok = isContractible(functorF(g)).verdict == Verdict::Yes;
    contractible = contractible && ok;
    gt.rows.push_back({n, std::to_string(g.lo) + ".." + std::to_string(g.hi()), str(g.totalDim()), yesNo(ok)});
  }
  if (!graded.empty()) r.check("F(X) is contractible", contractible);

  Table& ct = r.table("complexes", {"name", "support", "contractible", "componentwise GP"});
  std::map<const Algebra*, GorensteinProfile> profiles;
  bool anyUncertified = false;
  for (const auto& [n, c] : complexes) {
    auto it = profiles.find(c.algebra.get());
    if (it == profiles.end()) it = profiles.emplace(c.algebra.get(), cx.profile(c.algebra)).first;
    std::string cw = "unknown";
    if (it->second.certified())
      cw = yesNo(componentwiseGpCheck(c, it->second).componentwiseGP);
    else
      anyUncertified = true;
    ct.rows.push_back({n, std::to_string(c.lo) + ".." + std::to_string(c.hi()),
                       toString(isContractible(c).verdict), cw});
  }
  if (!complexes.empty())
    r.notes.push_back("the GP verdict for a complex is the componentwise one, read off through Gpd transfer along U");
  if (anyUncertified) r.notes.push_back("some algebras are not certified Gorenstein within the bound");
}

void suiteCmd(Context& cx) {
  std::string dir = cx.config.corpusDir;
  if (!cx.config.inputPaths.empty()) {
    requireInputs(cx.config, 1, "at most one corpus directory");
    dir = cx.config.inputPaths[0];
  }
  Corpus corpus = loadCorpus(dir);
  Report& r = cx.report;
  r.field("corpus", std::to_string(corpus.algebras.size()) + " algebras, " + std::to_string(corpus.complexes.size()) +
                        " complexes, " + std::to_string(corpus.extensions.size()) + " extensions");
  Table& t = r.table("details", {"criterion", "line"});
  for (const auto& c : runSuite(corpus, {cx.config.bound, cx.config.seed})) {
    r.check(std::to_string(c.id) + " " + c.title, c.passed);
    for (const auto& line : c.details) t.rows.push_back({std::to_string(c.id), line});
  }
}

bool isInputError(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidAlgebra*>(&e) ||
         dynamic_cast<const InvalidModule*>(&e) || dynamic_cast<const InfiniteDimensional*>(&e) ||
         dynamic_cast<const MalformedRelation*>(&e) || dynamic_cast<const InputShapeError*>(&e) ||
         dynamic_cast<const NotAGroup*>(&e) || dynamic_cast<const UnsupportedAlgebra*>(&e) ||
         dynamic_cast<const AlgebraMismatch*>(&e) || dynamic_cast<const PreconditionFailed*>(&e) ||
         dynamic_cast<const ProfileNotCertified*>(&e);
}

using Handler = std::function<void(Context&)>;

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> list = {
      {"algebra-info", algebraInfo},
      {"module-info", moduleInfo},
      {"profile", profileCmd},
      {"gpd", [](Context& cx) { gorensteinDimCmd(cx, false); }},
      {"gid", [](Context& cx) { gorensteinDimCmd(cx, true); }},
      {"resolve", resolveCmd},
      {"totalize", totalizeCmd},
      {"frobenius-verify", frobeniusVerify},
      {"transfer-check", transferCheck},
      {"glgdim-check", glgdimCheck},
      {"counterexample-product", counterexampleCmd},
      {"triequiv-check", triequivCheck},
      {"complex-check", complexCheck},
      {"suite", suiteCmd},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& commandNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, h] : handlers()) out.push_back(n);
    return out;
  }();
  return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Handler* handler = nullptr;
  for (const auto& [n, h] : handlers())
    if (n == config.command) handler = &h;
  if (!handler) {
    err << "error: unknown command '" << config.command << "'\n";
    return 2;
  }
  if (config.bound < 1) {
    err << "error: --bound must be at least 1\n";
    return 2;
  }
  Context cx{config, {}, {}};
  cx.report.command = config.command;
  try {
    (*handler)(cx);
  } catch (const VerificationFailure& e) {
    // an identity the command relies on failed: report it as a property failure
    cx.report.check("internal identity", false, e.what());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (!isInputError(e)) {
      cx.report.check("computation completed", false, e.what());
    } else {
      const bool precondition =
          dynamic_cast<const PreconditionFailed*>(&e) || dynamic_cast<const ProfileNotCertified*>(&e);
      err << (precondition ? "precondition not met: " : "input error: ") << e.what() << "\n";
      return 2;
    }
  } catch (const fs::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
  render(cx.report, config.format, out);
  if (cx.report.allPassed()) return 0;
  for (const auto& c : cx.report.checks)
    if (!c.passed) err << "property failed: " << c.statement << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  return 1;
}

}  // namespace gorwb::cli
