#include "gorwb/corpus.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "gorwb/io.hpp"

namespace gorwb {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

template <class T>
const T& byName(const std::vector<T>& items, const std::string& name, const char* kind) {
  for (const auto& x : items)
    if (x.name == name) return x;
  throw PreconditionFailed(std::string("unknown ") + kind + " '" + name + "'");
}

bool isoToAny(const Module& m, const std::vector<LabeledModule>& list, std::uint64_t seed) {
  for (const auto& x : list)
    if (x.module.dim() == m.dim() && isIsomorphic(m, x.module, seed).verdict == Verdict::Yes) return true;
  return false;
}

std::string sanitize(const std::string& label) {
  std::string out;
  for (char ch : label) out += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return out;
}

Quiver a2Quiver() { return {2, {{0, 1, "a"}}, {}}; }
Quiver a3Quiver() { return {3, {{0, 1, "a"}, {1, 2, "b"}}, {}}; }
Quiver nakayamaQuiver() { return {2, {{0, 1, "a"}, {1, 0, "b"}}, {{{{"a", "b"}, "1"}}, {{{"b", "a"}, "1"}}}}; }

}  // namespace

AlgebraPtr Corpus::algebra(const std::string& name) const { return byName(algebras, name, "algebra").algebra; }

const std::vector<LabeledModule>& Corpus::modulesOf(const std::string& algebra) const {
  auto it = modules.find(algebra);
  if (it == modules.end()) throw PreconditionFailed("no modules for algebra '" + algebra + "'");
  return it->second;
}

const NamedExtension& Corpus::extension(const std::string& name) const {
  return byName(extensions, name, "extension");
}

const NamedBimodule& Corpus::bimodule(const std::string& name) const { return byName(bimodules, name, "bimodule"); }

std::vector<LabeledModule> moduleCorpus(const AlgebraPtr& a, std::size_t minimum, std::uint64_t seed) {
  auto s = structuralModules(a);
  std::vector<LabeledModule> candidates;
  for (std::size_t c = 0; c < s.simples.size(); ++c) {
    const std::string n = std::to_string(c + 1);
    candidates.push_back({"S" + n, s.simples[c]});
    candidates.push_back({"P" + n, s.projectives[c].module});
    candidates.push_back({"I" + n, s.injectives[c]});
  }
  candidates.push_back({"A", regularModule(a)});
  for (std::size_t c = 0; c < s.projectives.size(); ++c) {
    const Module& p = s.projectives[c].module;
    const std::string n = std::to_string(c + 1);
    Mat rad = radicalOf(p);
    if (rad.cols() > 0) candidates.push_back({"radP" + n, submodule(p, rad).module});
    Mat soc = socleOf(p);
    if (soc.cols() > 0 && soc.cols() < p.dim()) candidates.push_back({"P" + n + "/soc", quotient(p, soc).module});
  }

  std::vector<LabeledModule> out;
  for (auto& x : candidates)
    if (!isoToAny(x.module, out, seed)) out.push_back(std::move(x));
  const std::vector<LabeledModule> base = out;
  while (out.size() < minimum) {
    const std::size_t before = out.size();
    const std::vector<LabeledModule> snapshot = out;
    for (const auto& m : snapshot) {
      for (const auto& b : base) {
        if (out.size() >= minimum) break;
        Module sum = directSum(m.module, b.module);
        if (!isoToAny(sum, out, seed)) out.push_back({m.label + "+" + b.label, sum});
      }
    }
    if (out.size() == before) break;
  }
  return out;
}

Corpus buildCorpus(std::uint64_t seed) {
  Corpus c;
  auto add = [&](const std::string& name, AlgebraPtr a, std::optional<Quiver> q = std::nullopt) {
    c.algebras.push_back({name, std::move(a), std::move(q)});
    return c.algebras.back().algebra;
  };
  const Field f2(2), f3(3), f7(7), q(0);
  auto k2 = add("f2", fieldAlgebra(f2));
  auto k3 = add("f3", fieldAlgebra(f3));
  auto k7 = add("f7", fieldAlgebra(f7));
  add("q", fieldAlgebra(q));

  auto t2 = truncatedExtensionOf(k2, 2);
  add("f2_trunc2", t2.total);
  auto t3 = truncatedExtensionOf(k2, 3);
  add("f2_trunc3", t3.total);

  auto c2 = add("f2_c2", groupAlgebra(cyclicGroupTable(2), f2));
  auto c3 = add("f3_c3", groupAlgebra(cyclicGroupTable(3), f3));
  auto s3 = add("f7_s3", groupAlgebra(symmetricGroup3Table(), f7));

  auto a2 = add("a2", pathAlgebra(a2Quiver(), f2), a2Quiver());
  add("a3", pathAlgebra(a3Quiver(), f2), a3Quiver());
  add("nakayama2", pathAlgebra(nakayamaQuiver(), f2), nakayamaQuiver());

  auto a2t = truncatedExtensionOf(a2, 2);
  add("a2_trunc2", a2t.total);
  auto mat = add("mat2_trunc2", matrixAlgebra(t2.total, 2));
  add("prod_f2_a2", productAlgebra(k2, a2));

  auto unitOver = [](const AlgebraPtr& k, const AlgebraPtr& total) {
    return makeExtension(k, total, unitExtension(total).embedding);
  };
  c.extensions = {
      {"id_a2", "a2", "a2", identityExtension(a2)},
      {"f2_c2", "f2", "f2_c2", unitOver(k2, c2)},
      {"f3_c3", "f3", "f3_c3", unitOver(k3, c3)},
      {"f7_s3", "f7", "f7_s3", unitOver(k7, s3)},
      {"f2_trunc2", "f2", "f2_trunc2", t2},
      {"f2_trunc3", "f2", "f2_trunc3", t3},
      {"a2_trunc2", "a2", "a2_trunc2", a2t},
      {"f2_a2", "f2", "a2", unitOver(k2, a2)},
  };
  c.bimodules = {{"morita_mat2_trunc2", "mat2_trunc2", "f2_trunc2", columnBimodule(mat, t2.total, 2)}};

  for (const auto& na : c.algebras) c.modules[na.name] = moduleCorpus(na.algebra, 8, seed);

  for (const std::string name : {"a2", "a3", "f2_c2", "f2_trunc2", "nakayama2"}) {
    AlgebraPtr a = c.algebra(name);
    auto s = structuralModules(a);
    for (std::size_t k = 0; k < s.simples.size(); ++k)
      c.complexes.push_back({name + "_stalk_S" + std::to_string(k + 1), name, stalkComplex(s.simples[k])});
    const Module& p1 = s.projectives[0].module;
    c.complexes.push_back({name + "_F_P1", name, functorF(makeGraded(a, 0, {p1}))});
    Resolution r = resolve(s.simples[0], Direction::Projective, 2);
    if (r.terms.size() >= 2 && r.terms[1].dim() > 0)
      c.complexes.push_back(
          {name + "_res_S1", name, makeComplex(a, -1, {r.terms[1], r.terms[0]}, {r.differentials[0]})});
    Submodule rad = submodule(p1, radicalOf(p1));
    ComplexObj radInc = makeComplex(a, 0, {rad.module, p1}, {rad.inclusion});
    c.complexes.push_back({name + "_rad_P1", name, radInc});
    c.complexes.push_back({name + "_rad_P1_shift", name, shiftSigma(radInc)});

    c.graded.push_back({name + "_S1", name, makeGraded(a, 0, {s.simples[0]})});
    c.graded.push_back(
        {name + "_P1_gap", name, makeGraded(a, -1, {p1, Module::zero(a), s.simples.back()})});
    c.graded.push_back({name + "_A_S1", name, makeGraded(a, 0, {regularModule(a), s.simples[0]})});
  }
  return c;
}

void writeCorpus(const Corpus& c, const fs::path& dir) {
  json manifest;
  json algebras = json::array();
  for (const auto& na : c.algebras) {
    const std::string file = "algebras/" + na.name + ".alg";
    io::writeFile(dir / file, io::algebraJson(*na.algebra));
    json entry{{"name", na.name}, {"file", file}};
    if (na.quiver) {
      const std::string qfile = "quivers/" + na.name + ".quiver";
      io::writeFile(dir / qfile, io::quiverJson(*na.quiver, na.algebra->field()));
      entry["quiver"] = qfile;
    }
    algebras.push_back(entry);
  }
  manifest["algebras"] = algebras;

  json modules = json::array();
  for (const auto& na : c.algebras) {
    auto it = c.modules.find(na.name);
    if (it == c.modules.end()) continue;
    std::set<std::string> used;
    for (const auto& lm : it->second) {
      std::string stem = na.name + "__" + sanitize(lm.label);
      for (int k = 2; used.count(stem); ++k) stem = na.name + "__" + sanitize(lm.label) + "_" + std::to_string(k);
      used.insert(stem);
      const std::string file = "modules/" + stem + ".mod";
      io::writeFile(dir / file, io::moduleJson(lm.module, "../algebras/" + na.name + ".alg"));
      modules.push_back({{"algebra", na.name}, {"label", lm.label}, {"file", file}});
    }
  }
  manifest["modules"] = modules;

  json extensions = json::array();
  for (const auto& e : c.extensions) {
    const std::string file = "extensions/" + e.name + ".ext";
    io::writeFile(dir / file,
                  io::extensionJson(e.ext, "../algebras/" + e.base + ".alg", "../algebras/" + e.total + ".alg"));
    extensions.push_back({{"name", e.name}, {"base", e.base}, {"total", e.total}, {"file", file}});
  }
  manifest["extensions"] = extensions;

  json complexes = json::array();
  for (const auto& x : c.complexes) {
    const std::string file = "complexes/" + x.name + ".cpx";
    io::writeFile(dir / file, io::complexJson(x.complex, "../algebras/" + x.algebra + ".alg"));
    complexes.push_back({{"name", x.name}, {"algebra", x.algebra}, {"file", file}});
  }
  manifest["complexes"] = complexes;

  json graded = json::array();
  for (const auto& g : c.graded) {
    const std::string file = "graded/" + g.name + ".gr";
    io::writeFile(dir / file, io::gradedJson(g.graded, "../algebras/" + g.algebra + ".alg"));
    graded.push_back({{"name", g.name}, {"algebra", g.algebra}, {"file", file}});
  }
  manifest["graded"] = graded;

  json bimodules = json::array();
  for (const auto& b : c.bimodules) {
    const std::string file = "bimodules/" + b.name + ".bimod";
    io::writeFile(dir / file,
                  io::bimoduleJson(b.bimodule, "../algebras/" + b.left + ".alg", "../algebras/" + b.right + ".alg"));
    bimodules.push_back({{"name", b.name}, {"left", b.left}, {"right", b.right}, {"file", file}});
  }
  manifest["bimodules"] = bimodules;

  io::writeFile(dir / "manifest.json", manifest.dump(1) + "\n");
}

Corpus loadCorpus(const fs::path& dir) {
  const fs::path manifestPath = dir / "manifest.json";
  std::ifstream in(manifestPath);
  if (!in) throw ParseError(manifestPath.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  json m;
  try {
    m = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ParseError(manifestPath.string() + ": " + e.what());
  }
  auto list = [&](const char* key) -> const json& {
    if (!m.contains(key) || !m[key].is_array())
      throw ParseError(manifestPath.string() + ": field '" + key + "' must be a list");
    return m[key];
  };
  auto str = [&](const json& entry, const char* key, const char* section) {
    if (!entry.contains(key) || !entry[key].is_string())
      throw ParseError(manifestPath.string() + ": field '" + section + "." + key + "' must be a string");
    return entry[key].get<std::string>();
  };

  Corpus c;
  io::Loader loader;
  for (const auto& e : list("algebras")) {
    const std::string name = str(e, "name", "algebras");
    c.algebras.push_back({name, loader.algebra(dir / str(e, "file", "algebras")), std::nullopt});
    if (e.contains("quiver")) {
      // the .quiver document is a second description of the same algebra
      AlgebraPtr fromQuiver = loader.algebra(dir / str(e, "quiver", "algebras"));
      if (!sameAlgebra(fromQuiver, c.algebras.back().algebra))
        throw ParseError(manifestPath.string() + ": quiver and table documents of '" + name + "' disagree");
    }
  }
  for (const auto& e : list("modules")) {
    const std::string alg = str(e, "algebra", "modules");
    Module mod = loader.module(dir / str(e, "file", "modules"));
    if (!sameAlgebra(mod.algebra(), c.algebra(alg)))
      throw ParseError(manifestPath.string() + ": module " + str(e, "file", "modules") + " is not over " + alg);
    c.modules[alg].push_back({str(e, "label", "modules"), mod});
  }
  for (const auto& e : list("extensions"))
    c.extensions.push_back({str(e, "name", "extensions"), str(e, "base", "extensions"), str(e, "total", "extensions"),
                            loader.extension(dir / str(e, "file", "extensions"))});
  for (const auto& e : list("complexes"))
    c.complexes.push_back(
        {str(e, "name", "complexes"), str(e, "algebra", "complexes"), loader.complex(dir / str(e, "file", "complexes"))});
  for (const auto& e : list("graded"))
    c.graded.push_back(
        {str(e, "name", "graded"), str(e, "algebra", "graded"), loader.graded(dir / str(e, "file", "graded"))});
  for (const auto& e : list("bimodules"))
    c.bimodules.push_back({str(e, "name", "bimodules"), str(e, "left", "bimodules"), str(e, "right", "bimodules"),
                           loader.bimodule(dir / str(e, "file", "bimodules"))});
  return c;
}

}  // namespace gorwb
