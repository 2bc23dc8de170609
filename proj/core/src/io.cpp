#include "gorwb/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace gorwb::io {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

// ---------------------------------------------------------------- writing

// Like dump(1), but arrays of scalars stay on one line.
void render(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 1), ' ');
  if (j.is_array()) {
    bool flat = true;
    for (const auto& x : j) flat = flat && !x.is_structured();
    if (flat) {
      out += j.dump();
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      render(j[k], indent + 1, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + json(key).dump() + ": ";
      render(value, indent + 1, out);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else {
    out += j.dump();
  }
}

std::string document(const json& j) {
  std::string out;
  render(j, 0, out);
  return out + "\n";
}

json scalarJson(const Scalar& s) { return s.toString(); }

json vectorJson(const Mat& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.rows(); ++i) out.push_back(scalarJson(v.at(i, 0)));
  return out;
}

json matrixJson(const Mat& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalarJson(m.at(i, j)));
    out.push_back(row);
  }
  return out;
}

json columnsJson(const Mat& m) {
  json out = json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(vectorJson(m.column(j)));
  return out;
}

json fieldJson(const Field& f) { return json{{"char", f.characteristic()}}; }

json moduleBody(const Module& m) {
  json j;
  j["dim"] = m.dim();
  json action = json::array();
  for (const auto& a : m.actions()) action.push_back(matrixJson(a));
  j["action"] = action;
  return j;
}

// ---------------------------------------------------------------- reading

struct Ctx {
  std::string origin;
  std::string where(const std::string& field) const { return origin + ": field '" + field + "'"; }
};

const json& need(const json& j, const std::string& key, const Ctx& c) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(c.where(key) + " is missing");
  return j.at(key);
}

std::size_t needCount(const json& j, const std::string& key, const Ctx& c) {
  const json& v = need(j, key, c);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(c.where(key) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

Field readField(const json& j, const Ctx& c) {
  const json& f = need(j, "field", c);
  std::size_t p = needCount(f, "char", c);
  try {
    return Field(static_cast<std::uint32_t>(p));
  } catch (const Error& e) {
    throw ParseError(c.where("field") + ": " + e.what());
  }
}

Scalar readScalar(const Field& f, const json& v, const std::string& where) {
  try {
    if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
    if (v.is_number_integer()) return Scalar(f, static_cast<long>(v.get<long long>()));
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": scalar must be a string or an integer");
}

Mat readVector(const Field& f, const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n) throw ParseError(where + ": expected a vector of length " + std::to_string(n));
  Mat out(f, n, 1);
  for (std::size_t i = 0; i < n; ++i) out.set(i, 0, readScalar(f, v[i], where));
  return out;
}

Mat readMatrix(const Field& f, const json& v, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!v.is_array() || v.size() != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  Mat out(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array() || v[i].size() != cols)
      throw ParseError(where + ": row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t j = 0; j < cols; ++j) out.set(i, j, readScalar(f, v[i][j], where));
  }
  return out;
}

Mat readColumns(const Field& f, const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected a list of vectors");
  Mat out(f, n, v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out.setBlock(0, k, readVector(f, v[k], n, where));
  return out;
}

json parseJson(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

std::string readText(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw ParseError(p.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
auto withContext(const std::string& origin, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidAlgebra& e) {
    throw InvalidAlgebra(origin + ": " + e.what());
  } catch (const InvalidModule& e) {
    throw InvalidModule(origin + ": " + e.what());
  } catch (const MalformedRelation& e) {
    throw MalformedRelation(origin + ": " + e.what());
  } catch (const InfiniteDimensional& e) {
    throw InfiniteDimensional(origin + ": " + e.what());
  } catch (const Error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

AlgebraPtr algebraFromJson(const json& j, const Ctx& c) {
  Field f = readField(j, c);
  const json& basis = need(j, "basis", c);
  if (!basis.is_array()) throw ParseError(c.where("basis") + " must be a list of labels");
  AlgebraData d;
  d.field = f;
  for (const auto& l : basis) {
    if (!l.is_string()) throw ParseError(c.where("basis") + " labels must be strings");
    d.labels.push_back(l.get<std::string>());
  }
  const std::size_t n = d.labels.size();
  const json& table = need(j, "table", c);
  if (!table.is_array() || table.size() != n) throw ParseError(c.where("table") + " must have one row per basis element");
  for (std::size_t i = 0; i < n; ++i) {
    if (!table[i].is_array() || table[i].size() != n)
      throw ParseError(c.where("table") + " row " + std::to_string(i) + " must have " + std::to_string(n) + " products");
    d.leftMul.push_back(readColumns(f, table[i], n, c.where("table")));
  }
  d.unit = readVector(f, need(j, "unit", c), n, c.where("unit"));
  if (j.contains("idempotents")) {
    Mat e = readColumns(f, j["idempotents"], n, c.where("idempotents"));
    std::vector<Mat> es;
    for (std::size_t k = 0; k < e.cols(); ++k) es.push_back(e.column(k));
    d.idempotents = es;
  }
  if (j.contains("radical")) d.radicalHint = readColumns(f, j["radical"], n, c.where("radical"));
  if (j.contains("centralIdempotents")) {
    Mat e = readColumns(f, j["centralIdempotents"], n, c.where("centralIdempotents"));
    for (std::size_t k = 0; k < e.cols(); ++k) d.centralIdempotents.push_back(e.column(k));
  }
  if (j.contains("provenance")) {
    const json& p = j["provenance"];
    if (p.contains("kind") && p["kind"].is_string()) d.provenance.kind = p["kind"].get<std::string>();
    if (p.contains("description") && p["description"].is_string())
      d.provenance.description = p["description"].get<std::string>();
  }
  return withContext(c.origin, [&] { return Algebra::make(std::move(d)); });
}

AlgebraPtr quiverFromJson(const json& j, const Ctx& c) {
  Field f = readField(j, c);
  Quiver q;
  q.vertexCount = needCount(j, "vertices", c);
  const json& arrows = need(j, "arrows", c);
  if (!arrows.is_array()) throw ParseError(c.where("arrows") + " must be a list");
  for (const auto& a : arrows) {
    if (!a.is_array() || a.size() != 3 || !a[0].is_number_integer() || !a[1].is_number_integer() || !a[2].is_string())
      throw ParseError(c.where("arrows") + " entries must be [source, target, \"label\"]");
    q.arrows.push_back({a[0].get<std::size_t>(), a[1].get<std::size_t>(), a[2].get<std::string>()});
  }
  if (j.contains("relations")) {
    for (const auto& rel : j["relations"]) {
      Relation r;
      if (!rel.is_array()) throw ParseError(c.where("relations") + " entries must be lists of [path, coefficient]");
      for (const auto& term : rel) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_array())
          throw ParseError(c.where("relations") + " terms must be [[arrows...], \"coefficient\"]");
        RelationTerm t;
        for (const auto& a : term[0]) t.path.push_back(a.get<std::string>());
        t.coefficient = term[1].is_string() ? term[1].get<std::string>() : std::to_string(term[1].get<long long>());
        r.push_back(t);
      }
      q.relations.push_back(r);
    }
  }
  return withContext(c.origin, [&] { return pathAlgebra(q, f); });
}

Module moduleFromJson(const AlgebraPtr& a, const json& j, const Ctx& c) {
  const std::size_t dim = needCount(j, "dim", c);
  const json& action = need(j, "action", c);
  if (!action.is_array() || action.size() != a->dim())
    throw ParseError(c.where("action") + " must have one matrix per algebra basis element (" + std::to_string(a->dim()) + ")");
  std::vector<Mat> mats;
  for (std::size_t i = 0; i < action.size(); ++i)
    mats.push_back(readMatrix(a->field(), action[i], dim, dim, c.where("action") + "[" + std::to_string(i) + "]"));
  return withContext(c.origin, [&] { return Module(a, dim, std::move(mats)); });
}

std::pair<int, int> readSupport(const json& j, const Ctx& c) {
  const json& s = need(j, "support", c);
  if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer())
    throw ParseError(c.where("support") + " must be [lo, hi]");
  return {s[0].get<int>(), s[1].get<int>()};
}

}  // namespace

// ---------------------------------------------------------------- writers

std::string algebraJson(const Algebra& a) {
  json j;
  j["field"] = fieldJson(a.field());
  j["basis"] = a.labels();
  json table = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) table.push_back(columnsJson(a.leftMul(i)));
  j["table"] = table;
  j["unit"] = vectorJson(a.unit());
  if (a.hasIdempotents()) {
    json e = json::array();
    for (const auto& x : a.idempotents()) e.push_back(vectorJson(x));
    j["idempotents"] = e;
  }
  if (a.radicalHint()) j["radical"] = columnsJson(*a.radicalHint());
  if (!a.centralIdempotents().empty()) {
    json e = json::array();
    for (const auto& x : a.centralIdempotents()) e.push_back(vectorJson(x));
    j["centralIdempotents"] = e;
  }
  j["provenance"] = json{{"kind", a.provenance().kind}, {"description", a.provenance().description}};
  return document(j);
}

std::string quiverJson(const Quiver& q, const Field& f) {
  json j;
  j["field"] = fieldJson(f);
  j["vertices"] = q.vertexCount;
  json arrows = json::array();
  for (const auto& a : q.arrows) arrows.push_back(json::array({a.source, a.target, a.label}));
  j["arrows"] = arrows;
  json rels = json::array();
  for (const auto& r : q.relations) {
    json terms = json::array();
    for (const auto& t : r) terms.push_back(json::array({t.path, t.coefficient}));
    rels.push_back(terms);
  }
  j["relations"] = rels;
  return document(j);
}

std::string moduleJson(const Module& m, const std::string& algebraRef) {
  json j;
  j["algebra"] = algebraRef;
  const json body = moduleBody(m);
  for (auto& [k, v] : body.items()) j[k] = v;
  return document(j);
}

std::string complexJson(const ComplexObj& c, const std::string& algebraRef) {
  json j;
  j["algebra"] = algebraRef;
  j["support"] = json::array({c.lo, c.hi()});
  json comps = json::array(), diffs = json::array();
  for (const auto& m : c.components) comps.push_back(moduleBody(m));
  for (const auto& d : c.differentials) diffs.push_back(matrixJson(d.matrix()));
  j["components"] = comps;
  j["differentials"] = diffs;
  return document(j);
}

std::string gradedJson(const GradedModule& g, const std::string& algebraRef) {
  json j;
  j["algebra"] = algebraRef;
  j["support"] = json::array({g.lo, g.hi()});
  json comps = json::array();
  for (const auto& m : g.components) comps.push_back(moduleBody(m));
  j["components"] = comps;
  return document(j);
}

std::string extensionJson(const RingExtension& e, const std::string& baseRef, const std::string& totalRef) {
  json j;
  j["base"] = baseRef;
  j["total"] = totalRef;
  j["embedding"] = matrixJson(e.embedding);
  return document(j);
}

std::string bimoduleJson(const Bimodule& b, const std::string& leftRef, const std::string& rightRef) {
  json j;
  j["left"] = leftRef;
  j["right"] = rightRef;
  j["dim"] = b.dim();
  json la = json::array(), ra = json::array();
  for (const auto& m : b.leftAction()) la.push_back(matrixJson(m));
  for (const auto& m : b.rightAction()) ra.push_back(matrixJson(m));
  j["leftAction"] = la;
  j["rightAction"] = ra;
  return document(j);
}

AlgebraPtr parseAlgebra(const std::string& text, const std::string& origin) {
  return algebraFromJson(parseJson(text, origin), Ctx{origin});
}

AlgebraPtr parseQuiverAlgebra(const std::string& text, const std::string& origin) {
  return quiverFromJson(parseJson(text, origin), Ctx{origin});
}

void writeFile(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw ParseError(path.string() + ": cannot write file");
  out << text;
}

// ---------------------------------------------------------------- loader

namespace {

struct RefResolver {
  Loader& loader;
  fs::path dir;
  Ctx ctx;

  AlgebraPtr algebra(const json& ref, const std::string& field) {
    if (ref.is_string()) return loader.algebra(dir / ref.get<std::string>());
    if (ref.is_object()) {
      Ctx inner{ctx.origin + " (inline " + field + ")"};
      return ref.contains("vertices") ? quiverFromJson(ref, inner) : algebraFromJson(ref, inner);
    }
    throw ParseError(ctx.where(field) + " must be a path or an inline algebra");
  }

  Module module(const AlgebraPtr& a, const json& ref, const std::string& field) {
    if (ref.is_string()) {
      Module m = loader.module(dir / ref.get<std::string>());
      if (!sameAlgebra(m.algebra(), a)) throw ParseError(ctx.where(field) + ": module over a different algebra");
      return m;
    }
    if (ref.is_object()) return moduleFromJson(a, ref, Ctx{ctx.origin + " (" + field + ")"});
    throw ParseError(ctx.where(field) + " must be a path or an inline module");
  }
};

}  // namespace

AlgebraPtr Loader::algebra(const fs::path& path) {
  const std::string key = fs::weakly_canonical(path).string();
  auto it = algebras_.find(key);
  if (it != algebras_.end()) return it->second;
  const std::string text = readText(path);
  AlgebraPtr a = path.extension() == ".quiver" ? parseQuiverAlgebra(text, path.string()) : parseAlgebra(text, path.string());
  algebras_.emplace(key, a);
  return a;
}

Module Loader::module(const fs::path& path) {
  Ctx c{path.string()};
  json j = parseJson(readText(path), c.origin);
  RefResolver r{*this, path.parent_path(), c};
  AlgebraPtr a = r.algebra(need(j, "algebra", c), "algebra");
  return moduleFromJson(a, j, c);
}

ComplexObj Loader::complex(const fs::path& path) {
  Ctx c{path.string()};
  json j = parseJson(readText(path), c.origin);
  RefResolver r{*this, path.parent_path(), c};
  AlgebraPtr a = r.algebra(need(j, "algebra", c), "algebra");
  auto [lo, hi] = readSupport(j, c);
  const json& comps = need(j, "components", c);
  const std::size_t n = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
  if (!comps.is_array() || comps.size() != n) throw ParseError(c.where("components") + " must match the support");
  std::vector<Module> modules;
  for (std::size_t k = 0; k < n; ++k) modules.push_back(r.module(a, comps[k], "components[" + std::to_string(k) + "]"));
  const json& diffs = need(j, "differentials", c);
  if (!diffs.is_array() || diffs.size() != (n == 0 ? 0 : n - 1))
    throw ParseError(c.where("differentials") + " must have one matrix between consecutive components");
  std::vector<ModHom> maps;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::string w = c.where("differentials") + "[" + std::to_string(k) + "]";
    Mat d = readMatrix(a->field(), diffs[k], modules[k + 1].dim(), modules[k].dim(), w);
    maps.push_back(withContext(w, [&] { return ModHom(modules[k], modules[k + 1], d); }));
  }
  return withContext(c.origin, [&] { return makeComplex(a, lo, std::move(modules), std::move(maps)); });
}

GradedModule Loader::graded(const fs::path& path) {
  Ctx c{path.string()};
  json j = parseJson(readText(path), c.origin);
  RefResolver r{*this, path.parent_path(), c};
  AlgebraPtr a = r.algebra(need(j, "algebra", c), "algebra");
  auto [lo, hi] = readSupport(j, c);
  const json& comps = need(j, "components", c);
  const std::size_t n = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
  if (!comps.is_array() || comps.size() != n) throw ParseError(c.where("components") + " must match the support");
  std::vector<Module> modules;
  for (std::size_t k = 0; k < n; ++k) modules.push_back(r.module(a, comps[k], "components[" + std::to_string(k) + "]"));
  return makeGraded(a, n == 0 ? 0 : lo, std::move(modules));
}

RingExtension Loader::extension(const fs::path& path) {
  Ctx c{path.string()};
  json j = parseJson(readText(path), c.origin);
  RefResolver r{*this, path.parent_path(), c};
  AlgebraPtr base = r.algebra(need(j, "base", c), "base");
  AlgebraPtr total = r.algebra(need(j, "total", c), "total");
  Mat e = readMatrix(base->field(), need(j, "embedding", c), total->dim(), base->dim(), c.where("embedding"));
  return withContext(c.origin, [&] { return makeExtension(base, total, e); });
}

Bimodule Loader::bimodule(const fs::path& path) {
  Ctx c{path.string()};
  json j = parseJson(readText(path), c.origin);
  RefResolver r{*this, path.parent_path(), c};
  AlgebraPtr left = r.algebra(need(j, "left", c), "left");
  AlgebraPtr right = r.algebra(need(j, "right", c), "right");
  const std::size_t dim = needCount(j, "dim", c);
  auto readActions = [&](const AlgebraPtr& a, const std::string& key) {
    const json& v = need(j, key, c);
    if (!v.is_array() || v.size() != a->dim()) throw ParseError(c.where(key) + " must have one matrix per basis element");
    std::vector<Mat> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(readMatrix(a->field(), v[i], dim, dim, c.where(key)));
    return out;
  };
  auto la = readActions(left, "leftAction");
  auto ra = readActions(right, "rightAction");
  return withContext(c.origin, [&] { return Bimodule(left, right, dim, std::move(la), std::move(ra)); });
}

}  // namespace gorwb::io
