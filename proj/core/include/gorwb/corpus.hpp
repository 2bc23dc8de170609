#pragma once

// The bundled corpus: algebras, modules, extensions, complexes, graded
// modules and bimodules used by the acceptance suite. buildCorpus constructs
// it from scratch; writeCorpus/loadCorpus move it through data files with a
// manifest.json index.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gorwb/dgcplx.hpp"
#include "gorwb/frobenius.hpp"

namespace gorwb {

struct NamedAlgebra {
  std::string name;
  AlgebraPtr algebra;
  std::optional<Quiver> quiver;  // also written as a .quiver document
};

struct NamedExtension {
  std::string name, base, total;
  RingExtension ext;
};

struct NamedComplex {
  std::string name, algebra;
  ComplexObj complex;
};

struct NamedGraded {
  std::string name, algebra;
  GradedModule graded;
};

struct NamedBimodule {
  std::string name, left, right;
  Bimodule bimodule;
};

struct Corpus {
  std::vector<NamedAlgebra> algebras;
  std::map<std::string, std::vector<LabeledModule>> modules;  // keyed by algebra name
  std::vector<NamedExtension> extensions;
  std::vector<NamedComplex> complexes;
  std::vector<NamedGraded> graded;
  std::vector<NamedBimodule> bimodules;

  /// Lookups throw PreconditionFailed on unknown names.
  AlgebraPtr algebra(const std::string& name) const;
  const std::vector<LabeledModule>& modulesOf(const std::string& algebra) const;
  const NamedExtension& extension(const std::string& name) const;
  const NamedBimodule& bimodule(const std::string& name) const;
};

/// Module corpus of one algebra: simples, indecomposable projectives and
/// injectives, the regular module, radicals and P/soc P, deduplicated up to
/// isomorphism and padded with direct sums to at least `minimum` entries.
std::vector<LabeledModule> moduleCorpus(const AlgebraPtr& a, std::size_t minimum = 8, std::uint64_t seed = 0);

Corpus buildCorpus(std::uint64_t seed = 0);

void writeCorpus(const Corpus& c, const std::filesystem::path& dir);
/// Reads dir/manifest.json and every file it lists.
Corpus loadCorpus(const std::filesystem::path& dir);

}  // namespace gorwb
