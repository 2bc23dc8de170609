#pragma once

// JSON file formats: .alg, .quiver, .mod, .cpx, .gr, .ext, .bimod.
// References between files ("algebra": "...") are paths relative to the
// referring file; an object in place of a path is read inline.

#include <filesystem>
#include <map>
#include <string>

#include "gorwb/dgcplx.hpp"
#include "gorwb/frobenius.hpp"

namespace gorwb::io {

std::string algebraJson(const Algebra& a);
std::string quiverJson(const Quiver& q, const Field& f);
/// Module documents; `algebraRef` is written verbatim as the algebra path.
std::string moduleJson(const Module& m, const std::string& algebraRef);
std::string complexJson(const ComplexObj& c, const std::string& algebraRef);
std::string gradedJson(const GradedModule& g, const std::string& algebraRef);
std::string extensionJson(const RingExtension& e, const std::string& baseRef, const std::string& totalRef);
std::string bimoduleJson(const Bimodule& b, const std::string& leftRef, const std::string& rightRef);

AlgebraPtr parseAlgebra(const std::string& text, const std::string& origin = "<string>");
AlgebraPtr parseQuiverAlgebra(const std::string& text, const std::string& origin = "<string>");

/// Reads files, resolving references; each algebra file is loaded once so
/// every object read through one Loader shares the same AlgebraPtr.
/// Errors are ParseError (syntax, missing or mistyped fields) or the
/// validation error of the constructed object, prefixed with file and field.
class Loader {
 public:
  AlgebraPtr algebra(const std::filesystem::path& path);
  Module module(const std::filesystem::path& path);
  ComplexObj complex(const std::filesystem::path& path);
  GradedModule graded(const std::filesystem::path& path);
  RingExtension extension(const std::filesystem::path& path);
  Bimodule bimodule(const std::filesystem::path& path);

 private:
  std::map<std::string, AlgebraPtr> algebras_;
};

void writeFile(const std::filesystem::path& path, const std::string& text);

}  // namespace gorwb::io
