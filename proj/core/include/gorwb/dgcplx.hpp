#pragma once

// The Frobenius pair (F, U) between finitely supported graded modules and
// bounded cochain complexes over an ordinary algebra (a DG ring concentrated
// in degree 0, so every action twist in the general formulas is trivial).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gorwb/homology.hpp"

namespace gorwb {

/// X = sum of X^p for p in [lo, lo + size - 1]; zero elsewhere.
struct GradedModule {
  AlgebraPtr algebra;
  int lo = 0;
  std::vector<Module> components;

  int hi() const { return lo + static_cast<int>(components.size()) - 1; }
  Module at(int p) const;
  std::size_t totalDim() const;
};

GradedModule makeGraded(const AlgebraPtr& a, int lo, std::vector<Module> components);

/// Degreewise maps; absent degrees are zero.
struct GradedMap {
  GradedModule source, target;
  std::map<int, ModHom> components;
  ModHom at(int p) const;
};

struct ComplexMap {
  ComplexObj source, target;
  std::map<int, ModHom> components;
  ModHom at(int p) const;
  /// d f = f d in every degree.
  bool commutes() const;
};

bool isIdentity(const GradedMap& f);
bool isIdentity(const ComplexMap& f);

/// F(X)^p = X^p + X^{p-1}, d(x, y) = (0, x).
ComplexObj functorF(const GradedModule& x);
ComplexMap functorF(const GradedMap& f);
/// Forgets the differential.
GradedModule functorU(const ComplexObj& c);
GradedMap functorU(const ComplexMap& f);
/// Sigma(C)^p = C^{p+1}, d = -d_C.
ComplexObj shiftSigma(const ComplexObj& c);
ComplexMap shiftSigma(const ComplexMap& f);
/// X'^p = X^{p+1}.
GradedModule shiftGraded(const GradedModule& x);

/// (F, U): unit x -> (x, 0); counit (x, y) -> x + d y.
GradedMap unitFU(const GradedModule& x);
ComplexMap counitFU(const ComplexObj& c);
/// (U, Sigma F): unit c -> (-d c, c); counit (a, b) -> b.
ComplexMap unitUSigmaF(const ComplexObj& c);
GradedMap counitUSigmaF(const GradedModule& x);

struct ContractibleResult {
  Verdict verdict = Verdict::No;
  /// s^p: C^p -> C^{p-1} with d s + s d = id, keyed by p.
  std::map<int, ModHom> homotopy;
};
/// Solves id = d s + s d with module-map unknowns.
ContractibleResult isContractible(const ComplexObj& c);

struct FUReport {
  std::size_t gradedCount = 0, complexCount = 0;
  bool trianglesFU = true;
  bool trianglesUSigmaF = true;
  bool chainMapsValid = true;  // every unit/counit and F-image commutes with d
  bool exactF = true;
  bool exactU = true;
  bool projectivesToContractible = true;
  bool unitMono = true;
  bool counitEpi = true;
  bool shiftCompatible = true;  // U Sigma = degree shift
  std::vector<std::string> failures;

  bool passed() const {
    return trianglesFU && trianglesUSigmaF && chainMapsValid && exactF && exactU && projectivesToContractible &&
           unitMono && counitEpi && shiftCompatible;
  }
};

FUReport checkFrobeniusPairFU(const std::vector<GradedModule>& graded, const std::vector<ComplexObj>& complexes);

struct ComponentwiseGP {
  std::vector<std::pair<int, GPResult>> components;
  bool componentwiseGP = true;
  std::string note;
};
/// Throws PreconditionFailed unless the profile is certified.
ComponentwiseGP componentwiseGpCheck(const ComplexObj& c, const GorensteinProfile& profile);

}  // namespace gorwb
