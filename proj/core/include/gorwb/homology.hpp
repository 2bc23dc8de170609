#pragma once

// Resolutions, Ext, (Gorenstein) homological dimensions, chain-map lifting,
// null-homotopies and the totalization of a quasi-bicomplex of projective
// resolutions of an injective coresolution.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gorwb/modrep.hpp"

namespace gorwb {

inline constexpr std::size_t kDefaultBound = 20;

// ---------------------------------------------------------------- complexes

/// Bounded cochain complex X^lo -> ... -> X^hi; zero outside the support.
struct ComplexObj {
  AlgebraPtr algebra;
  int lo = 0;
  std::vector<Module> components;
  /// differentials[k]: X^{lo+k} -> X^{lo+k+1}; one fewer than components.
  std::vector<ModHom> differentials;

  int hi() const { return lo + static_cast<int>(components.size()) - 1; }
  bool inSupport(int p) const { return p >= lo && p <= hi(); }
  Module at(int p) const;
  ModHom d(int p) const;
  /// Throws VerificationFailure if some d^{p+1} d^p != 0 or shapes mismatch.
  void verify() const;
};

ComplexObj makeComplex(const AlgebraPtr& a, int lo, std::vector<Module> components,
                       std::vector<ModHom> differentials);
ComplexObj stalkComplex(const Module& m, int degree = 0);

std::size_t cohomologyDim(const ComplexObj& c, int p);
/// H^p as a module (quotient of cycles by boundaries).
Module cohomology(const ComplexObj& c, int p);

// ---------------------------------------------------------------- resolutions

enum class Direction { Projective, Injective };

struct Resolution {
  Direction direction = Direction::Projective;
  Module augmented;
  /// Projective: P_0, P_1, ...; injective: I^0, I^1, ....
  std::vector<Module> terms;
  /// Projective: summand data of each P_k. Injective: the projectives over
  /// the opposite algebra whose duals are the I^k.
  std::vector<ProjectiveModule> projectives;
  /// Projective: P_0 -> M. Injective: M -> I^0.
  ModHom augmentation;
  /// Projective: d_k: P_{k+1} -> P_k. Injective: d^k: I^k -> I^{k+1}.
  std::vector<ModHom> differentials;
  /// Projective: syzygies Omega^0 = M, Omega^1, .... Injective: cosyzygies,
  /// the duals of the syzygies of D(M).
  std::vector<Module> syzygies;
  /// Projective only: inclusion Omega^{k+1} -> P_k.
  std::vector<ModHom> syzygyInclusions;
  /// True when the resolution terminated (last syzygy zero) within depth.
  bool complete = false;

  std::size_t length() const { return terms.size(); }
  /// Term k or the zero module past the end.
  Module term(std::size_t k) const;
  /// Map k (see `differentials`), or zero past the end.
  ModHom differential(std::size_t k) const;
};

/// Minimal resolution computed to `depth` terms (or until it terminates).
Resolution resolve(const Module& m, Direction direction, std::size_t depth);

/// Verifies exactness at every computed spot and the term type.
void verifyResolution(const Resolution& r);

/// Ext^i(m, n) from a projective resolution of m.
std::size_t extDim(const Module& m, const Module& n, std::size_t i);
/// Ext^i(m, n) for i = 0..maxI sharing one resolution.
std::vector<std::size_t> extDims(const Module& m, const Module& n, std::size_t maxI);
/// Ext^i(m, n) from an injective coresolution of n and general Hom spaces.
std::size_t extDimInjective(const Module& m, const Module& n, std::size_t i);

/// A dimension that may be undetermined within a search bound.
struct DimValue {
  std::optional<std::size_t> value;
  std::size_t bound = 0;

  bool finite() const { return value.has_value(); }
  /// "n" or ">= bound".
  std::string toString() const;
  friend bool operator==(const DimValue&, const DimValue&) = default;
};

enum class DimKind { Pd, Id };

/// pd: least n < bound with Omega^n projective; id dually through D over A^op.
DimValue finDimension(const Module& m, DimKind kind, std::size_t bound);

// ---------------------------------------------------------------- Gorenstein

struct GorensteinProfile {
  DimValue spdi;  // sup of pd over indecomposable injectives
  DimValue sidp;  // sup of id over indecomposable projectives
  std::optional<std::size_t> gorensteinDim;
  std::size_t bound = 0;
  std::vector<DimValue> injectivePd;   // per class representative
  std::vector<DimValue> projectiveId;  // per class representative

  bool certified() const { return gorensteinDim.has_value(); }
  /// Profile of the opposite algebra (spdi and sidp exchanged).
  GorensteinProfile opposite() const;
  std::string toString() const;
};

/// Throws VerificationFailure if spdi and sidp are finite but different.
GorensteinProfile gorensteinProfile(const AlgebraPtr& a, std::size_t bound = kDefaultBound);

struct GPResult {
  Verdict verdict = Verdict::Inconclusive;  // Inconclusive = unknown at depth
  std::size_t checkedDepth = 0;
  /// Least i >= 1 with Ext^i(m, A) != 0 when the verdict is no.
  std::optional<std::size_t> witnessDegree;
  std::string detail;
};

/// Ext^i(m, A) = 0 for 1 <= i <= d over a certified d-Gorenstein algebra.
/// A yes is cross-checked against a complete-resolution window.
GPResult isGorensteinProjective(const Module& m, const GorensteinProfile& profile);

/// Builds the window ... -> P_1 -> P_0 -> Q^0 -> Q^1 -> ... of depth `depth`
/// on both sides around m (right side from left add(A)-approximations) and
/// checks it is exact and Hom(-, A)-exact inside. Returns false when a
/// required approximation is not monic.
bool completeResolutionWindow(const Module& m, std::size_t depth, ComplexObj* out = nullptr);

/// Gpd via the least GP syzygy; cross-checked with max{i : Ext^i(m, A) != 0}.
/// nullopt when the profile is not certified.
std::optional<std::size_t> gpd(const Module& m, const GorensteinProfile& profile);
/// Gid(m) = Gpd over A^op of D(m).
std::optional<std::size_t> gid(const Module& m, const GorensteinProfile& profile);

// ---------------------------------------------------------------- chain maps

/// maps[k]: source P_k -> target P_k (projective resolutions).
struct ChainMap {
  std::vector<ModHom> maps;
};

/// Lift f: source.augmented -> target.augmented. Throws LiftFailed.
ChainMap liftChainMap(const ModHom& f, const Resolution& source, const Resolution& target);
/// Checks augmentation compatibility and commuting squares exactly.
bool isChainMapOver(const ChainMap& c, const ModHom& f, const Resolution& source, const Resolution& target);

/// Homotopy s_k: P_k -> Q_{k+1} with c_k = dQ_k s_k + s_{k-1} dP_{k-1},
/// for a chain map whose composite with the target augmentation is zero.
/// Throws NoHomotopy when no homotopy exists.
std::vector<ModHom> nullhomotopy(const ChainMap& c, const Resolution& source, const Resolution& target);

// ---------------------------------------------------------------- totalization

struct QuasiBicomplex {
  std::size_t maxColumn = 0;  // coresolution window N
  std::size_t maxRow = 0;     // m: P^{i,j} = 0 for j < -m
  Resolution coresolution;    // M -> I^0 -> ... -> I^N
  std::vector<Resolution> columns;  // P^{i, -k} = columns[i].terms[k]
  /// d[l][(i, j)]: P^{i,j} -> P^{i+l, j-l+1}; absent entries are zero.
  std::vector<std::map<std::pair<std::size_t, int>, ModHom>> d;

  Module component(std::size_t i, int j) const;
  ModHom map(std::size_t l, std::size_t i, int j) const;
};

struct Totalization {
  QuasiBicomplex qb;
  ComplexObj total;
  Submodule boundaries;  // B^0 in Q^0
  Submodule cycles;      // Z^0 in Q^0
  ModHom cyclesToM;      // Z^0 -> M, epic with kernel B^0
  DimValue pdBoundaries;
  GPResult cyclesGP;
  std::optional<std::size_t> gpdIndependent;
  std::vector<std::string> checks;  // one line per verified identity family
};

/// Throws ProfileNotCertified if the profile is not certified, and
/// VerificationFailure naming the identity that failed.
Totalization totalizeQuasiBicomplex(const Module& m, const GorensteinProfile& profile);

}  // namespace gorwb
