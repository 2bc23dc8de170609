#pragma once

// Finite-dimensional left modules given by action matrices, module maps,
// and the structural constructions built on them: kernels and cokernels,
// duality, projective covers, injective envelopes, stable Hom.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gorwb/algebra.hpp"

namespace gorwb {

/// A left module: action(i) is the matrix of the i-th algebra basis element.
/// Cheap to copy (shared immutable payload).
class Module {
 public:
  Module() = default;
  /// Validates rho(1) = I and rho(g b) = rho(g) rho(b) for algebra generators g.
  /// Throws InvalidModule.
  Module(AlgebraPtr algebra, std::size_t dim, std::vector<Mat> action);

  static Module zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return data_->algebra; }
  const Field& field() const { return data_->algebra->field(); }
  std::size_t dim() const { return data_->dim; }
  bool isZero() const { return data_->dim == 0; }
  const Mat& action(std::size_t i) const { return data_->action[i]; }
  const std::vector<Mat>& actions() const { return data_->action; }
  /// Matrix of the algebra element with coordinates x.
  Mat act(const Mat& x) const;

  bool sameAs(const Module& other) const;

 private:
  struct Data {
    AlgebraPtr algebra;
    std::size_t dim = 0;
    std::vector<Mat> action;
  };
  std::shared_ptr<const Data> data_;
};

/// Module map; the constructor checks the intertwining equations exactly.
class ModHom {
 public:
  ModHom() = default;
  /// Throws AlgebraMismatch or InvalidModule.
  ModHom(Module source, Module target, Mat matrix);

  static ModHom identity(const Module& m);
  static ModHom zero(const Module& source, const Module& target);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  const Mat& matrix() const { return matrix_; }

  bool isZero() const { return matrix_.isZero(); }
  bool isMono() const { return matrix_.rank() == source_.dim(); }
  bool isEpi() const { return matrix_.rank() == target_.dim(); }
  bool isIso() const { return isMono() && isEpi(); }

 private:
  Module source_;
  Module target_;
  Mat matrix_;
};

/// g o f; throws InputShapeError unless f.target matches g.source.
ModHom compose(const ModHom& g, const ModHom& f);
ModHom operator+(const ModHom& a, const ModHom& b);
ModHom scaled(const ModHom& f, const Scalar& s);

void requireSameAlgebra(const Module& a, const Module& b, const char* what);

Module regularModule(const AlgebraPtr& a);
Module directSum(const Module& a, const Module& b);
Module directSum(const AlgebraPtr& a, const std::vector<Module>& parts);
ModHom directSumMap(const ModHom& f, const ModHom& g);
/// Inclusion of the k-th summand and projection onto it.
ModHom summandInclusion(const std::vector<Module>& parts, std::size_t k);
ModHom summandProjection(const std::vector<Module>& parts, std::size_t k);

/// Smallest submodule containing the columns of `vectors` (returns a basis).
Mat submoduleClosure(const Module& m, const Mat& vectors);

struct Submodule {
  Module module;
  ModHom inclusion;
};
struct Quotient {
  Module module;
  ModHom projection;
  /// Linear section of the projection (not a module map).
  Mat section;
};

/// `basis` must span a submodule.
Submodule submodule(const Module& m, const Mat& basis);
Quotient quotient(const Module& m, const Mat& submoduleBasis);

struct Factorization {
  Submodule kernel;
  Module image;
  ModHom coimage;  // source -> image, epic
  ModHom imageInclusion;
  Quotient cokernel;
};
/// Kernel, image and cokernel with verified exact sequences.
Factorization homFactorization(const ModHom& f);

/// Hom basis via projective presentation when idempotents exist, otherwise
/// by solving the intertwining equations directly.
std::vector<ModHom> homSpace(const Module& m, const Module& n);
/// Hom basis by directly solving the intertwining equations on generators.
std::vector<ModHom> homSpaceDirect(const Module& m, const Module& n);
std::size_t homDim(const Module& m, const Module& n);

/// D(M) = Hom_k(M, k) over the opposite algebra; actions are transposes.
Module dualModule(const Module& m);
/// D(f): D(target) -> D(source).
ModHom dualMap(const ModHom& f);

// ---------------------------------------------------------------- projectives

/// A direct sum of indecomposable projectives A e_{i_k}, k = 0..r-1, on the
/// concatenation of the left ideal bases.
struct ProjectiveModule {
  Module module;
  std::vector<std::size_t> summands;  // idempotent index per summand
  std::vector<std::size_t> offsets;   // first coordinate of each summand
  /// Coordinates (in `module`) of the generator e_{i_k} of summand k.
  std::vector<Mat> generators;
};

ProjectiveModule projectiveModule(const AlgebraPtr& a, const std::vector<std::size_t>& summands);
/// The unique map P -> n sending generator k to images[k]; images[k] must lie in e_{i_k} n.
ModHom mapFromGenerators(const ProjectiveModule& p, const Module& n, const std::vector<Mat>& images);
/// Lift g: P -> n through a surjection s: m -> n. Throws LiftFailed.
ModHom liftThroughSurjection(const ProjectiveModule& p, const ModHom& g, const ModHom& s);

struct StructuralModules {
  std::vector<Module> simples;
  std::vector<ProjectiveModule> projectives;
  std::vector<Module> injectives;
};
/// One entry per idempotent class, in class-representative order.
StructuralModules structuralModules(const AlgebraPtr& a);

struct Cover {
  ProjectiveModule projective;
  ModHom map;  // epic
  /// Basis of ker(map) in projective coordinates.
  Mat kernel;
};
/// Projective cover. Throws UnsupportedAlgebra without split idempotent data.
Cover projectiveCover(const Module& m);

struct Envelope {
  Module injective;  // D of a projective over the opposite algebra
  ModHom map;        // monic
  /// Cover over the opposite algebra that this envelope dualizes.
  Cover dualCover;
};
Envelope injectiveEnvelope(const Module& m);

/// Top M / rad M dimension vector over class representatives.
std::vector<std::size_t> topVector(const Module& m);
/// dim e_i M for each idempotent i.
std::vector<std::size_t> dimensionVector(const Module& m);
/// Dimensions of rad^k M for k = 0, 1, ... until zero.
std::vector<std::size_t> radicalSeries(const Module& m);
/// Basis of rad M = span{r m}.
Mat radicalOf(const Module& m);
/// Basis of soc M = {m : r m = 0 for r in rad A}.
Mat socleOf(const Module& m);

bool isProjective(const Module& m);
bool isInjective(const Module& m);

/// dim Hom(m, n) minus the maps factoring through a projective.
std::size_t stableHomDim(const Module& m, const Module& n);

enum class Verdict { Yes, No, Inconclusive };
std::string toString(Verdict v);

struct IsoResult {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<ModHom> witness;
  std::string reason;
};

/// Randomized search (seeded) then exhaustive enumeration over small fields.
IsoResult isIsomorphic(const Module& m, const Module& n, std::uint64_t seed = 0);

/// Find an invertible element in the span of `maps` (all m -> n). Returns the
/// witness, std::nullopt with exhausted=true if none exists, or nullopt with
/// exhausted=false if the search was inconclusive.
std::optional<ModHom> findInvertible(const std::vector<ModHom>& maps, std::uint64_t seed, bool& exhausted);

}  // namespace gorwb
