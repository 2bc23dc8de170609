#pragma once

// Concrete Frobenius pairs between module categories: induction, restriction
// and coinduction along ring extensions, tensor/Hom functors of bimodules,
// unit/counit data with triangle identities, faithfulness diagnostics,
// Gpd transfer tables and the stable-category condition checks.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gorwb/homology.hpp"

namespace gorwb {

/// theta: R -> S given by a dim S x dim R matrix.
struct RingExtension {
  AlgebraPtr base;   // R
  AlgebraPtr total;  // S
  Mat embedding;
};

/// Checks theta(1) = 1, multiplicativity on all basis pairs and injectivity.
/// Throws InvalidAlgebra.
RingExtension makeExtension(AlgebraPtr base, AlgebraPtr total, Mat embedding);
RingExtension identityExtension(const AlgebraPtr& a);
/// k -> A through the unit.
RingExtension unitExtension(const AlgebraPtr& a);
/// R -> R[x]/(x^t).
RingExtension truncatedExtensionOf(const AlgebraPtr& r, std::size_t t);

/// An S-R-bimodule; rightAction[j] is the matrix of v -> v r_j.
class Bimodule {
 public:
  Bimodule() = default;
  /// Validates both actions and that they commute. Throws InvalidModule.
  Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> leftAction,
           std::vector<Mat> rightAction);

  const AlgebraPtr& left() const { return left_; }
  const AlgebraPtr& right() const { return right_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Mat>& leftAction() const { return leftAction_; }
  const std::vector<Mat>& rightAction() const { return rightAction_; }

  /// _S M.
  Module leftModule() const;
  /// M_R as a left module over R^op.
  Module rightModule() const;
  /// M as a left module over S (x) R^op.
  Module asModule() const;

 private:
  AlgebraPtr left_, right_;
  std::size_t dim_ = 0;
  std::vector<Mat> leftAction_, rightAction_;
};

/// S (x) R^op, cached per pair so repeated calls share one algebra.
AlgebraPtr envelopingAlgebra(const AlgebraPtr& s, const AlgebraPtr& r);
/// _S S_R for a ring extension.
Bimodule regularBimodule(const RingExtension& ext);
/// Hom_R(S, R) with (s f)(t) = f(t s) and (f r)(t) = f(t) r.
Bimodule dualBimodule(const RingExtension& ext);
/// The factor algebra `small` as a bimodule over itself and `big`, with `big`
/// acting through the surjective algebra map `projection` (dim small x dim big).
/// bigOnLeft: big-small-bimodule (Inc = M (x) -); otherwise small-big (Pr = M (x) -).
Bimodule projectionBimodule(const AlgebraPtr& big, const AlgebraPtr& small, const Mat& projection, bool bigOnLeft);
/// R^n as an M_n(R)-R-bimodule (column vectors); `matrix` = matrixAlgebra(r, n).
Bimodule columnBimodule(const AlgebraPtr& matrix, const AlgebraPtr& r, std::size_t n);

// ---------------------------------------------------------------- functors

Module induce(const RingExtension& ext, const Module& x);
Module restrict(const RingExtension& ext, const Module& y);
Module coinduce(const RingExtension& ext, const Module& x);

/// M (x)_R x over S.
Module tensorOver(const Bimodule& m, const Module& x);
/// Hom_S(M, y) over R with (r f)(v) = f(v r).
Module homFrom(const Bimodule& m, const Module& y);

/// An adjoint pair (F, G) with F: left-mod -> right-mod. Unit X -> GF X,
/// counit FG Y -> Y; the maps are computed explicitly, never assumed.
struct Adjunction {
  std::string name;
  AlgebraPtr source;  // F: source-mod -> target-mod
  AlgebraPtr target;
  std::function<Module(const Module&)> F, G;
  std::function<ModHom(const ModHom&)> Fmap, Gmap;
  std::function<ModHom(const Module&)> unit, counit;
};

Adjunction indRes(const RingExtension& ext);
Adjunction resCoind(const RingExtension& ext);
/// (M (x)_R -, Hom_S(M, -)).
Adjunction tensorHom(const Bimodule& m);

/// Exact check of (eps F)(F eta) = id_F and (G eps)(eta G) = id_G at x and y.
bool triangleAtSource(const Adjunction& adj, const Module& x);
bool triangleAtTarget(const Adjunction& adj, const Module& y);

struct LabeledModule {
  std::string label;
  Module module;
};

struct AdjunctionRecord {
  std::string label;
  bool sourceSide = true;
  bool triangle = false;
  bool unitMono = false;   // source side
  bool counitEpi = false;  // target side
  bool exactnessPreserved = false;
  bool naturality = false;
};

struct AdjunctionReport {
  std::string name;
  std::vector<AdjunctionRecord> records;
  bool trianglesHold = true;
  bool naturalityHolds = true;
  bool exactnessHolds = true;
  bool projectivesPreserved = true;
  bool unitMonoAll = true;
  bool counitEpiAll = true;
  /// add G(P(target)) = P(source) and add F(P(source)) = P(target).
  bool addGenerationSource = false;
  bool addGenerationTarget = false;
  /// unit mono <-> add-generation on the source side, and dually.
  bool faithfulnessConsistent = false;
  std::vector<std::string> notes;

  bool passed() const {
    return trianglesHold && naturalityHolds && exactnessHolds && projectivesPreserved && faithfulnessConsistent;
  }
};

/// Triangle identities, naturality on radical inclusions, exactness on
/// 0 -> rad X -> X -> top X -> 0, projective preservation and the two
/// faithfulness criteria. Throws UnsupportedAlgebra without idempotent data.
AdjunctionReport faithfulnessReport(const Adjunction& adj, const std::vector<LabeledModule>& corpusSource,
                                    const std::vector<LabeledModule>& corpusTarget);

/// P is indecomposable projective: some g_a o f_b is invertible.
bool isSummandOf(const Module& indecomposable, const Module& m);

// ---------------------------------------------------------------- Frobenius tests

struct FrobeniusVerdict {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<ModHom> witness;  // bimodule isomorphism, as a module map
  std::string detail;
};

FrobeniusVerdict isFrobeniusExtension(const RingExtension& ext, std::uint64_t seed = 0);
FrobeniusVerdict isFrobeniusBimodule(const Bimodule& m, std::uint64_t seed = 0);

// ---------------------------------------------------------------- transfer

struct TransferRow {
  std::string label;
  std::string direction;  // "Res" or "Ind"
  std::optional<std::size_t> gpdSource;
  std::optional<std::size_t> gpdImage;
  bool equal = false;
};

struct TransferTable {
  std::vector<TransferRow> rows;
  bool indFaithful = false;
  bool allEqual = true;
};

/// Gpd_S(M) vs Gpd_R(Res M) for corpusS, and Gpd_R(X) vs Gpd_S(Ind X) for
/// corpusR when Ind is certified faithful. Throws PreconditionFailed.
TransferTable verifyGpdTransfer(const RingExtension& ext, const std::vector<LabeledModule>& corpusS,
                                const std::vector<LabeledModule>& corpusR, std::size_t bound, std::uint64_t seed = 0);

struct GlobalDimTransfer {
  GorensteinProfile base, total;
  bool equal = false;
};
/// Requires a certified Frobenius extension with both functors faithful on
/// the projective generators.
GlobalDimTransfer globalGdimTransfer(const RingExtension& ext, std::size_t bound);

struct ProductCounterexample {
  AlgebraPtr product;
  Module x;          // (0, bad) over B x B'
  Module prX;        // Pr(X) over B
  GPResult prGP;     // yes
  GPResult xGP;      // no
  AdjunctionReport prInc;  // (Pr, Inc)
  AdjunctionReport incPr;  // (Inc, Pr)
  bool certified = false;
};

/// Throws PreconditionFailed unless `bad` is certified not GP over bPrime.
ProductCounterexample counterexampleProduct(const AlgebraPtr& b, const AlgebraPtr& bPrime, const Module& bad,
                                            std::size_t bound);

// ---------------------------------------------------------------- triangle equivalences

struct DefectRecord {
  std::string label;
  bool sourceSide = true;  // Cok(eta_X) on the source, Ker(eps_Y) on the target
  std::size_t dim = 0;
  bool objectGP = false;
  DimValue pd;
  std::optional<std::size_t> gpd;
};

struct StableHomRow {
  std::string pair;
  bool sourceSide = true;
  std::size_t before = 0;
  std::size_t after = 0;
};

struct TriEquivReport {
  std::vector<DefectRecord> defects;
  std::vector<StableHomRow> stableHom;
  bool stableGP = true;       // pd Cok <= 1 and Ker projective on GP objects
  bool singularity = true;    // finite pd
  bool defect = true;         // finite Gpd
  bool allProjective = true;  // Cok and Ker projective
  bool stableHomMatches = true;

  bool allPass() const { return stableGP && singularity && defect && allProjective && stableHomMatches; }
};

/// Throws PreconditionFailed unless the unit is mono on corpusSource and the
/// counit epic on corpusTarget.
TriEquivReport triEquivConditions(const Adjunction& adj, const std::vector<LabeledModule>& corpusSource,
                                  const std::vector<LabeledModule>& corpusTarget, std::size_t bound);

}  // namespace gorwb
