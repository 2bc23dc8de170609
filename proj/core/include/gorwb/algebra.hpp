#pragma once

// Finite-dimensional associative unital algebras given by structure
// constants, plus the constructors used to build test algebras.
//
// Multiplication convention: for quivers, the product x*y means "first y,
// then x", so an arrow a: s -> t satisfies a = e_t * a * e_s. With this
// convention left modules are quiver representations and A*e_i is the
// indecomposable projective at vertex i.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gorwb/exactlin.hpp"

namespace gorwb {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Which constructor produced an algebra; carried into files and reports.
struct Provenance {
  std::string kind = "user";  // user | field | path | group | truncated | opposite | matrix | product | tensor
  std::string description;
};

/// Data handed to the Algebra constructor. `leftMul[i]` is the matrix of
/// left multiplication by basis element i (column j = coordinates of e_i e_j).
struct AlgebraData {
  Field field;
  std::vector<std::string> labels;
  std::vector<Mat> leftMul;
  Mat unit;  // dim x 1
  std::optional<std::vector<Mat>> idempotents;
  /// Columns spanning the Jacobson radical when known in closed form.
  std::optional<Mat> radicalHint;
  /// Central idempotents of the block decomposition, when the algebra is a product.
  std::vector<Mat> centralIdempotents;
  Provenance provenance;
};

class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  /// Validates associativity, unit laws and the idempotent set exactly.
  /// Throws InvalidAlgebra on failure.
  explicit Algebra(AlgebraData data);
  static AlgebraPtr make(AlgebraData data);

  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const Field& field() const { return data_.field; }
  std::size_t dim() const { return data_.labels.size(); }
  const std::vector<std::string>& labels() const { return data_.labels; }
  const Provenance& provenance() const { return data_.provenance; }
  const Mat& unit() const { return data_.unit; }
  const Mat& leftMul(std::size_t i) const { return data_.leftMul[i]; }
  const std::vector<Mat>& leftMuls() const { return data_.leftMul; }
  const std::optional<Mat>& radicalHint() const { return data_.radicalHint; }
  const std::vector<Mat>& centralIdempotents() const { return data_.centralIdempotents; }

  bool hasIdempotents() const { return data_.idempotents.has_value(); }
  /// Throws UnsupportedAlgebra when no idempotent data is available.
  const std::vector<Mat>& idempotents() const;

  Mat basisVector(std::size_t i) const { return Mat::unitVector(field(), dim(), i); }
  Mat multiply(const Mat& x, const Mat& y) const;
  /// Matrix of y -> x*y.
  Mat leftMultiplication(const Mat& x) const;
  /// Matrix of y -> y*x.
  Mat rightMultiplication(const Mat& x) const;
  /// Structure constant coordinate vector of e_i * e_j.
  Mat product(std::size_t i, std::size_t j) const { return data_.leftMul[i].column(j); }

  /// Basis of the Jacobson radical (closed form when known, else generic).
  const Mat& radical() const;
  /// Basis elements that generate the algebra.
  const std::vector<std::size_t>& generators() const;

  /// Columns spanning A*e_i for idempotent i, drawn from {b_j * e_i}.
  const Mat& leftIdealBasis(std::size_t i) const;
  /// Class label per idempotent: equal labels iff A*e_i and A*e_j are isomorphic.
  const std::vector<std::size_t>& idempotentClasses() const;
  /// One idempotent index per isomorphism class, in first-occurrence order.
  const std::vector<std::size_t>& classRepresentatives() const;
  /// Throws UnsupportedAlgebra unless every e_i A e_i / e_i rad e_i is the field.
  void requireSplitBasicData() const;

  /// Cached opposite algebra; opposite()->opposite() is this algebra again.
  /// Requires the algebra to be owned by an AlgebraPtr.
  AlgebraPtr opposite() const;

  /// Structural equality: same field and identical structure constants.
  bool sameAs(const Algebra& other) const;

  std::string summary() const;

 private:
  void validate() const;
  void computeStructure() const;

  AlgebraData data_;

  mutable std::once_flag radicalOnce_;
  mutable Mat radical_;
  mutable std::once_flag generatorsOnce_;
  mutable std::vector<std::size_t> generators_;
  mutable std::once_flag structureOnce_;
  mutable std::vector<Mat> leftIdeals_;
  mutable std::vector<std::size_t> classes_;
  mutable std::vector<std::size_t> classReps_;
  mutable bool split_ = true;
  mutable std::once_flag oppositeOnce_;
  mutable AlgebraPtr opposite_;
  mutable std::weak_ptr<const Algebra> oppositeOf_;
  mutable std::string splitDiagnostic_;
};

bool sameAlgebra(const AlgebraPtr& a, const AlgebraPtr& b);

// ---------------------------------------------------------------- quivers

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string label;
};

/// A path is a list of arrow labels in traversal order.
using Path = std::vector<std::string>;

struct RelationTerm {
  Path path;
  std::string coefficient = "1";
};

using Relation = std::vector<RelationTerm>;

struct Quiver {
  std::size_t vertexCount = 0;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
};

inline constexpr std::size_t kDefaultMaxPathLength = 64;

/// kQ/(relations). Relations must be homogeneous combinations of parallel
/// paths of length >= 2. Throws InfiniteDimensional / MalformedRelation.
AlgebraPtr pathAlgebra(const Quiver& q, const Field& f,
                       std::size_t maxPathLength = kDefaultMaxPathLength);

/// Group algebra from a multiplication table over {0..n-1}; table[g][h] = gh.
AlgebraPtr groupAlgebra(const std::vector<std::vector<std::size_t>>& table, const Field& f);

/// Multiplication table of the cyclic group of order n.
std::vector<std::vector<std::size_t>> cyclicGroupTable(std::size_t n);
/// Multiplication table of the symmetric group on 3 letters.
std::vector<std::vector<std::size_t>> symmetricGroup3Table();

struct TruncatedExtension {
  AlgebraPtr total;
  /// dim S x dim R, identifying R with the x^0 slice.
  Mat embedding;
};

/// S = R[x]/(x^t) with x central; basis r_i x^j at index j*dim R + i.
TruncatedExtension truncatedExtension(const AlgebraPtr& r, std::size_t t);

AlgebraPtr fieldAlgebra(const Field& f);
AlgebraPtr oppositeAlgebra(const AlgebraPtr& a);
/// M_n(A); basis E_pq (x) a_i at index (p*n + q)*dim A + i.
AlgebraPtr matrixAlgebra(const AlgebraPtr& a, std::size_t n);
/// A x B; A occupies the first dim A coordinates.
AlgebraPtr productAlgebra(const AlgebraPtr& a, const AlgebraPtr& b);
/// A (x) B; basis a_i (x) b_j at index i*dim B + j.
AlgebraPtr tensorAlgebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Generic radical: trace-form kernel over Q, p-power trace refinement over F_p.
Mat genericRadical(const Algebra& a);

/// Throws VerificationFailure if rad is not a nilpotent two-sided ideal with
/// semisimple quotient, or disagrees with the generic computation.
void verifyRadical(const Algebra& a);

/// Primitive orthogonal idempotents by splitting with minimal polynomials of
/// seeded random elements. Requires A/rad A split over the prime field.
std::vector<Mat> splitPrimitiveIdempotents(const Algebra& a, std::uint64_t seed = 0);

/// The algebra A/rad A on the complement basis (used to check semisimplicity).
AlgebraPtr quotientByRadical(const Algebra& a);

/// Index of the radical nilpotency: least N with rad^N = 0.
std::size_t radicalNilpotencyIndex(const Algebra& a);

}  // namespace gorwb
