#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spectra/report.hpp"
#include "spectra/ring_model.hpp"

namespace spectra {

/// A set of maximal ideals: bit j is the j-th point of RingModel::maximal().
using PointSet = std::uint64_t;

/// h_M(I) = {M : I ⊆ M}.
PointSet hull(const Ideal& ideal, const RingModel& model);
/// h_M(x) = h_M(<x>).
PointSet hull(const RingElement& x, const RingModel& model);
/// k(A) = ⋂A; k(∅) = R.
Ideal kernel(PointSet points, const RingModel& model);

/// The closed sets {h(I)} of the hull-kernel topology, ascending, without duplicates.
std::vector<PointSet> closed_sets(const RingModel& model);

struct InteriorWitness {
  std::size_t point = 0;
  /// x with M ∈ h(x) ⊆ h^c(1−x) ⊆ A; absent only when the element scan is over the cap.
  std::optional<RingElement> x;
};

struct PointSetOps {
  PointSet closure = 0;
  PointSet interior = 0;
  PointSet limit_points = 0;
  PointSet isolated_points = 0;
  std::vector<InteriorWitness> witnesses;  // one per interior point, ascending
};

/// Closure as the least closed superset, interior as the largest open subset,
/// limit points by M ∈ cl(A∖{M}), isolated = A ∖ A'. Witnesses are the first
/// qualifying x in element order.
PointSetOps point_set_ops(PointSet points, const RingModel& model);

/// {P ∈ Mi(R) : ⋂_{P ≠ Q ∈ Mi(R)} Q ≠ √0}, the empty intersection being R.
std::vector<Ideal> bourbaki_set(const RingModel& model);

struct Connectivity {
  std::vector<PointSet> components;  // ascending by lowest point
  bool connected = true;
  std::optional<std::pair<Ideal, Ideal>> split;
};

/// Components from the clopen sets of the topology; the split comes from
/// direct_sum_split, computed independently.
Connectivity connectivity(const RingModel& model);

/// Number of connected components of Ma(R): the real dimension of the
/// locally constant functions C(Ma(R)) on the finite space.
std::size_t continuous_dimension(const RingModel& model);

/// Galois connection of hull and kernel, T1, closure/interior/limit points
/// against their element and kernel characterisations, and the cofinite
/// criterion (degenerate on a finite space).
Report point_set_suite(const RingModel& model);

/// Connectedness of Ma(R) against the existence of a direct-sum split.
Report connectivity_suite(const RingModel& model);

/// For R = ∏ factors: (i, M_i) ↦ π_i^{-1}(M_i) is a bijection onto Ma(R),
/// every block is closed and homeomorphic to Ma(R_i), and the closed sets of
/// Ma(R) are exactly the blockwise unions of closed sets.
Report product_homeomorphism_check(std::span<const RingSpec> factors, std::size_t cap = kDefaultElementCap);
/// product_homeomorphism_check over the factor list of the model's ring.
Report product_homeomorphism_suite(const RingModel& model);

/// c(∏R_i) = Σc(R_i) over the factor list and c(D) = 1 for an integral domain.
Report continuous_dimension_suite(const RingModel& model);

/// For each M ∈ Ma(R): isolated ⇔ not omittable from ⋂Ma(R) ⇔ M = Ann(x) for
/// some x ⇔ M ∈ B(R), plus the Max/Min corollaries. Runs on R/Jac(R) when R
/// is not semiprimitive, after checking Ma(R) ≅ Ma(R/Jac(R)). Needs |R| <= cap.
Report isolated_point_suite(const RingModel& model);

/// h(I) ⊆ h^c(J) ⇔ I+J = R; h^c(I) ⊆ h(J) ⇔ IJ = 0; Ann(I) = k h^c(I); the
/// comaximal-pair criterion for Gelfand rings with an explicit CI; the von
/// Neumann criterion h^c(x) = h(Ann(x)); and the elementary h_M facts with a
/// multiplier witness. Statements that need Jac(R) = 0 are checked on
/// R/Jac(R) and, on R itself, reported hypothesis-violated where they fail.
Report hull_facts_suite(const RingModel& model);

/// The thirteen regularity conditions evaluated independently; equal on
/// semiprimitive rings, reported as hypothesis-violated otherwise. Also the
/// three almost-P conditions, which agree on every ring.
Report regularity_equivalence_suite(const RingModel& model);

}  // namespace spectra
