#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "spectra/element_table.hpp"
#include "spectra/ideal.hpp"
#include "spectra/lattice.hpp"

namespace spectra {

/// Precomputed view of one ring shared by the verification suites.
///
/// Ideals are addressed by their position in lexicographic divisor order.
/// Points are the maximal ideals in that order; a point set is a bitmask with
/// bit j for the j-th maximal ideal. Element-level data exists only when
/// |R| <= cap; accessors for it throw CapExceeded otherwise.
class RingModel {
 public:
  using Id = std::size_t;
  using Index = ElementTable::Index;

  /// Throws PreconditionError when R has more than 64 maximal ideals.
  explicit RingModel(RingSpec ring, std::size_t cap = kDefaultElementCap);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t cap() const noexcept { return cap_; }

  std::size_t ideal_count() const noexcept { return ideals_.size(); }
  const std::vector<Ideal>& ideals() const noexcept { return ideals_; }
  const Ideal& ideal(Id a) const { return ideals_[a]; }
  Id index_of(const Ideal& ideal) const;
  Id zero() const noexcept { return ideals_.size() - 1; }
  Id whole() const noexcept { return 0; }

  /// a ⊆ b.
  bool leq(Id a, Id b) const { return leq_[a * ideals_.size() + b] != 0; }
  Id sum(Id a, Id b) const { return sum_[a * ideals_.size() + b]; }
  Id meet(Id a, Id b) const { return meet_[a * ideals_.size() + b]; }
  Id product(Id a, Id b) const;
  Id annihilator(Id a) const { return annihilator_[a]; }

  const std::vector<Id>& spec() const noexcept { return spec_; }
  const std::vector<Id>& maximal() const noexcept { return maximal_; }
  const std::vector<Id>& minimal() const noexcept { return minimal_; }

  std::size_t point_count() const noexcept { return maximal_.size(); }
  std::uint64_t all_points() const noexcept;
  /// h(I) = {M : I ⊆ M}.
  std::uint64_t hull(Id a) const { return hull_[a]; }
  /// k(A) = ⋂A; the empty family gives R.
  Id kernel(std::uint64_t points) const;
  Id jacobson() const noexcept { return jacobson_; }
  Id nilradical() const noexcept { return nilradical_; }
  bool semiprimitive() const noexcept { return jacobson_ == zero(); }

  bool has_elements() const noexcept { return table_.has_value(); }
  const ElementTable& elements() const;
  /// Index of <x>.
  Id principal_of(Index x) const;
  std::uint64_t element_hull(Index x) const { return hull_[principal_of(x)]; }
  bool element_in(Index x, Id a) const { return leq(principal_of(x), a); }
  /// Ann(x) = 0.
  bool element_regular(Index x) const { return annihilator_[principal_of(x)] == zero(); }
  /// Smallest element generating each ideal, indexed by ideal id.
  const std::vector<Index>& generators() const;

  const IdealPredicates& predicates(Id a) const;
  const RingPredicates& ring_predicates() const;

  /// The ideal lattice ordered by inclusion; ids coincide with ideal ids.
  FiniteLattice lattice() const;

 private:
  RingSpec ring_;
  std::size_t cap_;
  std::vector<Ideal> ideals_;
  std::vector<std::vector<std::uint32_t>> divisor_lists_;
  std::vector<std::size_t> strides_;
  std::vector<std::uint8_t> leq_;
  std::vector<Id> sum_;
  std::vector<Id> meet_;
  std::vector<Id> annihilator_;
  std::vector<Id> spec_;
  std::vector<Id> maximal_;
  std::vector<Id> minimal_;
  std::vector<std::uint64_t> hull_;
  Id jacobson_ = 0;
  Id nilradical_ = 0;

  std::optional<ElementTable> table_;
  std::vector<std::vector<std::uint32_t>> residue_position_;  // per coordinate: residue -> position of gcd(r, n)
  std::vector<Index> generators_;
  std::vector<IdealPredicates> predicates_;
  RingPredicates ring_predicates_;

  void compute_predicates();
};

}  // namespace spectra
