#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spectra/report.hpp"
#include "spectra/ring.hpp"

namespace spectra {

/// A filter on the index set of a ring. Every filter on a finite set is
/// principal, F_S = {A : S ⊆ A}, so the core S determines it. F_∅ is the
/// improper filter (the whole power set).
class Filter {
 public:
  /// Throws PreconditionError unless core.universe() equals the ring's arity.
  Filter(RingSpec ring, IndexSet core);

  /// F_∅.
  static Filter improper(const RingSpec& ring);
  /// F_Λ = {Λ}.
  static Filter top(const RingSpec& ring);
  /// F_{{index}}.
  static Filter at(const RingSpec& ring, std::size_t index);

  const RingSpec& ring() const noexcept { return ring_; }
  const IndexSet& core() const noexcept { return core_; }

  bool contains(const IndexSet& member) const;
  bool is_proper() const noexcept { return !core_.is_empty(); }
  bool is_ultrafilter() const noexcept { return core_.size() == 1; }
  /// ⋂F = S.
  bool is_fixed() const noexcept { return !core_.is_empty(); }
  /// F ⊆ G as families of sets.
  bool is_subfilter_of(const Filter& other) const;

  /// Members in increasing bit order; needs arity <= 20.
  std::vector<IndexSet> members() const;

  /// "F{0,2}"; "F{}" is the improper filter.
  std::string to_string() const;

  bool operator==(const Filter& other) const noexcept { return ring_ == other.ring_ && core_ == other.core_; }

 private:
  RingSpec ring_;
  IndexSet core_;
};

bool filter_member(const Filter& filter, const IndexSet& member);

/// F ∧ G = F ∩ G = F_{S∪T}.
Filter filter_meet(const Filter& a, const Filter& b);
/// F ∨ G = {A ∩ B} = F_{S∩T}.
Filter filter_join(const Filter& a, const Filter& b);

enum class FilterOp { meet, join };
Filter filter_lattice_op(FilterOp op, const Filter& a, const Filter& b);

struct FilterPredicates {
  bool proper = false;
  bool ultrafilter = false;
  bool fixed = false;
};

FilterPredicates filter_predicates(const Filter& filter);

/// Every filter on the index set, ordered by the bits of the core; needs arity <= 20.
std::vector<Filter> all_filters(const RingSpec& ring);
std::vector<Filter> ultrafilters(const RingSpec& ring);

/// Index sets up to this size are checked against the explicit set-of-sets
/// description of filters.
inline constexpr std::size_t kFamilyCheckLimit = 4;

/// A family of subsets of Λ as a mask over the 2^|Λ| subsets; needs |Λ| <= 6.
using Family = std::uint64_t;
Family family_of(const Filter& filter);

/// Lattice laws of the filter lattice, agreement of meet and join with the
/// set-of-sets definitions, the principal-core bijection and the ultrafilter
/// characterisation.
Report filter_lattice_suite(const RingSpec& ring);

}  // namespace spectra
