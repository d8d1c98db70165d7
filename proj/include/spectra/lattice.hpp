#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spectra {

/// Fixed-size set of small non-negative integers.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const { return ((words_[i / 64] >> (i % 64)) & 1U) != 0; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const;
  bool is_subset_of(const Bitset& other) const;

  Bitset operator&(const Bitset& other) const;
  Bitset operator|(const Bitset& other) const;
  bool operator==(const Bitset&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A finite lattice on the ids 0..size-1 with eagerly tabulated meet and join.
class FiniteLattice {
 public:
  using Id = std::size_t;

  /// `leq(a, b)` is the order. Throws PreconditionError unless it is a partial
  /// order in which every pair has a meet and a join.
  FiniteLattice(std::size_t size, const std::function<bool(Id, Id)>& leq, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return size_; }
  bool leq(Id a, Id b) const { return order_[a * size_ + b] != 0; }
  Id meet(Id a, Id b) const { return meet_[a * size_ + b]; }
  Id join(Id a, Id b) const { return join_[a * size_ + b]; }
  Id top() const noexcept { return top_; }
  Id bottom() const noexcept { return bottom_; }
  /// Join of a family; the empty join is the bottom.
  Id join_all(std::span<const Id> ids) const;
  Id meet_all(std::span<const Id> ids) const;
  std::string label(Id a) const;

 private:
  std::size_t size_;
  std::vector<std::uint8_t> order_;
  std::vector<Id> meet_;
  std::vector<Id> join_;
  Id top_ = 0;
  Id bottom_ = 0;
  std::vector<std::string> labels_;
};

/// A family of subsets closed under intersection, ordered by inclusion.
struct CapStructure {
  std::size_t base_size = 0;
  std::vector<Bitset> sets;  // sets[id] is the member with lattice id `id`
  FiniteLattice lattice;
};

/// Closes `family` under intersection, adds the base set as top if absent,
/// removes duplicates and orders by inclusion. Meet is intersection and join
/// is the intersection of all upper bounds. Throws PreconditionError on an
/// empty family.
CapStructure cap_structure_from_sets(std::size_t base_size, const std::vector<Bitset>& family);

/// Upper-directed subsets have unions equal to their joins. In a finite
/// poset a nonempty upper-directed set has a greatest element m, so the
/// condition is that every member below m is a subset of m and joins into m.
bool directed_unions_are_joins(const CapStructure& cap);

/// Sizes up to this are checked over every subset in the frame law.
inline constexpr std::size_t kExhaustiveFrameLimit = 20;

struct LatticePredicates {
  bool distributive = true;
  bool frame = true;
  /// (a, b, c) with a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c).
  std::optional<std::array<FiniteLattice::Id, 3>> distributivity_witness;
  /// (a, B) with a ∧ ⋁B ≠ ⋁{a ∧ b : b ∈ B}.
  std::optional<std::pair<FiniteLattice::Id, std::vector<FiniteLattice::Id>>> frame_witness;
  bool frame_exhaustive = true;
  std::size_t frame_subsets_checked = 0;
  std::size_t frame_random_samples = 0;
  std::uint64_t seed = 0;
};

/// Above kExhaustiveFrameLimit, unions of two principal downsets are sampled
/// only up to this size.
inline constexpr std::size_t kPairedDownsetLimit = 48;

/// Distributivity over all triples; the frame law over every subset when
/// size <= kExhaustiveFrameLimit, otherwise over principal downsets, unions
/// of two principal downsets (size <= kPairedDownsetLimit) and `samples`
/// seeded random subsets.
LatticePredicates lattice_predicates(const FiniteLattice& lattice, std::uint64_t seed = 0, std::size_t samples = 256);

/// a ∨ ⋀B = ⋀{a ∨ b} as well, over the same subsets as the frame check.
bool symmetric_frame(const FiniteLattice& lattice, std::uint64_t seed = 0, std::size_t samples = 256);

struct MapPredicates {
  bool increasing = true;
  bool extensive = true;
  bool idempotent = true;
  bool preserves_meets = true;
  std::optional<std::pair<FiniteLattice::Id, FiniteLattice::Id>> witness;  // first violating pair (or (a, a))

  bool closure_map() const { return increasing && extensive && idempotent; }
  bool nucleus() const { return closure_map() && preserves_meets; }
};

/// Checks the closure-map laws and f(a ∧ b) = f(a) ∧ f(b). `image[a]` is f(a).
/// Throws PreconditionError if the map is not total on the lattice.
MapPredicates verify_map(const FiniteLattice& lattice, std::span<const FiniteLattice::Id> image);

}  // namespace spectra
