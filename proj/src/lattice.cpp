#include "spectra/lattice.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "spectra/errors.hpp"

namespace spectra {

// ---------------------------------------------------------------- Bitset

std::size_t Bitset::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

Bitset Bitset::operator&(const Bitset& other) const {
  Bitset out(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

Bitset Bitset::operator|(const Bitset& other) const {
  Bitset out(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | other.words_[i];
  return out;
}

// ---------------------------------------------------------------- FiniteLattice

FiniteLattice::FiniteLattice(std::size_t size, const std::function<bool(Id, Id)>& leq, std::vector<std::string> labels)
    : size_(size), order_(size * size), meet_(size * size), join_(size * size), labels_(std::move(labels)) {
  if (size == 0) throw PreconditionError("a lattice needs at least one element");
  for (Id a = 0; a < size; ++a)
    for (Id b = 0; b < size; ++b) order_[a * size + b] = leq(a, b) ? 1 : 0;

  for (Id a = 0; a < size; ++a) {
    if (!this->leq(a, a)) throw PreconditionError("order is not reflexive");
    for (Id b = 0; b < size; ++b) {
      if (a != b && this->leq(a, b) && this->leq(b, a)) throw PreconditionError("order is not antisymmetric");
      if (!this->leq(a, b)) continue;
      for (Id c = 0; c < size; ++c)
        if (this->leq(b, c) && !this->leq(a, c)) throw PreconditionError("order is not transitive");
    }
  }

  std::vector<std::size_t> below(size, 0), above(size, 0);
  for (Id a = 0; a < size; ++a)
    for (Id b = 0; b < size; ++b) {
      if (this->leq(b, a)) ++below[a];
      if (this->leq(a, b)) ++above[a];
    }

  // The meet is the lower bound with the most elements below it, provided it
  // dominates every other lower bound; dually for the join.
  std::vector<Id> bounds;
  for (Id a = 0; a < size; ++a) {
    for (Id b = a; b < size; ++b) {
      bounds.clear();
      for (Id c = 0; c < size; ++c)
        if (this->leq(c, a) && this->leq(c, b)) bounds.push_back(c);
      if (bounds.empty()) throw PreconditionError("missing meet of " + label(a) + " and " + label(b));
      Id best = *std::max_element(bounds.begin(), bounds.end(), [&](Id x, Id y) { return below[x] < below[y]; });
      for (Id c : bounds)
        if (!this->leq(c, best)) throw PreconditionError("missing meet of " + label(a) + " and " + label(b));
      meet_[a * size + b] = meet_[b * size + a] = best;

      bounds.clear();
      for (Id c = 0; c < size; ++c)
        if (this->leq(a, c) && this->leq(b, c)) bounds.push_back(c);
      if (bounds.empty()) throw PreconditionError("missing join of " + label(a) + " and " + label(b));
      best = *std::max_element(bounds.begin(), bounds.end(), [&](Id x, Id y) { return above[x] < above[y]; });
      for (Id c : bounds)
        if (!this->leq(best, c)) throw PreconditionError("missing join of " + label(a) + " and " + label(b));
      join_[a * size + b] = join_[b * size + a] = best;
    }
  }

  top_ = 0;
  bottom_ = 0;
  for (Id a = 1; a < size; ++a) {
    top_ = join(top_, a);
    bottom_ = meet(bottom_, a);
  }
}

FiniteLattice::Id FiniteLattice::join_all(std::span<const Id> ids) const {
  Id acc = bottom_;
  for (Id a : ids) acc = join(acc, a);
  return acc;
}

FiniteLattice::Id FiniteLattice::meet_all(std::span<const Id> ids) const {
  Id acc = top_;
  for (Id a : ids) acc = meet(acc, a);
  return acc;
}

std::string FiniteLattice::label(Id a) const {
  if (a < labels_.size()) return labels_[a];
  return "#" + std::to_string(a);
}

// ---------------------------------------------------------------- cap structures

CapStructure cap_structure_from_sets(std::size_t base_size, const std::vector<Bitset>& family) {
  if (family.empty()) throw PreconditionError("cap-structure needs a nonempty family");
  std::vector<Bitset> sets;
  auto insert = [&](const Bitset& s) {
    if (std::find(sets.begin(), sets.end(), s) == sets.end()) {
      sets.push_back(s);
      return true;
    }
    return false;
  };
  for (const auto& s : family) {
    if (s.size() != base_size) throw PreconditionError("subset over a different base set");
    insert(s);
  }
  Bitset base(base_size);
  for (std::size_t i = 0; i < base_size; ++i) base.set(i);
  insert(base);

  // Closing under binary intersection closes under arbitrary intersection of a finite family.
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) insert(sets[i] & sets[j]);

  std::stable_sort(sets.begin(), sets.end(), [](const Bitset& a, const Bitset& b) { return a.count() < b.count(); });
  FiniteLattice lattice(sets.size(), [&](std::size_t a, std::size_t b) { return sets[a].is_subset_of(sets[b]); });
  return {base_size, std::move(sets), std::move(lattice)};
}

bool directed_unions_are_joins(const CapStructure& cap) {
  const auto& L = cap.lattice;
  for (std::size_t m = 0; m < L.size(); ++m)
    for (std::size_t a = 0; a < L.size(); ++a) {
      if (!L.leq(a, m)) continue;
      if ((cap.sets[a] | cap.sets[m]) != cap.sets[m] || L.join(a, m) != m) return false;
    }
  return true;
}

// ---------------------------------------------------------------- predicates

namespace {

using Id = FiniteLattice::Id;

// Visits the candidate subsets B for the frame laws. Returns false from
// `visit` to stop early.
template <class Visit>
void for_each_frame_subset(const FiniteLattice& L, std::uint64_t seed, std::size_t samples, LatticePredicates* info,
                           Visit&& visit) {
  const std::size_t n = L.size();
  std::vector<Id> subset;
  if (n <= kExhaustiveFrameLimit) {
    if (info) info->frame_exhaustive = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      subset.clear();
      for (Id a = 0; a < n; ++a)
        if ((mask >> a) & 1U) subset.push_back(a);
      if (info) ++info->frame_subsets_checked;
      if (!visit(subset)) return;
    }
    return;
  }
  if (info) info->frame_exhaustive = false;
  auto downset = [&](Id top, std::vector<Id>& out) {
    for (Id a = 0; a < n; ++a)
      if (L.leq(a, top) && std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  };
  for (Id b = 0; b < n; ++b)
    for (Id c = b; c < n; ++c) {
      if (c != b && n > kPairedDownsetLimit) break;
      subset.clear();
      downset(b, subset);
      downset(c, subset);
      if (info) ++info->frame_subsets_checked;
      if (!visit(subset)) return;
    }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    subset.clear();
    for (Id a = 0; a < n; ++a)
      if (rng() & 1U) subset.push_back(a);
    if (info) {
      ++info->frame_subsets_checked;
      ++info->frame_random_samples;
    }
    if (!visit(subset)) return;
  }
}

}  // namespace

LatticePredicates lattice_predicates(const FiniteLattice& L, std::uint64_t seed, std::size_t samples) {
  LatticePredicates out;
  out.seed = seed;
  const std::size_t n = L.size();
  for (Id a = 0; a < n && out.distributive; ++a)
    for (Id b = 0; b < n && out.distributive; ++b)
      for (Id c = 0; c < n; ++c) {
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) {
          out.distributive = false;
          out.distributivity_witness = std::array<Id, 3>{a, b, c};
          break;
        }
      }

  if (n <= kExhaustiveFrameLimit) {
    // Dynamic programming over subsets: joins[mask] = ⋁ mask.
    out.frame_exhaustive = true;
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<std::uint8_t> joins(count), meet_joins(count);
    joins[0] = static_cast<std::uint8_t>(L.bottom());
    for (std::uint64_t mask = 1; mask < count; ++mask) {
      Id low = static_cast<Id>(std::countr_zero(mask));
      joins[mask] = static_cast<std::uint8_t>(L.join(joins[mask & (mask - 1)], low));
    }
    for (Id a = 0; a < n && out.frame; ++a) {
      meet_joins[0] = static_cast<std::uint8_t>(L.bottom());
      for (std::uint64_t mask = 1; mask < count; ++mask) {
        Id low = static_cast<Id>(std::countr_zero(mask));
        meet_joins[mask] = static_cast<std::uint8_t>(L.join(meet_joins[mask & (mask - 1)], L.meet(a, low)));
        if (L.meet(a, joins[mask]) != meet_joins[mask]) {
          out.frame = false;
          std::vector<Id> subset;
          for (Id b = 0; b < n; ++b)
            if ((mask >> b) & 1U) subset.push_back(b);
          out.frame_witness = std::make_pair(a, std::move(subset));
          break;
        }
      }
      out.frame_subsets_checked += count;
    }
    return out;
  }

  std::vector<Id> meets;
  for_each_frame_subset(L, seed, samples, &out, [&](const std::vector<Id>& subset) {
    const Id whole = L.join_all(subset);
    for (Id a = 0; a < n; ++a) {
      meets.clear();
      for (Id b : subset) meets.push_back(L.meet(a, b));
      if (L.meet(a, whole) != L.join_all(meets)) {
        out.frame = false;
        out.frame_witness = std::make_pair(a, subset);
        return false;
      }
    }
    return true;
  });
  return out;
}

bool symmetric_frame(const FiniteLattice& L, std::uint64_t seed, std::size_t samples) {
  if (!lattice_predicates(L, seed, samples).frame) return false;
  bool holds = true;
  std::vector<Id> joins;
  for_each_frame_subset(L, seed, samples, nullptr, [&](const std::vector<Id>& subset) {
    const Id whole = L.meet_all(subset);
    for (Id a = 0; a < L.size(); ++a) {
      joins.clear();
      for (Id b : subset) joins.push_back(L.join(a, b));
      if (L.join(a, whole) != L.meet_all(joins)) {
        holds = false;
        return false;
      }
    }
    return true;
  });
  return holds;
}

MapPredicates verify_map(const FiniteLattice& L, std::span<const Id> image) {
  if (image.size() != L.size()) throw PreconditionError("map is not total on the lattice");
  for (Id v : image)
    if (v >= L.size()) throw PreconditionError("map leaves the lattice");
  MapPredicates out;
  auto note = [&](Id a, Id b) {
    if (!out.witness) out.witness = std::make_pair(a, b);
  };
  for (Id a = 0; a < L.size(); ++a) {
    if (!L.leq(a, image[a])) out.extensive = false, note(a, a);
    if (image[image[a]] != image[a]) out.idempotent = false, note(a, a);
    for (Id b = 0; b < L.size(); ++b) {
      if (L.leq(a, b) && !L.leq(image[a], image[b])) out.increasing = false, note(a, b);
      if (image[L.meet(a, b)] != L.meet(image[a], image[b])) out.preserves_meets = false, note(a, b);
    }
  }
  return out;
}

}  // namespace spectra
