#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spectra/ring.hpp"

namespace spectra {

/// Dense enumeration of a ring under the element cap.
///
/// Elements are addressed by their mixed-radix index with coordinate 0 most
/// significant, so index order is the lexicographic order of residue tuples
/// and index 0 is the zero element. Arithmetic on indices goes through
/// per-factor tables when a factor is small; it must agree with the
/// RingElement operations exactly.
class ElementTable {
 public:
  using Index = std::uint32_t;

  /// Throws CapExceeded when |R| > cap.
  explicit ElementTable(RingSpec ring, std::size_t cap = kDefaultElementCap);

  const RingSpec& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t arity() const noexcept { return arity_; }

  std::uint32_t residue(Index x, std::size_t coord) const { return residues_[x * arity_ + coord]; }
  const std::uint32_t* residues(Index x) const { return &residues_[x * arity_]; }
  /// Bit i set iff x_i = 0.
  std::uint64_t zero_mask(Index x) const { return zero_masks_[x]; }

  Index add(Index x, Index y) const;
  Index sub(Index x, Index y) const;
  Index mul(Index x, Index y) const;
  Index neg(Index x) const;

  Index zero() const noexcept { return 0; }
  Index one() const noexcept { return one_; }
  /// Index of e_Z for the zero set given as a bitmask.
  Index idempotent(std::uint64_t zeros) const;

  std::uint32_t coord_add(std::size_t c, std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= moduli_[c] ? s - moduli_[c] : s);
  }
  std::uint32_t coord_mul(std::size_t c, std::uint32_t a, std::uint32_t b) const {
    const auto& table = mul_tables_[c];
    if (!table.empty()) return table[a * moduli_[c] + b];
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % moduli_[c]);
  }

  Index index_of(const RingElement& x) const;
  Index index_of_residues(const std::uint32_t* residues) const;
  RingElement element(Index x) const;

 private:
  RingSpec ring_;
  std::size_t arity_;
  std::size_t size_;
  Index one_ = 0;
  std::vector<std::uint32_t> moduli_;
  std::vector<std::uint64_t> strides_;
  std::vector<std::uint32_t> residues_;
  std::vector<std::uint64_t> zero_masks_;
  std::vector<std::vector<std::uint16_t>> mul_tables_;
};

}  // namespace spectra
