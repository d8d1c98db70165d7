#include "spectra/element_table.hpp"

namespace spectra {

namespace {
constexpr std::uint32_t kTabulatedModulus = 256;
}

ElementTable::ElementTable(RingSpec ring, std::size_t cap) : ring_(std::move(ring)), arity_(ring_.arity()) {
  ring_.require_cap(cap);
  size_ = static_cast<std::size_t>(*ring_.cardinality());
  moduli_.assign(ring_.factors().begin(), ring_.factors().end());

  strides_.assign(arity_, 1);
  for (std::size_t c = arity_; c-- > 1;) strides_[c - 1] = strides_[c] * moduli_[c];

  residues_.resize(size_ * arity_);
  zero_masks_.resize(size_);
  std::vector<std::uint32_t> digits(arity_, 0);
  for (std::size_t x = 0; x < size_; ++x) {
    std::uint64_t mask = 0;
    for (std::size_t c = 0; c < arity_; ++c) {
      residues_[x * arity_ + c] = digits[c];
      if (digits[c] == 0) mask |= std::uint64_t{1} << c;
    }
    zero_masks_[x] = mask;
    for (std::size_t c = arity_; c-- > 0;) {
      if (++digits[c] < moduli_[c]) break;
      digits[c] = 0;
    }
  }

  mul_tables_.resize(arity_);
  for (std::size_t c = 0; c < arity_; ++c) {
    std::uint32_t n = moduli_[c];
    if (n > kTabulatedModulus) continue;
    auto& table = mul_tables_[c];
    table.resize(static_cast<std::size_t>(n) * n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) table[a * n + b] = static_cast<std::uint16_t>(a * b % n);
  }

  std::uint64_t one = 0;
  for (std::size_t c = 0; c < arity_; ++c) one += strides_[c];
  one_ = static_cast<Index>(one);
}

ElementTable::Index ElementTable::add(Index x, Index y) const {
  std::uint64_t out = 0;
  for (std::size_t c = 0; c < arity_; ++c) out += strides_[c] * coord_add(c, residue(x, c), residue(y, c));
  return static_cast<Index>(out);
}

ElementTable::Index ElementTable::neg(Index x) const {
  std::uint64_t out = 0;
  for (std::size_t c = 0; c < arity_; ++c) {
    std::uint32_t r = residue(x, c);
    out += strides_[c] * (r == 0 ? 0 : moduli_[c] - r);
  }
  return static_cast<Index>(out);
}

ElementTable::Index ElementTable::sub(Index x, Index y) const { return add(x, neg(y)); }

ElementTable::Index ElementTable::mul(Index x, Index y) const {
  std::uint64_t out = 0;
  for (std::size_t c = 0; c < arity_; ++c) out += strides_[c] * coord_mul(c, residue(x, c), residue(y, c));
  return static_cast<Index>(out);
}

ElementTable::Index ElementTable::idempotent(std::uint64_t zeros) const {
  std::uint64_t out = 0;
  for (std::size_t c = 0; c < arity_; ++c)
    if (((zeros >> c) & 1U) == 0) out += strides_[c];
  return static_cast<Index>(out);
}

ElementTable::Index ElementTable::index_of_residues(const std::uint32_t* residues) const {
  std::uint64_t out = 0;
  for (std::size_t c = 0; c < arity_; ++c) out += strides_[c] * residues[c];
  return static_cast<Index>(out);
}

ElementTable::Index ElementTable::index_of(const RingElement& x) const {
  if (!(x.ring() == ring_)) throw RingMismatch("element is not in " + ring_.to_string());
  return index_of_residues(x.residues().data());
}

RingElement ElementTable::element(Index x) const {
  std::vector<std::uint64_t> residues(residues_.begin() + static_cast<std::ptrdiff_t>(x * arity_),
                                      residues_.begin() + static_cast<std::ptrdiff_t>((x + 1) * arity_));
  return {ring_, std::move(residues)};
}

}  // namespace spectra
