#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/errors.hpp"

namespace spectra {

/// Default bound on |R| for operations that enumerate ring elements.
inline constexpr std::size_t kDefaultElementCap = 5000;

/// Index sets are bitsets, so products are limited to this many factors.
inline constexpr std::size_t kMaxFactors = 64;

/// A subset of the index set {0, ..., universe-1} of a product ring.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::size_t universe, std::uint64_t bits);

  static IndexSet empty(std::size_t universe) { return {universe, 0}; }
  static IndexSet full(std::size_t universe);
  static IndexSet single(std::size_t universe, std::size_t index);

  std::size_t universe() const noexcept { return universe_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool contains(std::size_t index) const noexcept { return index < 64 && ((bits_ >> index) & 1U) != 0; }
  std::size_t size() const noexcept;
  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_subset_of(const IndexSet& other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  std::vector<std::size_t> members() const;

  IndexSet complement() const;
  IndexSet operator|(const IndexSet& other) const;
  IndexSet operator&(const IndexSet& other) const;

  bool operator==(const IndexSet&) const = default;

  /// "{0,2}" style.
  std::string to_string() const;

 private:
  std::size_t universe_ = 0;
  std::uint64_t bits_ = 0;
};

/// A finite product Z_{n_0} x ... x Z_{n_{k-1}}. Copies share the factor list.
class RingSpec {
 public:
  /// Throws PreconditionError on an empty list, a modulus below 2 or more than kMaxFactors factors.
  explicit RingSpec(std::vector<std::uint32_t> factors);

  std::span<const std::uint32_t> factors() const noexcept { return *factors_; }
  std::size_t arity() const noexcept { return factors_->size(); }
  std::uint32_t modulus(std::size_t i) const { return (*factors_)[i]; }

  /// |R| = prod n_i, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> cardinality() const;
  bool within_cap(std::size_t cap) const;
  /// Throws CapExceeded unless |R| <= cap.
  void require_cap(std::size_t cap) const;

  /// Canonical expression, e.g. "Z6 x Z4".
  std::string to_string() const;

  bool operator==(const RingSpec& other) const noexcept;

 private:
  std::shared_ptr<const std::vector<std::uint32_t>> factors_;
};

/// Parses `term (WS* "x" WS* term)*` with `term := "Z" [1-9][0-9]*`.
RingSpec parse_ring_spec(std::string_view text);

/// A residue tuple of a RingSpec.
class RingElement {
 public:
  /// Residues are reduced modulo their factor; the length must match the arity.
  RingElement(RingSpec ring, std::vector<std::uint64_t> residues);

  static RingElement zero(const RingSpec& ring);
  static RingElement one(const RingSpec& ring);

  const RingSpec& ring() const noexcept { return ring_; }
  std::span<const std::uint32_t> residues() const noexcept { return residues_; }
  std::uint32_t residue(std::size_t i) const { return residues_[i]; }

  bool is_zero() const noexcept;

  bool operator==(const RingElement& other) const noexcept;

  /// "(5,3)" style.
  std::string to_string() const;

 private:
  RingElement(RingSpec ring, std::vector<std::uint32_t> residues, bool);

  RingSpec ring_;
  std::vector<std::uint32_t> residues_;

  friend RingElement add(const RingElement&, const RingElement&);
  friend RingElement mul(const RingElement&, const RingElement&);
  friend RingElement neg(const RingElement&);
};

// Componentwise ring operations; mixing rings throws RingMismatch.
RingElement add(const RingElement& x, const RingElement& y);
RingElement mul(const RingElement& x, const RingElement& y);
RingElement neg(const RingElement& x);
RingElement sub(const RingElement& x, const RingElement& y);

inline RingElement operator+(const RingElement& x, const RingElement& y) { return add(x, y); }
inline RingElement operator*(const RingElement& x, const RingElement& y) { return mul(x, y); }
inline RingElement operator-(const RingElement& x, const RingElement& y) { return sub(x, y); }
inline RingElement operator-(const RingElement& x) { return neg(x); }

/// Z(x) = {i : x_i = 0}.
IndexSet zero_set(const RingElement& x);
/// Coz(x) = complement of Z(x).
IndexSet cozero_set(const RingElement& x);

/// e_Z: 0 on Z, 1 off Z. The unique member of E(R) with zero set Z.
RingElement idempotent_for(const IndexSet& zeros, const RingSpec& ring);

/// Membership in E(R): every coordinate is 0 or 1.
bool is_idempotent_01(const RingElement& x);

struct ElementPredicates {
  bool is_unit = false;
  bool is_regular = false;
  bool is_idempotent_01 = false;
};

/// Brute force over R; throws CapExceeded when |R| > cap.
ElementPredicates element_predicates(const RingElement& x, std::size_t cap = kDefaultElementCap);
bool is_unit(const RingElement& x, std::size_t cap = kDefaultElementCap);
bool is_regular(const RingElement& x, std::size_t cap = kDefaultElementCap);

/// R / Jac(R): each factor n_i replaced by rad(n_i), with the reduction map.
struct JacobsonQuotient {
  RingSpec source;
  RingSpec quotient;

  RingElement operator()(const RingElement& x) const;
  bool is_identity() const { return source == quotient; }
};

JacobsonQuotient jacobson_quotient(const RingSpec& ring);

}  // namespace spectra
