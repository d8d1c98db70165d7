#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spectra/ring.hpp"

namespace spectra {

/// An ideal d_0 Z_{n_0} x ... x d_{k-1} Z_{n_{k-1}} of a product ring, stored
/// by its divisor tuple. Every ideal of the supported ring class has exactly
/// one such form.
class Ideal {
 public:
  /// Throws PreconditionError unless each d_i divides n_i.
  Ideal(RingSpec ring, std::vector<std::uint32_t> divisors);

  static Ideal zero(const RingSpec& ring);
  static Ideal whole(const RingSpec& ring);
  /// <x> = (gcd(x_i, n_i)).
  static Ideal principal(const RingElement& x);
  /// pi_index^{-1}(d Z_{n_index}); every other component is full.
  static Ideal component_preimage(const RingSpec& ring, std::size_t index, std::uint32_t divisor);

  const RingSpec& ring() const noexcept { return ring_; }
  std::span<const std::uint32_t> divisors() const noexcept { return divisors_; }
  std::uint32_t divisor(std::size_t i) const { return divisors_[i]; }

  /// x in I iff d_i | x_i for every i.
  bool contains(const RingElement& x) const;
  /// J subset of I.
  bool contains(const Ideal& other) const;
  bool is_proper() const noexcept;
  bool is_zero() const noexcept;

  /// |I| = prod n_i / d_i; nullopt on 64-bit overflow.
  std::optional<std::uint64_t> cardinality() const;
  /// |R / I| = prod d_i; nullopt on 64-bit overflow.
  std::optional<std::uint64_t> index() const;

  /// "(2,1)" style.
  std::string to_string() const;

  bool operator==(const Ideal& other) const noexcept;
  /// Lexicographic on divisor tuples.
  bool operator<(const Ideal& other) const noexcept;

 private:
  RingSpec ring_;
  std::vector<std::uint32_t> divisors_;
};

// Ideal operations. Mixing rings throws RingMismatch.
Ideal sum(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
/// (a : b) = {x : x b subset of a}.
Ideal colon(const Ideal& a, const Ideal& b);
/// (0 : b).
Ideal annihilator(const Ideal& b);
/// (0 : x).
Ideal annihilator(const RingElement& x);
Ideal radical(const Ideal& a);

enum class IdealOp { sum, intersect, product, colon, annihilator, radical };

/// Dispatches to the named operation; unary kinds ignore `b`.
Ideal ideal_op(IdealOp op, const Ideal& a, const Ideal& b);

enum class IdealKind { ideals, spec, max, min };

/// All ideals of the given kind in lexicographic divisor order. Primality is
/// decided by the definitional test on R/I when |R/I| <= cap, and by the
/// divisor shape (one non-trivial component, prime) otherwise.
std::vector<Ideal> enumerate(const RingSpec& ring, IdealKind kind, std::size_t cap = kDefaultElementCap);

/// Definitional primality: proper, and xy in I forces x in I or y in I.
/// Falls back to the divisor shape when |R/I| > cap.
bool is_prime(const Ideal& ideal, std::size_t cap = kDefaultElementCap);

Ideal jacobson_radical(const RingSpec& ring);
Ideal nilradical(const RingSpec& ring);

/// Some (I, J), both proper and nonzero, with I + J = R and I ∩ J = 0; the
/// first such pair in lexicographic order of (I, J).
std::optional<std::pair<Ideal, Ideal>> direct_sum_split(const RingSpec& ring);

struct IdealPredicates {
  bool prime = false;
  bool maximal = false;
  bool minimal_prime = false;
  bool semiprime = false;
  bool pseudoprime = false;
  bool z_ideal = false;
  bool strong_z_ideal = false;
  bool hilbert = false;
  bool essential = false;
  bool regular_ideal = false;

  bool operator==(const IdealPredicates&) const = default;
};

/// Builds the ring model; element-level flags need |R| <= cap.
IdealPredicates classify_ideal(const Ideal& ideal, std::size_t cap = kDefaultElementCap);

struct RingPredicates {
  bool von_neumann_regular = false;
  bool gelfand = false;
  bool reduced = false;
  bool semiprimitive = false;
  bool every_prime_maximal = false;
  bool no_regular_proper_ideal = false;

  bool operator==(const RingPredicates&) const = default;
};

RingPredicates ring_predicates(const RingSpec& ring, std::size_t cap = kDefaultElementCap);

}  // namespace spectra
