#include "spectra/ideal.hpp"

#include <algorithm>
#include <numeric>

#include "spectra/arith.hpp"
#include "spectra/ring_model.hpp"

namespace spectra {

namespace {

void require_same_ring(const RingSpec& a, const RingSpec& b) {
  if (!(a == b)) throw RingMismatch("ideals of " + a.to_string() + " and " + b.to_string() + " do not mix");
}

template <class Combine>
Ideal componentwise(const Ideal& a, const Ideal& b, Combine&& combine) {
  require_same_ring(a.ring(), b.ring());
  std::vector<std::uint32_t> out(a.divisors().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = combine(a.divisor(i), b.divisor(i), a.ring().modulus(i));
  return Ideal(a.ring(), std::move(out));
}

}  // namespace

Ideal::Ideal(RingSpec ring, std::vector<std::uint32_t> divisors) : ring_(std::move(ring)), divisors_(std::move(divisors)) {
  if (divisors_.size() != ring_.arity())
    throw PreconditionError("divisor tuple has " + std::to_string(divisors_.size()) + " entries for a ring with " +
                            std::to_string(ring_.arity()) + " factors");
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (divisors_[i] == 0 || ring_.modulus(i) % divisors_[i] != 0)
      throw PreconditionError(std::to_string(divisors_[i]) + " does not divide " + std::to_string(ring_.modulus(i)));
}

Ideal Ideal::zero(const RingSpec& ring) {
  return Ideal(ring, std::vector<std::uint32_t>(ring.factors().begin(), ring.factors().end()));
}

Ideal Ideal::whole(const RingSpec& ring) { return Ideal(ring, std::vector<std::uint32_t>(ring.arity(), 1)); }

Ideal Ideal::principal(const RingElement& x) {
  const RingSpec& ring = x.ring();
  std::vector<std::uint32_t> out(ring.arity());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = arith::gcd(x.residue(i), ring.modulus(i));
  return Ideal(ring, std::move(out));
}

Ideal Ideal::component_preimage(const RingSpec& ring, std::size_t index, std::uint32_t divisor) {
  if (index >= ring.arity()) throw PreconditionError("component index out of range");
  std::vector<std::uint32_t> out(ring.arity(), 1);
  out[index] = divisor;
  return Ideal(ring, std::move(out));
}

bool Ideal::contains(const RingElement& x) const {
  if (!(x.ring() == ring_)) throw RingMismatch("element of " + x.ring().to_string() + " tested against an ideal of " + ring_.to_string());
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (x.residue(i) % divisors_[i] != 0) return false;
  return true;
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring_);
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (other.divisors_[i] % divisors_[i] != 0) return false;
  return true;
}

bool Ideal::is_proper() const noexcept {
  return std::any_of(divisors_.begin(), divisors_.end(), [](std::uint32_t d) { return d != 1; });
}

bool Ideal::is_zero() const noexcept {
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (divisors_[i] != ring_.modulus(i)) return false;
  return true;
}

std::optional<std::uint64_t> Ideal::cardinality() const {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    if (__builtin_mul_overflow(out, std::uint64_t{ring_.modulus(i) / divisors_[i]}, &out)) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> Ideal::index() const {
  std::uint64_t out = 1;
  for (std::uint32_t d : divisors_)
    if (__builtin_mul_overflow(out, std::uint64_t{d}, &out)) return std::nullopt;
  return out;
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(divisors_[i]);
  }
  return out + ")";
}

bool Ideal::operator==(const Ideal& other) const noexcept {
  return ring_ == other.ring_ && divisors_ == other.divisors_;
}

bool Ideal::operator<(const Ideal& other) const noexcept { return divisors_ < other.divisors_; }

Ideal sum(const Ideal& a, const Ideal& b) {
  return componentwise(a, b, [](std::uint32_t d, std::uint32_t e, std::uint32_t) { return arith::gcd(d, e); });
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  return componentwise(a, b, [](std::uint32_t d, std::uint32_t e, std::uint32_t) { return arith::lcm(d, e); });
}

Ideal product(const Ideal& a, const Ideal& b) {
  return componentwise(a, b, [](std::uint32_t d, std::uint32_t e, std::uint32_t n) {
    return static_cast<std::uint32_t>(std::gcd(std::uint64_t{d} * e, std::uint64_t{n}));
  });
}

Ideal colon(const Ideal& a, const Ideal& b) {
  return componentwise(a, b, [](std::uint32_t d, std::uint32_t e, std::uint32_t) { return d / arith::gcd(d, e); });
}

Ideal annihilator(const Ideal& b) { return colon(Ideal::zero(b.ring()), b); }

Ideal annihilator(const RingElement& x) { return annihilator(Ideal::principal(x)); }

Ideal radical(const Ideal& a) {
  std::vector<std::uint32_t> out(a.divisors().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = arith::radical(a.divisor(i));
  return Ideal(a.ring(), std::move(out));
}

Ideal ideal_op(IdealOp op, const Ideal& a, const Ideal& b) {
  switch (op) {
    case IdealOp::sum: return sum(a, b);
    case IdealOp::intersect: return intersect(a, b);
    case IdealOp::product: return product(a, b);
    case IdealOp::colon: return colon(a, b);
    case IdealOp::annihilator: return annihilator(a);
    case IdealOp::radical: return radical(a);
  }
  throw PreconditionError("unknown ideal operation");
}

bool is_prime(const Ideal& ideal, std::size_t cap) {
  if (!ideal.is_proper()) return false;
  const std::size_t k = ideal.divisors().size();
  auto quotient = ideal.index();
  if (!quotient || *quotient > cap) {
    std::size_t nontrivial = 0;
    bool prime_component = false;
    for (std::uint32_t d : ideal.divisors())
      if (d != 1) {
        ++nontrivial;
        prime_component = arith::is_prime(d);
      }
    return nontrivial == 1 && prime_component;
  }

  // Coset representatives of R/I are tuples with 0 <= x_i < d_i; membership
  // in I is x_i = 0 in every coordinate.
  const auto d = ideal.divisors();
  auto next = [&](std::vector<std::uint32_t>& digits) {
    for (std::size_t c = k; c-- > 0;) {
      if (++digits[c] < d[c]) return true;
      digits[c] = 0;
    }
    return false;
  };
  std::vector<std::uint32_t> x(k, 0), y(k, 0);
  while (next(x)) {
    std::fill(y.begin(), y.end(), 0);
    while (next(y)) {
      bool product_in = true;
      for (std::size_t c = 0; c < k && product_in; ++c) product_in = arith::mul_mod(x[c], y[c], d[c]) == 0;
      if (product_in) return false;
    }
  }
  return true;
}

std::vector<Ideal> enumerate(const RingSpec& ring, IdealKind kind, std::size_t cap) {
  std::vector<std::vector<std::uint32_t>> choices;
  for (std::uint32_t n : ring.factors()) choices.push_back(arith::divisors(n));

  std::vector<Ideal> all;
  std::vector<std::size_t> pos(ring.arity(), 0);
  while (true) {
    std::vector<std::uint32_t> divisors(ring.arity());
    for (std::size_t c = 0; c < pos.size(); ++c) divisors[c] = choices[c][pos[c]];
    all.emplace_back(ring, std::move(divisors));
    std::size_t c = pos.size();
    while (c-- > 0) {
      if (++pos[c] < choices[c].size()) break;
      pos[c] = 0;
    }
    if (c == static_cast<std::size_t>(-1)) break;
  }
  if (kind == IdealKind::ideals) return all;

  std::vector<Ideal> primes;
  for (auto& ideal : all)
    if (is_prime(ideal, cap)) primes.push_back(std::move(ideal));
  if (kind == IdealKind::spec) return primes;

  std::vector<Ideal> out;
  for (const auto& p : primes) {
    bool extreme = true;
    for (const auto& q : primes) {
      if (q == p) continue;
      // max: no prime strictly above p; min: no prime strictly below p.
      if (kind == IdealKind::max ? q.contains(p) : p.contains(q)) {
        extreme = false;
        break;
      }
    }
    if (extreme) out.push_back(p);
  }
  return out;
}

Ideal jacobson_radical(const RingSpec& ring) {
  Ideal out = Ideal::whole(ring);
  for (const auto& m : enumerate(ring, IdealKind::max)) out = intersect(out, m);
  return out;
}

Ideal nilradical(const RingSpec& ring) {
  Ideal out = Ideal::whole(ring);
  for (const auto& p : enumerate(ring, IdealKind::spec)) out = intersect(out, p);
  return out;
}

std::optional<std::pair<Ideal, Ideal>> direct_sum_split(const RingSpec& ring) {
  const auto all = enumerate(ring, IdealKind::ideals);
  const Ideal whole = Ideal::whole(ring);
  const Ideal zero = Ideal::zero(ring);
  for (const auto& a : all) {
    if (!a.is_proper() || a.is_zero()) continue;
    for (const auto& b : all) {
      if (!b.is_proper() || b.is_zero()) continue;
      if (sum(a, b) == whole && intersect(a, b) == zero) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

IdealPredicates classify_ideal(const Ideal& ideal, std::size_t cap) {
  RingModel model(ideal.ring(), cap);
  return model.predicates(model.index_of(ideal));
}

RingPredicates ring_predicates(const RingSpec& ring, std::size_t cap) {
  return RingModel(ring, cap).ring_predicates();
}

}  // namespace spectra
