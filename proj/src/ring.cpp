#include "spectra/ring.hpp"

#include <bit>
#include <cctype>
#include <limits>

#include "spectra/arith.hpp"

namespace spectra {

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::size_t universe, std::uint64_t bits) : universe_(universe), bits_(bits) {
  if (universe > kMaxFactors) throw PreconditionError("index set universe larger than 64");
  if (universe < 64 && (bits >> universe) != 0) throw PreconditionError("index set has members outside its universe");
}

IndexSet IndexSet::full(std::size_t universe) {
  return {universe, universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1};
}

IndexSet IndexSet::single(std::size_t universe, std::size_t index) {
  if (index >= universe) throw PreconditionError("index outside the index set");
  return {universe, std::uint64_t{1} << index};
}

std::size_t IndexSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> IndexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < universe_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

IndexSet IndexSet::complement() const { return {universe_, full(universe_).bits_ & ~bits_}; }

IndexSet IndexSet::operator|(const IndexSet& other) const {
  if (universe_ != other.universe_) throw RingMismatch("index sets over different universes");
  return {universe_, bits_ | other.bits_};
}

IndexSet IndexSet::operator&(const IndexSet& other) const {
  if (universe_ != other.universe_) throw RingMismatch("index sets over different universes");
  return {universe_, bits_ & other.bits_};
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : members()) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------- RingSpec

RingSpec::RingSpec(std::vector<std::uint32_t> factors) {
  if (factors.empty()) throw PreconditionError("empty product: a ring needs at least one factor");
  if (factors.size() > kMaxFactors) throw PreconditionError("more than 64 factors");
  for (std::uint32_t n : factors)
    if (n < 2) throw PreconditionError("modulus " + std::to_string(n) + " < 2");
  factors_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(factors));
}

std::optional<std::uint64_t> RingSpec::cardinality() const {
  unsigned __int128 card = 1;
  for (std::uint32_t n : *factors_) {
    card *= n;
    if (card > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(card);
}

bool RingSpec::within_cap(std::size_t cap) const {
  auto card = cardinality();
  return card && *card <= cap;
}

void RingSpec::require_cap(std::size_t cap) const {
  if (!within_cap(cap)) throw CapExceeded(cardinality().value_or(UINT64_MAX), cap);
}

std::string RingSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_->size(); ++i) {
    if (i) out += " x ";
    out += "Z" + std::to_string((*factors_)[i]);
  }
  return out;
}

bool RingSpec::operator==(const RingSpec& other) const noexcept {
  return factors_ == other.factors_ || *factors_ == *other.factors_;
}

RingSpec parse_ring_spec(std::string_view text) {
  std::vector<std::uint32_t> factors;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_term = [&] {
    if (pos >= text.size() || text[pos] != 'Z') throw ParseError("expected 'Z'", pos);
    ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected a modulus after 'Z'", pos);
    if (text[pos] == '0') throw ParseError("modulus may not start with 0", pos);
    std::size_t start = pos;
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) throw ParseError("modulus does not fit in 32 bits", start);
      ++pos;
    }
    if (value < 2) throw ParseError("modulus " + std::to_string(value) + " < 2", start);
    factors.push_back(static_cast<std::uint32_t>(value));
  };

  if (text.empty()) throw ParseError("empty product", 0);
  parse_term();
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size() || text[pos] != 'x') throw ParseError("expected 'x'", pos);
    ++pos;
    skip_ws();
    parse_term();
  }
  if (factors.size() > kMaxFactors) throw ParseError("more than 64 factors", text.size());
  return RingSpec(std::move(factors));
}

// ---------------------------------------------------------------- RingElement

RingElement::RingElement(RingSpec ring, std::vector<std::uint64_t> residues) : ring_(std::move(ring)) {
  if (residues.size() != ring_.arity()) throw RingMismatch("residue tuple length does not match the ring");
  residues_.reserve(residues.size());
  for (std::size_t i = 0; i < residues.size(); ++i)
    residues_.push_back(static_cast<std::uint32_t>(residues[i] % ring_.modulus(i)));
}

RingElement::RingElement(RingSpec ring, std::vector<std::uint32_t> residues, bool)
    : ring_(std::move(ring)), residues_(std::move(residues)) {}

RingElement RingElement::zero(const RingSpec& ring) {
  return {ring, std::vector<std::uint32_t>(ring.arity(), 0), true};
}

RingElement RingElement::one(const RingSpec& ring) {
  return {ring, std::vector<std::uint32_t>(ring.arity(), 1), true};
}

bool RingElement::is_zero() const noexcept {
  for (std::uint32_t r : residues_)
    if (r != 0) return false;
  return true;
}

bool RingElement::operator==(const RingElement& other) const noexcept {
  return ring_ == other.ring_ && residues_ == other.residues_;
}

std::string RingElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(residues_[i]);
  }
  return out + ")";
}

namespace {

void require_same_ring(const RingElement& x, const RingElement& y) {
  if (!(x.ring() == y.ring()))
    throw RingMismatch("elements of " + x.ring().to_string() + " and " + y.ring().to_string() + " do not mix");
}

// Calls visit(element) for every element of the ring in lexicographic order until it returns false.
template <class Visit>
void for_each_element(const RingSpec& ring, Visit&& visit) {
  std::vector<std::uint64_t> digits(ring.arity(), 0);
  while (true) {
    if (!visit(RingElement(ring, digits))) return;
    std::size_t i = digits.size();
    while (i > 0) {
      --i;
      if (++digits[i] < ring.modulus(i)) break;
      digits[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

RingElement add(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  std::vector<std::uint32_t> out(x.residues_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = arith::add_mod(x.residues_[i], y.residues_[i], x.ring_.modulus(i));
  return {x.ring_, std::move(out), true};
}

RingElement mul(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  std::vector<std::uint32_t> out(x.residues_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = arith::mul_mod(x.residues_[i], y.residues_[i], x.ring_.modulus(i));
  return {x.ring_, std::move(out), true};
}

RingElement neg(const RingElement& x) {
  std::vector<std::uint32_t> out(x.residues_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = x.residues_[i] == 0 ? 0 : x.ring_.modulus(i) - x.residues_[i];
  return {x.ring_, std::move(out), true};
}

RingElement sub(const RingElement& x, const RingElement& y) { return add(x, neg(y)); }

IndexSet zero_set(const RingElement& x) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < x.residues().size(); ++i)
    if (x.residue(i) == 0) bits |= std::uint64_t{1} << i;
  return {x.ring().arity(), bits};
}

IndexSet cozero_set(const RingElement& x) { return zero_set(x).complement(); }

RingElement idempotent_for(const IndexSet& zeros, const RingSpec& ring) {
  if (zeros.universe() != ring.arity()) throw RingMismatch("index set does not match the ring's index set");
  std::vector<std::uint64_t> residues(ring.arity());
  for (std::size_t i = 0; i < residues.size(); ++i) residues[i] = zeros.contains(i) ? 0 : 1;
  return {ring, std::move(residues)};
}

bool is_idempotent_01(const RingElement& x) {
  for (std::uint32_t r : x.residues())
    if (r > 1) return false;
  return true;
}

bool is_unit(const RingElement& x, std::size_t cap) {
  x.ring().require_cap(cap);
  const RingElement one = RingElement::one(x.ring());
  bool found = false;
  for_each_element(x.ring(), [&](const RingElement& y) {
    found = mul(x, y) == one;
    return !found;
  });
  return found;
}

bool is_regular(const RingElement& x, std::size_t cap) {
  x.ring().require_cap(cap);
  bool regular = true;
  for_each_element(x.ring(), [&](const RingElement& y) {
    if (!y.is_zero() && mul(x, y).is_zero()) regular = false;
    return regular;
  });
  return regular;
}

ElementPredicates element_predicates(const RingElement& x, std::size_t cap) {
  return {is_unit(x, cap), is_regular(x, cap), is_idempotent_01(x)};
}

RingElement JacobsonQuotient::operator()(const RingElement& x) const {
  if (!(x.ring() == source)) throw RingMismatch("element is not in " + source.to_string());
  std::vector<std::uint64_t> residues(x.residues().begin(), x.residues().end());
  return {quotient, std::move(residues)};
}

JacobsonQuotient jacobson_quotient(const RingSpec& ring) {
  std::vector<std::uint32_t> reduced;
  reduced.reserve(ring.arity());
  for (std::uint32_t n : ring.factors()) reduced.push_back(arith::radical(n));
  return {ring, RingSpec(std::move(reduced))};
}

}  // namespace spectra
