#include "spectra/ring_model.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "spectra/arith.hpp"

namespace spectra {

RingModel::RingModel(RingSpec ring, std::size_t cap)
    : ring_(std::move(ring)), cap_(cap), ideals_(enumerate(ring_, IdealKind::ideals, cap)) {
  const std::size_t k = ring_.arity();
  const std::size_t n = ideals_.size();
  for (std::uint32_t m : ring_.factors()) divisor_lists_.push_back(arith::divisors(m));
  strides_.assign(k, 1);
  for (std::size_t c = k; c-- > 1;) strides_[c - 1] = strides_[c] * divisor_lists_[c].size();

  leq_.resize(n * n);
  sum_.resize(n * n);
  meet_.resize(n * n);
  annihilator_.resize(n);
  for (Id a = 0; a < n; ++a) {
    annihilator_[a] = index_of(spectra::annihilator(ideals_[a]));
    for (Id b = 0; b < n; ++b) {
      leq_[a * n + b] = ideals_[b].contains(ideals_[a]) ? 1 : 0;
      if (b < a) continue;
      sum_[a * n + b] = sum_[b * n + a] = index_of(spectra::sum(ideals_[a], ideals_[b]));
      meet_[a * n + b] = meet_[b * n + a] = index_of(intersect(ideals_[a], ideals_[b]));
    }
  }

  for (Id a = 0; a < n; ++a)
    if (is_prime(ideals_[a], cap)) spec_.push_back(a);
  for (Id p : spec_) {
    bool top = true, bottom = true;
    for (Id q : spec_) {
      if (q == p) continue;
      if (leq(p, q)) top = false;
      if (leq(q, p)) bottom = false;
    }
    if (top) maximal_.push_back(p);
    if (bottom) minimal_.push_back(p);
  }
  if (maximal_.size() > 64) throw PreconditionError(ring_.to_string() + " has more than 64 maximal ideals");

  hull_.resize(n);
  for (Id a = 0; a < n; ++a) {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < maximal_.size(); ++j)
      if (leq(a, maximal_[j])) mask |= std::uint64_t{1} << j;
    hull_[a] = mask;
  }
  jacobson_ = kernel(all_points());
  nilradical_ = whole();
  for (Id p : spec_) nilradical_ = meet(nilradical_, p);

  if (!ring_.within_cap(cap)) return;
  table_.emplace(ring_, cap);
  residue_position_.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    const std::uint32_t m = ring_.modulus(c);
    const auto& list = divisor_lists_[c];
    auto& positions = residue_position_[c];
    positions.resize(m);
    for (std::uint32_t r = 0; r < m; ++r) {
      const std::uint32_t g = arith::gcd(r, m);
      positions[r] = static_cast<std::uint32_t>(std::lower_bound(list.begin(), list.end(), g) - list.begin());
    }
  }
  constexpr Index kUnset = static_cast<Index>(-1);
  generators_.assign(n, kUnset);
  for (Index x = 0; x < table_->size(); ++x) {
    Id p = principal_of(x);
    if (generators_[p] == kUnset) generators_[p] = x;
  }
  for (Id a = 0; a < n; ++a)
    if (generators_[a] == kUnset) throw PreconditionError("ideal " + ideals_[a].to_string() + " is not principal");
  compute_predicates();
}

RingModel::Id RingModel::index_of(const Ideal& ideal) const {
  if (!(ideal.ring() == ring_)) throw RingMismatch("ideal of " + ideal.ring().to_string() + " used with " + ring_.to_string());
  Id out = 0;
  for (std::size_t c = 0; c < ring_.arity(); ++c) {
    const auto& list = divisor_lists_[c];
    out += strides_[c] * static_cast<std::size_t>(std::lower_bound(list.begin(), list.end(), ideal.divisor(c)) - list.begin());
  }
  return out;
}

RingModel::Id RingModel::product(Id a, Id b) const { return index_of(spectra::product(ideals_[a], ideals_[b])); }

std::uint64_t RingModel::all_points() const noexcept {
  return maximal_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << maximal_.size()) - 1;
}

RingModel::Id RingModel::kernel(std::uint64_t points) const {
  Id out = whole();
  for (std::size_t j = 0; j < maximal_.size(); ++j)
    if ((points >> j) & 1U) out = meet(out, maximal_[j]);
  return out;
}

const ElementTable& RingModel::elements() const {
  if (!table_) ring_.require_cap(cap_);
  return *table_;
}

RingModel::Id RingModel::principal_of(Index x) const {
  const auto& table = elements();
  Id out = 0;
  for (std::size_t c = 0; c < ring_.arity(); ++c) out += strides_[c] * residue_position_[c][table.residue(x, c)];
  return out;
}

const std::vector<RingModel::Index>& RingModel::generators() const {
  elements();
  return generators_;
}

const IdealPredicates& RingModel::predicates(Id a) const {
  elements();
  return predicates_[a];
}

const RingPredicates& RingModel::ring_predicates() const {
  elements();
  return ring_predicates_;
}

FiniteLattice RingModel::lattice() const {
  std::vector<std::string> labels;
  for (const auto& ideal : ideals_) labels.push_back(ideal.to_string());
  return FiniteLattice(ideals_.size(), [this](Id a, Id b) { return leq(a, b); }, std::move(labels));
}

void RingModel::compute_predicates() {
  const std::size_t n = ideals_.size();
  const auto& table = *table_;

  // Every element generates one of the ideals, so element quantifiers run over
  // one generator per ideal; elements x with <x> = J share h(x) and Ann(x).
  std::vector<std::uint64_t> hull_values(hull_.begin(), hull_.end());
  std::sort(hull_values.begin(), hull_values.end());
  hull_values.erase(std::unique(hull_values.begin(), hull_values.end()), hull_values.end());

  predicates_.assign(n, {});
  for (Id a = 0; a < n; ++a) {
    IdealPredicates& p = predicates_[a];
    p.prime = std::find(spec_.begin(), spec_.end(), a) != spec_.end();
    p.maximal = std::find(maximal_.begin(), maximal_.end(), a) != maximal_.end();
    p.minimal_prime = std::find(minimal_.begin(), minimal_.end(), a) != minimal_.end();

    Id primes_above = whole();
    for (Id q : spec_)
      if (leq(a, q)) primes_above = meet(primes_above, q);
    p.semiprime = primes_above == a;
    p.hilbert = kernel(hull_[a]) == a;

    p.pseudoprime = true;
    p.regular_ideal = false;
    for (Id j = 0; j < n; ++j) {
      if (!leq(j, a) && !leq(annihilator_[j], a)) p.pseudoprime = false;
      if (leq(j, a) && annihilator_[j] == zero()) p.regular_ideal = true;
    }

    // z-ideal: each hull class lies wholly inside or wholly outside I.
    p.z_ideal = true;
    for (std::uint64_t mask : hull_values) {
      bool some_in = false, some_out = false;
      for (Id j = 0; j < n; ++j) {
        if (hull_[j] != mask) continue;
        (leq(j, a) ? some_in : some_out) = true;
      }
      if (some_in && some_out) {
        p.z_ideal = false;
        break;
      }
    }

    // strong z-ideal: h(F) for finite F ⊆ I ranges over the intersections of
    // element hulls inside I.
    std::vector<std::uint64_t> reachable{all_points()};
    std::unordered_set<std::uint64_t> seen{all_points()};
    for (Id j = 0; j < n; ++j) {
      if (!leq(j, a)) continue;
      const std::size_t before = reachable.size();
      for (std::size_t s = 0; s < before; ++s) {
        std::uint64_t next = reachable[s] & hull_[j];
        if (seen.insert(next).second) reachable.push_back(next);
      }
    }
    p.strong_z_ideal = std::all_of(reachable.begin(), reachable.end(), [&](std::uint64_t m) { return leq(kernel(m), a); });

    p.essential = true;
    for (Id j = 0; j < n; ++j)
      if (j != zero() && meet(a, j) == zero()) p.essential = false;
  }

  RingPredicates& r = ring_predicates_;
  r.von_neumann_regular = true;
  r.reduced = true;
  for (Id j = 0; j < n; ++j) {
    const Index x = generators_[j];
    const Index square = table.mul(x, x);
    bool solvable = false;
    for (Index y = 0; y < table.size() && !solvable; ++y) solvable = table.mul(square, y) == x;
    if (!solvable) r.von_neumann_regular = false;

    Index power = x;
    for (int step = 0; step < 6; ++step) power = table.mul(power, power);
    if (x != table.zero() && power == table.zero()) r.reduced = false;
  }
  r.gelfand = std::all_of(spec_.begin(), spec_.end(), [&](Id q) {
    return std::count_if(maximal_.begin(), maximal_.end(), [&](Id m) { return leq(q, m); }) == 1;
  });
  r.semiprimitive = semiprimitive();
  r.every_prime_maximal = spec_ == maximal_;
  r.no_regular_proper_ideal = true;
  for (Id a = 0; a < n; ++a)
    if (a != whole() && predicates_[a].regular_ideal) r.no_regular_proper_ideal = false;
}

}  // namespace spectra
