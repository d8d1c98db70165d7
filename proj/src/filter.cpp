#include "spectra/filter.hpp"

#include <algorithm>

namespace spectra {

namespace {

constexpr std::size_t kMemberListLimit = 20;

void require_same_ring(const Filter& a, const Filter& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch("filters on the index sets of different rings");
}

// A family over Λ with |Λ| = k as a mask over the 2^k subsets.
Family full_power_set(std::size_t k) {
  const std::size_t subsets = std::size_t{1} << k;
  return subsets == 64 ? ~Family{0} : (Family{1} << subsets) - 1;
}

bool has(Family family, std::uint64_t subset) { return ((family >> subset) & 1U) != 0; }

bool is_filter_family(Family family, std::size_t k) {
  const std::uint64_t all = (std::uint64_t{1} << k) - 1;
  const std::uint64_t subsets = std::uint64_t{1} << k;
  if (!has(family, all)) return false;
  for (std::uint64_t a = 0; a < subsets; ++a) {
    if (!has(family, a)) continue;
    for (std::uint64_t b = 0; b < subsets; ++b) {
      if ((a & ~b) == 0 && !has(family, b)) return false;  // upward closed
      if (has(family, b) && !has(family, a & b)) return false;
    }
  }
  return true;
}

Json pair_payload(const RingSpec& ring, const Filter& f, const Filter& g) {
  return Json{{"ring", ring.to_string()}, {"F", f.to_string()}, {"G", g.to_string()}};
}

}  // namespace

Filter::Filter(RingSpec ring, IndexSet core) : ring_(std::move(ring)), core_(core) {
  if (core_.universe() != ring_.arity()) throw PreconditionError("filter core is not a subset of the index set");
}

Filter Filter::improper(const RingSpec& ring) { return Filter(ring, IndexSet::empty(ring.arity())); }

Filter Filter::top(const RingSpec& ring) { return Filter(ring, IndexSet::full(ring.arity())); }

Filter Filter::at(const RingSpec& ring, std::size_t index) {
  return Filter(ring, IndexSet::single(ring.arity(), index));
}

bool Filter::contains(const IndexSet& member) const {
  if (member.universe() != core_.universe()) throw PreconditionError("set is not a subset of the index set");
  return core_.is_subset_of(member);
}

bool Filter::is_subfilter_of(const Filter& other) const {
  require_same_ring(*this, other);
  return other.core_.is_subset_of(core_);
}

std::vector<IndexSet> Filter::members() const {
  const std::size_t k = ring_.arity();
  if (k > kMemberListLimit) throw PreconditionError("index set too large to list filter members");
  std::vector<IndexSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits)
    if ((core_.bits() & ~bits) == 0) out.emplace_back(k, bits);
  return out;
}

std::string Filter::to_string() const { return "F" + core_.to_string(); }

bool filter_member(const Filter& filter, const IndexSet& member) { return filter.contains(member); }

Filter filter_meet(const Filter& a, const Filter& b) {
  require_same_ring(a, b);
  return Filter(a.ring(), a.core() | b.core());
}

Filter filter_join(const Filter& a, const Filter& b) {
  require_same_ring(a, b);
  return Filter(a.ring(), a.core() & b.core());
}

Filter filter_lattice_op(FilterOp op, const Filter& a, const Filter& b) {
  return op == FilterOp::meet ? filter_meet(a, b) : filter_join(a, b);
}

FilterPredicates filter_predicates(const Filter& filter) {
  return {filter.is_proper(), filter.is_ultrafilter(), filter.is_fixed()};
}

std::vector<Filter> all_filters(const RingSpec& ring) {
  const std::size_t k = ring.arity();
  if (k > kMemberListLimit) throw PreconditionError("index set too large to list its filters");
  std::vector<Filter> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) out.emplace_back(ring, IndexSet(k, bits));
  return out;
}

std::vector<Filter> ultrafilters(const RingSpec& ring) {
  std::vector<Filter> out;
  for (std::size_t i = 0; i < ring.arity(); ++i) out.push_back(Filter::at(ring, i));
  return out;
}

Family family_of(const Filter& filter) {
  const std::size_t k = filter.ring().arity();
  if (k > 6) throw PreconditionError("index set too large for an explicit family");
  Family out = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits)
    if (filter.contains(IndexSet(k, bits))) out |= Family{1} << bits;
  return out;
}

Report filter_lattice_suite(const RingSpec& ring) {
  Report report("filter-lattice");
  const std::size_t k = ring.arity();
  const auto filters = all_filters(ring);

  Property axioms("lattice-axioms", "F∧G=G∧F, F∨(F∧G)=F, (F∧G)∧H=F∧(G∧H)");
  Property proper_meet("meet-of-proper-is-proper", "F,G proper ⇒ F∧G proper");
  Property order("order-matches-meet", "F∧G=F ⇔ F⊆G");
  for (const auto& f : filters)
    for (const auto& g : filters) {
      const Filter m = filter_meet(f, g), j = filter_join(f, g);
      bool holds = m == filter_meet(g, f) && j == filter_join(g, f) && filter_join(f, m) == f &&
                   filter_meet(f, j) == f && filter_meet(f, f) == f && filter_join(f, f) == f;
      for (const auto& h : filters) {
        holds = holds && filter_meet(m, h) == filter_meet(f, filter_meet(g, h)) &&
                filter_join(j, h) == filter_join(f, filter_join(g, h));
      }
      axioms.expect(holds, [&] { return pair_payload(ring, f, g); });
      if (f.is_proper() && g.is_proper()) proper_meet.expect(m.is_proper(), [&] { return pair_payload(ring, f, g); });
      order.expect((m == f) == f.is_subfilter_of(g), [&] { return pair_payload(ring, f, g); });
    }
  axioms.finish_into(report);
  proper_meet.finish_into(report);
  order.finish_into(report);

  Property fixed("fixed-iff-proper", "⋂F ≠ ∅ ⇔ F proper");
  for (const auto& f : filters) {
    const auto members = f.members();
    std::uint64_t common = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    for (const auto& a : members) common &= a.bits();
    const bool has_empty = std::any_of(members.begin(), members.end(), [](const IndexSet& a) { return a.is_empty(); });
    fixed.expect(f.is_fixed() == (common != 0) && f.is_proper() == !has_empty && common == f.core().bits(),
                 [&] { return Json{{"ring", ring.to_string()}, {"F", f.to_string()}}; });
  }
  fixed.finish_into(report);

  // Ultrafilters are the maximal proper filters under inclusion.
  Property ultra("ultrafilters-are-point-filters", "U maximal proper ⇔ U = F_{β}; #U = |Λ|");
  std::size_t maximal_count = 0;
  for (const auto& f : filters) {
    bool maximal = f.is_proper();
    for (const auto& g : filters)
      if (maximal && g.is_proper() && !(g == f) && f.is_subfilter_of(g)) maximal = false;
    if (maximal) ++maximal_count;
    ultra.expect(maximal == f.is_ultrafilter(), [&] { return Json{{"ring", ring.to_string()}, {"F", f.to_string()}}; });
  }
  ultra.expect(maximal_count == k && ultrafilters(ring).size() == k,
               [&] { return Json{{"ring", ring.to_string()}, {"maximal_filters", maximal_count}, {"index_size", k}}; });
  ultra.finish_into(report);

  if (k > kFamilyCheckLimit) {
    const Json note{{"note", "index set larger than " + std::to_string(kFamilyCheckLimit) + "; set-of-sets checks skipped"}};
    report.add("meet-is-intersection", "⋀F_t = ⋂F_t", Status::skipped, note);
    report.add("join-is-generated", "F∨G = {A∩B}", Status::skipped, note);
    report.add("principal-bijection", "filters on finite Λ are F_S", Status::skipped, note);
    return report;
  }

  const std::uint64_t subsets = std::uint64_t{1} << k;
  Property meet_law("meet-is-intersection", "⋀F_t = ⋂F_t");
  Property join_law("join-is-generated", "F∨G = {A∩B : A∈F, B∈G}");
  for (const auto& f : filters)
    for (const auto& g : filters) {
      const Family ff = family_of(f), fg = family_of(g);
      meet_law.expect(family_of(filter_meet(f, g)) == (ff & fg), [&] { return pair_payload(ring, f, g); });
      Family generated = 0;
      for (std::uint64_t a = 0; a < subsets; ++a)
        for (std::uint64_t b = 0; b < subsets; ++b)
          if (has(ff, a) && has(fg, b)) generated |= Family{1} << (a & b);
      join_law.expect(family_of(filter_join(f, g)) == generated, [&] { return pair_payload(ring, f, g); });
    }
  meet_law.finish_into(report);
  join_law.finish_into(report);

  Property bijection("principal-bijection", "filters on finite Λ are exactly the F_S");
  std::vector<Family> principal;
  for (const auto& f : filters) principal.push_back(family_of(f));
  std::size_t filter_families = 0;
  const Family every = full_power_set(k);
  for (Family family = 0;; ++family) {
    if (is_filter_family(family, k)) {
      ++filter_families;
      const bool found = std::find(principal.begin(), principal.end(), family) != principal.end();
      bijection.expect(found, [&] { return Json{{"ring", ring.to_string()}, {"family_mask", family}}; });
    }
    if (family == every) break;
  }
  std::vector<Family> distinct = principal;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  bijection.expect(filter_families == filters.size() && distinct.size() == filters.size(), [&] {
    return Json{{"ring", ring.to_string()}, {"filter_families", filter_families}, {"cores", filters.size()}};
  });
  bijection.finish_into(report);
  return report;
}

}  // namespace spectra
