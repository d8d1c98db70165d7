#include "spectra/correspondence.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "payload.hpp"
#include "spectra/arith.hpp"

namespace spectra {

namespace {

using Id = RingModel::Id;

// Families of ideals up to this size are checked exhaustively for join laws.
constexpr std::size_t kExhaustiveJoinFamilies = 12;
constexpr std::size_t kSampledJoinFamilies = 64;

void require_same_ring(const RingSpec& a, const RingSpec& b) {
  if (!(a == b)) throw RingMismatch("filter on " + a.to_string() + " used with an ideal of " + b.to_string());
}

bool two_is_unit(const RingSpec& ring) {
  for (std::uint32_t n : ring.factors())
    if (!arith::inverse_mod(2 % n, n)) return false;
  return true;
}

Json with_ring(const RingSpec& ring, Json fields) {
  Json out = payload::ring(ring);
  for (auto& [key, value] : fields.items()) out[key] = value;
  return out;
}

// Visits nonempty families of ideal ids: all of them for small lattices,
// otherwise every principal downset plus seeded random families.
template <class Visit>
void for_each_ideal_family(std::size_t n, const RingModel& model, std::uint64_t seed, Visit&& visit) {
  std::vector<Id> family;
  if (n <= kExhaustiveJoinFamilies) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      family.clear();
      for (Id a = 0; a < n; ++a)
        if ((mask >> a) & 1U) family.push_back(a);
      visit(family);
    }
    return;
  }
  for (Id top = 0; top < n; ++top) {
    family.clear();
    for (Id a = 0; a < n; ++a)
      if (model.leq(a, top)) family.push_back(a);
    visit(family);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < kSampledJoinFamilies; ++s) {
    family.clear();
    for (Id a = 0; a < n; ++a)
      if (rng() & 1U) family.push_back(a);
    if (family.empty()) family.push_back(static_cast<Id>(rng() % n));
    visit(family);
  }
}

Json id_list(const RingModel& model, const std::vector<Id>& ids) {
  Json out = Json::array();
  for (Id a : ids) out.push_back(payload::ideal(model.ideal(a)));
  return out;
}

struct NucleusChecks {
  Property well_defined{"well-defined", "I(F,I) = ⋃_{A∈F} (I : e_{A^c})"};
  Property increasing{"increasing", "I ⊆ J ⇒ F(I) ⊆ F(J)"};
  Property extensive{"extensive", "I ⊆ F(I)"};
  Property idempotent{"idempotent", "F(F(I)) = F(I)"};
  Property meets{"preserves-meets", "F(I∩J) = F(I)∩F(J)"};
  Property joins{"preserves-joins", "F(I+J) = F(I)+F(J)"};
  Property nonempty_joins{"preserves-nonempty-joins", "F(⋁S) = ⋁F(S), S ≠ ∅"};
  Property nucleus{"nucleus", "F increasing, extensive, idempotent, F(a∧b)=F(a)∧F(b)"};
  Property frame_hom{"frame-homomorphism", "I(R) frame ⇒ F: I(R) → Fix(F) frame homomorphism"};

  void finish_into(Report& report) const {
    for (const Property* p : {&well_defined, &increasing, &extensive, &idempotent, &meets, &joins, &nonempty_joins,
                              &nucleus, &frame_hom})
      p->finish_into(report);
  }
};

void run_nucleus(const Filter& filter, const RingModel& model, const FiniteLattice& lattice, bool lattice_is_frame,
                 std::uint64_t seed, NucleusChecks& checks) {
  require_same_ring(filter.ring(), model.ring());
  const RingSpec& ring = model.ring();
  const std::size_t n = model.ideal_count();
  std::vector<Id> image(n);
  for (Id a = 0; a < n; ++a) image[a] = model.index_of(ideal_from_filter(filter, model.ideal(a)));
  auto show = [&](Json fields) {
    fields["filter"] = payload::filter(filter);
    return with_ring(ring, std::move(fields));
  };

  const auto members = filter.members();
  for (Id a = 0; a < n; ++a) {
    bool holds = false;
    for (const auto& member : members) {
      const Ideal part = colon(model.ideal(a), Ideal::principal(idempotent_for(member.complement(), ring)));
      const Id p = model.index_of(part);
      if (!model.leq(p, image[a])) {
        holds = false;
        break;
      }
      if (p == image[a]) holds = true;
    }
    checks.well_defined.expect(holds, [&] { return show({{"ideal", payload::ideal(model.ideal(a))}}); });
    checks.extensive.expect(model.leq(a, image[a]), [&] { return show({{"ideal", payload::ideal(model.ideal(a))}}); });
    checks.idempotent.expect(image[image[a]] == image[a],
                             [&] { return show({{"ideal", payload::ideal(model.ideal(a))}}); });
    for (Id b = 0; b < n; ++b) {
      auto pair = [&] { return show({{"I", payload::ideal(model.ideal(a))}, {"J", payload::ideal(model.ideal(b))}}); };
      if (model.leq(a, b)) checks.increasing.expect(model.leq(image[a], image[b]), pair);
      checks.meets.expect(image[model.meet(a, b)] == model.meet(image[a], image[b]), pair);
      checks.joins.expect(image[model.sum(a, b)] == model.sum(image[a], image[b]), pair);
    }
  }

  const MapPredicates map = verify_map(lattice, image);
  checks.nucleus.expect(map.nucleus(), [&] {
    Json fields{{"increasing", map.increasing}, {"extensive", map.extensive}, {"idempotent", map.idempotent},
                {"preserves_meets", map.preserves_meets}};
    if (map.witness) {
      fields["a"] = payload::ideal(model.ideal(map.witness->first));
      fields["b"] = payload::ideal(model.ideal(map.witness->second));
    }
    return show(std::move(fields));
  });

  // Fixed ideals form a frame with meet ∩ and join F(⋁); F maps onto it.
  std::vector<Id> fixed;
  std::vector<std::size_t> position(n, n);
  for (Id a = 0; a < n; ++a)
    if (image[a] == a) {
      position[a] = fixed.size();
      fixed.push_back(a);
    }
  const FiniteLattice fixed_lattice(fixed.size(), [&](std::size_t i, std::size_t j) { return model.leq(fixed[i], fixed[j]); });
  const bool codomain_frame = lattice_predicates(fixed_lattice, seed).frame;
  bool top_and_meets = image[model.whole()] == model.whole();
  for (Id a = 0; a < n && top_and_meets; ++a)
    for (Id b = 0; b < n && top_and_meets; ++b)
      top_and_meets = fixed[fixed_lattice.meet(position[image[a]], position[image[b]])] == image[model.meet(a, b)];
  bool frame_joins = image[model.zero()] == fixed[fixed_lattice.bottom()];
  std::vector<Id> failing_family;

  std::vector<std::size_t> images;
  for_each_ideal_family(n, model, seed, [&](const std::vector<Id>& family) {
    Id join = model.zero();
    Id image_join = model.zero();
    images.clear();
    for (Id a : family) {
      join = model.sum(join, a);
      image_join = model.sum(image_join, image[a]);
      images.push_back(position[image[a]]);
    }
    checks.nonempty_joins.expect(image[join] == image_join, [&] { return show({{"family", id_list(model, family)}}); });
    if (frame_joins && fixed[fixed_lattice.join_all(images)] != image[join]) {
      frame_joins = false;
      failing_family = family;
    }
  });
  checks.frame_hom.expect(!lattice_is_frame || (codomain_frame && top_and_meets && frame_joins), [&] {
    Json fields{{"fixed_ideals_frame", codomain_frame}, {"preserves_top_and_meets", top_and_meets},
                {"preserves_joins", frame_joins}};
    if (!failing_family.empty()) fields["family"] = id_list(model, failing_family);
    return show(std::move(fields));
  });
}

}  // namespace

Ideal ideal_from_filter(const Filter& filter, const Ideal& ideal) {
  require_same_ring(filter.ring(), ideal.ring());
  std::vector<std::uint32_t> out(ideal.divisors().begin(), ideal.divisors().end());
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!filter.core().contains(i)) out[i] = 1;
  return Ideal(ideal.ring(), std::move(out));
}

Filter filter_from_ideal(const Ideal& ideal) {
  const std::size_t k = ideal.divisors().size();
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < k; ++i)
    if (ideal.divisor(i) != 1) bits |= std::uint64_t{1} << i;
  return Filter(ideal.ring(), IndexSet(k, bits));
}

Ideal z_preimage(const Filter& filter) {
  if (!filter.is_proper()) throw PreconditionError("Z^{-1} of the improper filter is R, not a proper ideal");
  return ideal_from_filter(filter, Ideal::zero(filter.ring()));
}

Ideal component_product(const RingSpec& ring, std::span<const Ideal> components) {
  if (components.size() != ring.arity()) throw PreconditionError("need one component ideal per factor");
  std::vector<std::uint32_t> divisors;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const Ideal& c = components[i];
    if (c.ring().arity() != 1 || c.ring().modulus(0) != ring.modulus(i))
      throw PreconditionError("component " + std::to_string(i) + " is not an ideal of Z" + std::to_string(ring.modulus(i)));
    divisors.push_back(c.divisor(0));
  }
  return Ideal(ring, std::move(divisors));
}

Ideal maximal_from_ultrafilter(const Filter& ultrafilter, std::span<const Ideal> components) {
  if (!ultrafilter.is_ultrafilter()) throw PreconditionError(ultrafilter.to_string() + " is not an ultrafilter");
  const Ideal product = component_product(ultrafilter.ring(), components);
  for (std::size_t i = 0; i < components.size(); ++i)
    if (!arith::is_prime(components[i].divisor(0)))
      throw PreconditionError("component " + std::to_string(i) + " is not a maximal ideal");
  return ideal_from_filter(ultrafilter, product);
}

Report verify_nucleus(const Filter& filter, const RingModel& model, std::uint64_t seed) {
  Report report("nucleus");
  const FiniteLattice lattice = model.lattice();
  NucleusChecks checks;
  run_nucleus(filter, model, lattice, lattice_predicates(lattice, seed).frame, seed, checks);
  checks.finish_into(report);
  return report;
}

Report nucleus_suite(const RingModel& model, std::uint64_t seed) {
  Report report("nucleus");
  const FiniteLattice lattice = model.lattice();
  const bool frame = lattice_predicates(lattice, seed).frame;
  report.add("ideal-lattice-frame", "R arithmetical ⇒ I(R) frame", frame ? Status::pass : Status::fail,
             frame ? std::nullopt : std::optional<Json>(payload::ring(model.ring())));
  NucleusChecks checks;
  for (const auto& filter : all_filters(model.ring())) run_nucleus(filter, model, lattice, frame, seed, checks);
  checks.finish_into(report);
  return report;
}

namespace {

struct FilterMapChecks {
  Property increasing{"filter-map-increasing", "F ⊆ G ⇒ I(F,I) ⊆ I(G,I)"};
  Property meets{"filter-map-intersection", "I(F∩G,I) = I(F,I) ∩ I(G,I)"};
  Property joins{"filter-map-join", "2 ∈ U(R) ⇒ I(F∨G,I) = I(F,I) + I(G,I)"};
};

void run_filter_map(const Ideal& ideal, const RingModel& model, FilterMapChecks& checks, bool with_joins) {
  const RingSpec& ring = model.ring();
  const auto filters = all_filters(ring);
  std::vector<Ideal> images;
  for (const auto& f : filters) images.push_back(ideal_from_filter(f, ideal));
  for (std::size_t i = 0; i < filters.size(); ++i)
    for (std::size_t j = 0; j < filters.size(); ++j) {
      const Filter& f = filters[i];
      const Filter& g = filters[j];
      auto show = [&] {
        return with_ring(ring, {{"ideal", payload::ideal(ideal)}, {"F", payload::filter(f)}, {"G", payload::filter(g)}});
      };
      if (f.is_subfilter_of(g)) checks.increasing.expect(images[j].contains(images[i]), show);
      checks.meets.expect(ideal_from_filter(filter_meet(f, g), ideal) == intersect(images[i], images[j]), show);
      if (with_joins) checks.joins.expect(ideal_from_filter(filter_join(f, g), ideal) == sum(images[i], images[j]), show);
    }
}

void finish_filter_map(const FilterMapChecks& checks, bool with_joins, const RingSpec& ring, Report& report) {
  checks.increasing.finish_into(report);
  checks.meets.finish_into(report);
  if (with_joins)
    checks.joins.finish_into(report);
  else
    report.add("filter-map-join", "2 ∈ U(R) ⇒ I(F∨G,I) = I(F,I) + I(G,I)", Status::skipped,
               with_ring(ring, {{"note", "2 is not a unit; join law not asserted"}}));
}

}  // namespace

Report verify_filter_map(const Ideal& ideal, const RingModel& model) {
  Report report("filter-map");
  const bool with_joins = two_is_unit(model.ring());
  FilterMapChecks checks;
  run_filter_map(ideal, model, checks, with_joins);
  finish_filter_map(checks, with_joins, model.ring(), report);
  return report;
}

Report filter_map_suite(const RingModel& model) {
  Report report("filter-map");
  const bool with_joins = two_is_unit(model.ring());
  FilterMapChecks checks;
  for (const auto& ideal : model.ideals()) run_filter_map(ideal, model, checks, with_joins);
  finish_filter_map(checks, with_joins, model.ring(), report);
  return report;
}

Report verify_order_embedding(const RingModel& model) {
  Report report("order-embedding");
  const RingSpec& ring = model.ring();
  const Ideal zero = Ideal::zero(ring);
  const auto filters = all_filters(ring);
  const bool explicit_families = ring.arity() <= 6;
  Property embedding("order-embedding", "I(F,0) ⊆ I(G,0) ⇔ F ⊆ G");
  for (const auto& f : filters)
    for (const auto& g : filters) {
      const bool ideals_nested = ideal_from_filter(g, zero).contains(ideal_from_filter(f, zero));
      const bool filters_nested =
          explicit_families ? (family_of(f) & ~family_of(g)) == 0 : f.is_subfilter_of(g);
      embedding.expect(ideals_nested == filters_nested, [&] {
        return with_ring(ring, {{"F", payload::filter(f)}, {"G", payload::filter(g)}, {"ideals_nested", ideals_nested},
                                {"filters_nested", filters_nested}});
      });
    }
  embedding.finish_into(report);
  return report;
}

Report ultrafilter_max_bijection(const RingModel& model) {
  const RingSpec& ring = model.ring();
  for (std::size_t i = 0; i < ring.arity(); ++i)
    if (!arith::is_prime_power(ring.modulus(i)))
      throw PreconditionError("factor " + std::to_string(i) + " (Z" + std::to_string(ring.modulus(i)) + ") is not local");

  Report report("ultrafilter-max");
  std::vector<Ideal> components;
  for (std::uint32_t n : ring.factors())
    components.emplace_back(RingSpec({n}), std::vector<std::uint32_t>{arith::prime_factors(n).front()});

  const auto us = ultrafilters(ring);
  std::vector<Id> images;
  Property maximal("image-is-maximal", "I(U,∏M_λ) ∈ Max(R), Z(E(I(U,∏M_λ))) = U");
  for (std::size_t beta = 0; beta < us.size(); ++beta) {
    const Ideal m = maximal_from_ultrafilter(us[beta], components);
    const Id id = model.index_of(m);
    images.push_back(id);
    const bool is_max = std::find(model.maximal().begin(), model.maximal().end(), id) != model.maximal().end();
    const bool round_trip = filter_from_ideal(m) == us[beta];
    const bool coordinate = m == Ideal::component_preimage(ring, beta, components[beta].divisor(0));
    maximal.expect(is_max && round_trip && coordinate, [&] {
      return with_ring(ring, {{"U", payload::filter(us[beta])}, {"image", payload::ideal(m)}, {"maximal", is_max},
                              {"round_trip", round_trip}, {"coordinate_form", coordinate}});
    });
  }
  maximal.finish_into(report);

  Property injective("injective", "U ≠ V ⇒ I(U,∏M_λ) ≠ I(V,∏M_λ)");
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      injective.expect(images[i] != images[j], [&] {
        return with_ring(ring, {{"U", payload::filter(us[i])}, {"V", payload::filter(us[j])}});
      });
  injective.finish_into(report);

  Property onto("onto-max", "Max(R) = {I(U,∏M_λ)}, |Max(R)| = #ultrafilters = |Λ|");
  for (Id m : model.maximal())
    onto.expect(std::find(images.begin(), images.end(), m) != images.end(),
                [&] { return with_ring(ring, {{"missed", payload::ideal(model.ideal(m))}}); });
  onto.expect(model.maximal().size() == us.size() && us.size() == ring.arity(), [&] {
    return with_ring(ring, {{"max", model.maximal().size()}, {"ultrafilters", us.size()}, {"index_size", ring.arity()}});
  });
  onto.finish_into(report);
  return report;
}

// ---------------------------------------------------------------- element-level identities

Report filter_ideal_suite(const RingModel& model) {
  Report report("filter-ideal");
  const RingSpec& ring = model.ring();
  const ElementTable& table = model.elements();
  using Index = ElementTable::Index;
  const std::size_t size = table.size();
  const std::size_t k = ring.arity();
  const std::size_t n = model.ideal_count();
  const std::uint64_t subsets = std::uint64_t{1} << k;
  const std::uint64_t full = subsets - 1;
  const auto filters = all_filters(ring);
  const Ideal zero_ideal = Ideal::zero(ring);

  auto with = [&](Json fields) { return with_ring(ring, std::move(fields)); };
  auto set_json = [&](std::uint64_t bits) { return to_json(IndexSet(k, bits)); };

  // Membership bitmaps, idempotents and the products x·e_{A^c}.
  std::vector<Bitset> member(n, Bitset(size));
  for (Index x = 0; x < size; ++x) {
    const Id p = model.principal_of(x);
    for (Id a = 0; a < n; ++a)
      if (model.leq(p, a)) member[a].set(x);
  }
  std::vector<Index> e(subsets);
  for (std::uint64_t z = 0; z < subsets; ++z) e[z] = table.idempotent(z);
  std::vector<Index> cut(size * subsets);  // cut[x * subsets + A] = x e_{A^c}
  for (Index x = 0; x < size; ++x)
    for (std::uint64_t a = 0; a < subsets; ++a) cut[x * subsets + a] = table.mul(x, e[full & ~a]);
  // Projection keys: x restricted to the coordinates of S, mixed radix.
  std::vector<std::uint32_t> key(size * subsets);
  std::vector<std::size_t> key_space(subsets, 1);
  for (std::uint64_t s = 0; s < subsets; ++s)
    for (std::size_t c = 0; c < k; ++c)
      if ((s >> c) & 1U) key_space[s] *= ring.modulus(c);
  for (Index x = 0; x < size; ++x)
    for (std::uint64_t s = 0; s < subsets; ++s) {
      std::uint64_t v = 0;
      for (std::size_t c = 0; c < k; ++c)
        if ((s >> c) & 1U) v = v * ring.modulus(c) + table.residue(x, c);
      key[x * subsets + s] = static_cast<std::uint32_t>(v);
    }

  // closed[a * subsets + S] = I(F_S, I_a).
  std::vector<Id> closed(n * subsets);
  for (Id a = 0; a < n; ++a)
    for (std::uint64_t s = 0; s < subsets; ++s)
      closed[a * subsets + s] = model.index_of(ideal_from_filter(filters[s], model.ideal(a)));

  Property e_f("e_F-in-I(F,I)", "A ∈ F ⇒ e_A ∈ I(F,I)");
  Property difference("membership-by-difference", "x ∈ I(F,I) ⇔ ∃y∈I Z(x−y) ∈ F");
  Property is_ideal("ideal-containing-I", "I(F,I) is an ideal containing I");
  Property zero_form("zero-ideal-form", "I(F,0) = <e_Z : Z∈F> = {x : Z(x) ∈ F}");
  Property proper("properness", "I(F,I) proper ⇔ ∀A∈F e_{A^c} ∉ I");
  Property projection("componentwise-containment", "I(F,I) ⊆ I(F,∏π_λ(I)), equality ⇔ side condition");
  Property product_membership("product-membership", "x ∈ I(F,∏I_λ) ⇔ {λ : x_λ ∈ I_λ} ∈ F");
  Property prime_order("prime-ultrafilter-order", "I prime, I(F,I) ⊆ I(G,I) ≠ R, G ultra ⇒ F ⊆ G");
  Property identity("identity-iff-top", "(∀I I(F,I) = I) ⇔ F = {Λ}");

  std::vector<std::uint8_t> reach(size * subsets);
  for (Id a = 0; a < n; ++a) {
    const Ideal& ideal = model.ideal(a);
    // π_λ(I) from the elements of I.
    std::vector<std::uint32_t> proj(ring.factors().begin(), ring.factors().end());
    for (Index y = 0; y < size; ++y)
      if (member[a].test(y))
        for (std::size_t c = 0; c < k; ++c) proj[c] = arith::gcd(proj[c], table.residue(y, c));
    const Ideal componentwise(ring, proj);

    // reach[x * subsets + S]: some A ⊇ S has x e_{A^c} ∈ I (superset-OR transform).
    for (Index x = 0; x < size; ++x)
      for (std::uint64_t m = 0; m < subsets; ++m) reach[x * subsets + m] = member[a].test(cut[x * subsets + m]) ? 1 : 0;
    for (std::size_t c = 0; c < k; ++c)
      for (Index x = 0; x < size; ++x)
        for (std::uint64_t m = 0; m < subsets; ++m)
          if (!((m >> c) & 1U)) reach[x * subsets + m] |= reach[x * subsets + (m | (std::uint64_t{1} << c))];

    for (std::uint64_t s = 0; s < subsets; ++s) {
      const Filter& f = filters[s];
      const Id image = closed[a * subsets + s];
      auto show = [&](Json fields) {
        fields["filter"] = payload::filter(f);
        fields["ideal"] = payload::ideal(ideal);
        return with(std::move(fields));
      };

      for (std::uint64_t m = 0; m < subsets; ++m)
        if ((s & ~m) == 0) e_f.expect(member[image].test(e[m]), [&] { return show({{"A", set_json(m)}}); });

      bool none_cut = true;
      for (std::uint64_t m = 0; m < subsets; ++m)
        if ((s & ~m) == 0 && member[a].test(e[full & ~m])) none_cut = false;
      proper.expect((image != model.whole()) == none_cut, [&] { return show({}); });

      // ∃y ∈ I with Z(x−y) ⊇ S: the restriction of x to S is a restriction of some y ∈ I.
      std::vector<bool> seen(key_space[s], false);
      for (Index y = 0; y < size; ++y)
        if (member[a].test(y)) seen[key[y * subsets + s]] = true;

      const Id via_components = model.index_of(ideal_from_filter(f, componentwise));
      bool side_condition = true;
      projection.expect(model.leq(image, via_components), [&] { return show({{"component_ideal", payload::ideal(componentwise)}}); });

      bool ideal_ok = model.leq(a, image);
      for (Index x = 0; x < size; ++x) {
        const bool in_image = member[image].test(x);
        const bool exists_member = reach[x * subsets + s] != 0;
        if (exists_member != in_image) ideal_ok = false;

        difference.expect(seen[key[x * subsets + s]] == in_image, [&] { return show({{"x", payload::element(table, x)}}); });

        std::uint64_t coords = 0;
        for (std::size_t c = 0; c < k; ++c)
          if (table.residue(x, c) % ideal.divisor(c) == 0) coords |= std::uint64_t{1} << c;
        product_membership.expect(in_image == ((coords & s) == s), [&] { return show({{"x", payload::element(table, x)}}); });

        std::uint64_t component_coords = 0;
        for (std::size_t c = 0; c < k; ++c)
          if (table.residue(x, c) % proj[c] == 0) component_coords |= std::uint64_t{1} << c;
        if ((component_coords & s) == s && !exists_member) side_condition = false;
      }
      is_ideal.expect(ideal_ok, [&] { return show({}); });
      projection.expect(side_condition == (image == via_components), [&] {
        return show({{"side_condition", side_condition}, {"component_ideal", payload::ideal(componentwise)}});
      });
    }
  }

  for (std::uint64_t s = 0; s < subsets; ++s) {
    const Filter& f = filters[s];
    const Id image = model.index_of(ideal_from_filter(f, zero_ideal));
    Ideal generated = zero_ideal;
    for (std::uint64_t z = 0; z < subsets; ++z)
      if ((s & ~z) == 0) generated = sum(generated, Ideal::principal(table.element(e[z])));
    bool holds = model.index_of(generated) == image;
    for (Index x = 0; x < size && holds; ++x) holds = member[image].test(x) == ((table.zero_mask(x) & s) == s);
    zero_form.expect(holds, [&] { return with({{"filter", payload::filter(f)}}); });

    bool fixes_all = true;
    for (Id a = 0; a < n; ++a) fixes_all = fixes_all && closed[a * subsets + s] == a;
    identity.expect(fixes_all == (s == full), [&] { return with({{"filter", payload::filter(f)}}); });
  }

  for (Id a : model.spec())
    for (std::uint64_t s = 0; s < subsets; ++s)
      for (std::size_t beta = 0; beta < k; ++beta) {
        const std::uint64_t t = std::uint64_t{1} << beta;
        const Id fi = closed[a * subsets + s], gi = closed[a * subsets + t];
        if (!model.leq(fi, gi) || gi == model.whole()) continue;
        prime_order.expect(filters[s].is_subfilter_of(filters[t]), [&] {
          return with({{"ideal", payload::ideal(model.ideal(a))}, {"F", payload::filter(filters[s])},
                       {"G", payload::filter(filters[t])}});
        });
      }

  for (Property* p : {&e_f, &difference, &is_ideal, &zero_form, &proper, &projection, &product_membership, &prime_order,
                      &identity})
    p->finish_into(report);

  // Z(E(I)) computed from the idempotents lying in I.
  std::vector<std::vector<bool>> family(n, std::vector<bool>(subsets));
  for (Id a = 0; a < n; ++a)
    for (std::uint64_t z = 0; z < subsets; ++z) family[a][z] = member[a].test(e[z]);

  Property monotone("ZE-monotone", "I ⊆ J ⇒ Z(E(I)) ⊆ Z(E(J))");
  Property meets("ZE-intersection", "Z(E(⋂I_i)) = ⋂Z(E(I_i))");
  Property is_filter("ZE-filter", "Z(E(I)) filter; proper ⇔ I proper");
  Property recovers("ZE-recovers-filter", "I_λ proper ⇒ Z(E(I(F,∏I_λ))) = F");
  Property proper_image("product-image-proper", "I_λ proper, F proper ⇒ I(F,∏I_λ) proper");
  Property preimage("z-preimage-ideal", "Z^{-1}F ideal; proper for proper F");

  std::vector<bool> all_meet(subsets, true);
  for (Id a = 0; a < n; ++a) {
    const Filter f = filter_from_ideal(model.ideal(a));
    bool filter_ok = family[a][full];
    for (std::uint64_t z = 0; z < subsets; ++z) {
      all_meet[z] = all_meet[z] && family[a][z];
      if (family[a][z] != f.contains(IndexSet(k, z))) filter_ok = false;
      if (k <= 6 && family[a][z])
        for (std::uint64_t w = 0; w < subsets; ++w) {
          if ((z & ~w) == 0 && !family[a][w]) filter_ok = false;
          if (family[a][w] && !family[a][z & w]) filter_ok = false;
        }
    }
    filter_ok = filter_ok && (!family[a][0] == (a != model.whole()));
    is_filter.expect(filter_ok, [&] { return with({{"ideal", payload::ideal(model.ideal(a))}}); });

    for (Id b = 0; b < n; ++b) {
      auto pair = [&] { return with({{"I", payload::ideal(model.ideal(a))}, {"J", payload::ideal(model.ideal(b))}}); };
      if (model.leq(a, b)) {
        bool nested = true;
        for (std::uint64_t z = 0; z < subsets; ++z) nested = nested && (!family[a][z] || family[b][z]);
        monotone.expect(nested, pair);
      }
      const Id m = model.meet(a, b);
      bool equal = true;
      for (std::uint64_t z = 0; z < subsets; ++z) equal = equal && family[m][z] == (family[a][z] && family[b][z]);
      meets.expect(equal, pair);
    }

    const bool components_proper =
        std::none_of(model.ideal(a).divisors().begin(), model.ideal(a).divisors().end(), [](std::uint32_t d) { return d == 1; });
    if (!components_proper) continue;
    for (std::uint64_t s = 0; s < subsets; ++s) {
      const Id image = closed[a * subsets + s];
      bool equal = true;
      for (std::uint64_t z = 0; z < subsets; ++z) equal = equal && family[image][z] == ((s & ~z) == 0);
      auto show = [&] { return with({{"ideal", payload::ideal(model.ideal(a))}, {"filter", payload::filter(filters[s])}}); };
      recovers.expect(equal, show);
      if (s != 0) proper_image.expect(image != model.whole(), show);
    }
  }
  {
    bool equal = true;
    for (std::uint64_t z = 0; z < subsets; ++z) equal = equal && family[model.zero()][z] == all_meet[z];
    meets.expect(equal, [&] { return with({{"family", "all ideals"}}); });
  }

  for (std::uint64_t s = 0; s < subsets; ++s) {
    const Filter& f = filters[s];
    // {x : Z(x) ∈ F} as an element set, compared against a divisor-form ideal.
    Bitset set(size);
    std::vector<std::uint32_t> divisors(ring.factors().begin(), ring.factors().end());
    for (Index x = 0; x < size; ++x)
      if (f.contains(IndexSet(k, table.zero_mask(x)))) {
        set.set(x);
        for (std::size_t c = 0; c < k; ++c) divisors[c] = arith::gcd(divisors[c], table.residue(x, c));
      }
    const Id candidate = model.index_of(Ideal(ring, divisors));
    bool holds = true;
    for (Index x = 0; x < size && holds; ++x) holds = set.test(x) == member[candidate].test(x);
    if (f.is_proper()) holds = holds && candidate != model.whole() && candidate == model.index_of(z_preimage(f));
    preimage.expect(holds, [&] { return with({{"filter", payload::filter(f)}}); });
  }

  for (Property* p : {&monotone, &meets, &is_filter, &recovers, &proper_image, &preimage}) p->finish_into(report);

  // Ultrafilters and maximal ideals.
  Property ultra_max("ultrafilter-image-maximal", "I(U,∏M_λ) ∈ Max(R)");
  std::vector<std::vector<std::uint32_t>> primes;
  for (std::uint32_t m : ring.factors()) primes.push_back(arith::prime_factors(m));
  for (std::size_t beta = 0; beta < k; ++beta) {
    std::vector<std::size_t> choice(k, 0);
    while (true) {
      std::vector<Ideal> components;
      for (std::size_t c = 0; c < k; ++c)
        components.emplace_back(RingSpec({ring.modulus(c)}), std::vector<std::uint32_t>{primes[c][choice[c]]});
      const Filter u = Filter::at(ring, beta);
      const Ideal m = maximal_from_ultrafilter(u, components);
      ultra_max.expect(model.predicates(model.index_of(m)).maximal,
                       [&] { return with({{"U", payload::filter(u)}, {"image", payload::ideal(m)}}); });
      std::size_t c = k;
      while (c-- > 0) {
        if (++choice[c] < primes[c].size()) break;
        choice[c] = 0;
      }
      if (c == static_cast<std::size_t>(-1)) break;
    }
  }

  Property pseudo_ultra("pseudoprime-gives-ultrafilter", "I proper pseudoprime ⇒ Z(E(I)) ultrafilter");
  for (Id a = 0; a < n; ++a) {
    // R is vacuously pseudoprime but Z(E(R)) is the improper filter.
    if (a == model.whole() || !model.predicates(a).pseudoprime) continue;
    std::uint64_t core = full;
    for (std::uint64_t z = 0; z < subsets; ++z)
      if (family[a][z]) core &= z;
    // An ultrafilter on a finite set is fixed at one point: its members are the sets containing it.
    bool ultra = std::popcount(core) == 1;
    for (std::uint64_t z = 0; z < subsets && ultra; ++z) ultra = family[a][z] == ((z & core) == core);
    pseudo_ultra.expect(ultra && filter_from_ideal(model.ideal(a)).is_ultrafilter(),
                        [&] { return with({{"ideal", payload::ideal(model.ideal(a))}}); });
  }

  Property some_max("ultrafilter-from-maximal", "∀U ∃M ∈ Max(R) U = Z(E(M))");
  for (const auto& u : ultrafilters(ring)) {
    const bool found = std::any_of(model.maximal().begin(), model.maximal().end(),
                                   [&](Id m) { return filter_from_ideal(model.ideal(m)) == u; });
    some_max.expect(found, [&] { return with({{"U", payload::filter(u)}}); });
  }

  Property fixed("fixed-iff-coordinate", "Z(E(M)) fixed ⇔ M = π_β^{-1}(M_β)");
  for (Id m : model.maximal()) {
    bool coordinate = false;
    for (std::size_t beta = 0; beta < k; ++beta)
      for (std::uint32_t p : primes[beta])
        if (Ideal::component_preimage(ring, beta, p) == model.ideal(m)) coordinate = true;
    fixed.expect(filter_from_ideal(model.ideal(m)).is_fixed() == coordinate,
                 [&] { return with({{"M", payload::ideal(model.ideal(m))}}); });
  }

  for (Property* p : {&ultra_max, &pseudo_ultra, &some_max, &fixed}) p->finish_into(report);
  return report;
}

}  // namespace spectra
