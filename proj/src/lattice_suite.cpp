#include "spectra/lattice_suite.hpp"

#include <vector>

#include "payload.hpp"
#include "spectra/arith.hpp"

namespace spectra {

namespace {

using Id = FiniteLattice::Id;

Bitset set_of(std::size_t base, std::initializer_list<std::size_t> members) {
  Bitset out(base);
  for (std::size_t m : members) out.set(m);
  return out;
}

struct Synthetic {
  const char* name;
  CapStructure cap;
  bool distributive;  // expected
};

// Subgroups of {0, a, b, c}, a chain of subsets, and the pentagon on {1, 2, 3}.
std::vector<Synthetic> synthetic_lattices() {
  std::vector<Synthetic> out;
  out.push_back({"klein-four-subgroups",
                 cap_structure_from_sets(4, {set_of(4, {0}), set_of(4, {0, 1}), set_of(4, {0, 2}), set_of(4, {0, 3}),
                                             set_of(4, {0, 1, 2, 3})}),
                 false});
  out.push_back({"pentagon",
                 cap_structure_from_sets(3, {set_of(3, {}), set_of(3, {0}), set_of(3, {0, 1}), set_of(3, {2}),
                                             set_of(3, {0, 1, 2})}),
                 false});
  out.push_back({"chain", cap_structure_from_sets(3, {set_of(3, {}), set_of(3, {0}), set_of(3, {0, 1})}), true});
  return out;
}

// Members of a cap-structure set, as base indices.
Json members(const CapStructure& cap, Id a) {
  Json out = Json::array();
  for (std::size_t i = 0; i < cap.base_size; ++i)
    if (cap.sets[a].test(i)) out.push_back(i);
  return out;
}

Json sampling(const LatticePredicates& p) {
  return Json{{"exhaustive", p.frame_exhaustive},
              {"subsets_checked", p.frame_subsets_checked},
              {"random_samples", p.frame_random_samples},
              {"seed", p.seed}};
}

}  // namespace

Report lattice_kernel_suite(const RingModel& model, std::uint64_t seed) {
  Report report("lattice-kernel");
  const RingSpec& ring = model.ring();
  const FiniteLattice lattice = model.lattice();
  const std::size_t n = lattice.size();
  auto at = [&](Json fields) {
    Json out = payload::ring(ring);
    for (auto& [key, value] : fields.items()) out[key] = value;
    return out;
  };
  auto ideal = [&](Id a) { return payload::ideal(model.ideal(a)); };

  Property order("order-is-partial", "reflexive, antisymmetric, transitive");
  for (Id a = 0; a < n; ++a) {
    order.expect(lattice.leq(a, a), [&] { return at({{"a", ideal(a)}}); });
    for (Id b = 0; b < n; ++b) {
      order.expect(!(lattice.leq(a, b) && lattice.leq(b, a)) || a == b, [&] { return at({{"a", ideal(a)}, {"b", ideal(b)}}); });
      for (Id c = 0; c < n; ++c)
        order.expect(!(lattice.leq(a, b) && lattice.leq(b, c)) || lattice.leq(a, c),
                     [&] { return at({{"a", ideal(a)}, {"b", ideal(b)}, {"c", ideal(c)}}); });
    }
  }
  order.finish_into(report);

  Property bounds("tables-are-bounds", "a ∧ b is the greatest lower bound, a ∨ b the least upper bound");
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      const Id m = lattice.meet(a, b), j = lattice.join(a, b);
      bool ok = lattice.leq(m, a) && lattice.leq(m, b) && lattice.leq(a, j) && lattice.leq(b, j);
      for (Id c = 0; c < n && ok; ++c) {
        if (lattice.leq(c, a) && lattice.leq(c, b)) ok = lattice.leq(c, m);
        if (ok && lattice.leq(a, c) && lattice.leq(b, c)) ok = lattice.leq(j, c);
      }
      bounds.expect(ok && m == model.meet(a, b) && j == model.sum(a, b),
                    [&] { return at({{"a", ideal(a)}, {"b", ideal(b)}}); });
    }
  bounds.finish_into(report);

  // I ⊆ J ⇔ e_i | d_i at every coordinate, for I = (d_i), J = (e_i).
  Property divisor("dual-of-divisor-lattice", "ideal lattice ≅ (∏ divisor lattice of n_i)^op");
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      bool divides = true;
      for (std::size_t c = 0; c < ring.arity(); ++c)
        divides = divides && model.ideal(a).divisor(c) % model.ideal(b).divisor(c) == 0;
      divisor.expect(divides == lattice.leq(a, b), [&] { return at({{"a", ideal(a)}, {"b", ideal(b)}}); });
    }
  std::size_t expected = 1;
  for (std::uint32_t m : ring.factors()) expected *= arith::divisors(m).size();
  divisor.expect(expected == n, [&] { return at({{"ideals", n}, {"divisor_tuples", expected}}); });
  divisor.finish_into(report);

  const LatticePredicates p = lattice_predicates(lattice, seed);
  Property dist("ideal-lattice-distributive", "a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)");
  dist.expect(p.distributive, [&] {
    const auto& w = *p.distributivity_witness;
    return at({{"a", ideal(w[0])}, {"b", ideal(w[1])}, {"c", ideal(w[2])}});
  });
  dist.finish_into(report);
  if (p.frame) {
    report.add("ideal-lattice-frame", "a ∧ ⋁B = ⋁{a ∧ b : b ∈ B}", Status::pass, at(sampling(p)));
  } else {
    Json out = at(sampling(p));
    out["a"] = ideal(p.frame_witness->first);
    Json family = Json::array();
    for (Id b : p.frame_witness->second) family.push_back(ideal(b));
    out["B"] = family;
    report.add("ideal-lattice-frame", "a ∧ ⋁B = ⋁{a ∧ b : b ∈ B}", Status::fail, out);
  }

  // Ideals as sets of elements form a cap-structure isomorphic to the ideal lattice.
  const char* cap_ref = "ideals closed under ∩ form a complete lattice; directed joins are unions";
  if (!model.has_elements()) {
    report.add("ideals-as-cap-structure", cap_ref, Status::skipped, at({{"note", "element scan above the cap"}}));
  } else {
    const ElementTable& table = model.elements();
    std::vector<Bitset> family;
    for (Id a = 0; a < n; ++a) {
      Bitset members(table.size());
      for (ElementTable::Index x = 0; x < table.size(); ++x)
        if (model.element_in(x, a)) members.set(x);
      family.push_back(std::move(members));
    }
    const CapStructure cap = cap_structure_from_sets(table.size(), family);
    Property iso("ideals-as-cap-structure", cap_ref);
    iso.expect(cap.sets.size() == n && directed_unions_are_joins(cap), [&] { return at({{"cap_size", cap.sets.size()}}); });
    // Inclusion of element sets must match the divisor-form order.
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b)
        iso.expect(family[a].is_subset_of(family[b]) == lattice.leq(a, b),
                   [&] { return at({{"a", ideal(a)}, {"b", ideal(b)}}); });
    const LatticePredicates cp = lattice_predicates(cap.lattice, seed);
    iso.expect(cp.distributive == cp.frame && cp.distributive == p.distributive,
               [&] { return at({{"distributive", cp.distributive}, {"frame", cp.frame}}); });
    iso.finish_into(report);
  }

  // Both directions of distributive ⇔ frame on cap-structures whose directed joins are unions.
  Property equivalence("distributive-iff-frame", "L distributive ⇔ L frame, when directed joins are unions");
  for (const auto& s : synthetic_lattices()) {
    const LatticePredicates sp = lattice_predicates(s.cap.lattice, seed);
    bool witnessed = true;
    if (!sp.distributive) {
      const auto& w = *sp.distributivity_witness;
      const FiniteLattice& l = s.cap.lattice;
      witnessed = l.meet(w[0], l.join(w[1], w[2])) != l.join(l.meet(w[0], w[1]), l.meet(w[0], w[2]));
    }
    equivalence.expect(directed_unions_are_joins(s.cap) && sp.distributive == s.distributive &&
                           sp.frame == sp.distributive && witnessed,
                       [&] {
                         Json out{{"lattice", s.name}, {"distributive", sp.distributive}, {"frame", sp.frame}};
                         if (sp.distributivity_witness) {
                           const auto& w = *sp.distributivity_witness;
                           out["witness"] = {members(s.cap, w[0]), members(s.cap, w[1]), members(s.cap, w[2])};
                         }
                         return out;
                       });
  }
  equivalence.expect(p.distributive == p.frame, [&] { return at({{"distributive", p.distributive}, {"frame", p.frame}}); });
  equivalence.finish_into(report);

  {
    const auto m3 = synthetic_lattices().front();
    const LatticePredicates mp = lattice_predicates(m3.cap.lattice, seed);
    const char* ref = "M3 is neither distributive nor a frame";
    if (mp.distributive || mp.frame || !mp.distributivity_witness) {
      report.add("klein-four-witness", ref, Status::fail, Json{{"distributive", mp.distributive}, {"frame", mp.frame}});
    } else {
      const auto& w = *mp.distributivity_witness;
      report.add("klein-four-witness", ref, Status::pass,
                 Json{{"witness", {members(m3.cap, w[0]), members(m3.cap, w[1]), members(m3.cap, w[2])}}});
    }
  }

  Property maps("trivial-nuclei", "identity and constant-top maps are nuclei");
  std::vector<Id> identity(n), top(n, lattice.top());
  for (Id a = 0; a < n; ++a) identity[a] = a;
  maps.expect(verify_map(lattice, identity).nucleus(), [&] { return at({{"map", "identity"}}); });
  maps.expect(verify_map(lattice, top).nucleus(), [&] { return at({{"map", "constant-top"}}); });
  maps.finish_into(report);
  return report;
}

}  // namespace spectra
