#include <algorithm>
#include <optional>

#include "payload.hpp"
#include "spectra/arith.hpp"
#include "spectra/topology.hpp"

namespace spectra {

namespace {

using Id = RingModel::Id;
using Index = ElementTable::Index;

bool has(PointSet set, std::size_t j) { return ((set >> j) & 1U) != 0; }
bool subset(PointSet a, PointSet b) { return (a & ~b) == 0; }

bool is_closed(const std::vector<PointSet>& closed, PointSet set) {
  return std::binary_search(closed.begin(), closed.end(), set);
}

PointSet interior_of(PointSet a, const std::vector<PointSet>& closed, PointSet all) {
  PointSet out = 0;
  for (PointSet c : closed)
    if (subset(all & ~c, a)) out |= all & ~c;
  return out;
}

Json with_ring(const RingSpec& ring, Json fields) {
  Json out = payload::ring(ring);
  for (auto& [key, value] : fields.items()) out[key] = value;
  return out;
}

// Ann(x) by scanning each coordinate: the least y in [1, n] with x y ≡ 0
// generates the annihilator of x_c in Z_n.
Ideal brute_annihilator(const ElementTable& table, Index x) {
  std::vector<std::uint32_t> divisors;
  for (std::size_t c = 0; c < table.arity(); ++c) {
    const std::uint32_t n = table.ring().modulus(c);
    std::uint32_t y = 1;
    while (static_cast<std::uint64_t>(table.residue(x, c)) * y % n != 0) ++y;
    divisors.push_back(y);
  }
  return Ideal(table.ring(), std::move(divisors));
}

bool brute_unit(const ElementTable& table, Index x) {
  for (std::size_t c = 0; c < table.arity(); ++c)
    if (arith::gcd(table.residue(x, c), table.ring().modulus(c)) != 1) return false;
  return true;
}

// Least r with r·x = y, solved per coordinate by scanning residues.
std::optional<Index> multiplier(const ElementTable& table, Index x, Index y) {
  std::vector<std::uint32_t> r(table.arity());
  for (std::size_t c = 0; c < table.arity(); ++c) {
    const std::uint32_t n = table.ring().modulus(c);
    std::uint32_t v = 0;
    while (v < n && table.coord_mul(c, v, table.residue(x, c)) != table.residue(y, c)) ++v;
    if (v == n) return std::nullopt;
    r[c] = v;
  }
  return table.index_of_residues(r.data());
}

// Points of R map to points of R/Jac(R) by keeping the divisor tuple: a
// maximal ideal's divisors are one prime and ones, and that prime divides the
// radical modulus. Checks bijectivity and that closed sets correspond.
void check_quotient_homeomorphic(const RingModel& model, const RingModel& quotient, Report& report) {
  Property homeo("quotient-homeomorphic", "Ma(R) ≅ Ma(R/Jac(R)) under M ↦ M/Jac(R)");
  std::vector<std::size_t> image;
  PointSet covered = 0;
  for (Id m : model.maximal()) {
    const auto divisors = model.ideal(m).divisors();
    const Ideal lifted(quotient.ring(), std::vector<std::uint32_t>(divisors.begin(), divisors.end()));
    const auto& qmax = quotient.maximal();
    const auto it = std::find(qmax.begin(), qmax.end(), quotient.index_of(lifted));
    const bool ok = it != qmax.end() && !has(covered, static_cast<std::size_t>(it - qmax.begin()));
    homeo.expect(ok, [&] { return with_ring(model.ring(), {{"M", payload::ideal(model.ideal(m))}}); });
    if (!ok) return homeo.finish_into(report);
    image.push_back(static_cast<std::size_t>(it - qmax.begin()));
    covered |= PointSet{1} << image.back();
  }
  homeo.expect(covered == quotient.all_points(), [&] { return with_ring(model.ring(), {{"quotient", quotient.ring().to_string()}}); });
  auto carry = [&](PointSet set) {
    PointSet out = 0;
    for (std::size_t j = 0; j < image.size(); ++j)
      if (has(set, j)) out |= PointSet{1} << image[j];
    return out;
  };
  std::vector<PointSet> carried;
  for (PointSet c : closed_sets(model)) carried.push_back(carry(c));
  std::sort(carried.begin(), carried.end());
  homeo.expect(carried == closed_sets(quotient), [&] { return with_ring(model.ring(), {{"quotient", quotient.ring().to_string()}}); });
  homeo.finish_into(report);
}

// R/Jac(R) as its own model, or nullopt when R is already semiprimitive.
std::optional<RingModel> reduced_model(const RingModel& model) {
  if (model.semiprimitive()) return std::nullopt;
  return RingModel(jacobson_quotient(model.ring()).quotient, model.cap());
}

void note_reduction(const RingModel& model, const RingModel& quotient, Report& report) {
  report.add("jacobson-reduction", "standing hypothesis Jac(R) = 0", Status::pass,
             with_ring(model.ring(), {{"quotient", quotient.ring().to_string()},
                                      {"note", "Jac(R) ≠ 0: checks below run on R/Jac(R)"}}));
  check_quotient_homeomorphic(model, quotient, report);
}

}  // namespace

Report isolated_point_suite(const RingModel& model) {
  Report report("isolated-point");
  const auto reduced = reduced_model(model);
  if (reduced) note_reduction(model, *reduced, report);
  const RingModel& m = reduced ? *reduced : model;
  const RingSpec& ring = m.ring();
  const ElementTable& table = m.elements();
  const PointSet all = m.all_points();
  const auto closed = closed_sets(m);
  const auto bourbaki = bourbaki_set(m);

  // First element, in index order, whose annihilator is each ideal.
  std::vector<std::optional<Index>> ann_witness(m.ideal_count());
  for (Index x = 0; x < table.size(); ++x) {
    const Id a = m.index_of(brute_annihilator(table, x));
    if (!ann_witness[a]) ann_witness[a] = x;
  }

  Property agree("isolated-characterisations-agree",
                 "M isolated ⇔ M not omittable in ⋂Ma(R) ⇔ M = Ann(x) for some x ⇔ M ∈ B(R)");
  Property witness("annihilator-witness", "Ann(x) = M for the reported x, by multiplication");
  PointSet isolated = 0;
  for (std::size_t j = 0; j < m.point_count(); ++j) {
    const Id point = m.maximal()[j];
    const PointSet rest = all & ~(PointSet{1} << j);
    const bool topological = is_closed(closed, rest);
    const bool kept = !m.leq(m.kernel(rest), point);
    const auto& w = ann_witness[point];
    const bool in_b = std::find(bourbaki.begin(), bourbaki.end(), m.ideal(point)) != bourbaki.end();
    if (topological) isolated |= PointSet{1} << j;
    agree.expect(topological == kept && kept == w.has_value() && kept == in_b, [&] {
      return with_ring(ring, {{"M", payload::ideal(m.ideal(point))},
                              {"isolated", topological},
                              {"not_omittable", kept},
                              {"annihilator_witness", w ? payload::element(table, *w) : Json()},
                              {"bourbaki", in_b}});
    });
    if (w) {
      bool exact = true;
      for (Index y = 0; y < table.size() && exact; ++y)
        exact = (table.mul(*w, y) == 0) == m.element_in(y, point);
      witness.expect(exact, [&] {
        return with_ring(ring, {{"M", payload::ideal(m.ideal(point))}, {"x", payload::element(table, *w)}});
      });
    }
  }
  agree.finish_into(report);
  witness.finish_into(report);

  // Minimal primes as a space: closed sets are {P ∈ Mi(R) : I ⊆ P}.
  const auto& minimal = m.minimal();
  std::vector<PointSet> min_closed;
  for (Id a = 0; a < m.ideal_count(); ++a) {
    PointSet s = 0;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (m.leq(a, minimal[j])) s |= PointSet{1} << j;
    min_closed.push_back(s);
  }
  std::sort(min_closed.begin(), min_closed.end());
  const PointSet min_all = minimal.size() == 64 ? ~PointSet{0} : (PointSet{1} << minimal.size()) - 1;
  bool min_isolated = false;
  for (std::size_t j = 0; j < minimal.size(); ++j)
    min_isolated = min_isolated || is_closed(min_closed, min_all & ~(PointSet{1} << j));
  Property min_space("min-has-isolated-point", "Ma(R) has an isolated point ⇒ Mi(R) has an isolated point");
  if (isolated != 0)
    min_space.expect(min_isolated, [&] { return with_ring(ring, {{"isolated", to_json(IndexSet(m.point_count(), isolated))}}); });
  min_space.finish_into(report);

  Property discrete("max-is-bourbaki-iff-discrete", "Ma(R) = B(R) ⇔ every point of Ma(R) is isolated");
  const bool max_is_b = bourbaki.size() == m.point_count() &&
                        std::all_of(m.maximal().begin(), m.maximal().end(), [&](Id p) {
                          return std::find(bourbaki.begin(), bourbaki.end(), m.ideal(p)) != bourbaki.end();
                        });
  discrete.expect(max_is_b == (isolated == all), [&] {
    return with_ring(ring, {{"bourbaki_is_max", max_is_b}, {"isolated", to_json(IndexSet(m.point_count(), isolated))}});
  });
  discrete.finish_into(report);
  return report;
}

Report hull_facts_suite(const RingModel& model) {
  Report report("hull-facts");
  const auto reduced = reduced_model(model);
  if (reduced) note_reduction(model, *reduced, report);
  const RingModel& q = reduced ? *reduced : model;
  const std::size_t n = model.ideal_count();
  const PointSet all = model.all_points();

  Property comaximal("comaximal-iff-separated", "h(I) ⊆ h^c(J) ⇔ I + J = R");
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      comaximal.expect(subset(model.hull(a), all & ~model.hull(b)) == (model.sum(a, b) == model.whole()), [&] {
        return with_ring(model.ring(), {{"I", payload::ideal(model.ideal(a))}, {"J", payload::ideal(model.ideal(b))}});
      });
  comaximal.finish_into(report);

  // The two statements that need Jac(R) = 0: checked on R/Jac(R) and literally on R.
  auto annihilator_law = [](const RingModel& r, Property& p) {
    for (Id a = 0; a < r.ideal_count(); ++a)
      p.expect(r.annihilator(a) == r.kernel(r.all_points() & ~r.hull(a)),
               [&] { return with_ring(r.ring(), {{"I", payload::ideal(r.ideal(a))}}); });
  };
  auto product_law = [](const RingModel& r, Property& p) {
    for (Id a = 0; a < r.ideal_count(); ++a)
      for (Id b = 0; b < r.ideal_count(); ++b)
        p.expect(subset(r.all_points() & ~r.hull(a), r.hull(b)) == (r.product(a, b) == r.zero()), [&] {
          return with_ring(r.ring(), {{"I", payload::ideal(r.ideal(a))}, {"J", payload::ideal(r.ideal(b))}});
        });
  };
  auto literal = [&](const char* name, const char* ref, auto law) {
    Property p(name, ref);
    law(model, p);
    Check check = p.finish();
    if (check.status == Status::fail && !model.semiprimitive()) {
      check.status = Status::hypothesis_violated;
      (*check.counterexample)["note"] = "Jac(R) ≠ 0";
    }
    report.add(std::move(check));
  };
  const char* ann_ref = "Ann(I) = (0 : I) = k h^c(I)";
  const char* prod_ref = "h^c(I) ⊆ h(J) ⇔ IJ = 0";
  {
    Property p("annihilator-is-kernel-of-cohull", ann_ref);
    annihilator_law(q, p);
    p.finish_into(report);
  }
  literal("annihilator-is-kernel-of-cohull-literal", ann_ref, annihilator_law);
  {
    Property p("annihilating-iff-covering", prod_ref);
    product_law(q, p);
    p.finish_into(report);
  }
  literal("annihilating-iff-covering-literal", prod_ref, product_law);

  // Normality in comaximal form: a separating CI for every comaximal pair.
  Property t4("comaximal-separation-iff-gelfand",
              "∀ I + J = R ∃ CI: I + CI = R, Ann(CI) + J = R ⇔ R Gelfand (Ma(R) T4)");
  bool separated = true;
  Json first_gap;
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) {
      if (model.sum(a, b) != model.whole()) continue;
      bool found = false;
      for (Id c = 0; c < n && !found; ++c)
        found = model.sum(a, c) == model.whole() && model.sum(model.annihilator(c), b) == model.whole();
      if (!found && separated)
        first_gap = with_ring(model.ring(), {{"I", payload::ideal(model.ideal(a))}, {"J", payload::ideal(model.ideal(b))}});
      separated = separated && found;
    }
  t4.expect(separated == model.ring_predicates().gelfand, [&] {
    Json out = first_gap.is_null() ? payload::ring(model.ring()) : first_gap;
    out["gelfand"] = model.ring_predicates().gelfand;
    return out;
  });
  t4.finish_into(report);

  const ElementTable& table = model.elements();
  Property vnr("cohull-is-hull-of-annihilator-iff-regular", "h^c(x) = h(Ann(x)) ∀x ⇔ R von Neumann regular");
  bool every = true;
  Json first_miss;
  for (Index x = 0; x < table.size(); ++x) {
    const bool eq = (all & ~model.element_hull(x)) == model.hull(model.index_of(brute_annihilator(table, x)));
    if (!eq && every) first_miss = with_ring(model.ring(), {{"x", payload::element(table, x)}});
    every = every && eq;
  }
  vnr.expect(every == model.ring_predicates().von_neumann_regular, [&] {
    Json out = first_miss.is_null() ? payload::ring(model.ring()) : first_miss;
    out["von_neumann_regular"] = model.ring_predicates().von_neumann_regular;
    return out;
  });
  vnr.finish_into(report);

  // Elementary h_M facts on R/Jac(R).
  const ElementTable& qt = q.elements();
  const PointSet qall = q.all_points();
  const auto qclosed = closed_sets(q);
  Property full("hull-full-iff-zero", "h(x) = Ma(R) ⇔ x = 0");
  Property empty("hull-empty-iff-unit", "h(x) = ∅ ⇔ x unit");
  Property thin("interior-empty-iff-regular", "h(x)° = ∅ ⇔ Ann(x) = 0");
  for (Index x = 0; x < qt.size(); ++x) {
    const PointSet h = q.element_hull(x);
    auto at = [&] { return with_ring(q.ring(), {{"x", payload::element(qt, x)}}); };
    full.expect((h == qall) == (x == qt.zero()), at);
    empty.expect((h == 0) == brute_unit(qt, x), at);
    thin.expect((interior_of(h, qclosed, qall) == 0) == brute_annihilator(qt, x).is_zero(), at);
  }
  full.finish_into(report);
  empty.finish_into(report);
  thin.finish_into(report);

  // Multiples are decided per principal class: y = r x transfers along unit multiples.
  Property multiple("hull-in-interior-gives-multiple", "h(x) ⊆ h(y)° ⇒ y = r x; r exhibited");
  const auto& gens = q.generators();
  for (Id a = 0; a < q.ideal_count(); ++a)
    for (Id b = 0; b < q.ideal_count(); ++b) {
      if (!subset(q.hull(a), interior_of(q.hull(b), qclosed, qall))) continue;
      const auto r = multiplier(qt, gens[a], gens[b]);
      multiple.expect(r && qt.mul(*r, gens[a]) == gens[b], [&] {
        return with_ring(q.ring(), {{"x", payload::element(qt, gens[a])}, {"y", payload::element(qt, gens[b])}});
      });
    }
  multiple.finish_into(report);
  return report;
}

Report regularity_equivalence_suite(const RingModel& model) {
  Report report("regularity-equivalence");
  const RingSpec& ring = model.ring();
  const ElementTable& table = model.elements();
  const PointSet all = model.all_points();
  const auto closed = closed_sets(model);
  const std::size_t n = model.ideal_count();

  std::vector<std::uint8_t> principal(n, 0);
  for (Index x = 0; x < table.size(); ++x) principal[model.principal_of(x)] = 1;
  // Finitely generated: closure of the principal ideals under finite sums.
  std::vector<std::uint8_t> generated = principal;
  for (bool grew = true; grew;) {
    grew = false;
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b)
        if (generated[a] && generated[b] && !generated[model.sum(a, b)]) generated[model.sum(a, b)] = grew = true;
  }

  auto every = [&](auto in_family, auto holds) {
    for (Id a = 0; a < n; ++a)
      if (in_family(a) && !holds(model.predicates(a))) return false;
    return true;
  };
  auto any = [](Id) { return true; };
  auto fg = [&](Id a) { return generated[a] != 0; };
  auto pr = [&](Id a) { return principal[a] != 0; };
  auto ess = [&](Id a) { return model.predicates(a).essential; };
  auto z = [](const IdealPredicates& p) { return p.z_ideal; };
  auto sz = [](const IdealPredicates& p) { return p.strong_z_ideal; };

  bool open = true;
  for (Index x = 0; x < table.size() && open; ++x) open = is_closed(closed, all & ~model.element_hull(x));
  bool primes_maximal = model.spec() == model.maximal();

  const std::vector<std::pair<const char*, bool>> vector = {
      {"hulls_open", open},
      {"every_z", every(any, z)},
      {"every_strong_z", every(any, sz)},
      {"every_hilbert", every(any, [](const IdealPredicates& p) { return p.hilbert; })},
      {"finitely_generated_z", every(fg, z)},
      {"finitely_generated_strong_z", every(fg, sz)},
      {"principal_z", every(pr, z)},
      {"principal_strong_z", every(pr, sz)},
      {"essential_z", every(ess, z)},
      {"essential_strong_z", every(ess, sz)},
      {"every_semiprime", every(any, [](const IdealPredicates& p) { return p.semiprime; })},
      {"regular", model.ring_predicates().von_neumann_regular},
      {"every_prime_maximal", primes_maximal},
  };
  Json values = Json::object();
  bool same = true;
  for (const auto& [name, value] : vector) {
    values[name] = value;
    same = same && value == vector.front().second;
  }
  const char* ref = "h(x) open ∀x ⇔ every ideal z ⇔ … ⇔ R regular ⇔ every prime maximal";
  if (!model.semiprimitive()) {
    report.add("predicate-vector", ref, Status::hypothesis_violated,
               with_ring(ring, {{"predicates", values}, {"note", "hypothesis violated: Jac ≠ 0"}}));
  } else {
    report.add("predicate-vector", ref, same ? Status::pass : Status::fail, with_ring(ring, {{"predicates", values}}));
  }

  // Almost-P conditions, unconditional.
  bool nonempty_interior = true, regular_units = true, no_regular_proper = true;
  for (Index x = 0; x < table.size(); ++x) {
    const PointSet h = model.element_hull(x);
    if (h != 0 && interior_of(h, closed, all) == 0) nonempty_interior = false;
    if (brute_annihilator(table, x).is_zero() && !brute_unit(table, x)) regular_units = false;
  }
  for (Id a = 0; a < n; ++a)
    if (a != model.whole() && model.predicates(a).regular_ideal) no_regular_proper = false;
  Property almost("almost-p-equivalence",
                  "h(x) ≠ ∅ ⇒ h(x)° ≠ ∅ ∀x ⇔ every regular element is a unit ⇔ no regular proper ideal");
  almost.expect(nonempty_interior == regular_units && regular_units == no_regular_proper, [&] {
    return with_ring(ring, {{"nonempty_interior", nonempty_interior},
                            {"regular_elements_units", regular_units},
                            {"no_regular_proper_ideal", no_regular_proper}});
  });
  almost.finish_into(report);
  return report;
}

}  // namespace spectra
