#include "spectra/topology.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "payload.hpp"
#include "spectra/arith.hpp"

namespace spectra {

namespace {

using Id = RingModel::Id;

// Point sets are enumerated exhaustively up to this many points.
constexpr std::size_t kExhaustivePointLimit = 16;

bool has(PointSet set, std::size_t j) { return ((set >> j) & 1U) != 0; }
bool subset(PointSet a, PointSet b) { return (a & ~b) == 0; }

Json points_json(PointSet set, std::size_t count) { return to_json(IndexSet(count, set)); }

// Every point set when the space is small; otherwise the closed sets, their
// complements and the singletons.
std::vector<PointSet> test_sets(const RingModel& model, const std::vector<PointSet>& closed) {
  const std::size_t m = model.point_count();
  std::vector<PointSet> out;
  if (m <= kExhaustivePointLimit) {
    for (PointSet a = 0; a < (PointSet{1} << m); ++a) out.push_back(a);
    return out;
  }
  std::set<PointSet> sets(closed.begin(), closed.end());
  for (PointSet c : closed) sets.insert(model.all_points() & ~c);
  for (std::size_t j = 0; j < m; ++j) sets.insert(PointSet{1} << j);
  return {sets.begin(), sets.end()};
}

PointSet closure_of(PointSet a, const std::vector<PointSet>& closed, PointSet all) {
  PointSet out = all;
  for (PointSet c : closed)
    if (subset(a, c)) out &= c;
  return out;
}

PointSet interior_of(PointSet a, const std::vector<PointSet>& closed, PointSet all) {
  PointSet out = 0;
  for (PointSet c : closed) {
    const PointSet open = all & ~c;
    if (subset(open, a)) out |= open;
  }
  return out;
}

// (h(x), h^c(1−x)) for every element with h(x) ⊆ h^c(1−x), in element order.
struct WitnessShape {
  PointSet hull;
  PointSet co_hull;
  ElementTable::Index x;
};

std::vector<WitnessShape> witness_shapes(const RingModel& model) {
  const ElementTable& table = model.elements();
  std::vector<WitnessShape> out;
  std::set<std::pair<PointSet, PointSet>> seen;
  for (ElementTable::Index x = 0; x < table.size(); ++x) {
    const PointSet hx = model.element_hull(x);
    const PointSet co = model.all_points() & ~model.element_hull(table.sub(table.one(), x));
    if (subset(hx, co) && seen.insert({hx, co}).second) out.push_back({hx, co, x});
  }
  return out;
}

}  // namespace

PointSet hull(const Ideal& ideal, const RingModel& model) { return model.hull(model.index_of(ideal)); }

PointSet hull(const RingElement& x, const RingModel& model) { return hull(Ideal::principal(x), model); }

Ideal kernel(PointSet points, const RingModel& model) { return model.ideal(model.kernel(points)); }

std::vector<PointSet> closed_sets(const RingModel& model) {
  std::vector<PointSet> out;
  for (Id a = 0; a < model.ideal_count(); ++a) out.push_back(model.hull(a));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PointSetOps point_set_ops(PointSet points, const RingModel& model) {
  const PointSet all = model.all_points();
  if (!subset(points, all)) throw PreconditionError("point set has bits beyond the maximal ideals");
  const auto closed = closed_sets(model);
  PointSetOps ops;
  ops.closure = closure_of(points, closed, all);
  ops.interior = interior_of(points, closed, all);
  for (std::size_t j = 0; j < model.point_count(); ++j)
    if (has(closure_of(points & ~(PointSet{1} << j), closed, all), j)) ops.limit_points |= PointSet{1} << j;
  ops.isolated_points = points & ~ops.limit_points;

  std::vector<WitnessShape> shapes;
  if (model.has_elements()) shapes = witness_shapes(model);
  for (std::size_t j = 0; j < model.point_count(); ++j) {
    if (!has(ops.interior, j)) continue;
    InteriorWitness w{j, std::nullopt};
    for (const auto& s : shapes)
      if (has(s.hull, j) && subset(s.co_hull, points)) {
        if (!w.x || s.x < model.elements().index_of(*w.x)) w.x = model.elements().element(s.x);
      }
    ops.witnesses.push_back(std::move(w));
  }
  return ops;
}

std::vector<Ideal> bourbaki_set(const RingModel& model) {
  std::vector<Ideal> out;
  const auto& minimal = model.minimal();
  for (Id p : minimal) {
    Id others = model.whole();
    for (Id q : minimal)
      if (q != p) others = model.meet(others, q);
    if (others != model.nilradical()) out.push_back(model.ideal(p));
  }
  return out;
}

Connectivity connectivity(const RingModel& model) {
  const PointSet all = model.all_points();
  const auto closed = closed_sets(model);
  std::vector<PointSet> clopen;
  for (PointSet c : closed)
    if (std::binary_search(closed.begin(), closed.end(), all & ~c)) clopen.push_back(c);
  Connectivity out;
  PointSet assigned = 0;
  for (std::size_t j = 0; j < model.point_count(); ++j) {
    if (has(assigned, j)) continue;
    PointSet component = all;
    for (PointSet c : clopen)
      if (has(c, j)) component &= c;
    out.components.push_back(component);
    assigned |= component;
  }
  out.connected = out.components.size() <= 1;
  out.split = direct_sum_split(model.ring());
  return out;
}

std::size_t continuous_dimension(const RingModel& model) { return connectivity(model).components.size(); }

Report point_set_suite(const RingModel& model) {
  Report report("point-set");
  const RingSpec& ring = model.ring();
  const std::size_t m = model.point_count();
  const PointSet all = model.all_points();
  const auto closed = closed_sets(model);
  const auto sets = test_sets(model, closed);
  auto with = [&](Json fields) {
    Json out = payload::ring(ring);
    for (auto& [key, value] : fields.items()) out[key] = value;
    return out;
  };

  Property galois("hull-kernel-galois", "A ⊆ h(I) ⇔ I ⊆ k(A); hkh = h, khk = k");
  for (Id a = 0; a < model.ideal_count(); ++a) {
    galois.expect(model.hull(model.kernel(model.hull(a))) == model.hull(a),
                  [&] { return with({{"ideal", payload::ideal(model.ideal(a))}}); });
    for (PointSet s : sets)
      galois.expect(subset(s, model.hull(a)) == model.leq(a, model.kernel(s)), [&] {
        return with({{"ideal", payload::ideal(model.ideal(a))}, {"points", points_json(s, m)}});
      });
  }
  for (PointSet s : sets)
    galois.expect(model.kernel(model.hull(model.kernel(s))) == model.kernel(s),
                  [&] { return with({{"points", points_json(s, m)}}); });
  galois.finish_into(report);

  Property t1("points-closed", "h(M) = {M}");
  for (std::size_t j = 0; j < m; ++j)
    t1.expect(model.hull(model.maximal()[j]) == (PointSet{1} << j),
              [&] { return with({{"M", payload::ideal(model.ideal(model.maximal()[j]))}}); });
  t1.finish_into(report);

  Property axioms("closed-set-axioms", "∅, Ma(R) closed; closed under finite ∪ and ∩");
  axioms.expect(std::binary_search(closed.begin(), closed.end(), PointSet{0}) &&
                    std::binary_search(closed.begin(), closed.end(), all),
                [&] { return with({}); });
  for (PointSet a : closed)
    for (PointSet b : closed)
      axioms.expect(std::binary_search(closed.begin(), closed.end(), a | b) &&
                        std::binary_search(closed.begin(), closed.end(), a & b),
                    [&] { return with({{"A", points_json(a, m)}, {"B", points_json(b, m)}}); });
  axioms.finish_into(report);

  Property closure("closure-is-hull-of-kernel", "cl A = h k(A); finite T1 ⇒ cl A = A");
  Property limit("limit-iff-omittable", "M ∈ A' ⇔ ⋂(A∖{M}) ⊆ M");
  for (PointSet s : sets) {
    const PointSet cl = closure_of(s, closed, all);
    closure.expect(cl == model.hull(model.kernel(s)) && cl == s, [&] { return with({{"points", points_json(s, m)}}); });
    for (std::size_t j = 0; j < m; ++j) {
      const PointSet rest = s & ~(PointSet{1} << j);
      const bool topological = has(closure_of(rest, closed, all), j);
      const bool omittable = model.leq(model.kernel(rest), model.maximal()[j]);
      limit.expect(topological == omittable, [&] {
        return with({{"points", points_json(s, m)}, {"M", payload::ideal(model.ideal(model.maximal()[j]))}});
      });
    }
  }
  closure.finish_into(report);
  limit.finish_into(report);

  if (!model.has_elements()) {
    report.add("interior-witness", "M ∈ int A ⇔ ∃x M ∈ h(x) ⊆ h^c(1−x) ⊆ A", Status::skipped,
               with({{"note", "element scan above the cap"}}));
  } else {
    Property interior("interior-witness", "M ∈ int A ⇔ ∃x M ∈ h(x) ⊆ h^c(1−x) ⊆ A");
    const auto shapes = witness_shapes(model);
    for (PointSet s : sets) {
      const PointSet in = interior_of(s, closed, all);
      for (std::size_t j = 0; j < m; ++j) {
        const bool witnessed = std::any_of(shapes.begin(), shapes.end(),
                                           [&](const WitnessShape& w) { return has(w.hull, j) && subset(w.co_hull, s); });
        interior.expect(witnessed == has(in, j), [&] {
          return with({{"points", points_json(s, m)}, {"M", payload::ideal(model.ideal(model.maximal()[j]))}});
        });
      }
    }
    interior.finish_into(report);
  }

  report.add("cofinite-criterion", "Ma(R) cofinite ⇔ k(F) = 0 for every infinite F ⊆ Ma(R)", Status::degenerate,
             with({{"note", "Ma(R) is finite, so there is no infinite F; finite T1 spaces are discrete and cofinite"}}));
  return report;
}

Report connectivity_suite(const RingModel& model) {
  Report report("connectivity");
  const RingSpec& ring = model.ring();
  const Connectivity c = connectivity(model);
  Json facts = payload::ring(ring);
  facts["components"] = c.components.size();
  facts["split"] = c.split.has_value();

  Property matches("disconnected-iff-split", "Ma(R) disconnected ⇔ R = I ⊕ J with I, J proper");
  matches.expect(!c.connected == c.split.has_value(), [&] { return facts; });
  matches.finish_into(report);

  Property partition("components-partition", "components are disjoint, clopen and cover Ma(R)");
  PointSet seen = 0;
  const auto closed = closed_sets(model);
  for (PointSet comp : c.components) {
    const bool clopen = std::binary_search(closed.begin(), closed.end(), comp) &&
                        std::binary_search(closed.begin(), closed.end(), model.all_points() & ~comp);
    partition.expect(comp != 0 && (comp & seen) == 0 && clopen, [&] { return facts; });
    seen |= comp;
  }
  partition.expect(seen == model.all_points(), [&] { return facts; });
  partition.finish_into(report);

  Property split("split-is-direct-sum", "I + J = R, I ∩ J = 0, I and J proper and nonzero");
  if (c.split) {
    const Id a = model.index_of(c.split->first), b = model.index_of(c.split->second);
    split.expect(a != model.whole() && b != model.whole() && a != model.zero() && b != model.zero() &&
                     model.sum(a, b) == model.whole() && model.meet(a, b) == model.zero() &&
                     model.product(a, b) == model.zero(),
                 [&] {
                   Json out = facts;
                   out["I"] = payload::ideal(c.split->first);
                   out["J"] = payload::ideal(c.split->second);
                   return out;
                 });
  }
  split.finish_into(report);
  return report;
}

Report product_homeomorphism_check(std::span<const RingSpec> factors, std::size_t cap) {
  if (factors.empty()) throw PreconditionError("empty factor list");
  Report report("product-homeomorphism");
  std::vector<std::uint32_t> moduli;
  std::vector<std::size_t> offset;
  for (const auto& f : factors) {
    offset.push_back(moduli.size());
    moduli.insert(moduli.end(), f.factors().begin(), f.factors().end());
  }
  const RingSpec product_ring(moduli);
  const RingModel product(product_ring, cap);
  const std::size_t m = product.point_count();
  const auto closed = closed_sets(product);
  Json base = payload::ring(product_ring);

  // π_i^{-1}(I_i): the factor's divisors on block i, full elsewhere.
  auto lift = [&](std::size_t i, const Ideal& ideal) {
    std::vector<std::uint32_t> divisors(moduli.size(), 1);
    for (std::size_t c = 0; c < factors[i].arity(); ++c) divisors[offset[i] + c] = ideal.divisor(c);
    return Ideal(product_ring, std::move(divisors));
  };

  Property defined("block-map-maximal", "π_i^{-1}(M_i) ∈ Ma(∏R_i)");
  Property bijective("block-map-bijective", "Ma(∏R_i) = ⋃𝓜_i, disjoint");
  Property blocks("blocks-closed-and-homeomorphic", "𝓜_i = h(π_i^{-1}(0)) closed, 𝓜_i ≅ Ma(R_i)");
  Property lattice("closed-sets-blockwise", "closed sets of Ma(∏R_i) = ⋃ of blockwise closed sets");

  std::vector<std::vector<std::size_t>> image(factors.size());  // factor point -> product point
  PointSet covered = 0;
  std::size_t total = 0;
  std::vector<std::vector<PointSet>> factor_closed;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const RingModel factor(factors[i], cap);
    factor_closed.push_back(closed_sets(factor));
    PointSet block = 0;
    for (Id mi : factor.maximal()) {
      const Id lifted = product.index_of(lift(i, factor.ideal(mi)));
      const auto& pmax = product.maximal();
      const auto it = std::find(pmax.begin(), pmax.end(), lifted);
      const bool maximal = it != pmax.end();
      defined.expect(maximal, [&] {
        Json out = base;
        out["factor"] = i;
        out["M"] = payload::ideal(factor.ideal(mi));
        return out;
      });
      if (!maximal) continue;
      const auto j = static_cast<std::size_t>(it - pmax.begin());
      bijective.expect(!has(covered, j), [&] {
        Json out = base;
        out["point"] = payload::ideal(product.ideal(lifted));
        return out;
      });
      covered |= PointSet{1} << j;
      block |= PointSet{1} << j;
      image[i].push_back(j);
      ++total;
    }
    const Id zero_lift = product.index_of(lift(i, Ideal::zero(factors[i])));
    // Closed sets of the block as a subspace, carried back to the factor.
    std::set<PointSet> traces;
    for (PointSet c : closed) {
      PointSet back = 0;
      for (std::size_t p = 0; p < image[i].size(); ++p)
        if (has(c, image[i][p])) back |= PointSet{1} << p;
      traces.insert(back);
    }
    const std::set<PointSet> own(factor_closed[i].begin(), factor_closed[i].end());
    blocks.expect(product.hull(zero_lift) == block && std::binary_search(closed.begin(), closed.end(), block) &&
                      traces == own,
                  [&] {
                    Json out = base;
                    out["factor"] = factors[i].to_string();
                    return out;
                  });
  }
  bijective.expect(covered == product.all_points() && total == m, [&] {
    Json out = base;
    out["images"] = total;
    out["points"] = m;
    return out;
  });

  // Unions of one closed set per block, as product point sets.
  std::set<PointSet> unions{0};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::set<PointSet> next;
    for (PointSet u : unions)
      for (PointSet c : factor_closed[i]) {
        PointSet lifted = u;
        for (std::size_t p = 0; p < image[i].size(); ++p)
          if (has(c, p)) lifted |= PointSet{1} << image[i][p];
        next.insert(lifted);
      }
    unions = std::move(next);
  }
  lattice.expect(unions == std::set<PointSet>(closed.begin(), closed.end()), [&] {
    Json out = base;
    out["blockwise"] = unions.size();
    out["closed"] = closed.size();
    return out;
  });

  for (Property* p : {&defined, &bijective, &blocks, &lattice}) p->finish_into(report);
  return report;
}

Report product_homeomorphism_suite(const RingModel& model) {
  std::vector<RingSpec> factors;
  for (std::uint32_t n : model.ring().factors()) factors.emplace_back(std::vector<std::uint32_t>{n});
  return product_homeomorphism_check(factors, model.cap());
}

Report continuous_dimension_suite(const RingModel& model) {
  Report report("continuous-dimension");
  const RingSpec& ring = model.ring();
  const std::size_t c = continuous_dimension(model);
  std::size_t sum = 0;
  for (std::uint32_t n : ring.factors()) sum += continuous_dimension(RingModel(RingSpec({n}), model.cap()));
  Json facts = payload::ring(ring);
  facts["dimension"] = c;
  facts["factor_sum"] = sum;
  facts["max"] = model.point_count();

  Property additive("dimension-additive", "C(Ma(∏R_i)) ≅ ∏C(Ma(R_i)): c(∏R_i) = Σc(R_i)");
  additive.expect(c == sum, [&] { return facts; });
  additive.finish_into(report);

  Property discrete("finite-max-discrete", "|Ma(R)| = n ⇒ C(Ma(R)) ≅ ℝ^n");
  discrete.expect(c == model.point_count(), [&] { return facts; });
  discrete.finish_into(report);

  const bool domain = ring.arity() == 1 && arith::is_prime(ring.modulus(0));
  if (domain) {
    Property field("domain-dimension-one", "D integral domain ⇒ C(Ma(D)) ≅ ℝ");
    field.expect(c == 1, [&] { return facts; });
    field.finish_into(report);
  } else {
    report.add("domain-dimension-one", "D integral domain ⇒ C(Ma(D)) ≅ ℝ", Status::skipped,
               Json{{"ring", ring.to_string()}, {"note", "not an integral domain"}});
  }
  return report;
}

}  // namespace spectra
