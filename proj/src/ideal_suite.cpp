#include "spectra/ideal_suite.hpp"

#include <algorithm>
#include <set>

#include "payload.hpp"

namespace spectra {

namespace {

using Id = RingModel::Id;
using Index = ElementTable::Index;

// Element sets of every ideal and the cosets of R/I, built from ring
// arithmetic alone: I is {r g : r ∈ R} for its listed generator g.
struct ElementView {
  std::vector<Bitset> member;
  std::vector<std::vector<Index>> elements;
  std::vector<std::vector<std::uint32_t>> coset;  // coset[a][x] = label of x + I_a
  std::vector<std::vector<Index>> coset_rep;      // first element of each coset
};

ElementView element_view(const RingModel& model) {
  const ElementTable& table = model.elements();
  const std::size_t n = model.ideal_count(), size = table.size();
  ElementView view;
  view.member.assign(n, Bitset(size));
  view.elements.resize(n);
  view.coset.resize(n);
  view.coset_rep.resize(n);
  for (Id a = 0; a < n; ++a) {
    const Index g = model.generators()[a];
    for (Index r = 0; r < size; ++r) view.member[a].set(table.mul(r, g));
    for (Index x = 0; x < size; ++x)
      if (view.member[a].test(x)) view.elements[a].push_back(x);
    auto& label = view.coset[a];
    label.assign(size, UINT32_MAX);
    for (Index x = 0; x < size; ++x) {
      if (label[x] != UINT32_MAX) continue;
      const auto id = static_cast<std::uint32_t>(view.coset_rep[a].size());
      view.coset_rep[a].push_back(x);
      for (Index i : view.elements[a]) label[table.add(x, i)] = id;
    }
  }
  return view;
}

}  // namespace

Report ideal_lattice_suite(const RingModel& model) {
  Report report("ideal-lattice");
  const RingSpec& ring = model.ring();
  const ElementTable& table = model.elements();
  const std::size_t n = model.ideal_count(), size = table.size(), k = ring.arity();
  const ElementView view = element_view(model);

  auto ideal_json = [&](Id a) { return payload::ideal(model.ideal(a)); };
  auto one = [&](const char* key, Id a) {
    Json out = payload::ring(ring);
    out[key] = ideal_json(a);
    return out;
  };
  auto two = [&](Id a, Id b) {
    Json out = payload::ring(ring);
    out["I"] = ideal_json(a);
    out["J"] = ideal_json(b);
    return out;
  };

  // Membership law: the element set of I is {x : d_i | x_i for all i}.
  Property membership("membership-law", "x ∈ ∏d_iZ_{n_i} ⇔ ∀i d_i | x_i; I = <g>");
  for (Id a = 0; a < n; ++a) {
    bool holds = true;
    for (Index x = 0; x < size && holds; ++x) holds = view.member[a].test(x) == model.ideal(a).contains(table.element(x));
    for (Index x = 0; x < size && holds; ++x) holds = view.member[a].test(x) == model.leq(model.principal_of(x), a);
    membership.expect(holds, [&] { return one("ideal", a); });
  }
  membership.finish_into(report);

  Property sum_oracle("sum-matches-elements", "I+J = {x+y : x∈I, y∈J}");
  Property meet_oracle("intersection-matches-elements", "I∩J as sets");
  Property product_oracle("product-matches-elements", "IJ = <g_I g_J>");
  Property colon_oracle("colon-matches-elements", "(I:J) = {x : xJ ⊆ I}");
  Property ann_oracle("annihilator-matches-elements", "Ann(J) = {x : xJ = 0}");
  Property order_oracle("inclusion-matches-elements", "I ⊆ J as sets");
  const Id zero = model.zero();
  std::vector<std::uint8_t> marked;
  for (Id a = 0; a < n; ++a) {
    for (Id b = 0; b < n; ++b) {
      const Ideal& I = model.ideal(a);
      const Ideal& J = model.ideal(b);
      order_oracle.expect(model.leq(a, b) == view.member[a].is_subset_of(view.member[b]), [&] { return two(a, b); });
      meet_oracle.expect((view.member[a] & view.member[b]) == view.member[model.index_of(intersect(I, J))],
                         [&] { return two(a, b); });

      // I + J is the union of the cosets of I that meet J.
      const Id s = model.index_of(sum(I, J));
      marked.assign(view.coset_rep[a].size(), 0);
      std::size_t cosets = 0;
      for (Index y : view.elements[b])
        if (!marked[view.coset[a][y]]) {
          marked[view.coset[a][y]] = 1;
          ++cosets;
        }
      bool holds = view.member[s].count() == cosets * view.elements[a].size();
      for (std::size_t c = 0; c < marked.size() && holds; ++c)
        if (marked[c]) holds = view.member[s].test(view.coset_rep[a][c]);
      sum_oracle.expect(holds, [&] { return two(a, b); });

      const Index gg = table.mul(model.generators()[a], model.generators()[b]);
      product_oracle.expect(view.member[model.index_of(product(I, J))] == view.member[model.principal_of(gg)],
                            [&] { return two(a, b); });

      // x g_J ∈ I depends only on the coset of x modulo (I : J).
      auto colon_matches = [&](Id target, Id c) {
        const Index g = model.generators()[b];
        if (!view.member[target].test(table.mul(model.generators()[c], g))) return false;
        for (Index r : view.coset_rep[c])
          if (!view.member[c].test(r) && view.member[target].test(table.mul(r, g))) return false;
        return true;
      };
      colon_oracle.expect(colon_matches(a, model.index_of(colon(I, J))), [&] { return two(a, b); });
      if (a == zero) ann_oracle.expect(colon_matches(zero, model.index_of(annihilator(J))), [&] { return one("J", b); });
    }
  }
  for (Property* p : {&order_oracle, &sum_oracle, &meet_oracle, &product_oracle, &colon_oracle, &ann_oracle})
    p->finish_into(report);

  Property radical_oracle("radical-matches-elements", "√I = {x : x^m ∈ I for some m}");
  for (Id a = 0; a < n; ++a) {
    Bitset root(size);
    for (Index x = 0; x < size; ++x) {
      Index power = x;
      for (int step = 0; step < 6; ++step) power = table.mul(power, power);  // x^64; exponents here are below 64
      if (view.member[a].test(power)) root.set(x);
    }
    radical_oracle.expect(root == view.member[model.index_of(radical(model.ideal(a)))], [&] { return one("ideal", a); });
  }
  radical_oracle.finish_into(report);

  // Primes by the definition, over coset representatives of R/I.
  std::vector<Id> primes;
  for (Id a = 0; a < n; ++a) {
    if (a == model.whole()) continue;
    bool prime = true;
    const auto& reps = view.coset_rep[a];
    for (std::size_t i = 0; i < reps.size() && prime; ++i)
      for (std::size_t j = i; j < reps.size() && prime; ++j)
        if (!view.member[a].test(reps[i]) && !view.member[a].test(reps[j]) && view.member[a].test(table.mul(reps[i], reps[j])))
          prime = false;
    if (prime) primes.push_back(a);
  }
  std::vector<Id> maximal, minimal;
  for (Id a = 0; a < n; ++a) {
    if (a == model.whole()) continue;
    bool top = true;
    for (Id b = 0; b < n && top; ++b)
      if (b != a && b != model.whole() && view.member[a].is_subset_of(view.member[b])) top = false;
    if (top) maximal.push_back(a);
  }
  for (Id p : primes) {
    bool bottom = true;
    for (Id q : primes)
      if (q != p && view.member[q].is_subset_of(view.member[p])) bottom = false;
    if (bottom) minimal.push_back(p);
  }
  Property spectra_oracle("spectra-match-definitions", "Sp, Ma, Mi by definition; finite ⇒ Sp = Ma = Mi");
  spectra_oracle.expect(primes == model.spec() && maximal == model.maximal() && minimal == model.minimal(), [&] {
    Json out = payload::ring(ring);
    out["spec"] = primes.size();
    out["max"] = maximal.size();
    out["min"] = minimal.size();
    return out;
  });
  spectra_oracle.expect(model.spec() == model.maximal() && model.maximal() == model.minimal(),
                        [&] { return payload::ring(ring); });
  spectra_oracle.finish_into(report);

  Property arithmetical("arithmetical-law", "I∩(J+K) = (I∩J)+(I∩K), I+(J∩K) = (I+J)∩(I+K)");
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      for (Id c = 0; c < n; ++c)
        arithmetical.expect(model.meet(a, model.sum(b, c)) == model.sum(model.meet(a, b), model.meet(a, c)) &&
                                model.sum(a, model.meet(b, c)) == model.meet(model.sum(a, b), model.sum(a, c)),
                            [&] {
                              Json out = two(a, b);
                              out["K"] = ideal_json(c);
                              return out;
                            });
  arithmetical.finish_into(report);

  Property jacobson("jacobson-is-kernel-of-max", "Jac(R) = k(Ma(R))");
  {
    Bitset common = Bitset(size);
    for (Index x = 0; x < size; ++x) common.set(x);
    for (Id m : maximal) common = common & view.member[m];
    const Id closed_form = model.index_of(jacobson_radical(ring));
    jacobson.expect(common == view.member[closed_form] && closed_form == model.jacobson() &&
                        model.kernel(model.all_points()) == closed_form,
                    [&] { return one("jacobson", closed_form); });
  }
  jacobson.finish_into(report);

  // Per-factor brute force: in a product both x = x²y and x^m = 0 split by coordinate.
  std::vector<std::vector<std::uint8_t>> vnr(k), nzd(k);
  for (std::size_t c = 0; c < k; ++c) {
    const std::uint32_t m = ring.modulus(c);
    vnr[c].assign(m, 0);
    nzd[c].assign(m, 1);
    for (std::uint32_t x = 0; x < m; ++x)
      for (std::uint32_t y = 0; y < m; ++y) {
        if (table.coord_mul(c, table.coord_mul(c, x, x), y) == x) vnr[c][x] = 1;
        if (table.coord_mul(c, x, y) == 0 && y != 0) nzd[c][x] = 0;
      }
  }
  bool von_neumann = true, reduced = true;
  std::vector<std::uint8_t> regular(size);
  for (Index x = 0; x < size; ++x) {
    bool solvable = true, non_zero_divisor = true;
    for (std::size_t c = 0; c < k; ++c) {
      solvable = solvable && vnr[c][table.residue(x, c)];
      non_zero_divisor = non_zero_divisor && nzd[c][table.residue(x, c)];
    }
    von_neumann = von_neumann && solvable;
    regular[x] = non_zero_divisor ? 1 : 0;
    Index power = x;
    for (int step = 0; step < 6; ++step) power = table.mul(power, power);
    if (x != table.zero() && power == table.zero()) reduced = false;
  }

  Property reduced_semiprimitive("reduced-iff-semiprimitive", "finite R: reduced ⇔ Jac(R) = 0");
  reduced_semiprimitive.expect(reduced == model.semiprimitive(), [&] {
    Json out = payload::ring(ring);
    out["reduced"] = reduced;
    out["semiprimitive"] = model.semiprimitive();
    return out;
  });
  reduced_semiprimitive.finish_into(report);

  Property split("split-iff-several-points", "R = I⊕J, I,J proper ⇔ |Ma(R)| ≥ 2");
  {
    const auto pair = direct_sum_split(ring);
    bool valid = true;
    if (pair) {
      const Id a = model.index_of(pair->first), b = model.index_of(pair->second);
      valid = a != model.whole() && b != model.whole() && a != zero && b != zero && model.sum(a, b) == model.whole() &&
              model.meet(a, b) == zero;
    }
    split.expect(valid && pair.has_value() == (maximal.size() >= 2), [&] {
      Json out = payload::ring(ring);
      out["split"] = pair.has_value();
      out["max"] = maximal.size();
      return out;
    });
  }
  split.finish_into(report);

  // Ideal flags by their definitions on element sets.
  Property flags("ideal-flags-match-definitions", "prime, maximal, semiprime, pseudoprime, z, strong z, Hilbert, essential, regular");
  Property implications("ideal-flag-implications", "maximal ⇒ prime ⇒ semiprime ∧ pseudoprime");
  std::vector<std::uint64_t> hull(n, 0);  // element hull of the generator
  for (Id j = 0; j < n; ++j)
    for (std::size_t m = 0; m < maximal.size(); ++m)
      if (view.member[maximal[m]].test(model.generators()[j])) hull[j] |= std::uint64_t{1} << m;
  auto kernel_set = [&](std::uint64_t points) {
    Bitset out(size);
    for (Index x = 0; x < size; ++x) out.set(x);
    for (std::size_t m = 0; m < maximal.size(); ++m)
      if ((points >> m) & 1U) out = out & view.member[maximal[m]];
    return out;
  };
  std::set<std::uint64_t> hilbert_sets;
  {
    // Intersection closure of Ma(R), R included as the empty intersection.
    std::vector<std::uint64_t> frontier{0};
    hilbert_sets.insert(0);
    while (!frontier.empty()) {
      const std::uint64_t points = frontier.back();
      frontier.pop_back();
      for (std::size_t m = 0; m < maximal.size(); ++m) {
        const std::uint64_t next = points | (std::uint64_t{1} << m);
        if (hilbert_sets.insert(next).second) frontier.push_back(next);
      }
    }
  }
  std::vector<Bitset> hilbert_ideals;
  for (std::uint64_t points : hilbert_sets) hilbert_ideals.push_back(kernel_set(points));

  std::vector<std::pair<Id, Id>> zero_products;
  for (Id j = 0; j < n; ++j)
    for (Id l = j; l < n; ++l)
      if (table.mul(model.generators()[j], model.generators()[l]) == table.zero()) zero_products.emplace_back(j, l);

  for (Id a = 0; a < n; ++a) {
    const Bitset& I = view.member[a];
    IdealPredicates expected;
    expected.prime = std::find(primes.begin(), primes.end(), a) != primes.end();
    expected.maximal = std::find(maximal.begin(), maximal.end(), a) != maximal.end();
    expected.minimal_prime = std::find(minimal.begin(), minimal.end(), a) != minimal.end();

    Bitset above(size);
    for (Index x = 0; x < size; ++x) above.set(x);
    for (Id p : primes)
      if (I.is_subset_of(view.member[p])) above = above & view.member[p];
    expected.semiprime = above == I;

    // Associated elements share hulls, annihilators and membership, so
    // quantifiers over elements run over generators.
    expected.pseudoprime = std::none_of(zero_products.begin(), zero_products.end(), [&](const auto& jl) {
      return !I.test(model.generators()[jl.first]) && !I.test(model.generators()[jl.second]);
    });

    expected.z_ideal = true;
    for (Id j = 0; j < n && expected.z_ideal; ++j)
      for (Id l = 0; l < n && expected.z_ideal; ++l)
        if (hull[j] == hull[l] && I.test(model.generators()[j]) && !I.test(model.generators()[l])) expected.z_ideal = false;

    std::set<std::uint64_t> reachable{model.all_points()};
    for (Id j = 0; j < n; ++j) {
      if (!I.test(model.generators()[j])) continue;
      std::vector<std::uint64_t> next;
      for (std::uint64_t points : reachable) next.push_back(points & hull[j]);
      reachable.insert(next.begin(), next.end());
    }
    expected.strong_z_ideal = std::all_of(reachable.begin(), reachable.end(),
                                          [&](std::uint64_t points) { return kernel_set(points).is_subset_of(I); });

    expected.hilbert = std::find(hilbert_ideals.begin(), hilbert_ideals.end(), I) != hilbert_ideals.end();

    expected.essential = true;
    for (Id j = 0; j < n; ++j)
      if (j != zero && (I & view.member[j]).count() == 1) expected.essential = false;

    expected.regular_ideal = false;
    for (Index x : view.elements[a]) expected.regular_ideal = expected.regular_ideal || regular[x];

    const IdealPredicates& actual = model.predicates(a);
    flags.expect(actual == expected, [&] {
      Json out = one("ideal", a);
      out["prime"] = expected.prime;
      out["semiprime"] = expected.semiprime;
      out["pseudoprime"] = expected.pseudoprime;
      out["z_ideal"] = expected.z_ideal;
      out["strong_z_ideal"] = expected.strong_z_ideal;
      out["hilbert"] = expected.hilbert;
      out["essential"] = expected.essential;
      out["regular_ideal"] = expected.regular_ideal;
      return out;
    });
    implications.expect((!actual.maximal || actual.prime) && (!actual.prime || (actual.semiprime && actual.pseudoprime)),
                        [&] { return one("ideal", a); });
  }
  flags.finish_into(report);
  implications.finish_into(report);

  Property ring_flags("ring-flags-match-definitions", "vNR, Gelfand, reduced, semiprimitive, Sp = Ma, no regular proper ideal");
  {
    RingPredicates expected;
    expected.von_neumann_regular = von_neumann;
    expected.reduced = reduced;
    expected.semiprimitive = view.member[model.jacobson()].count() == 1;
    expected.gelfand = std::all_of(primes.begin(), primes.end(), [&](Id p) {
      return std::count_if(maximal.begin(), maximal.end(), [&](Id m) { return view.member[p].is_subset_of(view.member[m]); }) == 1;
    });
    expected.every_prime_maximal = primes == maximal;
    expected.no_regular_proper_ideal = true;
    for (Id a = 0; a < n; ++a)
      if (a != model.whole())
        for (Index x : view.elements[a])
          if (regular[x]) expected.no_regular_proper_ideal = false;
    ring_flags.expect(model.ring_predicates() == expected, [&] {
      Json out = payload::ring(ring);
      out["von_neumann_regular"] = expected.von_neumann_regular;
      out["gelfand"] = expected.gelfand;
      out["reduced"] = expected.reduced;
      out["semiprimitive"] = expected.semiprimitive;
      out["every_prime_maximal"] = expected.every_prime_maximal;
      out["no_regular_proper_ideal"] = expected.no_regular_proper_ideal;
      return out;
    });
  }
  ring_flags.finish_into(report);
  return report;
}

}  // namespace spectra
