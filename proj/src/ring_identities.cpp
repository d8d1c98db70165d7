#include "spectra/ring_identities.hpp"

#include <algorithm>
#include <array>

#include "payload.hpp"
#include "spectra/arith.hpp"

namespace spectra {

namespace {

using Index = ElementTable::Index;

// Zero flags of the six pair expressions, one bit per expression:
//   0: x+y   1: xy   2: x + e_{Coz x} y   3: x e_{Coz y} + y
//   4: y + e_{Coz y} x   5: y e_{Coz x} + x
constexpr int kExpressions = 6;

std::uint8_t coordinate_flags(const ElementTable& table, std::size_t c, std::uint32_t a, std::uint32_t b) {
  // Coordinate c of e_{Coz x} is 1 exactly where x vanishes.
  const std::uint32_t ea = a == 0 ? 1 : 0;
  const std::uint32_t eb = b == 0 ? 1 : 0;
  const std::uint32_t values[kExpressions] = {
      table.coord_add(c, a, b),
      table.coord_mul(c, a, b),
      table.coord_add(c, a, table.coord_mul(c, ea, b)),
      table.coord_add(c, table.coord_mul(c, a, eb), b),
      table.coord_add(c, b, table.coord_mul(c, eb, a)),
      table.coord_add(c, table.coord_mul(c, b, ea), a),
  };
  std::uint8_t flags = 0;
  for (int e = 0; e < kExpressions; ++e)
    if (values[e] == 0) flags |= static_cast<std::uint8_t>(1U << e);
  return flags;
}

// Per-coordinate tables whose entries hold expression e's zero flag at bit
// 8e + c, so OR-ing the entries of all coordinates yields the six zero sets
// byte by byte. Needs arity <= 8; large factors are computed on the fly.
class PackedZeroSets {
 public:
  static constexpr std::uint32_t kTableModulusLimit = 2048;

  explicit PackedZeroSets(const ElementTable& table) : table_(table), rows_(table.arity()) {
    for (std::size_t c = 0; c < table.arity(); ++c) {
      const std::uint32_t n = table.ring().modulus(c);
      if (n > kTableModulusLimit) continue;
      rows_[c].resize(std::size_t{n} * n);
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) rows_[c][std::size_t{a} * n + b] = spread(coordinate_flags(table, c, a, b), c);
    }
  }

  std::uint64_t operator()(Index x, Index y) const {
    std::uint64_t packed = 0;
    const std::uint32_t* rx = table_.residues(x);
    const std::uint32_t* ry = table_.residues(y);
    for (std::size_t c = 0; c < rows_.size(); ++c) {
      const std::uint32_t n = table_.ring().modulus(c);
      packed |= rows_[c].empty() ? spread(coordinate_flags(table_, c, rx[c], ry[c]), c)
                                 : rows_[c][std::size_t{rx[c]} * n + ry[c]];
    }
    return packed;
  }

  static std::uint64_t zero_set(std::uint64_t packed, int expression) { return (packed >> (8 * expression)) & 0xFFU; }

 private:
  static std::uint64_t spread(std::uint8_t flags, std::size_t c) {
    std::uint64_t out = 0;
    for (int e = 0; e < kExpressions; ++e)
      if ((flags >> e) & 1U) out |= std::uint64_t{1} << (8 * e + c);
    return out;
  }

  const ElementTable& table_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Same six zero sets without packing, for index sets larger than 8.
std::array<std::uint64_t, kExpressions> wide_zero_sets(const ElementTable& table, Index x, Index y) {
  std::array<std::uint64_t, kExpressions> out{};
  for (std::size_t c = 0; c < table.arity(); ++c) {
    const std::uint8_t flags = coordinate_flags(table, c, table.residue(x, c), table.residue(y, c));
    for (int e = 0; e < kExpressions; ++e)
      if ((flags >> e) & 1U) out[e] |= std::uint64_t{1} << c;
  }
  return out;
}

}  // namespace

Report ring_identities_suite(const RingModel& model) {
  Report report("ring-identities");
  const RingSpec& ring = model.ring();
  const ElementTable& table = model.elements();
  const std::size_t size = table.size();
  const std::size_t k = ring.arity();
  const std::uint64_t subsets = std::uint64_t{1} << k;
  const std::uint64_t full = subsets - 1;
  const bool domains = std::all_of(ring.factors().begin(), ring.factors().end(), [](std::uint32_t n) { return arith::is_prime(n); });

  std::vector<std::uint8_t> in_e(size);
  for (Index x = 0; x < size; ++x) {
    bool holds = true;
    for (std::size_t c = 0; c < k; ++c) holds = holds && table.residue(x, c) <= 1;
    in_e[x] = holds ? 1 : 0;
  }
  std::vector<Index> e(subsets);
  for (std::uint64_t z = 0; z < subsets; ++z) e[z] = table.idempotent(z);

  auto pair_payload = [&](Index x, Index y) {
    Json out = payload::ring(ring);
    out["x"] = payload::element(table, x);
    out["y"] = payload::element(table, y);
    return out;
  };
  auto set_payload = [&](std::uint64_t y, std::uint64_t z) {
    Json out = payload::ring(ring);
    out["Y"] = to_json(IndexSet(k, y));
    out["Z"] = to_json(IndexSet(k, z));
    return out;
  };

  Property sum_zero("zero-set-of-sum", "Z(x)∩Z(y) ⊆ Z(x+y)");
  Property sum_zero_equality("zero-set-of-idempotent-sum", "x,y ∈ E(R) ⇒ Z(x)∩Z(y) = Z(x+y)");
  Property coz_sum("zero-set-of-coz-sum", "Z(x)∩Z(y) = Z(x+e_{Coz x}y) = Z(x e_{Coz y}+y)");
  Property product_zero("zero-set-of-product", "Z(x)∪Z(y) ⊆ Z(xy), = for x,y ∈ E(R) or domains");

  auto check_pair = [&](Index x, Index y, const std::array<std::uint64_t, kExpressions>& zs) {
    const std::uint64_t zx = table.zero_mask(x), zy = table.zero_mask(y);
    const std::uint64_t meet = zx & zy, join = zx | zy;
    const bool idempotents = in_e[x] && in_e[y];
    sum_zero.expect((meet & ~zs[0]) == 0, [&] { return pair_payload(x, y); });
    if (idempotents) sum_zero_equality.expect(zs[0] == meet, [&] { return pair_payload(x, y); });
    coz_sum.expect(zs[2] == meet && zs[3] == meet && zs[4] == meet && zs[5] == meet, [&] { return pair_payload(x, y); });
    product_zero.expect((join & ~zs[1]) == 0 && (!(idempotents || domains) || zs[1] == join),
                        [&] { return pair_payload(x, y); });
  };

  if (k <= 8) {
    const PackedZeroSets packed(table);
    std::array<std::uint64_t, kExpressions> zs{};
    for (Index x = 0; x < size; ++x)
      for (Index y = x; y < size; ++y) {
        const std::uint64_t m = packed(x, y);
        for (int i = 0; i < kExpressions; ++i) zs[i] = PackedZeroSets::zero_set(m, i);
        check_pair(x, y, zs);
      }
  } else {
    for (Index x = 0; x < size; ++x)
      for (Index y = x; y < size; ++y) check_pair(x, y, wide_zero_sets(table, x, y));
  }
  sum_zero.finish_into(report);
  sum_zero_equality.finish_into(report);
  coz_sum.finish_into(report);

  // Idempotents of each ideal are closed under the two mixed sums.
  Property closure("idempotents-closed-in-ideal", "x,y ∈ E(I) ⇒ x+e_{Coz x}y, x e_{Coz y}+y ∈ E(I)");
  auto coz_idempotent = [&](Index x) { return e[full & ~table.zero_mask(x)]; };
  std::vector<Index> inside;
  for (RingModel::Id a = 0; a < model.ideal_count(); ++a) {
    inside.clear();
    for (std::uint64_t z = 0; z < subsets; ++z)
      if (model.element_in(e[z], a)) inside.push_back(e[z]);
    for (Index x : inside)
      for (Index y : inside) {
        const Index left = table.add(x, table.mul(coz_idempotent(x), y));
        const Index right = table.add(table.mul(x, coz_idempotent(y)), y);
        closure.expect(in_e[left] && in_e[right] && model.element_in(left, a) && model.element_in(right, a), [&] {
          Json out = pair_payload(x, y);
          out["ideal"] = payload::ideal(model.ideal(a));
          return out;
        });
      }
  }
  closure.finish_into(report);
  product_zero.finish_into(report);

  Property e_sum("idempotent-sum-zero-set", "Z(e_Y+e_Z) = Y∩Z");
  Property e_product("idempotent-product-zero-set", "Z(e_Y e_Z) = Y∪Z");
  Property e_union("idempotent-of-union", "e_{Y∪Z} = e_Y e_Z");
  Property e_intersection("idempotent-of-intersection", "e_{Y∩Z} = e_{Y∪Z^c}+e_Z = e_{Z^c}e_Y+e_Z; e_Z+e_{Z^c} = 1");
  Property e_equality("idempotent-equality", "e,e' ∈ E(R): e = e' ⇔ Z(e) = Z(e')");
  Property e_closed_sum("idempotent-sum-in-E", "e,e' ∈ E(R): e+e' ∈ E(R) ⇔ Z(e)∪Z(e') = Λ");
  for (std::uint64_t y = 0; y < subsets; ++y)
    for (std::uint64_t z = 0; z < subsets; ++z) {
      const Index ey = e[y], ez = e[z], ezc = e[full & ~z];
      const Index s = table.add(ey, ez), p = table.mul(ey, ez);
      e_sum.expect(table.zero_mask(s) == (y & z), [&] { return set_payload(y, z); });
      e_product.expect(table.zero_mask(p) == (y | z), [&] { return set_payload(y, z); });
      e_union.expect(e[y | z] == p, [&] { return set_payload(y, z); });
      e_intersection.expect(e[y & z] == table.add(e[y | (full & ~z)], ez) && e[y & z] == table.add(table.mul(ezc, ey), ez) &&
                                table.add(ez, ezc) == table.one(),
                            [&] { return set_payload(y, z); });
      e_equality.expect((ey == ez) == (table.zero_mask(ey) == table.zero_mask(ez)), [&] { return set_payload(y, z); });
      e_closed_sum.expect(static_cast<bool>(in_e[s]) == ((y | z) == full), [&] { return set_payload(y, z); });
    }
  for (Property* p : {&e_sum, &e_product, &e_union, &e_intersection, &e_equality, &e_closed_sum}) p->finish_into(report);

  Property round_trip("idempotent-round-trip", "Z(e_Z) = Z; e_{Z(e)} = e on E(R); #E(R) = 2^|Λ|");
  std::size_t idempotents = 0;
  for (std::uint64_t z = 0; z < subsets; ++z) {
    const IndexSet zs(k, z);
    const RingElement ez = idempotent_for(zs, ring);
    round_trip.expect(zero_set(ez) == zs && table.index_of(ez) == e[z] && is_idempotent_01(ez),
                      [&] { return set_payload(z, z); });
  }
  for (Index x = 0; x < size; ++x) {
    if (!in_e[x]) continue;
    ++idempotents;
    const RingElement ex = table.element(x);
    round_trip.expect(idempotent_for(zero_set(ex), ring) == ex, [&] { return pair_payload(x, x); });
  }
  round_trip.expect(idempotents == subsets, [&] {
    Json out = payload::ring(ring);
    out["idempotents"] = idempotents;
    return out;
  });
  round_trip.finish_into(report);

  // Units and non-zero-divisors by brute force in each factor; in a product
  // both are coordinatewise.
  std::vector<std::vector<std::uint8_t>> unit(k), non_zero_divisor(k);
  for (std::size_t c = 0; c < k; ++c) {
    const std::uint32_t n = ring.modulus(c);
    unit[c].assign(n, 0);
    non_zero_divisor[c].assign(n, 1);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        const std::uint32_t ab = table.coord_mul(c, a, b);
        if (ab == 1 % n) unit[c][a] = 1;
        if (ab == 0 && b != 0) non_zero_divisor[c][a] = 0;
      }
  }
  Property regular_unit("regular-iff-unit", "finite R: x regular ⇔ x unit");
  for (Index x = 0; x < size; ++x) {
    bool is_unit_x = true, is_regular_x = true;
    for (std::size_t c = 0; c < k; ++c) {
      is_unit_x = is_unit_x && unit[c][table.residue(x, c)];
      is_regular_x = is_regular_x && non_zero_divisor[c][table.residue(x, c)];
    }
    const bool model_unit = model.principal_of(x) == model.whole();
    regular_unit.expect(is_unit_x == is_regular_x && model.element_regular(x) == is_regular_x && model_unit == is_unit_x,
                        [&] {
                          Json out = pair_payload(x, x);
                          out["unit"] = is_unit_x;
                          out["regular"] = is_regular_x;
                          return out;
                        });
  }
  regular_unit.finish_into(report);
  return report;
}

}  // namespace spectra
