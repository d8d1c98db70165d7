#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "spectra/lattice.hpp"
#include "spectra/lattice_suite.hpp"

using namespace spectra;

namespace {

Bitset bits(std::size_t size, std::initializer_list<std::size_t> members) {
  Bitset b(size);
  for (auto m : members) b.set(m);
  return b;
}

// Subsets of a base set as plain masks; join is the intersection of all upper bounds.
struct MaskLattice {
  std::vector<std::uint32_t> sets;
  std::uint32_t full;

  std::uint32_t join(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = full;
    for (auto s : sets)
      if ((a & ~s) == 0 && (b & ~s) == 0) out &= s;
    return out;
  }
  bool distributive() const {
    for (auto a : sets)
      for (auto b : sets)
        for (auto c : sets)
          if ((a & join(b, c)) != join(a & b, a & c)) return false;
    return true;
  }
  // a ∧ ⋁B = ⋁{a ∧ b} over every subfamily B.
  bool frame() const {
    const std::size_t n = sets.size();
    for (auto a : sets)
      for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << n); ++pick) {
        std::uint32_t lhs = 0, rhs = 0;
        for (std::size_t i = 0; i < n; ++i)
          if ((pick >> i) & 1U) {
            lhs = join(lhs, sets[i]);
            rhs = join(rhs, a & sets[i]);
          }
        if ((a & lhs) != rhs) return false;
      }
    return true;
  }
};

// Closure of a family under intersection, plus the full set. Bottom is the
// empty intersection only if it arises.
MaskLattice close(std::uint32_t full, std::vector<std::uint32_t> family) {
  family.push_back(full);
  std::set<std::uint32_t> all(family.begin(), family.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::uint32_t> current(all.begin(), all.end());
    for (auto a : current)
      for (auto b : current) grew = all.insert(a & b).second || grew;
  }
  return {{all.begin(), all.end()}, full};
}

}  // namespace

TEST(CapStructures, IdealsOfZ6) {
  // {0}, 2Z6 = {0,2,4}, 3Z6 = {0,3}, Z6.
  const std::vector<Bitset> family = {bits(6, {0}), bits(6, {0, 2, 4}), bits(6, {0, 3}), bits(6, {0, 1, 2, 3, 4, 5})};
  const CapStructure cap = cap_structure_from_sets(6, family);
  EXPECT_EQ(cap.lattice.size(), 4u);
  EXPECT_EQ(cap.sets[cap.lattice.bottom()], bits(6, {0}));
  EXPECT_EQ(cap.sets[cap.lattice.top()].count(), 6u);
  EXPECT_TRUE(directed_unions_are_joins(cap));
  const auto p = lattice_predicates(cap.lattice);
  EXPECT_TRUE(p.distributive);
  EXPECT_TRUE(p.frame);
  EXPECT_TRUE(p.frame_exhaustive);
}

TEST(CapStructures, KleinFourSubgroupsFormM3) {
  // Base {e, a, b, c}; the trivial group, the three order-2 subgroups and V.
  const std::vector<Bitset> family = {bits(4, {0}), bits(4, {0, 1}), bits(4, {0, 2}), bits(4, {0, 3}),
                                      bits(4, {0, 1, 2, 3})};
  const CapStructure cap = cap_structure_from_sets(4, family);
  ASSERT_EQ(cap.lattice.size(), 5u);
  const auto p = lattice_predicates(cap.lattice);
  EXPECT_FALSE(p.distributive);
  EXPECT_FALSE(p.frame);
  ASSERT_TRUE(p.distributivity_witness.has_value());
  const auto [a, b, c] = *p.distributivity_witness;
  const FiniteLattice& l = cap.lattice;
  EXPECT_NE(l.meet(a, l.join(b, c)), l.join(l.meet(a, b), l.meet(a, c)));
  ASSERT_TRUE(p.frame_witness.has_value());
  const auto& [fa, fb] = *p.frame_witness;
  std::vector<FiniteLattice::Id> meets;
  for (auto x : fb) meets.push_back(l.meet(fa, x));
  EXPECT_NE(l.meet(fa, l.join_all(fb)), l.join_all(meets));
  // Union of two atoms is not a member: joins are not unions here.
  EXPECT_EQ(cap.sets[l.join(1, 2)].count(), 4u);
}

TEST(CapStructures, PentagonAndChain) {
  const CapStructure pentagon =
      cap_structure_from_sets(3, {bits(3, {}), bits(3, {0}), bits(3, {0, 1}), bits(3, {2}), bits(3, {0, 1, 2})});
  ASSERT_EQ(pentagon.lattice.size(), 5u);
  EXPECT_FALSE(lattice_predicates(pentagon.lattice).distributive);
  EXPECT_FALSE(lattice_predicates(pentagon.lattice).frame);

  const CapStructure chain = cap_structure_from_sets(3, {bits(3, {}), bits(3, {0}), bits(3, {0, 1})});
  ASSERT_EQ(chain.lattice.size(), 4u);
  EXPECT_TRUE(lattice_predicates(chain.lattice).distributive);
  EXPECT_TRUE(lattice_predicates(chain.lattice).frame);

  const CapStructure single = cap_structure_from_sets(3, {bits(3, {0, 1, 2})});
  EXPECT_EQ(single.lattice.size(), 1u);
  EXPECT_TRUE(lattice_predicates(single.lattice).frame);
  EXPECT_THROW(cap_structure_from_sets(3, {}), PreconditionError);
}

// Random intersection-closed families on a 5-set: the library agrees with the
// mask model, meets are intersections, and distributive ⇔ frame.
TEST(CapStructures, RandomFamiliesAgreeWithMaskModel) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 5;
    std::vector<std::uint32_t> raw;
    std::vector<Bitset> family;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) {
      const std::uint32_t m = rng() & 0x1FU;
      raw.push_back(m);
      Bitset b(n);
      for (std::size_t j = 0; j < n; ++j)
        if ((m >> j) & 1U) b.set(j);
      family.push_back(b);
    }
    const MaskLattice brute = close(0x1FU, raw);
    const CapStructure cap = cap_structure_from_sets(n, family);
    ASSERT_EQ(cap.lattice.size(), brute.sets.size());
    auto mask = [&](FiniteLattice::Id id) {
      std::uint32_t m = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (cap.sets[id].test(j)) m |= 1U << j;
      return m;
    };
    for (FiniteLattice::Id a = 0; a < cap.lattice.size(); ++a)
      for (FiniteLattice::Id b = 0; b < cap.lattice.size(); ++b) {
        EXPECT_EQ(mask(cap.lattice.meet(a, b)), mask(a) & mask(b));
        EXPECT_EQ(mask(cap.lattice.join(a, b)), brute.join(mask(a), mask(b)));
        EXPECT_EQ(cap.lattice.leq(a, b), (mask(a) & ~mask(b)) == 0);
      }
    const auto p = lattice_predicates(cap.lattice, static_cast<std::uint64_t>(trial));
    EXPECT_EQ(p.distributive, brute.distributive());
    EXPECT_EQ(p.frame, brute.frame());
    EXPECT_EQ(p.frame, p.distributive);
    EXPECT_TRUE(directed_unions_are_joins(cap));
  }
}

TEST(Maps, IdentityAndTopAreNuclei) {
  const CapStructure m3 = cap_structure_from_sets(
      4, {bits(4, {0}), bits(4, {0, 1}), bits(4, {0, 2}), bits(4, {0, 3}), bits(4, {0, 1, 2, 3})});
  const FiniteLattice& l = m3.lattice;
  std::vector<FiniteLattice::Id> identity(l.size()), top(l.size(), l.top()), bottom(l.size(), l.bottom());
  for (FiniteLattice::Id a = 0; a < l.size(); ++a) identity[a] = a;
  EXPECT_TRUE(verify_map(l, identity).nucleus());
  EXPECT_TRUE(verify_map(l, top).nucleus());
  const MapPredicates b = verify_map(l, bottom);
  EXPECT_FALSE(b.extensive);
  EXPECT_TRUE(b.witness.has_value());
  EXPECT_THROW(verify_map(l, std::vector<FiniteLattice::Id>(2, 0)), PreconditionError);
}

TEST(Maps, JoinWithFixedElementIsAClosureMap) {
  // a ↦ a ∨ c is always a closure map; meet preservation is compared with the tables.
  const CapStructure m3 = cap_structure_from_sets(
      4, {bits(4, {0}), bits(4, {0, 1}), bits(4, {0, 2}), bits(4, {0, 3}), bits(4, {0, 1, 2, 3})});
  const FiniteLattice& l = m3.lattice;
  for (FiniteLattice::Id c = 0; c < l.size(); ++c) {
    std::vector<FiniteLattice::Id> image(l.size());
    for (FiniteLattice::Id a = 0; a < l.size(); ++a) image[a] = l.join(a, c);
    const MapPredicates p = verify_map(l, image);
    EXPECT_TRUE(p.closure_map());
    bool meets = true;
    for (FiniteLattice::Id a = 0; a < l.size(); ++a)
      for (FiniteLattice::Id b = 0; b < l.size(); ++b)
        meets = meets && image[l.meet(a, b)] == l.meet(image[a], image[b]);
    EXPECT_EQ(p.preserves_meets, meets);
  }
}

TEST(LatticeKernelSuite, PassesOnSampleRings) {
  for (const char* expr : {"Z4", "Z30", "Z4 x Z6", "Z12 x Z12", "Z2 x Z2 x Z2", "Z16 x Z27 x Z25"}) {
    const Report report = lattice_kernel_suite(RingModel(parse_ring_spec(expr)), 1);
    ASSERT_FALSE(report.checks().empty());
    for (const auto& c : report.checks())
      EXPECT_TRUE(c.status == Status::pass || c.status == Status::skipped) << expr << " " << c.name;
    const Check* k = report.find("klein-four-witness");
    ASSERT_NE(k, nullptr);
    EXPECT_EQ(k->status, Status::pass);
  }
}

TEST(LatticeKernelSuite, FrameCheckIsDeterministicPerSeed) {
  // 5 · 4 · 3 = 60 ideals, past the exhaustive limit.
  const RingModel model(parse_ring_spec("Z16 x Z27 x Z25"));
  const Report a = lattice_kernel_suite(model, 42), b = lattice_kernel_suite(model, 42);
  ASSERT_NE(a.find("ideal-lattice-frame"), nullptr);
  const auto& payload = a.find("ideal-lattice-frame")->counterexample;
  ASSERT_TRUE(payload.has_value());
  EXPECT_FALSE(payload->at("exhaustive").get<bool>());
  EXPECT_EQ(payload->at("seed").get<std::uint64_t>(), 42u);
  EXPECT_EQ(*payload, *b.find("ideal-lattice-frame")->counterexample);
}
