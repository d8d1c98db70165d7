#include <gtest/gtest.h>

#include "oracle.hpp"
#include "spectra/ideal.hpp"
#include "spectra/ideal_suite.hpp"
#include "spectra/ring_model.hpp"

using namespace spectra;

namespace {

RingSpec R(const char* expr) { return parse_ring_spec(expr); }

Ideal I(const RingSpec& ring, std::vector<std::uint32_t> d) { return Ideal(ring, std::move(d)); }

std::vector<std::uint32_t> moduli(const RingSpec& ring) { return {ring.factors().begin(), ring.factors().end()}; }

oracle::Tuple tuple(const Ideal& ideal) { return {ideal.divisors().begin(), ideal.divisors().end()}; }

const char* kSmallRings[] = {"Z6", "Z8", "Z12", "Z30", "Z4 x Z6", "Z2 x Z9", "Z3 x Z4 x Z2"};

}  // namespace

TEST(Ideals, ClosedFormsOnZ6) {
  const RingSpec z6 = R("Z6");
  const Ideal two = I(z6, {2}), three = I(z6, {3});
  EXPECT_EQ(sum(two, three), Ideal::whole(z6));
  EXPECT_EQ(intersect(two, three), Ideal::zero(z6));
  EXPECT_EQ(product(two, three), Ideal::zero(z6));
  EXPECT_EQ(product(two, two), two);
  EXPECT_EQ(annihilator(two), three);
  EXPECT_EQ(colon(two, three), two);
  EXPECT_EQ(radical(Ideal::zero(z6)), Ideal::zero(z6));
  EXPECT_EQ(radical(I(R("Z12"), {4})), I(R("Z12"), {2}));
  EXPECT_THROW(I(z6, {4}), PreconditionError);
  EXPECT_THROW(sum(two, Ideal::whole(R("Z5"))), RingMismatch);
}

TEST(Ideals, EnumerationMatchesBruteForce) {
  for (const char* expr : kSmallRings) {
    const RingSpec ring = R(expr);
    const oracle::Ring brute(moduli(ring));
    const auto sets = oracle::ideals(brute);
    const auto listed = enumerate(ring, IdealKind::ideals);
    ASSERT_EQ(listed.size(), sets.size()) << expr;
    std::set<oracle::Tuple> expected, got;
    for (const auto& s : sets) {
      expected.insert(oracle::divisors(brute, s));
      EXPECT_EQ(oracle::from_divisors(brute, oracle::divisors(brute, s)), s) << expr;
    }
    for (const auto& ideal : listed) got.insert(tuple(ideal));
    EXPECT_EQ(got, expected) << expr;
    EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
  }
}

TEST(Ideals, OperationsMatchElementSets) {
  for (const char* expr : {"Z12", "Z4 x Z6", "Z2 x Z9"}) {
    const RingSpec ring = R(expr);
    const oracle::Ring brute(moduli(ring));
    const auto all = enumerate(ring, IdealKind::ideals);
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto sa = oracle::from_divisors(brute, tuple(a)), sb = oracle::from_divisors(brute, tuple(b));
        EXPECT_EQ(oracle::from_divisors(brute, tuple(sum(a, b))), oracle::sum(brute, sa, sb));
        EXPECT_EQ(oracle::from_divisors(brute, tuple(intersect(a, b))), oracle::meet(sa, sb));
        // IJ is generated by products of generators; every ideal here is principal.
        oracle::Set prod(brute.size, false);
        prod[0] = true;
        for (std::size_t x = 0; x < brute.size; ++x)
          for (std::size_t y = 0; y < brute.size; ++y)
            if (sa[x] && sb[y]) prod = oracle::sum(brute, prod, oracle::principal(brute, brute.mul(x, y)));
        EXPECT_EQ(oracle::from_divisors(brute, tuple(product(a, b))), prod);
        oracle::Set col(brute.size);
        for (std::size_t x = 0; x < brute.size; ++x) {
          bool in = true;
          for (std::size_t y = 0; y < brute.size && in; ++y) in = !sb[y] || sa[brute.mul(x, y)];
          col[x] = in;
        }
        EXPECT_EQ(oracle::from_divisors(brute, tuple(colon(a, b))), col);
        EXPECT_EQ(a.contains(b), oracle::subset(sb, sa));
      }
  }
}

TEST(Ideals, SpectraOfZ6TimesZ4) {
  const RingSpec ring = R("Z6 x Z4");
  const auto max = enumerate(ring, IdealKind::max);
  std::vector<std::string> names;
  for (const auto& m : max) names.push_back(m.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"(1,2)", "(2,1)", "(3,1)"}));
  EXPECT_EQ(enumerate(ring, IdealKind::spec), max);
  EXPECT_EQ(enumerate(ring, IdealKind::min), max);
  EXPECT_EQ(jacobson_radical(ring), I(ring, {6, 2}));
  EXPECT_EQ(nilradical(ring), I(ring, {6, 2}));
}

TEST(Ideals, PrimesAndMaximalsMatchBruteForce) {
  for (const char* expr : kSmallRings) {
    const RingSpec ring = R(expr);
    const oracle::Ring brute(moduli(ring));
    const auto sets = oracle::ideals(brute);
    std::set<oracle::Tuple> primes, maximals;
    for (const auto& s : sets) {
      if (oracle::is_prime(brute, s)) primes.insert(oracle::divisors(brute, s));
      if (oracle::is_maximal(brute, s, sets)) maximals.insert(oracle::divisors(brute, s));
    }
    std::set<oracle::Tuple> got_primes, got_max;
    for (const auto& p : enumerate(ring, IdealKind::spec)) got_primes.insert(tuple(p));
    for (const auto& m : enumerate(ring, IdealKind::max)) got_max.insert(tuple(m));
    EXPECT_EQ(got_primes, primes) << expr;
    EXPECT_EQ(got_max, maximals) << expr;
    // Zero-dimensional: every prime is maximal.
    EXPECT_EQ(primes, maximals) << expr;
  }
}

TEST(Ideals, FourZ12IsNotAZIdeal) {
  const RingSpec z12 = R("Z12");
  // h(4) = h(2) = {2Z}, 4 ∈ 4Z but 2 ∉ 4Z.
  EXPECT_FALSE(classify_ideal(I(z12, {4})).z_ideal);
  EXPECT_TRUE(classify_ideal(I(z12, {2})).z_ideal);
  EXPECT_TRUE(classify_ideal(I(z12, {2})).maximal);
  EXPECT_FALSE(classify_ideal(I(z12, {4})).semiprime);
  EXPECT_TRUE(classify_ideal(I(z12, {6})).semiprime);
}

TEST(Ideals, FlagsMatchDefinitions) {
  for (const char* expr : {"Z12", "Z4 x Z6", "Z2 x Z9", "Z30"}) {
    const RingSpec ring = R(expr);
    const oracle::Ring brute(moduli(ring));
    const auto sets = oracle::ideals(brute);
    std::vector<oracle::Set> maximals;
    for (const auto& s : sets)
      if (oracle::is_maximal(brute, s, sets)) maximals.push_back(s);
    auto hull = [&](std::size_t x) {
      std::vector<bool> h;
      for (const auto& m : maximals) h.push_back(m[x]);
      return h;
    };
    const oracle::Set zero = oracle::from_divisors(brute, moduli(ring));
    for (const auto& s : sets) {
      const Ideal ideal = I(ring, oracle::divisors(brute, s));
      const IdealPredicates p = classify_ideal(ideal);
      bool z = true, semiprime = true, pseudo = true, essential = true, hilbert;
      for (std::size_t x = 0; x < brute.size; ++x)
        for (std::size_t y = 0; y < brute.size; ++y) {
          if (s[x] && hull(x) == hull(y) && !s[y]) z = false;
          if (brute.mul(x, y) == 0 && !s[x] && !s[y]) pseudo = false;
        }
      for (std::size_t x = 0; x < brute.size; ++x)
        if (s[brute.mul(x, x)] && !s[x]) semiprime = false;
      for (const auto& t : sets)
        if (t != zero && oracle::meet(s, t) == zero) essential = false;
      oracle::Set cap(brute.size, true);
      for (const auto& m : maximals)
        if (oracle::subset(s, m)) cap = oracle::meet(cap, m);
      hilbert = cap == s;
      EXPECT_EQ(p.z_ideal, z) << expr << ideal.to_string();
      EXPECT_EQ(p.semiprime, semiprime) << expr << ideal.to_string();
      EXPECT_EQ(p.pseudoprime, pseudo) << expr << ideal.to_string();
      EXPECT_EQ(p.essential, essential) << expr << ideal.to_string();
      EXPECT_EQ(p.hilbert, hilbert) << expr << ideal.to_string();
      EXPECT_EQ(p.prime, oracle::is_prime(brute, s));
      EXPECT_EQ(p.maximal, oracle::is_maximal(brute, s, sets));
    }
  }
}

TEST(Ideals, RingFlags) {
  EXPECT_TRUE(ring_predicates(R("Z30")).von_neumann_regular);
  EXPECT_TRUE(ring_predicates(R("Z30")).semiprimitive);
  EXPECT_FALSE(ring_predicates(R("Z4")).von_neumann_regular);
  EXPECT_FALSE(ring_predicates(R("Z4")).reduced);
  EXPECT_TRUE(ring_predicates(R("Z4")).every_prime_maximal);
  EXPECT_TRUE(ring_predicates(R("Z4 x Z9")).gelfand);
}

TEST(Ideals, DirectSumSplit) {
  const auto z6 = direct_sum_split(R("Z6"));
  ASSERT_TRUE(z6.has_value());
  EXPECT_EQ(z6->first.to_string(), "(2)");
  EXPECT_EQ(z6->second.to_string(), "(3)");
  for (const char* local : {"Z4", "Z8", "Z9", "Z5"}) EXPECT_FALSE(direct_sum_split(R(local)).has_value()) << local;
  const auto p = direct_sum_split(R("Z4 x Z9"));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(sum(p->first, p->second), Ideal::whole(R("Z4 x Z9")));
  EXPECT_TRUE(intersect(p->first, p->second).is_zero());
}

TEST(Ideals, ModelMatchesFreeFunctions) {
  const RingModel model(R("Z12 x Z10"));
  ASSERT_EQ(model.ideal_count(), 6u * 4u);
  EXPECT_EQ(model.ideal(model.whole()), Ideal::whole(model.ring()));
  EXPECT_EQ(model.ideal(model.zero()), Ideal::zero(model.ring()));
  for (std::size_t a = 0; a < model.ideal_count(); ++a)
    for (std::size_t b = 0; b < model.ideal_count(); ++b) {
      EXPECT_EQ(model.ideal(model.sum(a, b)), sum(model.ideal(a), model.ideal(b)));
      EXPECT_EQ(model.ideal(model.meet(a, b)), intersect(model.ideal(a), model.ideal(b)));
      EXPECT_EQ(model.ideal(model.product(a, b)), product(model.ideal(a), model.ideal(b)));
      EXPECT_EQ(model.leq(a, b), model.ideal(b).contains(model.ideal(a)));
    }
}

TEST(IdealSuite, PassesOnSampleRings) {
  for (const char* expr : {"Z4", "Z30", "Z12 x Z12", "Z2 x Z2 x Z2", "Z6 x Z35", "Z8 x Z9"}) {
    const Report report = ideal_lattice_suite(RingModel(R(expr)));
    ASSERT_FALSE(report.checks().empty());
    for (const auto& c : report.checks()) EXPECT_EQ(c.status, Status::pass) << expr << " " << c.name;
  }
}
