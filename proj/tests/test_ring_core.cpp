#include <gtest/gtest.h>

#include "oracle.hpp"
#include "spectra/arith.hpp"
#include "spectra/element_table.hpp"
#include "spectra/ring.hpp"
#include "spectra/ring_identities.hpp"
#include "spectra/ring_model.hpp"

using namespace spectra;

namespace {

RingSpec R(const char* expr) { return parse_ring_spec(expr); }

}  // namespace

TEST(Parse, AcceptsProductsAndSpacing) {
  EXPECT_EQ(R("Z6 x Z4").to_string(), "Z6 x Z4");
  EXPECT_EQ(R("Z6xZ4").to_string(), "Z6 x Z4");
  EXPECT_EQ(R("Z4 x   Z9 x Z25").arity(), 3u);
  EXPECT_EQ(*R("Z4 x Z9 x Z25").cardinality(), 900u);
}

TEST(Parse, RejectsMalformedExpressions) {
  for (const char* bad : {"", "Z1", "Z0", "Z06", "Z", "Y5", "Z5 x", "x Z5", "Z5 * Z3", "Z5 Z3", "Z99999999999"})
    EXPECT_THROW(R(bad), ParseError) << bad;
}

TEST(Arith, MatchesBruteForce) {
  for (std::uint32_t n = 1; n <= 200; ++n) {
    std::vector<std::uint32_t> divs;
    for (std::uint32_t d = 1; d <= n; ++d)
      if (n % d == 0) divs.push_back(d);
    EXPECT_EQ(arith::divisors(n), divs);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t d : divs) {
      bool prime = d > 1;
      for (std::uint32_t e = 2; e < d && prime; ++e) prime = d % e != 0;
      if (prime) primes.push_back(d);
    }
    EXPECT_EQ(arith::prime_factors(n), primes);
    EXPECT_EQ(arith::is_prime(n), primes.size() == 1 && primes[0] == n);
    EXPECT_EQ(arith::is_prime_power(n), primes.size() == 1);
    std::uint32_t rad = 1;
    for (auto p : primes) rad *= p;
    EXPECT_EQ(arith::radical(n), rad);
    for (std::uint32_t a = 0; a < n && n <= 60; ++a) {
      const auto inv = arith::inverse_mod(a, n);
      std::optional<std::uint32_t> brute;
      for (std::uint32_t b = 0; b < n && !brute; ++b)
        if (a * b % n == 1 % n) brute = b;
      EXPECT_EQ(inv.has_value(), brute.has_value()) << a << " mod " << n;
      if (inv) {
        EXPECT_EQ(*inv * a % n, 1 % n);
      }
    }
  }
}

TEST(Elements, ArithmeticIsComponentwise) {
  const RingSpec ring = R("Z6 x Z4");
  const RingElement x(ring, {5, 3}), y(ring, {4, 2});
  EXPECT_EQ(x + y, RingElement(ring, {3, 1}));
  EXPECT_EQ(x * y, RingElement(ring, {2, 2}));
  EXPECT_EQ(-x, RingElement(ring, {1, 1}));
  EXPECT_EQ(x - y, RingElement(ring, {1, 1}));
  EXPECT_EQ(RingElement(ring, {13, 7}), RingElement(ring, {1, 3}));
  EXPECT_THROW(x + RingElement(R("Z6 x Z5"), {1, 1}), RingMismatch);
}

TEST(Elements, TableAgreesWithElementOperations) {
  for (const char* expr : {"Z12", "Z4 x Z6", "Z2 x Z3 x Z5", "Z9 x Z10"}) {
    const RingSpec ring = R(expr);
    const ElementTable table(ring);
    const oracle::Ring brute(std::vector<std::uint32_t>(ring.factors().begin(), ring.factors().end()));
    ASSERT_EQ(table.size(), brute.size);
    for (ElementTable::Index a = 0; a < table.size(); ++a) {
      EXPECT_EQ(table.index_of(table.element(a)), a);
      for (ElementTable::Index b = 0; b < table.size(); b += 3) {
        EXPECT_EQ(table.add(a, b), brute.add(a, b));
        EXPECT_EQ(table.mul(a, b), brute.mul(a, b));
        EXPECT_EQ(table.sub(a, b), brute.sub(a, b));
        EXPECT_EQ(table.element(table.mul(a, b)), table.element(a) * table.element(b));
      }
    }
    EXPECT_EQ(table.one(), brute.one());
  }
}

TEST(Elements, TableRespectsCap) { EXPECT_THROW(ElementTable(R("Z30 x Z30"), 800), CapExceeded); }

TEST(ZeroSets, ZeroAndCozeroSets) {
  const RingSpec ring = R("Z2 x Z3 x Z5");
  const RingElement x(ring, {0, 2, 0});
  EXPECT_EQ(zero_set(x), IndexSet(3, 0b101));
  EXPECT_EQ(cozero_set(x), IndexSet(3, 0b010));
  EXPECT_EQ(zero_set(RingElement::zero(ring)), IndexSet::full(3));
  EXPECT_TRUE(cozero_set(RingElement::zero(ring)).is_empty());
}

TEST(ZeroSets, IdempotentForEverySubset) {
  const RingSpec ring = R("Z4 x Z9 x Z25");
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    const IndexSet z(3, bits);
    const RingElement e = idempotent_for(z, ring);
    EXPECT_EQ(zero_set(e), z);
    EXPECT_TRUE(is_idempotent_01(e));
    EXPECT_EQ(e * e, e);
  }
  EXPECT_FALSE(is_idempotent_01(RingElement(ring, {2, 1, 0})));
}

TEST(ZeroSets, UnitAndRegularByBruteForce) {
  const RingSpec ring = R("Z4 x Z6");
  const oracle::Ring brute({4, 6});
  for (std::size_t x = 0; x < brute.size; ++x) {
    const RingElement e(ring, {brute.at(x)[0], brute.at(x)[1]});
    bool nzd = true;
    for (std::size_t y = 1; y < brute.size; ++y) nzd = nzd && brute.mul(x, y) != 0;
    EXPECT_EQ(is_unit(e), oracle::is_unit(brute, x));
    EXPECT_EQ(is_regular(e), nzd);
    // Finite rings: non-zero-divisors are units.
    EXPECT_EQ(is_regular(e), is_unit(e));
  }
}

TEST(Jacobson, QuotientReplacesModuliByRadicals) {
  const auto q = jacobson_quotient(R("Z12 x Z9 x Z5"));
  EXPECT_EQ(q.quotient.to_string(), "Z6 x Z3 x Z5");
  EXPECT_FALSE(q.is_identity());
  EXPECT_EQ(q(RingElement(q.source, {11, 7, 4})), RingElement(q.quotient, {5, 1, 4}));
  EXPECT_TRUE(jacobson_quotient(R("Z30")).is_identity());
}

TEST(RingIdentities, PassOnRingsWithoutTwoFactor) {
  for (const char* expr : {"Z3 x Z5", "Z9 x Z25", "Z3 x Z5 x Z7", "Z12", "Z4 x Z9"}) {
    const Report report = ring_identities_suite(RingModel(R(expr)));
    for (const auto& c : report.checks()) EXPECT_EQ(c.status, Status::pass) << expr << " " << c.name;
  }
}

// 1 + 1 = 0 in Z2 breaks the equality forms for sums of idempotents; the
// inclusion halves still hold.
TEST(RingIdentities, TwoFactorBreaksIdempotentSumEqualities) {
  const Report report = ring_identities_suite(RingModel(R("Z2 x Z3")));
  for (const char* name : {"zero-set-of-idempotent-sum", "idempotent-sum-zero-set", "idempotent-sum-in-E"}) {
    const Check* c = report.find(name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_EQ(c->status, Status::fail) << name;
    ASSERT_TRUE(c->counterexample.has_value());
    EXPECT_EQ(c->counterexample->at("ring"), "Z2 x Z3");
  }
  for (const char* name : {"zero-set-of-sum", "zero-set-of-product", "idempotent-of-union", "idempotent-of-intersection",
                           "idempotent-round-trip", "regular-iff-unit"}) {
    const Check* c = report.find(name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_EQ(c->status, Status::pass) << name;
  }
}

// Z(x+y) for x = y = e_∅ in Z2: the sum is 0, so Z(x+y) = Λ ≠ Z(x) ∩ Z(y) = ∅.
TEST(RingIdentities, TwoFactorCounterexampleIsGenuine) {
  const RingSpec ring = R("Z2 x Z3 x Z5");
  const RingElement x = idempotent_for(IndexSet(3, 0b110), ring);
  EXPECT_EQ(x, RingElement(ring, {1, 0, 0}));
  EXPECT_EQ(zero_set(x + x), IndexSet::full(3));
  EXPECT_NE(zero_set(x) & zero_set(x), zero_set(x + x));
}
