#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "spectra/correspondence.hpp"
#include "spectra/filter.hpp"
#include "spectra/ring_model.hpp"

using namespace spectra;

namespace {

RingSpec R(const char* expr) { return parse_ring_spec(expr); }

std::vector<std::uint32_t> moduli(const RingSpec& ring) { return {ring.factors().begin(), ring.factors().end()}; }

// Families of subsets of a k-set that contain Λ, are upward closed and closed
// under intersection. Bit A of the mask is subset A.
std::vector<Family> brute_filters(std::size_t k) {
  const std::size_t subsets = std::size_t{1} << k;
  std::vector<Family> out;
  for (Family f = 0; f < (Family{1} << subsets); ++f) {
    auto in = [&](std::size_t a) { return ((f >> a) & 1U) != 0; };
    bool ok = in(subsets - 1);
    for (std::size_t a = 0; a < subsets && ok; ++a)
      for (std::size_t b = 0; b < subsets && ok; ++b) {
        if (in(a) && (a & b) == a && !in(b)) ok = false;
        if (in(a) && in(b) && !in(a & b)) ok = false;
      }
    if (ok) out.push_back(f);
  }
  return out;
}

// Coordinates outside A set to zero: x · e_{A^c}.
oracle::Tuple restrict_to(const oracle::Tuple& x, std::size_t a) {
  oracle::Tuple y = x;
  for (std::size_t c = 0; c < y.size(); ++c)
    if (((a >> c) & 1U) == 0) y[c] = 0;
  return y;
}

}  // namespace

TEST(Filters, EveryFilterIsPrincipal) {
  for (std::size_t k = 1; k <= 3; ++k) {
    std::vector<std::uint32_t> n(k, 3);
    const RingSpec ring(n);
    std::set<Family> expected;
    for (Family f : brute_filters(k)) expected.insert(f);
    std::set<Family> got;
    for (const auto& f : all_filters(ring)) got.insert(family_of(f));
    EXPECT_EQ(got, expected) << k;
    EXPECT_EQ(all_filters(ring).size(), std::size_t{1} << k);
  }
}

TEST(Filters, MeetJoinAndPredicates) {
  const RingSpec ring = R("Z2 x Z3 x Z5");
  const Filter a(ring, IndexSet(3, 0b011)), b(ring, IndexSet(3, 0b110));
  EXPECT_EQ(filter_meet(a, b).core(), IndexSet(3, 0b111));
  EXPECT_EQ(filter_join(a, b).core(), IndexSet(3, 0b010));
  EXPECT_EQ(family_of(filter_meet(a, b)), family_of(a) & family_of(b));
  EXPECT_TRUE(a.is_proper());
  EXPECT_FALSE(Filter::improper(ring).is_proper());
  EXPECT_TRUE(Filter::at(ring, 2).is_ultrafilter());
  EXPECT_FALSE(a.is_ultrafilter());
  EXPECT_TRUE(Filter::top(ring).is_fixed());
  EXPECT_EQ(ultrafilters(ring).size(), 3u);
  EXPECT_TRUE(Filter::top(ring).is_subfilter_of(a));
  EXPECT_FALSE(a.is_subfilter_of(Filter::top(ring)));
  EXPECT_EQ(a.to_string(), "F{0,1}");
  EXPECT_THROW(Filter(ring, IndexSet(2, 1)), PreconditionError);
}

TEST(Filters, LatticeSuitePasses) {
  for (const char* expr : {"Z5", "Z2 x Z3", "Z2 x Z3 x Z5", "Z2 x Z2 x Z2"}) {
    const Report report = filter_lattice_suite(R(expr));
    for (const auto& c : report.checks()) EXPECT_NE(c.status, Status::fail) << expr << " " << c.name;
  }
}

TEST(Correspondence, IdealFromFilterMatchesDefinition) {
  for (const char* expr : {"Z4 x Z6", "Z2 x Z3 x Z4", "Z9 x Z10"}) {
    const RingSpec ring = R(expr);
    const oracle::Ring brute(moduli(ring));
    const std::size_t k = ring.arity();
    for (const auto& filter : all_filters(ring)) {
      const Family fam = family_of(filter);
      for (const auto& ideal : enumerate(ring, IdealKind::ideals)) {
        const oracle::Set base = oracle::from_divisors(brute, {ideal.divisors().begin(), ideal.divisors().end()});
        oracle::Set expected(brute.size);
        for (std::size_t x = 0; x < brute.size; ++x)
          for (std::size_t a = 0; a < (std::size_t{1} << k) && !expected[x]; ++a)
            if ((fam >> a) & 1U) expected[x] = base[brute.index(restrict_to(brute.at(x), a))];
        const Ideal got = ideal_from_filter(filter, ideal);
        EXPECT_EQ(oracle::from_divisors(brute, {got.divisors().begin(), got.divisors().end()}), expected)
            << expr << " " << filter.to_string() << " " << ideal.to_string();
      }
    }
  }
}

TEST(Correspondence, FilterFromIdealMatchesDefinition) {
  const RingSpec ring = R("Z4 x Z6 x Z5");
  const oracle::Ring brute(moduli(ring));
  for (const auto& ideal : enumerate(ring, IdealKind::ideals)) {
    const oracle::Set members = oracle::from_divisors(brute, {ideal.divisors().begin(), ideal.divisors().end()});
    Family expected = 0;
    for (std::size_t z = 0; z < 8; ++z) {
      oracle::Tuple e(3, 1);
      for (std::size_t c = 0; c < 3; ++c)
        if ((z >> c) & 1U) e[c] = 0;
      if (members[brute.index(e)]) expected |= Family{1} << z;
    }
    EXPECT_EQ(family_of(filter_from_ideal(ideal)), expected) << ideal.to_string();
  }
}

TEST(Correspondence, ZPreimageMatchesDefinition) {
  const RingSpec ring = R("Z4 x Z6");
  const oracle::Ring brute(moduli(ring));
  for (const auto& filter : all_filters(ring)) {
    if (!filter.is_proper()) {
      EXPECT_THROW(z_preimage(filter), PreconditionError);
      continue;
    }
    const Ideal got = z_preimage(filter);
    const oracle::Set members = oracle::from_divisors(brute, {got.divisors().begin(), got.divisors().end()});
    for (std::size_t x = 0; x < brute.size; ++x) {
      std::size_t zeros = 0;
      for (std::size_t c = 0; c < 2; ++c)
        if (brute.at(x)[c] == 0) zeros |= std::size_t{1} << c;
      EXPECT_EQ(members[x], ((family_of(filter) >> zeros) & 1U) != 0);
    }
    EXPECT_EQ(got, ideal_from_filter(filter, Ideal::zero(ring)));
  }
}

TEST(Correspondence, UltrafilterMaxBijection) {
  const RingModel model(R("Z4 x Z9 x Z25"));
  const Report report = ultrafilter_max_bijection(model);
  ASSERT_EQ(report.checks().size(), 3u);
  for (const auto& c : report.checks()) EXPECT_EQ(c.status, Status::pass) << c.name;
  EXPECT_EQ(ultrafilters(model.ring()).size(), model.maximal().size());

  const Ideal components[] = {Ideal(R("Z4"), {2}), Ideal(R("Z9"), {3}), Ideal(R("Z25"), {5})};
  const Ideal m = maximal_from_ultrafilter(Filter::at(model.ring(), 1), components);
  EXPECT_EQ(m.to_string(), "(1,3,1)");
  EXPECT_THROW(maximal_from_ultrafilter(Filter::top(model.ring()), components), PreconditionError);
  EXPECT_THROW(ultrafilter_max_bijection(RingModel(R("Z6 x Z4"))), PreconditionError);
}

TEST(Correspondence, SuitesPassOnSampleRings) {
  for (const char* expr : {"Z5", "Z4 x Z6", "Z2 x Z3 x Z5", "Z3 x Z5 x Z7", "Z12 x Z12"}) {
    const RingModel model(R(expr));
    for (const Report& report : {nucleus_suite(model, 3), filter_map_suite(model), verify_order_embedding(model),
                                 filter_ideal_suite(model)})
      for (const auto& c : report.checks())
        EXPECT_TRUE(c.status == Status::pass || c.status == Status::degenerate || c.status == Status::skipped)
            << expr << " " << report.suite() << "/" << c.name << " " << to_string(c.status);
  }
}

TEST(Correspondence, FilterMapJoinGatedOnTwoInvertible) {
  const Report odd = filter_map_suite(RingModel(R("Z3 x Z5 x Z7")));
  ASSERT_NE(odd.find("filter-map-join"), nullptr);
  EXPECT_EQ(odd.find("filter-map-join")->status, Status::pass);
  const Report even = filter_map_suite(RingModel(R("Z4 x Z5")));
  ASSERT_NE(even.find("filter-map-join"), nullptr);
  EXPECT_EQ(even.find("filter-map-join")->status, Status::skipped);
}

TEST(Correspondence, NucleusOnZ6TimesZ4) {
  // I ↦ I(F_{0}, I) over the 4 · 3 ideals of Z6 x Z4.
  const RingModel model(R("Z6 x Z4"));
  ASSERT_EQ(model.ideal_count(), 12u);
  const Filter f(model.ring(), IndexSet(2, 0b01));
  std::vector<FiniteLattice::Id> image;
  for (const auto& ideal : model.ideals()) image.push_back(model.index_of(ideal_from_filter(f, ideal)));
  EXPECT_TRUE(verify_map(model.lattice(), image).nucleus());
}
