#include <gtest/gtest.h>

#include "khr/khr.hpp"

using namespace khr;

namespace {

ElementSet set(std::initializer_list<Element> xs) { return ElementSet::of(xs); }

}  // namespace

TEST(Quotient, Z6ByThree) {
  const Quotient q = build_quotient(ring_embedding(6), set({0, 3}));
  ASSERT_EQ(q.size(), 3u);
  EXPECT_EQ(q.cosets()[0], set({0, 3}));
  EXPECT_EQ(q.cosets()[1], set({1, 4}));
  EXPECT_EQ(q.cosets()[2], set({2, 5}));
  EXPECT_EQ(q.zero_coset(), q.coset_of(0));
  EXPECT_EQ(q.one_coset(), q.coset_of(1));
  EXPECT_TRUE(q.report().ok());
  EXPECT_TRUE(find_isomorphism(q.ring(), ring_embedding(3)).has_value());
  EXPECT_TRUE(is_homomorphism(q.base(), q.ring(), q.projection()));
}

TEST(Quotient, ByZeroIsTheBase) {
  for (const Structure& r : {ring_embedding(6), sign_hyperfield(), ring_embedding(5, {3, 3})}) {
    const Quotient q = build_quotient(r, ElementSet::single(r.zero()));
    ASSERT_EQ(q.size(), r.card());
    for (const ElementSet& c : q.cosets()) EXPECT_EQ(c.size(), 1u);
    const auto iso = find_isomorphism(q.ring(), r);
    ASSERT_TRUE(iso.has_value());
    EXPECT_EQ(*iso, identity_map(r));
  }
}

TEST(Quotient, ByEverythingIsOnePoint) {
  const Quotient q = build_quotient(ring_embedding(6), ElementSet::full(6));
  EXPECT_EQ(q.size(), 1u);
  EXPECT_TRUE(q.report().ok());
}

TEST(Quotient, RejectsNonIdeals) {
  EXPECT_THROW(build_quotient(ring_embedding(6), set({0, 1})), usage_error);
  EXPECT_THROW(build_quotient(ring_embedding(6), ElementSet()), usage_error);
}

TEST(Quotient, HyperfieldByItsOnlyProperIdeal) {
  const Quotient q = build_quotient(quotient_hyperfield(7, 2), set({0}));
  EXPECT_TRUE(q.report().ok());
}

TEST(Quotient, HigherArityValidates) {
  for (const Structure& r : {ring_embedding(6, {2, 3}), ring_embedding(5, {3, 3}), ring_embedding(3, {3, 3})}) {
    for (ElementSet i : enumerate_hyperideals(r)) {
      const Quotient q = build_quotient(r, i);
      EXPECT_TRUE(q.report().ok()) << r.name() << i.to_string() << "\n" << q.report().render();
      EXPECT_TRUE(is_homomorphism(r, q.ring(), q.projection()));
    }
  }
}

TEST(Sbar, Examples) {
  const Quotient q = build_quotient(ring_embedding(6), set({0, 3}));
  EXPECT_EQ(sbar(q, set({1})), ElementSet::single(q.one_coset()));
  EXPECT_EQ(sbar(q, set({1, 5})), set({1, 2}));
  EXPECT_THROW(sbar(q, set({1, 3})), usage_error);
  EXPECT_THROW(sbar(q, set({1, 2})), usage_error);
}

TEST(Sbar, ComplementOfPrimeDropsOnlyZeroCoset) {
  const Structure z6 = ring_embedding(6);
  for (ElementSet p : {set({0, 2, 4}), set({0, 3})}) {
    const Quotient q = build_quotient(z6, p);
    const ElementSet expected = q.ring().carrier() - ElementSet::single(q.zero_coset());
    EXPECT_EQ(sbar(q, z6.carrier() - p), expected);
  }
}

TEST(QuotientFractionIso, Examples) {
  const Structure z6 = ring_embedding(6);
  const TheoremVerdict v = check_quotient_fraction_iso(z6, set({1, 5}), set({0, 3}));
  EXPECT_TRUE(v.passed()) << v.detail;
  EXPECT_TRUE(check_quotient_fraction_iso(z6, set({1, 3, 5}), set({0})).passed());
  EXPECT_TRUE(check_quotient_fraction_iso(z6, set({1, 3, 5}), set({0, 2, 4})).passed());
  EXPECT_THROW(check_quotient_fraction_iso(z6, set({1, 3, 5}), set({0, 3})), usage_error);
}

TEST(QuotientFractionIso, NestedPrimes) {
  // (R/Q)_{P/Q} against R_P / Q R_P for primes Q inside P
  for (const Structure& r : {ring_embedding(6), ring_embedding(4), ring_embedding(6, {2, 3}),
                             direct_product(ring_embedding(2), ring_embedding(3))}) {
    std::vector<ElementSet> primes;
    for (ElementSet i : enumerate_hyperideals(r)) {
      if (i != r.carrier() && is_prime(r, i)) primes.push_back(i);
    }
    for (ElementSet p : primes) {
      const ElementSet s = r.carrier() - p;
      for (ElementSet q : primes) {
        if (!q.subset_of(p)) continue;
        const TheoremVerdict v = check_quotient_fraction_iso(r, s, q);
        EXPECT_TRUE(v.passed()) << r.name() << " P=" << p.to_string() << " Q=" << q.to_string() << ": " << v.detail;
      }
    }
  }
}

TEST(QuotientFractionIso, AllDisjointPairsOnHigherArity) {
  for (const Structure& r : {ring_embedding(5, {3, 3}), ring_embedding(6, {2, 3})}) {
    for (ElementSet s : enumerate_multiplicative_subsets(r)) {
      for (ElementSet i : enumerate_hyperideals(r)) {
        if (i.intersects(s)) continue;
        const TheoremVerdict v = check_quotient_fraction_iso(r, s, i);
        EXPECT_TRUE(v.passed()) << r.name() << " " << v.instance << ": " << v.detail;
      }
    }
  }
}

TEST(Quotient, SerializationCarriesCosets) {
  const Quotient q = build_quotient(ring_embedding(6), set({0, 3}));
  const StructureFile file = parse_structure_file(serialize(q));
  EXPECT_EQ(file.cosets, q.cosets());
  EXPECT_EQ(serialize(file.structure), serialize(q.ring()));
}
