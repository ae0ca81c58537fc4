// Randomized invariance under carrier relabeling, with a fixed seed.

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "khr/khr.hpp"

using namespace khr;

namespace {

std::vector<Structure> corpus() {
  return {ring_embedding(4),
          ring_embedding(6),
          ring_embedding(5, {2, 3}),
          ring_embedding(5, {3, 3}),
          direct_product(ring_embedding(2), ring_embedding(2)),
          krasner_hyperfield(),
          sign_hyperfield({2, 3}),
          quotient_hyperfield(7, 2),
          quotient_hyperfield(5, 4, {3, 3})};
}

// A random permutation fixing nothing in particular; zero and one move too.
std::vector<Element> random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

ElementSet image(ElementSet a, const std::vector<Element>& p) {
  ElementSet out;
  a.for_each([&](Element x) { out.insert(p[x]); });
  return out;
}

std::vector<ElementSet> sorted_images(const std::vector<ElementSet>& sets, const std::vector<Element>& p) {
  std::vector<ElementSet> out;
  for (ElementSet a : sets) out.push_back(image(a, p));
  std::sort(out.begin(), out.end(), [](ElementSet x, ElementSet y) { return x.bits() < y.bits(); });
  return out;
}

constexpr int kRounds = 4;

}  // namespace

TEST(Relabel, ValidationAndIsomorphism) {
  std::mt19937 rng(20261015);
  for (const Structure& s : corpus()) {
    for (int round = 0; round < kRounds; ++round) {
      const auto p = random_perm(s.card(), rng);
      const Structure t = relabel(s, p, s.name() + "'");
      EXPECT_EQ(validate_structure(t).ok(), validate_structure(s).ok()) << s.name();
      const auto iso = find_isomorphism(s, t);
      ASSERT_TRUE(iso.has_value()) << s.name();
      EXPECT_TRUE(is_homomorphism(s, t, *iso));
      const auto back = find_isomorphism(t, s);
      ASSERT_TRUE(back.has_value());
      for (Element x = 0; x < s.card(); ++x) EXPECT_EQ((*back)((*iso)(x)), x);
      EXPECT_EQ(serialize(parse_structure(serialize(t))), serialize(t));
    }
  }
}

TEST(Relabel, IdealTheoryIsTransported) {
  std::mt19937 rng(7);
  for (const Structure& s : corpus()) {
    const auto p = random_perm(s.card(), rng);
    const Structure t = relabel(s, p);
    const auto ideals = enumerate_hyperideals(s);
    auto expected = sorted_images(ideals, p);
    EXPECT_EQ(enumerate_hyperideals(t), expected) << s.name();
    for (ElementSet i : ideals) {
      const ElementSet j = image(i, p);
      EXPECT_EQ(radical(t, j), image(radical(s, i), p));
      if (i == s.carrier()) continue;
      EXPECT_EQ(is_prime(t, j), is_prime(s, i));
      EXPECT_EQ(is_primary(t, j), is_primary(s, i));
      EXPECT_EQ(is_two_absorbing(t, j), is_two_absorbing(s, i));
      EXPECT_EQ(is_maximal(t, j), is_maximal(s, i));
    }
    EXPECT_EQ(enumerate_multiplicative_subsets(t), sorted_images(enumerate_multiplicative_subsets(s), p))
        << s.name();
  }
}

TEST(Relabel, LocalizationsAreIsomorphic) {
  std::mt19937 rng(11);
  for (const Structure& s : corpus()) {
    if (!s.commutative() || s.n() < s.m()) continue;
    const auto p = random_perm(s.card(), rng);
    const Structure t = relabel(s, p);
    for (ElementSet sub : enumerate_multiplicative_subsets(s)) {
      const Localization a = build_localization(s, sub);
      const Localization b = build_localization(t, image(sub, p));
      ASSERT_EQ(a.size(), b.size());
      EXPECT_TRUE(find_isomorphism(a.ring(), b.ring()).has_value()) << s.name() << sub.to_string();
    }
    for (ElementSet i : enumerate_hyperideals(s)) {
      const Quotient a = build_quotient(s, i);
      const Quotient b = build_quotient(t, image(i, p));
      ASSERT_EQ(a.size(), b.size());
      EXPECT_TRUE(find_isomorphism(a.ring(), b.ring()).has_value()) << s.name() << i.to_string();
    }
  }
}

TEST(Relabel, RandomSubsetsAgreeOnMembershipTests) {
  std::mt19937 rng(3);
  for (const Structure& s : corpus()) {
    const auto p = random_perm(s.card(), rng);
    const Structure t = relabel(s, p);
    std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << s.card()) - 1);
    for (int round = 0; round < 32; ++round) {
      const ElementSet a(pick(rng));
      EXPECT_EQ(is_hyperideal(t, image(a, p)), is_hyperideal(s, a));
      EXPECT_EQ(is_multiplicative(t, image(a, p)), is_multiplicative(s, a));
    }
  }
}
