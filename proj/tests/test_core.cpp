#include <algorithm>

#include <gtest/gtest.h>

#include "khr/khr.hpp"

using namespace khr;

namespace {

Structure ternary33() { return parse_structure(read_file(KHR_DATA_DIR "/paper_33.khr")); }

ElementSet set(std::initializer_list<Element> xs) { return ElementSet::of(xs); }

}  // namespace

TEST(ElementSet, BasicOperations) {
  ElementSet a = set({0, 2, 4});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(a.contains(2));
  EXPECT_FALSE(a.contains(3));
  EXPECT_EQ(a.min(), 0u);
  EXPECT_EQ(a.to_string(), "{0,2,4}");
  EXPECT_TRUE(set({2}).subset_of(a));
  EXPECT_EQ((a | set({1})).to_string(), "{0,1,2,4}");
  EXPECT_EQ((a & set({2, 3})).to_string(), "{2}");
  EXPECT_EQ((a - set({0})).to_string(), "{2,4}");
  EXPECT_EQ(ElementSet::full(3).to_string(), "{0,1,2}");
  EXPECT_EQ(ElementSet().to_string(), "{}");
  EXPECT_EQ(ElementSet::full(64).size(), 64u);
}

TEST(ElementSet, TuplesInLexicographicOrder) {
  std::vector<std::vector<Element>> seen;
  for_each_tuple(2, 3, [&](std::span<const Element> t) {
    seen.emplace_back(t.begin(), t.end());
    return true;
  });
  ASSERT_EQ(seen.size(), 8u);
  EXPECT_EQ(seen.front(), (std::vector<Element>{0, 0, 0}));
  EXPECT_EQ(seen[1], (std::vector<Element>{0, 0, 1}));
  EXPECT_EQ(seen.back(), (std::vector<Element>{1, 1, 1}));
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
}

TEST(Eval, Ternary33ExampleF) {
  const Structure r = ternary33();
  EXPECT_EQ(r.f({0, 0, 1}), set({1}));
  EXPECT_EQ(r.f({0, 1, 2}), set({0, 1, 2}));
  EXPECT_EQ(r.f({1, 1, 2}), set({0, 1, 2}));
  EXPECT_EQ(r.f({2, 1, 1}), set({0, 1, 2}));
  EXPECT_EQ(r.f({2, 2, 0}), set({2}));
  for (Element x = 0; x < r.card(); ++x) EXPECT_EQ(r.f({0, 0, x}), set({x}));
}

TEST(Eval, Ternary33ExampleFOnSets) {
  const Structure r = ternary33();
  EXPECT_EQ(r.f_sets({set({2}), set({1}), set({0})}), set({0, 1, 2}));
  EXPECT_EQ(r.f_sets({set({0, 1}), set({1}), set({1})}), set({1}));
  EXPECT_EQ(r.f_sets({set({0}), set({0}), set({2})}), set({2}));
  EXPECT_THROW(r.f_sets({set({0}), ElementSet(), set({2})}), usage_error);
}

TEST(Eval, Ternary33ExampleG) {
  const Structure r = ternary33();
  EXPECT_EQ(r.g({1, 2, 2}), 2u);
  EXPECT_EQ(r.g({1, 1, 1}), 1u);
  EXPECT_EQ(r.g({2, 1, 1}), 2u);
  for (Element x = 0; x < r.card(); ++x) {
    EXPECT_EQ(r.g({x, 1, 1}), x);
    for (Element y = 0; y < r.card(); ++y) {
      EXPECT_EQ(r.g({0, x, y}), 0u);
      EXPECT_EQ(r.g({x, 0, y}), 0u);
    }
  }
}

TEST(Eval, OutOfRangeIsUsageError) {
  const Structure r = ternary33();
  EXPECT_THROW(r.f({0, 0, 3}), usage_error);
  EXPECT_THROW(r.g({5, 0, 0}), usage_error);
  EXPECT_THROW(r.f({0, 0}), usage_error);
  EXPECT_THROW(r.g({0, 0, 0, 0}), usage_error);
}

TEST(Eval, IteratedG) {
  const Structure z6 = ring_embedding(6);
  EXPECT_EQ(z6.g_iterated(2, std::vector<Element>{2, 2, 2}), 2u);
  EXPECT_EQ(z6.g_iterated(3, std::vector<Element>{2, 3, 5, 1}), 0u);
  EXPECT_EQ(z6.g_iterated(2, std::vector<Element>{5, 0, 5}), 0u);
  EXPECT_THROW(z6.g_iterated(2, std::vector<Element>{2, 2}), usage_error);
  EXPECT_THROW(z6.g_iterated(0, std::vector<Element>{2}), usage_error);
  for_each_tuple(6, 2, [&](std::span<const Element> t) {
    EXPECT_EQ(z6.g_iterated(1, t), z6.g(t));
    return true;
  });
}

TEST(Eval, IteratedF) {
  const Structure z6 = ring_embedding(6);
  const std::vector<ElementSet> args{set({1}), set({2}), set({3})};
  EXPECT_EQ(z6.f_iterated(2, args), set({0}));
  const std::vector<ElementSet> zeros(5, set({0}));
  EXPECT_EQ(z6.f_iterated(4, zeros), set({0}));
  EXPECT_THROW(z6.f_iterated(2, std::vector<ElementSet>(2, set({0}))), usage_error);
  const Structure r = ternary33();
  for_each_tuple(3, 3, [&](std::span<const Element> t) {
    std::vector<ElementSet> s;
    for (Element x : t) s.push_back(ElementSet::single(x));
    EXPECT_EQ(r.f_iterated(1, s), r.f(t));
    return true;
  });
}

TEST(Structure, ConstructionRejectsBadShapes) {
  EXPECT_THROW(Structure("x", {1, 2}, 2, 0, 1, true, {}, {}), format_error);
  EXPECT_THROW(Structure("x", {2, 2}, 2, 0, 1, true, std::vector<ElementSet>(3, set({0})), {0, 0, 0, 1}),
               format_error);
  EXPECT_THROW(Structure("x", {2, 2}, 2, 0, 1, true, std::vector<ElementSet>(4, ElementSet()), {0, 0, 0, 1}),
               format_error);
  EXPECT_THROW(Structure("x", {2, 2}, 2, 0, 1, true, std::vector<ElementSet>(4, set({0})), {0, 0, 0, 2}),
               format_error);
  EXPECT_THROW(Structure("x", {2, 2}, 2, 0, 2, true, std::vector<ElementSet>(4, set({0})), {0, 0, 0, 1}),
               format_error);
}

TEST(Validate, Z6StrictPasses) {
  const ValidationReport r = validate_structure(ring_embedding(6));
  EXPECT_TRUE(r.ok()) << r.render();
  EXPECT_EQ(r.verdicts.size(), 11u);
}

TEST(Validate, BrokenNeutralFailsWithCounterexample) {
  // f(0,1) = {0}
  std::vector<ElementSet> f{set({0}), set({0}), set({0}), set({1})};
  const Structure s("broken", {}, 2, 0, 1, true, f, {0, 0, 0, 1});
  const ValidationReport r = validate_structure(s);
  const AxiomVerdict* v = r.find(axiom::scalar_neutral);
  ASSERT_NE(v, nullptr);
  EXPECT_FALSE(v->pass);
  EXPECT_FALSE(v->counterexample.empty());
  EXPECT_FALSE(r.ok());
}

TEST(Validate, IdempotentTwoBreaksDistributivity) {
  // Z3 addition with g(2,2) = 2
  std::vector<ElementSet> f{set({0}), set({1}), set({2}), set({1}), set({2}), set({0}), set({2}), set({0}),
                            set({1})};
  std::vector<Element> g{0, 0, 0, 0, 1, 2, 0, 2, 2};
  const Structure s("g-broken", {}, 3, 0, 1, true, f, g);
  const ValidationReport r = validate_structure(s);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.find(axiom::distributive)->pass);
}

TEST(Validate, NonCommutativeDeclarationIsCaught) {
  Structure z3 = ring_embedding(3);
  std::vector<Element> g = z3.g_table();
  g[0 * 3 + 2] = 1;  // g(0,2) = 1 but g(2,0) = 0
  const Structure s("skew", {}, 3, 0, 1, true, z3.f_table(), g);
  const ValidationReport r = validate_structure(s);
  EXPECT_FALSE(r.find(axiom::g_commutative)->pass);
  EXPECT_FALSE(r.find(axiom::zero_absorbing)->pass);
}

TEST(Validate, Ternary33ExampleAdjudication) {
  const Structure r = ternary33();
  const ValidationReport strict = validate_structure(r);
  EXPECT_FALSE(strict.ok());
  const AxiomVerdict* d = strict.find(axiom::distributive);
  ASSERT_NE(d, nullptr);
  EXPECT_FALSE(d->pass);
  EXPECT_EQ(tuple_to_string(d->counterexample), "(0,1,2,1,2)");
  // g(f(0,1,2),1,2) = {0,2}, f(g(0,1,2), g(1,1,2), g(2,1,2)) = f(0,2,2) = {2}
  EXPECT_EQ(r.g_sets(std::vector<ElementSet>{r.f({0, 1, 2}), set({1}), set({2})}), set({0, 2}));
  EXPECT_EQ(r.f({r.g({0, 1, 2}), r.g({1, 1, 2}), r.g({2, 1, 2})}), set({2}));
  for (const auto& v : strict.verdicts) {
    if (v.id != axiom::distributive) {
      EXPECT_TRUE(v.pass) << v.id;
    }
  }
  EXPECT_TRUE(validate_structure(r, DistributivityMode::weak).ok());
}

TEST(Validate, Deterministic) {
  const Structure r = ternary33();
  EXPECT_EQ(validate_structure(r).render(), validate_structure(r).render());
}

TEST(Validate, NegationInvariantsOnValidStructures) {
  for (const Structure& s : {ring_embedding(6), ring_embedding(5, {3, 3}), krasner_hyperfield(), sign_hyperfield(),
                             quotient_hyperfield(7, 2), ternary33()}) {
    ASSERT_TRUE(validate_structure(s, DistributivityMode::weak).ok()) << s.name();
    EXPECT_EQ(s.neg(s.zero()), s.zero());
    for (Element x = 0; x < s.card(); ++x) {
      EXPECT_EQ(s.neg(s.neg(x)), x);
      std::size_t witnesses = 0;
      for (Element y = 0; y < s.card(); ++y) {
        if (s.f_padded({ElementSet::single(x), ElementSet::single(y)}).contains(s.zero())) ++witnesses;
      }
      EXPECT_EQ(witnesses, 1u) << s.name() << " x=" << x;
    }
  }
}

TEST(Validate, CommutativeTablesArePermutationInvariant) {
  for (const Structure& s : {ring_embedding(5, {3, 3}), sign_hyperfield({2, 3}), ternary33()}) {
    for_each_tuple(s.card(), s.m(), [&](std::span<const Element> t) {
      std::vector<Element> p(t.begin(), t.end());
      std::sort(p.begin(), p.end());
      do {
        EXPECT_EQ(s.f(p), s.f(t));
      } while (std::next_permutation(p.begin(), p.end()));
      return true;
    });
    for_each_tuple(s.card(), s.n(), [&](std::span<const Element> t) {
      std::vector<Element> p(t.begin(), t.end());
      std::sort(p.begin(), p.end());
      do {
        EXPECT_EQ(s.g(p), s.g(t));
      } while (std::next_permutation(p.begin(), p.end()));
      return true;
    });
  }
}

TEST(Validate, EvenResidueRingsHaveNoTernarySum) {
  // x + y + y = x holds for y = 0 and y = k/2, so the scalar neutral is not unique.
  const ValidationReport r = validate_structure(ring_embedding(4, {3, 3}));
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.find(axiom::scalar_neutral)->pass);
  EXPECT_TRUE(validate_structure(ring_embedding(5, {3, 3})).ok());
  EXPECT_TRUE(validate_structure(ring_embedding(4, {2, 3})).ok());
}
