#include <string>

#include <gtest/gtest.h>

#include "khr/khr.hpp"

using namespace khr;

namespace {

ElementSet set(std::initializer_list<Element> xs) { return ElementSet::of(xs); }

std::size_t error_line(const std::string& text) {
  try {
    parse_structure(text);
  } catch (const format_error& e) {
    return e.line();
  }
  return 0;
}

const char* kZ2 =
    "khr 1\n"
    "name z2\n"
    "m 2 n 2 card 2\n"
    "zero 0 one 1\n"
    "flags commutative\n"
    "f 0 0 : 0\n"
    "f 0 1 : 1\n"
    "f 1 1 : 0\n"
    "g 0 * : 0\n"
    "g 1 1 : 1\n";

}  // namespace

TEST(Parse, Ternary33TablesVerbatim) {
  const Structure r = parse_structure(read_file(KHR_DATA_DIR "/paper_33.khr"));
  EXPECT_EQ(r.name(), "paper_33");
  EXPECT_EQ(r.m(), 3u);
  EXPECT_EQ(r.n(), 3u);
  EXPECT_EQ(r.card(), 3u);
  EXPECT_TRUE(r.commutative());
  EXPECT_EQ(r.f({1, 1, 2}), r.carrier());
  EXPECT_EQ(r.g({1, 1, 1}), 1u);
  EXPECT_EQ(r.g({2, 0, 2}), 0u);
}

TEST(Parse, WildcardsAndPermutations) {
  const Structure z2 = parse_structure(kZ2);
  EXPECT_EQ(z2.f({1, 0}), set({1}));
  EXPECT_EQ(z2.g({1, 0}), 0u);
  EXPECT_EQ(z2.g({0, 1}), 0u);
  EXPECT_TRUE(find_isomorphism(z2, ring_embedding(2)).has_value());
}

TEST(Parse, SpecificEntriesBeatWildcards) {
  const Structure z2 = parse_structure(
      "khr 1\nm 2 n 2 card 2\nzero 0 one 1\nflags commutative\nf * * : 1\nf 0 0 : 0\nf 1 1 : 0\n"
      "g * * : 0\ng 1 1 : 1\n");
  EXPECT_EQ(z2.f({0, 0}), set({0}));
  EXPECT_EQ(z2.f({1, 0}), set({1}));
  EXPECT_EQ(z2.g({1, 1}), 1u);
  EXPECT_EQ(z2.g({0, 1}), 0u);
}

TEST(Parse, OverlappingWildcardsMustAgree) {
  std::string text = kZ2;
  text += "g * 1 : 1\n";
  EXPECT_EQ(error_line(text), 11u);
}

TEST(Parse, CommentsAndBlankLines) {
  std::string text = "# leading comment\n\n";
  text += kZ2;
  text += "   # trailing\n";
  EXPECT_EQ(serialize(parse_structure(text)), serialize(parse_structure(kZ2)));
}

TEST(Parse, Errors) {
  EXPECT_EQ(error_line(""), 1u);
  EXPECT_EQ(error_line("khr 2\n"), 1u);
  EXPECT_EQ(error_line("monoid 1\n"), 1u);
  EXPECT_EQ(error_line("khr 1\nname z\nm 2 n 2 card 2\nzero 0 one 1\nbogus 3\n"), 5u);
  EXPECT_EQ(error_line("khr 1\nf 0 0 : 0\n"), 2u);
  EXPECT_EQ(error_line("khr 1\nm 2 n 2 card 2\nzero 0 one 1\nf 0 0 0 : 0\n"), 4u);
  EXPECT_EQ(error_line("khr 1\nm 2 n 2 card 2\nzero 0 one 1\nf 0 2 : 0\n"), 4u);
  EXPECT_EQ(error_line("khr 1\nm 2 n 2 card 2\nzero 0 one 1\nf 0 0 :\n"), 4u);
  EXPECT_EQ(error_line("khr 1\nm 2 n 2 card 2\nzero 0 one 1\ng 0 0 : 0 1\n"), 4u);
  EXPECT_EQ(error_line("khr 1\nm 1 n 2 card 2\n"), 2u);
  EXPECT_EQ(error_line("khr 1\nm 2 n 2 card 65\n"), 2u);
  EXPECT_EQ(error_line("khr 1\nm 2 n 2 card 2\nzero 0 one 5\n"), 3u);
  EXPECT_EQ(error_line("ring Z 6\nring Z 3\n"), 2u);
  EXPECT_EQ(error_line("ring Z 6 m 1\n"), 1u);
  EXPECT_EQ(error_line("hyperfield Z 6 / 5\n"), 1u);
}

TEST(Parse, ConflictNamesBothLines) {
  std::string text = kZ2;
  text += "f 1 0 : 0\n";
  try {
    parse_structure(text);
    FAIL();
  } catch (const format_error& e) {
    EXPECT_EQ(e.line(), 11u);
    EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos) << e.what();
  }
}

TEST(Parse, MissingEntryNamesTuple) {
  try {
    parse_structure("khr 1\nm 2 n 2 card 2\nzero 0 one 1\nflags commutative\nf 0 0 : 0\nf 0 1 : 1\n"
                    "g 0 * : 0\ng 1 1 : 1\n");
    FAIL();
  } catch (const format_error& e) {
    EXPECT_NE(std::string(e.what()).find("missing f entry for (1,1)"), std::string::npos) << e.what();
  }
}

TEST(Parse, Generators) {
  EXPECT_EQ(parse_structure("ring Z 6\n").card(), 6u);
  const Structure r = parse_structure("ring Z 4 m 2 n 3\n");
  EXPECT_EQ(r.n(), 3u);
  EXPECT_EQ(r.g({2, 2, 3}), 0u);
  EXPECT_EQ(parse_structure("ring Z 2 x Z 3\n").card(), 6u);
  EXPECT_EQ(parse_structure("hyperfield krasner\n").f({1, 1}), set({0, 1}));
  EXPECT_EQ(parse_structure("hyperfield sign m 3 n 3\n").card(), 3u);
  EXPECT_EQ(parse_structure("hyperfield Z 5 / 4\n").card(), 3u);
}

TEST(RoundTrip, ByteStable) {
  for (const Structure& s : {ring_embedding(6), ring_embedding(4, {3, 2}), sign_hyperfield({2, 3}),
                             quotient_hyperfield(7, 2), direct_product(ring_embedding(2), ring_embedding(2)),
                             parse_structure(read_file(KHR_DATA_DIR "/paper_33.khr"))}) {
    const std::string once = serialize(s);
    const Structure back = parse_structure(once);
    EXPECT_EQ(serialize(back), once) << s.name();
    EXPECT_EQ(back.f_table(), s.f_table());
    EXPECT_EQ(back.g_table(), s.g_table());
  }
}

TEST(RoundTrip, NonCommutativeTablesAreWrittenInFull) {
  const Structure z3 = ring_embedding(3);
  const Structure r("nc", {}, 3, 0, 1, false, z3.f_table(), z3.g_table());
  const std::string text = serialize(r);
  EXPECT_EQ(text.find("flags"), std::string::npos);
  EXPECT_NE(text.find("f 2 1 : 0"), std::string::npos);
  EXPECT_EQ(serialize(parse_structure(text)), text);
}

TEST(RoundTrip, DerivedStructuresReparse) {
  const Localization loc = build_localization(ring_embedding(6), set({1, 5}));
  const StructureFile lf = parse_structure_file(serialize(loc));
  EXPECT_EQ(serialize(lf.structure), serialize(loc.ring()));
  EXPECT_EQ(lf.classes.size(), loc.size());
  const Quotient q = build_quotient(ring_embedding(6), set({0, 2, 4}));
  const StructureFile qf = parse_structure_file(serialize(q));
  EXPECT_EQ(qf.cosets, q.cosets());
}

TEST(ReadFile, MissingIsUsageError) {
  EXPECT_THROW(read_file("/nonexistent/file.khr"), usage_error);
}
