#include <gtest/gtest.h>

#include "srings/json_io.hpp"

using namespace srings;

TEST(Json, RingRoundTrip) {
  for (int n : {6, 9, 16})
    for (const auto& e : enumerate_srings(n).entries) {
      const Json j = ring_to_json(e.ring);
      EXPECT_EQ(ring_from_json(parse_json(j.dump())), e.ring);
    }
}

TEST(Json, RingInfersModulus) {
  const SRing a = ring_from_json(parse_json(R"({"basic_sets": [[0], [3, 6], [1, 2, 4, 5, 7, 8]]})"));
  EXPECT_EQ(a.n, 9);
  EXPECT_EQ(a.rank(), 3);
  // Unsorted input comes back canonical.
  const SRing b = ring_from_json(parse_json(R"({"n": 4, "basic_sets": [[3, 1], [2], [0]]})"));
  EXPECT_EQ(b.cells, (std::vector<std::vector<int>>{{0}, {1, 3}, {2}}));
}

TEST(Json, RingErrors) {
  EXPECT_THROW(ring_from_json(parse_json(R"({"n": 4})")), Error);
  EXPECT_THROW(ring_from_json(parse_json(R"({"basic_sets": [[0], [1, 2], [4]]})")), Error);
  EXPECT_THROW(ring_from_json(parse_json(R"({"basic_sets": [[0], ["a"]]})")), Error);
  EXPECT_THROW(ring_from_json(parse_json(R"({"n": 5, "basic_sets": [[0], [1, 2, 3]]})")), Error);
}

TEST(Json, MalformedTextReportsByte) {
  try {
    parse_json("{\"n\": 4,, }");
    FAIL();
  } catch (const Error& e) {
    const std::string msg = e.what();
    EXPECT_EQ(msg.rfind("malformed JSON at byte 9", 0), 0u) << msg;
  }
}

TEST(Json, GroupRoundTripAndOrder) {
  const Json j = group_to_json(holomorph(7));
  EXPECT_EQ(j.at("order"), "42");
  const PermGroup g = group_from_json(j);
  EXPECT_TRUE(same_group(g, holomorph(7)));
  EXPECT_THROW(group_from_json(parse_json(R"({"degree": 3, "generators": [[0, 0, 1]]})")), Error);
  EXPECT_THROW(group_from_json(parse_json(R"({"degree": 3, "generators": [[0, 1]]})")), Error);
  EXPECT_THROW(group_from_json(parse_json(R"({"degree": 0})")), Error);
}

TEST(Json, BigNumbersAreStrings) {
  EXPECT_EQ(big_to_json(factorial(30)), "265252859812191058636308480000000");
  const Json s = schurity_to_json(schurity(rank2(25)));
  EXPECT_EQ(s.at("aut_order"), factorial(25).str());
  EXPECT_TRUE(s.at("schurian").get<bool>());
}

TEST(Json, Reports) {
  const SRing z9 = validate(9, {{0}, {3, 6}, {1, 2, 4, 5, 7, 8}});
  const Json c = classification_to_json(classify(z9));
  EXPECT_EQ(c.at("rank"), 3);
  EXPECT_EQ(c.at("proper_gwp_sections"), Json::parse("[[3, 3]]"));
  const auto cs = proj_classes(z9);
  const Json p = proj_class_to_json(cs[0]);
  EXPECT_EQ(p.at("s_min"), Json::parse("[3, 1]"));
  EXPECT_TRUE(p.at("singular").get<bool>());
  const Json w = sweep_to_json(schurity_sweep(9));
  EXPECT_EQ(w.at("n"), 9);
  EXPECT_EQ(w.at("omega"), 2);
  EXPECT_EQ(w.at("entries"), w.at("schurian"));
  const Json e = catalog_entry_to_json(enumerate_srings(5).entries.front());
  EXPECT_TRUE(e.contains("provenance"));
}
