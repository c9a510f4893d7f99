#include <doctest.h>

#include <random>
#include <set>

#include "generators.hpp"
#include "modal/kripke.hpp"
#include "oracles.hpp"

using namespace modal;
using testgen::frame1;

namespace {

// The three recurring fixture frames (1-based edges, like the text format):
// a 2-world frame that is serial and transitive but not euclidean, the same
// with a dangling extra edge pattern, and the 3-world serial+euclidean but
// not transitive frame.
const Frame kFrameA = frame1(2, {{1, 1}, {1, 2}, {2, 1}});            // refl at 1 only
const Frame kFrameB = frame1(2, {{1, 1}, {1, 2}, {2, 2}});            // ser, trans, not eucl
const Frame kFrameC = frame1(3, {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 2}});

}  // namespace

TEST_CASE("condition tags parse and print") {
  CHECK(std::string(condition_name(Condition::Refl)) == "refl");
  CHECK(std::string(condition_name(Condition::Eucl)) == "eucl");
  CHECK(condition_from_name("trans") == Condition::Trans);
  CHECK_FALSE(condition_from_name("Trans").has_value());
  CHECK_FALSE(condition_from_name("").has_value());
}

TEST_CASE("condition sets") {
  ConditionSet set{Condition::Eucl, Condition::Refl};
  CHECK(set.size() == 2);
  CHECK(set.contains(Condition::Refl));
  CHECK_FALSE(set.contains(Condition::Sym));
  // Iteration follows tag order regardless of insertion order.
  CHECK(set.to_string() == "{refl,eucl}");
  CHECK(ConditionSet{}.to_string() == "{}");
  CHECK(ConditionSet::all().size() == 5);

  CHECK(condition_set_from_names("refl,eucl") == set);
  CHECK(condition_set_from_names(" refl , eucl ") == set);
  CHECK(condition_set_from_names("") == ConditionSet{});
  CHECK(condition_set_from_names("   ") == ConditionSet{});
  CHECK_THROWS_AS(condition_set_from_names("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(condition_set_from_names("refl,refl"), std::invalid_argument);
  CHECK_THROWS_AS(condition_set_from_names("refl,,eucl"), std::invalid_argument);
  CHECK_THROWS_AS(condition_set_from_names("refl,"), std::invalid_argument);
}

TEST_CASE("relation matrix basics") {
  RelationMatrix rel(3);
  CHECK_FALSE(rel.at(0, 0));
  rel.set(0, 2);
  rel.set(2, 1);
  CHECK(rel.at(0, 2));
  CHECK(rel.row(0) == world_set({2}));
  CHECK(rel.edges() == std::vector<std::pair<int, int>>{{0, 2}, {2, 1}});
  rel.set(0, 2, false);
  CHECK_FALSE(rel.at(0, 2));

  CHECK_THROWS_AS(rel.at(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(rel.set(0, -1), std::invalid_argument);
  CHECK_THROWS_AS(RelationMatrix(0), std::invalid_argument);
  CHECK_THROWS_AS(RelationMatrix(65), std::invalid_argument);
}

TEST_CASE("relation encoding is row-major with bit s*n+t") {
  RelationMatrix rel(2);
  rel.set(1, 1);
  CHECK(rel.encoding() == 8);  // bit 1*2+1
  rel.set(0, 0);
  CHECK(rel.encoding() == 9);
  CHECK(RelationMatrix(1).encoding() == 0);
  CHECK_THROWS_AS(RelationMatrix(9).encoding(), std::invalid_argument);
}

TEST_CASE("frame invariants") {
  CHECK_THROWS_AS(Frame(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(Frame(2, {RelationMatrix(3)}), std::invalid_argument);
  const Frame frame(2, {RelationMatrix(2), RelationMatrix(2)});
  CHECK(frame.relation_count() == 2);
  CHECK_THROWS_AS(frame.relation(2), std::invalid_argument);
  CHECK_THROWS_AS(frame.relation(-1), std::invalid_argument);
}

TEST_CASE("fixture frames: frozen condition values") {
  // kFrameA = {(1,1),(1,2),(2,1)}
  CHECK(check_condition(kFrameA, 0, Condition::Refl) == false);
  CHECK(check_condition(kFrameA, 0, Condition::Sym) == true);
  CHECK(check_condition(kFrameA, 0, Condition::Ser) == true);
  CHECK(check_condition(kFrameA, 0, Condition::Trans) == false);
  CHECK(check_condition(kFrameA, 0, Condition::Eucl) == false);

  // kFrameB = {(1,1),(1,2),(2,2)}
  CHECK(check_condition(kFrameB, 0, Condition::Ser) == true);
  CHECK(check_condition(kFrameB, 0, Condition::Trans) == true);
  CHECK(check_condition(kFrameB, 0, Condition::Eucl) == false);
  CHECK(check_condition(kFrameB, 0, Condition::Sym) == false);

  // kFrameC = {(1,1),(1,2),(2,1),(2,2),(3,2)}
  CHECK(check_condition(kFrameC, 0, Condition::Ser) == true);
  CHECK(check_condition(kFrameC, 0, Condition::Eucl) == true);
  CHECK(check_condition(kFrameC, 0, Condition::Trans) == false);
  CHECK(check_condition(kFrameC, 0, Condition::Refl) == false);

  // The 2-cycle without loops.
  const Frame cycle = frame1(2, {{1, 2}, {2, 1}});
  CHECK(check_condition(cycle, 0, Condition::Ser) == true);
  CHECK(check_condition(cycle, 0, Condition::Sym) == true);
  CHECK(check_condition(cycle, 0, Condition::Trans) == false);
  CHECK(check_condition(cycle, 0, Condition::Eucl) == false);

  CHECK(check_condition_set(kFrameC, 0, {Condition::Ser, Condition::Eucl}) == true);
  CHECK(check_condition_set(kFrameC, 0, {Condition::Ser, Condition::Trans}) == false);
  CHECK(check_condition_set(kFrameC, 0, {}) == true);
}

TEST_CASE("check_condition agrees with the naive oracle on every frame up to 4 worlds") {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * n);
    for (std::uint64_t enc = 0; enc < total; ++enc) {
      RelationMatrix rel(n);
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
          if ((enc >> (s * n + t)) & 1u) rel.set(s, t);
      const Frame frame = Frame::single(std::move(rel));
      for (int i = 0; i < kConditionCount; ++i) {
        const auto c = static_cast<Condition>(i);
        REQUIRE(check_condition(frame, 0, c) == oracle::condition_holds(frame, 0, c));
      }
    }
  }
}

TEST_CASE("condition implications hold on random larger frames") {
  std::mt19937_64 rng(20240811);
  for (int round = 0; round < 2000; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Frame frame = testgen::random_frame(rng, n);
    if (check_condition(frame, 0, Condition::Refl))
      CHECK(check_condition(frame, 0, Condition::Ser));
    if (check_condition(frame, 0, Condition::Sym) &&
        check_condition(frame, 0, Condition::Trans))
      CHECK(check_condition(frame, 0, Condition::Eucl));
    if (check_condition(frame, 0, Condition::Refl) &&
        check_condition(frame, 0, Condition::Eucl))
      CHECK(check_condition(frame, 0, Condition::Sym));
  }
}

TEST_CASE("valuations") {
  Valuation v;
  CHECK(v.find("p") == nullptr);
  v.assign("p", world_set({0, 2}));
  v.assign("q", 0);
  REQUIRE(v.find("p") != nullptr);
  CHECK(*v.find("p") == 0b101);
  v.assign("p", world_set({1}));
  CHECK(*v.find("p") == 0b010);
  // Iteration is sorted by name.
  CHECK(v.assignments().begin()->first == "p");

  CHECK(world_name(0) == "i1");
  CHECK(world_set_to_string(world_set({0, 2})) == "{i1,i3}");
  CHECK(world_set_to_string(0) == "{}");
  CHECK_THROWS_AS(world_set({64}), std::invalid_argument);
}

TEST_CASE("frame_print emits the documented format") {
  CHECK(frame_print(kFrameA) == "worlds: 2\nrel 0: (1,1) (1,2) (2,1)");
  CHECK(frame_print(Frame::single(RelationMatrix(1))) == "worlds: 1\nrel 0:");

  Frame two_rel(2, {RelationMatrix::from_edges(2, {{0, 1}}), RelationMatrix(2)});
  CHECK(frame_print(two_rel) == "worlds: 2\nrel 0: (1,2)\nrel 1:");
}

TEST_CASE("frame_parse accepts the documented format") {
  const Frame parsed = frame_parse("# countermodel\nworlds: 2\n\nrel 0: (1,1) (1,2) (2,1)\n");
  CHECK(parsed == kFrameA);

  // Whitespace variations and inline comments.
  CHECK(frame_parse("worlds: 2\nrel 0:  ( 1 , 2 )  # loop-free") ==
        frame1(2, {{1, 2}}));
  CHECK(frame_parse("worlds: 1\nrel 0:") == Frame::single(RelationMatrix(1)));
  CHECK(frame_parse("worlds: 2\nrel 0: (1,2)\nrel 1: (2,2)").relation_count() == 2);
}

TEST_CASE("frame_parse round-trips frame_print") {
  std::mt19937_64 rng(20240812);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Frame frame = testgen::random_frame(rng, n);
    CHECK(frame_parse(frame_print(frame)) == frame);
  }
}

TEST_CASE("frame_parse reports positions on malformed input") {
  const auto check_fails = [](std::string_view text, int line, int column) {
    try {
      frame_parse(text);
      FAIL("expected ParseError for: ", text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.column == column);
    }
  };

  check_fails("", 1, 1);                                   // no header
  check_fails("rel 0: (1,1)", 1, 1);                       // header missing
  check_fails("worlds: 0", 1, 9);                          // bad world count
  check_fails("worlds: 2 extra", 1, 11);                   // trailing junk
  check_fails("worlds: 2", 1, 1);                          // no relations
  check_fails("worlds: 2\nrel 1: (1,1)", 2, 5);            // wrong rel index
  check_fails("worlds: 2\nrel 0: (1,3)", 2, 8);            // world out of range
  check_fails("worlds: 2\nrel 0: (1,1) (1,1)", 2, 14);     // duplicate edge
  check_fails("worlds: 2\nrel 0: (1 1)", 2, 11);           // missing comma
  check_fails("worlds: 2\nrel 0: 1,1", 2, 8);              // missing paren
  check_fails("worlds: 2\nrel 0: (1,1\nrel 1:", 2, 12);    // unclosed edge
}

TEST_CASE("frame_parse rejects oversized frames") {
  CHECK_THROWS_AS(frame_parse("worlds: 65\nrel 0:"), ParseError);
  // 64 worlds is the ceiling and fine.
  CHECK(frame_parse("worlds: 64\nrel 0: (64,64)").n_worlds() == 64);
}
