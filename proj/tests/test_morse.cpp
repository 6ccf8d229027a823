#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "widthlab/morse.hpp"

using namespace widthlab;

namespace {

MorseWord link(std::vector<Event> events) {
  return {std::move(events), 0, 0};
}

MorseWord tangle(std::vector<Event> events, int bottom, int top) {
  return {std::move(events), bottom, top};
}

const MorseWord kTrefoil = link(
    {cup(0), cup(2), cross_pos(1), cross_pos(1), cross_pos(1), cap(1), cap(0)});
const MorseWord kStacked =
    link({cup(0), cup(2), cap(1), cup(1), cap(1), cap(0)});

}  // namespace

TEST_CASE("validate accepts the minimal unknot") {
  CHECK(validate(link({cup(0), cap(0)})).ok());
}

TEST_CASE("validate rejects a cap with too few strands") {
  const auto report = validate(link({cap(0)}));
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().event == 1);
  CHECK(report.violations.front().message.find("cap needs") !=
        std::string::npos);
}

TEST_CASE("validate accepts the trefoil plat") {
  CHECK(validate(kTrefoil).ok());
}

TEST_CASE("validate catches position overflow and top mismatch") {
  CHECK_FALSE(validate(link({cup(1)})).ok());
  CHECK_FALSE(validate(link({cup(0), cross_pos(1), cap(0)})).ok());
  CHECK_FALSE(validate(tangle({cup(0)}, 0, 0)).ok());
  CHECK(validate(tangle({cup(0)}, 0, 2)).ok());
}

TEST_CASE("validate warns on split presentations") {
  const auto report = validate(link({cup(0), cap(0), cup(0), cap(0)}));
  CHECK(report.ok());
  REQUIRE(report.warnings.size() == 1);
  CHECK(report.warnings.front().event == 2);
}

TEST_CASE("strand profile follows the event rules") {
  CHECK(strand_profile(link({cup(0), cap(0)})) == std::vector<int>{0, 2, 0});
  CHECK(strand_profile(kTrefoil) ==
        std::vector<int>{0, 2, 4, 4, 4, 4, 2, 0});
  CHECK(strand_profile(tangle({}, 3, 3)) == std::vector<int>{3});
}

TEST_CASE("width sums the gaps between critical events") {
  CHECK(width(link({cup(0), cap(0)})) == 2);
  CHECK(width(kTrefoil) == 8);
  CHECK(width(kStacked) == 14);
}

TEST_CASE("width of a tangle ignores the boundary regions") {
  CHECK(width(tangle({}, 3, 3)) == 0);
  CHECK(width(tangle({cup(0)}, 0, 2)) == 0);
  CHECK(width(tangle({cup(0), cap(0), cup(0)}, 0, 2)) == 2);
}

TEST_CASE("classify_levels marks thin and thick gaps") {
  const auto levels = classify_levels(kTrefoil);
  REQUIRE(levels.size() == 3);
  CHECK(levels[0].kind == LevelKind::neither);  // between the two cups
  CHECK(levels[1].kind == LevelKind::thick);
  CHECK(levels[1].strand_count == 4);
  CHECK(levels[2].kind == LevelKind::neither);
}

TEST_CASE("classify_levels finds the interior thin level") {
  const auto levels = classify_levels(kStacked);
  REQUIRE(levels.size() == 5);
  CHECK(levels[2].kind == LevelKind::thin);
  CHECK(levels[2].strand_count == 2);
  CHECK(levels[2].below_event == 3);
  CHECK(levels[2].above_event == 4);
}

TEST_CASE("tangle boundary levels are thin only at qualifying ends") {
  const auto levels = classify_levels(tangle({cup(0)}, 0, 2));
  REQUIRE(levels.size() == 2);
  // lowest critical point is a minimum: bottom qualifies, top does not
  CHECK(levels.front().kind == LevelKind::boundary_thin);
  CHECK(levels.back().kind == LevelKind::neither);
}

TEST_CASE("components separates the unlink and joins the trefoil") {
  CHECK(components(kTrefoil).count == 1);
  CHECK(components(link({cup(0), cup(2), cap(0), cap(0)})).count == 2);
  CHECK(components(link({cup(0), cup(1), cap(1), cap(0)})).count == 2);
}

TEST_CASE("crossings do not merge components") {
  // two circles crossing twice (a clasp-like shadow)
  const auto word =
      link({cup(0), cup(2), cross_pos(1), cross_pos(1), cap(2), cap(0)});
  CHECK(validate(word).ok());
  CHECK(components(word).count == 2);
}

TEST_CASE("braid boxes of the stacked fixture split at the thin level") {
  const auto report = braid_boxes(kStacked);
  CHECK(report.proper_certified);
  CHECK(report.unboxed.empty());
  REQUIRE(report.boxes.size() == 2);
  CHECK(report.boxes[0].events == std::vector<int>{1, 2, 3});
  CHECK(report.boxes[0].minima == 2);
  CHECK(report.boxes[0].maxima == 1);
  CHECK(report.boxes[1].events == std::vector<int>{4, 5, 6});
  CHECK(report.boxes[1].minima == 1);
  CHECK(report.boxes[1].maxima == 2);
}

TEST_CASE("the trefoil plat is one braid box") {
  const auto report = braid_boxes(kTrefoil);
  REQUIRE(report.boxes.size() == 1);
  CHECK(report.boxes[0].events == std::vector<int>{1, 2, 6, 7});
  CHECK(report.boxes[0].minima == 2);
  CHECK(report.boxes[0].maxima == 2);
}

TEST_CASE("a lowest cap belongs to no box and properness is flagged") {
  const auto report = braid_boxes(tangle({cap(0), cup(0)}, 2, 2));
  CHECK_FALSE(report.proper_certified);
  CHECK(report.boxes.empty());
  CHECK(report.unboxed == std::vector<int>{1, 2});
}

TEST_CASE("braid boxes restricted to one component") {
  const auto word = link({cup(0), cup(2), cap(0), cap(0)});
  const auto comp = components(word);
  REQUIRE(comp.count == 2);
  const auto report = braid_boxes(word, {comp.event_components[0].first});
  REQUIRE(report.boxes.size() == 1);
  CHECK(report.boxes[0].events == std::vector<int>{1, 3});
  CHECK(report.boxes[0].lower_gap == 0);
  CHECK(report.boxes[0].upper_gap == 3);
}

TEST_CASE("every link word has width at least two") {
  // exhaustive over small words: width 2 happens only for the one-cup,
  // one-cap unknot shape
  std::function<void(MorseWord&, int, int)> rec = [&](MorseWord& word,
                                                      int depth, int strands) {
    if (strands == 0 && !word.events.empty()) {
      const int w = width(word);
      CHECK(w >= 2);
      if (w == 2) {
        int cups = 0, caps = 0;
        for (const Event& e : word.events) {
          if (e.kind == EventKind::cup) ++cups;
          if (e.kind == EventKind::cap) ++caps;
        }
        CHECK(cups == 1);
        CHECK(caps == 1);
      }
    }
    if (depth == 6) return;
    auto push = [&](Event e, int next) {
      word.events.push_back(e);
      rec(word, depth + 1, next);
      word.events.pop_back();
    };
    for (int p = 0; p <= strands; ++p) push(cup(p), strands + 2);
    for (int p = 0; p + 2 <= strands; ++p) {
      push(cap(p), strands - 2);
      push(cross_pos(p), strands);
    }
  };
  MorseWord word;
  rec(word, 0, 0);
}

TEST_CASE("profile within a box rises through cups and falls through caps") {
  const auto report = braid_boxes(kStacked);
  const auto profile = strand_profile(kStacked);
  for (const auto& box : report.boxes) {
    bool falling = false;
    for (size_t j = 0; j + 1 < box.events.size(); ++j) {
      const int step = profile[box.events[j + 1] - 1 + 1] -
                       profile[box.events[j] - 1 + 1];
      if (step < 0) falling = true;
      if (falling) CHECK(step <= 0);
    }
  }
}
