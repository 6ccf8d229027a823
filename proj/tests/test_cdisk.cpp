#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "widthlab/cdisk.hpp"
#include "widthlab/dsl.hpp"
#include "widthlab/presets.hpp"

using namespace widthlab;

namespace {

CDiskSchematic preset_schematic(const std::string& name) {
  return parse_schematic(find_preset(name)->text);
}

CDiskSchematic compress_s(int base_alpha, int base_beta, Side inside,
                          std::vector<SchematicEvent> events) {
  CDiskSchematic s;
  s.disk = DiskKind::compress;
  s.base_alpha = base_alpha;
  s.base_beta = base_beta;
  s.inside = inside;
  s.events = std::move(events);
  return s;
}

CDiskSchematic cut_s(int base_alpha, int base_beta, Side inside,
                     std::vector<SchematicEvent> events) {
  CDiskSchematic s = compress_s(base_alpha, base_beta, inside,
                                std::move(events));
  s.disk = DiskKind::cut;
  return s;
}

// Level widths per region between consecutive critical events, P first.
std::vector<int> critical_level_widths(const CDiskSchematic& s) {
  const SchematicProfile profile = schematic_profile(s);
  std::vector<int> crit;
  for (int i = 0; i < s.size(); ++i)
    if (s.events[i].kind != SchematicEventKind::transfer) crit.push_back(i + 1);
  std::vector<int> widths{profile.total(0)};
  for (size_t k = 0; k + 1 < crit.size(); ++k)
    widths.push_back(profile.total(crit[k]));
  return widths;
}

const Side A = Side::alpha;
const Side B = Side::beta;

}  // namespace

TEST_CASE("validate_schematic accepts a small compressing disk") {
  CHECK(validate_schematic(compress_s(2, 2, B, {smin(B), smax(B)})).ok());
}

TEST_CASE("a cut schematic with two transfers is rejected") {
  const auto s =
      cut_s(1, 1, A, {smin(B), transfer(), transfer(), smax(A, true)});
  const auto report = validate_schematic(s);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().message.find("one transfer") !=
        std::string::npos);
}

TEST_CASE("negative running counts name the event") {
  const auto s = compress_s(0, 0, B, {smax(B), smin(B)});
  const auto report = validate_schematic(s);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().event == 1);
}

TEST_CASE("open boundary counts at the top are tangles, not errors") {
  CHECK(validate_schematic(compress_s(2, 0, B, {smin(A)})).ok());
}

TEST_CASE("tau flag imbalance is a warning, not an error") {
  // two flagged maxima with no flagged minimum between them
  const auto s = cut_s(1, 1, A,
                       {smin(B), transfer(), smin(A), smax(A, true),
                        smax(A, true), smax(B)});
  const auto report = validate_schematic(s);
  CHECK(report.ok());
  CHECK_FALSE(report.warnings.empty());
}

TEST_CASE("alternating levels of a two-region compressing disk") {
  const auto s =
      compress_s(0, 0, A, {smin(B), smax(B), smin(A), smax(A)});
  const auto levels = alternating_levels(s);
  CHECK(levels.n() == 2);
  CHECK(levels.r == 2);  // compress: r = n
  CHECK(levels.level(2).gap == 0);
  CHECK(levels.level(1).gap == 2);
  CHECK(levels.level(0).gap == 4);
}

TEST_CASE("a single-sided schematic has only P and the top level") {
  const auto s = compress_s(0, 0, A, {smin(A), smax(A)});
  const auto levels = alternating_levels(s);
  CHECK(levels.n() == 1);
  CHECK(levels.level(1).gap == 0);
  CHECK(levels.level(0).gap == 2);
}

TEST_CASE("the transfer's level is r") {
  const auto s = cut_s(1, 3, A,
                       {smin(B), smax(B), transfer(), smin(A), smax(A),
                        smax(A, true), smin(B), smax(B), smax(B)});
  REQUIRE(validate_schematic(s).ok());
  const auto levels = alternating_levels(s);
  CHECK(levels.n() == 2);
  CHECK(levels.r == 1);
}

TEST_CASE("unnormalized cut schematics are rejected by level analysis") {
  const auto s = cut_s(1, 1, A,
                       {smin(B), transfer(), smax(B), smin(A),
                        smax(A, true), smax(A)});
  REQUIRE(validate_schematic(s).ok());
  CHECK_THROWS_AS(alternating_levels(s), SchematicError);
}

TEST_CASE("normalize_tau relocates the transfer to the qualifying gap") {
  const auto s = cut_s(1, 1, A,
                       {smin(B), transfer(), smin(B), smax(B), smax(B),
                        smin(A), smax(A, true), smax(A)});
  REQUIRE(validate_schematic(s).ok());
  CHECK_FALSE(tau_normalized(s));
  const CDiskSchematic normalized = normalize_tau(s);
  CHECK(tau_normalized(normalized));
  CHECK(normalized.events[4] == transfer());
  CHECK(critical_level_widths(normalized) == critical_level_widths(s));
  CHECK(normalize_tau(normalized) == normalized);  // idempotent
}

TEST_CASE("normalize_tau refuses compressing disks") {
  CHECK_THROWS_AS(normalize_tau(compress_s(0, 0, B, {smin(B), smax(B)})),
                  SchematicError);
}

TEST_CASE("normalize_tau reports degenerate schematics") {
  // no beta-below/alpha-above adjacency exists anywhere
  const auto s =
      cut_s(1, 1, A, {transfer(), smax(A, true), smin(B), smax(B)});
  REQUIRE(validate_schematic(s).ok());
  CHECK_FALSE(tau_normalized(s));
  CHECK_THROWS_AS(normalize_tau(s), SchematicError);
}

TEST_CASE("normalize_first_tau_max moves the flag to the box top") {
  const auto s = cut_s(1, 1, A,
                       {smin(B), transfer(), smin(A), smax(A, true),
                        smax(A), smax(B)});
  const CDiskSchematic normalized = normalize_first_tau_max(s);
  CHECK(normalized == preset_schematic("cdisk-fact4-case"));
  CHECK(critical_level_widths(normalized) == critical_level_widths(s));
  CHECK(normalize_first_tau_max(normalized) == normalized);
}

TEST_CASE("normalize_first_tau_max is a no-op without a flagged maximum") {
  const auto s = compress_s(0, 0, B, {smin(B), smax(B)});
  CHECK(normalize_first_tau_max(s) == s);
}

TEST_CASE("region counts identify the single active side") {
  const auto s =
      compress_s(0, 0, A, {smin(B), smax(B), smin(A), smax(A)});
  const auto regions = region_counts(s);
  REQUIRE(regions.size() == 2);
  CHECK(regions[0].index == 1);
  CHECK(regions[0].side == A);
  CHECK(regions[0].maxima == 1);
  CHECK(regions[0].minima == 1);
  CHECK(regions[1].side == B);
  CHECK(regions[1].maxima == 1);
  CHECK(regions[1].minima == 1);
}

TEST_CASE("region counts on the clean preset") {
  const auto regions = region_counts(preset_schematic("cdisk-clean"));
  REQUIRE(regions.size() == 2);
  for (const auto& rc : regions) {
    CHECK(rc.maxima == 2);
    CHECK(rc.minima == 1);
  }
}

TEST_CASE("region sums telescope to the top width") {
  for (const char* name :
       {"cdisk-clean", "cdisk-fact1-violation", "cdisk-fact4-case"}) {
    const auto s = preset_schematic(name);
    const auto levels = alternating_levels(s);
    const auto regions = region_counts(s);
    int sum = 0;
    for (const auto& rc : regions) sum += rc.minima - rc.maxima;
    CHECK(2 * sum ==
          levels.level(0).width - levels.level(levels.n()).width);
  }
}

TEST_CASE("piping an empty block is the identity") {
  const auto s = preset_schematic("cdisk-fact4-case");
  const PipeResult result = pipe(s, 2, 1, 0);
  CHECK(result.schematic == s);
  CHECK(result.trace.total_delta == 0);
  CHECK(result.trace.steps.empty());
}

TEST_CASE("piping a balanced block past a balanced region is free") {
  const auto s = cut_s(1, 1, A,
                       {smin(A), smax(A), smin(B), smax(B), transfer(),
                        smax(A, true)});
  REQUIRE(validate_schematic(s).ok());
  const PipeResult result = pipe(s, 3, 4, 0);
  CHECK(result.trace.total_delta == 0);
  CHECK(validate_schematic(result.schematic).ok());
}

TEST_CASE("piping an unbalanced block recomputes to the pairwise sum") {
  const auto s = cut_s(1, 3, A,
                       {smin(A), smin(A), smax(A), smin(B), smax(B),
                        smax(B), transfer(), smax(A, true), smax(A)});
  REQUIRE(validate_schematic(s).ok());
  const PipeResult result = pipe(s, 4, 6, 0);
  CHECK(result.trace.total_delta == -12);
  REQUIRE(result.trace.steps.size() == 1);
  CHECK(result.trace.steps[0].predicted == -12);
  CHECK(result.trace.steps[0].recomputed == -12);
  CHECK(validate_schematic(result.schematic).ok());
}

TEST_CASE("piping above R is refused") {
  const auto s = cut_s(1, 1, A,
                       {smin(B), transfer(), smin(A), smax(A, true),
                        smax(A), smax(B)});
  // R sits directly above the box top (event 5); gap 6 is above it.
  CHECK_THROWS_AS(pipe(s, 1, 1, 6), SchematicError);
}

TEST_CASE("pipe refuses blocks that are not all beta or not below the transfer") {
  const auto s = preset_schematic("cdisk-fact4-case");
  CHECK_THROWS_AS(pipe(s, 3, 3, 0), SchematicError);  // alpha event
  CHECK_THROWS_AS(pipe(s, 6, 6, 0), SchematicError);  // above the transfer
}

TEST_CASE("fact 1 predicts the push-down delta exactly") {
  const auto s = preset_schematic("cdisk-fact1-violation");
  const FactReport report = fact_delta(s, 1, 1);
  CHECK(report.upper_maxima == 2);
  CHECK(report.upper_minima == 1);
  CHECK(report.lower_maxima == 1);
  CHECK(report.lower_minima == 1);
  CHECK(report.predicted_delta == -4);
  CHECK(report.recomputed_delta == -4);
  CHECK(report.move.total_delta == -4);
}

TEST_CASE("fact 1 vanishes on balanced regions") {
  const auto s =
      compress_s(0, 0, B, {smin(A), smax(A), smin(B), smax(B)});
  const FactReport report = fact_delta(s, 1, 1);
  CHECK(report.predicted_delta == 0);
  CHECK(report.recomputed_delta == 0);
}

TEST_CASE("fact 2 requires a region away from r") {
  const auto s = preset_schematic("cdisk-fact4-case");
  CHECK_THROWS_AS(fact_delta(s, 2, 1), SchematicError);  // region 1 is r
}

TEST_CASE("moves never create or destroy events") {
  auto multiset = [](const CDiskSchematic& s) {
    auto events = s.events;
    std::sort(events.begin(), events.end(),
              [](const SchematicEvent& x, const SchematicEvent& y) {
                if (x.kind != y.kind) return x.kind < y.kind;
                if (x.side != y.side) return x.side < y.side;
                return x.on_tau < y.on_tau;
              });
    return events;
  };
  for (const char* name : {"cdisk-fact1-violation", "cdisk-fact4-case"}) {
    const auto s = preset_schematic(name);
    const auto scan = thinness_certificate(s);
    REQUIRE(scan.certificate.has_value());
    const auto replayed = replay(s, scan.certificate->trace);
    CHECK(multiset(replayed) == multiset(s));
    CHECK(replayed.size() == s.size());
  }
}

TEST_CASE("fact 4 on the constructed fixture") {
  const auto s = preset_schematic("cdisk-fact4-case");
  const FactReport report = fact_delta(s, 4, 1);
  CHECK(report.lower_maxima == 0);
  CHECK(report.lower_minima == 1);
  CHECK(report.upper_maxima == 2);
  CHECK(report.upper_minima == 1);
  CHECK(report.minima_below_r == 1);
  CHECK(report.minima_above_r == 0);
  CHECK(report.maxima_below_r == 2);
  CHECK(report.maxima_above_r == 0);
  CHECK(report.predicted_delta == -4);
  CHECK(report.recomputed_delta == -4);
  REQUIRE(report.move.steps.size() == 2);
  CHECK(report.move.steps[0].recomputed == -4);
  CHECK(report.move.steps[1].recomputed == 0);
}

TEST_CASE("fact 3 applies when the strand maximum sits above region r") {
  const auto s = cut_s(1, 3, A,
                       {smin(B), smax(B), transfer(), smin(A), smax(A),
                        smin(B), smax(B), smax(B), smin(A),
                        smax(A, true), smax(A)});
  REQUIRE(validate_schematic(s).ok());
  const auto levels = alternating_levels(s);
  CHECK(levels.n() == 4);
  CHECK(levels.r == 3);
  const FactReport report = fact_delta(s, 3, 3);
  // block (1 max, 1 min) rises past (1 max, 1 min): balanced
  CHECK(report.predicted_delta == 0);
  CHECK(report.recomputed_delta == 0);
}

TEST_CASE("check_theorem accepts the clean preset") {
  const TheoremReport report =
      check_theorem(preset_schematic("cdisk-clean"));
  CHECK(report.case_label == "3a");
  CHECK(report.n == 2);
  CHECK(report.r == 2);
  CHECK(report.conclusion1_holds);
  CHECK(report.pattern_holds);
  CHECK(report.holds);
}

TEST_CASE("check_theorem accepts the all-strict three-region pattern") {
  const auto s = compress_s(2, 4, B,
                            {smin(B), smax(B), smax(B), smin(A), smax(A),
                             smax(A), smin(B), smax(B), smax(B)});
  const TheoremReport report = check_theorem(s);
  CHECK(report.n == 3);
  CHECK(report.r == 3);
  CHECK(report.conclusion1_holds);
  CHECK(report.holds);
}

TEST_CASE("check_theorem reports conclusion-1 violations") {
  const TheoremReport report =
      check_theorem(preset_schematic("cdisk-fact1-violation"));
  CHECK_FALSE(report.conclusion1_holds);
  CHECK(report.conclusion1_violations == std::vector<int>{2});
  CHECK_FALSE(report.holds);
}

TEST_CASE("check_theorem refuses non-thin alternating levels") {
  CHECK_THROWS_AS(check_theorem(preset_schematic("cdisk-fact4-case")),
                  SchematicError);
}

TEST_CASE("case 4a holds with a balanced region beyond r") {
  const auto s = cut_s(1, 3, A,
                       {smin(B), smax(B), transfer(), smin(A), smax(A),
                        smax(A, true), smin(B), smax(B), smax(B)});
  REQUIRE(validate_schematic(s).ok());
  const TheoremReport report = check_theorem(s);
  CHECK(report.case_label == "4a");
  CHECK(report.r == 1);
  CHECK(report.conclusion1_holds);
  CHECK(report.pattern_holds);
  CHECK(report.holds);
}

TEST_CASE("strictness beyond r must propagate upward in index") {
  // regions from the top: 1 = r (alpha 2,1), 2 (beta 2,1) strict,
  // 3 (alpha 1,1) equal, 4 (beta 2,1). The strict step at region 2 forces
  // strictness at every deeper region, so region 3 is a violation.
  const auto bad = cut_s(1, 5, A,
                         {smin(B), smax(B), smax(B), smin(A), smax(A),
                          smin(B), smax(B), smax(B), transfer(), smin(A),
                          smax(A), smax(A, true)});
  REQUIRE(validate_schematic(bad).ok());
  const TheoremReport report = check_theorem(bad);
  CHECK(report.case_label == "4a");
  CHECK(report.r == 1);
  CHECK(report.n == 4);
  CHECK_FALSE(report.pattern_holds);
  CHECK(report.pattern_violations == std::vector<int>{3});
}

TEST_CASE("check_width_chain on the clean preset") {
  const ChainReport report =
      check_width_chain(preset_schematic("cdisk-clean"));
  CHECK(report.widths == std::vector<int>{2, 4, 6});
  CHECK(report.holds);
  CHECK(report.telescoping_ok);
}

TEST_CASE("equal widths before r violate the chain") {
  const ChainReport report =
      check_width_chain(preset_schematic("cdisk-fact1-violation"));
  CHECK(report.widths == std::vector<int>{0, 2, 2});
  CHECK_FALSE(report.holds);
  CHECK(report.telescoping_ok);
}

TEST_CASE("certificates replay to a narrower schematic") {
  const auto s = preset_schematic("cdisk-fact1-violation");
  const CertificateScan scan = thinness_certificate(s);
  REQUIRE(scan.certificate.has_value());
  CHECK(scan.certificate->fact_id == 1);
  CHECK(scan.certificate->region == 1);
  CHECK(scan.certificate->trace.total_delta == -4);
  const CDiskSchematic replayed = replay(s, scan.certificate->trace);
  CHECK(validate_schematic(replayed).ok());
  CHECK(relative_width(replayed) == relative_width(s) - 4);
}

TEST_CASE("the clean preset has no certificate") {
  const CertificateScan scan =
      thinness_certificate(preset_schematic("cdisk-clean"));
  CHECK_FALSE(scan.certificate.has_value());
  CHECK_FALSE(scan.possibly_fake_cut_disk);
}

TEST_CASE("the fact-4 preset certifies and flags a possible fake cut-disk") {
  const auto s = preset_schematic("cdisk-fact4-case");
  const CertificateScan scan = thinness_certificate(s);
  REQUIRE(scan.certificate.has_value());
  CHECK(scan.certificate->fact_id == 4);
  CHECK(scan.certificate->trace.total_delta == -4);
  CHECK(scan.possibly_fake_cut_disk);
  const CDiskSchematic replayed = replay(s, scan.certificate->trace);
  CHECK(validate_schematic(replayed).ok());
  CHECK(relative_width(replayed) == relative_width(s) - 4);
}

TEST_CASE("to_schematic projects the trefoil plat") {
  const MorseWord trefoil = parse_word(find_preset("trefoil-plat")->text);
  SchematicLabeling labeling;
  labeling.disk = DiskKind::compress;
  labeling.inside = A;
  labeling.base_alpha = 0;
  labeling.sides = {A, A, A, A};
  const CDiskSchematic s = to_schematic(trefoil, labeling, 0);
  CHECK(s.events ==
        std::vector<SchematicEvent>{smin(A), smin(A), smax(A), smax(A)});
  // level widths match the word's strand profile above P; the word's
  // critical events sit at 1, 2, 6, 7
  const SchematicProfile profile = schematic_profile(s);
  const std::vector<int> strands = strand_profile(trefoil);
  CHECK(profile.total(0) == strands[0]);
  CHECK(profile.total(1) == strands[1]);
  CHECK(profile.total(2) == strands[2]);
  CHECK(profile.total(3) == strands[6]);
  CHECK(profile.total(4) == strands[7]);
}

TEST_CASE("to_schematic rejects a component crossing the disk") {
  const MorseWord word = parse_word(find_preset("unlink-split")->text);
  SchematicLabeling labeling;
  labeling.disk = DiskKind::compress;
  labeling.inside = B;
  labeling.base_alpha = 0;
  labeling.sides = {A, B, B, B};  // one circle labeled on both sides
  CHECK_THROWS_AS(to_schematic(word, labeling, 0), SchematicError);
}

TEST_CASE("to_schematic rejects strand flags spanning two components") {
  const MorseWord word = parse_word(find_preset("unlink-split")->text);
  SchematicLabeling labeling;
  labeling.disk = DiskKind::cut;
  labeling.inside = B;
  labeling.base_alpha = 0;
  labeling.sides = {B, B, B, B};
  labeling.on_tau = {true, false, true, false};
  labeling.transfer_gap = 2;
  CHECK_THROWS_AS(to_schematic(word, labeling, 0), SchematicError);
}
