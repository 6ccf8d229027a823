#include "widthlab/cdisk.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace widthlab {

namespace {

const char* side_name(Side s) { return s == Side::alpha ? "alpha" : "beta"; }

std::string describe(const ValidationReport& report) {
  std::ostringstream os;
  os << "invalid schematic:";
  for (const auto& v : report.violations) {
    os << " [";
    if (v.event > 0) os << "event " << v.event << ": ";
    os << v.message << "]";
  }
  return os.str();
}

bool is_schematic_critical(const SchematicEvent& e) {
  return e.kind != SchematicEventKind::transfer;
}

// 1-based indices of critical (min/max) events.
std::vector<int> critical_indices(const CDiskSchematic& s) {
  std::vector<int> out;
  for (int i = 0; i < s.size(); ++i)
    if (is_schematic_critical(s.events[i])) out.push_back(i + 1);
  return out;
}

std::optional<int> transfer_index(const CDiskSchematic& s) {
  for (int i = 0; i < s.size(); ++i)
    if (s.events[i].kind == SchematicEventKind::transfer) return i + 1;
  return std::nullopt;
}

// Combinatorial stand-in for "the first maximum of tau on the alpha side
// encountered from the disk": the lowest flagged alpha maximum above the
// transfer.
std::optional<int> first_tau_alpha_max(const CDiskSchematic& s) {
  const auto t = transfer_index(s);
  if (!t) return std::nullopt;
  for (int i = *t; i < s.size(); ++i) {
    const SchematicEvent& e = s.events[i];
    if (e.kind == SchematicEventKind::max && e.side == Side::alpha &&
        e.on_tau)
      return i + 1;
  }
  return std::nullopt;
}

// Highest maximum of the alpha braid box containing event f (an alpha max).
// Boxes of the alpha subsequence split at its own thin adjacencies.
int alpha_box_top(const CDiskSchematic& s, int f) {
  std::vector<int> alpha;
  for (int i = 0; i < s.size(); ++i) {
    const SchematicEvent& e = s.events[i];
    if (is_schematic_critical(e) && e.side == Side::alpha)
      alpha.push_back(i + 1);
  }
  const auto kind_of = [&](int idx) { return s.events[idx - 1].kind; };
  // Box bounds within the alpha subsequence around f.
  int pos = static_cast<int>(
      std::find(alpha.begin(), alpha.end(), f) - alpha.begin());
  int lo = pos, hi = pos;
  while (lo > 0 && !(kind_of(alpha[lo - 1]) == SchematicEventKind::max &&
                     kind_of(alpha[lo]) == SchematicEventKind::min))
    --lo;
  while (hi + 1 < static_cast<int>(alpha.size()) &&
         !(kind_of(alpha[hi]) == SchematicEventKind::max &&
           kind_of(alpha[hi + 1]) == SchematicEventKind::min))
    ++hi;
  for (int j = hi; j >= lo; --j)
    if (kind_of(alpha[j]) == SchematicEventKind::max) return alpha[j];
  return f;
}

// Gap of R: the lowest thin-for-alpha level above the first
// connecting-strand maximum, anchored directly above the highest maximum
// of that box. The top gap when no such maximum exists.
int r_level_gap(const CDiskSchematic& s) {
  const auto f = first_tau_alpha_max(s);
  if (!f) return s.size();
  return alpha_box_top(s, *f);
}

int pair_swap_delta(const SchematicEvent& lower, const SchematicEvent& upper) {
  if (lower.kind == SchematicEventKind::min &&
      upper.kind == SchematicEventKind::max)
    return -4;
  if (lower.kind == SchematicEventKind::max &&
      upper.kind == SchematicEventKind::min)
    return 4;
  return 0;
}

// Sum of pairwise exchange deltas for a block relocation.
int move_pairwise_delta(const CDiskSchematic& s, const SchematicMove& mv) {
  int delta = 0;
  if (mv.target_gap <= mv.first - 1) {
    for (int p = mv.target_gap + 1; p <= mv.first - 1; ++p)
      for (int b = mv.first; b <= mv.last; ++b)
        delta += pair_swap_delta(s.events[p - 1], s.events[b - 1]);
  } else {
    for (int p = mv.last + 1; p <= mv.target_gap; ++p)
      for (int b = mv.first; b <= mv.last; ++b)
        delta += pair_swap_delta(s.events[b - 1], s.events[p - 1]);
  }
  return delta;
}

SchematicMoveStep run_step(CDiskSchematic& s, const SchematicMove& mv,
                           std::string note) {
  SchematicMoveStep step;
  step.move = mv;
  step.note = std::move(note);
  step.predicted = move_pairwise_delta(s, mv);
  const int before = relative_width(s);
  s = apply_move(s, mv);
  step.recomputed = relative_width(s) - before;
  return step;
}

}  // namespace

InvalidSchematic::InvalidSchematic(ValidationReport report)
    : std::runtime_error(describe(report)), report_(std::move(report)) {}

ValidationReport validate_schematic(const CDiskSchematic& s) {
  ValidationReport report;
  auto fail = [&](int event, std::string msg) {
    report.violations.push_back({event, std::move(msg)});
  };

  if (s.base_alpha < 0) fail(0, "negative alpha strand count at P");
  if (s.base_beta < 0) fail(0, "negative beta strand count at P");

  int transfers = 0;
  for (int i = 0; i < s.size(); ++i) {
    const SchematicEvent& e = s.events[i];
    if (e.kind == SchematicEventKind::transfer) {
      ++transfers;
      continue;
    }
    if (s.disk == DiskKind::compress && e.on_tau)
      fail(i + 1, "compressing disk has no connecting strand");
  }
  if (s.disk == DiskKind::cut && transfers != 1) {
    fail(0, transfers == 0 ? "cut-disk needs exactly one transfer"
                           : "cut-disk allows only one transfer");
  }
  if (s.disk == DiskKind::compress && transfers != 0)
    fail(0, "compressing disk allows no transfer");
  if (!report.ok()) return report;

  int a = s.base_alpha, b = s.base_beta;
  for (int i = 0; i < s.size(); ++i) {
    const SchematicEvent& e = s.events[i];
    switch (e.kind) {
      case SchematicEventKind::min:
        (e.side == Side::alpha ? a : b) += 2;
        break;
      case SchematicEventKind::max:
        (e.side == Side::alpha ? a : b) -= 2;
        break;
      case SchematicEventKind::transfer:
        --b;
        ++a;
        break;
    }
    if (a < 0 || b < 0) {
      std::ostringstream os;
      os << (a < 0 ? "alpha" : "beta") << " count drops below zero";
      fail(i + 1, os.str());
      return report;
    }
  }
  // Whatever remains at the top exits through S^2 x {1}; a link-style
  // schematic ends at zero on both sides but tangles need not.

  // Flag markings that no single connecting strand could realize.
  if (s.disk == DiskKind::cut) {
    int a_max = 0, a_min = 0, b_max = 0, b_min = 0;
    for (const auto& e : s.events) {
      if (!e.on_tau || !is_schematic_critical(e)) continue;
      if (e.side == Side::alpha)
        (e.kind == SchematicEventKind::max ? a_max : a_min)++;
      else
        (e.kind == SchematicEventKind::max ? b_max : b_min)++;
    }
    if (a_max != a_min && a_max != a_min + 1)
      report.warnings.push_back(
          {0, "connecting-strand flags on alpha do not alternate"});
    if (b_min != b_max && b_min != b_max + 1)
      report.warnings.push_back(
          {0, "connecting-strand flags on beta do not alternate"});
  }
  return report;
}

void require_valid(const CDiskSchematic& s) {
  ValidationReport report = validate_schematic(s);
  if (!report.ok()) throw InvalidSchematic(std::move(report));
}

SchematicProfile schematic_profile(const CDiskSchematic& s) {
  require_valid(s);
  SchematicProfile profile;
  profile.counts.reserve(s.size() + 1);
  int a = s.base_alpha, b = s.base_beta;
  profile.counts.emplace_back(a, b);
  for (const auto& e : s.events) {
    switch (e.kind) {
      case SchematicEventKind::min:
        (e.side == Side::alpha ? a : b) += 2;
        break;
      case SchematicEventKind::max:
        (e.side == Side::alpha ? a : b) -= 2;
        break;
      case SchematicEventKind::transfer:
        --b;
        ++a;
        break;
    }
    profile.counts.emplace_back(a, b);
  }
  return profile;
}

int relative_width(const CDiskSchematic& s) {
  const SchematicProfile profile = schematic_profile(s);
  const std::vector<int> crit = critical_indices(s);
  int total = profile.total(0);
  for (size_t k = 0; k + 1 < crit.size(); ++k) total += profile.total(crit[k]);
  return total;
}

bool tau_normalized(const CDiskSchematic& s) {
  const auto t = transfer_index(s);
  if (!t) return false;
  std::optional<int> below, above;
  for (int i = *t - 1; i >= 1; --i)
    if (is_schematic_critical(s.events[i - 1])) {
      below = i;
      break;
    }
  for (int i = *t + 1; i <= s.size(); ++i)
    if (is_schematic_critical(s.events[i - 1])) {
      above = i;
      break;
    }
  return below && above && s.events[*below - 1].side == Side::beta &&
         s.events[*above - 1].side == Side::alpha;
}

CDiskSchematic normalize_tau(const CDiskSchematic& s) {
  require_valid(s);
  if (s.disk != DiskKind::cut)
    throw SchematicError(SchematicError::Code::precondition,
                         "no connecting strand to normalize");
  if (tau_normalized(s)) return s;

  const int t = *transfer_index(s);
  std::vector<SchematicEvent> reduced;
  reduced.reserve(s.size() - 1);
  for (int i = 1; i <= s.size(); ++i)
    if (i != t) reduced.push_back(s.events[i - 1]);
  const int m = static_cast<int>(reduced.size());

  // The transfer may slide between the connecting strand's own adjacent
  // critical points: the nearest flagged beta minimum below and the first
  // flagged alpha maximum above.
  int lo = 0, hi = m;
  for (int i = t - 1; i >= 1; --i) {
    const SchematicEvent& e = s.events[i - 1];
    if (e.on_tau && e.side == Side::beta &&
        e.kind == SchematicEventKind::min) {
      lo = i;  // same index in the reduced list (i < t)
      break;
    }
  }
  for (int i = t + 1; i <= s.size(); ++i) {
    const SchematicEvent& e = s.events[i - 1];
    if (e.on_tau && e.side == Side::alpha &&
        e.kind == SchematicEventKind::max) {
      hi = i - 2;  // gap directly below it in the reduced list
      break;
    }
  }

  for (int g = lo; g <= hi; ++g) {
    if (g < 1 || g >= m) continue;
    if (reduced[g - 1].side != Side::beta ||
        reduced[g].side != Side::alpha)
      continue;
    CDiskSchematic candidate = s;
    candidate.events = reduced;
    candidate.events.insert(candidate.events.begin() + g, transfer());
    if (validate_schematic(candidate).ok()) return candidate;
  }
  throw SchematicError(
      SchematicError::Code::no_qualifying_gap,
      "no qualifying gap for the transfer (degenerate schematic)");
}

CDiskSchematic normalize_first_tau_max(const CDiskSchematic& s) {
  require_valid(s);
  const auto f = first_tau_alpha_max(s);
  if (!f) return s;
  const int h = alpha_box_top(s, *f);
  if (h == *f) return s;
  CDiskSchematic out = s;
  std::swap(out.events[*f - 1].on_tau, out.events[h - 1].on_tau);
  return out;
}

AlternatingLevels alternating_levels(const CDiskSchematic& s) {
  require_valid(s);
  if (s.disk == DiskKind::cut && !tau_normalized(s))
    throw SchematicError(SchematicError::Code::not_normalized,
                         "transfer is not at its alternating level; "
                         "run normalize_tau first");

  const SchematicProfile profile = schematic_profile(s);
  const std::vector<int> crit = critical_indices(s);

  int inside_top = 0;  // highest critical event on the inside
  for (int c : crit)
    if (s.events[c - 1].side == s.inside) inside_top = c;

  // Levels bottom-to-top: P, interior side-change gaps below S_0, S_0.
  std::vector<int> gaps{0};
  for (size_t k = 0; k + 1 < crit.size(); ++k) {
    if (crit[k] >= inside_top) break;
    if (s.events[crit[k] - 1].side != s.events[crit[k + 1] - 1].side)
      gaps.push_back(crit[k]);
  }
  if (inside_top > 0) gaps.push_back(inside_top);

  AlternatingLevels out;
  const int n = static_cast<int>(gaps.size()) - 1;
  out.levels.resize(gaps.size());
  for (int j = 0; j < static_cast<int>(gaps.size()); ++j) {
    AlternatingLevel lv;
    lv.gap = gaps[j];
    lv.index = n - j;
    lv.width = profile.total(lv.gap);
    for (int c : crit) {
      if (c <= lv.gap) lv.below_event = c;
      if (c > lv.gap && !lv.above_event) lv.above_event = c;
    }
    out.levels[n - j] = lv;
  }

  if (s.disk == DiskKind::cut) {
    const int t = *transfer_index(s);
    int below = 0;
    for (int c : crit)
      if (c < t) below = c;
    out.r = 0;
    bool found = false;
    for (const auto& lv : out.levels)
      if (lv.gap == below) {
        out.r = lv.index;
        found = true;
      }
    if (!found)
      throw SchematicError(SchematicError::Code::not_normalized,
                           "transfer does not cross an alternating level");
  } else {
    out.r = out.n();
  }
  return out;
}

std::vector<RegionCount> region_counts(const CDiskSchematic& s) {
  const AlternatingLevels levels = alternating_levels(s);
  std::vector<RegionCount> regions;
  for (int i = 1; i <= levels.n(); ++i) {
    const int lo = levels.level(i).gap;
    const int hi = levels.level(i - 1).gap;
    RegionCount rc;
    rc.index = i;
    for (int c = lo + 1; c <= hi; ++c) {
      const SchematicEvent& e = s.events[c - 1];
      if (!is_schematic_critical(e)) continue;
      if (rc.first_event == 0) {
        rc.first_event = c;
        rc.side = e.side;
      }
      rc.last_event = c;
      assert(e.side == rc.side);
      (e.kind == SchematicEventKind::max ? rc.maxima : rc.minima)++;
    }
    regions.push_back(rc);
  }
  return regions;
}

CDiskSchematic apply_move(const CDiskSchematic& s, const SchematicMove& mv) {
  if (mv.first < 1 || mv.last > s.size() || mv.first > mv.last)
    throw std::invalid_argument("move block range out of bounds");
  if (mv.target_gap < 0 || mv.target_gap > s.size())
    throw std::invalid_argument("move target gap out of bounds");
  if (mv.target_gap > mv.first - 1 && mv.target_gap < mv.last)
    throw std::invalid_argument("move target gap inside the block");

  CDiskSchematic out = s;
  std::vector<SchematicEvent> block(out.events.begin() + mv.first - 1,
                                    out.events.begin() + mv.last);
  out.events.erase(out.events.begin() + mv.first - 1,
                   out.events.begin() + mv.last);
  const int size = mv.last - mv.first + 1;
  const int at = mv.target_gap <= mv.first - 1 ? mv.target_gap
                                               : mv.target_gap - size;
  out.events.insert(out.events.begin() + at, block.begin(), block.end());
  return out;
}

CDiskSchematic replay(const CDiskSchematic& s, const SchematicTrace& trace) {
  CDiskSchematic out = s;
  for (const auto& step : trace.steps) out = apply_move(out, step.move);
  return out;
}

PipeResult pipe(const CDiskSchematic& s, int first, int last,
                int target_gap) {
  require_valid(s);
  if (s.disk != DiskKind::cut)
    throw SchematicError(SchematicError::Code::precondition,
                         "piping needs a cut-disk schematic");
  PipeResult result{s, {}};
  if (first > last) return result;  // empty block

  if (first < 1 || last > s.size())
    throw SchematicError(SchematicError::Code::precondition,
                         "pipe block range out of bounds");
  for (int i = first; i <= last; ++i) {
    const SchematicEvent& e = s.events[i - 1];
    if (!is_schematic_critical(e) || e.side != Side::beta)
      throw SchematicError(SchematicError::Code::precondition,
                           "pipe block must consist of beta events");
  }
  const int t = *transfer_index(s);
  if (last >= t)
    throw SchematicError(SchematicError::Code::precondition,
                         "pipe block must lie below the transfer");
  if (target_gap > r_level_gap(s))
    throw SchematicError(
        SchematicError::Code::illegal_pipe,
        "piping above the first connecting-strand maximum's thin level");
  if (target_gap < 0 || target_gap > s.size() ||
      (target_gap > first - 1 && target_gap < last))
    throw SchematicError(SchematicError::Code::precondition,
                         "pipe target gap out of range");

  SchematicMove mv{first, last, target_gap};
  auto step = run_step(result.schematic, mv, "pipe along the connecting strand");
  result.trace.total_delta += step.recomputed;
  result.trace.steps.push_back(std::move(step));
  return result;
}

namespace {

struct FactContext {
  AlternatingLevels levels;
  std::vector<RegionCount> regions;
};

const RegionCount& region_at(const FactContext& ctx, int i) {
  return ctx.regions[i - 1];
}

void need(bool condition, const std::string& hypothesis) {
  if (!condition)
    throw SchematicError(SchematicError::Code::precondition,
                         "hypothesis failed: " + hypothesis);
}

}  // namespace

FactReport fact_delta(const CDiskSchematic& s, int fact_id, int region) {
  require_valid(s);
  FactContext ctx{alternating_levels(s), region_counts(s)};
  const int n = ctx.levels.n();
  const int r = ctx.levels.r;
  const int i = region;

  FactReport report;
  report.fact_id = fact_id;
  report.region = i;

  CDiskSchematic work = s;
  const int width_before = relative_width(s);

  switch (fact_id) {
    case 1:
    case 2: {
      const Side active = fact_id == 1 ? Side::beta : Side::alpha;
      need(i >= 1 && i + 1 <= n, "regions i and i+1 exist");
      const RegionCount& upper = region_at(ctx, i);
      const RegionCount& lower = region_at(ctx, i + 1);
      need(upper.side == active,
           std::string("region i is ") + side_name(active) + "-active");
      if (fact_id == 2)
        need(i != r, "i differs from the transfer level r");
      report.upper_maxima = upper.maxima;
      report.upper_minima = upper.minima;
      report.lower_maxima = lower.maxima;
      report.lower_minima = lower.minima;
      report.predicted_delta =
          4 * (upper.minima * lower.maxima - upper.maxima * lower.minima);
      // Land just below the sphere S_{i+1}. Only a beta block can meet a
      // transfer there (region r is alpha-active, so Fact 2's pair never
      // straddles it), and beta material descends past the crossing
      // freely.
      SchematicMove mv{upper.first_event, upper.last_event,
                       ctx.levels.level(i + 1).gap};
      auto step = run_step(work, mv, "push down past the next region");
      report.move.total_delta += step.recomputed;
      report.move.steps.push_back(std::move(step));
      break;
    }
    case 3: {
      need(s.disk == DiskKind::cut, "the disk is a cut-disk");
      need(i == r, "Fact 3 applies at region r");
      need(r != 0, "r differs from 0");
      need(r + 1 <= n, "region r+1 exists");
      const RegionCount& upper = region_at(ctx, r);
      const RegionCount& lower = region_at(ctx, r + 1);
      const auto f = first_tau_alpha_max(s);
      const bool in_r = f && *f > ctx.levels.level(r).gap &&
                        *f <= ctx.levels.level(r - 1).gap;
      need(!in_r,
           "the first connecting-strand maximum lies outside region r");
      report.upper_maxima = upper.maxima;
      report.upper_minima = upper.minima;
      report.lower_maxima = lower.maxima;
      report.lower_minima = lower.minima;
      // The beta block of region r+1 rises past region r.
      report.predicted_delta =
          4 * (lower.maxima * upper.minima - lower.minima * upper.maxima);
      PipeResult piped = pipe(s, lower.first_event, lower.last_event,
                              ctx.levels.level(r - 1).gap);
      work = piped.schematic;
      report.move = std::move(piped.trace);
      break;
    }
    case 4: {
      need(s.disk == DiskKind::cut, "the disk is a cut-disk");
      need(i == r, "Fact 4 applies at region r");
      need(r != 0, "r differs from 0");
      need(r + 1 <= n, "region r+1 exists");
      const RegionCount& upper = region_at(ctx, r);
      const RegionCount& lower = region_at(ctx, r + 1);
      const auto f = first_tau_alpha_max(s);
      need(f && *f > ctx.levels.level(r).gap &&
               *f <= ctx.levels.level(r - 1).gap,
           "the first connecting-strand maximum lies in region r");
      need(alpha_box_top(s, *f) == *f,
           "the first connecting-strand maximum is the highest of its box "
           "(run normalize_first_tau_max)");
      report.upper_maxima = upper.maxima;
      report.upper_minima = upper.minima;
      report.lower_maxima = lower.maxima;
      report.lower_minima = lower.minima;
      for (int c = ctx.levels.level(r).gap + 1;
           c <= ctx.levels.level(r - 1).gap; ++c) {
        const SchematicEvent& e = s.events[c - 1];
        if (!is_schematic_critical(e)) continue;
        const bool below_r = c <= *f;
        if (e.kind == SchematicEventKind::max)
          (below_r ? report.maxima_below_r : report.maxima_above_r)++;
        else
          (below_r ? report.minima_below_r : report.minima_above_r)++;
      }
      report.predicted_delta =
          4 * (lower.maxima * upper.minima + report.minima_above_r -
               lower.minima * (upper.maxima - 1));

      // Step f: pipe the beta block to just below the strand's maximum.
      const int block = lower.last_event - lower.first_event + 1;
      PipeResult piped =
          pipe(s, lower.first_event, lower.last_event, *f - 1);
      work = piped.schematic;
      report.move = std::move(piped.trace);
      // Step g: push the block together with that maximum up to S_{r-1}.
      SchematicMove mv{*f - block, *f, ctx.levels.level(r - 1).gap};
      auto step = run_step(work, mv, "push with the strand maximum to the "
                                     "thin level above");
      report.move.total_delta += step.recomputed;
      report.move.steps.push_back(std::move(step));
      break;
    }
    default:
      throw std::invalid_argument("fact id must be 1..4");
  }

  report.recomputed_delta = relative_width(work) - width_before;
  return report;
}

namespace {

// Every alternating level must be thin: highest critical point below it a
// maximum, lowest above it a minimum. P's critical point below lies under
// the schematic and is thin by hypothesis.
void require_thin_alternating(const CDiskSchematic& s,
                              const AlternatingLevels& levels) {
  for (const auto& lv : levels.levels) {
    const bool below_ok =
        !lv.below_event ||
        s.events[*lv.below_event - 1].kind == SchematicEventKind::max;
    const bool above_ok =
        !lv.above_event ||
        s.events[*lv.above_event - 1].kind == SchematicEventKind::min;
    if (!below_ok || !above_ok) {
      std::ostringstream os;
      os << "alternating level S_" << lv.index << " is not thin";
      throw SchematicError(SchematicError::Code::not_applicable, os.str());
    }
  }
}

}  // namespace

TheoremReport check_theorem(const CDiskSchematic& s) {
  require_valid(s);
  const AlternatingLevels levels = alternating_levels(s);
  require_thin_alternating(s, levels);
  const std::vector<RegionCount> regions = region_counts(s);
  const SchematicProfile profile = schematic_profile(s);

  TheoremReport report;
  report.n = levels.n();
  report.r = levels.r;
  const int n = report.n, r = report.r;

  auto strict = [&](int i) {
    return regions[i - 1].maxima > regions[i - 1].minima;
  };
  auto weak = [&](int i) {
    return regions[i - 1].maxima >= regions[i - 1].minima;
  };

  for (int i = 1; i <= r; ++i)
    if (!strict(i)) report.conclusion1_violations.push_back(i);
  report.conclusion1_holds = report.conclusion1_violations.empty();

  bool tau_max_in_r = false;
  if (s.disk == DiskKind::cut && r >= 1) {
    const auto f = first_tau_alpha_max(s);
    tau_max_in_r = f && *f > levels.level(r).gap &&
                   *f <= levels.level(r - 1).gap;
  }

  if (s.disk == DiskKind::cut && r == 0) {
    report.conclusion2_applicable = n >= 1;
    if (n >= 1) {
      report.conclusion2_holds = weak(1);
      report.conclusion2_equality =
          regions[0].maxima == regions[0].minima;
      const int s1_gap = levels.level(1).gap;
      const int inside_count = s.inside == Side::alpha
                                   ? profile.alpha(s1_gap)
                                   : profile.beta(s1_gap);
      report.decomposing_sphere_proxy =
          report.conclusion2_equality && inside_count == 1;
      report.case_label = strict(1) ? "3b" : "4b";
    } else {
      report.case_label = "3b";
    }
  } else {
    report.case_label = tau_max_in_r ? "4a" : "3a";
  }

  if (report.case_label == "3a" || report.case_label == "3b") {
    for (int i = 1; i <= n; ++i)
      if (!strict(i)) report.pattern_violations.push_back(i);
  } else {
    for (int i = r + 1; i <= n; ++i)
      if (!weak(i)) report.pattern_violations.push_back(i);
    int first_strict = 0;
    for (int j = r + 1; j <= n && first_strict == 0; ++j)
      if (strict(j)) first_strict = j;
    if (first_strict > 0)
      for (int i = first_strict; i <= n; ++i)
        if (!strict(i)) report.pattern_violations.push_back(i);
  }
  std::sort(report.pattern_violations.begin(),
            report.pattern_violations.end());
  report.pattern_violations.erase(
      std::unique(report.pattern_violations.begin(),
                  report.pattern_violations.end()),
      report.pattern_violations.end());
  report.pattern_holds = report.pattern_violations.empty();

  report.holds = report.conclusion1_holds && report.pattern_holds &&
                 (!report.conclusion2_applicable || report.conclusion2_holds);
  return report;
}

ChainReport check_width_chain(const CDiskSchematic& s) {
  require_valid(s);
  const AlternatingLevels levels = alternating_levels(s);
  require_thin_alternating(s, levels);
  const std::vector<RegionCount> regions = region_counts(s);

  ChainReport report;
  report.r = levels.r;
  const int n = levels.n();
  for (int i = 0; i <= n; ++i)
    report.widths.push_back(levels.level(i).width);

  auto fail = [&](const std::string& msg) {
    report.violations.push_back(msg);
  };

  for (int i = 1; i <= levels.r; ++i) {
    if (!(report.widths[i - 1] < report.widths[i])) {
      std::ostringstream os;
      os << "w(S_" << i - 1 << ") = " << report.widths[i - 1]
         << " is not smaller than w(S_" << i << ") = " << report.widths[i];
      fail(os.str());
    }
  }
  for (int i = levels.r + 1; i <= n; ++i) {
    if (report.widths[i - 1] > report.widths[i]) {
      std::ostringstream os;
      os << "w(S_" << i - 1 << ") = " << report.widths[i - 1]
         << " exceeds w(S_" << i << ") = " << report.widths[i];
      fail(os.str());
    }
  }
  int first_strict = 0;
  for (int j = levels.r + 1; j <= n && first_strict == 0; ++j)
    if (report.widths[j - 1] < report.widths[j]) first_strict = j;
  if (first_strict > 0) {
    for (int i = first_strict; i <= n; ++i) {
      if (!(report.widths[i - 1] < report.widths[i])) {
        std::ostringstream os;
        os << "strictness fails to propagate at w(S_" << i - 1
           << ") vs w(S_" << i << ")";
        fail(os.str());
      }
    }
  }
  report.holds = report.violations.empty();

  report.telescoping_ok = true;
  for (int i = 1; i <= n; ++i) {
    const int lhs = report.widths[i - 1] - report.widths[i];
    const int rhs = 2 * (regions[i - 1].minima - regions[i - 1].maxima);
    if (lhs != rhs) report.telescoping_ok = false;
  }
  return report;
}

CertificateScan thinness_certificate(const CDiskSchematic& s) {
  require_valid(s);
  CertificateScan scan;

  if (s.disk == DiskKind::cut) {
    bool tau_beta_critical = false;
    for (const auto& e : s.events)
      if (is_schematic_critical(e) && e.side == Side::beta && e.on_tau)
        tau_beta_critical = true;
    scan.possibly_fake_cut_disk = s.base_beta == 1 && !tau_beta_critical;
  }

  const AlternatingLevels levels = alternating_levels(s);
  const std::vector<RegionCount> regions = region_counts(s);
  const int n = levels.n();
  const int r = levels.r;

  for (int i = 1; i + 1 <= n; ++i) {
    int fact = 0;
    if (regions[i - 1].side == Side::beta) {
      fact = 1;
    } else if (i != r) {
      fact = 2;
    } else {
      const auto f = first_tau_alpha_max(s);
      const bool in_r = f && *f > levels.level(r).gap &&
                        *f <= levels.level(r - 1).gap;
      fact = in_r ? 4 : 3;
    }
    try {
      FactReport report = fact_delta(s, fact, i);
      if (report.recomputed_delta < 0 &&
          validate_schematic(replay(s, report.move)).ok()) {
        scan.certificate =
            Certificate{fact, i, std::move(report.move)};
        return scan;
      }
    } catch (const SchematicError&) {
      // A fact whose remaining hypotheses fail offers no move here.
    }
  }
  return scan;
}

CDiskSchematic to_schematic(const MorseWord& word,
                            const SchematicLabeling& labeling, int p_gap) {
  require_valid(word);
  if (p_gap < 0 || p_gap > word.size())
    throw SchematicError(SchematicError::Code::labeling,
                         "level gap out of range");

  const std::vector<int> profile = strand_profile(word);
  const int at_p = profile[p_gap];
  if (labeling.base_alpha < 0 || labeling.base_alpha > at_p)
    throw SchematicError(SchematicError::Code::labeling,
                         "alpha count at the level exceeds the strands there");

  std::vector<int> crits;  // word event numbers above the level
  for (int i = p_gap + 1; i <= word.size(); ++i)
    if (is_critical(word.events[i - 1].kind)) crits.push_back(i);
  if (labeling.sides.size() != crits.size())
    throw SchematicError(SchematicError::Code::labeling,
                         "one side label per critical event above the level "
                         "is required");
  if (!labeling.on_tau.empty() &&
      labeling.on_tau.size() != crits.size())
    throw SchematicError(SchematicError::Code::labeling,
                         "conn-strand flags must parallel the side labels");

  // Components of the sub-tangle above the level; each one must stay on
  // one side of the disk except the connecting strand's.
  MorseWord upper;
  upper.bottom_strands = at_p;
  upper.top_strands = word.top_strands;
  for (int i = p_gap + 1; i <= word.size(); ++i)
    upper.events.push_back(word.events[i - 1]);
  const Components comp = components(upper);

  std::optional<int> tau_component;
  for (size_t k = 0; k < crits.size(); ++k) {
    if (labeling.on_tau.empty() || !labeling.on_tau[k]) continue;
    const int local = crits[k] - p_gap;  // event number within `upper`
    const int c = comp.event_components[local - 1].first;
    if (tau_component && *tau_component != c) {
      std::ostringstream os;
      os << "event " << crits[k]
         << ": connecting-strand flags span two components";
      throw SchematicError(SchematicError::Code::labeling, os.str());
    }
    tau_component = c;
  }
  {
    std::vector<std::optional<Side>> comp_side(comp.count);
    for (size_t k = 0; k < crits.size(); ++k) {
      const int local = crits[k] - p_gap;
      const int c = comp.event_components[local - 1].first;
      if (tau_component && c == *tau_component) continue;
      if (comp_side[c] && *comp_side[c] != labeling.sides[k]) {
        std::ostringstream os;
        os << "event " << crits[k]
           << ": component crosses the disk without a connecting strand";
        throw SchematicError(SchematicError::Code::labeling, os.str());
      }
      comp_side[c] = labeling.sides[k];
    }
  }

  CDiskSchematic out;
  out.disk = labeling.disk;
  out.inside = labeling.inside;
  out.base_alpha = labeling.base_alpha;
  out.base_beta = at_p - labeling.base_alpha;
  for (size_t k = 0; k < crits.size(); ++k) {
    SchematicEvent e;
    e.kind = word.events[crits[k] - 1].kind == EventKind::cup
                 ? SchematicEventKind::min
                 : SchematicEventKind::max;
    e.side = labeling.sides[k];
    e.on_tau = !labeling.on_tau.empty() && labeling.on_tau[k];
    out.events.push_back(e);
  }
  if (labeling.disk == DiskKind::cut) {
    if (labeling.transfer_gap < p_gap || labeling.transfer_gap > word.size())
      throw SchematicError(SchematicError::Code::labeling,
                           "transfer gap must lie above the level");
    int at = 0;
    for (size_t k = 0; k < crits.size(); ++k)
      if (crits[k] <= labeling.transfer_gap) at = static_cast<int>(k) + 1;
    out.events.insert(out.events.begin() + at, transfer());
  }
  require_valid(out);
  return out;
}

}  // namespace widthlab
