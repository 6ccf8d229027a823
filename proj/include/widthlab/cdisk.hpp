#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "widthlab/morse.hpp"

// Two-sided schematic calculus for a thin level sphere P carrying a
// vertical c-disk. Events above P are tagged by the side of the disk they
// lie on; for a cut-disk a single transfer event marks where the
// connecting strand crosses the disk. Widths are relative: the constant
// contribution below P cancels in every comparison made here.

namespace widthlab {

enum class Side { alpha, beta };
enum class DiskKind { compress, cut };
enum class SchematicEventKind { min, max, transfer };

inline Side other_side(Side s) {
  return s == Side::alpha ? Side::beta : Side::alpha;
}

struct SchematicEvent {
  SchematicEventKind kind = SchematicEventKind::min;
  Side side = Side::alpha;  // ignored for transfer
  bool on_tau = false;      // critical point lies on the connecting strand

  bool operator==(const SchematicEvent& o) const {
    if (kind != o.kind) return false;
    if (kind == SchematicEventKind::transfer) return true;
    return side == o.side && on_tau == o.on_tau;
  }
  bool operator!=(const SchematicEvent& o) const { return !(*this == o); }
};

inline SchematicEvent smin(Side s, bool tau = false) {
  return {SchematicEventKind::min, s, tau};
}
inline SchematicEvent smax(Side s, bool tau = false) {
  return {SchematicEventKind::max, s, tau};
}
inline SchematicEvent transfer() {
  return {SchematicEventKind::transfer, Side::alpha, false};
}

// Event sequence above P, bottom to top. Reading upward a min adds two
// strands on its side, a max removes two, and the transfer moves the
// connecting strand from beta to alpha (it descends from alpha to beta).
// Both sides close to zero at the top.
struct CDiskSchematic {
  DiskKind disk = DiskKind::compress;
  int base_alpha = 0;  // strand counts per side at P
  int base_beta = 0;
  Side inside = Side::beta;
  std::vector<SchematicEvent> events;

  int size() const { return static_cast<int>(events.size()); }

  bool operator==(const CDiskSchematic& o) const {
    return disk == o.disk && base_alpha == o.base_alpha &&
           base_beta == o.base_beta && inside == o.inside &&
           events == o.events;
  }
};

class InvalidSchematic : public std::runtime_error {
 public:
  explicit InvalidSchematic(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

class SchematicError : public std::runtime_error {
 public:
  enum class Code {
    not_normalized,
    no_qualifying_gap,
    precondition,
    illegal_pipe,
    not_applicable,
    labeling,
  };

  SchematicError(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

ValidationReport validate_schematic(const CDiskSchematic& s);
void require_valid(const CDiskSchematic& s);  // throws InvalidSchematic

// Per-side strand counts at every gap; gap g is the level directly above
// event g, so gap 0 sits at P.
struct SchematicProfile {
  std::vector<std::pair<int, int>> counts;  // (alpha, beta) per gap
  int alpha(int gap) const { return counts[gap].first; }
  int beta(int gap) const { return counts[gap].second; }
  int total(int gap) const { return counts[gap].first + counts[gap].second; }
};

SchematicProfile schematic_profile(const CDiskSchematic& s);

// Relative width: the level at P plus one level per gap between
// consecutive critical events. Transfers are not critical points.
int relative_width(const CDiskSchematic& s);

// True when the transfer's nearest critical neighbours are a beta event
// below and an alpha event above.
bool tau_normalized(const CDiskSchematic& s);

// Relocate the transfer into the qualifying gap (beta critical below,
// alpha critical above) within the span allowed by the connecting strand's
// own critical points. A horizontal isotopy: every level width is
// preserved. No-op on already-normalized input.
CDiskSchematic normalize_tau(const CDiskSchematic& s);

// Make the first maximum of the connecting strand on the alpha side the
// highest maximum of its braid box, by max-past-max reordering only
// (realized as a flag transfer, so the profile is untouched). No-op when
// no such maximum exists.
CDiskSchematic normalize_first_tau_max(const CDiskSchematic& s);

struct AlternatingLevel {
  int index = 0;  // i of S_i, counted from the top; S_n = P
  int gap = 0;    // canonical gap: directly above below_event (0 for P)
  std::optional<int> below_event;  // critical event numbers, 1-based
  std::optional<int> above_event;
  int width = 0;
};

struct AlternatingLevels {
  std::vector<AlternatingLevel> levels;  // S_0 first (topmost), S_n = P last
  int r = 0;  // level crossed by the transfer; n for compressing disks
  int n() const { return static_cast<int>(levels.size()) - 1; }
  const AlternatingLevel& level(int i) const { return levels[i]; }
};

AlternatingLevels alternating_levels(const CDiskSchematic& s);

struct RegionCount {
  int index = 0;  // 1..n, from the top: region i lies between S_i and S_{i-1}
  Side side = Side::alpha;  // the single active side
  int maxima = 0;
  int minima = 0;
  int first_event = 0;  // critical event range, 1-based, inclusive
  int last_event = 0;
};

std::vector<RegionCount> region_counts(const CDiskSchematic& s);

// Replayable block relocation: remove events [first..last] and reinsert
// them, order preserved, directly above pre-move event `target_gap`.
struct SchematicMove {
  int first = 0;
  int last = 0;
  int target_gap = 0;
};

CDiskSchematic apply_move(const CDiskSchematic& s, const SchematicMove& move);

struct SchematicMoveStep {
  SchematicMove move;
  std::string note;
  int predicted = 0;   // sum of pairwise exchange deltas
  int recomputed = 0;  // width difference from full profiles
};

struct SchematicTrace {
  std::vector<SchematicMoveStep> steps;
  int total_delta = 0;
};

CDiskSchematic replay(const CDiskSchematic& s, const SchematicTrace& trace);

struct PipeResult {
  CDiskSchematic schematic;
  SchematicTrace trace;
};

// Relocate a block of beta events along the connecting strand. The block
// must lie below the transfer and the target may not exceed the gap of R,
// the lowest thin-for-alpha level above the strand's first maximum.
PipeResult pipe(const CDiskSchematic& s, int first, int last, int target_gap);

struct FactReport {
  int fact_id = 0;
  int region = 0;  // upper region index i of the (i, i+1) pair; r for 3/4
  // counts of the two regions involved: `upper` is region i, `lower` is
  // region i+1 (region indices grow downward)
  int upper_maxima = 0, upper_minima = 0;
  int lower_maxima = 0, lower_minima = 0;
  // Fact 4 split counts around R
  int maxima_below_r = 0, minima_below_r = 0;
  int maxima_above_r = 0, minima_above_r = 0;
  int predicted_delta = 0;
  int recomputed_delta = 0;
  SchematicTrace move;
};

// Construct the cited fact's move for region i, predict its width change
// from the closed-form count formula and recompute it from profiles.
//   Fact 1: push the beta events of region i down past region i+1.
//   Fact 2: same with alpha (requires i != r).
//   Fact 3: pipe the beta events of region r+1 up to S_{r-1} (first
//           connecting-strand maximum not in region r).
//   Fact 4: pipe them to just below that maximum, then push the combined
//           block up to S_{r-1} (maximum in region r).
FactReport fact_delta(const CDiskSchematic& s, int fact_id, int region);

struct TheoremReport {
  std::string case_label;  // "3a", "3b", "4a" or "4b"
  int n = 0;
  int r = 0;
  bool conclusion1_holds = true;
  std::vector<int> conclusion1_violations;  // region indices i <= r
  bool conclusion2_applicable = false;      // r == 0 only
  bool conclusion2_holds = true;
  bool conclusion2_equality = false;
  bool decomposing_sphere_proxy = false;  // single inside strand at S_1
  bool pattern_holds = true;              // the applicable (3)/(4) pattern
  std::vector<int> pattern_violations;
  bool holds = true;
};

// Checks the alternating-sphere inequalities. Requires every alternating
// level to be thin; offending levels raise not_applicable.
TheoremReport check_theorem(const CDiskSchematic& s);

struct ChainReport {
  std::vector<int> widths;  // w(S_0) .. w(S_n)
  int r = 0;
  bool holds = true;
  std::vector<std::string> violations;
  bool telescoping_ok = true;  // w(S_{i-1}) - w(S_i) = 2(m_i - M_i)
};

// Width chain along the alternating levels: strict growth downward until
// S_r, monotone afterwards, with strictness propagating once it appears.
// Each critical point changes the intersection count by two, so the
// telescoping identity carries the factor 2.
ChainReport check_width_chain(const CDiskSchematic& s);

struct Certificate {
  int fact_id = 0;
  int region = 0;
  SchematicTrace trace;  // total_delta < 0
};

struct CertificateScan {
  std::optional<Certificate> certificate;
  bool possibly_fake_cut_disk = false;
};

// Scan the facts for a width-decreasing move; any hit witnesses that no
// presentation with this schematic is in thin position.
CertificateScan thinness_certificate(const CDiskSchematic& s);

// Projection of a Morse word above a chosen level to a schematic,
// discarding planar positions and crossings.
struct SchematicLabeling {
  DiskKind disk = DiskKind::compress;
  Side inside = Side::beta;
  int base_alpha = 0;           // alpha strands at the chosen level
  std::vector<Side> sides;      // one per critical event above the level
  std::vector<bool> on_tau;     // parallel to `sides`; may be empty
  int transfer_gap = -1;        // word gap for the transfer (cut only)
};

CDiskSchematic to_schematic(const MorseWord& word,
                            const SchematicLabeling& labeling, int p_gap);

}  // namespace widthlab
