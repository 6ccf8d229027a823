#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "widthlab/morse.hpp"

// Far-commutation rearrangements of Morse words: single exchanges with
// their exact width deltas, block pushes, local thinness, and exhaustive
// orbit search over the move set.

namespace widthlab {

class IllegalExchange : public std::runtime_error {
 public:
  enum class Reason { out_of_range, overlapping_supports, torn_support };

  IllegalExchange(int site, Reason reason, const std::string& message)
      : std::runtime_error(message), site_(site), reason_(reason) {}

  int site() const { return site_; }
  Reason reason() const { return reason_; }

 private:
  int site_;
  Reason reason_;
};

// Swap events k and k+1 (1-based site; k is the lower event). Legality and
// the transported positions follow from the relabeling each event induces
// on the strand numbering: cup p shifts positions >= p up by two, cap p
// shifts positions >= p+2 down by two and is undefined on {p, p+1}, and
// crossings relabel nothing. The upper event's position is pulled through
// the lower event's inverse relabeling, the lower event's position is
// pushed through the relocated upper event's relabeling, and both images
// must stay contiguous pairs.
MorseWord exchange(const MorseWord& word, int k);

bool exchange_legal(const MorseWord& word, int k);

// Width change of exchange(word, k): -4 when a cup/cap pair swaps (a max
// moves below a min), +4 for cap/cup, 0 otherwise.
int exchange_delta(const MorseWord& word, int k);

struct MoveStep {
  int site = 0;  // exchange site at the time of the step
  Event lower;   // events as they stood before the step
  Event upper;
  int predicted = 0;
  int recomputed = 0;
};

struct MoveTrace {
  std::vector<MoveStep> steps;
  int total_delta = 0;
};

enum class PushDirection { up, down };

struct PushResult {
  MorseWord word;
  MoveTrace trace;
};

// Push the contiguous block [first..last] (1-based, inclusive) past the
// given gap (gap g = level directly above event g), keeping the block's
// internal order. Realized as single exchanges, one bubbled event at a
// time; throws IllegalExchange at the first collision.
PushResult push_block(const MorseWord& word, int first, int last,
                      PushDirection direction, int target_gap);

struct LocalThinness {
  bool thin = true;
  std::vector<int> improving_sites;  // legal sites with delta -4
};

LocalThinness is_locally_thin(const MorseWord& word);

struct OrbitResult {
  int min_width = 0;
  MorseWord witness;
  bool exhausted = false;
  long long states = 0;  // distinct words enumerated
};

// Breadth-first search over all words reachable by legal exchanges,
// deduplicated by canonical serialization. The witness is the
// lexicographically least canonical form among minimum-width states, so
// the result is independent of traversal order.
OrbitResult orbit_min_width(const MorseWord& word, long long budget);

}  // namespace widthlab
