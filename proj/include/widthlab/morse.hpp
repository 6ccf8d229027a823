#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Morse presentations of links and tangles in S^2 x [-1,1]: event words,
// strand profiles, width, thin/thick levels and braid boxes.

namespace widthlab {

enum class EventKind { cup, cap, cross };
enum class Sign { plus, minus };

// One critical or crossing event, read bottom-to-top.
// cup p inserts two strands at positions {p, p+1}; cap p consumes strands
// {p, p+1}; cross p swaps strands {p, p+1}. Only crossings carry a sign.
struct Event {
  EventKind kind = EventKind::cup;
  int position = 0;
  Sign sign = Sign::plus;

  bool operator==(const Event& o) const {
    return kind == o.kind && position == o.position &&
           (kind != EventKind::cross || sign == o.sign);
  }
  bool operator!=(const Event& o) const { return !(*this == o); }
};

inline bool is_critical(EventKind k) { return k != EventKind::cross; }

inline Event cup(int p) { return {EventKind::cup, p, Sign::plus}; }
inline Event cap(int p) { return {EventKind::cap, p, Sign::plus}; }
inline Event cross_pos(int p) { return {EventKind::cross, p, Sign::plus}; }
inline Event cross_neg(int p) { return {EventKind::cross, p, Sign::minus}; }

// Event sequence with declared boundary strand counts. A link has
// bottom_strands == top_strands == 0. Event numbers are 1-based throughout
// the public surface (event 1 is the lowest).
struct MorseWord {
  std::vector<Event> events;
  int bottom_strands = 0;
  int top_strands = 0;

  bool is_link() const { return bottom_strands == 0 && top_strands == 0; }
  int size() const { return static_cast<int>(events.size()); }

  bool operator==(const MorseWord& o) const {
    return events == o.events && bottom_strands == o.bottom_strands &&
           top_strands == o.top_strands;
  }
};

struct Violation {
  int event = 0;  // 1-based; 0 means the word as a whole
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<Violation> warnings;
  bool ok() const { return violations.empty(); }
};

class InvalidWord : public std::runtime_error {
 public:
  explicit InvalidWord(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

ValidationReport validate(const MorseWord& word);
void require_valid(const MorseWord& word);  // throws InvalidWord

// Running strand counts n_0..n_last (n_0 = bottom_strands).
std::vector<int> strand_profile(const MorseWord& word);

// Sum of strand counts over the regular levels strictly between consecutive
// critical events. Crossings are regular for the height function and create
// no summed level.
int width(const MorseWord& word);

enum class LevelKind { thin, thick, neither, boundary_thin };

// A regular level: either the gap between two adjacent critical events or,
// for tangles, one of the boundary spheres S^2 x {-1}, S^2 x {+1}.
struct Level {
  int gap = 0;  // gap index: number of events strictly below the level
  std::optional<int> below_event;  // critical event numbers (1-based)
  std::optional<int> above_event;
  int strand_count = 0;
  LevelKind kind = LevelKind::neither;
};

std::vector<Level> classify_levels(const MorseWord& word);

// Link/tangle components via union-find over strand incidences. Crossings
// swap strands and never merge components.
struct Components {
  int count = 0;
  // per event: the component(s) it touches; cups/caps repeat one id,
  // crossings may name two.
  std::vector<std::pair<int, int>> event_components;
};

Components components(const MorseWord& word);

// Maximal group of critical events of one strand family with all its minima
// below all its maxima, delimited by thin levels of that family.
struct BraidBox {
  std::vector<int> events;  // critical event numbers, bottom-up
  int minima = 0;
  int maxima = 0;
  int lower_gap = 0;  // gap directly below the lowest event of the box
  int upper_gap = 0;  // gap directly above the highest event
};

struct BoxReport {
  std::vector<BraidBox> boxes;  // bottom-up
  std::vector<int> unboxed;     // critical events in no box (improper ends)
  bool proper_certified = false;
};

BoxReport braid_boxes(const MorseWord& word);
BoxReport braid_boxes(const MorseWord& word,
                      const std::vector<int>& component_ids);

}  // namespace widthlab
