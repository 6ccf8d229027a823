#include "widthlab/moves.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>

#include "widthlab/dsl.hpp"

namespace widthlab {

namespace {

// Strand relabeling induced by an event, from the numbering below it to
// the numbering above it. nullopt marks strands the event consumes.
std::optional<int> relabel_up(const Event& e, int q) {
  switch (e.kind) {
    case EventKind::cup:
      return q < e.position ? q : q + 2;
    case EventKind::cap:
      if (q < e.position) return q;
      if (q >= e.position + 2) return q - 2;
      return std::nullopt;
    case EventKind::cross:
      return q;
  }
  return std::nullopt;
}

// Inverse direction: numbering above the event to the numbering below it.
// nullopt marks the strands a cup creates.
std::optional<int> relabel_down(const Event& e, int q) {
  switch (e.kind) {
    case EventKind::cup:
      if (q < e.position) return q;
      if (q >= e.position + 2) return q - 2;
      return std::nullopt;
    case EventKind::cap:
      return q < e.position ? q : q + 2;
    case EventKind::cross:
      return q;
  }
  return std::nullopt;
}

struct ExchangePlan {
  Event new_lower;
  Event new_upper;
  int delta = 0;
};

struct PlanError {
  IllegalExchange::Reason reason;
  std::string message;
};

// Core of the move set: compute the swapped pair or explain why the site
// is blocked. `lower` sits below `upper` in the word.
std::optional<ExchangePlan> plan_pair(const Event& lower, const Event& upper,
                                      PlanError* error) {
  auto fail = [&](IllegalExchange::Reason r, const std::string& m) {
    if (error) *error = {r, m};
    return std::nullopt;
  };

  if (lower.kind == EventKind::cross && upper.kind == EventKind::cross &&
      std::abs(lower.position - upper.position) <= 1) {
    return fail(IllegalExchange::Reason::overlapping_supports,
                "crossings act on overlapping strand pairs");
  }

  // Transport the upper event below the lower one.
  const auto b0 = relabel_down(lower, upper.position);
  const auto b1 = relabel_down(lower, upper.position + 1);
  if (!b0 || !b1) {
    return fail(IllegalExchange::Reason::overlapping_supports,
                "upper event touches the lower event's strands");
  }
  if (*b1 != *b0 + 1) {
    return fail(IllegalExchange::Reason::torn_support,
                "upper event's support is torn by the renumbering");
  }
  Event new_lower = upper;
  new_lower.position = *b0;

  // Transport the lower event above the relocated upper event.
  const auto a0 = relabel_up(new_lower, lower.position);
  const auto a1 = relabel_up(new_lower, lower.position + 1);
  if (!a0 || !a1) {
    return fail(IllegalExchange::Reason::overlapping_supports,
                "lower event touches the upper event's strands");
  }
  if (*a1 != *a0 + 1) {
    return fail(IllegalExchange::Reason::torn_support,
                "lower event's support is torn by the renumbering");
  }
  Event new_upper = lower;
  new_upper.position = *a0;

  ExchangePlan plan{new_lower, new_upper, 0};
  if (lower.kind == EventKind::cup && upper.kind == EventKind::cap)
    plan.delta = -4;
  else if (lower.kind == EventKind::cap && upper.kind == EventKind::cup)
    plan.delta = 4;
  return plan;
}

std::optional<ExchangePlan> plan_site(const MorseWord& word, int k,
                                      PlanError* error) {
  if (k < 1 || k >= word.size()) {
    if (error)
      *error = {IllegalExchange::Reason::out_of_range,
                "exchange site out of range"};
    return std::nullopt;
  }
  return plan_pair(word.events[k - 1], word.events[k], error);
}

MorseWord apply_plan(const MorseWord& word, int k, const ExchangePlan& plan) {
  MorseWord out = word;
  out.events[k - 1] = plan.new_lower;
  out.events[k] = plan.new_upper;
  return out;
}

}  // namespace

MorseWord exchange(const MorseWord& word, int k) {
  require_valid(word);
  PlanError error{IllegalExchange::Reason::out_of_range, ""};
  const auto plan = plan_site(word, k, &error);
  if (!plan) {
    std::ostringstream os;
    os << "illegal exchange at site " << k << ": " << error.message;
    throw IllegalExchange(k, error.reason, os.str());
  }
  MorseWord out = apply_plan(word, k, *plan);
  assert(validate(out).ok());
  return out;
}

bool exchange_legal(const MorseWord& word, int k) {
  return plan_site(word, k, nullptr).has_value();
}

int exchange_delta(const MorseWord& word, int k) {
  require_valid(word);
  PlanError error{IllegalExchange::Reason::out_of_range, ""};
  const auto plan = plan_site(word, k, &error);
  if (!plan) {
    std::ostringstream os;
    os << "illegal exchange at site " << k << ": " << error.message;
    throw IllegalExchange(k, error.reason, os.str());
  }
  return plan->delta;
}

PushResult push_block(const MorseWord& word, int first, int last,
                      PushDirection direction, int target_gap) {
  require_valid(word);
  if (first < 1 || last > word.size() || first > last)
    throw std::invalid_argument("push block range out of bounds");
  if (target_gap < 0 || target_gap > word.size())
    throw std::invalid_argument("push target gap out of bounds");
  if (direction == PushDirection::up && target_gap < last)
    throw std::invalid_argument("push up requires a target at or above the block");
  if (direction == PushDirection::down && target_gap > first - 1)
    throw std::invalid_argument("push down requires a target below the block");

  PushResult result{word, {}};
  int lo = first, hi = last;
  const int block = last - first + 1;
  const int passes = direction == PushDirection::up ? target_gap - last
                                                    : first - 1 - target_gap;

  for (int pass = 0; pass < passes; ++pass) {
    // One outside event bubbles through the whole block.
    for (int step = 0; step < block; ++step) {
      const int site = direction == PushDirection::up ? hi - step : lo - 1 + step;
      PlanError error{IllegalExchange::Reason::out_of_range, ""};
      const auto plan = plan_site(result.word, site, &error);
      if (!plan) {
        std::ostringstream os;
        os << "push blocked: exchange of events " << site << " and "
           << site + 1 << " is illegal (" << error.message << ")";
        throw IllegalExchange(site, error.reason, os.str());
      }
      const int before = width(result.word);
      MoveStep record;
      record.site = site;
      record.lower = result.word.events[site - 1];
      record.upper = result.word.events[site];
      record.predicted = plan->delta;
      result.word = apply_plan(result.word, site, *plan);
      record.recomputed = width(result.word) - before;
      result.trace.total_delta += record.recomputed;
      result.trace.steps.push_back(record);
    }
    if (direction == PushDirection::up) {
      ++lo;
      ++hi;
    } else {
      --lo;
      --hi;
    }
  }
  return result;
}

LocalThinness is_locally_thin(const MorseWord& word) {
  require_valid(word);
  LocalThinness result;
  for (int k = 1; k < word.size(); ++k) {
    const auto plan = plan_site(word, k, nullptr);
    if (plan && plan->delta == -4) result.improving_sites.push_back(k);
  }
  result.thin = result.improving_sites.empty();
  return result;
}

OrbitResult orbit_min_width(const MorseWord& word, long long budget) {
  require_valid(word);
  OrbitResult result;
  result.min_width = width(word);
  result.witness = word;
  result.states = 1;

  std::string best_key = serialize_word(word);
  std::set<std::string> seen{best_key};
  std::deque<MorseWord> frontier{word};
  bool capped = budget < 1;

  while (!frontier.empty() && !capped) {
    const MorseWord current = frontier.front();
    frontier.pop_front();
    for (int k = 1; k < current.size() && !capped; ++k) {
      const auto plan = plan_site(current, k, nullptr);
      if (!plan) continue;
      MorseWord next = apply_plan(current, k, *plan);
      std::string key = serialize_word(next);
      if (!seen.insert(key).second) continue;
      if (static_cast<long long>(seen.size()) > budget) {
        capped = true;
        break;
      }
      ++result.states;
      const int w = width(next);
      if (w < result.min_width ||
          (w == result.min_width && key < best_key)) {
        result.min_width = w;
        result.witness = next;
        best_key = std::move(key);
      }
      frontier.push_back(std::move(next));
    }
  }
  result.exhausted = !capped && frontier.empty();
  return result;
}

}  // namespace widthlab
