#include "widthlab/morse.hpp"

#include <algorithm>
#include <sstream>

namespace widthlab {

namespace {

std::string describe(const ValidationReport& report) {
  std::ostringstream os;
  os << "invalid word:";
  for (const auto& v : report.violations) {
    os << " [";
    if (v.event > 0) os << "event " << v.event << ": ";
    os << v.message << "]";
  }
  return os.str();
}

}  // namespace

InvalidWord::InvalidWord(ValidationReport report)
    : std::runtime_error(describe(report)), report_(std::move(report)) {}

ValidationReport validate(const MorseWord& word) {
  ValidationReport report;
  auto fail = [&](int event, std::string msg) {
    report.violations.push_back({event, std::move(msg)});
  };

  if (word.bottom_strands < 0) fail(0, "negative bottom strand count");
  if (word.top_strands < 0) fail(0, "negative top strand count");
  if (!report.ok()) return report;

  int n = word.bottom_strands;
  for (int i = 0; i < word.size(); ++i) {
    const Event& e = word.events[i];
    const int k = i + 1;
    if (e.position < 0) {
      fail(k, "negative position");
      return report;
    }
    switch (e.kind) {
      case EventKind::cup:
        if (e.position > n) {
          std::ostringstream os;
          os << "cup position " << e.position << " exceeds strand count " << n;
          fail(k, os.str());
          return report;
        }
        n += 2;
        break;
      case EventKind::cap:
      case EventKind::cross: {
        const char* name = e.kind == EventKind::cap ? "cap" : "crossing";
        if (n < 2) {
          fail(k, std::string(name) + " needs >=2 strands");
          return report;
        }
        if (e.position > n - 2) {
          std::ostringstream os;
          os << name << " position " << e.position
             << " exceeds strand count " << n;
          fail(k, os.str());
          return report;
        }
        if (e.kind == EventKind::cap) n -= 2;
        break;
      }
    }
  }
  if (n != word.top_strands) {
    std::ostringstream os;
    os << "word ends with " << n << " strands, declared top is "
       << word.top_strands;
    fail(0, os.str());
    return report;
  }

  // Zero strands strictly between critical events means a split
  // presentation; flagged but accepted.
  int count = word.bottom_strands;
  int seen_crit = 0;
  const int total_crit = static_cast<int>(
      std::count_if(word.events.begin(), word.events.end(),
                    [](const Event& e) { return is_critical(e.kind); }));
  for (int i = 0; i < word.size(); ++i) {
    const Event& e = word.events[i];
    if (e.kind == EventKind::cup) count += 2;
    if (e.kind == EventKind::cap) count -= 2;
    if (is_critical(e.kind)) {
      ++seen_crit;
      if (count == 0 && seen_crit < total_crit) {
        report.warnings.push_back(
            {i + 1, "split presentation: no strands above this event"});
      }
    }
  }
  return report;
}

void require_valid(const MorseWord& word) {
  ValidationReport report = validate(word);
  if (!report.ok()) throw InvalidWord(std::move(report));
}

std::vector<int> strand_profile(const MorseWord& word) {
  require_valid(word);
  std::vector<int> profile;
  profile.reserve(word.size() + 1);
  int n = word.bottom_strands;
  profile.push_back(n);
  for (const Event& e : word.events) {
    if (e.kind == EventKind::cup) n += 2;
    if (e.kind == EventKind::cap) n -= 2;
    profile.push_back(n);
  }
  return profile;
}

int width(const MorseWord& word) {
  const std::vector<int> profile = strand_profile(word);
  int total = 0;
  int prev_crit = -1;
  for (int i = 0; i < word.size(); ++i) {
    if (!is_critical(word.events[i].kind)) continue;
    if (prev_crit >= 0) total += profile[prev_crit + 1];
    prev_crit = i;
  }
  return total;
}

std::vector<Level> classify_levels(const MorseWord& word) {
  const std::vector<int> profile = strand_profile(word);
  std::vector<int> crit;  // 0-based indices of critical events
  for (int i = 0; i < word.size(); ++i)
    if (is_critical(word.events[i].kind)) crit.push_back(i);

  std::vector<Level> levels;
  const bool tangle = !word.is_link();

  if (tangle) {
    Level bottom;
    bottom.gap = 0;
    bottom.strand_count = word.bottom_strands;
    if (!crit.empty()) bottom.above_event = crit.front() + 1;
    bottom.kind = (!crit.empty() &&
                   word.events[crit.front()].kind == EventKind::cup)
                      ? LevelKind::boundary_thin
                      : LevelKind::neither;
    levels.push_back(bottom);
  }

  for (size_t j = 0; j + 1 < crit.size(); ++j) {
    const Event& below = word.events[crit[j]];
    const Event& above = word.events[crit[j + 1]];
    Level lv;
    lv.gap = crit[j] + 1;
    lv.below_event = crit[j] + 1;
    lv.above_event = crit[j + 1] + 1;
    lv.strand_count = profile[crit[j] + 1];
    if (below.kind == EventKind::cap && above.kind == EventKind::cup)
      lv.kind = LevelKind::thin;
    else if (below.kind == EventKind::cup && above.kind == EventKind::cap)
      lv.kind = LevelKind::thick;
    else
      lv.kind = LevelKind::neither;
    levels.push_back(lv);
  }

  if (tangle) {
    Level top;
    top.gap = word.size();
    top.strand_count = word.top_strands;
    if (!crit.empty()) top.below_event = crit.back() + 1;
    top.kind = (!crit.empty() &&
                word.events[crit.back()].kind == EventKind::cap)
                   ? LevelKind::boundary_thin
                   : LevelKind::neither;
    levels.push_back(top);
  }
  return levels;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Components components(const MorseWord& word) {
  require_valid(word);
  UnionFind uf;
  std::vector<int> active;  // union-find node per strand position
  for (int i = 0; i < word.bottom_strands; ++i) active.push_back(uf.make());

  std::vector<std::pair<int, int>> raw(word.size());
  for (int i = 0; i < word.size(); ++i) {
    const Event& e = word.events[i];
    const int p = e.position;
    switch (e.kind) {
      case EventKind::cup: {
        const int node = uf.make();
        active.insert(active.begin() + p, 2, node);
        raw[i] = {node, node};
        break;
      }
      case EventKind::cap: {
        raw[i] = {active[p], active[p + 1]};
        uf.unite(active[p], active[p + 1]);
        active.erase(active.begin() + p, active.begin() + p + 2);
        break;
      }
      case EventKind::cross:
        raw[i] = {active[p], active[p + 1]};
        std::swap(active[p], active[p + 1]);
        break;
    }
  }

  // Canonical component ids in order of first appearance.
  Components result;
  std::vector<int> canon(uf.parent.size(), -1);
  auto id_of = [&](int node) {
    const int root = uf.find(node);
    if (canon[root] < 0) canon[root] = result.count++;
    return canon[root];
  };
  for (int i = 0; i < word.bottom_strands; ++i) id_of(i);
  result.event_components.resize(word.size());
  for (int i = 0; i < word.size(); ++i)
    result.event_components[i] = {id_of(raw[i].first), id_of(raw[i].second)};
  return result;
}

namespace {

BoxReport boxes_of_subsequence(const MorseWord& word,
                               const std::vector<int>& crit_events) {
  BoxReport report;
  const auto& ev = word.events;

  // Split at thin adjacencies of the family: a cap immediately followed
  // (within the family) by a cup.
  std::vector<std::vector<int>> pieces;
  for (int e : crit_events) {
    const bool split =
        !pieces.empty() && !pieces.back().empty() &&
        ev[pieces.back().back() - 1].kind == EventKind::cap &&
        ev[e - 1].kind == EventKind::cup;
    if (pieces.empty() || split) pieces.emplace_back();
    pieces.back().push_back(e);
  }

  for (const auto& piece : pieces) {
    int minima = 0, maxima = 0;
    for (int e : piece)
      (ev[e - 1].kind == EventKind::cup ? minima : maxima)++;
    if (minima == 0 || maxima == 0) {
      report.unboxed.insert(report.unboxed.end(), piece.begin(), piece.end());
      continue;
    }
    BraidBox box;
    box.events = piece;
    box.minima = minima;
    box.maxima = maxima;
    box.lower_gap = piece.front() - 1;
    box.upper_gap = piece.back();
    report.boxes.push_back(std::move(box));
  }

  report.proper_certified =
      !crit_events.empty() &&
      ev[crit_events.front() - 1].kind == EventKind::cup &&
      ev[crit_events.back() - 1].kind == EventKind::cap;
  return report;
}

}  // namespace

BoxReport braid_boxes(const MorseWord& word) {
  require_valid(word);
  std::vector<int> crit;
  for (int i = 0; i < word.size(); ++i)
    if (is_critical(word.events[i].kind)) crit.push_back(i + 1);
  return boxes_of_subsequence(word, crit);
}

BoxReport braid_boxes(const MorseWord& word,
                      const std::vector<int>& component_ids) {
  const Components comp = components(word);
  auto selected = [&](int event_no) {
    const auto [a, b] = comp.event_components[event_no - 1];
    return std::find(component_ids.begin(), component_ids.end(), a) !=
               component_ids.end() ||
           std::find(component_ids.begin(), component_ids.end(), b) !=
               component_ids.end();
  };
  std::vector<int> crit;
  for (int i = 0; i < word.size(); ++i)
    if (is_critical(word.events[i].kind) && selected(i + 1))
      crit.push_back(i + 1);
  return boxes_of_subsequence(word, crit);
}

}  // namespace widthlab
