#include "widthlab/commands.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "widthlab/cdisk.hpp"
#include "widthlab/dsl.hpp"

namespace widthlab {

namespace {

using nlohmann::json;

const char* level_kind_name(LevelKind k) {
  switch (k) {
    case LevelKind::thin:
      return "thin";
    case LevelKind::thick:
      return "thick";
    case LevelKind::boundary_thin:
      return "boundary_thin";
    case LevelKind::neither:
      break;
  }
  return "neither";
}

std::string event_text(const Event& e) {
  std::ostringstream os;
  switch (e.kind) {
    case EventKind::cup:
      os << "cup ";
      break;
    case EventKind::cap:
      os << "cap ";
      break;
    case EventKind::cross:
      os << (e.sign == Sign::plus ? "x+ " : "x- ");
      break;
  }
  os << e.position;
  return os.str();
}

json levels_json(const std::vector<Level>& levels) {
  json arr = json::array();
  for (const Level& lv : levels) {
    json j;
    j["gap"] = lv.gap;
    j["below"] = lv.below_event ? json(*lv.below_event) : json(nullptr);
    j["above"] = lv.above_event ? json(*lv.above_event) : json(nullptr);
    j["count"] = lv.strand_count;
    j["class"] = level_kind_name(lv.kind);
    arr.push_back(j);
  }
  return arr;
}

json boxes_json(const BoxReport& report) {
  json arr = json::array();
  for (const BraidBox& box : report.boxes) {
    json j;
    j["events"] = box.events;
    j["minima"] = box.minima;
    j["maxima"] = box.maxima;
    j["lower_gap"] = box.lower_gap;
    j["upper_gap"] = box.upper_gap;
    arr.push_back(j);
  }
  return arr;
}

json trace_json(const MoveTrace& trace) {
  json arr = json::array();
  for (const MoveStep& step : trace.steps) {
    json j;
    j["site"] = step.site;
    j["lower"] = event_text(step.lower);
    j["upper"] = event_text(step.upper);
    j["predicted"] = step.predicted;
    j["recomputed"] = step.recomputed;
    arr.push_back(j);
  }
  return arr;
}

json schematic_trace_json(const SchematicTrace& trace) {
  json arr = json::array();
  for (const SchematicMoveStep& step : trace.steps) {
    json j;
    j["first"] = step.move.first;
    j["last"] = step.move.last;
    j["target_gap"] = step.move.target_gap;
    j["note"] = step.note;
    j["predicted"] = step.predicted;
    j["recomputed"] = step.recomputed;
    arr.push_back(j);
  }
  return arr;
}

void print_levels(std::ostream& os, const std::vector<Level>& levels) {
  os << "levels (bottom to top):\n";
  for (const Level& lv : levels) {
    os << "  gap " << lv.gap << "  between ";
    if (lv.below_event)
      os << "event " << *lv.below_event;
    else
      os << "bottom";
    os << " and ";
    if (lv.above_event)
      os << "event " << *lv.above_event;
    else
      os << "top";
    os << "  count " << lv.strand_count << "  " << level_kind_name(lv.kind)
       << "\n";
  }
}

MorseWord parse_word_input(const Input& in) {
  if (in.schematic)
    throw std::invalid_argument(in.name +
                                ": expected a Morse word, got a schematic");
  return parse_word(in.text);
}

CDiskSchematic parse_schematic_input(const Input& in) {
  if (!in.schematic)
    throw std::invalid_argument(in.name +
                                ": expected a schematic, got a Morse word");
  return parse_schematic(in.text);
}

// Uniform error handling: domain failures exit 1.
CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const ParseFailure& e) {
    return {1, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {1, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace

Input preset_input(const Preset& preset) {
  return {preset.name, preset.text, preset.schematic};
}

CommandResult run_width(const Input& in, bool json_out) {
  return guarded([&]() -> CommandResult {
    const MorseWord word = parse_word_input(in);
    const int w = width(word);
    const auto levels = classify_levels(word);
    CommandResult result;
    if (json_out) {
      json j = report_skeleton();
      j["width"] = w;
      j["levels"] = levels_json(levels);
      result.out = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "width " << w << "\n";
      print_levels(os, levels);
      result.out = os.str();
    }
    return result;
  });
}

CommandResult run_levels(const Input& in, bool json_out) {
  return run_width(in, json_out);
}

CommandResult run_boxes(const Input& in, bool json_out) {
  return guarded([&]() -> CommandResult {
    const MorseWord word = parse_word_input(in);
    const BoxReport report = braid_boxes(word);
    CommandResult result;
    if (json_out) {
      json j = report_skeleton();
      j["width"] = width(word);
      j["boxes"] = boxes_json(report);
      j["unboxed"] = report.unboxed;
      j["proper_certified"] = report.proper_certified;
      result.out = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << (report.proper_certified ? "proper-certified"
                                     : "not proper-certified")
         << "\n";
      for (size_t i = 0; i < report.boxes.size(); ++i) {
        const BraidBox& box = report.boxes[i];
        os << "box " << i + 1 << ": events";
        for (int e : box.events) os << " " << e;
        os << "  (minima " << box.minima << ", maxima " << box.maxima
           << ")  between gaps " << box.lower_gap << " and " << box.upper_gap
           << "\n";
      }
      if (!report.unboxed.empty()) {
        os << "unboxed events:";
        for (int e : report.unboxed) os << " " << e;
        os << "\n";
      }
      result.out = os.str();
    }
    return result;
  });
}

CommandResult run_exchange(const Input& in, int site, bool json_out) {
  return guarded([&]() -> CommandResult {
    const MorseWord word = parse_word_input(in);
    const int before = width(word);
    const int predicted = exchange_delta(word, site);
    const MorseWord moved = exchange(word, site);
    const int recomputed = width(moved) - before;

    MoveTrace trace;
    trace.steps.push_back({site, word.events[site - 1], word.events[site],
                           predicted, recomputed});
    trace.total_delta = recomputed;

    CommandResult result;
    if (json_out) {
      json j = report_skeleton();
      j["width"] = width(moved);
      j["moves"] = trace_json(trace);
      j["word"] = serialize_word(moved);
      result.out = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "exchange at site " << site << ": delta " << recomputed
         << " (width " << before << " -> " << width(moved) << ")\n"
         << serialize_word(moved);
      result.out = os.str();
    }
    return result;
  });
}

CommandResult run_push(const Input& in, int first, int last,
                       PushDirection direction, int target_gap,
                       bool json_out) {
  return guarded([&]() -> CommandResult {
    const MorseWord word = parse_word_input(in);
    const int before = width(word);
    const PushResult pushed =
        push_block(word, first, last, direction, target_gap);

    CommandResult result;
    if (json_out) {
      json j = report_skeleton();
      j["width"] = width(pushed.word);
      j["moves"] = trace_json(pushed.trace);
      j["word"] = serialize_word(pushed.word);
      result.out = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "push " << (direction == PushDirection::up ? "up" : "down")
         << " of events " << first << ".." << last << " past gap "
         << target_gap << ": total delta " << pushed.trace.total_delta
         << " in " << pushed.trace.steps.size() << " exchanges (width "
         << before << " -> " << width(pushed.word) << ")\n"
         << serialize_word(pushed.word);
      result.out = os.str();
    }
    return result;
  });
}

CommandResult run_orbit(const Input& in, long long budget, bool json_out,
                        const std::string& witness_path) {
  return guarded([&]() -> CommandResult {
    const MorseWord word = parse_word_input(in);
    const OrbitResult orbit = orbit_min_width(word, budget);
    const std::string witness_text = serialize_word(orbit.witness);
    if (!witness_path.empty()) {
      std::ofstream file(witness_path, std::ios::binary);
      file << witness_text;
    }

    CommandResult result;
    if (json_out) {
      json j = report_skeleton();
      j["width"] = orbit.min_width;
      j["word"] = witness_text;
      j["exhausted"] = orbit.exhausted;
      j["states"] = orbit.states;
      j["witness_file"] =
          witness_path.empty() ? json(nullptr) : json(witness_path);
      result.out = j.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "orbit minimum width " << orbit.min_width << " over "
         << orbit.states << " states ("
         << (orbit.exhausted ? "exhausted" : "budget reached")
         << "); this is an upper bound for the true width\n";
      if (!witness_path.empty()) os << "witness written to " << witness_path << "\n";
      result.out = os.str();
    }
    return result;
  });
}

namespace {

json regions_json(const std::vector<RegionCount>& regions) {
  json arr = json::array();
  for (const RegionCount& rc : regions) {
    json j;
    j["index"] = rc.index;
    j["side"] = rc.side == Side::alpha ? "alpha" : "beta";
    j["maxima"] = rc.maxima;
    j["minima"] = rc.minima;
    arr.push_back(j);
  }
  return arr;
}

json alternating_json(const AlternatingLevels& levels) {
  json arr = json::array();
  for (const auto& lv : levels.levels) {
    json j;
    j["index"] = lv.index;
    j["gap"] = lv.gap;
    j["width"] = lv.width;
    arr.push_back(j);
  }
  return arr;
}

json fact_json(const FactReport& report) {
  json j;
  j["fact"] = report.fact_id;
  j["region"] = report.region;
  j["upper_maxima"] = report.upper_maxima;
  j["upper_minima"] = report.upper_minima;
  j["lower_maxima"] = report.lower_maxima;
  j["lower_minima"] = report.lower_minima;
  if (report.fact_id == 4) {
    j["maxima_below_r"] = report.maxima_below_r;
    j["minima_below_r"] = report.minima_below_r;
    j["maxima_above_r"] = report.maxima_above_r;
    j["minima_above_r"] = report.minima_above_r;
  }
  j["predicted_delta"] = report.predicted_delta;
  j["recomputed_delta"] = report.recomputed_delta;
  j["steps"] = schematic_trace_json(report.move);
  return j;
}

}  // namespace

CommandResult run_cdisk(const Input& in, CdiskMode mode, bool json_out) {
  return guarded([&]() -> CommandResult {
    const CDiskSchematic s = parse_schematic_input(in);
    CommandResult result;
    json j = report_skeleton();
    std::ostringstream os;

    const AlternatingLevels levels = alternating_levels(s);
    const auto regions = region_counts(s);
    j["width"] = relative_width(s);
    j["levels"] = alternating_json(levels);
    j["regions"] = regions_json(regions);
    j["r"] = levels.r;
    j["n"] = levels.n();
    os << "relative width " << relative_width(s) << ", " << levels.n()
       << "+1 alternating levels, r = " << levels.r << "\n";

    switch (mode) {
      case CdiskMode::summary:
        for (const auto& rc : regions)
          os << "  region " << rc.index << " ("
             << (rc.side == Side::alpha ? "alpha" : "beta") << "): maxima "
             << rc.maxima << ", minima " << rc.minima << "\n";
        break;
      case CdiskMode::facts: {
        json facts = json::array();
        for (const auto& rc : regions) {
          for (int fact : {1, 2, 3, 4}) {
            try {
              FactReport report = fact_delta(s, fact, rc.index);
              facts.push_back(fact_json(report));
              os << "  fact " << fact << " at region " << rc.index
                 << ": predicted " << report.predicted_delta
                 << ", recomputed " << report.recomputed_delta << "\n";
            } catch (const SchematicError&) {
              // hypotheses not met for this fact here
            }
          }
        }
        j["facts"] = facts;
        break;
      }
      case CdiskMode::theorem: {
        const TheoremReport report = check_theorem(s);
        json t;
        t["case"] = report.case_label;
        t["conclusion1_holds"] = report.conclusion1_holds;
        t["conclusion1_violations"] = report.conclusion1_violations;
        t["conclusion2_applicable"] = report.conclusion2_applicable;
        t["conclusion2_holds"] = report.conclusion2_holds;
        t["conclusion2_equality"] = report.conclusion2_equality;
        t["decomposing_sphere_proxy"] = report.decomposing_sphere_proxy;
        t["pattern_holds"] = report.pattern_holds;
        t["pattern_violations"] = report.pattern_violations;
        t["holds"] = report.holds;
        j["theorem"] = t;
        os << "  case " << report.case_label << ": "
           << (report.holds ? "all conclusions hold" : "violated") << "\n";
        for (int i : report.conclusion1_violations)
          os << "  conclusion 1 fails at region " << i << "\n";
        for (int i : report.pattern_violations)
          os << "  pattern fails at region " << i << "\n";
        break;
      }
      case CdiskMode::chain: {
        const ChainReport report = check_width_chain(s);
        json c;
        c["widths"] = report.widths;
        c["r"] = report.r;
        c["holds"] = report.holds;
        c["violations"] = report.violations;
        c["telescoping_ok"] = report.telescoping_ok;
        j["chain"] = c;
        os << "  widths (top down):";
        for (int w : report.widths) os << " " << w;
        os << "\n  chain " << (report.holds ? "holds" : "violated") << "\n";
        for (const auto& v : report.violations) os << "  " << v << "\n";
        break;
      }
      case CdiskMode::certify: {
        const CertificateScan scan = thinness_certificate(s);
        j["possibly_fake_cut_disk"] = scan.possibly_fake_cut_disk;
        if (scan.possibly_fake_cut_disk)
          os << "  note: possibly a fake cut-disk (connecting strand "
                "critical-point-free on beta)\n";
        if (scan.certificate) {
          const Certificate& cert = *scan.certificate;
          json c;
          c["fact"] = cert.fact_id;
          c["region"] = cert.region;
          c["total_delta"] = cert.trace.total_delta;
          c["steps"] = schematic_trace_json(cert.trace);
          j["certificate"] = c;
          os << "  certificate: fact " << cert.fact_id << " at region "
             << cert.region << " decreases width by "
             << -cert.trace.total_delta << "\n";
          result.exit_code = 2;
        } else {
          os << "  no width-decreasing certificate\n";
        }
        break;
      }
    }

    result.out = json_out ? j.dump(2) + "\n" : os.str();
    return result;
  });
}

}  // namespace widthlab
