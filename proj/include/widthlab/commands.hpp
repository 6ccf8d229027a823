#pragma once

#include <string>

#include "widthlab/moves.hpp"
#include "widthlab/presets.hpp"

// Command layer behind the CLI binary; kept in the library so tests can
// drive the exact code paths the tool runs.

namespace widthlab {

struct Input {
  std::string name;  // file path or preset name, for messages
  std::string text;
  bool schematic = false;
};

Input preset_input(const Preset& preset);

// Exit codes: 0 success or no violation, 1 invalid input or inapplicable
// precondition, 2 certificate found.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CommandResult run_width(const Input& in, bool json);
CommandResult run_levels(const Input& in, bool json);
CommandResult run_boxes(const Input& in, bool json);
CommandResult run_exchange(const Input& in, int site, bool json);
CommandResult run_push(const Input& in, int first, int last,
                       PushDirection direction, int target_gap, bool json);
// witness_path may be empty to skip writing the witness file.
CommandResult run_orbit(const Input& in, long long budget, bool json,
                        const std::string& witness_path);

enum class CdiskMode { summary, facts, theorem, chain, certify };

CommandResult run_cdisk(const Input& in, CdiskMode mode, bool json);

}  // namespace widthlab
