// widthlab: width calculus for Morse link presentations and the two-sided
// schematic calculus for level spheres with vertical c-disks.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "widthlab/commands.hpp"

namespace {

using widthlab::CommandResult;
using widthlab::Input;

struct InputArgs {
  std::string file;
  std::string preset;
};

void add_input(CLI::App* cmd, InputArgs& args, bool& json) {
  cmd->add_option("file", args.file, ".morse or .cdisk file");
  cmd->add_option("--preset", args.preset, "bundled preset name");
  cmd->add_flag("--json", json, "emit the JSON report schema");
}

bool looks_schematic(const std::string& path) {
  return path.size() >= 6 && path.substr(path.size() - 6) == ".cdisk";
}

int resolve_input(const InputArgs& args, Input& input) {
  if (!args.preset.empty()) {
    const widthlab::Preset* preset = widthlab::find_preset(args.preset);
    if (!preset) {
      std::cerr << "error: unknown preset '" << args.preset << "'\n";
      return 1;
    }
    input = widthlab::preset_input(*preset);
    return 0;
  }
  if (args.file.empty()) {
    std::cerr << "error: give a file or --preset NAME\n";
    return 1;
  }
  std::ifstream file(args.file, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot read '" << args.file << "'\n";
    return 1;
  }
  std::ostringstream text;
  text << file.rdbuf();
  input = {args.file, text.str(), looks_schematic(args.file)};
  return 0;
}

int finish(const CommandResult& result) {
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}

std::string witness_path_for(const InputArgs& args) {
  std::string base = !args.preset.empty() ? args.preset : args.file;
  const std::string ext = ".morse";
  if (base.size() > ext.size() &&
      base.substr(base.size() - ext.size()) == ext)
    base = base.substr(0, base.size() - ext.size());
  return base + ".min.morse";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"width calculus for Morse presentations of links and tangles"};
  app.require_subcommand(1);
  bool json = false;

  InputArgs width_args, levels_args, boxes_args, move_args, orbit_args,
      cdisk_args;

  auto* cmd_width = app.add_subcommand("width", "presentation width and levels");
  add_input(cmd_width, width_args, json);

  auto* cmd_levels = app.add_subcommand("levels", "thin/thick level table");
  add_input(cmd_levels, levels_args, json);

  auto* cmd_boxes = app.add_subcommand("boxes", "braid boxes");
  add_input(cmd_boxes, boxes_args, json);

  auto* cmd_move =
      app.add_subcommand("move", "apply an exchange or a block push");
  add_input(cmd_move, move_args, json);
  int exchange_site = 0;
  std::vector<std::string> push_spec;
  cmd_move->add_option("--exchange", exchange_site,
                       "swap events K and K+1 (1-based)");
  cmd_move
      ->add_option("--push", push_spec,
                   "push a block: A..B up|down GAP (gap g sits above "
                   "event g)")
      ->expected(3);

  auto* cmd_orbit = app.add_subcommand(
      "orbit", "exhaustive minimum width over the exchange orbit");
  add_input(cmd_orbit, orbit_args, json);
  long long budget = 100000;
  cmd_orbit->add_option("--budget", budget, "maximum states to enumerate");

  auto* cmd_cdisk =
      app.add_subcommand("cdisk", "c-disk schematic reports and certificates");
  add_input(cmd_cdisk, cdisk_args, json);
  bool facts = false, theorem = false, chain = false, certify = false;
  cmd_cdisk->add_flag("--facts", facts, "width deltas of the count facts");
  cmd_cdisk->add_flag("--theorem", theorem, "alternating-level inequalities");
  cmd_cdisk->add_flag("--chain", chain, "width chain along alternating levels");
  cmd_cdisk->add_flag("--certify", certify,
                      "search for a width-decreasing certificate");

  CLI11_PARSE(app, argc, argv);

  Input input;
  if (cmd_width->parsed()) {
    if (int rc = resolve_input(width_args, input)) return rc;
    return finish(widthlab::run_width(input, json));
  }
  if (cmd_levels->parsed()) {
    if (int rc = resolve_input(levels_args, input)) return rc;
    return finish(widthlab::run_levels(input, json));
  }
  if (cmd_boxes->parsed()) {
    if (int rc = resolve_input(boxes_args, input)) return rc;
    return finish(widthlab::run_boxes(input, json));
  }
  if (cmd_move->parsed()) {
    if (int rc = resolve_input(move_args, input)) return rc;
    if (exchange_site > 0 && push_spec.empty())
      return finish(widthlab::run_exchange(input, exchange_site, json));
    if (!push_spec.empty() && exchange_site == 0) {
      const std::string& range = push_spec[0];
      const size_t dots = range.find("..");
      if (dots == std::string::npos) {
        std::cerr << "error: push range must look like A..B\n";
        return 1;
      }
      int first = 0, last = 0, gap = 0;
      try {
        first = std::stoi(range.substr(0, dots));
        last = std::stoi(range.substr(dots + 2));
        gap = std::stoi(push_spec[2]);
      } catch (const std::exception&) {
        std::cerr << "error: push wants integers A..B and GAP\n";
        return 1;
      }
      widthlab::PushDirection direction;
      if (push_spec[1] == "up")
        direction = widthlab::PushDirection::up;
      else if (push_spec[1] == "down")
        direction = widthlab::PushDirection::down;
      else {
        std::cerr << "error: push direction must be up or down\n";
        return 1;
      }
      return finish(
          widthlab::run_push(input, first, last, direction, gap, json));
    }
    std::cerr << "error: move wants exactly one of --exchange or --push\n";
    return 1;
  }
  if (cmd_orbit->parsed()) {
    if (int rc = resolve_input(orbit_args, input)) return rc;
    return finish(widthlab::run_orbit(input, budget, json,
                                      witness_path_for(orbit_args)));
  }
  if (cmd_cdisk->parsed()) {
    if (int rc = resolve_input(cdisk_args, input)) return rc;
    widthlab::CdiskMode mode = widthlab::CdiskMode::summary;
    const int picked = (facts ? 1 : 0) + (theorem ? 1 : 0) + (chain ? 1 : 0) +
                       (certify ? 1 : 0);
    if (picked > 1) {
      std::cerr << "error: pick one of --facts --theorem --chain --certify\n";
      return 1;
    }
    if (facts) mode = widthlab::CdiskMode::facts;
    if (theorem) mode = widthlab::CdiskMode::theorem;
    if (chain) mode = widthlab::CdiskMode::chain;
    if (certify) mode = widthlab::CdiskMode::certify;
    return finish(widthlab::run_cdisk(input, mode, json));
  }
  return 0;
}
