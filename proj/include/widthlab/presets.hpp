#pragma once

#include <optional>
#include <string>
#include <vector>

// Bundled example presentations, stored in their canonical text form.

namespace widthlab {

struct Preset {
  std::string name;
  bool schematic = false;  // .cdisk rather than .morse
  std::string text;
  int expected_width = 0;  // presentation width; relative for schematics
  std::string note;
};

const std::vector<Preset>& word_presets();
const std::vector<Preset>& schematic_presets();
const Preset* find_preset(const std::string& name);

}  // namespace widthlab
