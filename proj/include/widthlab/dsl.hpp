#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "widthlab/cdisk.hpp"
#include "widthlab/morse.hpp"

// Line-oriented text formats for Morse words (.morse) and c-disk
// schematics (.cdisk), with exact source spans on every diagnostic, plus
// the JSON report schema shared by the CLI commands.

namespace widthlab {

struct SourceSpan {
  int line = 1;    // 1-based
  int column = 1;  // 1-based
  int length = 1;
};

struct ParseError {
  SourceSpan span;
  std::string message;
  std::vector<std::string> expected;  // optional token set
};

class ParseFailure : public std::runtime_error {
 public:
  explicit ParseFailure(ParseError error);
  const ParseError& error() const { return error_; }

 private:
  ParseError error_;
};

struct ParsedWord {
  MorseWord word;
  std::vector<int> event_lines;  // source line of each event
};

// Grammar (one item per line, '#' starts a comment, LF or CRLF):
//   header := "link" | "tangle" "bottom=" INT "top=" INT
//   event  := ("cup" | "cap" | "x+" | "x-") INT
// The parsed word is validated; violations surface as ParseFailure with
// the offending event's line.
ParsedWord parse_word_ex(std::string_view text);
MorseWord parse_word(std::string_view text);

// Canonical form; parse(serialize(w)) == w and distinct valid words give
// distinct texts.
std::string serialize_word(const MorseWord& word);

struct ParsedSchematic {
  CDiskSchematic schematic;
  std::vector<int> event_lines;
};

// Grammar:
//   "cdisk" ("cut" | "compress")
//   "base" "alpha=" INT "beta=" INT
//   "inside=" ("alpha" | "beta")
//   ("min" | "max") ("alpha" | "beta") ["tau"]  |  "transfer"
ParsedSchematic parse_schematic_ex(std::string_view text);
CDiskSchematic parse_schematic(std::string_view text);
std::string serialize_schematic(const CDiskSchematic& s);

// Shared JSON report shape: {"width": int|null, "levels": [...],
// "boxes": [...], "moves": [...], "certificate": {...}|null}. Commands may
// add fields; these five are always present with these types.
nlohmann::json report_skeleton();
bool report_schema_ok(const nlohmann::json& j);

}  // namespace widthlab
