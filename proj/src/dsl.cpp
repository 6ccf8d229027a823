#include "widthlab/dsl.hpp"

#include <cctype>
#include <sstream>

namespace widthlab {

namespace {

struct Token {
  std::string text;
  int line = 1;
  int column = 1;
  SourceSpan span() const {
    return {line, column, std::max<int>(1, static_cast<int>(text.size()))};
  }
};

// Significant lines only: comments stripped, blank lines dropped.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 1;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[j])))
        ++j;
      tokens.push_back(
          {std::string(line.substr(i, j - i)), line_no,
           static_cast<int>(i) + 1});
      i = j;
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++line_no;
  }
  return lines;
}

[[noreturn]] void raise(const Token& at, std::string message,
                        std::vector<std::string> expected = {}) {
  throw ParseFailure({at.span(), std::move(message), std::move(expected)});
}

[[noreturn]] void raise_at(SourceSpan span, std::string message,
                           std::vector<std::string> expected = {}) {
  throw ParseFailure({span, std::move(message), std::move(expected)});
}

int parse_int(const Token& tok) {
  if (tok.text.empty()) raise(tok, "expected nonnegative integer");
  for (char c : tok.text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      raise(tok, "expected nonnegative integer", {"INT"});
  try {
    return std::stoi(tok.text);
  } catch (const std::exception&) {
    raise(tok, "integer out of range");
  }
}

// "key=INT" in one token; the span of a bad value covers just the value.
int parse_keyed_int(const Token& tok, const std::string& key) {
  const std::string prefix = key + "=";
  if (tok.text.rfind(prefix, 0) != 0)
    raise(tok, "expected " + prefix + "INT", {prefix + "INT"});
  const std::string value = tok.text.substr(prefix.size());
  if (value.empty())
    raise(tok, "expected " + prefix + "INT", {prefix + "INT"});
  for (char c : value)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      raise_at({tok.line, tok.column + static_cast<int>(prefix.size()),
                static_cast<int>(value.size())},
               "expected nonnegative integer", {"INT"});
  return std::stoi(value);
}

void expect_end(const std::vector<Token>& line, size_t used) {
  if (line.size() > used)
    raise(line[used], "unexpected token '" + line[used].text + "'");
}

SourceSpan line_span(const std::vector<Token>& line) {
  return line.front().span();
}

}  // namespace

ParseFailure::ParseFailure(ParseError error)
    : std::runtime_error(error.message + " (line " +
                         std::to_string(error.span.line) + ", column " +
                         std::to_string(error.span.column) + ")"),
      error_(std::move(error)) {}

ParsedWord parse_word_ex(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty())
    raise_at({1, 1, 1}, "missing header: expected 'link' or 'tangle'",
             {"link", "tangle"});

  ParsedWord out;
  const auto& header = lines[0];
  if (header[0].text == "link") {
    expect_end(header, 1);
  } else if (header[0].text == "tangle") {
    if (header.size() < 2)
      raise(header[0], "tangle header needs bottom= and top=",
            {"bottom=INT"});
    out.word.bottom_strands = parse_keyed_int(header[1], "bottom");
    if (header.size() < 3)
      raise(header[1], "tangle header needs top=", {"top=INT"});
    out.word.top_strands = parse_keyed_int(header[2], "top");
    expect_end(header, 3);
  } else {
    raise(header[0], "unknown header '" + header[0].text + "'",
          {"link", "tangle"});
  }

  for (size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const std::string& kw = line[0].text;
    Event event;
    if (kw == "cup")
      event.kind = EventKind::cup;
    else if (kw == "cap")
      event.kind = EventKind::cap;
    else if (kw == "x+")
      event = cross_pos(0);
    else if (kw == "x-")
      event = cross_neg(0);
    else
      raise(line[0], "unknown event '" + kw + "'",
            {"cup", "cap", "x+", "x-"});
    if (line.size() < 2)
      raise(line[0], kw + " needs a position", {"INT"});
    event.position = parse_int(line[1]);
    expect_end(line, 2);
    out.word.events.push_back(event);
    out.event_lines.push_back(line[0].line);
  }

  const ValidationReport report = validate(out.word);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    const int line = v.event > 0 ? out.event_lines[v.event - 1]
                                 : lines[0].front().line;
    raise_at({line, 1, 1}, v.message);
  }
  return out;
}

MorseWord parse_word(std::string_view text) {
  return parse_word_ex(text).word;
}

std::string serialize_word(const MorseWord& word) {
  require_valid(word);
  std::ostringstream os;
  if (word.is_link())
    os << "link\n";
  else
    os << "tangle bottom=" << word.bottom_strands
       << " top=" << word.top_strands << "\n";
  for (const Event& e : word.events) {
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
    os << e.position << "\n";
  }
  return os.str();
}

ParsedSchematic parse_schematic_ex(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty())
    raise_at({1, 1, 1}, "missing header: expected 'cdisk cut|compress'",
             {"cdisk"});

  ParsedSchematic out;
  size_t li = 0;

  const auto& header = lines[li++];
  if (header[0].text != "cdisk")
    raise(header[0], "unknown header '" + header[0].text + "'", {"cdisk"});
  if (header.size() < 2)
    raise(header[0], "cdisk header needs a disk kind", {"cut", "compress"});
  if (header[1].text == "cut")
    out.schematic.disk = DiskKind::cut;
  else if (header[1].text == "compress")
    out.schematic.disk = DiskKind::compress;
  else
    raise(header[1], "unknown disk kind '" + header[1].text + "'",
          {"cut", "compress"});
  expect_end(header, 2);

  if (li >= lines.size())
    raise_at(line_span(header), "missing base line", {"base"});
  const auto& base = lines[li++];
  if (base[0].text != "base")
    raise(base[0], "expected 'base alpha=INT beta=INT'", {"base"});
  if (base.size() < 3)
    raise(base[0], "base line needs alpha= and beta=",
          {"alpha=INT", "beta=INT"});
  out.schematic.base_alpha = parse_keyed_int(base[1], "alpha");
  out.schematic.base_beta = parse_keyed_int(base[2], "beta");
  expect_end(base, 3);

  if (li >= lines.size())
    raise_at(line_span(base), "missing inside line", {"inside=alpha"});
  const auto& inside = lines[li++];
  if (inside[0].text == "inside=alpha")
    out.schematic.inside = Side::alpha;
  else if (inside[0].text == "inside=beta")
    out.schematic.inside = Side::beta;
  else
    raise(inside[0], "expected 'inside=alpha' or 'inside=beta'",
          {"inside=alpha", "inside=beta"});
  expect_end(inside, 1);

  for (; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const std::string& kw = line[0].text;
    SchematicEvent event;
    if (kw == "transfer") {
      event = transfer();
      expect_end(line, 1);
    } else if (kw == "min" || kw == "max") {
      event.kind =
          kw == "min" ? SchematicEventKind::min : SchematicEventKind::max;
      if (line.size() < 2)
        raise(line[0], kw + " needs a side", {"alpha", "beta"});
      if (line[1].text == "alpha")
        event.side = Side::alpha;
      else if (line[1].text == "beta")
        event.side = Side::beta;
      else
        raise(line[1], "unknown side '" + line[1].text + "'",
              {"alpha", "beta"});
      size_t used = 2;
      if (line.size() > 2 && line[2].text == "tau") {
        event.on_tau = true;
        used = 3;
      }
      expect_end(line, used);
    } else {
      raise(line[0], "unknown event '" + kw + "'",
            {"min", "max", "transfer"});
    }
    out.schematic.events.push_back(event);
    out.event_lines.push_back(line[0].line);
  }

  const ValidationReport report = validate_schematic(out.schematic);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    const int line = v.event > 0 ? out.event_lines[v.event - 1]
                                 : lines[0].front().line;
    raise_at({line, 1, 1}, v.message);
  }
  return out;
}

CDiskSchematic parse_schematic(std::string_view text) {
  return parse_schematic_ex(text).schematic;
}

std::string serialize_schematic(const CDiskSchematic& s) {
  require_valid(s);
  std::ostringstream os;
  os << "cdisk " << (s.disk == DiskKind::cut ? "cut" : "compress") << "\n";
  os << "base alpha=" << s.base_alpha << " beta=" << s.base_beta << "\n";
  os << "inside=" << (s.inside == Side::alpha ? "alpha" : "beta") << "\n";
  for (const SchematicEvent& e : s.events) {
    switch (e.kind) {
      case SchematicEventKind::transfer:
        os << "transfer";
        break;
      case SchematicEventKind::min:
      case SchematicEventKind::max:
        os << (e.kind == SchematicEventKind::min ? "min " : "max ")
           << (e.side == Side::alpha ? "alpha" : "beta");
        if (e.on_tau) os << " tau";
        break;
    }
    os << "\n";
  }
  return os.str();
}

nlohmann::json report_skeleton() {
  nlohmann::json j;
  j["width"] = nullptr;
  j["levels"] = nlohmann::json::array();
  j["boxes"] = nlohmann::json::array();
  j["moves"] = nlohmann::json::array();
  j["certificate"] = nullptr;
  return j;
}

bool report_schema_ok(const nlohmann::json& j) {
  if (!j.is_object()) return false;
  if (!j.contains("width") ||
      !(j["width"].is_number_integer() || j["width"].is_null()))
    return false;
  for (const char* key : {"levels", "boxes", "moves"})
    if (!j.contains(key) || !j[key].is_array()) return false;
  if (!j.contains("certificate") ||
      !(j["certificate"].is_object() || j["certificate"].is_null()))
    return false;
  return true;
}

}  // namespace widthlab
