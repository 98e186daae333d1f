#include "streamfix/serialize.h"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "streamfix/errors.h"

namespace streamfix {

namespace {

using Json = nlohmann::ordered_json;

bool IsIdentifierStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIdentifierChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool IsAtomName(std::string_view s) {
  if (s.empty() || !IsIdentifierStart(s[0])) return false;
  for (char c : s) {
    if (!IsIdentifierChar(c)) return false;
  }
  return s != "true";
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> SplitWords(std::string_view line) {
  std::vector<Token> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) words.push_back({line.substr(start, i - start), start + 1});
  }
  return words;
}

Json StreamJson(const Stream& stream) {
  Json entries = Json::array();
  for (const auto& [t, atoms] : stream.entries()) {
    entries.push_back({{"t", t}, {"atoms", atoms}});
  }
  return entries;
}

}  // namespace

StreamFile ParseStreamFile(std::string_view text) {
  StreamFile file;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      const auto words = SplitWords(line);
      if (words.empty()) continue;
      throw ParseError("expected 't: atoms' or 'gamma: atoms'", line_no,
                       words[0].column, {":"});
    }
    const auto head = SplitWords(line.substr(0, colon));
    if (head.size() != 1) {
      throw ParseError("expected a time point or 'gamma' before ':'", line_no,
                       head.empty() ? colon + 1 : head[1 % head.size()].column,
                       {"gamma", "number"});
    }
    std::vector<Token> atoms = SplitWords(line.substr(colon + 1));
    for (auto& w : atoms) {
      w.column += colon + 1;
      if (!IsAtomName(w.text)) {
        throw ParseError("invalid atom '" + std::string(w.text) + "'", line_no,
                         w.column, {"identifier"});
      }
    }
    if (head[0].text == "gamma") {
      if (!file.gamma) file.gamma.emplace();
      for (const auto& w : atoms) file.gamma->insert(std::string(w.text));
      continue;
    }
    TimePoint t = 0;
    const char* first = head[0].text.data();
    const char* last = first + head[0].text.size();
    const auto [ptr, ec] = std::from_chars(first, last, t);
    if (ec != std::errc() || ptr != last) {
      throw ParseError("invalid time point '" + std::string(head[0].text) + "'",
                       line_no, head[0].column, {"gamma", "number"});
    }
    if (t == 0) {
      throw ParseError("time points start at 1", line_no, head[0].column);
    }
    for (const auto& w : atoms) file.stream.Insert(t, std::string(w.text));
  }
  return file;
}

std::string FormatStreamFile(const Stream& stream,
                             const std::optional<AtomSet>& gamma) {
  std::ostringstream out;
  if (gamma) {
    out << "gamma:";
    for (const auto& a : *gamma) out << ' ' << a;
    out << '\n';
  }
  for (const auto& [t, atoms] : stream.entries()) {
    out << t << ':';
    for (const auto& a : atoms) out << ' ' << a;
    out << '\n';
  }
  return out.str();
}

std::string StreamToJson(const Stream& stream) {
  return StreamJson(stream).dump();
}

Stream StreamFromJson(std::string_view text) {
  Json json;
  try {
    json = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), 1, e.byte);
  }
  if (!json.is_array()) throw ParseError("expected a JSON array", 1, 1, {"["});
  Stream stream;
  for (const auto& entry : json) {
    if (!entry.is_object() || !entry.contains("t") ||
        !entry.contains("atoms") || !entry["t"].is_number_unsigned() ||
        !entry["atoms"].is_array()) {
      throw ParseError("expected {\"t\": int, \"atoms\": [string]}", 1, 1);
    }
    const auto t = entry["t"].get<TimePoint>();
    if (t == 0) throw ParseError("time points start at 1", 1, 1);
    for (const auto& a : entry["atoms"]) {
      if (!a.is_string() || !IsAtomName(a.get<std::string>())) {
        throw ParseError("invalid atom " + a.dump(), 1, 1);
      }
      stream.Insert(t, a.get<std::string>());
    }
  }
  return stream;
}

std::string TraceToJson(const FixpointTrace& trace) {
  Json stages = Json::array();
  for (const auto& s : trace.stages) stages.push_back(StreamJson(s));
  return Json{{"stages", stages}, {"converged", trace.converged}}.dump();
}

std::string PartitioningToJson(const Partitioning& s) {
  Json levels = Json::array();
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    levels.push_back({{"level", i}, {"stream", StreamJson(s.parts[i])}});
  }
  return Json{{"levels", levels}}.dump();
}

}  // namespace streamfix
