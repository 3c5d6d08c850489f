#include "hallkit/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace hallkit {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Non-blank lines with their 1-based line numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto line = text.substr(pos, end - pos);
    if (!trim(line).empty()) out.push_back({number, std::string(line)});
    pos = end + 1;
  }
  return out;
}

std::size_t parse_positive(const std::string& s, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + s + "'");
  }
  return value;
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto end = s.find(',', pos);
    out.push_back(trim(s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos)));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Relation parse_relmat(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty relation file");
  const std::size_t n = parse_positive(strip_spaces(lines[0].text), lines[0].number, "dimension");
  if (n == 0 || n > Relation::kMaxDim) {
    throw ParseError(lines[0].number, "dimension must be in [1, 64], got " + std::to_string(n));
  }
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 >= lines.size()) {
      throw ParseError(lines.back().number + 1, "expected " + std::to_string(n) + " rows, got " + std::to_string(i));
    }
    const auto& line = lines[i + 1];
    const auto row = strip_spaces(line.text);
    if (row.size() != n) {
      throw ParseError(line.number,
                       "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] == '1') r.set(i, j);
      else if (row[j] != '0') throw ParseError(line.number, std::string("invalid character '") + row[j] + "'");
    }
  }
  if (lines.size() > n + 1) throw ParseError(lines[n + 1].number, "unexpected content after the last row");
  return r;
}

std::string emit_relmat(const Relation& r) {
  std::string out = std::to_string(r.dim()) + "\n";
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = 0; j < r.dim(); ++j) out.push_back(r.test(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

Relation parse_relation_file(const std::filesystem::path& path) { return parse_relmat(read_text_file(path)); }

FiniteSemigroup parse_cayley(std::string_view text, bool require_identity) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty cayley file");

  std::optional<Line> trailer;
  if (trim(lines.back().text).rfind("identity=", 0) == 0) {
    trailer = lines.back();
    lines.pop_back();
  }
  if (lines.empty()) throw ParseError(trailer->number, "missing label line");
  auto labels = split_commas(lines[0].text);
  const std::size_t k = labels.size();
  for (const auto& l : labels) {
    if (l.empty()) throw ParseError(lines[0].number, "empty label");
  }
  if (lines.size() != k + 1) {
    const std::size_t at = lines.size() > k + 1 ? lines[k + 1].number : lines.back().number + 1;
    throw ParseError(at, "expected " + std::to_string(k) + " table rows, got " + std::to_string(lines.size() - 1));
  }
  std::vector<Index> table;
  table.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& line = lines[i + 1];
    const auto cells = split_commas(line.text);
    if (cells.size() != k) {
      throw ParseError(line.number, "row has " + std::to_string(cells.size()) + " entries, expected " + std::to_string(k));
    }
    for (const auto& c : cells) {
      const auto v = parse_positive(c, line.number, "element index");
      if (v < 1 || v > k) throw ParseError(line.number, "element index " + c + " out of range 1.." + std::to_string(k));
      table.push_back(static_cast<Index>(v - 1));
    }
  }
  if (k > kMaxTableSize) throw CapacityError("cayley table has more than 5000 elements");

  FiniteSemigroup s(std::move(labels), std::move(table));
  if (trailer) {
    const auto name = trim(trim(trailer->text).substr(std::string("identity=").size()));
    const auto idx = s.find(name);
    if (!idx) throw ParseError(trailer->number, "identity label '" + name + "' is not an element");
    if (s.identity() != idx) throw ParseError(trailer->number, "'" + name + "' is not an identity element");
  } else if (require_identity) {
    throw ParseError(lines.back().number + 1, "missing identity=<label> trailer");
  }
  return s;
}

std::string emit_cayley(const FiniteSemigroup& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& l = s.labels()[i];
    if (l.find_first_of(",\n") != std::string::npos || trim(l) != l || l.rfind("identity=", 0) == 0) {
      throw Error("label '" + l + "' cannot be written in cayley v1");
    }
    if (i) out.push_back(',');
    out += s.labels()[i];
  }
  out.push_back('\n');
  for (Index x = 0; x < s.size(); ++x) {
    for (Index y = 0; y < s.size(); ++y) {
      if (y) out.push_back(',');
      out += std::to_string(s.product(x, y) + 1);
    }
    out.push_back('\n');
  }
  if (s.identity()) out += "identity=" + s.label(*s.identity()) + "\n";
  return out;
}

FiniteSemigroup parse_cayley_file(const std::filesystem::path& path, bool require_identity) {
  return parse_cayley(read_text_file(path), require_identity);
}

}  // namespace hallkit
