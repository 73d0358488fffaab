#include "maxcover/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace maxcover {

namespace {

struct Line {
  std::size_t number = 0;  // 1-based
  std::string_view text;
};

bool is_blank_or_comment(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
  return i == s.size() || s[i] == '#';
}

std::vector<std::string_view> tokenize(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_u64(std::string_view token, std::size_t line, std::string_view what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string(what) + " is not a non-negative integer: '" +
                               std::string(token) + "'");
  }
  return value;
}

std::uint32_t parse_u32(std::string_view token, std::size_t line, std::string_view what) {
  const std::uint64_t value = parse_u64(token, line, what);
  if (value > 0xFFFFFFFFull) {
    throw ParseError(line, std::string(what) + " out of range: '" + std::string(token) + "'");
  }
  return static_cast<std::uint32_t>(value);
}

}  // namespace

Instance parse_instance(std::string_view text) {
  // Split into content lines, keeping 1-based numbers for diagnostics.
  std::vector<Line> lines;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  std::size_t last_line = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    ++line_number;
    const std::string_view line = text.substr(pos, end - pos);
    if (!is_blank_or_comment(line)) lines.push_back({line_number, line});
    last_line = line_number;
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }

  if (lines.empty()) throw ParseError(last_line == 0 ? 1 : last_line, "missing 'mcp' header");

  const auto header = tokenize(lines[0].text);
  if (header.size() != 3 || header[0] != "mcp") {
    throw ParseError(lines[0].number, "malformed header, expected 'mcp <universe_size> <num_sets>'");
  }
  const std::uint32_t universe = parse_u32(header[1], lines[0].number, "universe size");
  const std::uint32_t num_sets = parse_u32(header[2], lines[0].number, "set count");

  if (lines.size() - 1 != num_sets) {
    const bool too_few = lines.size() - 1 < num_sets;
    const std::size_t where = too_few ? last_line : lines[num_sets + 1].number;
    throw ParseError(where, "set count mismatch: header declares " + std::to_string(num_sets) +
                                " sets, found " + std::to_string(lines.size() - 1));
  }

  std::vector<std::vector<std::uint32_t>> sets;
  sets.reserve(num_sets);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tokens = tokenize(lines[i].text);
    const std::size_t ln = lines[i].number;
    if (tokens.empty()) throw ParseError(ln, "empty set line");
    const std::uint64_t declared = parse_u64(tokens[0], ln, "set size");
    if (tokens.size() - 1 != declared) {
      throw ParseError(ln, "set size mismatch: declared " + std::to_string(declared) +
                               " elements, found " + std::to_string(tokens.size() - 1));
    }
    std::vector<std::uint32_t> elements;
    elements.reserve(tokens.size() - 1);
    BitVec seen(universe);
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      const std::uint32_t e = parse_u32(tokens[t], ln, "element id");
      if (e >= universe) {
        throw ParseError(ln, "element id " + std::to_string(e) + " >= universe size " +
                                 std::to_string(universe));
      }
      if (seen.test(e)) throw ParseError(ln, "duplicate element " + std::to_string(e));
      seen.set(e);
      elements.push_back(e);
    }
    sets.push_back(std::move(elements));
  }

  return Instance(universe, sets);
}

std::string write_instance(const Instance& instance) {
  std::ostringstream out;
  out << "mcp " << instance.universe_size() << ' ' << instance.set_count() << '\n';
  for (std::size_t i = 0; i < instance.set_count(); ++i) {
    const auto elements = instance.set_elements(i);
    out << elements.size();
    for (const std::uint32_t e : elements) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

Instance load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("read failure on '" + path.string() + "'");
  return parse_instance(buffer.str());
}

void save_instance_file(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << write_instance(instance);
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

}  // namespace maxcover
