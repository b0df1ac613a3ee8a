#include "polyhex/cell_list.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include "polyhex/error.hpp"

namespace polyhex {
namespace {

bool is_blank(char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, std::string_view token, const char* why) {
  std::ostringstream os;
  os << "line " << line << ": " << why << ": '" << token << "'";
  throw Error(ErrorCode::ParseError, os.str());
}

int parse_int(std::string_view& rest, std::size_t line, std::string_view entry) {
  rest = trim(rest);
  const char* first = rest.data();
  const char* last = rest.data() + rest.size();
  if (first != last && *first == '+') ++first;
  int value = 0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first) fail(line, entry, "expected two integers");
  rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
  return value;
}

}  // namespace

std::vector<Cell> parse_cell_list(std::string_view text) {
  std::vector<Cell> out;
  std::unordered_set<Cell> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++line_no;
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty() || line.front() == '#') continue;

    while (!line.empty()) {
      const auto semi = line.find(';');
      const std::string_view entry = trim(line.substr(0, semi));
      line = semi == std::string_view::npos ? std::string_view{} : line.substr(semi + 1);
      if (entry.empty()) continue;

      std::string_view rest = entry;
      const int x = parse_int(rest, line_no, entry);
      if (rest.empty() || !is_blank(rest.front())) fail(line_no, entry, "expected two integers");
      const int y = parse_int(rest, line_no, entry);
      if (!trim(rest).empty()) fail(line_no, entry, "trailing characters");
      const Cell c{x, y};
      if (!seen.insert(c).second) {
        std::ostringstream os;
        os << "line " << line_no << ": duplicate cell " << x << ' ' << y;
        throw Error(ErrorCode::DuplicateCell, os.str());
      }
      out.push_back(c);
    }
  }
  return out;
}

std::vector<Cell> read_cell_list(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_cell_list(text);
}

std::string format_listing(std::span<const Cell> cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(cells[i].x);
    out += ' ';
    out += std::to_string(cells[i].y);
  }
  return out;
}

std::string format_cell_list(std::span<const Cell> cells) {
  std::string out;
  for (const Cell c : cells) {
    out += std::to_string(c.x);
    out += ' ';
    out += std::to_string(c.y);
    out += '\n';
  }
  return out;
}

}  // namespace polyhex
