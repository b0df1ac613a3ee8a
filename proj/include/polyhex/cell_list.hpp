#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyhex/cell.hpp"

namespace polyhex {

// Cell-list text format: one "x y" pair of decimal integers per line, lines
// starting with '#' and blank lines ignored. A ';' also separates cells, so a
// listing line ("0 0;0 1") parses as a cell list. Cells come back in input
// order. Throws Error(ParseError) on malformed text and Error(DuplicateCell)
// on repeats.
std::vector<Cell> parse_cell_list(std::string_view text);
std::vector<Cell> read_cell_list(std::istream& in);

// "x y;x y;..." in the order given.
std::string format_listing(std::span<const Cell> cells);

// One "x y" line per cell.
std::string format_cell_list(std::span<const Cell> cells);

}  // namespace polyhex
