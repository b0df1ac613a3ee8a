#include "polyhex/polyomino.hpp"

#include <algorithm>
#include <limits>

#include "polyhex/error.hpp"

namespace polyhex {

CellSet make_cell_set(std::span<const Cell> cells) {
  CellSet out(cells.begin(), cells.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains(std::span<const Cell> sorted, Cell c) {
  return std::binary_search(sorted.begin(), sorted.end(), c);
}

CellSet set_difference(std::span<const Cell> a, std::span<const Cell> b) {
  CellSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

CellSet set_union(std::span<const Cell> a, std::span<const Cell> b) {
  CellSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

CellSet translate(std::span<const Cell> cells, Cell offset) {
  CellSet out;
  out.reserve(cells.size());
  for (const Cell c : cells) out.push_back(c + offset);
  return out;
}

std::size_t Polyomino::index_of(Cell c) const {
  const auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
  if (it == cells_.end() || *it != c) return cells_.size();
  return static_cast<std::size_t>(it - cells_.begin());
}

std::vector<CellSet> connected_components(std::span<const Cell> cells) {
  const CellSet sorted = make_cell_set(cells);
  std::vector<int> component(sorted.size(), -1);
  std::vector<CellSet> out;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < sorted.size(); ++start) {
    if (component[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    component[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      out.back().push_back(sorted[i]);
      for (const Cell n : neighbours(sorted[i])) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), n);
        if (it == sorted.end() || *it != n) continue;
        const auto j = static_cast<std::size_t>(it - sorted.begin());
        if (component[j] < 0) {
          component[j] = id;
          stack.push_back(j);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

Polyomino make_polyomino_unchecked(CellSet cells) {
  int min_x = std::numeric_limits<int>::max();
  int min_y = std::numeric_limits<int>::max();
  for (const Cell c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
  }
  for (Cell& c : cells) c = {c.x - min_x, c.y - min_y};
  std::sort(cells.begin(), cells.end());
  return Polyomino(std::move(cells));
}

Polyomino make_polyomino(std::span<const Cell> cells) {
  if (cells.empty()) throw Error(ErrorCode::EmptyInput, "polyomino needs at least one cell");
  CellSet set = make_cell_set(cells);
  if (set.size() != cells.size())
    throw Error(ErrorCode::DuplicateCell, "cell list contains duplicate cells");
  auto parts = connected_components(set);
  if (parts.size() > 1) throw DisconnectedError(std::move(parts));
  return make_polyomino_unchecked(std::move(set));
}

std::vector<Column> columns(const Polyomino& p) {
  std::vector<Column> out;
  for (const Cell c : p.cells()) {
    if (out.empty() || out.back().x != c.x) out.push_back({c.x, {}});
    out.back().ys.push_back(c.y);
  }
  return out;
}

bool is_column_convex(const Polyomino& p) {
  const auto cells = p.cells();
  for (std::size_t i = 1; i < cells.size(); ++i)
    if (cells[i].x == cells[i - 1].x && cells[i].y != cells[i - 1].y + 1) return false;
  return true;
}

CellSet source_cells(std::span<const Cell> cells) {
  CellSet out;
  for (const Cell c : cells) {
    const bool dominates_any = std::any_of(cells.begin(), cells.end(),
                                           [c](Cell d) { return dominates_cell(c, d); });
    if (!dominates_any) out.push_back(c);
  }
  return out;
}

bool dominates_set(std::span<const Cell> s, std::span<const Cell> t) {
  if (s.empty() || t.empty())
    throw Error(ErrorCode::OverlappingSets, "domination between sets needs two nonempty sets");
  for (const Cell a : s)
    if (std::find(t.begin(), t.end(), a) != t.end())
      throw Error(ErrorCode::OverlappingSets, "sets share a cell");
  bool forward = false;
  for (const Cell a : s) {
    for (const Cell b : t) {
      if (dominates_cell(b, a)) return false;
      forward = forward || dominates_cell(a, b);
    }
  }
  return forward;
}

}  // namespace polyhex
