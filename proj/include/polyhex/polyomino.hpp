#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polyhex/cell.hpp"

namespace polyhex {

// Sorted, duplicate-free cells. Used for arbitrary (not necessarily
// connected or normalized) cell sets such as decomposition bodies.
using CellSet = std::vector<Cell>;

CellSet make_cell_set(std::span<const Cell> cells);
bool contains(std::span<const Cell> sorted, Cell c);
CellSet set_difference(std::span<const Cell> a, std::span<const Cell> b);
CellSet set_union(std::span<const Cell> a, std::span<const Cell> b);
CellSet translate(std::span<const Cell> cells, Cell offset);

// A hexagonal-celled polyomino, up to translation. Instances always hold the
// canonical representative: nonempty, edge-connected, min x == 0, min y == 0,
// cells sorted by (x, y).
class Polyomino {
 public:
  std::span<const Cell> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(Cell c) const { return polyhex::contains(cells_, c); }
  // Position of c in cells(), or size() when absent.
  std::size_t index_of(Cell c) const;

  friend bool operator==(const Polyomino&, const Polyomino&) = default;
  friend auto operator<=>(const Polyomino& a, const Polyomino& b) {
    return a.cells_ <=> b.cells_;
  }

 private:
  friend Polyomino make_polyomino(std::span<const Cell>);
  friend Polyomino make_polyomino_unchecked(CellSet);
  explicit Polyomino(CellSet cells) : cells_(std::move(cells)) {}

  CellSet cells_;
};

// Validates and canonicalizes. Throws Error(EmptyInput), Error(DuplicateCell)
// or DisconnectedError.
Polyomino make_polyomino(std::span<const Cell> cells);

// Normalizes the translation of a cell set already known to be connected and
// duplicate-free. Hot path for the enumerator.
Polyomino make_polyomino_unchecked(CellSet cells);

// Edge-connected components, each sorted, ordered by their smallest cell.
std::vector<CellSet> connected_components(std::span<const Cell> cells);

struct Column {
  int x = 0;
  std::vector<int> ys;

  friend bool operator==(const Column&, const Column&) = default;
};

std::vector<Column> columns(const Polyomino& p);
bool is_column_convex(const Polyomino& p);

// Cells that dominate no other cell of the set, in (x, y) order.
CellSet source_cells(std::span<const Cell> cells);
inline CellSet source_cells(const Polyomino& p) { return source_cells(p.cells()); }

// Some cell of s dominates a cell of t and no cell of t dominates a cell of s.
// Throws Error(OverlappingSets) if the sets intersect or either is empty.
bool dominates_set(std::span<const Cell> s, std::span<const Cell> t);

}  // namespace polyhex
