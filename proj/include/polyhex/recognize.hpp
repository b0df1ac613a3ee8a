#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "polyhex/polyomino.hpp"

namespace polyhex {

// Cells of `within` reachable from `start` by repeated generalized-upper-
// neighbour steps that stay inside `within`. When `start` is a source cell of
// `within` this is the greatest directed animal in `within` rooted at it.
// `within` must be sorted; throws Error(CellNotInSet) if start is absent.
CellSet upward_closure(std::span<const Cell> within, Cell start);
inline CellSet upward_closure(const Polyomino& p, Cell start) {
  return upward_closure(p.cells(), start);
}

bool is_directed_animal(const Polyomino& p);

struct DirectedPart {
  Cell source;
  CellSet body;

  friend bool operator==(const DirectedPart&, const DirectedPart&) = default;
};

// Source-rooted directed components of a polyomino, left to right, plus the
// cells no component reached.
struct Decomposition {
  std::vector<DirectedPart> parts;
  CellSet leftover;

  std::size_t k() const { return parts.size(); }
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition canonical_decomposition(const Polyomino& p);

// Per-component conditions, evaluated for every j in 2..k without short
// circuiting. Index 0 of each vector corresponds to j = 2.
struct ConditionReport {
  bool covers = false;
  std::vector<bool> proj_left;        // source of A_{j-1} is >= 2 columns left of all of A_j
  std::vector<bool> union_dominates;  // A_1 u ... u A_{j-1} dominates A_j
  std::vector<bool> edge_shared;      // A_1 u ... u A_{j-1} shares an edge with A_j
  std::vector<bool> pred_dominates;   // A_{j-1} dominates A_j

  bool multi_directed() const;
  bool stacked_directed() const;
};

// Throws Error(MismatchedDecomposition) unless the bodies and leftover of d
// partition p and each part's source lies in its body.
ConditionReport verify_conditions(const Polyomino& p, const Decomposition& d);

bool is_multi_directed(const Polyomino& p);
bool is_stacked_directed(const Polyomino& p);

struct ClassLabel {
  bool is_polyomino = true;
  bool is_column_convex = false;
  bool is_directed = false;
  bool is_stacked = false;
  bool is_multi = false;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

ClassLabel classify(const Polyomino& p);

}  // namespace polyhex
