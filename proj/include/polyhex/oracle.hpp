#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "polyhex/polyomino.hpp"
#include "polyhex/recognize.hpp"

// Slow, literal reference implementations used to cross-check the fast paths.
// Nothing here calls the neighbourhood, domination, closure or enumeration
// code it is meant to validate; the shared surface is the Cell and Polyomino
// value types (and make_polyomino to hand results back).
namespace polyhex::oracle {

inline constexpr int kRecursionBound = 9;
inline constexpr int kNaiveBound = 8;
inline constexpr int kWitnessBound = 12;

// All directed animals with n cells, built by the recursion: one cell, then
// repeatedly adjoin a generalized upper neighbour of some existing cell.
std::set<Polyomino> directed_by_recursion(int n);

// All n-cell translation classes, grown one neighbour at a time and
// deduplicated after canonicalization.
std::set<Polyomino> naive_enumerate(int n);

struct WitnessSearchResult {
  bool found = false;
  std::optional<Decomposition> witness;  // leftover is always empty
  std::uint64_t witnesses = 0;           // total count, when counting was requested
};

// Exhaustive search for an ordered sequence of pairwise-disjoint directed
// animals covering p that satisfies the multi-directed conditions read
// literally. Components are tried by ascending source column, then ascending
// sorted cell sequence; the first hit is returned. With count_all the search
// continues and reports how many sequences qualify.
WitnessSearchResult witness_search(const Polyomino& p, int k_max, bool count_all = false);

// Literal domination: c lies i >= 0 units above a generalized upper neighbour
// of d, for some i bounded by the vertical span of the arguments.
bool dominates_literal(Cell c, Cell d);

// Directedness straight from the recursion, memoized over subsets.
bool is_directed_by_recursion(const std::vector<Cell>& cells);

}  // namespace polyhex::oracle
