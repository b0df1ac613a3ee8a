#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "polyhex/polyomino.hpp"

namespace polyhex {

inline constexpr int kDefaultSizeBound = 12;

// Throws Error(SizeOverflow) when n is outside [1, bound].
void check_size(int n, int bound);

// Redelmeier enumeration of fixed polyhexes with up to n_max cells. The walk
// roots every animal at its (y, x)-smallest cell, which is placed at the
// origin; only cells with y > 0, or y == 0 and x > 0, may join. Every
// translation class is reached by exactly one node of the search tree.
//
// The tree can be cut at a fixed size `split`: node t at that size (counted in
// walk order) owns the subtree below it. Disjoint subtrees are what the
// parallel census hands to workers.
class RedelmeierWalker {
 public:
  // Receives the cells of the current node in insertion order (not sorted or
  // normalized); the span is only valid during the call.
  using Visitor = std::function<void(std::span<const Cell>)>;

  explicit RedelmeierWalker(int n_max);

  // Visits every node.
  void walk_all(const Visitor& visit);
  // Visits nodes smaller than `split` and returns how many nodes have size
  // exactly `split`.
  std::int64_t walk_prefix(int split, const Visitor& visit);
  // Visits subtree number t at size `split`, including its root.
  void walk_subtree(int split, std::int64_t t, const Visitor& visit);

 private:
  struct Mode {
    int split = 0;             // 0: no cut
    std::int64_t target = -1;  // -1: visit no subtree at the cut, only count
    std::int64_t seen = 0;
  };

  int index(Cell c) const { return (c.y + 1) * width_ + (c.x + n_max_ + 1); }
  bool allowed(Cell c) const { return c.y > 0 || (c.y == 0 && c.x >= 0); }
  void descend(std::vector<Cell>& untried, Mode& mode, const Visitor& visit);

  int n_max_;
  int width_;
  std::vector<char> marked_;
  std::vector<Cell> current_;
};

// Each translation class of n-cell polyhexes once, in ascending lexicographic
// order of the sorted canonical cell sequence.
void enumerate_fixed(int n, const std::function<void(const Polyomino&)>& visit,
                     int size_bound = kDefaultSizeBound);
std::vector<Polyomino> enumerate_fixed(int n, int size_bound = kDefaultSizeBound);

enum ClassMask : unsigned {
  kDirected = 1u << 0,
  kStacked = 1u << 1,
  kMulti = 1u << 2,
  kColumnConvex = 1u << 3,
  kAllClasses = kDirected | kStacked | kMulti | kColumnConvex,
};

struct CensusConfig {
  int n_max = 1;
  int workers = 1;
  unsigned classes = kAllClasses;
  int size_bound = kDefaultSizeBound;
};

// Counts for classes not requested in the config stay empty.
struct CensusRow {
  int n = 0;
  std::uint64_t total = 0;
  std::optional<std::uint64_t> directed;
  std::optional<std::uint64_t> stacked;
  std::optional<std::uint64_t> multi;
  std::optional<std::uint64_t> column_convex;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

// One row per size 1..n_max. Uses the parallel kernel when workers > 1.
std::vector<CensusRow> census(const CensusConfig& config);

// Single-threaded reference: one uncut walk of the whole tree.
std::vector<CensusRow> census_serial(const CensusConfig& config);

// Prefix-partitioned walk: sizes below the cut are counted serially, each
// subtree at the cut is an OpenMP task, per-task rows are merged in task order.
std::vector<CensusRow> census_parallel(const CensusConfig& config);

enum class Separator {
  PolyominoNotMulti,
  MultiNotStacked,
  StackedNotDirected,
  MultiNotColumnConvex,
};

const char* to_string(Separator s);

// Smallest, then lexicographically first, polyomino of size <= n_max
// separating each class pair; absent keys were not found in range.
std::map<Separator, Polyomino> find_separators(int n_max, int size_bound = kDefaultSizeBound);

}  // namespace polyhex
