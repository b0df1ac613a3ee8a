#include "polyhex/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>

#include "polyhex/error.hpp"

namespace polyhex::oracle {
namespace {

// Geometry of the tiling with circumradius 1 and two horizontal edges per
// cell: the center of (x, y) is at (3x/2, sqrt(3) * (y + x/2)). Two cells
// share an edge iff their centers are sqrt(3) apart; squared and scaled by 4
// that is 3*dx^2 + (2*dy + dx)^2 == 4.
bool share_edge(Cell a, Cell b) {
  const int dx = b.x - a.x;
  const int dy = b.y - a.y;
  return 3 * dx * dx + (2 * dy + dx) * (2 * dy + dx) == 4;
}

// Center height over sqrt(3)/2; only comparisons matter.
int doubled_height(Cell c) { return 2 * c.y + c.x; }

// Neighbours of c found by scanning the 3x3 box of axial offsets.
std::vector<Cell> lattice_neighbours(Cell c) {
  std::vector<Cell> out;
  for (int dx = -1; dx <= 1; ++dx)
    for (int dy = -1; dy <= 1; ++dy) {
      const Cell n{c.x + dx, c.y + dy};
      if (share_edge(c, n)) out.push_back(n);
    }
  return out;
}

// Upper-left, upper and upper-right neighbours: the three with a higher center.
std::vector<Cell> upper_neighbours(Cell c) {
  std::vector<Cell> out;
  for (const Cell n : lattice_neighbours(c))
    if (doubled_height(n) > doubled_height(c)) out.push_back(n);
  return out;
}

bool is_upper_neighbour_of(Cell c, Cell d) {
  for (const Cell u : upper_neighbours(d))
    if (u == c) return true;
  return false;
}

using Shape = std::vector<Cell>;

Shape canonical(Shape cells) {
  int min_x = cells.front().x;
  int min_y = cells.front().y;
  for (const Cell c : cells) {
    min_x = std::min(min_x, c.x);
    min_y = std::min(min_y, c.y);
  }
  for (Cell& c : cells) c = {c.x - min_x, c.y - min_y};
  std::sort(cells.begin(), cells.end());
  return cells;
}

bool has(const Shape& cells, Cell c) {
  return std::find(cells.begin(), cells.end(), c) != cells.end();
}

std::set<Polyomino> to_polyominoes(const std::set<Shape>& shapes) {
  std::set<Polyomino> out;
  for (const Shape& s : shapes) out.insert(make_polyomino(s));
  return out;
}

template <class Step>
std::set<Polyomino> grow(int n, int bound, Step step) {
  if (n < 1 || n > bound) {
    std::ostringstream os;
    os << "oracle size " << n << " is outside 1.." << bound;
    throw Error(ErrorCode::SizeOverflow, os.str());
  }
  std::set<Shape> level{Shape{Cell{0, 0}}};
  for (int size = 1; size < n; ++size) {
    std::set<Shape> next;
    for (const Shape& shape : level)
      for (const Cell c : shape)
        for (const Cell added : step(c)) {
          if (has(shape, added)) continue;
          Shape bigger = shape;
          bigger.push_back(added);
          next.insert(canonical(std::move(bigger)));
        }
    level = std::move(next);
  }
  return to_polyominoes(level);
}

bool dominates_literal_set(const std::vector<Cell>& s, const std::vector<Cell>& t) {
  bool some = false;
  for (const Cell a : s)
    for (const Cell b : t) {
      if (dominates_literal(b, a)) return false;
      some = some || dominates_literal(a, b);
    }
  return some;
}

bool share_any_edge(const std::vector<Cell>& a, const std::vector<Cell>& b) {
  for (const Cell u : a)
    for (const Cell v : b)
      if (share_edge(u, v)) return true;
  return false;
}

// directed[mask] for every subset of cells, by the literal recursion: a single
// cell, or a directed animal plus one generalized upper neighbour of one of its
// cells. Removing a bit gives a smaller integer, so ascending order works.
std::vector<signed char> directed_subsets(const std::vector<Cell>& cells) {
  const std::size_t m = cells.size();
  const std::uint32_t full = (1u << m) - 1u;
  std::vector<signed char> directed(std::size_t{1} << m, 0);
  for (std::uint32_t mask = 1; mask != 0 && mask <= full; ++mask) {
    if (std::popcount(mask) == 1) {
      directed[mask] = 1;
      continue;
    }
    for (std::size_t i = 0; i < m && !directed[mask]; ++i) {
      const std::uint32_t bit = 1u << i;
      if (!(mask & bit) || !directed[mask & ~bit]) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (j != i && (mask & (1u << j)) && is_upper_neighbour_of(cells[i], cells[j])) {
          directed[mask] = 1;
          break;
        }
    }
  }
  return directed;
}

struct Candidate {
  std::uint32_t mask = 0;
  Cell source;
  std::vector<Cell> cells;  // sorted
};

class WitnessSearch {
 public:
  WitnessSearch(const Polyomino& p, int k_max, bool count_all)
      : cells_(p.cells().begin(), p.cells().end()), k_max_(k_max), count_all_(count_all) {
    full_ = (1u << cells_.size()) - 1u;
    const std::vector<signed char> directed = directed_subsets(cells_);
    for (std::uint32_t mask = 1; mask <= full_; ++mask)
      if (directed[mask]) candidates_.push_back(make_candidate(mask));
    std::sort(candidates_.begin(), candidates_.end(), [](const Candidate& a, const Candidate& b) {
      if (a.source.x != b.source.x) return a.source.x < b.source.x;
      return a.cells < b.cells;
    });
  }

  WitnessSearchResult run() {
    std::vector<const Candidate*> chosen;
    search(0, chosen);
    return result_;
  }

 private:
  std::vector<Cell> cells_of(std::uint32_t mask) const {
    std::vector<Cell> out;
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (mask & (1u << i)) out.push_back(cells_[i]);
    return out;
  }

  // The source of a directed animal: its one cell that is a generalized upper
  // neighbour of no other cell.
  Candidate make_candidate(std::uint32_t mask) const {
    Candidate c{mask, {}, cells_of(mask)};
    for (const Cell a : c.cells) {
      const bool is_upper = std::any_of(c.cells.begin(), c.cells.end(),
                                        [a](Cell b) { return is_upper_neighbour_of(a, b); });
      if (!is_upper) c.source = a;
    }
    return c;
  }

  bool conditions_hold(const std::vector<const Candidate*>& chosen, const Candidate& next) const {
    const Candidate& prev = *chosen.back();
    // Column x covers the closed interval [3x/2 - 1, 3x/2 + 1]; the source of
    // the previous animal must end strictly before the new animal begins.
    const int min_x = std::min_element(next.cells.begin(), next.cells.end())->x;
    if (!(3 * prev.source.x + 2 < 3 * min_x - 2)) return false;
    std::vector<Cell> prefix;
    for (const Candidate* c : chosen) prefix.insert(prefix.end(), c->cells.begin(), c->cells.end());
    return dominates_literal_set(prefix, next.cells) && share_any_edge(prefix, next.cells);
  }

  // Returns true to stop the search.
  bool search(std::uint32_t used, std::vector<const Candidate*>& chosen) {
    if (used == full_) {
      ++result_.witnesses;
      if (!result_.found) {
        result_.found = true;
        Decomposition d;
        for (const Candidate* c : chosen) d.parts.push_back({c->source, c->cells});
        result_.witness = std::move(d);
      }
      return !count_all_;
    }
    if (static_cast<int>(chosen.size()) >= k_max_) return false;
    for (const Candidate& c : candidates_) {
      if (c.mask & used) continue;
      if (!chosen.empty() && !conditions_hold(chosen, c)) continue;
      chosen.push_back(&c);
      const bool stop = search(used | c.mask, chosen);
      chosen.pop_back();
      if (stop) return true;
    }
    return false;
  }

  std::vector<Cell> cells_;
  int k_max_;
  bool count_all_;
  std::uint32_t full_ = 0;
  std::vector<Candidate> candidates_;
  WitnessSearchResult result_;
};

}  // namespace

bool dominates_literal(Cell c, Cell d) {
  const int reach = std::abs(c.y - d.y) + 2;
  for (const Cell g : upper_neighbours(d))
    for (int i = 0; i <= reach; ++i)
      if (c == Cell{g.x, g.y + i}) return true;
  return false;
}

bool is_directed_by_recursion(const std::vector<Cell>& cells) {
  if (cells.empty() || cells.size() > 20) return false;
  return directed_subsets(cells).back() != 0;
}

std::set<Polyomino> directed_by_recursion(int n) {
  return grow(n, kRecursionBound, upper_neighbours);
}

std::set<Polyomino> naive_enumerate(int n) {
  return grow(n, kNaiveBound, lattice_neighbours);
}

WitnessSearchResult witness_search(const Polyomino& p, int k_max, bool count_all) {
  if (static_cast<int>(p.size()) > kWitnessBound) {
    std::ostringstream os;
    os << "witness search supports at most " << kWitnessBound << " cells, got " << p.size();
    throw Error(ErrorCode::SizeOverflow, os.str());
  }
  return WitnessSearch(p, k_max, count_all).run();
}

}  // namespace polyhex::oracle
