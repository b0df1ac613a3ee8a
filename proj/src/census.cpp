#include "polyhex/census.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "polyhex/error.hpp"
#include "polyhex/recognize.hpp"

namespace polyhex {

void check_size(int n, int bound) {
  if (n >= 1 && n <= bound) return;
  std::ostringstream os;
  os << "size " << n << " is outside the supported range 1.." << bound;
  throw Error(ErrorCode::SizeOverflow, os.str());
}

RedelmeierWalker::RedelmeierWalker(int n_max)
    : n_max_(n_max),
      width_(2 * n_max + 3),
      marked_(static_cast<std::size_t>(width_) * static_cast<std::size_t>(n_max + 2), 0) {
  if (n_max < 1) throw std::invalid_argument("RedelmeierWalker needs n_max >= 1");
  current_.reserve(static_cast<std::size_t>(n_max));
}

void RedelmeierWalker::descend(std::vector<Cell>& untried, Mode& mode, const Visitor& visit) {
  while (!untried.empty()) {
    const Cell c = untried.back();
    untried.pop_back();
    current_.push_back(c);
    const int size = static_cast<int>(current_.size());

    bool report = true;
    bool expand = size < n_max_;
    if (mode.split > 0) {
      if (size < mode.split) {
        report = mode.target < 0;
      } else if (size == mode.split) {
        const bool mine = mode.seen++ == mode.target;
        report = mine;
        expand = expand && mine;
      }
    }
    if (report) visit(current_);

    if (expand) {
      std::vector<Cell> next = untried;
      const std::size_t before = next.size();
      for (const Cell nb : neighbours(c)) {
        if (!allowed(nb)) continue;
        char& m = marked_[static_cast<std::size_t>(index(nb))];
        if (m) continue;
        m = 1;
        next.push_back(nb);
      }
      const std::vector<Cell> added(next.begin() + static_cast<std::ptrdiff_t>(before), next.end());
      descend(next, mode, visit);
      for (const Cell nb : added) marked_[static_cast<std::size_t>(index(nb))] = 0;
    }
    current_.pop_back();
  }
}

void RedelmeierWalker::walk_all(const Visitor& visit) {
  Mode mode;
  std::vector<Cell> untried{{0, 0}};
  marked_[static_cast<std::size_t>(index({0, 0}))] = 1;
  descend(untried, mode, visit);
  marked_[static_cast<std::size_t>(index({0, 0}))] = 0;
}

std::int64_t RedelmeierWalker::walk_prefix(int split, const Visitor& visit) {
  Mode mode{split, -1, 0};
  std::vector<Cell> untried{{0, 0}};
  marked_[static_cast<std::size_t>(index({0, 0}))] = 1;
  descend(untried, mode, visit);
  marked_[static_cast<std::size_t>(index({0, 0}))] = 0;
  return mode.seen;
}

void RedelmeierWalker::walk_subtree(int split, std::int64_t t, const Visitor& visit) {
  Mode mode{split, t, 0};
  std::vector<Cell> untried{{0, 0}};
  marked_[static_cast<std::size_t>(index({0, 0}))] = 1;
  descend(untried, mode, visit);
  marked_[static_cast<std::size_t>(index({0, 0}))] = 0;
}

void enumerate_fixed(int n, const std::function<void(const Polyomino&)>& visit, int size_bound) {
  check_size(n, size_bound);
  // Canonical coordinates lie in [0, n) so each cell packs into two bytes and
  // byte order of the packed sorted sequence is the listing order.
  const std::size_t stride = 2 * static_cast<std::size_t>(n);
  std::vector<unsigned char> packed;
  RedelmeierWalker walker(n);
  walker.walk_all([&](std::span<const Cell> cells) {
    if (static_cast<int>(cells.size()) != n) return;
    const Polyomino p = make_polyomino_unchecked(CellSet(cells.begin(), cells.end()));
    for (const Cell c : p.cells()) {
      packed.push_back(static_cast<unsigned char>(c.x));
      packed.push_back(static_cast<unsigned char>(c.y));
    }
  });

  const std::size_t count = packed.size() / stride;
  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::memcmp(&packed[a * stride], &packed[b * stride], stride) < 0;
  });

  std::vector<Cell> cells(static_cast<std::size_t>(n));
  for (const std::uint32_t i : order) {
    const unsigned char* row = &packed[i * stride];
    for (std::size_t j = 0; j < cells.size(); ++j) cells[j] = {row[2 * j], row[2 * j + 1]};
    visit(make_polyomino_unchecked(cells));
  }
}

std::vector<Polyomino> enumerate_fixed(int n, int size_bound) {
  std::vector<Polyomino> out;
  enumerate_fixed(n, [&](const Polyomino& p) { out.push_back(p); }, size_bound);
  return out;
}

namespace {

struct Tally {
  std::vector<CensusRow> rows;

  explicit Tally(const CensusConfig& config) : rows(static_cast<std::size_t>(config.n_max)) {
    for (int n = 1; n <= config.n_max; ++n) {
      CensusRow& row = rows[static_cast<std::size_t>(n - 1)];
      row.n = n;
      if (config.classes & kDirected) row.directed = 0;
      if (config.classes & kStacked) row.stacked = 0;
      if (config.classes & kMulti) row.multi = 0;
      if (config.classes & kColumnConvex) row.column_convex = 0;
    }
  }

  void add(std::span<const Cell> cells, unsigned classes) {
    CensusRow& row = rows[cells.size() - 1];
    ++row.total;
    const Polyomino p = make_polyomino_unchecked(CellSet(cells.begin(), cells.end()));
    if (classes & kColumnConvex) *row.column_convex += is_column_convex(p);
    if (classes & (kStacked | kMulti)) {
      const Decomposition d = canonical_decomposition(p);
      const ConditionReport r = verify_conditions(p, d);
      if (classes & kDirected) *row.directed += d.k() == 1 && d.leftover.empty();
      if (classes & kStacked) *row.stacked += r.stacked_directed();
      if (classes & kMulti) *row.multi += r.multi_directed();
    } else if (classes & kDirected) {
      *row.directed += is_directed_animal(p);
    }
  }

  void merge(const Tally& other) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CensusRow& a = rows[i];
      const CensusRow& b = other.rows[i];
      a.total += b.total;
      if (a.directed) *a.directed += *b.directed;
      if (a.stacked) *a.stacked += *b.stacked;
      if (a.multi) *a.multi += *b.multi;
      if (a.column_convex) *a.column_convex += *b.column_convex;
    }
  }
};

void validate(const CensusConfig& config) {
  check_size(config.n_max, config.size_bound);
  if (config.workers < 1) throw std::invalid_argument("census needs at least one worker");
}

// Cut size for the parallel walk. Size 5 has 186 subtrees, enough to balance
// a handful of workers while the redundant top-level walks stay negligible.
constexpr int kSplitSize = 5;

}  // namespace

std::vector<CensusRow> census_serial(const CensusConfig& config) {
  validate(config);
  Tally tally(config);
  RedelmeierWalker walker(config.n_max);
  walker.walk_all([&](std::span<const Cell> cells) { tally.add(cells, config.classes); });
  return tally.rows;
}

std::vector<CensusRow> census_parallel(const CensusConfig& config) {
  validate(config);
  const int split = std::min(kSplitSize, config.n_max);
  Tally tally(config);
  RedelmeierWalker top(config.n_max);
  const std::int64_t tasks =
      top.walk_prefix(split, [&](std::span<const Cell> cells) { tally.add(cells, config.classes); });

  std::vector<Tally> partial(static_cast<std::size_t>(tasks), Tally(config));
#pragma omp parallel for schedule(dynamic, 1) num_threads(config.workers)
  for (std::int64_t t = 0; t < tasks; ++t) {
    Tally& mine = partial[static_cast<std::size_t>(t)];
    RedelmeierWalker walker(config.n_max);
    walker.walk_subtree(split, t, [&](std::span<const Cell> cells) { mine.add(cells, config.classes); });
  }
  for (const Tally& t : partial) tally.merge(t);
  return tally.rows;
}

std::vector<CensusRow> census(const CensusConfig& config) {
  return config.workers > 1 ? census_parallel(config) : census_serial(config);
}

const char* to_string(Separator s) {
  switch (s) {
    case Separator::PolyominoNotMulti: return "polyomino-not-multi";
    case Separator::MultiNotStacked: return "multi-not-stacked";
    case Separator::StackedNotDirected: return "stacked-not-directed";
    case Separator::MultiNotColumnConvex: return "multi-not-column-convex";
  }
  return "unknown";
}

std::map<Separator, Polyomino> find_separators(int n_max, int size_bound) {
  check_size(n_max, size_bound);
  std::map<Separator, Polyomino> found;
  const auto record = [&](Separator s, bool hit, const Polyomino& p) {
    if (hit && !found.contains(s)) found.emplace(s, p);
  };
  for (int n = 1; n <= n_max && found.size() < 4; ++n) {
    enumerate_fixed(
        n,
        [&](const Polyomino& p) {
          const ClassLabel c = classify(p);
          record(Separator::PolyominoNotMulti, !c.is_multi, p);
          record(Separator::MultiNotStacked, c.is_multi && !c.is_stacked, p);
          record(Separator::StackedNotDirected, c.is_stacked && !c.is_directed, p);
          record(Separator::MultiNotColumnConvex, c.is_multi && !c.is_column_convex, p);
        },
        size_bound);
  }
  return found;
}

}  // namespace polyhex
