#include "polyhex/recognize.hpp"

#include <algorithm>
#include <sstream>

#include "polyhex/error.hpp"

namespace polyhex {

CellSet upward_closure(std::span<const Cell> within, Cell start) {
  if (!contains(within, start)) {
    std::ostringstream os;
    os << "cell " << start.x << ' ' << start.y << " is not in the set";
    throw Error(ErrorCode::CellNotInSet, os.str());
  }
  std::vector<char> reached(within.size(), 0);
  std::vector<std::size_t> queue;
  queue.reserve(within.size());
  const auto index_of = [&](Cell c) {
    const auto it = std::lower_bound(within.begin(), within.end(), c);
    return (it == within.end() || *it != c) ? within.size()
                                            : static_cast<std::size_t>(it - within.begin());
  };

  const std::size_t first = index_of(start);
  reached[first] = 1;
  queue.push_back(first);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Cell up : gen_upper_neighbours(within[queue[head]])) {
      const std::size_t i = index_of(up);
      if (i < within.size() && !reached[i]) {
        reached[i] = 1;
        queue.push_back(i);
      }
    }
  }

  CellSet out;
  out.reserve(queue.size());
  for (std::size_t i = 0; i < within.size(); ++i)
    if (reached[i]) out.push_back(within[i]);
  return out;
}

bool is_directed_animal(const Polyomino& p) {
  const CellSet sources = source_cells(p);
  return sources.size() == 1 && upward_closure(p, sources.front()).size() == p.size();
}

Decomposition canonical_decomposition(const Polyomino& p) {
  // Distinct sources never share a column, so (x, y) order is column order.
  const CellSet sources = source_cells(p);
  Decomposition d;
  CellSet remaining(p.cells().begin(), p.cells().end());
  for (const Cell s : sources) {
    CellSet body = upward_closure(remaining, s);
    remaining = set_difference(remaining, body);
    d.parts.push_back({s, std::move(body)});
  }
  d.leftover = std::move(remaining);
  return d;
}

namespace {

bool shares_edge(std::span<const Cell> a, std::span<const Cell> b) {
  for (const Cell u : a)
    for (const Cell v : b)
      if (are_adjacent(u, v)) return true;
  return false;
}

void check_partition(const Polyomino& p, const Decomposition& d) {
  CellSet all = d.leftover;
  std::size_t total = d.leftover.size();
  for (const DirectedPart& part : d.parts) {
    if (part.body.empty() || !contains(part.body, part.source))
      throw Error(ErrorCode::MismatchedDecomposition, "part source is not in its body");
    total += part.body.size();
    all = set_union(all, part.body);
  }
  if (total != all.size() || !std::equal(all.begin(), all.end(), p.cells().begin(), p.cells().end()))
    throw Error(ErrorCode::MismatchedDecomposition,
                "decomposition bodies and leftover do not partition the polyomino");
}

bool all_true(const std::vector<bool>& v) {
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

}  // namespace

bool ConditionReport::multi_directed() const {
  return covers && all_true(proj_left) && all_true(union_dominates) && all_true(edge_shared);
}

bool ConditionReport::stacked_directed() const {
  return multi_directed() && all_true(pred_dominates);
}

ConditionReport verify_conditions(const Polyomino& p, const Decomposition& d) {
  check_partition(p, d);
  ConditionReport r;
  r.covers = d.leftover.empty();
  CellSet prefix;
  for (std::size_t j = 0; j < d.parts.size(); ++j) {
    const CellSet& body = d.parts[j].body;
    if (j > 0) {
      const DirectedPart& prev = d.parts[j - 1];
      r.proj_left.push_back(prev.source.x + 2 <= body.front().x);
      r.union_dominates.push_back(dominates_set(prefix, body));
      r.edge_shared.push_back(shares_edge(prefix, body));
      r.pred_dominates.push_back(dominates_set(prev.body, body));
    }
    prefix = set_union(prefix, body);
  }
  return r;
}

bool is_multi_directed(const Polyomino& p) {
  return verify_conditions(p, canonical_decomposition(p)).multi_directed();
}

bool is_stacked_directed(const Polyomino& p) {
  return verify_conditions(p, canonical_decomposition(p)).stacked_directed();
}

ClassLabel classify(const Polyomino& p) {
  const Decomposition d = canonical_decomposition(p);
  const ConditionReport r = verify_conditions(p, d);
  ClassLabel label;
  label.is_column_convex = is_column_convex(p);
  label.is_directed = d.k() == 1 && d.leftover.empty();
  label.is_stacked = r.stacked_directed();
  label.is_multi = r.multi_directed();
  return label;
}

}  // namespace polyhex
