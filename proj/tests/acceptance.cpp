// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "polyhex/cell_list.hpp"
#include "polyhex/census.hpp"
#include "polyhex/oracle.hpp"
#include "polyhex/recognize.hpp"

using namespace polyhex;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;  // 0: no limit
  std::function<Verdict()> check;
};

std::vector<Polyomino> all_of_size(int n) { return enumerate_fixed(n); }

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

Verdict hand_census() {
  Verdict v;
  const auto rows = census({.n_max = 3});
  const std::uint64_t expect[3][6] = {{1, 1, 1, 1, 1, 1}, {2, 3, 3, 3, 3, 3}, {3, 11, 10, 11, 11, 11}};
  for (std::size_t i = 0; i < 3; ++i) {
    const CensusRow& r = rows[i];
    const std::uint64_t got[6] = {static_cast<std::uint64_t>(r.n), r.total, *r.directed,
                                  *r.stacked, *r.multi, *r.column_convex};
    for (int j = 0; j < 6; ++j) v.require(got[j] == expect[i][j], "row " + std::to_string(i + 1) + " differs");
  }
  return v;
}

Verdict enumerator_equivalence() {
  Verdict v;
  const std::uint64_t known[] = {1, 3, 11, 44, 186, 814, 3652};
  for (int n = 1; n <= 7; ++n) {
    const auto fast = all_of_size(n);
    const std::set<Polyomino> fast_set(fast.begin(), fast.end());
    const auto slow = oracle::naive_enumerate(n);
    v.require(fast_set.size() == fast.size(), "duplicate at n=" + std::to_string(n));
    v.require(fast_set == slow, "canonical sets differ at n=" + std::to_string(n));
    v.require(fast.size() == known[n - 1], "count mismatch at n=" + std::to_string(n));
  }
  return v;
}

Verdict directed_oracle_equivalence() {
  Verdict v;
  std::ostringstream info;
  info << "counts";
  for (int n = 1; n <= 7; ++n) {
    std::set<Polyomino> accepted;
    for (const Polyomino& p : all_of_size(n))
      if (is_directed_animal(p)) accepted.insert(p);
    v.require(accepted == oracle::directed_by_recursion(n), "sets differ at n=" + std::to_string(n));
    info << ' ' << accepted.size() << (accepted.size() == binomial(2 * n - 1, n - 1) ? "" : "*");
  }
  info << " (all equal binomial(2n-1,n-1) unless starred; informational)";
  if (v.pass) v.detail = info.str();
  return v;
}

Verdict containment_and_claims() {
  Verdict v;
  std::uint64_t checked = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const Polyomino& p : all_of_size(n)) {
      const ClassLabel c = classify(p);
      const std::string at = " at " + format_listing(p.cells());
      v.require(!c.is_column_convex || c.is_multi, "column-convex but not multi-directed" + at);
      if (n > 7) continue;
      ++checked;
      v.require(!c.is_directed || c.is_stacked, "directed but not stacked" + at);
      v.require(!c.is_stacked || c.is_multi, "stacked but not multi-directed" + at);
      const CellSet sources = source_cells(p);
      v.require(!sources.empty(), "no source cell" + at);
      for (std::size_t i = 0; i < sources.size(); ++i)
        for (std::size_t j = i + 1; j < sources.size(); ++j)
          v.require(std::abs(sources[i].x - sources[j].x) >= 2, "sources closer than 2 columns" + at);
    }
  }
  if (v.pass) v.detail = std::to_string(checked) + " polyominoes (n<=7), column-convex claim to n<=8";
  return v;
}

Verdict source_definitions() {
  Verdict v;
  std::uint64_t animals = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Polyomino& p : oracle::directed_by_recursion(n)) {
      ++animals;
      const auto cells = p.cells();
      const std::string at = " at " + format_listing(cells);
      std::vector<Cell> not_upper;
      std::vector<Cell> lowest;
      int min_height = 0;
      for (const Cell c : cells) {
        bool is_upper = false;
        for (const Cell d : cells)
          for (const Cell u : gen_upper_neighbours(d)) is_upper = is_upper || (u == c && d != c);
        if (!is_upper) not_upper.push_back(c);
        const int h = cell_height(c).twice();
        if (lowest.empty() || h < min_height) {
          lowest = {c};
          min_height = h;
        } else if (h == min_height) {
          lowest.push_back(c);
        }
      }
      const CellSet sources = source_cells(p);
      v.require(not_upper.size() == 1, "not exactly one non-upper-neighbour cell" + at);
      v.require(sources.size() == 1, "not exactly one non-dominating cell" + at);
      v.require(lowest.size() == 1, "height minimum not unique" + at);
      if (not_upper.size() == 1 && sources.size() == 1 && lowest.size() == 1) {
        v.require(not_upper[0] == sources[0], "source definitions disagree" + at);
        v.require(lowest[0] == sources[0], "source is not the lowest cell" + at);
      }
    }
  }
  if (v.pass) v.detail = std::to_string(animals) + " directed animals";
  return v;
}

Verdict witness_probe() {
  Verdict v;
  std::uint64_t multi = 0;
  std::uint64_t other = 0;
  std::uint64_t ambiguous = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Polyomino& p : all_of_size(n)) {
      const std::string at = " at " + format_listing(p.cells());
      const auto w = oracle::witness_search(p, n, true);
      ambiguous += w.witnesses > 1;
      if (is_multi_directed(p)) {
        ++multi;
        v.require(w.found, "no witness for a multi-directed polyomino" + at);
        if (w.found) v.require(*w.witness == canonical_decomposition(p), "witness differs from decomposition" + at);
      } else {
        ++other;
        v.require(!w.found, "witness found for a rejected polyomino" + at);
      }
    }
  }
  if (v.pass)
    v.detail = std::to_string(multi) + " multi-directed with matching witness, " + std::to_string(other) +
               " rejected with none, " + std::to_string(ambiguous) + " with more than one witness (n<=7 exhaustive)";
  return v;
}

Verdict counterexample_fixture() {
  Verdict v;
  const std::vector<Cell> raw = {{0, 0}, {-1, 1}, {-1, 2}, {0, 2}, {1, 2}, {1, 1}, {2, 0}};
  const Cell shift{1, 0};  // canonical translation of this cell set
  const Polyomino p = make_polyomino(raw);
  v.require(p.size() == 7, "not accepted as a 7-cell polyomino");
  v.require(source_cells(p) == CellSet{Cell{0, 0} + shift, Cell{2, 0} + shift}, "sources differ from {(0,0),(2,0)}");
  const Decomposition d = canonical_decomposition(p);
  v.require(d.k() == 2 && d.leftover.empty(), "decomposition is not two parts with empty leftover");
  const ConditionReport r = verify_conditions(p, d);
  v.require(r.covers, "components do not cover");
  if (r.proj_left.size() == 1) {
    v.require(!r.proj_left[0], "projection condition holds at j=2");
    std::string others;
    if (!r.union_dominates[0]) others += " union-dominates";
    if (!r.edge_shared[0]) others += " shared-edge";
    v.require(others.empty(), "j=2 also fails:" + others +
                                  " (cell 1 1 of A2 dominates source 0 0 of A1), so projection is not the only failure");
  }
  v.require(!is_multi_directed(p), "accepted as multi-directed");
  return v;
}

Verdict separators() {
  Verdict v;
  const auto small = find_separators(7);
  v.require(small.contains(Separator::StackedNotDirected) && small.at(Separator::StackedNotDirected).size() == 3,
            "no stacked-not-directed witness of size 3");
  v.require(small.contains(Separator::PolyominoNotMulti) && small.at(Separator::PolyominoNotMulti).size() <= 7,
            "no polyomino-not-multi witness of size <= 7");
  const auto bounded = find_separators(kDefaultSizeBound);
  v.require(bounded.contains(Separator::MultiNotStacked),
            "no multi-not-stacked witness up to size " + std::to_string(kDefaultSizeBound));
  if (v.pass) {
    std::ostringstream os;
    for (const auto& [kind, p] : bounded)
      os << to_string(kind) << " n=" << p.size() << " {" << format_listing(p.cells()) << "}; ";
    v.detail = os.str();
  }
  return v;
}

Verdict determinism() {
  Verdict v;
  const auto run = [](const std::string& workers) {
    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    cli::run({"census", "--max-size", "9", "--workers", workers, "--format", "json"}, in, out, err);
    return out.str();
  };
  const std::string one = run("1");
  v.require(!one.empty(), "empty census output");
  v.require(run("2") == one, "workers=2 output differs");
  v.require(run("8") == one, "workers=8 output differs");
  return v;
}

Verdict translation_fuzz() {
  Verdict v;
  std::mt19937 rng(20021002);
  std::uniform_int_distribution<int> size(1, 12);
  std::uniform_int_distribution<int> offset(-1000, 1000);
  std::uniform_int_distribution<int> dir(0, 5);
  constexpr int kPairs = 10000;
  for (int trial = 0; trial < kPairs; ++trial) {
    std::vector<Cell> cells{{0, 0}};
    const int n = size(rng);
    while (static_cast<int>(cells.size()) < n) {
      std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
      const Cell next = cells[pick(rng)] + kNeighbourOffsets[static_cast<std::size_t>(dir(rng))];
      if (std::find(cells.begin(), cells.end(), next) == cells.end()) cells.push_back(next);
    }
    const Cell shift{offset(rng), offset(rng)};
    v.require(classify(make_polyomino(cells)) == classify(make_polyomino(translate(cells, shift))),
              "classification changed under translation at {" + format_listing(cells) + "}");
  }
  if (v.pass) v.detail = std::to_string(kPairs) + " pairs";
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "hand-derived census rows for sizes 1-3", 1.0, hand_census},
      {"AC2", "Redelmeier and naive enumerators agree for n<=7", 300.0, enumerator_equivalence},
      {"AC3", "closure recognizer equals directed-animal recursion for n<=7", 0.0, directed_oracle_equivalence},
      {"AC4", "containment chain and source-cell claims", 0.0, containment_and_claims},
      {"AC5", "source-cell definitions agree on directed animals", 0.0, source_definitions},
      {"AC6", "witness search matches canonical decomposition", 600.0, witness_probe},
      {"AC7", "seven-cell counterexample fails exactly the projection condition", 0.0, counterexample_fixture},
      {"AC8", "class separators exist", 0.0, separators},
      {"AC9", "census bytes identical for 1, 2 and 8 workers", 0.0, determinism},
      {"AC10", "classification invariant under 10^4 random translations", 0.0, translation_fuzz},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      v.pass = false;
      v.detail = "exceeded time limit of " + std::to_string(c.time_limit_s) + " s";
    }
    failures += !v.pass;
    std::printf("[%s] %-5s %-66s %8.3f s  %s\n", v.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
