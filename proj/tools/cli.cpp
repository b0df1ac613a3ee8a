#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyhex/cell_list.hpp"
#include "polyhex/census.hpp"
#include "polyhex/error.hpp"
#include "polyhex/oracle.hpp"
#include "polyhex/recognize.hpp"

namespace polyhex::cli {
namespace {

Polyomino load_polyomino(const std::string& path, std::istream& in) {
  if (path.empty()) return make_polyomino(read_cell_list(in));
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return make_polyomino(read_cell_list(file));
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string count_or_dash(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : "-";
}

void print_census(const std::vector<CensusRow>& rows, const std::string& format, std::ostream& out) {
  if (format == "json") {
    for (const CensusRow& r : rows) {
      nlohmann::ordered_json j;
      j["size"] = r.n;
      j["total"] = r.total;
      j["directed"] = r.directed.value_or(0);
      j["stacked_directed"] = r.stacked.value_or(0);
      j["multi_directed"] = r.multi.value_or(0);
      j["column_convex"] = r.column_convex.value_or(0);
      out << j.dump() << '\n';
    }
    return;
  }
  out << std::setw(4) << "size" << std::setw(12) << "total" << std::setw(12) << "directed"
      << std::setw(12) << "stacked" << std::setw(12) << "multi" << std::setw(14)
      << "column_convex" << '\n';
  for (const CensusRow& r : rows) {
    out << std::setw(4) << r.n << std::setw(12) << r.total << std::setw(12)
        << count_or_dash(r.directed) << std::setw(12) << count_or_dash(r.stacked)
        << std::setw(12) << count_or_dash(r.multi) << std::setw(14)
        << count_or_dash(r.column_convex) << '\n';
  }
}

void print_classification(const ClassLabel& c, std::ostream& out) {
  out << "polyomino: " << yes_no(c.is_polyomino) << '\n'
      << "column-convex: " << yes_no(c.is_column_convex) << '\n'
      << "directed: " << yes_no(c.is_directed) << '\n'
      << "stacked: " << yes_no(c.is_stacked) << '\n'
      << "multi-directed: " << yes_no(c.is_multi) << '\n';
}

std::string describe_set(const CellSet& cells) {
  return cells.empty() ? "(none)" : format_listing(cells);
}

void print_report(const Decomposition& d, const ConditionReport& r, std::ostream& out) {
  const auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
  std::vector<std::string> failed;
  out << "conditions:\n";
  out << "  components cover the polyomino: " << mark(r.covers) << '\n';
  if (!r.covers) failed.push_back("components cover the polyomino");
  for (std::size_t i = 0; i < r.proj_left.size(); ++i) {
    const std::string j = "j=" + std::to_string(i + 2) + " ";
    const std::pair<const char*, bool> rows[] = {
        {"projection lies to the left", r.proj_left[i]},
        {"union dominates", r.union_dominates[i]},
        {"shared edge", r.edge_shared[i]},
        {"predecessor dominates (stacked)", r.pred_dominates[i]},
    };
    for (const auto& [label, ok] : rows) {
      out << "  " << j << label << ": " << mark(ok) << '\n';
      if (!ok) failed.push_back(j + label);
    }
  }
  if (d.k() == 1) out << "  (single component: no per-component conditions)\n";
  out << "failed:";
  if (failed.empty()) out << " none";
  for (std::size_t i = 0; i < failed.size(); ++i) out << (i ? ", " : " ") << failed[i];
  out << '\n';
}

void print_decomposition(const Polyomino& p, bool explain, bool witness, std::ostream& out) {
  const Decomposition d = canonical_decomposition(p);
  out << "polyomino: " << format_listing(p.cells()) << '\n';
  out << "parts: " << d.k() << '\n';
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const DirectedPart& part = d.parts[i];
    out << "part " << i + 1 << ": source " << part.source.x << ' ' << part.source.y
        << "; cells " << format_listing(part.body) << '\n';
  }
  out << "leftover: " << describe_set(d.leftover) << '\n';
  const ConditionReport r = verify_conditions(p, d);
  if (explain) print_report(d, r, out);
  out << "multi-directed: " << yes_no(r.multi_directed()) << '\n';
  out << "stacked directed: " << yes_no(r.stacked_directed()) << '\n';
  if (witness) {
    const auto w = oracle::witness_search(p, static_cast<int>(p.size()), true);
    out << "witness search: " << (w.found ? "found" : "none") << ", " << w.witnesses
        << " qualifying sequence(s)";
    if (w.found) out << ", first " << (*w.witness == d ? "equals" : "differs from") << " the decomposition";
    out << '\n';
  }
}

void render(const Polyomino& p, std::ostream& out) {
  int h_max = 0;
  int h_min = 0;
  bool first = true;
  for (const Cell c : p.cells()) {
    const int h = cell_height(c).twice();
    h_max = first ? h : std::max(h_max, h);
    h_min = first ? h : std::min(h_min, h);
    first = false;
  }
  std::vector<std::string> rows(static_cast<std::size_t>(h_max - h_min + 1));
  for (const Cell c : p.cells()) {
    std::string& row = rows[static_cast<std::size_t>(h_max - cell_height(c).twice())];
    const auto col = static_cast<std::size_t>(3 * c.x);  // canonical: min x is 0
    if (row.size() < col + 2) row.resize(col + 2, ' ');
    row.replace(col, 2, "[]");
  }
  for (const std::string& row : rows) out << row << '\n';
}

const std::map<std::string, unsigned> kClassNames = {
    {"all", 0},
    {"directed", kDirected},
    {"stacked", kStacked},
    {"multi", kMulti},
    {"column-convex", kColumnConvex},
};

bool in_class(const Polyomino& p, unsigned mask) {
  if (mask == 0) return true;
  const ClassLabel c = classify(p);
  switch (mask) {
    case kDirected: return c.is_directed;
    case kStacked: return c.is_stacked;
    case kMulti: return c.is_multi;
    case kColumnConvex: return c.is_column_convex;
    default: return false;
  }
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::DuplicateCell:
      return kMalformed;
    case ErrorCode::SizeOverflow:
      return kTooLarge;
    default:
      return kInvalid;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hexagonal polyominoes: directed, stacked directed and multi-directed animals",
               "polyhex"};
  app.require_subcommand(1);

  auto* census_cmd = app.add_subcommand("census", "Count polyominoes by class for sizes 1..N");
  int max_size = 0;
  int workers = 1;
  std::string format = "table";
  census_cmd->add_option("--max-size", max_size, "Largest size")->required()->check(CLI::PositiveNumber);
  census_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  std::string file;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one polyomino");
  classify_cmd->add_option("--file", file, "Cell list (default: standard input)");

  bool explain = false;
  bool witness = false;
  auto* decompose_cmd = app.add_subcommand("decompose", "Show the source-rooted decomposition");
  decompose_cmd->add_option("--file", file, "Cell list (default: standard input)");
  decompose_cmd->add_flag("--explain", explain, "Print every condition");
  decompose_cmd->add_flag("--witness", witness, "Cross-check with the exhaustive witness search")
      ->group("");

  int size = 0;
  std::string class_name = "all";
  bool count = false;
  bool list = false;
  bool use_oracle = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count or list polyominoes of one size");
  enumerate_cmd->add_option("--size", size, "Cell count")->required()->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--class", class_name, "all, directed, stacked, multi, column-convex")
      ->check(CLI::IsMember({"all", "directed", "stacked", "multi", "column-convex"}));
  auto* count_flag = enumerate_cmd->add_flag("--count", count, "Print the count (default)");
  auto* list_flag = enumerate_cmd->add_flag("--list", list, "Print one polyomino per line");
  count_flag->excludes(list_flag);
  enumerate_cmd->add_flag("--oracle", use_oracle, "Use the brute-force reference enumerators")
      ->group("");

  auto* render_cmd = app.add_subcommand("render", "Draw a polyomino as text");
  render_cmd->add_option("--file", file, "Cell list (default: standard input)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  }

  try {
    if (census_cmd->parsed()) {
      CensusConfig config;
      config.n_max = max_size;
      config.workers = workers;
      print_census(census(config), format, out);
    } else if (classify_cmd->parsed()) {
      print_classification(classify(load_polyomino(file, in)), out);
    } else if (decompose_cmd->parsed()) {
      print_decomposition(load_polyomino(file, in), explain, witness, out);
    } else if (enumerate_cmd->parsed()) {
      const unsigned mask = kClassNames.at(class_name);
      std::vector<Polyomino> shapes;
      if (use_oracle) {
        const auto found = mask == kDirected ? oracle::directed_by_recursion(size)
                                             : oracle::naive_enumerate(size);
        for (const Polyomino& p : found)
          if (mask == kDirected || in_class(p, mask)) shapes.push_back(p);
      } else if (list) {
        enumerate_fixed(size, [&](const Polyomino& p) {
          if (in_class(p, mask)) shapes.push_back(p);
        });
      } else {
        CensusConfig config;
        config.n_max = size;
        config.classes = mask == 0 ? 0u : mask;
        const CensusRow row = census(config).back();
        std::uint64_t n = row.total;
        if (mask == kDirected) n = *row.directed;
        if (mask == kStacked) n = *row.stacked;
        if (mask == kMulti) n = *row.multi;
        if (mask == kColumnConvex) n = *row.column_convex;
        out << n << '\n';
        return kOk;
      }
      if (list) {
        for (const Polyomino& p : shapes) out << format_listing(p.cells()) << '\n';
      } else {
        out << shapes.size() << '\n';
      }
    } else if (render_cmd->parsed()) {
      render(load_polyomino(file, in), out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kOk;
}

}  // namespace polyhex::cli
