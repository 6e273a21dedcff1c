#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hiker/coloring.hpp"
#include "hiker/homogeneity.hpp"
#include "hiker/pnumbers.hpp"
#include "hiker/track.hpp"

namespace hiker::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kDefaultBudget = 100'000'000;

void emit(const std::string& status, ordered_json payload) {
  ordered_json envelope;
  envelope["status"] = status;
  envelope["payload"] = std::move(payload);
  envelope["diagnostics"] = ordered_json::array();
  std::cout << envelope.dump() << "\n";
}

int emit_error(int code, const std::string& kind, const std::string& message) {
  ordered_json payload;
  payload["kind"] = kind;
  payload["message"] = message;
  emit("error", std::move(payload));
  std::cerr << "error: " << message << "\n";
  return code;
}

Coloring load_coloring(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KrtParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_krt(buffer.str());
}

ordered_json json_points(const std::vector<int>& points) {
  return ordered_json(points);
}

// Shared row shape for pnum payloads and grid lines. The bound is a decimal
// string because it outgrows every native width.
ordered_json report_row(int k, int r, int n, Variant variant,
                        std::optional<int> p,
                        const std::optional<BigNat>& bound,
                        std::optional<bool> ok,
                        const std::optional<Coloring>& counterexample,
                        std::uint64_t colorings_checked, double elapsed_ms,
                        const std::optional<std::string>& error) {
  ordered_json row;
  row["k"] = k;
  row["r"] = r;
  row["n"] = n;
  row["variant"] = variant_name(variant);
  if (p) row["p"] = *p; else row["p"] = nullptr;
  if (bound) row["bound"] = bound->str();
  else if (r == 0) row["bound"] = "n/a (r=0)";
  else row["bound"] = nullptr;
  if (ok) row["ok"] = *ok; else row["ok"] = nullptr;
  if (counterexample) row["counterexample_krt"] = write_krt(*counterexample);
  else row["counterexample_krt"] = nullptr;
  row["colorings_checked"] = colorings_checked;
  row["elapsed_ms"] = elapsed_ms;
  if (error) row["error"] = *error;
  return row;
}

struct GenArgs {
  std::string kind;
  int size = 0;
  int tuple = 0;
  int colors = 0;
  std::uint64_t seed = 0;
  Color constant_value = 0;
  std::string out;
};

int run_gen(const GenArgs& args) {
  Coloring c;
  if (args.kind == "constant")
    c = make_constant(args.size, args.tuple, args.colors,
                      args.constant_value);
  else if (args.kind == "parity")
    c = make_parity(args.size, args.tuple, args.colors);
  else if (args.kind == "random")
    c = make_random(args.size, args.tuple, args.colors, args.seed);
  else
    return emit_error(kExitUsage, "usage",
                      "unknown kind \"" + args.kind +
                          "\" (expected constant, parity, or random)");

  std::ofstream out(args.out, std::ios::binary);
  if (!out)
    return emit_error(kExitUsage, "usage", "cannot write " + args.out);
  out << write_krt(c);
  out.close();

  ordered_json payload;
  payload["path"] = args.out;
  payload["kind"] = args.kind;
  payload["ground_size"] = c.ground_size;
  payload["tuple_size"] = c.tuple_size;
  payload["num_colors"] = c.num_colors;
  if (args.kind == "random") payload["seed"] = args.seed;
  if (args.kind == "constant") payload["value"] = args.constant_value;
  emit("ok", std::move(payload));
  return kExitOk;
}

int run_track(const std::string& path, int dest) {
  const Coloring c = load_coloring(path);
  const Track tr = build_track(c, dest);
  const HikerMap map = hiker_map(c, tr);
  ordered_json payload;
  payload["destination"] = tr.destination;
  payload["points"] = json_points(tr.points);
  payload["delta"] = tr.delta();
  ordered_json map_json;
  map_json["delta"] = map.delta;
  map_json["arity"] = map.arity;
  map_json["entries"] = map.entries;
  payload["map"] = std::move(map_json);
  emit("ok", std::move(payload));
  return kExitOk;
}

int run_extract(const std::string& path) {
  const Coloring c = load_coloring(path);
  const MonochromaticWitness w = extract_monochromatic(c);
  ordered_json payload;
  payload["color"] = w.color;
  payload["members"] = json_points(w.members);
  emit("ok", std::move(payload));
  return kExitOk;
}

int run_check(const std::string& path, const std::vector<int>& seq,
              const std::vector<int>& set, bool have_seq, bool have_set) {
  if (have_seq == have_set)
    return emit_error(kExitUsage, "usage",
                      "check needs exactly one of --seq or --set");
  const Coloring c = load_coloring(path);
  ordered_json payload;
  if (have_seq) {
    const EndHomogeneity result = is_end_homogeneous(c, seq);
    payload["mode"] = "sequence";
    payload["holds"] = result.holds;
    if (!result.holds) {
      payload["violation"] = ordered_json(result.violation);
      emit("property-false", std::move(payload));
      return kExitOk;
    }
    emit("ok", std::move(payload));
    return kExitOk;
  }
  const MonoCheck result = is_monochromatic(c, set);
  payload["mode"] = "set";
  switch (result.kind) {
    case MonoCheck::Kind::uniform:
      payload["kind"] = "uniform";
      payload["color"] = *result.color;
      emit("ok", std::move(payload));
      return kExitOk;
    case MonoCheck::Kind::vacuous:
      payload["kind"] = "vacuous";
      payload["color"] = nullptr;
      emit("ok", std::move(payload));
      return kExitOk;
    case MonoCheck::Kind::mixed:
    default:
      payload["kind"] = "mixed";
      payload["color"] = nullptr;
      emit("property-false", std::move(payload));
      return kExitOk;
  }
}

int run_trie(const std::string& path) {
  const Coloring c = load_coloring(path);
  TrackTrie trie;
  const TrieStats stats = build_track_trie(c, &trie);
  ordered_json payload;
  payload["depth"] = stats.depth;
  payload["node_count"] = stats.node_count;
  payload["distinct_maps_per_level"] = stats.distinct_maps_per_level;
  ordered_json nodes = ordered_json::array();
  for (const auto& node : trie.nodes) {
    ordered_json item;
    item["point"] = node.point;
    item["parent"] = node.parent;
    nodes.push_back(std::move(item));
  }
  payload["nodes"] = std::move(nodes);
  emit("ok", std::move(payload));
  return kExitOk;
}

int run_pnum(int k, int r, int n, const std::string& variant_arg,
             std::uint64_t budget, int workers) {
  const Variant variant = parse_variant(variant_arg);
  const PNumberReport report = exact_p(k, r, n, variant, budget, workers);
  std::optional<bool> ok;
  if (report.bound) ok = BigNat(report.p) < *report.bound;
  emit("ok",
       report_row(report.k, report.r, report.n, report.variant, report.p,
                  report.bound, ok, report.counterexample,
                  report.colorings_checked, report.elapsed.count(),
                  std::nullopt));
  return kExitOk;
}

int run_bound(int k, int r, int n) {
  if (r == 0)
    return emit_error(kExitUsage, "domain",
                      "bound is undefined for arity 0");
  const BigNat b = theorem9_bound(k, r, n);
  ordered_json payload;
  payload["k"] = k;
  payload["r"] = r;
  payload["n"] = n;
  payload["bound"] = b.str();
  emit("ok", std::move(payload));
  return kExitOk;
}

int run_grid(const std::vector<std::string>& cell_args,
             const std::string& variant_arg, std::uint64_t budget,
             int workers) {
  const Variant variant = parse_variant(variant_arg);
  std::vector<GridCell> cells;
  for (const std::string& spec : cell_args) {
    GridCell cell;
    char sep1 = 0, sep2 = 0;
    std::istringstream in(spec);
    if (!(in >> cell.k >> sep1 >> cell.r >> sep2 >> cell.n) || sep1 != ':' ||
        sep2 != ':' || !(in >> std::ws).eof())
      return emit_error(kExitUsage, "usage",
                        "malformed cell \"" + spec + "\" (expected k:r:n)");
    cells.push_back(cell);
  }
  const std::vector<GridRow> rows =
      verify_bound_grid(cells, variant, budget, workers);
  bool any_budget_error = false;
  for (const GridRow& row : rows) {
    if (row.error) any_budget_error = true;
    std::cout << report_row(row.k, row.r, row.n, row.variant, row.p,
                            row.bound, row.ok, row.counterexample,
                            row.colorings_checked, row.elapsed.count(),
                            row.error)
                     .dump()
              << "\n";
  }
  return any_budget_error ? kExitBudget : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"finite-scale tracks, witnesses, and exact partition numbers"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a KRT coloring file");
  gen->add_option("--kind", gen_args.kind, "constant, parity, or random")
      ->required();
  gen->add_option("--size", gen_args.size, "ground set size N")->required();
  gen->add_option("--tuple", gen_args.tuple, "colored subset size t")
      ->required();
  gen->add_option("--colors", gen_args.colors, "number of colors r")
      ->required();
  gen->add_option("--seed", gen_args.seed, "random stream seed (random kind)");
  gen->add_option("--const", gen_args.constant_value,
                  "color value (constant kind)");
  gen->add_option("--out", gen_args.out, "output path")->required();

  std::string track_file;
  int track_dest = 0;
  auto* track = app.add_subcommand("track", "build a track and its map");
  track->add_option("--coloring", track_file, "KRT input file")->required();
  track->add_option("--dest", track_dest, "destination point")->required();

  std::string extract_file;
  auto* extract =
      app.add_subcommand("extract", "extract a monochromatic witness");
  extract->add_option("--coloring", extract_file, "KRT input file")
      ->required();

  std::string check_file;
  std::vector<int> check_seq, check_set;
  auto* check = app.add_subcommand(
      "check", "test a sequence for end-homogeneity or a set for uniformity");
  check->add_option("--coloring", check_file, "KRT input file")->required();
  auto* seq_opt =
      check->add_option("--seq", check_seq, "comma-separated point sequence")
          ->delimiter(',');
  auto* set_opt =
      check->add_option("--set", check_set, "comma-separated point set")
          ->delimiter(',');

  std::string trie_file;
  auto* trie = app.add_subcommand("trie", "build the track prefix trie");
  trie->add_option("--coloring", trie_file, "KRT input file")->required();

  int pk = 0, pr = 0, pn = 0;
  std::string pnum_variant = "track";
  std::uint64_t pnum_budget = kDefaultBudget;
  int pnum_workers = 0;
  auto* pnum = app.add_subcommand("pnum", "compute an exact partition number");
  pnum->add_option("-k", pk, "witness length")->required();
  pnum->add_option("-r", pr, "arity (subsets have size r+1)")->required();
  pnum->add_option("-n", pn, "number of colors")->required();
  pnum->add_option("--variant", pnum_variant, "track or seq");
  pnum->add_option("--budget", pnum_budget, "max colorings per ground size");
  pnum->add_option("--workers", pnum_workers, "0 = machine parallelism");

  int bk = 0, br = 0, bn = 0;
  auto* bound = app.add_subcommand("bound", "evaluate the exclusive bound");
  bound->add_option("-k", bk, "witness length")->required();
  bound->add_option("-r", br, "arity")->required();
  bound->add_option("-n", bn, "number of colors")->required();

  std::vector<std::string> grid_cells;
  std::string grid_variant = "track";
  std::uint64_t grid_budget = kDefaultBudget;
  int grid_workers = 0;
  auto* grid =
      app.add_subcommand("grid", "verify the bound over a cell grid");
  grid->add_option("--cells", grid_cells, "comma-separated k:r:n cells")
      ->delimiter(',')
      ->required();
  grid->add_option("--variant", grid_variant, "track or seq");
  grid->add_option("--budget", grid_budget, "max colorings per ground size");
  grid->add_option("--workers", grid_workers, "0 = machine parallelism");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text on stdout, exit 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(kExitUsage, "usage", e.what());
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (track->parsed()) return run_track(track_file, track_dest);
    if (extract->parsed()) return run_extract(extract_file);
    if (check->parsed())
      return run_check(check_file, check_seq, check_set,
                       seq_opt->count() > 0, set_opt->count() > 0);
    if (trie->parsed()) return run_trie(trie_file);
    if (pnum->parsed())
      return run_pnum(pk, pr, pn, pnum_variant, pnum_budget, pnum_workers);
    if (bound->parsed()) return run_bound(bk, br, bn);
    if (grid->parsed())
      return run_grid(grid_cells, grid_variant, grid_budget, grid_workers);
    return emit_error(kExitUsage, "usage", "no subcommand given");
  } catch (const BudgetExceeded& e) {
    return emit_error(kExitBudget, "budget", e.what());
  } catch (const KrtParseError& e) {
    return emit_error(kExitParse, "parse", e.what());
  } catch (const std::invalid_argument& e) {
    return emit_error(kExitUsage, "domain", e.what());
  } catch (const std::out_of_range& e) {
    return emit_error(kExitUsage, "domain", e.what());
  } catch (const std::exception& e) {
    return emit_error(kExitUsage, "internal", e.what());
  }
}

}  // namespace hiker::cli
