// Release gate. Each check prints one [PASS]/[FAIL] line; the exit status is
// the number of failures. Heavier than the unit suite: full corpus sweeps,
// exhaustive small-space oracle comparisons, and end-to-end CLI runs (the
// binary path arrives in HIKERTRACK_CLI).

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hiker/coloring.hpp"
#include "hiker/combinatorics.hpp"
#include "hiker/homogeneity.hpp"
#include "hiker/pnumbers.hpp"
#include "hiker/track.hpp"
#include "oracles.hpp"

namespace {

using namespace hiker;
using Clock = std::chrono::steady_clock;
constexpr std::uint64_t kBudget = 100'000'000ull;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// nullopt = pass; a string is the failure detail.
using Verdict = std::optional<std::string>;

template <typename... Parts>
Verdict fail(Parts&&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

// 1000 seeded random colorings spanning N <= 10, arity 1 and 2, 2 and 3
// colors, then constant and parity colorings over the same spans.
const std::vector<Coloring>& corpus() {
  static const std::vector<Coloring> all = [] {
    std::vector<Coloring> cs;
    for (int i = 0; i < 1000; ++i) {
      int ground = 3 + i % 8;
      int arity = 1 + (i / 8) % 2;
      int colors = 2 + (i / 16) % 2;
      cs.push_back(make_random(ground, arity + 1, colors,
                               1000 + static_cast<std::uint64_t>(i)));
    }
    for (int ground : {4, 6, 8, 10})
      for (int arity : {1, 2})
        for (int colors : {2, 3}) {
          cs.push_back(make_constant(ground, arity + 1, colors, 0));
          cs.push_back(make_parity(ground, arity + 1, colors));
        }
    return cs;
  }();
  return all;
}

Verdict exact_p_grid() {
  struct Cell {
    int k, r, n, p;
    std::uint64_t checked;
  };
  const Cell cells[] = {{3, 1, 2, 4, 64}, {3, 1, 3, 5, 59049},
                        {4, 2, 2, 5, 1024}};
  for (const Cell& cell : cells)
    for (Variant variant : {Variant::track, Variant::sequence}) {
      auto t0 = Clock::now();
      PNumberReport rep = exact_p(cell.k, cell.r, cell.n, variant, kBudget);
      double dt = seconds_since(t0);
      if (rep.p != cell.p)
        return fail("p(", cell.k, ",", cell.r, ",", cell.n, ") ", variant_name(variant),
                    " = ", rep.p, ", expected ", cell.p);
      if (rep.colorings_checked != cell.checked)
        return fail("deciding ground of p(", cell.k, ",", cell.r, ",", cell.n,
                    ") checked ", rep.colorings_checked, " colorings, expected ",
                    cell.checked);
      if (dt >= 5.0)
        return fail("p(", cell.k, ",", cell.r, ",", cell.n, ") ",
                    variant_name(variant), " took ", dt, "s (limit 5)");
    }
  return std::nullopt;
}

Verdict pigeonhole_closed_form() {
  auto t0 = Clock::now();
  for (int k : {2, 3, 4})
    for (int n : {2, 3}) {
      int expected = n * (k - 1) + 1;
      for (Variant variant : {Variant::track, Variant::sequence}) {
        PNumberReport rep = exact_p(k, 0, n, variant, kBudget);
        if (rep.p != expected)
          return fail("p(", k, ",0,", n, ") ", variant_name(variant), " = ",
                      rep.p, ", expected ", expected);
      }
    }
  double dt = seconds_since(t0);
  if (dt >= 1.0) return fail("closed-form sweep took ", dt, "s (limit 1)");
  return std::nullopt;
}

Verdict strict_bound() {
  struct Cell {
    int k, r, n;
    const char* bound;
  };
  const Cell cells[] = {{3, 1, 2, "8"}, {3, 1, 3, "14"}, {4, 2, 2, "77"}};
  for (const Cell& cell : cells) {
    BigNat bound = theorem9_bound(cell.k, cell.r, cell.n);
    if (bound.str() != cell.bound)
      return fail("bound(", cell.k, ",", cell.r, ",", cell.n, ") = ",
                  bound.str(), ", expected ", cell.bound);
    PNumberReport rep =
        exact_p(cell.k, cell.r, cell.n, Variant::track, kBudget);
    if (!(BigNat(rep.p) < bound))
      return fail("p(", cell.k, ",", cell.r, ",", cell.n, ") = ", rep.p,
                  " not strictly below ", bound.str());
  }
  return std::nullopt;
}

Verdict map_injectivity() {
  for (const Coloring& c : corpus()) {
    InjectivityReport rep = check_injectivity(c);
    if (!rep.injective)
      return fail("destinations ", rep.collision->first, " and ",
                  rep.collision->second, " share a map (N=", c.ground_size,
                  " t=", c.tuple_size, " r=", c.num_colors, ")");
  }
  return std::nullopt;
}

Verdict track_properties() {
  for (const Coloring& c : corpus())
    for (int dest = 0; dest < c.ground_size; ++dest) {
      Track tr = build_track(c, dest);
      if (tr.points.empty() || tr.points.back() != dest)
        return fail("track for ", dest, " does not end at it");
      for (std::size_t i = 1; i < tr.points.size(); ++i)
        if (tr.points[i - 1] >= tr.points[i])
          return fail("track for ", dest, " is not strictly increasing");
      if (!is_end_homogeneous(c, tr.points).holds)
        return fail("track for ", dest, " is not end-homogeneous (N=",
                    c.ground_size, " t=", c.tuple_size, ")");
      for (std::size_t j = 0; j + 1 < tr.points.size(); ++j) {
        Track inner = build_track(c, tr.points[j]);
        std::vector<int> prefix(tr.points.begin(),
                                tr.points.begin() + static_cast<long>(j) + 1);
        if (inner.points != prefix)
          return fail("track for interior point ", tr.points[j],
                      " is not the prefix of the track for ", dest);
      }
      if (oracles::naive_build_track(c, dest).points != tr.points)
        return fail("naive reference disagrees for destination ", dest,
                    " (N=", c.ground_size, " t=", c.tuple_size, ")");
    }
  return std::nullopt;
}

Verdict map_counting() {
  for (const Coloring& c : corpus())
    for (int d = 0; d < c.ground_size; ++d) {
      std::size_t count = count_distinct_maps(c, d);
      BigNat cap = boost::multiprecision::pow(
          BigNat(c.num_colors),
          static_cast<unsigned>(binomial_u64(d, c.arity())));
      if (BigNat(count) > cap)
        return fail(count, " distinct maps at delta ", d, " exceeds r^C(d,n) = ",
                    cap.str());
    }
  return std::nullopt;
}

Verdict extraction() {
  for (const Coloring& c : corpus()) {
    MonochromaticWitness w = extract_monochromatic(c);
    MonoCheck mc = is_monochromatic(c, w.members);
    if (mc.kind == MonoCheck::Kind::mixed)
      return fail("extracted set is not monochromatic (N=", c.ground_size,
                  " t=", c.tuple_size, " r=", c.num_colors, ")");
    if (mc.kind == MonoCheck::Kind::uniform && *mc.color != w.color)
      return fail("extracted color ", w.color, " but subsets are ", *mc.color);
  }
  MonochromaticWitness parity = extract_monochromatic(make_parity(6, 2, 2));
  if (parity.color != 0 || parity.members != std::vector<int>{1, 3})
    return fail("parity N=6 extraction drifted from color 0, {1,3}");
  for (int ground : {4, 6, 8, 10})
    for (int arity : {1, 2})
      for (int colors : {2, 3}) {
        MonochromaticWitness w =
            extract_monochromatic(make_constant(ground, arity + 1, colors, 0));
        if (static_cast<int>(w.members.size()) != ground)
          return fail("constant coloring N=", ground, " t=", arity + 1,
                      " extracted only ", w.members.size(), " points");
      }
  return std::nullopt;
}

Verdict witness_search_oracle() {
  auto t0 = Clock::now();
  std::uint64_t spaces_checked = 0;
  for (int ground = 2; ground <= 6; ++ground) {
    int entries = static_cast<int>(binomial_u64(ground, 2));
    for (std::uint32_t index = 0; index < (1u << entries); ++index) {
      std::vector<Color> colors(static_cast<std::size_t>(entries));
      for (int i = 0; i < entries; ++i)
        colors[static_cast<std::size_t>(i)] = (index >> (entries - 1 - i)) & 1u;
      Coloring c = make_explicit(ground, 2, 2, std::move(colors));
      auto found = find_end_homogeneous(c, 3);
      auto brute = oracles::brute_force_witness(c, 3);
      if (found.has_value() != brute.has_value())
        return fail("presence mismatch at N=", ground, " index ", index);
      if (found && (!found->verified || found->points != *brute))
        return fail("witness mismatch at N=", ground, " index ", index);
      ++spaces_checked;
    }
  }
  if (spaces_checked != 33866)
    return fail("enumerated ", spaces_checked, " colorings, expected 33866");
  double dt = seconds_since(t0);
  if (dt >= 60.0) return fail("sweep took ", dt, "s (limit 60)");
  return std::nullopt;
}

Verdict trie_growth() {
  ParityOracle oracle(2, 2);
  int prev_depth = -1;
  for (int ground : {4, 6, 8, 10}) {
    Coloring c = truncate(oracle, ground);
    TrieStats stats = build_track_trie(c);
    if (stats.depth < prev_depth)
      return fail("depth dropped from ", prev_depth, " to ", stats.depth,
                  " at N=", ground);
    prev_depth = stats.depth;
    int max_delta = 0;
    for (int dest = 0; dest < ground; ++dest)
      max_delta = std::max(max_delta, build_track(c, dest).delta());
    if (stats.depth != max_delta)
      return fail("depth ", stats.depth, " != max delta ", max_delta, " at N=",
                  ground);
    if (ground == 6 && (stats.depth != 3 || stats.node_count != 6))
      return fail("N=6 trie is depth ", stats.depth, " with ",
                  stats.node_count, " nodes, expected depth 3 with 6");
  }
  return std::nullopt;
}

struct CliRun {
  int exit_code = -1;
  std::string out;
};

CliRun run_cli(const std::string& command) {
  CliRun result;
  std::string full = command + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.out.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string mask_elapsed(const std::string& s) {
  static const std::regex pattern("\"elapsed_ms\":[0-9.eE+-]+");
  return std::regex_replace(s, pattern, "\"elapsed_ms\":0");
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Verdict determinism_and_format() {
  const char* cli = std::getenv("HIKERTRACK_CLI");
  if (!cli) return fail("HIKERTRACK_CLI is not set");
  std::filesystem::path tmp = "acceptance_tmp";
  std::filesystem::create_directories(tmp);

  std::string exe = std::string("\"") + cli + "\"";
  std::string gen_out = (tmp / "gen.krt").string();
  std::vector<std::pair<std::string, bool>> invocations = {
      {exe + " gen --kind random --size 7 --tuple 2 --colors 3 --seed 42"
             " --out " + gen_out,
       false},
      {exe + " track --coloring " + gen_out + " --dest 6", false},
      {exe + " extract --coloring " + gen_out, false},
      {exe + " check --coloring " + gen_out + " --seq 0,1,2", false},
      {exe + " trie --coloring " + gen_out, false},
      {exe + " bound -k 4 -r 2 -n 2", false},
      {exe + " pnum -k 3 -r 1 -n 2", true},
      {exe + " grid --cells 3:1:2,3:0:2", true},
  };
  for (const auto& [command, timed] : invocations) {
    CliRun first = run_cli(command);
    std::string file_first =
        command.find(" gen ") != std::string::npos ? slurp(gen_out) : "";
    CliRun second = run_cli(command);
    if (first.exit_code != 0 || second.exit_code != 0)
      return fail("nonzero exit from: ", command);
    if (first.out.empty()) return fail("empty output from: ", command);
    std::string a = timed ? mask_elapsed(first.out) : first.out;
    std::string b = timed ? mask_elapsed(second.out) : second.out;
    if (a != b) return fail("outputs differ between runs of: ", command);
    if (!file_first.empty() && slurp(gen_out) != file_first)
      return fail("written files differ between runs of: ", command);
  }

  for (int i = 0; i < 200; ++i) {
    int ground = 2 + i % 9;
    int tuple = 1 + i % std::min(ground, 3);
    int colors = 2 + i % 3;
    Coloring c;
    switch (i % 3) {
      case 0:
        c = make_random(ground, tuple, colors, 5000 + static_cast<std::uint64_t>(i));
        break;
      case 1:
        c = make_parity(ground, tuple, colors);
        break;
      default:
        c = make_constant(ground, tuple, colors, static_cast<Color>(i % colors));
    }
    std::filesystem::path path = tmp / ("krt_" + std::to_string(i) + ".krt");
    {
      std::ofstream out(path, std::ios::binary);
      out << write_krt(c);
    }
    std::string bytes = slurp(path);
    Coloring parsed = parse_krt(bytes);
    if (write_krt(parsed) != bytes)
      return fail("reserialization changed file ", path.string());
    if (!(parsed == c))
      return fail("round trip changed the coloring in ", path.string());
  }
  return std::nullopt;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> checks[] = {
      {"exact p grid: p(3,1,2)=4 p(3,1,3)=5 p(4,2,2)=5, both variants, "
       "full enumeration",
       exact_p_grid},
      {"pigeonhole closed form p(k,0,n) = n(k-1)+1 for k in 2..4, n in 2..3",
       pigeonhole_closed_form},
      {"exclusive bounds 8 / 14 / 77 hold strictly in exact arithmetic",
       strict_bound},
      {"hiker maps stay injective across the 1032-coloring corpus",
       map_injectivity},
      {"tracks terminate, increase, stay end-homogeneous, prefix-close, and "
       "match the naive reference",
       track_properties},
      {"distinct maps at delta d never exceed r^C(d,n)", map_counting},
      {"extracted witnesses are monochromatic; parity and constant pins hold",
       extraction},
      {"witness search agrees with brute force on all 33866 two-colorings up "
       "to N=6",
       witness_search_oracle},
      {"parity trie depth is non-decreasing, equals max delta; N=6 gives "
       "depth 3 / 6 nodes",
       trie_growth},
      {"CLI output is byte-deterministic and KRT round-trips 200 files",
       determinism_and_format},
  };

  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : checks) {
    ++index;
    Verdict verdict;
    try {
      verdict = run();
    } catch (const std::exception& e) {
      verdict = std::string("unexpected exception: ") + e.what();
    }
    if (verdict) {
      ++failures;
      std::printf("[FAIL] %2d/10 %s — %s\n", index, name, verdict->c_str());
    } else {
      std::printf("[PASS] %2d/10 %s\n", index, name);
    }
    std::fflush(stdout);
  }
  if (failures) std::printf("%d of 10 checks failed\n", failures);
  return failures;
}
