#include "hiker/pnumbers.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <utility>

#include "hiker/homogeneity.hpp"
#include "hiker/track.hpp"

namespace hiker {

const char* variant_name(Variant v) {
  return v == Variant::track ? "track" : "seq";
}

Variant parse_variant(const std::string& s) {
  if (s == "track") return Variant::track;
  if (s == "seq" || s == "sequence") return Variant::sequence;
  throw std::invalid_argument("unknown variant \"" + s +
                              "\" (expected track or seq)");
}

namespace {

std::string budget_message(const std::string& display, std::uint64_t budget,
                           int ground_size, std::optional<int> lower_bound) {
  std::string msg = "coloring space at N=" + std::to_string(ground_size) +
                    " requires " + display + " colorings, budget is " +
                    std::to_string(budget);
  if (lower_bound) msg += "; p > " + std::to_string(*lower_bound);
  return msg;
}

}  // namespace

BudgetExceeded::BudgetExceeded(BigNat required_count, std::string display,
                               std::uint64_t budget_limit, int ground,
                               std::optional<int> lower_bound)
    : std::runtime_error(
          budget_message(display, budget_limit, ground, lower_bound)),
      required(std::move(required_count)),
      required_display(std::move(display)),
      budget(budget_limit),
      ground_size(ground),
      partial_lower_bound(lower_bound) {}

BudgetExceeded::BudgetExceeded(const BigNat& required_count,
                               std::uint64_t budget_limit, int ground,
                               std::optional<int> lower_bound)
    : BudgetExceeded(required_count, required_count.str(), budget_limit,
                     ground, lower_bound) {}

namespace {

void check_spec(const StatementSpec& spec) {
  if (spec.arity < 0)
    throw std::invalid_argument("arity must be >= 0");
  if (spec.num_colors < 1)
    throw std::invalid_argument("num_colors must be >= 1");
  if (spec.target_length < 1)
    throw std::invalid_argument("target_length must be >= 1");
  if (spec.ground_size < spec.arity + 1)
    throw std::invalid_argument("ground_size must be >= arity + 1");
}

bool has_witness(const Coloring& c, int target_length, Variant variant) {
  if (variant == Variant::sequence)
    return find_end_homogeneous(c, target_length).has_value();
  for (int x = 0; x < c.ground_size; ++x)
    if (static_cast<int>(build_track(c, x).points.size()) >= target_length)
      return true;
  return false;
}

// colors[i] = digit i of `index` written big-endian in base n: the entry of
// highest colex rank is the fastest-spinning digit, so index order is
// lexicographic order of the color vectors.
void decode_coloring_index(std::uint64_t index, int n,
                           std::span<const std::uint64_t> place_value,
                           std::vector<Color>& colors) {
  const std::size_t count = place_value.size();
  colors.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    colors[i] = static_cast<Color>(
        (index / place_value[i]) % static_cast<std::uint64_t>(n));
}

void increment_coloring(std::vector<Color>& colors, int n) {
  for (std::size_t j = colors.size(); j-- > 0;) {
    if (static_cast<int>(++colors[j]) < n) return;
    colors[j] = 0;
  }
}

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t seen = target.load(std::memory_order_relaxed);
  while (value < seen &&
         !target.compare_exchange_weak(seen, value,
                                       std::memory_order_relaxed)) {
  }
}

constexpr std::uint64_t kNoFailure = std::numeric_limits<std::uint64_t>::max();

// Scans [lo, hi) ascending; stops once any worker has a failure below the
// next index to examine (nothing in the remaining range can beat it).
void scan_range(const StatementSpec& spec, std::uint64_t lo, std::uint64_t hi,
                std::span<const std::uint64_t> place_value,
                std::atomic<std::uint64_t>& first_failure) {
  Coloring c{spec.ground_size, spec.arity + 1, spec.num_colors, {}};
  decode_coloring_index(lo, spec.num_colors, place_value, c.colors);
  for (std::uint64_t index = lo; index < hi; ++index) {
    if (first_failure.load(std::memory_order_relaxed) < index) return;
    if (!has_witness(c, spec.target_length, spec.variant)) {
      atomic_min(first_failure, index);
      return;
    }
    increment_coloring(c.colors, spec.num_colors);
  }
}

}  // namespace

StatementResult statement_holds(const StatementSpec& spec,
                                std::uint64_t budget, int workers) {
  check_spec(spec);
  // Any r+2 points are already a witness: length <= arity+1 makes the
  // end-homogeneity condition empty and the track through 0..arity is free.
  if (spec.target_length <= spec.arity + 1) return {true, std::nullopt, 0};
  // No sequence can be longer than the ground set, so the very first
  // coloring already fails.
  if (spec.target_length > spec.ground_size) {
    const std::uint64_t count = binomial_u64(
        static_cast<std::uint64_t>(spec.ground_size),
        static_cast<std::uint64_t>(spec.arity) + 1);
    Coloring first{spec.ground_size, spec.arity + 1, spec.num_colors,
                   std::vector<Color>(count, 0)};
    return {false, std::move(first), 1};
  }

  // One color admits one coloring, and the constant coloring always carries
  // the full ground set as both track and sequence; checking it would only
  // materialize a possibly enormous all-zero vector.
  if (spec.num_colors == 1) return {true, std::nullopt, 1};

  const std::uint64_t count = binomial_u64(
      static_cast<std::uint64_t>(spec.ground_size),
      static_cast<std::uint64_t>(spec.arity) + 1);
  // Expanding n^count is cheap up to a few thousand digits; past that the
  // space dwarfs any uint64 budget anyway, so report it symbolically.
  constexpr std::uint64_t kMaxExactExpand = 4096;
  if (count > kMaxExactExpand)
    throw BudgetExceeded(BigNat(0),
                         std::to_string(spec.num_colors) + "^" +
                             std::to_string(count),
                         budget, spec.ground_size, std::nullopt);
  const BigNat required = boost::multiprecision::pow(
      BigNat(spec.num_colors), static_cast<unsigned>(count));
  if (required > budget)
    throw BudgetExceeded(required, budget, spec.ground_size, std::nullopt);
  const std::uint64_t total = static_cast<std::uint64_t>(required);

  std::vector<std::uint64_t> place_value(count);
  for (std::size_t i = count; i-- > 0;)
    place_value[i] = (i + 1 == count)
                         ? 1
                         : place_value[i + 1] *
                               static_cast<std::uint64_t>(spec.num_colors);

  int nworkers = workers > 0
                     ? workers
                     : static_cast<int>(std::thread::hardware_concurrency());
  if (nworkers < 1) nworkers = 1;
  const std::uint64_t min_chunk = 2048;
  nworkers = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(nworkers),
      std::max<std::uint64_t>(1, total / min_chunk)));

  std::atomic<std::uint64_t> first_failure{kNoFailure};
  if (nworkers == 1) {
    scan_range(spec, 0, total, place_value, first_failure);
  } else {
    const std::uint64_t chunk =
        (total + static_cast<std::uint64_t>(nworkers) - 1) /
        static_cast<std::uint64_t>(nworkers);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nworkers));
    for (int w = 0; w < nworkers; ++w) {
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        scan_range(spec, lo, hi, place_value, first_failure);
      });
    }
    for (auto& th : pool) th.join();
  }

  const std::uint64_t failed = first_failure.load();
  if (failed == kNoFailure) return {true, std::nullopt, total};
  Coloring counter{spec.ground_size, spec.arity + 1, spec.num_colors, {}};
  decode_coloring_index(failed, spec.num_colors, place_value, counter.colors);
  return {false, std::move(counter), failed + 1};
}

PNumberReport exact_p(int k, int r, int n, Variant variant,
                      std::uint64_t budget, int workers) {
  if (k < 1) throw std::invalid_argument("target_length must be >= 1");
  if (r < 0) throw std::invalid_argument("arity must be >= 0");
  if (n < 1) throw std::invalid_argument("num_colors must be >= 1");
  const auto start_time = std::chrono::steady_clock::now();

  std::optional<BigNat> bound;
  if (r >= 1) bound = theorem9_bound(k, r, n);

  std::optional<Coloring> counterexample;
  for (int N = std::max(k, r + 1);; ++N) {
    // Termination safety nets; reaching either means the implementation
    // (not the input) is wrong.
    if (bound && k >= 2 && BigNat(N) >= *bound)
      throw std::logic_error("scan passed the exclusive bound without success");
    if (r == 0 &&
        static_cast<long long>(N) >
            static_cast<long long>(n) * (k - 1) + 1)
      throw std::logic_error("scan passed the pigeonhole bound");

    StatementSpec spec{N, r, n, k, variant};
    StatementResult res;
    try {
      res = statement_holds(spec, budget, workers);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded(e.required, e.required_display, e.budget, N,
                           N - 1);
    }
    if (res.holds) {
      if (bound && k >= 2 && !(BigNat(N) < *bound))
        throw std::logic_error("computed value violates the strict bound");
      PNumberReport report{k,
                           r,
                           n,
                           variant,
                           N,
                           std::move(bound),
                           std::move(counterexample),
                           res.colorings_checked,
                           std::chrono::steady_clock::now() - start_time};
      return report;
    }
    counterexample = std::move(res.counterexample);
  }
}

BigNat theorem9_bound(int k, int r, int n) {
  if (r < 1)
    throw std::invalid_argument("bound is undefined for arity 0");
  if (n < 1) throw std::invalid_argument("num_colors must be >= 1");
  if (k < 1) throw std::invalid_argument("target_length must be >= 1");
  BigNat b = r + 1;
  for (int i = 0; i <= k - 2; ++i) {
    const std::uint64_t e =
        binomial_u64(static_cast<std::uint64_t>(r) + i,
                     static_cast<std::uint64_t>(r));
    if (e > std::numeric_limits<unsigned>::max())
      throw std::overflow_error("bound term exponent does not fit");
    b += boost::multiprecision::pow(BigNat(n), static_cast<unsigned>(e));
  }
  return b;
}

std::vector<GridRow> verify_bound_grid(std::span<const GridCell> cells,
                                       Variant variant, std::uint64_t budget,
                                       int workers) {
  std::vector<GridRow> rows;
  rows.reserve(cells.size());
  for (const GridCell& cell : cells) {
    GridRow row;
    row.k = cell.k;
    row.r = cell.r;
    row.n = cell.n;
    row.variant = variant;
    try {
      if (cell.r >= 1) row.bound = theorem9_bound(cell.k, cell.r, cell.n);
      PNumberReport rep =
          exact_p(cell.k, cell.r, cell.n, variant, budget, workers);
      row.p = rep.p;
      row.counterexample = std::move(rep.counterexample);
      row.colorings_checked = rep.colorings_checked;
      row.elapsed = rep.elapsed;
      if (row.p && row.bound) row.ok = BigNat(*row.p) < *row.bound;
    } catch (const BudgetExceeded& e) {
      row.error = e.what();
    } catch (const std::invalid_argument& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hiker
