#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hiker/coloring.hpp"
#include "hiker/combinatorics.hpp"

namespace hiker {

// Which witness notion decides a statement: `track` asks for a greedy track
// of the target length, `sequence` for any end-homogeneous sequence of that
// length. Sequence witnesses are at least as easy to find, so p(sequence)
// <= p(track) cell by cell.
enum class Variant { track, sequence };

const char* variant_name(Variant v);          // "track" / "seq"
Variant parse_variant(const std::string& s);  // accepts the names above

// "Every num_colors-coloring of the (arity+1)-subsets of {0,...,N-1} admits
// a witness of target_length."
struct StatementSpec {
  int ground_size = 0;    // N
  int arity = 0;          // r >= 0; colored subsets have size r+1
  int num_colors = 0;     // n >= 1
  int target_length = 0;  // k >= 1
  Variant variant = Variant::track;
};

struct StatementResult {
  bool holds = true;
  // First failing coloring in enumeration order, when holds is false.
  std::optional<Coloring> counterexample;
  // Canonical sequential count: colorings up to and including the first
  // failure, or the whole space when the statement holds. Independent of
  // worker count.
  std::uint64_t colorings_checked = 0;
};

// Thrown instead of silently sampling when the coloring space outgrows the
// budget. `required` is the exact space size n^C(N, r+1) whenever the
// exponent is small enough to expand (a few thousand digits); beyond that it
// is 0 and `required_display` carries the size symbolically ("n^C").
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(BigNat required_count, std::string display,
                 std::uint64_t budget_limit, int ground_size,
                 std::optional<int> lower_bound);
  BudgetExceeded(const BigNat& required_count, std::uint64_t budget_limit,
                 int ground_size, std::optional<int> lower_bound);

  BigNat required;
  std::string required_display;
  std::uint64_t budget;
  int ground_size;
  // Set when a least-N scan died at this ground size: p > partial_lower_bound.
  std::optional<int> partial_lower_bound;
};

// Exhaustively decides the statement. Colorings are enumerated by a
// colex-indexed odometer over the color vector (entry of highest colex rank
// spins fastest), so "first failing coloring" is well defined and workers
// can split the index range; the smallest failing index wins regardless of
// scheduling. workers = 0 means hardware concurrency.
//
// Shortcuts taken before any enumeration (and before the budget guard):
// target_length <= arity+1 is vacuously true, and target_length >
// ground_size is false on the very first coloring since no sequence is long
// enough.
StatementResult statement_holds(const StatementSpec& spec,
                                std::uint64_t budget, int workers = 0);

struct PNumberReport {
  int k = 0;  // target witness length
  int r = 0;  // arity
  int n = 0;  // number of colors
  Variant variant = Variant::track;
  int p = 0;  // least N for which the statement holds
  std::optional<BigNat> bound;  // theorem9_bound(k,r,n); r >= 1 only
  std::optional<Coloring> counterexample;  // at N = p-1; absent when the
                                           // scan starts at a true N
  std::uint64_t colorings_checked = 0;     // count at the deciding N
  std::chrono::duration<double, std::milli> elapsed{0};
};

// Least N such that statement_holds(N, r, n, k, variant). Scans upward from
// max(k, r+1); monotonicity in N (restriction preserves witnesses) makes
// the first true N the answer. Throws BudgetExceeded with the partial lower
// bound when some N in the scan is too big to enumerate.
PNumberReport exact_p(int k, int r, int n, Variant variant,
                      std::uint64_t budget, int workers = 0);

// B = r + 1 + sum_{i=0}^{k-2} n^C(r+i, r), the exclusive upper bound on
// p(k,r,n). Exact at any magnitude. For k < 2 the sum is empty and B = r+1.
// Throws for r = 0 (the bound's hypothesis needs positive arity) and n < 1.
BigNat theorem9_bound(int k, int r, int n);

struct GridCell {
  int k = 0;
  int r = 0;
  int n = 0;
};

struct GridRow {
  int k = 0;
  int r = 0;
  int n = 0;
  Variant variant = Variant::track;
  std::optional<int> p;            // absent when the cell exceeded budget
  std::optional<BigNat> bound;     // absent for r = 0
  std::optional<bool> ok;          // p < bound; absent when either is absent
  std::optional<Coloring> counterexample;
  std::uint64_t colorings_checked = 0;
  std::chrono::duration<double, std::milli> elapsed{0};
  std::optional<std::string> error;  // budget message for failed cells
};

// exact_p + theorem9_bound per cell; a budget failure marks its row and the
// remaining cells still run.
std::vector<GridRow> verify_bound_grid(std::span<const GridCell> cells,
                                       Variant variant, std::uint64_t budget,
                                       int workers = 0);

}  // namespace hiker
