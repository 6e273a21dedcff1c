#include "hiker/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace hiker {

namespace {

// Pascal table in uint64_t with a saturation sentinel. Covers every rank
// computation that can address real storage; anything larger falls back
// to exact arithmetic.
constexpr std::uint64_t kOverflow = std::numeric_limits<std::uint64_t>::max();
constexpr int kTableRows = 132;

const std::vector<std::vector<std::uint64_t>>& pascal_table() {
  static const std::vector<std::vector<std::uint64_t>> table = [] {
    std::vector<std::vector<std::uint64_t>> t(kTableRows);
    for (int n = 0; n < kTableRows; ++n) {
      t[n].resize(static_cast<std::size_t>(n) + 1);
      t[n][0] = 1;
      t[n][n] = 1;
      for (int k = 1; k < n; ++k) {
        std::uint64_t a = t[n - 1][k - 1];
        std::uint64_t b = t[n - 1][k];
        t[n][k] = (a == kOverflow || b == kOverflow || a > kOverflow - b)
                      ? kOverflow
                      : a + b;
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

BigNat binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigNat result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is a prefix binomial after each step
  }
  return result;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (n < kTableRows) {
    std::uint64_t v = pascal_table()[n][k];
    if (v == kOverflow) throw std::overflow_error("binomial exceeds 64 bits");
    return v;
  }
  BigNat v = binomial(n, k);
  if (v > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("binomial exceeds 64 bits");
  return v.convert_to<std::uint64_t>();
}

std::uint64_t colex_rank(std::span<const int> members) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0)
      throw std::invalid_argument("subset members must be non-negative");
    if (i > 0 && members[i] <= members[i - 1])
      throw std::invalid_argument("subset members must be strictly increasing");
    std::uint64_t term =
        binomial_u64(static_cast<std::uint64_t>(members[i]), i + 1);
    if (rank > std::numeric_limits<std::uint64_t>::max() - term)
      throw std::overflow_error("colex rank exceeds 64 bits");
    rank += term;
  }
  return rank;
}

std::vector<int> colex_unrank(std::uint64_t rank, int t) {
  if (t < 0) throw std::invalid_argument("subset size must be non-negative");
  std::vector<int> members(static_cast<std::size_t>(t));
  for (int pos = t - 1; pos >= 0; --pos) {
    // largest c with C(c, pos+1) <= rank
    int c = pos;
    while (binomial_u64(static_cast<std::uint64_t>(c) + 1,
                        static_cast<std::uint64_t>(pos) + 1) <= rank)
      ++c;
    members[static_cast<std::size_t>(pos)] = c;
    rank -= binomial_u64(static_cast<std::uint64_t>(c),
                         static_cast<std::uint64_t>(pos) + 1);
  }
  return members;
}

bool next_subset(std::span<int> idx, int m) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j)
    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

}  // namespace hiker
