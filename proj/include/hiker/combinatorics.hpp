#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hiker {

// Arbitrary-precision non-negative integer. Bound sums like
// n^C(r+i,r) overflow every native width almost immediately.
using BigNat = boost::multiprecision::cpp_int;

// C(n,k), exact at all magnitudes. k > n yields 0 so sums need no guards.
BigNat binomial(std::uint64_t n, std::uint64_t k);

// C(n,k) as uint64_t; throws std::overflow_error if the value does not fit.
// Used for array sizing and colex ranks, which must be addressable anyway.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

// Colex rank of a strictly increasing subset: sum of C(s[i], i+1).
// Independent of any ambient ground size, so colorings extend by prefix.
// The empty subset ranks 0. Throws std::invalid_argument if not strictly
// increasing or if any member is negative.
std::uint64_t colex_rank(std::span<const int> members);

// Inverse of colex_rank for t-element subsets: greedy largest-member-first
// decomposition of the rank.
std::vector<int> colex_unrank(std::uint64_t rank, int t);

// In-place successor over k-subsets of {0,...,m-1} in lexicographic order.
// idx must hold a valid subset; returns false (idx unspecified) after the
// last one. Start from {0,...,k-1}.
bool next_subset(std::span<int> idx, int m);

}  // namespace hiker
