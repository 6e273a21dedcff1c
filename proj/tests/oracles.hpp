#pragma once

// Independent reference implementations used only by tests. Everything here
// favors the most literal possible reading over speed, so disagreement with
// the library points at the library.

#include <optional>
#include <vector>

#include "hiker/coloring.hpp"
#include "hiker/combinatorics.hpp"
#include "hiker/track.hpp"

namespace oracles {

// Track construction by full rescan: at every step consider every ground
// point from 0 upward, skipping already-chosen ones, and take the first that
// agrees with the destination on all n-subsets of the points so far. No
// resume-after-last shortcut; coincidence with hiker::build_track is exactly
// what the tests assert.
hiker::Track naive_build_track(const hiker::Coloring& c, int dest);

// End-homogeneity by literal quantifier expansion over all index tuples
// b_0 < ... < b_{n+1}, recursively generated.
bool naive_end_homogeneous(const hiker::Coloring& c,
                           const std::vector<int>& w);

// First (lexicographically least) increasing length-k sequence passing
// naive_end_homogeneous, by enumerating every k-subset of the ground set.
std::optional<std::vector<int>> brute_force_witness(const hiker::Coloring& c,
                                                    int k);

// All t-subsets of {0,...,ground-1} sorted by the defining colex comparison:
// the subset whose largest non-shared member is smaller comes first.
std::vector<std::vector<int>> colex_sorted_subsets(int ground, int t);

// C(n,k) by the Pascal recurrence alone.
hiker::BigNat pascal_binomial(int n, int k);

}  // namespace oracles
