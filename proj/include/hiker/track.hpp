#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hiker/coloring.hpp"

namespace hiker {

// Greedy walk toward a destination point. points = x_0 < ... < x_delta with
// x_delta = dest; the first min(n, delta+1) entries are 0,...,n-1 (or a
// prefix when dest < n).
struct Track {
  int destination = 0;
  int arity = 0;  // n; the coloring has tuple size n+1
  std::vector<int> points;

  int delta() const { return static_cast<int>(points.size()) - 1; }
  bool operator==(const Track&) const = default;
};

// The destination's color function restricted to its track: entry at colex
// rank of s (an n-subset of {0,...,delta-1}) is the color of
// {points[i]: i in s} + {destination}. Domain size is part of identity:
// two maps with different delta are unequal even when both entry lists are
// empty. The injectivity argument leans on that.
struct HikerMap {
  int delta = 0;
  int arity = 0;
  int num_colors = 0;
  std::vector<Color> entries;

  bool operator==(const HikerMap&) const = default;
};

// Builds the track greedily: start with 0,...,n-1; at each later step scan
// candidates upward from last+1 and take the first y whose color agrees with
// the destination's on every n-subset of the points so far; stop at dest.
// Accepts arity 0 (empty constraint: the track collects every point below
// dest of dest's own color, plus dest).
Track build_track(const Coloring& c, int dest);

HikerMap hiker_map(const Coloring& c, const Track& tr);

struct InjectivityReport {
  bool injective = true;
  // Destinations of the first colliding pair, in scan order.
  std::optional<std::pair<int, int>> collision;
};

// Builds (delta, map) for every destination and checks pairwise distinctness.
// Always true for a correct implementation; exists as an executable check of
// that fact.
InjectivityReport check_injectivity(const Coloring& c);

// Maps for all destinations, indexed by destination.
std::vector<HikerMap> all_hiker_maps(const Coloring& c);

// Number of distinct hiker maps with delta = d across all destinations.
// Bounded by r^C(d,n) and by the number of destinations attaining d.
std::size_t count_distinct_maps(const Coloring& c, int d);

}  // namespace hiker
