#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hiker/coloring.hpp"

namespace hiker {

// Outcome of the end-homogeneity check. When the property fails, `violation`
// holds the first (lexicographically least) index tuple b_0 < ... < b_{n+1}
// into the checked sequence whose two (n+1)-set colors differ.
struct EndHomogeneity {
  bool holds = true;
  std::vector<int> violation;
};

// True iff for every b_0 < ... < b_n < b_{n+1} < |w| the color of
// {w[b_0],...,w[b_{n-1}], w[b_n]} equals the color of
// {w[b_0],...,w[b_{n-1}], w[b_{n+1}]} — i.e. the color of an (n+1)-set drawn
// from w never depends on which later point closes it. Vacuously true when
// |w| <= n+1. Throws on non-increasing or out-of-range input.
EndHomogeneity is_end_homogeneous(const Coloring& c, std::span<const int> w);

struct WitnessSequence {
  std::vector<int> points;
  int arity = 0;
  // Set by actually re-running is_end_homogeneous, never assumed.
  bool verified = false;
};

// Full point sequence of a delta-maximal track; ties go to the smallest
// destination. Always end-homogeneous (tracks are built that way).
WitnessSequence longest_track_sequence(const Coloring& c);

// Lexicographically least increasing end-homogeneous sequence of length
// exactly k, or nullopt when none exists. Depth-first search with
// incremental constraint checking, independent of the greedy track.
std::optional<WitnessSequence> find_end_homogeneous(const Coloring& c, int k);

struct PigeonholeClass {
  Color color = 0;
  std::vector<int> indices;
};

// Maximum-cardinality color class of `values`; ties go to the smallest
// color. Indices come back increasing. Throws on empty input.
PigeonholeClass pigeonhole_extract(std::span<const Color> values,
                                   int num_colors);

struct MonochromaticWitness {
  Color color = 0;
  std::vector<int> members;
};

// Recursion on arity: at arity 0 pigeonhole the point colors; otherwise take
// a longest track a_0..a_d, color each n-subset s of {0..d-1} by the common
// color that the track assigns to {a_z: z in s} together with any later
// track point, recurse one arity down, and pull the returned index set back
// through b -> a_b. When the sub-witness used the whole reduced ground
// {0..d-1}, the destination index d joins it — end-homogeneity makes every
// set closed by a_d match the witness color too. Every (n+1)-subset of the
// result is colored `color`.
MonochromaticWitness extract_monochromatic(const Coloring& c);

struct MonoCheck {
  enum class Kind { uniform, vacuous, mixed };
  Kind kind = Kind::vacuous;
  std::optional<Color> color;  // set exactly when kind == uniform
};

// Common color of all (n+1)-subsets of Z if there is one; vacuous when
// |Z| <= n (no subsets to color), mixed otherwise. Members may arrive in any
// order; duplicates are rejected.
MonoCheck is_monochromatic(const Coloring& c, std::vector<int> members);

// Prefix forest of all track point sequences. Tracks branch only forward
// (shared prefixes are shared nodes), so inserting every destination's track
// yields one node per distinct track prefix. Roots carry parent == -1.
struct TrackTrie {
  struct Node {
    int point = 0;
    int parent = -1;
  };
  std::vector<Node> nodes;  // insertion order: destinations 0,1,...,N-1
};

struct TrieStats {
  int depth = 0;  // max edge-depth == max delta over destinations
  std::size_t node_count = 0;
  // distinct_maps_per_level[d] = distinct hiker maps among destinations with
  // delta == d, for d = 0..depth.
  std::vector<std::size_t> distinct_maps_per_level;
};

TrieStats build_track_trie(const Coloring& c, TrackTrie* out_trie = nullptr);

}  // namespace hiker
