#include "hiker/homogeneity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hiker/combinatorics.hpp"
#include "hiker/track.hpp"

namespace hiker {

namespace {

void require_increasing_in_ground(std::span<const int> w, int ground_size) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0 || w[i] >= ground_size)
      throw std::out_of_range("sequence point " + std::to_string(w[i]) +
                              " outside ground set of size " +
                              std::to_string(ground_size));
    if (i > 0 && w[i - 1] >= w[i])
      throw std::invalid_argument("sequence not strictly increasing");
  }
}

}  // namespace

EndHomogeneity is_end_homogeneous(const Coloring& c, std::span<const int> w) {
  validate(c);
  require_increasing_in_ground(w, c.ground_size);
  const int n = c.arity();
  const int m = static_cast<int>(w.size());
  if (m <= n + 1) return {};

  // Walk index tuples b_0 < ... < b_{n+1} in lexicographic order; the first
  // mismatch is the reported violation.
  std::vector<int> beta(n + 2);
  std::vector<int> sub(n + 1);
  for (int i = 0; i < n + 2; ++i) beta[i] = i;
  do {
    for (int i = 0; i < n; ++i) sub[i] = w[beta[i]];
    sub[n] = w[beta[n]];
    const Color closed_early = color_of(c, sub);
    sub[n] = w[beta[n + 1]];
    if (closed_early != color_of(c, sub)) return {false, beta};
  } while (next_subset(beta, m));
  return {};
}

WitnessSequence longest_track_sequence(const Coloring& c) {
  validate(c);
  Track best;
  bool have = false;
  for (int x = 0; x < c.ground_size; ++x) {
    Track tr = build_track(c, x);
    if (!have || tr.delta() > best.delta()) {
      best = std::move(tr);
      have = true;
    }
  }
  WitnessSequence w{std::move(best.points), c.arity(), false};
  w.verified = is_end_homogeneous(c, w.points).holds;
  return w;
}

namespace {

// One valid extension step of the DFS: appending y to seq (length L) only
// creates constraint tuples whose last index is L itself, and for each
// n-subset B of {0,...,L-2} all earlier closings already agree, so comparing
// against the single closing at index max(B)+1 decides them all.
bool extension_valid(const Coloring& c, const std::vector<int>& seq, int y,
                     std::vector<int>& idx, std::vector<int>& sub) {
  const int n = static_cast<int>(idx.size());
  const int L = static_cast<int>(seq.size());
  if (L - 1 < n) return true;  // no n-subset of {0,...,L-2} exists
  for (int i = 0; i < n; ++i) idx[i] = i;
  do {
    const int rep = (n == 0) ? 0 : idx[n - 1] + 1;
    if (rep < L) {
      for (int i = 0; i < n; ++i) sub[i] = seq[idx[i]];
      sub[n] = y;
      const Color with_y = color_of(c, sub);
      sub[n] = seq[rep];
      if (with_y != color_of(c, sub)) return false;
    }
  } while (next_subset(idx, L - 1));
  return true;
}

}  // namespace

std::optional<WitnessSequence> find_end_homogeneous(const Coloring& c,
                                                    int k) {
  validate(c);
  if (k < 1) throw std::invalid_argument("target length must be >= 1");
  const int n = c.arity();
  const int N = c.ground_size;
  if (k > N) return std::nullopt;

  std::vector<int> seq;
  seq.reserve(k);
  std::vector<int> idx(n);
  std::vector<int> sub(n + 1);
  // Iterative DFS in candidate order; the first completed branch is the
  // lexicographically least witness.
  std::vector<int> cursor{0};
  while (!cursor.empty()) {
    const int len = static_cast<int>(seq.size());
    int& y = cursor.back();
    // Leave room for the k - len - 1 points that must exceed y.
    if (y > N - (k - len)) {
      cursor.pop_back();
      if (!seq.empty()) seq.pop_back();
      if (!cursor.empty()) ++cursor.back();
      continue;
    }
    if (extension_valid(c, seq, y, idx, sub)) {
      seq.push_back(y);
      if (static_cast<int>(seq.size()) == k) {
        WitnessSequence w{std::move(seq), n, false};
        w.verified = is_end_homogeneous(c, w.points).holds;
        return w;
      }
      cursor.push_back(y + 1);
    } else {
      ++y;
    }
  }
  return std::nullopt;
}

PigeonholeClass pigeonhole_extract(std::span<const Color> values,
                                   int num_colors) {
  if (values.empty()) throw std::invalid_argument("empty value sequence");
  if (num_colors < 1) throw std::invalid_argument("num_colors must be >= 1");
  std::vector<std::size_t> tally(static_cast<std::size_t>(num_colors), 0);
  for (Color v : values) {
    if (v >= static_cast<Color>(num_colors))
      throw std::invalid_argument("value " + std::to_string(v) +
                                  " out of range for " +
                                  std::to_string(num_colors) + " colors");
    ++tally[v];
  }
  Color best = 0;
  for (Color v = 1; v < static_cast<Color>(num_colors); ++v)
    if (tally[v] > tally[best]) best = v;  // strict: ties keep the smaller
  PigeonholeClass out{best, {}};
  out.indices.reserve(tally[best]);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == best) out.indices.push_back(static_cast<int>(i));
  return out;
}

MonochromaticWitness extract_monochromatic(const Coloring& c) {
  validate(c);
  const int n = c.arity();
  if (n == 0) {
    // Point colors are stored at colex ranks C(x,1) = x, so the color vector
    // itself is the value sequence.
    PigeonholeClass cls = pigeonhole_extract(c.colors, c.num_colors);
    return {cls.color, std::move(cls.indices)};
  }

  const WitnessSequence seq = longest_track_sequence(c);
  const std::vector<int>& a = seq.points;
  const int d = static_cast<int>(a.size()) - 1;

  // Induced coloring on n-subsets of the track's interior indices. Closing
  // each subset with the next track point is a free choice: the track is
  // end-homogeneous, so every later point closes it with the same color.
  std::vector<Color> induced(binomial_u64(static_cast<std::uint64_t>(d),
                                          static_cast<std::uint64_t>(n)));
  std::vector<int> idx(n);
  std::vector<int> sub(n + 1);
  for (int i = 0; i < n; ++i) idx[i] = i;
  do {
    for (int i = 0; i < n; ++i) sub[i] = a[idx[i]];
    sub[n] = a[idx[n - 1] + 1];
    induced[colex_rank(idx)] = color_of(c, sub);
  } while (next_subset(idx, d));

  MonochromaticWitness inner = extract_monochromatic(
      make_explicit(d, n, c.num_colors, std::move(induced)));

  std::vector<int>& S = inner.members;
  // A sub-witness that uses the whole reduced ground extends by the
  // destination index: every (n+1)-set it closes is colored like the
  // corresponding induced n-set, which the sub-witness already certifies.
  if (static_cast<int>(S.size()) == d) S.push_back(d);
  for (int& b : S) b = a[b];
  return {inner.color, std::move(S)};
}

MonoCheck is_monochromatic(const Coloring& c, std::vector<int> members) {
  validate(c);
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 0 || members[i] >= c.ground_size)
      throw std::out_of_range("member " + std::to_string(members[i]) +
                              " outside ground set of size " +
                              std::to_string(c.ground_size));
    if (i > 0 && members[i - 1] == members[i])
      throw std::invalid_argument("duplicate member " +
                                  std::to_string(members[i]));
  }
  const int t = c.tuple_size;
  const int m = static_cast<int>(members.size());
  if (m < t) return {MonoCheck::Kind::vacuous, std::nullopt};

  std::vector<int> idx(t);
  std::vector<int> sub(t);
  for (int i = 0; i < t; ++i) idx[i] = i;
  std::optional<Color> common;
  do {
    for (int i = 0; i < t; ++i) sub[i] = members[idx[i]];
    const Color v = color_of(c, sub);
    if (!common) common = v;
    else if (*common != v) return {MonoCheck::Kind::mixed, std::nullopt};
  } while (next_subset(idx, m));
  return {MonoCheck::Kind::uniform, common};
}

TrieStats build_track_trie(const Coloring& c, TrackTrie* out_trie) {
  validate(c);
  TrackTrie trie;
  std::vector<std::vector<int>> children;  // parallel to trie.nodes
  std::vector<int> roots;

  auto find_child = [&](const std::vector<int>& among, int point) {
    for (int node : among)
      if (trie.nodes[static_cast<std::size_t>(node)].point == point)
        return node;
    return -1;
  };

  int depth = 0;
  for (int x = 0; x < c.ground_size; ++x) {
    const Track tr = build_track(c, x);
    depth = std::max(depth, tr.delta());
    int parent = -1;
    for (int point : tr.points) {
      const std::vector<int>& siblings =
          (parent < 0) ? roots : children[static_cast<std::size_t>(parent)];
      int node = find_child(siblings, point);
      if (node < 0) {
        node = static_cast<int>(trie.nodes.size());
        trie.nodes.push_back({point, parent});
        children.emplace_back();
        (parent < 0 ? roots : children[static_cast<std::size_t>(parent)])
            .push_back(node);
      }
      parent = node;
    }
  }

  TrieStats stats;
  stats.depth = depth;
  stats.node_count = trie.nodes.size();
  const auto maps = all_hiker_maps(c);
  stats.distinct_maps_per_level.assign(static_cast<std::size_t>(depth) + 1,
                                       0);
  for (int d = 0; d <= depth; ++d) {
    std::vector<const HikerMap*> level;
    for (const auto& m : maps)
      if (m.delta == d) level.push_back(&m);
    std::size_t distinct = 0;
    for (std::size_t a = 0; a < level.size(); ++a) {
      bool seen = false;
      for (std::size_t b = 0; b < a && !seen; ++b)
        seen = (*level[a] == *level[b]);
      if (!seen) ++distinct;
    }
    stats.distinct_maps_per_level[static_cast<std::size_t>(d)] = distinct;
  }
  if (out_trie) *out_trie = std::move(trie);
  return stats;
}

}  // namespace hiker
