#include "hiker/track.hpp"

#include <stdexcept>
#include <string>

#include "hiker/combinatorics.hpp"

namespace hiker {

namespace {

// True when candidate y is indistinguishable from dest over every n-subset
// of the points chosen so far. idx/sub are caller-owned scratch.
bool candidate_agrees(const Coloring& c, const std::vector<int>& points,
                      int y, int dest, std::vector<int>& idx,
                      std::vector<int>& sub) {
  const int n = static_cast<int>(idx.size());
  const int beta = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) idx[i] = i;
  do {
    for (int i = 0; i < n; ++i) sub[i] = points[idx[i]];
    sub[n] = y;
    const Color with_y = color_of(c, sub);
    sub[n] = dest;
    if (with_y != color_of(c, sub)) return false;
  } while (next_subset(idx, beta));
  return true;
}

}  // namespace

Track build_track(const Coloring& c, int dest) {
  validate(c);
  if (dest < 0 || dest >= c.ground_size)
    throw std::out_of_range("destination " + std::to_string(dest) +
                            " outside ground set of size " +
                            std::to_string(c.ground_size));
  const int n = c.arity();
  Track tr{dest, n, {}};
  if (dest < n) {
    for (int i = 0; i <= dest; ++i) tr.points.push_back(i);
    return tr;
  }
  tr.points.reserve(static_cast<std::size_t>(dest) + 1);
  for (int i = 0; i < n; ++i) tr.points.push_back(i);
  std::vector<int> idx(n);
  std::vector<int> sub(n + 1);
  while (true) {
    // Smaller candidates already failed at an earlier step (the constraint
    // set only grows), so resume after the last chosen point. The scan
    // cannot pass dest: dest itself agrees with dest on everything.
    int y = tr.points.empty() ? 0 : tr.points.back() + 1;
    for (;; ++y) {
      if (y == dest) {
        tr.points.push_back(y);
        return tr;
      }
      if (candidate_agrees(c, tr.points, y, dest, idx, sub)) {
        tr.points.push_back(y);
        break;
      }
    }
  }
}

HikerMap hiker_map(const Coloring& c, const Track& tr) {
  if (tr.arity != c.arity())
    throw std::invalid_argument("arity mismatch between track and coloring");
  if (tr.points.empty()) throw std::invalid_argument("track has no points");
  for (std::size_t i = 0; i < tr.points.size(); ++i) {
    if (tr.points[i] < 0 || tr.points[i] >= c.ground_size)
      throw std::out_of_range("track point outside coloring ground set");
    if (i > 0 && tr.points[i - 1] >= tr.points[i])
      throw std::invalid_argument("track points not strictly increasing");
  }
  if (tr.points.back() != tr.destination)
    throw std::invalid_argument("track does not end at its destination");

  const int n = tr.arity;
  const int d = tr.delta();
  HikerMap m{d, n, c.num_colors, {}};
  if (d < n) return m;
  m.entries.resize(binomial_u64(static_cast<std::uint64_t>(d),
                                static_cast<std::uint64_t>(n)));
  std::vector<int> idx(n);
  std::vector<int> sub(n + 1);
  for (int i = 0; i < n; ++i) idx[i] = i;
  do {
    for (int i = 0; i < n; ++i) sub[i] = tr.points[idx[i]];
    sub[n] = tr.destination;
    m.entries[colex_rank(idx)] = color_of(c, sub);
  } while (next_subset(idx, d));
  return m;
}

std::vector<HikerMap> all_hiker_maps(const Coloring& c) {
  std::vector<HikerMap> maps;
  maps.reserve(static_cast<std::size_t>(c.ground_size));
  for (int x = 0; x < c.ground_size; ++x)
    maps.push_back(hiker_map(c, build_track(c, x)));
  return maps;
}

InjectivityReport check_injectivity(const Coloring& c) {
  const auto maps = all_hiker_maps(c);
  for (std::size_t a = 0; a < maps.size(); ++a)
    for (std::size_t b = a + 1; b < maps.size(); ++b)
      if (maps[a] == maps[b])
        return {false, std::make_pair(static_cast<int>(a),
                                      static_cast<int>(b))};
  return {true, std::nullopt};
}

std::size_t count_distinct_maps(const Coloring& c, int d) {
  const auto maps = all_hiker_maps(c);
  std::vector<const HikerMap*> at_level;
  for (const auto& m : maps)
    if (m.delta == d) at_level.push_back(&m);
  std::size_t distinct = 0;
  for (std::size_t a = 0; a < at_level.size(); ++a) {
    bool seen = false;
    for (std::size_t b = 0; b < a && !seen; ++b)
      seen = (*at_level[a] == *at_level[b]);
    if (!seen) ++distinct;
  }
  return distinct;
}

}  // namespace hiker
