#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hiker {

using Color = std::uint32_t;

// Total coloring of all t-element subsets of {0,...,N-1} with colors
// {0,...,r-1}, stored densely in colex rank order. Immutable by convention
// once built; safe to share across threads.
struct Coloring {
  int ground_size = 0;  // N
  int tuple_size = 0;   // t, the size of the colored subsets
  int num_colors = 0;   // r
  std::vector<Color> colors;

  int arity() const { return tuple_size - 1; }
  bool operator==(const Coloring&) const = default;
};

// Throws std::invalid_argument unless 1 <= t <= N, r >= 1,
// |colors| == C(N,t) and every value is < r.
void validate(const Coloring& c);

// colors[colex_rank(s)]. Rejects wrong subset size and out-of-range members.
Color color_of(const Coloring& c, std::span<const int> subset);

Coloring make_constant(int ground_size, int tuple_size, int num_colors,
                       Color value);
// color = (sum of members) mod num_colors
Coloring make_parity(int ground_size, int tuple_size, int num_colors);
Coloring make_explicit(int ground_size, int tuple_size, int num_colors,
                       std::vector<Color> colors);
// Colors come from a splitmix64 stream seeded with `seed`: the i-th colex
// entry is the i-th stream value mod num_colors. Stable across runs and
// platforms.
Coloring make_random(int ground_size, int tuple_size, int num_colors,
                     std::uint64_t seed);

// Restriction to the first new_ground points: a colex prefix of colors.
Coloring restrict_ground(const Coloring& c, int new_ground);

class KrtParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// KRT v1 text format:
//   krt 1 N=<N> t=<t> r=<r>
//   <C(N,t) space-separated colors in colex order>
// Lines starting with '#' before the header are ignored; the writer emits
// none and its output is byte-deterministic.
Coloring parse_krt(std::string_view text);
std::string write_krt(const Coloring& c);

// Deterministic color source over all t-subsets of the naturals; finite
// truncations are materialized on demand. Implementations must answer the
// same subset identically on every call.
class ColoringOracle {
 public:
  virtual ~ColoringOracle() = default;
  virtual int tuple_size() const = 0;
  virtual int num_colors() const = 0;
  virtual Color color(std::span<const int> subset) const = 0;
};

class ConstantOracle final : public ColoringOracle {
 public:
  ConstantOracle(int tuple_size, int num_colors, Color value);
  int tuple_size() const override { return tuple_size_; }
  int num_colors() const override { return num_colors_; }
  Color color(std::span<const int>) const override { return value_; }

 private:
  int tuple_size_;
  int num_colors_;
  Color value_;
};

class ParityOracle final : public ColoringOracle {
 public:
  ParityOracle(int tuple_size, int num_colors);
  int tuple_size() const override { return tuple_size_; }
  int num_colors() const override { return num_colors_; }
  Color color(std::span<const int> subset) const override;

 private:
  int tuple_size_;
  int num_colors_;
};

// Adapts any callable; not synchronized, document single-threaded use if
// the callable has state.
class FunctionOracle final : public ColoringOracle {
 public:
  using Fn = std::function<Color(std::span<const int>)>;
  FunctionOracle(int tuple_size, int num_colors, Fn fn);
  int tuple_size() const override { return tuple_size_; }
  int num_colors() const override { return num_colors_; }
  Color color(std::span<const int> subset) const override;

 private:
  int tuple_size_;
  int num_colors_;
  Fn fn_;
};

// Materializes all C(N,t) colors of the oracle's restriction to {0,...,N-1}.
// Truncations at growing N agree on shared subsets because colex ranks do
// not depend on N.
Coloring truncate(const ColoringOracle& oracle, int ground_size);

}  // namespace hiker
