#include "hiker/coloring.hpp"

#include <charconv>
#include <sstream>
#include <utility>

#include "hiker/combinatorics.hpp"

namespace hiker {

namespace {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t expected_count(int ground_size, int tuple_size) {
  return binomial_u64(static_cast<std::uint64_t>(ground_size),
                      static_cast<std::uint64_t>(tuple_size));
}

}  // namespace

void validate(const Coloring& c) {
  if (c.tuple_size < 1) throw std::invalid_argument("tuple_size must be >= 1");
  if (c.ground_size < c.tuple_size)
    throw std::invalid_argument("ground_size must be >= tuple_size");
  if (c.num_colors < 1) throw std::invalid_argument("num_colors must be >= 1");
  const std::uint64_t want = expected_count(c.ground_size, c.tuple_size);
  if (c.colors.size() != want)
    throw std::invalid_argument("expected " + std::to_string(want) +
                                " colors, found " +
                                std::to_string(c.colors.size()));
  for (Color v : c.colors)
    if (v >= static_cast<Color>(c.num_colors))
      throw std::invalid_argument("color value " + std::to_string(v) +
                                  " out of range for " +
                                  std::to_string(c.num_colors) + " colors");
}

Color color_of(const Coloring& c, std::span<const int> subset) {
  if (std::cmp_not_equal(subset.size(), c.tuple_size))
    throw std::invalid_argument("arity mismatch");
  for (int x : subset)
    if (x < 0 || x >= c.ground_size)
      throw std::out_of_range("subset member " + std::to_string(x) +
                              " outside ground set of size " +
                              std::to_string(c.ground_size));
  return c.colors[colex_rank(subset)];
}

Coloring make_constant(int ground_size, int tuple_size, int num_colors,
                       Color value) {
  if (num_colors < 1) throw std::invalid_argument("num_colors must be >= 1");
  if (value >= static_cast<Color>(num_colors))
    throw std::invalid_argument("constant value out of range");
  Coloring c{ground_size, tuple_size, num_colors,
             std::vector<Color>(expected_count(ground_size, tuple_size), value)};
  validate(c);
  return c;
}

Coloring make_parity(int ground_size, int tuple_size, int num_colors) {
  ParityOracle oracle(tuple_size, num_colors);
  return truncate(oracle, ground_size);
}

Coloring make_explicit(int ground_size, int tuple_size, int num_colors,
                       std::vector<Color> colors) {
  Coloring c{ground_size, tuple_size, num_colors, std::move(colors)};
  validate(c);
  return c;
}

Coloring make_random(int ground_size, int tuple_size, int num_colors,
                     std::uint64_t seed) {
  const std::uint64_t count = expected_count(ground_size, tuple_size);
  std::vector<Color> colors;
  colors.reserve(count);
  std::uint64_t state = seed;
  for (std::uint64_t i = 0; i < count; ++i)
    colors.push_back(static_cast<Color>(
        splitmix64_next(state) % static_cast<std::uint64_t>(num_colors)));
  Coloring c{ground_size, tuple_size, num_colors, std::move(colors)};
  validate(c);
  return c;
}

Coloring restrict_ground(const Coloring& c, int new_ground) {
  if (new_ground < c.tuple_size || new_ground > c.ground_size)
    throw std::invalid_argument("new ground size out of range");
  const std::uint64_t count = expected_count(new_ground, c.tuple_size);
  // Colex ranks are independent of the ground size, so the restriction is
  // exactly the first C(new_ground, t) entries.
  return Coloring{new_ground, c.tuple_size, c.num_colors,
                  {c.colors.begin(), c.colors.begin() + count}};
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw KrtParseError(what);
}

long long parse_int_field(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() + 1 || !token.starts_with(key) ||
      token[key.size()] != '=')
    parse_fail("malformed header field, expected " + std::string(key) +
               "=<integer>");
  const char* first = token.data() + key.size() + 1;
  const char* last = token.data() + token.size();
  long long value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    parse_fail("malformed header field, expected " + std::string(key) +
               "=<integer>");
  return value;
}

}  // namespace

Coloring parse_krt(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    have_header = true;
    break;
  }
  if (!have_header) parse_fail("missing header line");

  std::istringstream header(line);
  std::string magic, version, nfield, tfield, rfield, extra;
  header >> magic >> version >> nfield >> tfield >> rfield;
  if (magic != "krt") parse_fail("not a krt document");
  if (version != "1") parse_fail("unsupported krt version " + version);
  if (nfield.empty() || tfield.empty() || rfield.empty() || (header >> extra))
    parse_fail("malformed header line");
  const long long n = parse_int_field(nfield, "N");
  const long long t = parse_int_field(tfield, "t");
  const long long r = parse_int_field(rfield, "r");
  if (t < 1 || n < t || r < 1)
    parse_fail("header parameters out of range: N=" + std::to_string(n) +
               " t=" + std::to_string(t) + " r=" + std::to_string(r));

  std::vector<Color> colors;
  const std::uint64_t want =
      expected_count(static_cast<int>(n), static_cast<int>(t));
  colors.reserve(want);
  long long value = 0;
  while (in >> value) {
    if (value < 0 || value >= r)
      parse_fail("color value " + std::to_string(value) +
                 " out of range for " + std::to_string(r) + " colors");
    colors.push_back(static_cast<Color>(value));
  }
  if (!in.eof()) parse_fail("unexpected token in color data");
  if (colors.size() != want)
    parse_fail("expected " + std::to_string(want) + " colors, found " +
               std::to_string(colors.size()));
  return Coloring{static_cast<int>(n), static_cast<int>(t),
                  static_cast<int>(r), std::move(colors)};
}

std::string write_krt(const Coloring& c) {
  validate(c);
  std::string out = "krt 1 N=" + std::to_string(c.ground_size) +
                    " t=" + std::to_string(c.tuple_size) +
                    " r=" + std::to_string(c.num_colors) + "\n";
  for (std::size_t i = 0; i < c.colors.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c.colors[i]);
  }
  out += '\n';
  return out;
}

ConstantOracle::ConstantOracle(int tuple_size, int num_colors, Color value)
    : tuple_size_(tuple_size), num_colors_(num_colors), value_(value) {
  if (tuple_size < 1) throw std::invalid_argument("tuple_size must be >= 1");
  if (num_colors < 1) throw std::invalid_argument("num_colors must be >= 1");
  if (value >= static_cast<Color>(num_colors))
    throw std::invalid_argument("constant value out of range");
}

ParityOracle::ParityOracle(int tuple_size, int num_colors)
    : tuple_size_(tuple_size), num_colors_(num_colors) {
  if (tuple_size < 1) throw std::invalid_argument("tuple_size must be >= 1");
  if (num_colors < 1) throw std::invalid_argument("num_colors must be >= 1");
}

Color ParityOracle::color(std::span<const int> subset) const {
  long long sum = 0;
  for (int x : subset) sum += x;
  return static_cast<Color>(sum % num_colors_);
}

FunctionOracle::FunctionOracle(int tuple_size, int num_colors, Fn fn)
    : tuple_size_(tuple_size), num_colors_(num_colors), fn_(std::move(fn)) {
  if (tuple_size < 1) throw std::invalid_argument("tuple_size must be >= 1");
  if (num_colors < 1) throw std::invalid_argument("num_colors must be >= 1");
}

Color FunctionOracle::color(std::span<const int> subset) const {
  Color v = fn_(subset);
  if (v >= static_cast<Color>(num_colors_))
    throw std::runtime_error("oracle produced out-of-range color " +
                             std::to_string(v));
  return v;
}

Coloring truncate(const ColoringOracle& oracle, int ground_size) {
  const int t = oracle.tuple_size();
  if (ground_size < t)
    throw std::invalid_argument("ground_size must be >= tuple_size");
  const std::uint64_t count = expected_count(ground_size, t);
  std::vector<Color> colors(count);
  std::vector<int> subset(t);
  for (int i = 0; i < t; ++i) subset[i] = i;
  // Any enumeration order works since we write by rank; lexicographic
  // next_subset keeps the walk cache-friendly and allocation-free.
  std::uint64_t filled = 0;
  if (count > 0) {
    do {
      colors[colex_rank(subset)] = oracle.color(subset);
      ++filled;
    } while (next_subset(subset, ground_size));
  }
  if (filled != count)
    throw std::logic_error("subset enumeration mismatch");  // unreachable
  Coloring c{ground_size, t, oracle.num_colors(), std::move(colors)};
  validate(c);
  return c;
}

}  // namespace hiker
