#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "hiker/coloring.hpp"
#include "hiker/combinatorics.hpp"
#include "hiker/homogeneity.hpp"
#include "hiker/pnumbers.hpp"
#include "hiker/track.hpp"

namespace py = pybind11;
using namespace hiker;

namespace {

// Exact values cross the boundary as native Python ints, however large.
py::int_ to_py_int(const BigNat& value) {
  PyObject* obj = PyLong_FromString(value.str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::object opt_int(const std::optional<BigNat>& value) {
  if (!value) return py::none();
  return to_py_int(*value);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "tracks, hiker maps, witness extraction, exact partition numbers";

  py::register_exception<KrtParseError>(m, "KrtParseError",
                                        PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded",
                                         PyExc_RuntimeError);

  py::class_<Coloring>(m, "Coloring")
      .def(py::init([](int ground_size, int tuple_size, int num_colors,
                       std::vector<Color> colors) {
             return make_explicit(ground_size, tuple_size, num_colors,
                                  std::move(colors));
           }),
           py::arg("ground_size"), py::arg("tuple_size"),
           py::arg("num_colors"), py::arg("colors"))
      .def_readonly("ground_size", &Coloring::ground_size)
      .def_readonly("tuple_size", &Coloring::tuple_size)
      .def_readonly("num_colors", &Coloring::num_colors)
      .def_readonly("colors", &Coloring::colors)
      .def_property_readonly("arity", &Coloring::arity)
      .def(py::self == py::self)
      .def("__repr__", [](const Coloring& c) {
        return "Coloring(N=" + std::to_string(c.ground_size) +
               ", t=" + std::to_string(c.tuple_size) +
               ", r=" + std::to_string(c.num_colors) + ")";
      });

  m.def("make_constant", &make_constant, py::arg("ground_size"),
        py::arg("tuple_size"), py::arg("num_colors"), py::arg("value") = 0);
  m.def("make_parity", &make_parity, py::arg("ground_size"),
        py::arg("tuple_size"), py::arg("num_colors"));
  m.def("make_random", &make_random, py::arg("ground_size"),
        py::arg("tuple_size"), py::arg("num_colors"), py::arg("seed"));
  m.def(
      "color_of",
      [](const Coloring& c, std::vector<int> subset) {
        return color_of(c, subset);
      },
      py::arg("coloring"), py::arg("subset"));
  m.def("restrict_ground", &restrict_ground, py::arg("coloring"),
        py::arg("new_ground"));
  m.def("parse_krt", [](const std::string& text) { return parse_krt(text); },
        py::arg("text"));
  m.def("write_krt", &write_krt, py::arg("coloring"));

  m.def("binomial",
        [](std::uint64_t n, std::uint64_t k) { return to_py_int(binomial(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def(
      "colex_rank",
      [](std::vector<int> members) { return colex_rank(members); },
      py::arg("members"));
  m.def("colex_unrank", &colex_unrank, py::arg("rank"), py::arg("t"));

  py::class_<Track>(m, "Track")
      .def_readonly("destination", &Track::destination)
      .def_readonly("arity", &Track::arity)
      .def_readonly("points", &Track::points)
      .def_property_readonly("delta", &Track::delta)
      .def(py::self == py::self)
      .def("__repr__", [](const Track& t) {
        std::string s = "Track(dest=" + std::to_string(t.destination) + ", [";
        for (std::size_t i = 0; i < t.points.size(); ++i)
          s += (i ? "," : "") + std::to_string(t.points[i]);
        return s + "])";
      });

  py::class_<HikerMap>(m, "HikerMap")
      .def_readonly("delta", &HikerMap::delta)
      .def_readonly("arity", &HikerMap::arity)
      .def_readonly("num_colors", &HikerMap::num_colors)
      .def_readonly("entries", &HikerMap::entries)
      .def(py::self == py::self);

  py::class_<InjectivityReport>(m, "InjectivityReport")
      .def_readonly("injective", &InjectivityReport::injective)
      .def_readonly("collision", &InjectivityReport::collision);

  m.def("build_track", &build_track, py::arg("coloring"), py::arg("dest"));
  m.def("hiker_map", &hiker_map, py::arg("coloring"), py::arg("track"));
  m.def("check_injectivity", &check_injectivity, py::arg("coloring"));
  m.def("all_hiker_maps", &all_hiker_maps, py::arg("coloring"));
  m.def("count_distinct_maps", &count_distinct_maps, py::arg("coloring"),
        py::arg("d"));

  py::class_<EndHomogeneity>(m, "EndHomogeneity")
      .def_readonly("holds", &EndHomogeneity::holds)
      .def_readonly("violation", &EndHomogeneity::violation)
      .def("__bool__", [](const EndHomogeneity& e) { return e.holds; });

  py::class_<WitnessSequence>(m, "WitnessSequence")
      .def_readonly("points", &WitnessSequence::points)
      .def_readonly("arity", &WitnessSequence::arity)
      .def_readonly("verified", &WitnessSequence::verified);

  py::class_<PigeonholeClass>(m, "PigeonholeClass")
      .def_readonly("color", &PigeonholeClass::color)
      .def_readonly("indices", &PigeonholeClass::indices);

  py::class_<MonochromaticWitness>(m, "MonochromaticWitness")
      .def_readonly("color", &MonochromaticWitness::color)
      .def_readonly("members", &MonochromaticWitness::members);

  py::enum_<MonoCheck::Kind>(m, "MonoKind")
      .value("uniform", MonoCheck::Kind::uniform)
      .value("vacuous", MonoCheck::Kind::vacuous)
      .value("mixed", MonoCheck::Kind::mixed);

  py::class_<MonoCheck>(m, "MonoCheck")
      .def_readonly("kind", &MonoCheck::kind)
      .def_readonly("color", &MonoCheck::color);

  py::class_<TrackTrie::Node>(m, "TrieNode")
      .def_readonly("point", &TrackTrie::Node::point)
      .def_readonly("parent", &TrackTrie::Node::parent);

  py::class_<TrackTrie>(m, "TrackTrie")
      .def_readonly("nodes", &TrackTrie::nodes);

  py::class_<TrieStats>(m, "TrieStats")
      .def_readonly("depth", &TrieStats::depth)
      .def_readonly("node_count", &TrieStats::node_count)
      .def_readonly("distinct_maps_per_level",
                    &TrieStats::distinct_maps_per_level);

  m.def(
      "is_end_homogeneous",
      [](const Coloring& c, std::vector<int> w) {
        return is_end_homogeneous(c, w);
      },
      py::arg("coloring"), py::arg("sequence"));
  m.def("longest_track_sequence", &longest_track_sequence,
        py::arg("coloring"));
  m.def("find_end_homogeneous", &find_end_homogeneous, py::arg("coloring"),
        py::arg("k"));
  m.def(
      "pigeonhole_extract",
      [](std::vector<Color> values, int num_colors) {
        return pigeonhole_extract(values, num_colors);
      },
      py::arg("values"), py::arg("num_colors"));
  m.def("extract_monochromatic", &extract_monochromatic, py::arg("coloring"));
  m.def("is_monochromatic", &is_monochromatic, py::arg("coloring"),
        py::arg("members"));
  m.def(
      "build_track_trie",
      [](const Coloring& c) {
        TrackTrie trie;
        TrieStats stats = build_track_trie(c, &trie);
        return std::make_pair(std::move(stats), std::move(trie));
      },
      py::arg("coloring"),
      "returns (TrieStats, TrackTrie)");

  py::enum_<Variant>(m, "Variant")
      .value("track", Variant::track)
      .value("sequence", Variant::sequence);

  py::class_<StatementSpec>(m, "StatementSpec")
      .def(py::init([](int ground_size, int arity, int num_colors,
                       int target_length, Variant variant) {
             return StatementSpec{ground_size, arity, num_colors,
                                  target_length, variant};
           }),
           py::arg("ground_size"), py::arg("arity"), py::arg("num_colors"),
           py::arg("target_length"), py::arg("variant") = Variant::track)
      .def_readonly("ground_size", &StatementSpec::ground_size)
      .def_readonly("arity", &StatementSpec::arity)
      .def_readonly("num_colors", &StatementSpec::num_colors)
      .def_readonly("target_length", &StatementSpec::target_length)
      .def_readonly("variant", &StatementSpec::variant);

  py::class_<StatementResult>(m, "StatementResult")
      .def_readonly("holds", &StatementResult::holds)
      .def_readonly("counterexample", &StatementResult::counterexample)
      .def_readonly("colorings_checked", &StatementResult::colorings_checked)
      .def("__bool__", [](const StatementResult& r) { return r.holds; });

  py::class_<PNumberReport>(m, "PNumberReport")
      .def_readonly("k", &PNumberReport::k)
      .def_readonly("r", &PNumberReport::r)
      .def_readonly("n", &PNumberReport::n)
      .def_readonly("variant", &PNumberReport::variant)
      .def_readonly("p", &PNumberReport::p)
      .def_property_readonly(
          "bound", [](const PNumberReport& r) { return opt_int(r.bound); })
      .def_readonly("counterexample", &PNumberReport::counterexample)
      .def_readonly("colorings_checked", &PNumberReport::colorings_checked)
      .def_property_readonly("elapsed_ms", [](const PNumberReport& r) {
        return r.elapsed.count();
      });

  py::class_<GridCell>(m, "GridCell")
      .def(py::init([](int k, int r, int n) {
             return GridCell{k, r, n};
           }),
           py::arg("k"), py::arg("r"), py::arg("n"))
      .def_readonly("k", &GridCell::k)
      .def_readonly("r", &GridCell::r)
      .def_readonly("n", &GridCell::n);

  py::class_<GridRow>(m, "GridRow")
      .def_readonly("k", &GridRow::k)
      .def_readonly("r", &GridRow::r)
      .def_readonly("n", &GridRow::n)
      .def_readonly("variant", &GridRow::variant)
      .def_readonly("p", &GridRow::p)
      .def_property_readonly(
          "bound", [](const GridRow& r) { return opt_int(r.bound); })
      .def_readonly("ok", &GridRow::ok)
      .def_readonly("counterexample", &GridRow::counterexample)
      .def_readonly("colorings_checked", &GridRow::colorings_checked)
      .def_property_readonly(
          "elapsed_ms", [](const GridRow& r) { return r.elapsed.count(); })
      .def_readonly("error", &GridRow::error);

  m.def("statement_holds", &statement_holds, py::arg("spec"),
        py::arg("budget") = std::uint64_t{100'000'000},
        py::arg("workers") = 0);
  m.def("exact_p", &exact_p, py::arg("k"), py::arg("r"), py::arg("n"),
        py::arg("variant") = Variant::track,
        py::arg("budget") = std::uint64_t{100'000'000},
        py::arg("workers") = 0);
  m.def(
      "theorem9_bound",
      [](int k, int r, int n) { return to_py_int(theorem9_bound(k, r, n)); },
      py::arg("k"), py::arg("r"), py::arg("n"));
  m.def(
      "verify_bound_grid",
      [](const std::vector<GridCell>& cells, Variant variant,
         std::uint64_t budget, int workers) {
        return verify_bound_grid(cells, variant, budget, workers);
      },
      py::arg("cells"), py::arg("variant") = Variant::track,
      py::arg("budget") = std::uint64_t{100'000'000}, py::arg("workers") = 0);
}
