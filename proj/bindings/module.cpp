#include "posetcyl/cdindex.hpp"
#include "posetcyl/constructions.hpp"
#include "posetcyl/cylinder.hpp"
#include "posetcyl/homology.hpp"
#include "posetcyl/json_io.hpp"
#include "posetcyl/ncpoly.hpp"
#include "posetcyl/poset.hpp"
#include "posetcyl/subdivision.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

namespace py = pybind11;
using namespace posetcyl;

namespace {

std::set<int> to_int_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

SfsMethod method_from_name(const std::string& method) {
  if (method == "eq31") return SfsMethod::FiberSum;
  if (method == "eq32") return SfsMethod::CumulativeSum;
  if (method == "near") return SfsMethod::NearEulerian;
  throw Error("is_sfs: unknown method " + method);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite poset calculator: strong formal subdivisions, non-Hausdorff "
            "mapping cylinders, cd-indices, order-complex homology.";

  py::register_exception<Error>(m, "PosetError");

  py::class_<RankFunction>(m, "RankFunction")
      .def(py::init([](std::vector<int> values) { return RankFunction{std::move(values)}; }))
      .def_readonly("values", &RankFunction::values)
      .def("__call__", &RankFunction::operator())
      .def("__eq__", [](const RankFunction& a, const RankFunction& b) { return a == b; })
      .def("__repr__", [](const RankFunction& r) {
        std::string out = "RankFunction([";
        for (size_t i = 0; i < r.values.size(); ++i)
          out += (i ? "," : "") + std::to_string(r.values[i]);
        return out + "])";
      });

  py::class_<Poset>(m, "Poset")
      .def_static("from_covers", &Poset::from_covers, py::arg("labels"), py::arg("covers"))
      .def("__len__", &Poset::size)
      .def("size", &Poset::size)
      .def("label", &Poset::label)
      .def("labels", &Poset::labels)
      .def("index_of", &Poset::index_of)
      .def("less", &Poset::less)
      .def("leq", &Poset::leq)
      .def("covers", [](const Poset& p) { return p.covers(); })
      .def("minimal_elements", &Poset::minimal_elements)
      .def("maximal_elements", &Poset::maximal_elements)
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; })
      .def("__repr__",
           [](const Poset& p) { return "Poset(" + std::to_string(p.size()) + " elements)"; });

  py::class_<RankedPoset>(m, "RankedPoset")
      .def_readonly("poset", &RankedPoset::poset)
      .def_readonly("rank", &RankedPoset::rank);

  py::class_<PosetMap>(m, "PosetMap")
      .def(py::init([](Poset source, RankFunction source_rank, Poset target,
                       RankFunction target_rank, std::vector<int> image) {
             PosetMap out{std::move(source), std::move(source_rank), std::move(target),
                          std::move(target_rank), std::move(image)};
             validate_map_shape(out);
             return out;
           }),
           py::arg("source"), py::arg("source_rank"), py::arg("target"), py::arg("target_rank"),
           py::arg("image"))
      .def_readonly("source", &PosetMap::source)
      .def_readonly("source_rank", &PosetMap::source_rank)
      .def_readonly("target", &PosetMap::target)
      .def_readonly("target_rank", &PosetMap::target_rank)
      .def_readonly("image", &PosetMap::image)
      .def("__eq__", [](const PosetMap& a, const PosetMap& b) { return a == b; });

  py::class_<JoinTriple>(m, "JoinTriple")
      .def(py::init([](Poset gamma, RankFunction rank, int q) {
             return JoinTriple{std::move(gamma), std::move(rank), q};
           }),
           py::arg("poset"), py::arg("rank"), py::arg("q"))
      .def_readonly("poset", &JoinTriple::gamma)
      .def_readonly("rank", &JoinTriple::rank)
      .def_readonly("q", &JoinTriple::q);

  py::class_<SfsSquare>(m, "SfsSquare")
      .def(py::init([](PosetMap phi1, PosetMap sigma, PosetMap sigma_prime, PosetMap phi2) {
             return SfsSquare{std::move(phi1), std::move(sigma), std::move(sigma_prime),
                              std::move(phi2)};
           }),
           py::arg("phi1"), py::arg("sigma"), py::arg("sigma_prime"), py::arg("phi2"))
      .def_readonly("phi1", &SfsSquare::phi1)
      .def_readonly("sigma", &SfsSquare::sigma)
      .def_readonly("sigma_prime", &SfsSquare::sigma_prime)
      .def_readonly("phi2", &SfsSquare::phi2)
      .def("__eq__", [](const SfsSquare& a, const SfsSquare& b) { return a == b; });

  py::class_<NCPoly>(m, "NCPoly")
      .def_static(
          "parse",
          [](const std::string& text, const std::string& alphabet) {
            return NCPoly::parse(text, alphabet == "ab" ? Alphabet::AB : Alphabet::CD);
          },
          py::arg("text"), py::arg("alphabet") = "cd")
      .def("__str__", &NCPoly::to_string)
      .def("__repr__", [](const NCPoly& p) { return "NCPoly(" + p.to_string() + ")"; })
      .def("__eq__", [](const NCPoly& a, const NCPoly& b) { return a == b; })
      .def("__add__", [](const NCPoly& a, const NCPoly& b) { return a + b; })
      .def("__sub__", [](const NCPoly& a, const NCPoly& b) { return a - b; })
      .def("__mul__", [](const NCPoly& a, const NCPoly& b) { return a * b; })
      .def("degree", &NCPoly::degree)
      .def("is_homogeneous", &NCPoly::is_homogeneous);

  // poset core
  m.def("natural_rank", &natural_rank);
  m.def("shift_rank", &shift_rank);
  m.def("rank_of", &rank_of);
  m.def("dual", &dual);
  m.def("adjoin_max", &adjoin_max);
  m.def("boundary", &boundary);
  m.def("near_eulerian_boundary", &near_eulerian_boundary);
  m.def("semisuspension", &semisuspension);
  m.def("is_locally_eulerian", &is_locally_eulerian);
  m.def("is_lower_eulerian", &is_lower_eulerian);
  m.def("is_eulerian", &is_eulerian);
  m.def("is_near_eulerian", &is_near_eulerian);
  m.def("is_graded", &is_graded);
  m.def("is_join_admissible", &is_join_admissible);
  m.def("join", [](const Poset& p, int a, int b) { return join(p, a, b); });
  m.def("meet", [](const Poset& p, int a, int b) { return meet(p, a, b); });
  m.def("even_odd_balance", &even_odd_balance);

  // constructions
  m.def("boolean_algebra", &boolean_algebra);
  m.def("direct_product", &direct_product);
  m.def("pyramid", &pyramid);
  m.def("prism", &prism);
  m.def("bipyramid", &bipyramid);
  m.def("diamond_product", &diamond_product);
  m.def("dual_diamond_product", &dual_diamond_product);
  m.def("star_product", &star_product);
  m.def("face_lattice_polygon", &face_lattice_polygon);
  m.def("face_lattice_cube", &face_lattice_cube);
  m.def("face_lattice_crosspolytope", &face_lattice_crosspolytope);
  m.def("subdivided_interval", &subdivided_interval);
  m.def("fan_over_boundary", &fan_over_boundary);

  // subdivisions
  m.def("is_order_preserving", &is_order_preserving);
  m.def("is_rank_increasing", &is_rank_increasing);
  m.def("is_strongly_surjective", &is_strongly_surjective);
  m.def("sfs_rank", &sfs_rank);
  m.def(
      "is_sfs",
      [](const PosetMap& pm, const std::string& method) {
        return is_sfs(pm, method_from_name(method));
      },
      py::arg("map"), py::arg("method") = "eq31");
  m.def("compose", &compose);
  m.def("restrict_to_ideal", &restrict_to_ideal);
  m.def("restrict_above", &restrict_above);
  m.def("identity_sfs", &identity_sfs);
  m.def("to_b0", &to_b0);
  m.def("to_b1", &to_b1);
  m.def("bipyramid_sfs", &bipyramid_sfs);
  m.def("product_sfs", &product_sfs);
  m.def("star_lift", &star_lift);
  m.def("dual_diamond_lift", &dual_diamond_lift);
  m.def("parity_check", &parity_check);

  // cylinders
  m.def("mapping_cylinder", &mapping_cylinder);
  m.def("cyl", &cyl);
  m.def("map", &map);
  m.def("roundtrip_cyl_map", &roundtrip_cyl_map);
  m.def("roundtrip_map_cyl", &roundtrip_map_cyl);
  m.def("cyl_square", &cyl_square);
  m.def("map_square", &map_square);
  m.def("involution", &involution);

  // cd-index
  m.def("flag_count", [](const Poset& p, const RankFunction& r, const std::vector<int>& s) {
    return flag_count(p, r, to_int_set(s));
  });
  m.def("ab_polynomial", &ab_polynomial);
  m.def("cd_index", &cd_index);
  m.def("local_cd_index", &local_cd_index);
  m.def("cd_formula_rhs", &cd_formula_rhs);
  m.def("expand_cd", &expand_cd);
  m.def("reverse_words", &reverse_words);
  m.def("derivation_g", &derivation_g);
  m.def("derivation_gprime", &derivation_gprime);
  m.def("derivation_d", &derivation_d);

  // homology
  m.def("reduced_betti", [](const Poset& p, int z, int zp) {
    return reduced_betti(open_interval_complex(p, z, zp));
  });
  m.def("order_complex_betti", [](const Poset& p) { return reduced_betti(order_complex(p)); });
  m.def("is_gorenstein_star", &is_gorenstein_star);
  m.def("is_near_gorenstein_star", &is_near_gorenstein_star);
  m.def("is_lower_gorenstein_star", &is_lower_gorenstein_star);

  // JSON and DOT
  m.def("poset_to_json",
        [](const Poset& p, const RankFunction& r) { return poset_to_json(p, &r).dump(2); });
  m.def("poset_from_json", [](const std::string& text) {
    std::optional<RankFunction> rank;
    Poset p = poset_from_json(nlohmann::json::parse(text), &rank);
    return py::make_tuple(p, rank ? py::cast(*rank) : py::none());
  });
  m.def("to_dot", [](const Poset& p, const RankFunction& r) { return to_dot(p, &r); });
}
