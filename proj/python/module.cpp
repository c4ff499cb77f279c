#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dessin/canonical.hpp"
#include "dessin/dessin.hpp"
#include "dessin/error.hpp"
#include "dessin/filtration.hpp"
#include "dessin/io.hpp"
#include "dessin/rational.hpp"

namespace py = pybind11;
using namespace dessin;

namespace {

py::dict vector_to_dict(const SparseVector& v) {
    py::dict out;
    for (const auto& [key, coeff] : v.terms()) {
        out[py::str(key.text())] = to_fraction_string(coeff);
    }
    return out;
}

py::dict passport_to_dict(const Passport& p) {
    py::dict out;
    out["black_degrees"] = p.black_degrees;
    out["white_degrees"] = p.white_degrees;
    out["face_degrees"] = p.face_degrees;
    out["component_count"] = p.component_count;
    out["genus_list"] = p.genus_list;
    return out;
}

BasisWindow make_window(int max_edges, bool include_empty) {
    return enumerate_window(max_edges, Mode::All, include_empty);
}

std::vector<std::string> key_texts(const std::vector<DessinKey>& keys) {
    std::vector<std::string> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.push_back(k.text());
    return out;
}

}  // namespace

PYBIND11_MODULE(pydessin, m) {
    m.doc() = "Dessins d'enfants as permutation pairs, with exact filtration experiments";

    py::register_exception<ValidationError>(m, "DessinValidationError", PyExc_ValueError);
    py::register_exception<BoundError>(m, "DessinBoundError", PyExc_ValueError);

    py::class_<Dessin>(m, "Dessin")
        .def(py::init([](const std::vector<int>& sigma0, const std::vector<int>& sigma1) {
                 return Dessin::validate(static_cast<int>(sigma0.size()), sigma0, sigma1);
             }),
             py::arg("sigma0"), py::arg("sigma1"))
        .def_property_readonly("edge_count", &Dessin::edge_count)
        .def_property_readonly("sigma0",
                               [](const Dessin& d) { return d.sigma0().images(); })
        .def_property_readonly("sigma1",
                               [](const Dessin& d) { return d.sigma1().images(); })
        .def("__eq__", [](const Dessin& a, const Dessin& b) { return a == b; })
        .def("__repr__", [](const Dessin& d) {
            return "Dessin(key=" + canonical_key(d).text() + ")";
        });

    m.def("empty_dessin", [] { return Dessin(); });
    m.def("dessin_from_key",
          [](const std::string& text) { return dessin_from_key(DessinKey::from_text(text)); },
          py::arg("key"));

    m.def("canonical_key", [](const Dessin& d) { return canonical_key(d).text(); },
          py::arg("dessin"));
    m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"));
    m.def("passport", [](const Dessin& d) { return passport_to_dict(passport(d)); },
          py::arg("dessin"));
    m.def("genus", &genus, py::arg("dessin"));
    m.def("is_connected", &is_connected, py::arg("dessin"));
    m.def("monodromy_order", &monodromy_order, py::arg("dessin"), py::arg("max_edges") = 8);

    m.def("components",
          [](const Dessin& d) {
              std::vector<std::pair<Dessin, std::vector<int>>> out;
              for (auto& c : components(d)) out.emplace_back(c.dessin, c.original_edges);
              return out;
          },
          py::arg("dessin"));

    m.def("delete_edges",
          [](const Dessin& d, const std::vector<int>& edges) {
              const EdgeDeletion del = delete_edges(d, edges);
              py::dict survivors;
              for (const auto& [o, n] : del.survivor_pairs()) survivors[py::int_(o)] = n;
              return py::make_tuple(del.dessin, survivors);
          },
          py::arg("dessin"), py::arg("edges"));

    m.def("expansion",
          [](const Dessin& d, const std::vector<int>& optional_edges) {
              return vector_to_dict(expansion(d, optional_edges));
          },
          py::arg("dessin"), py::arg("optional_edges"));

    m.def("product", &product, py::arg("a"), py::arg("b"));
    m.def("product_vector",
          [](const std::vector<std::pair<Dessin, Dessin>>& factors) {
              return vector_to_dict(product_vector(factors));
          },
          py::arg("factors"));

    m.def("enumerate_classes",
          [](int edges, bool connected) {
              return key_texts(
                  enumerate_exact(edges, connected ? Mode::Connected : Mode::All));
          },
          py::arg("edges"), py::arg("connected") = false);

    m.def("window_keys",
          [](int max_edges, bool include_empty) {
              return key_texts(make_window(max_edges, include_empty).keys);
          },
          py::arg("max_edges"), py::arg("include_empty") = true);

    m.def("filtration_rank",
          [](int max_edges, int level, const std::string& kind, bool include_empty,
             int threads) {
              const BasisWindow w = make_window(max_edges, include_empty);
              SpanOptions opts{threads};
              const SpanBuild build = kind == "dessin" ? build_dessin_level(w, level, opts)
                                                       : build_belyi_level_inner(w, level, opts);
              py::dict out;
              out["dim"] = w.keys.size();
              out["rank"] = build.span.rank();
              out["generators"] = build.generators.size();
              return out;
          },
          py::arg("max_edges"), py::arg("level"), py::arg("kind") = "dessin",
          py::arg("include_empty") = true, py::arg("threads") = 1);

    m.def("compare_levels",
          [](int max_edges, int level, bool include_empty, int threads) {
              const BasisWindow w = make_window(max_edges, include_empty);
              const ComparisonReport r = compare_levels(w, level, SpanOptions{threads});
              py::dict out;
              out["window"] = r.window;
              out["level"] = r.level;
              out["dim"] = r.dim;
              out["rank_dessin"] = r.rank_dessin;
              out["rank_belyi_inner"] = r.rank_belyi_inner;
              out["belyi_in_dessin"] = r.belyi_in_dessin;
              out["dessin_in_belyi_inner"] = r.dessin_in_belyi_inner;
              out["stable_at_prev_window"] = r.stable_at_prev_window;
              py::list witnesses;
              for (const auto& v : r.witnesses) witnesses.append(vector_to_dict(v));
              out["witnesses"] = witnesses;
              out["dessin_generators"] = r.dessin_generator_count;
              out["belyi_generators"] = r.belyi_generator_count;
              out["seconds_dessin"] = r.seconds_dessin;
              out["seconds_belyi"] = r.seconds_belyi;
              out["seconds_total"] = r.seconds_total;
              return out;
          },
          py::arg("max_edges"), py::arg("level"), py::arg("include_empty") = true,
          py::arg("threads") = 1);

    m.def("quotient_report",
          [](int max_edges, int level, bool include_empty, int threads) {
              const BasisWindow w = make_window(max_edges, include_empty);
              const QuotientReport q = quotient_report(w, level, SpanOptions{threads});
              py::dict out;
              out["level"] = q.level;
              out["rank_level"] = q.rank_level;
              out["rank_next"] = q.rank_next;
              out["dimension"] = q.dimension;
              out["spanning_verified"] = q.spanning_verified;
              out["class_count_at_level"] = q.class_count_at_level;
              return out;
          },
          py::arg("max_edges"), py::arg("level"), py::arg("include_empty") = true,
          py::arg("threads") = 1);

    m.def("export_dot", &export_dot, py::arg("dessin"));
}
