#include "simplexcolor/chromatic.hpp"
#include "simplexcolor/coloring.hpp"
#include "simplexcolor/dual_graph.hpp"
#include "simplexcolor/error.hpp"
#include "simplexcolor/generators.hpp"
#include "simplexcolor/io.hpp"
#include "simplexcolor/render.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
namespace sc = simplexcolor;

namespace {

// Coordinates cross the boundary as canonical "p/q" strings; the python
// side turns them into fractions.Fraction.
sc::Rational to_rational(const py::handle& x)
{
    if (py::isinstance<py::bool_>(x)) throw sc::InputError("coordinates must be numbers, not booleans");
    if (py::isinstance<py::int_>(x)) return sc::parse_rational(py::str(x).cast<std::string>());
    if (py::isinstance<py::float_>(x)) return sc::rational_from_double(x.cast<double>());
    if (py::isinstance<py::str>(x)) return sc::parse_rational(x.cast<std::string>());
    if (py::hasattr(x, "numerator") && py::hasattr(x, "denominator"))
        return sc::parse_rational(py::str(x.attr("numerator")).cast<std::string>() + "/" +
                                  py::str(x.attr("denominator")).cast<std::string>());
    throw sc::InputError("unsupported coordinate type " + py::str(py::type::of(x)).cast<std::string>());
}

sc::Complex make_complex(std::size_t dimension, const py::sequence& vertices,
                         const std::vector<std::vector<sc::VertexId>>& simplices)
{
    std::vector<sc::Point> pts;
    for (const auto& v : vertices) {
        sc::Point p;
        for (const auto& x : py::reinterpret_borrow<py::sequence>(v)) p.push_back(to_rational(x));
        pts.push_back(std::move(p));
    }
    std::vector<sc::Simplex> s;
    for (const auto& ids : simplices) s.emplace_back(ids);
    return sc::Complex(dimension, std::move(pts), std::move(s));
}

std::vector<std::vector<std::string>> vertex_strings(const sc::Complex& c)
{
    std::vector<std::vector<std::string>> out;
    for (const auto& p : c.vertices()) {
        std::vector<std::string> row;
        for (const auto& x : p) row.push_back(sc::to_string(x));
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<std::vector<sc::VertexId>> simplex_ids(const sc::Complex& c)
{
    std::vector<std::vector<sc::VertexId>> out;
    for (const auto& s : c.simplices()) out.push_back(s.ids());
    return out;
}

py::dict report_dict(const sc::ValidationReport& r)
{
    py::list violations;
    for (const auto& v : r.violations)
        violations.append(py::dict(py::arg("kind") = sc::to_string(v.kind), py::arg("simplices") = v.simplices,
                                   py::arg("vertices") = v.vertices, py::arg("message") = v.message));
    return py::dict(py::arg("ok") = r.ok(), py::arg("level") = sc::to_string(r.level),
                    py::arg("overlap_checked") = r.overlap_checked, py::arg("violations") = violations);
}

py::dict clique_dict(const sc::CliqueReport& r)
{
    py::dict d(py::arg("simplices") = r.clique_nodes, py::arg("distinct_vertex_ids") = r.distinct_vertex_ids,
               py::arg("vertex_count_ok") = r.vertex_count_ok,
               py::arg("halfspace_condition_ok") = r.halfspace_condition_ok);
    if (r.root) {
        d["root"] = *r.root;
        d["apex"] = *r.apex;
        d["base"] = r.base;
        d["root_side"] = r.root_side;
        d["apex_side"] = r.apex_side;
    }
    return d;
}

sc::PeelCertificate certificate_from(const py::object& cert)
{
    return sc::certificate_from_json(sc::parse_json(py::module_::import("json").attr("dumps")(cert).cast<std::string>()));
}

py::object certificate_to(const sc::PeelCertificate& cert)
{
    return py::module_::import("json").attr("loads")(sc::certificate_to_json(cert).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact (d+1)-coloring of simplicial complexes by peeling exposed simplices.";

    auto input_error = py::register_exception<sc::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<sc::ParseError>(m, "ParseError", input_error.ptr());
    py::register_exception<sc::UnsupportedDimensionError>(m, "UnsupportedDimensionError", input_error.ptr());
    py::register_exception<sc::InvalidComplexError>(m, "InvalidComplexError", PyExc_ValueError);
    py::register_exception<sc::LimitExceededError>(m, "LimitExceededError", PyExc_RuntimeError);
    py::register_exception<sc::GeometryInvariantError>(m, "GeometryInvariantError", PyExc_RuntimeError);
    // Kept alive for the life of the interpreter; the translator needs it.
    static PyObject* unrealizable =
        py::exception<sc::UnrealizableComplexError>(m, "UnrealizableComplexError", PyExc_RuntimeError)
            .inc_ref()
            .ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const sc::UnrealizableComplexError& e) {
            py::object err = py::handle(unrealizable)(e.what());
            err.attr("residual_size") = e.residual_size();
            py::set_error(py::handle(unrealizable), err);
        }
    });

    py::class_<sc::Complex>(m, "Complex")
        .def(py::init(&make_complex), py::arg("dimension"), py::arg("vertices"), py::arg("simplices"),
             "Vertices may hold ints, floats (taken exactly), Fractions, or \"p/q\" strings.")
        .def_property_readonly("dimension", &sc::Complex::dimension)
        .def_property_readonly("vertex_strings", &vertex_strings)
        .def_property_readonly("simplices", &simplex_ids)
        .def("__len__", &sc::Complex::size)
        .def("__eq__", [](const sc::Complex& a, const sc::Complex& b) { return a == b; })
        .def("to_json", [](const sc::Complex& c) { return sc::write_complex(c, sc::FileFormat::json); })
        .def_static("from_json", [](const std::string& text) { return sc::read_complex(text, sc::FileFormat::json); })
        .def("__repr__", [](const sc::Complex& c) {
            return "<Complex d=" + std::to_string(c.dimension()) + " simplices=" + std::to_string(c.size()) +
                   " vertices=" + std::to_string(c.vertices().size()) + ">";
        });

    m.def("load", py::overload_cast<const std::filesystem::path&>(&sc::load_complex), py::arg("path"));
    m.def("save", py::overload_cast<const sc::Complex&, const std::filesystem::path&>(&sc::save_complex),
          py::arg("complex"), py::arg("path"));

    m.def(
        "generate",
        [](const std::string& kind, std::size_t dimension, std::size_t size, std::uint64_t seed) {
            return sc::generate({sc::parse_generator_kind(kind), dimension, size, seed});
        },
        py::arg("kind"), py::arg("dimension") = 2, py::arg("size") = 1, py::arg("seed") = 0);
    m.def("generator_kinds", [] {
        std::vector<std::string> out;
        for (auto k : sc::all_generator_kinds()) out.push_back(sc::to_string(k));
        return out;
    });

    m.def(
        "validate",
        [](const sc::Complex& c, const std::string& level) {
            if (level != "combinatorial" && level != "geometric-strict")
                throw sc::InputError("unknown level '" + level + "'");
            return report_dict(sc::validate(c, level == "combinatorial" ? sc::ValidationLevel::combinatorial
                                                                        : sc::ValidationLevel::geometric_strict));
        },
        py::arg("complex"), py::arg("level") = "combinatorial");

    m.def(
        "dual_edges",
        [](const sc::Complex& c) {
            const auto g = sc::build_dual(c);
            std::vector<std::tuple<std::size_t, std::size_t, std::vector<sc::VertexId>>> out;
            for (std::size_t i = 0; i < g.node_count(); ++i)
                for (const auto& e : g.neighbors(i))
                    if (i < e.neighbor) out.emplace_back(i, e.neighbor, e.facet.ids());
            return out;
        },
        py::arg("complex"), "Glued pairs (i, j, shared facet ids) with i < j.");

    m.def(
        "stats",
        [](const sc::Complex& c) {
            const auto s = sc::stats(sc::build_dual(c), c.dimension());
            return py::dict(py::arg("max_degree") = s.max_degree, py::arg("components") = s.component_count,
                            py::arg("chromatic_upper_bound") = s.chromatic_upper_bound,
                            py::arg("clique_bound_applies") = s.clique_bound_applies);
        },
        py::arg("complex"));

    m.def(
        "find_clique", [](const sc::Complex& c, std::size_t r) { return sc::find_clique(sc::build_dual(c), r); },
        py::arg("complex"), py::arg("r"));
    m.def(
        "analyze_kd1",
        [](const sc::Complex& c, const std::vector<std::size_t>& clique) {
            return clique_dict(sc::analyze_kd1_configuration(c, clique));
        },
        py::arg("complex"), py::arg("clique"));
    m.def(
        "analyze_all_kd1",
        [](const sc::Complex& c) {
            py::list out;
            for (const auto& k : sc::find_all_cliques(sc::build_dual(c), c.dimension() + 1))
                out.append(clique_dict(sc::analyze_kd1_configuration(c, k)));
            return out;
        },
        py::arg("complex"));

    m.def(
        "peel",
        [](const sc::Complex& c, const std::string& method) {
            return certificate_to(sc::peel(c, sc::parse_peel_method(method)));
        },
        py::arg("complex"), py::arg("method") = "combinatorial",
        "Peel certificate as {'method': ..., 'steps': [[simplex, [facet ids]], ...]}.");

    m.def(
        "color",
        [](const sc::Complex& c, const py::object& certificate, const std::string& method) {
            const auto cert =
                certificate.is_none() ? sc::peel(c, sc::parse_peel_method(method)) : certificate_from(certificate);
            return sc::color(c, cert).colors;
        },
        py::arg("complex"), py::arg("certificate") = py::none(), py::arg("method") = "combinatorial");

    m.def(
        "verify_coloring",
        [](const sc::Complex& c, const std::vector<int>& colors) {
            const auto r = sc::verify_coloring(c, sc::Coloring{colors});
            std::vector<std::string> messages;
            for (const auto& v : r.violations) messages.push_back(v.message);
            return std::make_pair(r.ok, messages);
        },
        py::arg("complex"), py::arg("colors"), "Returns (ok, violation messages).");

    m.def(
        "exact_chromatic",
        [](const sc::Complex& c, std::size_t node_limit) {
            const auto r = sc::exact_chromatic(sc::build_dual(c), node_limit);
            return py::dict(py::arg("chromatic_number") = r.chromatic_number,
                            py::arg("coloring") = r.optimal_coloring.colors,
                            py::arg("largest_clique") = r.largest_clique);
        },
        py::arg("complex"), py::arg("node_limit") = sc::default_node_limit);

    m.def(
        "render_svg",
        [](const sc::Complex& c, const std::optional<std::vector<int>>& colors, bool show_dual, int width,
           int height, const std::optional<std::vector<std::string>>& palette) {
            sc::RenderOptions o;
            o.show_dual = show_dual;
            o.width = width;
            o.height = height;
            if (palette) o.palette = *palette;
            std::optional<sc::Coloring> col;
            if (colors) col = sc::Coloring{*colors};
            return sc::render_svg(c, col, o);
        },
        py::arg("complex"), py::arg("colors") = py::none(), py::arg("show_dual") = false, py::arg("width") = 800,
        py::arg("height") = 800, py::arg("palette") = py::none());

#ifdef SIMPLEXCOLOR_VERSION
    m.attr("__version__") = SIMPLEXCOLOR_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
