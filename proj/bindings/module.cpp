#include "skeincore/eval.hpp"
#include "skeincore/ideals.hpp"
#include "skeincore/parse.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace skeincore;

namespace {

SkeinRing ring_of(const std::string& manifold) { return build_ring(parse_manifold(manifold)); }

std::string normalize_text(const std::string& manifold, const std::string& web, long budget) {
    SkeinRing ring = ring_of(manifold);
    Poly p = normalize(ring, parse_web(web));
    if (!ring.spec.group.relators.empty() || !ring.spec.circles.empty()) {
        GroebnerBasis gb = buchberger(ring.layout, manifold_ideal(ring), budget);
        if (!gb.complete) throw BudgetError("manifold ideal basis incomplete within budget");
        p = gb_reduce(gb, p);
    }
    return p.str();
}

std::vector<std::complex<double>> eval_web(const std::string& manifold, const std::string& web,
                                           uint64_t seed, int trials) {
    SkeinRing ring = ring_of(manifold);
    Web w = parse_web(web);
    std::vector<std::complex<double>> out;
    for (int t = 0; t < trials; ++t)
        out.push_back(phi_direct(ring, w, sample_representation(ring, seed + (uint64_t)t)));
    return out;
}

std::vector<std::tuple<std::string, bool, std::string>> relation_report(const std::string& manifold) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const RelationCheck& rc : relation_suite(ring_of(manifold)))
        out.push_back({rc.name, rc.pass, rc.detail});
    return out;
}

double route_residual(const std::string& manifold, const std::string& web, uint64_t seed,
                      int trials) {
    SkeinRing ring = ring_of(manifold);
    return tau_check(ring, parse_web(web), seed, trials);
}

bool web_nilpotent(const std::string& manifold, const std::string& web, long budget) {
    SkeinRing ring = ring_of(manifold);
    return is_nilpotent(ring.layout, manifold_ideal(ring), normalize(ring, parse_web(web)), budget);
}

double split_residual(const std::string& manifold, const std::string& web, uint64_t seed) {
    SkeinRing ring = ring_of(manifold);
    return split_square_residual(ring, parse_web(web), seed);
}

} // namespace

PYBIND11_MODULE(_skeincore, m) {
    m.doc() = "Canonical normal forms and evaluation of stated skein elements";
    m.def("normalize", &normalize_text, py::arg("manifold"), py::arg("web"),
          py::arg("budget") = 100000,
          "Canonical polynomial normal form of a web, as text");
    m.def("eval_web", &eval_web, py::arg("manifold"), py::arg("web"), py::arg("seed") = 1,
          py::arg("trials") = 10,
          "Values of a web at seeded representation samples");
    m.def("relation_report", &relation_report, py::arg("manifold"),
          "Local relation checks as (name, pass, detail) tuples");
    m.def("route_residual", &route_residual, py::arg("manifold"), py::arg("web"),
          py::arg("seed") = 1, py::arg("trials") = 10,
          "Largest symbolic-vs-direct evaluation residual over seeded samples");
    m.def("nilpotent", &web_nilpotent, py::arg("manifold"), py::arg("web"),
          py::arg("budget") = 100000,
          "Whether a web's normal form is nilpotent modulo the manifold ideal");
    m.def("split_residual", &split_residual, py::arg("manifold"), py::arg("web"),
          py::arg("seed") = 1,
          "Residual of the cut-and-glue commuting square at one sample");
}
