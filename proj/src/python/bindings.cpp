#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "usd/coherent.hpp"
#include "usd/discrimination.hpp"
#include "usd/simulate.hpp"

namespace py = pybind11;
using namespace usd;

namespace {

std::vector<double> moduli_of(const SymmetricSet& set) {
    std::vector<double> m(set.n);
    for (std::size_t k = 0; k < set.n; ++k) m[k] = std::norm(set.coefficients[k]);
    return m;
}

std::vector<std::vector<Complex>> matrix_rows(const CMatrix& m) {
    std::vector<std::vector<Complex>> rows(m.rows(), std::vector<Complex>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    return rows;
}

SymmetricSet make_set(const std::vector<Complex>& coefficients) {
    return from_coefficients(coefficients);
}

SymmetricSet make_coherent_set(std::size_t n, double alpha_sq) {
    const auto moduli = coefficient_moduli(CoherentFamily{Complex(std::sqrt(alpha_sq), 0.0), n});
    std::vector<Complex> c(n);
    for (std::size_t r = 0; r < n; ++r) c[r] = Complex(std::sqrt(std::max(moduli[r], 0.0)), 0.0);
    return from_coefficients(std::move(c));
}

} // namespace

PYBIND11_MODULE(_usd, m) {
    m.doc() = "Optimal unambiguous discrimination of symmetric quantum states";

    py::register_exception<Error>(m, "UsdError");

    py::class_<SymmetricSet>(m, "SymmetricSet")
        .def_readonly("n", &SymmetricSet::n)
        .def_readonly("coefficients", &SymmetricSet::coefficients)
        .def_property_readonly("moduli", &moduli_of)
        .def_property_readonly("vectors",
                               [](const SymmetricSet& s) { return matrix_rows(s.vectors); });

    py::class_<Povm>(m, "Povm")
        .def_property_readonly("detection_elements",
                               [](const Povm& p) {
                                   std::vector<std::vector<std::vector<Complex>>> out;
                                   for (const auto& e : p.detection_elements)
                                       out.push_back(matrix_rows(e));
                                   return out;
                               })
        .def_property_readonly(
            "failure_element",
            [](const Povm& p) { return matrix_rows(p.failure_element); });

    py::class_<StateTally>(m, "StateTally")
        .def_readonly("correct", &StateTally::correct)
        .def_readonly("wrong", &StateTally::wrong)
        .def_readonly("inconclusive", &StateTally::inconclusive);

    py::class_<SimulationReport>(m, "SimulationReport")
        .def_readonly("trials", &SimulationReport::trials)
        .def_readonly("per_state", &SimulationReport::per_state)
        .def_readonly("empirical_success", &SimulationReport::empirical_success)
        .def_readonly("expected_success", &SimulationReport::expected_success)
        .def_readonly("seed", &SimulationReport::seed)
        .def("total_wrong", &SimulationReport::total_wrong);

    py::class_<Crossing>(m, "Crossing")
        .def_readonly("alpha_sq", &Crossing::alpha_sq)
        .def_readonly("outgoing_argmin", &Crossing::outgoing_argmin);

    m.def("symmetric_set", &make_set, py::arg("coefficients"),
          "Build a symmetric set from canonical coefficients");
    m.def("two_state", &two_state_from_angle, py::arg("theta"));
    m.def("coherent_set", &make_coherent_set, py::arg("n"), py::arg("alpha_sq"));

    m.def("optimal_bound",
          [](const SymmetricSet& set) { return optimal_bound(moduli_of(set)); });
    m.def("optimal_bound_from_moduli",
          [](const std::vector<double>& moduli) { return optimal_bound(moduli); });
    m.def("idp_limit", [](double overlap) { return idp_limit(Complex(overlap, 0.0)); });
    m.def("brute_force_max",
          [](const SymmetricSet& set) { return brute_force_max(set); });

    m.def("optimal_povm", [](const SymmetricSet& set) {
        auto [povm, bound] = optimal_povm(set);
        return py::make_tuple(std::move(povm), bound);
    });

    m.def("coherent_moduli", [](std::size_t n, double alpha_sq) {
        return coefficient_moduli(CoherentFamily{Complex(std::sqrt(alpha_sq), 0.0), n});
    });
    m.def("coherent_bound_sweep",
          [](std::size_t n, const std::vector<double>& grid) {
              const SweepTable t = bound_vs_alpha(n, grid);
              return py::make_tuple(t.moduli, t.bound, t.argmin, t.bound_nondecreasing);
          });
    m.def("find_crossings", &find_crossings, py::arg("n"), py::arg("alpha_sq_max"));

    m.def("run_trials", &run_trials, py::arg("set"), py::arg("povm"), py::arg("trials"),
          py::arg("seed"));
    m.def("convexity_probe", &convexity_probe, py::arg("dims"), py::arg("max_operators"),
          py::arg("cases"), py::arg("seed"));
}
