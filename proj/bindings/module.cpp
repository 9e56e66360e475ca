#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ssp/distributions.hpp"
#include "ssp/enumerators.hpp"
#include "ssp/oracle.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py_int(const ssp::BigNat& value) {
    const std::string text = value.str();
    PyObject* obj = PyLong_FromString(text.c_str(), nullptr, 10);
    if (obj == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

std::vector<std::vector<int>> to_lists(const ssp::SolutionSet& set) {
    std::vector<std::vector<int>> out;
    out.reserve(set.size());
    for (const ssp::ElementSubset& s : set.subsets()) out.push_back(s.elements());
    return out;
}

ssp::Algorithm algorithm_or_throw(const std::string& name) {
    const auto a = ssp::parse_algorithm(name);
    if (!a) throw py::value_error("unknown algorithm: " + name);
    return *a;
}

py::dict result_dict(const ssp::EnumerationResult& result) {
    py::dict out;
    out["subsets"] = to_lists(result.solutions);
    out["emitted"] = result.emitted();
    out["explored"] = result.explored;
    out["rounds"] = result.rounds;
    out["outcome"] = ssp::to_string(result.outcome);
    if (!result.diagnostic.empty()) out["diagnostic"] = result.diagnostic;
    return out;
}

ssp::RunLimits limits_for(double budget_s) {
    return budget_s > 0 ? ssp::RunLimits::wall_clock(budget_s) : ssp::RunLimits::none();
}

}  // namespace

PYBIND11_MODULE(_sspenum, m) {
    m.doc() = "Exact subset-sum enumeration over {1..n}: distribution tables, "
              "seven enumeration algorithms and a brute-force oracle.";

    py::register_exception<ssp::ValidationError>(m, "SSPValidationError", PyExc_ValueError);
    py::register_exception<ssp::InfeasibleError>(m, "SSPInfeasibleError", PyExc_ValueError);
    py::register_exception<ssp::ScaleError>(m, "SSPScaleError", PyExc_RuntimeError);
    py::register_exception<ssp::ResourceError>(m, "SSPResourceError", PyExc_MemoryError);

    m.def("max_sum", &ssp::max_sum, py::arg("n"), "n(n+1)/2, the largest reachable sum.");
    m.def("mid_sum", &ssp::mid_sum, py::arg("n"), "floor(n(n+1)/4), the symmetry midpoint.");
    m.def("min_sum_for_length", &ssp::min_sum_for_length, py::arg("n"), py::arg("l"));
    m.def("max_sum_for_length", &ssp::max_sum_for_length, py::arg("n"), py::arg("l"));
    m.def("peak_estimate", &ssp::peak_estimate, py::arg("n"),
          "Asymptotic estimate of SD[n][midSum(n)].");

    m.def(
        "encode",
        [](const std::vector<int>& elements) {
            return ssp::ElementSubset(elements).to_mask();
        },
        py::arg("subset"), "Subset -> sum(2^(e-1)) bit mask.");
    m.def(
        "decode",
        [](ssp::Mask mask) { return ssp::decode(mask).elements(); },
        py::arg("mask"), "Bit mask -> strictly increasing element list.");

    m.def(
        "sd_count",
        [](int n, long long s) { return to_py_int(ssp::sd_count(n, s)); },
        py::arg("n"), py::arg("s"), "Exact number of subsets of {1..n} with sum s.");
    m.def(
        "sd_row",
        [](int n) {
            const ssp::SumDistribution sd = ssp::SumDistribution::build(n);
            std::vector<py::int_> out;
            out.reserve(sd.max_sum() + 1);
            for (long long s = 0; s <= sd.max_sum(); ++s) out.push_back(to_py_int(sd.count(s)));
            return out;
        },
        py::arg("n"), "The full sum-distribution row for n.");
    m.def(
        "ld_count",
        [](int n, long long s, int l) {
            return to_py_int(ssp::LengthSumDistribution::build(n).count(s, l));
        },
        py::arg("n"), py::arg("s"), py::arg("l"));
    m.def(
        "ed_count",
        [](int n, long long s, int e) {
            return to_py_int(ssp::ElementDistribution::build(n).count(s, e));
        },
        py::arg("n"), py::arg("s"), py::arg("e"));
    m.def(
        "ed_row",
        [](int n, long long s) {
            std::vector<py::int_> out;
            for (const ssp::BigNat& c : ssp::element_distribution_row(n, s)) {
                out.push_back(to_py_int(c));
            }
            return out;
        },
        py::arg("n"), py::arg("s"));

    m.def(
        "oracle_enumerate",
        [](int n, long long s, bool allow_large) {
            return to_lists(ssp::oracle_enumerate(n, s, allow_large));
        },
        py::arg("n"), py::arg("s"), py::arg("allow_large") = false,
        "Exhaustive reference enumeration (guarded above n = 25).");

    m.def(
        "enumerate",
        [](const std::string& algorithm, int n, long long s, double budget_s) {
            return result_dict(
                ssp::run_algorithm(algorithm_or_throw(algorithm), n, s, limits_for(budget_s)));
        },
        py::arg("algorithm"), py::arg("n"), py::arg("s"), py::arg("budget_s") = 0.0,
        "Run one algorithm; returns subsets plus instrumentation counters.");

    m.def("algorithms", [] {
        std::vector<std::string> names;
        for (ssp::Algorithm a : ssp::all_algorithms()) names.push_back(ssp::to_string(a));
        return names;
    });

    m.def(
        "maximal_subset",
        [](int n, long long s, int l) { return ssp::maximal_subset(n, s, l).elements(); },
        py::arg("n"), py::arg("s"), py::arg("l"));
    m.def(
        "minimal_subset",
        [](int n, long long s, int l) { return ssp::minimal_subset(n, s, l).elements(); },
        py::arg("n"), py::arg("s"), py::arg("l"));
}
