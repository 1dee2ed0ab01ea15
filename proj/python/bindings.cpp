// Python bindings: the CLI computations, returning plain Python objects.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crystal_lr/crystal.hpp"
#include "crystal_lr/hall_littlewood.hpp"
#include "crystal_lr/json_io.hpp"
#include "crystal_lr/lr_engine.hpp"
#include "crystal_lr/suites.hpp"

namespace py = pybind11;
using namespace clr;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Partition partition(const std::vector<int>& p) { return Partition(p); }

Word to_word(const std::vector<std::pair<int, bool>>& w) {
    Word r;
    for (auto& [i, d] : w) r.push_back(Letter{i, d});
    return r;
}

std::optional<std::vector<std::pair<int, bool>>> from_word(const std::optional<Word>& w) {
    if (!w) return std::nullopt;
    std::vector<std::pair<int, bool>> r;
    for (auto& b : *w) r.emplace_back(b.index, b.dual);
    return r;
}

}  // namespace

PYBIND11_MODULE(crystal_lr, m) {
    m.doc() = "Crystal decompositions and Littlewood-Richardson rules for type A_infinity";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<mixed_level_error>(m, "MixedLevelError", PyExc_ValueError);
    py::register_exception<unknown_suite>(m, "UnknownSuite", PyExc_KeyError);

    m.def("lr", [](const std::vector<int>& lam, const std::vector<int>& mu, const std::vector<int>& nu) {
        return lr_coefficient(partition(lam), partition(mu), partition(nu));
    }, py::arg("lam"), py::arg("mu"), py::arg("nu"));

    m.def("genlr", [](const std::vector<int>& lam, const std::vector<int>& mu, const std::vector<int>& nu) {
        return gen_lr_coefficient(GenPartition(lam), GenPartition(mu), GenPartition(nu));
    }, py::arg("lam"), py::arg("mu"), py::arg("nu"));

    m.def("kostka_foulkes", [](const std::vector<int>& lam, const std::vector<int>& mu) {
        return to_py(to_json(kostka_foulkes(GenPartition(lam), GenPartition(mu))));
    }, py::arg("lam"), py::arg("mu"), "[[exponent, coefficient], ...]");

    m.def("decompose", [](const std::string& expr, int lo, int hi) {
        return to_py(to_json(decompose(parse_tensor_expression(expr), HwWindow{lo, hi})));
    }, py::arg("expr"), py::arg("lo") = -3, py::arg("hi") = 3);

    m.def("pieri", [](const std::vector<int>& lam, int a, bool dual) {
        return to_py(to_json(pieri_column(GenPartition(lam), a, dual)));
    }, py::arg("lam"), py::arg("a"), py::arg("dual") = false);

    m.def("hl_act", [](const std::vector<int>& mu, int T) {
        return to_py(to_json(bt_word_action(GenPartition(mu), T), T));
    }, py::arg("mu"), py::arg("T"));

    m.def("truncate", [](const std::string& expr, int p, int q, int margin) {
        auto fs = parse_tensor_expression(expr);
        VerifyOptions opt;
        opt.margin = margin;
        opt.hw_filter = HwWindow{-3, 3};
        return to_py(to_json(verify_truncated(fs, {p, q}, decompose(fs, HwWindow{-3, 3}), opt)));
    }, py::arg("expr"), py::arg("p") = -4, py::arg("q") = 4, py::arg("margin") = 2);

    m.def("verify", [](const std::string& suite, bool quick, std::uint64_t seed, int threads) {
        SuiteConfig cfg;
        cfg.quick = quick;
        cfg.seed = seed;
        cfg.threads = threads;
        std::vector<CheckResult> rs;
        {
            py::gil_scoped_release release;
            rs = run_suite(suite, cfg);
        }
        json out = json::array();
        for (auto& r : rs) out.push_back(to_json(r, false));
        return to_py(out);
    }, py::arg("suite"), py::arg("quick") = true, py::arg("seed") = 7, py::arg("threads") = 0);

    m.def("suite_names", &suite_names);

    // words are lists of (index, dual) pairs
    m.def("lower", [](const std::vector<std::pair<int, bool>>& w, int i) { return from_word(lower(to_word(w), i)); });
    m.def("raise_", [](const std::vector<std::pair<int, bool>>& w, int i) { return from_word(raise(to_word(w), i)); });
}
