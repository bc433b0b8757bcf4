#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kmfold/autgroup.hpp"
#include "kmfold/report.hpp"
#include "kmfold/verify.hpp"

namespace py = pybind11;
using namespace kmfold;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_kmfold, m) {
    m.doc() = "Invariants of non-connected affine Kac-Moody groups";

    py::register_exception<CaseError>(m, "CaseError", PyExc_ValueError);

    m.def("case", [](const std::string& c, const std::string& a, const std::string& what) {
        return to_py(case_record(c, a, what));
    }, py::arg("case"), py::arg("auto") = "id", py::arg("what") = "fold");

    m.def("cartan", [](const std::string& c) {
        auto g = build_affine_cartan(parse_case(c));
        return py::make_tuple(g.entries, g.marks, g.dual_marks);
    }, py::arg("case"));

    m.def("recognize", [](const IMat& mat) { return recognize(mat).str(); }, py::arg("matrix"));

    m.def("representatives", [](const std::string& c) {
        std::vector<std::pair<std::string, Perm>> out;
        for (const auto& r : conjugacy_representatives(parse_case(c))) out.emplace_back(r.name, r.perm);
        return out;
    }, py::arg("case"));

    m.def("table", [](int id, int rank_bound) { return to_py(to_json(build_table(id, rank_bound))); },
          py::arg("id"), py::arg("rank_bound") = kDefaultRankBound);

    m.def("render", [](const std::vector<int>& ids, int rank_bound, const std::string& format) {
        return render(build_tables(ids, rank_bound), format);
    }, py::arg("ids"), py::arg("rank_bound") = kDefaultRankBound, py::arg("format") = "md");

    m.def("verify", [](const std::string& scope, int rank_bound) { return to_py(to_json(run_verify(scope, rank_bound))); },
          py::arg("scope") = "all", py::arg("rank_bound") = kDefaultRankBound);
}
