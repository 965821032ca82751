#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tannaka/errors.hpp"
#include "tannaka/jobs/jobs.hpp"
#include "tannaka/moncat/symexpr.hpp"

namespace py = pybind11;
using namespace tannaka;

namespace {

using Job = jobs::JobResult (*)(const jobs::Json&, std::optional<exact::Field>);

// Documents and results cross the boundary as JSON text.
std::string run(Job job, const std::string& doc, const std::optional<std::string>& field) {
    std::optional<exact::Field> f;
    if (field) f = exact::Field::from_name(*field);
    return job(jobs::parse_document(doc), f).json.dump();
}

std::vector<std::vector<std::string>> to_strings(const exact::Matrix& m) {
    std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).to_string();
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Tannaka reconstruction for presented categories";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
    py::register_exception<WellDefinednessError>(m, "WellDefinednessError", PyExc_ArithmeticError);
    py::register_exception<UnsupportedProblem>(m, "UnsupportedProblem", PyExc_RuntimeError);

    m.attr("fixture_dir") = TANNAKA_FIXTURE_DIR;

    const std::vector<std::pair<const char*, Job>> commands{
        {"validate", jobs::cmd_validate},   {"reconstruct", jobs::cmd_reconstruct},
        {"lift", jobs::cmd_lift},           {"rho_tilde", jobs::cmd_rho_tilde},
        {"nat", jobs::cmd_nat},             {"characters", jobs::cmd_characters},
    };
    for (const auto& [name, job] : commands)
        m.def(
            name, [job = job](const std::string& doc, std::optional<std::string> field) { return run(job, doc, field); },
            py::arg("doc"), py::arg("field") = py::none(), "Runs the command on a JSON document; returns the JSON report.");

    m.def(
        "coherence",
        [](const std::string& lhs, const std::string& rhs, std::optional<moncat::DimAssignment> dims) {
            return jobs::cmd_coherence(lhs, rhs, dims).json.dump();
        },
        py::arg("lhs"), py::arg("rhs"), py::arg("dims") = py::none());

    m.def("coherence_equal", [](const std::string& a, const std::string& b) {
        return moncat::coherence_equal(moncat::SymExpr::parse(a), moncat::SymExpr::parse(b));
    });
    m.def("permutation", [](const std::string& e) { return moncat::perm_of(moncat::SymExpr::parse(e)); });
    m.def(
        "eval_in_vec",
        [](const std::string& e, const moncat::DimAssignment& dims, const std::string& field) {
            return to_strings(moncat::eval_in_vec(moncat::SymExpr::parse(e), dims, exact::Field::from_name(field)));
        },
        py::arg("expr"), py::arg("dims"), py::arg("field") = "Q");
}
