#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "fuzzyahp/composition.hpp"
#include "fuzzyahp/error.hpp"
#include "fuzzyahp/fuzzy.hpp"
#include "fuzzyahp/hierarchy.hpp"
#include "fuzzyahp/solver.hpp"
#include "fuzzyahp/study_io.hpp"
#include "fuzzyahp/survey.hpp"

namespace py = pybind11;
using namespace fahp;

namespace {

ComparisonMatrix make_matrix(std::vector<std::string> items, const std::vector<py::tuple>& judgments) {
    ComparisonMatrix m;
    m.items = std::move(items);
    for (const auto& t : judgments) {
        if (t.size() != 3) throw ArgumentError("a judgment is (row, col, Tfn)");
        m.judgments.push_back({t[0].cast<std::string>(), t[1].cast<std::string>(), t[2].cast<Tfn>()});
    }
    validate_matrix(m);
    return m;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fuzzy AHP weighting via fuzzy preference programming";
    m.attr("__version__") = FUZZYAHP_VERSION;

    auto base = py::register_exception<Error>(m, "FuzzyAhpError", PyExc_RuntimeError);
    py::register_exception<ArgumentError>(m, "ArgumentError", base);
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<LookupError>(m, "LookupError", base);
    py::register_exception<ValidationError>(m, "ValidationError", base);
    py::register_exception<SolverError>(m, "SolverError", base);
    py::register_exception<StatisticError>(m, "StatisticError", base);
    py::register_exception<CompositionError>(m, "CompositionError", base);

    py::class_<Tfn>(m, "Tfn")
        .def(py::init<double, double, double>(), py::arg("lower"), py::arg("mode"), py::arg("upper"))
        .def_property_readonly("lower", &Tfn::lower)
        .def_property_readonly("mode", &Tfn::mode)
        .def_property_readonly("upper", &Tfn::upper)
        .def("is_crisp", &Tfn::is_crisp)
        .def("__eq__", [](const Tfn& a, const Tfn& b) { return a == b; })
        .def("__iter__", [](const Tfn& t) { return py::iter(py::make_tuple(t.lower(), t.mode(), t.upper())); })
        .def("__repr__", [](const Tfn& t) {
            return "Tfn(" + py::repr(py::float_(t.lower())).cast<std::string>() + ", " +
                   py::repr(py::float_(t.mode())).cast<std::string>() + ", " +
                   py::repr(py::float_(t.upper())).cast<std::string>() + ")";
        });

    m.def("scale_lookup", [](const std::string& term) { return scale_lookup(term); }, py::arg("term"),
          "Fuzzy value of a term on the default linguistic scale");
    m.def("default_scale", [] { return default_scale().entries(); });
    m.def("membership", &membership, py::arg("judgment"), py::arg("ratio"));
    m.def("reciprocal", &reciprocal, py::arg("judgment"));

    py::enum_<AggregationMethod>(m, "AggregationMethod")
        .value("Geometric", AggregationMethod::Geometric)
        .value("Arithmetic", AggregationMethod::Arithmetic);
    m.def("aggregate_judgments",
          [](const std::vector<Tfn>& js, AggregationMethod method) { return aggregate_judgments(js, method); },
          py::arg("judgments"), py::arg("method") = AggregationMethod::Geometric);

    // survey
    m.def("casp_pass", [](const std::vector<int>& criteria) { return casp_pass(CaspScore(criteria)); },
          py::arg("criteria"));
    m.def("delphi_consensus",
          [](const std::vector<std::vector<int>>& ratings) {
              std::vector<std::string> items, experts;
              for (std::size_t i = 0; i < ratings.size(); ++i) items.push_back("I" + std::to_string(i + 1));
              if (!ratings.empty())
                  for (std::size_t e = 0; e < ratings.front().size(); ++e) experts.push_back("E" + std::to_string(e + 1));
              DelphiRatings r(items, experts, ratings);
              std::vector<double> out;
              for (std::size_t i = 0; i < ratings.size(); ++i) out.push_back(r.consensus(i));
              return out;
          },
          py::arg("ratings"), "Consensus fraction per item; ratings[i][e] is expert e's rating of item i");
    m.def("delphi_round",
          [](std::vector<std::string> items, std::vector<std::string> experts, std::vector<std::vector<int>> ratings,
             double threshold) {
              const auto r = delphi_round(DelphiRatings(std::move(items), std::move(experts), std::move(ratings)),
                                          threshold);
              return py::make_tuple(r.accepted, r.deferred);
          },
          py::arg("items"), py::arg("experts"), py::arg("ratings"), py::arg("threshold") = kDefaultDelphiThreshold,
          "Returns (accepted, deferred) item sets");

    py::enum_<VarianceConvention>(m, "VarianceConvention")
        .value("Sample", VarianceConvention::Sample)
        .value("Population", VarianceConvention::Population);
    m.def("cronbach_alpha",
          [](const std::vector<std::vector<double>>& rows, VarianceConvention convention) {
              std::vector<std::string> items;
              if (!rows.empty())
                  for (std::size_t j = 0; j < rows.front().size(); ++j) items.push_back("Q" + std::to_string(j + 1));
              return cronbach_alpha(ItemResponses(items, rows), convention);
          },
          py::arg("rows"), py::arg("convention") = VarianceConvention::Sample,
          "rows[r][j] is respondent r's response to item j");

    // solver
    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("lambda_lo", &SolverConfig::lambda_lo)
        .def_readwrite("lambda_cap", &SolverConfig::lambda_cap)
        .def_readwrite("bisection_tol", &SolverConfig::bisection_tol)
        .def_readwrite("weight_floor", &SolverConfig::weight_floor);

    py::class_<ComparisonMatrix>(m, "ComparisonMatrix")
        .def(py::init(&make_matrix), py::arg("items"), py::arg("judgments"),
             "judgments: list of (row, col, Tfn) estimating w[row] / w[col]")
        .def_readonly("items", &ComparisonMatrix::items);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("items", &SolveResult::items)
        .def_readonly("weights", &SolveResult::weights)
        .def_readonly("lambda_", &SolveResult::lambda)
        .def_readonly("consistent", &SolveResult::consistent)
        .def_readonly("iterations", &SolveResult::iterations)
        .def_readonly("clamped", &SolveResult::clamped)
        .def_readonly("slack", &SolveResult::slack)
        .def_readonly("face_width", &SolveResult::face_width)
        .def_readonly("non_unique", &SolveResult::non_unique)
        .def("weight_map", &SolveResult::weight_map);

    m.def("solve_fpp", &solve_fpp, py::arg("matrix"), py::arg("config") = SolverConfig{});
    m.def("oracle_solve", &oracle_solve, py::arg("matrix"), py::arg("grid_step"));
    m.def("lambda_at", [](const ComparisonMatrix& mat, const std::vector<double>& w) { return lambda_at(mat, w); },
          py::arg("matrix"), py::arg("weights"));

    // composition
    py::class_<GlobalRow>(m, "GlobalRow")
        .def_readonly("leaf", &GlobalRow::leaf)
        .def_readonly("category", &GlobalRow::category)
        .def_readonly("category_weight", &GlobalRow::category_weight)
        .def_readonly("local_weight", &GlobalRow::local_weight)
        .def_readonly("global_weight", &GlobalRow::global_weight)
        .def_readonly("rank", &GlobalRow::rank);
    m.def("compose_global",
          [](const WeightMap& categories, const std::map<std::string, WeightMap>& locals) {
              return compose_global(categories, locals).rows;
          },
          py::arg("category_weights"), py::arg("local_weights"));
    m.def("rank", &rank, py::arg("weights"));
    m.def("normalize", &normalize, py::arg("weights"));

    // studies
    m.def("solve_study",
          [](const std::filesystem::path& path) {
              const Study s = load_study(path);
              const auto solved = solve_blocks(s.hierarchy, s.solver);
              std::map<std::string, WeightMap> weights;
              for (const auto& [id, r] : solved) weights[id] = r.weight_map();
              py::dict blocks;
              for (const auto& [id, r] : solved) blocks[py::str(id)] = r;
              return py::make_tuple(blocks, compose_hierarchy(s.hierarchy, weights).rows);
          },
          py::arg("path"), "Solves every block of a study file; returns (blocks by node id, global rows by rank)");
}
