#include <sstream>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcorr/channels.hpp"
#include "qcorr/cli.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/events.hpp"
#include "qcorr/records_io.hpp"
#include "qcorr/scenarios.hpp"

namespace py = pybind11;
using namespace qcorr;

namespace {

OptimizerSettings settings(int grid, int refine_iters, double refine_tol) {
    OptimizerSettings s;
    s.grid_points_per_angle = grid;
    s.refine_iterations = refine_iters;
    s.refine_tolerance = refine_tol;
    s.validate();
    return s;
}

py::dict basis_dict(const MeasurementBasis& b) {
    py::dict d;
    d["theta"] = b.theta;
    d["phi"] = b.phi;
    return d;
}

py::dict result_dict(const CorrelationResult& r) {
    py::dict d;
    d["total"] = r.total;
    d["classical_K"] = r.classical;
    d["quantum_Q"] = r.quantum;
    d["discord_D"] = r.discord_one_sided;
    d["classical_C"] = r.classical_one_sided;
    d["concurrence"] = r.concurrence;
    d["measured_side"] = std::string(to_string(r.measured_side));
    d["discord_basis"] = basis_dict(r.discord_basis);
    d["basis_a"] = basis_dict(r.basis_a);
    d["basis_b"] = basis_dict(r.basis_b);
    return d;
}

py::dict record_dict(const CorrelationRecord& rec) {
    py::dict d = result_dict(rec.result);
    d["scenario"] = std::string(to_string(rec.scenario));
    d["a"] = rec.a;
    d["p"] = rec.p;
    d["bipartition"] = std::string(to_string(rec.bipartition));
    d["oracle_max_abs_dev"] = rec.oracle_max_abs_dev ? py::cast(*rec.oracle_max_abs_dev) : py::none();
    return d;
}

py::dict event_dict(const Event& e) {
    py::dict d;
    d["kind"] = std::string(to_string(e.kind));
    d["measure"] = e.measure;
    d["p_lo"] = e.p_lo;
    d["p_hi"] = e.p_hi;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-qubit correlation dynamics under local noisy environments";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericDomainError>(m, "NumericDomainError", PyExc_ArithmeticError);

    m.def("initial_state", [](double a) { return initial_state(a).matrix(); }, py::arg("a"));

    m.def(
        "evolve",
        [](const CMatrix& rho0, const std::string& channel_a, const std::string& channel_b, double p) {
            return evolve(DensityMatrix(rho0), parse_channel(channel_a), parse_channel(channel_b), p).matrix();
        },
        py::arg("rho0"), py::arg("channel_a"), py::arg("channel_b"), py::arg("p"));

    m.def(
        "reduced",
        [](const CMatrix& total, const std::string& pair) {
            return reduced(DensityMatrix(total), parse_bipartition(pair)).matrix();
        },
        py::arg("total"), py::arg("pair"));

    m.def(
        "analytic_reduced",
        [](const std::string& scenario, const std::string& pair, double a, double p) {
            return analytic_reduced(parse_scenario(scenario), parse_bipartition(pair), a, p).matrix;
        },
        py::arg("scenario"), py::arg("pair"), py::arg("a"), py::arg("p"));

    m.def("concurrence", [](const CMatrix& rho) { return concurrence(DensityMatrix(rho)); }, py::arg("rho"));
    m.def("mutual_information", [](const CMatrix& rho) { return mutual_information(DensityMatrix(rho)); },
          py::arg("rho"));
    m.def("von_neumann_entropy", [](const CMatrix& rho) { return von_neumann_entropy(DensityMatrix(rho)); },
          py::arg("rho"));

    m.def(
        "full_result",
        [](const CMatrix& rho, int grid, int refine_iters, double refine_tol, const std::string& measured_side) {
            return result_dict(full_result(DensityMatrix(rho), settings(grid, refine_iters, refine_tol),
                                           parse_side(measured_side)));
        },
        py::arg("rho"), py::arg("grid") = 24, py::arg("refine_iters") = 200, py::arg("refine_tol") = 1e-9,
        py::arg("measured_side") = "b");

    m.def(
        "sweep",
        [](const std::string& scenario, double a, std::vector<double> p_grid, std::vector<std::string> bipartitions,
           const std::string& channel_a, const std::string& channel_b, int grid, int refine_iters, double refine_tol,
           bool oracle_check, const std::string& measured_side, unsigned threads) {
            ScenarioConfig c;
            c.scenario = parse_scenario(scenario);
            if (!channel_a.empty()) c.channel_a = parse_channel(channel_a);
            if (!channel_b.empty()) c.channel_b = parse_channel(channel_b);
            c.a = a;
            c.p_grid = std::move(p_grid);
            if (!bipartitions.empty()) {
                c.bipartitions.clear();
                for (const std::string& b : bipartitions) c.bipartitions.push_back(parse_bipartition(b));
            }
            c.optimizer = settings(grid, refine_iters, refine_tol);
            c.oracle_check = oracle_check;
            c.measured_side = parse_side(measured_side);
            c.threads = threads;
            std::vector<CorrelationRecord> recs;
            {
                py::gil_scoped_release release;
                recs = sweep(c);
            }
            py::list out;
            for (const CorrelationRecord& r : recs) out.append(record_dict(r));
            return out;
        },
        py::arg("scenario"), py::arg("a"), py::arg("p_grid"), py::arg("bipartitions") = std::vector<std::string>{},
        py::arg("channel_a") = "", py::arg("channel_b") = "", py::arg("grid") = 24, py::arg("refine_iters") = 200,
        py::arg("refine_tol") = 1e-9, py::arg("oracle_check") = false, py::arg("measured_side") = "b",
        py::arg("threads") = 0u);

    m.def(
        "detect_events",
        [](const std::vector<double>& p, const std::vector<double>& values, const std::string& measure,
           const std::function<double(double)>& reevaluate) {
            py::list out;
            for (const Event& e : detect_events(p, values, measure, reevaluate)) out.append(event_dict(e));
            return out;
        },
        py::arg("p"), py::arg("values"), py::arg("measure"), py::arg("reevaluate") = nullptr);

    m.def(
        "discrepancy_report",
        [](const std::string& scenario, const std::vector<double>& a_values, const std::vector<double>& p_grid) {
            py::list out;
            for (const DiscrepancyRow& r : discrepancy_report(parse_scenario(scenario), a_values, p_grid)) {
                py::dict d;
                d["scenario"] = std::string(to_string(r.scenario));
                d["pair"] = std::string(to_string(r.pair));
                d["a"] = r.a;
                d["p"] = r.p;
                d["max_abs_dev"] = r.max_abs_dev;
                d["trace_of_printed"] = r.trace_of_printed;
                d["printed_valid"] = r.printed_valid;
                d["matches"] = r.matches;
                d["flagged"] = r.flagged();
                d["note"] = r.note;
                out.append(d);
            }
            return out;
        },
        py::arg("scenario"), py::arg("a_values"), py::arg("p_grid"));

    m.def(
        "cli_main",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::main_entry(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));

    m.attr("RECORD_CSV_HEADER") = std::string(kRecordCsvHeader);
}
