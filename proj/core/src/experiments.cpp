#include "codedinv/experiments.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "codedinv/errors.hpp"
#include "codedinv/inverse.hpp"

namespace codedinv {

ErrorsTableSpec ErrorsTableSpec::defaults(Target target, SolveMethod method) {
    ErrorsTableSpec spec;
    spec.target = target;
    spec.method = method;
    if (target == Target::Inverse) {
        spec.rows = 100;
        spec.cols = 100;
        spec.scale = 50.0;
    } else {
        spec.rows = 100;
        spec.cols = 50;
        spec.scale = 1.0;
    }
    // the experiment grids differ per method
    if (method == SolveMethod::SteepestDescent) {
        spec.eps_grid = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
    } else {
        spec.eps_grid = {1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
    }
    spec.trials = 20;
    return spec;
}

std::vector<ErrorsRow> run_errors_table(const ErrorsTableSpec& spec) {
    if (spec.trials < 1) throw ArgumentError("errors table: trials must be >= 1");
    if (spec.eps_grid.empty()) throw ArgumentError("errors table: empty epsilon grid");
    if (spec.target == ErrorsTableSpec::Target::Pseudoinverse && spec.rows <= spec.cols)
        throw ArgumentError("errors table: pseudoinverse target needs rows > cols");

    std::vector<ErrorsRow> out;
    out.reserve(spec.eps_grid.size());
    for (double eps : spec.eps_grid) {
        SolverConfig cfg;
        cfg.method = spec.method;
        cfg.epsilon = eps;
        cfg.max_iterations = spec.max_iterations;
        ErrorsRow row;
        row.eps = eps;
        for (std::size_t t = 0; t < spec.trials; ++t) {
            const RealMatrix a =
                RealMatrix::gaussian(spec.rows, spec.cols, spec.scale, spec.seed + t);
            RealMatrix estimate, reference;
            if (spec.target == ErrorsTableSpec::Target::Inverse) {
                estimate = estimate_inverse(a, cfg);
                reference = exact_inverse(a);
            } else {
                estimate = estimate_pseudoinverse(a, cfg);
                reference = exact_pseudoinverse(a);
            }
            const ErrorMetrics em = error_metrics(estimate, reference);
            row.mean_l2 += em.l2;
            row.mean_frobenius += em.frobenius;
            row.mean_relative_frobenius += em.relative_frobenius;
        }
        const double inv_trials = 1.0 / static_cast<double>(spec.trials);
        row.mean_l2 *= inv_trials;
        row.mean_frobenius *= inv_trials;
        row.mean_relative_frobenius *= inv_trials;
        out.push_back(row);
    }
    return out;
}

RealMatrix parse_generator_spec(const std::string& spec) {
    std::istringstream ss(spec);
    std::string head;
    if (!std::getline(ss, head, ':') || head != "gaussian")
        throw ArgumentError("generator spec must look like gaussian:ROWS:COLS:SCALE:SEED");
    std::string cell;
    auto next = [&](const char* what) {
        if (!std::getline(ss, cell, ':'))
            throw ArgumentError(std::string("generator spec missing ") + what);
        return cell;
    };
    const long rows = std::stol(next("rows"));
    const long cols = std::stol(next("cols"));
    const double scale = std::stod(next("scale"));
    const unsigned long long seed = std::stoull(next("seed"));
    if (rows <= 0 || cols <= 0)
        throw ArgumentError("generator spec dimensions must be positive");
    return RealMatrix::gaussian(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                                scale, seed);
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string join_ids(std::span<const std::size_t> ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(ids[i]);
    }
    return s;
}

} // namespace

void append_telemetry_csv(const std::filesystem::path& path, const TelemetryRow& row) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw IoError("cannot open for appending: " + path.string());
    if (fresh)
        out << "run_id,n,k,s,N,epsilon,method,responders,decode_online_ops,"
               "err_l2,err_F,err_rF,wall_time_ms\n";
    out << row.run_id << ',' << row.n << ',' << row.k << ',' << row.s << ',' << row.N << ','
        << fmt(row.epsilon) << ',' << row.method << ',' << join_ids(row.responders) << ','
        << row.decode_online_ops << ',' << fmt(row.err_l2) << ',' << fmt(row.err_f) << ','
        << fmt(row.err_rf) << ',' << fmt(row.wall_time_ms) << "\n";
    if (!out) throw IoError("write failed: " + path.string());
}

void write_decode_ops_csv(const std::filesystem::path& path,
                          std::span<const DecodeOpsRow> rows) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "k,brs_online_ops,repetition_ops\n";
    for (const auto& r : rows)
        out << r.k << ',' << fmt(r.brs_online_ops) << ',' << fmt(r.repetition_ops) << "\n";
    if (!out) throw IoError("write failed: " + path.string());
}

void write_errors_csv(const std::filesystem::path& path, std::span<const ErrorsRow> rows) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "epsilon,err_l2,err_F,err_rF\n";
    for (const auto& r : rows)
        out << fmt(r.eps) << ',' << fmt(r.mean_l2) << ',' << fmt(r.mean_frobenius) << ','
            << fmt(r.mean_relative_frobenius) << "\n";
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace codedinv
