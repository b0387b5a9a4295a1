#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "codedinv/invert_scheme.hpp"
#include "codedinv/matrix.hpp"
#include "codedinv/metrics.hpp"
#include "codedinv/solver.hpp"

namespace codedinv {

/// Seeded accuracy-vs-epsilon sweep of the inverse or pseudoinverse
/// estimator against the Gauss-Jordan reference.
struct ErrorsTableSpec {
    enum class Target { Inverse, Pseudoinverse };
    Target target = Target::Inverse;
    SolveMethod method = SolveMethod::SteepestDescent;
    std::vector<double> eps_grid;
    std::size_t trials = 20;
    std::size_t rows = 100;
    std::size_t cols = 100;       // the pseudoinverse default is 100 x 50
    double scale = 50.0;          // entry scale of the Gaussian draws
    std::uint64_t seed = 0;
    std::size_t max_iterations = 0;  // 0 = per-method defaults

    /// Experiment defaults per target/method (dimensions, scale, eps grid).
    static ErrorsTableSpec defaults(Target target, SolveMethod method);
};

struct ErrorsRow {
    double eps = 0.0;
    double mean_l2 = 0.0;
    double mean_frobenius = 0.0;
    double mean_relative_frobenius = 0.0;
};

std::vector<ErrorsRow> run_errors_table(const ErrorsTableSpec& spec);

/// "gaussian:ROWS:COLS:SCALE:SEED" -> seeded Gaussian matrix.
RealMatrix parse_generator_spec(const std::string& spec);

/// One exported telemetry record of a coded run.
struct TelemetryRow {
    std::size_t run_id = 0;
    std::size_t n = 0, k = 0, s = 0, N = 0;
    double epsilon = 0.0;
    std::string method;
    std::vector<std::size_t> responders;
    std::uint64_t decode_online_ops = 0;
    double err_l2 = 0.0, err_f = 0.0, err_rf = 0.0;
    double wall_time_ms = 0.0;
};

/// Header "run_id,n,k,s,N,epsilon,method,responders,decode_online_ops,
/// err_l2,err_F,err_rF,wall_time_ms"; responders joined with ';'. Appends
/// when the file already exists, writing the header only once.
void append_telemetry_csv(const std::filesystem::path& path, const TelemetryRow& row);

/// Header exactly "k,brs_online_ops,repetition_ops".
void write_decode_ops_csv(const std::filesystem::path& path,
                          std::span<const DecodeOpsRow> rows);

/// Header "epsilon,err_l2,err_F,err_rF".
void write_errors_csv(const std::filesystem::path& path, std::span<const ErrorsRow> rows);

} // namespace codedinv
