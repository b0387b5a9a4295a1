#include "codedinv/solver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "codedinv/errors.hpp"

namespace codedinv {

void SolverConfig::validate() const {
    if (!(epsilon > 0.0)) throw ArgumentError("solver epsilon must be positive");
}

std::size_t SolverConfig::resolved_max_iterations(std::size_t unknowns) const {
    if (max_iterations > 0) return max_iterations;
    const std::size_t n = unknowns == 0 ? 1 : unknowns;
    return method == SolveMethod::SteepestDescent ? 10 * n : n;
}

const char* method_name(SolveMethod m) {
    return m == SolveMethod::SteepestDescent ? "sd" : "cg";
}

SolveMethod method_from_name(const std::string& name) {
    if (name == "sd" || name == "SD") return SolveMethod::SteepestDescent;
    if (name == "cg" || name == "CG") return SolveMethod::ConjugateGradient;
    throw ArgumentError("unknown solve method: " + name);
}

namespace {

double norm2(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

SolveReport solve_sd(const RealMatrix& a, std::span<const double> y, const SolverConfig& cfg) {
    const std::size_t n = a.rows(), m = a.cols();
    const std::size_t budget = cfg.resolved_max_iterations(m);
    SolveReport rep;
    rep.solution.assign(m, 0.0);

    std::vector<double> r(n), g(m), ag(n);
    std::uint64_t ops = 0;

    auto gradient = [&]() {
        // r = A b - y; g = 2 A^T r
        a.apply(rep.solution, r);
        for (std::size_t i = 0; i < n; ++i) r[i] -= y[i];
        a.apply_transposed(r, g);
        for (double& v : g) v *= 2.0;
        ops += 2 * static_cast<std::uint64_t>(n) * m + n + m;
    };

    gradient();
    double gn = norm2(g);
    if (cfg.record_iterations) rep.criterion_trace.push_back(gn);

    while (gn > cfg.epsilon && rep.iterations < budget) {
        a.apply(g, ag);
        double gg = 0.0, agag = 0.0;
        for (std::size_t j = 0; j < m; ++j) gg += g[j] * g[j];
        for (std::size_t i = 0; i < n; ++i) agag += ag[i] * ag[i];
        ops += static_cast<std::uint64_t>(n) * m + n + m;
        const double denom = 2.0 * agag;
        if (denom == 0.0) break;  // zero Hessian action; nothing further to do
        const double xi = gg / denom;
        for (std::size_t j = 0; j < m; ++j) rep.solution[j] -= xi * g[j];
        ops += m;
        ++rep.iterations;
        gradient();
        gn = norm2(g);
        if (cfg.record_iterations) rep.criterion_trace.push_back(gn);
    }
    rep.final_criterion_value = gn;
    rep.converged = gn <= cfg.epsilon;
    rep.ops = ops;
    return rep;
}

SolveReport solve_cg(const RealMatrix& a, std::span<const double> y, const SolverConfig& cfg) {
    // CGNR: conjugate gradients on A^T A x = A^T y, A^T A never formed.
    const std::size_t n = a.rows(), m = a.cols();
    const std::size_t budget = cfg.resolved_max_iterations(m);
    SolveReport rep;
    rep.solution.assign(m, 0.0);

    std::vector<double> r(y.begin(), y.end());  // r = y - A x, x = 0
    std::vector<double> z(m), p(m), w(n);
    a.apply_transposed(r, z);
    p = z;
    double zz = 0.0;
    for (double v : z) zz += v * v;
    std::uint64_t ops = static_cast<std::uint64_t>(n) * m + m;

    double step = std::numeric_limits<double>::infinity();
    while (rep.iterations < budget) {
        a.apply(p, w);
        double ww = 0.0;
        for (double v : w) ww += v * v;
        ops += static_cast<std::uint64_t>(n) * m + n;
        if (ww == 0.0) {
            // A p = 0 with p in range(A^T): the iterate is already a minimizer
            step = 0.0;
            break;
        }
        const double alpha = zz / ww;
        double pn = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            rep.solution[j] += alpha * p[j];
            pn += p[j] * p[j];
        }
        step = std::abs(alpha) * std::sqrt(pn);
        for (std::size_t i = 0; i < n; ++i) r[i] -= alpha * w[i];
        a.apply_transposed(r, z);
        double zz_next = 0.0;
        for (double v : z) zz_next += v * v;
        ops += static_cast<std::uint64_t>(n) * m + 2 * m + n;
        const double beta = zz == 0.0 ? 0.0 : zz_next / zz;
        zz = zz_next;
        for (std::size_t j = 0; j < m; ++j) p[j] = z[j] + beta * p[j];
        ops += m;
        ++rep.iterations;
        if (cfg.record_iterations) rep.criterion_trace.push_back(step);
        if (step <= cfg.epsilon) break;
    }
    rep.final_criterion_value = step;
    rep.converged = step <= cfg.epsilon;
    rep.ops = ops;
    return rep;
}

} // namespace

SolveReport solve_least_squares(const RealMatrix& a, std::span<const double> y,
                                const SolverConfig& cfg) {
    cfg.validate();
    if (y.size() != a.rows()) throw ArgumentError("solve_least_squares: rhs length != rows");
    if (a.rows() == 0 || a.cols() == 0) throw ArgumentError("solve_least_squares: empty matrix");
    return cfg.method == SolveMethod::SteepestDescent ? solve_sd(a, y, cfg) : solve_cg(a, y, cfg);
}

} // namespace codedinv
