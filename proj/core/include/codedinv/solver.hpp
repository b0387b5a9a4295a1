#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "codedinv/matrix.hpp"

namespace codedinv {

enum class SolveMethod { SteepestDescent, ConjugateGradient };

/// Configuration for the iterative least-squares subroutine.
///
/// Termination rules differ per method:
///   SD:  stop when ||2 A^T (A b - y)||_2 <= epsilon (gradient norm)
///   CG:  stop when ||b^[t] - b^[t-1]||_2 <= epsilon (step norm)
/// max_iterations == 0 selects the per-method default: 10*N for SD, N for CG,
/// where N is the unknown dimension.
struct SolverConfig {
    SolveMethod method = SolveMethod::SteepestDescent;
    double epsilon = 1e-6;
    std::size_t max_iterations = 0;
    bool record_iterations = false;

    void validate() const;
    std::size_t resolved_max_iterations(std::size_t unknowns) const;
};

const char* method_name(SolveMethod m);
SolveMethod method_from_name(const std::string& name);

struct SolveReport {
    std::vector<double> solution;
    std::size_t iterations = 0;
    double final_criterion_value = 0.0;
    std::uint64_t ops = 0;          // scalar multiply-adds
    bool converged = false;
    std::vector<double> criterion_trace;  // filled when record_iterations
};

/// Approximates argmin_b ||A b - y||_2^2 from a zero initial guess.
///
/// SD takes the exact line-search step xi = (g.g) / (2 ||A g||^2) for
/// g = 2 A^T (A b - y). CG runs conjugate gradients on the normal equations
/// A^T A b = A^T y without forming A^T A. An exhausted iteration budget is
/// reported (converged = false), not thrown.
SolveReport solve_least_squares(const RealMatrix& a, std::span<const double> y,
                                const SolverConfig& cfg);

} // namespace codedinv
