#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "codedinv/errors.hpp"
#include "codedinv/solver.hpp"

using namespace codedinv;

namespace {

double grad_norm(const RealMatrix& a, std::span<const double> y, std::span<const double> b) {
    std::vector<double> r(a.rows()), g(a.cols());
    a.apply(b, r);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    a.apply_transposed(r, g);
    double acc = 0.0;
    for (double v : g) acc += 4.0 * v * v;
    return std::sqrt(acc);
}

} // namespace

TEST(SolverTest, IdentitySystemConvergesInOneSdStep) {
    const RealMatrix a = RealMatrix::identity(3);
    const std::vector<double> y{1.0, 2.0, 3.0};
    SolverConfig cfg{SolveMethod::SteepestDescent, 1e-8};
    const SolveReport rep = solve_least_squares(a, y, cfg);
    ASSERT_TRUE(rep.converged);
    EXPECT_EQ(rep.iterations, 1u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(rep.solution[i], y[i], 1e-14);
}

TEST(SolverTest, DiagonalSystemWithCg) {
    const double d[] = {2.0, 4.0};
    const RealMatrix a = RealMatrix::diagonal(d);
    const std::vector<double> y{1.0, 0.0};
    SolverConfig cfg{SolveMethod::ConjugateGradient, 1e-10};
    const SolveReport rep = solve_least_squares(a, y, cfg);
    ASSERT_TRUE(rep.converged);
    EXPECT_NEAR(rep.solution[0], 0.5, 1e-12);
    EXPECT_NEAR(rep.solution[1], 0.0, 1e-12);
}

TEST(SolverTest, PlantedSolutionRecovered) {
    // consistent overdetermined system with known solution (1, 1, 1)
    const RealMatrix a = RealMatrix::gaussian(5, 3, 1.0, 42);
    std::vector<double> ones{1.0, 1.0, 1.0};
    std::vector<double> y(5);
    a.apply(ones, y);
    for (SolveMethod m : {SolveMethod::SteepestDescent, SolveMethod::ConjugateGradient}) {
        SolverConfig cfg{m, 1e-10, 100000};
        const SolveReport rep = solve_least_squares(a, y, cfg);
        ASSERT_TRUE(rep.converged) << method_name(m);
        for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(rep.solution[i], 1.0, 1e-6);
    }
}

TEST(SolverTest, DegenerateEpsilonReturnsZeroIterationGuess) {
    const RealMatrix a = RealMatrix::identity(2);
    const std::vector<double> y{1.0, 1.0};
    SolverConfig cfg{SolveMethod::SteepestDescent, 1e6};
    const SolveReport rep = solve_least_squares(a, y, cfg);
    EXPECT_TRUE(rep.converged);
    EXPECT_EQ(rep.iterations, 0u);
    EXPECT_DOUBLE_EQ(rep.solution[0], 0.0);
    EXPECT_DOUBLE_EQ(rep.solution[1], 0.0);
}

TEST(SolverTest, ExhaustedBudgetIsReportedNotThrown) {
    const RealMatrix a = RealMatrix::gaussian(20, 20, 1.0, 5);
    std::vector<double> y(20, 0.0);
    y[0] = 1.0;
    SolverConfig cfg{SolveMethod::SteepestDescent, 1e-14, 1};
    const SolveReport rep = solve_least_squares(a, y, cfg);
    EXPECT_FALSE(rep.converged);
    EXPECT_EQ(rep.iterations, 1u);
    EXPECT_LE(rep.iterations, cfg.max_iterations);
}

TEST(SolverTest, SdTerminationRuleHoldsOnConvergence) {
    // converged SD reports imply ||2 A^T (A b - y)||_2 <= epsilon, re-derived
    // here from scratch
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const RealMatrix a = RealMatrix::gaussian(8, 8, 1.0, seed);
        std::vector<double> y(8, 0.0);
        y[seed % 8] = 1.0;
        SolverConfig cfg{SolveMethod::SteepestDescent, 1e-6, 2000000};
        const SolveReport rep = solve_least_squares(a, y, cfg);
        ASSERT_TRUE(rep.converged);
        EXPECT_LE(grad_norm(a, y, rep.solution), cfg.epsilon * (1.0 + 1e-12));
        EXPECT_LE(rep.final_criterion_value, cfg.epsilon);
    }
}

TEST(SolverTest, CgStepCriterionRecorded) {
    const RealMatrix a = RealMatrix::gaussian(10, 10, 1.0, 9);
    std::vector<double> y(10, 0.0);
    y[0] = 1.0;
    SolverConfig cfg{SolveMethod::ConjugateGradient, 1e-9, 200, true};
    const SolveReport rep = solve_least_squares(a, y, cfg);
    ASSERT_FALSE(rep.criterion_trace.empty());
    EXPECT_EQ(rep.criterion_trace.size(), rep.iterations);
    if (rep.converged) EXPECT_LE(rep.criterion_trace.back(), cfg.epsilon);
}

TEST(SolverTest, ZeroRhsConverges) {
    const RealMatrix a = RealMatrix::gaussian(6, 4, 1.0, 11);
    const std::vector<double> y(6, 0.0);
    SolverConfig cfg{SolveMethod::ConjugateGradient, 1e-12};
    const SolveReport rep = solve_least_squares(a, y, cfg);
    EXPECT_TRUE(rep.converged);
    for (double v : rep.solution) EXPECT_DOUBLE_EQ(v, 0.0);
}

TEST(SolverTest, ArgumentValidation) {
    const RealMatrix a = RealMatrix::identity(3);
    const std::vector<double> bad(2, 1.0);
    SolverConfig cfg;
    EXPECT_THROW(solve_least_squares(a, bad, cfg), ArgumentError);
    SolverConfig neg;
    neg.epsilon = -1.0;
    const std::vector<double> y(3, 1.0);
    EXPECT_THROW(solve_least_squares(a, y, neg), ArgumentError);
}

TEST(SolverTest, DefaultBudgetsPerMethod) {
    SolverConfig sd{SolveMethod::SteepestDescent, 1e-6};
    SolverConfig cg{SolveMethod::ConjugateGradient, 1e-6};
    EXPECT_EQ(sd.resolved_max_iterations(100), 1000u);
    EXPECT_EQ(cg.resolved_max_iterations(100), 100u);
    SolverConfig pinned{SolveMethod::ConjugateGradient, 1e-6, 7};
    EXPECT_EQ(pinned.resolved_max_iterations(100), 7u);
}
