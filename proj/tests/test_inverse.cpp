#include <gtest/gtest.h>

#include "codedinv/errors.hpp"
#include "codedinv/inverse.hpp"
#include "codedinv/metrics.hpp"

using namespace codedinv;

TEST(EstimateInverseTest, IdentityIsExact) {
    SolverConfig cfg{SolveMethod::SteepestDescent, 1e-10};
    const RealMatrix inv = estimate_inverse(RealMatrix::identity(4), cfg);
    EXPECT_LT(max_abs_diff(inv, RealMatrix::identity(4)), 1e-14);
}

TEST(EstimateInverseTest, DiagonalWithinTolerance) {
    const double d[] = {2.0, 5.0};
    SolverConfig cfg{SolveMethod::SteepestDescent, 1e-10};
    const RealMatrix inv = estimate_inverse(RealMatrix::diagonal(d), cfg);
    EXPECT_NEAR(inv(0, 0), 0.5, 1e-8);
    EXPECT_NEAR(inv(1, 1), 0.2, 1e-8);
    EXPECT_NEAR(inv(1, 0), 0.0, 1e-8);
}

TEST(EstimateInverseTest, NonSquareRejected) {
    SolverConfig cfg;
    EXPECT_THROW(estimate_inverse(RealMatrix(3, 4), cfg), ArgumentError);
}

TEST(EstimateInverseTest, WellConditionedResidualBound) {
    // condition number stays small for I + 0.1 G
    const std::size_t n = 20;
    RealMatrix a = RealMatrix::gaussian(n, n, 0.1, 3);
    for (std::size_t i = 0; i < n; ++i) a(i, i) += 1.0;
    for (SolveMethod m : {SolveMethod::SteepestDescent, SolveMethod::ConjugateGradient}) {
        SolverConfig cfg{m, 1e-10, 200000};
        const RealMatrix inv = estimate_inverse(a, cfg);
        EXPECT_LE(frobenius_norm(a * inv - RealMatrix::identity(n)), 1e-6 * n)
            << method_name(m);
    }
}

TEST(BlockColumnsTest, IdentityRange) {
    SolverConfig cfg{SolveMethod::SteepestDescent, 1e-10};
    const RealMatrix block = estimate_block_columns(RealMatrix::identity(6), {3, 4}, cfg);
    EXPECT_EQ(block.rows(), 6u);
    EXPECT_EQ(block.cols(), 2u);
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_NEAR(block(i, 0), i == 2 ? 1.0 : 0.0, 1e-14);
        EXPECT_NEAR(block(i, 1), i == 3 ? 1.0 : 0.0, 1e-14);
    }
}

TEST(BlockColumnsTest, DiagonalRange) {
    const double d[] = {1, 2, 3, 4, 5, 6};
    SolverConfig cfg{SolveMethod::ConjugateGradient, 1e-12};
    const RealMatrix block = estimate_block_columns(RealMatrix::diagonal(d), {1, 2}, cfg);
    EXPECT_NEAR(block(0, 0), 1.0, 1e-10);
    EXPECT_NEAR(block(1, 1), 0.5, 1e-10);
    EXPECT_NEAR(block(2, 1), 0.0, 1e-10);
}

TEST(BlockColumnsTest, FullRangeEqualsEstimateInverse) {
    const RealMatrix a = RealMatrix::gaussian(6, 6, 1.0, 42);
    SolverConfig cfg{SolveMethod::ConjugateGradient, 1e-10};
    const RealMatrix full = estimate_inverse(a, cfg);
    const RealMatrix block = estimate_block_columns(a, {1, 6}, cfg);
    EXPECT_EQ(full.data(), block.data());  // bit-for-bit
}

TEST(BlockColumnsTest, PartitionConcatenatesBitForBit) {
    const RealMatrix a = RealMatrix::gaussian(6, 6, 1.0, 42);
    SolverConfig cfg{SolveMethod::ConjugateGradient, 1e-10};
    const RealMatrix full = estimate_inverse(a, cfg);
    const RealMatrix parts[] = {estimate_block_columns(a, {1, 2}, cfg),
                                estimate_block_columns(a, {3, 4}, cfg),
                                estimate_block_columns(a, {5, 6}, cfg)};
    EXPECT_EQ(hcat(parts).data(), full.data());
}

TEST(BlockColumnsTest, RangeValidation) {
    SolverConfig cfg;
    const RealMatrix a = RealMatrix::identity(4);
    EXPECT_THROW(estimate_block_columns(a, {0, 2}, cfg), ArgumentError);
    EXPECT_THROW(estimate_block_columns(a, {2, 5}, cfg), ArgumentError);
    EXPECT_THROW(estimate_block_columns(a, {3, 2}, cfg), ArgumentError);
}

TEST(PseudoinverseTest, OrthonormalColumnsGiveTranspose) {
    // A = [I2; 0] has A^+ = [I2 | 0]
    RealMatrix a(3, 2);
    a(0, 0) = 1.0;
    a(1, 1) = 1.0;
    SolverConfig cfg{SolveMethod::SteepestDescent, 1e-12};
    const RealMatrix p = estimate_pseudoinverse(a, cfg);
    EXPECT_EQ(p.rows(), 2u);
    EXPECT_EQ(p.cols(), 3u);
    EXPECT_LT(max_abs_diff(p, a.transposed()), 1e-12);
}

TEST(PseudoinverseTest, WideInputRejected) {
    SolverConfig cfg;
    EXPECT_THROW(estimate_pseudoinverse(RealMatrix(2, 3), cfg), ArgumentError);
    EXPECT_THROW(estimate_pseudoinverse(RealMatrix(3, 3), cfg), ArgumentError);
}

TEST(PseudoinverseTest, LeftIdentityResidualShrinksWithEpsilon) {
    // monotone trend over the epsilon grid, with 10x slack per step
    const RealMatrix a = RealMatrix::gaussian(100, 50, 1.0, 0);
    double first = 0.0, prev = 0.0, last = 0.0;
    bool first_set = false;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5}) {
        SolverConfig cfg{SolveMethod::ConjugateGradient, eps};
        const RealMatrix p = estimate_pseudoinverse(a, cfg);
        const double resid = frobenius_norm(p * a - RealMatrix::identity(50));
        if (first_set) EXPECT_LE(resid, 10.0 * prev);
        if (!first_set) {
            first = resid;
            first_set = true;
        }
        prev = resid;
        last = resid;
    }
    EXPECT_LE(last, first);
}

TEST(PseudoinverseTest, MatchesExactReferenceAtTightEpsilon) {
    const RealMatrix a = RealMatrix::gaussian(30, 10, 1.0, 8);
    SolverConfig cfg{SolveMethod::ConjugateGradient, 1e-13, 200};
    const RealMatrix est = estimate_pseudoinverse(a, cfg);
    const RealMatrix ref = exact_pseudoinverse(a);
    EXPECT_LT(max_abs_diff(est, ref), 1e-8);
}

TEST(BlockRowsTest, MatchesPseudoinverseRowFormulation) {
    const RealMatrix a = RealMatrix::gaussian(12, 6, 1.0, 17);
    const RealMatrix b = gram(a);
    SolverConfig cfg{SolveMethod::ConjugateGradient, 1e-12};
    const RealMatrix all_rows = estimate_block_rows(b, {1, 6}, cfg);
    const RealMatrix parts[] = {estimate_block_rows(b, {1, 3}, cfg),
                                estimate_block_rows(b, {4, 6}, cfg)};
    EXPECT_EQ(vcat(parts).data(), all_rows.data());
    // rows times A^T reproduce the pseudoinverse estimate
    const RealMatrix pinv = estimate_pseudoinverse(a, cfg);
    EXPECT_EQ((all_rows * a.transposed()).data(), pinv.data());
}
