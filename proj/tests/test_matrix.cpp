#include <gtest/gtest.h>

#include <cmath>

#include "codedinv/errors.hpp"
#include "codedinv/matrix.hpp"

using namespace codedinv;

TEST(RealMatrixTest, ConstructionValidatesShapeAndFiniteness) {
    EXPECT_THROW(RealMatrix(2, 2, {1.0, 2.0, 3.0}), ArgumentError);
    EXPECT_THROW(RealMatrix(1, 2, {1.0, std::nan("")}), ArgumentError);
    EXPECT_THROW(RealMatrix(1, 2, {1.0, INFINITY}), ArgumentError);
    const RealMatrix m(2, 3, {1, 2, 3, 4, 5, 6});
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.cols(), 3u);
    EXPECT_DOUBLE_EQ(m(1, 2), 6.0);
}

TEST(RealMatrixTest, MultiplyAndTranspose) {
    const RealMatrix a(2, 3, {1, 2, 3, 4, 5, 6});
    const RealMatrix b = a.transposed();
    const RealMatrix c = a * b;  // 2x2
    EXPECT_DOUBLE_EQ(c(0, 0), 14.0);
    EXPECT_DOUBLE_EQ(c(0, 1), 32.0);
    EXPECT_DOUBLE_EQ(c(1, 0), 32.0);
    EXPECT_DOUBLE_EQ(c(1, 1), 77.0);
    EXPECT_THROW(a * a, ArgumentError);
}

TEST(RealMatrixTest, GramIsExactlySymmetric) {
    const RealMatrix a = RealMatrix::gaussian(7, 4, 1.0, 123);
    const RealMatrix b = gram(a);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(b(i, j), b(j, i));
    const RealMatrix direct = a.transposed() * a;
    EXPECT_LT(max_abs_diff(b, direct), 1e-12);
}

TEST(RealMatrixTest, SlicesAndConcat) {
    const RealMatrix a(3, 4, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    const RealMatrix cols = a.column_slice(2, 3);
    EXPECT_EQ(cols.cols(), 2u);
    EXPECT_DOUBLE_EQ(cols(2, 0), 10.0);
    const RealMatrix rows = a.row_slice(3, 3);
    EXPECT_EQ(rows.rows(), 1u);
    EXPECT_DOUBLE_EQ(rows(0, 0), 9.0);
    const RealMatrix parts[] = {a.column_slice(1, 2), a.column_slice(3, 4)};
    EXPECT_LT(max_abs_diff(hcat(parts), a), 1e-15);
    const RealMatrix rparts[] = {a.row_slice(1, 1), a.row_slice(2, 3)};
    EXPECT_LT(max_abs_diff(vcat(rparts), a), 1e-15);
    EXPECT_THROW(a.column_slice(0, 2), ArgumentError);
    EXPECT_THROW(a.column_slice(2, 5), ArgumentError);
}

TEST(RealMatrixTest, GaussianIsSeedDeterministic) {
    const RealMatrix a = RealMatrix::gaussian(5, 5, 2.0, 42);
    const RealMatrix b = RealMatrix::gaussian(5, 5, 2.0, 42);
    EXPECT_EQ(a.data(), b.data());
    const RealMatrix c = RealMatrix::gaussian(5, 5, 2.0, 43);
    EXPECT_GT(max_abs_diff(a, c), 0.0);
}

TEST(ExactInverseTest, DiagonalAndResidual) {
    const double d[] = {2.0, 5.0};
    const RealMatrix a = RealMatrix::diagonal(d);
    const RealMatrix inv = exact_inverse(a);
    EXPECT_NEAR(inv(0, 0), 0.5, 1e-15);
    EXPECT_NEAR(inv(1, 1), 0.2, 1e-15);
    EXPECT_NEAR(inv(0, 1), 0.0, 1e-15);

    const RealMatrix g = RealMatrix::gaussian(20, 20, 1.0, 7);
    const RealMatrix gi = exact_inverse(g);
    EXPECT_LT(frobenius_norm(g * gi - RealMatrix::identity(20)), 1e-9);
    EXPECT_THROW(exact_inverse(RealMatrix(2, 3)), ArgumentError);
}

TEST(ComplexMatrixTest, TransposeDoesNotConjugate) {
    ComplexMatrix m(1, 2);
    m(0, 0) = cplx{1.0, 2.0};
    m(0, 1) = cplx{3.0, -4.0};
    const ComplexMatrix t = m.transposed();
    EXPECT_EQ(t(0, 0), (cplx{1.0, 2.0}));
    EXPECT_EQ(t(1, 0), (cplx{3.0, -4.0}));
}

TEST(ComplexMatrixTest, AccumulateAndRealPart) {
    const RealMatrix a(2, 2, {1, 2, 3, 4});
    ComplexMatrix acc(2, 2);
    acc.accumulate(a, cplx{2.0, 1.0});
    EXPECT_EQ(acc(1, 1), (cplx{8.0, 4.0}));
    EXPECT_DOUBLE_EQ(acc.real_part()(1, 1), 8.0);
    EXPECT_DOUBLE_EQ(acc.max_imag_abs(), 4.0);
}
