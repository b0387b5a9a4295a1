#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace codedinv {

using cplx = std::complex<double>;

/// Dense row-major real matrix. Entries are validated to be finite whenever a
/// matrix is built from external data; results of internal arithmetic are not
/// re-checked.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols);                              // zero-filled
    RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);    // validates

    static RealMatrix identity(std::size_t n);
    static RealMatrix diagonal(std::span<const double> entries);
    /// Entries scale * N(0,1), drawn row-major from a seeded stream.
    static RealMatrix gaussian(std::size_t rows, std::size_t cols, double scale,
                               std::uint64_t seed);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    RealMatrix transposed() const;
    /// Columns [first, last], 1-based inclusive.
    RealMatrix column_slice(std::size_t first, std::size_t last) const;
    /// Rows [first, last], 1-based inclusive.
    RealMatrix row_slice(std::size_t first, std::size_t last) const;
    /// Top-left rows x cols corner.
    RealMatrix trimmed(std::size_t rows, std::size_t cols) const;

    /// y = A x
    void apply(std::span<const double> x, std::span<double> y) const;
    /// y = A^T x
    void apply_transposed(std::span<const double> x, std::span<double> y) const;

    void set_column(std::size_t j, std::span<const double> col);
    std::vector<double> column(std::size_t j) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);

/// A^T A with the result forced exactly symmetric (upper triangle mirrored).
RealMatrix gram(const RealMatrix& a);

/// Horizontal concatenation [a | b | ...].
RealMatrix hcat(std::span<const RealMatrix> parts);
/// Vertical concatenation.
RealMatrix vcat(std::span<const RealMatrix> parts);

double frobenius_norm(const RealMatrix& a);
double max_abs(const RealMatrix& a);
double max_abs_diff(const RealMatrix& a, const RealMatrix& b);

/// Dense row-major complex matrix; same conventions as RealMatrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);

    static ComplexMatrix from_real(const RealMatrix& a);
    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    cplx operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& data() { return data_; }

    ComplexMatrix transposed() const;  // plain transpose, no conjugation
    RealMatrix real_part() const;
    double max_imag_abs() const;

    /// this += s * a  (a real, s complex)
    void accumulate(const RealMatrix& a, cplx s);
    /// this += s * a
    void accumulate(const ComplexMatrix& a, cplx s);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);
double max_abs(const ComplexMatrix& a);

/// Gauss-Jordan inverse with partial pivoting; the reference route for error
/// measurements, independent of the iterative estimators.
ComplexMatrix exact_inverse(const ComplexMatrix& a);
RealMatrix exact_inverse(const RealMatrix& a);

} // namespace codedinv
