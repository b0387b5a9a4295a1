#include "codedinv/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "codedinv/errors.hpp"
#include "codedinv/rng.hpp"

namespace codedinv {

namespace {

void check_finite(std::span<const double> data) {
    for (double v : data) {
        if (!std::isfinite(v)) throw ArgumentError("matrix entry is not finite");
    }
}

void check_finite(std::span<const cplx> data) {
    for (const cplx& v : data) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ArgumentError("matrix entry is not finite");
    }
}

void check_same_shape(std::size_t ar, std::size_t ac, std::size_t br, std::size_t bc) {
    if (ar != br || ac != bc)
        throw ArgumentError("shape mismatch: " + std::to_string(ar) + "x" + std::to_string(ac) +
                            " vs " + std::to_string(br) + "x" + std::to_string(bc));
}

} // namespace

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
        throw ArgumentError("data length does not match rows*cols");
    check_finite(data_);
}

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

RealMatrix RealMatrix::diagonal(std::span<const double> entries) {
    RealMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

RealMatrix RealMatrix::gaussian(std::size_t rows, std::size_t cols, double scale,
                                std::uint64_t seed) {
    RealMatrix m(rows, cols);
    Rng rng(seed);
    for (double& v : m.data_) v = scale * rng.next_gaussian();
    return m;
}

RealMatrix RealMatrix::transposed() const {
    RealMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RealMatrix RealMatrix::column_slice(std::size_t first, std::size_t last) const {
    if (first < 1 || last < first || last > cols_)
        throw ArgumentError("column range out of bounds");
    RealMatrix out(rows_, last - first + 1);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < out.cols_; ++j) out(i, j) = (*this)(i, first - 1 + j);
    return out;
}

RealMatrix RealMatrix::row_slice(std::size_t first, std::size_t last) const {
    if (first < 1 || last < first || last > rows_)
        throw ArgumentError("row range out of bounds");
    RealMatrix out(last - first + 1, cols_);
    std::copy(data_.begin() + (first - 1) * cols_, data_.begin() + last * cols_,
              out.data_.begin());
    return out;
}

RealMatrix RealMatrix::trimmed(std::size_t rows, std::size_t cols) const {
    if (rows > rows_ || cols > cols_) throw ArgumentError("trim exceeds matrix shape");
    RealMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(i, j);
    return out;
}

void RealMatrix::apply(std::span<const double> x, std::span<double> y) const {
    if (x.size() != cols_ || y.size() != rows_) throw ArgumentError("apply: bad vector length");
    for (std::size_t i = 0; i < rows_; ++i) {
        const double* r = data_.data() + i * cols_;
        double acc = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) acc += r[j] * x[j];
        y[i] = acc;
    }
}

void RealMatrix::apply_transposed(std::span<const double> x, std::span<double> y) const {
    if (x.size() != rows_ || y.size() != cols_)
        throw ArgumentError("apply_transposed: bad vector length");
    std::fill(y.begin(), y.end(), 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        const double* r = data_.data() + i * cols_;
        const double xi = x[i];
        for (std::size_t j = 0; j < cols_; ++j) y[j] += r[j] * xi;
    }
}

void RealMatrix::set_column(std::size_t j, std::span<const double> col) {
    if (j >= cols_ || col.size() != rows_) throw ArgumentError("set_column: bad index/length");
    for (std::size_t i = 0; i < rows_; ++i) data_[i * cols_ + j] = col[i];
}

std::vector<double> RealMatrix::column(std::size_t j) const {
    if (j >= cols_) throw ArgumentError("column: bad index");
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = data_[i * cols_ + j];
    return out;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols() != b.rows()) throw ArgumentError("multiply: inner dimensions differ");
    RealMatrix c(a.rows(), b.cols());
    const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        double* ci = c.data().data() + i * p;
        for (std::size_t t = 0; t < m; ++t) {
            const double ait = a(i, t);
            if (ait == 0.0) continue;
            const double* bt = b.data().data() + t * p;
            for (std::size_t j = 0; j < p; ++j) ci[j] += ait * bt[j];
        }
    }
    return c;
}

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
    check_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
    RealMatrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
    return c;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
    check_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
    RealMatrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
    return c;
}

RealMatrix gram(const RealMatrix& a) {
    const std::size_t m = a.cols();
    RealMatrix b(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            double acc = 0.0;
            for (std::size_t t = 0; t < a.rows(); ++t) acc += a(t, i) * a(t, j);
            b(i, j) = acc;
            b(j, i) = acc;
        }
    }
    return b;
}

RealMatrix hcat(std::span<const RealMatrix> parts) {
    if (parts.empty()) return {};
    const std::size_t rows = parts[0].rows();
    std::size_t cols = 0;
    for (const auto& p : parts) {
        if (p.rows() != rows) throw ArgumentError("hcat: row counts differ");
        cols += p.cols();
    }
    RealMatrix out(rows, cols);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) out(i, off + j) = p(i, j);
        off += p.cols();
    }
    return out;
}

RealMatrix vcat(std::span<const RealMatrix> parts) {
    if (parts.empty()) return {};
    const std::size_t cols = parts[0].cols();
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols) throw ArgumentError("vcat: column counts differ");
        rows += p.rows();
    }
    RealMatrix out(rows, cols);
    std::size_t off = 0;
    for (const auto& p : parts) {
        std::copy(p.data().begin(), p.data().end(), out.data().begin() + off * cols);
        off += p.rows();
    }
    return out;
}

double frobenius_norm(const RealMatrix& a) {
    double acc = 0.0;
    for (double v : a.data()) acc += v * v;
    return std::sqrt(acc);
}

double max_abs(const RealMatrix& a) {
    double m = 0.0;
    for (double v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
    check_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
        throw ArgumentError("data length does not match rows*cols");
    check_finite(data_);
}

ComplexMatrix ComplexMatrix::from_real(const RealMatrix& a) {
    ComplexMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.data().size(); ++i) m.data_[i] = cplx{a.data()[i], 0.0};
    return m;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx{1.0, 0.0};
    return m;
}

ComplexMatrix ComplexMatrix::transposed() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RealMatrix ComplexMatrix::real_part() const {
    RealMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data()[i] = data_[i].real();
    return r;
}

double ComplexMatrix::max_imag_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v.imag()));
    return m;
}

void ComplexMatrix::accumulate(const RealMatrix& a, cplx s) {
    check_same_shape(rows_, cols_, a.rows(), a.cols());
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * a.data()[i];
}

void ComplexMatrix::accumulate(const ComplexMatrix& a, cplx s) {
    check_same_shape(rows_, cols_, a.rows(), a.cols());
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += s * a.data()[i];
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw ArgumentError("multiply: inner dimensions differ");
    ComplexMatrix c(a.rows(), b.cols());
    const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        cplx* ci = c.data().data() + i * p;
        for (std::size_t t = 0; t < m; ++t) {
            const cplx ait = a(i, t);
            const cplx* bt = b.data().data() + t * p;
            for (std::size_t j = 0; j < p; ++j) ci[j] += ait * bt[j];
        }
    }
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
    ComplexMatrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
    return c;
}

double frobenius_norm(const ComplexMatrix& a) {
    double acc = 0.0;
    for (const cplx& v : a.data()) acc += std::norm(v);
    return std::sqrt(acc);
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const cplx& v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

namespace {

template <typename Scalar, typename Mat>
Mat gauss_jordan(const Mat& a) {
    if (a.rows() != a.cols()) throw ArgumentError("exact_inverse: matrix not square");
    const std::size_t n = a.rows();
    Mat work = a;
    Mat inv = Mat::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(work(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(work(r, col));
            if (v > best) { best = v; pivot = r; }
        }
        if (best == 0.0) throw ArgumentError("exact_inverse: singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Scalar d = work(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) /= d;
            inv(col, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Scalar f = work(r, col);
            if (f == Scalar{}) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work(r, j) -= f * work(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

} // namespace

ComplexMatrix exact_inverse(const ComplexMatrix& a) { return gauss_jordan<cplx>(a); }
RealMatrix exact_inverse(const RealMatrix& a) { return gauss_jordan<double>(a); }

} // namespace codedinv
