#pragma once

#include <cstdint>
#include <vector>

#include "codedinv/matrix.hpp"
#include "codedinv/solver.hpp"

namespace codedinv {

/// Column interval, 1-based inclusive.
struct ColumnRange {
    std::size_t first = 1;
    std::size_t last = 1;
    std::size_t width() const { return last - first + 1; }
};

struct BlockSolveStats {
    std::vector<std::size_t> iterations;  // per column
    std::uint64_t ops = 0;
    bool all_converged = true;
};

/// Column-by-column inverse estimate: column i solves
/// argmin_b ||A b - e_i||_2^2 with the configured subroutine.
RealMatrix estimate_inverse(const RealMatrix& a, const SolverConfig& cfg,
                            BlockSolveStats* stats = nullptr);

/// The columns of estimate_inverse(a) restricted to range; each column is
/// solved independently, so a partition of [1, N] concatenates to the full
/// estimate bit for bit.
RealMatrix estimate_block_columns(const RealMatrix& a, ColumnRange range,
                                  const SolverConfig& cfg, BlockSolveStats* stats = nullptr);

/// Left pseudoinverse estimate for full-column-rank A (N > M): forms
/// B = A^T A, estimates the rows of B^{-1} via argmin_c ||c B - e_i^T||_2^2,
/// and returns the M x N matrix with rows c_i A^T.
RealMatrix estimate_pseudoinverse(const RealMatrix& a, const SolverConfig& cfg,
                                  BlockSolveStats* stats = nullptr);

/// Row-block counterpart used by the coded pseudoinverse pipeline: rows
/// [range.first, range.last] of the inverse estimate of the square matrix b,
/// each row solved as argmin_c ||c b - e_i^T||_2^2.
RealMatrix estimate_block_rows(const RealMatrix& b, ColumnRange range, const SolverConfig& cfg,
                               BlockSolveStats* stats = nullptr);

/// Reference pseudoinverse (A^T A)^{-1} A^T via the Gauss-Jordan route.
RealMatrix exact_pseudoinverse(const RealMatrix& a);

} // namespace codedinv
