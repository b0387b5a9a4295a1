#include "codedinv/inverse.hpp"

#include <string>

#include "codedinv/errors.hpp"

namespace codedinv {

namespace {

void merge_stats(BlockSolveStats* stats, const SolveReport& rep) {
    if (!stats) return;
    stats->iterations.push_back(rep.iterations);
    stats->ops += rep.ops;
    stats->all_converged = stats->all_converged && rep.converged;
}

} // namespace

RealMatrix estimate_block_columns(const RealMatrix& a, ColumnRange range,
                                  const SolverConfig& cfg, BlockSolveStats* stats) {
    if (a.rows() != a.cols()) throw ArgumentError("estimate_block_columns: matrix not square");
    const std::size_t n = a.rows();
    if (range.first < 1 || range.last < range.first || range.last > n)
        throw ArgumentError("estimate_block_columns: column range out of [1, N]");

    RealMatrix out(n, range.width());
    std::vector<double> e(n, 0.0);
    for (std::size_t j = 0; j < range.width(); ++j) {
        const std::size_t col = range.first - 1 + j;
        e[col] = 1.0;
        SolveReport rep = solve_least_squares(a, e, cfg);
        e[col] = 0.0;
        out.set_column(j, rep.solution);
        merge_stats(stats, rep);
    }
    return out;
}

RealMatrix estimate_inverse(const RealMatrix& a, const SolverConfig& cfg,
                            BlockSolveStats* stats) {
    if (a.rows() != a.cols()) throw ArgumentError("estimate_inverse: matrix not square");
    return estimate_block_columns(a, {1, a.rows()}, cfg, stats);
}

RealMatrix estimate_block_rows(const RealMatrix& b, ColumnRange range, const SolverConfig& cfg,
                               BlockSolveStats* stats) {
    if (b.rows() != b.cols()) throw ArgumentError("estimate_block_rows: matrix not square");
    const std::size_t m = b.rows();
    if (range.first < 1 || range.last < range.first || range.last > m)
        throw ArgumentError("estimate_block_rows: row range out of [1, M]");

    // ||c B - e_i^T||_2 = ||B^T c^T - e_i||_2, so each row solve is a least
    // squares problem on B^T.
    const RealMatrix bt = b.transposed();
    RealMatrix out(range.width(), m);
    std::vector<double> e(m, 0.0);
    for (std::size_t i = 0; i < range.width(); ++i) {
        const std::size_t row = range.first - 1 + i;
        e[row] = 1.0;
        SolveReport rep = solve_least_squares(bt, e, cfg);
        e[row] = 0.0;
        for (std::size_t j = 0; j < m; ++j) out(i, j) = rep.solution[j];
        merge_stats(stats, rep);
    }
    return out;
}

RealMatrix estimate_pseudoinverse(const RealMatrix& a, const SolverConfig& cfg,
                                  BlockSolveStats* stats) {
    if (a.rows() <= a.cols())
        throw ArgumentError("estimate_pseudoinverse: requires N > M (tall full-rank input)");
    const RealMatrix b = gram(a);
    const RealMatrix c = estimate_block_rows(b, {1, b.rows()}, cfg, stats);
    return c * a.transposed();
}

RealMatrix exact_pseudoinverse(const RealMatrix& a) {
    if (a.rows() <= a.cols()) throw ArgumentError("exact_pseudoinverse: requires N > M");
    return exact_inverse(gram(a)) * a.transposed();
}

} // namespace codedinv
