#include "codedinv/pinv_pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "codedinv/errors.hpp"
#include "codedinv/inverse.hpp"
#include "codedinv/poly_cmm.hpp"

namespace codedinv {

PinvRunConfig make_pinv_config(std::size_t n, std::size_t k, const SolverConfig& solver,
                               const StragglerModel& straggle, std::uint64_t seed) {
    PinvRunConfig cfg;
    cfg.scheme = validate_params(n, k);
    const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(k))));
    if (root * root != k)
        throw ParameterError("make_pinv_config: k must be a perfect square (k = k_bar^2)");
    cfg.k_bar = root;
    cfg.solver = solver;
    cfg.straggle = straggle;
    cfg.seed = seed;
    return cfg;
}

namespace {

/// First k finite-latency workers by (time, id) under a per-round straggler
/// realization; throws when the round cannot be completed.
std::vector<std::size_t> round_responders(const StragglerModel& base, std::size_t n,
                                          std::size_t need, int round) {
    StragglerModel model = base;
    model.seed = base.seed + static_cast<std::uint64_t>(round);  // fresh set per round
    const auto times = model.response_times(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (times[x] != times[y]) return times[x] < times[y];
        return x < y;
    });
    std::vector<std::size_t> ids;
    for (std::size_t idx : order) {
        if (ids.size() == need) break;
        if (std::isfinite(times[idx])) ids.push_back(idx + 1);
    }
    if (ids.size() < need)
        throw UnrecoverableError("pinv round " + std::to_string(round) + ": only " +
                                 std::to_string(ids.size()) + " responders, need " +
                                 std::to_string(need));
    return ids;
}

/// Zero-pads m to the given row count.
RealMatrix pad_rows(const RealMatrix& m, std::size_t rows) {
    RealMatrix out(rows, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

/// Round-2 worker: estimates the assigned row blocks of the inverse of b and
/// encodes them as W = sum_j p_j(beta) * Rhat_j (block rows directly, no
/// trailing transpose).
ComplexMatrix rowblock_worker_payload(std::size_t worker_id, const RealMatrix& b,
                                      const BrsGenerator& gen, const SolverConfig& solver,
                                      std::size_t t_rows) {
    const std::size_t m_dim = b.rows();
    ComplexMatrix payload(t_rows, m_dim);
    for (std::size_t j : gen.task_sets[worker_id - 1]) {
        const std::size_t first = j * t_rows + 1;
        if (first > m_dim) continue;  // pure padding block
        const std::size_t last = std::min((j + 1) * t_rows, m_dim);
        const RealMatrix rows = estimate_block_rows(b, {first, last}, solver);
        const cplx coeff = gen.G(worker_id - 1, j);
        for (std::size_t r = 0; r < rows.rows(); ++r)
            for (std::size_t c = 0; c < m_dim; ++c) payload(r, c) += coeff * rows(r, c);
    }
    return payload;
}

RealMatrix decode_rowblocks(const std::vector<ComplexMatrix>& payloads,
                            std::span<const std::size_t> ids, const BrsGenerator& gen,
                            std::size_t m_dim, std::size_t t_rows) {
    const RestrictedInverse ri = restricted_inverse(gen, ids);
    const std::size_t k = gen.params.k;
    std::vector<RealMatrix> blocks;
    blocks.reserve(k);
    double residue = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        ComplexMatrix acc(t_rows, m_dim);
        for (std::size_t m = 0; m < k; ++m) acc.accumulate(payloads[m], ri.inverse(j, m));
        residue = std::max(residue, acc.max_imag_abs());
        blocks.push_back(acc.real_part());
    }
    if (residue > 1e-8)
        throw DecodeIntegrityError("pinv round 2: imaginary residue " + std::to_string(residue));
    return vcat(blocks).trimmed(m_dim, m_dim);
}

std::vector<RealMatrix> split_rows(const RealMatrix& m, std::size_t parts) {
    const std::size_t t = (m.rows() + parts - 1) / parts;
    const RealMatrix padded = pad_rows(m, parts * t);
    std::vector<RealMatrix> out;
    out.reserve(parts);
    for (std::size_t j = 0; j < parts; ++j) out.push_back(padded.row_slice(j * t + 1, (j + 1) * t));
    return out;
}

PinvOutcome run_pipeline(const RealMatrix& a, const PinvRunConfig& cfg, bool secure_round2) {
    if (a.rows() <= a.cols())
        throw ArgumentError("pinv pipeline: requires N > M (tall full-rank input)");
    const std::size_t n_dim = a.rows(), m_dim = a.cols();
    const SchemeParams& p = cfg.scheme;
    const auto start = std::chrono::steady_clock::now();

    PinvOutcome out;

    // --- round 1: B = A^T A through polynomial-code multiplication
    CmmParams cmm = make_cmm_params(cfg.k_bar, p.n, cfg.seed);
    {
        RoundTelemetry tel;
        tel.round = 1;
        tel.responders = round_responders(cfg.straggle, p.n, p.k, 1);
        const std::size_t t_bar = (m_dim + cfg.k_bar - 1) / cfg.k_bar;
        CmmTelemetry ct;
        const RealMatrix b = cmm_gram(a, cfg.k_bar, cmm, tel.responders, &ct);
        tel.symbols_sent = 2 * n_dim * t_bar * p.n;  // two encodings to every worker
        tel.symbols_received = ct.responders_used * ct.payload_symbols;
        out.rounds.push_back(std::move(tel));

        // --- round 2: coded inversion of B from row-block estimates
        const std::size_t t_rows = (m_dim + p.k - 1) / p.k;
        SchemeParams p2 = p;
        p2.T = t_rows;
        const EvalPoints eval = make_eval_points(p2.n, p2.q, cfg.seed + 17);
        const BrsGenerator gen = build_generator(p2, eval);

        RoundTelemetry tel2;
        tel2.round = 2;
        tel2.responders = round_responders(cfg.straggle, p.n, p.k, 2);

        RealMatrix b_at_workers = b;
        if (secure_round2) {
            const MaskSet masks = make_mask_set(p.k, eval.q, cfg.seed + 29);
            const BlockPartition part = partition_columns(b, p.k);
            const ShareBundle bundle = encode_shares(part, eval, masks);
            const SecretKeys keys{eval, masks.inverses};
            b_at_workers = reconstruct(bundle, keys);  // workers unmask their copy
            tel2.symbols_sent = share_symbol_count(bundle) * p.n;
        } else {
            tel2.symbols_sent = m_dim * m_dim * p.n;  // plain broadcast
        }

        std::vector<ComplexMatrix> payloads;
        payloads.reserve(p.k);
        for (std::size_t id : tel2.responders)
            payloads.push_back(rowblock_worker_payload(id, b_at_workers, gen, cfg.solver, t_rows));
        const RealMatrix b_inv = decode_rowblocks(payloads, tel2.responders, gen, m_dim, t_rows);
        tel2.symbols_received = p.k * t_rows * m_dim;
        out.rounds.push_back(std::move(tel2));

        // --- round 3: pseudoinverse = Bhat^{-1} A^T by a second coded product
        RoundTelemetry tel3;
        tel3.round = 3;
        tel3.responders = round_responders(cfg.straggle, p.n, p.k, 3);
        const auto row_blocks = split_rows(b_inv, cfg.k_bar);
        const RealMatrix at = a.transposed();
        const BlockPartition col_part = partition_columns(at, cfg.k_bar);
        CmmTelemetry ct3;
        const RealMatrix prod =
            cmm_rowblock_product(row_blocks, col_part.blocks, cmm, tel3.responders, &ct3);
        out.pinv = prod.trimmed(m_dim, n_dim);
        tel3.symbols_sent =
            (row_blocks[0].rows() * m_dim + at.rows() * col_part.block_cols()) * p.n;
        tel3.symbols_received = ct3.responders_used * ct3.payload_symbols;
        out.rounds.push_back(std::move(tel3));
    }

    out.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
}

} // namespace

PinvOutcome pinv_three_round(const RealMatrix& a, const PinvRunConfig& cfg) {
    return run_pipeline(a, cfg, false);
}

PinvOutcome pinv_secure_variant(const RealMatrix& a, const PinvRunConfig& cfg) {
    return run_pipeline(a, cfg, true);
}

} // namespace codedinv
