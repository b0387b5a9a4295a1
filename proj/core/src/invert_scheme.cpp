#include "codedinv/invert_scheme.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "codedinv/errors.hpp"
#include "codedinv/inverse.hpp"
#include "codedinv/rng.hpp"

namespace codedinv {

StragglerModel StragglerModel::fixed(std::vector<std::size_t> ids) {
    StragglerModel m;
    m.mode = StragglerMode::FixedSet;
    m.straggler_ids = std::move(ids);
    return m;
}

StragglerModel StragglerModel::uniform(double probability, std::uint64_t seed) {
    if (probability < 0.0 || probability > 1.0)
        throw ArgumentError("straggler probability must be in [0, 1]");
    StragglerModel m;
    m.mode = StragglerMode::RandomUniform;
    m.rate = probability;
    m.seed = seed;
    return m;
}

StragglerModel StragglerModel::exponential(double rate, std::uint64_t seed) {
    if (!(rate > 0.0)) throw ArgumentError("delay rate must be positive");
    StragglerModel m;
    m.mode = StragglerMode::DelayExponential;
    m.rate = rate;
    m.seed = seed;
    return m;
}

std::vector<double> StragglerModel::response_times(std::size_t n) const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> t(n, 1.0);  // homogeneous unit base latency
    switch (mode) {
        case StragglerMode::FixedSet:
            for (std::size_t id : straggler_ids) {
                if (id < 1 || id > n) throw ArgumentError("straggler id out of range");
                t[id - 1] = inf;
            }
            break;
        case StragglerMode::RandomUniform: {
            Rng rng(seed);
            for (std::size_t i = 0; i < n; ++i)
                if (rng.next_unit() < rate) t[i] = inf;
            break;
        }
        case StragglerMode::DelayExponential: {
            Rng rng(seed);
            for (std::size_t i = 0; i < n; ++i) {
                double u = rng.next_unit();
                while (u <= 0.0) u = rng.next_unit();
                t[i] = 1.0 - std::log(u) / rate;
            }
            break;
        }
    }
    return t;
}

WorkerReport run_worker(std::size_t worker_id, const ShareBundle& bundle, const SecretKeys& keys,
                        const BrsGenerator& gen, const SolverConfig& cfg) {
    const SchemeParams& p = gen.params;
    if (worker_id < 1 || worker_id > p.n) throw ArgumentError("run_worker: worker id out of range");
    if (p.T == 0) throw ArgumentError("run_worker: scheme block width T is unbound");

    const RealMatrix a = reconstruct(bundle, keys);
    if (a.rows() != a.cols()) throw ArgumentError("run_worker: shared matrix is not square");
    const std::size_t n_dim = a.rows();
    if (p.k * p.T < n_dim) throw ArgumentError("run_worker: k*T < N");

    WorkerReport rep;
    rep.worker_id = worker_id;
    rep.payload = ComplexMatrix(p.T, n_dim);

    BlockSolveStats stats;
    for (std::size_t j : gen.task_sets[worker_id - 1]) {
        // columns of the inverse estimate covered by block j; indices past N
        // are padding and stay zero
        const std::size_t first = j * p.T + 1;
        if (first > n_dim) continue;
        const std::size_t last = std::min((j + 1) * p.T, n_dim);
        const RealMatrix block = estimate_block_columns(a, {first, last}, cfg, &stats);
        const cplx coeff = gen.G(worker_id - 1, j);
        // payload += coeff * block^T, laid into the T x N slice row by row
        for (std::size_t c = 0; c < block.cols(); ++c)
            for (std::size_t r = 0; r < n_dim; ++r)
                rep.payload(c, r) += coeff * block(r, c);
        rep.encode_ops += static_cast<std::uint64_t>(block.cols()) * n_dim;
    }
    rep.solver_iterations = std::move(stats.iterations);
    rep.solve_ops = stats.ops;
    return rep;
}

DecodeResult master_decode(std::span<const WorkerReport> reports, const BrsGenerator& gen) {
    const SchemeParams& p = gen.params;
    if (reports.size() < p.k)
        throw UnrecoverableError("master_decode: " + std::to_string(reports.size()) +
                                 " responders, need k = " + std::to_string(p.k));
    if (reports.size() != p.k)
        throw ArgumentError("master_decode: expected exactly k reports");
    std::vector<std::size_t> ids;
    ids.reserve(p.k);
    for (const auto& r : reports) ids.push_back(r.worker_id);
    if (std::set<std::size_t>(ids.begin(), ids.end()).size() != p.k)
        throw ArgumentError("master_decode: duplicate worker ids");

    const RestrictedInverse ri = restricted_inverse(gen, ids);

    const std::size_t t_rows = reports[0].payload.rows();
    const std::size_t n_dim = reports[0].payload.cols();
    for (const auto& r : reports)
        if (r.payload.rows() != t_rows || r.payload.cols() != n_dim)
            throw ArgumentError("master_decode: payload shapes differ");

    DecodeResult out;
    out.responders = ids;
    out.online_ops = ri.ops.total();

    // I_T (x) G_I^{-1} applied slice-wise: decoded block j = sum_m inv(j,m) W_m
    std::vector<RealMatrix> blocks;
    blocks.reserve(p.k);
    double residue = 0.0;
    for (std::size_t j = 0; j < p.k; ++j) {
        ComplexMatrix acc(t_rows, n_dim);
        for (std::size_t m = 0; m < p.k; ++m)
            acc.accumulate(reports[m].payload, ri.inverse(j, m));
        out.apply_ops += static_cast<std::uint64_t>(p.k) * t_rows * n_dim;
        residue = std::max(residue, acc.max_imag_abs());
        // block holds Ahat_j^T; transpose back to N x T
        RealMatrix col_block(n_dim, t_rows);
        for (std::size_t r = 0; r < t_rows; ++r)
            for (std::size_t c = 0; c < n_dim; ++c) col_block(c, r) = acc(r, c).real();
        blocks.push_back(std::move(col_block));
    }
    out.imag_residue = residue;
    if (residue > 1e-8)
        throw DecodeIntegrityError("master_decode: imaginary residue " + std::to_string(residue));

    RealMatrix wide = hcat(blocks);
    out.estimate = wide.trimmed(n_dim, n_dim);  // drop column padding
    return out;
}

SimulationOutcome simulate(const RealMatrix& a, const SchemeParams& params,
                           const SolverConfig& cfg, const StragglerModel& straggle,
                           std::uint64_t seed) {
    if (a.rows() != a.cols()) throw ArgumentError("simulate: input matrix must be square");
    const std::size_t n_dim = a.rows();

    SchemeParams p = params;
    if (p.T == 0) p.T = (n_dim + p.k - 1) / p.k;
    if (p.k * p.T < n_dim) throw ArgumentError("simulate: k*T < N");

    const auto start = std::chrono::steady_clock::now();

    const EvalPoints eval = make_eval_points(p.n, p.q, seed);
    const MaskSet masks = make_mask_set(p.k, eval.q, seed + 1);
    const BrsGenerator gen = build_generator(p, eval);

    const BlockPartition part = partition_columns(a, p.k);
    const ShareBundle bundle = encode_shares(part, eval, masks);
    const SecretKeys keys{eval, masks.inverses};

    SimulationOutcome out;
    out.params = p;
    out.response_times = straggle.response_times(p.n);

    // rank workers by (time, id); only finite-latency workers compute
    std::vector<std::size_t> order(p.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (out.response_times[x] != out.response_times[y])
            return out.response_times[x] < out.response_times[y];
        return x < y;
    });

    std::vector<WorkerReport> responders;
    for (std::size_t idx : order) {
        if (responders.size() == p.k) break;
        if (!std::isfinite(out.response_times[idx])) continue;
        WorkerReport rep = run_worker(idx + 1, bundle, keys, gen, cfg);
        rep.response_time = out.response_times[idx];
        responders.push_back(std::move(rep));
    }
    if (responders.size() < p.k)
        throw UnrecoverableError("simulate: only " + std::to_string(responders.size()) +
                                 " workers responded; decoding needs k = " + std::to_string(p.k) +
                                 " (straggler tolerance s = " + std::to_string(p.s) + ")");

    out.decode = master_decode(responders, gen);
    out.workers = std::move(responders);
    out.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
}

std::size_t smallest_admissible_n(std::size_t k) {
    if (k < 2) throw ParameterError("smallest_admissible_n: k must be >= 2");
    for (std::size_t m = 2; m <= k + 1; ++m) {
        if (k % m != 1) continue;
        try {
            validate_params(m * k, k);
            return m * k;
        } catch (const ParameterError&) {
        }
    }
    throw ParameterError("smallest_admissible_n: no admissible n for k = " + std::to_string(k));
}

std::vector<DecodeOpsRow> decode_ops_profile(std::span<const std::size_t> k_values,
                                             std::size_t trials, std::size_t stragglers,
                                             std::uint64_t seed) {
    if (trials == 0) throw ArgumentError("decode_ops_profile: trials must be >= 1");
    std::vector<DecodeOpsRow> rows;
    for (std::size_t k : k_values) {
        const std::size_t n = smallest_admissible_n(k);
        const SchemeParams p = validate_params(n, k);
        if (stragglers > p.s)
            throw ParameterError("decode_ops_profile: straggler count exceeds tolerance s = " +
                                 std::to_string(p.s) + " at k = " + std::to_string(k));
        const EvalPoints eval = make_eval_points(n, p.q, seed);
        const BrsGenerator gen = build_generator(p, eval);
        const std::size_t replicas = n / k;

        Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * (k + 1)));
        double brs_sum = 0.0, rep_sum = 0.0;
        for (std::size_t trial = 0; trial < trials; ++trial) {
            // straggler set: uniform s-subset, re-drawn until every replica
            // group keeps at least one live worker (the repetition scheme is
            // otherwise undecodable and the trial meaningless for either side)
            std::vector<std::size_t> ids(n);
            std::iota(ids.begin(), ids.end(), 1);
            std::vector<std::size_t> straggled;
            while (true) {
                for (std::size_t i = 0; i < stragglers; ++i)
                    std::swap(ids[i], ids[i + rng.next_int(0, n - 1 - i)]);
                straggled.assign(ids.begin(), ids.begin() + stragglers);
                std::vector<std::size_t> dead(k, 0);
                for (std::size_t id : straggled) dead[(id - 1) / replicas]++;
                if (std::none_of(dead.begin(), dead.end(),
                                 [&](std::size_t c) { return c >= replicas; }))
                    break;
            }
            const std::set<std::size_t> down(straggled.begin(), straggled.end());

            // coded side: decode from the k lowest-id responders
            std::vector<std::size_t> responders;
            for (std::size_t id = 1; id <= n && responders.size() < k; ++id)
                if (!down.count(id)) responders.push_back(id);
            brs_sum += static_cast<double>(restricted_inverse(gen, responders).ops.total());

            // repetition side: repair the default (first-replica) selection
            std::uint64_t rep_ops = 0;
            for (std::size_t block = 0; block < k; ++block) {
                const std::size_t primary = block * replicas + 1;
                if (!down.count(primary)) continue;  // offline default still valid
                ++rep_ops;                           // record the repair
                for (std::size_t r = 1; r < replicas; ++r) {
                    ++rep_ops;  // examine the next replica
                    if (!down.count(primary + r)) break;
                }
            }
            rep_sum += static_cast<double>(rep_ops);
        }
        rows.push_back({k, n, stragglers, brs_sum / static_cast<double>(trials),
                        rep_sum / static_cast<double>(trials)});
    }
    return rows;
}

namespace {

std::uint64_t factorial_checked(std::size_t v) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= v; ++i) {
        if (f > std::numeric_limits<std::uint64_t>::max() / i)
            throw ArgumentError("factorial overflows 64 bits");
        f *= i;
    }
    return f;
}

} // namespace

AnonymizedTranscript anonymized_transcript(std::span<const WorkerReport> reports,
                                           const BrsGenerator& gen) {
    if (reports.size() < gen.params.k)
        throw ArgumentError("anonymized_transcript: need at least k reports");
    AnonymizedTranscript out;
    out.payloads.reserve(reports.size());
    for (const auto& r : reports) out.payloads.push_back(r.payload);

    const auto groups = tau_groups(gen.mask);
    out.tau = groups.size();
    out.ambiguity = factorial_checked(out.tau);

    std::set<std::size_t> responded;
    for (const auto& r : reports) responded.insert(r.worker_id - 1);
    out.all_groups_covered = std::all_of(groups.begin(), groups.end(), [&](const auto& g) {
        return std::any_of(g.begin(), g.end(),
                           [&](std::size_t id) { return responded.count(id) > 0; });
    });
    return out;
}

} // namespace codedinv
