#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "codedinv/brs_code.hpp"
#include "codedinv/matrix.hpp"
#include "codedinv/secret_share.hpp"
#include "codedinv/solver.hpp"

namespace codedinv {

enum class StragglerMode { FixedSet, RandomUniform, DelayExponential };

/// How stragglers arise in a run. FixedSet and RandomUniform stragglers never
/// respond; DelayExponential assigns every worker a finite latency and the
/// slowest simply lose the race.
struct StragglerModel {
    StragglerMode mode = StragglerMode::FixedSet;
    std::vector<std::size_t> straggler_ids;  // 1-based, FixedSet
    double rate = 0.0;   // straggle probability (RandomUniform) or delay rate (DelayExponential)
    std::uint64_t seed = 0;

    static StragglerModel none() { return {}; }
    static StragglerModel fixed(std::vector<std::size_t> ids);
    static StragglerModel uniform(double probability, std::uint64_t seed);
    static StragglerModel exponential(double rate, std::uint64_t seed);

    /// Simulated response time per worker; straggling workers get +inf.
    std::vector<double> response_times(std::size_t n) const;
};

struct WorkerReport {
    std::size_t worker_id = 0;        // 1-based
    ComplexMatrix payload;            // T x N encoding W
    std::vector<std::size_t> solver_iterations;  // per estimated column
    std::uint64_t solve_ops = 0;
    std::uint64_t encode_ops = 0;
    double response_time = 0.0;
};

struct DecodeResult {
    RealMatrix estimate;              // N x N
    std::vector<std::size_t> responders;
    std::uint64_t online_ops = 0;     // decoding-matrix construction (H_I^{-1} + P^{-1} product)
    std::uint64_t apply_ops = 0;      // blockwise application to the payloads
    double imag_residue = 0.0;
};

/// One worker's turn: reconstruct A from the share bundle, estimate the
/// assigned column blocks of the inverse, and fold them into the single
/// encoded payload W = sum_j G(worker, j) * Ahat_j^T.
WorkerReport run_worker(std::size_t worker_id, const ShareBundle& bundle, const SecretKeys& keys,
                        const BrsGenerator& gen, const SolverConfig& cfg);

/// Decodes exactly k distinct reports: applies I_T (x) G_I^{-1} slice-wise
/// (the Kronecker factor is never materialized), transposes, takes real
/// parts and drops column padding.
DecodeResult master_decode(std::span<const WorkerReport> reports, const BrsGenerator& gen);

struct SimulationOutcome {
    DecodeResult decode;
    std::vector<WorkerReport> workers;   // all non-straggling workers, in id order
    std::vector<double> response_times;  // per worker id, +inf for stragglers
    SchemeParams params;                 // with T bound
    double wall_time_ms = 0.0;
};

/// Full pipeline: share A, run the workers, apply the straggler model, decode
/// from the first k responders ordered by (time, id).
SimulationOutcome simulate(const RealMatrix& a, const SchemeParams& params,
                           const SolverConfig& cfg, const StragglerModel& straggle,
                           std::uint64_t seed);

struct DecodeOpsRow {
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t stragglers = 0;
    double brs_online_ops = 0.0;
    double repetition_ops = 0.0;
};

/// Measures the online decode cost of the coded scheme against a fractional
/// repetition baseline (each block replicated n/k times contiguously; the
/// default first-replica selection is precomputed offline, so online work is
/// the per-straggler repair scan). Straggler sets of the given fixed size are
/// drawn uniformly per trial, rejecting sets that wipe out a replica group.
std::vector<DecodeOpsRow> decode_ops_profile(std::span<const std::size_t> k_values,
                                             std::size_t trials, std::size_t stragglers,
                                             std::uint64_t seed);

/// Smallest admissible n for a given k within the n = m k family.
std::size_t smallest_admissible_n(std::size_t k);

struct AnonymizedTranscript {
    std::vector<ComplexMatrix> payloads;  // ids stripped
    std::size_t tau = 0;
    std::uint64_t ambiguity = 0;          // tau!
    bool all_groups_covered = false;
};

/// Strips worker identities from >= k reports and accounts for the
/// tau! responder-assignment ambiguity an eavesdropper faces.
AnonymizedTranscript anonymized_transcript(std::span<const WorkerReport> reports,
                                           const BrsGenerator& gen);

} // namespace codedinv
