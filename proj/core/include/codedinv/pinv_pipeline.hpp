#pragma once

#include <cstdint>
#include <vector>

#include "codedinv/brs_code.hpp"
#include "codedinv/invert_scheme.hpp"
#include "codedinv/matrix.hpp"
#include "codedinv/solver.hpp"

namespace codedinv {

/// Configuration of the three-round coded pseudoinverse run; the recovery
/// threshold k must be a perfect square so the multiplication rounds (with
/// threshold k_bar^2) and the inversion round (threshold k) tolerate the same
/// n - k stragglers.
struct PinvRunConfig {
    SchemeParams scheme;   // validated, k = k_bar^2
    std::size_t k_bar = 0;
    SolverConfig solver;
    StragglerModel straggle;
    std::uint64_t seed = 0;
};

PinvRunConfig make_pinv_config(std::size_t n, std::size_t k, const SolverConfig& solver,
                               const StragglerModel& straggle, std::uint64_t seed);

struct RoundTelemetry {
    int round = 0;
    std::vector<std::size_t> responders;
    std::size_t symbols_sent = 0;      // master -> workers, complex symbols
    std::size_t symbols_received = 0;  // workers -> master
};

struct PinvOutcome {
    RealMatrix pinv;  // M x N
    std::vector<RoundTelemetry> rounds;
    double wall_time_ms = 0.0;
};

/// Round 1: Gram matrix B = A^T A by polynomial-code multiplication.
/// Round 2: B broadcast plainly; workers estimate row blocks of B^{-1} and
/// the coded inversion scheme recovers the estimate.
/// Round 3: B^{-1} row blocks against column blocks of A^T by a second
/// polynomial-code multiplication, yielding the pseudoinverse estimate.
/// Each round draws a fresh straggler realization and tolerates n - k.
PinvOutcome pinv_three_round(const RealMatrix& a, const PinvRunConfig& cfg);

/// Same pipeline, except round 2 delivers B through the masked Lagrange
/// share bundle instead of a plain broadcast.
PinvOutcome pinv_secure_variant(const RealMatrix& a, const PinvRunConfig& cfg);

} // namespace codedinv
