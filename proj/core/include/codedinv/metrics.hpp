#pragma once

#include "codedinv/matrix.hpp"

namespace codedinv {

struct ErrorMetrics {
    double l2 = 0.0;                   // spectral-norm error
    double frobenius = 0.0;
    double relative_frobenius = 0.0;   // frobenius / ||reference||_F
};

/// Spectral norm by power iteration on M^T M; 200 iterations or relative
/// change below 1e-12, whichever first. Start vector is a fixed seeded draw.
double spectral_norm(const RealMatrix& m);

/// (||E-R||_2, ||E-R||_F, ||E-R||_F / ||R||_F) for equal-shaped inputs.
ErrorMetrics error_metrics(const RealMatrix& estimate, const RealMatrix& reference);

} // namespace codedinv
