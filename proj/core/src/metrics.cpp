#include "codedinv/metrics.hpp"

#include <cmath>
#include <vector>

#include "codedinv/errors.hpp"
#include "codedinv/rng.hpp"

namespace codedinv {

double spectral_norm(const RealMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    const std::size_t n = m.cols();
    Rng rng(0x5eed5eedULL);  // fixed start keeps the estimate reproducible
    std::vector<double> v(n), mv(m.rows()), mtmv(n);
    double vn = 0.0;
    for (double& x : v) { x = rng.next_gaussian(); vn += x * x; }
    vn = std::sqrt(vn);
    if (vn == 0.0) return 0.0;
    for (double& x : v) x /= vn;

    double lambda = 0.0;
    for (int it = 0; it < 200; ++it) {
        m.apply(v, mv);
        m.apply_transposed(mv, mtmv);
        double norm = 0.0;
        for (double x : mtmv) norm += x * x;
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;  // zero matrix (or v in the null space)
        const double prev = lambda;
        lambda = norm;  // eigenvalue estimate of M^T M
        for (std::size_t i = 0; i < n; ++i) v[i] = mtmv[i] / norm;
        if (it > 0 && std::abs(lambda - prev) <= 1e-12 * lambda) break;
    }
    return std::sqrt(lambda);
}

ErrorMetrics error_metrics(const RealMatrix& estimate, const RealMatrix& reference) {
    if (estimate.rows() != reference.rows() || estimate.cols() != reference.cols())
        throw ArgumentError("error_metrics: shape mismatch");
    const RealMatrix diff = estimate - reference;
    ErrorMetrics em;
    em.l2 = spectral_norm(diff);
    em.frobenius = frobenius_norm(diff);
    const double rn = frobenius_norm(reference);
    em.relative_frobenius = rn == 0.0 ? em.frobenius : em.frobenius / rn;
    return em;
}

} // namespace codedinv
