#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "codedinv/circle_field.hpp"
#include "codedinv/matrix.hpp"

namespace codedinv {

/// Validated parameters of one coded-inversion deployment.
///   n  workers, k recovery threshold (= block count)
///   s  straggler tolerance = n - k
///   d  per-column weight = s + 1 (code distance)
///   w  per-row weight = d k / n (blocks per worker)
///   T  block width; 0 until bound to a concrete matrix
///   q  field size (prime > n)
struct SchemeParams {
    std::size_t n = 0, k = 0, s = 0, d = 0, w = 0, T = 0;
    std::uint64_t q = 0;
};

/// 0/1 task-assignment pattern: rows are workers, columns are blocks. Every
/// column carries exactly d ones and every row exactly w ones.
class MaskMatrix {
public:
    MaskMatrix() = default;
    MaskMatrix(std::size_t n, std::size_t k) : n_(n), k_(k), bits_(n * k, 0) {}

    std::size_t workers() const { return n_; }
    std::size_t blocks() const { return k_; }
    bool at(std::size_t i, std::size_t j) const { return bits_[i * k_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v) { bits_[i * k_ + j] = v ? 1 : 0; }

    std::size_t row_weight(std::size_t i) const;
    std::size_t col_weight(std::size_t j) const;
    std::vector<std::size_t> row_support(std::size_t i) const;  // 0-based block ids
    std::vector<std::size_t> col_support(std::size_t j) const;  // 0-based worker ids

private:
    std::size_t n_ = 0, k_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Checks the admissibility conditions: d = n-k+1 with integral w = dk/n,
/// d >= n/2, k >= 2 (with k = 1 every worker would compute every block and no
/// coding is needed), and pairwise-distinct mask column supports (duplicate
/// supports make the coefficient matrix P singular). T_hint is carried into
/// the result; 0 leaves the block width unbound.
SchemeParams validate_params(std::size_t n, std::size_t k, std::size_t T_hint = 0);

/// All admissible (n, k) with n in [n_min, n_max], from the family n = m k,
/// k = 1 (mod m), each re-checked through validate_params.
std::vector<SchemeParams> suggest_params(std::size_t n_min, std::size_t n_max);

/// Cyclic mask construction: for block j and offset i in [0, d), the worker
/// (i + j d + 1) mod n (1-based, 0 wrapping to n) is assigned block j.
/// Rejects d < n/2, for which the construction can fail to balance.
MaskMatrix mask_matrix(std::size_t n, std::size_t k, std::size_t d);

/// Monomial coefficients (ascending, length k) of the column polynomials
/// p_j(x) = prod_{i: M_ij = 0} (x - beta_i) / (beta_j - beta_i). Every
/// coefficient must be nonzero (consequence of the d-sparse column pattern);
/// a vanishing coefficient signals a parameter/point pathology.
std::vector<std::vector<cplx>> column_polynomials(const MaskMatrix& mask,
                                                  const EvalPoints& eval);

struct BrsGenerator {
    SchemeParams params;
    ComplexMatrix G;          // n x k, G = H P
    ComplexMatrix H;          // n x k Vandermonde, H_ij = beta_i^(j-1)
    ComplexMatrix P;          // k x k, column j holds the coefficients of p_j
    ComplexMatrix P_inverse;  // precomputed offline
    MaskMatrix mask;
    std::vector<std::vector<std::size_t>> task_sets;  // per worker, 0-based block ids
    EvalPoints eval;
};

/// Assembles H, P, G = H P, verifies the structural invariants (zero pattern,
/// row/column weights, nnz = k d) and precomputes P^{-1} with residual check.
BrsGenerator build_generator(const SchemeParams& params, const EvalPoints& eval);

/// Online decode cost counters (complex multiply-adds).
struct OpsCount {
    std::uint64_t vandermonde = 0;  // building H_I^{-1}
    std::uint64_t multiply = 0;     // P^{-1} * H_I^{-1}
    std::uint64_t total() const { return vandermonde + multiply; }
};

/// Inverse of the k x k Vandermonde matrix V with V(m, t) = points[m]^t, via
/// Lagrange interpolation coefficients in O(k^2) scalar operations.
ComplexMatrix vandermonde_inverse(std::span<const cplx> points, OpsCount* ops = nullptr);

struct RestrictedInverse {
    ComplexMatrix inverse;  // G_I^{-1} for the k rows indexed by I
    OpsCount ops;
};

/// G_I^{-1} = P^{-1} H_I^{-1} for a responder set I of exactly k distinct
/// 1-based worker ids. Only the online work is counted; P^{-1} is reused.
RestrictedInverse restricted_inverse(const BrsGenerator& gen,
                                     std::span<const std::size_t> responders);

/// Rows grouped by identical support; each group lists 0-based worker ids.
std::vector<std::vector<std::size_t>> tau_groups(const MaskMatrix& mask);

} // namespace codedinv
