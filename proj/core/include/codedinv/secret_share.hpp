#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "codedinv/circle_field.hpp"
#include "codedinv/matrix.hpp"

namespace codedinv {

/// Column partition of a matrix into k equal-width blocks, zero-padded on the
/// right when k does not divide the column count.
struct BlockPartition {
    std::vector<RealMatrix> blocks;
    std::size_t original_cols = 0;
    std::size_t pad_cols = 0;

    std::size_t block_cols() const { return blocks.empty() ? 0 : blocks[0].cols(); }
};

/// Monomial coefficients of the masked Lagrange share polynomial f(x):
/// evaluating at the j-th interpolation point reproduces eta_j * A_j.
struct ShareBundle {
    std::vector<ComplexMatrix> coeffs;  // degree order: coeffs[t] multiplies x^t
    std::size_t n_rows = 0;
    std::size_t block_cols = 0;
    std::size_t original_cols = 0;
    std::size_t pad_cols = 0;

    std::size_t k() const { return coeffs.size(); }
};

/// The unmasking side channel: interpolation points and inverse masks, handed
/// to workers over a trusted in-process channel (stand-in for a public-key
/// broadcast).
struct SecretKeys {
    EvalPoints eval;
    std::vector<cplx> mask_inverses;
};

BlockPartition partition_columns(const RealMatrix& a, std::size_t k);
/// Reassemble a partition: concatenate blocks and drop padding.
RealMatrix reassemble(const BlockPartition& part);

/// Builds f(x) = sum_j A_j * eta_j * L_j(x) over the first k evaluation
/// points, expanded once into monomial coefficients so workers can evaluate
/// with Horner.
ShareBundle encode_shares(const BlockPartition& part, const EvalPoints& eval,
                          const MaskSet& masks);

/// Evaluates the bundle at the k points, unmasks, concatenates and takes real
/// parts. Throws ReconstructionError when the imaginary residue exceeds
/// 1e-9 max-norm.
RealMatrix reconstruct(const ShareBundle& bundle, const SecretKeys& keys);

/// Complex symbols in the coefficient representation: k * N * T.
std::size_t share_symbol_count(const ShareBundle& bundle);

/// CSV layout: header line "k,N,T,pad_cols"; then for each coefficient, N
/// rows of 2T interleaved re,im values. See docs/formats.md.
void save_bundle_csv(const ShareBundle& bundle, const std::filesystem::path& path);
ShareBundle load_bundle_csv(const std::filesystem::path& path);

/// Monomial coefficients (ascending) of each Lagrange basis polynomial over
/// the given points; shared by the share encoder and tests.
std::vector<std::vector<cplx>> lagrange_basis_coefficients(std::span<const cplx> points);

} // namespace codedinv
