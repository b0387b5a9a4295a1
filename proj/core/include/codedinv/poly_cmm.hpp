#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "codedinv/circle_field.hpp"
#include "codedinv/matrix.hpp"

namespace codedinv {

/// Parameters of the polynomial-code matrix-multiplication scheme. With
/// exponents a = 1 and b = k_bar, the combined exponent (j-1)a + (l-1)b maps
/// the k_bar^2 block pairs bijectively onto degrees 0 .. k_bar^2 - 1, giving
/// recovery threshold exactly k_bar^2.
struct CmmParams {
    std::size_t k_bar = 0;
    std::size_t a = 1;
    std::size_t b = 1;
    std::vector<cplx> gammas;  // n distinct unit-modulus points

    std::size_t workers() const { return gammas.size(); }
    std::size_t threshold() const { return k_bar * k_bar; }
};

/// Builds parameters for n workers (n >= k_bar^2) on circle-field points.
CmmParams make_cmm_params(std::size_t k_bar, std::size_t n, std::uint64_t seed);

/// Encoding sum_j blocks[j] * gamma^((j-1) * exponent).
ComplexMatrix cmm_encode(std::span<const RealMatrix> blocks, std::size_t exponent, cplx gamma);

struct CmmTelemetry {
    std::size_t responders_used = 0;
    std::size_t payload_symbols = 0;   // complex symbols per worker product
    std::uint64_t decode_ops = 0;      // interpolation work
};

/// Gram product B = A^T A through the coded scheme: column-partitions A into
/// k_bar blocks, forms worker products (A~a_i)^T A~b_i for the given
/// responders, interpolates the k_bar^2 coefficient blocks and reassembles.
RealMatrix cmm_gram(const RealMatrix& a, std::size_t k_bar, const CmmParams& params,
                    std::span<const std::size_t> responders, CmmTelemetry* telemetry = nullptr);

/// General product X Y from k_bar row blocks of X and k_bar column blocks of
/// Y (equal counts); block (j, l) of the result is row_blocks[j] *
/// col_blocks[l].
RealMatrix cmm_rowblock_product(std::span<const RealMatrix> row_blocks,
                                std::span<const RealMatrix> col_blocks, const CmmParams& params,
                                std::span<const std::size_t> responders,
                                CmmTelemetry* telemetry = nullptr);

} // namespace codedinv
