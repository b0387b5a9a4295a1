#include "codedinv/poly_cmm.hpp"

#include <set>
#include <string>

#include "codedinv/brs_code.hpp"
#include "codedinv/errors.hpp"
#include "codedinv/secret_share.hpp"

namespace codedinv {

CmmParams make_cmm_params(std::size_t k_bar, std::size_t n, std::uint64_t seed) {
    if (k_bar < 1) throw ArgumentError("make_cmm_params: k_bar must be >= 1");
    if (n < k_bar * k_bar)
        throw ArgumentError("make_cmm_params: need n >= k_bar^2 workers");
    CmmParams p;
    p.k_bar = k_bar;
    p.a = 1;
    p.b = k_bar;
    p.gammas = make_eval_points(n, std::nullopt, seed).points;

    // exponent injectivity: (j-1)a + (l-1)b must cover 0..k_bar^2-1 exactly
    std::set<std::size_t> exps;
    for (std::size_t j = 0; j < k_bar; ++j)
        for (std::size_t l = 0; l < k_bar; ++l) exps.insert(j * p.a + l * p.b);
    if (exps.size() != p.threshold() || *exps.rbegin() != p.threshold() - 1)
        throw ConstructionError("make_cmm_params: exponent map is not a bijection");
    return p;
}

ComplexMatrix cmm_encode(std::span<const RealMatrix> blocks, std::size_t exponent, cplx gamma) {
    if (blocks.empty()) throw ArgumentError("cmm_encode: no blocks");
    const std::size_t r = blocks[0].rows(), c = blocks[0].cols();
    ComplexMatrix enc(r, c);
    cplx factor{1.0, 0.0};
    cplx step{1.0, 0.0};
    for (std::size_t e = 0; e < exponent; ++e) step *= gamma;
    for (const RealMatrix& b : blocks) {
        if (b.rows() != r || b.cols() != c) throw ArgumentError("cmm_encode: block shapes differ");
        enc.accumulate(b, factor);
        factor *= step;
    }
    return enc;
}

namespace {

/// Interpolates coefficient blocks from worker products evaluated at the
/// responder points and re-checks the interpolation at those points.
std::vector<ComplexMatrix> interpolate_blocks(const std::vector<ComplexMatrix>& products,
                                              std::span<const cplx> pts, CmmTelemetry* telemetry) {
    const std::size_t r_count = pts.size();
    OpsCount ops;
    const ComplexMatrix v_inv = vandermonde_inverse(pts, &ops);
    const std::size_t br = products[0].rows(), bc = products[0].cols();

    std::vector<ComplexMatrix> coeffs(r_count, ComplexMatrix(br, bc));
    for (std::size_t t = 0; t < r_count; ++t)
        for (std::size_t m = 0; m < r_count; ++m) coeffs[t].accumulate(products[m], v_inv(t, m));

    // residual: re-evaluate the polynomial at each used point
    double scale = 0.0;
    for (const auto& p : products) scale = std::max(scale, max_abs(p));
    double resid = 0.0;
    for (std::size_t m = 0; m < r_count; ++m) {
        ComplexMatrix eval(br, bc);
        cplx pw{1.0, 0.0};
        for (std::size_t t = 0; t < r_count; ++t) {
            eval.accumulate(coeffs[t], pw);
            pw *= pts[m];
        }
        resid = std::max(resid, max_abs(eval - products[m]));
    }
    if (resid > 1e-7 * std::max(scale, 1.0))
        throw DecodeIntegrityError("cmm decode: interpolation residual " + std::to_string(resid));

    if (telemetry) {
        telemetry->responders_used = r_count;
        telemetry->payload_symbols = br * bc;
        telemetry->decode_ops = ops.total() + static_cast<std::uint64_t>(r_count) * r_count * br * bc;
    }
    return coeffs;
}

std::vector<cplx> responder_points(const CmmParams& params,
                                   std::span<const std::size_t> responders,
                                   std::size_t threshold) {
    if (responders.size() < threshold)
        throw UnrecoverableError("cmm decode: " + std::to_string(responders.size()) +
                                 " responders, need " + std::to_string(threshold));
    std::vector<cplx> pts;
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < threshold; ++i) {
        const std::size_t id = responders[i];
        if (id < 1 || id > params.workers())
            throw ArgumentError("cmm decode: responder id out of range");
        if (!seen.insert(id).second) throw ArgumentError("cmm decode: duplicate responder id");
        pts.push_back(params.gammas[id - 1]);
    }
    return pts;
}

RealMatrix assemble_and_realify(const std::vector<ComplexMatrix>& coeffs, std::size_t k_bar,
                                const CmmParams& params, std::size_t block_rows,
                                std::size_t block_cols) {
    RealMatrix out(k_bar * block_rows, k_bar * block_cols);
    double residue = 0.0;
    for (std::size_t j = 0; j < k_bar; ++j) {
        for (std::size_t l = 0; l < k_bar; ++l) {
            const ComplexMatrix& c = coeffs[j * params.a + l * params.b];
            residue = std::max(residue, c.max_imag_abs());
            for (std::size_t r = 0; r < block_rows; ++r)
                for (std::size_t s = 0; s < block_cols; ++s)
                    out(j * block_rows + r, l * block_cols + s) = c(r, s).real();
        }
    }
    if (residue > 1e-7)
        throw DecodeIntegrityError("cmm decode: imaginary residue " + std::to_string(residue));
    return out;
}

} // namespace

RealMatrix cmm_gram(const RealMatrix& a, std::size_t k_bar, const CmmParams& params,
                    std::span<const std::size_t> responders, CmmTelemetry* telemetry) {
    if (params.k_bar != k_bar) throw ArgumentError("cmm_gram: params built for different k_bar");
    const BlockPartition part = partition_columns(a, k_bar);
    const std::size_t threshold = params.threshold();
    const auto pts = responder_points(params, responders, threshold);

    std::vector<ComplexMatrix> products;
    products.reserve(threshold);
    for (std::size_t i = 0; i < threshold; ++i) {
        const cplx g = params.gammas[responders[i] - 1];
        const ComplexMatrix ea = cmm_encode(part.blocks, params.a, g);
        const ComplexMatrix eb = cmm_encode(part.blocks, params.b, g);
        products.push_back(ea.transposed() * eb);  // plain transpose, no conjugation
    }
    const auto coeffs = interpolate_blocks(products, pts, telemetry);
    const RealMatrix padded =
        assemble_and_realify(coeffs, k_bar, params, part.block_cols(), part.block_cols());
    return padded.trimmed(a.cols(), a.cols());
}

RealMatrix cmm_rowblock_product(std::span<const RealMatrix> row_blocks,
                                std::span<const RealMatrix> col_blocks, const CmmParams& params,
                                std::span<const std::size_t> responders,
                                CmmTelemetry* telemetry) {
    if (row_blocks.size() != params.k_bar || col_blocks.size() != params.k_bar)
        throw ArgumentError("cmm_rowblock_product: need k_bar row and column blocks");
    const std::size_t br = row_blocks[0].rows(), inner = row_blocks[0].cols();
    const std::size_t bc = col_blocks[0].cols();
    for (const auto& b : row_blocks)
        if (b.rows() != br || b.cols() != inner)
            throw ArgumentError("cmm_rowblock_product: row block shapes differ");
    for (const auto& b : col_blocks)
        if (b.rows() != inner || b.cols() != bc)
            throw ArgumentError("cmm_rowblock_product: column block shapes incompatible");

    const std::size_t threshold = params.threshold();
    const auto pts = responder_points(params, responders, threshold);

    std::vector<ComplexMatrix> products;
    products.reserve(threshold);
    for (std::size_t i = 0; i < threshold; ++i) {
        const cplx g = params.gammas[responders[i] - 1];
        const ComplexMatrix er = cmm_encode(row_blocks, params.a, g);
        const ComplexMatrix ec = cmm_encode(col_blocks, params.b, g);
        products.push_back(er * ec);
    }
    const auto coeffs = interpolate_blocks(products, pts, telemetry);
    return assemble_and_realify(coeffs, params.k_bar, params, br, bc);
}

} // namespace codedinv
