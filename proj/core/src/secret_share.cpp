#include "codedinv/secret_share.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "codedinv/errors.hpp"

namespace codedinv {

BlockPartition partition_columns(const RealMatrix& a, std::size_t k) {
    if (k < 1) throw ArgumentError("partition_columns: k must be >= 1");
    BlockPartition part;
    part.original_cols = a.cols();
    const std::size_t padded = (a.cols() + k - 1) / k * k;
    part.pad_cols = padded - a.cols();
    const std::size_t t = padded / k;
    part.blocks.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        RealMatrix block(a.rows(), t);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t c = 0; c < t; ++c) {
                const std::size_t src = j * t + c;
                block(i, c) = src < a.cols() ? a(i, src) : 0.0;
            }
        part.blocks.push_back(std::move(block));
    }
    return part;
}

RealMatrix reassemble(const BlockPartition& part) {
    RealMatrix full = hcat(part.blocks);
    return full.trimmed(full.rows(), full.cols() - part.pad_cols);
}

std::vector<std::vector<cplx>> lagrange_basis_coefficients(std::span<const cplx> points) {
    const std::size_t k = points.size();
    std::vector<std::vector<cplx>> basis(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<cplx> num{cplx{1.0, 0.0}};  // ascending coefficients
        cplx den{1.0, 0.0};
        for (std::size_t l = 0; l < k; ++l) {
            if (l == j) continue;
            // num *= (x - points[l])
            std::vector<cplx> next(num.size() + 1, cplx{0.0, 0.0});
            for (std::size_t t = 0; t < num.size(); ++t) {
                next[t] -= points[l] * num[t];
                next[t + 1] += num[t];
            }
            num = std::move(next);
            den *= points[j] - points[l];
        }
        for (cplx& c : num) c /= den;
        basis[j] = std::move(num);
    }
    return basis;
}

ShareBundle encode_shares(const BlockPartition& part, const EvalPoints& eval,
                          const MaskSet& masks) {
    const std::size_t k = part.blocks.size();
    if (k == 0) throw ArgumentError("encode_shares: empty partition");
    if (eval.size() < k || masks.size() != k)
        throw ArgumentError("encode_shares: point/block count mismatch");

    const std::vector<cplx> pts(eval.points.begin(), eval.points.begin() + k);
    const auto basis = lagrange_basis_coefficients(pts);

    ShareBundle bundle;
    bundle.n_rows = part.blocks[0].rows();
    bundle.block_cols = part.block_cols();
    bundle.original_cols = part.original_cols;
    bundle.pad_cols = part.pad_cols;
    bundle.coeffs.assign(k, ComplexMatrix(bundle.n_rows, bundle.block_cols));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t < k; ++t)
            bundle.coeffs[t].accumulate(part.blocks[j], masks.etas[j] * basis[j][t]);
    return bundle;
}

namespace {

ComplexMatrix horner_eval(const ShareBundle& bundle, cplx x) {
    const std::size_t k = bundle.k();
    ComplexMatrix acc = bundle.coeffs[k - 1];
    for (std::size_t t = k - 1; t-- > 0;) {
        for (cplx& v : acc.data()) v *= x;
        acc.accumulate(bundle.coeffs[t], cplx{1.0, 0.0});
    }
    return acc;
}

} // namespace

RealMatrix reconstruct(const ShareBundle& bundle, const SecretKeys& keys) {
    const std::size_t k = bundle.k();
    if (k == 0) throw ArgumentError("reconstruct: empty bundle");
    if (keys.eval.size() < k || keys.mask_inverses.size() != k)
        throw ArgumentError("reconstruct: keys inconsistent with bundle");

    std::vector<RealMatrix> blocks;
    blocks.reserve(k);
    double residue = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        ComplexMatrix val = horner_eval(bundle, keys.eval.points[j]);
        for (cplx& v : val.data()) v *= keys.mask_inverses[j];
        residue = std::max(residue, val.max_imag_abs());
        blocks.push_back(val.real_part());
    }
    if (residue > 1e-9)
        throw ReconstructionError("reconstruct: imaginary residue " + std::to_string(residue) +
                                  " exceeds 1e-9");
    BlockPartition part;
    part.blocks = std::move(blocks);
    part.original_cols = bundle.original_cols;
    part.pad_cols = bundle.pad_cols;
    return reassemble(part);
}

std::size_t share_symbol_count(const ShareBundle& bundle) {
    return bundle.k() * bundle.n_rows * bundle.block_cols;
}

void save_bundle_csv(const ShareBundle& bundle, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << bundle.k() << "," << bundle.n_rows << "," << bundle.block_cols << ","
        << bundle.pad_cols << "\n";
    char buf[64];
    for (const ComplexMatrix& c : bundle.coeffs) {
        for (std::size_t i = 0; i < c.rows(); ++i) {
            for (std::size_t j = 0; j < c.cols(); ++j) {
                const cplx v = c(i, j);
                std::snprintf(buf, sizeof(buf), "%.17g,%.17g", v.real(), v.imag());
                out << (j == 0 ? "" : ",") << buf;
            }
            out << "\n";
        }
    }
    if (!out) throw IoError("write failed: " + path.string());
}

ShareBundle load_bundle_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty bundle file: " + path.string());
    std::size_t k = 0, n = 0, t = 0, pad = 0;
    {
        std::istringstream hs(line);
        char comma;
        if (!(hs >> k >> comma >> n >> comma >> t >> comma >> pad))
            throw IoError("bad bundle header: " + line);
    }
    ShareBundle bundle;
    bundle.n_rows = n;
    bundle.block_cols = t;
    bundle.pad_cols = pad;
    bundle.original_cols = k * t - pad;
    bundle.coeffs.assign(k, ComplexMatrix(n, t));
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!std::getline(in, line)) throw IoError("truncated bundle file");
            std::istringstream ls(line);
            std::string cell;
            for (std::size_t j = 0; j < t; ++j) {
                double re = 0.0, im = 0.0;
                if (!std::getline(ls, cell, ',')) throw IoError("short bundle row");
                re = std::stod(cell);
                if (!std::getline(ls, cell, ',')) throw IoError("short bundle row");
                im = std::stod(cell);
                bundle.coeffs[c](i, j) = cplx{re, im};
            }
        }
    }
    return bundle;
}

} // namespace codedinv
