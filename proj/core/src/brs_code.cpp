#include "codedinv/brs_code.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "codedinv/errors.hpp"

namespace codedinv {

namespace {
constexpr double kStructuralZero = 1e-9;
}

std::size_t MaskMatrix::row_weight(std::size_t i) const {
    std::size_t w = 0;
    for (std::size_t j = 0; j < k_; ++j) w += at(i, j) ? 1 : 0;
    return w;
}

std::size_t MaskMatrix::col_weight(std::size_t j) const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < n_; ++i) w += at(i, j) ? 1 : 0;
    return w;
}

std::vector<std::size_t> MaskMatrix::row_support(std::size_t i) const {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < k_; ++j)
        if (at(i, j)) s.push_back(j);
    return s;
}

std::vector<std::size_t> MaskMatrix::col_support(std::size_t j) const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n_; ++i)
        if (at(i, j)) s.push_back(i);
    return s;
}

MaskMatrix mask_matrix(std::size_t n, std::size_t k, std::size_t d) {
    if (n == 0 || k == 0 || d == 0) throw ArgumentError("mask_matrix: zero parameter");
    if (2 * d < n)
        throw ParameterError("mask_matrix: d < n/2; the cyclic construction can fail to "
                             "produce a balanced mask for such parameters");
    if (k * d % n != 0)
        throw ParameterError("mask_matrix: k*d/n is not integral");
    MaskMatrix m(n, k);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            const std::size_t iota = (i + j * d + 1) % n;  // 0 means row n
            const std::size_t row = iota == 0 ? n : iota;
            m.set(row - 1, j, true);
        }
    }
    const std::size_t w = k * d / n;
    for (std::size_t i = 0; i < n; ++i)
        if (m.row_weight(i) != w)
            throw ConstructionError("mask_matrix: row " + std::to_string(i + 1) +
                                    " has weight " + std::to_string(m.row_weight(i)) +
                                    ", expected " + std::to_string(w));
    return m;
}

SchemeParams validate_params(std::size_t n, std::size_t k, std::size_t T_hint) {
    if (k < 1 || n <= k) throw ParameterError("validate_params: need n > k >= 1");
    if (k < 2)
        throw ParameterError("validate_params: k = 1 assigns every block to every worker; "
                             "no coding scheme is needed");
    const std::size_t d = n - k + 1;
    const std::size_t s = n - k;
    if (d * k % n != 0)
        throw ParameterError("validate_params: row weight w = dk/n = " + std::to_string(d * k) +
                             "/" + std::to_string(n) + " is not integral");
    const std::size_t w = d * k / n;
    if (2 * d < n)
        throw ParameterError("validate_params: d = " + std::to_string(d) +
                             " < n/2; the mask construction is not guaranteed for d < n/2");

    // duplicate column supports would make P singular (proportional columns)
    const MaskMatrix m = mask_matrix(n, k, d);
    std::map<std::vector<std::size_t>, std::size_t> seen;
    for (std::size_t j = 0; j < k; ++j) {
        auto sup = m.col_support(j);
        auto [it, inserted] = seen.emplace(std::move(sup), j);
        if (!inserted)
            throw ParameterError("validate_params: columns " + std::to_string(it->second + 1) +
                                 " and " + std::to_string(j + 1) +
                                 " of the mask share a support; P would be singular");
    }

    SchemeParams p;
    p.n = n;
    p.k = k;
    p.s = s;
    p.d = d;
    p.w = w;
    p.T = T_hint;
    p.q = smallest_prime_above(n);
    return p;
}

std::vector<SchemeParams> suggest_params(std::size_t n_min, std::size_t n_max) {
    if (n_max < n_min) throw ArgumentError("suggest_params: empty range");
    std::vector<SchemeParams> out;
    for (std::size_t n = std::max<std::size_t>(n_min, 2); n <= n_max; ++n) {
        for (std::size_t m = 2; m <= n / 2; ++m) {
            if (n % m != 0) continue;
            const std::size_t k = n / m;
            if (k < 2 || k % m != 1 % m) continue;
            try {
                out.push_back(validate_params(n, k));
            } catch (const ParameterError&) {
                // enumerated candidate outside the admissible family
            }
        }
    }
    return out;
}

std::vector<std::vector<cplx>> column_polynomials(const MaskMatrix& mask,
                                                  const EvalPoints& eval) {
    const std::size_t n = mask.workers(), k = mask.blocks();
    if (eval.size() < n) throw ArgumentError("column_polynomials: need n evaluation points");
    std::vector<std::vector<cplx>> polys(k);
    for (std::size_t j = 0; j < k; ++j) {
        if (!mask.at(j, j))
            throw ConstructionError("column_polynomials: mask zero at (j, j) for column " +
                                    std::to_string(j + 1) +
                                    "; the normalization point must carry a nonzero");
        std::vector<cplx> num{cplx{1.0, 0.0}};
        cplx den{1.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            if (mask.at(i, j)) continue;
            std::vector<cplx> next(num.size() + 1, cplx{0.0, 0.0});
            for (std::size_t t = 0; t < num.size(); ++t) {
                next[t] -= eval.points[i] * num[t];
                next[t + 1] += num[t];
            }
            num = std::move(next);
            den *= eval.points[j] - eval.points[i];
        }
        if (num.size() != k)
            throw ConstructionError("column_polynomials: degree of p_" + std::to_string(j + 1) +
                                    " is " + std::to_string(num.size() - 1) + ", expected k-1");
        for (cplx& c : num) c /= den;
        for (std::size_t t = 0; t < k; ++t)
            if (std::abs(num[t]) <= kStructuralZero)
                throw ConstructionError("column_polynomials: coefficient " + std::to_string(t) +
                                        " of p_" + std::to_string(j + 1) +
                                        " vanishes; parameter/point pathology");
        polys[j] = std::move(num);
    }
    return polys;
}

BrsGenerator build_generator(const SchemeParams& params, const EvalPoints& eval) {
    if (eval.size() < params.n) throw ArgumentError("build_generator: need n evaluation points");
    BrsGenerator gen;
    gen.params = params;
    gen.eval = eval;
    gen.mask = mask_matrix(params.n, params.k, params.d);

    const auto polys = column_polynomials(gen.mask, eval);

    gen.H = ComplexMatrix(params.n, params.k);
    for (std::size_t i = 0; i < params.n; ++i) {
        cplx pw{1.0, 0.0};
        for (std::size_t j = 0; j < params.k; ++j) {
            gen.H(i, j) = pw;
            pw *= eval.points[i];
        }
    }
    gen.P = ComplexMatrix(params.k, params.k);
    for (std::size_t j = 0; j < params.k; ++j)
        for (std::size_t t = 0; t < params.k; ++t) gen.P(t, j) = polys[j][t];
    gen.G = gen.H * gen.P;

    // structural invariants: zero pattern, weights, nnz = k d
    std::size_t nnz = 0;
    for (std::size_t i = 0; i < params.n; ++i) {
        std::size_t row_nnz = 0;
        for (std::size_t j = 0; j < params.k; ++j) {
            const bool hot = std::abs(gen.G(i, j)) > kStructuralZero;
            if (hot != gen.mask.at(i, j))
                throw ConstructionError("build_generator: G zero pattern disagrees with mask at (" +
                                        std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            row_nnz += hot ? 1 : 0;
        }
        if (row_nnz != params.w)
            throw ConstructionError("build_generator: row weight mismatch");
        nnz += row_nnz;
    }
    if (nnz != params.k * params.d)
        throw ConstructionError("build_generator: nnz(G) != k*d");
    for (std::size_t j = 0; j < params.k; ++j)
        if (gen.mask.col_weight(j) != params.d)
            throw ConstructionError("build_generator: column weight mismatch");

    gen.P_inverse = exact_inverse(gen.P);
    const double resid = frobenius_norm(gen.P_inverse * gen.P - ComplexMatrix::identity(params.k));
    if (resid > 1e-8 * static_cast<double>(params.k))
        throw ConstructionError("build_generator: P numerically singular, |P^-1 P - I|_F = " +
                                std::to_string(resid));

    gen.task_sets.reserve(params.n);
    for (std::size_t i = 0; i < params.n; ++i) gen.task_sets.push_back(gen.mask.row_support(i));
    return gen;
}

ComplexMatrix vandermonde_inverse(std::span<const cplx> points, OpsCount* ops) {
    const std::size_t k = points.size();
    if (k == 0) throw ArgumentError("vandermonde_inverse: empty point set");
    std::uint64_t count = 0;

    // master polynomial Phi(x) = prod_m (x - x_m), ascending coefficients
    std::vector<cplx> phi{cplx{1.0, 0.0}};
    phi.reserve(k + 1);
    for (std::size_t m = 0; m < k; ++m) {
        std::vector<cplx> next(phi.size() + 1, cplx{0.0, 0.0});
        for (std::size_t t = 0; t < phi.size(); ++t) {
            next[t] -= points[m] * phi[t];
            next[t + 1] += phi[t];
        }
        count += phi.size();
        phi = std::move(next);
    }

    ComplexMatrix inv(k, k);
    for (std::size_t m = 0; m < k; ++m) {
        // synthetic division: q(x) = Phi(x) / (x - x_m), descending recurrence
        std::vector<cplx> q(k, cplx{0.0, 0.0});  // ascending coefficients of q
        cplx carry = phi[k];                      // leading coefficient (1)
        for (std::size_t t = k; t-- > 0;) {
            q[t] = carry;
            carry = phi[t] + points[m] * carry;
        }
        count += k;
        // denominator Phi'(x_m) via Horner on the derivative
        cplx der{0.0, 0.0};
        for (std::size_t t = k; t-- > 0;)
            der = der * points[m] + phi[t + 1] * cplx(static_cast<double>(t + 1), 0.0);
        count += 2 * k;
        for (std::size_t t = 0; t < k; ++t) inv(t, m) = q[t] / der;
        count += k;
    }
    if (ops) ops->vandermonde += count;
    return inv;
}

RestrictedInverse restricted_inverse(const BrsGenerator& gen,
                                     std::span<const std::size_t> responders) {
    const std::size_t k = gen.params.k;
    if (responders.size() != k)
        throw ArgumentError("restricted_inverse: need exactly k responder ids");
    std::set<std::size_t> distinct(responders.begin(), responders.end());
    if (distinct.size() != k) throw ArgumentError("restricted_inverse: duplicate responder ids");
    std::vector<cplx> pts;
    pts.reserve(k);
    for (std::size_t id : responders) {
        if (id < 1 || id > gen.params.n)
            throw ArgumentError("restricted_inverse: worker id out of range");
        pts.push_back(gen.eval.points[id - 1]);
    }

    RestrictedInverse out;
    const ComplexMatrix h_inv = vandermonde_inverse(pts, &out.ops);
    out.inverse = gen.P_inverse * h_inv;
    out.ops.multiply +=
        static_cast<std::uint64_t>(k) * k * k;  // the k x k x k online product

    // residual check against the actual restricted generator rows
    ComplexMatrix gi(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < k; ++j) gi(r, j) = gen.G(responders[r] - 1, j);
    const double resid = frobenius_norm(out.inverse * gi - ComplexMatrix::identity(k));
    if (resid > 1e-7 * static_cast<double>(k))
        throw ConstructionError("restricted_inverse: residual " + std::to_string(resid) +
                                " exceeds 1e-7*k");
    return out;
}

std::vector<std::vector<std::size_t>> tau_groups(const MaskMatrix& mask) {
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_support;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < mask.workers(); ++i) {
        auto sup = mask.row_support(i);
        auto it = by_support.find(sup);
        if (it == by_support.end()) {
            by_support.emplace(std::move(sup), std::vector<std::size_t>{i});
        } else {
            it->second.push_back(i);
        }
    }
    // preserve first-appearance order of groups
    std::vector<bool> used(mask.workers(), false);
    for (std::size_t i = 0; i < mask.workers(); ++i) {
        if (used[i]) continue;
        const auto sup = mask.row_support(i);
        const auto& members = by_support[sup];
        for (std::size_t id : members) used[id] = true;
        groups.push_back(members);
    }
    return groups;
}

} // namespace codedinv
