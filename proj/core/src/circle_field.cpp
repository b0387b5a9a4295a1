#include "codedinv/circle_field.hpp"

#include <cmath>
#include <string>

#include "codedinv/errors.hpp"
#include "codedinv/rng.hpp"

namespace codedinv {

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (std::uint64_t d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

std::uint64_t smallest_prime_above(std::uint64_t n) {
    std::uint64_t q = n + 1;
    while (!is_prime(q)) ++q;
    return q;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    // mod <= ~1e6 here, so 64-bit products do not overflow
    std::uint64_t result = 1;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            fs.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) fs.push_back(v);
    return fs;
}

} // namespace

bool is_primitive_root(std::uint64_t g, std::uint64_t q) {
    if (g % q == 0) return false;
    for (std::uint64_t p : prime_factors(q - 1))
        if (pow_mod(g, (q - 1) / p, q) == 1) return false;
    return true;
}

EvalPoints make_eval_points(std::size_t n, std::optional<std::uint64_t> q_hint,
                            std::uint64_t seed) {
    if (n < 1) throw ArgumentError("make_eval_points: n must be >= 1");
    std::uint64_t q;
    if (q_hint) {
        if (*q_hint <= n)
            throw ArgumentError("make_eval_points: q_hint must exceed n");
        if (!is_prime(*q_hint))
            throw ArgumentError("make_eval_points: q_hint must be prime");
        q = *q_hint;
    } else {
        q = smallest_prime_above(n);
    }

    // seeded starting offset, then scan until a primitive root is found
    std::uint64_t g = 0;
    if (q == 2) {
        g = 1;
    } else {
        Rng rng(seed);
        const std::uint64_t start = 2 + rng.next_int(0, q - 3);
        for (std::uint64_t off = 0; off < q; ++off) {
            std::uint64_t cand = 2 + (start - 2 + off) % (q - 2);
            if (is_primitive_root(cand, q)) { g = cand; break; }
        }
    }

    EvalPoints ev;
    ev.q = q;
    ev.beta_exponent = g;
    ev.points.reserve(n);
    const double tau = 2.0 * M_PI / static_cast<double>(q);
    for (std::size_t j = 1; j <= n; ++j) {
        const std::uint64_t e = (j * g) % q;  // distinct for j <= n < q since gcd(g, q) = 1
        ev.points.emplace_back(std::cos(tau * e), std::sin(tau * e));
    }
    return ev;
}

MaskSet make_mask_set(std::size_t k, std::uint64_t q, std::uint64_t seed) {
    if (k < 1) throw ArgumentError("make_mask_set: k must be >= 1");
    if (q < 2) throw ArgumentError("make_mask_set: q must be >= 2");
    MaskSet ms;
    ms.etas.reserve(k);
    ms.inverses.reserve(k);
    ms.exponents.reserve(k);
    Rng rng(seed);
    const double tau = 2.0 * M_PI / static_cast<double>(q);
    for (std::size_t j = 0; j < k; ++j) {
        const std::uint64_t e = rng.next_int(1, q - 1);
        const cplx eta{std::cos(tau * e), std::sin(tau * e)};
        ms.exponents.push_back(e);
        ms.etas.push_back(eta);
        ms.inverses.push_back(std::conj(eta));
    }
    return ms;
}

} // namespace codedinv
