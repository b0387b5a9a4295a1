#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "codedinv/matrix.hpp"

namespace codedinv {

/// Evaluation points realized on the complex unit circle: point j is
/// e^(2*pi*i * j*g / q) for a generator exponent g that is a primitive root
/// mod the prime q. All points are unit modulus and pairwise distinct for
/// j = 1..n < q.
struct EvalPoints {
    std::uint64_t q = 0;
    std::uint64_t beta_exponent = 0;  // the generator g
    std::vector<cplx> points;

    std::size_t size() const { return points.size(); }
};

/// Unit-modulus masking scalars with their exact inverses (conjugates).
/// Repetitions are allowed; exponents are drawn from {1, ..., q-1}.
struct MaskSet {
    std::vector<cplx> etas;
    std::vector<cplx> inverses;
    std::vector<std::uint64_t> exponents;

    std::size_t size() const { return etas.size(); }
};

bool is_prime(std::uint64_t v);
std::uint64_t smallest_prime_above(std::uint64_t n);
/// True when g generates the multiplicative group mod the prime q.
bool is_primitive_root(std::uint64_t g, std::uint64_t q);

/// Chooses q (smallest prime > n unless q_hint is given, which must exceed n
/// and be prime), picks a seeded primitive root g, and returns the n points.
EvalPoints make_eval_points(std::size_t n, std::optional<std::uint64_t> q_hint,
                            std::uint64_t seed);

MaskSet make_mask_set(std::size_t k, std::uint64_t q, std::uint64_t seed);

} // namespace codedinv
