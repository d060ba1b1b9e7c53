#ifndef OFORGE_RNG_HPP
#define OFORGE_RNG_HPP

#include <cstdint>

#include "oforge/linalg.hpp"
#include "oforge/polynomial.hpp"

namespace oforge {

/// SplitMix64. Self-contained so that seeded runs are byte-identical across
/// platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    long long int_in(long long lo, long long hi) {
        return lo + (long long)below((std::uint64_t)(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

/// Random sparse polynomial: up to max_terms monomials of total degree
/// <= max_degree with nonzero coefficients in [-coeff_bound, coeff_bound].
inline Polynomial random_polynomial(Rng& rng, const AmbientPtr& amb, int max_degree,
                                    int max_terms, long long coeff_bound = 5) {
    Polynomial p(amb);
    int terms = 1 + int(rng.below(std::uint64_t(max_terms)));
    for (int t = 0; t < terms; ++t) {
        int deg = int(rng.below(std::uint64_t(max_degree + 1)));
        std::vector<int> e(size_t(amb->arity()), 0);
        for (int k = 0; k < deg; ++k) ++e[size_t(rng.below(std::uint64_t(amb->arity())))];
        long long c = rng.int_in(-coeff_bound, coeff_bound);
        if (c == 0) c = 1;
        p.add_term(Monomial(std::move(e)), Rational(c));
    }
    return p;
}

inline RatVec random_vector(Rng& rng, int dim, long long bound = 5) {
    RatVec v(static_cast<size_t>(dim));
    for (auto& x : v) x = Rational(rng.int_in(-bound, bound));
    return v;
}

}  // namespace oforge

#endif
