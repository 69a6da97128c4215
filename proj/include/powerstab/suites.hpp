#pragma once

// Seeded instance generators for the positive stability suites. Each family
// is built so that its members are known to be power stable.

#include <numeric>
#include <random>
#include <vector>

#include "powerstab/ideals.hpp"
#include "powerstab/stability.hpp"

namespace powerstab::suites {

inline long nonzero(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> d(1, bound);
    long v = d(rng);
    return rng() % 2 ? v : -v;
}

/// Random polynomial in X of exact degree deg.
inline Polynomial poly_of_degree(const ContextPtr& zx, std::mt19937_64& rng, unsigned deg, long bound, bool monic) {
    std::uniform_int_distribution<long> c(-bound, bound);
    auto X = Polynomial::variable(zx, "X");
    Polynomial p = monic ? X.pow(deg) : X.pow(deg).scaled(mpq_class(nonzero(rng, bound)));
    for (unsigned k = 0; k < deg; ++k) p += X.pow(k).scaled(mpq_class(c(rng)));
    return p;
}

/// (d, h) with d != 0 and h non-constant.
inline std::vector<Ideal> family_d_h(const ContextPtr& zx, std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<Ideal> out;
    while (static_cast<int>(out.size()) < count) {
        long d = nonzero(rng, 12);
        auto h = poly_of_degree(zx, rng, 1 + rng() % 3, 6, false);
        out.emplace_back(zx, std::vector<Polynomial>{Polynomial::constant(zx, d), h});
    }
    return out;
}

/// (J, f) with J an ideal of ZZ given by two integers and f monic.
inline std::vector<Ideal> family_j_monic(const ContextPtr& zx, std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> a(0, 30);
    std::vector<Ideal> out;
    while (static_cast<int>(out.size()) < count) {
        auto f = poly_of_degree(zx, rng, 1 + rng() % 3, 8, true);
        out.emplace_back(zx, std::vector<Polynomial>{Polynomial::constant(zx, a(rng)), Polynomial::constant(zx, a(rng)), f});
    }
    return out;
}

/// Random ideals kept only when the computed contraction is pZZ, p prime.
inline std::vector<Ideal> family_prime_contraction(const ContextPtr& zx, std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> c(2, 40);
    RingTower tower{CoefficientDomain::integers(), {}, {"X"}};
    std::vector<Ideal> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<Polynomial> gens{Polynomial::constant(zx, c(rng))};
        for (int k = 0, n = 1 + static_cast<int>(rng() % 2); k < n; ++k)
            gens.push_back(poly_of_degree(zx, rng, 1 + rng() % 3, 9, false));
        Ideal I(zx, gens);
        auto J = contract_to_base(I, tower);
        const auto& g = J.generators().front();
        if (J.generators().size() != 1 || !g.is_constant()) continue;
        mpz_class v = abs(g.constant_term().get_num());
        if (v.fits_uint_p() && is_prime(static_cast<unsigned>(v.get_ui()))) out.push_back(I);
    }
    return out;
}

/// Products of a (d, h) ideal and a (J, monic f) ideal with coprime contractions.
struct ComaximalPair {
    Ideal I;
    Ideal J;
};

inline std::vector<ComaximalPair> family_comaximal(const ContextPtr& zx, std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> a(2, 15);
    std::vector<ComaximalPair> out;
    while (static_cast<int>(out.size()) < count) {
        long d1 = a(rng), d2 = a(rng);
        if (std::gcd(d1, d2) != 1) continue;
        auto h = poly_of_degree(zx, rng, 1 + rng() % 2, 5, false);
        auto f = poly_of_degree(zx, rng, 1 + rng() % 2, 5, true);
        out.push_back({Ideal(zx, {Polynomial::constant(zx, d1), h}), Ideal(zx, {Polynomial::constant(zx, d2), f})});
    }
    return out;
}

}  // namespace powerstab::suites
