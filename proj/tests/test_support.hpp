#pragma once

// Shared helpers for the unit suites: random polynomial generators and a few
// independent brute-force oracles that never touch the Groebner engine.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "powerstab/poly.hpp"

namespace powerstab::testing {

inline Polynomial P(const ContextPtr& ctx, const std::string& s) { return parse_polynomial(s, ctx); }

inline std::vector<Polynomial> Ps(const ContextPtr& ctx, const std::vector<std::string>& xs) {
    std::vector<Polynomial> out;
    for (const auto& s : xs) out.push_back(parse_polynomial(s, ctx));
    return out;
}

inline Polynomial random_poly(const ContextPtr& ctx, std::mt19937_64& rng, int max_terms, int max_deg,
                              int coeff_bound) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    std::vector<Term> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint32_t> e(ctx->num_vars());
        for (auto& x : e) x = static_cast<std::uint32_t>(deg(rng));
        terms.push_back(Term{Monomial(std::move(e)), mpq_class(coeff(rng))});
    }
    return Polynomial(ctx, std::move(terms));
}

/// Dense univariate integer polynomial, lowest degree first. Used as an
/// independent oracle for hand expansions.
using Dense = std::vector<long>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline Polynomial from_dense(const ContextPtr& ctx, const std::string& var, const Dense& d) {
    Polynomial p(ctx);
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i]) p += Polynomial::variable(ctx, var, static_cast<std::uint32_t>(i)).scaled(mpq_class(d[i]));
    return p;
}

}  // namespace powerstab::testing
