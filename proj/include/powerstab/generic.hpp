#pragma once

// Algorithms that only need ideal multiplication and comparison, shared by
// polynomial ideals and ideals of enumerated finite rings.

#include <concepts>
#include <optional>
#include <string>
#include <vector>

#include "powerstab/errors.hpp"

namespace powerstab {

template <class I>
concept IdealAlgebra = requires(const I& a, const I& b) {
    { ideal_product(a, b) } -> std::same_as<I>;
    { power_step(a, b) } -> std::same_as<I>;
    { equals(a, b) } -> std::convertible_to<bool>;
    { is_subset(a, b) } -> std::convertible_to<bool>;
};

/// Least r <= r_max with J * I^r = I^(r+1). J must be contained in I.
template <IdealAlgebra Id>
std::optional<unsigned> is_reduction(const Id& J, const Id& I, unsigned r_max) {
    if (r_max == 0) throw PreconditionError("is_reduction needs r_max >= 1");
    if (!is_subset(J, I)) throw PreconditionError("is_reduction: J is not contained in I");
    Id Ir = I;
    for (unsigned r = 1; r <= r_max; ++r) {
        Id next = power_step(Ir, I);
        if (equals(ideal_product(J, Ir), next)) return r;
        Ir = std::move(next);
    }
    return std::nullopt;
}

struct PropagationRow {
    unsigned t;
    bool equal;
};

struct PropagationReport {
    unsigned l = 0;
    unsigned t_max = 0;
    bool hypothesis_holds = false;
    std::string hypothesis_detail;
    std::vector<PropagationRow> rows;  // t = l..t_max
    std::vector<unsigned> violations;

    bool passed() const { return hypothesis_holds && violations.empty(); }
};

/// Given P ⊆ K and P^l = K^l, checks P^t = K^t for l <= t <= t_max.
template <IdealAlgebra Id>
PropagationReport propagate_power_equality(const Id& P, const Id& K, unsigned l, unsigned t_max) {
    if (l == 0) throw PreconditionError("propagate_power_equality needs l >= 1");
    PropagationReport rep;
    rep.l = l;
    rep.t_max = t_max;
    if (!is_subset(P, K)) {
        rep.hypothesis_detail = "P is not contained in K";
        return rep;
    }
    Id Pt = P, Kt = K;
    for (unsigned t = 2; t <= l; ++t) {
        Pt = power_step(Pt, P);
        Kt = power_step(Kt, K);
    }
    if (!equals(Pt, Kt)) {
        rep.hypothesis_detail = "P^l != K^l";
        return rep;
    }
    rep.hypothesis_holds = true;
    rep.hypothesis_detail = "P ⊆ K and P^l = K^l";
    for (unsigned t = l; t <= t_max; ++t) {
        if (t > l) {
            Pt = power_step(Pt, P);
            Kt = power_step(Kt, K);
        }
        bool eq = equals(Pt, Kt);
        rep.rows.push_back({t, eq});
        if (!eq) rep.violations.push_back(t);
    }
    return rep;
}

}  // namespace powerstab
