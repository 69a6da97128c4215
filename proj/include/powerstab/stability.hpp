#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powerstab/finring.hpp"
#include "powerstab/generic.hpp"
#include "powerstab/ideals.hpp"

namespace powerstab {

struct StabilityRow {
    unsigned t;
    Ideal contraction;  // I^t ∩ A
    Ideal expected;     // (I ∩ A)^t
    bool equal;
    /// Element of I^t ∩ A outside (I ∩ A)^t, present iff !equal.
    std::optional<Polynomial> witness;
};

struct StabilityReport {
    RingTower tower;
    Ideal ideal;
    unsigned t_max;
    std::vector<StabilityRow> rows;
    /// Set when a guard tripped; rows then stop at the last completed t.
    std::optional<std::string> resource_error;

    bool complete() const { return !resource_error && rows.size() == t_max; }
    std::optional<unsigned> first_failure() const;
    bool stable_up_to_tmax() const { return complete() && !first_failure(); }
    /// Least a with equality for every t in [a, t_max]. Says nothing about t > t_max.
    std::optional<unsigned> observed_window_start() const;
    /// "stable-up-to-4", "first-failure t=2", or "incomplete after t=3".
    std::string overall() const;
};

/// Compares I^t ∩ A with (I ∩ A)^t for t = 1..t_max.
StabilityReport check_power_stable(const Ideal& I, const RingTower& tower, unsigned t_max);

struct GradedRow {
    unsigned n;
    Ideal lhs;  // J^n ∩ (I^(n+1) ∩ A)
    Ideal rhs;  // J^(n+1)
    bool holds;
    std::optional<Polynomial> witness;
};

struct GradedReport {
    RingTower tower;
    Ideal ideal;
    unsigned n_max;
    std::vector<GradedRow> rows;
    std::optional<std::string> resource_error;

    std::optional<unsigned> first_failure() const;
};

/// Checks J^n ∩ (I^(n+1) ∩ A) = J^(n+1), J = I ∩ A, for n = 0..n_max.
GradedReport check_graded_criterion(const Ideal& I, const RingTower& tower, unsigned n_max);

struct PrimaryWitness {
    Polynomial witness;  // in (P^t : s^inf) but not in P^t
    unsigned k;          // s^k * witness lies in P^t
};

/// Looks for an element of (P^t : s^inf) outside P^t. P is assumed prime;
/// s must lie outside P. QQ coefficients only. None means the saturation by
/// this s equals P^t, which is inconclusive.
std::optional<PrimaryWitness> primary_failure_witness(const Ideal& P, unsigned t, const Polynomial& s);

struct SubCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct CheckReport {
    std::string name;
    std::vector<SubCheck> checks;
    std::optional<StabilityReport> stability;

    bool passed() const;
    void add(std::string check, bool ok, std::string detail = {});
};

/// I = (X^n - p, X^m) in ZZ[X] with n < m < 2n and 2(m - n) <= n.
CheckReport verify_example_316(unsigned p, unsigned n, unsigned m, unsigned t_max);

/// The (3,4,5) monomial curve and its non-primary square.
CheckReport verify_monomial_curve();

/// J = (X^2 - λ, λX) in ZZ[X] for a prime λ.
CheckReport verify_lambda_gadget(unsigned lambda, unsigned t_max);

/// Contraction identities for an ideal of a finite ring whose contraction
/// equality fails at m. The report's first check is the hypothesis
/// (I ∩ A)(I^m ∩ A) = (I ∩ A)^(m+1); the rest are skipped if it fails.
CheckReport verify_t322_identities(const FinIdeal& I, unsigned m, unsigned r_max = 8);

bool is_prime(unsigned p);

}  // namespace powerstab
