#pragma once

#include <functional>
#include <span>
#include <vector>

#include "powerstab/poly.hpp"

namespace powerstab {

/// Field: Buchberger over QQ. StrongEuclidean: strong bases over ZZ, built
/// from S-polynomials and GCD-polynomials.
enum class Flavor { Field, StrongEuclidean };

/// Reduced canonical Gröbner basis: leading coefficients are 1 over QQ and
/// positive over ZZ, tails are fully reduced, elements are sorted by leading
/// monomial, largest first.
class GroebnerBasis {
  public:
    GroebnerBasis(ContextPtr ctx, MonomialOrder order, std::vector<Polynomial> elements, Flavor flavor)
        : ctx_(std::move(ctx)), order_(std::move(order)), elements_(std::move(elements)), flavor_(flavor) {}

    const ContextPtr& context() const noexcept { return ctx_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<Polynomial>& elements() const noexcept { return elements_; }
    Flavor flavor() const noexcept { return flavor_; }
    bool is_unit_ideal() const;
    bool is_zero_ideal() const { return elements_.empty(); }

    Polynomial normal_form(const Polynomial& f) const;
    bool contains(const Polynomial& f) const;

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.order_ == b.order_ && a.elements_ == b.elements_;
    }

  private:
    ContextPtr ctx_;
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
    Flavor flavor_;
};

Flavor flavor_for(const CoefficientDomain& d);

/// Full normal form of f modulo G. Over ZZ a term c*m is rewritten by g when
/// lm(g) | m and the Euclidean quotient of c by lc(g) is nonzero.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> G, const MonomialOrder& order);

/// Cancels leading terms using the lcm of leading monomials and, over ZZ,
/// the lcm of leading coefficients.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// u*m1*f + v*m2*g with leading term gcd(lc f, lc g) * lcm(lm f, lm g). ZZ only.
Polynomial g_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Reduced basis of the ideal generated by `gens`. Zeros are ignored; an
/// empty list gives the zero ideal. Throws ResourceLimit when guards trip.
GroebnerBasis groebner_basis(const ContextPtr& ctx, std::span<const Polynomial> gens, const MonomialOrder& order);

bool contains(const GroebnerBasis& gb, const Polynomial& f);

/// Post-hoc check: every S-polynomial (and GCD-polynomial over ZZ) of basis
/// pairs reduces to zero. Uses no pair criteria.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

/// Hook invoked with (input generators, result) after every basis computation.
/// Used by the conformance audit in the acceptance suite.
using BasisObserver = std::function<void(const std::vector<Polynomial>&, const GroebnerBasis&)>;

class ScopedBasisObserver {
  public:
    explicit ScopedBasisObserver(BasisObserver obs);
    ~ScopedBasisObserver();
    ScopedBasisObserver(const ScopedBasisObserver&) = delete;
    ScopedBasisObserver& operator=(const ScopedBasisObserver&) = delete;

  private:
    BasisObserver previous_;
};

}  // namespace powerstab
