#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "powerstab/groebner.hpp"
#include "powerstab/poly.hpp"

namespace powerstab {

/// Finitely generated ideal with a per-order Groebner basis cache.
///
/// Copies share the cache. The zero ideal is stored as the single generator 0.
class Ideal {
  public:
    Ideal(ContextPtr ctx, std::vector<Polynomial> generators);
    static Ideal zero(ContextPtr ctx);
    static Ideal unit(ContextPtr ctx);

    const ContextPtr& context() const noexcept { return ctx_; }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }

    GroebnerBasis basis(const MonomialOrder& order) const { return *cached_basis(order); }
    GroebnerBasis basis() const { return basis(default_order(*ctx_)); }

    bool contains(const Polynomial& f) const;
    bool is_zero() const { return basis().is_zero_ideal(); }
    bool is_unit() const { return basis().is_unit_ideal(); }

    /// Generator list in the polynomial grammar, e.g. "(X^2 - 2, X^3)".
    std::string to_string() const;

  private:
    std::shared_ptr<const GroebnerBasis> cached_basis(const MonomialOrder& order) const;

    struct Cache {
        std::mutex mutex;
        std::map<MonomialOrder, std::shared_ptr<const GroebnerBasis>> bases;
    };
    ContextPtr ctx_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

/// I is contained in J.
bool is_subset(const Ideal& I, const Ideal& J);
/// Mutual containment.
bool equals(const Ideal& I, const Ideal& J);

/// A together with the variables adjoined to it to form B.
///
/// The context of B lists the base variables first, then the adjoined ones.
struct RingTower {
    CoefficientDomain base_domain = CoefficientDomain::integers();
    std::vector<std::string> base_vars;
    std::vector<std::string> adjoined;

    ContextPtr context() const;
    ContextPtr base_context() const;
    /// ZZ[X], QQ[Y,Z,W][X], ...
    std::string to_string() const;
    /// Throws ContextMismatch unless ctx is exactly this tower's B.
    void check(const RingContext& ctx) const;

    static RingTower parse(std::string_view text);
};

Ideal ideal_sum(const Ideal& I, const Ideal& J);
/// Pairwise products of generators, zeros and duplicates (up to units) removed.
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// I^t with the generators replaced by a reduced basis between multiplications.
Ideal ideal_power(const Ideal& I, unsigned t);
/// Replaces the generators by the reduced basis in the default order.
Ideal interreduce(const Ideal& I);
/// acc * base, interreduced. The step used for iterated powers.
inline Ideal power_step(const Ideal& acc, const Ideal& base) { return interreduce(ideal_product(acc, base)); }

Ideal intersect(const Ideal& I, const Ideal& J);
/// (I : f), f nonzero.
Ideal quotient(const Ideal& I, const Polynomial& f);
/// (I : f^inf), f nonzero.
Ideal saturate(const Ideal& I, const Polynomial& f);

/// I intersected with the subring in the variables not in `drop`. The result
/// lives in the same context.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop);
/// Moves an ideal to a context containing every variable its generators use.
Ideal embed(const Ideal& I, const ContextPtr& target);

/// I ∩ A as an ideal of the tower's base context. Over ZZ with no base
/// variables the result is principal with a nonnegative generator.
Ideal contract_to_base(const Ideal& I, const RingTower& tower);

/// f in the radical of I. QQ coefficients only.
bool radical_member(const Polynomial& f, const Ideal& I);

/// Kernel of var_i -> T^{w_i} on the named variables of ctx.
Ideal toric_kernel(const ContextPtr& ctx, const std::vector<unsigned>& weights,
                   const std::vector<std::string>& vars);

}  // namespace powerstab
