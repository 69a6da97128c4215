#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powerstab/ideals.hpp"

namespace powerstab {

/// ZZ/n[X]/(f) for a monic f of degree d >= 1, enumerated explicitly.
///
/// An element is the base-n number whose digits are its coefficients, lowest
/// degree first, so the image of ZZ/n is exactly the elements below n.
/// ZZ/n itself is the case f = X.
class FiniteRing {
  public:
    using Element = std::uint32_t;

    /// f given by coefficients, lowest degree first; must be monic of degree >= 1.
    FiniteRing(unsigned modulus, std::vector<long> f);

    static std::shared_ptr<const FiniteRing> make(unsigned modulus, std::vector<long> f);
    static std::shared_ptr<const FiniteRing> integers_mod(unsigned modulus);
    /// f in a univariate ZZ context.
    static std::shared_ptr<const FiniteRing> from_polynomial(unsigned modulus, const Polynomial& f);

    unsigned modulus() const noexcept { return n_; }
    unsigned degree() const noexcept { return d_; }
    std::size_t size() const noexcept { return size_; }
    const std::vector<unsigned>& quotient_polynomial() const noexcept { return f_; }

    Element one() const { return 1 % size_; }
    Element x() const;
    Element add(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;

    std::vector<unsigned> coeffs(Element e) const;
    Element from_coeffs(const std::vector<long>& c) const;
    /// Image of a univariate ZZ polynomial.
    Element image(const Polynomial& p) const;
    /// Representative with coefficients in [0, n) and degree < d.
    Polynomial lift(Element e, const ContextPtr& zx) const;

    bool in_base(Element e) const noexcept { return e < n_; }
    std::string to_string(Element e) const;
    /// "ZZ/4[X]/(X^2 + 2)" or "ZZ/8"
    std::string describe() const;

    friend bool operator==(const FiniteRing& a, const FiniteRing& b) { return a.n_ == b.n_ && a.f_ == b.f_; }

  private:
    unsigned n_;
    unsigned d_;
    std::size_t size_;
    std::vector<unsigned> f_;  // reduced mod n, monic, length d + 1
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Ideal of a FiniteRing stored as its sorted member list plus a small set of
/// additive generators.
class FinIdeal {
  public:
    using Element = FiniteRing::Element;

    /// Throws PreconditionError unless `members` is an ideal.
    static FinIdeal from_members(RingPtr ring, std::vector<Element> members);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Element>& members() const noexcept { return members_; }
    const std::vector<Element>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(Element e) const { return e < mask_.size() && mask_[e]; }
    bool is_zero() const { return members_.size() == 1; }
    bool is_unit() const { return members_.size() == ring_->size(); }
    /// "{0, 2, 2*X, 2*X + 2}"
    std::string to_string() const;

    friend bool operator==(const FinIdeal& a, const FinIdeal& b) {
        return *a.ring_ == *b.ring_ && a.members_ == b.members_;
    }

  private:
    FinIdeal() = default;
    friend FinIdeal additive_span(const RingPtr&, std::span<const Element>);

    RingPtr ring_;
    std::vector<bool> mask_;
    std::vector<Element> members_;
    std::vector<Element> gens_;
};

/// Smallest additive subgroup containing `elements` (not necessarily an ideal).
FinIdeal additive_span(const RingPtr& ring, std::span<const FiniteRing::Element> elements);
/// Smallest ideal containing `gens`.
FinIdeal ideal_closure(const RingPtr& ring, std::span<const FiniteRing::Element> gens);

FinIdeal ideal_sum(const FinIdeal& I, const FinIdeal& J);
FinIdeal ideal_product(const FinIdeal& I, const FinIdeal& J);
FinIdeal ideal_power(const FinIdeal& I, unsigned t);
FinIdeal intersect(const FinIdeal& I, const FinIdeal& J);
bool is_subset(const FinIdeal& I, const FinIdeal& J);
bool equals(const FinIdeal& I, const FinIdeal& J);
inline FinIdeal power_step(const FinIdeal& acc, const FinIdeal& base) { return ideal_product(acc, base); }

/// I ∩ A as an ideal of A = ZZ/n.
FinIdeal contract(const FinIdeal& I);

/// Exhaustive check: closed under addition and multiplication by every element.
bool verify_closure(const FinIdeal& I);

struct ProfileRow {
    unsigned t;
    FinIdeal power;        // I^t
    FinIdeal contraction;  // I^t ∩ A
    FinIdeal expected;     // (I ∩ A)^t
    bool equal;
};

struct PowerProfile {
    FinIdeal ideal;
    std::vector<ProfileRow> rows;

    /// Largest t with I^t ∩ A != (I ∩ A)^t, if any.
    std::optional<unsigned> last_failure() const;
};

PowerProfile brute_power_profile(const FinIdeal& I, unsigned t_max);

struct CrossCheckReport {
    RingPtr ring;
    std::vector<FiniteRing::Element> via_groebner;
    std::vector<FiniteRing::Element> via_closure;
    std::vector<FiniteRing::Element> image_in_base;
    bool agree;
};

/// Image of an ideal of ZZ[X] in ZZ/n[X]/(f), computed through a strong basis
/// of I + (n, f) and through closure of the mapped generators.
CrossCheckReport cross_check_membership(const Ideal& I, unsigned n, const Polynomial& f);

/// Every ideal of the ring.
std::vector<FinIdeal> all_ideals(const RingPtr& ring);

struct PowerEqualInstance {
    FinIdeal P;
    FinIdeal K;
    unsigned l;  // least l with P^l = K^l
};

/// Pairs P ⊊ K of ideals with P^l = K^l for some l <= l_max.
std::vector<PowerEqualInstance> search_power_equal_pairs(const RingPtr& ring, unsigned l_max);

}  // namespace powerstab
