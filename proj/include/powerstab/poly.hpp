#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powerstab/arith.hpp"

namespace powerstab {

/// Coefficient domain plus an ordered list of distinct variable names.
///
/// Names starting with '_' are auxiliary (reserved for elimination tricks)
/// and can never be declared by a user.
class RingContext {
  public:
    RingContext(CoefficientDomain domain, std::vector<std::string> variables);

    const CoefficientDomain& domain() const noexcept { return domain_; }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    std::size_t num_vars() const noexcept { return variables_.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;
    /// Throws Error for an unknown name.
    std::size_t require_index(std::string_view name) const;
    bool is_auxiliary(std::size_t var) const { return variables_[var].starts_with('_'); }

    /// A new context with `names` (which must start with '_') placed in front
    /// of the current variables.
    std::shared_ptr<const RingContext> with_auxiliary(const std::vector<std::string>& names) const;

    static bool is_user_identifier(std::string_view name);
    std::string to_string() const;

    friend bool operator==(const RingContext& a, const RingContext& b) {
        return a.domain_ == b.domain_ && a.variables_ == b.variables_;
    }

  private:
    CoefficientDomain domain_;
    std::vector<std::string> variables_;
};

using ContextPtr = std::shared_ptr<const RingContext>;

ContextPtr make_context(CoefficientDomain domain, std::vector<std::string> variables);

/// Exponent vector, one entry per context variable.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0), degree_(0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
    std::uint64_t total_degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    bool divides(const Monomial& other) const;
    /// this / other; requires other | this.
    Monomial quotient(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    /// Order-agnostic storage comparison (lexicographic on exponent vectors).
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  private:
    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

/// Lex, graded reverse lex, or a block (product) order over a partition of
/// the variables. Earlier blocks dominate later ones, which gives the
/// elimination property for the front block.
class MonomialOrder {
  public:
    enum class Kind { Lex, GrevLex };
    struct Block {
        std::vector<std::size_t> vars;  // in decreasing significance
        Kind kind;
        friend bool operator==(const Block&, const Block&) = default;
        friend auto operator<=>(const Block&, const Block&) = default;
    };

    static MonomialOrder lex(std::size_t nvars);
    static MonomialOrder grevlex(std::size_t nvars);
    /// Blocks must partition {0, .., nvars-1}.
    static MonomialOrder block(std::size_t nvars, std::vector<Block> blocks);
    /// Front block `eliminate` (grevlex inside), then the remaining variables
    /// in context order with `rest` inside.
    static MonomialOrder elimination(std::size_t nvars, const std::vector<std::size_t>& eliminate,
                                     Kind rest = Kind::GrevLex);

    std::size_t num_vars() const noexcept { return nvars_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::string to_string() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
    friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

  private:
    MonomialOrder(std::size_t nvars, std::vector<Block> blocks) : nvars_(nvars), blocks_(std::move(blocks)) {}

    std::size_t nvars_;
    std::vector<Block> blocks_;
};

/// grevlex for QQ, lex otherwise.
MonomialOrder default_order(const RingContext& ctx);

struct Term {
    Monomial mono;
    mpq_class coeff;
};

/// Sparse multivariate polynomial. Terms are kept in storage order with no
/// zero coefficients; the zero polynomial has no terms. Orders are supplied
/// per computation.
class Polynomial {
  public:
    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    Polynomial(ContextPtr ctx, std::vector<Term> terms);

    static Polynomial constant(ContextPtr ctx, const mpq_class& c);
    static Polynomial constant(ContextPtr ctx, long c) { return constant(std::move(ctx), mpq_class(c)); }
    static Polynomial variable(ContextPtr ctx, std::string_view name, std::uint32_t power = 1);
    static Polynomial monomial(ContextPtr ctx, Monomial m, const mpq_class& c);

    const ContextPtr& context() const noexcept { return ctx_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t num_terms() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    /// Constant term value (0 when absent).
    mpq_class constant_term() const;
    std::uint64_t total_degree() const;
    bool involves(std::size_t var) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    Polynomial& operator*=(const Polynomial& q);
    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    Polynomial scaled(const mpq_class& c) const;
    Polynomial pow(std::uint32_t e) const;

    std::pair<Monomial, Coefficient> leading_term(const MonomialOrder& order) const;

    /// Same polynomial in a context that has every variable this one uses.
    Polynomial embed(const ContextPtr& target) const;

    std::string to_string(const MonomialOrder& order) const;
    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

  private:
    void canonicalize();

    ContextPtr ctx_;
    std::vector<Term> terms_;
};

bool same_context(const Polynomial& a, const Polynomial& b);
void require_same_context(const Polynomial& a, const Polynomial& b);

/// Explicit ring arithmetic entry point.
enum class ArithOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op);

/// gcd of all coefficients (>= 0). ZZ only; the zero polynomial is rejected.
Coefficient content(const Polynomial& p);

/// Exact quotient g / f. Throws Error if f does not divide g.
Polynomial exact_divide(const Polynomial& g, const Polynomial& f);

std::string format_monomial(const Monomial& m, const RingContext& ctx);

/// Grammar: integer or rational literals, variable names, + - * ^ and
/// parentheses. Juxtaposition is rejected ("2X" must be written "2*X").
Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx);

}  // namespace powerstab
