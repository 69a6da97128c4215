#pragma once

// Line-oriented input language of the command-line tool.
//
//   tower ZZ[X]
//   ideal I = X^2 - 2, X^3
//   ideal P = toric(3,4,5; Y,Z,W)
//   ideal K = product(I, I)
//   check-stability I tmax=3 expect=unstable
//
// `#` starts a comment. Option values containing spaces are double-quoted.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powerstab/ideals.hpp"

namespace powerstab {

struct SourceLoc {
    std::size_t line = 0;
    std::size_t column = 0;
};

struct IdealExpr {
    enum class Kind { Generators, Toric, Sum, Product, Power, Intersect, Quotient, Saturate };
    Kind kind = Kind::Generators;
    std::vector<std::string> polys;     // generators, or the single f of quotient/saturate
    std::vector<std::string> operands;  // names of previously bound ideals
    std::vector<unsigned> numbers;      // toric weights, or the exponent of power
    std::vector<std::string> vars;      // toric variables

    friend bool operator==(const IdealExpr&, const IdealExpr&) = default;
};

struct Binding {
    std::string name;
    IdealExpr expr;
    SourceLoc loc;

    friend bool operator==(const Binding& a, const Binding& b) { return a.name == b.name && a.expr == b.expr; }
};

struct Command {
    std::string verb;
    std::vector<std::string> args;
    std::vector<std::pair<std::string, std::string>> options;
    SourceLoc loc;

    std::optional<std::string> option(std::string_view key) const;
    friend bool operator==(const Command& a, const Command& b) {
        return a.verb == b.verb && a.args == b.args && a.options == b.options;
    }
};

struct Script {
    RingTower tower;
    std::vector<Binding> ideals;
    std::vector<Command> commands;

    const Binding* find(std::string_view name) const;
    friend bool operator==(const Script& a, const Script& b) {
        return a.tower.to_string() == b.tower.to_string() && a.ideals == b.ideals && a.commands == b.commands;
    }
};

/// Polynomials are stored in canonical printed form, so print_script of a
/// parsed script parses back to an equal Script.
Script parse_script(std::string_view text);
std::string print_script(const Script& script);

/// Context of the finring command's polynomials.
ContextPtr finring_context();

}  // namespace powerstab
