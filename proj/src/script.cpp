#include "powerstab/script.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "powerstab/errors.hpp"

namespace powerstab {

namespace {

enum class Value { Number, Poly, FinPoly, FinPolyList, Order, Expect, FoundNone, Mode };

struct Spec {
    std::size_t min_args;
    std::size_t max_args;
    std::map<std::string, Value, std::less<>> options;
    std::vector<std::string> required;
};

const std::map<std::string, Spec, std::less<>>& specs() {
    static const std::map<std::string, Spec, std::less<>> table{
        {"check-stability", {1, 1, {{"tmax", Value::Number}, {"expect", Value::Expect}}, {}}},
        {"graded-criterion", {1, 1, {{"nmax", Value::Number}}, {}}},
        {"contract", {1, 1, {{"order", Value::Order}}, {}}},
        {"power", {1, 1, {{"t", Value::Number}, {"order", Value::Order}}, {"t"}}},
        {"intersect", {2, 2, {{"order", Value::Order}}, {}}},
        {"quotient", {1, 1, {{"f", Value::Poly}, {"order", Value::Order}}, {"f"}}},
        {"saturate", {1, 1, {{"f", Value::Poly}, {"order", Value::Order}}, {"f"}}},
        {"primary-witness", {1, 1, {{"t", Value::Number}, {"s", Value::Poly}, {"expect", Value::FoundNone}}, {"t", "s"}}},
        {"is-reduction", {2, 2, {{"rmax", Value::Number}}, {}}},
        {"propagate-equal", {2, 2, {{"l", Value::Number}, {"tmax", Value::Number}}, {"l"}}},
        {"finring",
         {0,
          1,
          {{"n", Value::Number},
           {"f", Value::FinPoly},
           {"gens", Value::FinPolyList},
           {"mode", Value::Mode},
           {"tmax", Value::Number},
           {"lmax", Value::Number},
           {"m", Value::Number}},
          {"n"}}},
        {"suite", {1, 1, {{"count", Value::Number}, {"tmax", Value::Number}, {"seed", Value::Number}}, {}}},
    };
    return table;
}

const std::map<std::string, IdealExpr::Kind, std::less<>>& functions() {
    using K = IdealExpr::Kind;
    static const std::map<std::string, K, std::less<>> table{
        {"toric", K::Toric},         {"sum", K::Sum},           {"product", K::Product},   {"power", K::Power},
        {"intersect", K::Intersect}, {"quotient", K::Quotient}, {"saturate", K::Saturate},
    };
    return table;
}

std::string function_name(IdealExpr::Kind k) {
    for (const auto& [name, kind] : functions())
        if (kind == k) return name;
    return {};
}

const std::set<std::string, std::less<>> suite_names{"d-h", "j-monic", "prime-contraction", "comaximal"};

struct Piece {
    std::string_view text;
    std::size_t column;  // 1-based
};

bool space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

Piece trim(Piece p) {
    std::size_t a = 0, b = p.text.size();
    while (a < b && space(p.text[a])) ++a;
    while (b > a && space(p.text[b - 1])) --b;
    return {p.text.substr(a, b - a), p.column + a};
}

// Splits at `sep` outside parentheses.
std::vector<Piece> split(Piece p, char sep) {
    std::vector<Piece> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= p.text.size(); ++i) {
        if (i == p.text.size() || (p.text[i] == sep && depth == 0)) {
            out.push_back(trim({p.text.substr(start, i - start), p.column + start}));
            start = i + 1;
        } else if (p.text[i] == '(') {
            ++depth;
        } else if (p.text[i] == ')') {
            --depth;
        }
    }
    return out;
}

class LineParser {
  public:
    LineParser(std::size_t line) : line_(line) {}

    [[noreturn]] void fail(const std::string& msg, std::size_t column) const { throw ParseError(msg, line_, column); }

    unsigned number(Piece p) const {
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(p.text.data(), p.text.data() + p.text.size(), v);
        if (p.text.empty() || ec != std::errc() || ptr != p.text.data() + p.text.size())
            fail("expected a non-negative integer, got '" + std::string(p.text) + "'", p.column);
        return v;
    }

    std::string poly(Piece p, const ContextPtr& ctx) const {
        if (p.text.empty()) fail("expected a polynomial", p.column);
        try {
            return parse_polynomial(p.text, ctx).to_string();
        } catch (const ParseError& e) {
            fail(e.message(), p.column + e.column() - 1);
        }
    }

    std::string name(Piece p) const {
        if (!RingContext::is_user_identifier(std::string(p.text)))
            fail("invalid name '" + std::string(p.text) + "'", p.column);
        return std::string(p.text);
    }

  private:
    std::size_t line_;
};

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view s, std::size_t line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (space(s[i])) {
            ++i;
            continue;
        }
        Token t{{}, i + 1};
        while (i < s.size() && !space(s[i])) {
            if (s[i] == '"') {
                auto close = s.find('"', i + 1);
                if (close == std::string_view::npos) throw ParseError("unterminated quoted value", line, i + 1);
                t.text.append(s.substr(i + 1, close - i - 1));
                i = close + 1;
            } else {
                t.text.push_back(s[i++]);
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

bool needs_quotes(const std::string& v) {
    return v.empty() || std::any_of(v.begin(), v.end(), [](char c) { return space(c) || c == '#' || c == '"'; });
}

}  // namespace

ContextPtr finring_context() {
    static const ContextPtr ctx = make_context(CoefficientDomain::integers(), {"X"});
    return ctx;
}

std::optional<std::string> Command::option(std::string_view key) const {
    for (const auto& [k, v] : options)
        if (k == key) return v;
    return std::nullopt;
}

const Binding* Script::find(std::string_view name) const {
    for (const auto& b : ideals)
        if (b.name == name) return &b;
    return nullptr;
}

Script parse_script(std::string_view text) {
    Script script;
    bool have_tower = false;
    std::set<std::string, std::less<>> names;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        LineParser lp(line_no);

        // strip comments outside quotes
        bool in_quote = false;
        std::size_t cut = raw.size();
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] == '"') in_quote = !in_quote;
            if (raw[i] == '#' && !in_quote) {
                cut = i;
                break;
            }
        }
        Piece line = trim({raw.substr(0, cut), 1});
        if (line.text.empty()) continue;

        auto kw_end = std::find_if(line.text.begin(), line.text.end(), space) - line.text.begin();
        std::string_view keyword = line.text.substr(0, kw_end);
        Piece rest = trim({line.text.substr(kw_end), line.column + kw_end});
        auto ctx = have_tower ? script.tower.context() : nullptr;

        if (keyword == "tower") {
            if (have_tower) lp.fail("a script declares exactly one tower", line.column);
            try {
                script.tower = RingTower::parse(rest.text);
            } catch (const ParseError& e) {
                lp.fail(e.message(), rest.column + e.column() - 1);
            }
            have_tower = true;
            continue;
        }
        if (!have_tower) lp.fail("expected 'tower' before '" + std::string(keyword) + "'", line.column);

        auto known = [&](Piece p) {
            auto n = lp.name(p);
            if (!names.contains(n)) lp.fail("unknown ideal '" + n + "'", p.column);
            return n;
        };

        if (keyword == "ideal") {
            auto eq = rest.text.find('=');
            if (eq == std::string_view::npos) lp.fail("expected 'ideal NAME = ...'", rest.column);
            Piece name_p = trim({rest.text.substr(0, eq), rest.column});
            Piece expr_p = trim({rest.text.substr(eq + 1), rest.column + eq + 1});
            Binding b;
            b.loc = {line_no, line.column};
            b.name = lp.name(name_p);
            if (names.contains(b.name)) lp.fail("duplicate name '" + b.name + "'", name_p.column);
            if (expr_p.text.empty()) lp.fail("expected generators after '='", expr_p.column);

            auto paren = expr_p.text.find('(');
            auto fn = paren == std::string_view::npos ? functions().end()
                                                      : functions().find(trim({expr_p.text.substr(0, paren), 0}).text);
            if (fn != functions().end()) {
                if (expr_p.text.back() != ')') lp.fail("expected ')'", expr_p.column + expr_p.text.size());
                Piece inner{expr_p.text.substr(paren + 1, expr_p.text.size() - paren - 2), expr_p.column + paren + 1};
                auto& e = b.expr;
                e.kind = fn->second;
                using K = IdealExpr::Kind;
                if (e.kind == K::Toric) {
                    auto parts = split(inner, ';');
                    if (parts.size() != 2) lp.fail("expected toric(weights; variables)", inner.column);
                    for (auto w : split(parts[0], ',')) e.numbers.push_back(lp.number(w));
                    for (auto v : split(parts[1], ',')) {
                        auto n = lp.name(v);
                        if (!ctx->index_of(n)) lp.fail("unknown variable '" + n + "'", v.column);
                        e.vars.push_back(n);
                    }
                    if (e.numbers.size() != e.vars.size())
                        lp.fail("toric needs one weight per variable", inner.column);
                } else if (e.kind == K::Quotient || e.kind == K::Saturate) {
                    auto parts = split(inner, ';');
                    if (parts.size() != 2) lp.fail("expected " + fn->first + "(I; f)", inner.column);
                    e.operands.push_back(known(parts[0]));
                    e.polys.push_back(lp.poly(parts[1], ctx));
                } else if (e.kind == K::Power) {
                    auto parts = split(inner, ',');
                    if (parts.size() != 2) lp.fail("expected power(I, t)", inner.column);
                    e.operands.push_back(known(parts[0]));
                    e.numbers.push_back(lp.number(parts[1]));
                    if (e.numbers[0] == 0) lp.fail("power exponent must be at least 1", parts[1].column);
                } else {
                    auto parts = split(inner, ',');
                    if (parts.size() < 2) lp.fail("expected at least two ideals", inner.column);
                    for (auto p : parts) e.operands.push_back(known(p));
                }
            } else {
                for (auto g : split(expr_p, ',')) b.expr.polys.push_back(lp.poly(g, ctx));
            }
            names.insert(b.name);
            script.ideals.push_back(std::move(b));
            continue;
        }

        auto spec_it = specs().find(keyword);
        if (spec_it == specs().end()) lp.fail("unknown command '" + std::string(keyword) + "'", line.column);
        const Spec& spec = spec_it->second;
        Command cmd;
        cmd.verb = std::string(keyword);
        cmd.loc = {line_no, line.column};
        for (auto& tok : tokenize(rest.text, line_no)) {
            std::size_t col = rest.column + tok.column - 1;
            auto eq = tok.text.find('=');
            if (eq == std::string::npos) {
                if (!cmd.options.empty()) lp.fail("positional argument after options", col);
                Piece p{tok.text, col};
                cmd.args.push_back(cmd.verb == "suite" ? tok.text : known(p));
                continue;
            }
            std::string key = tok.text.substr(0, eq), raw_value = tok.text.substr(eq + 1);
            auto opt = spec.options.find(key);
            if (opt == spec.options.end()) lp.fail("unknown option '" + key + "' for " + cmd.verb, col);
            if (cmd.option(key)) lp.fail("option '" + key + "' given twice", col);
            Piece v{raw_value, col + eq + 1};
            std::string value;
            auto choice = [&](std::initializer_list<const char*> allowed) {
                for (auto a : allowed)
                    if (raw_value == a) return raw_value;
                lp.fail("invalid value '" + raw_value + "' for " + key, v.column);
            };
            switch (opt->second) {
                case Value::Number: value = std::to_string(lp.number(v)); break;
                case Value::Poly: value = lp.poly(v, ctx); break;
                case Value::FinPoly: value = lp.poly(v, finring_context()); break;
                case Value::FinPolyList: {
                    std::string joined;
                    for (auto g : split(v, ',')) joined += (joined.empty() ? "" : ", ") + lp.poly(g, finring_context());
                    value = joined;
                    break;
                }
                case Value::Order: value = choice({"lex", "grevlex"}); break;
                case Value::Expect: value = choice({"stable", "unstable"}); break;
                case Value::FoundNone: value = choice({"found", "none"}); break;
                case Value::Mode: value = choice({"profile", "search", "identities", "cross-check"}); break;
            }
            cmd.options.emplace_back(std::move(key), std::move(value));
        }
        if (cmd.args.size() < spec.min_args || cmd.args.size() > spec.max_args)
            lp.fail(cmd.verb + " expects " + std::to_string(spec.min_args) +
                        (spec.min_args == spec.max_args ? "" : " to " + std::to_string(spec.max_args)) +
                        " ideal argument(s)",
                    line.column);
        if (cmd.verb == "suite" && !suite_names.contains(cmd.args[0]))
            lp.fail("unknown suite '" + cmd.args[0] + "'", rest.column);
        for (const auto& r : spec.required)
            if (!cmd.option(r)) lp.fail(cmd.verb + " needs option " + r + "=", line.column);
        script.commands.push_back(std::move(cmd));
    }
    if (!have_tower) throw ParseError("missing 'tower' declaration", line_no, 1);
    return script;
}

std::string print_script(const Script& script) {
    using K = IdealExpr::Kind;
    auto join = [](const auto& xs, const char* sep) {
        std::string out;
        for (const auto& x : xs) {
            if (!out.empty()) out += sep;
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, unsigned>)
                out += std::to_string(x);
            else
                out += x;
        }
        return out;
    };
    std::string out = "tower " + script.tower.to_string() + "\n";
    for (const auto& b : script.ideals) {
        const auto& e = b.expr;
        out += "ideal " + b.name + " = ";
        switch (e.kind) {
            case K::Generators: out += join(e.polys, ", "); break;
            case K::Toric: out += "toric(" + join(e.numbers, ",") + "; " + join(e.vars, ",") + ")"; break;
            case K::Quotient:
            case K::Saturate: out += function_name(e.kind) + "(" + e.operands[0] + "; " + e.polys[0] + ")"; break;
            case K::Power: out += "power(" + e.operands[0] + ", " + std::to_string(e.numbers[0]) + ")"; break;
            default: out += function_name(e.kind) + "(" + join(e.operands, ", ") + ")"; break;
        }
        out += "\n";
    }
    for (const auto& c : script.commands) {
        out += c.verb;
        for (const auto& a : c.args) out += " " + a;
        for (const auto& [k, v] : c.options) out += " " + k + "=" + (needs_quotes(v) ? "\"" + v + "\"" : v);
        out += "\n";
    }
    return out;
}

}  // namespace powerstab
