#include "degrowth/parser.hpp"

#include <cctype>
#include <limits>
#include <set>

namespace degrowth {

namespace {

enum class Tok { lparen, rparen, comma, colon, plus, minus, star, slash, caret, integer, variable, end };

struct Token {
    Tok kind;
    std::string text;  // digits for integer / variable
    std::size_t line, column;
};

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::end: return "end of input";
        case Tok::integer: return "number '" + t.text + "'";
        case Tok::variable: return "variable 'z" + t.text + "'";
        default: return "'" + t.text + "'";
    }
}

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < s.size();) {
        const char c = s[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        const std::size_t l = line, cc = col;
        auto digits = [&](std::size_t from) {
            std::size_t j = from;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            return j;
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = digits(i);
            out.push_back({Tok::integer, std::string(s.substr(i, j - i)), l, cc});
            col += j - i;
            i = j;
            continue;
        }
        if (c == 'z') {
            std::size_t j = digits(i + 1);
            if (j == i + 1) throw ParseError("'z' must be followed by a variable index", l, cc);
            out.push_back({Tok::variable, std::string(s.substr(i + 1, j - i - 1)), l, cc});
            col += j - i;
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            case ',': k = Tok::comma; break;
            case ':': k = Tok::colon; break;
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '/': k = Tok::slash; break;
            case '^': k = Tok::caret; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
        }
        out.push_back({k, std::string(1, c), l, cc});
        ++col;
        ++i;
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    MapExpressionAST map() {
        MapExpressionAST ast;
        expect(Tok::lparen, "'(' to open the map");
        ast.components.push_back(expr());
        std::optional<Tok> sep;
        while (peek().kind == Tok::comma || peek().kind == Tok::colon) {
            const Token& t = next();
            if (sep && *sep != t.kind) throw ParseError("mixed ',' and ':' separators", t.line, t.column);
            sep = t.kind;
            ast.components.push_back(expr());
        }
        close_ = peek();
        expect(Tok::rparen, "',' or ')'");
        if (peek().kind != Tok::end) fail("end of input after the map");
        ast.chart = sep == Tok::colon ? Chart::projective : Chart::affine;
        return ast;
    }

    const Token& closing() const { return close_; }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Token close_{Tok::end, "", 1, 1};

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& wanted) const {
        const Token& t = peek();
        throw ParseError("expected " + wanted + ", found " + describe(t), t.line, t.column);
    }

    const Token& expect(Tok k, const std::string& wanted) {
        if (peek().kind != k) fail(wanted);
        return next();
    }

    static Expr node(Expr::Kind k, const Token& at, std::vector<Expr> args) {
        Expr e;
        e.kind = k;
        e.line = at.line;
        e.column = at.column;
        e.args = std::move(args);
        return e;
    }

    Expr expr() {
        Expr lhs = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token& op = next();
            Expr rhs = term();
            lhs = node(op.kind == Tok::plus ? Expr::Kind::add : Expr::Kind::sub, op, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = factor();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const Token& op = next();
            Expr rhs = factor();
            lhs = node(op.kind == Tok::star ? Expr::Kind::mul : Expr::Kind::div, op, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    Expr factor() {
        if (peek().kind == Tok::minus) {
            const Token& op = next();
            return node(Expr::Kind::neg, op, {factor()});
        }
        Expr b = base();
        if (peek().kind == Tok::caret) {
            const Token& op = next();
            if (peek().kind == Tok::minus) {
                const Token& t = peek();
                throw ParseError("negative exponent", t.line, t.column);
            }
            const Token& n = expect(Tok::integer, "a non-negative integer exponent");
            Int v(n.text);
            if (v > std::numeric_limits<std::uint32_t>::max()) throw ParseError("exponent too large", n.line, n.column);
            Expr p = node(Expr::Kind::pow, op, {std::move(b)});
            p.exponent = static_cast<std::uint32_t>(v.get_ui());
            return p;
        }
        return b;
    }

    Expr base() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::variable: {
                next();
                Int v(t.text);
                if (v > 100000) throw ParseError("variable index too large", t.line, t.column);
                Expr e = node(Expr::Kind::variable, t, {});
                e.var = v.get_ui();
                return e;
            }
            case Tok::integer: {
                next();
                Expr e = node(Expr::Kind::literal, t, {});
                // int "/" nat is one literal; "/" before anything else is division.
                if (peek().kind == Tok::slash && toks_[pos_ + 1].kind == Tok::integer) {
                    next();
                    const Token& d = next();
                    Int den(d.text);
                    if (den == 0) throw ParseError("zero denominator", d.line, d.column);
                    e.value = make_rat(Int(t.text), den);
                } else {
                    e.value = Rat(Int(t.text));
                }
                return e;
            }
            case Tok::lparen: {
                next();
                Expr e = expr();
                expect(Tok::rparen, "')'");
                return e;
            }
            default: fail("a variable, number or '('");
        }
    }
};

void collect_vars(const Expr& e, std::set<std::size_t>& vars, const Expr*& highest) {
    if (e.kind == Expr::Kind::variable) {
        vars.insert(e.var);
        if (!highest || e.var > highest->var) highest = &e;
    }
    for (const auto& a : e.args) collect_vars(a, vars, highest);
}

struct Frac {
    Poly num, den;
};

Frac lower(const Expr& e, std::size_t n, bool allow_division) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::variable: return {Poly::variable(n, e.var), Poly::constant(n, Rat(1))};
        case K::literal: return {Poly::constant(n, e.value), Poly::constant(n, Rat(1))};
        case K::neg: {
            Frac a = lower(e.args[0], n, allow_division);
            return {-a.num, a.den};
        }
        case K::pow: {
            Frac a = lower(e.args[0], n, allow_division);
            return {a.num.pow(e.exponent), a.den.pow(e.exponent)};
        }
        case K::add:
        case K::sub: {
            Frac a = lower(e.args[0], n, allow_division), b = lower(e.args[1], n, allow_division);
            if (e.kind == K::sub) b.num = -b.num;
            if (a.den == b.den) return {a.num + b.num, a.den};
            return {a.num * b.den + b.num * a.den, a.den * b.den};
        }
        case K::mul: {
            Frac a = lower(e.args[0], n, allow_division), b = lower(e.args[1], n, allow_division);
            return {a.num * b.num, a.den * b.den};
        }
        case K::div: {
            Frac a = lower(e.args[0], n, allow_division), b = lower(e.args[1], n, allow_division);
            if (b.num.is_zero()) throw ParseError("zero denominator", e.line, e.column);
            if (!allow_division && !b.num.is_constant())
                throw ParseError("division by a polynomial is only allowed in affine charts", e.line, e.column);
            return {a.num * b.den, a.den * b.num};
        }
    }
    throw Error("unreachable");
}

std::vector<Frac> lower_all(const MapExpressionAST& ast) {
    std::vector<Frac> out;
    const std::size_t n = ast.chart == Chart::affine ? ast.dimension : ast.dimension + 1;
    for (const auto& c : ast.components) out.push_back(lower(c, n, ast.chart == Chart::affine));
    return out;
}

}  // namespace

MapExpressionAST parse_map_ast(std::string_view text) {
    Parser p(lex(text));
    MapExpressionAST ast = p.map();
    std::set<std::size_t> vars;
    const Expr* highest = nullptr;
    for (const auto& c : ast.components) collect_vars(c, vars, highest);
    const std::size_t nvars = vars.empty() ? 0 : *vars.rbegin() + 1;
    const Token& close = p.closing();
    for (std::size_t i = 0; i < nvars; ++i)
        if (!vars.count(i))
            throw ParseError("variable z" + std::to_string(i) + " never appears; indices must be contiguous from z0",
                             highest->line, highest->column);
    const std::size_t comps = ast.components.size();
    if (nvars != comps) {
        std::string what = ast.chart == Chart::affine ? "affine map with " : "projective map with ";
        throw ParseError(what + std::to_string(comps) + " components uses " + std::to_string(nvars) +
                             " variables; they must be equal",
                         close.line, close.column);
    }
    if (ast.chart == Chart::projective && comps < 2)
        throw ParseError("projective map needs at least two components", close.line, close.column);
    ast.dimension = ast.chart == Chart::affine ? comps : comps - 1;
    return ast;
}

AffineMapSpec lower_affine(const MapExpressionAST& ast) {
    if (ast.chart == Chart::projective) {
        auto chart = to_affine(lower_projective(ast));
        bool poly = true;
        for (const auto& c : chart) poly = poly && c.is_polynomial();
        if (!poly) return AffineMapSpec::rational(std::move(chart));
        std::vector<Poly> comps;
        for (auto& c : chart) comps.push_back(c.num());
        return AffineMapSpec::polynomial(std::move(comps));
    }
    auto fr = lower_all(ast);
    bool poly = true;
    std::vector<RationalFunction> comps;
    for (std::size_t i = 0; i < fr.size(); ++i) {
        if (fr[i].den.is_zero()) {
            const Expr& e = ast.components[i];
            throw ParseError("zero denominator", e.line, e.column);
        }
        comps.emplace_back(std::move(fr[i].num), std::move(fr[i].den));
        poly = poly && comps.back().is_polynomial();
    }
    if (!poly) return AffineMapSpec::rational(std::move(comps));
    std::vector<Poly> p;
    for (auto& c : comps) p.push_back(c.num());
    return AffineMapSpec::polynomial(std::move(p));
}

ProjectiveMap lower_projective(const MapExpressionAST& ast) {
    if (ast.chart == Chart::affine) return homogenize_map(lower_affine(ast));
    auto fr = lower_all(ast);
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < fr.size(); ++i) {
        // Only constant divisors reach here.
        comps.push_back(fr[i].num * (1 / fr[i].den.constant_term()));
        if (!comps.back().is_homogeneous()) {
            const Expr& e = ast.components[i];
            throw ParseError("projective component is not homogeneous", e.line, e.column);
        }
    }
    std::optional<std::uint64_t> d;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].is_zero()) continue;
        auto di = comps[i].degree().value();
        if (d && *d != di) {
            const Expr& e = ast.components[i];
            throw ParseError("projective components have different degrees", e.line, e.column);
        }
        d = di;
    }
    return ProjectiveMap::from_components(std::move(comps));
}

AffineMapSpec parse_map(std::string_view text) { return lower_affine(parse_map_ast(text)); }

ProjectiveMap parse_projective_map(std::string_view text) { return lower_projective(parse_map_ast(text)); }

std::string render(const AffineMapSpec& m) { return m.to_string(); }
std::string render(const ProjectiveMap& m) { return m.to_string(); }

}  // namespace degrowth
