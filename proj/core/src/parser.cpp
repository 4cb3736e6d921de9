#include "coiso/parser.hpp"

#include <cctype>
#include <optional>

namespace coiso {

namespace {

// Fractions with arbitrary polynomial denominators, used only while
// evaluating a literal; finalized against the chart denominator at the end.
struct Frac {
    Poly num, den;
};

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const VarList& vars;

    explicit Parser(const std::string& text, const VarList& v) : s(text), vars(v) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ValidationError("parse error at offset " + std::to_string(pos) + " in \"" + s +
                              "\": " + msg);
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    Frac make_const(const Rat& c) {
        return {Poly::constant(vars, c), Poly::constant(vars, Rat(1))};
    }

    Frac add(const Frac& a, const Frac& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    Frac sub(const Frac& a, const Frac& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    Frac mul(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }
    Frac div(const Frac& a, const Frac& b) {
        if (b.num.is_zero()) fail("division by zero");
        return {a.num * b.den, a.den * b.num};
    }

    Frac parse_expr() {
        Frac v = parse_term();
        for (;;) {
            if (accept('+')) {
                v = add(v, parse_term());
            } else if (accept('-')) {
                v = sub(v, parse_term());
            } else {
                return v;
            }
        }
    }

    Frac parse_term() {
        Frac v = parse_unary();
        for (;;) {
            if (accept('*')) {
                v = mul(v, parse_unary());
            } else if (accept('/')) {
                v = div(v, parse_unary());
            } else {
                skip_ws();
                if (pos < s.size()) {
                    char c = s[pos];
                    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(')
                        fail("juxtaposition is not allowed; use '*'");
                }
                return v;
            }
        }
    }

    Frac parse_unary() {
        bool neg = false;
        for (;;) {
            if (accept('-')) {
                neg = !neg;
            } else if (accept('+')) {
                // no-op
            } else {
                break;
            }
        }
        Frac v = parse_power();
        if (neg) v.num = -v.num;
        return v;
    }

    Frac parse_power() {
        Frac base = parse_atom();
        if (accept('^')) {
            skip_ws();
            bool neg_exp = accept('-');
            std::optional<long> e = parse_integer();
            if (!e) fail("expected integer exponent after '^'");
            long exp = *e;
            if (neg_exp) {
                // a^-k is shorthand for 1/a^k
                return {base.den.pow(static_cast<int>(exp)), base.num.pow(static_cast<int>(exp))};
            }
            return {base.num.pow(static_cast<int>(exp)), base.den.pow(static_cast<int>(exp))};
        }
        return base;
    }

    std::optional<long> parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        return std::stol(s.substr(start, pos - start));
    }

    Frac parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Frac v = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = parse_integer();
            return make_const(Rat(*n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            for (size_t i = 0; i < vars->size(); ++i) {
                if ((*vars)[i] == name)
                    return {Poly::variable(vars, i), Poly::constant(vars, Rat(1))};
            }
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

Frac parse_frac(const std::string& text, const VarList& vars) {
    Parser p(text, vars);
    Frac v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace

Poly parse_poly(const std::string& text, const VarList& vars) {
    Frac f = parse_frac(text, vars);
    if (f.den.is_constant()) {
        if (f.den.constant_value() == 0) throw ValidationError("division by zero in \"" + text + "\"");
        return f.num * (Rat(1) / f.den.constant_value());
    }
    Poly q;
    if (Poly::try_divide(f.num, f.den, q)) return q;
    throw ValidationError("\"" + text + "\" is not a polynomial (nonconstant denominator)");
}

RatFunc parse_ratfunc(const std::string& text, const VarList& vars, const Poly& h) {
    Frac f = parse_frac(text, vars);
    if (f.den.is_constant()) {
        if (f.den.constant_value() == 0) throw ValidationError("division by zero in \"" + text + "\"");
        return RatFunc(f.num * (Rat(1) / f.den.constant_value()), h, 0);
    }
    RatFunc den(f.den, h, 0);
    auto inv = den.inverse();
    if (!inv)
        throw ValidationError("denominator of \"" + text +
                              "\" is not a power of the distinguished denominator " + h.to_string());
    return RatFunc(f.num, h, 0) * (*inv);
}

}  // namespace coiso
