#include "exprparse.hpp"

#include <cctype>
#include <stdexcept>

namespace voa {

namespace {

struct ExprParser {
    const std::string& src;
    const AlgebraPtr& alg;
    std::size_t pos = 0;

    void skip() {
        while (pos < src.size() && isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < src.size() && src[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("syntax error at position " + std::to_string(pos) + ": " +
                                    what);
    }
    long integer() {
        skip();
        bool neg = eat('-');
        std::size_t start = pos;
        while (pos < src.size() && isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        long v = std::stol(src.substr(start, pos - start));
        return neg ? -v : v;
    }
    bool at_rational() {
        skip();
        return pos < src.size() && isdigit(static_cast<unsigned char>(src[pos]));
    }
    Rational rational() {
        skip();
        std::size_t start = pos;
        while (pos < src.size() && isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) fail("expected number");
        std::string lit = src.substr(start, pos - start);
        std::size_t save = pos;
        skip();
        if (pos < src.size() && src[pos] == '/') {
            ++pos;
            skip();
            std::size_t dstart = pos;
            while (pos < src.size() && isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            if (dstart == pos) fail("expected denominator");
            lit += "/" + src.substr(dstart, pos - dstart);
        } else {
            pos = save;
        }
        return rat_parse(lit);
    }
    std::string ident() {
        skip();
        std::size_t start = pos;
        while (pos < src.size() &&
               (isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
            ++pos;
        if (start == pos) fail("expected identifier");
        return src.substr(start, pos - start);
    }

    State expr() {
        State r = term();
        for (;;) {
            if (eat('+'))
                r += term();
            else if (peek('-')) {
                // binary minus; term() consumes the sign
                r += term();
            } else
                return r;
        }
    }
    State term() {
        bool neg = eat('-');
        Scalar coeff(1);
        bool have_scalar = false;
        if (at_rational()) {
            coeff = Scalar(rational());
            have_scalar = true;
        }
        if (neg) coeff = -coeff;
        skip();
        if (have_scalar) {
            if (eat('*')) return factor() * coeff;
            return alg->vacuum() * coeff;  // pure scalar = multiple of the vacuum
        }
        return factor() * coeff;
    }
    State factor() {
        State lhs = primary();
        skip();
        if (pos < src.size() && src[pos] == '_') {
            ++pos;
            if (!eat('(')) fail("expected '(' after '_'");
            long n = integer();
            if (!eat(')')) fail("expected ')'");
            State rhs = factor();
            return nth_product(lhs, n, rhs);
        }
        return lhs;
    }
    State primary() {
        skip();
        if (pos >= src.size()) fail("unexpected end of input");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            State r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == ':') {
            ++pos;
            std::vector<State> parts;
            for (;;) {
                skip();
                if (pos >= src.size()) fail("unterminated ':...:'");
                if (src[pos] == ':' && parts.size() >= 2) {
                    // could close this group or open a nested one; try the
                    // nested read and fall back to closing
                    std::size_t save = pos;
                    try {
                        parts.push_back(factor());
                        continue;
                    } catch (const std::invalid_argument&) {
                        pos = save;
                        ++pos;
                        break;
                    }
                }
                parts.push_back(factor());
            }
            if (parts.size() < 2) fail("normally ordered group needs at least two factors");
            return iterated_wick(parts);
        }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t save = pos;
            std::string name = ident();
            if (name == "d") {
                long k = 1;
                if (eat('^')) k = integer();
                if (k < 0) fail("negative derivative order");
                return derivative(primary(), k);
            }
            if (name == "omega" && peek('(')) {
                eat('(');
                long a = integer();
                if (!eat(',')) fail("expected ','");
                long b = integer();
                if (!eat(')')) fail("expected ')'");
                if (alg->num_generators() == 0) fail("omega needs a generator");
                return wick(alg->gen_state(0, static_cast<int>(a)),
                            alg->gen_state(0, static_cast<int>(b)));
            }
            auto g = alg->generator_index(name);
            if (!g) {
                pos = save;
                fail("unknown generator '" + name + "'");
            }
            return alg->gen_state(*g);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

State parse_expr(const std::string& src, const AlgebraPtr& h) {
    ExprParser p{src, h};
    State r = p.expr();
    p.skip();
    if (p.pos != src.size()) p.fail("trailing input");
    return r;
}

}  // namespace voa
