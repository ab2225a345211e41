#include "ratfunc.hpp"

#include <cctype>
#include <stdexcept>

namespace voa {

namespace {
const Rational kZero(0);
}

const Rational& UniPoly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < coeffs_.size()) c[i] += coeffs_[i];
        if (i < o.coeffs_.size()) c[i] += o.coeffs_[i];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rational& c) const {
    if (rat_is_zero(c)) return UniPoly();
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * c;
    return UniPoly(std::move(v));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw std::domain_error("zero divisor");
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot;
    long db = b.degree();
    long da = static_cast<long>(rem.size()) - 1;
    if (da >= db) quot.assign(static_cast<std::size_t>(da - db + 1), Rational(0));
    while (static_cast<long>(rem.size()) - 1 >= db) {
        while (!rem.empty() && rat_is_zero(rem.back())) rem.pop_back();
        long dr = static_cast<long>(rem.size()) - 1;
        if (dr < db) break;
        Rational f = rem.back() / b.leading();
        quot[static_cast<std::size_t>(dr - db)] = f;
        for (long i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(dr - db + i)] -= f * b.coeff(i);
    }
    q = UniPoly(std::move(quot));
    r = UniPoly(std::move(rem));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (1 / a.leading());
}

UniPoly UniPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    UniPoly r(Rational(1)), base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational r(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

RatFunc::RatFunc(std::string param, UniPoly num, UniPoly den)
    : param_(std::move(param)), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero divisor");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly(Rational(1));
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        UniPoly q, r;
        UniPoly::divmod(num_, g, q, r);
        num_ = q;
        UniPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rational lead = den_.leading();
    if (!(lead == 1)) {
        Rational inv = 1 / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw std::domain_error("not a constant rational function");
    return num_.coeff(0);
}

long RatFunc::degree() const {
    if (num_.is_zero()) return -1;
    return num_.degree() - den_.degree();
}

RatFunc RatFunc::operator-() const { return RatFunc(param_, -num_, den_); }

static void check_param(const RatFunc& a, const RatFunc& b) {
    if (a.param() != b.param())
        throw std::invalid_argument("parameter mismatch: " + a.param() + " vs " + b.param());
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    check_param(*this, o);
    return RatFunc(param_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    check_param(*this, o);
    return RatFunc(param_, num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    check_param(*this, o);
    if (o.is_zero()) throw std::domain_error("zero divisor");
    return RatFunc(param_, num_ * o.den_, den_ * o.num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
    return param_ == o.param_ && num_ == o.num_ && den_ == o.den_;
}

RatFunc RatFunc::eval_num(const UniPoly& p) const {
    RatFunc r = RatFunc::constant(param_, Rational(0));
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        r = r * *this + RatFunc::constant(param_, p.coeff(static_cast<long>(i)));
    return r;
}

RatFunc RatFunc::substitute(const RatFunc& g) const {
    check_param(*this, g);
    RatFunc n = g.eval_num(num_);
    RatFunc d = g.eval_num(den_);
    if (d.is_zero()) throw std::domain_error("composition yields identically-zero denominator");
    return n / d;
}

Rational RatFunc::eval_at(const Rational& x) const {
    Rational d = den_.eval(x);
    if (rat_is_zero(d)) throw std::domain_error("pole at the evaluation point");
    return num_.eval(x) / d;
}

Rational RatFunc::limit_infinity() const {
    long d = degree();
    if (is_zero() || d < 0) return Rational(0);
    if (d > 0) throw std::domain_error("unbounded at infinity");
    return num_.leading() / den_.leading();
}

std::string unipoly_str(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (long k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeff(k);
        if (rat_is_zero(c)) continue;
        Rational a = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        bool unit = (a == 1);
        if (k == 0) {
            out += rat_str(a);
        } else {
            if (!unit) out += rat_str(a) + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::string RatFunc::str() const {
    std::string n = unipoly_str(num_, param_);
    if (den_.degree() == 0) return n;
    return "(" + n + ")/(" + unipoly_str(den_, param_) + ")";
}

// --- parser -----------------------------------------------------------------

namespace {

struct RfParser {
    const std::string& src;
    const std::string& param;
    std::size_t pos = 0;

    void skip() {
        while (pos < src.size() && isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
    }

    RatFunc expr() {
        RatFunc r = term();
        for (;;) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                return r;
        }
    }
    RatFunc term() {
        RatFunc r = unary();
        for (;;) {
            if (eat('*'))
                r = r * unary();
            else if (eat('/'))
                r = r / unary();
            else
                return r;
        }
    }
    RatFunc unary() {
        if (eat('-')) return -unary();
        return power();
    }
    RatFunc power() {
        RatFunc base = atom();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            long e = integer();
            RatFunc r = RatFunc::constant(param, Rational(1));
            for (long i = 0; i < e; ++i) r = r * base;
            if (neg) r = RatFunc::constant(param, Rational(1)) / r;
            return r;
        }
        return base;
    }
    long integer() {
        skip();
        std::size_t start = pos;
        while (pos < src.size() && isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(src.substr(start, pos - start));
    }
    RatFunc atom() {
        skip();
        if (pos >= src.size()) fail("unexpected end of input");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            RatFunc r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < src.size() && isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            return RatFunc::constant(param, Rational(src.substr(start, pos - start)));
        }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < src.size() &&
                   (isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                ++pos;
            std::string name = src.substr(start, pos - start);
            if (name != param) fail("unknown symbol '" + name + "' (parameter is '" + param + "')");
            return RatFunc::variable(param);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

RatFunc RatFunc::parse(const std::string& text, const std::string& param) {
    RfParser p{text, param};
    RatFunc r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace voa
