#include "poly.hpp"

#include <cctype>
#include <stdexcept>

namespace voa {

PolyRing::PolyRing(std::vector<Var> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!index_.emplace(vars_[i].name, i).second)
            throw std::invalid_argument("duplicate variable name: " + vars_[i].name);
    }
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Poly Poly::constant(PolyRingPtr ring, Rational c) {
    Poly p(std::move(ring));
    if (!rat_is_zero(c)) p.terms_[Expo(p.ring_->size(), 0)] = std::move(c);
    return p;
}

Poly Poly::variable(PolyRingPtr ring, std::size_t index) {
    Poly p(std::move(ring));
    Expo e(p.ring_->size(), 0);
    e.at(index) = 1;
    p.terms_[e] = Rational(1);
    return p;
}

void Poly::add_term(const Expo& e, const Rational& c) {
    if (rat_is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (rat_is_zero(it->second)) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly p(ring_);
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    Poly p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e, c);
    return p;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly p(ring_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Expo e = e1;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            p.add_term(e, c1 * c2);
        }
    return p;
}

Poly Poly::operator*(const Rational& c) const {
    Poly p(ring_);
    if (rat_is_zero(c)) return p;
    for (const auto& [e, c0] : terms_) p.terms_[e] = c0 * c;
    return p;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly r = Poly::constant(ring_, Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const { return terms_ == o.terms_; }

Weight2 Poly::term_weight2(const Expo& e) const {
    Weight2 w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * ring_->var(i).weight2;
    return w;
}

std::optional<Weight2> Poly::homogeneous_weight2() const {
    std::optional<Weight2> w;
    for (const auto& [e, c] : terms_) {
        Weight2 tw = term_weight2(e);
        if (!w)
            w = tw;
        else if (*w != tw)
            return std::nullopt;
    }
    return w;
}

Poly Poly::partial(std::size_t var) const {
    Poly p(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo d = e;
        --d[var];
        p.add_term(d, c * Rational(e[var]));
    }
    return p;
}

Poly Poly::apply_derivation(const std::vector<Poly>& var_images) const {
    Poly out(ring_);
    for (std::size_t i = 0; i < ring_->size(); ++i) {
        if (var_images[i].is_zero()) continue;
        out = out + partial(i) * var_images[i];
    }
    return out;
}

Poly Poly::map_variables(PolyRingPtr target, const std::vector<std::size_t>& image) const {
    Poly out(target);
    for (const auto& [e, c] : terms_) {
        Expo t(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) t[image[i]] += e[i];
        out.add_term(t, c);
    }
    return out;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Terms print in descending weight, then reverse-lex, for a stable form.
    std::vector<const std::pair<const Expo, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [this](auto* a, auto* b) {
        Weight2 wa = term_weight2(a->first), wb = term_weight2(b->first);
        if (wa != wb) return wa > wb;
        int da = 0, db = 0;
        for (int e : a->first) da += e;
        for (int e : b->first) db += e;
        if (da != db) return da < db;
        return a->first > b->first;
    });
    for (auto* t : order) {
        const auto& [e, c] = *t;
        Rational a = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->var(i).name;
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += rat_str(a);
        else if (a == 1)
            out += mono;
        else
            out += rat_str(a) + "*" + mono;
    }
    return out;
}

// --- parser -----------------------------------------------------------------

namespace {

struct PolyParser {
    PolyRingPtr ring;
    const std::string& src;
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

    Poly expr() {
        Poly r = term();
        for (;;) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                return r;
        }
    }
    Poly term() {
        Poly r = power();
        for (;;) {
            if (eat('*'))
                r = r * power();
            else
                return r;
        }
    }
    Poly power() {
        Poly base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos;
            while (pos < src.size() && isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            if (pos == start) fail("expected exponent");
            return base.pow(std::stol(src.substr(start, pos - start)));
        }
        return base;
    }
    Poly atom() {
        skip();
        if (pos >= src.size()) fail("unexpected end of input");
        char c = src[pos];
        if (c == '-') {
            ++pos;
            return -atom();
        }
        if (c == '(') {
            ++pos;
            Poly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < src.size() && isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            std::string lit = src.substr(start, pos - start);
            skip();
            if (pos < src.size() && src[pos] == '/') {
                ++pos;
                skip();
                std::size_t dstart = pos;
                while (pos < src.size() && isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
                if (pos == dstart) fail("expected denominator");
                lit += "/" + src.substr(dstart, pos - dstart);
            }
            return Poly::constant(ring, rat_parse(lit));
        }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < src.size() && (isalnum(static_cast<unsigned char>(src[pos])) ||
                                        src[pos] == '_' || src[pos] == '\''))
                ++pos;
            std::string name = src.substr(start, pos - start);
            auto idx = ring->index_of(name);
            if (!idx) fail("unknown variable '" + name + "'");
            return Poly::variable(ring, *idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Poly Poly::parse(PolyRingPtr ring, const std::string& text) {
    PolyParser p{std::move(ring), text};
    Poly r = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace voa
