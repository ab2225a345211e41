#include "state.hpp"

#include <stdexcept>

#include "algebra.hpp"

namespace voa {

State::State(AlgebraPtr alg, Word w, Scalar c) : alg_(std::move(alg)) {
    if (!alg_->is_pbw(w)) throw std::invalid_argument("word is not in PBW normal form");
    add_term(w, c);
}

Scalar State::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void State::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

State State::operator-() const {
    State s(alg_);
    for (const auto& [w, c] : terms_) s.terms_[w] = -c;
    return s;
}

State State::operator+(const State& o) const {
    State s = *this;
    s += o;
    return s;
}

State State::operator-(const State& o) const {
    State s = *this;
    s -= o;
    return s;
}

State& State::operator+=(const State& o) {
    if (!alg_) alg_ = o.alg_;
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

State& State::operator-=(const State& o) {
    if (!alg_) alg_ = o.alg_;
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

State State::operator*(const Scalar& c) const {
    State s(alg_);
    if (c.is_zero()) return s;
    for (const auto& [w, c0] : terms_) s.terms_[w] = c0 * c;
    return s;
}

std::optional<Weight2> State::weight2() const {
    std::optional<Weight2> w;
    for (const auto& [word, c] : terms_) {
        Weight2 cur = alg_->weight2(word);
        if (!w)
            w = cur;
        else if (*w != cur)
            return std::nullopt;
    }
    return w;
}

std::optional<int> State::parity() const {
    std::optional<int> p;
    for (const auto& [word, c] : terms_) {
        int cur = alg_->parity(word);
        if (!p)
            p = cur;
        else if (*p != cur)
            return std::nullopt;
    }
    return p;
}

namespace {

std::string factor_str(const Algebra& alg, const Factor& f) {
    const std::string& name = alg.generator(f.gen).name;
    if (f.dz == 0) return name;
    if (f.dz == 1) return "d " + name;
    return "d^" + std::to_string(f.dz) + " " + name;
}

std::string word_str(const Algebra& alg, const Word& w) {
    if (w.empty()) return "1";
    if (w.size() == 1) return factor_str(alg, w[0]);
    std::string out = ":";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += factor_str(alg, w[i]);
    }
    return out + ":";
}

}  // namespace

std::string State::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        bool neg = false;
        std::string cs;
        if (c.is_rational()) {
            Rational q = c.rational();
            neg = sgn(q) < 0;
            Rational a = abs(q);
            if (!(a == 1) || w.empty()) cs = rat_str(a);
        } else {
            cs = "(" + c.str() + ")";
        }
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string ws = word_str(*alg_, w);
        if (cs.empty())
            out += ws;
        else if (w.empty())
            out += cs;
        else
            out += cs + "*" + ws;
    }
    return out;
}

}  // namespace voa
