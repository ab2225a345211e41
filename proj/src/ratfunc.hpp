#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace voa {

// Dense univariate polynomial over the rationals, coefficients ascending by
// degree, no trailing zeros. Degree of the zero polynomial is -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Rational c) {
        if (!rat_is_zero(c)) coeffs_.push_back(std::move(c));
    }
    static UniPoly variable() { return UniPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rational& coeff(long k) const;
    const Rational& leading() const { return coeffs_.back(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& c) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    // Exact division with remainder over the field of rationals.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    static UniPoly gcd(UniPoly a, UniPoly b);  // monic gcd, 0 for both zero

    UniPoly pow(long e) const;
    Rational eval(const Rational& x) const;

private:
    void trim() {
        while (!coeffs_.empty() && rat_is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

// Univariate rational function in a named parameter, kept reduced with a
// monic denominator so structural equality is mathematical equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(std::string param, UniPoly num, UniPoly den);
    static RatFunc constant(const std::string& param, Rational c) {
        return RatFunc(param, UniPoly(std::move(c)), UniPoly(Rational(1)));
    }
    static RatFunc variable(const std::string& param) {
        return RatFunc(param, UniPoly::variable(), UniPoly(Rational(1)));
    }
    // Parses +,-,*,/,^, integer literals, parentheses and the parameter name.
    static RatFunc parse(const std::string& text, const std::string& param);

    const std::string& param() const { return param_; }
    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rational constant_value() const;  // requires is_constant()

    // deg num - deg den; the zero function reports degree < 0.
    long degree() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    bool operator==(const RatFunc& o) const;

    // Exact composition f(g); throws if the composed denominator vanishes.
    RatFunc substitute(const RatFunc& g) const;
    RatFunc eval_num(const UniPoly& p) const;  // p(this)

    // Value at a rational point; throws if the denominator vanishes there.
    Rational eval_at(const Rational& x) const;

    // Value at the parameter's point at infinity: leading-coefficient ratio
    // for degree 0, zero for negative degree, error for positive degree.
    Rational limit_infinity() const;

    std::string str() const;

private:
    void reduce();
    std::string param_;
    UniPoly num_, den_;
};

std::string unipoly_str(const UniPoly& p, const std::string& var);

}  // namespace voa
