#pragma once

#include <string>
#include <variant>

#include "ratfunc.hpp"
#include "rational.hpp"

namespace voa {

// Coefficient field of an algebra instance: the rationals, or univariate
// rational functions in a named parameter. Fixed per handle, never mixed.
struct FieldDesc {
    enum Kind { kRational, kRatFunc } kind = kRational;
    std::string param;  // parameter name when kind == kRatFunc

    bool operator==(const FieldDesc& o) const = default;
    static FieldDesc rational() { return {kRational, ""}; }
    static FieldDesc ratfunc(std::string p) { return {kRatFunc, std::move(p)}; }
};

// A field element. Rational values embed into any rational-function field,
// so arithmetic silently promotes when the kinds differ.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(Rational q) : v_(std::move(q)) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(RatFunc f) : v_(std::move(f)) {}

    static Scalar parse(const std::string& text, const FieldDesc& field);

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_zero() const;
    bool is_one() const;
    const Rational& rational() const { return std::get<Rational>(v_); }
    const RatFunc& ratfunc() const { return std::get<RatFunc>(v_); }
    // The rational value, if this scalar is (a constant equal to) one.
    Rational as_rational() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;

    Scalar inverse() const;
    std::size_t size_hint() const;  // pivot-selection heuristic
    std::string str() const;

private:
    std::variant<Rational, RatFunc> v_;
};

}  // namespace voa
