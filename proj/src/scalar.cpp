#include "scalar.hpp"

#include <stdexcept>

namespace voa {

Scalar Scalar::parse(const std::string& text, const FieldDesc& field) {
    if (field.kind == FieldDesc::kRational) return Scalar(rat_parse(text));
    RatFunc f = RatFunc::parse(text, field.param);
    return Scalar(std::move(f));
}

bool Scalar::is_zero() const {
    if (is_rational()) return rat_is_zero(rational());
    return ratfunc().is_zero();
}

bool Scalar::is_one() const {
    if (is_rational()) return rational() == 1;
    return ratfunc().is_constant() && ratfunc().constant_value() == 1;
}

Rational Scalar::as_rational() const {
    if (is_rational()) return rational();
    return ratfunc().constant_value();
}

namespace {
RatFunc promote(const Scalar& s, const std::string& param) {
    if (s.is_rational()) return RatFunc::constant(param, s.rational());
    return s.ratfunc();
}
}  // namespace

#define VOA_SCALAR_BINOP(op)                                                      \
    Scalar Scalar::operator op(const Scalar& o) const {                          \
        if (is_rational() && o.is_rational()) return Scalar(rational() op o.rational()); \
        const std::string& p = is_rational() ? o.ratfunc().param() : ratfunc().param();  \
        return Scalar(promote(*this, p) op promote(o, p));                       \
    }

VOA_SCALAR_BINOP(+)
VOA_SCALAR_BINOP(-)
VOA_SCALAR_BINOP(*)
#undef VOA_SCALAR_BINOP

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::domain_error("zero divisor");
    if (is_rational() && o.is_rational()) return Scalar(rational() / o.rational());
    const std::string& p = is_rational() ? o.ratfunc().param() : ratfunc().param();
    return Scalar(promote(*this, p) / promote(o, p));
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(-rational());
    return Scalar(-ratfunc());
}

bool Scalar::operator==(const Scalar& o) const {
    if (is_rational() && o.is_rational()) return rational() == o.rational();
    const std::string& p = is_rational() ? o.ratfunc().param() : ratfunc().param();
    return promote(*this, p) == promote(o, p);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("zero divisor");
    if (is_rational()) return Scalar(1 / rational());
    return Scalar(RatFunc::constant(ratfunc().param(), Rational(1)) / ratfunc());
}

std::size_t Scalar::size_hint() const {
    if (is_rational()) return rat_bits(rational());
    const RatFunc& f = ratfunc();
    return 8 * static_cast<std::size_t>(2 + f.num().degree() + f.den().degree());
}

std::string Scalar::str() const {
    if (is_rational()) return rat_str(rational());
    return ratfunc().str();
}

}  // namespace voa
