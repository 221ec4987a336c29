#include "cycinv/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace cycinv {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("Rational::parse: bad rational '" + std::string(text) + "'");
    if (v.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::operator-() const {
    Rational r(*this);
    r.v_ = -r.v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cycinv
