#include "cycinv/series.hpp"

#include <sstream>
#include <stdexcept>

namespace cycinv {

RationalSeries::RationalSeries(Poly<Rational> num, Poly<Rational> den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.coeff(0).is_zero())
        throw std::domain_error("RationalSeries: denominator must have nonzero constant term");
    const Rational inv = den_.coeff(0).inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
}

std::vector<Rational> RationalSeries::coefficients(int max_degree) const {
    if (max_degree < 0) return {};
    // den * c = num with den_0 = 1 gives
    // c_n = num_n - sum_{k=1..deg(den)} den_k c_{n-k}.
    std::vector<Rational> c(static_cast<size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n) {
        Rational value = num_.coeff(n);
        for (int k = 1; k <= den_.degree() && k <= n; ++k)
            value -= den_.coeff(k) * c[static_cast<size_t>(n - k)];
        c[static_cast<size_t>(n)] = value;
    }
    return c;
}

RationalSeries RationalSeries::reduced() const {
    RationalFunction<Rational> f = RationalFunction<Rational>::of(num_, den_);
    return RationalSeries(f.num, f.den);
}

std::string RationalSeries::str() const {
    return "(" + poly_str(num_, "t") + ") / (" + poly_str(den_, "t") + ")";
}

std::vector<Rational> series_coefficients_by_division(const Poly<Rational>& num,
                                                      const Poly<Rational>& den, int max_degree) {
    if (den.coeff(0).is_zero())
        throw std::domain_error("series division: denominator must have nonzero constant term");
    if (max_degree < 0) return {};
    std::vector<Rational> c(static_cast<size_t>(max_degree) + 1);
    std::vector<Rational> rem(static_cast<size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n) rem[static_cast<size_t>(n)] = num.coeff(n);
    const Rational inv = den.coeff(0).inverse();
    for (int n = 0; n <= max_degree; ++n) {
        const Rational q = rem[static_cast<size_t>(n)] * inv;
        c[static_cast<size_t>(n)] = q;
        for (int k = 0; k <= den.degree() && n + k <= max_degree; ++k)
            rem[static_cast<size_t>(n + k)] -= q * den.coeff(k);
    }
    return c;
}

std::string poly_str(const Poly<Rational>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.str();
        } else {
            if (!mag.is_one()) os << mag.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace cycinv
