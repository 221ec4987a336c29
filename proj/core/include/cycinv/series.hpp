#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cycinv/cyclotomic.hpp"
#include "cycinv/poly.hpp"
#include "cycinv/rational.hpp"

namespace cycinv {

// Quotient of two polynomials over an exact field, reduced on demand.
// Used to accumulate Molien sums term by term with gcd reduction at each
// step, so polynomial degrees stay bounded by |G| * d.
template <class K>
struct RationalFunction {
    Poly<K> num;
    Poly<K> den = Poly<K>::constant(K(1));

    static RationalFunction of(Poly<K> num, Poly<K> den) {
        if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        RationalFunction f{std::move(num), std::move(den)};
        f.reduce();
        return f;
    }

    void reduce() {
        if (num.is_zero()) {
            den = Poly<K>::constant(K(1));
            return;
        }
        Poly<K> g = gcd(num, den);
        if (g.degree() > 0) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
        // Normalize the denominator to leading coefficient 1.
        const K inv = den.leading().inverse();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return of(a.num * b.den + b.num * a.den, a.den * b.den);
    }

    RationalFunction scaled(const K& s) const { return of(num.scaled(s), den); }
};

// Formal power series represented exactly as num(t)/den(t) with den(0)
// normalized to 1.  Coefficients are extracted by the linear recurrence
// induced by the denominator: constant work per coefficient after setup.
class RationalSeries {
public:
    RationalSeries(Poly<Rational> num, Poly<Rational> den);

    const Poly<Rational>& num() const { return num_; }
    const Poly<Rational>& den() const { return den_; }

    // Coefficients 0..max_degree (empty for a negative bound).
    std::vector<Rational> coefficients(int max_degree) const;

    Rational coefficient(int n) const {
        if (n < 0) throw std::domain_error("RationalSeries: negative coefficient index");
        return coefficients(n).back();
    }

    // Lowest-terms form (den(0) stays 1).
    RationalSeries reduced() const;

    // Equality as rational functions (cross-multiplication).
    friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    // "(1 - 2*t) / (1 - 3*t)" style rendering.
    std::string str() const;

private:
    Poly<Rational> num_;
    Poly<Rational> den_;
};

// Reference implementation of coefficient extraction by naive long
// division of power series; used to cross-check the recurrence.
std::vector<Rational> series_coefficients_by_division(const Poly<Rational>& num,
                                                      const Poly<Rational>& den, int max_degree);

std::string poly_str(const Poly<Rational>& p, const std::string& var);

}  // namespace cycinv
