#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cycinv/poly.hpp"
#include "cycinv/rational.hpp"

namespace cycinv {

int euler_phi(int d);

// Phi_d(x), computed by exact division of x^d - 1 by the product of
// Phi_e(x) over the proper divisors e of d.  Integer coefficients,
// degree euler_phi(d).
Poly<Rational> cyclotomic_polynomial(int d);

// Element of the cyclotomic field Q(eps_d) = Q[x]/(Phi_d), held as the
// power-basis coefficient vector 1, x, ..., x^(phi(d)-1).
//
// Order 1 is the rational subfield (Phi_1 = x - 1, so eps = 1); a value
// of order 1 embeds implicitly into any Q(eps_d), which realizes the one
// permitted coercion Q -> Q(eps_d).  Any other order mismatch is a
// domain error.
class CycNumber {
public:
    CycNumber() : order_(1), coeffs_(1) {}
    CycNumber(long n) : order_(1), coeffs_{Rational(n)} {}
    explicit CycNumber(Rational r) : order_(1), coeffs_{std::move(r)} {}
    CycNumber(int order, std::vector<Rational> coeffs);

    static CycNumber zero(int d);
    static CycNumber one(int d);
    // eps_d^k with the exponent reduced mod d.
    static CycNumber root_power(int d, long k);
    static CycNumber root(int d) { return root_power(d, 1); }

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_part() const;  // requires is_rational()

    friend CycNumber operator+(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator-(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
    CycNumber operator-() const;
    CycNumber inverse() const;
    CycNumber pow(long k) const;

    friend bool operator==(const CycNumber& a, const CycNumber& b);

    // Total order for canonical containers; no arithmetic meaning.
    static int compare(const CycNumber& a, const CycNumber& b);

    // Polynomial in `e`, e.g. "1 - e + 2*e^2"; "0" for zero.
    std::string str() const;
    static CycNumber parse(std::string_view text, int order);

private:
    // Aligns orders (lifting order-1 values) or throws.
    static std::pair<CycNumber, CycNumber> aligned(const CycNumber& a, const CycNumber& b);
    CycNumber lifted(int order) const;

    int order_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycNumber& z);

}  // namespace cycinv
