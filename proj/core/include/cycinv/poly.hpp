#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace cycinv {

// Dense univariate polynomial over an exact field K.  K must be
// default-constructible to its additive identity, constructible from long,
// and provide +, -, *, inverse(), is_zero() and ==.
//
// Coefficients are stored low degree first; the zero polynomial has an
// empty coefficient vector and degree() == -1.
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(K value) {
        Poly p;
        if (!value.is_zero()) p.c_.push_back(std::move(value));
        return p;
    }

    static Poly monomial(K coeff, int deg) {
        Poly p;
        if (!coeff.is_zero()) {
            p.c_.resize(static_cast<size_t>(deg) + 1);
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K();
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<K>& coeffs() const { return c_; }

    K leading() const {
        if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size()) r[i] = r[i] + a.c_[i];
            if (i < b.c_.size()) r[i] = r[i] + b.c_[i];
        }
        return Poly(std::move(r));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size()) r[i] = r[i] + a.c_[i];
            if (i < b.c_.size()) r[i] = r[i] - b.c_[i];
        }
        return Poly(std::move(r));
    }

    Poly operator-() const {
        std::vector<K> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = K() - c_[i];
        return Poly(std::move(r));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }

    Poly scaled(const K& s) const {
        if (s.is_zero()) return Poly();
        std::vector<K> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    // Euclidean division; the divisor must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly rem = a;
        std::vector<K> quo;
        if (a.degree() >= b.degree())
            quo.resize(static_cast<size_t>(a.degree() - b.degree()) + 1);
        const K lead_inv = b.leading().inverse();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const int shift = rem.degree() - b.degree();
            const K factor = rem.leading() * lead_inv;
            quo[static_cast<size_t>(shift)] = factor;
            for (size_t i = 0; i < b.c_.size(); ++i)
                rem.c_[static_cast<size_t>(shift) + i] =
                    rem.c_[static_cast<size_t>(shift) + i] - factor * b.c_[i];
            rem.trim();
        }
        return {Poly(std::move(quo)), rem};
    }

    // Exact quotient; throws if the remainder is nonzero.
    friend Poly exact_div(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("Poly: division is not exact");
        return q;
    }

    // Monic gcd, with gcd(0, 0) = 0.
    friend Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            (void)q;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) a = a.scaled(a.leading().inverse());
        return a;
    }

    // Extended Euclid: returns (g, u, v) with u*a + v*b = g and g monic.
    friend std::tuple<Poly, Poly, Poly> extended_gcd(Poly a, Poly b) {
        Poly u0 = constant(K(1)), v0, u1, v1 = constant(K(1));
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            a = std::move(b);
            b = std::move(r);
            Poly u2 = u0 - q * u1;
            Poly v2 = v0 - q * v1;
            u0 = std::move(u1);
            v0 = std::move(v1);
            u1 = std::move(u2);
            v1 = std::move(v2);
        }
        if (!a.is_zero()) {
            const K inv = a.leading().inverse();
            a = a.scaled(inv);
            u0 = u0.scaled(inv);
            v0 = v0.scaled(inv);
        }
        return {a, u0, v0};
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

}  // namespace cycinv
