#include "cycinv/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cycinv {

int euler_phi(int d) {
    if (d < 1) throw std::domain_error("euler_phi: order must be positive");
    int result = d;
    int n = d;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

Poly<Rational> cyclotomic_polynomial(int d) {
    if (d < 1) throw std::domain_error("cyclotomic_polynomial: order must be positive");
    // Phi_e for all divisors e of d, ascending; Phi_d = (x^d - 1) / prod of the others.
    std::map<int, Poly<Rational>> phi;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        std::vector<Rational> binom(static_cast<size_t>(e) + 1);
        binom[0] = Rational(-1);
        binom[static_cast<size_t>(e)] = Rational(1);
        Poly<Rational> num(std::move(binom));  // x^e - 1
        for (const auto& [div, p] : phi)
            if (e % div == 0) num = exact_div(num, p);
        phi.emplace(e, std::move(num));
    }
    return phi.at(d);
}

namespace {

// Per-order reduction data: Phi_d plus remainders of x^k mod Phi_d for
// k = 0 .. 2*(phi-1), covering any product of two reduced elements.
struct FieldData {
    int phi;
    Poly<Rational> minimal;
    std::vector<std::vector<Rational>> xpow_rem;
};

const FieldData& field_data(int d) {
    static std::mutex mu;
    static std::map<int, FieldData> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    FieldData data;
    data.phi = euler_phi(d);
    data.minimal = cyclotomic_polynomial(d);
    data.xpow_rem.resize(static_cast<size_t>(2 * data.phi - 1));
    for (int k = 0; k < 2 * data.phi - 1; ++k) {
        auto [q, r] = divmod(Poly<Rational>::monomial(Rational(1), k), data.minimal);
        (void)q;
        std::vector<Rational> row(static_cast<size_t>(data.phi));
        for (int i = 0; i < data.phi; ++i) row[static_cast<size_t>(i)] = r.coeff(i);
        data.xpow_rem[static_cast<size_t>(k)] = std::move(row);
    }
    return cache.emplace(d, std::move(data)).first->second;
}

}  // namespace

CycNumber::CycNumber(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 1) throw std::domain_error("CycNumber: order must be positive");
    if (static_cast<int>(coeffs_.size()) != euler_phi(order_))
        throw std::domain_error("CycNumber: coefficient vector must have length phi(order)");
}

CycNumber CycNumber::zero(int d) {
    return CycNumber(d, std::vector<Rational>(static_cast<size_t>(euler_phi(d))));
}

CycNumber CycNumber::one(int d) {
    std::vector<Rational> c(static_cast<size_t>(euler_phi(d)));
    c[0] = Rational(1);
    return CycNumber(d, std::move(c));
}

CycNumber CycNumber::root_power(int d, long k) {
    const auto& data = field_data(d);
    long e = k % d;
    if (e < 0) e += d;
    if (e < data.phi) {
        std::vector<Rational> c(static_cast<size_t>(data.phi));
        c[static_cast<size_t>(e)] = Rational(1);
        return CycNumber(d, std::move(c));
    }
    auto [q, r] = divmod(Poly<Rational>::monomial(Rational(1), static_cast<int>(e)), data.minimal);
    (void)q;
    std::vector<Rational> c(static_cast<size_t>(data.phi));
    for (int i = 0; i < data.phi; ++i) c[static_cast<size_t>(i)] = r.coeff(i);
    return CycNumber(d, std::move(c));
}

bool CycNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycNumber::is_one() const {
    if (!coeffs_[0].is_one()) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational CycNumber::rational_part() const {
    if (!is_rational()) throw std::domain_error("CycNumber: value is not rational");
    return coeffs_[0];
}

CycNumber CycNumber::lifted(int order) const {
    if (order_ == order) return *this;
    std::vector<Rational> c(static_cast<size_t>(euler_phi(order)));
    c[0] = coeffs_[0];
    return CycNumber(order, std::move(c));
}

std::pair<CycNumber, CycNumber> CycNumber::aligned(const CycNumber& a, const CycNumber& b) {
    if (a.order_ == b.order_) return {a, b};
    if (a.order_ == 1) return {a.lifted(b.order_), b};
    if (b.order_ == 1) return {a, b.lifted(a.order_)};
    throw std::domain_error("CycNumber: mixed cyclotomic orders " + std::to_string(a.order_) +
                            " and " + std::to_string(b.order_));
}

CycNumber operator+(const CycNumber& a, const CycNumber& b) {
    auto [x, y] = CycNumber::aligned(a, b);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

CycNumber operator-(const CycNumber& a, const CycNumber& b) {
    auto [x, y] = CycNumber::aligned(a, b);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
}

CycNumber CycNumber::operator-() const {
    CycNumber r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    auto [x, y] = CycNumber::aligned(a, b);
    const int d = x.order_;
    const int phi = static_cast<int>(x.coeffs_.size());
    // Raw product, then reduction of the overflow powers via cached tables.
    std::vector<Rational> prod(static_cast<size_t>(2 * phi - 1));
    for (int i = 0; i < phi; ++i) {
        if (x.coeffs_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < phi; ++j) {
            if (y.coeffs_[static_cast<size_t>(j)].is_zero()) continue;
            prod[static_cast<size_t>(i + j)] +=
                x.coeffs_[static_cast<size_t>(i)] * y.coeffs_[static_cast<size_t>(j)];
        }
    }
    if (d == 1) return CycNumber(1, {prod[0]});
    const auto& data = field_data(d);
    std::vector<Rational> out(static_cast<size_t>(phi));
    for (int k = 0; k < 2 * phi - 1; ++k) {
        if (prod[static_cast<size_t>(k)].is_zero()) continue;
        if (k < phi) {
            out[static_cast<size_t>(k)] += prod[static_cast<size_t>(k)];
        } else {
            const auto& rem = data.xpow_rem[static_cast<size_t>(k)];
            for (int i = 0; i < phi; ++i)
                if (!rem[static_cast<size_t>(i)].is_zero())
                    out[static_cast<size_t>(i)] += prod[static_cast<size_t>(k)] * rem[static_cast<size_t>(i)];
        }
    }
    return CycNumber(d, std::move(out));
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CycNumber: inverse of zero");
    if (order_ == 1) return CycNumber(coeffs_[0].inverse());
    Poly<Rational> self(coeffs_);
    auto [g, u, v] = extended_gcd(self, cyclotomic_polynomial(order_));
    (void)v;
    // Phi_d is irreducible over Q, so the gcd with a nonzero residue is 1.
    if (g.degree() != 0)
        throw std::logic_error("CycNumber: non-invertible residue modulo an irreducible polynomial");
    const int phi = static_cast<int>(coeffs_.size());
    std::vector<Rational> out(static_cast<size_t>(phi));
    for (int i = 0; i < phi; ++i) out[static_cast<size_t>(i)] = u.coeff(i);
    return CycNumber(order_, std::move(out));
}

CycNumber CycNumber::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CycNumber base(*this);
    CycNumber acc = order_ == 1 ? CycNumber(1) : CycNumber::one(order_);
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
    // Rational values are equal across representations of any order.
    if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
    if (a.order_ != b.order_) return false;
    return a.coeffs_ == b.coeffs_;
}

int CycNumber::compare(const CycNumber& a, const CycNumber& b) {
    // Consistent with operator==: rational values form one class per
    // value, irrational values compare by (order, coefficients).
    const bool a_rational = a.is_rational();
    const bool b_rational = b.is_rational();
    if (a_rational || b_rational) {
        if (a_rational != b_rational) return a_rational ? -1 : 1;
        auto c = a.coeffs_[0] <=> b.coeffs_[0];
        return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    if (a.order_ != b.order_) return a.order_ < b.order_ ? -1 : 1;
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        auto c = a.coeffs_[i] <=> b.coeffs_[i];
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string CycNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
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
            os << "e";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

namespace {

size_t skip_ws(std::string_view s, size_t i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return i;
}

}  // namespace

CycNumber CycNumber::parse(std::string_view text, int order) {
    const int phi = euler_phi(order);
    std::vector<Rational> coeffs(static_cast<size_t>(phi));
    size_t i = skip_ws(text, 0);
    if (i >= text.size()) throw std::invalid_argument("CycNumber::parse: empty expression");
    bool any = false;
    while (i < text.size()) {
        int sign = 1;
        i = skip_ws(text, i);
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (any || text[i] == '-') sign = text[i] == '-' ? -1 : 1;
            ++i;
            i = skip_ws(text, i);
        } else if (any) {
            throw std::invalid_argument("CycNumber::parse: expected '+' or '-'");
        }
        // term: rational ['*' e-part] | e-part
        Rational coeff(1);
        bool have_coeff = false;
        bool expect_e = false;
        if (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])))) {
            size_t j = i;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
                ++j;
            coeff = Rational::parse(text.substr(i, j - i));
            have_coeff = true;
            i = skip_ws(text, j);
            if (i < text.size() && text[i] == '*') {
                i = skip_ws(text, i + 1);
                expect_e = true;
            }
        }
        long power = 0;
        if (expect_e && (i >= text.size() || text[i] != 'e'))
            throw std::invalid_argument("CycNumber::parse: expected 'e' after '*'");
        if (i < text.size() && text[i] == 'e') {
            ++i;
            power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i) throw std::invalid_argument("CycNumber::parse: missing exponent");
                power = std::stol(std::string(text.substr(i, j - i)));
                i = j;
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("CycNumber::parse: expected coefficient or 'e'");
        }
        CycNumber term = root_power(order, power);
        for (size_t k = 0; k < coeffs.size(); ++k)
            coeffs[k] += term.coeffs_[k] * coeff * Rational(sign);
        any = true;
        i = skip_ws(text, i);
    }
    return CycNumber(order, std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const CycNumber& z) { return os << z.str(); }

}  // namespace cycinv
