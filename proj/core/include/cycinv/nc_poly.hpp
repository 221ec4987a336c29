#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cycinv/cyclotomic.hpp"
#include "cycinv/permutation.hpp"
#include "cycinv/rational.hpp"
#include "cycinv/word.hpp"

namespace cycinv {

// Coefficient text I/O, specialized per field.  `order` is the cyclotomic
// order for Q(eps) coefficients and is ignored over Q.
template <class K>
struct CoeffIO;

template <>
struct CoeffIO<Rational> {
    static Rational parse(std::string_view s, int /*order*/) { return Rational::parse(s); }
    static std::string str(const Rational& c) { return c.str(); }
    // Splits a leading minus off for rendering; returns true if negative.
    static bool split_sign(const Rational& c, Rational& magnitude) {
        magnitude = c.abs();
        return c.sign() < 0;
    }
    static bool needs_parens(const Rational&) { return false; }
};

template <>
struct CoeffIO<CycNumber> {
    static CycNumber parse(std::string_view s, int order) { return CycNumber::parse(s, order); }
    static std::string str(const CycNumber& c) { return c.str(); }
    static bool split_sign(const CycNumber& c, CycNumber& magnitude) {
        if (c.is_rational() && c.rational_part().sign() < 0) {
            magnitude = -c;
            return true;
        }
        magnitude = c;
        return false;
    }
    static bool needs_parens(const CycNumber& c) { return !c.is_rational(); }
};

// Graded polynomial of the free associative algebra over an exact field K
// (Q or Q(eps_d)).  Words multiply by concatenation; terms are kept in
// canonical form: deg-lex ordered, no zero coefficients.
template <class K>
class NcPoly {
public:
    explicit NcPoly(int alphabet_size) : alphabet_(alphabet_size) {
        if (alphabet_ < 1) throw std::invalid_argument("NcPoly: alphabet size must be positive");
    }

    static NcPoly monomial(const Word& w, K coeff) {
        NcPoly p(w.alphabet_size());
        p.add_term(w, std::move(coeff));
        return p;
    }

    static NcPoly unit(int alphabet_size, K one = K(1)) {
        return monomial(Word(alphabet_size), std::move(one));
    }

    static NcPoly variable(int alphabet_size, int index, K one = K(1)) {
        return monomial(Word(alphabet_size, {index}), std::move(one));
    }

    int alphabet_size() const { return alphabet_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, K>& terms() const { return terms_; }

    K coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? K() : it->second;
    }

    void add_term(const Word& w, K coeff) {
        if (w.alphabet_size() != alphabet_)
            throw std::invalid_argument("NcPoly: word alphabet mismatch");
        if (coeff.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, std::move(coeff));
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend NcPoly operator+(NcPoly a, const NcPoly& b) {
        a.check_compatible(b);
        for (const auto& [w, c] : b.terms_) a.add_term(w, c);
        return a;
    }

    friend NcPoly operator-(NcPoly a, const NcPoly& b) {
        a.check_compatible(b);
        for (const auto& [w, c] : b.terms_) a.add_term(w, K() - c);
        return a;
    }

    NcPoly operator-() const {
        NcPoly r(alphabet_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, K() - c);
        return r;
    }

    NcPoly scaled(const K& s) const {
        NcPoly r(alphabet_);
        if (s.is_zero()) return r;
        for (const auto& [w, c] : terms_) r.add_term(w, c * s);
        return r;
    }

    // Free product: bilinear extension of word concatenation.
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
        a.check_compatible(b);
        NcPoly r(a.alphabet_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
        return r;
    }

    friend bool operator==(const NcPoly& a, const NcPoly& b) {
        return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
    }

    int degree() const {
        int deg = 0;
        for (const auto& [w, c] : terms_) deg = std::max(deg, w.degree());
        return deg;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int deg = terms_.begin()->first.degree();
        for (const auto& [w, c] : terms_)
            if (w.degree() != deg) return false;
        return true;
    }

    // Degree shared by all terms; throws on inhomogeneous input.
    int homogeneous_degree() const {
        if (!is_homogeneous()) throw std::domain_error("NcPoly: polynomial is not homogeneous");
        return terms_.empty() ? 0 : terms_.begin()->first.degree();
    }

    NcPoly homogeneous_component(int n) const {
        NcPoly r(alphabet_);
        for (const auto& [w, c] : terms_)
            if (w.degree() == n) r.terms_.emplace(w, c);
        return r;
    }

    // Position action w -> w ∘ sigma on a homogeneous polynomial.
    NcPoly apply(const Permutation& sigma) const {
        if (homogeneous_degree() != sigma.degree() && !is_zero())
            throw std::domain_error("NcPoly: permutation degree does not match polynomial degree");
        NcPoly r(alphabet_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(sigma.apply(w), c);
        return r;
    }

    // Linear extension of the action to a formal sum of permutations.
    NcPoly apply_combo(const std::vector<std::pair<K, Permutation>>& combo) const {
        NcPoly r(alphabet_);
        for (const auto& [coeff, sigma] : combo) r = r + apply(sigma).scaled(coeff);
        return r;
    }

    std::string str(VarStyle style) const;

    // Parses "2*x1*x2*x1 - x2^3" style text.  Accepts rational scalars and,
    // over Q(eps), parenthesized coefficients like "(1 - e)*x1".  The
    // variable letter must match the style implied by its name: x is
    // 1-based, y is 0-based.  `field_order` is the cyclotomic order used
    // to parse coefficients (ignored over Q).
    static NcPoly parse(std::string_view text, int alphabet_size, int field_order);

private:
    void check_compatible(const NcPoly& o) const {
        if (alphabet_ != o.alphabet_)
            throw std::invalid_argument("NcPoly: alphabet size mismatch");
    }

    int alphabet_;
    std::map<Word, K> terms_;
};

template <class K>
std::string NcPoly<K>::str(VarStyle style) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        K magnitude;
        const bool negative = CoeffIO<K>::split_sign(c, magnitude);
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        const bool parens = CoeffIO<K>::needs_parens(magnitude);
        std::string cs = CoeffIO<K>::str(magnitude);
        if (w.is_empty()) {
            os << (parens ? "(" + cs + ")" : cs);
        } else if (magnitude.is_one()) {
            os << w.str(style);
        } else {
            os << (parens ? "(" + cs + ")" : cs) << "*" << w.str(style);
        }
    }
    return os.str();
}

namespace detail {

inline size_t skip_spaces(std::string_view s, size_t i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i;
}

}  // namespace detail

template <class K>
NcPoly<K> NcPoly<K>::parse(std::string_view text, int alphabet_size, int field_order) {
    NcPoly<K> result(alphabet_size);
    size_t i = detail::skip_spaces(text, 0);
    if (i >= text.size()) throw std::invalid_argument("NcPoly::parse: empty polynomial");
    bool any_term = false;
    while (i < text.size()) {
        bool negative = false;
        if (text[i] == '+' || text[i] == '-') {
            negative = text[i] == '-';
            i = detail::skip_spaces(text, i + 1);
        } else if (any_term) {
            throw std::invalid_argument("NcPoly::parse: expected '+' or '-' between terms");
        }
        K coeff(1);
        std::vector<int> letters;
        bool expect_factor = true;
        while (expect_factor) {
            if (i >= text.size()) throw std::invalid_argument("NcPoly::parse: unexpected end of input");
            if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                size_t j = i;
                while (j < text.size() &&
                       (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
                    ++j;
                coeff = coeff * CoeffIO<K>::parse(text.substr(i, j - i), field_order);
                i = j;
            } else if (text[i] == '(') {
                size_t j = i + 1;
                int depth = 1;
                while (j < text.size() && depth > 0) {
                    if (text[j] == '(') ++depth;
                    if (text[j] == ')') --depth;
                    ++j;
                }
                if (depth != 0) throw std::invalid_argument("NcPoly::parse: unbalanced parentheses");
                coeff = coeff * CoeffIO<K>::parse(text.substr(i + 1, j - i - 2), field_order);
                i = j;
            } else if (text[i] == 'x' || text[i] == 'y') {
                const bool x_style = text[i] == 'x';
                size_t j = i + 1;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                if (j == i + 1) throw std::invalid_argument("NcPoly::parse: variable without index");
                int index = std::stoi(std::string(text.substr(i + 1, j - i - 1)));
                index -= x_style ? 1 : 0;
                if (index < 0 || index >= alphabet_size)
                    throw std::invalid_argument("NcPoly::parse: variable index out of range");
                i = j;
                long power = 1;
                if (i < text.size() && text[i] == '^') {
                    size_t k = i + 1;
                    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                    if (k == i + 1) throw std::invalid_argument("NcPoly::parse: missing exponent");
                    power = std::stol(std::string(text.substr(i + 1, k - i - 1)));
                    i = k;
                }
                for (long p = 0; p < power; ++p) letters.push_back(index);
            } else {
                throw std::invalid_argument(std::string("NcPoly::parse: unexpected character '") +
                                            text[i] + "'");
            }
            i = detail::skip_spaces(text, i);
            if (i < text.size() && text[i] == '*') {
                i = detail::skip_spaces(text, i + 1);
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        if (negative) coeff = K() - coeff;
        result.add_term(Word(alphabet_size, std::move(letters)), std::move(coeff));
        any_term = true;
        i = detail::skip_spaces(text, i);
    }
    return result;
}

// Explicit embedding Q -> Q(eps); the coefficients come out as order-1
// values that lift automatically in mixed arithmetic.
inline NcPoly<CycNumber> to_cyclotomic(const NcPoly<Rational>& f) {
    NcPoly<CycNumber> r(f.alphabet_size());
    for (const auto& [w, c] : f.terms()) r.add_term(w, CycNumber(c));
    return r;
}

}  // namespace cycinv
