#include "cycinv/invariant_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace cycinv {

std::vector<Word> invariant_monomial_basis(int d, int degree, const Caps& caps) {
    if (d < 2) throw std::domain_error("invariant_monomial_basis: order must be at least 2");
    if (degree < 1) throw std::domain_error("invariant_monomial_basis: degree must be positive");
    check_ambient_cap(d, degree, caps);
    // Enumerate the d^(n-1) prefixes in lex order; the completing last
    // letter keeps the whole list in deg-lex order.
    std::vector<Word> out;
    for (const Word& prefix : all_words(d, degree - 1)) {
        std::vector<int> letters = prefix.letters();
        letters.push_back(static_cast<int>((d - prefix.letter_sum() % d) % d));
        out.emplace_back(d, std::move(letters));
    }
    return out;
}

bool is_free_generator(const Word& w) {
    if (!w.is_invariant() || w.is_empty())
        throw std::domain_error("is_free_generator: word is not an invariant monomial");
    const int d = w.alphabet_size();
    long sum = 0;
    for (int p = 0; p < w.degree() - 1; ++p) {
        sum += w.letter(p);
        if (sum % d == 0) return false;
    }
    return true;
}

std::map<int, std::vector<Word>> free_generators_up_to_degree(int d, int max_degree,
                                                              const Caps& caps) {
    if (d < 2) throw std::domain_error("free_generators_up_to_degree: order must be at least 2");
    if (max_degree < 1)
        throw std::domain_error("free_generators_up_to_degree: degree must be positive");
    long incomplete = 1;
    for (int n = 1; n <= max_degree; ++n) {
        incomplete *= d - 1;
        if (incomplete > caps.ambient)
            throw CapExceeded("ambient-dimension", caps.ambient, incomplete);
    }

    std::map<int, std::vector<Word>> generators;
    generators[1] = {Word(d, {0})};
    // U_n: words that are not invariant and have no invariant prefix.
    std::vector<Word> frontier;
    for (int i = 1; i < d; ++i) frontier.emplace_back(d, std::vector<int>{i});
    for (int n = 2; n <= max_degree; ++n) {
        std::vector<Word> next_frontier;
        std::vector<Word>& found = generators[n];
        for (const Word& u : frontier) {
            const int completing = static_cast<int>((d - u.letter_sum() % d) % d);
            for (int j = 0; j < d; ++j) {
                std::vector<int> letters = u.letters();
                letters.push_back(j);
                if (j == completing)
                    found.emplace_back(d, std::move(letters));
                else
                    next_frontier.emplace_back(d, std::move(letters));
            }
        }
        std::sort(found.begin(), found.end());
        frontier = std::move(next_frontier);
    }
    return generators;
}

RationalSeries cyclic_hilbert_series(int d) {
    if (d < 2) throw std::domain_error("cyclic_hilbert_series: order must be at least 2");
    Poly<Rational> num({Rational(1), Rational(-(d - 1))});
    Poly<Rational> den({Rational(1), Rational(-d)});
    return RationalSeries(std::move(num), std::move(den));
}

namespace {

// Sum over the group of 1/term(g), scaled by 1/|G|, with gcd reduction at
// each accumulation step.
template <class K, class TermFn>
RationalFunction<K> molien_sum(const FiniteMatrixGroup<K>& group, TermFn&& denominator_of) {
    RationalFunction<K> sum;
    for (const auto& g : group.elements()) {
        Poly<K> den = denominator_of(g);
        if (den.coeff(0).is_zero())
            throw std::domain_error("molien sum: term denominator has zero constant term");
        sum = sum + RationalFunction<K>::of(Poly<K>::constant(K(1)), std::move(den));
    }
    return sum.scaled(K(group.order()).inverse());
}

RationalSeries to_rational_series(const RationalFunction<Rational>& f) {
    return RationalSeries(f.num, f.den);
}

// Over Q(eps) the reduced, constant-term-normalized sum must have
// rational coefficients; this converts and asserts exactly.
RationalSeries to_rational_series(const RationalFunction<CycNumber>& f) {
    const CycNumber c0 = f.den.coeff(0);
    if (c0.is_zero()) throw std::domain_error("molien sum: zero constant term");
    const CycNumber inv = c0.inverse();
    const Poly<CycNumber> num = f.num.scaled(inv);
    const Poly<CycNumber> den = f.den.scaled(inv);
    auto demote = [](const Poly<CycNumber>& p) {
        std::vector<Rational> coeffs(static_cast<size_t>(p.degree()) + 1);
        for (int i = 0; i <= p.degree(); ++i) {
            const CycNumber c = p.coeff(i);
            if (!c.is_rational())
                throw std::logic_error("molien sum: eps-parts did not cancel");
            coeffs[static_cast<size_t>(i)] = c.rational_part();
        }
        return Poly<Rational>(std::move(coeffs));
    };
    return RationalSeries(demote(num), demote(den));
}

template <class K>
RationalSeries noncommutative_molien(const FiniteMatrixGroup<K>& group) {
    return to_rational_series(molien_sum(group, [](const SquareMatrix<K>& g) {
        return Poly<K>({K(1), K() - g.trace()});  // 1 - tr(g) t
    }));
}

template <class K>
RationalSeries commutative_molien(const FiniteMatrixGroup<K>& group) {
    return to_rational_series(molien_sum(
        group, [](const SquareMatrix<K>& g) { return reversed_characteristic_polynomial(g); }));
}

}  // namespace

RationalSeries noncommutative_molien_series(const FiniteMatrixGroup<Rational>& group) {
    return noncommutative_molien(group);
}

RationalSeries noncommutative_molien_series(const FiniteMatrixGroup<CycNumber>& group) {
    return noncommutative_molien(group);
}

RationalSeries commutative_molien_series(const FiniteMatrixGroup<Rational>& group) {
    return commutative_molien(group);
}

RationalSeries commutative_molien_series(const FiniteMatrixGroup<CycNumber>& group) {
    return commutative_molien(group);
}

std::vector<Rational> free_generator_counts_from_hilbert(const RationalSeries& hilbert,
                                                         int max_degree) {
    if (!hilbert.coefficient(0).is_one())
        throw std::domain_error("free_generator_counts_from_hilbert: series must start with 1");
    // g(t) = 1 - 1/H = (num - den)/num for H = num/den.
    RationalSeries g(hilbert.num() - hilbert.den(), hilbert.num());
    std::vector<Rational> coeffs = g.coefficients(max_degree);
    return std::vector<Rational>(coeffs.begin() + 1, coeffs.end());
}

// Bareiss fraction-free elimination on the polynomial matrix I - g t.
template <class K>
Poly<K> reversed_characteristic_polynomial(const SquareMatrix<K>& g) {
    const int n = g.size();
    std::vector<std::vector<Poly<K>>> m(static_cast<size_t>(n),
                                        std::vector<Poly<K>>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<K> coeffs(2);
            if (i == j) coeffs[0] = K(1);
            coeffs[1] = K() - g.at(i, j);
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = Poly<K>(std::move(coeffs));
        }
    Poly<K> prev_pivot = Poly<K>::constant(K(1));
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (m[static_cast<size_t>(k)][static_cast<size_t>(k)].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[static_cast<size_t>(r)][static_cast<size_t>(k)].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return Poly<K>();  // singular over K(t)
            std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(swap_row)]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly<K> value = m[static_cast<size_t>(k)][static_cast<size_t>(k)] *
                                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                                m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                                    m[static_cast<size_t>(k)][static_cast<size_t>(j)];
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = exact_div(value, prev_pivot);
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(k)] = Poly<K>();
        }
        prev_pivot = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    Poly<K> det = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    if (negate) det = -det;
    return det;
}

template Poly<Rational> reversed_characteristic_polynomial(const SquareMatrix<Rational>&);
template Poly<CycNumber> reversed_characteristic_polynomial(const SquareMatrix<CycNumber>&);

}  // namespace cycinv
