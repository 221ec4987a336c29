#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "cycinv/commutative.hpp"
#include "cycinv/group_actions.hpp"
#include "cycinv/invariant_core.hpp"
#include "test_util.hpp"

using namespace cycinv;

namespace {

long power(long base, int exp) {
    long v = 1;
    while (exp-- > 0) v *= base;
    return v;
}

// Z-word factorization counter: the number of ways to write w as a
// concatenation of free generators, by prefix dynamic programming.
long factorization_count(const Word& w, const std::map<int, std::vector<Word>>& z_sets) {
    const int n = w.degree();
    std::vector<long> ways(static_cast<size_t>(n) + 1);
    ways[0] = 1;
    for (int end = 1; end <= n; ++end)
        for (int start = 0; start < end; ++start) {
            if (ways[static_cast<size_t>(start)] == 0) continue;
            auto it = z_sets.find(end - start);
            if (it == z_sets.end()) continue;
            const Word segment(w.alphabet_size(),
                               std::vector<int>(w.letters().begin() + start,
                                                w.letters().begin() + end));
            for (const Word& z : it->second)
                if (z == segment) {
                    ways[static_cast<size_t>(end)] += ways[static_cast<size_t>(start)];
                    break;
                }
        }
    return ways[static_cast<size_t>(n)];
}

}  // namespace

TEST_CASE("invariant monomial basis") {
    SUBCASE("d=3, n=1 is just y0") {
        CHECK(invariant_monomial_basis(3, 1) == std::vector<Word>{Word(3, {0})});
    }

    SUBCASE("d=3, n=2 matches the exhaustive filter") {
        const auto basis = invariant_monomial_basis(3, 2);
        CHECK(basis == std::vector<Word>({Word(3, {0, 0}), Word(3, {1, 2}), Word(3, {2, 1})}));
        std::vector<Word> filtered;
        for (const Word& w : all_words(3, 2))
            if (w.letter_sum() % 3 == 0) filtered.push_back(w);
        CHECK(basis == filtered);
    }

    SUBCASE("d=2, n=3 matches the exhaustive filter") {
        const auto basis = invariant_monomial_basis(2, 3);
        CHECK(basis == std::vector<Word>({Word(2, {0, 0, 0}), Word(2, {0, 1, 1}),
                                          Word(2, {1, 0, 1}), Word(2, {1, 1, 0})}));
    }

    SUBCASE("counts are d^(n-1) and agree with the brute-force rank") {
        for (int d = 2; d <= 4; ++d)
            for (int n = 1; n <= 4; ++n) {
                const auto basis = invariant_monomial_basis(d, n);
                CHECK(static_cast<long>(basis.size()) == power(d, n - 1));
                CHECK(static_cast<long>(basis.size()) ==
                      invariant_dimension_bruteforce(cyclic_group(d), n));
                for (const Word& w : basis) CHECK(w.letter_sum() % d == 0);
            }
    }

    SUBCASE("cap") {
        Caps caps;
        caps.ambient = 8;
        CHECK_THROWS_AS(invariant_monomial_basis(3, 2, caps), CapExceeded);
    }
}

TEST_CASE("free generator predicate") {
    CHECK(is_free_generator(Word(3, {0})));
    CHECK(is_free_generator(Word(3, {1, 2})));
    CHECK(!is_free_generator(Word(3, {0, 0})));
    CHECK(is_free_generator(Word(3, {1, 1, 1})));
    CHECK(!is_free_generator(Word(3, {1, 2, 0})));
    CHECK_THROWS_AS(is_free_generator(Word(3, {1})), std::domain_error);
}

TEST_CASE("inductive free generator construction") {
    SUBCASE("d=3: Z1, Z2 and |Z3|") {
        const auto z = free_generators_up_to_degree(3, 3);
        CHECK(z.at(1) == std::vector<Word>{Word(3, {0})});
        CHECK(z.at(2) == std::vector<Word>({Word(3, {1, 2}), Word(3, {2, 1})}));
        CHECK(z.at(3).size() == 4);
    }

    SUBCASE("|Z_4| = 27 for d=4, cross-checked against the prefix filter") {
        const auto z = free_generators_up_to_degree(4, 4);
        CHECK(z.at(4).size() == 27);
        for (int n = 1; n <= 4; ++n) {
            std::vector<Word> filtered;
            for (const Word& w : invariant_monomial_basis(4, n))
                if (is_free_generator(w)) filtered.push_back(w);
            CHECK(z.at(n) == filtered);
        }
    }

    SUBCASE("counts follow (d-1)^(n-1)") {
        for (int d = 2; d <= 5; ++d) {
            const auto z = free_generators_up_to_degree(d, 5);
            CHECK(z.at(1).size() == 1);
            for (int n = 2; n <= 5; ++n)
                CHECK(static_cast<long>(z.at(n).size()) == power(d - 1, n - 1));
        }
    }
}

TEST_CASE("unique factorization into Z-words (d=3, n <= 6)") {
    const auto z_sets = free_generators_up_to_degree(3, 6);
    for (int n = 1; n <= 6; ++n) {
        long total = 0;
        for (const Word& w : invariant_monomial_basis(3, n)) {
            const long count = factorization_count(w, z_sets);
            CHECK(count == 1);
            total += count;
        }
        CHECK(total == power(3, n - 1));
    }
}

TEST_CASE("rational series") {
    const RationalSeries h = cyclic_hilbert_series(3);

    SUBCASE("recurrence matches naive long division for 50 coefficients") {
        const auto fast = h.coefficients(50);
        const auto slow = series_coefficients_by_division(h.num(), h.den(), 50);
        CHECK(fast == slow);
    }

    SUBCASE("denominator constant term normalizes to 1") {
        const RationalSeries s(Poly<Rational>({Rational(2)}),
                               Poly<Rational>({Rational(2), Rational(-4)}));
        CHECK(s.den().coeff(0) == Rational(1));
        CHECK(s.coefficients(2) == std::vector<Rational>({Rational(1), Rational(2), Rational(4)}));
        CHECK_THROWS_AS(RationalSeries(Poly<Rational>({Rational(1)}),
                                       Poly<Rational>({Rational(0), Rational(1)})),
                        std::domain_error);
    }
}

TEST_CASE("cyclic Hilbert series") {
    for (int d = 2; d <= 5; ++d) {
        const auto coeffs = cyclic_hilbert_series(d).coefficients(8);
        CHECK(coeffs[0] == Rational(1));
        for (int n = 1; n <= 8; ++n) CHECK(coeffs[static_cast<size_t>(n)] == Rational(power(d, n - 1)));
    }
    CHECK_THROWS_AS(cyclic_hilbert_series(1), std::domain_error);
}

TEST_CASE("noncommutative Molien series") {
    SUBCASE("C_d reduces to (1-(d-1)t)/(1-dt) as a rational function") {
        for (int d = 2; d <= 5; ++d) {
            const RationalSeries molien = noncommutative_molien_series(cyclic_group(d));
            CHECK(molien == cyclic_hilbert_series(d));
            const RationalSeries reduced = molien.reduced();
            CHECK(reduced.num() == Poly<Rational>({Rational(1), Rational(-(d - 1))}));
            CHECK(reduced.den() == Poly<Rational>({Rational(1), Rational(-d)}));
        }
    }

    SUBCASE("trivial group gives the whole algebra 1/(1-dt)") {
        for (int d = 2; d <= 4; ++d) {
            const RationalSeries expected(Poly<Rational>({Rational(1)}),
                                          Poly<Rational>({Rational(1), Rational(-d)}));
            CHECK(noncommutative_molien_series(trivial_group(d)) == expected);
        }
    }

    SUBCASE("C4 coefficients 1,1,4,16,64 match the brute-force oracle") {
        const auto coeffs = noncommutative_molien_series(cyclic_group(4)).coefficients(4);
        const std::vector<Rational> expected{Rational(1), Rational(1), Rational(4), Rational(16),
                                             Rational(64)};
        CHECK(coeffs == expected);
        for (int n = 1; n <= 4; ++n)
            CHECK(coeffs[static_cast<size_t>(n)] ==
                  Rational(invariant_dimension_bruteforce(cyclic_group(4), n)));
    }
}

TEST_CASE("commutative Molien series") {
    SUBCASE("C_1 on d variables is 1/(1-t)^d") {
        for (int d = 2; d <= 4; ++d) {
            Poly<Rational> den = Poly<Rational>::constant(Rational(1));
            for (int i = 0; i < d; ++i) den = den * Poly<Rational>({Rational(1), Rational(-1)});
            CHECK(commutative_molien_series(trivial_group(d)) ==
                  RationalSeries(Poly<Rational>({Rational(1)}), den));
        }
    }

    SUBCASE("coefficients equal the weight-congruence counts, d=3,4,5") {
        for (int d = 3; d <= 5; ++d) {
            const auto coeffs = commutative_molien_series(cyclic_group(d)).coefficients(6);
            for (int n = 0; n <= 6; ++n)
                CHECK(coeffs[static_cast<size_t>(n)] ==
                      Rational(count_invariant_monomials(d, n, true)));
        }
    }

    SUBCASE("over Q(eps) the eps-parts cancel and both models agree") {
        for (int d = 3; d <= 5; ++d)
            CHECK(commutative_molien_series(diagonal_cyclic_group(d)) ==
                  commutative_molien_series(cyclic_group(d)));
    }
}

TEST_CASE("free generator counts from the Hilbert series") {
    SUBCASE("cyclic series gives 1, d-1, (d-1)^2, ...") {
        for (int d = 3; d <= 4; ++d) {
            const auto counts = free_generator_counts_from_hilbert(cyclic_hilbert_series(d), 5);
            for (int n = 1; n <= 5; ++n)
                CHECK(counts[static_cast<size_t>(n - 1)] == Rational(power(d - 1, n - 1)));
        }
    }

    SUBCASE("free algebra itself: d, 0, 0, ...") {
        const RationalSeries whole(Poly<Rational>({Rational(1)}),
                                   Poly<Rational>({Rational(1), Rational(-3)}));
        const auto counts = free_generator_counts_from_hilbert(whole, 4);
        CHECK(counts ==
              std::vector<Rational>({Rational(3), Rational(0), Rational(0), Rational(0)}));
    }

    SUBCASE("d=4: series inversion cross-checked against |Z_n| and long division") {
        const auto counts = free_generator_counts_from_hilbert(cyclic_hilbert_series(4), 4);
        const auto z = free_generators_up_to_degree(4, 4);
        for (int n = 1; n <= 4; ++n)
            CHECK(counts[static_cast<size_t>(n - 1)] ==
                  Rational(static_cast<long>(z.at(n).size())));
        // Independent route: long-divide (H - den)/num directly.
        const RationalSeries h = cyclic_hilbert_series(4);
        const auto by_division =
            series_coefficients_by_division(h.num() - h.den(), h.num(), 4);
        for (int n = 1; n <= 4; ++n)
            CHECK(counts[static_cast<size_t>(n - 1)] == by_division[static_cast<size_t>(n)]);
    }

    SUBCASE("zero constant term rejected") {
        const RationalSeries shifted(Poly<Rational>({Rational(0), Rational(1)}),
                                     Poly<Rational>({Rational(1)}));
        CHECK_THROWS_AS(free_generator_counts_from_hilbert(shifted, 3), std::domain_error);
    }
}

TEST_CASE("series coefficients are field-independent across models") {
    // The permutation model lives over Q, the diagonal model over Q(eps);
    // the invariant dimensions they produce must be identical.
    for (int d = 2; d <= 4; ++d)
        CHECK(noncommutative_molien_series(cyclic_group(d)) ==
              noncommutative_molien_series(diagonal_cyclic_group(d)));
}
