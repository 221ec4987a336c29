#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycinv/group_actions.hpp"
#include "cycinv/invariant_core.hpp"
#include "cycinv/s_algebra.hpp"
#include "test_util.hpp"

using namespace cycinv;

namespace {

long power(long base, int exp) {
    long v = 1;
    while (exp-- > 0) v *= base;
    return v;
}

NcPoly<CycNumber> y_monomial_in_x(int d, const std::vector<int>& letters) {
    return substitute(x_to_y_basis_change(d).to_x,
                      NcPoly<CycNumber>::monomial(Word(d, letters), CycNumber(1)));
}

SGeneratorSet<CycNumber> x_gens_subset(std::initializer_list<int> keep) {
    const SGeneratorSet<CycNumber> full = x_basis_s_generators_d3();
    std::vector<NcPoly<CycNumber>> gens;
    for (int i : keep) gens.push_back(full.generators[static_cast<size_t>(i)]);
    return SGeneratorSet<CycNumber>(3, std::move(gens));
}

}  // namespace

TEST_CASE("component spans") {
    SUBCASE("all d variables as generators span the whole component") {
        std::vector<NcPoly<Rational>> vars;
        for (int i = 0; i < 3; ++i) vars.push_back(NcPoly<Rational>::variable(3, i));
        const SGeneratorSet<Rational> gens(3, std::move(vars));
        for (int n = 1; n <= 3; ++n) {
            const auto span = s_component_span(gens, n);
            CHECK(span.rank() == power(3, n));
            CHECK(span.ambient_dimension() == power(3, n));
        }
    }

    SUBCASE("y0 alone spans one line per degree") {
        const SGeneratorSet<Rational> gens(
            3, {NcPoly<Rational>::monomial(Word(3, {0}), Rational(1))});
        CHECK(s_component_span(gens, 2).rank() == 1);
        CHECK(s_component_span(gens, 5).rank() == 1);
    }

    SUBCASE("U(3) spans the invariant component: rank d^(n-1) for n <= 5") {
        const auto gens = cyclic_s_generators(3);
        for (int n = 1; n <= 5; ++n) CHECK(s_component_span(gens, n).rank() == power(3, n - 1));
    }

    SUBCASE("U(4) spans the invariant component: rank 4^(n-1) for n <= 4") {
        const auto gens = cyclic_s_generators(4);
        for (int n = 1; n <= 4; ++n) CHECK(s_component_span(gens, n).rank() == power(4, n - 1));
    }

    SUBCASE("U(5), including the mirror generators, spans for n <= 3") {
        const auto gens = cyclic_s_generators(5);
        REQUIRE(gens.generators.size() == 15);
        for (int n = 1; n <= 3; ++n) CHECK(s_component_span(gens, n).rank() == power(5, n - 1));
    }

    SUBCASE("degree cap") {
        Caps caps;
        caps.s_degree = 3;
        CHECK_THROWS_AS(s_component_span(cyclic_s_generators(3), 4, caps), CapExceeded);
    }
}

TEST_CASE("s-generating sets from the commutative tables") {
    const auto u3 = cyclic_s_generators(3);
    REQUIRE(u3.generators.size() == 4);
    CHECK(u3.generators[0] == NcPoly<Rational>::monomial(Word(3, {0}), Rational(1)));
    CHECK(u3.generators[1] == NcPoly<Rational>::monomial(Word(3, {1, 2}), Rational(1)));
    CHECK(cyclic_s_generators(4).generators.size() == 7);
    CHECK_THROWS_AS(SGeneratorSet<Rational>(3, {NcPoly<Rational>::unit(3)}),
                    std::invalid_argument);
}

TEST_CASE("membership with certificates") {
    SUBCASE("a generator is a member of its own set") {
        const auto gens = cyclic_s_generators(3);
        const auto target = NcPoly<Rational>::monomial(Word(3, {1, 2}), Rational(1));
        const auto result = s_membership(target, gens);
        REQUIRE(result.member);
        CHECK(result.evaluate(gens) == target);
    }

    SUBCASE("y1y2 over {v1, v2} reproduces the displayed certificate") {
        const auto gens = x_gens_subset({0, 1});
        const auto target = y_monomial_in_x(3, {1, 2});
        const auto result = s_membership(target, gens);
        REQUIRE(result.member);
        CHECK(result.evaluate(gens) == target);

        // y1y2 = v1^2 + (eps - 1) v2 + (eps^2 - 1) v2∘(12); the three
        // spanning vectors are independent, so the solved coefficients
        // must match the displayed ones exactly.
        const CycNumber eps = CycNumber::root(3);
        const CycNumber one = CycNumber::one(3);
        REQUIRE(result.certificate.size() == 3);
        for (const auto& term : result.certificate) {
            const auto& indices = term.product.generator_indices;
            if (indices == std::vector<size_t>{0, 0}) {
                CHECK(term.coeff == one);
            } else {
                REQUIRE(indices == std::vector<size_t>{1});
                if (term.product.sigma.is_identity())
                    CHECK(term.coeff == eps - one);
                else
                    CHECK(term.coeff == eps.pow(2) - one);
            }
        }
    }

    SUBCASE("y1^3 is not a member over {v1, v2, v31}") {
        const auto result = s_membership(y_monomial_in_x(3, {1, 1, 1}), x_gens_subset({0, 1, 2}));
        CHECK(!result.member);
        CHECK(result.certificate.empty());
    }

    SUBCASE("y1^3 becomes a member once v32 is added, and re-evaluates") {
        const auto gens = x_basis_s_generators_d3();
        const auto target = y_monomial_in_x(3, {1, 1, 1});
        const auto result = s_membership(target, gens);
        REQUIRE(result.member);
        CHECK(result.evaluate(gens) == target);
    }

    SUBCASE("minimality: dropping any generator loses some target") {
        const std::vector<NcPoly<CycNumber>> targets = {
            y_monomial_in_x(3, {0}), y_monomial_in_x(3, {1, 2}), y_monomial_in_x(3, {1, 1, 1}),
            y_monomial_in_x(3, {2, 2, 2})};
        for (int removed = 0; removed < 4; ++removed) {
            std::initializer_list<int> keeps[] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
            const auto gens = x_gens_subset(keeps[removed]);
            bool some_target_lost = false;
            for (const auto& target : targets)
                if (!s_membership(target, gens).member) some_target_lost = true;
            CHECK(some_target_lost);
        }
    }
}

TEST_CASE("constructive expression through U") {
    SUBCASE("y2y1 sorts to the generator y1y2") {
        const auto cert = express_invariant_via_s_generators(Word(3, {2, 1}));
        REQUIRE(cert.factors.size() == 1);
        CHECK(cert.factors[0] == ExponentVector(3, {0, 1, 1}));
        CHECK(cert.product_word == Word(3, {1, 2}));
        CHECK(cert.regroup_tau.is_identity());
        CHECK(cert.sort_sigma.then(cert.regroup_tau).apply(Word(3, {2, 1})) == cert.product_word);
    }

    SUBCASE("y1y2y0 factors as y0 * (y1y2)") {
        const auto cert = express_invariant_via_s_generators(Word(3, {1, 2, 0}));
        REQUIRE(cert.factors.size() == 2);
        CHECK(cert.factors[0] == ExponentVector(3, {1, 0, 0}));
        CHECK(cert.factors[1] == ExponentVector(3, {0, 1, 1}));
        CHECK(cert.product_word == Word(3, {0, 1, 2}));
        CHECK(cert.sort_sigma.then(cert.regroup_tau).apply(Word(3, {1, 2, 0})) ==
              cert.product_word);
    }

    SUBCASE("certificates re-evaluate on every invariant word, d=3 n<=6, d=4 n<=4") {
        for (int d = 3; d <= 4; ++d)
            for (int n = 1; n <= (d == 3 ? 6 : 4); ++n)
                for (const Word& w : invariant_monomial_basis(d, n)) {
                    const auto cert = express_invariant_via_s_generators(w);
                    CHECK(cert.sort_sigma.then(cert.regroup_tau).apply(w) == cert.product_word);
                    Word rebuilt(d);
                    for (const ExponentVector& f : cert.factors)
                        rebuilt = concat(rebuilt, f.sorted_word());
                    CHECK(rebuilt == cert.product_word);
                }
    }

    SUBCASE("non-invariant input rejected") {
        CHECK_THROWS_AS(express_invariant_via_s_generators(Word(3, {1})), std::domain_error);
    }
}

TEST_CASE("deficiency per degree") {
    const auto y_gens = cyclic_s_generators_cyclotomic(3);

    SUBCASE("products-span ranks behind the counts (d=3)") {
        // Degrees 1..4: the span of permuted products of lower-degree
        // S-subalgebra elements has ranks 0, 1, 7, 27 inside invariant
        // components of dimensions 1, 3, 9, 27.
        const std::vector<long> expected_ranks{0, 1, 7, 27};
        for (int n = 1; n <= 4; ++n)
            CHECK(s_products_span_rank(3, y_gens, n) ==
                  expected_ranks[static_cast<size_t>(n - 1)]);
    }

    SUBCASE("new-generator counts are 1, 1, 2, 0 (d=3)") {
        const std::vector<long> expected{1, 1, 2, 0};
        for (int n = 1; n <= 4; ++n)
            CHECK(s_generator_deficiency(3, y_gens, n) == expected[static_cast<size_t>(n - 1)]);
    }

    SUBCASE("the x-basis generating set gives the same counts") {
        const BasisChange basis = x_to_y_basis_change(3);
        std::vector<NcPoly<CycNumber>> converted;
        for (const auto& g : x_basis_s_generators_d3().generators)
            converted.push_back(substitute(basis.to_y, g));
        const SGeneratorSet<CycNumber> x_in_y(3, std::move(converted));
        for (int n = 1; n <= 4; ++n)
            CHECK(s_generator_deficiency(3, x_in_y, n) == s_generator_deficiency(3, y_gens, n));
    }

    SUBCASE("counts match the degree profile of U for d=4 as well") {
        const auto u4 = cyclic_s_generators_cyclotomic(4);
        // U(4) has degrees 1, 2, 2, 3, 3, 4, 4.
        const std::vector<long> expected{1, 2, 2, 2};
        for (int n = 1; n <= 4; ++n)
            CHECK(s_generator_deficiency(4, u4, n) == expected[static_cast<size_t>(n - 1)]);
    }
}

TEST_CASE("the displayed S-identity catalog") {
    CHECK(verify_s_identity("y1y2"));
    CHECK(verify_s_identity("y1^3"));
    CHECK(verify_s_identity("y2^3"));
    CHECK_THROWS_AS(verify_s_identity("nope"), std::invalid_argument);
    CHECK(s_identity_catalog().size() == 3);
}

TEST_CASE("the symmetrizing transversals in the degree-3 identities") {
    // The v32 words x_i x_j^2 are fixed by (23), so 1 + (23) + (13) is not
    // an orbit transversal for them: it double-counts x_i x_j^2, misses
    // x_j x_i x_j, and the resulting sum differs from the correct one by
    // v32 - v32∘(12).  The catalog therefore symmetrizes v32 with
    // 1 + (12) + (13).
    const auto v32 = x_basis_s_generators_d3().generators[3];
    const std::vector<std::pair<CycNumber, Permutation>> wrong = {
        {CycNumber(1), Permutation::identity(3)},
        {CycNumber(1), Permutation::transposition(3, 2, 3)},
        {CycNumber(1), Permutation::transposition(3, 1, 3)},
    };
    const std::vector<std::pair<CycNumber, Permutation>> right = {
        {CycNumber(1), Permutation::identity(3)},
        {CycNumber(1), Permutation::transposition(3, 1, 2)},
        {CycNumber(1), Permutation::transposition(3, 1, 3)},
    };
    CHECK(v32.apply(Permutation::transposition(3, 2, 3)) == v32);
    CHECK(v32.apply_combo(wrong) - v32.apply_combo(right) ==
          v32 - v32.apply(Permutation::transposition(3, 1, 2)));
    CHECK(!(v32.apply_combo(wrong) == v32.apply_combo(right)));
}

TEST_CASE("row spaces: rank, containment, certificates") {
    RowSpace<Rational> space;
    SparseVec<Rational> a, b, c;
    a.set(0, Rational(1));
    a.set(2, Rational(2));
    b.set(2, Rational(1));
    c.set(0, Rational(3));  // 3a - 6b
    c.set(2, Rational(0));
    space.insert(a);
    space.insert(b);
    CHECK(space.rank() == 2);
    CHECK(space.contains(c));
    const auto combo = space.solve(c);
    REQUIRE(combo.has_value());
    // Re-evaluate the certificate against the inserted rows.
    SparseVec<Rational> rebuilt;
    const std::vector<SparseVec<Rational>> inserted{a, b};
    for (const auto& [index, coeff] : *combo) {
        SparseVec<Rational> scaled = inserted[static_cast<size_t>(index)];
        scaled.scale(coeff);
        for (const auto& [idx, val] : scaled.entries()) rebuilt.add(idx, val);
    }
    CHECK(rebuilt.entries() == c.entries());

    SparseVec<Rational> outside;
    outside.set(7, Rational(1));
    CHECK(!space.contains(outside));
    CHECK(!space.solve(outside).has_value());

    // Dependent insertions do not grow the rank.
    space.insert(c);
    CHECK(space.rank() == 2);
}

TEST_CASE("spans work over both coefficient fields") {
    const auto rational_rank = s_component_span(cyclic_s_generators(3), 3).rank();
    const auto cyclotomic_rank = s_component_span(cyclic_s_generators_cyclotomic(3), 3).rank();
    CHECK(rational_rank == cyclotomic_rank);
}
