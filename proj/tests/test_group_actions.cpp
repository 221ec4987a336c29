#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cycinv/group_actions.hpp"
#include "test_util.hpp"

using namespace cycinv;

namespace {

NcPoly<Rational> mono(int alphabet, std::vector<int> letters, long coeff = 1) {
    return NcPoly<Rational>::monomial(Word(alphabet, std::move(letters)), Rational(coeff));
}

}  // namespace

TEST_CASE("cyclic shift matrix") {
    SUBCASE("d=2 is the swap") {
        const auto rho = cyclic_shift_matrix(2);
        CHECK(rho.at(0, 1) == Rational(1));
        CHECK(rho.at(1, 0) == Rational(1));
        CHECK(rho.at(0, 0).is_zero());
    }
    SUBCASE("traces and orders") {
        for (int d = 2; d <= 6; ++d) {
            const auto rho = cyclic_shift_matrix(d);
            for (int k = 1; k < d; ++k) CHECK(rho.pow(k).trace().is_zero());
            CHECK(rho.pow(d) == SquareMatrix<Rational>::identity(d));
            CHECK(SquareMatrix<Rational>::identity(d).trace() == Rational(d));
        }
    }
    CHECK_THROWS_AS(cyclic_shift_matrix(1), std::domain_error);
}

TEST_CASE("matrix groups materialize by closure") {
    for (int d = 2; d <= 6; ++d) {
        const auto group = cyclic_group(d);
        CHECK(group.order() == d);
        CHECK(group.is_closed());
        CHECK(group.contains(SquareMatrix<Rational>::identity(d)));
        for (const auto& g : group.elements()) CHECK(group.contains(g.inverse()));
    }
    CHECK(trivial_group(4).order() == 1);
    CHECK(diagonal_cyclic_group(5).order() == 5);

    SUBCASE("group order cap") {
        Caps caps;
        caps.group_order = 3;
        CHECK_THROWS_AS(cyclic_group(5, caps), CapExceeded);
    }
}

TEST_CASE("substitution action") {
    SUBCASE("identity matrix fixes everything") {
        test::Rng rng(17);
        const auto id = SquareMatrix<Rational>::identity(3);
        for (int trial = 0; trial < 6; ++trial) {
            const auto f = rng.nc_poly(3, 3, 4);
            CHECK(substitute(id, f) == f);
        }
    }

    SUBCASE("rho moves x1x2 to x2x3 for d=3") {
        CHECK(substitute(cyclic_shift_matrix(3), mono(3, {0, 1})) == mono(3, {1, 2}));
    }

    SUBCASE("substitution is multiplicative and degree-preserving") {
        test::Rng rng(31);
        const auto rho = cyclic_shift_matrix(3);
        for (int trial = 0; trial < 8; ++trial) {
            const auto f = rng.nc_poly(3, 2, 3);
            const auto g = rng.nc_poly(3, 2, 3);
            CHECK(substitute(rho, f * g) == substitute(rho, f) * substitute(rho, g));
        }
    }

    SUBCASE("size mismatch rejected") {
        CHECK_THROWS_AS(substitute(cyclic_shift_matrix(2), mono(3, {0})), std::invalid_argument);
    }
}

TEST_CASE("x/y basis change") {
    SUBCASE("d=2: y0 = x1 + x2, y1 = x1 - x2") {
        const auto basis = x_to_y_basis_change(2);
        CHECK(basis.to_x.at(0, 0) == CycNumber::one(2));
        CHECK(basis.to_x.at(0, 1) == CycNumber::one(2));
        CHECK(basis.to_x.at(1, 0) == CycNumber::one(2));
        CHECK(basis.to_x.at(1, 1) == CycNumber(-1));
    }

    SUBCASE("the two matrices are mutually inverse, d=2..6") {
        for (int d = 2; d <= 6; ++d) {
            const auto basis = x_to_y_basis_change(d);
            CHECK(basis.to_x * basis.to_y == SquareMatrix<CycNumber>::identity(d));
        }
    }

    SUBCASE("conjugation diagonalizes the shift with entries eps^k, d=2..6") {
        for (int d = 2; d <= 6; ++d) {
            const auto basis = x_to_y_basis_change(d);
            SquareMatrix<CycNumber> rho(d);
            for (int i = 0; i < d; ++i) rho.at(i, (i + 1) % d) = CycNumber::one(d);
            const auto diag = basis.to_x * rho * basis.to_y;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    CHECK(diag.at(i, j) ==
                          (i == j ? CycNumber::root_power(d, i) : CycNumber::zero(d)));
        }
    }

    SUBCASE("rho(y_k) = eps^k y_k via substitution, d=3") {
        const auto basis = x_to_y_basis_change(3);
        SquareMatrix<CycNumber> rho(3);
        for (int i = 0; i < 3; ++i) rho.at(i, (i + 1) % 3) = CycNumber::one(3);
        for (int k = 0; k < 3; ++k) {
            NcPoly<CycNumber> yk(3);
            for (int j = 0; j < 3; ++j) yk.add_term(Word(3, {j}), basis.to_x.at(k, j));
            CHECK(substitute(rho, yk) == yk.scaled(CycNumber::root_power(3, k)));
        }
    }
}

TEST_CASE("reynolds operator") {
    const auto group = cyclic_group(3);

    SUBCASE("orbit average of x1x2") {
        const auto expected =
            (mono(3, {0, 1}) + mono(3, {1, 2}) + mono(3, {2, 0})).scaled(Rational(1, 3));
        CHECK(reynolds(group, mono(3, {0, 1})) == expected);
    }

    SUBCASE("fixes invariants, is idempotent on random input") {
        test::Rng rng(41);
        for (int trial = 0; trial < 6; ++trial) {
            const auto f = rng.nc_poly(3, 3, 4);
            const auto once = reynolds(group, f);
            CHECK(reynolds(group, once) == once);
        }
    }

    SUBCASE("kills y1 over the diagonal group") {
        const auto diag = diagonal_cyclic_group(3);
        CHECK(reynolds(diag, NcPoly<CycNumber>::monomial(Word(3, {1}), CycNumber(1))).is_zero());
    }

    SUBCASE("output is fixed by every group element") {
        test::Rng rng(73);
        const auto diag = diagonal_cyclic_group(3);
        for (int trial = 0; trial < 4; ++trial) {
            const auto f = to_cyclotomic(rng.nc_poly(3, 3, 4));
            const auto projected = reynolds(diag, f);
            for (const auto& g : diag.elements())
                CHECK(substitute(g, projected) == projected);
        }
    }
}

TEST_CASE("brute-force invariant dimensions") {
    CHECK(invariant_dimension_bruteforce(cyclic_group(3), 1) == 1);
    CHECK(invariant_dimension_bruteforce(cyclic_group(3), 2) == 3);
    CHECK(invariant_dimension_bruteforce(cyclic_group(3), 3) == 9);
    CHECK(invariant_dimension_bruteforce(cyclic_group(4), 3) == 16);
    CHECK(invariant_dimension_bruteforce(trivial_group(2), 3) == 8);

    SUBCASE("diagonal and permutation models agree") {
        for (int d = 2; d <= 4; ++d)
            for (int n = 1; n <= 3; ++n)
                CHECK(invariant_dimension_bruteforce(cyclic_group(d), n) ==
                      invariant_dimension_bruteforce(diagonal_cyclic_group(d), n));
    }

    SUBCASE("ambient cap") {
        Caps caps;
        caps.ambient = 10;
        CHECK_THROWS_AS(invariant_dimension_bruteforce(cyclic_group(3), 4, caps), CapExceeded);
    }
}

TEST_CASE("matrix input from coefficient strings") {
    const auto swap2 = matrix_from_entry_strings<Rational>({{"0", "1"}, {"1", "0"}}, 1);
    CHECK(swap2 == cyclic_shift_matrix(2));
    const auto diag = matrix_from_entry_strings<CycNumber>({{"1", "0"}, {"0", "e"}}, 4);
    CHECK(diag.at(1, 1) == CycNumber::root(4));
    CHECK(matrix_from_entry_strings<Rational>({{"1/2"}}, 1).at(0, 0) == Rational(1, 2));
    CHECK_THROWS_AS(matrix_from_entry_strings<Rational>({{"1", "2"}}, 1), std::invalid_argument);

    // A custom group from string input: the diagonal order-4 subgroup.
    const auto group = FiniteMatrixGroup<CycNumber>::from_generators({diag});
    CHECK(group.order() == 4);
}

TEST_CASE("exact determinants and inverses") {
    test::Rng rng(53);
    for (int trial = 0; trial < 6; ++trial) {
        SquareMatrix<Rational> m(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = rng.rational();
        if (m.determinant().is_zero()) continue;
        CHECK(m * m.inverse() == SquareMatrix<Rational>::identity(3));
    }
    SquareMatrix<Rational> singular(2);
    singular.at(0, 0) = Rational(1);
    singular.at(1, 0) = Rational(2);
    CHECK(singular.determinant().is_zero());
    CHECK_THROWS_AS(singular.inverse(), std::domain_error);
}
