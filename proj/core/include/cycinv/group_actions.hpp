#pragma once

#include <vector>

#include "cycinv/config.hpp"
#include "cycinv/linear.hpp"
#include "cycinv/matrix.hpp"
#include "cycinv/nc_poly.hpp"

namespace cycinv {

// The generator rho of C_d: the permutation matrix sending
// x1 -> x2 -> ... -> xd -> x1.  Row i holds the image of x_{i+1}, so
// tr(rho^k) = 0 for k = 1..d-1 and rho^d = I.
SquareMatrix<Rational> cyclic_shift_matrix(int d);

// C_d materialized as the d permutation matrices rho^0..rho^{d-1}.
FiniteMatrixGroup<Rational> cyclic_group(int d, const Caps& caps = Caps{});

// The trivial subgroup {I_d}.
FiniteMatrixGroup<Rational> trivial_group(int d, const Caps& caps = Caps{});

// C_d diagonalized over Q(eps_d): generated by diag(1, eps, ..., eps^{d-1}).
FiniteMatrixGroup<CycNumber> diagonal_cyclic_group(int d, const Caps& caps = Caps{});

// Basis change between the x- and y-variables: row k of to_x gives
// y_k = sum_j eps^{-kj} x_{j+1}, and row j of to_y gives
// x_{j+1} = (1/d) sum_k eps^{kj} y_k.  The matrices are mutually inverse,
// and conjugating the cyclic shift by to_x yields diag(1, eps, ...,
// eps^{d-1}).
struct BasisChange {
    SquareMatrix<CycNumber> to_x;  // substitute into a y-alphabet polynomial
    SquareMatrix<CycNumber> to_y;  // substitute into an x-alphabet polynomial
};
BasisChange x_to_y_basis_change(int d);

// Linear substitution action: letter i is replaced by the linear form
// given by row i of g, and the product expanded.  Degree-preserving and
// multiplicative.
template <class K>
NcPoly<K> substitute(const SquareMatrix<K>& g, const NcPoly<K>& f) {
    if (g.size() != f.alphabet_size())
        throw std::invalid_argument("substitute: matrix size does not match alphabet");
    const int d = g.size();
    std::vector<NcPoly<K>> rows;
    rows.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        NcPoly<K> row(d);
        for (int j = 0; j < d; ++j) row.add_term(Word(d, {j}), g.at(i, j));
        rows.push_back(std::move(row));
    }
    NcPoly<K> result(d);
    for (const auto& [w, c] : f.terms()) {
        NcPoly<K> image = NcPoly<K>::monomial(Word(d), c);
        for (int p = 0; p < w.degree(); ++p) image = image * rows[static_cast<size_t>(w.letter(p))];
        result = result + image;
    }
    return result;
}

// Reynolds operator: the average (1/|G|) sum_g substitute(g, f).  An
// idempotent projection onto the invariants.
template <class K>
NcPoly<K> reynolds(const FiniteMatrixGroup<K>& group, const NcPoly<K>& f) {
    NcPoly<K> sum(f.alphabet_size());
    for (const auto& g : group.elements()) sum = sum + substitute(g, f);
    return sum.scaled(K(group.order()).inverse());
}

// dim((K<X_d>^G)^(n)), computed as the rank of the Reynolds projection on
// the d^n-dimensional degree-n component.  Brute-force oracle for the
// series-based counts.
template <class K>
long invariant_dimension_bruteforce(const FiniteMatrixGroup<K>& group, int degree,
                                    const Caps& caps = Caps{}) {
    const int d = group.matrix_size();
    check_ambient_cap(d, degree, caps);
    RowSpace<K> space;
    for (const Word& w : all_words(d, degree)) {
        NcPoly<K> image = reynolds(group, NcPoly<K>::monomial(w, K(1)));
        SparseVec<K> row;
        for (const auto& [word, coeff] : image.terms()) row.set(word.lex_rank(), coeff);
        space.insert(std::move(row));
    }
    return space.rank();
}

}  // namespace cycinv
