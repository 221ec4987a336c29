#pragma once

#include <map>
#include <vector>

#include "cycinv/config.hpp"
#include "cycinv/group_actions.hpp"
#include "cycinv/series.hpp"
#include "cycinv/word.hpp"

namespace cycinv {

// Degree-n basis of the invariant component in the y-alphabet: exactly
// the words whose letter-index sum is divisible by d, in deg-lex order.
// There are d^(n-1) of them (the last letter of each word is forced).
std::vector<Word> invariant_monomial_basis(int d, int degree, const Caps& caps = Caps{});

// A free generator is an invariant monomial none of whose proper prefixes
// is invariant.  Throws if the word itself is not invariant.
bool is_free_generator(const Word& w);

// The inductive construction of the free generating set: Z_1 = {y0},
// U_1 = {y1..y_{d-1}}; each u in U_{n-1} extends by its unique completing
// letter into Z_n and by the other d-1 letters into U_n.  Returns the Z_n
// by degree; |Z_n| = (d-1)^(n-1) for n >= 2.
std::map<int, std::vector<Word>> free_generators_up_to_degree(int d, int max_degree,
                                                              const Caps& caps = Caps{});

// H(K<X_d>^{C_d}, t) = (1 - (d-1)t) / (1 - dt); coefficient n is d^(n-1)
// for n >= 1.
RationalSeries cyclic_hilbert_series(int d);

// Dicks-Formanek: H(K<X_d>^G, t) = (1/|G|) sum_g 1/(1 - tr(g) t).
RationalSeries noncommutative_molien_series(const FiniteMatrixGroup<Rational>& group);
RationalSeries noncommutative_molien_series(const FiniteMatrixGroup<CycNumber>& group);

// Molien: H(K[X_d]^G, t) = (1/|G|) sum_g 1/det(1 - gt).  Over Q(eps) the
// eps-parts of the summed coefficients cancel exactly; the all-rational
// result is asserted and returned over Q.
RationalSeries commutative_molien_series(const FiniteMatrixGroup<Rational>& group);
RationalSeries commutative_molien_series(const FiniteMatrixGroup<CycNumber>& group);

// Coefficients 1..max_degree of g(t) = 1 - 1/H(t): the number of free
// generators of each degree for the algebra with Hilbert series H.
// Requires H(0) = 1.
std::vector<Rational> free_generator_counts_from_hilbert(const RationalSeries& hilbert,
                                                         int max_degree);

// det(1 - g t) as an exact polynomial in t.
template <class K>
Poly<K> reversed_characteristic_polynomial(const SquareMatrix<K>& g);

}  // namespace cycinv
