#include "cycinv/s_algebra.hpp"

#include <algorithm>

#include "cycinv/invariant_core.hpp"

namespace cycinv {

namespace {

Word word_from_rank(int d, int degree, long rank) {
    std::vector<int> letters(static_cast<size_t>(degree));
    for (int p = degree - 1; p >= 0; --p) {
        letters[static_cast<size_t>(p)] = static_cast<int>(rank % d);
        rank /= d;
    }
    return Word(d, std::move(letters));
}

template <class K>
SparseVec<K> sparse_row(const NcPoly<K>& f) {
    SparseVec<K> row;
    for (const auto& [w, c] : f.terms()) row.set(w.lex_rank(), c);
    return row;
}

template <class K>
NcPoly<K> poly_from_sparse(int d, int degree, const SparseVec<K>& row) {
    NcPoly<K> f(d);
    for (const auto& [rank, coeff] : row.entries()) f.add_term(word_from_rank(d, degree, rank), coeff);
    return f;
}

// Multisets of generator indices (nondecreasing) with the given total
// degree.
template <class K>
void enumerate_products(const SGeneratorSet<K>& gens, int remaining, size_t min_index,
                        std::vector<size_t>& current, std::vector<std::vector<size_t>>& out) {
    if (remaining == 0) {
        if (!current.empty()) out.push_back(current);
        return;
    }
    for (size_t i = min_index; i < gens.generators.size(); ++i) {
        const int deg = gens.generator_degree(i);
        if (deg > remaining) continue;
        current.push_back(i);
        enumerate_products(gens, remaining - deg, i, current, out);
        current.pop_back();
    }
}

template <class K>
NcPoly<K> product_of(const SGeneratorSet<K>& gens, const std::vector<size_t>& indices) {
    NcPoly<K> prod = NcPoly<K>::unit(gens.alphabet_size);
    for (size_t i : indices) prod = prod * gens.generators[i];
    return prod;
}

// Inserts span{ product ∘ sigma : sigma in Sym_n } rows into the span
// basis.  Monomial products enumerate distinct letter rearrangements;
// general products enumerate Sym_n with duplicates dropped.
template <class K>
void insert_orbit(SpanBasis<K>& span, const NcPoly<K>& product,
                  const std::vector<size_t>& indices, int degree) {
    if (product.is_zero()) return;
    if (product.term_count() == 1) {
        const auto& [word, coeff] = *product.terms().begin();
        for (const Word& target : letter_rearrangements(word))
            span.insert(NcPoly<K>::monomial(target, coeff),
                        SpanningProduct{indices, Permutation::taking(word, target)});
        return;
    }
    std::set<std::string> seen;
    for (const Permutation& sigma : all_permutations(degree)) {
        NcPoly<K> image = product.apply(sigma);
        if (!seen.insert(image.str(VarStyle::Y0Based)).second) continue;
        span.insert(std::move(image), SpanningProduct{indices, sigma});
    }
}

}  // namespace

template <class K>
SpanBasis<K> s_component_span(const SGeneratorSet<K>& gens, int degree, const Caps& caps) {
    if (degree < 1) throw std::domain_error("s_component_span: degree must be positive");
    if (degree > caps.s_degree)
        throw CapExceeded("s-degree", caps.s_degree, degree);
    check_ambient_cap(gens.alphabet_size, degree, caps);
    SpanBasis<K> span(gens.alphabet_size, degree);
    std::vector<std::vector<size_t>> multisets;
    std::vector<size_t> current;
    enumerate_products(gens, degree, 0, current, multisets);
    for (const auto& indices : multisets)
        insert_orbit(span, product_of(gens, indices), indices, degree);
    return span;
}

template <class K>
SMembership<K> s_membership(const NcPoly<K>& f, const SGeneratorSet<K>& gens, const Caps& caps) {
    if (f.is_zero()) return {true, {}};
    const int degree = f.homogeneous_degree();
    SpanBasis<K> span = s_component_span(gens, degree, caps);
    auto solution = span.solve(f);
    if (!solution) return {false, {}};
    SMembership<K> result;
    result.member = true;
    for (const auto& [index, coeff] : *solution)
        result.certificate.push_back(
            {coeff, span.descriptors()[static_cast<size_t>(index)]});
    return result;
}

template <class K>
NcPoly<K> SMembership<K>::evaluate(const SGeneratorSet<K>& gens) const {
    NcPoly<K> sum(gens.alphabet_size);
    for (const auto& term : certificate) {
        NcPoly<K> prod = product_of(gens, term.product.generator_indices);
        sum = sum + prod.apply(term.product.sigma).scaled(term.coeff);
    }
    return sum;
}

SGeneratorSet<Rational> cyclic_s_generators(int d) {
    std::vector<NcPoly<Rational>> gens;
    for (const ExponentVector& v : minimal_monoid_generators(d))
        gens.push_back(NcPoly<Rational>::monomial(v.sorted_word(), Rational(1)));
    return SGeneratorSet<Rational>(d, std::move(gens));
}

SGeneratorSet<CycNumber> cyclic_s_generators_cyclotomic(int d) {
    std::vector<NcPoly<CycNumber>> gens;
    for (const ExponentVector& v : minimal_monoid_generators(d))
        gens.push_back(NcPoly<CycNumber>::monomial(v.sorted_word(), CycNumber(1)));
    return SGeneratorSet<CycNumber>(d, std::move(gens));
}

namespace {

NcPoly<CycNumber> cyclic_sum_words(const std::vector<std::vector<int>>& words) {
    NcPoly<CycNumber> f(3);
    for (const auto& letters : words) f.add_term(Word(3, letters), CycNumber(1));
    return f;
}

}  // namespace

SGeneratorSet<CycNumber> x_basis_s_generators_d3() {
    // v1, v2, v31, v32: the cyclic sums of x1, x1x2, x1^2x2, x1x2^2.
    std::vector<NcPoly<CycNumber>> gens;
    gens.push_back(cyclic_sum_words({{0}, {1}, {2}}));
    gens.push_back(cyclic_sum_words({{0, 1}, {1, 2}, {2, 0}}));
    gens.push_back(cyclic_sum_words({{0, 0, 1}, {1, 1, 2}, {2, 2, 0}}));
    gens.push_back(cyclic_sum_words({{0, 1, 1}, {1, 2, 2}, {2, 0, 0}}));
    return SGeneratorSet<CycNumber>(3, std::move(gens));
}

ExpressCertificate express_invariant_via_s_generators(const Word& w, const Caps& caps) {
    const int d = w.alphabet_size();
    if (!w.is_invariant() || w.is_empty())
        throw std::domain_error("express_invariant_via_s_generators: word is not invariant");
    if (w.degree() > caps.s_degree) throw CapExceeded("s-degree", caps.s_degree, w.degree());

    std::vector<int> sorted_letters = w.letters();
    std::sort(sorted_letters.begin(), sorted_letters.end());
    const Word sorted(d, sorted_letters);
    const Permutation sigma = Permutation::taking(w, sorted);

    ExponentVector counts(d);
    for (int letter : sorted_letters) ++counts.exps[static_cast<size_t>(letter)];
    const std::vector<ExponentVector> gens = minimal_monoid_generators(d);
    auto decomposition = decompose_into_generators(counts, gens);
    if (!decomposition)
        throw std::logic_error("express_invariant_via_s_generators: monoid decomposition failed");
    std::sort(decomposition->begin(), decomposition->end());

    ExpressCertificate cert{sigma, {}, Permutation(0), Word(d)};
    Word product(d);
    for (size_t index : *decomposition) {
        cert.factors.push_back(gens[index]);
        product = concat(product, gens[index].sorted_word());
    }
    cert.product_word = product;
    cert.regroup_tau = Permutation::taking(sorted, product);
    return cert;
}

namespace {

// Span of all permuted products a*b with a, b in lower-degree components
// of the S-subalgebra generated by `gens`.
template <class K>
RowSpace<K> products_span(int d, const SGeneratorSet<K>& gens, int degree, const Caps& caps) {
    if (degree < 1) throw std::domain_error("products span: degree must be positive");
    if (degree > caps.s_degree) throw CapExceeded("s-degree", caps.s_degree, degree);
    check_ambient_cap(d, degree, caps);
    RowSpace<K> space;
    const std::vector<Permutation> perms = all_permutations(degree);
    for (int low = 1; 2 * low <= degree; ++low) {
        const int high = degree - low;
        SpanBasis<K> left = s_component_span(gens, low, caps);
        SpanBasis<K> right = low == high ? left : s_component_span(gens, high, caps);
        std::vector<NcPoly<K>> left_polys, right_polys;
        for (const auto& [pivot, row] : left.basis_rows())
            left_polys.push_back(poly_from_sparse<K>(d, low, *row));
        for (const auto& [pivot, row] : right.basis_rows())
            right_polys.push_back(poly_from_sparse<K>(d, high, *row));
        std::set<std::string> seen;
        for (const auto& a : left_polys)
            for (const auto& b : right_polys) {
                const NcPoly<K> prod = a * b;
                for (const Permutation& sigma : perms) {
                    NcPoly<K> image = prod.apply(sigma);
                    if (!seen.insert(image.str(VarStyle::Y0Based)).second) continue;
                    space.insert(sparse_row(image));
                }
            }
    }
    return space;
}

}  // namespace

template <class K>
long s_products_span_rank(int d, const SGeneratorSet<K>& gens, int degree, const Caps& caps) {
    return products_span(d, gens, degree, caps).rank();
}

template <class K>
long s_generator_deficiency(int d, const SGeneratorSet<K>& gens, int degree, const Caps& caps) {
    RowSpace<K> space = products_span(d, gens, degree, caps);
    long added = 0;
    for (const Word& w : invariant_monomial_basis(d, degree, caps)) {
        SparseVec<K> row;
        row.set(w.lex_rank(), K(1));
        if (space.contains(row)) continue;
        ++added;
        for (const Word& target : letter_rearrangements(w)) {
            SparseVec<K> orbit_row;
            orbit_row.set(target.lex_rank(), K(1));
            space.insert(std::move(orbit_row));
        }
    }
    return added;
}

std::vector<SIdentity> s_identity_catalog() {
    const int d = 3;
    const BasisChange basis = x_to_y_basis_change(d);
    const SGeneratorSet<CycNumber> v = x_basis_s_generators_d3();
    const NcPoly<CycNumber>& v1 = v.generators[0];
    const NcPoly<CycNumber>& v2 = v.generators[1];
    const NcPoly<CycNumber>& v31 = v.generators[2];
    const NcPoly<CycNumber>& v32 = v.generators[3];
    const CycNumber eps = CycNumber::root(d);
    const CycNumber eps2 = CycNumber::root_power(d, 2);
    const CycNumber one = CycNumber::one(d);

    auto y_word_in_x = [&](std::vector<int> letters) {
        return substitute(basis.to_x,
                          NcPoly<CycNumber>::monomial(Word(d, std::move(letters)), CycNumber(1)));
    };
    // Each cyclic sum is symmetrized by one permutation per distinct
    // rearrangement of its words.  The x_i^2 x_j words of v31 are fixed by
    // (12), so 1 + (23) + (13) covers their orbits exactly once; the
    // x_i x_j^2 words of v32 are fixed by (23), so their transversal is
    // 1 + (12) + (13).
    const std::vector<std::pair<CycNumber, Permutation>> sym_aab = {
        {one, Permutation::identity(3)},
        {one, Permutation::transposition(3, 2, 3)},
        {one, Permutation::transposition(3, 1, 3)},
    };
    const std::vector<std::pair<CycNumber, Permutation>> sym_abb = {
        {one, Permutation::identity(3)},
        {one, Permutation::transposition(3, 1, 2)},
        {one, Permutation::transposition(3, 1, 3)},
    };

    std::vector<SIdentity> catalog;
    catalog.push_back({"y1y2", y_word_in_x({1, 2}),
                       v1 * v1 + v2.scaled(eps - one) +
                           v2.apply(Permutation::transposition(2, 1, 2)).scaled(eps2 - one)});
    catalog.push_back({"y1^3", y_word_in_x({1, 1, 1}),
                       v1 * v1 * v1 + v31.apply_combo(sym_aab).scaled(eps2 - one) +
                           v32.apply_combo(sym_abb).scaled(eps - one)});
    catalog.push_back({"y2^3", y_word_in_x({2, 2, 2}),
                       v1 * v1 * v1 + v31.apply_combo(sym_aab).scaled(eps - one) +
                           v32.apply_combo(sym_abb).scaled(eps2 - one)});
    return catalog;
}

bool verify_s_identity(const std::string& catalog_id) {
    for (const SIdentity& identity : s_identity_catalog())
        if (identity.id == catalog_id) return identity.lhs == identity.rhs;
    throw std::invalid_argument("verify_s_identity: unknown catalog id '" + catalog_id + "'");
}

template SpanBasis<Rational> s_component_span(const SGeneratorSet<Rational>&, int, const Caps&);
template SpanBasis<CycNumber> s_component_span(const SGeneratorSet<CycNumber>&, int, const Caps&);
template SMembership<Rational> s_membership(const NcPoly<Rational>&, const SGeneratorSet<Rational>&,
                                            const Caps&);
template SMembership<CycNumber> s_membership(const NcPoly<CycNumber>&,
                                             const SGeneratorSet<CycNumber>&, const Caps&);
template struct SMembership<Rational>;
template struct SMembership<CycNumber>;
template long s_products_span_rank(int, const SGeneratorSet<Rational>&, int, const Caps&);
template long s_products_span_rank(int, const SGeneratorSet<CycNumber>&, int, const Caps&);
template long s_generator_deficiency(int, const SGeneratorSet<Rational>&, int, const Caps&);
template long s_generator_deficiency(int, const SGeneratorSet<CycNumber>&, int, const Caps&);

}  // namespace cycinv
