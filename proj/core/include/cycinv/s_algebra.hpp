#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cycinv/commutative.hpp"
#include "cycinv/config.hpp"
#include "cycinv/group_actions.hpp"
#include "cycinv/linear.hpp"
#include "cycinv/nc_poly.hpp"

namespace cycinv {

// Homogeneous generators of an S-subalgebra of the free algebra: the
// subalgebra closed under products and the position action of Sym_n on
// every degree-n component.
template <class K>
struct SGeneratorSet {
    int alphabet_size;
    std::vector<NcPoly<K>> generators;

    SGeneratorSet(int alphabet, std::vector<NcPoly<K>> gens)
        : alphabet_size(alphabet), generators(std::move(gens)) {
        for (const auto& g : generators) {
            if (g.alphabet_size() != alphabet_size)
                throw std::invalid_argument("SGeneratorSet: alphabet mismatch");
            if (g.is_zero() || g.homogeneous_degree() < 1)
                throw std::invalid_argument(
                    "SGeneratorSet: generators must be homogeneous of degree >= 1");
        }
    }

    int generator_degree(size_t i) const { return generators[i].homogeneous_degree(); }
};

// One spanning vector of a degree-n component: the product of the listed
// generators (by index, in order) acted on by sigma.
struct SpanningProduct {
    std::vector<size_t> generator_indices;
    Permutation sigma;
};

// Row-reduced exact basis of a subspace of the degree-n component, rows
// keyed by deg-lex word rank.  Remembers the spanning products inserted
// to build it, so memberships can be certified.
template <class K>
class SpanBasis {
public:
    SpanBasis(int alphabet_size, int degree)
        : alphabet_(alphabet_size), degree_(degree) {}

    int degree() const { return degree_; }
    long ambient_dimension() const {
        long dim = 1;
        for (int i = 0; i < degree_; ++i) dim *= alphabet_;
        return dim;
    }
    long rank() const { return space_.rank(); }

    // Adds span{ product ∘ sigma }; records the descriptor.
    void insert(NcPoly<K> vector, SpanningProduct descriptor) {
        descriptors_.push_back(std::move(descriptor));
        space_.insert(to_sparse(vector));
        vectors_.push_back(std::move(vector));
    }

    bool contains(const NcPoly<K>& f) const { return space_.contains(to_sparse(f)); }

    // Solves f = sum coeff_i * spanning_i; empty optional if not a member.
    std::optional<std::map<long, K>> solve(const NcPoly<K>& f) const {
        return space_.solve(to_sparse(f));
    }

    const std::vector<SpanningProduct>& descriptors() const { return descriptors_; }
    const std::vector<NcPoly<K>>& spanning_vectors() const { return vectors_; }

    // Pivot-indexed reduced rows of the span.
    std::vector<std::pair<long, const SparseVec<K>*>> basis_rows() const {
        return space_.basis();
    }

    SparseVec<K> to_sparse(const NcPoly<K>& f) const {
        SparseVec<K> row;
        for (const auto& [w, c] : f.terms()) row.set(w.lex_rank(), c);
        return row;
    }

private:
    int alphabet_;
    int degree_;
    RowSpace<K> space_;
    std::vector<SpanningProduct> descriptors_;
    std::vector<NcPoly<K>> vectors_;
};

// The degree-n component of the S-subalgebra generated by `gens`: the
// span of all position-permuted products of generators of total degree n.
template <class K>
SpanBasis<K> s_component_span(const SGeneratorSet<K>& gens, int degree, const Caps& caps = Caps{});

// One certified summand: coeff * (product of generators) ∘ sigma.
template <class K>
struct SCertTerm {
    K coeff;
    SpanningProduct product;
};

// Membership f ∈ (degree-deg(f) component of the S-subalgebra), with an
// exact certificate on success.  evaluate() re-expands the certificate;
// it must reproduce the target exactly.
template <class K>
struct SMembership {
    bool member = false;
    std::vector<SCertTerm<K>> certificate;

    NcPoly<K> evaluate(const SGeneratorSet<K>& gens) const;
};

template <class K>
SMembership<K> s_membership(const NcPoly<K>& f, const SGeneratorSet<K>& gens,
                            const Caps& caps = Caps{});

// The canonical generating set for the S-algebra of invariants: the
// commutative minimal monoid generators read as words (y0, then the
// sorted monomials).
SGeneratorSet<Rational> cyclic_s_generators(int d);
SGeneratorSet<CycNumber> cyclic_s_generators_cyclotomic(int d);

// The x-variable cyclic sums v1, v2, v31, v32 for d = 3, as polynomials
// over Q(eps_3) in the x-alphabet.
SGeneratorSet<CycNumber> x_basis_s_generators_d3();

// Constructive expression of an invariant monomial through the generator
// set U: sigma sorts the word, the exponent vector factors in the
// commutative monoid, tau regroups into the product of generators, so
// w ∘ (sigma then tau) equals the product word.
struct ExpressCertificate {
    Permutation sort_sigma;
    std::vector<ExponentVector> factors;  // monoid factorization, y0 included
    Permutation regroup_tau;
    Word product_word;
};
ExpressCertificate express_invariant_via_s_generators(const Word& w, const Caps& caps = Caps{});

// Number of new S-generators needed at the given degree: starting from
// the span of permuted products of the lower-degree components of the
// S-subalgebra generated by `gens`, counts how many invariant-monomial
// orbit spans must be added (scanning monomials in deg-lex order) to fill
// the full d^(n-1)-dimensional invariant component.
template <class K>
long s_generator_deficiency(int d, const SGeneratorSet<K>& gens, int degree,
                            const Caps& caps = Caps{});

// Rank of the products span itself (the subspace reachable at `degree`
// without new generators); the raw quantity behind the deficiency count.
template <class K>
long s_products_span_rank(int d, const SGeneratorSet<K>& gens, int degree,
                          const Caps& caps = Caps{});

// The three displayed identities expressing y1*y2, y1^3, y2^3 through
// v1, v2, v31, v32 over Q(eps_3).
struct SIdentity {
    std::string id;       // "y1y2", "y1^3", "y2^3"
    NcPoly<CycNumber> lhs;
    NcPoly<CycNumber> rhs;
};
std::vector<SIdentity> s_identity_catalog();
bool verify_s_identity(const std::string& catalog_id);

}  // namespace cycinv
