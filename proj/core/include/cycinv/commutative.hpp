#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cycinv/rational.hpp"
#include "cycinv/word.hpp"

namespace cycinv {

// Commutative monomial y0^{n0} ... y_{d-1}^{n_{d-1}} as its exponent
// vector.  The C_d-weight is n1 + 2 n2 + ... + (d-1) n_{d-1} mod d;
// the monomial is invariant iff the weight is 0.  Componentwise addition
// is the monomial product.
struct ExponentVector {
    int d;
    std::vector<long> exps;

    explicit ExponentVector(int order) : d(order), exps(static_cast<size_t>(order)) {}
    ExponentVector(int order, std::vector<long> e);

    long degree() const;
    long weight() const;
    bool is_invariant() const { return weight() == 0; }
    // Supported only on y1..y_{d-1}.
    bool avoids_y0() const { return exps[0] == 0; }
    bool is_zero() const { return degree() == 0; }

    friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
    // Componentwise a <= b.
    friend bool dominates(const ExponentVector& big, const ExponentVector& small);
    friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b);

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) = default;

    // The nondecreasing word with these letter multiplicities.
    Word sorted_word() const;

    // Order used for generator tables: degree, then lex on the sorted word.
    friend bool table_less(const ExponentVector& a, const ExponentVector& b);

    std::string str() const;  // e.g. "y1^2*y3"
};

// Commutative polynomial with exact rational coefficients; canonical form
// (no zero terms), exponent vectors as keys.
class CPoly {
public:
    explicit CPoly(int nvars) : nvars_(nvars) {}

    static CPoly monomial(int nvars, std::vector<long> exps, Rational coeff = Rational(1));
    static CPoly constant(int nvars, Rational c) {
        return monomial(nvars, std::vector<long>(static_cast<size_t>(nvars)), std::move(c));
    }
    // Variable with 0-based index.
    static CPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<std::vector<long>, Rational>& terms() const { return terms_; }

    void add_term(const std::vector<long>& exps, const Rational& coeff);

    friend CPoly operator+(CPoly a, const CPoly& b);
    friend CPoly operator-(CPoly a, const CPoly& b);
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    CPoly operator-() const;
    CPoly scaled(const Rational& s) const;
    CPoly pow(long k) const;

    friend bool operator==(const CPoly& a, const CPoly& b) = default;

    // Relabels variable i to sigma_images[i].
    CPoly permute_variables(const std::vector<int>& sigma_images) const;
    // Invariance under all variable permutations, checked on the Sym_d
    // generators (adjacent transposition and full cycle).
    bool is_symmetric() const;

    std::string str(VarStyle style) const;

private:
    int nvars_;
    std::map<std::vector<long>, Rational> terms_;
};

// e_n(x_1..x_d): sum of all binomial(d, n) squarefree degree-n monomials.
CPoly elementary_symmetric(int d, int n);

// Sum of the distinct cyclic shifts of the monomial with the given
// exponent pattern (exps[i] is the exponent of x_{i+1}).
CPoly cyclic_sum(int d, const std::vector<long>& exps);

// Expands both sides fully and compares canonical forms.
bool verify_commutative_identity(const CPoly& lhs, const CPoly& rhs);

// True iff v (invariant, y0-free, degree >= 1) admits no decomposition
// v = a + b with a, b nonzero invariant vectors supported on y1..y_{d-1}.
bool is_irreducible_invariant(const ExponentVector& v);

// Minimal generating set of the invariant monoid: y0 plus the irreducible
// invariant monomials on y1..y_{d-1} of degree 1..d, ordered by (degree,
// lex on the sorted word).
std::vector<ExponentVector> minimal_monoid_generators(int d);

// True iff every invariant exponent vector of degree <= max_degree is a
// sum of generators (decided by search over the vector lattice).
bool generation_closure_check(int d, int max_degree);
// Same check against an arbitrary candidate generating set.
bool generates_all_invariants(int d, int max_degree, const std::vector<ExponentVector>& gens);

// A decomposition of v into generator-set elements (indices into gens,
// with multiplicity, y0 handled like any generator), or nullopt.
std::optional<std::vector<size_t>> decompose_into_generators(
    const ExponentVector& v, const std::vector<ExponentVector>& gens);

// Number of invariant monomials of the given degree; with include_y0
// false only monomials in y1..y_{d-1} are counted.  Brute-force weight-
// congruence count, used as the Molien oracle.
long count_invariant_monomials(int d, int degree, bool include_y0);

// The relation catalog from the worked d=3 and d=4 examples; each entry
// verifies by exact expansion.
struct CommIdentity {
    std::string name;
    CPoly lhs;
    CPoly rhs;
};
std::vector<CommIdentity> commutative_identity_catalog(int d);

}  // namespace cycinv
