#include "cycinv/commutative.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cycinv {

ExponentVector::ExponentVector(int order, std::vector<long> e) : d(order), exps(std::move(e)) {
    if (d < 1) throw std::invalid_argument("ExponentVector: order must be positive");
    if (static_cast<int>(exps.size()) != d)
        throw std::invalid_argument("ExponentVector: exponent vector must have length d");
    for (long n : exps)
        if (n < 0) throw std::invalid_argument("ExponentVector: exponents must be nonnegative");
}

long ExponentVector::degree() const { return std::accumulate(exps.begin(), exps.end(), 0L); }

long ExponentVector::weight() const {
    long w = 0;
    for (int i = 1; i < d; ++i) w = (w + i * (exps[static_cast<size_t>(i)] % d)) % d;
    return w;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    if (a.d != b.d) throw std::invalid_argument("ExponentVector: order mismatch");
    ExponentVector r(a.d);
    for (size_t i = 0; i < a.exps.size(); ++i) r.exps[i] = a.exps[i] + b.exps[i];
    return r;
}

bool dominates(const ExponentVector& big, const ExponentVector& small) {
    if (big.d != small.d) throw std::invalid_argument("ExponentVector: order mismatch");
    for (size_t i = 0; i < big.exps.size(); ++i)
        if (big.exps[i] < small.exps[i]) return false;
    return true;
}

ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) {
    if (!dominates(a, b)) throw std::invalid_argument("ExponentVector: difference is negative");
    ExponentVector r(a.d);
    for (size_t i = 0; i < a.exps.size(); ++i) r.exps[i] = a.exps[i] - b.exps[i];
    return r;
}

Word ExponentVector::sorted_word() const {
    std::vector<int> letters;
    for (int i = 0; i < d; ++i)
        for (long k = 0; k < exps[static_cast<size_t>(i)]; ++k) letters.push_back(i);
    return Word(d, std::move(letters));
}

bool table_less(const ExponentVector& a, const ExponentVector& b) {
    return a.sorted_word() < b.sorted_word();
}

std::string ExponentVector::str() const { return sorted_word().str(VarStyle::Y0Based); }

CPoly CPoly::monomial(int nvars, std::vector<long> exps, Rational coeff) {
    CPoly p(nvars);
    p.add_term(exps, coeff);
    return p;
}

CPoly CPoly::variable(int nvars, int index) {
    std::vector<long> exps(static_cast<size_t>(nvars));
    exps[static_cast<size_t>(index)] = 1;
    return monomial(nvars, std::move(exps));
}

void CPoly::add_term(const std::vector<long>& exps, const Rational& coeff) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("CPoly: exponent tuple has wrong length");
    if (coeff.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CPoly operator+(CPoly a, const CPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("CPoly: variable count mismatch");
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
}

CPoly operator-(CPoly a, const CPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("CPoly: variable count mismatch");
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("CPoly: variable count mismatch");
    CPoly r(a.nvars_);
    std::vector<long> exps(static_cast<size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
            r.add_term(exps, ca * cb);
        }
    return r;
}

CPoly CPoly::operator-() const {
    CPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

CPoly CPoly::scaled(const Rational& s) const {
    CPoly r(nvars_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

CPoly CPoly::pow(long k) const {
    if (k < 0) throw std::invalid_argument("CPoly: negative power");
    CPoly acc = constant(nvars_, Rational(1));
    for (long i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

CPoly CPoly::permute_variables(const std::vector<int>& sigma_images) const {
    CPoly r(nvars_);
    std::vector<long> exps(static_cast<size_t>(nvars_));
    for (const auto& [e, c] : terms_) {
        std::fill(exps.begin(), exps.end(), 0L);
        for (size_t i = 0; i < e.size(); ++i) exps[static_cast<size_t>(sigma_images[i])] += e[i];
        r.add_term(exps, c);
    }
    return r;
}

bool CPoly::is_symmetric() const {
    if (nvars_ < 2) return true;
    std::vector<int> swap01(static_cast<size_t>(nvars_));
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    std::vector<int> cycle(static_cast<size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) cycle[static_cast<size_t>(i)] = (i + 1) % nvars_;
    return permute_variables(swap01) == *this && permute_variables(cycle) == *this;
}

std::string CPoly::str(VarStyle style) const {
    if (terms_.empty()) return "0";
    const char name = style == VarStyle::X1Based ? 'x' : 'y';
    const int offset = style == VarStyle::X1Based ? 1 : 0;
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        std::ostringstream mono;
        bool any_var = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) mono << "*";
            mono << name << static_cast<int>(i) + offset;
            if (e[i] > 1) mono << "^" << e[i];
            any_var = true;
        }
        if (!any_var)
            os << mag.str();
        else if (mag.is_one())
            os << mono.str();
        else
            os << mag.str() << "*" << mono.str();
    }
    return os.str();
}

CPoly elementary_symmetric(int d, int n) {
    if (n < 1 || n > d) throw std::domain_error("elementary_symmetric: index out of range");
    CPoly r(d);
    std::vector<long> exps(static_cast<size_t>(d));
    // All subsets of size n via combination walking.
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::fill(exps.begin(), exps.end(), 0L);
        for (int i : idx) exps[static_cast<size_t>(i)] = 1;
        r.add_term(exps, Rational(1));
        int pos = n - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == d - n + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int j = pos + 1; j < n; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return r;
}

CPoly cyclic_sum(int d, const std::vector<long>& exps) {
    if (static_cast<int>(exps.size()) != d)
        throw std::invalid_argument("cyclic_sum: pattern has wrong length");
    std::set<std::vector<long>> orbit;
    std::vector<long> shifted(exps.size());
    for (int k = 0; k < d; ++k) {
        for (int i = 0; i < d; ++i) shifted[static_cast<size_t>((i + k) % d)] = exps[static_cast<size_t>(i)];
        orbit.insert(shifted);
    }
    CPoly r(d);
    for (const auto& e : orbit) r.add_term(e, Rational(1));
    return r;
}

bool verify_commutative_identity(const CPoly& lhs, const CPoly& rhs) {
    if (lhs.nvars() != rhs.nvars())
        throw std::invalid_argument("verify_commutative_identity: variable count mismatch");
    return lhs == rhs;
}

namespace {

// All y0-free invariant vectors that are componentwise <= v, excluding 0
// and v itself.
std::vector<ExponentVector> proper_invariant_subvectors(const ExponentVector& v) {
    std::vector<ExponentVector> out;
    ExponentVector sub(v.d);
    // Odometer over the box [0, v].
    while (true) {
        int pos = v.d - 1;
        while (pos >= 1 && sub.exps[static_cast<size_t>(pos)] == v.exps[static_cast<size_t>(pos)]) {
            sub.exps[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 1) break;
        ++sub.exps[static_cast<size_t>(pos)];
        if (sub.is_zero() || sub == v) continue;
        if (sub.is_invariant()) out.push_back(sub);
    }
    return out;
}

}  // namespace

bool is_irreducible_invariant(const ExponentVector& v) {
    if (!v.is_invariant() || !v.avoids_y0() || v.degree() < 1)
        throw std::domain_error(
            "is_irreducible_invariant: vector must be invariant, y0-free and nonconstant");
    for (const ExponentVector& a : proper_invariant_subvectors(v))
        if ((v - a).is_invariant()) return false;
    return true;
}

namespace {

// Invariant y0-free vectors of exact degree n, by enumeration.
void enumerate_invariant_vectors(int d, long degree, ExponentVector& scratch, int from_index,
                                 long remaining, std::vector<ExponentVector>& out) {
    if (from_index == d - 1) {
        scratch.exps[static_cast<size_t>(from_index)] = remaining;
        if (scratch.is_invariant()) out.push_back(scratch);
        scratch.exps[static_cast<size_t>(from_index)] = 0;
        return;
    }
    for (long k = 0; k <= remaining; ++k) {
        scratch.exps[static_cast<size_t>(from_index)] = k;
        enumerate_invariant_vectors(d, degree, scratch, from_index + 1, remaining - k, out);
    }
    scratch.exps[static_cast<size_t>(from_index)] = 0;
}

std::vector<ExponentVector> invariant_vectors_of_degree(int d, long degree, bool include_y0) {
    std::vector<ExponentVector> out;
    ExponentVector scratch(d);
    if (include_y0) {
        for (long n0 = 0; n0 <= degree; ++n0) {
            scratch.exps[0] = n0;
            enumerate_invariant_vectors(d, degree, scratch, 1, degree - n0, out);
        }
        scratch.exps[0] = 0;
    } else {
        enumerate_invariant_vectors(d, degree, scratch, 1, degree, out);
    }
    return out;
}

}  // namespace

std::vector<ExponentVector> minimal_monoid_generators(int d) {
    if (d < 2) throw std::domain_error("minimal_monoid_generators: order must be at least 2");
    std::vector<ExponentVector> gens;
    ExponentVector y0(d);
    y0.exps[0] = 1;
    gens.push_back(y0);
    for (long degree = 1; degree <= d; ++degree)
        for (const ExponentVector& v : invariant_vectors_of_degree(d, degree, false))
            if (is_irreducible_invariant(v)) gens.push_back(v);
    std::sort(gens.begin(), gens.end(),
              [](const ExponentVector& a, const ExponentVector& b) { return table_less(a, b); });
    return gens;
}

std::optional<std::vector<size_t>> decompose_into_generators(
    const ExponentVector& v, const std::vector<ExponentVector>& gens) {
    // Depth-first search over nonincreasing generator indices; the degree
    // strictly drops with every subtraction, so the search is finite.
    std::vector<size_t> chosen;
    auto search = [&](auto&& self, const ExponentVector& rest, size_t max_index) -> bool {
        if (rest.is_zero()) return true;
        for (size_t i = std::min(max_index + 1, gens.size()); i-- > 0;) {
            if (gens[i].is_zero() || !dominates(rest, gens[i])) continue;
            chosen.push_back(i);
            if (self(self, rest - gens[i], i)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!search(search, v, gens.size() - 1)) return std::nullopt;
    return chosen;
}

bool generates_all_invariants(int d, int max_degree, const std::vector<ExponentVector>& gens) {
    for (long degree = 1; degree <= max_degree; ++degree)
        for (const ExponentVector& v : invariant_vectors_of_degree(d, degree, true))
            if (!decompose_into_generators(v, gens)) return false;
    return true;
}

bool generation_closure_check(int d, int max_degree) {
    return generates_all_invariants(d, max_degree, minimal_monoid_generators(d));
}

long count_invariant_monomials(int d, int degree, bool include_y0) {
    return static_cast<long>(invariant_vectors_of_degree(d, degree, include_y0).size());
}

namespace {

std::vector<long> pattern(std::initializer_list<long> exps) { return std::vector<long>(exps); }

}  // namespace

std::vector<CommIdentity> commutative_identity_catalog(int d) {
    std::vector<CommIdentity> catalog;
    if (d == 3) {
        const CPoly e1 = elementary_symmetric(3, 1);
        const CPoly e2 = elementary_symmetric(3, 2);
        const CPoly e3 = elementary_symmetric(3, 3);
        const CPoly u1 = cyclic_sum(3, pattern({2, 1, 0}));
        const CPoly u2 = cyclic_sum(3, pattern({1, 2, 0}));
        const CPoly s = u1 + u2;
        catalog.push_back({"u1+u2 invariant under (12)", s, s.permute_variables({1, 0, 2})});
        catalog.push_back({"u1+u2 invariant under (123)", s, s.permute_variables({1, 2, 0})});
        catalog.push_back({"u1+u2 = e1*e2 - 3*e3", s, e1 * e2 - e3.scaled(Rational(3))});
        return catalog;
    }
    if (d == 4) {
        const CPoly e1 = elementary_symmetric(4, 1);
        const CPoly e2 = elementary_symmetric(4, 2);
        const CPoly e3 = elementary_symmetric(4, 3);
        const CPoly e4 = elementary_symmetric(4, 4);
        const CPoly u = cyclic_sum(4, pattern({1, 1, 0, 0}));
        const CPoly v = cyclic_sum(4, pattern({2, 1, 0, 0}));
        const CPoly w = cyclic_sum(4, pattern({3, 1, 0, 0}));
        catalog.push_back({"x1*x3 + x2*x4 = e2 - u", cyclic_sum(4, pattern({1, 0, 1, 0})), e2 - u});
        catalog.push_back({"x1^2*x3 + x2^2*x4 + x3^2*x1 + x4^2*x2 = e1*e2 - e3 - e1*u",
                           cyclic_sum(4, pattern({2, 0, 1, 0})), e1 * e2 - e3 - e1 * u});
        catalog.push_back({"x1*x2^2 + x2*x3^2 + x3*x4^2 + x4*x1^2 = -2*e3 + e1*u - v",
                           cyclic_sum(4, pattern({1, 2, 0, 0})),
                           e3.scaled(Rational(-2)) + e1 * u - v});
        catalog.push_back(
            {"x1^3*x3 + x2^3*x4 + x3^3*x1 + x4^3*x2 = "
             "e1^2*e2 - e1*e3 - 2*e2^2 + 4*e4 - u*e1^2 + 3*u*e2 - u^2",
             cyclic_sum(4, pattern({3, 0, 1, 0})),
             e1 * e1 * e2 - e1 * e3 - (e2 * e2).scaled(Rational(2)) + e4.scaled(Rational(4)) -
                 u * e1 * e1 + (u * e2).scaled(Rational(3)) - u * u});
        catalog.push_back({"x1*x2^3 + x2*x3^3 + x3*x4^3 + x4*x1^3 = u*e1^2 - 3*u*e2 + u^2 - w",
                           cyclic_sum(4, pattern({1, 3, 0, 0})),
                           u * e1 * e1 - (u * e2).scaled(Rational(3)) + u * u - w});
        catalog.push_back(
            {"x1^2*x2^2 + x2^2*x3^2 + x3^2*x4^2 + x4^2*x1^2 = -2*e1*e3 + 4*e4 + 2*u*e2 - u^2",
             cyclic_sum(4, pattern({2, 2, 0, 0})),
             (e1 * e3).scaled(Rational(-2)) + e4.scaled(Rational(4)) +
                 (u * e2).scaled(Rational(2)) - u * u});
        catalog.push_back({"x1^2*x3^2 + x2^2*x4^2 = e2^2 - 2*e4 - 2*u*e2 + u^2",
                           cyclic_sum(4, pattern({2, 0, 2, 0})),
                           e2 * e2 - e4.scaled(Rational(2)) - (u * e2).scaled(Rational(2)) + u * u});
        return catalog;
    }
    throw std::domain_error("commutative_identity_catalog: catalog exists only for d = 3 and 4");
}

}  // namespace cycinv
