#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cycinv/config.hpp"
#include "cycinv/cyclotomic.hpp"
#include "cycinv/rational.hpp"

namespace cycinv {

// Canonical (arithmetic-free) total order used to deduplicate field values
// in containers.
inline bool field_less(const Rational& a, const Rational& b) { return a < b; }
inline bool field_less(const CycNumber& a, const CycNumber& b) {
    return CycNumber::compare(a, b) < 0;
}

// Dense square matrix over an exact field K, row-major.
template <class K>
class SquareMatrix {
public:
    explicit SquareMatrix(int size)
        : size_(size), entries_(static_cast<size_t>(size) * static_cast<size_t>(size)) {
        if (size_ < 1) throw std::invalid_argument("SquareMatrix: size must be positive");
    }

    static SquareMatrix identity(int size) {
        SquareMatrix m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = K(1);
        return m;
    }

    int size() const { return size_; }

    K& at(int i, int j) { return entries_[static_cast<size_t>(i) * size_ + j]; }
    const K& at(int i, int j) const { return entries_[static_cast<size_t>(i) * size_ + j]; }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.size_ != b.size_) throw std::invalid_argument("SquareMatrix: size mismatch");
        SquareMatrix r(a.size_);
        for (int i = 0; i < a.size_; ++i)
            for (int k = 0; k < a.size_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < a.size_; ++j)
                    r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
            }
        return r;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.size_ == b.size_ && a.entries_ == b.entries_;
    }

    K trace() const {
        K t;
        for (int i = 0; i < size_; ++i) t = t + at(i, i);
        return t;
    }

    // Exact determinant by Gaussian elimination with column pivoting.
    K determinant() const {
        SquareMatrix m(*this);
        K det(1);
        for (int col = 0; col < size_; ++col) {
            int pivot = -1;
            for (int row = col; row < size_; ++row)
                if (!m.at(row, col).is_zero()) {
                    pivot = row;
                    break;
                }
            if (pivot < 0) return K();
            if (pivot != col) {
                for (int j = 0; j < size_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
                det = K() - det;
            }
            det = det * m.at(col, col);
            const K inv = m.at(col, col).inverse();
            for (int row = col + 1; row < size_; ++row) {
                if (m.at(row, col).is_zero()) continue;
                const K factor = m.at(row, col) * inv;
                for (int j = col; j < size_; ++j)
                    m.at(row, j) = m.at(row, j) - factor * m.at(col, j);
            }
        }
        return det;
    }

    // Exact inverse by Gauss-Jordan; throws on singular input.
    SquareMatrix inverse() const {
        SquareMatrix m(*this);
        SquareMatrix inv = identity(size_);
        for (int col = 0; col < size_; ++col) {
            int pivot = -1;
            for (int row = col; row < size_; ++row)
                if (!m.at(row, col).is_zero()) {
                    pivot = row;
                    break;
                }
            if (pivot < 0) throw std::domain_error("SquareMatrix: matrix is singular");
            if (pivot != col)
                for (int j = 0; j < size_; ++j) {
                    std::swap(m.at(pivot, j), m.at(col, j));
                    std::swap(inv.at(pivot, j), inv.at(col, j));
                }
            const K scale = m.at(col, col).inverse();
            for (int j = 0; j < size_; ++j) {
                m.at(col, j) = m.at(col, j) * scale;
                inv.at(col, j) = inv.at(col, j) * scale;
            }
            for (int row = 0; row < size_; ++row) {
                if (row == col || m.at(row, col).is_zero()) continue;
                const K factor = m.at(row, col);
                for (int j = 0; j < size_; ++j) {
                    m.at(row, j) = m.at(row, j) - factor * m.at(col, j);
                    inv.at(row, j) = inv.at(row, j) - factor * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    SquareMatrix pow(long k) const {
        SquareMatrix base(*this);
        if (k < 0) {
            base = base.inverse();
            k = -k;
        }
        SquareMatrix acc = identity(size_);
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    const std::vector<K>& entries() const { return entries_; }

private:
    int size_;
    std::vector<K> entries_;
};

namespace detail {

template <class K>
struct EntryLess {
    bool operator()(const std::vector<K>& a, const std::vector<K>& b) const {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == b[i]) continue;
            return field_less(a[i], b[i]);
        }
        return false;
    }
};

}  // namespace detail

// Builds a matrix from rows of coefficient strings (the wire format used
// for JSON input): rationals as "p/q", cyclotomic values as polynomials
// in e.  `field_order` is the cyclotomic order (ignored over Q).
template <class K>
SquareMatrix<K> matrix_from_entry_strings(const std::vector<std::vector<std::string>>& rows,
                                          int field_order) {
    const int n = static_cast<int>(rows.size());
    if (n < 1) throw std::invalid_argument("matrix_from_entry_strings: empty matrix");
    SquareMatrix<K> m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != n)
            throw std::invalid_argument("matrix_from_entry_strings: matrix is not square");
        for (int j = 0; j < n; ++j) {
            const std::string& entry = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if constexpr (std::is_same_v<K, Rational>)
                m.at(i, j) = Rational::parse(entry);
            else
                m.at(i, j) = CycNumber::parse(entry, field_order);
        }
    }
    return m;
}

// Explicit finite subgroup of GL_d(K), materialized by closure from
// generators.  The element list always contains the identity and is
// closed under products and inverses.
template <class K>
class FiniteMatrixGroup {
public:
    static FiniteMatrixGroup from_generators(const std::vector<SquareMatrix<K>>& generators,
                                             const Caps& caps = Caps{}) {
        if (generators.empty())
            throw std::invalid_argument("FiniteMatrixGroup: at least one generator required");
        const int size = generators.front().size();
        for (const auto& g : generators)
            if (g.size() != size)
                throw std::invalid_argument("FiniteMatrixGroup: generator size mismatch");
        FiniteMatrixGroup group;
        group.insert(SquareMatrix<K>::identity(size));
        std::vector<size_t> frontier{0};
        while (!frontier.empty()) {
            std::vector<size_t> next;
            for (size_t idx : frontier)
                for (const auto& g : generators) {
                    SquareMatrix<K> prod = group.elements_[idx] * g;
                    if (group.insert(std::move(prod))) {
                        if (static_cast<long>(group.elements_.size()) > caps.group_order)
                            throw CapExceeded("group-order", caps.group_order,
                                              static_cast<long>(group.elements_.size()));
                        next.push_back(group.elements_.size() - 1);
                    }
                }
            frontier = std::move(next);
        }
        return group;
    }

    int matrix_size() const { return elements_.front().size(); }
    long order() const { return static_cast<long>(elements_.size()); }
    const std::vector<SquareMatrix<K>>& elements() const { return elements_; }

    bool contains(const SquareMatrix<K>& m) const { return index_.count(m.entries()) > 0; }

    // Closure under product; quadratic, meant for sanity checks in tests.
    bool is_closed() const {
        for (const auto& a : elements_)
            for (const auto& b : elements_)
                if (!contains(a * b)) return false;
        return true;
    }

private:
    bool insert(SquareMatrix<K> m) {
        auto [it, fresh] = index_.emplace(m.entries(), elements_.size());
        if (fresh) elements_.push_back(std::move(m));
        return fresh;
    }

    std::vector<SquareMatrix<K>> elements_;
    std::map<std::vector<K>, size_t, detail::EntryLess<K>> index_;
};

}  // namespace cycinv
