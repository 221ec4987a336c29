#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace cycinv {

// Sparse vector over an exact field K, indexed by long (here: deg-lex
// ranks of words).  Stored entries are nonzero.
template <class K>
class SparseVec {
public:
    void set(long index, K value) {
        if (value.is_zero())
            entries_.erase(index);
        else
            entries_.insert_or_assign(index, std::move(value));
    }

    void add(long index, const K& value) {
        auto it = entries_.find(index);
        if (it == entries_.end()) {
            if (!value.is_zero()) entries_.emplace(index, value);
        } else {
            it->second = it->second + value;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    // this -= factor * other
    void subtract_scaled(const SparseVec& other, const K& factor) {
        for (const auto& [idx, val] : other.entries_) add(idx, K() - factor * val);
    }

    void scale(const K& factor) {
        for (auto& [idx, val] : entries_) val = val * factor;
    }

    bool is_zero() const { return entries_.empty(); }
    long leading_index() const { return entries_.begin()->first; }
    const K& leading_value() const { return entries_.begin()->second; }
    const std::map<long, K>& entries() const { return entries_; }

private:
    std::map<long, K> entries_;
};

// Row space in reduced row-echelon form over an exact field, built
// incrementally.  Each basis row is normalized to a leading 1, with
// back-substitution keeping pivot columns clear; pivots are the smallest
// indices (deg-lex pivoting when rows are keyed by word ranks).
//
// Every basis row also carries its expression as a combination of the
// inserted rows, so memberships come with solvable certificates.
template <class K>
class RowSpace {
public:
    // Inserts a row; returns its index in the insertion list whether or
    // not it enlarged the span.
    long insert(SparseVec<K> row) {
        const long inserted_index = inserted_count_++;
        SparseVec<K> combo;
        combo.set(inserted_index, K(1));
        reduce(row, combo);
        if (row.is_zero()) return inserted_index;
        const K inv = row.leading_value().inverse();
        row.scale(inv);
        combo.scale(inv);
        const long pivot = row.leading_index();
        // Clear this pivot from the existing rows.
        for (auto& [p, basis_row] : rows_) {
            auto it = basis_row.row.entries().find(pivot);
            if (it == basis_row.row.entries().end()) continue;
            const K factor = it->second;
            basis_row.row.subtract_scaled(row, factor);
            basis_row.combo.subtract_scaled(combo, factor);
        }
        rows_.emplace(pivot, BasisRow{std::move(row), std::move(combo)});
        return inserted_index;
    }

    long rank() const { return static_cast<long>(rows_.size()); }

    bool contains(SparseVec<K> row) const {
        SparseVec<K> combo;
        reduce(row, combo);
        return row.is_zero();
    }

    // If the row lies in the span, returns coefficients c with
    // row = sum c[i] * inserted_row[i]; otherwise nullopt.
    std::optional<std::map<long, K>> solve(SparseVec<K> row) const {
        SparseVec<K> combo;
        reduce(row, combo);
        if (!row.is_zero()) return std::nullopt;
        // row = original - sum(consumed basis rows) = 0, and combo tracked
        // "original minus consumed", so the certificate is -combo without
        // the virtual original entry (which is not present here: reduce()
        // starts from an empty combo for queries).
        std::map<long, K> cert;
        for (const auto& [idx, val] : combo.entries()) cert.emplace(idx, K() - val);
        return cert;
    }

    // Pivot-indexed reduced rows, for inspection and golden output.
    std::vector<std::pair<long, const SparseVec<K>*>> basis() const {
        std::vector<std::pair<long, const SparseVec<K>*>> out;
        out.reserve(rows_.size());
        for (const auto& [pivot, basis_row] : rows_) out.emplace_back(pivot, &basis_row.row);
        return out;
    }

private:
    struct BasisRow {
        SparseVec<K> row;
        SparseVec<K> combo;  // row as a combination of inserted rows
    };

    void reduce(SparseVec<K>& row, SparseVec<K>& combo) const {
        while (!row.is_zero()) {
            // Find the first coordinate of the row sitting in a pivot column.
            const BasisRow* basis_row = nullptr;
            K factor;
            for (const auto& [idx, val] : row.entries()) {
                auto it = rows_.find(idx);
                if (it == rows_.end()) continue;
                basis_row = &it->second;
                factor = val;
                break;
            }
            if (basis_row == nullptr) return;
            row.subtract_scaled(basis_row->row, factor);
            combo.subtract_scaled(basis_row->combo, factor);
        }
    }

    std::map<long, BasisRow> rows_;
    long inserted_count_ = 0;
};

}  // namespace cycinv
