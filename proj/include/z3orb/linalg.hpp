#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace z3orb {

// Sparse vector over a field: column -> nonzero entry.
template <class F>
using SparseVec = std::map<int, F>;

// Incremental fully reduced row-echelon form over an exact field F.
// Every stored row has a leading 1 at its pivot and no entries in other
// pivot columns, so the residual of a vector is its normal form.
template <class F>
class SparseRref {
public:
    // Returns true when v enlarged the span.
    bool insert(SparseVec<F> v) {
        reduce_in_place(v);
        if (v.empty()) return false;
        const int p = v.begin()->first;
        const F lead = v.begin()->second;
        for (auto& [c, x] : v) x = x / lead;
        // clear column p from existing rows
        auto users = col_rows_.find(p);
        if (users != col_rows_.end()) {
            std::vector<int> rows(users->second.begin(), users->second.end());
            for (int r : rows) axpy(r, v);
        }
        for (const auto& [c, x] : v) col_rows_[c].insert(p);
        rows_.emplace(p, std::move(v));
        return true;
    }

    void reduce_in_place(SparseVec<F>& v) const {
        std::vector<std::pair<int, F>> hits;
        for (const auto& [c, x] : v)
            if (rows_.count(c)) hits.emplace_back(c, x);
        // rows carry no other pivot columns, so one pass suffices
        for (const auto& [p, x] : hits) {
            for (const auto& [c, y] : rows_.at(p)) {
                auto [it, ins] = v.try_emplace(c, F(0));
                it->second -= x * y;
                if (is_zero(it->second)) v.erase(it);
            }
        }
    }

    SparseVec<F> reduce(SparseVec<F> v) const {
        reduce_in_place(v);
        return v;
    }

    std::size_t rank() const { return rows_.size(); }
    bool is_pivot(int c) const { return rows_.count(c) != 0; }
    const std::map<int, SparseVec<F>>& rows() const { return rows_; }

    // Express v in terms of the inserted-order-independent pivot rows:
    // coefficients c_p with v = sum c_p row_p, or nullopt when v is outside.
    std::optional<std::map<int, F>> coordinates(const SparseVec<F>& v) const {
        std::map<int, F> out;
        for (const auto& [c, x] : v)
            if (rows_.count(c)) out.emplace(c, x);
        SparseVec<F> rest = reduce(v);
        if (!rest.empty()) return std::nullopt;
        return out;
    }

private:
    static bool is_zero(const F& x) { return x == F(0); }

    // row r -= row_r[p] * v, where v has pivot p
    void axpy(int r, const SparseVec<F>& v) {
        auto& row = rows_.at(r);
        const int p = v.begin()->first;
        const F f = row.at(p);
        for (const auto& [c, x] : v) {
            auto [it, ins] = row.try_emplace(c, F(0));
            it->second -= f * x;
            if (is_zero(it->second)) {
                row.erase(it);
                col_rows_[c].erase(r);
            } else if (ins) {
                col_rows_[c].insert(r);
            }
        }
    }

    std::map<int, SparseVec<F>> rows_;
    std::map<int, std::set<int>> col_rows_;
};

}  // namespace z3orb
