#include "tsc/linalg.hpp"

namespace tsc {

void RowEchelon::reduce(SparseRow &row) const {
    for (auto it = row.begin(); it != row.end();) {
        auto p = rows_.find(it->first);
        if (p == rows_.end()) {
            ++it;
            continue;
        }
        mpq_class f = it->second;
        int col = it->first;
        for (auto &[c, v] : p->second) {
            mpq_class &dst = row[c];
            dst -= f * v;
        }
        for (auto jt = row.begin(); jt != row.end();) {
            if (jt->second == 0) jt = row.erase(jt);
            else ++jt;
        }
        it = row.upper_bound(col);
    }
}

bool RowEchelon::insert(SparseRow row) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->second == 0) it = row.erase(it);
        else ++it;
    }
    reduce(row);
    if (row.empty()) return false;
    int pivot = row.begin()->first;
    mpq_class lead = row.begin()->second;
    for (auto &kv : row) kv.second /= lead;
    // keep the stored rows fully reduced
    for (auto &[pc, r] : rows_) {
        auto it = r.find(pivot);
        if (it == r.end()) continue;
        mpq_class f = it->second;
        for (auto &[c, v] : row) r[c] -= f * v;
        for (auto jt = r.begin(); jt != r.end();) {
            if (jt->second == 0) jt = r.erase(jt);
            else ++jt;
        }
    }
    rows_.emplace(pivot, std::move(row));
    return true;
}

std::vector<std::vector<mpq_class>> RowEchelon::nullspace() const {
    std::vector<std::vector<mpq_class>> out;
    for (int free = 0; free < cols_; ++free) {
        if (rows_.count(free)) continue;
        std::vector<mpq_class> v(cols_, 0);
        v[free] = 1;
        for (auto &[p, r] : rows_) {
            auto it = r.find(free);
            if (it != r.end()) v[p] = -it->second;
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace tsc
