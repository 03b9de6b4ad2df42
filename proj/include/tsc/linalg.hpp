#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace tsc {

using SparseRow = std::map<int, mpq_class>;

// Incremental row reduction over Q; rows are kept with distinct pivots.
class RowEchelon {
public:
    explicit RowEchelon(int columns) : cols_(columns) {}
    // reduce and insert; returns false if the row was dependent
    bool insert(SparseRow row);
    int rank() const { return static_cast<int>(rows_.size()); }
    // basis of {x : r.x = 0 for every inserted row}
    std::vector<std::vector<mpq_class>> nullspace() const;

private:
    void reduce(SparseRow &row) const;
    int cols_;
    std::map<int, SparseRow> rows_; // pivot column -> row with leading 1
};

} // namespace tsc
