// Exact integer matrices, Smith normal form, and HNF-based linear solving.
#pragma once

#include <optional>
#include <vector>

#include "hopfmu/types.hpp"

namespace hopfmu {

class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct SmithResult {
    int rank = 0;
    std::vector<Int> invariant_factors; // positive, divisibility chain, rank of them
};

// Smith normal form by pivoting on minimal-magnitude entries.
SmithResult smith_normal_form(IntMat m);

int integer_rank(const IntMat& m);

// Solve A x = b over the integers (any solution), or nullopt if unsolvable.
// Deterministic: column-style Hermite reduction processed in fixed order.
std::optional<std::vector<Int>> solve_integer_system(const IntMat& a,
                                                     const std::vector<Int>& b);

} // namespace hopfmu
