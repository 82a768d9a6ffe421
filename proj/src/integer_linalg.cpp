#include "hopfmu/integer_linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace hopfmu {

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor division (C++ integer division truncates toward zero)
Int fdiv(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

} // namespace

SmithResult smith_normal_form(IntMat m) {
    const int rows = m.rows(), cols = m.cols();
    SmithResult res;
    int t = 0;
    while (t < rows && t < cols) {
        // find minimal-magnitude nonzero pivot in the trailing submatrix
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (m.at(i, j) != 0 &&
                    (pi < 0 || iabs(m.at(i, j)) < iabs(m.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        for (int j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
        for (int i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, pj));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = fdiv(m.at(i, t), m.at(t, t));
                for (int j = 0; j < cols; ++j) m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0) { // remainder smaller than pivot: swap up
                    for (int j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(i, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int j = t + 1; j < cols; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = fdiv(m.at(t, j), m.at(t, t));
                for (int i = 0; i < rows; ++i) m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            // enforce divisibility: pivot must divide the trailing submatrix
            for (int i = t + 1; i < rows && clean; ++i)
                for (int j = t + 1; j < cols && clean; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        for (int jj = 0; jj < cols; ++jj) m.at(t, jj) += m.at(i, jj);
                        clean = false;
                    }
        }
        ++t;
    }
    res.rank = t;
    for (int i = 0; i < t; ++i) {
        Int d = iabs(m.at(i, i));
        res.invariant_factors.push_back(d);
    }
    return res;
}

int integer_rank(const IntMat& m) { return smith_normal_form(m).rank; }

std::optional<std::vector<Int>> solve_integer_system(const IntMat& a,
                                                     const std::vector<Int>& b) {
    const int rows = a.rows(), cols = a.cols();
    IntMat w = a;
    // u: cols x cols unimodular column-operation record
    IntMat u(cols, cols);
    for (int i = 0; i < cols; ++i) u.at(i, i) = 1;

    auto col_axpy = [&](int dst, int src, const Int& q) { // col_dst -= q * col_src
        if (q == 0) return;
        for (int i = 0; i < rows; ++i) w.at(i, dst) -= q * w.at(i, src);
        for (int i = 0; i < cols; ++i) u.at(i, dst) -= q * u.at(i, src);
    };
    auto col_swap = [&](int x, int y) {
        if (x == y) return;
        for (int i = 0; i < rows; ++i) std::swap(w.at(i, x), w.at(i, y));
        for (int i = 0; i < cols; ++i) std::swap(u.at(i, x), u.at(i, y));
    };
    auto col_negate = [&](int x) {
        for (int i = 0; i < rows; ++i) w.at(i, x) = -w.at(i, x);
        for (int i = 0; i < cols; ++i) u.at(i, x) = -u.at(i, x);
    };

    std::vector<int> pivot_row_of_col;
    int c = 0;
    for (int r = 0; r < rows && c < cols; ++r) {
        // gcd-eliminate row r across columns >= c
        while (true) {
            int best = -1;
            for (int j = c; j < cols; ++j)
                if (w.at(r, j) != 0 && (best < 0 || iabs(w.at(r, j)) < iabs(w.at(r, best))))
                    best = j;
            if (best < 0) break;
            col_swap(c, best);
            bool others = false;
            for (int j = c + 1; j < cols; ++j) {
                if (w.at(r, j) == 0) continue;
                col_axpy(j, c, fdiv(w.at(r, j), w.at(r, c)));
                if (w.at(r, j) != 0) others = true;
            }
            if (!others) break;
        }
        if (w.at(r, c) == 0) continue; // row has no pivot
        if (w.at(r, c) < 0) col_negate(c);
        // canonical reduction of earlier columns in this row
        for (int j = 0; j < c; ++j) col_axpy(j, c, fdiv(w.at(r, j), w.at(r, c)));
        pivot_row_of_col.push_back(r);
        ++c;
    }
    const int npiv = static_cast<int>(pivot_row_of_col.size());

    // forward substitution on the column echelon form
    std::vector<Int> y(cols, 0);
    int next_piv = 0;
    for (int r = 0; r < rows; ++r) {
        // columns with pivot row >= r have zero entries at row r
        Int acc = b[r];
        for (int j = 0; j < npiv; ++j)
            if (pivot_row_of_col[j] < r) acc -= w.at(r, j) * y[j];
        if (next_piv < npiv && pivot_row_of_col[next_piv] == r) {
            const Int& p = w.at(r, next_piv);
            if (acc % p != 0) return std::nullopt;
            y[next_piv] = acc / p;
            ++next_piv;
        } else if (acc != 0) {
            return std::nullopt;
        }
    }
    // x = u * y
    std::vector<Int> x(cols, 0);
    for (int i = 0; i < cols; ++i) {
        Int s = 0;
        for (int j = 0; j < cols; ++j)
            if (y[j] != 0) s += u.at(i, j) * y[j];
        x[i] = s;
    }
    return x;
}

} // namespace hopfmu
