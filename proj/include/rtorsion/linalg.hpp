// Exact linear algebra over the rationals: row reduction, rank, determinant,
// kernel/image bases and preimages.  Everything is deterministic; kernel and
// image bases are the ones read off the reduced row-echelon form.

#pragma once

#include <cstddef>
#include <vector>

#include "rtorsion/errors.hpp"
#include "rtorsion/matrix.hpp"
#include "rtorsion/numeric.hpp"

namespace rtorsion {

struct RowEchelon {
    RationalMatrix reduced;            // reduced row-echelon form
    std::vector<std::size_t> pivots;   // pivot column per pivot row
};

inline RowEchelon reduced_row_echelon(const RationalMatrix& m) {
    RowEchelon out{m, {}};
    RationalMatrix& a = out.reduced;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        a.swap_rows(pivot_row, sel);
        Rat inv = Rat(1) / a(pivot_row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pivot_row || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(pivot_row, j);
        }
        out.pivots.push_back(col);
        ++pivot_row;
    }
    return out;
}

inline std::size_t rank(const RationalMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

// Exact determinant by fraction elimination; the 0x0 determinant is 1.
inline Rat determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquare(m.rows(), m.cols());
    std::size_t n = m.rows();
    RationalMatrix a = m;
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a(sel, col) == 0) ++sel;
        if (sel == n) return Rat(0);
        if (sel != col) {
            a.swap_rows(col, sel);
            det = -det;
        }
        det *= a(col, col);
        Rat inv = Rat(1) / a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            Rat f = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

// Basis of the null space { v : M v = 0 }, one vector per free column.
inline std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    RowEchelon re = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : re.pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(m.cols(), Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < re.pivots.size(); ++r) v[re.pivots[r]] = -re.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Basis of the column space: the original columns at the pivot positions.
inline std::vector<RationalVector> image_basis(const RationalMatrix& m) {
    RowEchelon re = reduced_row_echelon(m);
    std::vector<RationalVector> basis;
    basis.reserve(re.pivots.size());
    for (std::size_t p : re.pivots) basis.push_back(m.column(p));
    return basis;
}

// Any solution w of M w = v; free variables are set to zero.
inline RationalVector preimage(const RationalMatrix& m, const RationalVector& v) {
    if (v.size() != m.rows()) throw ShapeMismatch("preimage target has wrong length");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = v[i];
    }
    RowEchelon re = reduced_row_echelon(aug);
    for (std::size_t p : re.pivots)
        if (p == m.cols()) throw NotInImage();
    RationalVector w(m.cols(), Rat(0));
    for (std::size_t r = 0; r < re.pivots.size(); ++r) w[re.pivots[r]] = re.reduced(r, m.cols());
    return w;
}

inline RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquare(m.rows(), m.cols());
    std::size_t n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RowEchelon re = reduced_row_echelon(aug);
    if (re.pivots.size() < n || re.pivots[n - 1] >= n)
        throw SingularMatrix("matrix has no inverse");
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = re.reduced(i, n + j);
    return out;
}

// Random invertible matrix with small rational entries (rejection sampled).
inline RationalMatrix random_invertible(std::size_t n, Rng& rng) {
    for (;;) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rat(3, 2);
        if (n == 0 || determinant(m) != 0) return m;
    }
}

}  // namespace rtorsion
