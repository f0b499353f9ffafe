// Smith normal form of integer matrices with unimodular transform tracking.
//
// For an input A the result satisfies U * A * V = D with |det U| = |det V| = 1
// and D diagonal with d_1 | d_2 | ... | d_r followed by zeros.  Pivots are
// chosen by smallest nonzero absolute value, which keeps entry growth tame on
// the matrices this library meets; correctness rests on the invariants, not
// on the pivot strategy.

#pragma once

#include <cstddef>
#include <vector>

#include "rtorsion/linalg.hpp"
#include "rtorsion/matrix.hpp"
#include "rtorsion/numeric.hpp"

namespace rtorsion {

struct SnfResult {
    IntegerMatrix u;  // rows x rows, unimodular
    IntegerMatrix d;  // rows x cols, diagonal with divisibility chain
    IntegerMatrix v;  // cols x cols, unimodular

    std::vector<Int> invariant_factors() const {
        std::vector<Int> out;
        std::size_t n = std::min(d.rows(), d.cols());
        for (std::size_t i = 0; i < n; ++i)
            if (d(i, i) != 0) out.push_back(d(i, i));
        return out;
    }
};

namespace detail {

// Locates the entry of smallest nonzero |value| in the trailing submatrix.
inline bool find_pivot(const IntegerMatrix& a, std::size_t k, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = k; i < a.rows(); ++i)
        for (std::size_t j = k; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            Int mag = abs_of(a(i, j));
            if (!found || mag < best) {
                found = true;
                best = mag;
                pi = i;
                pj = j;
            }
        }
    return found;
}

inline void add_row_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

inline void add_col_multiple(IntegerMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace detail

inline SnfResult smith_normal_form(const IntegerMatrix& a) {
    SnfResult res{IntegerMatrix::identity(a.rows()), a, IntegerMatrix::identity(a.cols())};
    IntegerMatrix& d = res.d;
    IntegerMatrix& u = res.u;
    IntegerMatrix& v = res.v;

    std::size_t limit = std::min(d.rows(), d.cols());
    for (std::size_t k = 0; k < limit; ++k) {
        for (;;) {
            std::size_t pi = k, pj = k;
            if (!detail::find_pivot(d, k, pi, pj)) {
                // trailing submatrix is zero; diagonal ends here
                return res;
            }
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            bool clean = true;
            for (std::size_t i = k + 1; i < d.rows(); ++i) {
                if (d(i, k) == 0) continue;
                Int q = d(i, k) / d(k, k);  // truncated division leaves |remainder| < |pivot|
                if (q != 0) {
                    detail::add_row_multiple(d, i, k, -q);
                    detail::add_row_multiple(u, i, k, -q);
                }
                if (d(i, k) != 0) clean = false;
            }
            if (!clean) continue;  // a smaller pivot now exists below

            for (std::size_t j = k + 1; j < d.cols(); ++j) {
                if (d(k, j) == 0) continue;
                Int q = d(k, j) / d(k, k);
                if (q != 0) {
                    detail::add_col_multiple(d, j, k, -q);
                    detail::add_col_multiple(v, j, k, -q);
                }
                if (d(k, j) != 0) clean = false;
            }
            if (!clean) continue;

            // enforce the divisibility chain: pull a non-multiple into row k
            bool divides_all = true;
            for (std::size_t i = k + 1; i < d.rows() && divides_all; ++i)
                for (std::size_t j = k + 1; j < d.cols(); ++j)
                    if (d(i, j) % d(k, k) != 0) {
                        detail::add_row_multiple(d, k, i, Int(1));
                        detail::add_row_multiple(u, k, i, Int(1));
                        divides_all = false;
                        break;
                    }
            if (!divides_all) continue;

            if (d(k, k) < 0) {
                for (std::size_t j = 0; j < d.cols(); ++j) d(k, j) = -d(k, j);
                for (std::size_t j = 0; j < u.cols(); ++j) u(k, j) = -u(k, j);
            }
            break;
        }
    }
    return res;
}

}  // namespace rtorsion
