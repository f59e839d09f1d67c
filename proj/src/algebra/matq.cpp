#include "algebra/matq.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace cypair {

Rational det(const MatQ& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw math_error("determinant of non-square matrix");
    MatQ a = m;
    Rational d(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            d = -d;
        }
        d *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return d;
}

size_t rank(const MatQ& m) {
    if (m.empty()) return 0;
    MatQ a = m;
    size_t rows = a.size(), cols = a[0].size();
    size_t rk = 0;
    for (size_t col = 0; col < cols && rk < rows; ++col) {
        size_t piv = rk;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rk]);
        for (size_t r = rk + 1; r < rows; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[rk][col];
            for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[rk][c];
        }
        ++rk;
    }
    return rk;
}

std::optional<AffineSolutions> solve_affine(const MatQ& a_in, const VecQ& b_in) {
    size_t rows = a_in.size();
    size_t cols = rows ? a_in[0].size() : 0;
    MatQ a = a_in;
    VecQ b = b_in;
    std::vector<long> pivot_col(rows, -1);
    size_t rk = 0;
    for (size_t col = 0; col < cols && rk < rows; ++col) {
        size_t piv = rk;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rk]);
        std::swap(b[piv], b[rk]);
        Rational p = a[rk][col];
        for (size_t c = 0; c < cols; ++c) a[rk][c] /= p;
        b[rk] /= p;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rk || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (size_t c = 0; c < cols; ++c) a[r][c] -= f * a[rk][c];
            b[r] -= f * b[rk];
        }
        pivot_col[rk] = static_cast<long>(col);
        ++rk;
    }
    for (size_t r = rk; r < rows; ++r)
        if (!b[r].is_zero()) return std::nullopt;

    AffineSolutions sol;
    sol.particular.assign(cols, Rational(0));
    std::vector<bool> is_pivot(cols, false);
    for (size_t r = 0; r < rk; ++r) {
        sol.particular[pivot_col[r]] = b[r];
        is_pivot[pivot_col[r]] = true;
    }
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        VecQ k(cols, Rational(0));
        k[c] = Rational(1);
        for (size_t r = 0; r < rk; ++r) k[pivot_col[r]] = -a[r][c];
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

std::optional<VecQ> solve(const MatQ& a, const VecQ& b) {
    auto s = solve_affine(a, b);
    if (!s) return std::nullopt;
    return s->particular;
}

long idet(const std::vector<std::vector<long>>& m) {
    size_t n = m.size();
    MatQ q(n, VecQ(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) q[i][j] = Rational(m[i][j]);
    Rational d = det(q);
    if (!d.is_integer()) throw math_error("integer determinant is not integral");
    Int num = d.numerator();
    if (!num.fits_slong_p()) throw math_error("determinant overflow");
    return num.get_si();
}

IntDiag int_diagonalize(std::vector<std::vector<long>> m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<std::vector<long>> u(rows, std::vector<long>(rows, 0));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;

    auto row_op = [&](size_t i, size_t j, long f) {  // row_i -= f*row_j
        for (size_t c = 0; c < cols; ++c) m[i][c] -= f * m[j][c];
        for (size_t c = 0; c < rows; ++c) u[i][c] -= f * u[j][c];
    };
    auto col_op = [&](size_t i, size_t j, long f) {  // col_i -= f*col_j
        for (size_t r = 0; r < rows; ++r) m[r][i] -= f * m[r][j];
    };

    size_t t = 0;
    while (t < rows && t < cols) {
        // find a nonzero pivot
        size_t pr = t, pc = t;
        bool found = false;
        for (size_t r = t; r < rows && !found; ++r)
            for (size_t c = t; c < cols && !found; ++c)
                if (m[r][c] != 0) {
                    pr = r;
                    pc = c;
                    found = true;
                }
        if (!found) break;
        std::swap(m[pr], m[t]);
        std::swap(u[pr], u[t]);
        for (size_t r = 0; r < rows; ++r) std::swap(m[r][pc], m[r][t]);
        // clear row and column t
        bool again = true;
        while (again) {
            again = false;
            for (size_t r = t + 1; r < rows; ++r) {
                if (m[r][t] == 0) continue;
                long f = m[r][t] / m[t][t];
                row_op(r, t, f);
                if (m[r][t] != 0) {
                    std::swap(m[r], m[t]);
                    std::swap(u[r], u[t]);
                    again = true;
                }
            }
            for (size_t c = t + 1; c < cols; ++c) {
                if (m[t][c] == 0) continue;
                long f = m[t][c] / m[t][t];
                col_op(c, t, f);
                if (m[t][c] != 0) {
                    for (size_t r = 0; r < rows; ++r) std::swap(m[r][c], m[r][t]);
                    again = true;
                }
            }
        }
        ++t;
    }
    IntDiag sf;
    for (size_t i = 0; i < std::min(rows, cols); ++i) sf.diag.push_back(std::abs(m[i][i]));
    sf.left = u;
    return sf;
}

}  // namespace cypair
