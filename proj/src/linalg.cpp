#include "matval/linalg.hpp"

#include <cassert>

namespace matval {

int matrix_rank(const QMatrix& m) {
    if (m.empty()) return 0;
    QMatrix a = m;
    size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::optional<QVector> solve_in_span(const QMatrix& basis_rows, const QVector& target) {
    size_t d = basis_rows.size();
    size_t n = target.size();
    if (d == 0) {
        for (const auto& t : target)
            if (t != 0) return std::nullopt;
        return QVector{};
    }
    assert(basis_rows[0].size() == n);
    // Augmented system: columns are the basis vectors, rhs is the target.
    QMatrix a(n, QVector(d + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < d; ++k) a[i][k] = basis_rows[k][i];
        a[i][d] = target[i];
    }
    size_t r = 0;
    std::vector<size_t> pivot_col;
    for (size_t c = 0; c < d && r < n; ++c) {
        size_t piv = r;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[r]);
        Rational p = a[r][c];
        for (size_t j = 0; j <= d; ++j) a[r][j] /= p;
        for (size_t i = 0; i < n; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = 0; j <= d; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < n; ++i)
        if (a[i][d] != 0) return std::nullopt;  // inconsistent
    if (r < d) return std::nullopt;             // basis rows dependent; caller bug
    QVector y(d, Rational(0));
    for (size_t i = 0; i < r; ++i) y[pivot_col[i]] = a[i][d];
    return y;
}

namespace {

// Unimodular row pair operation that puts gcd(a[r1][c], a[r2][c]) into r1
// and zero into r2 (extended Euclid).
void gcd_rows(ZMatrix& a, size_t r1, size_t r2, size_t c) {
    Integer x = a[r1][c], y = a[r2][c];
    if (y == 0) return;
    if (x == 0) {
        std::swap(a[r1], a[r2]);
        return;
    }
    // extended gcd: g = u*x + v*y
    Integer g0 = x, g1 = y, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
    while (g1 != 0) {
        Integer q = g0 / g1;  // truncated division is fine for the invariant
        Integer g2 = g0 - q * g1;
        Integer u2 = u0 - q * u1;
        Integer v2 = v0 - q * v1;
        g0 = g1; g1 = g2; u0 = u1; u1 = u2; v0 = v1; v1 = v2;
    }
    Integer g = g0, u = u0, v = v0;
    Integer p = x / g, q = y / g;
    size_t cols = a[r1].size();
    for (size_t j = 0; j < cols; ++j) {
        Integer n1 = u * a[r1][j] + v * a[r2][j];
        Integer n2 = -q * a[r1][j] + p * a[r2][j];
        a[r1][j] = n1;
        a[r2][j] = n2;
    }
}

}  // namespace

ZMatrix integer_kernel(const ZMatrix& m, int cols) {
    size_t k = m.size();
    size_t n = static_cast<size_t>(cols);
    // Work on [M^T | I_n]; rows whose left block reduces to zero give the kernel.
    ZMatrix a(n, ZVector(k + n, Integer(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) a[i][j] = m[j][i];
        a[i][k + i] = 1;
    }
    size_t r = 0;
    for (size_t c = 0; c < k && r < n; ++c) {
        for (size_t i = r + 1; i < n; ++i)
            if (a[i][c] != 0) gcd_rows(a, r, i, c);
        if (a[r][c] != 0) ++r;
    }
    ZMatrix kernel;
    for (size_t i = r; i < n; ++i) {
        bool zero = true;
        for (size_t j = 0; j < k; ++j)
            if (a[i][j] != 0) { zero = false; break; }
        assert(zero);
        (void)zero;
        kernel.emplace_back(a[i].begin() + k, a[i].end());
    }
    return kernel;
}

Integer integer_det(ZMatrix m) {
    size_t n = m.size();
    if (n == 0) return 1;
    assert(m[0].size() == n);
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace matval
