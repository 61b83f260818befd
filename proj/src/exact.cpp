#include "invpoly/exact.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace invpoly {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t b)
{
    std::int64_t m = std::llabs(b);
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

BigInt determinant(std::vector<std::vector<BigInt>> m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) {
                ++swap_row;
            }
            if (swap_row == n) {
                return 0;
            }
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt determinant(const IntMatrix& m)
{
    std::vector<std::vector<BigInt>> big(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) {
            throw std::invalid_argument("determinant: matrix is not square");
        }
        big[i].assign(m[i].begin(), m[i].end());
    }
    return determinant(std::move(big));
}

std::size_t rank(std::vector<std::vector<Rational>> m)
{
    if (m.empty()) {
        return 0;
    }
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) {
                continue;
            }
            Rational factor = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] -= factor * m[r][j];
            }
        }
        ++r;
    }
    return r;
}

namespace {

IntMatrix identity(std::size_t n)
{
    IntMatrix id(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        id[i][i] = 1;
    }
    return id;
}

struct SmithWork {
    IntMatrix a, u, v, vinv;
    std::size_t rows, cols;

    // row_i += c * row_k
    void add_row(std::size_t i, std::size_t k, std::int64_t c)
    {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] += c * a[k][j];
        for (std::size_t j = 0; j < rows; ++j) u[i][j] += c * u[k][j];
    }
    // col_j += c * col_k
    void add_col(std::size_t j, std::size_t k, std::int64_t c)
    {
        for (std::size_t i = 0; i < rows; ++i) a[i][j] += c * a[i][k];
        for (std::size_t i = 0; i < cols; ++i) v[i][j] += c * v[i][k];
        for (std::size_t i = 0; i < cols; ++i) vinv[k][i] -= c * vinv[j][i];
    }
    void swap_rows(std::size_t i, std::size_t k)
    {
        std::swap(a[i], a[k]);
        std::swap(u[i], u[k]);
    }
    void swap_cols(std::size_t j, std::size_t k)
    {
        for (auto& row : a) std::swap(row[j], row[k]);
        for (auto& row : v) std::swap(row[j], row[k]);
        std::swap(vinv[j], vinv[k]);
    }
    void negate_row(std::size_t i)
    {
        for (auto& x : a[i]) x = -x;
        for (auto& x : u[i]) x = -x;
    }
};

} // namespace

SmithForm smith_normal_form(const IntMatrix& input)
{
    SmithWork w;
    w.a = input;
    w.rows = input.size();
    w.cols = w.rows == 0 ? 0 : input[0].size();
    w.u = identity(w.rows);
    w.v = identity(w.cols);
    w.vinv = identity(w.cols);

    const std::size_t steps = std::min(w.rows, w.cols);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            std::size_t bi = w.rows, bj = w.cols;
            for (std::size_t i = t; i < w.rows; ++i) {
                for (std::size_t j = t; j < w.cols; ++j) {
                    if (w.a[i][j] != 0 && (bi == w.rows || std::llabs(w.a[i][j]) < std::llabs(w.a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
                }
            }
            if (bi == w.rows) {
                break;
            }
            if (bi != t) w.swap_rows(bi, t);
            if (bj != t) w.swap_cols(bj, t);

            bool dirty = false;
            for (std::size_t i = t + 1; i < w.rows; ++i) {
                std::int64_t q = floor_div(w.a[i][t], w.a[t][t]);
                if (q != 0) w.add_row(i, t, -q);
                if (w.a[i][t] != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < w.cols; ++j) {
                std::int64_t q = floor_div(w.a[t][j], w.a[t][t]);
                if (q != 0) w.add_col(j, t, -q);
                if (w.a[t][j] != 0) dirty = true;
            }
            if (dirty) {
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < w.rows && divisible; ++i) {
                for (std::size_t j = t + 1; j < w.cols; ++j) {
                    if (w.a[i][j] % w.a[t][t] != 0) {
                        w.add_row(t, i, 1);
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) {
                break;
            }
        }
        if (w.a[t][t] < 0) {
            w.negate_row(t);
        }
    }

    SmithForm out;
    out.d = w.a;
    out.u = w.u;
    out.v = w.v;
    out.v_inverse = w.vinv;
    for (std::size_t t = 0; t < steps; ++t) {
        out.diagonal.push_back(w.a[t][t]);
    }
    return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = k == 0 ? 0 : b[0].size();
    IntMatrix c(n, std::vector<std::int64_t>(m, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            for (std::size_t j = 0; j < m; ++j) {
                c[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return c;
}

} // namespace invpoly
