#include "qborel/modl.hpp"

#include <numeric>
#include <tuple>

#include "qborel/errors.hpp"

namespace qb {

long mod_reduce(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

namespace {

// extended gcd: returns (g, u, v) with u*a + v*b = g
std::tuple<long, long, long> xgcd(long a, long b) {
    if (b == 0) return {a, 1, 0};
    auto [g, u, v] = xgcd(b, a % b);
    return {g, v, u - (a / b) * v};
}

}  // namespace

long mod_inverse(long a, long n) {
    auto [g, u, v] = xgcd(mod_reduce(a, n), n);
    (void)v;
    if (g != 1 && g != -1) throw DomainError("element not invertible mod n");
    return mod_reduce(g == 1 ? u : -u, n);
}

std::optional<ModVec> solve_mod(const ModMat& a_in, const ModVec& b_in, long n) {
    size_t rows = a_in.size();
    size_t cols = rows ? a_in[0].size() : 0;
    ModMat a = a_in;
    ModVec b = b_in;
    for (auto& row : a)
        for (auto& x : row) x = mod_reduce(x, n);
    for (auto& x : b) x = mod_reduce(x, n);

    std::vector<int> pivot_row_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // pick the row whose entry has the smallest gcd with n
        long best_g = 0;
        size_t best = rows;
        for (size_t i = r; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            long g = std::gcd(a[i][c], n);
            if (best == rows || g < best_g) {
                best = i;
                best_g = g;
            }
        }
        if (best == rows) continue;
        std::swap(a[r], a[best]);
        std::swap(b[r], b[best]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            long p = a[r][c], q = a[i][c];
            auto [g, u, v] = xgcd(p, q);
            long pg = p / g, qg = q / g;
            // unimodular: (row_r, row_i) <- (u*row_r + v*row_i, -qg*row_r + pg*row_i)
            for (size_t j = 0; j < cols; ++j) {
                long x = a[r][j], y = a[i][j];
                a[r][j] = mod_reduce(u * x + v * y, n);
                a[i][j] = mod_reduce(-qg * x + pg * y, n);
            }
            long x = b[r], y = b[i];
            b[r] = mod_reduce(u * x + v * y, n);
            b[i] = mod_reduce(-qg * x + pg * y, n);
        }
        pivot_row_of_col[c] = static_cast<int>(r);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;

    ModVec x(cols, 0);
    for (size_t cc = cols; cc-- > 0;) {
        int pr = pivot_row_of_col[cc];
        if (pr < 0) continue;
        long rhs = b[pr];
        for (size_t j = cc + 1; j < cols; ++j) rhs = mod_reduce(rhs - a[pr][j] * x[j], n);
        long p = a[pr][cc];
        long g = std::gcd(p, n);
        if (rhs % g != 0) return std::nullopt;
        long n2 = n / g;
        x[cc] = n2 == 1 ? 0 : mod_reduce((rhs / g) * mod_inverse(p / g, n2), n2);
    }
    // verify against the original system (pivots above may interact for
    // composite n; a failed check means genuinely unsolvable along this path)
    for (size_t i = 0; i < rows; ++i) {
        long s = 0;
        for (size_t j = 0; j < cols; ++j) s = mod_reduce(s + a_in[i][j] * x[j], n);
        if (s != mod_reduce(b_in[i], n)) return std::nullopt;
    }
    return x;
}

ModVec mat_vec_mod(const ModMat& a, const ModVec& x, long n) {
    ModVec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        long s = 0;
        for (size_t j = 0; j < x.size(); ++j) s = mod_reduce(s + a[i][j] * x[j], n);
        r[i] = s;
    }
    return r;
}

ModMat mat_mul_mod(const ModMat& a, const ModMat& b, long n) {
    size_t m = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    ModMat r(m, ModVec(p, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < p; ++j) r[i][j] = mod_reduce(r[i][j] + a[i][t] * b[t][j], n);
        }
    return r;
}

ModMat mat_transpose(const ModMat& a) {
    size_t m = a.size(), k = a.empty() ? 0 : a[0].size();
    ModMat r(k, ModVec(m, 0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < k; ++j) r[j][i] = a[i][j];
    return r;
}

bool mat_invertible_mod(const ModMat& a, long n) {
    size_t m = a.size();
    for (size_t col = 0; col < m; ++col) {
        ModVec e(m, 0);
        e[col] = 1;
        if (!solve_mod(a, e, n)) return false;
    }
    return true;
}

}  // namespace qb
