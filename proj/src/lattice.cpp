#include "isozero/lattice.hpp"

#include "isozero/errors.hpp"

#include <algorithm>

namespace isozero {

void lll_reduce(ZMat& basis) {
    const size_t n = basis.size();
    if (n <= 1) return;
    const mpq_class delta(99, 100);

    // rational Gram-Schmidt data
    std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n, 0));
    std::vector<mpq_class> B(n, 0); // squared norms of b*_i

    auto recompute = [&]() {
        std::vector<std::vector<mpq_class>> gso(n);
        for (size_t i = 0; i < n; ++i) {
            std::vector<mpq_class> v(basis[i].size());
            for (size_t k = 0; k < v.size(); ++k) v[k] = mpq_class(basis[i][k]);
            for (size_t j = 0; j < i; ++j) {
                mpq_class num(0);
                for (size_t k = 0; k < v.size(); ++k) num += mpq_class(basis[i][k]) * gso[j][k];
                mpq_class m = B[j] == 0 ? mpq_class(0) : num / B[j];
                mu[i][j] = m;
                for (size_t k = 0; k < v.size(); ++k) v[k] -= m * gso[j][k];
            }
            mpq_class nb(0);
            for (const auto& x : v) nb += x * x;
            B[i] = nb;
            gso[i] = std::move(v);
        }
    };

    recompute();
    size_t k = 1;
    int guard = 0;
    while (k < n) {
        if (++guard > 200000) raise(errc::internal, "LLL did not terminate");
        for (size_t j = k; j-- > 0;) {
            mpq_class m = mu[k][j];
            mpq_class half(1, 2);
            if (m > half || m < -half) {
                mpz_class r;
                mpq_class shifted = m + half;
                mpz_fdiv_q(r.get_mpz_t(), shifted.get_num().get_mpz_t(),
                           shifted.get_den().get_mpz_t());
                for (size_t t = 0; t < basis[k].size(); ++t) basis[k][t] -= r * basis[j][t];
                recompute();
            }
        }
        mpq_class lhs = B[k];
        mpq_class rhs = (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(basis[k], basis[k - 1]);
            recompute();
            k = k > 1 ? k - 1 : 1;
        }
    }
}

ZMat integer_kernel(const ZMat& A) {
    if (A.empty()) raise(errc::internal, "integer_kernel of empty matrix");
    const size_t rows = A.size(), cols = A[0].size();
    // unimodular column reduction; columns of U where the A-part became zero
    // span the saturated kernel
    ZMat M(rows, ZVec(cols, 0));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) M[i][j] = A[i][j];
    ZMat U(cols, ZVec(cols, 0));
    for (size_t j = 0; j < cols; ++j) U[j][j] = 1;

    size_t pivot_col = 0;
    for (size_t r = 0; r < rows && pivot_col < cols; ++r) {
        for (;;) {
            size_t nonzero = cols;
            int count = 0;
            for (size_t j = pivot_col; j < cols; ++j)
                if (M[r][j] != 0) {
                    ++count;
                    if (nonzero == cols) nonzero = j;
                }
            if (count == 0) break;
            if (count == 1) {
                if (nonzero != pivot_col) {
                    for (size_t i = 0; i < rows; ++i) std::swap(M[i][nonzero], M[i][pivot_col]);
                    for (size_t i = 0; i < cols; ++i) std::swap(U[i][nonzero], U[i][pivot_col]);
                }
                ++pivot_col;
                break;
            }
            size_t best = cols;
            mpz_class bestv;
            for (size_t j = pivot_col; j < cols; ++j) {
                if (M[r][j] == 0) continue;
                mpz_class a = abs(M[r][j]);
                if (best == cols || a < bestv) {
                    best = j;
                    bestv = a;
                }
            }
            for (size_t j = pivot_col; j < cols; ++j) {
                if (j == best || M[r][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), M[r][j].get_mpz_t(), M[r][best].get_mpz_t());
                mpz_class rem = M[r][j] - q * M[r][best];
                if (2 * rem > abs(M[r][best])) q += (M[r][best] > 0 ? 1 : -1);
                if (q != 0) {
                    for (size_t i = 0; i < rows; ++i) M[i][j] -= q * M[i][best];
                    for (size_t i = 0; i < cols; ++i) U[i][j] -= q * U[i][best];
                }
            }
        }
    }
    ZMat kernel;
    for (size_t j = 0; j < cols; ++j) {
        bool zero = true;
        for (size_t i = 0; i < rows; ++i)
            if (M[i][j] != 0) {
                zero = false;
                break;
            }
        if (!zero) continue;
        ZVec v(cols);
        for (size_t i = 0; i < cols; ++i) v[i] = U[i][j];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

ZVec integer_relation(const std::vector<std::pair<mpz_class, mpz_class>>& xs_fixed) {
    const size_t k = xs_fixed.size();
    if (k == 0) return {};
    ZMat basis(k, ZVec(k + 2, 0));
    for (size_t i = 0; i < k; ++i) {
        basis[i][i] = 1;
        basis[i][k] = xs_fixed[i].first;
        basis[i][k + 1] = xs_fixed[i].second;
    }
    lll_reduce(basis);
    ZVec best;
    mpz_class bestsz;
    for (const auto& row : basis) {
        mpz_class head(0), tail(0);
        for (size_t i = 0; i < k; ++i) head += row[i] * row[i];
        tail = row[k] * row[k] + row[k + 1] * row[k + 1];
        if (head == 0) continue;
        mpz_class total = head + tail;
        if (best.empty() || total < bestsz) {
            best.assign(row.begin(), row.begin() + k);
            bestsz = total;
        }
    }
    return best;
}

} // namespace isozero
