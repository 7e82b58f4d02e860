#include "nct/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace nct {

namespace {

std::size_t rows_of(const ZMatrix& A) { return A.size(); }
std::size_t cols_of(const ZMatrix& A) { return A.empty() ? 0 : A[0].size(); }

void swap_rows(ZMatrix& M, std::size_t a, std::size_t b) {
    if (a != b) std::swap(M[a], M[b]);
}

void swap_cols(ZMatrix& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : M) std::swap(row[a], row[b]);
}

// row[a] += q * row[b]
void add_row(ZMatrix& M, std::size_t a, std::size_t b, const BigInt& q) {
    for (std::size_t j = 0; j < M[a].size(); ++j) M[a][j] += q * M[b][j];
}

// col[a] += q * col[b]
void add_col(ZMatrix& M, std::size_t a, std::size_t b, const BigInt& q) {
    for (auto& row : M) row[a] += q * row[b];
}

void negate_row(ZMatrix& M, std::size_t a) {
    for (auto& v : M[a]) v = -v;
}

}  // namespace

ZMatrix z_identity(std::size_t n) {
    ZMatrix I(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

ZMatrix z_multiply(const ZMatrix& A, const ZMatrix& B) {
    const std::size_t m = rows_of(A), k = cols_of(A), n = cols_of(B);
    if (rows_of(B) != k) throw std::invalid_argument("z_multiply: shape mismatch");
    ZMatrix C(m, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (A[i][l] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][l] * B[l][j];
        }
    return C;
}

bool z_equal(const ZMatrix& A, const ZMatrix& B) { return A == B; }

SmithDecomposition smith_normal_form(const ZMatrix& A) {
    const std::size_t m = rows_of(A), n = cols_of(A);
    SmithDecomposition out{A, z_identity(m), z_identity(n)};
    ZMatrix& D = out.D;
    ZMatrix& U = out.U;
    ZMatrix& V = out.V;

    const std::size_t steps = std::min(m, n);
    for (std::size_t i = 0; i < steps; ++i) {
        for (;;) {
            // smallest nonzero |entry| in the trailing submatrix
            bool found = false;
            std::size_t pr = i, pc = i;
            BigInt best = 0;
            for (std::size_t r = i; r < m; ++r)
                for (std::size_t c = i; c < n; ++c) {
                    if (D[r][c] == 0) continue;
                    BigInt mag = abs(D[r][c]);
                    if (!found || mag < best) {
                        found = true;
                        best = mag;
                        pr = r;
                        pc = c;
                    }
                }
            if (!found) return out;  // trailing submatrix is zero

            swap_rows(D, i, pr);
            swap_rows(U, i, pr);
            swap_cols(D, i, pc);
            swap_cols(V, i, pc);

            bool reduced = true;
            for (std::size_t r = i + 1; r < m; ++r) {
                if (D[r][i] == 0) continue;
                BigInt q = D[r][i] / D[i][i];  // truncated division leaves |rem| < |pivot|
                if (q != 0) {
                    add_row(D, r, i, -q);
                    add_row(U, r, i, -q);
                }
                if (D[r][i] != 0) reduced = false;
            }
            for (std::size_t c = i + 1; c < n; ++c) {
                if (D[i][c] == 0) continue;
                BigInt q = D[i][c] / D[i][i];
                if (q != 0) {
                    add_col(D, c, i, -q);
                    add_col(V, c, i, -q);
                }
                if (D[i][c] != 0) reduced = false;
            }
            if (!reduced) continue;

            // divisibility: fold a bad row in and restart the pivot hunt
            bool divides_all = true;
            std::size_t br = i + 1;
            for (std::size_t r = i + 1; r < m && divides_all; ++r)
                for (std::size_t c = i + 1; c < n; ++c)
                    if (D[r][c] % D[i][i] != 0) {
                        divides_all = false;
                        br = r;
                        break;
                    }
            if (!divides_all) {
                add_row(D, i, br, 1);
                add_row(U, i, br, 1);
                continue;
            }
            break;
        }
        if (D[i][i] < 0) {
            negate_row(D, i);
            negate_row(U, i);
        }
    }
    return out;
}

std::vector<std::vector<BigInt>> integer_kernel(const ZMatrix& A, std::size_t cols) {
    if (rows_of(A) == 0) {
        auto I = z_identity(cols);
        std::vector<std::vector<BigInt>> basis;
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<BigInt> e(cols, 0);
            e[j] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    if (cols_of(A) != cols) throw std::invalid_argument("integer_kernel: column count mismatch");

    SmithDecomposition snf = smith_normal_form(A);
    const std::size_t m = rows_of(A);
    std::vector<std::vector<BigInt>> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        bool zero_column = j >= std::min(m, cols) || snf.D[j][j] == 0;
        if (!zero_column) continue;
        // A (V e_j) = U^{-1} D e_j = 0
        std::vector<BigInt> v(cols);
        for (std::size_t r = 0; r < cols; ++r) v[r] = snf.V[r][j];

        BigInt content = 0;
        for (const auto& c : v) content = gcd(content, c);
        if (content > 1)
            for (auto& c : v) c /= content;
        for (const auto& c : v) {
            if (c == 0) continue;
            if (c < 0)
                for (auto& cc : v) cc = -cc;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace nct
