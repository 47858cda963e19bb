#include "chasles/linalg.hpp"

#include <cstdlib>

namespace chasles {

Matrix<Int> integer_kernel(const Matrix<Int>& m_rows, int ncols) {
    const int rows = static_cast<int>(m_rows.size());
    // Work on columns of m; mirror every column operation on u (= identity).
    Matrix<Int> w(ncols, std::vector<Int>(rows));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < ncols; ++j) w[j][i] = m_rows[i][j];
    Matrix<Int> u(ncols, std::vector<Int>(ncols, Int(0)));
    for (int j = 0; j < ncols; ++j) u[j][j] = 1;

    std::vector<bool> used(ncols, false);
    for (int r = 0; r < rows; ++r) {
        // Reduce the active columns against each other until at most one has
        // a nonzero entry in row r.
        while (true) {
            int best = -1;
            for (int j = 0; j < ncols; ++j) {
                if (used[j] || w[j][r] == 0) continue;
                if (best < 0 || abs(w[j][r]) < abs(w[best][r])) best = j;
            }
            if (best < 0) break;
            bool others = false;
            for (int j = 0; j < ncols; ++j) {
                if (j == best || used[j] || w[j][r] == 0) continue;
                others = true;
                Int q = w[j][r] / w[best][r];
                // round toward making the remainder small; integer division
                // truncates, good enough for termination
                for (int i = 0; i < rows; ++i) w[j][i] -= q * w[best][i];
                for (int i = 0; i < ncols; ++i) u[j][i] -= q * u[best][i];
            }
            if (!others) {
                used[best] = true;
                break;
            }
            bool any_left = false;
            for (int j = 0; j < ncols; ++j) {
                if (!used[j] && j != best && w[j][r] != 0) any_left = true;
            }
            if (!any_left) {
                used[best] = true;
                break;
            }
        }
    }

    Matrix<Int> kernel;
    for (int j = 0; j < ncols; ++j) {
        bool zero = true;
        for (int i = 0; i < rows; ++i) {
            if (w[j][i] != 0) {
                zero = false;
                break;
            }
        }
        if (zero) kernel.push_back(u[j]);
    }
    return kernel;
}

Matrix<Int> saturation_basis(const Matrix<Int>& rows, int ncols) {
    Matrix<Int> orth = integer_kernel(rows, ncols);
    // span_Q(rows) = orth-complement of the kernel; its integer points are the
    // kernel of the kernel.
    return integer_kernel(orth, ncols);
}

std::vector<Rat> solve_columns(const Matrix<Int>& s_cols, const std::vector<Int>& v) {
    const int r = static_cast<int>(s_cols.size());
    const int d = static_cast<int>(v.size());
    Matrix<Rat> aug(d, std::vector<Rat>(r + 1));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < r; ++j) aug[i][j] = Rat(s_cols[j][i]);
        aug[i][r] = Rat(v[i]);
    }
    // Gaussian elimination; S has full column rank by construction.
    int row = 0;
    std::vector<int> pivot_row(r, -1);
    for (int c = 0; c < r; ++c) {
        int found = -1;
        for (int i = row; i < d; ++i) {
            if (aug[i][c] != 0) {
                found = i;
                break;
            }
        }
        if (found < 0) throw Error(ErrorKind::DegenerateInput, "singular basis in solve_columns");
        std::swap(aug[row], aug[found]);
        for (int i = 0; i < d; ++i) {
            if (i == row || aug[i][c] == 0) continue;
            Rat factor = aug[i][c] / aug[row][c];
            for (int j = c; j <= r; ++j) aug[i][j] -= factor * aug[row][j];
        }
        pivot_row[c] = row;
        ++row;
    }
    for (int i = row; i < d; ++i) {
        if (aug[i][r] != 0) throw Error(ErrorKind::DegenerateInput, "inconsistent system in solve_columns");
    }
    std::vector<Rat> x(r);
    for (int c = 0; c < r; ++c) x[c] = aug[pivot_row[c]][r] / aug[pivot_row[c]][c];
    return x;
}

std::vector<Int> primitive_vector(std::vector<Int> v) {
    Int g(0);
    for (const Int& e : v) g = boost::multiprecision::gcd(g, e);
    if (g > 1) {
        for (Int& e : v) e /= g;
    }
    return v;
}

}  // namespace chasles
