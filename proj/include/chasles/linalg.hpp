#ifndef CHASLES_LINALG_HPP
#define CHASLES_LINALG_HPP

#include "chasles/error.hpp"
#include "chasles/rational.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace chasles {

// Customization point for the fraction-free routines. Domains must provide
// exact division; gcd/is_negative drive content normalization of kernel
// vectors (fields reduce everything on the fly, so their gcd is trivial).
template <class D>
struct DomainTraits;

template <>
struct DomainTraits<Int> {
    static constexpr bool is_field = false;
    static Int exact_div(const Int& a, const Int& b) { return a / b; }
    static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
    static bool is_negative(const Int& a) { return a < 0; }
};

template <>
struct DomainTraits<Rat> {
    static constexpr bool is_field = true;
    static Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
    static Rat gcd(const Rat&, const Rat&) { return Rat(1); }
    static bool is_negative(const Rat& a) { return a < 0; }
};

template <class D>
using Matrix = std::vector<std::vector<D>>;

/// Bareiss fraction-free determinant. Exact over any integral domain with
/// exact division; intermediate entries are minors of the input.
template <class D>
D bareiss_determinant(Matrix<D> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return D(1);
    D prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == D(0)) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i) {
                if (!(m[i][k] == D(0))) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) return D(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = DomainTraits<D>::exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = D(0);
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : D(0) - m[n - 1][n - 1];
}

template <class D>
struct KernelBasis {
    int rank = 0;
    std::vector<int> pivot_cols;  // in processing order
    std::vector<int> free_cols;   // in processing order
    // One vector per free column, length = #cols. Fields: unit entry at the
    // free column. Non-field domains: content-free with the free entry
    // sign-normalized positive.
    Matrix<D> vectors;
};

namespace detail {

template <class D>
struct Frac {
    D num;
    D den;  // nonzero

    Frac() : num(0), den(1) {}
    explicit Frac(D n) : num(std::move(n)), den(1) {}
    Frac(D n, D d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    void reduce() {
        if constexpr (DomainTraits<D>::is_field) {
            num = DomainTraits<D>::exact_div(num, den);
            den = D(1);
        } else {
            if (num == D(0)) {
                den = D(1);
                return;
            }
            D g = DomainTraits<D>::gcd(num, den);
            if (!(g == D(1)) && !(g == D(0))) {
                num = DomainTraits<D>::exact_div(num, g);
                den = DomainTraits<D>::exact_div(den, g);
            }
            if (DomainTraits<D>::is_negative(den)) {
                num = D(0) - num;
                den = D(0) - den;
            }
        }
    }

    bool is_zero() const { return num == D(0); }

    Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
    Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
    Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
    Frac operator/(const Frac& o) const { return Frac(num * o.den, den * o.num); }
};

}  // namespace detail

/// Fraction-free (Bareiss) elimination and kernel extraction. Columns are
/// processed in the order given by col_order; pivots are taken greedily, so
/// free columns are exactly the columns dependent on earlier ones.
template <class D>
KernelBasis<D> fraction_free_kernel(Matrix<D> m, std::vector<int> col_order = {}) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    if (col_order.empty()) {
        col_order.resize(cols);
        std::iota(col_order.begin(), col_order.end(), 0);
    }

    KernelBasis<D> out;
    std::vector<int> pivot_rows;
    D prev(1);
    int r = 0;
    for (int oi = 0; oi < static_cast<int>(col_order.size()); ++oi) {
        const int c = col_order[oi];
        int found = -1;
        for (int i = r; i < rows; ++i) {
            if (!(m[i][c] == D(0))) {
                found = i;
                break;
            }
        }
        if (found < 0) {
            out.free_cols.push_back(c);
            continue;
        }
        std::swap(m[r], m[found]);
        for (int i = r + 1; i < rows; ++i) {
            for (int oj = oi + 1; oj < static_cast<int>(col_order.size()); ++oj) {
                const int j = col_order[oj];
                m[i][j] = DomainTraits<D>::exact_div(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
            }
            m[i][c] = D(0);
        }
        prev = m[r][c];
        out.pivot_cols.push_back(c);
        pivot_rows.push_back(r);
        ++r;
    }
    out.rank = r;

    // Back-substitution per free column; pivots processed after the free
    // column come out zero because the echelon rows vanish there.
    std::vector<int> pos_of(col_order.size() ? cols : 0, 0);
    for (int oi = 0; oi < static_cast<int>(col_order.size()); ++oi) pos_of[col_order[oi]] = oi;

    for (int f : out.free_cols) {
        std::vector<detail::Frac<D>> x(cols);
        x[f] = detail::Frac<D>(D(1));
        for (int k = static_cast<int>(out.pivot_cols.size()) - 1; k >= 0; --k) {
            const int pc = out.pivot_cols[k];
            const int pr = pivot_rows[k];
            detail::Frac<D> acc;
            for (int oj = pos_of[pc] + 1; oj < static_cast<int>(col_order.size()); ++oj) {
                const int j = col_order[oj];
                if (x[j].is_zero() || m[pr][j] == D(0)) continue;
                acc = acc + detail::Frac<D>(m[pr][j]) * x[j];
            }
            x[pc] = (detail::Frac<D>() - acc) / detail::Frac<D>(m[pr][pc]);
        }

        std::vector<D> v(cols, D(0));
        if constexpr (DomainTraits<D>::is_field) {
            for (int j = 0; j < cols; ++j) v[j] = x[j].num;
        } else {
            D common(1);
            for (int j = 0; j < cols; ++j) {
                if (x[j].is_zero()) continue;
                D g = DomainTraits<D>::gcd(common, x[j].den);
                common = DomainTraits<D>::exact_div(common * x[j].den, g);
            }
            for (int j = 0; j < cols; ++j) {
                if (x[j].is_zero()) continue;
                v[j] = x[j].num * DomainTraits<D>::exact_div(common, x[j].den);
            }
            D content(0);
            for (const D& e : v) content = DomainTraits<D>::gcd(content, e);
            if (!(content == D(0)) && !(content == D(1))) {
                for (D& e : v) e = DomainTraits<D>::exact_div(e, content);
            }
            if (DomainTraits<D>::is_negative(v[f])) {
                for (D& e : v) e = D(0) - e;
            }
        }
        out.vectors.push_back(std::move(v));
    }
    return out;
}

template <class D>
int matrix_rank(const Matrix<D>& m) {
    if (m.empty()) return 0;
    return fraction_free_kernel<D>(m).rank;
}

/// Kernel of an integer matrix as a lattice basis (columns x with Mx = 0),
/// computed by unimodular column reduction, so the result generates the full
/// integer kernel lattice, not just a rational basis.
Matrix<Int> integer_kernel(const Matrix<Int>& m_rows, int ncols);

/// Basis of the saturation span_Q(rows) ∩ Z^n of the row span.
Matrix<Int> saturation_basis(const Matrix<Int>& rows, int ncols);

/// Solves S c = v for full-column-rank S (columns = basis vectors).
std::vector<Rat> solve_columns(const Matrix<Int>& s_cols, const std::vector<Int>& v);

std::vector<Int> primitive_vector(std::vector<Int> v);

}  // namespace chasles

#endif
