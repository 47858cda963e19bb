#ifndef CHASLES_UNIVARIATE_HPP
#define CHASLES_UNIVARIATE_HPP

#include "chasles/error.hpp"
#include "chasles/linalg.hpp"
#include "chasles/rational.hpp"

#include <utility>
#include <vector>

namespace chasles {

/// Dense univariate polynomial over a commutative coefficient domain T.
/// Coefficients ascending; no stored leading zeros.
template <class T>
class DensePoly {
  public:
    DensePoly() = default;
    explicit DensePoly(int constant) : c_{T(constant)} { normalize(); }
    explicit DensePoly(T constant) : c_{std::move(constant)} { normalize(); }
    explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static DensePoly monomial(int degree, T coeff) {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = std::move(coeff);
        return DensePoly(std::move(c));
    }

    int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(int i) const { return (i >= 0 && i <= deg()) ? c_[i] : T(0); }
    const T& lead() const { return c_.back(); }

    bool operator==(const DensePoly& o) const { return c_ == o.c_; }

    DensePoly operator-() const {
        DensePoly r(*this);
        for (T& x : r.c_) x = T(0) - x;
        return r;
    }

    DensePoly operator+(const DensePoly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
        return DensePoly(std::move(r));
    }

    DensePoly operator-(const DensePoly& o) const { return *this + (-o); }

    DensePoly operator*(const DensePoly& o) const {
        if (is_zero() || o.is_zero()) return DensePoly();
        std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return DensePoly(std::move(r));
    }

    DensePoly scaled(const T& s) const {
        DensePoly r(*this);
        for (T& x : r.c_) x = x * s;
        r.normalize();
        return r;
    }

    template <class X>
    X eval(const X& x) const {
        X acc(0);
        for (int i = deg(); i >= 0; --i) acc = acc * x + X(c_[i]);
        return acc;
    }

    DensePoly derivative() const {
        if (deg() <= 0) return DensePoly();
        std::vector<T> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<int>(i));
        return DensePoly(std::move(r));
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

/// Long division; each step divides by the divisor's leading coefficient via
/// the domain's exact division, so this is valid over a field, for monic
/// divisors, and whenever the overall division is exact.
template <class T>
std::pair<DensePoly<T>, DensePoly<T>> poly_divmod(const DensePoly<T>& f, const DensePoly<T>& g) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
    std::vector<T> rem(f.coeffs());
    const int dg = g.deg();
    if (f.deg() < dg) return {DensePoly<T>(), f};
    std::vector<T> quot(f.deg() - dg + 1, T(0));
    for (int k = f.deg() - dg; k >= 0; --k) {
        T top = rem.size() > static_cast<size_t>(k + dg) ? rem[k + dg] : T(0);
        if (top == T(0)) continue;
        T q = DomainTraits<T>::exact_div(top, g.lead());
        quot[k] = q;
        for (int i = 0; i <= dg; ++i) rem[k + i] = rem[k + i] - q * g.coeff(i);
    }
    return {DensePoly<T>(std::move(quot)), DensePoly<T>(std::move(rem))};
}

template <class T>
DensePoly<T> poly_exact_div(const DensePoly<T>& f, const DensePoly<T>& g) {
    auto [q, r] = poly_divmod(f, g);
    if (!r.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "inexact polynomial division");
    return q;
}

/// Monic gcd over a field of coefficients.
template <class T>
DensePoly<T> poly_gcd(DensePoly<T> a, DensePoly<T> b) {
    static_assert(DomainTraits<T>::is_field);
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    T inv_lead = DomainTraits<T>::exact_div(T(1), a.lead());
    return a.scaled(inv_lead);
}

using PolyQ = DensePoly<Rat>;

/// Smallest positive rational s with s*f integer-coefficient and primitive.
Rat primitive_scale(const PolyQ& f);

/// (content-free integer-coefficient polynomial, applied scale), sign chosen
/// so the leading coefficient is positive.
std::pair<PolyQ, Rat> primitive_part(const PolyQ& f);

template <>
struct DomainTraits<PolyQ> {
    static constexpr bool is_field = false;
    static PolyQ exact_div(const PolyQ& a, const PolyQ& b) { return poly_exact_div(a, b); }
    static PolyQ gcd(const PolyQ& a, const PolyQ& b) {
        if (a.is_zero()) return b.is_zero() ? b : primitive_part(b).first;
        if (b.is_zero()) return primitive_part(a).first;
        return primitive_part(poly_gcd(a, b)).first;
    }
    static bool is_negative(const PolyQ& a) { return !a.is_zero() && a.lead() < 0; }
};

using PolyQQ = DensePoly<PolyQ>;  // bivariate, outer variable over Q[inner]

template <>
struct DomainTraits<PolyQQ> {
    static constexpr bool is_field = false;
    static PolyQQ exact_div(const PolyQQ& a, const PolyQQ& b) { return poly_exact_div(a, b); }
    static PolyQQ gcd(const PolyQQ& a, const PolyQQ& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return PolyQQ(PolyQ(Rat(1)));  // content reduction is not needed here
    }
    static bool is_negative(const PolyQQ& a) {
        return !a.is_zero() && DomainTraits<PolyQ>::is_negative(a.lead());
    }
};

}  // namespace chasles

#endif
