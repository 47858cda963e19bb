#include "chasles/univariate.hpp"

namespace chasles {

Rat primitive_scale(const PolyQ& f) {
    if (f.is_zero()) return Rat(1);
    Int num_gcd(0), den_lcm(1);
    for (const Rat& c : f.coeffs()) {
        if (c == 0) continue;
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
        Int d = denominator(c);
        den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, d) * d;
    }
    if (num_gcd < 0) num_gcd = -num_gcd;
    return Rat(den_lcm, num_gcd);
}

std::pair<PolyQ, Rat> primitive_part(const PolyQ& f) {
    if (f.is_zero()) return {f, Rat(1)};
    Rat s = primitive_scale(f);
    if (f.lead() * s < 0) s = -s;
    return {f.scaled(s), s};
}

}  // namespace chasles
