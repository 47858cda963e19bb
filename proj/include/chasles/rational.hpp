#ifndef CHASLES_RATIONAL_HPP
#define CHASLES_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace chasles {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Canonical "p/q" form with q > 0, gcd(p,q) = 1. The denominator is always
/// printed, so "8" serializes as "8/1".
std::string rat_to_string(const Rat& r);

/// Parses "p/q" or "p". Throws Error{ParseError} on malformed input or q = 0.
Rat rat_from_string(const std::string& s);

double rat_to_double(const Rat& r);

/// Best rational approximation of |den| <= max_den via continued fractions.
Rat rationalize(const Rat& x, const Int& max_den);

/// Deterministic uniform integer in [lo, hi] drawn from a 64-bit generator.
/// Hand-rolled (rejection sampling) so results do not depend on the standard
/// library's distribution implementation.
template <class Rng>
long long uniform_ll(Rng& rng, long long lo, long long hi) {
    const unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1ull;
    if (span == 0) return static_cast<long long>(rng());  // full 64-bit range
    const unsigned long long limit = ~0ull - (~0ull % span);
    unsigned long long draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return lo + static_cast<long long>(draw % span);
}

/// Nonzero uniform integer in [-bound, bound].
template <class Rng>
long long uniform_nonzero(Rng& rng, long long bound) {
    long long v;
    do {
        v = uniform_ll(rng, -bound, bound);
    } while (v == 0);
    return v;
}

/// Random rational p/q with p nonzero uniform in [-num_bound, num_bound] and
/// q uniform in [1, den_bound].
template <class Rng>
Rat random_rational(Rng& rng, long long num_bound, long long den_bound) {
    return Rat(Int(uniform_nonzero(rng, num_bound)), Int(uniform_ll(rng, 1, den_bound)));
}

}  // namespace chasles

#endif
