#include "chasles/rational.hpp"

#include "chasles/error.hpp"

#include <cctype>

namespace chasles {

std::string rat_to_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& s) {
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        }
        return true;
    };
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            if (!is_int(s)) throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
            return Rat(Int(s));
        }
        std::string p = s.substr(0, slash);
        std::string q = s.substr(slash + 1);
        if (!is_int(p) || !is_int(q)) throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
        Int den(q);
        if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
        return Rat(Int(p), den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
    }
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

Rat rationalize(const Rat& x, const Int& max_den) {
    if (denominator(x) <= max_den) return x;
    // Continued fraction convergents h/k of x; return the last one with
    // k <= max_den.
    Int hm1(1), km1(0), hm2(0), km2(1);
    Int num = numerator(x), den = denominator(x);
    while (den != 0) {
        Int a = num / den;
        if (num < 0 && num % den != 0) a -= 1;  // floor division
        Int h = a * hm1 + hm2;
        Int k = a * km1 + km2;
        if (k > max_den) {
            // Semiconvergent with the largest admissible coefficient.
            Int t = (max_den - km2) / km1;
            if (t > 0) {
                Int hs = t * hm1 + hm2;
                Int ks = t * km1 + km2;
                // Keep whichever of the last full convergent / semiconvergent
                // is closer.
                Rat best(hm1, km1);
                Rat semi(hs, ks);
                return abs(x - semi) < abs(x - best) ? semi : best;
            }
            return Rat(hm1, km1);
        }
        hm2 = hm1;
        km2 = km1;
        hm1 = h;
        km1 = k;
        Int r = num - a * den;
        num = den;
        den = r;
    }
    return Rat(hm1, km1);
}

}  // namespace chasles
