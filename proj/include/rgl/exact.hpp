#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace rgl {

// Threshold and bound arithmetic is done in exact integers/rationals
// throughout; floating point never enters a comparison against a count.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt rat_ceil(const Rat& x)
{
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x); // always > 0
    BigInt q = num / den;
    if (num > q * den)
        ++q;
    return q;
}

inline BigInt rat_floor(const Rat& x)
{
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    BigInt q = num / den;
    if (num < q * den)
        --q;
    return q;
}

inline Rat rat_pow(Rat base, long long e)
{
    if (e < 0)
        return 1 / rat_pow(base, -e);
    Rat r = 1;
    while (e > 0) {
        if (e & 1)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Canonical "p/q" form ("p" when q == 1); used in JSON reports.
inline std::string rat_str(const Rat& x)
{
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

inline Rat rat_parse(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            auto dot = s.find('.');
            if (dot == std::string::npos)
                return Rat(BigInt(s));
            // decimal literal -> exact rational
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            BigInt den = 1;
            for (std::size_t i = dot + 1; i < s.size(); ++i)
                den *= 10;
            return Rat(BigInt(digits), den);
        }
        return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

} // namespace rgl
