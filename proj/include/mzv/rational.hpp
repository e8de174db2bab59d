#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace mzv {

// Exact scalar type for all symbolic computation.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational result(1);
    Rational b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer result(1);
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

// Canonical "p/q" form, denominator always present and positive.
inline std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Human-oriented form: integers without the "/1".
inline std::string rational_str_short(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return rational_str(r);
}

inline Rational parse_rational(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos) bad();
    text = text.substr(begin, end - begin + 1);
    size_t slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
        Integer num{std::string(text.substr(0, slash))};
        Integer den{std::string(text.substr(slash + 1))};
        if (den == 0) bad();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rational(0);  // unreachable
}

inline long double to_long_double(const Rational& r) {
    return r.convert_to<long double>();
}

}  // namespace mzv
