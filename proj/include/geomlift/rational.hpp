#ifndef GEOMLIFT_RATIONAL_HPP
#define GEOMLIFT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace geomlift {

// Exact arithmetic everywhere a proof-level decision is made.  No floats.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" serialization; integral values are emitted without the "/1".
inline std::string to_pq(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational from_pq(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

} // namespace geomlift

#endif
