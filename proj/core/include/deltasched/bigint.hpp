#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace deltasched {

// Every identity checked by this library is exact; all arithmetic is
// arbitrary-precision integer, never floating point.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

}  // namespace deltasched
