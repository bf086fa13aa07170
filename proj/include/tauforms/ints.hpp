#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tauforms {

using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(Int a, Int b) {
    using boost::multiprecision::gcd;
    Int g = gcd(a, b);
    return g < 0 ? Int(-g) : g;
}

inline int int_sign(const Int& a) { return a == 0 ? 0 : (a < 0 ? -1 : 1); }

}  // namespace tauforms
