#pragma once

#include <string>
#include <vector>

#include "tauforms/ints.hpp"

namespace tauforms {

// Univariate polynomial in t with arbitrary-precision integer coefficients.
// Coefficient vector is trimmed: no trailing zeros, so degree() is exact.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(Int c);
    explicit ZPoly(long c) : ZPoly(Int(c)) {}

    static ZPoly t();
    static ZPoly from_coeffs(std::vector<Int> coeffs);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(int k) const;
    const Int& lc() const;

    ZPoly operator-() const;
    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly mul_int(const Int& k) const;
    bool operator==(const ZPoly& o) const { return c_ == o.c_; }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    // Derivative with respect to t.
    ZPoly derivative() const;

    // gcd of all coefficients, non-negative; 0 for the zero polynomial.
    Int content() const;
    ZPoly primitive_part() const;

    // Exact division; returns false when o does not divide *this.
    bool div_exact(const ZPoly& o, ZPoly& quot) const;

    // gcd including integer content, normalized to positive leading coefficient.
    static ZPoly gcd(const ZPoly& a, const ZPoly& b);

    Int eval_int(const Int& t0) const;

    std::string str() const;

private:
    std::vector<Int> c_;  // c_[k] multiplies t^k

    void trim();
};

}  // namespace tauforms
