#pragma once

#include <string>

#include "tauforms/zpoly.hpp"

namespace tauforms {

// Element of the differential field Q(t) with derivation d/dt.
// Canonical form: num/den with num, den integer polynomials in lowest terms
// (no common factor in Z[t]) and den having positive leading coefficient.
class BaseElem {
public:
    BaseElem() : num_(), den_(ZPoly(Int(1))) {}
    BaseElem(long n) : BaseElem(Int(n)) {}
    BaseElem(Int n) : num_(ZPoly(std::move(n))), den_(ZPoly(Int(1))) {}
    BaseElem(ZPoly num, ZPoly den);

    static BaseElem t() { return BaseElem(ZPoly::t(), ZPoly(Int(1))); }
    static BaseElem rational(Int num, Int den);

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // True when the element lies in the constant subfield Q.
    bool is_rational() const { return num_.degree() <= 0 && den_.degree() <= 0; }
    bool is_negative() const { return !num_.is_zero() && num_.lc() < 0; }

    BaseElem operator-() const;
    BaseElem operator+(const BaseElem& o) const;
    BaseElem operator-(const BaseElem& o) const;
    BaseElem operator*(const BaseElem& o) const;
    BaseElem operator/(const BaseElem& o) const;
    BaseElem& operator+=(const BaseElem& o) { return *this = *this + o; }
    BaseElem& operator-=(const BaseElem& o) { return *this = *this - o; }
    BaseElem& operator*=(const BaseElem& o) { return *this = *this * o; }
    BaseElem inverse() const;
    BaseElem pow(long e) const;

    // Derivation: delta(t) = 1, extended to quotients by the quotient rule.
    BaseElem delta() const;

    bool operator==(const BaseElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const BaseElem& o) const { return !(*this == o); }

    std::string str() const;

private:
    ZPoly num_, den_;

    void normalize();
};

}  // namespace tauforms
