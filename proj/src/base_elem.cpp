#include "tauforms/base_elem.hpp"

#include "tauforms/error.hpp"

namespace tauforms {

BaseElem::BaseElem(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    check(!den_.is_zero(), "division-by-zero", "zero denominator in Q(t)");
    normalize();
}

BaseElem BaseElem::rational(Int num, Int den) {
    return BaseElem(ZPoly(std::move(num)), ZPoly(std::move(den)));
}

void BaseElem::normalize() {
    if (num_.is_zero()) {
        den_ = ZPoly(Int(1));
        return;
    }
    ZPoly g = ZPoly::gcd(num_, den_);
    if (!g.is_one()) {
        ZPoly qn, qd;
        invariant(num_.div_exact(g, qn) && den_.div_exact(g, qd), "gcd does not divide");
        num_ = qn;
        den_ = qd;
    }
    if (den_.lc() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

BaseElem BaseElem::operator-() const {
    BaseElem r = *this;
    r.num_ = -r.num_;
    return r;
}

BaseElem BaseElem::operator+(const BaseElem& o) const {
    return BaseElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

BaseElem BaseElem::operator-(const BaseElem& o) const {
    return BaseElem(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

BaseElem BaseElem::operator*(const BaseElem& o) const {
    return BaseElem(num_ * o.num_, den_ * o.den_);
}

BaseElem BaseElem::operator/(const BaseElem& o) const {
    check(!o.is_zero(), "division-by-zero", "division by zero in Q(t)");
    return BaseElem(num_ * o.den_, den_ * o.num_);
}

BaseElem BaseElem::inverse() const {
    check(!is_zero(), "division-by-zero", "inverse of zero in Q(t)");
    return BaseElem(den_, num_);
}

BaseElem BaseElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    BaseElem r(1);
    BaseElem b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

BaseElem BaseElem::delta() const {
    // (n/d)' = (n'd - nd') / d^2
    return BaseElem(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string BaseElem::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace tauforms
