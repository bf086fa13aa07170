#pragma once

#include <memory>
#include <optional>
#include <string>

#include "tauforms/curve.hpp"

namespace tauforms {

// Finite extension Q(t)[s]/(m) presented by a monic minimal polynomial.
// Irreducibility of m is the caller's contract; a reducible modulus is
// detected when an inversion meets a zero divisor.
class ExtField {
public:
    explicit ExtField(XPoly minpoly);

    const XPoly& minpoly() const { return m_; }
    int degree() const { return m_.degree(); }
    bool same_as(const ExtField& o) const { return this == &o || m_ == o.m_; }

private:
    XPoly m_;
};

using ExtPtr = std::shared_ptr<const ExtField>;

// Element of Q(t) or of one declared extension of it.
class AlgElem {
public:
    AlgElem() : rep_() {}
    AlgElem(BaseElem c) : rep_(XPoly(std::move(c))) {}
    AlgElem(ExtPtr field, XPoly rep);

    static AlgElem generator(ExtPtr field) { return AlgElem(std::move(field), XPoly::var()); }

    const ExtPtr& field() const { return field_; }  // null for plain Q(t)
    const XPoly& rep() const { return rep_; }

    bool is_zero() const { return rep_.is_zero(); }

    AlgElem operator-() const;
    AlgElem operator+(const AlgElem& o) const;
    AlgElem operator-(const AlgElem& o) const;
    AlgElem operator*(const AlgElem& o) const;
    // nullopt for zero; reducible moduli surface as a hard error.
    std::optional<AlgElem> try_inverse() const;

    bool operator==(const AlgElem& o) const;
    bool operator!=(const AlgElem& o) const { return !(*this == o); }

    std::string str() const { return rep_.str("s"); }

private:
    ExtPtr field_;
    XPoly rep_;

    static ExtPtr join(const AlgElem& a, const AlgElem& b);
};

// A point of a plane curve with coordinates in Q(t) or a declared finite
// extension; membership in the curve is checked on construction.
struct CurvePoint {
    CurvePtr curve;
    AlgElem x, y;

    CurvePoint(CurvePtr curve_, AlgElem x_, AlgElem y_);

    std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

// Evaluate a polynomial at algebraic coordinates (always defined).
AlgElem eval_mpoly(const MPoly& p, const AlgElem& x0, const AlgElem& y0);

// Evaluate a rational function in x; nullopt when the denominator vanishes.
std::optional<AlgElem> eval_ratx(const RatX& r, const AlgElem& x0);

// Evaluate a curve function at a point via its canonical representative;
// nullopt when some coefficient denominator vanishes there.
std::optional<AlgElem> eval_fn(const CurveFn& f, const CurvePoint& pt);

}  // namespace tauforms
