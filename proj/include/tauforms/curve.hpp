#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "tauforms/mpoly.hpp"

namespace tauforms {

using YPoly = UPoly<RatX>;  // polynomials in y with coefficients in Q(t)(x)

// Irreducible smooth affine plane curve p(x, y) = 0 over Q(t) with
// deg_y(p) >= 1, presented so that K(C) = Q(t)(x)[y]/(p).  The constructor
// certifies irreducibility (by specialization to finite fields) and
// smoothness (by resultants of the partials); failure to certify either is
// a hard error.
class PlaneCurve {
public:
    explicit PlaneCurve(MPoly p);

    const MPoly& poly() const { return p_; }
    int deg_y() const { return deg_y_; }
    const MPoly& px() const { return px_; }
    const MPoly& py() const { return py_; }
    const MPoly& pdelta() const { return pdelta_; }

    // p viewed as a polynomial in y over Q(t)(x); reduction modulus for K(C).
    const YPoly& modulus() const { return mod_; }

    // True when every coefficient of p is a constant of the derivation.
    bool constant_coefficients() const { return pdelta_.is_zero(); }

    bool same_as(const PlaneCurve& o) const { return this == &o || p_ == o.p_; }

    std::string str() const { return p_.str(); }

private:
    MPoly p_, px_, py_, pdelta_;
    YPoly mod_;
    int deg_y_ = 0;
};

using CurvePtr = std::shared_ptr<const PlaneCurve>;

inline CurvePtr make_curve(MPoly p) { return std::make_shared<PlaneCurve>(std::move(p)); }

// The projective line in this chart convention: p = y, so K(C) = Q(t)(x).
CurvePtr projective_line();

struct DeltaData;

// Element of the function field K(C), stored y-reduced: a polynomial in y
// of degree < deg_y(p) with coefficients in Q(t)(x).  This form is unique,
// so equality is componentwise.
class CurveFn {
public:
    static CurveFn from_ypoly(CurvePtr curve, YPoly rep);
    static CurveFn from_mpoly(CurvePtr curve, const MPoly& p);
    static CurveFn from_fraction(CurvePtr curve, const MPoly& num, const MPoly& den);
    static CurveFn constant(CurvePtr curve, BaseElem c);
    static CurveFn coord_x(CurvePtr curve);
    static CurveFn coord_y(CurvePtr curve);

    const CurvePtr& curve() const { return curve_; }
    const YPoly& rep() const { return rep_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const;
    // The value when the function lies in the base field Q(t).
    std::optional<BaseElem> base_constant() const;

    CurveFn operator-() const;
    CurveFn operator+(const CurveFn& o) const;
    CurveFn operator-(const CurveFn& o) const;
    CurveFn operator*(const CurveFn& o) const;
    CurveFn operator/(const CurveFn& o) const;
    CurveFn inverse() const;
    CurveFn pow(long e) const;
    bool operator==(const CurveFn& o) const;
    bool operator!=(const CurveFn& o) const { return !(*this == o); }

    // Partials and coefficient derivation of the canonical representative.
    DeltaData delta_data() const;

    // Clear x-denominators: returns (N, D) with N a polynomial in (x, y),
    // D a polynomial in x alone, and *this = N / D.
    std::pair<MPoly, XPoly> cleared() const;

    std::string str() const;

private:
    CurvePtr curve_;
    YPoly rep_;

    CurveFn(CurvePtr curve, YPoly rep) : curve_(std::move(curve)), rep_(std::move(rep)) {}

    void require_same_curve(const CurveFn& o) const;
};

// The three ingredients of the tau-differential of a function: formal
// partials in x and y and the coefficient derivation, reduced into K(C).
struct DeltaData {
    CurveFn fx, fy, fdelta;
};

// delta_data computed from an explicit representative num/den by the
// quotient rule; the resulting chart pair of the tau-differential does not
// depend on the representative chosen.
DeltaData rep_delta_data(CurvePtr curve, const MPoly& num, const MPoly& den);

std::string ypoly_str(const YPoly& p, const std::string& yvar, const std::string& xvar);

}  // namespace tauforms
