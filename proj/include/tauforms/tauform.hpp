#pragma once

#include <tuple>
#include <vector>

#include "tauforms/points.hpp"

namespace tauforms {

// Rational one-form on a curve, written in the chart dx (dy is eliminated
// through p_x dx + p_y dy = 0): the form is coeff * dx.
struct OneForm {
    CurveFn coeff;

    bool operator==(const OneForm& o) const { return coeff == o.coeff; }
    bool operator!=(const OneForm& o) const { return !(*this == o); }
    std::string str() const;
};

// Rational section of the bundle of fiberwise-affine maps on the first
// prolongation of a curve.  In the chart where the fiber coordinate v over
// y is eliminated through p_x u + p_y v + p^delta = 0, the section is
//     (a, u) |-> A(a) * u + B(a).
class TauForm {
public:
    TauForm(CurveFn a, CurveFn b);

    const CurvePtr& curve() const { return a_.curve(); }
    const CurveFn& a() const { return a_; }
    const CurveFn& b() const { return b_; }

    // Trivial forms are fiberwise constant: the image of iota.
    bool is_trivial() const { return a_.is_zero(); }
    bool is_zero_form() const { return a_.is_zero() && b_.is_zero(); }

    TauForm operator-() const { return TauForm(-a_, -b_); }
    TauForm operator+(const TauForm& o) const { return TauForm(a_ + o.a_, b_ + o.b_); }
    TauForm operator-(const TauForm& o) const { return TauForm(a_ - o.a_, b_ - o.b_); }
    // Module action of K(C).
    TauForm scaled(const CurveFn& f) const { return TauForm(f * a_, f * b_); }

    bool operator==(const TauForm& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const TauForm& o) const { return !(*this == o); }

    std::string str() const { return "(" + a_.str() + ", " + b_.str() + ")"; }

private:
    CurveFn a_, b_;
};

// Tau-differential of a curve function: (a, u) |-> df_a(u) + f^delta(a),
// written in the chart above.
TauForm tau(const CurveFn& f);

// Same, computed from an explicit representative num/den of the function;
// the resulting form is representative-independent.
TauForm tau_from_rep(const CurvePtr& curve, const MPoly& num, const MPoly& den);

// Embedding of functions as fiberwise-constant forms: iota(g) = g * tau(c)
// for any c with delta(c) = 1; in the chart simply (0, g).
TauForm iota(const CurveFn& g);

// Linear part per fiber: Lambda(A du + B) = A dx.
OneForm lambda_map(const TauForm& w);

// Differential of a function as a one-form in the same chart.
OneForm differential(const CurveFn& f);

// Unique (f, g) with w1 = f * w0 + iota(g); w0 must be non-trivial.
std::pair<CurveFn, CurveFn> decompose(const TauForm& w1, const TauForm& w0);

// w1 ~ w2 iff w1 = f * w2 for some function f; both must be non-trivial.
bool sim_equivalent(const TauForm& w1, const TauForm& w2);

// The ratio B/A, constant on ~-classes; w must be non-trivial.
CurveFn canonical_ratio(const TauForm& w);

// w1 and w2 differ by a trivial form, equivalently Lambda(w1) = Lambda(w2).
bool parallel(const TauForm& w1, const TauForm& w2);

enum class PointClass { regular, zero, pole };

const char* point_class_name(PointClass c);

// Behavior of the fiberwise-affine map at a specific point: pole when the
// map is undefined there, zero when it is defined with vanishing linear
// part, regular otherwise.
PointClass classify_point(const TauForm& w, const CurvePoint& pt);

// The rational section of the prolongation on which a non-trivial form
// vanishes: u = -B/A together with the eliminated fiber coordinate v.
struct NullSection {
    CurveFn u, v;

    bool operator==(const NullSection& o) const { return u == o.u && v == o.v; }
    std::string str() const { return "u = " + u.str() + ", v = " + v.str(); }
};

NullSection null_set(const TauForm& w);

// Dominant morphism between plane curves, given by a coordinate pair
// (r, s) of functions on the source satisfying the target equation.
class CurveMorphism {
public:
    CurveMorphism(CurvePtr source, CurvePtr target, CurveFn r, CurveFn s);

    const CurvePtr& source() const { return source_; }
    const CurvePtr& target() const { return target_; }
    const CurveFn& r() const { return r_; }
    const CurveFn& s() const { return s_; }

    std::string str() const { return "(" + r_.str() + ", " + s_.str() + ")"; }

private:
    CurvePtr source_, target_;
    CurveFn r_, s_;
};

// Composition f o phi for f a function on the target.
CurveFn compose(const CurveFn& f, const CurveMorphism& phi);

// Pullback along the canonical lift of phi; satisfies
// Lambda(pullback(w)) = pullback(Lambda(w)).
TauForm pullback(const TauForm& w, const CurveMorphism& phi);
OneForm pullback(const OneForm& w, const CurveMorphism& phi);

// Factor a pair of polynomials in Q(t)[x, y] as (content, primitive pair):
// a = content * a1, b = content * b1 with gcd(a1, b1) = 1.  The content
// generates the largest submodule over which the pair section extends.
std::tuple<MPoly, MPoly, MPoly> primitive_section(const MPoly& a, const MPoly& b);

// Basis of the global forms for curves defined over the constants, in the
// two supported shapes: the line p = y (genus 0, dimension 1) and a
// rational Weierstrass cubic y^2 = x^3 + a x + b (genus 1, dimension 2).
std::vector<TauForm> global_tau_basis_constant_case(const CurvePtr& curve, long genus);

}  // namespace tauforms
