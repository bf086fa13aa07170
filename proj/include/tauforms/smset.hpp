#pragma once

#include <vector>

#include "tauforms/tauform.hpp"

namespace tauforms {

// Defining equations of the order-1 set cut out on a curve by a chart
// pair: the curve equation together with the cleared fiber equation
// A_hat * x' + B_hat = 0.  Differential equations are affine-linear in
// the fiber variables x', y'.
struct DifferentialSystem {
    CurvePtr curve;
    std::vector<MPoly> algebraic;     // polynomials in (x, y)
    std::vector<MPoly> differential;  // polynomials in (x, y, x', y')
    std::vector<CurvePoint> poles;    // declared points where the pair is undefined

    // delta applied to the curve equation: p_x * x' + p_y * y' + p^delta.
    // It follows from the algebraic part, so it is not listed explicitly.
    MPoly prolongation_relation() const;

    // One "lhs = 0" line per equation, fiber terms printed first.
    std::string str() const;
};

// Canonical text of one affine-linear differential equation (left side
// only): fiber terms in x', y' first, then the base term.
std::string fiber_equation_str(const MPoly& d);

// The system {p = 0, A_hat * x' + B_hat = 0} of a non-trivial pair (A, B),
// with denominators cleared jointly so the two parts stay proportional to
// (A, B).  Declared points that the pair classifies as poles are reported
// in the poles list; nothing is solved for.
DifferentialSystem xi_system(const TauForm& w,
                             const std::vector<CurvePoint>& declared_points = {});

// Consistency of the two routes from a form on the target to equations on
// the source: substituting the map and its lifted derivative into the
// target equation versus clearing the pulled-back form.  True when the
// results agree up to a nonzero function multiple.
bool xi_pullback_check(const CurveMorphism& phi, const TauForm& w2);

// Whether the sets cut out by two non-trivial forms on one curve coincide
// generically; decided through sim_equivalent, which characterizes equal
// fiber constraints exactly.
bool xi_overlap_implies_equiv(const TauForm& w1, const TauForm& w2);

}  // namespace tauforms
