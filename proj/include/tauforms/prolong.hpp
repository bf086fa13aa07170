#pragma once

#include <string>
#include <vector>

#include "tauforms/mpoly.hpp"

namespace tauforms {

// Affine variety cut out by polynomial generators inside coordinates vars.
struct EmbeddedVariety {
    std::vector<std::string> vars;
    std::vector<MPoly> gens;

    EmbeddedVariety(std::vector<std::string> vars_, std::vector<MPoly> gens_);

    bool constant_coefficients() const;
};

// Printed name of the fiber coordinate lying over a base coordinate:
// x -> u, y -> v, x3 -> u3, anything else gets a u_ prefix.
std::string fiber_var_name(const std::string& base);

// Canonical text of sum_i coeffs[i] * fvars[i] + constant, fiber terms
// first, with sign extraction and coefficient parenthesization.
std::string affine_str(const std::vector<MPoly>& coeffs, const std::vector<std::string>& fvars,
                       const MPoly& constant);

// One fiber-affine equation: sum_i coeffs[i] * fiber_i + constant = 0,
// with coeffs and constant polynomials in the base variables.
struct LinearEquation {
    std::vector<MPoly> coeffs;
    MPoly constant;

    bool operator==(const LinearEquation& o) const {
        return coeffs == o.coeffs && constant == o.constant;
    }
};

// A system of fiber-affine equations over a base coordinate ring.  The
// coefficients are stored structurally, so slicing and equality are exact
// syntactic operations (no ideal computations).
struct LinearSystem {
    std::vector<std::string> base_vars;
    std::vector<std::string> fiber_vars;
    std::vector<LinearEquation> eqs;

    bool operator==(const LinearSystem& o) const {
        return base_vars == o.base_vars && fiber_vars == o.fiber_vars && eqs == o.eqs;
    }

    std::string str() const;
};

// Linearization at a moving point: sum_i dp/dx_i * u_i = 0.
LinearSystem tangent_variety(const EmbeddedVariety& V);

// First prolongation: sum_i dp/dx_i * u_i + p^delta = 0.
LinearSystem prolongation(const EmbeddedVariety& V);

// Homogenized cone: sum_i dp/dx_i * u_i + p^delta * u' = 0; the u' = 0
// slice is the tangent system and the u' = 1 slice is the prolongation.
LinearSystem prolongation_cone(const EmbeddedVariety& V);

// Substitute a constant value for the trailing cone variable u'.
LinearSystem cone_slice(const LinearSystem& cone, const BaseElem& value);

// Fiberwise-affine map over a polynomial base map: u |-> sum linear[i]*u_i + constant.
struct AffineFiberMap {
    std::vector<std::string> fiber_vars;
    std::vector<MPoly> linear;
    MPoly constant;

    // Evaluate at a rational base point and fiber vector.
    BaseElem apply(const std::map<std::string, BaseElem>& base_point,
                   const std::vector<BaseElem>& fiber) const;

    std::string str() const;
};

// Fiber part of the canonical lift of phi: V -> A^m to the prolongations:
// (a, u) |-> (phi(a), d(phi_j)_a(u) + phi_j^delta(a)) per component j.
// The overloads on a coordinate list treat all of affine space as the base.
std::vector<AffineFiberMap> lifting_map(const std::vector<MPoly>& phi,
                                        const std::vector<std::string>& vars);
std::vector<AffineFiberMap> lifting_map(const std::vector<MPoly>& phi, const EmbeddedVariety& V);

// Tau-differential of an ambient polynomial: (a, u) |-> df_a(u) + f^delta(a).
AffineFiberMap tau_diff_ambient(const MPoly& f, const std::vector<std::string>& vars);
AffineFiberMap tau_diff_ambient(const MPoly& f, const EmbeddedVariety& V);

}  // namespace tauforms
