#include "tauforms/smset.hpp"

#include "tauforms/error.hpp"
#include "tauforms/prolong.hpp"

namespace tauforms {

namespace {

const std::vector<std::string> kFiberVars = {"x'", "y'"};

// Clear the two chart functions with one joint denominator, so the cleared
// pair is a single K(C)-multiple of (a, b).
std::pair<MPoly, MPoly> cleared_pair(const CurveFn& a, const CurveFn& b) {
    auto [na, da] = a.cleared();
    auto [nb, db] = b.cleared();
    XPoly g = XPoly::gcd_monic(da, db);
    MPoly ma = MPoly::from_xpoly(XPoly::divmod(db, g).first, "x");
    MPoly mb = MPoly::from_xpoly(XPoly::divmod(da, g).first, "x");
    return {na * ma, nb * mb};
}

// Split an affine-linear differential equation into fiber coefficients and
// the base constant term.
std::pair<std::vector<MPoly>, MPoly> affine_parts(const MPoly& d) {
    std::vector<MPoly> coeffs;
    std::map<std::string, MPoly> to_zero;
    for (const auto& fv : kFiberVars) {
        coeffs.push_back(d.uses(fv) ? d.partial(fv) : MPoly());
        to_zero[fv] = MPoly();
    }
    return {std::move(coeffs), d.substitute(to_zero)};
}

// Substitute the coordinate pair of a map into a base polynomial in (x, y).
CurveFn substituted(const MPoly& p, const CurveMorphism& phi) {
    std::map<std::string, CurveFn> vals = {{"x", phi.r()}, {"y", phi.s()}};
    auto emb = [&phi](const BaseElem& c) { return CurveFn::constant(phi.source(), c); };
    return p.eval_with<CurveFn>(vals, emb);
}

}  // namespace

MPoly DifferentialSystem::prolongation_relation() const {
    return curve->px() * MPoly::variable("x'") + curve->py() * MPoly::variable("y'") +
           curve->pdelta();
}

std::string fiber_equation_str(const MPoly& d) {
    auto [coeffs, constant] = affine_parts(d);
    return affine_str(coeffs, kFiberVars, constant);
}

std::string DifferentialSystem::str() const {
    std::string out;
    for (const auto& p : algebraic) {
        if (!out.empty()) out += "\n";
        out += p.str() + " = 0";
    }
    for (const auto& d : differential) {
        if (!out.empty()) out += "\n";
        out += fiber_equation_str(d) + " = 0";
    }
    return out;
}

DifferentialSystem xi_system(const TauForm& w, const std::vector<CurvePoint>& declared_points) {
    check(!w.is_trivial(), "trivial-form",
          "the defining system needs a non-zero linear part");
    DifferentialSystem sys;
    sys.curve = w.curve();
    sys.algebraic.push_back(w.curve()->poly());
    auto [ahat, bhat] = cleared_pair(w.a(), w.b());
    sys.differential.push_back(ahat * MPoly::variable("x'") + bhat);
    for (const auto& pt : declared_points)
        if (classify_point(w, pt) == PointClass::pole) sys.poles.push_back(pt);
    return sys;
}

bool xi_pullback_check(const CurveMorphism& phi, const TauForm& w2) {
    check(!w2.is_trivial(), "trivial-form",
          "the compatibility check needs a non-zero linear part");
    check(w2.curve()->same_as(*phi.target()), "curve-mismatch",
          "the form must live on the target of the map");
    DifferentialSystem sys2 = xi_system(w2);
    auto [coeffs, bhat] = affine_parts(sys2.differential.front());
    // Substitution route: x -> r, y -> s, x' -> the lifted derivative of r.
    CurveFn ahat_s = substituted(coeffs.front(), phi);
    CurveFn bhat_s = substituted(bhat, phi);
    TauForm tr = tau(phi.r());
    CurveFn alpha = ahat_s * tr.a();
    CurveFn beta = ahat_s * tr.b() + bhat_s;
    // Pullback route.
    TauForm w1 = pullback(w2, phi);
    return alpha.is_zero() == w1.a().is_zero() && beta.is_zero() == w1.b().is_zero() &&
           alpha * w1.b() == beta * w1.a();
}

bool xi_overlap_implies_equiv(const TauForm& w1, const TauForm& w2) {
    return sim_equivalent(w1, w2);
}

}  // namespace tauforms
