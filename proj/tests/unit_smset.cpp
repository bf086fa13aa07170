#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "tauforms/error.hpp"
#include "tauforms/smset.hpp"

using namespace tauforms;

namespace {

MPoly X() { return MPoly::variable("x"); }
MPoly Y() { return MPoly::variable("y"); }
MPoly XP() { return MPoly::variable("x'"); }
MPoly YP() { return MPoly::variable("y'"); }

CurvePtr E() {
    static CurvePtr c = make_curve(Y() * Y() - X().pow(3) - MPoly(1));
    return c;
}

CurvePtr L() {
    static CurvePtr c = make_curve(Y() - MPoly::t() * X());
    return c;
}

CurveFn fx(const CurvePtr& c) { return CurveFn::coord_x(c); }
CurveFn fy(const CurvePtr& c) { return CurveFn::coord_y(c); }
CurveFn fc(const CurvePtr& c, long v) { return CurveFn::constant(c, BaseElem(v)); }

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    return "";
}

// Proportionality of two cleared fiber equations inside K(C).
bool proportional_differentials(const DifferentialSystem& s1, const DifferentialSystem& s2) {
    auto part = [](const DifferentialSystem& s) {
        const MPoly& d = s.differential.front();
        MPoly a = d.partial("x'");
        MPoly b = d.substitute({{"x'", MPoly()}});
        return std::make_pair(CurveFn::from_mpoly(s.curve, a), CurveFn::from_mpoly(s.curve, b));
    };
    auto [a1, b1] = part(s1);
    auto [a2, b2] = part(s2);
    return a1 * b2 == a2 * b1;
}

}  // namespace

TEST_CASE("defining system of the constants on the line") {
    CurvePtr P = projective_line();
    DifferentialSystem sys = xi_system(tau(fx(P)));
    REQUIRE(sys.algebraic.size() == 1);
    REQUIRE(sys.differential.size() == 1);
    CHECK(sys.algebraic.front() == Y());
    CHECK(sys.differential.front() == XP());
    CHECK(sys.poles.empty());
    CHECK(sys.str() == "y = 0\nx' = 0");
    CHECK(sys.prolongation_relation() == YP());

    // Every rational constant satisfies the system with x' = 0.
    for (BaseElem c : {BaseElem(0), BaseElem(1), BaseElem(-3),
                       BaseElem::rational(Int(5), Int(7))}) {
        std::map<std::string, BaseElem> vals = {
            {"x", c}, {"y", BaseElem(0)}, {"x'", BaseElem(0)}, {"y'", BaseElem(0)}};
        for (const auto& eq : sys.algebraic) CHECK(eq.eval(vals).is_zero());
        for (const auto& eq : sys.differential) CHECK(eq.eval(vals).is_zero());
        CHECK(sys.prolongation_relation().eval(vals).is_zero());
    }
    // t itself does not: its derivative term x' = 1 breaks the fiber equation.
    std::map<std::string, BaseElem> moving = {
        {"x", BaseElem::t()}, {"y", BaseElem(0)}, {"x'", BaseElem(1)}};
    CHECK_FALSE(sys.differential.front().eval(moving).is_zero());
}

TEST_CASE("defining system of a moving line") {
    DifferentialSystem sys = xi_system(tau(fy(L())));
    CHECK(sys.algebraic.front() == Y() - MPoly::t() * X());
    CHECK(sys.differential.front() == MPoly::t() * XP() + X());
    CHECK(sys.str() == "-t*x + y = 0\nt*x' + x = 0");
    CHECK(sys.prolongation_relation() == -(MPoly::t() * XP()) + YP() - X());

    // Denominators are cleared jointly: (A, B) = (t, x) scaled by 1/x gives
    // the same cleared pair up to a function multiple.
    TauForm w = tau(fy(L()));
    DifferentialSystem scaled = xi_system(w.scaled(fx(L()).inverse()));
    CHECK(proportional_differentials(sys, scaled));
    DifferentialSystem scaled2 = xi_system(w.scaled(fy(L()) + fc(L(), 3)));
    CHECK(proportional_differentials(sys, scaled2));

    CHECK(code_of([&] { xi_system(iota(fc(L(), 1))); }) == "trivial-form");
}

TEST_CASE("clearing keeps both parts on one denominator") {
    // w = (1/x, 1/(x^2)) clears to (x, 1) on the line.
    CurvePtr P = projective_line();
    TauForm w(fx(P).inverse(), (fx(P) * fx(P)).inverse());
    DifferentialSystem sys = xi_system(w);
    CHECK(sys.differential.front() == X() * XP() + MPoly(1));
}

TEST_CASE("declared points contribute poles only") {
    CurvePtr P = projective_line();
    TauForm w(fx(P).inverse(), fc(P, 0));
    std::vector<CurvePoint> pts = {
        CurvePoint(P, AlgElem(BaseElem(0)), AlgElem(BaseElem(0))),
        CurvePoint(P, AlgElem(BaseElem(1)), AlgElem(BaseElem(0)))};
    DifferentialSystem sys = xi_system(w, pts);
    REQUIRE(sys.poles.size() == 1);
    CHECK(sys.poles.front().x == AlgElem(BaseElem(0)));
    CHECK(sys.poles.front().str() == "(0, 0)");
}

TEST_CASE("substitution and pullback routes agree") {
    CurvePtr P = projective_line();
    // x -> x^2: the pulled equation and delta(x^2) = 2x x' match up to 2.
    CurveMorphism sq(P, P, fx(P) * fx(P), fc(P, 0));
    CHECK(xi_pullback_check(sq, tau(fx(P))));
    CHECK(xi_pullback_check(sq, TauForm(fx(P), fc(P, 1))));
    CHECK(xi_pullback_check(sq, TauForm(fx(P).inverse(), fx(P))));

    // x -> t*x: substituted t*x' + x equals the pullback pair (t, x).
    CurveMorphism stretch(P, P, CurveFn::from_mpoly(P, MPoly::t() * X()), fc(P, 0));
    CHECK(xi_pullback_check(stretch, tau(fx(P))));
    TauForm pulled = pullback(tau(fx(P)), stretch);
    CHECK(pulled.str() == "(t, x)");

    // The identity map, and a degree-two cover of the line by a cubic.
    CurveMorphism idL(L(), L(), fx(L()), fy(L()));
    CHECK(xi_pullback_check(idL, tau(fy(L()))));
    CHECK(xi_pullback_check(idL, TauForm(fy(L()), fx(L()) + fc(L(), 2))));
    CurveMorphism cover(E(), P, fx(E()), fc(E(), 0));
    CHECK(xi_pullback_check(cover, tau(fx(P))));
    CHECK(xi_pullback_check(cover, TauForm(fx(P) + fc(P, 1), fx(P))));

    // Compatibility: a passing check certifies equivalence with the pullback.
    TauForm w2(fx(P) + fc(P, 1), fx(P));
    CHECK(sim_equivalent(pullback(w2, cover), pullback(w2, cover).scaled(fy(E()))));

    CHECK(code_of([&] { xi_pullback_check(sq, iota(fc(P, 1))); }) == "trivial-form");
    CHECK(code_of([&] { xi_pullback_check(cover, tau(fy(E()))); }) == "curve-mismatch");
}

TEST_CASE("overlap decision is the equivalence test") {
    CurvePtr P = projective_line();
    TauForm tx = tau(fx(P));
    CurveFn f = fx(P) * fx(P) + fc(P, 2);
    CHECK(xi_overlap_implies_equiv(tx, tx.scaled(f)));
    CHECK_FALSE(xi_overlap_implies_equiv(tx, tx + iota(fc(P, 1))));
    CHECK_FALSE(xi_overlap_implies_equiv(tau(fy(L())), tau(fx(L()))));
    CHECK(code_of([&] { xi_overlap_implies_equiv(tx, iota(fc(P, 1))); }) == "trivial-form");
}
