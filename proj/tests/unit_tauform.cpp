#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "tauforms/error.hpp"
#include "tauforms/tauform.hpp"

using namespace tauforms;

namespace {

MPoly X() { return MPoly::variable("x"); }
MPoly Y() { return MPoly::variable("y"); }

// E: y^2 = x^3 + 1, a smooth cubic over the constants.
CurvePtr E() {
    static CurvePtr c = make_curve(Y() * Y() - X().pow(3) - MPoly(1));
    return c;
}

// L: y = t*x, a line moving with t.
CurvePtr L() {
    static CurvePtr c = make_curve(Y() - MPoly::t() * X());
    return c;
}

CurvePtr Circle() {
    static CurvePtr c = make_curve(X() * X() + Y() * Y() - MPoly(1));
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

BaseElem Q(long n, long d) { return BaseElem::rational(Int(n), Int(d)); }

}  // namespace

TEST_CASE("extension elements and curve points") {
    // Q(t)[s] / (s^2 - t^3 - 1): a square root of t^3 + 1.
    BaseElem t3p1 = BaseElem::t().pow(3) + BaseElem(1);
    ExtPtr F = std::make_shared<const ExtField>(
        XPoly::from_coeffs({-t3p1, BaseElem(0), BaseElem(1)}));
    CHECK(F->degree() == 2);
    CHECK(code_of([] { ExtField(XPoly(BaseElem(3))); }) == "invalid-extension");

    AlgElem s = AlgElem::generator(F);
    CHECK(s.str() == "s");
    CHECK((s * s) == AlgElem(F, XPoly(t3p1)));
    CHECK((s * s).str() == "t^3 + 1");
    // (1 + s)(1 - s) = 1 - s^2 = -t^3
    AlgElem one(BaseElem(1));
    CHECK(((one + s) * (one - s)) == AlgElem(BaseElem(-1) * BaseElem::t().pow(3)));
    auto sinv = s.try_inverse();
    REQUIRE(sinv.has_value());
    CHECK((s * *sinv) == one);
    CHECK(!AlgElem(BaseElem(0)).try_inverse().has_value());

    // A declared modulus that is secretly reducible is caught on inversion.
    ExtPtr bad = std::make_shared<const ExtField>(
        XPoly::from_coeffs({BaseElem(-1), BaseElem(0), BaseElem(1)}));
    AlgElem zdiv = AlgElem::generator(bad) - AlgElem(bad, XPoly(BaseElem(1)));
    CHECK(code_of([&] { zdiv.try_inverse(); }) == "reducible-extension");

    // Elements of unrelated extensions do not mix.
    CHECK(code_of([&] { (void)(s + AlgElem::generator(bad)); }) == "extension-mismatch");

    // Points: membership is verified on construction.
    CHECK_NOTHROW(CurvePoint(E(), AlgElem(BaseElem(0)), AlgElem(BaseElem(1))));
    CHECK_NOTHROW(CurvePoint(E(), AlgElem(BaseElem(2)), AlgElem(BaseElem(3))));
    CHECK_NOTHROW(CurvePoint(E(), AlgElem(BaseElem::t()), s));
    CHECK(code_of([&] { CurvePoint(E(), AlgElem(BaseElem(0)), AlgElem(BaseElem(2))); }) ==
          "not-on-curve");

    // Evaluating 1/y at (t, s) inverts s.
    CurvePoint pt(E(), AlgElem(BaseElem::t()), s);
    auto v = eval_fn(fy(E()).inverse(), pt);
    REQUIRE(v.has_value());
    CHECK(*v == *sinv);
}

TEST_CASE("tau-differential in the chart over x") {
    // L: p = y - t*x, so p_x = -t, p_y = 1, p^delta = -x.
    TauForm tx = tau(fx(L()));
    CHECK(tx.a() == fc(L(), 1));
    CHECK(tx.b().is_zero());
    CHECK(tx.str() == "(1, 0)");

    TauForm ty = tau(fy(L()));
    CHECK(ty.a() == CurveFn::from_mpoly(L(), MPoly::t()));
    CHECK(ty.b() == fx(L()));
    CHECK(ty.str() == "(t, x)");

    // The chart pair does not depend on the representative used.
    TauForm ty_rep = tau_from_rep(L(), Y(), MPoly(1));
    CHECK(ty_rep == ty);

    // E: p_y = 2y, so tau(y) has linear part 3x^2 / (2y) and no drift.
    TauForm tyE = tau(fy(E()));
    CHECK(tyE.a() == CurveFn::from_mpoly(E(), MPoly(3) * X() * X()) /
                         CurveFn::from_mpoly(E(), MPoly(2) * Y()));
    CHECK(tyE.b().is_zero());

    // Base elements map to their derivative: tau(c) = iota(delta(c)).
    TauForm tt = tau(CurveFn::constant(L(), BaseElem::t()));
    CHECK(tt.is_trivial());
    CHECK(tt.b() == fc(L(), 1));
    CHECK(tau(CurveFn::constant(E(), BaseElem::t().pow(2))) ==
          iota(CurveFn::constant(E(), BaseElem(2) * BaseElem::t())));
    CHECK(tau(fc(E(), 7)).is_zero_form());

    // Additivity and the Leibniz rule on sample functions.
    CurveFn f = fx(E()) * fy(E()) + fc(E(), 2);
    CurveFn g = fy(E()) + fx(E()).inverse();
    CHECK(tau(f + g) == tau(f) + tau(g));
    CHECK(tau(f * g) == tau(g).scaled(f) + tau(f).scaled(g));
    CurveFn h = fy(L()) * fy(L()) + CurveFn::constant(L(), BaseElem::t()) * fx(L());
    CHECK(tau(h * h) == tau(h).scaled(h + h));

    // On the circle, 2x tau(x) + 2y tau(y) = tau(1) = 0.
    TauForm lhs = tau(fx(Circle())).scaled(fx(Circle()) + fx(Circle())) +
                  tau(fy(Circle())).scaled(fy(Circle()) + fy(Circle()));
    CHECK(lhs.is_zero_form());
}

TEST_CASE("iota, lambda, and the decomposition") {
    CurveFn g = fx(L()) * fx(L());
    TauForm ig = iota(g);
    CHECK(ig.is_trivial());
    CHECK(lambda_map(ig).coeff.is_zero());
    CHECK(lambda_map(tau(fy(L()))).coeff == CurveFn::from_mpoly(L(), MPoly::t()));

    CHECK(differential(fx(E())).coeff == fc(E(), 1));
    CHECK(differential(fx(E())).str() == "1*dx");
    CHECK(differential(fx(E()).pow(3)).coeff == fc(E(), 3) * fx(E()) * fx(E()));
    CHECK(differential(fy(E())) == lambda_map(tau(fy(E()))));

    // decompose(tau y, tau x) on L recovers (t, x).
    auto [f, g2] = decompose(tau(fy(L())), tau(fx(L())));
    CHECK(f == CurveFn::from_mpoly(L(), MPoly::t()));
    CHECK(g2 == fx(L()));
    // Round trip: w1 = f * w0 + iota(g).
    CHECK(tau(fy(L())) == tau(fx(L())).scaled(f) + iota(g2));

    // The function part vanishes exactly on the trivial forms.
    auto [f0, g0] = decompose(ig, tau(fx(L())));
    CHECK(f0.is_zero());
    CHECK(g0 == g);
    CHECK(code_of([&] { decompose(ig, iota(fc(L(), 1))); }) == "trivial-form");
}

TEST_CASE("equivalence, canonical ratio, parallelism") {
    TauForm ty = tau(fy(L()));
    TauForm tx = tau(fx(L()));
    CurveFn f = fx(L()) * fx(L()) + fc(L(), 1);
    CHECK(sim_equivalent(ty, ty.scaled(f)));
    CHECK(sim_equivalent(ty.scaled(f), ty));
    CHECK_FALSE(sim_equivalent(ty, tx));
    CHECK_FALSE(sim_equivalent(ty, tx.scaled(f)));
    CHECK(code_of([&] { sim_equivalent(iota(fc(L(), 1)), tx); }) == "trivial-form");

    // ratio = B / A is constant on equivalence classes.
    CurveFn r = canonical_ratio(ty);
    CHECK(r == fx(L()) / CurveFn::from_mpoly(L(), MPoly::t()));
    CHECK(canonical_ratio(ty.scaled(f)) == r);
    CHECK(canonical_ratio(tx).is_zero());
    CHECK(code_of([&] { canonical_ratio(iota(fc(L(), 1))); }) == "trivial-form");

    CHECK(parallel(ty, ty + iota(f)));
    CHECK_FALSE(parallel(ty, tx));
    CHECK(parallel(tx, tx - iota(fc(L(), 5))));
}

TEST_CASE("pointwise behavior of a form") {
    CurvePtr P = projective_line();
    auto at = [&](long c) { return CurvePoint(P, AlgElem(BaseElem(c)), AlgElem(BaseElem(0))); };
    TauForm w1(fx(P), fc(P, 1));
    CHECK(classify_point(w1, at(0)) == PointClass::zero);
    CHECK(classify_point(w1, at(2)) == PointClass::regular);
    TauForm w2(fx(P).inverse(), fc(P, 0));
    CHECK(classify_point(w2, at(0)) == PointClass::pole);
    CHECK(classify_point(w2, at(3)) == PointClass::regular);
    CHECK(classify_point(TauForm(fc(P, 1), fc(P, 0)), at(0)) == PointClass::regular);
    CHECK(point_class_name(PointClass::pole) == std::string("pole"));

    // On E: tau(y) = (3x^2/(2y), 0).
    TauForm tyE = tau(fy(E()));
    CurvePoint p0(E(), AlgElem(BaseElem(0)), AlgElem(BaseElem(1)));
    CurvePoint p1(E(), AlgElem(BaseElem(2)), AlgElem(BaseElem(3)));
    CurvePoint p2(E(), AlgElem(BaseElem(-1)), AlgElem(BaseElem(0)));
    CHECK(classify_point(tyE, p0) == PointClass::zero);     // linear part vanishes
    CHECK(classify_point(tyE, p1) == PointClass::regular);
    CHECK(classify_point(tyE, p2) == PointClass::pole);     // 1/(2y) blows up

    // Where p_y vanishes the fiber is vertical, so A du dies on it.
    TauForm w3(fx(E()), fc(E(), 1));
    CHECK(classify_point(w3, p2) == PointClass::zero);
    CHECK(classify_point(w3, p1) == PointClass::regular);

    // Extension point (t, s) with s^2 = t^3 + 1 is regular for tau(y).
    BaseElem t3p1 = BaseElem::t().pow(3) + BaseElem(1);
    ExtPtr F = std::make_shared<const ExtField>(
        XPoly::from_coeffs({-t3p1, BaseElem(0), BaseElem(1)}));
    CurvePoint pext(E(), AlgElem(BaseElem::t()), AlgElem::generator(F));
    CHECK(classify_point(tyE, pext) == PointClass::regular);

    CHECK(code_of([&] { classify_point(tyE, at(0)); }) == "curve-mismatch");
}

TEST_CASE("null sections") {
    TauForm ty = tau(fy(L()));
    NullSection n = null_set(ty);
    CHECK(n.u == -(fx(L()) / CurveFn::from_mpoly(L(), MPoly::t())));
    CHECK(n.v.is_zero());
    // The section sits inside the prolongation and kills the form.
    CHECK((ty.a() * n.u + ty.b()).is_zero());
    CurveFn rel = CurveFn::from_mpoly(L(), L()->px()) * n.u +
                  CurveFn::from_mpoly(L(), L()->py()) * n.v +
                  CurveFn::from_mpoly(L(), L()->pdelta());
    CHECK(rel.is_zero());

    CurvePtr P = projective_line();
    NullSection m = null_set(TauForm(fx(P), fc(P, 1)));
    CHECK(m.u == -fx(P).inverse());
    CHECK(m.v.is_zero());
    CHECK(code_of([&] { null_set(iota(fc(P, 1))); }) == "trivial-form");

    // A curve moving with t has a drift term in v.
    TauForm txL = tau(fx(L()));
    NullSection k = null_set(txL);
    CHECK(k.u.is_zero());
    CHECK(k.v == fx(L()));  // v = -(p_x*0 + p^delta)/p_y = x
}

TEST_CASE("maps between curves and pullback") {
    CurvePtr P = projective_line();
    // Square map on the line: x -> x^2.
    CurveMorphism sq(P, P, fx(P) * fx(P), fc(P, 0));
    CHECK(compose(fx(P), sq) == fx(P) * fx(P));
    CHECK(compose(fx(P).inverse(), sq) == (fx(P) * fx(P)).inverse());

    // Functoriality: pulling back tau(f) gives tau(f o phi).
    CHECK(pullback(tau(fx(P)), sq) == tau(fx(P) * fx(P)));
    CHECK(pullback(tau(fx(P).inverse()), sq) == tau((fx(P) * fx(P)).inverse()));

    // The linear part transforms like a one-form: d(x^2) = 2x dx.
    OneForm dx{fc(P, 1)};
    CHECK(pullback(dx, sq).coeff == fc(P, 2) * fx(P));
    TauForm w(fx(P), fc(P, 1));
    CHECK(pullback(lambda_map(w), sq) == lambda_map(pullback(w, sq)));

    // Degree-two cover E -> P given by the x coordinate.
    CurveMorphism cover(E(), P, fx(E()), fc(E(), 0));
    CHECK(compose(fx(P), cover) == fx(E()));
    CHECK(pullback(tau(fx(P)), cover) == tau(fx(E())));

    // Identity of L written with its own coordinates.
    CurveMorphism idL(L(), L(), fx(L()), fy(L()));
    CHECK(compose(fy(L()), idL) == fy(L()));
    CHECK(pullback(tau(fy(L())), idL) == tau(fy(L())));

    // A map L -> P and a drifting form pulled back along it.
    CurveMorphism drop(L(), P, fy(L()), fc(L(), 0));
    CHECK(compose(fx(P), drop) == CurveFn::from_mpoly(L(), MPoly::t() * X()));
    TauForm txP = tau(fx(P));
    TauForm pb = pullback(txP, drop);
    CHECK(pb == tau(fy(L())));
    CHECK(pb.str() == "(t, x)");

    CHECK(code_of([&] { CurveMorphism(P, E(), fx(P), fc(P, 0)); }) == "not-a-morphism");
    CHECK(code_of([&] { CurveMorphism(P, P, fc(P, 5), fc(P, 0)); }) == "constant-map");
    CHECK(code_of([&] {
              CurveMorphism(P, P, CurveFn::constant(P, BaseElem::t()), fc(P, 0));
          }) == "constant-map");
    CHECK(code_of([&] { CurveMorphism(P, P, fx(E()), fc(P, 0)); }) == "curve-mismatch");
    CHECK(code_of([&] { compose(fx(P), idL); }) == "curve-mismatch");
}

TEST_CASE("content and primitive pair of a polynomial pair") {
    MPoly T = MPoly::t();
    // (t*x^2 + t*x, t*x + t) = t*(x + 1) * (x, 1)
    auto [c1, a1, b1] = primitive_section(T * X() * X() + T * X(), T * X() + T);
    CHECK(c1 == T * (X() + MPoly(1)));
    CHECK(a1 == X());
    CHECK(b1 == MPoly(1));

    // One zero member: the content is the other member.
    MPoly a = X() * Y() + MPoly(1);
    auto [c2, a2, b2] = primitive_section(a, MPoly());
    CHECK(c2 == a);
    CHECK(a2 == MPoly(1));
    CHECK(b2.is_zero());
    auto [c3, a3, b3] = primitive_section(MPoly(), a);
    CHECK(c3 == a);
    CHECK(a3.is_zero());
    CHECK(b3 == MPoly(1));

    // Coprime pairs have content 1.
    auto [c4, a4, b4] = primitive_section(X(), Y());
    CHECK(c4 == MPoly(1));
    CHECK(a4 == X());
    CHECK(b4 == Y());

    // A common factor involving y.
    auto [c5, a5, b5] = primitive_section(X() * Y() + X(), Y() * Y() + Y());
    CHECK(c5 == Y() + MPoly(1));
    CHECK(a5 == X());
    CHECK(b5 == Y());

    // Rational scalar content: (x/2, x/3) = (x/6) * (3, 2).
    auto [c6, a6, b6] = primitive_section(MPoly(Q(1, 2)) * X(), MPoly(Q(1, 3)) * X());
    CHECK(c6 == MPoly(Q(1, 6)) * X());
    CHECK(a6 == MPoly(3));
    CHECK(b6 == MPoly(2));

    // Recomposition always holds.
    MPoly pa = (T * X() + MPoly(1)) * (X() * Y() - T);
    MPoly pb = (T * X() + MPoly(1)) * (Y() + T * T);
    auto [c7, a7, b7] = primitive_section(pa, pb);
    CHECK(c7 * a7 == pa);
    CHECK(c7 * b7 == pb);
    auto [c8, a8, b8] = primitive_section(a7, b7);
    CHECK(c8 == MPoly(1));

    CHECK(code_of([] { primitive_section(MPoly(), MPoly()); }) == "zero-polynomial");
    CHECK(code_of([] { primitive_section(MPoly::variable("z"), MPoly(1)); }) ==
          "invalid-polynomial");
}

TEST_CASE("global forms over the constants") {
    auto basis0 = global_tau_basis_constant_case(projective_line(), 0);
    REQUIRE(basis0.size() == 1);
    CHECK(basis0[0] == iota(fc(projective_line(), 1)));

    auto basis1 = global_tau_basis_constant_case(E(), 1);
    REQUIRE(basis1.size() == 2);
    CHECK(basis1[0] == iota(fc(E(), 1)));
    CHECK(basis1[1].a() == fy(E()).inverse());
    CHECK(basis1[1].b().is_zero());

    // y^2 = x^3 - x also works (discriminant 64).
    CurvePtr E2 = make_curve(Y() * Y() - X().pow(3) + X());
    CHECK(global_tau_basis_constant_case(E2, 1).size() == 2);

    CHECK(code_of([] {
              CurvePtr Et = make_curve(Y() * Y() - X().pow(3) - MPoly::t());
              global_tau_basis_constant_case(Et, 1);
          }) == "nonconstant-coefficients");
    CHECK(code_of([] { global_tau_basis_constant_case(projective_line(), 1); }) ==
          "genus-mismatch");
    CHECK(code_of([] { global_tau_basis_constant_case(E(), 0); }) == "genus-mismatch");
    CHECK(code_of([] { global_tau_basis_constant_case(E(), 2); }) == "unsupported-genus");
    CHECK(code_of([] { global_tau_basis_constant_case(Circle(), 0); }) == "unsupported-curve");
}
