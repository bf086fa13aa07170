#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tauforms/curve.hpp"
#include "tauforms/error.hpp"

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

}  // namespace

TEST_CASE("curve constructor accepts smooth irreducible curves") {
    CHECK(projective_line()->deg_y() == 1);
    CHECK(E()->deg_y() == 2);
    CHECK(E()->constant_coefficients());
    CHECK_FALSE(L()->constant_coefficients());
    CHECK(L()->pdelta() == -X());
    // Circle, hyperbola, and a curve with t in the equation.
    CHECK_NOTHROW(make_curve(X() * X() + Y() * Y() - MPoly(1)));
    CHECK_NOTHROW(make_curve(X() * Y() - MPoly(1)));
    CHECK_NOTHROW(make_curve(Y() * Y() - X().pow(3) - MPoly::t()));
}

TEST_CASE("curve constructor rejects bad input") {
    auto code_of = [](MPoly p) {
        try {
            make_curve(std::move(p));
        } catch (const error& e) {
            return e.code();
        }
        return std::string("no-error");
    };
    CHECK(code_of(X() * X() - MPoly(1)) == "invalid-curve");          // no y
    CHECK(code_of(MPoly::variable("z") + Y()) == "invalid-curve");    // foreign variable
    CHECK(code_of(Y() * Y() - X() * X()) == "reducible-curve");       // (y-x)(y+x)
    CHECK(code_of(Y().pow(2)) == "reducible-curve");                  // y*y
    CHECK(code_of(X() * Y()) == "reducible-curve");                   // common x factor
    CHECK(code_of(Y() * Y() - X().pow(3)) == "singular-curve");       // cusp
    CHECK(code_of(Y() * Y() - X() * X() * (X() + MPoly(1))) == "singular-curve");  // node
}

TEST_CASE("function field arithmetic") {
    CurveFn y = CurveFn::coord_y(E());
    CurveFn x = CurveFn::coord_x(E());
    CurveFn rhs = CurveFn::from_mpoly(E(), X().pow(3) + MPoly(1));
    CHECK(y * y == rhs);  // reduction mod the curve
    CHECK((y * y).str() == "x^3 + 1");

    // 1/y = y/(x^3+1) in K(E); canonical forms agree.
    CurveFn inv1 = CurveFn::from_fraction(E(), MPoly(1), Y());
    CurveFn inv2 = CurveFn::from_fraction(E(), Y(), X().pow(3) + MPoly(1));
    CHECK(inv1 == inv2);
    CHECK(y * inv1 == CurveFn::constant(E(), BaseElem(1)));
    CHECK(inv1.str() == "(1)/(x^3 + 1)*y");

    // Field sanity on a handful of elements.
    CurveFn fs[3] = {x + y, y * x - CurveFn::constant(E(), BaseElem::t()), inv1 + x};
    for (const auto& f : fs)
        for (const auto& g : fs) {
            CHECK(f + g == g + f);
            CHECK(f * g == g * f);
            CHECK((f - g) + g == f);
        }
    for (const auto& f : fs)
        if (!f.is_zero()) CHECK(f * f.inverse() == CurveFn::constant(E(), BaseElem(1)));

    CHECK_THROWS_AS(CurveFn::from_fraction(E(), MPoly(1), Y() * Y() - X().pow(3) - MPoly(1)),
                    error);  // dividing by the curve polynomial = dividing by zero
    CHECK_THROWS_AS(x + CurveFn::coord_x(L()), error);  // curve mismatch

    CHECK(x.pow(-2) == (x * x).inverse());
    CHECK(CurveFn::constant(E(), BaseElem(5)).base_constant().value() == BaseElem(5));
    CHECK_FALSE(x.base_constant().has_value());
}

TEST_CASE("on L the coordinate y collapses to t*x") {
    CurveFn y = CurveFn::coord_y(L());
    CurveFn tx = CurveFn::from_mpoly(L(), MPoly::t() * X());
    CHECK(y == tx);
    CHECK(y.str() == "t*x");
}

TEST_CASE("delta data of canonical representatives") {
    // f = x anywhere: (1, 0, 0).
    DeltaData dx = CurveFn::coord_x(E()).delta_data();
    CHECK(dx.fx == CurveFn::constant(E(), BaseElem(1)));
    CHECK(dx.fy.is_zero());
    CHECK(dx.fdelta.is_zero());

    // f = t*x: (t, 0, x).
    DeltaData dtx = (CurveFn::constant(E(), BaseElem::t()) * CurveFn::coord_x(E())).delta_data();
    CHECK(dtx.fx == CurveFn::constant(E(), BaseElem::t()));
    CHECK(dtx.fy.is_zero());
    CHECK(dtx.fdelta == CurveFn::coord_x(E()));

    // The representative y on L has data (0, 1, 0) by the quotient rule.
    DeltaData dy = rep_delta_data(L(), Y(), MPoly(1));
    CHECK(dy.fx.is_zero());
    CHECK(dy.fy == CurveFn::constant(L(), BaseElem(1)));
    CHECK(dy.fdelta.is_zero());

    // The canonical representative of the same function is t*x with data (t, 0, x).
    DeltaData dy2 = CurveFn::coord_y(L()).delta_data();
    CHECK(dy2.fx == CurveFn::constant(L(), BaseElem::t()));
    CHECK(dy2.fy.is_zero());
    CHECK(dy2.fdelta == CurveFn::coord_x(L()));
}

TEST_CASE("clearing denominators") {
    CurveFn f = CurveFn::from_fraction(E(), MPoly(3) * X() * X(), MPoly(2) * Y());
    auto [num, den] = f.cleared();
    CHECK(den.str("x") == "x^3 + 1");
    CHECK(num == MPoly::from_terms({"x", "y"}, {{{2, 1}, BaseElem::rational(Int(3), Int(2))}}));
    // f equals num/den again.
    CHECK(f == CurveFn::from_fraction(E(), num, MPoly::from_xpoly(den, "x")));
}
