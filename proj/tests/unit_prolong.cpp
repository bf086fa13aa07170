#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tauforms/error.hpp"
#include "tauforms/prolong.hpp"

using namespace tauforms;

namespace {

MPoly X() { return MPoly::variable("x"); }
MPoly Y() { return MPoly::variable("y"); }

EmbeddedVariety circle() { return {{"x", "y"}, {X() * X() + Y() * Y() - MPoly(1)}}; }
EmbeddedVariety line() { return {{"x", "y"}, {Y() - MPoly::t() * X()}}; }

}  // namespace

TEST_CASE("variety validation") {
    CHECK_THROWS_AS(EmbeddedVariety({}, {X()}), error);
    CHECK_THROWS_AS(EmbeddedVariety({"x"}, {}), error);
    CHECK_THROWS_AS(EmbeddedVariety({"x"}, {MPoly()}), error);
    CHECK_THROWS_AS(EmbeddedVariety({"x"}, {Y()}), error);
    CHECK_THROWS_AS(EmbeddedVariety({"x", "x"}, {X()}), error);
    CHECK(circle().constant_coefficients());
    CHECK_FALSE(line().constant_coefficients());
}

TEST_CASE("tangent, prolongation, cone on the reference examples") {
    CHECK(tangent_variety(circle()).str() == "2*x*u + 2*y*v = 0");
    CHECK(tangent_variety(line()).str() == "-t*u + v = 0");
    CHECK(prolongation(line()).str() == "-t*u + v - x = 0");
    CHECK(prolongation_cone(line()).str() == "-t*u + v - x*u' = 0");
    EmbeddedVariety pt({"x"}, {X() - MPoly::t()});
    CHECK(prolongation(pt).str() == "u - 1 = 0");
    CHECK(tangent_variety(pt).str() == "u = 0");
}

TEST_CASE("cone slices recover tangent and prolongation") {
    for (const auto& V : {circle(), line(),
                          EmbeddedVariety({"x1", "x2", "x3"},
                                          {MPoly::variable("x1") * MPoly::variable("x3") -
                                               MPoly::t() * MPoly::variable("x2"),
                                           MPoly::variable("x2").pow(2) - MPoly(1)})}) {
        LinearSystem cone = prolongation_cone(V);
        CHECK(cone_slice(cone, BaseElem(0)) == tangent_variety(V));
        CHECK(cone_slice(cone, BaseElem(1)) == prolongation(V));
    }
    CHECK_THROWS_AS(cone_slice(tangent_variety(circle()), BaseElem(0)), error);
}

TEST_CASE("over delta-constants the prolongation is the tangent system") {
    EmbeddedVariety V = circle();
    CHECK(prolongation(V) == tangent_variety(V));
    // The moving line differs from its tangent system by the constant -x.
    LinearSystem tl = tangent_variety(line());
    LinearSystem pl = prolongation(line());
    CHECK(tl.eqs[0].coeffs == pl.eqs[0].coeffs);
    CHECK(pl.eqs[0].constant == -X());
    CHECK(tl.eqs[0].constant.is_zero());
}

TEST_CASE("lifting maps and ambient tau-differentials") {
    std::vector<std::string> A1 = {"x"};

    auto lift = lifting_map({MPoly::t() * X()}, A1);
    REQUIRE(lift.size() == 1);
    CHECK(lift[0].str() == "t*u + x");

    CHECK(lifting_map({X() * X()}, A1)[0].str() == "2*x*u");
    CHECK(lifting_map({X()}, A1)[0].str() == "u");

    CHECK(tau_diff_ambient(X(), A1).str() == "u");
    CHECK(tau_diff_ambient(MPoly::t(), A1).str() == "1");
    CHECK(tau_diff_ambient(MPoly::t() * X() * X(), A1).str() == "2*t*x*u + x^2");
    CHECK_THROWS_AS(tau_diff_ambient(Y(), A1), error);

    // Lifts intertwine with the derivation: the fiber image of (v, delta v)
    // is delta(phi(v)).  Checked against direct evaluation in Q(t).
    BaseElem t = BaseElem::t();
    std::map<std::string, BaseElem> v = {{"x", t}, {"y", t.inverse()}};
    std::vector<BaseElem> dv = {v.at("x").delta(), v.at("y").delta()};
    std::vector<MPoly> phi = {X() * Y(), X() * X() + Y()};
    auto maps = lifting_map(phi, std::vector<std::string>{"x", "y"});
    for (size_t j = 0; j < phi.size(); ++j) {
        BaseElem direct = phi[j].eval(v).delta();
        CHECK(maps[j].apply(v, dv) == direct);
    }
}
