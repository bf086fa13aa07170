#include "tauforms/testkit.hpp"

#include <stdexcept>

namespace tauforms::testkit {

namespace {

void demand(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("selftest: ") + what);
}

CurveFn fn_zero(const CurvePtr& c) { return CurveFn::constant(c, BaseElem(0)); }
CurveFn fn_one(const CurvePtr& c) { return CurveFn::constant(c, BaseElem(1)); }

// Evaluate a univariate polynomial over Q(t) at a curve function (Horner).
CurveFn xpoly_at(const XPoly& q, const CurveFn& f) {
    CurveFn acc = fn_zero(f.curve());
    for (int k = q.degree(); k >= 0; --k)
        acc = acc * f + CurveFn::constant(f.curve(), q.coeff(k));
    return acc;
}

XPoly xpoly_coeff_delta(const XPoly& q) {
    std::vector<BaseElem> cs;
    cs.reserve(static_cast<size_t>(q.degree() + 1));
    for (int k = 0; k <= q.degree(); ++k) cs.push_back(q.coeff(k).delta());
    return XPoly::from_coeffs(std::move(cs));
}

}  // namespace

long Rng::integer(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(gen_);
}

BaseElem Rng::rational(bool nonzero) {
    for (int tries = 0; tries < 64; ++tries) {
        BaseElem r = BaseElem::rational(Int(integer(-6, 6)), Int(integer(1, 4)));
        if (!nonzero || !r.is_zero()) return r;
    }
    return BaseElem(1);
}

BaseElem Rng::base_elem(bool nonzero, bool allow_t) {
    for (int tries = 0; tries < 64; ++tries) {
        BaseElem r;
        switch (allow_t ? integer(0, 4) : 0) {
            case 0: r = rational(false); break;
            case 1: r = BaseElem(integer(-2, 2)) + BaseElem(integer(1, 2)) * BaseElem::t();
                    break;
            case 2: r = rational(true) * BaseElem::t(); break;
            case 3: r = rational(true) / (BaseElem::t() + BaseElem(integer(0, 2))); break;
            default: r = BaseElem(integer(-1, 1)); break;
        }
        if (!nonzero || !r.is_zero()) return r;
    }
    return BaseElem(1);
}

MPoly Rng::mpoly(const std::vector<std::string>& vars, int max_degree, bool allow_t,
                 bool nonzero) {
    for (int tries = 0; tries < 64; ++tries) {
        MPoly acc;
        long terms = integer(1, 3);
        for (long i = 0; i < terms; ++i) {
            MPoly mono(base_elem(false, allow_t));
            int remaining = max_degree;
            for (const auto& v : vars) {
                int e = static_cast<int>(integer(0, remaining));
                if (e > 0) mono = mono * MPoly::variable(v).pow(e);
                remaining -= e;
            }
            acc = acc + mono;
        }
        if (!nonzero || !acc.is_zero()) return acc;
    }
    return MPoly(1);
}

EmbeddedVariety Rng::variety(bool allow_t) {
    static const std::vector<std::vector<std::string>> pools = {
        {"x"}, {"x", "y"}, {"x", "y", "z"}, {"x1", "x2", "x3"}};
    const auto& vars = pools[static_cast<size_t>(integer(0, 3))];
    long count = integer(1, 2);
    std::vector<MPoly> gens;
    while (static_cast<long>(gens.size()) < count) {
        MPoly g = mpoly(vars, static_cast<int>(integer(2, 3)), allow_t, true);
        if (g.total_degree() < 1) g = g + MPoly::variable(vars[0]);
        gens.push_back(g.extended(vars));
    }
    return EmbeddedVariety(vars, gens);
}

CurvePtr Rng::curve() {
    MPoly x = MPoly::variable("x");
    MPoly y = MPoly::variable("y");
    for (int tries = 0; tries < 32; ++tries) {
        try {
            switch (integer(0, 6)) {
                case 0: return projective_line();
                case 1: return make_curve(y - mpoly({"x"}, 2, true).extended({"x"}));
                case 2: return make_curve(x * y - MPoly(integer(1, 3)));
                case 3: {
                    static const long radii[] = {1, 2, 3, 5};
                    return make_curve(x.pow(2) + y.pow(2) -
                                      MPoly(radii[static_cast<size_t>(integer(0, 3))]));
                }
                case 4: {
                    MPoly a(integer(-2, 2)), b(integer(-2, 2));
                    return make_curve(y.pow(2) - x.pow(3) - a * x - b);
                }
                case 5: return make_curve(y.pow(2) - x.pow(3) - MPoly::t());
                default: return make_curve(x * y - MPoly::t());
            }
        } catch (const error&) {
            continue;  // a degenerate parameter draw; redraw the shape
        }
    }
    return make_curve(y.pow(2) - x.pow(3) - MPoly(1));
}

CurveFn Rng::curve_fn(const CurvePtr& c, bool nonzero) {
    for (int tries = 0; tries < 64; ++tries) {
        // Numerator at most linear in y keeps the y-reduction (and every
        // identity built on it) fast while still mixing both coordinates.
        MPoly num = mpoly({"x"}, 3, true, false) +
                    mpoly({"x"}, 2, true, false) * MPoly::variable("y");
        MPoly x = MPoly::variable("x");
        MPoly den;
        switch (integer(0, 3)) {
            case 0: den = MPoly(1); break;
            case 1: den = x; break;
            case 2: den = x * x + MPoly(1); break;
            default: den = x + MPoly(1); break;
        }
        CurveFn f = CurveFn::from_fraction(c, num, den);
        if (!nonzero || !f.is_zero()) return f;
    }
    return fn_one(c);
}

TauForm Rng::tau_form(const CurvePtr& c, bool nontrivial) {
    return TauForm(curve_fn(c, nontrivial), curve_fn(c, false));
}

CurveMorphism Rng::line_self_map(const CurvePtr& line) {
    for (int tries = 0; tries < 64; ++tries) {
        MPoly num = mpoly({"x"}, 2, true, true);
        MPoly den = integer(0, 2) == 0 ? MPoly::variable("x") + MPoly(integer(1, 2)) : MPoly(1);
        CurveFn r = CurveFn::from_fraction(line, num, den);
        if (!r.base_constant().has_value()) return CurveMorphism(line, line, r, fn_zero(line));
    }
    return CurveMorphism(line, line, CurveFn::coord_x(line), fn_zero(line));
}

long suite_derivation(Rng& rng, int pairs) {
    static const std::vector<std::vector<std::string>> pools = {
        {"x"}, {"x", "y"}, {"x", "y", "z"}};
    long checks = 0;
    for (int i = 0; i < pairs; ++i) {
        const auto& vars = pools[static_cast<size_t>(rng.integer(0, 2))];
        MPoly p = rng.mpoly(vars, 4).extended(vars);
        MPoly q = rng.mpoly(vars, 4).extended(vars);
        demand((p + q).coeff_delta() == p.coeff_delta() + q.coeff_delta(),
               "coefficient derivation must be additive");
        demand((p * q).coeff_delta() == p * q.coeff_delta() + q * p.coeff_delta(),
               "coefficient derivation must satisfy the Leibniz rule");
        for (const auto& v : vars)
            demand(p.coeff_delta().partial(v) == p.partial(v).coeff_delta(),
                   "coefficient derivation must commute with formal partials");
        ++checks;
    }
    return checks;
}

long suite_cone_slices(Rng& rng, int count) {
    long checks = 0;
    for (int i = 0; i < count; ++i) {
        EmbeddedVariety V = rng.variety(true);
        LinearSystem cone = prolongation_cone(V);
        demand(cone_slice(cone, BaseElem(0)) == tangent_variety(V),
               "cone slice at 0 must be the tangent system");
        demand(cone_slice(cone, BaseElem(1)) == prolongation(V),
               "cone slice at 1 must be the prolongation");
        ++checks;
    }
    return checks;
}

long suite_constants_collapse(Rng& rng, int count) {
    long checks = 0;
    for (int i = 0; i < count; ++i) {
        EmbeddedVariety V = rng.variety(false);
        demand(prolongation(V) == tangent_variety(V),
               "prolongation must coincide with the tangent system over constants");
        ++checks;
    }
    MPoly moving = MPoly::variable("y") - MPoly::t() * MPoly::variable("x");
    EmbeddedVariety L({"x", "y"}, {moving});
    LinearSystem pr = prolongation(L), tg = tangent_variety(L);
    demand(!(pr == tg), "a moving line must prolong differently from its tangent system");
    demand(pr.eqs.size() == 1 && tg.eqs.size() == 1 &&
               pr.eqs[0].constant - tg.eqs[0].constant == -MPoly::variable("x"),
           "the moving-line prolongation must differ exactly by the drift term -x");
    return checks + 1;
}

long suite_tau_leibniz(Rng& rng, int curves, int pairs_per_curve, int chain_count) {
    long checks = 0;
    for (int i = 0; i < curves; ++i) {
        CurvePtr c = rng.curve();
        for (int j = 0; j < pairs_per_curve; ++j) {
            CurveFn f = rng.curve_fn(c), g = rng.curve_fn(c);
            demand(tau(f + g) == tau(f) + tau(g), "tau must be additive");
            demand(tau(f * g) == tau(f).scaled(g) + tau(g).scaled(f),
                   "tau must satisfy the Leibniz rule");
            ++checks;
        }
    }
    for (int k = 0; k < chain_count; ++k) {
        CurvePtr c = rng.curve();
        CurveFn f = rng.curve_fn(c);
        XPoly q = rng.mpoly({"x"}, 3, true, true).extended({"x"}).to_xpoly("x");
        TauForm lhs = tau(xpoly_at(q, f));
        TauForm rhs = tau(f).scaled(xpoly_at(q.derivative(), f)) +
                      iota(xpoly_at(xpoly_coeff_delta(q), f));
        demand(lhs == rhs, "tau must satisfy the chain rule for polynomial substitution");
        ++checks;
    }
    return checks;
}

long suite_exact_sequence(Rng& rng, int count) {
    long checks = 0;
    for (int i = 0; i < count; ++i) {
        CurvePtr c = rng.curve();
        CurveFn g = rng.curve_fn(c);
        TauForm w0 = iota(g);
        demand(lambda_map(w0).coeff.is_zero(), "iota must land in the kernel of lambda");
        demand(w0.is_trivial() && w0 == iota(w0.b()),
               "a form killed by lambda must come from iota");
        CurveFn f = rng.curve_fn(c);
        demand(lambda_map(tau(f)) == differential(f),
               "lambda after tau must be the ordinary differential");
        demand(lambda_map(tau(f) + w0) == differential(f),
               "the iota summand must be invisible to lambda");
        ++checks;
    }
    return checks;
}

long suite_decompose_roundtrip(Rng& rng, int count) {
    long checks = 0;
    for (int i = 0; i < count; ++i) {
        CurvePtr c = rng.curve();
        TauForm w0 = rng.tau_form(c, true);
        CurveFn f = rng.curve_fn(c), g = rng.curve_fn(c);
        TauForm w1 = w0.scaled(f) + iota(g);
        auto [f2, g2] = decompose(w1, w0);
        demand(f2 == f && g2 == g, "decompose must invert f*w0 + iota(g) exactly");
        demand(w0.scaled(f2) + iota(g2) == w1, "decompose must reconstruct the form");
        ++checks;
    }
    return checks;
}

long suite_equivalence(Rng& rng, int count, int intersection_count) {
    long checks = 0;
    for (int i = 0; i < count; ++i) {
        CurvePtr c = rng.curve();
        TauForm w = rng.tau_form(c, true);
        CurveFn f = rng.curve_fn(c, true);
        demand(sim_equivalent(w, w.scaled(f)), "scaling must preserve the equivalence class");
        demand(canonical_ratio(w) == canonical_ratio(w.scaled(f)),
               "the canonical ratio must be constant on an equivalence class");
        demand(!sim_equivalent(w, w + iota(fn_one(c))),
               "shifting by iota(1) must change the equivalence class");
        ++checks;
    }
    for (int i = 0; i < intersection_count; ++i) {
        CurvePtr c = rng.curve();
        TauForm w1 = rng.tau_form(c, true), w2 = rng.tau_form(c, true);
        CurveFn f = w2.a() / w1.a();
        TauForm wstar = w1.scaled(f);
        demand(sim_equivalent(wstar, w1) && parallel(wstar, w2),
               "the scaled representative must meet the parallel class");
        demand(!parallel(w1.scaled(f + fn_one(c)), w2),
               "the common representative must be unique");
        ++checks;
    }
    return checks;
}

long suite_pullback(Rng& rng, int compositions, int squares) {
    CurvePtr line = projective_line();
    long checks = 0;
    for (int i = 0; i < compositions; ++i) {
        CurveMorphism phi = rng.line_self_map(line);
        CurveMorphism psi = rng.line_self_map(line);
        CurveMorphism chi(line, line, compose(phi.r(), psi), fn_zero(line));
        TauForm w = rng.tau_form(line, true);
        demand(pullback(w, chi) == pullback(pullback(w, phi), psi),
               "pullback must be functorial under composition");
        ++checks;
    }
    for (int i = 0; i < squares; ++i) {
        CurveMorphism phi = [&]() -> CurveMorphism {
            switch (rng.integer(0, 2)) {
                case 0: return rng.line_self_map(line);
                case 1: {
                    CurvePtr c = rng.curve();
                    return CurveMorphism(c, c, CurveFn::coord_x(c), CurveFn::coord_y(c));
                }
                default: {
                    CurvePtr e = make_curve(MPoly::variable("y").pow(2) -
                                            MPoly::variable("x").pow(3) - MPoly(1));
                    return CurveMorphism(e, line, CurveFn::coord_x(e), fn_zero(e));
                }
            }
        }();
        TauForm w2 = rng.tau_form(phi.target(), true);
        demand(lambda_map(pullback(w2, phi)) == pullback(lambda_map(w2), phi),
               "pullback must commute with lambda");
        CurveFn f = rng.curve_fn(phi.target());
        demand(pullback(tau(f), phi) == tau(compose(f, phi)),
               "pullback of tau(f) must be tau of the composite");
        ++checks;
    }
    return checks;
}

long suite_xi(Rng& rng, int checks) {
    CurvePtr line = projective_line();
    DifferentialSystem sys = xi_system(tau(CurveFn::coord_x(line)));
    demand(sys.str() == "y = 0\nx' = 0", "the line system must be y = 0, x' = 0");
    long done = 1;
    const BaseElem constants[] = {BaseElem(0), BaseElem(1), BaseElem(-3),
                                  BaseElem::rational(Int(5), Int(7))};
    for (const BaseElem& c : constants) {
        std::map<std::string, BaseElem> at = {
            {"x", c}, {"y", BaseElem(0)}, {"x'", BaseElem(0)}, {"y'", BaseElem(0)}};
        for (const MPoly& eq : sys.algebraic)
            demand(eq.eval(at).is_zero(), "constants must satisfy the algebraic part");
        for (const MPoly& eq : sys.differential)
            demand(eq.eval(at).is_zero(), "constants must satisfy the differential part");
        ++done;
    }
    for (int i = 0; i < checks; ++i) {
        CurveMorphism phi = [&]() -> CurveMorphism {
            switch (rng.integer(0, 2)) {
                case 0: return rng.line_self_map(line);
                case 1: {
                    CurvePtr c = rng.curve();
                    return CurveMorphism(c, c, CurveFn::coord_x(c), CurveFn::coord_y(c));
                }
                default: {
                    CurvePtr e = make_curve(MPoly::variable("y").pow(2) -
                                            MPoly::variable("x").pow(3) - MPoly(1));
                    return CurveMorphism(e, line, CurveFn::coord_x(e),
                                         CurveFn::constant(e, BaseElem(0)));
                }
            }
        }();
        TauForm w2 = rng.tau_form(phi.target(), true);
        demand(xi_pullback_check(phi, w2),
               "the pulled-back system must match the substituted system");
        ++done;
    }
    return done;
}

long suite_primitive_section(Rng& rng, int count) {
    long checks = 0;
    for (int i = 0; i < count; ++i) {
        MPoly a = rng.mpoly({"x"}, 3, true, false);
        MPoly b = rng.mpoly({"x"}, 3, true, false);
        if (a.is_zero() && b.is_zero()) b = MPoly(1);
        auto [content, a1, b1] = primitive_section(a, b);
        demand(content * a1 == a && content * b1 == b,
               "the section must recompose to the input pair");
        auto [content2, a2, b2] = primitive_section(a1, b1);
        demand(content2 == MPoly(1) && a2 == a1 && b2 == b1,
               "the primitive part must be primitive");
        ++checks;
    }
    return checks;
}

long suite_globals() {
    CurvePtr line = projective_line();
    auto basis0 = global_tau_basis_constant_case(line, 0);
    demand(basis0.size() == 1 && basis0[0] == iota(fn_one(line)),
           "genus zero must give the one-dimensional space spanned by iota(1)");
    CurvePtr e = make_curve(MPoly::variable("y").pow(2) - MPoly::variable("x").pow(3) - MPoly(1));
    auto basis1 = global_tau_basis_constant_case(e, 1);
    demand(basis1.size() == 2 && basis1[0] == iota(fn_one(e)) &&
               basis1[1] == TauForm(CurveFn::coord_y(e).inverse(), fn_zero(e)),
           "genus one must add the invariant-differential chart pair");
    return 2;
}

std::vector<SuiteResult> run_selftest(unsigned long long seed) {
    Rng rng(seed);
    std::vector<SuiteResult> out;
    out.push_back({"derivation", suite_derivation(rng, 40)});
    out.push_back({"cone-slices", suite_cone_slices(rng, 4)});
    out.push_back({"constants-collapse", suite_constants_collapse(rng, 4)});
    out.push_back({"tau-leibniz", suite_tau_leibniz(rng, 2, 6, 4)});
    out.push_back({"exact-sequence", suite_exact_sequence(rng, 8)});
    out.push_back({"decompose-roundtrip", suite_decompose_roundtrip(rng, 8)});
    out.push_back({"equivalence", suite_equivalence(rng, 8, 4)});
    out.push_back({"pullback", suite_pullback(rng, 4, 4)});
    out.push_back({"xi", suite_xi(rng, 4)});
    out.push_back({"primitive-section", suite_primitive_section(rng, 10)});
    out.push_back({"globals", suite_globals()});
    return out;
}

}  // namespace tauforms::testkit
