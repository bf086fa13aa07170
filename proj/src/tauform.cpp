#include "tauforms/tauform.hpp"

#include "tauforms/error.hpp"

namespace tauforms {

namespace {

CurveFn zero_fn(const CurvePtr& c) { return CurveFn::constant(c, BaseElem(0)); }
CurveFn one_fn(const CurvePtr& c) { return CurveFn::constant(c, BaseElem(1)); }

// Chart pair of the tau-differential from the three partial data of a
// function: eliminate the fiber coordinate over y through the equation
// p_x u + p_y v + p^delta = 0.  p_y is invertible in K(C) because its
// y-degree is below deg_y(p) and p is irreducible.
TauForm chart_pair(const CurvePtr& c, const DeltaData& d) {
    CurveFn ratio = d.fy / CurveFn::from_mpoly(c, c->py());
    CurveFn a = d.fx - ratio * CurveFn::from_mpoly(c, c->px());
    CurveFn b = d.fdelta - ratio * CurveFn::from_mpoly(c, c->pdelta());
    return TauForm(std::move(a), std::move(b));
}

YPoly to_ypoly(const MPoly& p) {
    std::vector<RatX> cs;
    for (const XPoly& c : p.coeffs_in("y", "x")) cs.push_back(RatX(c));
    return YPoly::from_coeffs(std::move(cs));
}

// Monic gcd in Q(t)[x] of a coefficient list; zero when all entries vanish.
XPoly xlist_gcd(const std::vector<XPoly>& v) {
    XPoly g;
    for (const XPoly& c : v) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : XPoly::gcd_monic(g, c);
    }
    return g;
}

XPoly xpoly_lcm(const XPoly& a, const XPoly& b) {
    XPoly g = XPoly::gcd_monic(a, b);
    return XPoly::divmod(a * b, g).first.monic();
}

// Monic gcd of two non-zero polynomials in Q(t)[x, y]: the product of the
// gcd of their x-contents and the x-primitive part of their gcd over the
// field Q(t)(x), with y as the main variable.
MPoly bivariate_gcd(const MPoly& a, const MPoly& b) {
    XPoly g0 = XPoly::gcd_monic(xlist_gcd(a.coeffs_in("y", "x")), xlist_gcd(b.coeffs_in("y", "x")));
    YPoly h = YPoly::gcd_monic(to_ypoly(a), to_ypoly(b));
    XPoly den_lcm(BaseElem(1));
    for (int k = 0; k <= h.degree(); ++k)
        den_lcm = xpoly_lcm(den_lcm, h.coeff(k).den());
    std::vector<XPoly> cleared;
    for (int k = 0; k <= h.degree(); ++k) {
        RatX c = h.coeff(k) * RatX(den_lcm);
        invariant(c.den().degree() == 0, "denominator survived clearing");
        cleared.push_back(c.num());
    }
    XPoly content = xlist_gcd(cleared);
    for (XPoly& c : cleared) {
        auto [q, r] = XPoly::divmod(c, content);
        invariant(r.is_zero(), "inexact division by the coefficient gcd");
        c = std::move(q);
    }
    return MPoly::from_xpoly(g0, "x") * MPoly::from_coeffs_in(cleared, "y", "x");
}

MPoly exact_div(const MPoly& a, const MPoly& g) {
    auto [q, rem] = YPoly::divmod(to_ypoly(a), to_ypoly(g));
    invariant(rem.is_zero(), "inexact division by the common factor");
    std::vector<XPoly> cs;
    for (int k = 0; k <= q.degree(); ++k) {
        const RatX& c = q.coeff(k);
        invariant(c.den().degree() == 0, "cofactor is not a polynomial");
        cs.push_back(c.num());
    }
    return MPoly::from_coeffs_in(cs, "y", "x");
}

void collect_coeffs(const MPoly& p, std::vector<BaseElem>& out) {
    for (const XPoly& c : p.coeffs_in("y", "x"))
        for (int k = 0; k <= c.degree(); ++k)
            if (!c.coeff(k).is_zero()) out.push_back(c.coeff(k));
}

// Canonical common scalar: gcd of the Z[t]-numerators over the lcm of the
// denominators, with positive leading coefficient.
BaseElem joint_content(const std::vector<BaseElem>& cs) {
    invariant(!cs.empty(), "content of an empty coefficient list");
    ZPoly den_lcm(1);
    for (const BaseElem& c : cs) {
        ZPoly g = ZPoly::gcd(den_lcm, c.den());
        ZPoly q;
        bool ok = den_lcm.div_exact(g, q);
        invariant(ok, "gcd does not divide its argument");
        den_lcm = q * c.den();
    }
    ZPoly num_gcd;
    for (const BaseElem& c : cs) {
        ZPoly q;
        bool ok = den_lcm.div_exact(c.den(), q);
        invariant(ok, "lcm is not a common multiple");
        num_gcd = ZPoly::gcd(num_gcd, c.num() * q);
    }
    return BaseElem(num_gcd, den_lcm);
}

void require_xy_only(const MPoly& p) {
    for (const std::string& v : p.vars())
        check(v == "x" || v == "y" || !p.uses(v), "invalid-polynomial",
              "expected a polynomial in x and y, found variable '" + v + "'");
}

}  // namespace

std::string OneForm::str() const {
    if (coeff.is_zero()) return "0";
    std::string s = coeff.str();
    if (needs_parens(s)) s = "(" + s + ")";
    return s + "*dx";
}

TauForm::TauForm(CurveFn a, CurveFn b) : a_(std::move(a)), b_(std::move(b)) {
    check(a_.curve()->same_as(*b_.curve()), "curve-mismatch",
          "chart pair components live on different curves");
}

TauForm tau(const CurveFn& f) { return chart_pair(f.curve(), f.delta_data()); }

TauForm tau_from_rep(const CurvePtr& curve, const MPoly& num, const MPoly& den) {
    return chart_pair(curve, rep_delta_data(curve, num, den));
}

TauForm iota(const CurveFn& g) { return TauForm(zero_fn(g.curve()), g); }

OneForm lambda_map(const TauForm& w) { return OneForm{w.a()}; }

OneForm differential(const CurveFn& f) { return lambda_map(tau(f)); }

std::pair<CurveFn, CurveFn> decompose(const TauForm& w1, const TauForm& w0) {
    check(!w0.is_trivial(), "trivial-form",
          "decomposition base must have a non-zero linear part");
    CurveFn f = w1.a() / w0.a();
    CurveFn g = w1.b() - f * w0.b();
    return {std::move(f), std::move(g)};
}

bool sim_equivalent(const TauForm& w1, const TauForm& w2) {
    check(!w1.is_trivial() && !w2.is_trivial(), "trivial-form",
          "equivalence is defined for forms with non-zero linear part");
    return w1.a() * w2.b() == w2.a() * w1.b();
}

CurveFn canonical_ratio(const TauForm& w) {
    check(!w.is_trivial(), "trivial-form",
          "the ratio needs a non-zero linear part");
    return w.b() / w.a();
}

bool parallel(const TauForm& w1, const TauForm& w2) { return w1.a() == w2.a(); }

const char* point_class_name(PointClass c) {
    switch (c) {
        case PointClass::regular: return "regular";
        case PointClass::zero: return "zero";
        case PointClass::pole: return "pole";
    }
    invariant(false, "unhandled point class");
    return "";
}

PointClass classify_point(const TauForm& w, const CurvePoint& pt) {
    check(w.curve()->same_as(*pt.curve), "curve-mismatch",
          "the point lies on a different curve");
    auto a = eval_fn(w.a(), pt);
    auto b = eval_fn(w.b(), pt);
    if (!a || !b) return PointClass::pole;
    AlgElem py = eval_mpoly(w.curve()->py(), pt.x, pt.y);
    if (py.is_zero() || a->is_zero()) return PointClass::zero;
    return PointClass::regular;
}

NullSection null_set(const TauForm& w) {
    check(!w.is_trivial(), "trivial-form",
          "the null section needs a non-zero linear part");
    const CurvePtr& c = w.curve();
    CurveFn u = -(w.b() / w.a());
    CurveFn px_u = CurveFn::from_mpoly(c, c->px()) * u;
    CurveFn v = -(px_u + CurveFn::from_mpoly(c, c->pdelta())) /
                CurveFn::from_mpoly(c, c->py());
    return NullSection{std::move(u), std::move(v)};
}

CurveMorphism::CurveMorphism(CurvePtr source, CurvePtr target, CurveFn r, CurveFn s)
    : source_(std::move(source)), target_(std::move(target)), r_(std::move(r)), s_(std::move(s)) {
    check(r_.curve()->same_as(*source_) && s_.curve()->same_as(*source_), "curve-mismatch",
          "coordinate functions must live on the source curve");
    std::map<std::string, CurveFn> vals = {{"x", r_}, {"y", s_}};
    auto emb = [this](const BaseElem& c) { return CurveFn::constant(source_, c); };
    CurveFn img = target_->poly().eval_with<CurveFn>(vals, emb);
    check(img.is_zero(), "not-a-morphism",
          "the coordinate pair does not satisfy the target equation");
    check(!(r_.base_constant() && s_.base_constant()), "constant-map",
          "the coordinate pair is constant, so the map is not dominant");
}

CurveFn compose(const CurveFn& f, const CurveMorphism& phi) {
    check(f.curve()->same_as(*phi.target()), "curve-mismatch",
          "composition needs a function on the target curve");
    auto emb = [&phi](const BaseElem& c) { return CurveFn::constant(phi.source(), c); };
    CurveFn acc = zero_fn(phi.source());
    CurveFn spow = one_fn(phi.source());
    for (int k = 0; k <= f.rep().degree(); ++k) {
        const RatX& c = f.rep().coeff(k);
        CurveFn den = c.den().eval(phi.r(), emb);
        check(!den.is_zero(), "composition-undefined",
              "a coefficient denominator vanishes identically along the map");
        acc = acc + c.num().eval(phi.r(), emb) / den * spow;
        spow = spow * phi.s();
    }
    return acc;
}

TauForm pullback(const TauForm& w, const CurveMorphism& phi) {
    check(w.curve()->same_as(*phi.target()), "curve-mismatch",
          "pullback needs a form on the target curve");
    return tau(phi.r()).scaled(compose(w.a(), phi)) + iota(compose(w.b(), phi));
}

OneForm pullback(const OneForm& w, const CurveMorphism& phi) {
    check(w.coeff.curve()->same_as(*phi.target()), "curve-mismatch",
          "pullback needs a form on the target curve");
    return OneForm{compose(w.coeff, phi) * differential(phi.r()).coeff};
}

std::tuple<MPoly, MPoly, MPoly> primitive_section(const MPoly& a, const MPoly& b) {
    require_xy_only(a);
    require_xy_only(b);
    check(!a.is_zero() || !b.is_zero(), "zero-polynomial",
          "the zero pair has no content factorization");
    if (b.is_zero()) return {a, MPoly(1), MPoly()};
    if (a.is_zero()) return {b, MPoly(), MPoly(1)};
    MPoly g = bivariate_gcd(a, b);
    MPoly a1 = exact_div(a, g);
    MPoly b1 = exact_div(b, g);
    std::vector<BaseElem> cs;
    collect_coeffs(a1, cs);
    collect_coeffs(b1, cs);
    BaseElem c = joint_content(cs);
    MPoly scale(c.inverse());
    return {g * MPoly(c), a1 * scale, b1 * scale};
}

std::vector<TauForm> global_tau_basis_constant_case(const CurvePtr& curve, long genus) {
    check(curve->constant_coefficients(), "nonconstant-coefficients",
          "global sections are computed only for curves over the constants");
    check(genus == 0 || genus == 1, "unsupported-genus", "the genus must be 0 or 1");
    const MPoly& p = curve->poly();
    MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
    bool is_line = (p == y);
    bool is_weierstrass = false;
    if (!is_line && curve->deg_y() == 2 && p.degree_in("x") == 3) {
        MPoly rest = p - y * y + x * x * x;  // expected: -(a*x + b)
        if (!rest.uses("y") && rest.degree_in("x") <= 1) is_weierstrass = true;
    }
    check(is_line || is_weierstrass, "unsupported-curve",
          "supported shapes: the line y = 0 and Weierstrass cubics y^2 = x^3 + a*x + b");
    long shape_genus = is_line ? 0 : 1;
    check(shape_genus == genus, "genus-mismatch",
          "declared genus " + std::to_string(genus) + " does not match the curve shape");
    std::vector<TauForm> basis;
    basis.push_back(iota(one_fn(curve)));
    if (is_weierstrass)
        basis.push_back(TauForm(CurveFn::coord_y(curve).inverse(), zero_fn(curve)));
    return basis;
}

}  // namespace tauforms
