#include "tauforms/curve.hpp"

#include <algorithm>
#include <cstdint>

#include "tauforms/error.hpp"

namespace tauforms {

namespace {

// ---------------------------------------------------------------------
// Irreducibility certificates.
//
// The constructor accepts p only when it can certify irreducibility over
// Q(t)(x) in y.  Certificates are one-sided: specialize x to a rational
// point (preserving deg_y), clear t-denominators, specialize t to an
// integer (again preserving degree) and test irreducibility of the
// resulting integer polynomial modulo a few primes.  Any specialization
// chain that stays at full degree and lands on an irreducible image
// proves irreducibility of p; a reducible p never certifies.
// ---------------------------------------------------------------------

using u64 = std::uint64_t;

void fp_trim(std::vector<u64>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 fp_powmod(u64 b, u64 e, u64 p) {
    u64 r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::vector<u64> fp_mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

// Remainder modulo a monic divisor.
std::vector<u64> fp_mod(std::vector<u64> a, const std::vector<u64>& m, u64 p) {
    int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        u64 c = a.back();
        int shift = static_cast<int>(a.size()) - 1 - dm;
        if (c != 0)
            for (int j = 0; j <= dm; ++j) {
                auto& slot = a[static_cast<size_t>(shift + j)];
                slot = (slot + (p - c % p) * m[static_cast<size_t>(j)]) % p;
            }
        a.pop_back();
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

std::vector<u64> fp_gcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
    auto monic = [p](std::vector<u64> v) {
        if (v.empty()) return v;
        u64 inv = fp_powmod(v.back(), p - 2, p);
        for (auto& c : v) c = c * inv % p;
        return v;
    };
    a = monic(std::move(a));
    b = monic(std::move(b));
    while (!b.empty()) {
        auto r = fp_mod(a, b, p);
        a = std::move(b);
        b = monic(std::move(r));
    }
    return a;
}

std::vector<u64> fp_pow_mod(std::vector<u64> b, u64 e, const std::vector<u64>& m, u64 p) {
    std::vector<u64> r = {1};
    b = fp_mod(std::move(b), m, p);
    while (e) {
        if (e & 1) r = fp_mod(fp_mul(r, b, p), m, p);
        b = fp_mod(fp_mul(b, b, p), m, p);
        e >>= 1;
    }
    return r;
}

std::vector<int> prime_divisors(int n) {
    std::vector<int> out;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin test: monic f of degree n is irreducible over F_p iff x^(p^n) = x
// (mod f) and gcd(x^(p^(n/l)) - x, f) = 1 for every prime l dividing n.
bool fp_irreducible(const std::vector<Int>& coeffs, u64 p) {
    std::vector<u64> f(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Int c = coeffs[i] % Int(p);
        if (c < 0) c += Int(p);
        f[i] = static_cast<u64>(c);
    }
    if (f.back() == 0) return false;  // degree dropped
    int n = static_cast<int>(f.size()) - 1;
    if (n == 1) return true;
    u64 inv = fp_powmod(f.back(), p - 2, p);
    for (auto& c : f) c = c * inv % p;

    std::vector<std::vector<u64>> frob(static_cast<size_t>(n) + 1);
    frob[0] = {0, 1};  // x
    for (int i = 1; i <= n; ++i) frob[static_cast<size_t>(i)] = fp_pow_mod(frob[static_cast<size_t>(i - 1)], p, f, p);
    if (frob[static_cast<size_t>(n)] != frob[0]) return false;
    for (int l : prime_divisors(n)) {
        std::vector<u64> h = frob[static_cast<size_t>(n / l)];
        if (h.size() < 2) h.resize(2, 0);
        h[1] = (h[1] + p - 1) % p;  // subtract x
        fp_trim(h);
        if (h.empty()) return false;
        auto g = fp_gcd(f, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

const long kXPoints[] = {0, 1, -1, 2, -2, 3, -3, 5};
const long kTPoints[] = {0, 1, -1, 2, 3, -2, 5, 7};
const u64 kPrimes[] = {100003, 100019, 100043, 100057, 100069};

bool certify_irreducible(const std::vector<XPoly>& ycoeffs) {
    int n = static_cast<int>(ycoeffs.size()) - 1;
    auto embed = [](const BaseElem& c) { return c; };
    for (long x0 : kXPoints) {
        BaseElem ax(x0);
        std::vector<BaseElem> q(ycoeffs.size());
        for (size_t k = 0; k < ycoeffs.size(); ++k) q[k] = ycoeffs[k].eval(ax, embed);
        if (q.back().is_zero()) continue;

        // Clear t-denominators and remove the joint Z[t]-content.
        ZPoly den(Int(1));
        for (const auto& c : q) {
            ZPoly g = ZPoly::gcd(den, c.den());
            ZPoly quot;
            invariant(c.den().div_exact(g, quot), "lcm step");
            den = den * quot;
        }
        std::vector<ZPoly> N(q.size());
        for (size_t k = 0; k < q.size(); ++k) {
            ZPoly quot;
            invariant(den.div_exact(q[k].den(), quot), "denominator clearing");
            N[k] = q[k].num() * quot;
        }
        ZPoly cont;
        for (const auto& c : N) cont = ZPoly::gcd(cont, c);
        for (auto& c : N) {
            ZPoly quot;
            invariant(c.div_exact(cont, quot), "content removal");
            c = quot;
        }

        for (long t0 : kTPoints) {
            std::vector<Int> A(N.size());
            for (size_t k = 0; k < N.size(); ++k) A[k] = N[k].eval_int(Int(t0));
            if (A.back() == 0) continue;
            for (u64 p : kPrimes)
                if (fp_irreducible(A, p)) return true;
        }
        (void)n;
    }
    return false;
}

// ---------------------------------------------------------------------
// Smoothness certificate: a singular point would make both Res_y(p, px)
// and Res_y(p, py) vanish at its x-coordinate, and symmetrically in y.
// A constant gcd on either side therefore rules singular points out.
// ---------------------------------------------------------------------

YPoly embed_view(const std::vector<XPoly>& cs) {
    std::vector<RatX> rc;
    rc.reserve(cs.size());
    for (const auto& c : cs) rc.emplace_back(c);
    return YPoly::from_coeffs(std::move(rc));
}

XPoly resultant_num(const YPoly& a, const YPoly& b) {
    RatX r = resultant(a, b);
    invariant(r.den().is_one(), "resultant of integral polynomials is integral");
    return r.num();
}

bool certify_smooth(const MPoly& p, const MPoly& px, const MPoly& py) {
    YPoly P = embed_view(p.coeffs_in("y", "x"));
    YPoly PY = embed_view(py.coeffs_in("y", "x"));
    XPoly r2 = resultant_num(P, PY);
    invariant(!r2.is_zero(), "curve polynomial shares a factor with its y-partial");
    XPoly hx = r2.monic();
    if (!px.is_zero()) {
        XPoly r1 = resultant_num(P, embed_view(px.coeffs_in("y", "x")));
        invariant(!r1.is_zero(), "curve polynomial shares a factor with its x-partial");
        hx = XPoly::gcd_monic(r1, r2);
    }
    if (hx.degree() == 0) return true;

    if (p.degree_in("x") == 0) return true;  // irreducible pure-y polynomial is squarefree
    YPoly Q = embed_view(p.coeffs_in("x", "y"));
    XPoly s1 = resultant_num(Q, embed_view(px.coeffs_in("x", "y")));
    XPoly s2 = resultant_num(Q, embed_view(py.coeffs_in("x", "y")));
    invariant(!s1.is_zero() && !s2.is_zero(), "degenerate x-side resultant");
    return XPoly::gcd_monic(s1, s2).degree() == 0;
}

MPoly partial_or_zero(const MPoly& p, const std::string& var) {
    if (p.degree_in(var) == 0) return MPoly();
    return p.partial(var);
}

}  // namespace

PlaneCurve::PlaneCurve(MPoly p) : p_(std::move(p)) {
    for (const auto& v : p_.vars())
        check(v == "x" || v == "y" || !p_.uses(v), "invalid-curve",
              "curve polynomial may only use x and y, found '" + v + "'");
    deg_y_ = p_.degree_in("y");
    check(deg_y_ >= 1, "invalid-curve", "curve polynomial must involve y");

    auto ycoeffs = p_.coeffs_in("y", "x");
    XPoly content;
    for (const auto& c : ycoeffs) content = XPoly::gcd_monic(content, c);
    check(content.degree() == 0, "reducible-curve",
          "curve polynomial has a common factor in x: " + p_.str());
    if (deg_y_ >= 2)
        check(certify_irreducible(ycoeffs), "reducible-curve",
              "could not certify irreducibility of " + p_.str());

    px_ = partial_or_zero(p_, "x");
    py_ = partial_or_zero(p_, "y");
    pdelta_ = p_.coeff_delta();
    check(certify_smooth(p_, px_, py_), "singular-curve",
          "could not certify smoothness of " + p_.str());

    mod_ = embed_view(ycoeffs);
}

CurvePtr projective_line() {
    static const CurvePtr line = make_curve(MPoly::variable("y"));
    return line;
}

// ---------------------------------------------------------------------
// CurveFn
// ---------------------------------------------------------------------

CurveFn CurveFn::from_ypoly(CurvePtr curve, YPoly rep) {
    invariant(static_cast<bool>(curve), "null curve");
    if (rep.degree() >= curve->deg_y()) rep = YPoly::divmod(rep, curve->modulus()).second;
    return CurveFn(std::move(curve), std::move(rep));
}

CurveFn CurveFn::from_mpoly(CurvePtr curve, const MPoly& p) {
    for (const auto& v : p.vars())
        check(v == "x" || v == "y" || !p.uses(v), "unknown-variable",
              "curve function may only use x and y, found '" + v + "'");
    return from_ypoly(std::move(curve), embed_view(p.coeffs_in("y", "x")));
}

CurveFn CurveFn::from_fraction(CurvePtr curve, const MPoly& num, const MPoly& den) {
    CurveFn n = from_mpoly(curve, num);
    CurveFn d = from_mpoly(std::move(curve), den);
    return n / d;
}

CurveFn CurveFn::constant(CurvePtr curve, BaseElem c) {
    return from_ypoly(std::move(curve), YPoly(RatX(std::move(c))));
}

CurveFn CurveFn::coord_x(CurvePtr curve) {
    return from_ypoly(std::move(curve), YPoly(RatX::var()));
}

CurveFn CurveFn::coord_y(CurvePtr curve) { return from_ypoly(std::move(curve), YPoly::var()); }

bool CurveFn::is_one() const { return rep_.degree() == 0 && rep_.coeff(0).is_one(); }

std::optional<BaseElem> CurveFn::base_constant() const {
    if (rep_.is_zero()) return BaseElem(0);
    if (rep_.degree() > 0) return std::nullopt;
    const RatX& c = rep_.coeff(0);
    if (!c.den().is_one() || c.num().degree() > 0) return std::nullopt;
    return c.num().coeff(0);
}

void CurveFn::require_same_curve(const CurveFn& o) const {
    check(curve_->same_as(*o.curve_), "curve-mismatch",
          "functions live on different curves: " + curve_->str() + " vs " + o.curve_->str());
}

CurveFn CurveFn::operator-() const { return CurveFn(curve_, -rep_); }

CurveFn CurveFn::operator+(const CurveFn& o) const {
    require_same_curve(o);
    return CurveFn(curve_, rep_ + o.rep_);
}

CurveFn CurveFn::operator-(const CurveFn& o) const {
    require_same_curve(o);
    return CurveFn(curve_, rep_ - o.rep_);
}

CurveFn CurveFn::operator*(const CurveFn& o) const {
    require_same_curve(o);
    return from_ypoly(curve_, rep_ * o.rep_);
}

CurveFn CurveFn::operator/(const CurveFn& o) const {
    require_same_curve(o);
    return *this * o.inverse();
}

CurveFn CurveFn::inverse() const {
    check(!is_zero(), "division-by-zero", "inverse of the zero function");
    auto [g, s, u] = YPoly::exgcd(rep_, curve_->modulus());
    (void)u;
    invariant(g.is_one(), "function field modulus is irreducible");
    return from_ypoly(curve_, s);
}

CurveFn CurveFn::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CurveFn r = constant(curve_, BaseElem(1));
    CurveFn b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool CurveFn::operator==(const CurveFn& o) const {
    require_same_curve(o);
    return rep_ == o.rep_;
}

DeltaData CurveFn::delta_data() const {
    std::vector<RatX> fx, fy, fd;
    int d = rep_.degree();
    for (int k = 0; k <= d; ++k) {
        RatX c = rep_.coeff(k);
        fx.push_back(c.derivative());
        fd.push_back(ratx_delta(c));
        if (k >= 1) {
            RatX kc = c * RatX(k);
            if (static_cast<int>(fy.size()) < k) fy.resize(static_cast<size_t>(k), RatX(0));
            fy[static_cast<size_t>(k - 1)] = kc;
        }
    }
    return DeltaData{CurveFn(curve_, YPoly::from_coeffs(std::move(fx))),
                     CurveFn(curve_, YPoly::from_coeffs(std::move(fy))),
                     CurveFn(curve_, YPoly::from_coeffs(std::move(fd)))};
}

DeltaData rep_delta_data(CurvePtr curve, const MPoly& num, const MPoly& den) {
    CurveFn N = CurveFn::from_mpoly(curve, num);
    CurveFn D = CurveFn::from_mpoly(curve, den);
    check(!D.is_zero(), "division-by-zero", "representative denominator vanishes on the curve");
    CurveFn D2 = D * D;
    auto part = [&](const std::string& v) {
        CurveFn Nv = CurveFn::from_mpoly(curve, partial_or_zero(num, v));
        CurveFn Dv = CurveFn::from_mpoly(curve, partial_or_zero(den, v));
        return (Nv * D - N * Dv) / D2;
    };
    CurveFn Nd = CurveFn::from_mpoly(curve, num.coeff_delta());
    CurveFn Dd = CurveFn::from_mpoly(curve, den.coeff_delta());
    return DeltaData{part("x"), part("y"), (Nd * D - N * Dd) / D2};
}

std::pair<MPoly, XPoly> CurveFn::cleared() const {
    XPoly den(BaseElem(1));
    for (const auto& c : rep_.coeffs()) {
        XPoly g = XPoly::gcd_monic(den, c.den());
        den = den * XPoly::divmod(c.den(), g).first;
    }
    std::vector<XPoly> num;
    num.reserve(rep_.coeffs().size());
    for (const auto& c : rep_.coeffs())
        num.push_back(c.num() * XPoly::divmod(den, c.den()).first);
    return {MPoly::from_coeffs_in(num, "y", "x"), den};
}

std::string ypoly_str(const YPoly& p, const std::string& yvar, const std::string& xvar) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        RatX c = p.coeff(k);
        if (c.is_zero()) continue;
        if (first && k == 0) {
            // A lone constant with several terms already carries its own
            // signs; print it verbatim instead of pulling one sign out.
            std::string raw = c.str(xvar);
            if (needs_parens(raw)) return raw;
        }
        bool neg = c.is_negative();
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string cs = c.str(xvar);
        if (k == 0) {
            // The sign was pulled out above, so a multi-term constant must be
            // grouped or its interior signs would read flipped.
            out += (neg && needs_parens(cs)) ? "(" + cs + ")" : cs;
        } else {
            if (cs != "1") {
                out += needs_parens(cs) ? "(" + cs + ")" : cs;
                out += "*";
            }
            out += yvar;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::string CurveFn::str() const { return ypoly_str(rep_, "y", "x"); }

}  // namespace tauforms
