#include <cstdint>
#include <optional>

#include "tauforms/upoly.hpp"

namespace tauforms {

namespace {

// Dense x-coefficient vector over Z[t]; empty means zero.
using Zx = std::vector<ZPoly>;

void trim(Zx& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ZPoly zlcm(const ZPoly& a, const ZPoly& b) {
    ZPoly g = ZPoly::gcd(a, b);
    ZPoly q;
    invariant(a.div_exact(g, q), "lcm: gcd must divide its argument");
    return q * b;
}

// Strip the Z[t]-content so the coefficients are jointly primitive.
void make_primitive(Zx& p) {
    trim(p);
    if (p.empty()) return;
    ZPoly g;
    for (const auto& c : p) g = ZPoly::gcd(g, c);
    for (auto& c : p) {
        ZPoly q;
        invariant(c.div_exact(g, q), "content must divide every coefficient");
        c = std::move(q);
    }
}

// Clear denominators: p = (1/D) * result with D the lcm of the coefficient
// denominators; the result lies in Z[t][x].
Zx cleared(const XPoly& p) {
    ZPoly d(Int(1));
    for (int k = 0; k <= p.degree(); ++k) d = zlcm(d, p.coeff(k).den());
    Zx out;
    out.reserve(static_cast<size_t>(p.degree() + 1));
    for (int k = 0; k <= p.degree(); ++k) {
        const BaseElem& c = p.coeff(k);
        ZPoly cofactor;
        invariant(d.div_exact(c.den(), cofactor), "denominator must divide the lcm");
        out.push_back(c.num() * cofactor);
    }
    trim(out);
    return out;
}

int tdeg(const Zx& p) {
    int d = -1;
    for (const auto& c : p) d = std::max(d, c.degree());
    return d;
}

// Pseudo-remainder of u by v in x: repeatedly scale by lc(v) and subtract
// the leading multiple of v, staying inside Z[t][x] without divisions.
Zx pseudo_rem(Zx u, const Zx& v) {
    const ZPoly& lv = v.back();
    while (u.size() >= v.size()) {
        ZPoly lu = u.back();
        size_t shift = u.size() - v.size();
        for (auto& c : u) c = c * lv;
        for (size_t j = 0; j < v.size(); ++j)
            u[shift + j] = u[shift + j] - lu * v[j];
        trim(u);
        if (u.empty()) break;
    }
    return u;
}

// Primitive pseudo-remainder sequence; correct for any input but slow when
// coefficients grow, so it only backs up the modular path below.
Zx prs_gcd(Zx u, Zx v) {
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        Zx r = pseudo_rem(u, v);
        u = std::move(v);
        v = std::move(r);
        make_primitive(v);
    }
    return u;
}

// ---- arithmetic mod a word-sized prime --------------------------------

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return a * b % p; }  // p < 2^31, no overflow

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime_u32(u64 n) {
    if (n < 2 || n % 2 == 0) return n == 2;
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL}) {  // deterministic below 3.2e9
        u64 v = pow_mod(a % n, d, n);
        if (v == 0 || v == 1 || v == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            v = mul_mod(v, v, n);
            if (v == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Fixed descending sequence of 31-bit primes; deterministic runs.
const std::vector<u64>& prime_pool() {
    static const std::vector<u64> pool = [] {
        std::vector<u64> ps;
        for (u64 n = (1ULL << 31) - 1; ps.size() < 64; n -= 2)
            if (is_prime_u32(n)) ps.push_back(n);
        return ps;
    }();
    return pool;
}

// Dense univariate polynomial over F_p; empty means zero.
using FpPoly = std::vector<u64>;

void trim_fp(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly reduce_zpoly(const ZPoly& z, u64 p) {
    FpPoly f(static_cast<size_t>(z.degree() + 1));
    Int m(static_cast<long long>(p));
    for (int k = 0; k <= z.degree(); ++k) {
        Int r = z.coeff(k) % m;
        if (r < 0) r += m;
        f[static_cast<size_t>(k)] = r.convert_to<u64>();
    }
    trim_fp(f);
    return f;
}

u64 eval_fp(const FpPoly& f, u64 e, u64 p) {
    u64 r = 0;
    for (size_t k = f.size(); k-- > 0;) r = (mul_mod(r, e, p) + f[k]) % p;
    return r;
}

void monic_fp(FpPoly& f, u64 p) {
    if (f.empty()) return;
    u64 s = inv_mod(f.back(), p);
    for (auto& c : f) c = mul_mod(c, s, p);
}

FpPoly rem_fp(FpPoly u, const FpPoly& v, u64 p) {
    u64 li = inv_mod(v.back(), p);
    while (u.size() >= v.size()) {
        u64 q = mul_mod(u.back(), li, p);
        size_t shift = u.size() - v.size();
        for (size_t j = 0; j < v.size(); ++j)
            u[shift + j] = (u[shift + j] + p - mul_mod(q, v[j], p)) % p;
        trim_fp(u);
    }
    return u;
}

FpPoly gcd_fp(FpPoly a, FpPoly b, u64 p) {
    while (!b.empty()) {
        FpPoly r = rem_fp(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    monic_fp(a, p);
    return a;
}

// Image of a Z[t][x] polynomial mod p: one F_p[t] entry per x power.
std::vector<FpPoly> reduce_zx(const Zx& f, u64 p) {
    std::vector<FpPoly> out(f.size());
    for (size_t k = 0; k < f.size(); ++k) out[k] = reduce_zpoly(f[k], p);
    return out;
}

FpPoly eval_zx(const std::vector<FpPoly>& f, u64 e, u64 p) {
    FpPoly out(f.size());
    for (size_t k = 0; k < f.size(); ++k) out[k] = eval_fp(f[k], e, p);
    trim_fp(out);
    return out;
}

// Lagrange interpolation through (xs[i], ys[i]); O(n^2), n is small.
FpPoly interpolate_fp(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
    size_t n = xs.size();
    FpPoly acc;
    for (size_t i = 0; i < n; ++i) {
        FpPoly basis{1};
        u64 denom = 1;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            FpPoly next(basis.size() + 1, 0);
            for (size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] = (next[k + 1] + basis[k]) % p;
                next[k] = (next[k] + mul_mod(basis[k], (p - xs[j]) % p, p)) % p;
            }
            basis = std::move(next);
            denom = mul_mod(denom, (xs[i] + p - xs[j]) % p, p);
        }
        u64 scale = mul_mod(ys[i], inv_mod(denom, p), p);
        if (acc.size() < basis.size()) acc.resize(basis.size(), 0);
        for (size_t k = 0; k < basis.size(); ++k)
            acc[k] = (acc[k] + mul_mod(basis[k], scale, p)) % p;
    }
    trim_fp(acc);
    return acc;
}

// gcd of the two images mod p, scaled so the leading x coefficient is the
// image of gamma.  Returns one F_p[t] polynomial per x power, or nothing if
// the prime is unusable.  Sets deg_zero when the inputs are provably coprime
// as polynomials in x.
std::optional<std::vector<FpPoly>> modp_gcd_image(const Zx& u, const Zx& v,
                                                  const ZPoly& gamma, u64 p,
                                                  int points_needed, bool& deg_zero) {
    deg_zero = false;
    std::vector<FpPoly> up = reduce_zx(u, p), vp = reduce_zx(v, p);
    FpPoly gp = reduce_zpoly(gamma, p);
    // p must keep both leading x coefficients alive for degree bounds to hold.
    if (up.back().empty() || vp.back().empty()) return std::nullopt;
    int dmin = -1;
    std::vector<u64> xs;
    std::vector<FpPoly> gs;
    for (u64 e = 0; e < p && static_cast<int>(xs.size()) < points_needed; ++e) {
        if (eval_fp(up.back(), e, p) == 0 || eval_fp(vp.back(), e, p) == 0) continue;
        FpPoly g = gcd_fp(eval_zx(up, e, p), eval_zx(vp, e, p), p);
        int dg = static_cast<int>(g.size()) - 1;
        if (dg == 0) {
            deg_zero = true;
            return std::nullopt;
        }
        if (dmin != -1 && dg > dmin) continue;  // unlucky evaluation point
        if (dmin == -1 || dg < dmin) {
            dmin = dg;
            xs.clear();
            gs.clear();
        }
        u64 scale = eval_fp(gp, e, p);
        for (auto& c : g) c = mul_mod(c, scale, p);
        xs.push_back(e);
        gs.push_back(std::move(g));
    }
    if (static_cast<int>(xs.size()) < points_needed) return std::nullopt;
    std::vector<FpPoly> out(static_cast<size_t>(dmin + 1));
    std::vector<u64> ys(xs.size());
    for (int k = 0; k <= dmin; ++k) {
        for (size_t i = 0; i < xs.size(); ++i)
            ys[i] = k < static_cast<int>(gs[i].size()) ? gs[i][static_cast<size_t>(k)] : 0;
        out[static_cast<size_t>(k)] = interpolate_fp(xs, ys, p);
    }
    return out;
}

ZPoly zpoly_from_ints(std::vector<Int> cs) {
    ZPoly z;
    for (size_t k = cs.size(); k-- > 0;)
        z = z * ZPoly::t() + ZPoly(std::move(cs[k]));
    return z;
}

// Modular gcd of primitive inputs: per-prime bivariate images combined by
// CRT in the symmetric range, certified by trial division.  Falls back to
// the pseudo-remainder sequence if the prime pool runs dry.
Zx modular_gcd(const Zx& u, const Zx& v) {
    ZPoly gamma = ZPoly::gcd(u.back(), v.back());
    int points_needed = gamma.degree() + std::min(tdeg(u), tdeg(v)) + 1;
    int global_dx = -1;
    // CRT state: coefficient grid [x power][t power] in the symmetric range.
    std::vector<std::vector<Int>> crt;
    Int modulus(0);
    bool stable = false;
    for (u64 p : prime_pool()) {
        bool deg_zero = false;
        auto image = modp_gcd_image(u, v, gamma, p, points_needed, deg_zero);
        if (deg_zero) return Zx{ZPoly(Int(1))};
        if (!image) continue;
        int dx = static_cast<int>(image->size()) - 1;
        if (global_dx != -1 && dx > global_dx) continue;  // unlucky prime
        if (global_dx == -1 || dx < global_dx) {
            global_dx = dx;
            crt.assign(static_cast<size_t>(dx + 1), {});
            modulus = 0;
        }
        Int ip(static_cast<long long>(p));
        bool changed = false;
        if (modulus.is_zero()) {
            for (int k = 0; k <= dx; ++k) {
                const FpPoly& f = (*image)[static_cast<size_t>(k)];
                auto& row = crt[static_cast<size_t>(k)];
                row.assign(f.size(), Int(0));
                for (size_t j = 0; j < f.size(); ++j) {
                    Int c(static_cast<long long>(f[j]));
                    if (c * 2 > ip) c -= ip;
                    row[j] = c;
                }
            }
            modulus = ip;
            changed = true;
        } else {
            Int mp = modulus * ip;
            Int minv(static_cast<long long>(
                inv_mod((modulus % ip).convert_to<u64>(), p)));
            for (int k = 0; k <= dx; ++k) {
                const FpPoly& f = (*image)[static_cast<size_t>(k)];
                auto& row = crt[static_cast<size_t>(k)];
                if (row.size() < f.size()) row.resize(f.size(), Int(0));
                for (size_t j = 0; j < row.size(); ++j) {
                    Int w = j < f.size() ? Int(static_cast<long long>(f[j])) : Int(0);
                    Int delta = ((w - row[j]) % ip * minv) % ip;
                    if (delta < 0) delta += ip;
                    Int c = row[j] + modulus * delta;
                    if (c * 2 > mp) c -= mp;
                    if (c != row[j]) {
                        row[j] = c;
                        changed = true;
                    }
                }
            }
            modulus = mp;
        }
        stable = !changed && !crt.empty();
        if (stable) {
            Zx cand;
            cand.reserve(crt.size());
            for (auto& row : crt) cand.push_back(zpoly_from_ints(row));
            make_primitive(cand);
            if (!cand.empty() && pseudo_rem(u, cand).empty() &&
                pseudo_rem(v, cand).empty())
                return cand;
        }
    }
    return prs_gcd(u, v);
}

}  // namespace

template <>
UPoly<BaseElem> UPoly<BaseElem>::gcd_monic(UPoly<BaseElem> a, UPoly<BaseElem> b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // Any nonzero element of Q(t) is a unit, so a degree-0 operand forces 1.
    if (a.degree() == 0 || b.degree() == 0) return UPoly<BaseElem>(BaseElem(1));
    Zx u = cleared(a), v = cleared(b);
    make_primitive(u);
    make_primitive(v);
    if (u.size() < v.size()) std::swap(u, v);
    Zx g = modular_gcd(u, v);
    std::vector<BaseElem> coeffs;
    coeffs.reserve(g.size());
    for (auto& c : g) coeffs.emplace_back(std::move(c), ZPoly(Int(1)));
    return UPoly<BaseElem>::from_coeffs(std::move(coeffs)).monic();
}

}  // namespace tauforms
