#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tauforms/base_elem.hpp"
#include "tauforms/error.hpp"

namespace tauforms {

// True when a printed subexpression must be parenthesized before being
// multiplied: it contains a top-level additive gap (spaces at paren depth 0).
inline bool needs_parens(const std::string& s) {
    int depth = 0;
    for (char ch : s) {
        if (ch == '(')
            ++depth;
        else if (ch == ')')
            --depth;
        else if (ch == ' ' && depth == 0)
            return true;
    }
    return false;
}

// Dense univariate polynomial over a field F.  F must provide: F(long),
// is_zero(), is_negative(), inverse(), str(), arithmetic and equality.
template <class F>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(F c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit UPoly(long c) : UPoly(F(c)) {}

    static UPoly var() {
        UPoly p;
        p.c_ = {F(0), F(1)};
        return p;
    }

    static UPoly from_coeffs(std::vector<F> coeffs) {
        UPoly p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    F coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return F(0);
        return c_[static_cast<size_t>(k)];
    }
    const F& lc() const {
        invariant(!c_.empty(), "leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<F>& coeffs() const { return c_; }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    UPoly operator+(const UPoly& o) const {
        UPoly r;
        r.c_.resize(std::max(c_.size(), o.c_.size()), F(0));
        for (size_t i = 0; i < r.c_.size(); ++i) {
            if (i < c_.size()) r.c_[i] = r.c_[i] + c_[i];
            if (i < o.c_.size()) r.c_[i] = r.c_[i] + o.c_[i];
        }
        r.trim();
        return r;
    }

    UPoly operator-(const UPoly& o) const { return *this + (-o); }

    UPoly operator*(const UPoly& o) const {
        if (is_zero() || o.is_zero()) return UPoly();
        std::vector<F> rc(c_.size() + o.c_.size() - 1, F(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                rc[i + j] = rc[i + j] + c_[i] * o.c_[j];
        }
        return from_coeffs(std::move(rc));
    }

    UPoly scale(const F& k) const {
        if (k.is_zero()) return UPoly();
        UPoly r = *this;
        for (auto& c : r.c_) c = c * k;
        return r;
    }

    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    // Quotient and remainder; o must be non-zero.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& o) {
        invariant(!o.is_zero(), "polynomial division by zero");
        if (a.degree() < o.degree()) return {UPoly(), a};
        F inv_lc = o.lc().inverse();
        std::vector<F> rem = a.c_;
        std::vector<F> q(static_cast<size_t>(a.degree() - o.degree()) + 1, F(0));
        for (int k = a.degree() - o.degree(); k >= 0; --k) {
            F head = rem[static_cast<size_t>(k + o.degree())];
            if (head.is_zero()) continue;
            F f = head * inv_lc;
            q[static_cast<size_t>(k)] = f;
            for (int j = 0; j <= o.degree(); ++j)
                rem[static_cast<size_t>(k + j)] =
                    rem[static_cast<size_t>(k + j)] - f * o.c_[static_cast<size_t>(j)];
        }
        return {from_coeffs(std::move(q)), from_coeffs(std::move(rem))};
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return scale(lc().inverse());
    }

    // Monic gcd via the Euclidean algorithm.
    static UPoly gcd_monic(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            (void)q;
            a = std::move(b);
            b = r.monic();  // rescaling keeps coefficient growth in check
        }
        return a.monic();
    }

    // Extended gcd: returns (g, s, u) with s*a + u*b = g, g monic (or zero).
    static std::tuple<UPoly, UPoly, UPoly> exgcd(UPoly a, UPoly b) {
        UPoly s0(F(1)), s1, u0, u1(F(1));
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            a = std::move(b);
            b = std::move(r);
            UPoly s2 = s0 - q * s1;
            UPoly u2 = u0 - q * u1;
            s0 = std::move(s1);
            s1 = std::move(s2);
            u0 = std::move(u1);
            u1 = std::move(u2);
        }
        if (a.is_zero()) return {a, s0, u0};
        F inv = a.lc().inverse();
        return {a.scale(inv), s0.scale(inv), u0.scale(inv)};
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<F> rc(c_.size() - 1, F(0));
        for (size_t i = 1; i < c_.size(); ++i) rc[i - 1] = c_[i] * F(static_cast<long>(i));
        return from_coeffs(std::move(rc));
    }

    // Horner evaluation; emb embeds coefficients into T.
    template <class T, class Emb>
    T eval(const T& x, Emb emb) const {
        if (is_zero()) return emb(F(0));
        T r = emb(c_.back());
        for (int k = degree() - 1; k >= 0; --k) r = r * x + emb(c_[static_cast<size_t>(k)]);
        return r;
    }

    std::string str(const std::string& var) const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            F c = coeff(k);
            if (c.is_zero()) continue;
            if (first && k == 0) {
                // A lone constant with several terms already carries its own
                // signs; print it verbatim instead of pulling one sign out.
                std::string raw = c.str();
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
            std::string cs = c.str();
            if (k == 0) {
                // The sign was pulled out above, so a multi-term constant must
                // be grouped or its interior signs would read flipped.
                out += (neg && needs_parens(cs)) ? "(" + cs + ")" : cs;
            } else {
                if (cs != "1") {
                    out += needs_parens(cs) ? "(" + cs + ")" : cs;
                    out += "*";
                }
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    std::vector<F> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

template <class F>
F field_pow(F b, long e) {
    invariant(e >= 0, "field_pow wants a non-negative exponent");
    F r(1);
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// Resultant of two non-zero polynomials over a field, by Euclidean reduction.
template <class F>
F resultant(UPoly<F> f, UPoly<F> g) {
    invariant(!f.is_zero() && !g.is_zero(), "resultant of zero polynomial");
    F acc(1);
    bool neg = false;
    while (true) {
        if (g.degree() == 0) {
            acc = acc * field_pow(g.lc(), f.degree());
            break;
        }
        if (f.degree() < g.degree()) {
            if ((f.degree() & 1) && (g.degree() & 1)) neg = !neg;
            std::swap(f, g);
            continue;
        }
        auto [q, r] = UPoly<F>::divmod(f, g);
        (void)q;
        if (r.is_zero()) return F(0);
        if ((f.degree() & 1) && (g.degree() & 1)) neg = !neg;
        acc = acc * field_pow(g.lc(), f.degree() - r.degree());
        f = std::move(g);
        g = std::move(r);
    }
    return neg ? -acc : acc;
}

// Fraction field of UPoly<F>; canonical form has coprime parts, monic denominator.
template <class F>
class RatFn {
public:
    RatFn() : num_(), den_(UPoly<F>(F(1))) {}
    RatFn(long c) : num_(UPoly<F>(F(c))), den_(UPoly<F>(F(1))) {}
    explicit RatFn(F c) : num_(UPoly<F>(std::move(c))), den_(UPoly<F>(F(1))) {}
    explicit RatFn(UPoly<F> num) : num_(std::move(num)), den_(UPoly<F>(F(1))) {}
    RatFn(UPoly<F> num, UPoly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        check(!den_.is_zero(), "division-by-zero", "zero denominator in rational function");
        normalize();
    }

    static RatFn var() { return RatFn(UPoly<F>::var()); }

    const UPoly<F>& num() const { return num_; }
    const UPoly<F>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }
    bool is_negative() const { return !num_.is_zero() && num_.lc().is_negative(); }

    RatFn operator-() const {
        RatFn r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RatFn operator+(const RatFn& o) const {
        return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFn operator-(const RatFn& o) const {
        return RatFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFn operator*(const RatFn& o) const { return RatFn(num_ * o.num_, den_ * o.den_); }
    RatFn operator/(const RatFn& o) const {
        check(!o.is_zero(), "division-by-zero", "division by zero rational function");
        return RatFn(num_ * o.den_, den_ * o.num_);
    }
    RatFn inverse() const {
        check(!is_zero(), "division-by-zero", "inverse of zero rational function");
        return RatFn(den_, num_);
    }

    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    // Formal derivative in the polynomial variable, by the quotient rule.
    RatFn derivative() const {
        return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    std::string str(const std::string& var) const {
        if (den_.is_one()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    UPoly<F> num_, den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = UPoly<F>(F(1));
            return;
        }
        UPoly<F> g = UPoly<F>::gcd_monic(num_, den_);
        if (!g.is_one()) {
            num_ = UPoly<F>::divmod(num_, g).first;
            den_ = UPoly<F>::divmod(den_, g).first;
        }
        if (!(den_.lc() == F(1))) {
            F inv = den_.lc().inverse();
            num_ = num_.scale(inv);
            den_ = den_.scale(inv);
        }
    }
};

// The concrete layers used throughout: Q(t)[x] and Q(t)(x).
using XPoly = UPoly<BaseElem>;
using RatX = RatFn<BaseElem>;

// Over Q(t) the generic Euclidean remainder sequence swells badly, so the
// gcd is computed by a primitive pseudo-remainder sequence over Z[t]
// instead.  Declared here so every instantiation picks it up.
template <>
UPoly<BaseElem> UPoly<BaseElem>::gcd_monic(UPoly<BaseElem> a, UPoly<BaseElem> b);

// Coefficient-wise application of the derivation on Q(t).
inline XPoly xpoly_delta(const XPoly& p) {
    std::vector<BaseElem> cs(p.coeffs());
    for (auto& c : cs) c = c.delta();
    return XPoly::from_coeffs(std::move(cs));
}

// Derivation of Q(t)(x) that fixes x and differentiates coefficients.
inline RatX ratx_delta(const RatX& r) {
    return RatX(xpoly_delta(r.num()) * r.den() - r.num() * xpoly_delta(r.den()),
                r.den() * r.den());
}

}  // namespace tauforms
