#include "tauforms/zpoly.hpp"

#include <sstream>

#include "tauforms/error.hpp"

namespace tauforms {

ZPoly::ZPoly(Int c) {
    if (c != 0) c_.push_back(std::move(c));
}

ZPoly ZPoly::t() {
    ZPoly p;
    p.c_ = {Int(0), Int(1)};
    return p;
}

ZPoly ZPoly::from_coeffs(std::vector<Int> coeffs) {
    ZPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int ZPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Int(0);
    return c_[static_cast<size_t>(k)];
}

const Int& ZPoly::lc() const {
    invariant(!c_.empty(), "leading coefficient of zero polynomial");
    return c_.back();
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    ZPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.trim();
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return ZPoly();
    ZPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

ZPoly ZPoly::mul_int(const Int& k) const {
    if (k == 0) return ZPoly();
    ZPoly r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

ZPoly ZPoly::derivative() const {
    ZPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Int(i);
    r.trim();
    return r;
}

Int ZPoly::content() const {
    Int g = 0;
    for (const auto& c : c_) g = int_gcd(g, c);
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return ZPoly();
    Int g = content();
    ZPoly r = *this;
    for (auto& c : r.c_) c /= g;
    return r;
}

bool ZPoly::div_exact(const ZPoly& o, ZPoly& quot) const {
    invariant(!o.is_zero(), "exact division by zero polynomial");
    if (is_zero()) {
        quot = ZPoly();
        return true;
    }
    if (degree() < o.degree()) return false;
    std::vector<Int> rem = c_;
    std::vector<Int> q(static_cast<size_t>(degree() - o.degree()) + 1, Int(0));
    for (int k = degree() - o.degree(); k >= 0; --k) {
        Int& head = rem[static_cast<size_t>(k + o.degree())];
        if (head == 0) continue;
        if (head % o.lc() != 0) return false;
        Int f = head / o.lc();
        q[static_cast<size_t>(k)] = f;
        for (int j = 0; j <= o.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= f * o.c_[static_cast<size_t>(j)];
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    quot = from_coeffs(std::move(q));
    return true;
}

namespace {

// Pseudo-remainder of a by b (both non-zero, deg a >= deg b not required).
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int k = a.degree() - db;
        ZPoly shift;
        std::vector<Int> sc(static_cast<size_t>(k) + 1, Int(0));
        sc.back() = a.lc();
        shift = ZPoly::from_coeffs(std::move(sc));
        a = a.mul_int(b.lc()) - b * shift;
    }
    return a;
}

}  // namespace

ZPoly ZPoly::gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() && b.is_zero()) return ZPoly();
    if (a.is_zero()) return b.lc() < 0 ? -b : b;
    if (b.is_zero()) return a.lc() < 0 ? -a : a;
    Int cont = int_gcd(a.content(), b.content());
    ZPoly u = a.primitive_part();
    ZPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        ZPoly r = pseudo_rem(u, v);
        u = v;
        v = r.is_zero() ? ZPoly() : r.primitive_part();
    }
    ZPoly g = u.primitive_part().mul_int(cont);
    if (g.lc() < 0) g = -g;
    return g;
}

Int ZPoly::eval_int(const Int& t0) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t0 + *it;
    return r;
}

std::string ZPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Int c = coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Int a = neg ? Int(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (k == 0) {
            out << a;
        } else {
            if (a != 1) out << a << "*";
            out << "t";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

}  // namespace tauforms
