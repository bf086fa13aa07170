#include "tauforms/points.hpp"

#include "tauforms/error.hpp"

namespace tauforms {

ExtField::ExtField(XPoly minpoly) : m_(std::move(minpoly)) {
    check(m_.degree() >= 1, "invalid-extension", "minimal polynomial must be non-constant");
    m_ = m_.monic();
}

AlgElem::AlgElem(ExtPtr field, XPoly rep) : field_(std::move(field)), rep_(std::move(rep)) {
    invariant(static_cast<bool>(field_), "null extension field");
    if (rep_.degree() >= field_->degree())
        rep_ = XPoly::divmod(rep_, field_->minpoly()).second;
}

ExtPtr AlgElem::join(const AlgElem& a, const AlgElem& b) {
    if (!a.field_) return b.field_;
    if (!b.field_) return a.field_;
    check(a.field_->same_as(*b.field_), "extension-mismatch",
          "points from different extension fields");
    return a.field_;
}

AlgElem AlgElem::operator-() const {
    AlgElem r = *this;
    r.rep_ = -r.rep_;
    return r;
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
    ExtPtr f = join(*this, o);
    AlgElem r;
    r.field_ = f;
    r.rep_ = rep_ + o.rep_;
    return r;
}

AlgElem AlgElem::operator-(const AlgElem& o) const { return *this + (-o); }

AlgElem AlgElem::operator*(const AlgElem& o) const {
    ExtPtr f = join(*this, o);
    AlgElem r;
    r.field_ = f;
    r.rep_ = rep_ * o.rep_;
    if (f && r.rep_.degree() >= f->degree()) r.rep_ = XPoly::divmod(r.rep_, f->minpoly()).second;
    return r;
}

std::optional<AlgElem> AlgElem::try_inverse() const {
    if (is_zero()) return std::nullopt;
    if (!field_) {
        AlgElem r;
        r.rep_ = XPoly(rep_.coeff(0).inverse());
        return r;
    }
    auto [g, s, u] = XPoly::exgcd(rep_, field_->minpoly());
    (void)u;
    check(g.degree() == 0, "reducible-extension",
          "declared minimal polynomial is reducible: " + field_->minpoly().str("s"));
    AlgElem r;
    r.field_ = field_;
    r.rep_ = XPoly::divmod(s, field_->minpoly()).second;
    return r;
}

bool AlgElem::operator==(const AlgElem& o) const {
    if (field_ && o.field_)
        check(field_->same_as(*o.field_), "extension-mismatch",
              "comparing points from different extensions");
    return rep_ == o.rep_;
}

CurvePoint::CurvePoint(CurvePtr curve_, AlgElem x_, AlgElem y_)
    : curve(std::move(curve_)), x(std::move(x_)), y(std::move(y_)) {
    AlgElem v = eval_mpoly(curve->poly(), x, y);
    check(v.is_zero(), "not-on-curve",
          "point " + str() + " does not satisfy " + curve->str() + " = 0");
}

AlgElem eval_mpoly(const MPoly& p, const AlgElem& x0, const AlgElem& y0) {
    std::map<std::string, AlgElem> vals = {{"x", x0}, {"y", y0}};
    ExtPtr f = x0.field() ? x0.field() : y0.field();
    auto emb = [&f](const BaseElem& c) { return f ? AlgElem(f, XPoly(c)) : AlgElem(c); };
    return p.eval_with<AlgElem>(vals, emb);
}

std::optional<AlgElem> eval_ratx(const RatX& r, const AlgElem& x0) {
    ExtPtr f = x0.field();
    auto emb = [&f](const BaseElem& c) { return f ? AlgElem(f, XPoly(c)) : AlgElem(c); };
    AlgElem den = r.den().eval(x0, emb);
    auto inv = den.try_inverse();
    if (!inv) return std::nullopt;
    return r.num().eval(x0, emb) * *inv;
}

std::optional<AlgElem> eval_fn(const CurveFn& f, const CurvePoint& pt) {
    AlgElem acc = pt.x.field() ? AlgElem(pt.x.field(), XPoly()) : AlgElem();
    AlgElem ypow = pt.x.field() ? AlgElem(pt.x.field(), XPoly(BaseElem(1))) : AlgElem(BaseElem(1));
    for (int k = 0; k <= f.rep().degree(); ++k) {
        auto c = eval_ratx(f.rep().coeff(k), pt.x);
        if (!c) return std::nullopt;
        acc = acc + *c * ypow;
        ypow = ypow * pt.y;
    }
    return acc;
}

}  // namespace tauforms
