#include "tauforms/engine.hpp"

#include <algorithm>
#include <cctype>

#include "tauforms/points.hpp"
#include "tauforms/prolong.hpp"
#include "tauforms/testkit.hpp"

namespace tauforms {

namespace {

using ojson = nlohmann::ordered_json;

std::string pos(int line, int col) {
    return "line " + std::to_string(line) + ", column " + std::to_string(col) + ": ";
}

bool coordinate_name(const std::string& n) {
    if (n == "x" || n == "y") return true;
    if (n.size() < 2 || n[0] != 'x') return false;
    return std::all_of(n.begin() + 1, n.end(),
                       [](unsigned char ch) { return std::isdigit(ch) != 0; });
}

// Evaluates expression trees against a symbol table, with an optional
// curve context that turns the coordinates x and y into curve functions.
struct Evaluator {
    const std::map<std::string, Value>& symbols;
    CurvePtr ctx;

    CurveFn as_fn_on(const CurvePtr& c, const Value& v, const Expr& site) const {
        if (const auto* f = std::get_if<CurveFn>(&v)) {
            check(f->curve()->same_as(*c), "curve-mismatch",
                  pos(site.line, site.col) + "the function lives on a different curve");
            return *f;
        }
        if (const auto* b = std::get_if<BaseElem>(&v)) return CurveFn::constant(c, *b);
        if (const auto* p = std::get_if<MPoly>(&v)) return CurveFn::from_mpoly(c, *p);
        fail("kind-mismatch",
             pos(site.line, site.col) + "expected a curve function, got " + kind_name(v));
    }

    CurveFn as_fn(const Value& v, const Expr& site) const {
        if (const auto* f = std::get_if<CurveFn>(&v)) return *f;
        check(ctx != nullptr, "kind-mismatch",
              pos(site.line, site.col) +
                  "this expression needs an 'on' clause naming a curve to become a function");
        return as_fn_on(ctx, v, site);
    }

    Value combine(const Expr& e, const Value& a, const Value& b) const {
        const std::string opname(1, e.op);
        const bool at = std::holds_alternative<TauForm>(a);
        const bool bt = std::holds_alternative<TauForm>(b);
        if (at || bt) {
            if (e.op == '+' || e.op == '-') {
                check(at && bt, "kind-mismatch",
                      pos(e.line, e.col) + "both sides of '" + opname + "' must be tau-forms");
                const TauForm& wa = std::get<TauForm>(a);
                const TauForm& wb = std::get<TauForm>(b);
                return e.op == '+' ? wa + wb : wa - wb;
            }
            if (e.op == '*') {
                check(!(at && bt), "kind-mismatch",
                      pos(e.line, e.col) + "cannot multiply two tau-forms");
                const TauForm& w = at ? std::get<TauForm>(a) : std::get<TauForm>(b);
                const Value& other = at ? b : a;
                return w.scaled(as_fn_on(w.curve(), other, e));
            }
            check(e.op == '/' && at && !bt, "kind-mismatch",
                  pos(e.line, e.col) + "a tau-form may only be divided by a function");
            const TauForm& w = std::get<TauForm>(a);
            return w.scaled(as_fn_on(w.curve(), b, e).inverse());
        }
        check(!std::holds_alternative<CurvePtr>(a) && !std::holds_alternative<CurvePtr>(b) &&
                  !std::holds_alternative<MorphismPtr>(a) &&
                  !std::holds_alternative<MorphismPtr>(b),
              "kind-mismatch",
              pos(e.line, e.col) + "curves and morphisms do not support arithmetic");
        if (std::holds_alternative<CurveFn>(a) || std::holds_alternative<CurveFn>(b)) {
            CurvePtr c = std::holds_alternative<CurveFn>(a) ? std::get<CurveFn>(a).curve()
                                                            : std::get<CurveFn>(b).curve();
            CurveFn fa = as_fn_on(c, a, e), fb = as_fn_on(c, b, e);
            switch (e.op) {
                case '+': return fa + fb;
                case '-': return fa - fb;
                case '*': return fa * fb;
                default: return fa / fb;
            }
        }
        if (std::holds_alternative<MPoly>(a) || std::holds_alternative<MPoly>(b)) {
            MPoly pa = std::holds_alternative<MPoly>(a) ? std::get<MPoly>(a)
                                                        : MPoly(std::get<BaseElem>(a));
            MPoly pb = std::holds_alternative<MPoly>(b) ? std::get<MPoly>(b)
                                                        : MPoly(std::get<BaseElem>(b));
            switch (e.op) {
                case '+': return pa + pb;
                case '-': return pa - pb;
                case '*': return pa * pb;
                default:
                    check(pb.is_constant(), "kind-mismatch",
                          pos(e.line, e.col) +
                              "cannot divide by a non-constant polynomial without a curve "
                              "context ('on C')");
                    return pa.scale(pb.constant_value().inverse());
            }
        }
        const BaseElem& xa = std::get<BaseElem>(a);
        const BaseElem& xb = std::get<BaseElem>(b);
        switch (e.op) {
            case '+': return xa + xb;
            case '-': return xa - xb;
            case '*': return xa * xb;
            default: return xa / xb;
        }
    }

    Value eval(const Expr& e) const {
        switch (e.tag) {
            case Expr::Tag::number: return BaseElem(e.value);
            case Expr::Tag::ident: {
                if (e.name == "t") return BaseElem::t();
                if (ctx && e.name == "x") return CurveFn::coord_x(ctx);
                if (ctx && e.name == "y") return CurveFn::coord_y(ctx);
                auto it = symbols.find(e.name);
                if (it != symbols.end()) return it->second;
                if (coordinate_name(e.name)) return MPoly::variable(e.name);
                fail("unknown-identifier",
                     pos(e.line, e.col) + "'" + e.name + "' is not declared");
            }
            case Expr::Tag::negate: {
                Value v = eval(*e.lhs);
                if (const auto* b = std::get_if<BaseElem>(&v)) return -*b;
                if (const auto* p = std::get_if<MPoly>(&v)) return -*p;
                if (const auto* f = std::get_if<CurveFn>(&v)) return -*f;
                if (const auto* w = std::get_if<TauForm>(&v)) return -*w;
                fail("kind-mismatch",
                     pos(e.line, e.col) + "cannot negate a " + kind_name(v));
            }
            case Expr::Tag::binary: return combine(e, eval(*e.lhs), eval(*e.rhs));
            case Expr::Tag::power: {
                Value v = eval(*e.lhs);
                if (const auto* b = std::get_if<BaseElem>(&v)) return b->pow(e.exponent);
                if (const auto* p = std::get_if<MPoly>(&v)) {
                    if (e.exponent >= 0) return p->pow(static_cast<int>(e.exponent));
                    check(p->is_constant(), "kind-mismatch",
                          pos(e.line, e.col) + "negative power of a non-constant polynomial");
                    return MPoly(p->constant_value().pow(e.exponent));
                }
                if (const auto* f = std::get_if<CurveFn>(&v)) return f->pow(e.exponent);
                fail("kind-mismatch",
                     pos(e.line, e.col) + "cannot raise a " + kind_name(v) + " to a power");
            }
            case Expr::Tag::call: {
                CurveFn f = as_fn(eval(*e.lhs), e);
                return e.name == "tau" ? tau(f) : iota(f);
            }
            case Expr::Tag::pair: {
                Value a = eval(*e.lhs), b = eval(*e.rhs);
                CurvePtr c = ctx;
                if (!c && std::holds_alternative<CurveFn>(a)) c = std::get<CurveFn>(a).curve();
                if (!c && std::holds_alternative<CurveFn>(b)) c = std::get<CurveFn>(b).curve();
                check(c != nullptr, "kind-mismatch",
                      pos(e.line, e.col) +
                          "a pair needs a curve context ('on C') to form a tau-form");
                return TauForm(as_fn_on(c, a, *e.lhs), as_fn_on(c, b, *e.rhs));
            }
        }
        invariant(false, "unhandled expression tag");
        return BaseElem(0);
    }
};

BaseElem scalar_of(const Value& v, const Expr& site, const std::string& what) {
    if (const auto* b = std::get_if<BaseElem>(&v)) return *b;
    if (const auto* p = std::get_if<MPoly>(&v); p && p->is_constant()) return p->constant_value();
    if (const auto* f = std::get_if<CurveFn>(&v)) {
        auto c = f->base_constant();
        if (c) return *c;
    }
    fail("kind-mismatch",
         pos(site.line, site.col) + what + " must be an element of the base field, got " +
             kind_name(v));
}

}  // namespace

std::string kind_name(const Value& v) {
    struct Namer {
        std::string operator()(const BaseElem&) const { return "field-elem"; }
        std::string operator()(const MPoly&) const { return "poly"; }
        std::string operator()(const CurvePtr&) const { return "curve"; }
        std::string operator()(const CurveFn&) const { return "fn"; }
        std::string operator()(const TauForm&) const { return "tauform"; }
        std::string operator()(const MorphismPtr&) const { return "morphism"; }
    };
    return std::visit(Namer{}, v);
}

std::string value_str(const Value& v) {
    struct Printer {
        std::string operator()(const BaseElem& b) const { return b.str(); }
        std::string operator()(const MPoly& p) const { return p.str(); }
        std::string operator()(const CurvePtr& c) const { return c->str(); }
        std::string operator()(const CurveFn& f) const { return f.str(); }
        std::string operator()(const TauForm& w) const { return w.str(); }
        std::string operator()(const MorphismPtr& m) const { return m->str(); }
    };
    return std::visit(Printer{}, v);
}

nlohmann::ordered_json Report::json() const {
    ojson j;
    j["command"] = command;
    j["status"] = ok ? "ok" : "error";
    if (ok) {
        j["result"] = result;
    } else {
        j["code"] = code;
        j["message"] = message;
    }
    return j;
}

std::string RunResult::text() const {
    std::string out;
    for (const auto& r : reports) {
        if (!r.command.empty()) out += "> " + r.command + "\n";
        out += r.ok ? r.text : "error[" + r.code + "]: " + r.message;
        out += "\n";
    }
    return out;
}

std::string RunResult::json() const {
    ojson arr = ojson::array();
    for (const auto& r : reports) arr.push_back(r.json());
    return arr.dump(2) + "\n";
}

CurvePtr Session::resolve_curve(const std::string& name, int line, int col) const {
    auto it = symbols_.find(name);
    check(it != symbols_.end(), "unknown-identifier",
          pos(line, col) + "'" + name + "' is not declared");
    const auto* c = std::get_if<CurvePtr>(&it->second);
    check(c != nullptr, "kind-mismatch", pos(line, col) + "'" + name + "' is not a curve");
    return *c;
}

Report Session::run_declaration(const Declaration& d) {
    const std::string where = pos(d.line, d.col);
    check(symbols_.find(d.name) == symbols_.end(), "duplicate-name",
          where + "'" + d.name + "' is already declared");
    Value value = [&]() -> Value {
        if (d.kind == "morphism") {
            check(!d.from_curve.empty() && !d.to_curve.empty(), "usage",
                  where + "a morphism declaration needs 'from A to B'");
            CurvePtr src = resolve_curve(d.from_curve, d.line, d.col);
            CurvePtr tgt = resolve_curve(d.to_curve, d.line, d.col);
            check(d.expr->tag == Expr::Tag::pair, "kind-mismatch",
                  where + "a morphism is declared by a coordinate pair (r, s)");
            Evaluator ev{symbols_, src};
            CurveFn r = ev.as_fn_on(src, ev.eval(*d.expr->lhs), *d.expr->lhs);
            CurveFn s = ev.as_fn_on(src, ev.eval(*d.expr->rhs), *d.expr->rhs);
            return std::make_shared<const CurveMorphism>(src, tgt, r, s);
        }
        check(d.from_curve.empty() && d.to_curve.empty(), "usage",
              where + "'from ... to ...' applies only to morphism declarations");
        CurvePtr ctx;
        if (!d.on_curve.empty()) {
            check(d.kind == "fn" || d.kind == "tauform", "usage",
                  where + "an 'on' clause applies only to fn and tauform declarations");
            ctx = resolve_curve(d.on_curve, d.line, d.col);
        }
        Evaluator ev{symbols_, ctx};
        Value raw = ev.eval(*d.expr);
        if (d.kind == "field-elem") return scalar_of(raw, *d.expr, "a field-elem value");
        if (d.kind == "poly") {
            if (const auto* p = std::get_if<MPoly>(&raw)) return *p;
            if (const auto* b = std::get_if<BaseElem>(&raw)) return MPoly(*b);
            fail("kind-mismatch", where + "expected a polynomial, got " + kind_name(raw));
        }
        if (d.kind == "curve") {
            if (const auto* c = std::get_if<CurvePtr>(&raw)) return *c;
            if (const auto* p = std::get_if<MPoly>(&raw)) return make_curve(*p);
            if (const auto* b = std::get_if<BaseElem>(&raw)) return make_curve(MPoly(*b));
            fail("kind-mismatch", where + "expected a curve equation, got " + kind_name(raw));
        }
        if (d.kind == "fn") {
            if (const auto* f = std::get_if<CurveFn>(&raw)) {
                check(!ctx || f->curve()->same_as(*ctx), "curve-mismatch",
                      where + "the value lives on a different curve than the 'on' clause");
                return *f;
            }
            check(ctx != nullptr, "usage",
                  where + "declaring a fn from a scalar or polynomial needs an 'on' clause");
            return ev.as_fn_on(ctx, raw, *d.expr);
        }
        if (d.kind == "tauform") {
            if (const auto* w = std::get_if<TauForm>(&raw)) {
                check(!ctx || w->curve()->same_as(*ctx), "curve-mismatch",
                      where + "the value lives on a different curve than the 'on' clause");
                return *w;
            }
            fail("kind-mismatch",
                 where + "expected a tau-form (use tau(...), iota(...) or a pair), got " +
                     kind_name(raw));
        }
        invariant(false, "unhandled declaration kind '" + d.kind + "'");
        return BaseElem(0);
    }();
    Report rep;
    rep.command = d.echo;
    rep.text = value_str(value);
    rep.result = ojson{{"kind", kind_name(value)}, {"value", value_str(value)}};
    symbols_.emplace(d.name, std::move(value));
    return rep;
}

Report Session::run_command(const Command& c) {
    Report rep;
    rep.command = c.echo;
    const std::string& verb = c.verb;
    const std::string where = pos(c.line, c.col);

    CurvePtr ctx = c.on_curve.empty() ? nullptr : resolve_curve(c.on_curve, c.line, c.col);
    Evaluator ev{symbols_, ctx};

    auto allow = [&](std::initializer_list<const char*> opts, bool at_ok, bool along_ok) {
        for (const auto& [name, v] : c.options) {
            (void)v;
            check(std::find_if(opts.begin(), opts.end(),
                               [&](const char* o) { return name == o; }) != opts.end(),
                  "usage", where + "unknown option --" + name + " for " + verb);
        }
        check(at_ok || c.at_points.empty(), "usage",
              where + verb + " does not take an 'at' clause");
        check(along_ok || c.along.empty(), "usage",
              where + verb + " does not take an 'along' clause");
    };
    auto expect_args = [&](size_t n) {
        check(c.args.size() == n, "usage",
              where + verb + " expects " + std::to_string(n) + " argument(s), got " +
                  std::to_string(c.args.size()));
    };
    auto arg_poly = [&](size_t i) -> MPoly {
        Value v = ev.eval(*c.args[i]);
        if (const auto* p = std::get_if<MPoly>(&v)) return *p;
        if (const auto* b = std::get_if<BaseElem>(&v)) return MPoly(*b);
        fail("kind-mismatch", pos(c.args[i]->line, c.args[i]->col) + "argument " +
                                  std::to_string(i + 1) + " of " + verb +
                                  " must be a polynomial, got " + kind_name(v));
    };
    auto arg_fn = [&](size_t i) -> CurveFn { return ev.as_fn(ev.eval(*c.args[i]), *c.args[i]); };
    auto arg_tauform = [&](size_t i) -> TauForm {
        Value v = ev.eval(*c.args[i]);
        if (const auto* w = std::get_if<TauForm>(&v)) return *w;
        fail("kind-mismatch", pos(c.args[i]->line, c.args[i]->col) + "argument " +
                                  std::to_string(i + 1) + " of " + verb +
                                  " must be a tau-form, got " + kind_name(v));
    };
    auto arg_curve = [&](size_t i) -> CurvePtr {
        Value v = ev.eval(*c.args[i]);
        if (const auto* cur = std::get_if<CurvePtr>(&v)) return *cur;
        if (const auto* p = std::get_if<MPoly>(&v)) return make_curve(*p);
        fail("kind-mismatch", pos(c.args[i]->line, c.args[i]->col) + "argument " +
                                  std::to_string(i + 1) + " of " + verb +
                                  " must be a curve, got " + kind_name(v));
    };
    auto along_morphism = [&]() -> MorphismPtr {
        check(!c.along.empty(), "usage", where + verb + " needs 'along M' naming a morphism");
        auto it = symbols_.find(c.along);
        check(it != symbols_.end(), "unknown-identifier",
              where + "'" + c.along + "' is not declared");
        const auto* m = std::get_if<MorphismPtr>(&it->second);
        check(m != nullptr, "kind-mismatch", where + "'" + c.along + "' is not a morphism");
        return *m;
    };
    auto form_report = [&](const TauForm& w) {
        rep.text = w.str();
        rep.result = ojson{{"a", w.a().str()}, {"b", w.b().str()}};
    };
    auto bool_report = [&](bool b) {
        rep.text = b ? "true" : "false";
        rep.result = ojson{{"value", b}};
    };

    if (verb == "tangent" || verb == "prolong" || verb == "cone") {
        allow({}, false, false);
        check(!c.args.empty(), "usage", where + verb + " needs at least one polynomial");
        std::vector<MPoly> gens;
        for (size_t i = 0; i < c.args.size(); ++i)
            gens.push_back(arg_poly(i).substitute({}));
        std::vector<std::string> vars;
        for (const auto& g : gens)
            for (const auto& v : g.vars())
                if (g.uses(v)) vars.push_back(v);
        std::sort(vars.begin(), vars.end(), var_name_less);
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        check(!vars.empty(), "usage",
              where + "the generators must use at least one coordinate");
        EmbeddedVariety V(vars, gens);
        LinearSystem sys = verb == "tangent"   ? tangent_variety(V)
                           : verb == "prolong" ? prolongation(V)
                                               : prolongation_cone(V);
        rep.text = sys.str();
        ojson eqs = ojson::array();
        for (const auto& eq : sys.eqs)
            eqs.push_back(affine_str(eq.coeffs, sys.fiber_vars, eq.constant) + " = 0");
        rep.result = ojson{
            {"base_vars", sys.base_vars}, {"fiber_vars", sys.fiber_vars}, {"equations", eqs}};
        return rep;
    }
    if (verb == "taudiff" || verb == "iota") {
        allow({}, false, false);
        expect_args(1);
        CurveFn f = arg_fn(0);
        form_report(verb == "taudiff" ? tau(f) : iota(f));
        return rep;
    }
    if (verb == "lambda") {
        allow({}, false, false);
        expect_args(1);
        OneForm of = lambda_map(arg_tauform(0));
        rep.text = of.str();
        rep.result = ojson{{"coeff", of.coeff.str()}};
        return rep;
    }
    if (verb == "decompose") {
        allow({}, false, false);
        expect_args(2);
        auto [f, g] = decompose(arg_tauform(0), arg_tauform(1));
        rep.text = "f = " + f.str() + "\ng = " + g.str();
        rep.result = ojson{{"f", f.str()}, {"g", g.str()}};
        return rep;
    }
    if (verb == "equiv" || verb == "parallel") {
        allow({}, false, false);
        expect_args(2);
        TauForm w1 = arg_tauform(0), w2 = arg_tauform(1);
        bool_report(verb == "equiv" ? sim_equivalent(w1, w2) : parallel(w1, w2));
        return rep;
    }
    if (verb == "ratio") {
        allow({}, false, false);
        expect_args(1);
        CurveFn r = canonical_ratio(arg_tauform(0));
        rep.text = r.str();
        rep.result = ojson{{"fn", r.str()}};
        return rep;
    }
    if (verb == "nullset") {
        allow({}, false, false);
        expect_args(1);
        NullSection ns = null_set(arg_tauform(0));
        rep.text = ns.str();
        rep.result = ojson{{"u", ns.u.str()}, {"v", ns.v.str()}};
        return rep;
    }
    if (verb == "pullback") {
        allow({}, false, true);
        expect_args(1);
        form_report(pullback(arg_tauform(0), *along_morphism()));
        return rep;
    }
    if (verb == "xicheck") {
        allow({}, false, true);
        expect_args(1);
        bool_report(xi_pullback_check(*along_morphism(), arg_tauform(0)));
        return rep;
    }
    if (verb == "primsec") {
        allow({}, false, false);
        expect_args(2);
        auto [content, first, second] = primitive_section(arg_poly(0), arg_poly(1));
        rep.text = "content = " + content.str() + "\nprimitive = (" + first.str() + ", " +
                   second.str() + ")";
        rep.result = ojson{
            {"content", content.str()}, {"first", first.str()}, {"second", second.str()}};
        return rep;
    }
    if (verb == "globals") {
        allow({"genus"}, false, false);
        expect_args(1);
        auto it = c.options.find("genus");
        check(it != c.options.end() && it->second.has_value(), "usage",
              where + "globals needs --genus N");
        auto basis = global_tau_basis_constant_case(arg_curve(0), *it->second);
        rep.text = "dimension = " + std::to_string(basis.size());
        ojson bs = ojson::array();
        for (const auto& w : basis) {
            rep.text += "\n" + w.str();
            bs.push_back(w.str());
        }
        rep.result = ojson{{"dimension", basis.size()}, {"basis", bs}};
        return rep;
    }
    if (verb == "xi") {
        allow({}, true, false);
        expect_args(1);
        TauForm w = arg_tauform(0);
        std::vector<CurvePoint> pts;
        for (const auto& [ex, ey] : c.at_points) {
            BaseElem bx = scalar_of(ev.eval(*ex), *ex, "a point coordinate");
            BaseElem by = scalar_of(ev.eval(*ey), *ey, "a point coordinate");
            pts.emplace_back(w.curve(), AlgElem(bx), AlgElem(by));
        }
        DifferentialSystem sys = xi_system(w, pts);
        rep.text = sys.str();
        ojson alg = ojson::array(), dif = ojson::array(), poles = ojson::array();
        for (const auto& p : sys.algebraic) alg.push_back(p.str());
        for (const auto& d : sys.differential) dif.push_back(fiber_equation_str(d));
        if (!sys.poles.empty()) {
            rep.text += "\npoles:";
            for (size_t i = 0; i < sys.poles.size(); ++i) {
                rep.text += (i == 0 ? " " : ", ") + sys.poles[i].str();
                poles.push_back(sys.poles[i].str());
            }
        }
        rep.result = ojson{{"algebraic", alg}, {"differential", dif}, {"poles", poles}};
        return rep;
    }
    if (verb == "selftest") {
        allow({"seed"}, false, false);
        expect_args(0);
        unsigned long long seed = seed_;
        auto it = c.options.find("seed");
        if (it != c.options.end() && it->second.has_value())
            seed = static_cast<unsigned long long>(*it->second);
        auto suites = testkit::run_selftest(seed);
        ojson list = ojson::array();
        for (const auto& s : suites) {
            if (!rep.text.empty()) rep.text += "\n";
            rep.text += s.name + ": ok (" + std::to_string(s.checks) + " checks)";
            list.push_back(ojson{{"name", s.name}, {"checks", s.checks}});
        }
        rep.result = ojson{{"seed", seed}, {"suites", list}};
        return rep;
    }
    fail("unknown-command", where + "unknown command '" + verb + "'");
}

Report Session::execute(const Statement& st) {
    const std::string echo = std::holds_alternative<Declaration>(st)
                                 ? std::get<Declaration>(st).echo
                                 : std::get<Command>(st).echo;
    try {
        if (const auto* d = std::get_if<Declaration>(&st)) return run_declaration(*d);
        return run_command(std::get<Command>(st));
    } catch (const error& e) {
        Report rep;
        rep.command = echo;
        rep.ok = false;
        rep.code = e.code();
        rep.message = e.what();
        return rep;
    }
}

Value Session::evaluate(const ExprPtr& e, const CurvePtr& context) const {
    return Evaluator{symbols_, context}.eval(*e);
}

RunResult run_script(const Script& script, unsigned long long seed) {
    Session session(seed);
    RunResult rr;
    for (const auto& st : script.statements) {
        rr.reports.push_back(session.execute(st));
        if (!rr.reports.back().ok) {
            rr.ok = false;
            break;
        }
    }
    return rr;
}

RunResult run_text(const std::string& text, unsigned long long seed) {
    Script script;
    try {
        script = parse_script(text);
    } catch (const error& e) {
        RunResult rr;
        rr.ok = false;
        Report rep;
        rep.ok = false;
        rep.code = e.code();
        rep.message = e.what();
        rr.reports.push_back(std::move(rep));
        return rr;
    }
    return run_script(script, seed);
}

}  // namespace tauforms
