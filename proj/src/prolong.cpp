#include "tauforms/prolong.hpp"

#include <algorithm>

#include "tauforms/error.hpp"

namespace tauforms {

EmbeddedVariety::EmbeddedVariety(std::vector<std::string> vars_, std::vector<MPoly> gens_)
    : vars(std::move(vars_)), gens(std::move(gens_)) {
    check(!vars.empty(), "invalid-variety", "variety needs at least one coordinate");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            check(vars[i] != vars[j], "invalid-variety", "repeated coordinate " + vars[i]);
    check(!gens.empty(), "invalid-variety", "variety needs at least one generator");
    for (auto& g : gens) {
        check(!g.is_zero(), "invalid-variety", "zero polynomial rejected as generator");
        for (const auto& v : g.vars())
            check(std::find(vars.begin(), vars.end(), v) != vars.end(), "invalid-variety",
                  "generator uses undeclared coordinate '" + v + "'");
        g = g.extended(vars);
    }
}

bool EmbeddedVariety::constant_coefficients() const {
    for (const auto& g : gens)
        if (!g.coeff_delta().is_zero()) return false;
    return true;
}

std::string fiber_var_name(const std::string& base) {
    if (base == "x") return "u";
    if (base == "y") return "v";
    if (base.size() > 1 && base[0] == 'x') return "u" + base.substr(1);
    return "u_" + base;
}

std::string affine_str(const std::vector<MPoly>& coeffs, const std::vector<std::string>& fvars,
                       const MPoly& constant) {
    std::string out;
    auto emit = [&out](const MPoly& c, const std::string& fvar) {
        if (c.is_zero()) return;
        if (out.empty() && fvar.empty()) {
            // A lone constant with several terms already carries its own
            // signs; print it verbatim instead of pulling one sign out.
            std::string raw = c.str();
            if (needs_parens(raw)) {
                out += raw;
                return;
            }
        }
        bool neg = c.leading_negative();
        MPoly a = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string cs = a.str();
        if (fvar.empty()) {
            // The sign was pulled out above, so a multi-term constant must be
            // grouped or its interior signs would read flipped.
            out += (neg && needs_parens(cs)) ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            out += fvar;
        } else {
            out += (needs_parens(cs) ? "(" + cs + ")" : cs) + "*" + fvar;
        }
    };
    for (size_t i = 0; i < coeffs.size(); ++i) emit(coeffs[i], fvars[i]);
    emit(constant, "");
    return out.empty() ? "0" : out;
}

namespace {

std::vector<std::string> fiber_names(const std::vector<std::string>& base) {
    std::vector<std::string> out;
    out.reserve(base.size());
    for (const auto& v : base) out.push_back(fiber_var_name(v));
    return out;
}

LinearSystem build_system(const EmbeddedVariety& V, bool with_constant, bool with_cone) {
    LinearSystem sys;
    sys.base_vars = V.vars;
    sys.fiber_vars = fiber_names(V.vars);
    if (with_cone) sys.fiber_vars.push_back("u'");
    for (const auto& g : V.gens) {
        LinearEquation eq;
        for (const auto& v : V.vars) eq.coeffs.push_back(g.partial(v));
        if (with_cone)
            eq.coeffs.push_back(g.coeff_delta());
        else if (with_constant)
            eq.constant = g.coeff_delta();
        sys.eqs.push_back(std::move(eq));
    }
    return sys;
}

}  // namespace

std::string LinearSystem::str() const {
    std::string out;
    for (const auto& eq : eqs) {
        if (!out.empty()) out += "\n";
        out += affine_str(eq.coeffs, fiber_vars, eq.constant) + " = 0";
    }
    return out;
}

LinearSystem tangent_variety(const EmbeddedVariety& V) { return build_system(V, false, false); }

LinearSystem prolongation(const EmbeddedVariety& V) { return build_system(V, true, false); }

LinearSystem prolongation_cone(const EmbeddedVariety& V) { return build_system(V, false, true); }

LinearSystem cone_slice(const LinearSystem& cone, const BaseElem& value) {
    check(!cone.fiber_vars.empty() && cone.fiber_vars.back() == "u'", "invalid-system",
          "cone_slice expects a system whose last fiber variable is u'");
    LinearSystem sys;
    sys.base_vars = cone.base_vars;
    sys.fiber_vars = cone.fiber_vars;
    sys.fiber_vars.pop_back();
    for (const auto& eq : cone.eqs) {
        LinearEquation e;
        e.coeffs.assign(eq.coeffs.begin(), eq.coeffs.end() - 1);
        e.constant = eq.constant + eq.coeffs.back().scale(value);
        sys.eqs.push_back(std::move(e));
    }
    return sys;
}

BaseElem AffineFiberMap::apply(const std::map<std::string, BaseElem>& base_point,
                               const std::vector<BaseElem>& fiber) const {
    invariant(fiber.size() == linear.size(), "fiber vector length mismatch");
    BaseElem acc = constant.eval(base_point);
    for (size_t i = 0; i < linear.size(); ++i) acc += linear[i].eval(base_point) * fiber[i];
    return acc;
}

std::string AffineFiberMap::str() const { return affine_str(linear, fiber_vars, constant); }

std::vector<AffineFiberMap> lifting_map(const std::vector<MPoly>& phi,
                                        const std::vector<std::string>& vars) {
    check(!phi.empty(), "invalid-map", "empty polynomial map");
    std::vector<AffineFiberMap> out;
    for (const auto& comp : phi) out.push_back(tau_diff_ambient(comp, vars));
    return out;
}

std::vector<AffineFiberMap> lifting_map(const std::vector<MPoly>& phi, const EmbeddedVariety& V) {
    return lifting_map(phi, V.vars);
}

AffineFiberMap tau_diff_ambient(const MPoly& f, const std::vector<std::string>& vars) {
    for (const auto& v : f.vars())
        check(std::find(vars.begin(), vars.end(), v) != vars.end(), "invalid-map",
              "polynomial uses undeclared coordinate '" + v + "'");
    MPoly g = f.extended(vars);
    AffineFiberMap m;
    m.fiber_vars = fiber_names(vars);
    for (const auto& v : vars) m.linear.push_back(g.partial(v));
    m.constant = g.coeff_delta();
    return m;
}

AffineFiberMap tau_diff_ambient(const MPoly& f, const EmbeddedVariety& V) {
    return tau_diff_ambient(f, V.vars);
}

}  // namespace tauforms
