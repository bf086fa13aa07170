#include "tauforms/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace tauforms {

bool var_name_less(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        size_t k = s.size();
        while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
        long num = -1;
        if (k < s.size()) num = std::stol(s.substr(k));
        return std::make_pair(s.substr(0, k), num);
    };
    auto [pa, na] = split(a);
    auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb;
    return na < nb;
}

MPoly::MPoly(BaseElem c) {
    if (!c.is_zero()) terms_[{}] = std::move(c);
}

MPoly MPoly::variable(const std::string& name) {
    MPoly p;
    p.vars_ = {name};
    p.terms_[{1}] = BaseElem(1);
    return p;
}

MPoly MPoly::from_terms(std::vector<std::string> vars, std::map<Exponents, BaseElem> terms) {
    MPoly p;
    p.vars_ = std::move(vars);
    for (auto& [e, c] : terms) {
        invariant(e.size() == p.vars_.size(), "exponent vector length mismatch");
        if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
    }
    return p;
}

bool MPoly::leading_negative() const {
    if (terms_.empty()) return false;
    auto tdeg = [](const Exponents& e) {
        int s = 0;
        for (int k : e) s += k;
        return s;
    };
    const std::pair<const Exponents, BaseElem>* best = nullptr;
    for (const auto& term : terms_) {
        if (!best || tdeg(term.first) > tdeg(best->first) ||
            (tdeg(term.first) == tdeg(best->first) && term.first > best->first))
            best = &term;
    }
    return best->second.is_negative();
}

bool MPoly::is_constant() const {
    for (const auto& [e, c] : terms_)
        for (int k : e)
            if (k != 0) return false;
    return true;
}

BaseElem MPoly::constant_value() const {
    invariant(is_constant(), "constant_value of non-constant polynomial");
    if (terms_.empty()) return BaseElem(0);
    return terms_.begin()->second;
}

int MPoly::var_index(const std::string& var) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == var) return static_cast<int>(i);
    return -1;
}

int MPoly::degree_in(const std::string& var) const {
    int i = var_index(var);
    if (i < 0) return 0;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(i)]);
    return d;
}

int MPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

void MPoly::add_term(const Exponents& e, const BaseElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::extended(const std::vector<std::string>& vars) const {
    std::vector<int> where(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        invariant(it != vars.end(), "extended() dropped a variable");
        where[i] = static_cast<int>(it - vars.begin());
    }
    MPoly r;
    r.vars_ = vars;
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (size_t i = 0; i < vars_.size(); ++i) ne[static_cast<size_t>(where[i])] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> m = a;
    for (const auto& v : b)
        if (std::find(m.begin(), m.end(), v) == m.end()) m.push_back(v);
    std::sort(m.begin(), m.end(), var_name_less);
    return m;
}

}  // namespace

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    std::vector<std::string> vars = merge_vars(vars_, o.vars_);
    MPoly a = extended(vars);
    MPoly b = o.extended(vars);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    std::vector<std::string> vars = merge_vars(vars_, o.vars_);
    MPoly a = extended(vars);
    MPoly b = o.extended(vars);
    MPoly r;
    r.vars_ = vars;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(vars.size());
            for (size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::scale(const BaseElem& k) const {
    if (k.is_zero()) return MPoly();
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c *= k;
    return r;
}

MPoly MPoly::pow(int e) const {
    invariant(e >= 0, "negative polynomial power");
    MPoly r(1);
    MPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    std::vector<std::string> vars = merge_vars(vars_, o.vars_);
    return extended(vars).terms_ == o.extended(vars).terms_;
}

MPoly MPoly::partial(const std::string& var) const {
    int i = var_index(var);
    check(i >= 0, "unknown-variable", "partial with respect to unknown variable '" + var + "'");
    MPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        int k = e[static_cast<size_t>(i)];
        if (k == 0) continue;
        Exponents ne = e;
        ne[static_cast<size_t>(i)] = k - 1;
        r.add_term(ne, c * BaseElem(k));
    }
    return r;
}

MPoly MPoly::coeff_delta() const {
    MPoly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) r.add_term(e, c.delta());
    return r;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& sub) const {
    MPoly acc;
    for (const auto& [e, c] : terms_) {
        MPoly term(c);
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = sub.find(vars_[i]);
            MPoly base = it != sub.end() ? it->second : MPoly::variable(vars_[i]);
            term = term * base.pow(e[i]);
        }
        acc = acc + term;
    }
    return acc;
}

BaseElem MPoly::eval(const std::map<std::string, BaseElem>& vals) const {
    BaseElem acc(0);
    for (const auto& [e, c] : terms_) {
        BaseElem term = c;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = vals.find(vars_[i]);
            check(it != vals.end(), "unknown-variable",
                  "no value assigned to variable '" + vars_[i] + "'");
            term *= it->second.pow(e[i]);
        }
        acc += term;
    }
    return acc;
}

XPoly MPoly::to_xpoly(const std::string& var) const {
    std::vector<BaseElem> cs(static_cast<size_t>(degree_in(var)) + 1, BaseElem(0));
    for (const auto& [e, c] : terms_) {
        int k = 0;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            invariant(vars_[i] == var, "to_xpoly: unexpected variable " + vars_[i]);
            k = e[i];
        }
        cs[static_cast<size_t>(k)] += c;
    }
    return XPoly::from_coeffs(std::move(cs));
}

MPoly MPoly::from_xpoly(const XPoly& p, const std::string& var) {
    MPoly x = MPoly::variable(var);
    MPoly acc;
    for (int k = 0; k <= p.degree(); ++k) acc = acc + x.pow(k).scale(p.coeff(k));
    return acc;
}

std::vector<XPoly> MPoly::coeffs_in(const std::string& main, const std::string& other) const {
    int dm = degree_in(main);
    std::vector<std::vector<BaseElem>> rows(static_cast<size_t>(dm) + 1);
    for (const auto& [e, c] : terms_) {
        int km = 0, ko = 0;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (vars_[i] == main)
                km = e[i];
            else if (vars_[i] == other)
                ko = e[i];
            else
                invariant(false, "coeffs_in: unexpected variable " + vars_[i]);
        }
        auto& row = rows[static_cast<size_t>(km)];
        if (static_cast<int>(row.size()) <= ko) row.resize(static_cast<size_t>(ko) + 1, BaseElem(0));
        row[static_cast<size_t>(ko)] += c;
    }
    std::vector<XPoly> out;
    out.reserve(rows.size());
    for (auto& row : rows) out.push_back(XPoly::from_coeffs(std::move(row)));
    return out;
}

MPoly MPoly::from_coeffs_in(const std::vector<XPoly>& cs, const std::string& main,
                            const std::string& other) {
    MPoly m = MPoly::variable(main);
    MPoly acc;
    for (size_t k = 0; k < cs.size(); ++k)
        acc = acc + m.pow(static_cast<int>(k)) * MPoly::from_xpoly(cs[k], other);
    return acc;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    if (terms_.size() == 1 && terms_.begin()->first == Exponents(vars_.size(), 0)) {
        // A lone constant with several terms already carries its own signs;
        // print it verbatim instead of pulling one sign out.
        std::string raw = terms_.begin()->second.str();
        if (needs_parens(raw)) return raw;
    }
    // Graded-lex descending order for printing.
    std::vector<std::pair<Exponents, BaseElem>> ts(terms_.begin(), terms_.end());
    auto tdeg = [](const Exponents& e) {
        int s = 0;
        for (int k : e) s += k;
        return s;
    };
    std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
        int da = tdeg(a.first), db = tdeg(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, coeff] : ts) {
        BaseElem c = coeff;
        bool neg = c.is_negative();
        if (neg) c = -c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string mono;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = c.str();
        if (mono.empty()) {
            // The sign was pulled out above, so a multi-term constant must be
            // grouped or its interior signs would read flipped.
            out << ((neg && needs_parens(cs)) ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            out << mono;
        } else {
            out << (needs_parens(cs) ? "(" + cs + ")" : cs) << "*" << mono;
        }
    }
    return out.str();
}

}  // namespace tauforms
