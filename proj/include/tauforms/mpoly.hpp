#pragma once

#include <map>
#include <string>
#include <vector>

#include "tauforms/upoly.hpp"

namespace tauforms {

// Orders variable names naturally: alphabetic prefix first, then numeric
// suffix as a number, so x1 < x2 < ... < x10 and x < y.
bool var_name_less(const std::string& a, const std::string& b);

// Multivariate polynomial over Q(t): an ordered variable list plus a map
// from dense exponent vectors to non-zero coefficients.  Arithmetic aligns
// variable lists automatically; the term map is canonically ordered.
class MPoly {
public:
    using Exponents = std::vector<int>;

    MPoly() = default;
    explicit MPoly(BaseElem c);
    explicit MPoly(long c) : MPoly(BaseElem(c)) {}

    static MPoly variable(const std::string& name);
    static MPoly t() { return MPoly(BaseElem::t()); }
    static MPoly from_terms(std::vector<std::string> vars,
                            std::map<Exponents, BaseElem> terms);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, BaseElem>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Sign of the printed leading term (graded-lex order); false for zero.
    bool leading_negative() const;
    bool is_constant() const;
    // The value of a constant polynomial (zero polynomial gives 0).
    BaseElem constant_value() const;

    bool uses(const std::string& var) const { return degree_in(var) > 0; }
    int degree_in(const std::string& var) const;
    int total_degree() const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly scale(const BaseElem& k) const;
    MPoly pow(int e) const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Formal partial derivative; unknown variable names are rejected.
    MPoly partial(const std::string& var) const;

    // Coefficient-wise application of the derivation on Q(t).
    MPoly coeff_delta() const;

    // Re-embed into a variable list that must contain vars() as a subset.
    MPoly extended(const std::vector<std::string>& vars) const;

    // Substitute polynomials for variables (missing names stay untouched).
    MPoly substitute(const std::map<std::string, MPoly>& sub) const;

    // Full evaluation; every used variable must be assigned.
    BaseElem eval(const std::map<std::string, BaseElem>& vals) const;

    // Evaluation into any commutative ring T containing Q(t); emb embeds
    // coefficients and zero(), and vals must cover every used variable.
    template <class T, class Emb>
    T eval_with(const std::map<std::string, T>& vals, Emb emb) const;

    // View as a univariate polynomial (vars() must be within {var}).
    XPoly to_xpoly(const std::string& var) const;
    static MPoly from_xpoly(const XPoly& p, const std::string& var);

    // View as a polynomial in main whose coefficients are polynomials in
    // other; vars() must be within {main, other}.
    std::vector<XPoly> coeffs_in(const std::string& main, const std::string& other) const;
    static MPoly from_coeffs_in(const std::vector<XPoly>& cs, const std::string& main,
                                const std::string& other);

    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::map<Exponents, BaseElem> terms_;

    void add_term(const Exponents& e, const BaseElem& c);
    int var_index(const std::string& var) const;  // -1 when absent
};

template <class T, class Emb>
T MPoly::eval_with(const std::map<std::string, T>& vals, Emb emb) const {
    T acc = emb(BaseElem(0));
    for (const auto& [exps, coeff] : terms_) {
        T term = emb(coeff);
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (exps[i] == 0) continue;
            auto it = vals.find(vars_[i]);
            check(it != vals.end(), "unknown-variable",
                  "no value assigned to variable '" + vars_[i] + "'");
            for (int k = 0; k < exps[i]; ++k) term = term * it->second;
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace tauforms
