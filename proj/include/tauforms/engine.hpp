#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "tauforms/script.hpp"
#include "tauforms/smset.hpp"

namespace tauforms {

using MorphismPtr = std::shared_ptr<const CurveMorphism>;

// A runtime value of the script language.  The alternatives correspond to
// the declarable kinds: field-elem, poly, curve, fn, tauform, morphism.
using Value = std::variant<BaseElem, MPoly, CurvePtr, CurveFn, TauForm, MorphismPtr>;

std::string kind_name(const Value& v);
std::string value_str(const Value& v);

// Outcome of one statement: the echoed source, an ok flag, a stable error
// code and message on failure, and on success a text payload plus a JSON
// payload carrying the same data field by field.
struct Report {
    std::string command;
    bool ok = true;
    std::string code;
    std::string message;
    std::string text;
    nlohmann::ordered_json result;

    nlohmann::ordered_json json() const;
};

struct RunResult {
    std::vector<Report> reports;
    bool ok = true;

    std::string text() const;
    std::string json() const;
};

// Executes statements against a symbol table.  Statement failures are
// reported (never thrown); only internal invariant violations propagate.
class Session {
public:
    explicit Session(unsigned long long seed = 1) : seed_(seed) {}

    Report execute(const Statement& st);

    // Expression evaluation under an optional curve context (on-clause);
    // exposed for tests.
    Value evaluate(const ExprPtr& e, const CurvePtr& context) const;

    const std::map<std::string, Value>& symbols() const { return symbols_; }

private:
    std::map<std::string, Value> symbols_;
    unsigned long long seed_;

    Report run_declaration(const Declaration& d);
    Report run_command(const Command& c);
    CurvePtr resolve_curve(const std::string& name, int line, int col) const;
};

// Runs a whole script, stopping at the first failed statement.
RunResult run_script(const Script& script, unsigned long long seed = 1);
RunResult run_text(const std::string& text, unsigned long long seed = 1);

}  // namespace tauforms
