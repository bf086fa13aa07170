#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tauforms/ints.hpp"

namespace tauforms {

// Expression tree of the scripting language.  Leaves are integer literals
// and identifiers; interior nodes are the arithmetic operators, literal
// integer powers, the calls tau(...) and iota(...), and the pair (a, b).
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Tag { number, ident, negate, binary, power, call, pair };

    Tag tag;
    int line = 0, col = 0;
    Int value;         // number
    std::string name;  // ident, call
    char op = 0;       // binary: + - * /
    long exponent = 0;
    ExprPtr lhs, rhs;  // binary and pair use both; negate, power, call use lhs
};

// let NAME : KIND = EXPR [on CURVE | from CURVE to CURVE] ;
struct Declaration {
    std::string name;
    std::string kind;  // field-elem, poly, curve, fn, tauform, morphism
    ExprPtr expr;
    std::string on_curve;
    std::string from_curve, to_curve;
    std::string echo;  // normalized statement text without the semicolon
    int line = 0, col = 0;
};

// VERB ARG (, ARG)* [on CURVE] [along MORPHISM] [at (a, b), ...] (--OPT N)* ;
struct Command {
    std::string verb;
    std::vector<ExprPtr> args;
    std::string on_curve;
    std::string along;
    std::vector<std::pair<ExprPtr, ExprPtr>> at_points;
    std::map<std::string, std::optional<long>> options;
    std::string echo;
    int line = 0, col = 0;
};

using Statement = std::variant<Declaration, Command>;

struct Script {
    std::vector<Statement> statements;
};

// Parse a script; throws error("syntax", ...) with line/column positions.
Script parse_script(const std::string& text);

// Canonical text of an expression tree (used by round-trip checks).
std::string expr_str(const Expr& e);

}  // namespace tauforms
