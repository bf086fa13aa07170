#include "tauforms/script.hpp"

#include <cctype>
#include <set>

#include "tauforms/error.hpp"

namespace tauforms {

namespace {

const std::set<std::string> kKinds = {"field-elem", "poly", "curve",
                                      "fn",         "tauform", "morphism"};
const std::set<std::string> kKeywords = {"let", "on", "from", "to", "along", "at"};
const std::set<std::string> kCalls = {"tau", "iota"};
const std::set<std::string> kLiterals = {"t", "x", "y"};

struct Token {
    enum class Kind { ident, number, punct, option, eof };
    Kind kind = Kind::eof;
    std::string text;
    int line = 1, col = 1;
    size_t begin = 0, end = 0;  // source offsets
};

[[noreturn]] void fail_at(int line, int col, const std::string& msg) {
    fail("syntax", "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

[[noreturn]] void fail_at(const Token& tk, const std::string& msg) {
    fail_at(tk.line, tk.col, msg);
}

std::string describe(const Token& tk) {
    switch (tk.kind) {
        case Token::Kind::eof: return "end of input";
        case Token::Kind::option: return "option '--" + tk.text + "'";
        default: return "'" + tk.text + "'";
    }
}

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        Token tk;
        tk.line = line;
        tk.col = col;
        tk.begin = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            tk.kind = Token::Kind::ident;
            tk.text = src.substr(i, j - i);
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            tk.kind = Token::Kind::number;
            tk.text = src.substr(i, j - i);
            advance(j - i);
        } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
            size_t j = i + 2;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            if (j == i + 2) fail_at(line, col, "expected an option name after '--'");
            tk.kind = Token::Kind::option;
            tk.text = src.substr(i + 2, j - i - 2);
            advance(j - i);
        } else if (std::string("()+-*/^=:,;").find(c) != std::string::npos) {
            tk.kind = Token::Kind::punct;
            tk.text = std::string(1, c);
            advance(1);
        } else {
            fail_at(line, col, std::string("unexpected character '") + c + "'");
        }
        tk.end = i;
        out.push_back(std::move(tk));
    }
    Token eof;
    eof.kind = Token::Kind::eof;
    eof.line = line;
    eof.col = col;
    eof.begin = eof.end = src.size();
    out.push_back(eof);
    return out;
}

std::string collapse_ws(const std::string& s) {
    std::string out;
    bool pending = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending = !out.empty();
            continue;
        }
        if (pending) out += ' ';
        pending = false;
        out += c;
    }
    return out;
}

class Parser {
public:
    Parser(const std::string& src, std::vector<Token> tokens)
        : src_(src), toks_(std::move(tokens)) {}

    Script parse() {
        Script script;
        while (peek().kind != Token::Kind::eof) {
            if (peek().kind != Token::Kind::ident)
                fail_at(peek(), "expected a statement, found " + describe(peek()));
            if (peek().text == "let")
                script.statements.push_back(parse_declaration());
            else
                script.statements.push_back(parse_command());
        }
        return script;
    }

private:
    const std::string& src_;
    std::vector<Token> toks_;
    size_t pos_ = 0;

    const Token& peek(size_t ahead = 0) const {
        size_t k = pos_ + ahead;
        return k < toks_.size() ? toks_[k] : toks_.back();
    }
    const Token& take() { return toks_[pos_++]; }

    bool at_punct(const char* p) const {
        return peek().kind == Token::Kind::punct && peek().text == p;
    }
    bool at_ident(const char* id) const {
        return peek().kind == Token::Kind::ident && peek().text == id;
    }
    const Token& expect_punct(const char* p, const std::string& what) {
        if (!at_punct(p))
            fail_at(peek(), "expected '" + std::string(p) + "' " + what + ", found " +
                                describe(peek()));
        return take();
    }
    std::string expect_ident(const std::string& what) {
        if (peek().kind != Token::Kind::ident)
            fail_at(peek(), "expected " + what + ", found " + describe(peek()));
        return take().text;
    }

    std::string echo_from(size_t begin_tok) const {
        size_t first = toks_[begin_tok].begin;
        size_t last = toks_[pos_ > 1 ? pos_ - 2 : 0].end;  // token before ';'
        if (last < first) last = first;
        return collapse_ws(src_.substr(first, last - first));
    }

    // ---- expressions ----

    ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

    ExprPtr parse_expr() { return parse_additive(); }

    ExprPtr parse_additive() {
        ExprPtr lhs = parse_term();
        while (at_punct("+") || at_punct("-")) {
            Expr e;
            e.tag = Expr::Tag::binary;
            const Token& tk = take();
            e.op = tk.text[0];
            e.line = tk.line;
            e.col = tk.col;
            e.lhs = lhs;
            e.rhs = parse_term();
            lhs = make(std::move(e));
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_unary();
        while (at_punct("*") || at_punct("/")) {
            Expr e;
            e.tag = Expr::Tag::binary;
            const Token& tk = take();
            e.op = tk.text[0];
            e.line = tk.line;
            e.col = tk.col;
            e.lhs = lhs;
            e.rhs = parse_unary();
            lhs = make(std::move(e));
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        if (at_punct("-")) {
            Expr e;
            e.tag = Expr::Tag::negate;
            const Token& tk = take();
            e.line = tk.line;
            e.col = tk.col;
            e.lhs = parse_unary();
            return make(std::move(e));
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (!at_punct("^")) return base;
        Expr e;
        e.tag = Expr::Tag::power;
        const Token& tk = take();
        e.line = tk.line;
        e.col = tk.col;
        e.lhs = base;
        bool neg = false;
        if (at_punct("-")) {
            take();
            neg = true;
        }
        if (peek().kind != Token::Kind::number)
            fail_at(peek(), "expected an integer exponent, found " + describe(peek()));
        const Token& num = take();
        if (num.text.size() > 6) fail_at(num, "exponent out of range");
        e.exponent = std::stol(num.text) * (neg ? -1 : 1);
        if (at_punct("^")) fail_at(peek(), "chained '^' needs parentheses");
        return make(std::move(e));
    }

    ExprPtr parse_atom() {
        const Token& tk = peek();
        if (tk.kind == Token::Kind::number) {
            Expr e;
            e.tag = Expr::Tag::number;
            e.value = Int(tk.text);
            e.line = tk.line;
            e.col = tk.col;
            take();
            return make(std::move(e));
        }
        if (tk.kind == Token::Kind::ident) {
            if (kKeywords.count(tk.text))
                fail_at(tk, "expected an expression, found keyword '" + tk.text + "'");
            if (peek(1).kind == Token::Kind::punct && peek(1).text == "(") {
                if (!kCalls.count(tk.text))
                    fail_at(tk, "unknown function '" + tk.text + "' (expected tau or iota)");
                Expr e;
                e.tag = Expr::Tag::call;
                e.name = tk.text;
                e.line = tk.line;
                e.col = tk.col;
                take();
                take();  // '('
                e.lhs = parse_expr();
                expect_punct(")", "to close the call");
                return make(std::move(e));
            }
            Expr e;
            e.tag = Expr::Tag::ident;
            e.name = tk.text;
            e.line = tk.line;
            e.col = tk.col;
            take();
            return make(std::move(e));
        }
        if (tk.kind == Token::Kind::punct && tk.text == "(") {
            take();
            ExprPtr first = parse_expr();
            if (at_punct(",")) {
                take();
                Expr e;
                e.tag = Expr::Tag::pair;
                e.line = tk.line;
                e.col = tk.col;
                e.lhs = first;
                e.rhs = parse_expr();
                expect_punct(")", "to close the pair");
                return make(std::move(e));
            }
            expect_punct(")", "to close the group");
            return first;
        }
        fail_at(tk, "expected an expression, found " + describe(tk));
    }

    // ---- statements ----

    Declaration parse_declaration() {
        size_t begin_tok = pos_;
        const Token& let_tok = take();  // 'let'
        Declaration d;
        d.line = let_tok.line;
        d.col = let_tok.col;
        d.name = expect_ident("a name after 'let'");
        if (kKeywords.count(d.name) || kCalls.count(d.name) || kLiterals.count(d.name) ||
            reserved_coordinate(d.name))
            fail_at(toks_[pos_ - 1], "'" + d.name + "' is reserved and cannot be declared");
        expect_punct(":", "after the name");
        d.kind = expect_ident("a kind");
        while (at_punct("-")) {
            take();
            d.kind += "-" + expect_ident("the rest of the kind name");
        }
        if (!kKinds.count(d.kind))
            fail_at(toks_[pos_ - 1],
                    "unknown kind '" + d.kind +
                        "' (expected field-elem, poly, curve, fn, tauform, or morphism)");
        expect_punct("=", "before the defining expression");
        d.expr = parse_expr();
        if (at_ident("on")) {
            take();
            d.on_curve = expect_ident("a curve name after 'on'");
        } else if (at_ident("from")) {
            take();
            d.from_curve = expect_ident("a curve name after 'from'");
            if (!at_ident("to")) fail_at(peek(), "expected 'to' after the source curve");
            take();
            d.to_curve = expect_ident("a curve name after 'to'");
        }
        expect_punct(";", "to end the declaration");
        d.echo = echo_from(begin_tok);
        return d;
    }

    static bool reserved_coordinate(const std::string& s) {
        if (s.size() < 2 || s[0] != 'x') return false;
        for (size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    }

    bool at_clause_or_end() const {
        if (peek().kind == Token::Kind::eof) return true;
        if (peek().kind == Token::Kind::option) return true;
        if (at_punct(";")) return true;
        return at_ident("on") || at_ident("along") || at_ident("at");
    }

    Command parse_command() {
        size_t begin_tok = pos_;
        const Token& verb_tok = take();
        Command c;
        c.verb = verb_tok.text;
        c.line = verb_tok.line;
        c.col = verb_tok.col;
        while (!at_clause_or_end()) {
            c.args.push_back(parse_expr());
            if (at_punct(",")) take();
        }
        while (peek().kind == Token::Kind::ident) {
            if (at_ident("on")) {
                if (!c.on_curve.empty()) fail_at(peek(), "duplicate 'on' clause");
                take();
                c.on_curve = expect_ident("a curve name after 'on'");
            } else if (at_ident("along")) {
                if (!c.along.empty()) fail_at(peek(), "duplicate 'along' clause");
                take();
                c.along = expect_ident("a morphism name after 'along'");
            } else if (at_ident("at")) {
                if (!c.at_points.empty()) fail_at(peek(), "duplicate 'at' clause");
                take();
                c.at_points.push_back(parse_point());
                while (at_punct(",")) {
                    take();
                    c.at_points.push_back(parse_point());
                }
            } else {
                fail_at(peek(), "expected a clause or ';', found " + describe(peek()));
            }
        }
        while (peek().kind == Token::Kind::option) {
            const Token& opt = take();
            if (c.options.count(opt.text)) fail_at(opt, "duplicate option '--" + opt.text + "'");
            std::optional<long> value;
            if (peek().kind == Token::Kind::number) {
                const Token& num = take();
                if (num.text.size() > 9) fail_at(num, "option value out of range");
                value = std::stol(num.text);
            }
            c.options[opt.text] = value;
        }
        expect_punct(";", "to end the command");
        c.echo = echo_from(begin_tok);
        return c;
    }

    std::pair<ExprPtr, ExprPtr> parse_point() {
        expect_punct("(", "to open a point");
        ExprPtr a = parse_expr();
        expect_punct(",", "between point coordinates");
        ExprPtr b = parse_expr();
        expect_punct(")", "to close the point");
        return {a, b};
    }
};

int expr_prec(const Expr& e) {
    switch (e.tag) {
        case Expr::Tag::binary: return (e.op == '*' || e.op == '/') ? 2 : 1;
        case Expr::Tag::negate: return 3;
        case Expr::Tag::power: return 4;
        default: return 5;
    }
}

std::string wrapped(const Expr& e, int need) {
    std::string s = expr_str(e);
    return expr_prec(e) < need ? "(" + s + ")" : s;
}

}  // namespace

std::string expr_str(const Expr& e) {
    switch (e.tag) {
        case Expr::Tag::number: return e.value.str();
        case Expr::Tag::ident: return e.name;
        case Expr::Tag::negate: return "-" + wrapped(*e.lhs, 3);
        case Expr::Tag::binary: {
            int p = expr_prec(e);
            int rneed = p + ((e.op == '-' || e.op == '/') ? 1 : 0);
            return wrapped(*e.lhs, p) + " " + std::string(1, e.op) + " " + wrapped(*e.rhs, rneed);
        }
        case Expr::Tag::power:
            return wrapped(*e.lhs, 5) + "^" + std::to_string(e.exponent);
        case Expr::Tag::call: return e.name + "(" + expr_str(*e.lhs) + ")";
        case Expr::Tag::pair:
            return "(" + expr_str(*e.lhs) + ", " + expr_str(*e.rhs) + ")";
    }
    invariant(false, "unhandled expression tag");
    return "";
}

Script parse_script(const std::string& text) {
    return Parser(text, lex(text)).parse();
}

}  // namespace tauforms
