#include "fmlimit/parser.hpp"

namespace fmlimit {

bool AtomAst::operator==(const AtomAst& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Sym: return sym == o.sym;
        case Kind::Gamma: return gamma_power == o.gamma_power;
        case Kind::Star: return left == o.left && right == o.right;
        case Kind::Fb:
        case Kind::Inv:
        case Kind::Paren: return (arg == o.arg) || (arg && o.arg && *arg == *o.arg);
    }
    return false;
}

namespace {

enum class Tok : uint8_t { Ident, Int, Plus, Minus, Times, Slash, Caret, LParen, RParen,
                           LBracket, RBracket, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r')) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
        current_ = {Tok::End, "", line_, col_};
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        auto single = [&](Tok k) {
            current_ = {k, std::string(1, c), line_, col_};
            ++pos_;
            ++col_;
        };
        switch (c) {
            case '+': return single(Tok::Plus);
            case '-': return single(Tok::Minus);
            case '*': return single(Tok::Times);
            case '/': return single(Tok::Slash);
            case '^': return single(Tok::Caret);
            case '(': return single(Tok::LParen);
            case ')': return single(Tok::RParen);
            case '[': return single(Tok::LBracket);
            case ']': return single(Tok::RBracket);
            case ',': return single(Tok::Comma);
            default: break;
        }
        if (c >= '0' && c <= '9') {
            size_t start = pos_;
            int col = col_;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
                ++pos_;
                ++col_;
            }
            current_ = {Tok::Int, text_.substr(start, pos_ - start), line_, col};
            return;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            size_t start = pos_;
            int col = col_;
            while (pos_ < text_.size() &&
                   ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                    (text_[pos_] >= 'A' && text_[pos_] <= 'Z') ||
                    (text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '_')) {
                ++pos_;
                ++col_;
            }
            current_ = {Tok::Ident, text_.substr(start, pos_ - start), line_, col};
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token current_{Tok::End, "", 1, 1};
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprAst parse_expr(bool top = false) {
        ExprAst ast;
        bool negate = accept(Tok::Minus);
        ast.terms.push_back(parse_term(negate));
        while (peek_is(Tok::Plus) || peek_is(Tok::Minus)) {
            bool minus = lex_.take().kind == Tok::Minus;
            ast.terms.push_back(parse_term(minus));
        }
        if (top && !peek_is(Tok::End)) fail("expected '+', '-' or end of input");
        return ast;
    }

private:
    bool peek_is(Tok k) const { return lex_.peek().kind == k; }

    bool accept(Tok k) {
        if (!peek_is(k)) return false;
        lex_.take();
        return true;
    }

    Token expect(Tok k, const std::string& what) {
        if (!peek_is(k)) fail("expected " + what);
        return lex_.take();
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(lex_.peek().line, lex_.peek().col, message);
    }

    int parse_int() {
        bool neg = accept(Tok::Minus);
        Token t = expect(Tok::Int, "an integer");
        long long v = std::stoll(t.text);
        return static_cast<int>(neg ? -v : v);
    }

    TermAst parse_term(bool negate) {
        TermAst term;
        if (peek_is(Tok::Int)) {
            Token t = lex_.take();
            BigInt num(t.text);
            if (accept(Tok::Slash)) {
                Token den = expect(Tok::Int, "a denominator");
                term.coeff = Rational(num, BigInt(den.text));
            } else {
                term.coeff = Rational(std::move(num));
            }
            if (!accept(Tok::Times)) {
                if (negate) term.coeff = -term.coeff;
                return term;  // bare rational: that multiple of 1
            }
        }
        if (negate) term.coeff = -term.coeff;
        term.atoms.push_back(parse_atom());
        while (accept(Tok::Times)) term.atoms.push_back(parse_atom());
        return term;
    }

    SymAst parse_symref() {
        Token name = expect(Tok::Ident, "a symbol name");
        if (!peek_is(Tok::LBracket))
            throw GradeError(name.line, name.col,
                             "symbol '" + name.text + "' is missing its [codim,weight] bigrade");
        lex_.take();
        SymAst s;
        s.name = name.text;
        s.codim = parse_int();
        if (!accept(Tok::Comma)) fail("bigrade requires two indices [codim,weight]");
        s.weight = parse_int();
        expect(Tok::RBracket, "']'");
        return s;
    }

    AtomAst parse_atom() {
        if (accept(Tok::LParen)) {
            AtomAst a;
            a.kind = AtomAst::Kind::Paren;
            a.arg = std::make_shared<ExprAst>(parse_expr());
            expect(Tok::RParen, "')'");
            return a;
        }
        if (!peek_is(Tok::Ident)) fail("expected a symbol, 'gamma', 'FB', 'inv', 'star' or '('");
        if (lex_.peek().text == "gamma") {
            lex_.take();
            AtomAst a;
            a.kind = AtomAst::Kind::Gamma;
            if (accept(Tok::Caret)) {
                a.gamma_power = parse_int();
                if (a.gamma_power < 0) fail("gamma exponent must be non-negative");
            }
            return a;
        }
        if (lex_.peek().text == "FB" || lex_.peek().text == "inv") {
            bool is_fb = lex_.peek().text == "FB";
            lex_.take();
            expect(Tok::LParen, "'('");
            AtomAst a;
            a.kind = is_fb ? AtomAst::Kind::Fb : AtomAst::Kind::Inv;
            a.arg = std::make_shared<ExprAst>(parse_expr());
            expect(Tok::RParen, "')'");
            return a;
        }
        if (lex_.peek().text == "star") {
            lex_.take();
            expect(Tok::LParen, "'('");
            AtomAst a;
            a.kind = AtomAst::Kind::Star;
            a.left = parse_symref();
            expect(Tok::Comma, "','");
            a.right = parse_symref();
            expect(Tok::RParen, "')'");
            return a;
        }
        AtomAst a;
        a.kind = AtomAst::Kind::Sym;
        a.sym = parse_symref();
        return a;
    }

    Lexer lex_;
};

}  // namespace

ExprAst parse(const std::string& text) { return Parser(text).parse_expr(/*top=*/true); }

namespace {

// Prints |coeff| and the atom product; the caller emits the sign.
void print_term(const TermAst& t, std::string& out) {
    Rational c = t.coeff.sign() < 0 ? -t.coeff : t.coeff;
    bool printed = false;
    if (!c.is_one() || t.atoms.empty()) {
        out += c.to_string();
        printed = true;
    }
    for (const AtomAst& a : t.atoms) {
        if (printed) out += "*";
        printed = true;
        switch (a.kind) {
            case AtomAst::Kind::Sym:
                out += a.sym.name + "[" + std::to_string(a.sym.codim) + "," +
                       std::to_string(a.sym.weight) + "]";
                break;
            case AtomAst::Kind::Gamma:
                out += a.gamma_power == 1 ? "gamma" : "gamma^" + std::to_string(a.gamma_power);
                break;
            case AtomAst::Kind::Fb:
                out += "FB(" + print_ast(*a.arg) + ")";
                break;
            case AtomAst::Kind::Inv:
                out += "inv(" + print_ast(*a.arg) + ")";
                break;
            case AtomAst::Kind::Paren:
                out += "(" + print_ast(*a.arg) + ")";
                break;
            case AtomAst::Kind::Star:
                out += "star(" + a.left.name + "[" + std::to_string(a.left.codim) + "," +
                       std::to_string(a.left.weight) + "]," + a.right.name + "[" +
                       std::to_string(a.right.codim) + "," + std::to_string(a.right.weight) +
                       "])";
                break;
        }
    }
}

}  // namespace

std::string print_ast(const ExprAst& ast) {
    if (ast.terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < ast.terms.size(); ++i) {
        bool neg = ast.terms[i].coeff.sign() < 0;
        if (i == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        print_term(ast.terms[i], out);
    }
    return out;
}

CycleB ast_to_cycle(const ExprAst& ast, int d) {
    Expr sum;
    for (const TermAst& t : ast.terms) {
        Expr product = Expr::from_rational(t.coeff);
        for (const AtomAst& a : t.atoms) {
            Expr factor;
            switch (a.kind) {
                case AtomAst::Kind::Sym:
                    factor = Expr::from_atom(
                        Atom::sym(a.sym.name, a.sym.codim, a.sym.weight));
                    break;
                case AtomAst::Kind::Gamma:
                    factor = pow(Expr::from_atom(Atom::gamma()),
                                 static_cast<unsigned>(a.gamma_power), d);
                    break;
                case AtomAst::Kind::Fb:
                    factor = fb(ast_to_cycle(*a.arg, d), d);
                    break;
                case AtomAst::Kind::Inv:
                    factor = inv(ast_to_cycle(*a.arg, d));
                    break;
                case AtomAst::Kind::Paren:
                    factor = ast_to_cycle(*a.arg, d);
                    break;
                case AtomAst::Kind::Star:
                    factor = star(Atom::sym(a.left.name, a.left.codim, a.left.weight),
                                  Atom::sym(a.right.name, a.right.codim, a.right.weight), d);
                    break;
            }
            product = mul(product, factor, d);
        }
        sum = sum + product;
    }
    return normalize(sum, d);
}

}  // namespace fmlimit
