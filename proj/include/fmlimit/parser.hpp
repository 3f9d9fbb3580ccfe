#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fmlimit/base.hpp"

namespace fmlimit {

// Surface syntax for cycle classes on the base:
//   expr := ['-'] term (('+'|'-') term)*
//   term := rat ['*' atom ('*' atom)*] | atom ('*' atom)*
//   atom := IDENT '[' int ',' int ']' | 'gamma' ['^' int]
//         | 'FB(' expr ')' | 'inv(' expr ')'
//         | 'star(' symref ',' symref ')' | '(' expr ')'
//   rat  := int ['/' int]
// Bigrades are mandatory on named symbols (star arguments included); a bare
// rational denotes that multiple of the fundamental class.

struct ParseError : Error {
    ParseError(int line, int col, const std::string& message)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " +
                message),
          line(line),
          col(col) {}
    int line, col;
};

struct GradeError : Error {
    GradeError(int line, int col, const std::string& message)
        : Error("grade error at " + std::to_string(line) + ":" + std::to_string(col) + ": " +
                message),
          line(line),
          col(col) {}
    int line, col;
};

struct ExprAst;

struct SymAst {
    std::string name;
    int codim = 0, weight = 0;
    bool operator==(const SymAst&) const = default;
};

struct AtomAst {
    enum class Kind : uint8_t { Sym, Gamma, Fb, Inv, Star, Paren };
    Kind kind = Kind::Sym;
    SymAst sym;                     // Sym
    int gamma_power = 1;            // Gamma
    std::shared_ptr<ExprAst> arg;   // Fb / Inv / Paren
    SymAst left, right;             // Star

    bool operator==(const AtomAst& o) const;
};

struct TermAst {
    Rational coeff{1};
    std::vector<AtomAst> atoms;
    bool operator==(const TermAst&) const = default;
};

struct ExprAst {
    std::vector<TermAst> terms;
    bool operator==(const ExprAst&) const = default;
};

ExprAst parse(const std::string& text);

// Surface form that parses back to the same tree.
std::string print_ast(const ExprAst& ast);

// Evaluation into a normalized class over base dimension d.
CycleB ast_to_cycle(const ExprAst& ast, int d);

}  // namespace fmlimit
