#pragma once

#include <string>

#include "fmlimit/limit.hpp"

#include "json.hpp"

namespace fmlimit {

enum class LatexNotation : uint8_t { Short, Paper };

// Concrete syntax accepted by the parser; classes round-trip through it.
std::string to_text(const Expr& e);

std::string to_latex(const Expr& e, LatexNotation notation = LatexNotation::Short);

// The full limit as nu*( q*(a) + q*(b).eta ).
std::string to_latex(const LimitResult& r, LatexNotation notation = LatexNotation::Short);

// Stable JSON: a class is an array of terms; a term is
// {"coeff": "p/q", "atoms": [...]} with atom kinds sym|gamma|FB|inv|star and
// rationals always exact strings.
nlohmann::ordered_json to_json(const Expr& e);
nlohmann::ordered_json to_json(const LimitResult& r);

}  // namespace fmlimit
