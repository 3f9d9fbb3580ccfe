#include "fmlimit/emit.hpp"

namespace fmlimit {

namespace {

std::string text_atom(const Atom& a);

// Gamma runs collapse to a power; other repeated atoms print factor by factor.
std::string text_atoms(const AtomVec& atoms) {
    std::string out;
    for (size_t i = 0; i < atoms.size();) {
        if (!out.empty()) out += "*";
        if (atoms[i].kind() == Atom::Kind::Gamma) {
            size_t j = i;
            while (j < atoms.size() && atoms[j] == atoms[i]) ++j;
            std::string g = atoms[i].factor() == 0 ? "gamma"
                                                   : "gamma" + std::to_string(atoms[i].factor());
            out += j - i == 1 ? g : g + "^" + std::to_string(j - i);
            i = j;
        } else {
            out += text_atom(atoms[i]);
            ++i;
        }
    }
    return out;
}

std::string text_atom(const Atom& a) {
    std::string prefix;
    if (a.factor() == 1) prefix = "q1*";
    if (a.factor() == 2) prefix = "q2*";
    switch (a.kind()) {
        case Atom::Kind::Sym:
            return prefix + a.name() + "[" + std::to_string(a.bigrade().codim) + "," +
                   std::to_string(a.bigrade().weight) + "]";
        case Atom::Kind::Gamma:
            return a.factor() == 0 ? "gamma" : "gamma" + std::to_string(a.factor());
        case Atom::Kind::Ell:
            return "ell";
        case Atom::Kind::Fb:
            return prefix + "FB(" + (a.args().empty() ? "1" : text_atoms(a.args())) + ")";
        case Atom::Kind::StarP:
            return prefix + "star(" + text_atom(a.args()[0].into_base()) + "," +
                   text_atom(a.args()[1].into_base()) + ")";
    }
    return "?";
}

}  // namespace

std::string to_text(const Expr& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : e.terms()) {
        bool neg = t.coeff.sign() < 0;
        Rational c = neg ? -t.coeff : t.coeff;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (t.atoms.empty()) {
            out += c.to_string();
        } else {
            if (!c.is_one()) out += c.to_string() + "*";
            out += text_atoms(t.atoms);
        }
    }
    return out;
}

namespace {

std::string latex_atom(const Atom& a, LatexNotation n);

std::string latex_atoms(const AtomVec& atoms, LatexNotation n) {
    std::string out;
    for (size_t i = 0; i < atoms.size();) {
        if (!out.empty()) out += " \\cdot ";
        size_t j = i;
        while (j < atoms.size() && atoms[j] == atoms[i]) ++j;
        std::string base = latex_atom(atoms[i], n);
        out += j - i == 1 ? base : base + "^{" + std::to_string(j - i) + "}";
        i = j;
    }
    return out;
}

std::string latex_atom(const Atom& a, LatexNotation n) {
    std::string sub;
    if (a.factor() == 1) sub = "q_1^*";
    if (a.factor() == 2) sub = "q_2^*";
    switch (a.kind()) {
        case Atom::Kind::Sym: {
            Bigrade g = a.bigrade();
            std::string core = a.name();
            if (g.weight != 0) core += "^{(" + std::to_string(g.weight) + ")}";
            return sub + core;
        }
        case Atom::Kind::Gamma: {
            std::string g = n == LatexNotation::Paper ? "c_1(J)" : "\\gamma";
            if (a.factor() != 0) g = n == LatexNotation::Paper
                                         ? "q_" + std::to_string(a.factor()) + "^*c_1(J)"
                                         : "\\gamma_" + std::to_string(a.factor());
            return g;
        }
        case Atom::Kind::Ell:
            return n == LatexNotation::Paper ? "c_1(P_B)" : "\\ell";
        case Atom::Kind::Fb: {
            std::string op = n == LatexNotation::Paper ? "F_B" : "F";
            return sub + op + "\\left(" +
                   (a.args().empty() ? "1" : latex_atoms(a.args(), n)) + "\\right)";
        }
        case Atom::Kind::StarP:
            return sub + "\\left(" + latex_atom(a.args()[0].into_base(), n) + " \\ast " +
                   latex_atom(a.args()[1].into_base(), n) + "\\right)";
    }
    return "?";
}

std::string latex_rational(const Rational& c) {
    if (c.is_integer()) return c.num().to_string();
    std::string sign = c.sign() < 0 ? "-" : "";
    return sign + "\\tfrac{" + c.num().abs().to_string() + "}{" + c.den().to_string() + "}";
}

}  // namespace

std::string to_latex(const Expr& e, LatexNotation notation) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : e.terms()) {
        bool neg = t.coeff.sign() < 0;
        Rational c = neg ? -t.coeff : t.coeff;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (t.atoms.empty()) {
            out += latex_rational(c);
        } else {
            if (!c.is_one()) out += latex_rational(c) + "\\, ";
            out += latex_atoms(t.atoms, notation);
        }
    }
    return out;
}

std::string to_latex(const LimitResult& r, LatexNotation notation) {
    return "\\nu_*\\left( q^*\\left(" + to_latex(r.a, notation) + "\\right) + q^*\\left(" +
           to_latex(r.b, notation) + "\\right)\\cdot \\eta \\right)";
}

namespace {

nlohmann::ordered_json json_atom(const Atom& a);

nlohmann::ordered_json json_atoms(const AtomVec& atoms) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Atom& a : atoms) arr.push_back(json_atom(a));
    return arr;
}

nlohmann::ordered_json json_atom(const Atom& a) {
    nlohmann::ordered_json j;
    switch (a.kind()) {
        case Atom::Kind::Sym:
            j["kind"] = "sym";
            j["name"] = a.name();
            j["codim"] = a.bigrade().codim;
            j["weight"] = a.bigrade().weight;
            break;
        case Atom::Kind::Gamma:
            j["kind"] = "gamma";
            break;
        case Atom::Kind::Ell:
            j["kind"] = "ell";
            break;
        case Atom::Kind::Fb:
            j["kind"] = "FB";
            j["arg"] = json_atoms(a.args());
            break;
        case Atom::Kind::StarP:
            j["kind"] = "star";
            j["left"] = json_atom(a.args()[0].into_base());
            j["right"] = json_atom(a.args()[1].into_base());
            break;
    }
    if (a.factor() != 0) j["factor"] = a.factor();
    return j;
}

}  // namespace

nlohmann::ordered_json to_json(const Expr& e) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Term& t : e.terms()) {
        nlohmann::ordered_json term;
        term["coeff"] = t.coeff.to_canonical_string();
        term["atoms"] = json_atoms(t.atoms);
        arr.push_back(term);
    }
    return arr;
}

nlohmann::ordered_json to_json(const LimitResult& r) {
    nlohmann::ordered_json j;
    j["g"] = r.g;
    j["mode"] = r.mode == LimitMode::Rational ? "rational" : "algebraic";
    j["route"] = r.route == LimitRoute::Closed ? "closed" : "direct";
    j["a"] = to_json(r.a);
    j["b"] = to_json(r.b);
    return j;
}

}  // namespace fmlimit
