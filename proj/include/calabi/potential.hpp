#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace calabi {

// AST for the potential expression language:
//
//   pot  := term (('+'|'-') term)*
//   term := coef '*' atom | atom
//   atom := 'normsq' | 'sepdecay(' id ')' | 'raddecay(' id ')'
//         | 'taubnut_slice(' id ')' | '(' pot ')'
//   coef := number | id | number '/' number
//
// Unknown identifiers become unbound parameters. Decay exponents and
// the Taub-NUT coefficient are always parameter references.

struct PotentialExpr;

struct AtomNormSq {
    bool operator==(const AtomNormSq&) const { return true; }
};
struct AtomSepDecay {
    std::string alpha_param;
    bool operator==(const AtomSepDecay&) const = default;
};
struct AtomRadDecay {
    std::string alpha_param;
    bool operator==(const AtomRadDecay&) const = default;
};
struct AtomTaubNutSlice {
    std::string m_param;
    bool operator==(const AtomTaubNutSlice&) const = default;
};
struct AtomGroup {
    std::shared_ptr<const PotentialExpr> inner;
    bool operator==(const AtomGroup& o) const;
};

using PotentialAtom =
    std::variant<AtomNormSq, AtomSepDecay, AtomRadDecay, AtomTaubNutSlice, AtomGroup>;

// A literal rational coefficient or a named parameter.
struct Coef {
    std::variant<mpq_class, std::string> value;
    bool operator==(const Coef& o) const;
};

struct PotentialTerm {
    bool negated = false;  // preceded by '-' in the sum
    std::optional<Coef> coef;
    PotentialAtom atom;
    bool operator==(const PotentialTerm& o) const = default;
};

struct PotentialExpr {
    std::vector<PotentialTerm> terms;
    bool operator==(const PotentialExpr& o) const = default;
};

// Throws ParseError (with byte offset) on syntax errors and unknown
// atom names.
PotentialExpr parse_potential(std::string_view text);

// Canonical text in the grammar above; parse(print(e)) == e.
std::string to_string(const PotentialExpr& e);

// Every parameter name referenced by coefficients or atoms.
std::set<std::string> collect_parameters(const PotentialExpr& e);

// Parameter names used as decay exponents (sepdecay/raddecay arguments).
std::set<std::string> collect_decay_exponent_params(const PotentialExpr& e);

bool uses_decay_atom(const PotentialExpr& e);
bool uses_radial_decay_atom(const PotentialExpr& e);
bool uses_taubnut_atom(const PotentialExpr& e);

}  // namespace calabi
