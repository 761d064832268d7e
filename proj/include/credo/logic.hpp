#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "credo/errors.hpp"
#include "credo/truthset.hpp"

namespace credo {

// Fixed finite atom set. Valuation index v assigns atom i the truth value
// (v >> i) & 1, so atom 0 occupies the least significant bit.
class Language {
public:
    static constexpr int kMaxAtoms = 16;

    explicit Language(std::vector<std::string> atoms);

    static std::shared_ptr<const Language> make(std::vector<std::string> atoms) {
        return std::make_shared<const Language>(std::move(atoms));
    }

    const std::vector<std::string>& atoms() const { return atoms_; }
    uint32_t valuation_count() const { return valuation_count_; }
    int atom_index(std::string_view name) const;  // -1 when unknown
    const TruthSet& atom_mask(int i) const { return atom_masks_[i]; }

    bool operator==(const Language& other) const { return atoms_ == other.atoms_; }

private:
    std::vector<std::string> atoms_;
    uint32_t valuation_count_;
    std::vector<TruthSet> atom_masks_;
};

using LanguagePtr = std::shared_ptr<const Language>;

enum class Connective { Atom, Not, And, Or, Implies, Iff };

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

struct Ast {
    Connective kind;
    int atom = -1;     // Connective::Atom
    AstPtr lhs, rhs;   // Not uses lhs only

    static AstPtr make_atom(int index);
    static AstPtr make(Connective kind, AstPtr lhs, AstPtr rhs = nullptr);
};

// Propositional formula over a Language. Logical equivalence is the identity
// criterion: two formulas are equal iff their truth sets are equal; the ast
// is kept only for display.
class Formula {
public:
    Formula() = default;
    Formula(LanguagePtr lang, AstPtr ast);

    const LanguagePtr& language() const { return lang_; }
    const AstPtr& ast() const { return ast_; }
    const TruthSet& truthset() const { return truthset_; }

    std::string text() const;  // canonical ASCII rendering, minimal parentheses

    bool operator==(const Formula& other) const {
        return same_language(other) && truthset_ == other.truthset_;
    }
    bool same_language(const Formula& other) const {
        return lang_ == other.lang_ || (lang_ && other.lang_ && *lang_ == *other.lang_);
    }

private:
    LanguagePtr lang_;
    AstPtr ast_;
    TruthSet truthset_;
};

// Grammar (precedence high to low): atoms [a-z][a-z0-9_]*, '!' prefix,
// '&' left, '|' left, '->' right, '<->' left, parentheses. Unicode
// aliases accepted on input. Throws ParseError / unknown-atom Error.
Formula parse_formula(std::string_view text, const LanguagePtr& lang);

TruthSet evaluate(const Ast& ast, const Language& lang);

// Canonical representative with the given truth set: disjunction of full
// literal conjunctions over the satisfying valuations; the empty set maps
// to the canonical contradiction over atom 0.
Formula formula_from_truthset(const TruthSet& mask, const LanguagePtr& lang);

inline const TruthSet& truthset(const Formula& f) { return f.truthset(); }

bool entails(const Formula& f, const Formula& g);
bool is_tautology(const Formula& f);
bool is_contradiction(const Formula& f);
bool is_contingent(const Formula& f);
Formula negate(const Formula& f);
Formula conjoin(const Formula& f, const Formula& g);
Formula disjoin(const Formula& f, const Formula& g);
Formula implies(const Formula& f, const Formula& g);
Formula iff(const Formula& f, const Formula& g);

}  // namespace credo
