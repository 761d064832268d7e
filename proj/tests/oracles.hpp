#pragma once

// Test-side oracles. Everything here decides questions by enumeration or
// direct recursion, independent of the solver paths under test.

#include <random>
#include <vector>

#include "credo/agenda.hpp"
#include "credo/judgment.hpp"
#include "credo/oracle.hpp"

namespace credo::testing {

// Truth of an ast at one valuation by structural recursion; does not touch
// the bitmask machinery.
inline bool eval_at(const Ast& ast, uint32_t v) {
    switch (ast.kind) {
        case Connective::Atom: return (v >> ast.atom) & 1;
        case Connective::Not: return !eval_at(*ast.lhs, v);
        case Connective::And: return eval_at(*ast.lhs, v) && eval_at(*ast.rhs, v);
        case Connective::Or: return eval_at(*ast.lhs, v) || eval_at(*ast.rhs, v);
        case Connective::Implies: return !eval_at(*ast.lhs, v) || eval_at(*ast.rhs, v);
        case Connective::Iff: return eval_at(*ast.lhs, v) == eval_at(*ast.rhs, v);
    }
    return false;
}

inline AstPtr random_ast(std::mt19937_64& rng, size_t atom_count, int depth) {
    auto pick = [&](int n) { return static_cast<int>(rng() % n); };
    if (depth <= 0 || pick(4) == 0)
        return Ast::make_atom(pick(static_cast<int>(atom_count)));
    switch (pick(5)) {
        case 0: return Ast::make(Connective::Not, random_ast(rng, atom_count, depth - 1));
        case 1:
            return Ast::make(Connective::And, random_ast(rng, atom_count, depth - 1),
                             random_ast(rng, atom_count, depth - 1));
        case 2:
            return Ast::make(Connective::Or, random_ast(rng, atom_count, depth - 1),
                             random_ast(rng, atom_count, depth - 1));
        case 3:
            return Ast::make(Connective::Implies, random_ast(rng, atom_count, depth - 1),
                             random_ast(rng, atom_count, depth - 1));
        default:
            return Ast::make(Connective::Iff, random_ast(rng, atom_count, depth - 1),
                             random_ast(rng, atom_count, depth - 1));
    }
}

}  // namespace credo::testing
