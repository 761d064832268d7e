#pragma once

// The bundled running example: a three-atom political agenda with three
// individuals, equal weights, a common ground of {a, c, a & c}, and the
// two-step learning sequence (a, then !c). Used by the `reproduce-paper`
// command and the golden tests; needs no input files.

#include <array>
#include <string>

#include "credo/dynamics.hpp"

namespace credo::fixtures {

LanguagePtr language();  // atoms a, b, c
AgendaPtr agenda();      // +/- {a, b, c, a -> b, a & b, a & c, b & c, a & b & c}

// positive column order used by the reference tables
const std::vector<std::string>& columns();

// 3 x 8 value grid as decimal strings, rows J1..J3, columns as above
const std::array<std::array<std::string, 8>, 3>& values();

Weights equal_weights();  // (1/3, 1/3, 1/3)

// common ground members: a, c, a & c
CommonGround common_ground();

// learning sequence: a, then !c
std::vector<Formula> events();

// the same setup as a session input document
std::string session_json();

template <class S>
Profile<S> profile() {
    AgendaPtr x = agenda();
    std::vector<Judgment<S>> judgments;
    for (const auto& row : values()) {
        std::vector<S> vals(x->size());
        for (size_t k = 0; k < 8; ++k) {
            Rat v = parse_number(row[k]);
            vals[k] = scalar_traits<S>::from_rat(v);
            vals[x->complement_of(k)] = scalar_traits<S>::from_rat(Rat(1) - v);
        }
        judgments.push_back(Judgment<S>::from_values(x, std::move(vals)));
    }
    return Profile<S>::make(std::move(judgments), RequireRational::No);
}

}  // namespace credo::fixtures
