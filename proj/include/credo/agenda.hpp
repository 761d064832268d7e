#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "credo/logic.hpp"

namespace credo {

struct NestednessReport {
    bool nested = false;
    // chosen representatives in entailment order (each entails the next),
    // as agenda indices; empty unless nested
    std::vector<size_t> chain;
    // the chain uses a tautology or contradiction member
    bool has_noncontingent = false;
};

struct Theorem1Report {
    bool non_nested = false;
    size_t contingent_count = 0;
    bool satisfied = false;  // non_nested && contingent_count > 4
};

// Finite, negation-closed set of formulas with distinct truth sets.
// Immutable after construction; cheap flags are computed at build, the
// nestedness search runs on first request under a once-guard.
class Agenda : public std::enable_shared_from_this<Agenda> {
public:
    static std::shared_ptr<const Agenda> build(std::vector<Formula> formulas, bool auto_close);

    const LanguagePtr& language() const { return lang_; }
    const std::vector<Formula>& formulas() const { return formulas_; }
    size_t size() const { return formulas_.size(); }
    const Formula& operator[](size_t i) const { return formulas_[i]; }

    std::optional<size_t> find(const TruthSet& ts) const;
    size_t complement_of(size_t i) const { return complement_[i]; }

    size_t contingent_count() const { return contingent_count_; }

    // Def-1 closure over pairwise conjunctions, non-contingent results
    // exempt: every contingent conjunction of two members must itself be a
    // member.
    bool and_stable_strict() const { return and_stable_strict_; }

    // Effective variant: a missing contingent conjunction is admitted when
    // its probability is already determined by the agenda's constraint
    // system (its indicator lies in the row space of the member indicators
    // plus normalization), so every value computation behaves as if the
    // conjunction were present.
    bool and_stable() const { return and_stable_; }

    // one offending pair (i, j) under the strict rule, if any
    std::optional<std::pair<size_t, size_t>> missing_conjunction() const {
        return missing_conjunction_;
    }

    const NestednessReport& nestedness() const;
    Theorem1Report theorem1_preconditions() const;

    bool operator==(const Agenda& other) const;

private:
    Agenda() = default;

    LanguagePtr lang_;
    std::vector<Formula> formulas_;
    std::unordered_map<TruthSet, size_t, TruthSetHash> index_;
    std::vector<size_t> complement_;
    size_t contingent_count_ = 0;
    bool and_stable_strict_ = false;
    bool and_stable_ = false;
    std::optional<std::pair<size_t, size_t>> missing_conjunction_;

    mutable std::once_flag nested_once_;
    mutable NestednessReport nested_;
};

using AgendaPtr = std::shared_ptr<const Agenda>;

// Strict pairwise check on an arbitrary formula collection (not necessarily
// negation-closed): every contingent pairwise conjunction is present.
bool pairwise_and_closed(std::span<const Formula> formulas);

// Smallest strictly and-stable superset, re-closed under negation.
AgendaPtr and_closure(const Agenda& agenda);

// Exhaustive nestedness decision over all per-pair orientations; intended
// as an oracle for small agendas.
bool nested_brute_force(const Agenda& agenda);

}  // namespace credo
