#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "credo/judgment.hpp"

namespace credo {

// Nonnegative rational weights with sum 1. Kept exact in every arithmetic
// mode; decimal input like "0.3333" stays the fraction 3333/10000, it is
// never promoted to 1/3.
class Weights {
public:
    static Weights make(std::vector<Rat> w) {
        if (w.empty()) throw PreconditionError("weights must be nonempty");
        Rat sum = 0;
        for (const auto& x : w) {
            if (x < 0) throw PreconditionError("negative weight");
            sum += x;
        }
        if (sum != 1) throw PreconditionError("weights must sum to 1, got " + format_exact(sum));
        Weights out;
        out.w_ = std::move(w);
        return out;
    }

    size_t size() const { return w_.size(); }
    const Rat& operator[](size_t i) const { return w_[i]; }
    const std::vector<Rat>& values() const { return w_; }

private:
    std::vector<Rat> w_;
};

// 0-based index of the dictator, i.e. the individual whose weight is
// exactly 1, if there is one.
inline std::optional<size_t> is_dictatorial(const Weights& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] == 1) return i;
    return std::nullopt;
}

// Tuple of judgments over one agenda. By default every member must be
// rational; AllowIrrational exists for auditing externally supplied data
// and marks the profile accordingly.
enum class RequireRational { Yes, No };

template <class S>
class Profile {
public:
    static Profile make(std::vector<Judgment<S>> judgments,
                        RequireRational require = RequireRational::Yes) {
        if (judgments.empty()) throw PreconditionError("profile needs at least one judgment");
        const AgendaPtr& agenda = judgments.front().agenda();
        for (const auto& j : judgments)
            if (j.agenda() != agenda && !(*j.agenda() == *agenda))
                throw PreconditionError("profile judgments use different agendas");
        std::string irrational;
        for (size_t i = 0; i < judgments.size(); ++i)
            if (!judgments[i].rational())
                irrational += (irrational.empty() ? "" : ", ") + std::to_string(i + 1);
        if (require == RequireRational::Yes && !irrational.empty())
            throw JudgmentError("profile contains irrational judgments (individuals " + irrational +
                                ")");
        Profile p;
        p.agenda_ = agenda;
        p.judgments_ = std::move(judgments);
        p.all_rational_ = irrational.empty();
        return p;
    }

    const AgendaPtr& agenda() const { return agenda_; }
    const std::vector<Judgment<S>>& judgments() const { return judgments_; }
    size_t size() const { return judgments_.size(); }
    const Judgment<S>& operator[](size_t i) const { return judgments_[i]; }
    bool all_rational() const { return all_rational_; }

private:
    Profile() = default;

    AgendaPtr agenda_;
    std::vector<Judgment<S>> judgments_;
    bool all_rational_ = true;
};

// Weighted average, formula by formula. When every member carries a
// certificate the pooled certificate is the same convex combination of the
// member measures; otherwise rationality of the pooled values is decided
// by LP.
template <class S>
Judgment<S> linear_pool(const Profile<S>& p, const Weights& w) {
    if (w.size() != p.size())
        throw PreconditionError("weight count " + std::to_string(w.size()) +
                                " does not match profile size " + std::to_string(p.size()));
    const Agenda& agenda = *p.agenda();
    std::vector<S> pooled(agenda.size(), S{});
    for (size_t i = 0; i < p.size(); ++i) {
        S wi = scalar_traits<S>::from_rat(w[i]);
        for (size_t k = 0; k < agenda.size(); ++k) pooled[k] += wi * p[i].value(k);
    }
    S tol = p[0].tol();
    if (p.all_rational()) {
        std::vector<S> weights(agenda.language()->valuation_count(), S{});
        for (size_t i = 0; i < p.size(); ++i) {
            S wi = scalar_traits<S>::from_rat(w[i]);
            const auto& cert = p[i].certificate();
            for (size_t v = 0; v < weights.size(); ++v) weights[v] += wi * cert.weights[v];
        }
        return Judgment<S>::with_certificate(p.agenda(), std::move(pooled),
                                             Measure<S>{agenda.language(), std::move(weights)}, tol);
    }
    return Judgment<S>::from_values(p.agenda(), std::move(pooled), tol);
}

template <class S>
using Rule = std::function<Judgment<S>(const Profile<S>&)>;

struct ConsensusViolation {
    size_t candidate;     // index into the candidate list
    std::string formula;  // candidate rendering
};

struct ConsensusReport {
    size_t candidates = 0;
    size_t premise_held = 0;  // candidates every individual was consistent with
    std::vector<ConsensusViolation> violations;
    bool exhaustive = false;
    uint64_t seed = 0;

    bool ok() const { return violations.empty(); }
};

// For each candidate truth: if every member judgment is consistent with it,
// the aggregate must be too. A violation refutes consensus compatibility;
// passing refutes nothing beyond the sampled candidates.
template <class S>
ConsensusReport check_consensus_compatibility(const Rule<S>& rule, const Profile<S>& p,
                                              const std::vector<Formula>& candidates) {
    ConsensusReport report;
    report.candidates = candidates.size();
    Judgment<S> pooled = rule(p);
    for (size_t c = 0; c < candidates.size(); ++c) {
        bool premise = true;
        for (size_t i = 0; i < p.size() && premise; ++i)
            premise = consistent_with_truth(p[i], candidates[c]);
        if (!premise) continue;
        ++report.premise_held;
        if (!consistent_with_truth(pooled, candidates[c]))
            report.violations.push_back({c, candidates[c].text()});
    }
    return report;
}

// All truth-set representatives for |atoms| <= 4, else the agenda plus a
// seeded random sample of 512 truth sets.
std::vector<Formula> default_consensus_candidates(const Agenda& agenda, uint64_t seed,
                                                  bool* exhaustive = nullptr);

template <class S>
ConsensusReport check_consensus_compatibility(const Rule<S>& rule, const Profile<S>& p,
                                              uint64_t seed) {
    bool exhaustive = false;
    auto candidates = default_consensus_candidates(*p.agenda(), seed, &exhaustive);
    ConsensusReport report = check_consensus_compatibility(rule, p, candidates);
    report.exhaustive = exhaustive;
    report.seed = seed;
    return report;
}

struct IndependenceViolation {
    size_t pair;
    std::string formula;
    std::string left, right;  // differing aggregate values, decimal text
};

struct IndependenceReport {
    size_t pairs = 0;
    size_t comparisons = 0;  // formulas where the pointwise premise held
    std::vector<IndependenceViolation> violations;

    bool ok() const { return violations.empty(); }
};

// Falsification test of independence: wherever two profiles agree pointwise
// on a formula, the aggregates must agree there as well. Can refute, never
// prove.
template <class S>
IndependenceReport check_independence(const Rule<S>& rule,
                                      const std::vector<std::pair<Profile<S>, Profile<S>>>& pairs) {
    IndependenceReport report;
    report.pairs = pairs.size();
    for (size_t k = 0; k < pairs.size(); ++k) {
        const auto& [p, q] = pairs[k];
        if (p.size() != q.size() || !(*p.agenda() == *q.agenda()))
            throw PreconditionError("independence pair " + std::to_string(k) +
                                    " does not share shape");
        Judgment<S> fp = rule(p), fq = rule(q);
        const Agenda& agenda = *p.agenda();
        for (size_t f = 0; f < agenda.size(); ++f) {
            bool premise = true;
            for (size_t i = 0; i < p.size() && premise; ++i)
                premise = scalar_traits<S>::eq(p[i].value(f), q[i].value(f), p[i].tol());
            if (!premise) continue;
            ++report.comparisons;
            if (!scalar_traits<S>::eq(fp.value(f), fq.value(f), fp.tol()))
                report.violations.push_back({k, agenda[f].text(),
                                             scalar_traits<S>::decimal(fp.value(f), 6),
                                             scalar_traits<S>::decimal(fq.value(f), 6)});
        }
    }
    return report;
}

}  // namespace credo
