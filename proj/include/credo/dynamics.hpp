#pragma once

#include <bit>
#include <string>
#include <vector>

#include "credo/pooling.hpp"

namespace credo {

// How values of formulas outside the agenda are obtained during updates.
//   Strict:    requires a rational judgment; uses tight extension bounds.
//   Algebraic: derives the value from the agenda constraint system by
//              linear elimination when it is determined; also works for
//              judgments without an extending measure. Falls back to
//              extension bounds for rational judgments.
enum class UpdatePolicy { Strict, Algebraic };

// ∧-stable subset of the agenda on which all individuals agree with
// nonzero values; stored as ascending agenda indices.
struct CommonGround {
    std::vector<size_t> members;
};

// Strict pairwise ∧-stability within a member subset (non-contingent
// conjunction results exempt).
bool and_stable_within(const Agenda& agenda, const std::vector<size_t>& members);

namespace detail {

// Gaussian elimination over the valuation space with a value attached to
// each row; answers "is this truth set's probability determined by the
// system, and if so what is it".
template <class S>
class ValueBasis {
public:
    ValueBasis(const Agenda& agenda, const std::vector<S>& values, S tol) : tol_(tol) {
        uint32_t n = agenda.language()->valuation_count();
        add(std::vector<S>(n, S(1)), S(1));
        for (size_t r : pair_representatives(agenda))
            add(indicator<S>(agenda[r].truthset()), values[r]);
    }

    // Augmented rows satisfy row . w + value = 0 on every solution w, so a
    // query that reduces to the zero row pins the target at `value`.
    std::optional<S> query(const TruthSet& ts) const {
        std::vector<S> row = indicator<S>(ts);
        S value{};
        reduce(row, value);
        for (const auto& x : row)
            if (!scalar_traits<S>::is_zero(x, tol_)) return std::nullopt;
        return value;
    }

private:
    void add(std::vector<S> row, S rhs) {
        S value = -rhs;
        reduce(row, value);
        size_t pivot = row.size();
        for (size_t j = 0; j < row.size(); ++j) {
            if (!scalar_traits<S>::is_zero(row[j], tol_)) {
                pivot = j;
                break;
            }
        }
        if (pivot == row.size()) return;  // dependent row
        S inv = S(1) / row[pivot];
        for (auto& x : row) x *= inv;
        value *= inv;
        rows_.push_back(std::move(row));
        rhs_.push_back(std::move(value));
        pivots_.push_back(pivot);
    }

    void reduce(std::vector<S>& row, S& value) const {
        for (size_t k = 0; k < rows_.size(); ++k) {
            S f = row[pivots_[k]];
            if (scalar_traits<S>::is_zero(f, tol_)) continue;
            for (size_t j = 0; j < row.size(); ++j) row[j] -= f * rows_[k][j];
            value -= f * rhs_[k];
        }
    }

    S tol_;
    std::vector<std::vector<S>> rows_;
    std::vector<S> rhs_;
    std::vector<size_t> pivots_;
};

// Probability of an arbitrary truth set under a judgment, if determined.
template <class S>
std::optional<S> truthset_value(const Judgment<S>& j, const TruthSet& ts, UpdatePolicy policy,
                                std::optional<ValueBasis<S>>& basis) {
    if (ts.empty()) return S{};
    if (ts.full()) return S(1);
    if (auto idx = j.agenda()->find(ts)) return j.value(*idx);
    if (policy == UpdatePolicy::Algebraic) {
        if (!basis) basis.emplace(*j.agenda(), j.values(), j.tol());
        if (auto v = basis->query(ts)) return v;
    }
    if (!j.rational()) return std::nullopt;
    Formula target = formula_from_truthset(ts, j.agenda()->language());
    Interval<S> bounds = extension_bounds(j, target);
    if (bounds.degenerate(j.tol())) return bounds.lo;
    return std::nullopt;
}

}  // namespace detail

// Largest ∧-stable agenda subset on which all individuals hold identical
// nonzero values. Ties in size resolve toward earlier agenda formulas.
template <class S>
CommonGround common_ground_of(const Profile<S>& p) {
    const Agenda& agenda = *p.agenda();
    S tol = p[0].tol();
    std::vector<size_t> equal;
    for (size_t k = 0; k < agenda.size(); ++k) {
        bool all_equal = true;
        for (size_t i = 1; i < p.size() && all_equal; ++i)
            all_equal = scalar_traits<S>::eq(p[i].value(k), p[0].value(k), tol);
        if (all_equal && !scalar_traits<S>::is_zero(p[0].value(k), tol)) equal.push_back(k);
    }
    size_t m = equal.size();
    if (m > 64) throw PreconditionError("common ground search limited to 64 agreeing formulas");

    // rel[i][j]: -1 conjunction exempt (non-contingent), -2 conjunction not
    // available in the agreeing set, k >= 0 conjunction equals equal[k]
    std::vector<std::vector<int>> rel(m, std::vector<int>(m, -1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            TruthSet conj = agenda[equal[i]].truthset() & agenda[equal[j]].truthset();
            if (conj.empty() || conj.full()) continue;
            int found = -2;
            for (size_t k = 0; k < m; ++k) {
                if (agenda[equal[k]].truthset() == conj) {
                    found = static_cast<int>(k);
                    break;
                }
            }
            rel[i][j] = rel[j][i] = found;
        }
    }

    uint64_t best = 0;
    int best_count = -1;
    auto search = [&](auto&& self, size_t pos, uint64_t chosen, uint64_t required) -> void {
        int count = std::popcount(chosen);
        if (count + static_cast<int>(m - pos) <= best_count) return;
        if (pos == m) {
            if (count > best_count) {
                best_count = count;
                best = chosen;
            }
            return;
        }
        // include equal[pos]
        bool ok = true;
        uint64_t next_required = required;
        for (size_t c = 0; c < pos && ok; ++c) {
            if (!((chosen >> c) & 1)) continue;
            int r = rel[c][pos];
            if (r == -1) continue;
            if (r == -2 || (static_cast<size_t>(r) < pos && !((chosen >> r) & 1)))
                ok = false;
            else if (static_cast<size_t>(r) > pos)
                next_required |= uint64_t{1} << r;
        }
        if (ok) self(self, pos + 1, chosen | (uint64_t{1} << pos), next_required);
        if (!((required >> pos) & 1)) self(self, pos + 1, chosen, required);
    };
    search(search, 0, 0, 0);

    CommonGround cg;
    for (size_t k = 0; k < m; ++k)
        if ((best >> k) & 1) cg.members.push_back(equal[k]);
    return cg;
}

// Profile membership in the domain induced by the common ground: identical
// nonzero values on every member.
template <class S>
bool in_common_ground_domain(const Profile<S>& p, const CommonGround& phi) {
    S tol = p[0].tol();
    for (size_t k : phi.members) {
        if (scalar_traits<S>::is_zero(p[0].value(k), tol)) return false;
        for (size_t i = 1; i < p.size(); ++i)
            if (!scalar_traits<S>::eq(p[i].value(k), p[0].value(k), tol)) return false;
    }
    return true;
}

// Bayesian conditioning: out(psi) = J(phi & psi) / J(phi) for every agenda
// psi. Values of conjunctions outside the agenda come from the policy; a
// value the agenda does not determine raises AmbiguousUpdate.
template <class S>
Judgment<S> bayes_update(const Judgment<S>& j, const Formula& phi,
                         UpdatePolicy policy = UpdatePolicy::Strict) {
    if (!(*phi.language() == *j.agenda()->language()))
        throw LanguageMismatch("learned formula uses a different language");
    if (policy == UpdatePolicy::Strict && !j.rational())
        throw PreconditionError("cannot update an irrational judgment under the strict policy");

    const Agenda& agenda = *j.agenda();
    std::optional<detail::ValueBasis<S>> basis;

    auto resolve = [&](const TruthSet& ts) -> S {
        if (auto v = detail::truthset_value(j, ts, policy, basis)) return *v;
        Formula f = formula_from_truthset(ts, agenda.language());
        if (j.rational()) {
            Interval<S> b = extension_bounds(j, f);
            throw AmbiguousUpdate(f.text(), scalar_traits<S>::decimal(b.lo, 6),
                                  scalar_traits<S>::decimal(b.hi, 6));
        }
        throw Error("undetermined-value", "probability of '" + f.text() +
                                              "' is not determined by the agenda values");
    };

    S denom = resolve(phi.truthset());
    if (scalar_traits<S>::is_zero(denom, j.tol())) throw ConditioningOnNull(phi.text());

    std::vector<S> out(agenda.size());
    for (size_t k = 0; k < agenda.size(); ++k)
        out[k] = resolve(phi.truthset() & agenda[k].truthset()) / denom;

    if (j.rational()) {
        const Measure<S>& cert = j.certificate();
        std::vector<S> weights(cert.weights.size(), S{});
        phi.truthset().for_each([&](uint32_t v) { weights[v] = cert.weights[v] / denom; });
        return Judgment<S>::with_certificate(j.agenda(), std::move(out),
                                             Measure<S>{agenda.language(), std::move(weights)},
                                             j.tol());
    }
    return Judgment<S>::from_values(j.agenda(), std::move(out), j.tol());
}

// Conditional probability enclosures [min, max] of psi given phi over all
// measures extending the judgment, one interval per agenda formula
// (Charnes-Cooper transform of the ratio program).
template <class S>
std::vector<Interval<S>> bayes_update_intervals(const Judgment<S>& j, const Formula& phi) {
    if (!j.rational())
        throw PreconditionError("interval update requires a rational judgment");
    const Agenda& agenda = *j.agenda();
    uint32_t n = agenda.language()->valuation_count();

    // variables: u_0..u_{n-1}, t
    std::vector<std::vector<S>> a;
    std::vector<S> b;
    for (size_t r : detail::pair_representatives(agenda)) {
        auto row = detail::indicator<S>(agenda[r].truthset());
        row.push_back(-j.value(r));
        a.push_back(std::move(row));
        b.push_back(S{});
    }
    std::vector<S> norm(n, S(1));
    norm.push_back(S(-1));
    a.push_back(std::move(norm));
    b.push_back(S{});
    auto cond = detail::indicator<S>(phi.truthset());
    cond.push_back(S{});
    a.push_back(std::move(cond));
    b.push_back(S(1));

    Simplex<S> lp(a, b, j.tol());
    std::vector<Interval<S>> out(agenda.size());
    for (size_t k = 0; k < agenda.size(); ++k) {
        TruthSet conj = phi.truthset() & agenda[k].truthset();
        if (conj.empty()) {
            out[k] = {S{}, S{}};
            continue;
        }
        std::vector<S> c = detail::indicator<S>(conj);
        c.push_back(S{});
        auto lo = lp.minimize(c);
        auto hi = lp.maximize(c);
        if (lo.status != Simplex<S>::Status::Optimal || hi.status != Simplex<S>::Status::Optimal)
            throw ConditioningOnNull(phi.text());
        out[k] = {lo.objective, hi.objective};
    }
    return out;
}

template <class S>
Profile<S> update_profile(const Profile<S>& p, const Formula& phi,
                          UpdatePolicy policy = UpdatePolicy::Strict) {
    std::vector<Judgment<S>> updated;
    updated.reserve(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        try {
            updated.push_back(bayes_update(p[i], phi, policy));
        } catch (const Error& e) {
            throw Error(e.code(), "individual " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return Profile<S>::make(std::move(updated), RequireRational::No);
}

template <class S>
Judgment<S> aggregate_then_update(const Profile<S>& p, const Weights& w, const Formula& phi,
                                  UpdatePolicy policy = UpdatePolicy::Strict) {
    Judgment<S> pooled = linear_pool(p, w);
    try {
        return bayes_update(pooled, phi, policy);
    } catch (const Error& e) {
        throw Error(e.code(), std::string("collective: ") + e.what());
    }
}

template <class S>
Judgment<S> update_then_aggregate(const Profile<S>& p, const Weights& w, const Formula& phi,
                                  UpdatePolicy policy = UpdatePolicy::Strict) {
    return linear_pool(update_profile(p, phi, policy), w);
}

// Largest absolute disagreement between the two composition orders across
// the agenda. Exactly zero in rational mode iff they agree everywhere.
template <class S>
S dynamic_rationality_gap(const Profile<S>& p, const Weights& w, const Formula& phi,
                          UpdatePolicy policy = UpdatePolicy::Strict) {
    Judgment<S> first = update_then_aggregate(p, w, phi, policy);
    Judgment<S> second = aggregate_then_update(p, w, phi, policy);
    S gap{};
    for (size_t k = 0; k < first.agenda()->size(); ++k) {
        S diff = scalar_traits<S>::abs(first.value(k) - second.value(k));
        if (diff > gap) gap = diff;
    }
    return gap;
}

template <class S>
struct PhiRow {
    std::string formula;
    std::vector<S> values;  // one per individual, after the update
    bool equal = false;
};

template <class S>
struct PhiPreservationReport {
    std::vector<PhiRow<S>> rows;
    bool preserved = true;
};

// Agreement rows for an already-updated profile.
template <class S>
PhiPreservationReport<S> phi_agreement(const Profile<S>& p, const CommonGround& phi) {
    PhiPreservationReport<S> report;
    S tol = p[0].tol();
    for (size_t k : phi.members) {
        PhiRow<S> row;
        row.formula = (*p.agenda())[k].text();
        row.equal = true;
        for (size_t i = 0; i < p.size(); ++i) {
            row.values.push_back(p[i].value(k));
            if (!scalar_traits<S>::eq(p[i].value(k), p[0].value(k), tol)) row.equal = false;
        }
        if (!row.equal) report.preserved = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

// After everyone learns `learned`, values on every common ground member
// must still coincide across individuals.
template <class S>
PhiPreservationReport<S> check_phi_preserving(const Profile<S>& p, const CommonGround& phi,
                                              const Formula& learned,
                                              UpdatePolicy policy = UpdatePolicy::Strict) {
    Profile<S> updated = update_profile(p, learned, policy);
    return phi_agreement(updated, phi);
}

// Formulas the session may still learn: common ground members and their
// negations whose shared value is nonzero (conditioning divides by it).
template <class S>
std::vector<Formula> learnable_set(const Profile<S>& p, const CommonGround& phi) {
    const Agenda& agenda = *p.agenda();
    S tol = p[0].tol();
    std::vector<Formula> out;
    std::vector<TruthSet> seen;
    auto admit = [&](size_t idx) {
        const TruthSet& ts = agenda[idx].truthset();
        for (const auto& s : seen)
            if (s == ts) return;
        for (size_t i = 1; i < p.size(); ++i)
            if (!scalar_traits<S>::eq(p[i].value(idx), p[0].value(idx), tol)) return;
        if (scalar_traits<S>::is_zero(p[0].value(idx), tol)) return;
        seen.push_back(ts);
        out.push_back(agenda[idx]);
    };
    for (size_t k : phi.members) {
        admit(k);
        admit(agenda.complement_of(k));
    }
    return out;
}

template <class S>
struct SessionState {
    Profile<S> profile;
    CommonGround phi;
    Weights weights;
    Judgment<S> collective;

    static SessionState make(Profile<S> profile, CommonGround phi, Weights weights) {
        if (weights.size() != profile.size())
            throw PreconditionError("weight count does not match profile size");
        for (size_t k : phi.members)
            if (k >= profile.agenda()->size())
                throw PreconditionError("common ground member out of range");
        if (!and_stable_within(*profile.agenda(), phi.members))
            throw PreconditionError("common ground is not conjunction-stable");
        if (!in_common_ground_domain(profile, phi))
            throw PreconditionError(
                "profile is outside the common ground domain (values differ or are zero)");
        Judgment<S> collective = linear_pool(profile, weights);
        return SessionState{std::move(profile), std::move(phi), std::move(weights),
                            std::move(collective)};
    }
};

template <class S>
struct TraceStep {
    size_t step;
    Formula learned;
    S gap;
    bool gap_zero;
    PhiPreservationReport<S> phi_report;
    Judgment<S> collective;
    std::vector<Formula> learnable;
};

template <class S>
struct Trace {
    std::vector<TraceStep<S>> steps;
    SessionState<S> final_state;
};

// Fair-learning fold: applies events in order, gating each on the current
// learnable set, and records both composition orders per step.
template <class S>
Trace<S> run_sequence(SessionState<S> state, const std::vector<Formula>& events,
                      UpdatePolicy policy = UpdatePolicy::Strict) {
    std::vector<TraceStep<S>> steps;
    for (size_t e = 0; e < events.size(); ++e) {
        const Formula& learned = events[e];
        auto admissible = learnable_set(state.profile, state.phi);
        bool ok = false;
        for (const auto& f : admissible)
            if (f.truthset() == learned.truthset()) ok = true;
        if (!ok) {
            bool in_ground = false;
            for (size_t k : state.phi.members) {
                const TruthSet& ts = state.profile.agenda()->formulas()[k].truthset();
                if (ts == learned.truthset() || (~ts) == learned.truthset()) in_ground = true;
            }
            throw InadmissibleEvent(
                e + 1, in_ground ? "'" + learned.text() + "' has shared probability 0"
                                 : "'" + learned.text() + "' is outside the common ground");
        }

        Judgment<S> agg_upd = aggregate_then_update(state.profile, state.weights, learned, policy);
        Profile<S> updated = update_profile(state.profile, learned, policy);
        Judgment<S> upd_agg = linear_pool(updated, state.weights);
        S gap{};
        for (size_t k = 0; k < updated.agenda()->size(); ++k) {
            S diff = scalar_traits<S>::abs(upd_agg.value(k) - agg_upd.value(k));
            if (diff > gap) gap = diff;
        }
        bool gap_zero = scalar_traits<S>::is_zero(gap, upd_agg.tol());
        steps.push_back(TraceStep<S>{e + 1, learned, gap, gap_zero,
                                     phi_agreement(updated, state.phi), upd_agg,
                                     learnable_set(updated, state.phi)});

        state.profile = std::move(updated);
        state.collective = std::move(upd_agg);
    }
    return Trace<S>{std::move(steps), std::move(state)};
}

}  // namespace credo
