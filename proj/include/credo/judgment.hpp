#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "credo/agenda.hpp"
#include "credo/lp.hpp"

namespace credo {

// Full probability distribution over the valuations of a language.
template <class S>
struct Measure {
    LanguagePtr lang;
    std::vector<S> weights;  // one per valuation

    static Measure make(LanguagePtr lang, std::vector<S> weights,
                        S tol = scalar_traits<S>::default_tol()) {
        if (weights.size() != lang->valuation_count())
            throw PreconditionError("measure weight count does not match the language");
        S sum{};
        for (const auto& w : weights) {
            if (!scalar_traits<S>::leq(S{}, w, tol)) throw PreconditionError("negative weight");
            sum += w;
        }
        if (!scalar_traits<S>::eq(sum, S(1), tol))
            throw PreconditionError("measure weights do not sum to 1");
        return Measure{std::move(lang), std::move(weights)};
    }

    S mass(const TruthSet& ts) const {
        S total{};
        ts.for_each([&](uint32_t v) { total += weights[v]; });
        return total;
    }
};

template <class S>
struct Interval {
    S lo{}, hi{};
    bool degenerate(S tol = scalar_traits<S>::default_tol()) const {
        return scalar_traits<S>::eq(lo, hi, tol);
    }
};

template <class S>
struct RationalityResult {
    bool rational = false;
    std::optional<Measure<S>> certificate;
    // best-effort irreducible infeasible subset, as agenda indices of the
    // complement-pair representatives involved
    std::vector<size_t> infeasible_subset;
};

// Probability assignment over an agenda. Immutable; the rationality status
// (certificate or infeasibility witness) is resolved when the judgment is
// built and cached inside the value.
template <class S>
class Judgment {
public:
    // Validates structure (domain, range, complement law), then decides
    // rationality by LP feasibility over the valuation weights.
    static Judgment from_values(AgendaPtr agenda, std::vector<S> values,
                                S tol = scalar_traits<S>::default_tol());

    // Induces values from a full measure; rational by construction.
    static Judgment from_measure(const Measure<S>& m, AgendaPtr agenda,
                                 S tol = scalar_traits<S>::default_tol());

    // For outputs whose certificate is already known (pooling, updating).
    static Judgment with_certificate(AgendaPtr agenda, std::vector<S> values, Measure<S> cert,
                                     S tol = scalar_traits<S>::default_tol());

    const AgendaPtr& agenda() const { return agenda_; }
    const std::vector<S>& values() const { return values_; }
    const S& value(size_t i) const { return values_[i]; }
    S tol() const { return tol_; }

    // value of a formula that must match an agenda member
    const S& value_of(const Formula& f) const {
        auto idx = agenda_->find(f.truthset());
        if (!idx) throw PreconditionError("formula '" + f.text() + "' is not in the agenda");
        return values_[*idx];
    }

    bool rational() const { return rationality_.rational; }
    const RationalityResult<S>& rationality() const { return rationality_; }
    const Measure<S>& certificate() const {
        if (!rationality_.certificate) throw PreconditionError("judgment has no certificate");
        return *rationality_.certificate;
    }

private:
    Judgment() = default;

    void validate_structure() const;

    AgendaPtr agenda_;
    std::vector<S> values_;
    S tol_{};
    RationalityResult<S> rationality_;
};

namespace detail {

// One constraint row per complement pair (the representative is the member
// with the smaller index); the complement row is implied by the complement
// law and normalization.
inline std::vector<size_t> pair_representatives(const Agenda& agenda) {
    std::vector<size_t> reps;
    for (size_t i = 0; i < agenda.size(); ++i)
        if (i <= agenda.complement_of(i)) reps.push_back(i);
    return reps;
}

template <class S>
std::vector<S> indicator(const TruthSet& ts) {
    std::vector<S> row(ts.size(), S{});
    ts.for_each([&](uint32_t v) { row[v] = S(1); });
    return row;
}

// system {w >= 0, sum w = 1, w[ts(rep)] = value(rep)} for the given pairs
template <class S>
struct System {
    std::vector<std::vector<S>> a;
    std::vector<S> b;

    System(const Agenda& agenda, const std::vector<S>& values, const std::vector<size_t>& reps) {
        uint32_t n = agenda.language()->valuation_count();
        a.push_back(std::vector<S>(n, S(1)));
        b.push_back(S(1));
        for (size_t r : reps) {
            a.push_back(indicator<S>(agenda[r].truthset()));
            b.push_back(values[r]);
        }
    }
};

}  // namespace detail

// Decides LP feasibility of extending `values` to a full measure. On
// failure, a deletion filter shrinks the violated pair constraints to an
// irreducible subset.
template <class S>
RationalityResult<S> resolve_rationality(const Agenda& agenda, const std::vector<S>& values,
                                         S tol = scalar_traits<S>::default_tol()) {
    auto reps = detail::pair_representatives(agenda);
    detail::System<S> sys(agenda, values, reps);
    Simplex<S> lp(sys.a, sys.b, tol);
    RationalityResult<S> result;
    if (auto w = lp.find_feasible()) {
        result.rational = true;
        result.certificate = Measure<S>{agenda.language(), std::move(*w)};
        return result;
    }

    // deletion filter: drop a pair constraint whenever the rest stays
    // infeasible; what remains is irreducible
    std::vector<size_t> active = reps;
    for (size_t k = 0; k < active.size();) {
        std::vector<size_t> trial = active;
        trial.erase(trial.begin() + static_cast<ptrdiff_t>(k));
        detail::System<S> sub(agenda, values, trial);
        if (!Simplex<S>(sub.a, sub.b, tol).find_feasible()) {
            active = std::move(trial);
        } else {
            ++k;
        }
    }
    result.infeasible_subset = std::move(active);
    return result;
}

template <class S>
void Judgment<S>::validate_structure() const {
    if (values_.size() != agenda_->size())
        throw JudgmentError("judgment must assign a value to every agenda formula");
    for (size_t i = 0; i < values_.size(); ++i) {
        if (!scalar_traits<S>::leq(S{}, values_[i], tol_) ||
            !scalar_traits<S>::leq(values_[i], S(1), tol_))
            throw JudgmentError("value for '" + (*agenda_)[i].text() + "' is outside [0,1]");
    }
    for (size_t i = 0; i < values_.size(); ++i) {
        size_t c = agenda_->complement_of(i);
        if (!scalar_traits<S>::eq(values_[i] + values_[c], S(1), tol_))
            throw JudgmentError("complement law violated: J(" + (*agenda_)[i].text() + ") + J(" +
                                (*agenda_)[c].text() + ") != 1");
    }
}

template <class S>
Judgment<S> Judgment<S>::from_values(AgendaPtr agenda, std::vector<S> values, S tol) {
    Judgment j;
    j.agenda_ = std::move(agenda);
    j.values_ = std::move(values);
    j.tol_ = tol;
    j.validate_structure();
    j.rationality_ = resolve_rationality(*j.agenda_, j.values_, tol);
    return j;
}

template <class S>
Judgment<S> Judgment<S>::from_measure(const Measure<S>& m, AgendaPtr agenda, S tol) {
    if (!(*m.lang == *agenda->language()))
        throw LanguageMismatch("measure and agenda use different languages");
    Judgment j;
    j.agenda_ = std::move(agenda);
    j.tol_ = tol;
    j.values_.reserve(j.agenda_->size());
    for (const auto& f : j.agenda_->formulas()) j.values_.push_back(m.mass(f.truthset()));
    j.rationality_.rational = true;
    j.rationality_.certificate = m;
    return j;
}

template <class S>
Judgment<S> Judgment<S>::with_certificate(AgendaPtr agenda, std::vector<S> values, Measure<S> cert,
                                          S tol) {
    Judgment j;
    j.agenda_ = std::move(agenda);
    j.values_ = std::move(values);
    j.tol_ = tol;
    j.validate_structure();
    j.rationality_.rational = true;
    j.rationality_.certificate = std::move(cert);
    return j;
}

template <class S>
const RationalityResult<S>& check_rational(const Judgment<S>& j) {
    return j.rationality();
}

// Min and max of the target's probability over every measure that extends
// the judgment (two LP solves).
template <class S>
Interval<S> extension_bounds(const Judgment<S>& j, const Formula& target) {
    if (!j.rational())
        throw PreconditionError("extension bounds require a rational judgment");
    if (!(*target.language() == *j.agenda()->language()))
        throw LanguageMismatch("target formula uses a different language");
    auto reps = detail::pair_representatives(*j.agenda());
    detail::System<S> sys(*j.agenda(), j.values(), reps);
    Simplex<S> lp(sys.a, sys.b, j.tol());
    std::vector<S> c = detail::indicator<S>(target.truthset());
    auto lo = lp.minimize(c);
    auto hi = lp.maximize(c);
    if (lo.status != Simplex<S>::Status::Optimal || hi.status != Simplex<S>::Status::Optimal)
        throw Error("internal", "bounds LP failed on a rational judgment");
    return {lo.objective, hi.objective};
}

// Whether some extension assigns probability 1 to phi_star.
template <class S>
bool consistent_with_truth(const Judgment<S>& j, const Formula& phi_star) {
    if (!(*phi_star.language() == *j.agenda()->language()))
        throw LanguageMismatch("formula uses a different language");
    auto reps = detail::pair_representatives(*j.agenda());
    detail::System<S> sys(*j.agenda(), j.values(), reps);
    sys.a.push_back(detail::indicator<S>(phi_star.truthset()));
    sys.b.push_back(S(1));
    return Simplex<S>(sys.a, sys.b, j.tol()).find_feasible().has_value();
}

template <class S>
Judgment<S> judgment_from_measure(const Measure<S>& m, AgendaPtr agenda,
                                  S tol = scalar_traits<S>::default_tol()) {
    return Judgment<S>::from_measure(m, std::move(agenda), tol);
}

// True iff the agenda constraints pin down one joint distribution: the
// extension bounds of every valuation singleton are degenerate.
template <class S>
bool unique_joint(const Judgment<S>& j) {
    const auto& lang = j.agenda()->language();
    for (uint32_t v = 0; v < lang->valuation_count(); ++v) {
        Formula chi = formula_from_truthset(TruthSet::single(lang->valuation_count(), v), lang);
        if (!extension_bounds(j, chi).degenerate(j.tol())) return false;
    }
    return true;
}

}  // namespace credo
