#include "credo/generators.hpp"

#include <algorithm>
#include <map>

namespace credo::gen {

namespace {

size_t pick(std::mt19937_64& rng, size_t n) { return static_cast<size_t>(rng() % n); }

// masses for the valuations of `region`, scaled to total `mass`
void fill_region(std::vector<Rat>& weights, const std::vector<uint32_t>& region, const Rat& mass,
                 std::mt19937_64& rng) {
    if (mass == 0) {
        for (uint32_t v : region) weights[v] = 0;
        return;
    }
    std::vector<unsigned> u(region.size());
    unsigned long long sum = 0;
    while (sum == 0) {
        for (auto& x : u) {
            x = static_cast<unsigned>(rng() % 64);
            sum += x;
        }
    }
    for (size_t k = 0; k < region.size(); ++k)
        weights[region[k]] = mass * Rat(u[k], 1) / Rat(static_cast<unsigned>(sum), 1);
}

// conjunction closure of `members` (agenda indices) inside an and-stable
// agenda
std::vector<size_t> close_under_conjunction(const Agenda& agenda, std::vector<size_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    bool changed = true;
    while (changed) {
        changed = false;
        size_t n = members.size();
        for (size_t a = 0; a < n; ++a) {
            for (size_t b = a; b < n; ++b) {
                TruthSet conj = agenda[members[a]].truthset() & agenda[members[b]].truthset();
                if (conj.empty() || conj.full()) continue;
                size_t idx = *agenda.find(conj);
                if (!std::binary_search(members.begin(), members.end(), idx)) {
                    members.insert(std::lower_bound(members.begin(), members.end(), idx), idx);
                    changed = true;
                }
            }
        }
    }
    return members;
}

Weights random_weights(std::mt19937_64& rng, size_t n, bool forbid_dictator) {
    for (;;) {
        std::vector<unsigned> u(n);
        unsigned long long sum = 0;
        for (auto& x : u) {
            x = static_cast<unsigned>(rng() % 64);
            sum += x;
        }
        if (sum == 0) continue;
        if (forbid_dictator) {
            size_t positive = 0;
            for (auto x : u)
                if (x > 0) ++positive;
            if (positive < 2) continue;
        }
        std::vector<Rat> w;
        for (auto x : u) w.emplace_back(Rat(x, 1) / Rat(static_cast<unsigned>(sum), 1));
        return Weights::make(std::move(w));
    }
}

// partition of the valuations by membership signature over the given truth
// sets
std::vector<std::vector<uint32_t>> regions_of(uint32_t valuation_count,
                                              const std::vector<const TruthSet*>& sets) {
    std::map<std::vector<bool>, std::vector<uint32_t>> by_signature;
    for (uint32_t v = 0; v < valuation_count; ++v) {
        std::vector<bool> sig;
        sig.reserve(sets.size());
        for (const TruthSet* ts : sets) sig.push_back(ts->test(v));
        by_signature[sig].push_back(v);
    }
    std::vector<std::vector<uint32_t>> out;
    for (auto& [sig, vs] : by_signature) out.push_back(std::move(vs));
    return out;
}

}  // namespace

TruthSet random_truthset(std::mt19937_64& rng, uint32_t valuation_count) {
    for (;;) {
        TruthSet ts(valuation_count);
        for (uint32_t v = 0; v < valuation_count; ++v)
            if (rng() & 1) ts.set(v);
        if (!ts.empty() && !ts.full()) return ts;
    }
}

Measure<Rat> random_positive_measure(const LanguagePtr& lang, std::mt19937_64& rng,
                                     unsigned granularity) {
    uint32_t n = lang->valuation_count();
    std::vector<unsigned> u(n);
    unsigned long long sum = 0;
    for (auto& x : u) {
        x = 1 + static_cast<unsigned>(rng() % granularity);
        sum += x;
    }
    std::vector<Rat> w;
    w.reserve(n);
    for (auto x : u) w.emplace_back(Rat(x, 1) / Rat(static_cast<unsigned long long>(sum), 1));
    return Measure<Rat>::make(lang, std::move(w));
}

AgendaPtr random_and_stable_agenda(const LanguagePtr& lang, std::mt19937_64& rng) {
    uint32_t n = lang->valuation_count();
    for (;;) {
        TruthSet t1 = random_truthset(rng, n);
        TruthSet t2 = random_truthset(rng, n);
        if (t1 == t2 || t1 == ~t2) continue;
        AgendaPtr base = Agenda::build(
            {formula_from_truthset(t1, lang), formula_from_truthset(t2, lang)}, true);
        AgendaPtr closed = and_closure(*base);
        if (closed->size() >= 4) return closed;
    }
}

DomainInstance random_domain_instance(const LanguagePtr& lang, std::mt19937_64& rng) {
    AgendaPtr agenda = random_and_stable_agenda(lang, rng);
    Measure<Rat> shared = random_positive_measure(lang, rng);
    Judgment<Rat> shared_judgment = judgment_from_measure(shared, agenda);

    // pick 1..3 contingent members and close under conjunction; every value
    // is nonzero because the shared measure is strictly positive
    std::vector<size_t> contingent;
    for (size_t k = 0; k < agenda->size(); ++k)
        if (is_contingent((*agenda)[k])) contingent.push_back(k);
    std::vector<size_t> seeds;
    size_t want = 1 + pick(rng, 3);
    for (size_t k = 0; k < want; ++k) seeds.push_back(contingent[pick(rng, contingent.size())]);
    CommonGround phi{close_under_conjunction(*agenda, std::move(seeds))};

    std::vector<const TruthSet*> sets;
    for (size_t k : phi.members) sets.push_back(&(*agenda)[k].truthset());
    auto regions = regions_of(lang->valuation_count(), sets);

    size_t individuals = 2 + pick(rng, 4);
    std::vector<Judgment<Rat>> judgments;
    for (size_t i = 0; i < individuals; ++i) {
        std::vector<Rat> w(lang->valuation_count());
        for (const auto& region : regions) {
            Rat mass = 0;
            for (uint32_t v : region) mass += shared.weights[v];
            fill_region(w, region, mass, rng);
        }
        judgments.push_back(
            judgment_from_measure(Measure<Rat>::make(lang, std::move(w)), agenda));
    }
    Profile<Rat> profile = Profile<Rat>::make(std::move(judgments));

    Formula learned = (*agenda)[phi.members[pick(rng, phi.members.size())]];
    Weights weights = random_weights(rng, individuals, false);
    return DomainInstance{agenda, std::move(profile), std::move(phi), std::move(weights),
                          std::move(learned)};
}

OffDomainInstance random_off_domain_instance(const LanguagePtr& lang, std::mt19937_64& rng) {
    for (;;) {
        AgendaPtr agenda = random_and_stable_agenda(lang, rng);
        size_t individuals = 2 + pick(rng, 4);
        std::vector<Judgment<Rat>> judgments;
        for (size_t i = 0; i < individuals; ++i)
            judgments.push_back(
                judgment_from_measure(random_positive_measure(lang, rng), agenda));
        Profile<Rat> profile = Profile<Rat>::make(std::move(judgments));

        // learned candidates: contingent, disagreed on, and with a partner
        // whose conjunction is a proper nontrivial overlap
        std::vector<size_t> candidates;
        for (size_t k = 0; k < agenda->size(); ++k) {
            if (!is_contingent((*agenda)[k])) continue;
            bool differs = false;
            for (size_t i = 1; i < profile.size(); ++i)
                if (profile[i].value(k) != profile[0].value(k)) differs = true;
            if (!differs) continue;
            const TruthSet& ts = (*agenda)[k].truthset();
            bool nontrivial = false;
            for (size_t j = 0; j < agenda->size() && !nontrivial; ++j) {
                TruthSet conj = ts & (*agenda)[j].truthset();
                if (!conj.empty() && conj != ts && conj != (*agenda)[j].truthset())
                    nontrivial = true;
            }
            if (nontrivial) candidates.push_back(k);
        }
        if (candidates.empty()) continue;
        Formula learned = (*agenda)[candidates[pick(rng, candidates.size())]];
        Weights weights = random_weights(rng, individuals, true);
        return OffDomainInstance{agenda, std::move(profile), std::move(weights),
                                 std::move(learned)};
    }
}

std::pair<Profile<Rat>, Profile<Rat>> random_profile_pair(const LanguagePtr& lang,
                                                          std::mt19937_64& rng) {
    AgendaPtr agenda = random_and_stable_agenda(lang, rng);
    size_t individuals = 2 + pick(rng, 3);

    // formulas whose values every individual keeps across the pair
    std::vector<size_t> kept;
    for (size_t k = 0; k < agenda->size(); ++k)
        if (rng() % 3 == 0) kept.push_back(k);
    std::vector<const TruthSet*> sets;
    for (size_t k : kept) sets.push_back(&(*agenda)[k].truthset());
    auto regions = regions_of(lang->valuation_count(), sets);

    std::vector<Judgment<Rat>> left, right;
    for (size_t i = 0; i < individuals; ++i) {
        Measure<Rat> base = random_positive_measure(lang, rng);
        std::vector<Rat> resampled(lang->valuation_count());
        for (const auto& region : regions) {
            Rat mass = 0;
            for (uint32_t v : region) mass += base.weights[v];
            fill_region(resampled, region, mass, rng);
        }
        left.push_back(judgment_from_measure(base, agenda));
        right.push_back(
            judgment_from_measure(Measure<Rat>::make(lang, std::move(resampled)), agenda));
    }
    return {Profile<Rat>::make(std::move(left)), Profile<Rat>::make(std::move(right))};
}

Profile<Rat> region_resampled_profile(const Profile<Rat>& p, std::mt19937_64& rng) {
    if (!p.all_rational())
        throw PreconditionError("resampling needs certificates for every individual");
    const Agenda& agenda = *p.agenda();
    const LanguagePtr& lang = agenda.language();
    std::vector<const TruthSet*> sets;
    for (size_t k = 0; k < agenda.size(); ++k)
        if (rng() % 3 == 0) sets.push_back(&agenda[k].truthset());
    auto regions = regions_of(lang->valuation_count(), sets);

    std::vector<Judgment<Rat>> resampled;
    for (size_t i = 0; i < p.size(); ++i) {
        const Measure<Rat>& base = p[i].certificate();
        std::vector<Rat> w(lang->valuation_count());
        for (const auto& region : regions) {
            Rat mass = 0;
            for (uint32_t v : region) mass += base.weights[v];
            fill_region(w, region, mass, rng);
        }
        resampled.push_back(judgment_from_measure(Measure<Rat>::make(lang, std::move(w)),
                                                  p.agenda()));
    }
    return Profile<Rat>::make(std::move(resampled));
}

std::vector<Rat> random_judgment_values(const Agenda& agenda, std::mt19937_64& rng,
                                        bool coherent) {
    const LanguagePtr& lang = agenda.language();
    uint32_t n = lang->valuation_count();
    std::vector<unsigned> u(n);
    unsigned long long sum = 0;
    while (sum == 0) {
        for (auto& x : u) {
            x = static_cast<unsigned>(rng() % 32);
            sum += x;
        }
    }
    std::vector<Rat> w;
    for (auto x : u) w.emplace_back(Rat(x, 1) / Rat(static_cast<unsigned long long>(sum), 1));
    Measure<Rat> m{lang, std::move(w)};
    std::vector<Rat> values(agenda.size());
    for (size_t k = 0; k < agenda.size(); ++k) values[k] = m.mass(agenda[k].truthset());
    if (!coherent) {
        // complement-preserving nudge; usually breaks feasibility
        size_t k = pick(rng, agenda.size());
        Rat delta(1 + static_cast<int>(rng() % 5), 20);
        Rat moved = values[k] + delta;
        if (moved > 1) moved = values[k] >= delta ? values[k] - delta : values[k];
        values[k] = moved;
        values[agenda.complement_of(k)] = Rat(1) - moved;
    }
    return values;
}

}  // namespace credo::gen
