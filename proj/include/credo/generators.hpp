#pragma once

// Deterministic random instance generators for the property suites. Every
// case derives its own engine from (master seed, case index), so results do
// not depend on scheduling.

#include <optional>
#include <random>

#include "credo/dynamics.hpp"

namespace credo::gen {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::mt19937_64 case_rng(uint64_t seed, uint64_t index) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(index + 1)));
}

// nonempty proper subset of the valuations
TruthSet random_truthset(std::mt19937_64& rng, uint32_t valuation_count);

// Strictly positive random measure with integer numerators below
// `granularity`.
Measure<Rat> random_positive_measure(const LanguagePtr& lang, std::mt19937_64& rng,
                                     unsigned granularity = 1u << 12);

// Negation- and conjunction-closed agenda generated by two random seeds
// (the full subalgebra they generate, tautology and contradiction left out).
AgendaPtr random_and_stable_agenda(const LanguagePtr& lang, std::mt19937_64& rng);

// A profile inside the common ground domain by construction: a shared
// measure fixes the mass of every region the common ground distinguishes,
// and each individual redistributes freely within regions.
struct DomainInstance {
    AgendaPtr agenda;
    Profile<Rat> profile;
    CommonGround phi;
    Weights weights;
    Formula learned;  // member of phi, shared value > 0
};
DomainInstance random_domain_instance(const LanguagePtr& lang, std::mt19937_64& rng);

// A profile violating agreement on the learned formula: independent
// positive measures per individual, non-dictatorial weights, and a learned
// formula with differing values and at least one nontrivial conjunction
// partner in the agenda.
struct OffDomainInstance {
    AgendaPtr agenda;
    Profile<Rat> profile;
    Weights weights;
    Formula learned;
};
OffDomainInstance random_off_domain_instance(const LanguagePtr& lang, std::mt19937_64& rng);

// Profile pair sharing one agenda where each individual keeps the values of
// a random formula subset (certificate resampled within the subset's
// partition regions), for independence checks.
std::pair<Profile<Rat>, Profile<Rat>> random_profile_pair(const LanguagePtr& lang,
                                                          std::mt19937_64& rng);

// Random judgment values over an agenda: measure-induced when `coherent`,
// otherwise perturbed along a complement pair.
std::vector<Rat> random_judgment_values(const Agenda& agenda, std::mt19937_64& rng, bool coherent);

// Companion profile for independence checks over an existing rational
// profile: keeps every individual's values on a random formula subset and
// resamples the rest of each certificate within the subset's regions.
Profile<Rat> region_resampled_profile(const Profile<Rat>& p, std::mt19937_64& rng);

}  // namespace credo::gen
