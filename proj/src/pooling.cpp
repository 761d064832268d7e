#include "credo/pooling.hpp"

#include <unordered_set>

namespace credo {

std::vector<Formula> default_consensus_candidates(const Agenda& agenda, uint64_t seed,
                                                  bool* exhaustive) {
    const LanguagePtr& lang = agenda.language();
    uint32_t n = lang->valuation_count();
    std::vector<Formula> out;
    if (lang->atoms().size() <= 4) {
        if (exhaustive) *exhaustive = true;
        out.reserve(size_t{1} << n);
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            TruthSet ts(n);
            for (uint32_t v = 0; v < n; ++v)
                if ((mask >> v) & 1) ts.set(v);
            out.push_back(formula_from_truthset(ts, lang));
        }
        return out;
    }
    if (exhaustive) *exhaustive = false;
    out = agenda.formulas();
    std::mt19937_64 rng(seed);
    std::unordered_set<TruthSet, TruthSetHash> seen;
    for (const auto& f : out) seen.insert(f.truthset());
    while (seen.size() < agenda.size() + 512) {
        TruthSet ts(n);
        for (uint32_t v = 0; v < n; ++v)
            if (rng() & 1) ts.set(v);
        if (seen.insert(ts).second) out.push_back(formula_from_truthset(ts, lang));
    }
    return out;
}

}  // namespace credo
