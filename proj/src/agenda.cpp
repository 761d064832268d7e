#include "credo/agenda.hpp"

#include <algorithm>

#include "credo/rational.hpp"

namespace credo {

namespace {

// Reduced row basis over Q for span-membership queries.
class RowBasis {
public:
    explicit RowBasis(size_t cols) : cols_(cols) {}

    void add(std::vector<Rat> row) {
        if (reduce(row)) return;  // dependent
        size_t pivot = 0;
        while (pivot < cols_ && row[pivot] == 0) ++pivot;
        Rat inv = Rat(1) / row[pivot];
        for (auto& x : row) x *= inv;
        rows_.push_back(std::move(row));
        pivots_.push_back(pivot);
    }

    bool contains(std::vector<Rat> row) const { return reduce(row); }

private:
    // eliminates `row` against the basis; true iff it reduces to zero
    bool reduce(std::vector<Rat>& row) const {
        for (size_t k = 0; k < rows_.size(); ++k) {
            const Rat& f = row[pivots_[k]];
            if (f == 0) continue;
            Rat factor = f;
            for (size_t j = 0; j < cols_; ++j) row[j] -= factor * rows_[k][j];
        }
        return std::all_of(row.begin(), row.end(), [](const Rat& x) { return x == 0; });
    }

    size_t cols_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<size_t> pivots_;
};

std::vector<Rat> indicator_row(const TruthSet& ts) {
    std::vector<Rat> row(ts.size(), Rat(0));
    ts.for_each([&](uint32_t v) { row[v] = 1; });
    return row;
}

// one element per complement pair: (index of representative, index of negation)
std::vector<std::pair<size_t, size_t>> complement_pairs(const Agenda& agenda) {
    std::vector<std::pair<size_t, size_t>> pairs;
    std::vector<bool> claimed(agenda.size(), false);
    for (size_t i = 0; i < agenda.size(); ++i) {
        if (claimed[i]) continue;
        size_t j = agenda.complement_of(i);
        claimed[i] = claimed[j] = true;
        pairs.emplace_back(i, j);
    }
    return pairs;
}

bool comparable(const TruthSet& a, const TruthSet& b) {
    return a.subset_of(b) || b.subset_of(a);
}

}  // namespace

std::shared_ptr<const Agenda> Agenda::build(std::vector<Formula> formulas, bool auto_close) {
    if (formulas.empty()) throw AgendaError("agenda needs at least one formula");
    const LanguagePtr& lang = formulas.front().language();
    for (const auto& f : formulas)
        if (!f.same_language(formulas.front()))
            throw LanguageMismatch("agenda formulas use different languages");

    auto agenda = std::shared_ptr<Agenda>(new Agenda());
    agenda->lang_ = lang;

    auto add = [&](const Formula& f) -> bool {
        if (agenda->index_.contains(f.truthset())) return false;
        agenda->index_.emplace(f.truthset(), agenda->formulas_.size());
        agenda->formulas_.push_back(f);
        return true;
    };

    for (const auto& f : formulas) add(f);

    // negation closure
    std::vector<std::string> missing;
    for (size_t i = 0, n = agenda->formulas_.size(); i < n; ++i) {
        const Formula& f = agenda->formulas_[i];
        if (agenda->index_.contains(~f.truthset())) continue;
        if (auto_close) {
            add(negate(f));
        } else {
            missing.push_back(f.text());
        }
    }
    if (!missing.empty()) {
        std::string list;
        for (const auto& s : missing) list += (list.empty() ? "" : ", ") + s;
        throw AgendaError("agenda is not closed under negation; missing negations of: " + list);
    }

    agenda->complement_.resize(agenda->formulas_.size());
    for (size_t i = 0; i < agenda->formulas_.size(); ++i)
        agenda->complement_[i] = agenda->index_.at(~agenda->formulas_[i].truthset());

    for (const auto& f : agenda->formulas_)
        if (is_contingent(f)) ++agenda->contingent_count_;

    // strict pairwise and-stability, plus the determined-value relaxation
    agenda->and_stable_strict_ = true;
    std::vector<std::pair<size_t, size_t>> unexplained;
    std::vector<TruthSet> unexplained_ts;
    for (size_t i = 0; i < agenda->formulas_.size(); ++i) {
        for (size_t j = i + 1; j < agenda->formulas_.size(); ++j) {
            TruthSet conj = agenda->formulas_[i].truthset() & agenda->formulas_[j].truthset();
            if (conj.empty() || conj.full()) continue;
            if (agenda->index_.contains(conj)) continue;
            if (agenda->and_stable_strict_) {
                agenda->and_stable_strict_ = false;
                agenda->missing_conjunction_ = std::make_pair(i, j);
            }
            unexplained.emplace_back(i, j);
            unexplained_ts.push_back(std::move(conj));
        }
    }
    agenda->and_stable_ = true;
    if (!unexplained.empty()) {
        RowBasis basis(lang->valuation_count());
        basis.add(std::vector<Rat>(lang->valuation_count(), Rat(1)));  // normalization
        for (const auto& f : agenda->formulas_) basis.add(indicator_row(f.truthset()));
        for (const auto& ts : unexplained_ts) {
            if (!basis.contains(indicator_row(ts))) {
                agenda->and_stable_ = false;
                break;
            }
        }
    }

    return agenda;
}

std::optional<size_t> Agenda::find(const TruthSet& ts) const {
    auto it = index_.find(ts);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const NestednessReport& Agenda::nestedness() const {
    std::call_once(nested_once_, [this] {
        auto pairs = complement_pairs(*this);
        // try small truth sets first; extreme sets constrain the chain most
        std::sort(pairs.begin(), pairs.end(), [&](const auto& p, const auto& q) {
            auto side = [&](const std::pair<size_t, size_t>& pr) {
                uint32_t c = formulas_[pr.first].truthset().count();
                return std::min(c, formulas_[pr.first].truthset().size() - c);
            };
            return side(p) < side(q);
        });

        std::vector<size_t> chosen;
        auto search = [&](auto&& self, size_t k) -> bool {
            if (k == pairs.size()) return true;
            for (size_t cand : {pairs[k].first, pairs[k].second}) {
                const TruthSet& ts = formulas_[cand].truthset();
                bool ok = true;
                for (size_t prev : chosen) {
                    if (!comparable(ts, formulas_[prev].truthset())) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                chosen.push_back(cand);
                if (self(self, k + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };

        nested_.nested = search(search, 0);
        if (nested_.nested) {
            std::sort(chosen.begin(), chosen.end(), [&](size_t a, size_t b) {
                return formulas_[a].truthset().count() < formulas_[b].truthset().count();
            });
            nested_.chain = chosen;
            for (size_t i : chosen)
                if (!is_contingent(formulas_[i])) nested_.has_noncontingent = true;
        }
    });
    return nested_;
}

Theorem1Report Agenda::theorem1_preconditions() const {
    Theorem1Report report;
    report.non_nested = !nestedness().nested;
    report.contingent_count = contingent_count_;
    report.satisfied = report.non_nested && report.contingent_count > 4;
    return report;
}

bool Agenda::operator==(const Agenda& other) const {
    if (!(*lang_ == *other.lang_) || formulas_.size() != other.formulas_.size()) return false;
    for (const auto& f : formulas_)
        if (!other.index_.contains(f.truthset())) return false;
    return true;
}

bool pairwise_and_closed(std::span<const Formula> formulas) {
    for (size_t i = 0; i < formulas.size(); ++i) {
        for (size_t j = i + 1; j < formulas.size(); ++j) {
            TruthSet conj = formulas[i].truthset() & formulas[j].truthset();
            if (conj.empty() || conj.full()) continue;
            bool present = std::any_of(formulas.begin(), formulas.end(),
                                       [&](const Formula& f) { return f.truthset() == conj; });
            if (!present) return false;
        }
    }
    return true;
}

AgendaPtr and_closure(const Agenda& agenda) {
    std::vector<Formula> formulas = agenda.formulas();
    std::unordered_map<TruthSet, size_t, TruthSetHash> seen;
    for (size_t i = 0; i < formulas.size(); ++i) seen.emplace(formulas[i].truthset(), i);

    bool changed = true;
    while (changed) {
        changed = false;
        size_t n = formulas.size();
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                TruthSet conj = formulas[i].truthset() & formulas[j].truthset();
                if (conj.empty() || conj.full() || seen.contains(conj)) continue;
                Formula f = conjoin(formulas[i], formulas[j]);
                seen.emplace(conj, formulas.size());
                formulas.push_back(f);
                TruthSet neg = ~conj;
                if (!seen.contains(neg)) {
                    seen.emplace(neg, formulas.size());
                    formulas.push_back(negate(f));
                }
                changed = true;
            }
        }
    }
    return Agenda::build(std::move(formulas), true);
}

bool nested_brute_force(const Agenda& agenda) {
    auto pairs = complement_pairs(agenda);
    size_t n = pairs.size();
    if (n > 24) throw PreconditionError("brute-force nestedness limited to 24 pairs");
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        std::vector<const TruthSet*> picks;
        picks.reserve(n);
        for (size_t k = 0; k < n; ++k) {
            size_t idx = (mask >> k) & 1 ? pairs[k].second : pairs[k].first;
            picks.push_back(&agenda[idx].truthset());
        }
        bool chain = true;
        for (size_t a = 0; a < n && chain; ++a)
            for (size_t b = a + 1; b < n && chain; ++b)
                if (!comparable(*picks[a], *picks[b])) chain = false;
        if (chain) return true;
    }
    return false;
}

}  // namespace credo
