#include "credo/suites.hpp"

#include "credo/batch.hpp"
#include "credo/fixtures.hpp"
#include "credo/oracle.hpp"

namespace credo::suites {

namespace {

LanguagePtr suite_language() {
    static LanguagePtr lang = Language::make({"a", "b", "c"});
    return lang;
}

struct CaseOutcome {
    bool a = false, b = false;
    std::string error;
};

}  // namespace

Theorem2Summary theorem2_suite(const Options& options) {
    LanguagePtr lang = suite_language();
    auto outcomes = run_batch<CaseOutcome>(options.cases, options.threads, [&](size_t index) {
        CaseOutcome out;
        try {
            auto rng = gen::case_rng(options.seed, index);
            gen::DomainInstance inst = gen::random_domain_instance(lang, rng);
            Rat gap = dynamic_rationality_gap(inst.profile, inst.weights, inst.learned);
            out.a = gap == 0;
            out.b = check_phi_preserving(inst.profile, inst.phi, inst.learned).preserved;
        } catch (const std::exception& e) {
            out.error = e.what();
        }
        return out;
    });

    Theorem2Summary summary;
    summary.cases = options.cases;
    summary.seed = options.seed;
    for (size_t i = 0; i < outcomes.size(); ++i) {
        if (!outcomes[i].error.empty()) {
            summary.errors.push_back("case " + std::to_string(i) + ": " + outcomes[i].error);
            summary.failures.push_back(i);
            continue;
        }
        if (outcomes[i].a) ++summary.gap_zero;
        if (outcomes[i].b) ++summary.phi_preserved;
        if (!outcomes[i].a || !outcomes[i].b) summary.failures.push_back(i);
    }
    return summary;
}

NegativeSummary negative_suite(const Options& options) {
    LanguagePtr lang = suite_language();
    auto outcomes = run_batch<CaseOutcome>(options.cases, options.threads, [&](size_t index) {
        CaseOutcome out;
        try {
            auto rng = gen::case_rng(options.seed * 0x9e37u + 1, index);
            gen::OffDomainInstance inst = gen::random_off_domain_instance(lang, rng);
            Rat gap = dynamic_rationality_gap(inst.profile, inst.weights, inst.learned);
            out.a = gap > 0;
        } catch (const std::exception& e) {
            out.error = e.what();
        }
        return out;
    });

    NegativeSummary summary;
    summary.cases = options.cases;
    summary.seed = options.seed;
    for (size_t i = 0; i < outcomes.size(); ++i) {
        if (!outcomes[i].error.empty()) {
            summary.errors.push_back("case " + std::to_string(i) + ": " + outcomes[i].error);
            continue;
        }
        if (outcomes[i].a)
            ++summary.positive_gap;
        else
            summary.degenerate.push_back(i);
    }
    return summary;
}

OracleSummary oracle_suite(const Options& options) {
    AgendaPtr agenda = fixtures::agenda();
    auto outcomes = run_batch<CaseOutcome>(options.cases, options.threads, [&](size_t index) {
        CaseOutcome out;
        try {
            auto rng = gen::case_rng(options.seed * 0x85ebu + 2, index);
            bool coherent = index % 2 == 0;
            std::vector<Rat> values = gen::random_judgment_values(*agenda, rng, coherent);
            auto result = resolve_rationality(*agenda, values);
            bool reference = oracle::feasible_by_enumeration(*agenda, values);
            out.a = result.rational == reference;
            out.b = result.rational;
            if (result.rational) {
                // certificate soundness rides along
                for (size_t k = 0; k < agenda->size(); ++k)
                    if (result.certificate->mass((*agenda)[k].truthset()) != values[k])
                        out.a = false;
            }
        } catch (const std::exception& e) {
            out.error = e.what();
        }
        return out;
    });

    OracleSummary summary;
    summary.cases = options.cases;
    summary.seed = options.seed;
    for (size_t i = 0; i < outcomes.size(); ++i) {
        if (!outcomes[i].error.empty()) {
            summary.errors.push_back("case " + std::to_string(i) + ": " + outcomes[i].error);
            continue;
        }
        if (outcomes[i].a)
            ++summary.agreements;
        else
            summary.disagreements.push_back(i);
        if (outcomes[i].b)
            ++summary.rational_cases;
        else
            ++summary.irrational_cases;
    }
    return summary;
}

namespace {

// the two canned counterexamples from the axiom checker documentation

bool detect_constant_rule() {
    LanguagePtr one = Language::make({"a"});
    AgendaPtr x = Agenda::build({parse_formula("a", one)}, true);
    auto certain = judgment_from_measure(Measure<Rat>::make(one, {Rat(0), Rat(1)}), x);
    Profile<Rat> p = Profile<Rat>::make({certain, certain});
    Rule<Rat> constant_half = [](const Profile<Rat>& pr) {
        return Judgment<Rat>::from_values(pr.agenda(),
                                          std::vector<Rat>(pr.agenda()->size(), Rat(1, 2)));
    };
    return !check_consensus_compatibility(constant_half, p, uint64_t{1}).ok();
}

bool detect_cross_rule() {
    LanguagePtr two = Language::make({"a", "b"});
    AgendaPtr x = Agenda::build({parse_formula("a", two), parse_formula("b", two)}, true);
    Formula fb = parse_formula("b", two);
    auto mk = [&](Rat w0, Rat w1, Rat w2, Rat w3) {
        return judgment_from_measure(Measure<Rat>::make(two, {w0, w1, w2, w3}), x);
    };
    auto j1 = mk(Rat(1, 10), Rat(1, 10), Rat(2, 5), Rat(2, 5));
    auto j1p = mk(Rat(7, 20), Rat(7, 20), Rat(3, 20), Rat(3, 20));
    auto j2 = mk(Rat(1, 5), Rat(3, 10), Rat(1, 5), Rat(3, 10));
    std::vector<std::pair<Profile<Rat>, Profile<Rat>>> pairs;
    pairs.emplace_back(Profile<Rat>::make({j1, j2}), Profile<Rat>::make({j1p, j2}));
    Rule<Rat> cross = [fb](const Profile<Rat>& pr) {
        return pr[0].value_of(fb) > Rat(1, 2) ? pr[0] : pr[pr.size() - 1];
    };
    return !check_independence(cross, pairs).ok();
}

}  // namespace

AxiomSummary axiom_suite(const AxiomOptions& options) {
    AxiomSummary summary;
    summary.seed = options.seed;
    Profile<Rat> table = fixtures::profile<Rat>();
    auto candidates = default_consensus_candidates(*table.agenda(), options.seed);
    summary.candidates = candidates.size();
    summary.weight_vectors = options.weight_vectors;

    struct ConsensusOutcome {
        size_t violations = 0, premise = 0;
        std::string error;
    };
    auto consensus = run_batch<ConsensusOutcome>(
        options.weight_vectors, options.threads, [&](size_t index) {
            ConsensusOutcome out;
            try {
                auto rng = gen::case_rng(options.seed * 0xc2b2u + 3, index);
                std::vector<unsigned> u(table.size());
                unsigned long long sum = 0;
                while (sum == 0) {
                    for (auto& v : u) {
                        v = static_cast<unsigned>(rng() % 64);
                        sum += v;
                    }
                }
                std::vector<Rat> raw;
                for (auto v : u)
                    raw.emplace_back(Rat(v, 1) / Rat(static_cast<unsigned long long>(sum), 1));
                Weights w = Weights::make(std::move(raw));
                Rule<Rat> rule = [&w](const Profile<Rat>& pr) { return linear_pool(pr, w); };
                ConsensusReport report = check_consensus_compatibility(rule, table, candidates);
                out.violations = report.violations.size();
                out.premise = report.premise_held;
            } catch (const std::exception& e) {
                out.error = e.what();
            }
            return out;
        });
    for (size_t i = 0; i < consensus.size(); ++i) {
        if (!consensus[i].error.empty()) {
            summary.errors.push_back("consensus " + std::to_string(i) + ": " + consensus[i].error);
            continue;
        }
        summary.consensus_violations += consensus[i].violations;
        summary.premise_held += consensus[i].premise;
    }

    struct IndependenceOutcome {
        size_t violations = 0, comparisons = 0;
        std::string error;
    };
    LanguagePtr lang = suite_language();
    auto independence = run_batch<IndependenceOutcome>(
        options.pairs, options.threads, [&](size_t index) {
            IndependenceOutcome out;
            try {
                auto rng = gen::case_rng(options.seed * 0x27d4u + 4, index);
                auto pair = gen::random_profile_pair(lang, rng);
                std::vector<unsigned> u(pair.first.size());
                unsigned long long sum = 0;
                while (sum == 0) {
                    for (auto& v : u) {
                        v = static_cast<unsigned>(rng() % 64);
                        sum += v;
                    }
                }
                std::vector<Rat> raw;
                for (auto v : u)
                    raw.emplace_back(Rat(v, 1) / Rat(static_cast<unsigned long long>(sum), 1));
                Weights w = Weights::make(std::move(raw));
                Rule<Rat> rule = [&w](const Profile<Rat>& pr) { return linear_pool(pr, w); };
                std::vector<std::pair<Profile<Rat>, Profile<Rat>>> one;
                one.push_back(std::move(pair));
                IndependenceReport report = check_independence(rule, one);
                out.violations = report.violations.size();
                out.comparisons = report.comparisons;
            } catch (const std::exception& e) {
                out.error = e.what();
            }
            return out;
        });
    summary.independence_pairs = options.pairs;
    for (size_t i = 0; i < independence.size(); ++i) {
        if (!independence[i].error.empty()) {
            summary.errors.push_back("independence " + std::to_string(i) + ": " +
                                     independence[i].error);
            continue;
        }
        summary.independence_violations += independence[i].violations;
        summary.independence_comparisons += independence[i].comparisons;
    }

    summary.constant_rule_detected = detect_constant_rule();
    summary.cross_rule_detected = detect_cross_rule();
    return summary;
}

}  // namespace credo::suites
