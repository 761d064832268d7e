// Acceptance suite: one criterion per run (--criterion N) or all in order.
// Prints one PASS/FAIL line per criterion with timing and detail; the exit
// code is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "credo/oracle.hpp"
#include "credo/reproduce.hpp"
#include "credo/suites.hpp"

using namespace credo;

namespace {

struct Check {
    bool passed = true;
    std::string detail;

    void require(bool condition, const std::string& label) {
        if (!condition) {
            passed = false;
            detail += (detail.empty() ? "" : "; ") + label;
        }
    }
    void note(const std::string& text) { detail += (detail.empty() ? "" : "; ") + text; }
};

size_t table_mismatches(const ReproduceReport& report, const std::string& table) {
    size_t count = 0;
    for (const auto& m : report.mismatches)
        if (m.table == table) ++count;
    return count;
}

// 1. the equal-weight aggregate row matches the reference at 4 decimals
Check criterion1() {
    Check check;
    ReproduceReport report = reproduce_reference_tables<Rat>(4);
    check.require(table_mismatches(report, "aggregate") == 0,
                  "aggregate table cells differ from the reference");
    check.require(report.seconds < 1.0, "reproduction exceeded 1 s");
    const auto& f_row = report.tables[1].cells.back();
    check.note("F row = " + f_row[0] + " " + f_row[1] + " " + f_row[2] + " " + f_row[3] + " " +
               f_row[4] + " " + f_row[5] + " " + f_row[6] + " " + f_row[7]);
    return check;
}

// 2. both update tables, the collective rows, and the caption value match
Check criterion2() {
    Check check;
    ReproduceReport report = reproduce_reference_tables<Rat>(4);
    check.require(table_mismatches(report, "update-a") == 0, "first update table differs");
    check.require(table_mismatches(report, "update-not-c") == 0, "second update table differs");
    check.require(report.shared_not_c_match,
                  "J^a(!c) = " + report.shared_not_c + ", expected 0.5714");
    check.require(report.gap_after_a_zero, "gap after learning a is not exactly 0");
    check.require(report.gap_after_not_c_zero, "gap after learning !c is not exactly 0");
    check.require(report.seconds < 1.0, "reproduction exceeded 1 s");

    // spot values named by the gate
    auto p = fixtures::profile<Rat>();
    Formula a = parse_formula("a", fixtures::language());
    Formula not_c = parse_formula("!c", fixtures::language());
    Formula b = parse_formula("b", fixtures::language());
    Judgment<Rat> j1a = bayes_update(p[0], a);
    check.require(format_decimal(j1a.value_of(b), 4) == "0.8571", "J1^a(b) != 0.8571");
    Judgment<Rat> j1ac = bayes_update(j1a, not_c);
    check.require(format_decimal(j1ac.value_of(b), 4) == "0.8750", "J1^{a,!c}(b) != 0.8750");
    Judgment<Rat> j3ac = bayes_update(bayes_update(p[2], a), not_c);
    check.require(format_decimal(j3ac.value_of(b), 4) == "0.5000", "J3^{a,!c}(b) != 0.5000");
    return check;
}

// 3. 1000 in-domain cases commute exactly and preserve the common ground
Check criterion3(int threads) {
    Check check;
    auto summary = suites::theorem2_suite({42, 1000, threads});
    check.require(summary.errors.empty(), std::to_string(summary.errors.size()) + " case errors");
    check.require(summary.gap_zero == summary.cases,
                  std::to_string(summary.cases - summary.gap_zero) + " nonzero gaps");
    check.require(summary.phi_preserved == summary.cases,
                  std::to_string(summary.cases - summary.phi_preserved) +
                      " common-ground breaks");
    check.note(std::to_string(summary.gap_zero) + "/" + std::to_string(summary.cases) +
               " exact-zero gaps");
    return check;
}

// 4. off-domain cases show positive gaps; the hand-computed instance matches
Check criterion4(int threads) {
    Check check;
    auto summary = suites::negative_suite({42, 500, threads});
    check.require(summary.errors.empty(), std::to_string(summary.errors.size()) + " case errors");
    check.require(20 * summary.positive_gap >= 19 * summary.cases,
                  "positive-gap ratio below 95%");
    check.note(std::to_string(summary.positive_gap) + "/" + std::to_string(summary.cases) +
               " positive gaps, " + std::to_string(summary.degenerate.size()) + " degenerate");

    // two individuals over +/- {a, b, a & b}: masses chosen so that the gap
    // on learning a is exactly 3/308
    LanguagePtr two = Language::make({"a", "b"});
    AgendaPtr agenda = Agenda::build(
        {parse_formula("a", two), parse_formula("b", two), parse_formula("a & b", two)}, true);
    auto j1 = judgment_from_measure(
        Measure<Rat>::make(two, {Rat(1, 10), Rat(3, 10), Rat(1, 5), Rat(2, 5)}), agenda);
    auto j2 = judgment_from_measure(
        Measure<Rat>::make(two, {Rat(1, 5), Rat(1, 5), Rat(2, 5), Rat(1, 5)}), agenda);
    Profile<Rat> p = Profile<Rat>::make({j1, j2});
    Rat gap = dynamic_rationality_gap(p, Weights::make({Rat(1, 2), Rat(1, 2)}),
                                      parse_formula("a", two));
    check.require(gap == Rat(3, 308),
                  "hand-computed instance gap " + format_exact(gap) + " != 3/308");
    return check;
}

// 5. simplex matches the enumeration oracle; the bundled rows certify
Check criterion5(int threads) {
    Check check;
    auto summary = suites::oracle_suite({42, 200, threads});
    check.require(summary.errors.empty(), std::to_string(summary.errors.size()) + " case errors");
    check.require(summary.agreements == summary.cases,
                  std::to_string(summary.cases - summary.agreements) + " oracle disagreements");
    check.note(std::to_string(summary.agreements) + "/" + std::to_string(summary.cases) +
               " oracle agreements (" + std::to_string(summary.rational_cases) + " rational, " +
               std::to_string(summary.irrational_cases) + " irrational)");

    auto p = fixtures::profile<Rat>();
    for (size_t i = 0; i < p.size(); ++i) {
        std::string witness;
        for (size_t idx : p[i].rationality().infeasible_subset)
            witness += (witness.empty() ? "" : ", ") + (*p.agenda())[idx].text();
        check.require(p[i].rational(),
                      "bundled row J" + std::to_string(i + 1) +
                          " does not certify rational (irreducible infeasible subset {" + witness +
                          "})");
    }
    return check;
}

// 6. structural checks: the bundled agenda satisfies the preconditions,
// constructed chains are detected with valid witnesses, and the detector
// agrees with the exhaustive oracle on random agendas
Check criterion6() {
    Check check;
    AgendaPtr running = fixtures::agenda();
    Theorem1Report t1 = running->theorem1_preconditions();
    check.require(t1.non_nested, "bundled agenda reported nested");
    check.require(t1.contingent_count == 16, "contingent count != 16");
    check.require(t1.satisfied, "preconditions not satisfied");
    check.require(running->and_stable(), "bundled agenda not and-stable under the convention");

    LanguagePtr six = Language::make({"p", "q", "r", "s", "t", "u"});
    for (size_t len = 1; len <= 6; ++len) {
        std::vector<Formula> chain;
        std::string text;
        for (size_t j = 0; j < len; ++j) {
            text += (j ? " & " : "") + six->atoms()[j];
            chain.push_back(parse_formula(text, six));
        }
        AgendaPtr agenda = Agenda::build(chain, true);
        const auto& report = agenda->nestedness();
        check.require(report.nested, "chain of length " + std::to_string(len) + " not detected");
        check.require(report.chain.size() == len,
                      "witness size wrong at length " + std::to_string(len));
        bool valid = true;
        for (size_t k = 0; k + 1 < report.chain.size(); ++k)
            valid = valid && entails((*agenda)[report.chain[k]], (*agenda)[report.chain[k + 1]]);
        std::vector<bool> covered(agenda->size(), false);
        for (size_t idx : report.chain) {
            covered[idx] = true;
            covered[agenda->complement_of(idx)] = true;
        }
        for (bool c : covered) valid = valid && c;
        check.require(valid, "invalid witness at length " + std::to_string(len));
    }

    LanguagePtr abc = Language::make({"a", "b", "c"});
    std::mt19937_64 rng(20260809);
    size_t agreements = 0;
    for (int round = 0; round < 100; ++round) {
        size_t pairs = 1 + rng() % 10;
        std::vector<Formula> formulas;
        std::vector<TruthSet> used;
        while (formulas.size() < pairs) {
            TruthSet ts(8);
            uint32_t mask = 1 + static_cast<uint32_t>(rng() % 254);
            for (uint32_t v = 0; v < 8; ++v)
                if ((mask >> v) & 1) ts.set(v);
            bool fresh = true;
            for (const auto& u : used)
                if (u == ts || u == ~ts) fresh = false;
            if (!fresh) continue;
            used.push_back(ts);
            formulas.push_back(formula_from_truthset(ts, abc));
        }
        AgendaPtr agenda = Agenda::build(formulas, true);
        if (agenda->nestedness().nested == nested_brute_force(*agenda)) ++agreements;
    }
    check.require(agreements == 100, "detector disagreed with the oracle on " +
                                         std::to_string(100 - agreements) + " agendas");
    return check;
}

// 7. axiom suite: zero violations over the candidate scan and the pair
// checks; both canned counterexamples caught
Check criterion7(int threads) {
    Check check;
    auto summary = suites::axiom_suite({42, 20, 100, threads});
    check.require(summary.errors.empty(), std::to_string(summary.errors.size()) + " case errors");
    check.require(summary.candidates == 256, "expected 256 candidate truth sets");
    check.require(summary.consensus_violations == 0,
                  std::to_string(summary.consensus_violations) + " consensus violations");
    check.require(summary.independence_violations == 0,
                  std::to_string(summary.independence_violations) + " independence violations");
    check.require(summary.constant_rule_detected, "constant rule counterexample missed");
    check.require(summary.cross_rule_detected, "cross-formula rule counterexample missed");
    check.note("20 weight vectors x 256 candidates, " +
               std::to_string(summary.independence_comparisons) + " independence comparisons");
    return check;
}

}  // namespace

int main(int argc, char** argv) {
    int criterion = 0;
    int threads = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) criterion = std::atoi(argv[++i]);
        if (arg == "--threads" && i + 1 < argc) threads = std::atoi(argv[++i]);
    }

    struct Entry {
        int number;
        double budget_seconds;  // 0 = no stated limit
        std::function<Check()> run;
    };
    std::vector<Entry> all = {
        {1, 1.0, [&] { return criterion1(); }},
        {2, 1.0, [&] { return criterion2(); }},
        {3, 60.0, [&] { return criterion3(threads); }},
        {4, 0.0, [&] { return criterion4(threads); }},
        {5, 0.0, [&] { return criterion5(threads); }},
        {6, 0.0, [&] { return criterion6(); }},
        {7, 120.0, [&] { return criterion7(threads); }},
    };

    int failures = 0;
    for (const auto& [number, budget, run] : all) {
        if (criterion != 0 && number != criterion) continue;
        auto t0 = std::chrono::steady_clock::now();
        Check check = run();
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (budget > 0 && seconds >= budget)
            check.require(false, "runtime " + std::to_string(seconds) + "s over the " +
                                     std::to_string(budget) + "s budget");
        std::ostringstream line;
        line << "criterion " << number << ": " << (check.passed ? "PASS" : "FAIL");
        if (!check.detail.empty()) line << " - " << check.detail;
        line << " (" << seconds << "s)";
        std::cout << line.str() << std::endl;
        if (!check.passed) ++failures;
    }
    return failures;
}
