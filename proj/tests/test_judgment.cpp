#include "credo/judgment.hpp"

#include <doctest.h>

#include <random>
#include <set>

#include "credo/fixtures.hpp"
#include "credo/lp.hpp"
#include "oracles.hpp"

using namespace credo;

namespace {

LanguagePtr ab() {
    static LanguagePtr lang = Language::make({"a", "b"});
    return lang;
}

AgendaPtr agenda_of(const std::vector<std::string>& texts, const LanguagePtr& lang) {
    std::vector<Formula> fs;
    for (const auto& t : texts) fs.push_back(parse_formula(t, lang));
    return Agenda::build(std::move(fs), true);
}

// values listed for the given texts; complements filled via 1 - p
Judgment<Rat> judgment_of(const AgendaPtr& x, const std::vector<std::string>& texts,
                          const std::vector<Rat>& vals) {
    std::vector<Rat> full(x->size(), Rat(-1));
    for (size_t k = 0; k < texts.size(); ++k) {
        size_t idx = *x->find(parse_formula(texts[k], x->language()).truthset());
        full[idx] = vals[k];
        full[x->complement_of(idx)] = Rat(1) - vals[k];
    }
    return Judgment<Rat>::from_values(x, std::move(full));
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("simplex solves a tiny program") {
    // min x0 s.t. x0 + x1 = 1
    Simplex<Rat> lp({{Rat(1), Rat(1)}}, {Rat(1)});
    auto r = lp.minimize({Rat(1), Rat(0)});
    REQUIRE(r.status == Simplex<Rat>::Status::Optimal);
    CHECK(r.objective == 0);
    auto m = lp.maximize({Rat(1), Rat(0)});
    CHECK(m.objective == 1);
}

TEST_CASE("simplex reports infeasibility") {
    // x0 + x1 = 1, x0 = 2
    Simplex<Rat> lp({{Rat(1), Rat(1)}, {Rat(1), Rat(0)}}, {Rat(1), Rat(2)});
    CHECK_FALSE(lp.find_feasible().has_value());
    CHECK(lp.minimize({Rat(1), Rat(1)}).status == Simplex<Rat>::Status::Infeasible);
}

TEST_CASE("simplex reports unboundedness") {
    // x0 - x1 = 0, min -x0 along the ray x0 = x1
    Simplex<Rat> lp({{Rat(1), Rat(-1)}}, {Rat(0)});
    CHECK(lp.minimize({Rat(-1), Rat(0)}).status == Simplex<Rat>::Status::Unbounded);
}

TEST_CASE("simplex drops redundant rows") {
    // duplicated constraints
    Simplex<Rat> lp({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}},
                    {Rat(1), Rat(1), Rat(2)});
    auto w = lp.find_feasible();
    REQUIRE(w.has_value());
    CHECK((*w)[0] + (*w)[1] == 1);
}

}  // TEST_SUITE

TEST_SUITE("judgment") {

TEST_CASE("row J1 of the bundled profile is rational with a sound certificate") {
    auto p = fixtures::profile<Rat>();
    const auto& j1 = p[0];
    CHECK(j1.rational());
    const Measure<Rat>& cert = j1.certificate();
    Rat sum = 0;
    for (const auto& w : cert.weights) {
        CHECK(w >= 0);
        sum += w;
    }
    CHECK(sum == 1);
    // re-evaluating the certificate reproduces the values exactly
    for (size_t k = 0; k < p.agenda()->size(); ++k)
        CHECK(cert.mass((*p.agenda())[k].truthset()) == j1.value(k));
}

TEST_CASE("row J2 of the bundled profile is irreducibly infeasible") {
    // J2(b) = J2(a&b) = 0.5 forces P(!a & b) = 0, so P(b&c) could be at most
    // P(a&b&c) = 0.15, yet J2(b&c) = 0.25. The deletion filter isolates it.
    auto p = fixtures::profile<Rat>();
    const auto& j2 = p[1];
    CHECK_FALSE(j2.rational());
    std::set<std::string> witness;
    for (size_t idx : j2.rationality().infeasible_subset)
        witness.insert((*p.agenda())[idx].text());
    CHECK(witness == std::set<std::string>{"b", "a & b", "b & c", "a & b & c"});
    CHECK(p[2].rational());  // J3 is fine
}

TEST_CASE("monotonicity violation is irrational") {
    AgendaPtr x = agenda_of({"a", "a & b"}, ab());
    Judgment<Rat> j = judgment_of(x, {"a", "a & b"}, {Rat(3, 10), Rat(1, 2)});
    CHECK_FALSE(j.rational());
    CHECK_FALSE(j.rationality().infeasible_subset.empty());
}

TEST_CASE("certainty is rational with a concentrated certificate") {
    AgendaPtr x = agenda_of({"a"}, ab());
    Judgment<Rat> j = judgment_of(x, {"a"}, {Rat(1)});
    REQUIRE(j.rational());
    CHECK(j.certificate().mass(parse_formula("a", ab()).truthset()) == 1);
}

TEST_CASE("structural validation happens before the LP") {
    AgendaPtr x = agenda_of({"a"}, ab());
    std::vector<Rat> bad(x->size());
    size_t ia = *x->find(parse_formula("a", ab()).truthset());
    bad[ia] = Rat(3, 10);
    bad[x->complement_of(ia)] = Rat(1, 2);  // complement law broken
    CHECK_THROWS_AS(Judgment<Rat>::from_values(x, bad), JudgmentError);

    std::vector<Rat> range(x->size());
    range[ia] = Rat(3, 2);
    range[x->complement_of(ia)] = Rat(-1, 2);
    CHECK_THROWS_AS(Judgment<Rat>::from_values(x, range), JudgmentError);
}

TEST_CASE("extension bounds: determined and undetermined targets") {
    auto p = fixtures::profile<Rat>();
    const auto& j1 = p[0];
    // b & !c is pinned: J1(b) - J1(b & c) = 0.8 - 0.3
    Formula target = parse_formula("b & !c", fixtures::language());
    Interval<Rat> pinned = extension_bounds(j1, target);
    CHECK(pinned.lo == Rat(1, 2));
    CHECK(pinned.hi == Rat(1, 2));

    Interval<Rat> taut = extension_bounds(j1, parse_formula("a | !a", fixtures::language()));
    CHECK(taut.lo == 1);
    CHECK(taut.hi == 1);

    // on +/- {a} over two atoms, a & b is free up to J(a)
    AgendaPtr x = agenda_of({"a"}, ab());
    Judgment<Rat> j = judgment_of(x, {"a"}, {Rat(1, 2)});
    Interval<Rat> free = extension_bounds(j, parse_formula("a & b", ab()));
    CHECK(free.lo == 0);
    CHECK(free.hi == Rat(1, 2));

    // agenda members always give point intervals
    for (size_t k = 0; k < p.agenda()->size(); ++k) {
        Interval<Rat> point = extension_bounds(j1, (*p.agenda())[k]);
        CHECK(point.lo == j1.value(k));
        CHECK(point.hi == j1.value(k));
    }
}

TEST_CASE("extension bounds require rationality") {
    auto p = fixtures::profile<Rat>();
    CHECK_THROWS_AS(extension_bounds(p[1], parse_formula("b & !c", fixtures::language())),
                    PreconditionError);
}

TEST_CASE("consistency with truth") {
    AgendaPtr x = agenda_of({"a"}, ab());
    Judgment<Rat> certain = judgment_of(x, {"a"}, {Rat(1)});
    Judgment<Rat> unsure = judgment_of(x, {"a"}, {Rat(7, 10)});
    Formula a = parse_formula("a", ab());
    CHECK(consistent_with_truth(certain, a));
    CHECK_FALSE(consistent_with_truth(unsure, a));

    auto p = fixtures::profile<Rat>();
    CHECK(consistent_with_truth(p[0], parse_formula("b | !b", fixtures::language())));
    // an irrational judgment is consistent with nothing
    CHECK_FALSE(consistent_with_truth(p[1], parse_formula("b | !b", fixtures::language())));
}

TEST_CASE("judgment from measure") {
    std::vector<Rat> uniform(8, Rat(1, 8));
    auto m = Measure<Rat>::make(fixtures::language(), uniform);
    Judgment<Rat> j = judgment_from_measure(m, fixtures::agenda());
    CHECK(j.value_of(parse_formula("a", fixtures::language())) == Rat(1, 2));
    CHECK(j.rational());
}

TEST_CASE("unique joint detection") {
    auto p = fixtures::profile<Rat>();
    CHECK(unique_joint(p[0]));  // footnote case: the agenda pins the joint
    AgendaPtr x = agenda_of({"a"}, ab());
    CHECK_FALSE(unique_joint(judgment_of(x, {"a"}, {Rat(1, 2)})));
}

TEST_CASE("rational mode matches float mode on the bundled rows") {
    auto p = fixtures::profile<double>();
    CHECK(p[0].rational());
    CHECK_FALSE(p[1].rational());
    CHECK(p[2].rational());
}

TEST_CASE("property: rational judgments respect entailment monotonicity") {
    std::mt19937_64 rng(515151);
    AgendaPtr x = fixtures::agenda();
    for (int round = 0; round < 50; ++round) {
        std::vector<Rat> weights(8);
        Rat sum = 0;
        for (auto& w : weights) {
            w = Rat(static_cast<int>(rng() % 16), 1);
            sum += w;
        }
        if (sum == 0) continue;
        for (auto& w : weights) w /= sum;
        Judgment<Rat> j =
            judgment_from_measure(Measure<Rat>::make(x->language(), weights), x);
        for (size_t f = 0; f < x->size(); ++f)
            for (size_t g = 0; g < x->size(); ++g)
                if (entails((*x)[f], (*x)[g])) CHECK(j.value(f) <= j.value(g));
    }
}

TEST_CASE("property: feasibility agrees with the support-enumeration oracle") {
    std::mt19937_64 rng(4242);
    AgendaPtr x = fixtures::agenda();
    int rational_seen = 0, irrational_seen = 0;
    for (int round = 0; round < 60; ++round) {
        // half measure-induced (rational), half perturbed (usually not)
        std::vector<Rat> weights(8);
        Rat sum = 0;
        for (auto& w : weights) {
            w = Rat(static_cast<int>(rng() % 32), 1);
            sum += w;
        }
        if (sum == 0) continue;
        for (auto& w : weights) w /= sum;
        auto m = Measure<Rat>::make(x->language(), weights);
        std::vector<Rat> vals(x->size());
        for (size_t k = 0; k < x->size(); ++k) vals[k] = m.mass((*x)[k].truthset());
        if (round % 2 == 1) {
            // complement-preserving perturbation
            size_t k = rng() % x->size();
            Rat delta = Rat(1 + static_cast<int>(rng() % 5), 20);
            Rat moved = vals[k] + delta;
            if (moved > 1) moved = vals[k] - delta >= 0 ? vals[k] - delta : vals[k];
            vals[k] = moved;
            vals[x->complement_of(k)] = Rat(1) - moved;
        }
        auto result = resolve_rationality(*x, vals);
        bool oracle = oracle::feasible_by_enumeration(*x, vals);
        CHECK(result.rational == oracle);
        (result.rational ? rational_seen : irrational_seen)++;
        if (result.rational) {
            // certificate soundness
            for (size_t k = 0; k < x->size(); ++k)
                CHECK(result.certificate->mass((*x)[k].truthset()) == vals[k]);
        }
    }
    CHECK(rational_seen > 10);
    CHECK(irrational_seen > 10);
}

}  // TEST_SUITE
