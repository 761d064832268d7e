#include "credo/logic.hpp"

#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace credo;

namespace {

LanguagePtr abc() {
    static LanguagePtr lang = Language::make({"a", "b", "c"});
    return lang;
}

Formula f(const char* text) { return parse_formula(text, abc()); }

}  // namespace

TEST_SUITE("logic") {

TEST_CASE("conjunction truth set") {
    Formula g = f("a & b");
    // valuation index packs atoms as bits, atom 0 least significant
    for (uint32_t v = 0; v < 8; ++v)
        CHECK(g.truthset().test(v) == (((v & 1) && (v & 2)) != 0));
    CHECK(g.truthset().count() == 2);
}

TEST_CASE("material implication identity") {
    CHECK(f("a -> b") == f("!a | b"));
    CHECK(f("a -> b").truthset() == f("!a | b").truthset());
}

TEST_CASE("contradiction and tautology") {
    CHECK(f("a <-> !a").truthset().empty());
    CHECK(is_contradiction(f("a <-> !a")));
    CHECK(is_tautology(f("a | !a")));
    CHECK(f("a | !a").truthset().full());
    CHECK_FALSE(is_contingent(f("a | !a")));
    CHECK(is_contingent(f("a")));
}

TEST_CASE("atom and full conjunction masks") {
    Formula a = f("a");
    for (uint32_t v = 0; v < 8; ++v) CHECK(a.truthset().test(v) == ((v & 1) != 0));
    Formula all = f("a & b & c");
    CHECK(all.truthset().count() == 1);
    CHECK(all.truthset().test(7));
}

TEST_CASE("precedence and associativity") {
    CHECK(f("!a & b | c") == f("((!a) & b) | c"));
    CHECK(f("a -> b -> c") == f("a -> (b -> c)"));       // right-assoc
    CHECK(f("a <-> b <-> c") == f("(a <-> b) <-> c"));   // left-assoc
    CHECK(f("a | b & c") == f("a | (b & c)"));
    CHECK(f("a -> b | c") == f("a -> (b | c)"));
}

TEST_CASE("unicode aliases") {
    CHECK(parse_formula("¬a ∧ b → c ↔ a", abc()) ==
          f("!a & b -> c <-> a"));
}

TEST_CASE("parse errors carry position and expectation") {
    CHECK_THROWS_AS(f("a &"), ParseError);
    CHECK_THROWS_AS(f("(a | b"), ParseError);
    CHECK_THROWS_AS(f("a ? b"), ParseError);
    try {
        f("a & d");
        FAIL("expected unknown atom error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("unknown atom 'd'") != std::string::npos);
        CHECK(e.position() == 4);
    }
}

TEST_CASE("truth sets round trip through formula_from_truthset") {
    for (uint32_t mask = 0; mask < 256; ++mask) {
        TruthSet ts(8);
        for (uint32_t v = 0; v < 8; ++v)
            if ((mask >> v) & 1) ts.set(v);
        Formula g = formula_from_truthset(ts, abc());
        CHECK(g.truthset() == ts);
    }
    CHECK(is_tautology(formula_from_truthset(TruthSet::all(8), abc())));
    CHECK(is_contradiction(formula_from_truthset(TruthSet::none(8), abc())));

    // single-bit mask gives the characteristic conjunction of literals
    Formula chi = formula_from_truthset(TruthSet::single(8, 5), abc());
    CHECK(chi.truthset().count() == 1);
    CHECK(chi.truthset().test(5));
    CHECK(chi == f("a & !b & c"));
}

TEST_CASE("entailment and connective operations") {
    CHECK(entails(f("a & b"), f("a")));
    CHECK_FALSE(entails(f("a"), f("a & b")));
    CHECK(negate(f("a")) == f("!a"));
    CHECK(negate(negate(f("a"))) == f("a"));
    CHECK(conjoin(f("a"), f("b")) == f("a & b"));
    CHECK(disjoin(f("a"), f("b")) == f("a | b"));
}

TEST_CASE("conjoin of a and a->b equals a&b, checked against valuation recursion") {
    Formula lhs = conjoin(f("a"), f("a -> b"));
    Formula rhs = f("a & b");
    for (uint32_t v = 0; v < 8; ++v) {
        CHECK(testing::eval_at(*lhs.ast(), v) == testing::eval_at(*rhs.ast(), v));
        CHECK(lhs.truthset().test(v) == testing::eval_at(*lhs.ast(), v));
    }
    CHECK(lhs == rhs);
}

TEST_CASE("mixed languages are rejected") {
    LanguagePtr other = Language::make({"a", "b"});
    Formula g = parse_formula("a & b", other);
    CHECK_THROWS_AS(conjoin(f("a"), g), LanguageMismatch);
    CHECK_THROWS_AS((void)entails(f("a"), g), LanguageMismatch);
}

TEST_CASE("language validation") {
    CHECK_THROWS(Language::make({}));
    CHECK_THROWS(Language::make({"a", "a"}));
    CHECK_THROWS(Language::make({""}));
    CHECK_THROWS(Language::make(std::vector<std::string>(17, "x")));  // duplicate + cap
}

TEST_CASE("property: bitmask semantics agree with valuation recursion") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 300; ++i) {
        Formula g(abc(), testing::random_ast(rng, 3, 4));
        for (uint32_t v = 0; v < 8; ++v)
            CHECK(g.truthset().test(v) == testing::eval_at(*g.ast(), v));
    }
}

TEST_CASE("property: connectives are boolean homomorphisms on truth sets") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Formula g(abc(), testing::random_ast(rng, 3, 4));
        Formula h(abc(), testing::random_ast(rng, 3, 4));
        CHECK(conjoin(g, h).truthset() == (g.truthset() & h.truthset()));
        CHECK(disjoin(g, h).truthset() == (g.truthset() | h.truthset()));
        CHECK(negate(g).truthset() == ~g.truthset());
        CHECK(implies(g, h).truthset() == (~g.truthset() | h.truthset()));
        CHECK(iff(g, h).truthset() == ~(g.truthset() ^ h.truthset()));
    }
}

TEST_CASE("property: parse(text()) is the identity") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        Formula g(abc(), testing::random_ast(rng, 3, 5));
        CHECK(parse_formula(g.text(), abc()) == g);
    }
    // equality criterion is the truth set
    CHECK(f("a & (b | c)") == f("(a & b) | (a & c)"));
    CHECK(f("a") != f("b"));
}

}  // TEST_SUITE
