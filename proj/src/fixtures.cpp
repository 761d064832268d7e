#include "credo/fixtures.hpp"

namespace credo::fixtures {

LanguagePtr language() {
    static LanguagePtr lang = Language::make({"a", "b", "c"});
    return lang;
}

const std::vector<std::string>& columns() {
    static const std::vector<std::string> cols = {"a",     "b",     "c",     "a -> b",
                                                  "a & b", "a & c", "b & c", "a & b & c"};
    return cols;
}

AgendaPtr agenda() {
    static AgendaPtr x = [] {
        std::vector<Formula> formulas;
        for (const auto& t : columns()) formulas.push_back(parse_formula(t, language()));
        return Agenda::build(std::move(formulas), true);
    }();
    return x;
}

const std::array<std::array<std::string, 8>, 3>& values() {
    static const std::array<std::array<std::string, 8>, 3> grid = {{
        {"0.7", "0.8", "0.4", "0.9", "0.6", "0.3", "0.3", "0.25"},
        {"0.7", "0.5", "0.4", "0.8", "0.5", "0.3", "0.25", "0.15"},
        {"0.7", "0.4", "0.4", "0.6", "0.3", "0.3", "0.15", "0.1"},
    }};
    return grid;
}

Weights equal_weights() {
    return Weights::make({Rat(1, 3), Rat(1, 3), Rat(1, 3)});
}

CommonGround common_ground() {
    AgendaPtr x = agenda();
    CommonGround cg;
    for (const char* t : {"a", "c", "a & c"})
        cg.members.push_back(*x->find(parse_formula(t, language()).truthset()));
    std::sort(cg.members.begin(), cg.members.end());
    return cg;
}

std::vector<Formula> events() {
    return {parse_formula("a", language()), parse_formula("!c", language())};
}

std::string session_json() {
    return R"({
  "profile": {
    "agenda": {
      "atoms": ["a", "b", "c"],
      "formulas": ["a", "b", "c", "a -> b", "a & b", "a & c", "b & c", "a & b & c"],
      "auto_close": true
    },
    "judgments": [
      {"values": {"a": "0.7", "b": "0.8", "c": "0.4", "a -> b": "0.9",
                  "a & b": "0.6", "a & c": "0.3", "b & c": "0.3", "a & b & c": "0.25"}},
      {"values": {"a": "0.7", "b": "0.5", "c": "0.4", "a -> b": "0.8",
                  "a & b": "0.5", "a & c": "0.3", "b & c": "0.25", "a & b & c": "0.15"}},
      {"values": {"a": "0.7", "b": "0.4", "c": "0.4", "a -> b": "0.6",
                  "a & b": "0.3", "a & c": "0.3", "b & c": "0.15", "a & b & c": "0.1"}}
    ]
  },
  "weights": {"weights": ["1/3", "1/3", "1/3"]},
  "common_ground": ["a", "c", "a & c"],
  "events": [{"learn": "a"}, {"learn": "!c"}]
})";
}

}  // namespace credo::fixtures
