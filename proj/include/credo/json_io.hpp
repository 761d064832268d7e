#pragma once

// JSON schemas for agendas, judgments, profiles, weights, and sessions.
// Probabilities travel as decimal or rational strings, never binary floats,
// so rational mode stays exact end to end. Emitters round for display at a
// caller-chosen precision and add *_exact fields where rounding would lose
// information.

#include <json.hpp>

#include <string>

#include "credo/dynamics.hpp"

namespace credo::io {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);

// {"atoms": [...], "formulas": [...], "auto_close": true}
AgendaPtr load_agenda(const Json& doc);

// resolves "agenda" (inline) or "agenda_ref" (path, relative to base_dir)
AgendaPtr resolve_agenda(const Json& doc, const std::string& base_dir);

Weights load_weights(const Json& doc);

Json agenda_report(const Agenda& agenda);

namespace detail {

// fills complements: every pair needs at least one explicit value
template <class S>
std::vector<S> values_from_map(const Agenda& agenda, const Json& map) {
    if (!map.is_object()) throw InputError("'values' must be an object");
    std::vector<bool> given(agenda.size(), false);
    std::vector<S> values(agenda.size(), S{});
    for (const auto& [key, raw] : map.items()) {
        Formula f = parse_formula(key, agenda.language());
        auto idx = agenda.find(f.truthset());
        if (!idx) throw InputError("'" + key + "' is not an agenda formula");
        if (given[*idx]) throw InputError("duplicate value for '" + key + "'");
        if (!raw.is_string())
            throw InputError("value for '" + key + "' must be a decimal or rational string");
        values[*idx] = scalar_traits<S>::from_rat(parse_number(raw.template get<std::string>()));
        given[*idx] = true;
    }
    for (size_t k = 0; k < agenda.size(); ++k) {
        if (given[k]) continue;
        size_t c = agenda.complement_of(k);
        if (!given[c])
            throw InputError("no value for '" + agenda[k].text() + "' or its negation");
        values[k] = S(1) - values[c];
    }
    return values;
}

}  // namespace detail

// {"values": {...}} over a known agenda
template <class S>
Judgment<S> load_judgment(const Json& doc, AgendaPtr agenda,
                          S tol = scalar_traits<S>::default_tol()) {
    if (!doc.contains("values")) throw InputError("judgment document needs 'values'");
    auto values = detail::values_from_map<S>(*agenda, doc.at("values"));
    return Judgment<S>::from_values(std::move(agenda), std::move(values), tol);
}

// {"agenda": {...}, "judgments": [{"values": {...}}, ...]}
template <class S>
Profile<S> load_profile(const Json& doc, RequireRational require,
                        S tol = scalar_traits<S>::default_tol(),
                        const std::string& base_dir = ".") {
    AgendaPtr agenda = resolve_agenda(doc, base_dir);
    if (!doc.contains("judgments") || !doc.at("judgments").is_array() ||
        doc.at("judgments").empty())
        throw InputError("profile document needs a nonempty 'judgments' array");
    std::vector<Judgment<S>> judgments;
    for (const auto& j : doc.at("judgments")) judgments.push_back(load_judgment<S>(j, agenda, tol));
    return Profile<S>::make(std::move(judgments), require);
}

template <class S>
struct LoadedSession {
    Profile<S> profile;
    Weights weights;
    CommonGround phi;
    std::vector<Formula> events;
};

// {"profile": {...}, "weights": {...}, "common_ground": [...]?, "events": [{"learn": "..."}]}
template <class S>
LoadedSession<S> load_session(const Json& doc, RequireRational require,
                              S tol = scalar_traits<S>::default_tol(),
                              const std::string& base_dir = ".") {
    if (!doc.contains("profile")) throw InputError("session document needs 'profile'");
    Profile<S> profile = load_profile<S>(doc.at("profile"), require, tol, base_dir);
    if (!doc.contains("weights")) throw InputError("session document needs 'weights'");
    Weights weights = load_weights(doc.at("weights"));

    CommonGround phi;
    if (doc.contains("common_ground")) {
        for (const auto& entry : doc.at("common_ground")) {
            Formula f = parse_formula(entry.template get<std::string>(),
                                      profile.agenda()->language());
            auto idx = profile.agenda()->find(f.truthset());
            if (!idx)
                throw InputError("common ground formula '" + f.text() + "' is not in the agenda");
            phi.members.push_back(*idx);
        }
        std::sort(phi.members.begin(), phi.members.end());
        phi.members.erase(std::unique(phi.members.begin(), phi.members.end()), phi.members.end());
    } else {
        phi = common_ground_of(profile);
    }

    std::vector<Formula> events;
    if (doc.contains("events")) {
        for (const auto& entry : doc.at("events")) {
            if (!entry.is_object() || !entry.contains("learn"))
                throw InputError("each event must be an object with a 'learn' formula");
            events.push_back(parse_formula(entry.at("learn").template get<std::string>(),
                                           profile.agenda()->language()));
        }
    }
    return LoadedSession<S>{std::move(profile), std::move(weights), std::move(phi),
                            std::move(events)};
}

template <class S>
Json measure_json(const Measure<S>& m, int round) {
    Json out = Json::object();
    Json weights = Json::array();
    for (uint32_t v = 0; v < m.weights.size(); ++v) {
        Json entry = Json::object();
        entry["valuation"] = v;
        Json assignment = Json::object();
        for (size_t i = 0; i < m.lang->atoms().size(); ++i)
            assignment[m.lang->atoms()[i]] = static_cast<int>((v >> i) & 1);
        entry["assignment"] = assignment;
        entry["weight"] = scalar_traits<S>::decimal(m.weights[v], round);
        entry["weight_exact"] = scalar_traits<S>::exact_str(m.weights[v]);
        weights.push_back(entry);
    }
    out["weights"] = weights;
    return out;
}

template <class S>
Json judgment_json(const Judgment<S>& j, int round, bool include_certificate = false) {
    Json out = Json::object();
    Json values = Json::object();
    for (size_t k = 0; k < j.agenda()->size(); ++k)
        values[(*j.agenda())[k].text()] = scalar_traits<S>::decimal(j.value(k), round);
    out["values"] = values;
    out["rational"] = j.rational();
    if (!j.rational()) {
        Json witness = Json::array();
        for (size_t idx : j.rationality().infeasible_subset)
            witness.push_back((*j.agenda())[idx].text());
        out["infeasible_subset"] = witness;
    } else if (include_certificate) {
        out["certificate"] = measure_json(j.certificate(), round);
    }
    return out;
}

}  // namespace credo::io
