#include "credo/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace credo::io {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("'" + path + "': " + e.what());
    }
}

AgendaPtr load_agenda(const Json& doc) {
    if (!doc.contains("atoms") || !doc.at("atoms").is_array())
        throw InputError("agenda document needs an 'atoms' array");
    std::vector<std::string> atoms;
    for (const auto& a : doc.at("atoms")) atoms.push_back(a.get<std::string>());
    LanguagePtr lang = Language::make(std::move(atoms));

    if (!doc.contains("formulas") || !doc.at("formulas").is_array() || doc.at("formulas").empty())
        throw InputError("agenda document needs a nonempty 'formulas' array");
    std::vector<Formula> formulas;
    for (const auto& f : doc.at("formulas"))
        formulas.push_back(parse_formula(f.get<std::string>(), lang));
    bool auto_close = doc.value("auto_close", true);
    return Agenda::build(std::move(formulas), auto_close);
}

AgendaPtr resolve_agenda(const Json& doc, const std::string& base_dir) {
    if (doc.contains("agenda")) return load_agenda(doc.at("agenda"));
    if (doc.contains("agenda_ref")) {
        std::filesystem::path ref = doc.at("agenda_ref").get<std::string>();
        if (ref.is_relative()) ref = std::filesystem::path(base_dir) / ref;
        return load_agenda(read_json_file(ref.string()));
    }
    throw InputError("document needs 'agenda' (inline) or 'agenda_ref' (path)");
}

Weights load_weights(const Json& doc) {
    const Json& arr = doc.is_array() ? doc : doc.at("weights");
    if (!arr.is_array() || arr.empty()) throw InputError("'weights' must be a nonempty array");
    std::vector<Rat> w;
    for (const auto& entry : arr) {
        if (!entry.is_string()) throw InputError("weights must be rational or decimal strings");
        w.push_back(parse_number(entry.get<std::string>()));
    }
    return Weights::make(std::move(w));
}

Json agenda_report(const Agenda& agenda) {
    Json out = Json::object();
    out["atoms"] = agenda.language()->atoms();
    Json formulas = Json::array();
    for (const auto& f : agenda.formulas()) formulas.push_back(f.text());
    out["formulas"] = formulas;
    out["size"] = agenda.size();
    out["negation_closed"] = true;  // enforced at construction
    out["contingent_count"] = agenda.contingent_count();
    out["and_stable"] = agenda.and_stable();
    out["and_stable_strict"] = agenda.and_stable_strict();
    if (auto missing = agenda.missing_conjunction()) {
        Json pair = Json::array();
        pair.push_back(agenda[missing->first].text());
        pair.push_back(agenda[missing->second].text());
        out["missing_conjunction"] = pair;
    }
    const auto& nested = agenda.nestedness();
    out["nested"] = nested.nested;
    if (nested.nested) {
        Json chain = Json::array();
        for (size_t idx : nested.chain) chain.push_back(agenda[idx].text());
        out["chain"] = chain;
        out["chain_has_noncontingent"] = nested.has_noncontingent;
    }
    Theorem1Report t1 = agenda.theorem1_preconditions();
    Json theorem1 = Json::object();
    theorem1["non_nested"] = t1.non_nested;
    theorem1["contingent_count"] = t1.contingent_count;
    theorem1["satisfied"] = t1.satisfied;
    out["theorem1_preconditions"] = theorem1;
    return out;
}

}  // namespace credo::io
