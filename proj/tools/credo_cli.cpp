// Command-line front end. Machine-readable JSON goes to stdout (or --output),
// human tables go to stderr, or to stdout under --pretty. Exit codes:
// 0 clean, 1 findings (violations, infeasibility, mismatches), 2 input or
// domain errors.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "credo/batch.hpp"
#include "credo/generators.hpp"
#include "credo/reproduce.hpp"
#include "credo/suites.hpp"

using namespace credo;
using io::Json;

namespace {

struct Options {
    std::string mode = "rational";
    double eps = 1e-9;
    int round = 4;
    uint64_t seed = 42;
    size_t cases = 1000;
    int threads = 0;
    bool pretty = false;
    bool interval = false;
    std::string output;

    std::string command;
    std::string input;
    std::string weights_file;
    std::string learn;
    std::string policy = "strict";
    bool allow_irrational = false;
    bool certificate = false;
    size_t weight_vectors = 20;
    size_t pairs = 100;
    size_t negative_cases = 500;
    size_t oracle_cases = 200;
    std::string suite = "all";
};

void emit(const Options& opt, const Json& machine, const std::string& human) {
    std::string text = machine.dump(2) + "\n";
    if (!opt.output.empty()) {
        std::ofstream out(opt.output);
        if (!out) throw InputError("cannot write '" + opt.output + "'");
        out << text;
    }
    if (opt.pretty) {
        std::cout << human;
    } else {
        if (opt.output.empty()) std::cout << text;
        if (!human.empty()) std::cerr << human;
    }
}

UpdatePolicy policy_of(const Options& opt) {
    if (opt.policy == "strict") return UpdatePolicy::Strict;
    if (opt.policy == "algebraic") return UpdatePolicy::Algebraic;
    throw InputError("unknown policy '" + opt.policy + "' (strict|algebraic)");
}

Weights random_weight_vector(std::mt19937_64& rng, size_t n) {
    std::vector<unsigned> u(n);
    unsigned long long sum = 0;
    while (sum == 0) {
        for (auto& v : u) {
            v = static_cast<unsigned>(rng() % 64);
            sum += v;
        }
    }
    std::vector<Rat> w;
    for (auto v : u) w.emplace_back(Rat(v, 1) / Rat(static_cast<unsigned long long>(sum), 1));
    return Weights::make(std::move(w));
}

int cmd_check_agenda(const Options& opt) {
    AgendaPtr agenda = io::load_agenda(io::read_json_file(opt.input));
    Json report = io::agenda_report(*agenda);
    std::string human = "Agenda: " + std::to_string(agenda->size()) + " formulas, " +
                        std::to_string(agenda->contingent_count()) + " contingent\n" +
                        "nested: " + (report["nested"].get<bool>() ? "yes" : "no") +
                        ", and-stable: " + (agenda->and_stable() ? "yes" : "no") +
                        " (strict: " + (agenda->and_stable_strict() ? "yes" : "no") + ")\n" +
                        "Theorem 1 preconditions: " +
                        (report["theorem1_preconditions"]["satisfied"].get<bool>() ? "satisfied"
                                                                                   : "NOT satisfied") +
                        "\n";
    emit(opt, report, human);
    return report["theorem1_preconditions"]["satisfied"].get<bool>() ? 0 : 1;
}

template <class S>
int cmd_check_rationality(const Options& opt) {
    S tol = scalar_traits<S>::exact ? S{} : S(opt.eps);
    Json doc = io::read_json_file(opt.input);
    std::string base = std::filesystem::path(opt.input).parent_path().string();
    if (base.empty()) base = ".";

    std::vector<Judgment<S>> judgments;
    if (doc.contains("judgments")) {
        Profile<S> p = io::load_profile<S>(doc, RequireRational::No, tol, base);
        for (size_t i = 0; i < p.size(); ++i) judgments.push_back(p[i]);
    } else {
        AgendaPtr agenda = io::resolve_agenda(doc, base);
        judgments.push_back(io::load_judgment<S>(doc, agenda, tol));
    }

    Json report = Json::array();
    bool all_rational = true;
    std::string human;
    for (size_t i = 0; i < judgments.size(); ++i) {
        Json entry = io::judgment_json(judgments[i], opt.round, opt.certificate);
        entry["individual"] = i + 1;
        report.push_back(entry);
        all_rational = all_rational && judgments[i].rational();
        human += "J" + std::to_string(i + 1) + ": " +
                 (judgments[i].rational() ? "rational" : "NOT rational") + "\n";
    }
    Json out = Json::object();
    out["judgments"] = report;
    out["all_rational"] = all_rational;
    emit(opt, out, human);
    return all_rational ? 0 : 1;
}

template <class S>
int cmd_aggregate(const Options& opt) {
    S tol = scalar_traits<S>::exact ? S{} : S(opt.eps);
    std::string base = std::filesystem::path(opt.input).parent_path().string();
    if (base.empty()) base = ".";
    Profile<S> p =
        io::load_profile<S>(io::read_json_file(opt.input), RequireRational::No, tol, base);
    if (opt.weights_file.empty()) throw InputError("aggregate needs --weights");
    Weights w = io::load_weights(io::read_json_file(opt.weights_file));
    Judgment<S> pooled = linear_pool(p, w);

    Json out = Json::object();
    Json wj = Json::array();
    for (size_t i = 0; i < w.size(); ++i) wj.push_back(format_exact(w[i]));
    out["weights"] = wj;
    auto dictator = is_dictatorial(w);
    out["dictator"] = dictator ? Json(*dictator + 1) : Json(nullptr);
    Json members = Json::array();
    for (size_t i = 0; i < p.size(); ++i) members.push_back(p[i].rational());
    out["members_rational"] = members;
    out["pooled"] = io::judgment_json(pooled, opt.round, opt.certificate);

    std::vector<std::vector<std::string>> cells(1);
    std::vector<std::string> columns;
    for (size_t k = 0; k < p.agenda()->size(); ++k) {
        columns.push_back((*p.agenda())[k].text());
        cells[0].push_back(scalar_traits<S>::decimal(pooled.value(k), opt.round));
    }
    emit(opt, out, render_table("Aggregate", columns, {"F"}, cells));
    return p.all_rational() && pooled.rational() ? 0 : 1;
}

template <class S>
int cmd_update(const Options& opt) {
    S tol = scalar_traits<S>::exact ? S{} : S(opt.eps);
    Json doc = io::read_json_file(opt.input);
    std::string base = std::filesystem::path(opt.input).parent_path().string();
    if (base.empty()) base = ".";
    AgendaPtr agenda = io::resolve_agenda(doc, base);
    Judgment<S> j = io::load_judgment<S>(doc, agenda, tol);
    if (opt.learn.empty()) throw InputError("update needs --learn <formula>");
    Formula phi = parse_formula(opt.learn, agenda->language());

    Json out = Json::object();
    out["learned"] = phi.text();
    if (opt.interval) {
        auto intervals = bayes_update_intervals(j, phi);
        Json iv = Json::object();
        for (size_t k = 0; k < agenda->size(); ++k) {
            Json cell = Json::object();
            cell["lo"] = scalar_traits<S>::decimal(intervals[k].lo, opt.round);
            cell["hi"] = scalar_traits<S>::decimal(intervals[k].hi, opt.round);
            cell["lo_exact"] = scalar_traits<S>::exact_str(intervals[k].lo);
            cell["hi_exact"] = scalar_traits<S>::exact_str(intervals[k].hi);
            iv[(*agenda)[k].text()] = cell;
        }
        out["intervals"] = iv;
        emit(opt, out, "interval update on " + phi.text() + "\n");
        return 0;
    }
    Judgment<S> updated = bayes_update(j, phi, policy_of(opt));
    out["updated"] = io::judgment_json(updated, opt.round, opt.certificate);
    std::vector<std::vector<std::string>> cells(1);
    std::vector<std::string> columns;
    for (size_t k = 0; k < agenda->size(); ++k) {
        columns.push_back((*agenda)[k].text());
        cells[0].push_back(scalar_traits<S>::decimal(updated.value(k), opt.round));
    }
    emit(opt, out, render_table("Updated on " + phi.text(), columns, {"J^"}, cells));
    return 0;
}

int cmd_verify_axioms(const Options& opt) {
    std::string base = std::filesystem::path(opt.input).parent_path().string();
    if (base.empty()) base = ".";
    Profile<Rat> p =
        io::load_profile<Rat>(io::read_json_file(opt.input), RequireRational::No, Rat(0), base);
    auto candidates = default_consensus_candidates(*p.agenda(), opt.seed);

    std::vector<Weights> rules;
    if (!opt.weights_file.empty()) {
        rules.push_back(io::load_weights(io::read_json_file(opt.weights_file)));
    } else {
        for (size_t k = 0; k < opt.weight_vectors; ++k) {
            auto rng = gen::case_rng(opt.seed, k);
            rules.push_back(random_weight_vector(rng, p.size()));
        }
    }

    struct Outcome {
        size_t violations = 0, premise = 0;
        std::string error;
    };
    auto outcomes = run_batch<Outcome>(rules.size(), opt.threads, [&](size_t index) {
        Outcome out;
        try {
            const Weights& w = rules[index];
            Rule<Rat> rule = [&w](const Profile<Rat>& pr) { return linear_pool(pr, w); };
            ConsensusReport r = check_consensus_compatibility(rule, p, candidates);
            out.violations = r.violations.size();
            out.premise = r.premise_held;
        } catch (const std::exception& e) {
            out.error = e.what();
        }
        return out;
    });

    Json consensus = Json::object();
    size_t cviolations = 0, premise = 0;
    std::vector<std::string> errors;
    for (const auto& o : outcomes) {
        if (!o.error.empty()) {
            errors.push_back(o.error);
            continue;
        }
        cviolations += o.violations;
        premise += o.premise;
    }
    consensus["weight_vectors"] = rules.size();
    consensus["candidates"] = candidates.size();
    consensus["premise_held"] = premise;
    consensus["violations"] = cviolations;

    Json independence = Json::object();
    size_t iviolations = 0, comparisons = 0;
    bool independence_ran = p.all_rational();
    if (independence_ran) {
        struct IOutcome {
            size_t violations = 0, comparisons = 0;
            std::string error;
        };
        auto iout = run_batch<IOutcome>(opt.pairs, opt.threads, [&](size_t index) {
            IOutcome out;
            try {
                auto rng = gen::case_rng(opt.seed * 0x51edu + 9, index);
                Profile<Rat> other = gen::region_resampled_profile(p, rng);
                Weights w = random_weight_vector(rng, p.size());
                Rule<Rat> rule = [&w](const Profile<Rat>& pr) { return linear_pool(pr, w); };
                std::vector<std::pair<Profile<Rat>, Profile<Rat>>> one;
                one.emplace_back(p, other);
                IndependenceReport r = check_independence(rule, one);
                out.violations = r.violations.size();
                out.comparisons = r.comparisons;
            } catch (const std::exception& e) {
                out.error = e.what();
            }
            return out;
        });
        for (const auto& o : iout) {
            if (!o.error.empty()) {
                errors.push_back(o.error);
                continue;
            }
            iviolations += o.violations;
            comparisons += o.comparisons;
        }
        independence["pairs"] = opt.pairs;
        independence["comparisons"] = comparisons;
        independence["violations"] = iviolations;
    } else {
        independence["skipped"] =
            "profile has irrational members; no certificates to resample";
    }

    Json out = Json::object();
    out["seed"] = opt.seed;
    out["consensus"] = consensus;
    out["independence"] = independence;
    if (!errors.empty()) out["errors"] = errors;

    std::string human = "consensus violations: " + std::to_string(cviolations) +
                        " (premise held for " + std::to_string(premise) + " checks)\n" +
                        (independence_ran
                             ? "independence violations: " + std::to_string(iviolations) + " over " +
                                   std::to_string(comparisons) + " comparisons\n"
                             : "independence: skipped (irrational members)\n");
    emit(opt, out, human);
    if (!errors.empty()) return 2;
    return cviolations == 0 && iviolations == 0 ? 0 : 1;
}

template <class S>
int cmd_session(const Options& opt) {
    S tol = scalar_traits<S>::exact ? S{} : S(opt.eps);
    std::string base = std::filesystem::path(opt.input).parent_path().string();
    if (base.empty()) base = ".";
    RequireRational require = opt.allow_irrational ? RequireRational::No : RequireRational::Yes;
    io::LoadedSession<S> loaded =
        io::load_session<S>(io::read_json_file(opt.input), require, tol, base);
    auto state = SessionState<S>::make(loaded.profile, loaded.phi, loaded.weights);

    UpdatePolicy policy = policy_of(opt);
    if (opt.allow_irrational && opt.policy == "strict") policy = UpdatePolicy::Algebraic;

    Trace<S> trace = run_sequence(state, loaded.events, policy);

    std::string human;
    std::string lines;
    bool all_zero = true, all_preserved = true;
    for (const auto& step : trace.steps) {
        Json record = Json::object();
        record["step"] = step.step;
        record["learned"] = step.learned.text();
        record["gap"] = scalar_traits<S>::decimal(step.gap, opt.round);
        record["gap_exact"] = scalar_traits<S>::exact_str(step.gap);
        record["gap_zero"] = step.gap_zero;
        record["phi_preserved"] = step.phi_report.preserved;
        Json collective = Json::object();
        for (size_t k = 0; k < step.collective.agenda()->size(); ++k)
            collective[(*step.collective.agenda())[k].text()] =
                scalar_traits<S>::decimal(step.collective.value(k), opt.round);
        record["collective"] = collective;
        Json learnable = Json::array();
        for (const auto& f : step.learnable) learnable.push_back(f.text());
        record["learnable"] = learnable;
        lines += record.dump() + "\n";
        all_zero = all_zero && step.gap_zero;
        all_preserved = all_preserved && step.phi_report.preserved;

        std::vector<std::string> columns;
        std::vector<std::vector<std::string>> cells(1);
        for (size_t k = 0; k < step.collective.agenda()->size(); ++k) {
            columns.push_back((*step.collective.agenda())[k].text());
            cells[0].push_back(scalar_traits<S>::decimal(step.collective.value(k), opt.round));
        }
        human += render_table("Step " + std::to_string(step.step) + ": learned " +
                                  step.learned.text() + " (gap " +
                                  (step.gap_zero ? "0" : scalar_traits<S>::decimal(step.gap, 6)) +
                                  ", common ground " +
                                  (step.phi_report.preserved ? "preserved" : "BROKEN") + ")",
                              columns, {"F"}, cells) +
                 "\n";
    }

    if (!opt.output.empty()) {
        std::ofstream out(opt.output);
        if (!out) throw InputError("cannot write '" + opt.output + "'");
        out << lines;
    }
    if (opt.pretty) {
        std::cout << human;
    } else {
        if (opt.output.empty()) std::cout << lines;
        std::cerr << human;
    }
    return all_zero && all_preserved ? 0 : 1;
}

template <class S>
int cmd_reproduce(const Options& opt) {
    ReproduceReport report = reproduce_reference_tables<S>(4);
    emit(opt, report.to_json(), report.render_human());
    return report.ok() ? 0 : 1;
}

int cmd_property_suite(const Options& opt) {
    Json out = Json::object();
    out["seed"] = opt.seed;
    bool ok = true;
    std::string human;

    if (opt.suite == "all" || opt.suite == "theorem2") {
        auto s = suites::theorem2_suite({opt.seed, opt.cases, opt.threads});
        Json j = Json::object();
        j["cases"] = s.cases;
        j["gap_zero"] = s.gap_zero;
        j["phi_preserved"] = s.phi_preserved;
        j["failures"] = s.failures;
        if (!s.errors.empty()) j["errors"] = s.errors;
        j["ok"] = s.ok();
        out["theorem2"] = j;
        ok = ok && s.ok();
        human += "theorem2: " + std::to_string(s.gap_zero) + "/" + std::to_string(s.cases) +
                 " zero gaps, " + std::to_string(s.phi_preserved) + " preserved -> " +
                 (s.ok() ? "ok" : "FAIL") + "\n";
    }
    if (opt.suite == "all" || opt.suite == "negative") {
        auto s = suites::negative_suite({opt.seed, opt.negative_cases, opt.threads});
        Json j = Json::object();
        j["cases"] = s.cases;
        j["positive_gap"] = s.positive_gap;
        j["degenerate"] = s.degenerate;
        if (!s.errors.empty()) j["errors"] = s.errors;
        j["ok"] = s.ok();
        out["negative"] = j;
        ok = ok && s.ok();
        human += "negative: " + std::to_string(s.positive_gap) + "/" + std::to_string(s.cases) +
                 " positive gaps -> " + (s.ok() ? "ok" : "FAIL") + "\n";
    }
    if (opt.suite == "all" || opt.suite == "oracle") {
        auto s = suites::oracle_suite({opt.seed, opt.oracle_cases, opt.threads});
        Json j = Json::object();
        j["cases"] = s.cases;
        j["agreements"] = s.agreements;
        j["rational_cases"] = s.rational_cases;
        j["irrational_cases"] = s.irrational_cases;
        j["disagreements"] = s.disagreements;
        if (!s.errors.empty()) j["errors"] = s.errors;
        j["ok"] = s.ok();
        out["oracle"] = j;
        ok = ok && s.ok();
        human += "oracle: " + std::to_string(s.agreements) + "/" + std::to_string(s.cases) +
                 " agreements -> " + (s.ok() ? "ok" : "FAIL") + "\n";
    }
    if (opt.suite == "all" || opt.suite == "axioms") {
        auto s = suites::axiom_suite({opt.seed, opt.weight_vectors, opt.pairs, opt.threads});
        Json j = Json::object();
        j["weight_vectors"] = s.weight_vectors;
        j["candidates"] = s.candidates;
        j["premise_held"] = s.premise_held;
        j["consensus_violations"] = s.consensus_violations;
        j["independence_pairs"] = s.independence_pairs;
        j["independence_comparisons"] = s.independence_comparisons;
        j["independence_violations"] = s.independence_violations;
        j["constant_rule_detected"] = s.constant_rule_detected;
        j["cross_rule_detected"] = s.cross_rule_detected;
        if (!s.errors.empty()) j["errors"] = s.errors;
        j["ok"] = s.ok();
        out["axioms"] = j;
        ok = ok && s.ok();
        human += std::string("axioms: ") + (s.ok() ? "ok" : "FAIL") + "\n";
    }
    out["ok"] = ok;
    emit(opt, out, human);
    return ok ? 0 : 1;
}

template <class S>
int dispatch(const Options& opt) {
    if (opt.command == "check-agenda") return cmd_check_agenda(opt);
    if (opt.command == "check-rationality") return cmd_check_rationality<S>(opt);
    if (opt.command == "aggregate") return cmd_aggregate<S>(opt);
    if (opt.command == "update") return cmd_update<S>(opt);
    if (opt.command == "session") return cmd_session<S>(opt);
    if (opt.command == "reproduce-paper") return cmd_reproduce<S>(opt);
    throw InputError("unhandled command '" + opt.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"probability aggregation over propositional agendas"};
    app.require_subcommand(1);

    app.add_option("--mode", opt.mode, "arithmetic mode: rational|float")
        ->check(CLI::IsMember({"rational", "float"}));
    app.add_option("--eps", opt.eps, "feasibility tolerance in float mode");
    app.add_option("--round", opt.round, "decimal places for display")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", opt.seed, "seed for randomized checks");
    app.add_option("--threads", opt.threads, "worker threads (1 = serial reference)");
    app.add_option("--output", opt.output, "write machine JSON to this path");
    app.add_flag("--pretty", opt.pretty, "human tables on stdout instead of JSON");

    auto* check_agenda = app.add_subcommand("check-agenda", "structural agenda checks");
    check_agenda->fallthrough();
    check_agenda->add_option("input", opt.input, "agenda JSON file")->required();

    auto* check_rat = app.add_subcommand("check-rationality", "LP rationality certificates");
    check_rat->fallthrough();
    check_rat->add_option("input", opt.input, "judgment or profile JSON file")->required();
    check_rat->add_flag("--certificate", opt.certificate, "include certificates in the output");

    auto* aggregate = app.add_subcommand("aggregate", "linear pooling");
    aggregate->fallthrough();
    aggregate->add_option("input", opt.input, "profile JSON file")->required();
    aggregate->add_option("--weights", opt.weights_file, "weights JSON file")->required();
    aggregate->add_flag("--certificate", opt.certificate, "include certificates in the output");

    auto* update = app.add_subcommand("update", "Bayesian conditioning");
    update->fallthrough();
    update->add_option("input", opt.input, "judgment JSON file")->required();
    update->add_option("--learn", opt.learn, "formula learned true")->required();
    update->add_option("--policy", opt.policy, "strict|algebraic");
    update->add_flag("--interval", opt.interval, "report conditional probability bounds");
    update->add_flag("--certificate", opt.certificate, "include certificates in the output");

    auto* verify = app.add_subcommand("verify-axioms", "consensus compatibility and independence");
    verify->fallthrough();
    verify->add_option("input", opt.input, "profile JSON file")->required();
    verify->add_option("--weights", opt.weights_file, "single weights JSON file");
    verify->add_option("--weight-vectors", opt.weight_vectors, "random weight vectors to test");
    verify->add_option("--pairs", opt.pairs, "independence profile pairs");

    auto* session = app.add_subcommand("session", "sequential fair-learning run");
    session->fallthrough();
    session->add_option("input", opt.input, "session JSON file")->required();
    session->add_option("--policy", opt.policy, "strict|algebraic");
    session->add_flag("--allow-irrational", opt.allow_irrational,
                      "admit irrational members (implies the algebraic policy)");

    app.add_subcommand("reproduce-paper", "recompute and diff the bundled reference tables")
        ->fallthrough();

    auto* prop = app.add_subcommand("property-suite", "randomized verification suites");
    prop->fallthrough();
    prop->add_option("--suite", opt.suite, "all|theorem2|negative|oracle|axioms")
        ->check(CLI::IsMember({"all", "theorem2", "negative", "oracle", "axioms"}));
    prop->add_option("--cases", opt.cases, "commutativity suite cases");
    prop->add_option("--negative-cases", opt.negative_cases, "negative suite cases");
    prop->add_option("--oracle-cases", opt.oracle_cases, "oracle suite cases");
    prop->add_option("--weight-vectors", opt.weight_vectors, "axiom suite weight vectors");
    prop->add_option("--pairs", opt.pairs, "axiom suite independence pairs");

    CLI11_PARSE(app, argc, argv);
    opt.command = app.get_subcommands().front()->get_name();

    try {
        if (opt.command == "verify-axioms" || opt.command == "property-suite") {
            if (opt.mode != "rational")
                throw InputError("'" + opt.command + "' runs in rational mode only");
            return opt.command == "verify-axioms" ? cmd_verify_axioms(opt)
                                                  : cmd_property_suite(opt);
        }
        if (opt.mode == "float") {
            if (opt.eps <= 0) throw InputError("--eps must be positive");
            return dispatch<double>(opt);
        }
        return dispatch<Rat>(opt);
    } catch (const AmbiguousUpdate& e) {
        Json err = Json::object();
        err["error"] = Json::object();
        err["error"]["code"] = e.code();
        err["error"]["message"] = e.what();
        err["error"]["formula"] = e.formula();
        err["error"]["interval"] = Json::object();
        err["error"]["interval"]["lo"] = e.lo();
        err["error"]["interval"]["hi"] = e.hi();
        std::cout << err.dump(2) << "\n";
        std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        Json err = Json::object();
        err["error"] = Json::object();
        err["error"]["code"] = e.code();
        err["error"]["message"] = e.what();
        std::cout << err.dump(2) << "\n";
        std::cerr << "error (" << e.code() << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
