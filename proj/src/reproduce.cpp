#include "credo/reproduce.hpp"

#include <chrono>

namespace credo {

namespace {

// tolerance 5e-5: a cell matches when the recomputed value rounds to the
// printed one
const Rat kCellTolerance(1, 20000);

const std::vector<std::string> kRowLabels = {"J1", "J2", "J3"};

}  // namespace

const std::vector<std::vector<std::string>>& reference_aggregate_table() {
    static const std::vector<std::vector<std::string>> t = {
        {"0.7", "0.8", "0.4", "0.9", "0.6", "0.3", "0.3", "0.25"},
        {"0.7", "0.5", "0.4", "0.8", "0.5", "0.3", "0.25", "0.15"},
        {"0.7", "0.4", "0.4", "0.6", "0.3", "0.3", "0.15", "0.1"},
        {"0.7", "0.5667", "0.4", "0.7667", "0.4667", "0.3", "0.2333", "0.1667"},
    };
    return t;
}

const std::vector<std::vector<std::string>>& reference_update_a_table() {
    static const std::vector<std::vector<std::string>> t = {
        {"1", "0.8571", "0.4286", "0.8571", "0.8571", "0.4286", "0.3571", "0.3571"},
        {"1", "0.7143", "0.4286", "0.7143", "0.7143", "0.4286", "0.2143", "0.2143"},
        {"1", "0.4286", "0.4286", "0.4286", "0.4286", "0.4286", "0.1429", "0.1429"},
        {"1", "0.6667", "0.4286", "0.6667", "0.6667", "0.4286", "0.2381", "0.2381"},
    };
    return t;
}

const std::vector<std::vector<std::string>>& reference_update_not_c_table() {
    static const std::vector<std::vector<std::string>> t = {
        {"1", "0.8750", "0", "0.8750", "0.8750", "0", "0", "0"},
        {"1", "0.8750", "0", "0.8750", "0.8750", "0", "0", "0"},
        {"1", "0.5000", "0", "0.5000", "0.5000", "0", "0", "0"},
        {"1", "0.7500", "0", "0.7500", "0.7500", "0", "0", "0"},
    };
    return t;
}

template <class S>
ReproduceReport reproduce_reference_tables(int round) {
    auto t0 = std::chrono::steady_clock::now();
    ReproduceReport report;

    AgendaPtr agenda = fixtures::agenda();
    const auto& columns = fixtures::columns();
    std::vector<size_t> column_index;
    for (const auto& text : columns)
        column_index.push_back(
            *agenda->find(parse_formula(text, agenda->language()).truthset()));

    Profile<S> profile = fixtures::profile<S>();
    Weights weights = fixtures::equal_weights();
    S tol = profile[0].tol();

    for (size_t i = 0; i < profile.size(); ++i) {
        report.row_rational.push_back(profile[i].rational());
        std::string witness;
        for (size_t idx : profile[i].rationality().infeasible_subset)
            witness += (witness.empty() ? "" : ", ") + (*agenda)[idx].text();
        report.row_witness.push_back(witness);
    }

    auto cell = [&](const Judgment<S>& j, size_t c) {
        return scalar_traits<S>::decimal(j.value(column_index[c]), round);
    };
    auto compare = [&](const std::string& table, const std::string& row_label,
                       const Judgment<S>& j, const std::vector<std::string>& expected_row) {
        for (size_t c = 0; c < columns.size(); ++c) {
            Rat expected = parse_number(expected_row[c]);
            Rat actual(0);
            if constexpr (scalar_traits<S>::exact)
                actual = j.value(column_index[c]);
            else
                actual = Rat(j.value(column_index[c]));
            if (rat_abs(actual - expected) > kCellTolerance)
                report.mismatches.push_back({table, row_label, columns[c], expected_row[c],
                                             cell(j, c)});
        }
    };
    auto rows_of = [&](const std::vector<const Judgment<S>*>& judgments) {
        std::vector<std::vector<std::string>> cells;
        for (const auto* j : judgments) {
            std::vector<std::string> row;
            for (size_t c = 0; c < columns.size(); ++c) row.push_back(cell(*j, c));
            cells.push_back(std::move(row));
        }
        return cells;
    };

    // initial profile and aggregate
    Judgment<S> pooled = linear_pool(profile, weights);
    report.pooled_rational = pooled.rational();
    {
        std::vector<std::string> labels = kRowLabels;
        report.tables.push_back(RenderedTable{"Initial profile", columns, labels,
                                              rows_of({&profile[0], &profile[1], &profile[2]})});
        labels.push_back("F(J1,J2,J3)");
        report.tables.push_back(
            RenderedTable{"Aggregate, equal weights 1/3", columns, labels,
                          rows_of({&profile[0], &profile[1], &profile[2], &pooled})});
        const auto& ref = reference_aggregate_table();
        for (size_t r = 0; r < 3; ++r) compare("aggregate", kRowLabels[r], profile[r], ref[r]);
        compare("aggregate", "F(J1,J2,J3)", pooled, ref[3]);
    }

    Formula learn_a = parse_formula("a", agenda->language());
    Formula learn_not_c = parse_formula("!c", agenda->language());

    // first update: learn a
    Profile<S> after_a = update_profile(profile, learn_a, UpdatePolicy::Algebraic);
    Judgment<S> pooled_after_a = linear_pool(after_a, weights);
    Judgment<S> collective_updated = bayes_update(pooled, learn_a, UpdatePolicy::Algebraic);
    {
        S gap{};
        for (size_t k = 0; k < agenda->size(); ++k) {
            S diff = scalar_traits<S>::abs(pooled_after_a.value(k) - collective_updated.value(k));
            if (diff > gap) gap = diff;
        }
        report.gap_after_a_zero = scalar_traits<S>::is_zero(gap, tol);

        std::vector<std::string> labels = {"J1^a", "J2^a", "J3^a", "F(sq)"};
        report.tables.push_back(
            RenderedTable{"After learning a", columns, labels,
                          rows_of({&after_a[0], &after_a[1], &after_a[2], &pooled_after_a})});
        const auto& ref = reference_update_a_table();
        for (size_t r = 0; r < 3; ++r) compare("update-a", labels[r], after_a[r], ref[r]);
        compare("update-a", "F(sq)", pooled_after_a, ref[3]);
    }

    // caption value J^a(!c), shared across individuals and the collective
    {
        size_t c_index = *agenda->find(parse_formula("c", agenda->language()).truthset());
        S not_c = S(1) - pooled_after_a.value(c_index);
        report.shared_not_c = scalar_traits<S>::decimal(not_c, round);
        Rat value;
        if constexpr (scalar_traits<S>::exact)
            value = not_c;
        else
            value = Rat(not_c);
        report.shared_not_c_match = rat_abs(value - parse_number("0.5714")) <= kCellTolerance;
    }

    // second update: learn !c
    Profile<S> after_not_c = update_profile(after_a, learn_not_c, UpdatePolicy::Algebraic);
    Judgment<S> pooled_after_not_c = linear_pool(after_not_c, weights);
    Judgment<S> collective_twice =
        bayes_update(pooled_after_a, learn_not_c, UpdatePolicy::Algebraic);
    {
        S gap{};
        for (size_t k = 0; k < agenda->size(); ++k) {
            S diff = scalar_traits<S>::abs(pooled_after_not_c.value(k) - collective_twice.value(k));
            if (diff > gap) gap = diff;
        }
        report.gap_after_not_c_zero = scalar_traits<S>::is_zero(gap, tol);

        std::vector<std::string> labels = {"J1^{a,!c}", "J2^{a,!c}", "J3^{a,!c}", "F(*)"};
        report.tables.push_back(RenderedTable{
            "After learning !c (following a)", columns, labels,
            rows_of({&after_not_c[0], &after_not_c[1], &after_not_c[2], &pooled_after_not_c})});
        const auto& ref = reference_update_not_c_table();
        for (size_t r = 0; r < 3; ++r) compare("update-not-c", labels[r], after_not_c[r], ref[r]);
        compare("update-not-c", "F(*)", pooled_after_not_c, ref[3]);
    }

    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

template ReproduceReport reproduce_reference_tables<Rat>(int);
template ReproduceReport reproduce_reference_tables<double>(int);

std::string ReproduceReport::render_human() const {
    std::string out;
    for (const auto& t : tables) {
        out += render_table(t.title, t.columns, t.row_labels, t.cells);
        out += "\n";
    }
    out += "Rationality: ";
    for (size_t i = 0; i < row_rational.size(); ++i) {
        out += "J" + std::to_string(i + 1) + (row_rational[i] ? " ok" : " INFEASIBLE");
        if (!row_rational[i] && !row_witness[i].empty()) out += " {" + row_witness[i] + "}";
        if (i + 1 < row_rational.size()) out += ", ";
    }
    out += std::string("; pooled ") + (pooled_rational ? "ok" : "INFEASIBLE") + "\n";
    out += "Shared value for !c after learning a: " + shared_not_c +
           (shared_not_c_match ? " (matches 0.5714)" : " (expected 0.5714)") + "\n";
    out += std::string("Commutativity gap after a: ") + (gap_after_a_zero ? "0" : "NONZERO") +
           "; after !c: " + (gap_after_not_c_zero ? "0" : "NONZERO") + "\n";
    if (!mismatches.empty()) {
        out += "Mismatched cells:\n";
        for (const auto& m : mismatches)
            out += "  " + m.table + " / " + m.row + " / " + m.column + ": expected " + m.expected +
                   ", got " + m.actual + "\n";
    }
    out += std::string("Reproduction ") + (ok() ? "PASSED" : "FAILED") + "\n";
    return out;
}

io::Json ReproduceReport::to_json() const {
    io::Json out = io::Json::object();
    io::Json tables_json = io::Json::array();
    for (const auto& t : tables) {
        io::Json tj = io::Json::object();
        tj["title"] = t.title;
        tj["columns"] = t.columns;
        io::Json rows = io::Json::array();
        for (size_t r = 0; r < t.cells.size(); ++r) {
            io::Json row = io::Json::object();
            row["label"] = t.row_labels[r];
            row["cells"] = t.cells[r];
            rows.push_back(row);
        }
        tj["rows"] = rows;
        tables_json.push_back(tj);
    }
    out["tables"] = tables_json;
    io::Json mm = io::Json::array();
    for (const auto& m : mismatches) {
        io::Json entry = io::Json::object();
        entry["table"] = m.table;
        entry["row"] = m.row;
        entry["column"] = m.column;
        entry["expected"] = m.expected;
        entry["actual"] = m.actual;
        mm.push_back(entry);
    }
    out["mismatches"] = mm;
    out["gap_after_a_zero"] = gap_after_a_zero;
    out["gap_after_not_c_zero"] = gap_after_not_c_zero;
    out["shared_not_c"] = shared_not_c;
    out["shared_not_c_match"] = shared_not_c_match;
    out["row_rational"] = row_rational;
    io::Json witnesses = io::Json::array();
    for (const auto& w : row_witness) witnesses.push_back(w);
    out["row_infeasible_subset"] = witnesses;
    out["pooled_rational"] = pooled_rational;
    out["ok"] = ok();
    return out;
}

}  // namespace credo
