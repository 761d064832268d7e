#pragma once

// Recomputes the bundled running example end to end and diffs every cell
// against the reference tables at four-decimal rounding: the initial
// profile, the equal-weight aggregate, the update on a, and the update on
// !c after a, including both composition orders and their gaps.

#include <string>
#include <vector>

#include "credo/fixtures.hpp"
#include "credo/json_io.hpp"
#include "credo/table.hpp"

namespace credo {

struct CellMismatch {
    std::string table;
    std::string row;
    std::string column;
    std::string expected;  // reference rendering
    std::string actual;    // recomputed value at 4 decimals
};

struct RenderedTable {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::string> row_labels;
    std::vector<std::vector<std::string>> cells;
};

struct ReproduceReport {
    std::vector<RenderedTable> tables;
    std::vector<CellMismatch> mismatches;
    bool gap_after_a_zero = false;
    bool gap_after_not_c_zero = false;
    std::string shared_not_c;  // J^a(!c) at 4 decimals, reference 0.5714
    bool shared_not_c_match = false;
    std::vector<bool> row_rational;  // J1..J3
    std::vector<std::string> row_witness;
    bool pooled_rational = false;
    double seconds = 0.0;

    bool ok() const {
        return mismatches.empty() && gap_after_a_zero && gap_after_not_c_zero &&
               shared_not_c_match;
    }

    std::string render_human() const;
    io::Json to_json() const;
};

// reference cells, 4-decimal strings as printed
const std::vector<std::vector<std::string>>& reference_aggregate_table();  // J1..J3 + F
const std::vector<std::vector<std::string>>& reference_update_a_table();   // J^a rows + F(sq)
const std::vector<std::vector<std::string>>& reference_update_not_c_table();

template <class S>
ReproduceReport reproduce_reference_tables(int round = 4);

extern template ReproduceReport reproduce_reference_tables<Rat>(int);
extern template ReproduceReport reproduce_reference_tables<double>(int);

}  // namespace credo
