#pragma once

// Batch verification suites. Each case is generated from (seed, index) and
// evaluated independently, so the kernels run through the OpenMP batch with
// identical results for any thread count; threads == 1 is the serial
// reference used by the equivalence tests and the benchmark.

#include <string>
#include <vector>

#include "credo/generators.hpp"

namespace credo::suites {

struct Options {
    uint64_t seed = 42;
    size_t cases = 1000;
    int threads = 0;  // <= 0: OpenMP default, 1: serial
};

// Commutativity inside the common ground domain: gap must be exactly zero
// and all individuals must still agree on the common ground afterwards.
struct Theorem2Summary {
    size_t cases = 0;
    size_t gap_zero = 0;
    size_t phi_preserved = 0;
    std::vector<size_t> failures;
    std::vector<std::string> errors;
    uint64_t seed = 0;

    bool ok() const {
        return errors.empty() && gap_zero == cases && phi_preserved == cases && cases > 0;
    }
};
Theorem2Summary theorem2_suite(const Options& options);

// Disagreement on the learned formula with non-dictatorial weights should
// generically produce a positive gap; zero-gap coincidences are recorded.
struct NegativeSummary {
    size_t cases = 0;
    size_t positive_gap = 0;
    std::vector<size_t> degenerate;
    std::vector<std::string> errors;
    uint64_t seed = 0;

    double ratio() const { return cases ? static_cast<double>(positive_gap) / cases : 0.0; }
    bool ok() const { return errors.empty() && cases > 0 && 20 * positive_gap >= 19 * cases; }
};
NegativeSummary negative_suite(const Options& options);

// Simplex feasibility vs support-enumeration oracle on random coherent and
// perturbed value assignments.
struct OracleSummary {
    size_t cases = 0;
    size_t agreements = 0;
    size_t rational_cases = 0;
    size_t irrational_cases = 0;
    std::vector<size_t> disagreements;
    std::vector<std::string> errors;
    uint64_t seed = 0;

    bool ok() const { return errors.empty() && cases > 0 && agreements == cases; }
};
OracleSummary oracle_suite(const Options& options);

// Consensus compatibility of linear pooling on the bundled profile over all
// candidate truth sets and random weight vectors, independence over
// generated profile pairs, and detection of the two canned rule
// counterexamples.
struct AxiomSummary {
    size_t weight_vectors = 0;
    size_t candidates = 0;
    size_t premise_held = 0;
    size_t consensus_violations = 0;
    size_t independence_pairs = 0;
    size_t independence_comparisons = 0;
    size_t independence_violations = 0;
    bool constant_rule_detected = false;
    bool cross_rule_detected = false;
    std::vector<std::string> errors;
    uint64_t seed = 0;

    bool ok() const {
        return errors.empty() && consensus_violations == 0 && independence_violations == 0 &&
               constant_rule_detected && cross_rule_detected;
    }
};
struct AxiomOptions {
    uint64_t seed = 42;
    size_t weight_vectors = 20;
    size_t pairs = 100;
    int threads = 0;
};
AxiomSummary axiom_suite(const AxiomOptions& options);

}  // namespace credo::suites
