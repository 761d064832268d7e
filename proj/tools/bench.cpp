// Compares the serial reference path (threads = 1) against the OpenMP path
// on the randomized suites and cross-checks that both produce identical
// summaries.

#include <chrono>
#include <iostream>
#include <string>

#include "credo/batch.hpp"
#include "credo/suites.hpp"

using namespace credo;

namespace {

template <class F>
double seconds(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string digest(const suites::Theorem2Summary& s) {
    return std::to_string(s.gap_zero) + "/" + std::to_string(s.phi_preserved) + "/" +
           std::to_string(s.failures.size()) + "/" + std::to_string(s.errors.size());
}

std::string digest(const suites::NegativeSummary& s) {
    return std::to_string(s.positive_gap) + "/" + std::to_string(s.degenerate.size()) + "/" +
           std::to_string(s.errors.size());
}

std::string digest(const suites::OracleSummary& s) {
    return std::to_string(s.agreements) + "/" + std::to_string(s.rational_cases) + "/" +
           std::to_string(s.irrational_cases);
}

}  // namespace

int main(int argc, char** argv) {
    size_t cases = argc > 1 ? static_cast<size_t>(std::stoull(argv[1])) : 1000;
    uint64_t seed = argc > 2 ? static_cast<uint64_t>(std::stoull(argv[2])) : 42;
    int threads = batch_max_threads();
    std::cout << "cases=" << cases << " seed=" << seed << " max threads=" << threads << "\n";

    bool identical = true;
    auto report = [&](const char* name, const std::string& serial_digest,
                      const std::string& parallel_digest, double ts, double tp) {
        bool same = serial_digest == parallel_digest;
        identical = identical && same;
        std::cout << name << ": serial " << ts << "s, parallel " << tp << "s, speedup "
                  << (tp > 0 ? ts / tp : 0.0) << "x, summaries "
                  << (same ? "identical" : "DIFFER") << "\n";
    };

    {
        suites::Theorem2Summary a, b;
        double ts = seconds([&] { a = suites::theorem2_suite({seed, cases, 1}); });
        double tp = seconds([&] { b = suites::theorem2_suite({seed, cases, threads}); });
        report("theorem2 ", digest(a), digest(b), ts, tp);
    }
    {
        suites::NegativeSummary a, b;
        double ts = seconds([&] { a = suites::negative_suite({seed, cases / 2, 1}); });
        double tp = seconds([&] { b = suites::negative_suite({seed, cases / 2, threads}); });
        report("negative ", digest(a), digest(b), ts, tp);
    }
    {
        suites::OracleSummary a, b;
        double ts = seconds([&] { a = suites::oracle_suite({seed, cases / 5, 1}); });
        double tp = seconds([&] { b = suites::oracle_suite({seed, cases / 5, threads}); });
        report("oracle   ", digest(a), digest(b), ts, tp);
    }

    std::cout << (identical ? "all summaries identical across thread counts\n"
                            : "MISMATCH between serial and parallel runs\n");
    return identical ? 0 : 1;
}
