#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace supertube::verify {

struct SuiteConfig {
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::uint64_t budget = 1'000'000'000;
    std::uint64_t mc_samples = 1'000'000;
    unsigned mc_chunks = 64;
    // Overrides of the per-suite tolerances, by name (see tolerance()).
    std::map<std::string, double> tolerances;

    double tolerance(const std::string& name) const;
};

// One line of a suite's residual table. Exact checks report the number of
// mismatches as the residual with tolerance 0.
struct Row {
    std::string label;
    int cases = 0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = true;
};

struct SuiteResult {
    std::string name;
    std::string identity;  // what is being checked, in words
    std::vector<Row> rows;
    bool passed() const;
    double max_residual() const;
    int cases() const;
};

const std::vector<std::string>& suite_names();

// Throws DomainError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace supertube::verify
