#pragma once

#include "semistrong/hypergraph.hpp"

#include <string>
#include <vector>

namespace semistrong::repro {

// One verification experiment, reproducing a desk-scale result end to end
// with fixed seeds. The whole suite is the repository's one-command
// correctness gate (`semistrong repro`, or the acceptance test binary).
struct CriterionResult {
    std::string id;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Options {
    // Golden bounds table the rendered case table must match byte for byte.
    std::string golden_path = "data/bounds_golden.csv";
};

// Runs criteria 1..10 in order.
std::vector<CriterionResult> run_all(const Options& opt = {});

CriterionResult run_criterion(int index, const Options& opt = {});

// Exact containment probability of a p-biased subset: sums over all 2^n
// subsets, n <= 20. Independent reference route for the Monte Carlo
// estimator; the two must agree within sampling error.
double exact_containment_probability(const Hypergraph& g, double p);

}  // namespace semistrong::repro
