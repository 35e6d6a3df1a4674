#pragma once

#include <vector>

#include "hrl/random.hpp"

namespace hrl {

// A family of copies, each given by its set of ground-set edge ids, in a
// product space where every edge appears independently with probability p.
// Intersection means shared EDGES: two copies on overlapping vertex sets
// but disjoint edge sets are independent and contribute nothing to delta.
struct JansonInput {
    std::vector<std::vector<long>> family;
    double p = 0;
};

// lambda = sum over copies of p^|A|;
// delta  = (1/2) sum over ordered pairs of distinct copies with
//          A cap B != empty of p^(|A| + |B| - |A cap B|).
// Distinctness is positional, so a family listing the same edge set twice
// contributes to delta.  Compensated summation in a fixed block order; the
// result is byte-identical for every thread count.  Family size capped at
// 10^5 (quadratic pair scan).
struct JansonParameters {
    double lambda = 0;
    double delta = 0;
};
JansonParameters janson_parameters(const JansonInput& input, int threads = 1);

// exp(-lambda^2 / (lambda + 2 delta)); 1 when lambda = 0.  Upper bound on
// the probability that no copy is fully present.
double janson_bound(double lambda, double delta);

// The quantity the bound controls: P[no copy of the family has all its
// edges present].  Exact subset enumeration over the union support when it
// has at most 20 edges, otherwise Monte Carlo with a Wilson 95% interval.
struct NonexistenceEstimate {
    double probability = 1;
    bool exact = true;
    long support = 0;  // edges in the union of the family
    long trials = 0;   // 0 in exact mode
    double ci_low = 0;
    double ci_high = 1;
};
NonexistenceEstimate exact_nonexistence_oracle(const JansonInput& input,
                                               long mc_trials = 200000,
                                               const RngSpec& spec = RngSpec{});

}  // namespace hrl
