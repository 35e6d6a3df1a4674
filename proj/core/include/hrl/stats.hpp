#pragma once

namespace hrl {

// Compensated (Kahan) accumulator; summation order still matters for the
// last bits, so callers that want reproducibility must fix their order.
struct KahanSum {
    double sum = 0;
    double comp = 0;

    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

// Wilson score interval for a binomial proportion, clamped to [0,1] and
// guaranteed to contain successes/trials (exact at the 0/1 boundary, where
// raw rounding could otherwise exclude it).
struct WilsonInterval {
    double low = 0;
    double high = 1;
    double center = 0;
};
WilsonInterval wilson_interval(long successes, long trials, double z = 1.96);

}  // namespace hrl
