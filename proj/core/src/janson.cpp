#include "hrl/janson.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "hrl/parallel.hpp"
#include "hrl/stats.hpp"

namespace hrl {

WilsonInterval wilson_interval(long successes, long trials, double z) {
    if (trials < 1) throw std::invalid_argument("wilson_interval: trials must be >= 1");
    if (successes < 0 || successes > trials)
        throw std::invalid_argument("wilson_interval: successes out of range");
    double n = static_cast<double>(trials);
    double ph = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (ph + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(ph * (1 - ph) / n + z2 / (4 * n * n)) / denom;
    WilsonInterval w;
    w.center = center;
    // The interval always contains ph mathematically (with equality at the
    // 0/1 boundary); enforce that through the rounding of center +- half.
    w.low = std::min(std::max(0.0, center - half), ph);
    w.high = std::max(std::min(1.0, center + half), ph);
    return w;
}

namespace {

constexpr long kMaxFamily = 100000;

std::vector<std::vector<long>> normalized_family(const JansonInput& input) {
    if (static_cast<long>(input.family.size()) > kMaxFamily)
        throw std::invalid_argument("janson: instance too large (family > 1e5)");
    if (!(input.p >= 0.0) || input.p > 1.0)
        throw std::invalid_argument("janson: p must lie in [0,1]");
    std::vector<std::vector<long>> fam;
    fam.reserve(input.family.size());
    for (auto c : input.family) {
        if (c.empty()) throw std::invalid_argument("janson: empty edge set in family");
        for (long id : c)
            if (id < 0) throw std::invalid_argument("janson: negative edge id");
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        fam.push_back(std::move(c));
    }
    return fam;
}

long intersection_size(const std::vector<long>& a, const std::vector<long>& b) {
    long k = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++k; ++i; ++j; }
    }
    return k;
}

}  // namespace

JansonParameters janson_parameters(const JansonInput& input, int threads) {
    std::vector<std::vector<long>> fam = normalized_family(input);
    long m = static_cast<long>(fam.size());
    JansonParameters out;

    KahanSum lambda;
    for (const auto& c : fam) lambda.add(std::pow(input.p, static_cast<double>(c.size())));
    out.lambda = lambda.value();

    // Pair scan in row blocks; per-block compensated sums are reduced in
    // block order, so the value does not depend on the thread count.
    constexpr long kBlock = 64;
    long blocks = (m + kBlock - 1) / kBlock;
    std::vector<KahanSum> acc(static_cast<size_t>(blocks));
    parallel_for(blocks, threads, [&](long b) {
        KahanSum& s = acc[static_cast<size_t>(b)];
        long lo = b * kBlock, hi = std::min(m, lo + kBlock);
        for (long i = lo; i < hi; ++i) {
            const auto& a = fam[static_cast<size_t>(i)];
            for (long j = i + 1; j < m; ++j) {
                const auto& c = fam[static_cast<size_t>(j)];
                long k = intersection_size(a, c);
                if (k == 0) continue;
                double expo = static_cast<double>(a.size()) +
                              static_cast<double>(c.size()) - static_cast<double>(k);
                s.add(std::pow(input.p, expo));
            }
        }
    });
    KahanSum delta;
    for (const KahanSum& s : acc) delta.add(s.value());
    out.delta = delta.value();
    return out;
}

double janson_bound(double lambda, double delta) {
    if (lambda < 0 || delta < 0)
        throw std::invalid_argument("janson_bound: parameters must be nonnegative");
    if (lambda == 0) return 1.0;
    return std::exp(-lambda * lambda / (lambda + 2 * delta));
}

NonexistenceEstimate exact_nonexistence_oracle(const JansonInput& input, long mc_trials,
                                               const RngSpec& spec) {
    std::vector<std::vector<long>> fam = normalized_family(input);

    // Only edges in the union support matter for containment.
    std::vector<long> support;
    for (const auto& c : fam) support.insert(support.end(), c.begin(), c.end());
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    long m = static_cast<long>(support.size());

    NonexistenceEstimate est;
    est.support = m;
    auto index_of = [&support](long id) {
        return static_cast<long>(std::lower_bound(support.begin(), support.end(), id) -
                                 support.begin());
    };
    std::vector<uint32_t> masks;
    masks.reserve(fam.size());
    for (const auto& c : fam) {
        uint32_t mk = 0;
        if (m <= 20)
            for (long id : c) mk |= uint32_t{1} << index_of(id);
        masks.push_back(mk);
    }

    if (m <= 20) {
        double q = 1.0 - input.p;
        std::vector<double> pw(static_cast<size_t>(m) + 1, 1.0);
        std::vector<double> qw(static_cast<size_t>(m) + 1, 1.0);
        for (long k = 1; k <= m; ++k) {
            pw[static_cast<size_t>(k)] = pw[static_cast<size_t>(k - 1)] * input.p;
            qw[static_cast<size_t>(k)] = qw[static_cast<size_t>(k - 1)] * q;
        }
        KahanSum total;
        for (uint32_t s = 0; s < (uint32_t{1} << m); ++s) {
            bool hit = false;
            for (uint32_t mk : masks)
                if ((s & mk) == mk) { hit = true; break; }
            if (hit) continue;
            int on = __builtin_popcount(s);
            total.add(pw[static_cast<size_t>(on)] * qw[static_cast<size_t>(m - on)]);
        }
        est.probability = total.value();
        est.exact = true;
        est.ci_low = est.ci_high = est.probability;
        return est;
    }

    if (mc_trials < 1)
        throw std::invalid_argument("exact_nonexistence_oracle: mc_trials must be >= 1");
    long misses = 0;
    for (long i = 0; i < mc_trials; ++i) {
        Rng rng(substream(spec, static_cast<uint64_t>(i)));
        std::vector<char> present(static_cast<size_t>(m));
        for (long k = 0; k < m; ++k)
            present[static_cast<size_t>(k)] = rng.bernoulli(input.p) ? 1 : 0;
        bool hit = false;
        for (const auto& c : fam) {
            bool all = true;
            for (long id : c)
                if (!present[static_cast<size_t>(index_of(id))]) { all = false; break; }
            if (all) { hit = true; break; }
        }
        if (!hit) ++misses;
    }
    est.exact = false;
    est.trials = mc_trials;
    est.probability = static_cast<double>(misses) / static_cast<double>(mc_trials);
    WilsonInterval w = wilson_interval(misses, mc_trials);
    est.ci_low = w.low;
    est.ci_high = w.high;
    return est;
}

}  // namespace hrl
