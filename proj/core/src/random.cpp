#include "hrl/random.hpp"

#include <stdexcept>

namespace hrl {

uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RngSpec substream(const RngSpec& s, uint64_t i) {
    return RngSpec{s.master_seed, mix64(s.stream_id ^ mix64(i + 0x51ed2701a4d0a8b3ULL))};
}

Rng::Rng(const RngSpec& spec) {
    uint64_t seed = mix64(spec.master_seed) ^ mix64(spec.stream_id ^ 0x6a09e667f3bcc908ULL);
    for (auto& w : s_) {
        seed += 0x9e3779b97f4a7c15ULL;
        w = mix64(seed);
    }
}

static inline uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

uint64_t Rng::next() {
    uint64_t result = rotl(s_[1] * 5, 7) * 9;
    uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

uint64_t Rng::below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
    uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
        uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

double Rng::real01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

bool Rng::bernoulli(double p) {
    if (p <= 0.0) {
        next();  // keep the stream position-stable regardless of p
        return false;
    }
    if (p >= 1.0) {
        next();
        return true;
    }
    return real01() < p;
}

Hypergraph3 sample_uniform_3graph(int n, double p, const RngSpec& spec) {
    Rng rng(spec);
    std::vector<Triple> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (rng.bernoulli(p)) es.push_back({a, b, c});
    return Hypergraph3(n, std::move(es));
}

Hypergraph3 perturb_union(const Hypergraph3& seed, double p, const RngSpec& spec) {
    return seed.union_with(sample_uniform_3graph(seed.n(), p, spec));
}

VertexPartition random_equitable_partition(int n, int t, const RngSpec& spec) {
    if (t <= 0 || t > n)
        throw std::invalid_argument("random_equitable_partition: need 0 < t <= n");
    Rng rng(spec);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);
    std::vector<std::vector<int>> parts(t);
    int small = n / t, big_count = n % t;
    int at = 0;
    for (int p = 0; p < t; ++p) {
        int sz = small + (p >= t - big_count ? 1 : 0);
        for (int i = 0; i < sz; ++i) parts[p].push_back(order[at++]);
    }
    return VertexPartition(n, std::move(parts));
}

PairPartition random_pair_partition(const VertexPartition& v, int ell,
                                    const RngSpec& spec) {
    if (ell <= 0) throw std::invalid_argument("random_pair_partition: ell must be >= 1");
    Rng rng(spec);
    int t = v.t();
    std::vector<std::vector<Graph2>> cells(t * (t - 1) / 2);
    int at = 0;
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            std::vector<std::vector<VPair>> buckets(ell);
            for (int u : v.parts[i])
                for (int w : v.parts[j])
                    buckets[rng.below_int(ell)].push_back(make_pair(u, w));
            std::vector<Graph2> lst;
            lst.reserve(ell);
            for (auto& b : buckets) lst.emplace_back(v.n, std::move(b));
            cells[at++] = std::move(lst);
        }
    }
    return PairPartition(v, std::move(cells));
}

Hypergraph3 planted_two_density(int n, double p_dense, double p_sparse,
                                const RngSpec& spec) {
    Rng rng(spec);
    int half = n / 2;
    std::vector<Triple> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                int inside = (a < half) + (b < half) + (c < half);
                if (rng.bernoulli(inside >= 2 ? p_dense : p_sparse))
                    es.push_back({a, b, c});
            }
    return Hypergraph3(n, std::move(es));
}

}  // namespace hrl
