#pragma once

#include <cstdint>
#include <vector>

#include "hrl/hypergraph.hpp"
#include "hrl/partition.hpp"

namespace hrl {

// Every randomized routine takes an explicit seed spec; nothing reads global
// state.  Substreams are derived by hashing, so trial i is reproducible in
// isolation and independent of how trials are scheduled across threads.
struct RngSpec {
    uint64_t master_seed = 0;
    uint64_t stream_id = 0;
};

uint64_t mix64(uint64_t x);                      // splitmix64 finalizer
RngSpec substream(const RngSpec& s, uint64_t i);  // hash-derived child stream

// xoshiro256** seeded from an RngSpec via splitmix64.  Hand-rolled so that
// byte-identical output does not depend on a standard library's
// distribution implementations.
class Rng {
  public:
    explicit Rng(const RngSpec& spec);

    uint64_t next();
    // Uniform in [0, bound); bound > 0.  Rejection sampling, unbiased.
    uint64_t below(uint64_t bound);
    int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }
    // Uniform in [0,1) with 53 random bits.
    double real01();
    bool bernoulli(double p);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    uint64_t s_[4];
};

// Binomial random 3-graph: every triple of {0..n-1} kept independently with
// probability p.  Triples are visited in lexicographic order, one draw each,
// so the decision for a given triple depends only on (spec, its position).
Hypergraph3 sample_uniform_3graph(int n, double p, const RngSpec& spec);

// seed ∪ sample_uniform_3graph(seed.n(), p).
Hypergraph3 perturb_union(const Hypergraph3& seed, double p, const RngSpec& spec);

// Uniformly random equitable partition into t parts (sizes differ by <= 1).
VertexPartition random_equitable_partition(int n, int t, const RngSpec& spec);

// Independent uniform colour in [ell] for every cross pair; cells of colour c
// collect the pairs coloured c.  Pairs are visited part-pair by part-pair in
// lexicographic order.
PairPartition random_pair_partition(const VertexPartition& v, int ell,
                                    const RngSpec& spec);

// Two-density planted instance: triples with at least two vertices in the
// planted half {0..n/2-1} appear with probability p_dense, all others with
// p_sparse.  Used as a refinement target with a known hidden structure.
Hypergraph3 planted_two_density(int n, double p_dense, double p_sparse,
                                const RngSpec& spec);

}  // namespace hrl
