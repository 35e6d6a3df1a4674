#pragma once

#include <optional>
#include <vector>

#include "hrl/hypergraph.hpp"
#include "hrl/rational.hpp"

namespace hrl {

// Subgraph maximization results.  The witness is the set of edge indices
// (into the input's sorted edge list) of an optimal subgraph; vertex counts
// ignore isolated vertices throughout.
struct DensityWitness {
    Rational value;
    std::vector<long> edge_indices;
    long e_count = 0;
    long v_count = 0;
    // True when the input's full edge set is the unique maximizer.
    bool unique_at_full = false;
};

// Per-uniformity local density of the whole (hyper)graph:
//   0 when e = 0; 1/k when e = 1; else (e-1)/(v-k), v = non-isolated count.
Rational local_density(const Hypergraph3& h);
Rational local_density(const Graph2& g);
// Same with an explicit vertex count (for callers tracking isolated
// vertices); requires v >= k when e >= 1.
Rational local_density_counts(long e, long v, int k);

// Maximum of the local density over all subgraphs, by exhaustive search.
// Uses induced-subgraph enumeration when the vertex count permits, else an
// edge-subset meet-in-the-middle sweep (both are exact and agree; the edge
// route exists because some inputs have many vertices but few edges).
// Throws when both enumeration budgets are exceeded.
DensityWitness max_local_density(const Hypergraph3& h);
DensityWitness max_local_density(const Graph2& g);

// max over subgraphs with >= 1 edge of e(F)/v(F).
DensityWitness max_edge_vertex_ratio(const Hypergraph3& h);

// Asymmetric maximum density:
//   max over F ⊆ h1, e(F) >= 1 of e(F) / (v(F) - k + 1/m_k(h2)),  k = 3.
// m_k(h2) is computed by max_local_density and must be positive.
DensityWitness asym_max_density(const Hypergraph3& h1, const Hypergraph3& h2);

// No proper subgraph attains the maximum.
bool is_strictly_balanced(const Hypergraph3& h);
bool is_strictly_balanced_asym(const Hypergraph3& h1, const Hypergraph3& h2);

// Closed forms for linear cliques on t >= 3 branch vertices, uniformity k:
//   max local density  (C(t,2) - 1) / (t + (k-2)C(t,2) - k)
Rational clique_max_density_closed(int t, int k);
// k = 3 specialisation in expanded form (t^2-t-2)/(t^2+t-6).
Rational clique_m3_closed(int t);
// Edge/vertex ratio of the full 3-uniform clique: C(t,2)/(t + C(t,2)).
Rational clique_ratio_closed(int t);
// Closed-form asymmetric value at the full clique pair (t, s), k = 3.
Rational clique_asym_closed(int t, int s);

// c * n^(-1/m): the appearance-threshold scale for a density value m > 0.
double threshold_probability(const Rational& m, double n, double c);

// For even t: brute-force m_3(clique_t, clique_{t/2}) against brute-force
// m_3-maximum of clique_{t-1}.  The two orderings both occur; entries where
// the asymmetric value is strictly smaller are flagged rather than treated
// as errors, and closed forms are cross-checked against the search.
struct EvenCliqueComparison {
    int t = 0;
    Rational asym_value;   // m_3(clique_t, clique_{t/2})
    Rational sym_value;    // max local density of clique_{t-1}
    int cmp = 0;           // sign(asym_value - sym_value)
    bool flagged = false;  // cmp < 0
    bool closed_forms_agree = false;
};
std::vector<EvenCliqueComparison> even_clique_density_report(const std::vector<int>& ts);

}  // namespace hrl
