#pragma once

#include <vector>

#include "hrl/hypergraph.hpp"

namespace hrl {

// Partition of {0..n-1} into non-empty parts.  Parts are sorted internally
// and part_of gives constant-time membership.
struct VertexPartition {
    int n = 0;
    std::vector<std::vector<int>> parts;
    std::vector<int> part_of;

    VertexPartition() = default;
    VertexPartition(int n_, std::vector<std::vector<int>> parts_);

    static VertexPartition trivial(int n);
    // 0..n-1 split into t consecutive runs with sizes ascending and
    // differing by at most one.
    static VertexPartition intervals(int n, int t);

    int t() const { return static_cast<int>(parts.size()); }
    bool is_equitable() const;  // max part size - min part size <= 1
    // True when every part of this partition is contained in one part of c.
    bool refines(const VertexPartition& c) const;
};

// Partition of the cross pairs of a vertex partition into bipartite cells.
// For each unordered part pair (i<j) the cells cover V_i x V_j and are
// pairwise edge-disjoint.  Cell counts per pair may differ (refinement steps
// produce ragged families); is_equitable(l) asks for exactly l cells per
// pair.  Within-part pairs are not partitioned.
struct PairPartition {
    VertexPartition base;
    std::vector<std::vector<Graph2>> cells;  // indexed by pair_index(i,j)

    PairPartition() = default;
    PairPartition(VertexPartition base_, std::vector<std::vector<Graph2>> cells_);

    // One cell per pair holding the whole of V_i x V_j.
    static PairPartition complete_cells(const VertexPartition& v, int n);

    int pair_count() const {
        int t = base.t();
        return t * (t - 1) / 2;
    }
    int pair_index(int i, int j) const;
    // Cell index of the pair {u,v} within its part pair list; u,v must lie in
    // distinct parts.
    int cell_of(int u, int v) const;

    bool is_equitable(int ell) const;
    int max_cells_per_pair() const;
    long total_cells() const;

    // True when every cell of this partition is contained (as an edge set) in
    // some cell of c.  Both must share the same vertex partition.
    bool refines(const PairPartition& c) const;

  private:
    std::vector<std::vector<int>> cell_lookup_;  // per pair, |Vi|*|Vj| table
    void build_lookup();
};

// Triad of cells (alpha, beta, gamma) on part triple i<j<k: alpha between
// V_i,V_j; beta between V_i,V_k; gamma between V_j,V_k.
Triad triad_of(const PairPartition& b, int i, int j, int k, int alpha, int beta,
               int gamma);

}  // namespace hrl
