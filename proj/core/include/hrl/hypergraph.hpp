#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hrl/bitset.hpp"
#include "hrl/rational.hpp"

namespace hrl {

// Vertices are 0-based ints.  Triples and pairs are kept sorted ascending so
// every edge has one canonical spelling.
using Triple = std::array<int, 3>;
using VPair = std::pair<int, int>;

Triple make_triple(int a, int b, int c);
VPair make_pair(int u, int v);

// Simple undirected graph with adjacency bitsets.  Immutable after
// construction; all set-algebra helpers return new graphs.
class Graph2 {
  public:
    Graph2() : n_(0) {}
    Graph2(int n, std::vector<VPair> edges);

    static Graph2 empty(int n) { return Graph2(n, {}); }
    static Graph2 complete(int n);
    static Graph2 complete_bipartite(int n, const std::vector<int>& a,
                                     const std::vector<int>& b);

    int n() const { return n_; }
    long e() const { return static_cast<long>(edges_.size()); }
    const std::vector<VPair>& edges() const { return edges_; }
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const VBitset& nbrs(int v) const { return adj_[v]; }
    long deg(int v) const { return adj_[v].count(); }
    long deg_in(int v, const VBitset& s) const { return adj_[v].count_and(s); }

    // Number of edges with one endpoint in x and the other in y.
    // x and y must be disjoint.
    long edges_between(const VBitset& x, const VBitset& y) const;
    // Edges with both endpoints inside s.
    long edges_inside(const VBitset& s) const;

    Graph2 union_with(const Graph2& o) const;
    Graph2 intersect_with(const Graph2& o) const;
    Graph2 minus(const Graph2& o) const;
    // Keep only edges with both endpoints in s.
    Graph2 induced(const VBitset& s) const;
    // Keep only edges with one endpoint in x and the other in y (disjoint).
    Graph2 cross_restriction(const VBitset& x, const VBitset& y) const;

    bool operator==(const Graph2& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  private:
    int n_;
    std::vector<VPair> edges_;
    std::vector<VBitset> adj_;
};

// 3-uniform hypergraph.  Edge list is sorted and duplicate-free; membership
// tests are binary searches.
class Hypergraph3 {
  public:
    Hypergraph3() : n_(0) {}
    Hypergraph3(int n, std::vector<Triple> edges);

    static Hypergraph3 empty(int n) { return Hypergraph3(n, {}); }
    static Hypergraph3 complete(int n);

    int n() const { return n_; }
    long e() const { return static_cast<long>(edges_.size()); }
    const std::vector<Triple>& edges() const { return edges_; }

    bool has_edge(int a, int b, int c) const;
    bool has_edge(const Triple& t) const { return has_edge(t[0], t[1], t[2]); }
    // Rank of an edge in the sorted edge list, or -1.
    long edge_rank(const Triple& t) const;

    long degree(int v) const;
    // Number of w with {u,v,w} an edge.
    long pair_degree(int u, int v) const;
    // Smallest link size over all vertices (0 for the empty graph on n=0).
    long min_link_size() const;

    // Link of v: all pairs {u,w} with {v,u,w} an edge, as a graph on the same
    // ground set.
    Graph2 link(int v) const;
    // E(g) ∩ link(v): the part of the link supported on a carrier graph.
    Graph2 link_in(int v, const Graph2& g) const;

    // Sub-hypergraph keeping only edges inside s; vertex labels unchanged.
    Hypergraph3 induced(const VBitset& s) const;
    Hypergraph3 induced(const std::vector<int>& s) const;
    // Edges meeting each of x, y, z exactly once (parts must be disjoint).
    Hypergraph3 tripartite_restriction(const VBitset& x, const VBitset& y,
                                       const VBitset& z) const;

    Hypergraph3 union_with(const Hypergraph3& o) const;
    // All non-edges, as a hypergraph.  Materialises C(n,3)-e triples.
    Hypergraph3 complement() const;

    bool operator==(const Hypergraph3& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  private:
    int n_;
    std::vector<Triple> edges_;
};

// Tripartite 2-graph with named parts, the carrier for triangle statistics.
// Edges of g must all cross between two distinct declared parts.
struct Triad {
    std::vector<int> x, y, z;
    Graph2 g;

    Triad(std::vector<int> x_, std::vector<int> y_, std::vector<int> z_, Graph2 g_);

    static Triad from_cells(const std::vector<int>& x, const std::vector<int>& y,
                            const std::vector<int>& z, const Graph2& xy,
                            const Graph2& xz, const Graph2& yz);
    static Triad complete(const std::vector<int>& x, const std::vector<int>& y,
                          const std::vector<int>& z, int n);

    long volume() const {
        return static_cast<long>(x.size()) * static_cast<long>(y.size()) *
               static_cast<long>(z.size());
    }
};

// Triangles of a triad as a bit array indexed by part-local coordinates, so
// unions over several sub-triads reduce to word OR.
class TriangleSet {
  public:
    explicit TriangleSet(const Triad& t);
    // Triangles of a subgraph q laid out in the coordinate frame of the same
    // triad (q's edges must live on the same parts).
    TriangleSet(const Triad& frame, const Graph2& q);

    long count() const { return bits_.count(); }
    TriangleSet& operator|=(const TriangleSet& o);
    TriangleSet& operator&=(const TriangleSet& o);

    // Number of marked triangles whose vertex triple is an edge of h.
    long count_in(const Hypergraph3& h) const;
    std::vector<Triple> to_triples() const;

  private:
    const std::vector<int>*px_, *py_, *pz_;
    VBitset bits_;  // index = (ix*|y| + iy)*|z| + iz
};

// |K_3(t)|: triangles with one vertex per part.
long triangle_count(const Triad& t);
std::vector<Triple> triangle_list(const Triad& t);
// Triangles of t with their x-part vertex restricted to xs.
long triangle_count_through(const Triad& t, const VBitset& xs);

// d(h | t) = |E(h) ∩ K_3(t)| / |K_3(t)|; nullopt when t has no triangles.
std::optional<Rational> relative_density(const Hypergraph3& h, const Triad& t);
// Numerator and denominator of the above as counts.
std::pair<long, long> relative_density_counts(const Hypergraph3& h, const Triad& t);

}  // namespace hrl
