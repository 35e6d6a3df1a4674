#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "hrl/coloring.hpp"
#include "hrl/hypergraph.hpp"

namespace hrl {

// A labelled linear-clique copy: t branch vertices and one apex per branch
// pair.  Keys of apex are index pairs (i<j) into branch; all t + C(t,2)
// vertices must be distinct and every {branch[i], branch[j], apex[{i,j}]}
// must be a host edge for the copy to verify.
struct CopyCertificate {
    std::vector<int> branch;
    std::map<std::pair<int, int>, int> apex;

    int t() const { return static_cast<int>(branch.size()); }
    std::vector<Triple> edges() const;
    std::vector<int> vertices() const;  // branch then apexes, unsorted
};

// Canonical 3-uniform linear clique on t >= 2 branch vertices: branch ids
// 0..t-1, apex for the pair (i,j) at id t + rank(i,j) in lexicographic pair
// order.  v = t + C(t,2), e = C(t,2).
Hypergraph3 linear_clique3(int t);
// 2-uniform degenerate case: the complete graph K_t (no apexes).
Graph2 linear_clique2(int t);
long linear_clique_vertex_count(int t, int k);
long linear_clique_edge_count(int t);
// The canonical certificate for linear_clique3(t) inside its own host.
CopyCertificate canonical_certificate(int t);

bool verify_copy(const Hypergraph3& host, const CopyCertificate& c,
                 std::string* why = nullptr);
// All copy edges present and coloured col.
bool verify_copy_coloured(const Coloring2& psi, const CopyCertificate& c, Colour col,
                          std::string* why = nullptr);

enum class SearchOutcome { found, absent, inconclusive };

struct CliqueSearch {
    SearchOutcome outcome = SearchOutcome::absent;
    std::optional<CopyCertificate> copy;
    long branch_sets_tried = 0;
    long assignment_nodes = 0;  // apex-assignment work under an accept filter
    long budget = 0;
};

// Exhaustive copy search: branch t-subsets in lexicographic order (first
// found wins, deterministically), apexes assigned by bipartite matching
// between branch pairs and common-link candidates.  Optional filters:
//   allowed  - restrict all copy vertices to this set
//   edge_ok  - host edges admitted into copies (colour filters)
//   accept   - reject otherwise-valid certificates (family exclusions);
//              all apex assignments of a branch set are tried, so `absent`
//              really means no accepted copy exists
// A budget on branch sets tried turns exhaustion into `inconclusive`.
struct CliqueQuery {
    int t = 3;
    long budget = 50'000'000;
    std::optional<VBitset> allowed;
    std::function<bool(const Triple&)> edge_ok;           // null = all edges
    std::function<bool(const CopyCertificate&)> accept;   // null = accept all
};

CliqueSearch find_linear_clique(const Hypergraph3& host, const CliqueQuery& q);
CliqueSearch contains_linear_clique(const Hypergraph3& host, int t,
                                    long budget = 50'000'000);

// All copies of the canonical t-clique as deduplicated host-edge-rank sets
// (used by the arrow engine; complete=false when the budget tripped).
struct CopyList {
    std::vector<std::vector<long>> edge_sets;
    bool complete = true;
    long nodes = 0;
};
CopyList all_linear_clique_copies(const Hypergraph3& host, int t,
                                  long budget = 50'000'000);

// Generic pattern machinery (any small 3-graph pattern).
// count: number of injective vertex maps carrying every pattern edge to a
// host edge (labelled copies).
struct PatternCount {
    long count = 0;
    bool complete = true;
    long nodes = 0;
};
PatternCount count_labelled_copies(const Hypergraph3& host, const Hypergraph3& pattern,
                                   long node_budget = 50'000'000);
// Distinct edge sets of copies of the pattern.
CopyList enumerate_pattern_copies(const Hypergraph3& host, const Hypergraph3& pattern,
                                  long node_budget = 50'000'000);

// Complete tripartite 3-graph (all triples meeting each part once) on
// consecutive interval parts of sizes floor(n/3) <= ... <= ceil(n/3).
Hypergraph3 tripartite_seed(int n);
// Same on three explicit disjoint parts over ground set n.
Hypergraph3 complete_tripartite3(int n, const std::vector<int>& v1,
                                 const std::vector<int>& v2,
                                 const std::vector<int>& v3);

// Merge three r-clique copies living one per part of a complete tripartite
// host into a 3r-clique: cross branch pairs get apexes from the free part of
// a third part via row-major injections.  Requires s - (r + C(r,2)) >= r*r
// for part size s; throws std::invalid_argument otherwise.
struct TripleCliqueEmbedding {
    CopyCertificate result;     // the 3r-clique certificate
    Hypergraph3 host;           // tripartite host ∪ the three input copies
};
TripleCliqueEmbedding embed_triple_cliques(int n, const std::vector<int>& v1,
                                           const std::vector<int>& v2,
                                           const std::vector<int>& v3,
                                           const CopyCertificate& k1,
                                           const CopyCertificate& k2,
                                           const CopyCertificate& k3);

}  // namespace hrl
