#pragma once

#include <optional>
#include <vector>

#include "hrl/hypergraph.hpp"
#include "hrl/random.hpp"

namespace hrl {

// A bipartite pair inside a host graph: two disjoint vertex sets and the
// edges crossing them, in host numbering.
struct BipartitePair {
    std::vector<int> xs, ys;
    Graph2 g;

    // Keeps only the crossing edges of `host`.
    static BipartitePair from(const Graph2& host, std::vector<int> xs,
                              std::vector<int> ys);
    long e() const;
    double density() const;  // e / (|X||Y|)
    // Induced sub-pair on subsets (host ids).
    BipartitePair slice(const std::vector<int>& xsub, const std::vector<int>& ysub) const;
};

// Worst sub-structure found by an audit: the subsets (one per part, host
// ids), their density, and its deviation from the reference density.
struct DeviationWitness {
    std::vector<std::vector<int>> subsets;
    double density = 0;
    double deviation = 0;
};

struct RegularityVerdict {
    bool regular = true;
    double delta = 0;           // the δ audited against
    double d_ref = 0;           // reference density
    double delta_measured = 0;  // max deviation over admissible sub-structures
    long tested = 0;
    bool exhaustive = false;    // exact enumeration, not sampling
    std::optional<DeviationWitness> witness;
};

// (δ,d)-regularity of a bipartite pair: every X' ⊆ X, Y' ⊆ Y with
// |X'| >= δ|X| and |Y'| >= δ|Y| has |d(X',Y') - d| <= δ.  Exact subset
// enumeration when 2^|X|·2^|Y| is affordable; otherwise `samples` random
// admissible sub-pairs with sizes uniform in [max(1,ceil(δ|side|)), |side|]
// (a one-sided check: `regular` then means "no violation found").
// Requires δ > 0.
RegularityVerdict pair_regularity_audit(const BipartitePair& p, double delta, double d,
                                        long samples = 4000,
                                        const RngSpec& spec = RngSpec{});
// Reference density defaulting to the pair's own.
RegularityVerdict pair_regularity_audit(const BipartitePair& p, double delta,
                                        long samples = 4000,
                                        const RngSpec& spec = RngSpec{});

// Regularity parameter surviving restriction to slices of relative size
// >= alpha: δ' = max(δ/alpha, 2δ);  requires 0 < alpha <= 1.
double sliced_delta(double delta, double alpha);

// Audit that the induced sub-pair on the given slices is (δ', d)-regular
// with δ' = sliced_delta(δ, min relative slice size).
RegularityVerdict slicing_audit(const BipartitePair& p, const std::vector<int>& xslice,
                                const std::vector<int>& yslice, double delta, double d,
                                long samples = 4000,
                                const RngSpec& spec = RngSpec{});

// Count windows implied by regularity.  Windows are clamped to [0, N] where
// N is the relevant product of part sizes.
struct CountWindow {
    double lo = 0, hi = 0;
    bool contains(double x) const { return lo <= x && x <= hi; }
};

// Triangles of a triad whose three pairs are (δ,d)-regular:
//   [(1-2δ)(d-δ)^3, (d+δ)^3 + 2δ] · |X||Y||Z|.
CountWindow triangle_count_window(long nx, long ny, long nz, double delta, double d);
// Coarser symmetric window (d^3 ∓ 4δ)·|X||Y||Z|, for d <= 1/2.
CountWindow triangle_count_window_simple(long nx, long ny, long nz, double delta,
                                         double d);

struct WindowAudit {
    long count = 0;
    CountWindow window;
    bool inside = false;
};
// Exact triangle count of the triad against triangle_count_window.
WindowAudit triad_triangle_audit(const Triad& t, double delta, double d);

// Triangles through a subset X' of the first part, for (δ,d)-regular
// (X,Y) and (X,Z) pairs and an arbitrary Y-Z graph:
//   (d∓δ)·d·|X'|·e(Y,Z)  ∓  2δ·|X||Y||Z|.
CountWindow through_subset_window(long xsub_size, long e_yz, long nx, long ny, long nz,
                                  double delta, double d);
WindowAudit through_subset_audit(const Triad& t, const std::vector<int>& xsub,
                                 double delta, double d);

// Joint-neighborhood band over ordered ℓ-tuples from X: for a (δ,d)-regular
// pair and Y' ⊆ Y, all but at most 2δℓ|X|^ℓ tuples (x_1..x_ℓ) satisfy
//   |N(x_1) ∩ … ∩ N(x_ℓ) ∩ Y'| = (d ± δ)^ℓ |Y'|.
// Exhaustive over X^ℓ; keep |X|^ℓ modest.
struct TupleBandAudit {
    long tuple_count = 0;
    long violations = 0;
    double allowed = 0;  // 2δℓ|X|^ℓ
    bool ok = false;     // violations <= allowed
    double lo = 0, hi = 0;  // the per-tuple band
};
TupleBandAudit graph_tuple_audit(const BipartitePair& p, const std::vector<int>& ysub,
                                 int ell, double delta, double d);

// Vertex-set edge density of a 3-graph on three disjoint sets.
double weak_density(const Hypergraph3& h, const std::vector<int>& xs,
                    const std::vector<int>& ys, const std::vector<int>& zs);
long cross_edge_count(const Hypergraph3& h, const std::vector<int>& xs,
                      const std::vector<int>& ys, const std::vector<int>& zs);

// Weak δ-regularity of (X,Y,Z) with respect to H: every triple of subsets
// of relative size >= δ deviates by at most δ from d.  Exact when
// 8^(max side) is affordable, else sampled as in the pair audit.
RegularityVerdict weak_regularity_audit(const Hypergraph3& h, const std::vector<int>& xs,
                                        const std::vector<int>& ys,
                                        const std::vector<int>& zs, double delta, double d,
                                        long samples = 4000,
                                        const RngSpec& spec = RngSpec{});
RegularityVerdict weak_regularity_audit(const Hypergraph3& h, const std::vector<int>& xs,
                                        const std::vector<int>& ys,
                                        const std::vector<int>& zs, double delta,
                                        long samples = 4000,
                                        const RngSpec& spec = RngSpec{});

// (δ,d,r)-regularity of H with respect to a triad P: for every family
// Q_1..Q_r of subtriads of P whose triangle sets jointly cover at least
// δ|K_3(P)| > 0 triangles, the H-density over the union is within δ of d.
// The audit is sampled (families of r random edge-subtriads, each edge kept
// with probability 1/2), except that the single-member family {P} is always
// tested first, making the necessary condition |d_H(K_3(P)) - d| <= δ
// deterministic.
struct StrongVerdict {
    bool regular = true;
    double delta = 0;
    double d_ref = 0;
    double delta_measured = 0;
    long families_tested = 0;     // admissible families evaluated
    long families_skipped = 0;    // samples under the triangle threshold
    long base_triangles = 0;      // |K_3(P)|
};
StrongVerdict strong_regularity_audit(const Hypergraph3& h, const Triad& p, double delta,
                                      double d, int r, long samples = 400,
                                      const RngSpec& spec = RngSpec{});

// Evaluation of one explicit family of edge-subtriads (each a subgraph of
// p.g) against the (δ,d) criterion: admissible iff the union of the members'
// triangle sets covers at least δ|K_3(P)| > 0 triangles, violating iff it is
// admissible and the H-density over the union deviates from d by more than δ.
struct FamilyCheck {
    bool admissible = false;
    bool violating = false;
    long union_triangles = 0;
    long in_h = 0;
    double density = 0;
    double deviation = 0;
};
FamilyCheck strong_family_check(const Hypergraph3& h, const Triad& p,
                                const std::vector<Graph2>& family, double delta,
                                double d);

}  // namespace hrl
