#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hrl/cliques.hpp"
#include "hrl/coloring.hpp"
#include "hrl/hypergraph.hpp"
#include "hrl/rational.hpp"
#include "hrl/regularity.hpp"

namespace hrl {

// Copies of `pattern` in `host` as edge-rank sets; linear-clique patterns are
// routed to the specialized enumerator, everything else to the generic one.
CopyList pattern_copies(const Hypergraph3& host, const Hypergraph3& pattern,
                        long budget = 50'000'000);

enum class ArrowOutcome { arrows, colorable, inconclusive };

// Exact decision of "every 2-colouring of host's edges contains a red copy
// of f1 or a blue copy of f2".  When colorable, `good_coloring` holds a
// mono-copy-free colouring by host edge rank, re-verifiable against the copy
// lists.  `explored` counts assignment nodes of the backtracking tree.
struct ArrowVerdict {
    ArrowOutcome outcome = ArrowOutcome::colorable;
    bool arrows = false;
    std::optional<std::vector<Colour>> good_coloring;
    long explored = 0;
    long copies_f1 = 0;
    long copies_f2 = 0;
};

// Backtracking over edge colourings with per-copy alive counters: a branch
// dies when some f1 copy goes fully red or some f2 copy fully blue.  Edges
// are ordered by descending copy membership.  When f1 and f2 are the same
// pattern the first edge is pinned red (colour-swap symmetry); the reduction
// is disabled for distinct patterns.  Patterns must have at least one edge.
// Exceeding the node budget yields `inconclusive`.
ArrowVerdict decide_arrow(const Hypergraph3& host, const Hypergraph3& f1,
                          const Hypergraph3& f2, long budget = 20'000'000);

// Same decision with exclusion families: copies of f1 whose vertex set lies
// in excl1 (and of f2 in excl2) do not count as monochromatic successes.
// Empty families reproduce decide_arrow exactly; the symmetry reduction
// additionally requires the two families to coincide.
ArrowVerdict family_ramsey_audit(const Hypergraph3& host, const Hypergraph3& f1,
                                 const Hypergraph3& f2,
                                 const std::vector<std::vector<int>>& excl1,
                                 const std::vector<std::vector<int>>& excl2,
                                 long budget = 20'000'000);

// True when the colouring (host edge rank -> colour) leaves no f1 copy fully
// red and no f2 copy fully blue; the re-verification path for `colorable`.
bool colouring_avoids_mono(const Hypergraph3& host, const Hypergraph3& f1,
                           const Hypergraph3& f2, const std::vector<Colour>& col);

// Subset-Ramsey survey: does every induced sub-host on at least ceil(mu*n)
// vertices arrow (f1, f2)?  Exact mode walks subsets by decreasing size and
// stops at the first failure; it is the default for n <= 14.  Sampled mode
// draws `samples` subsets with size uniform in [ceil(mu*n), n].  A failing
// subset is returned as the witness; inconclusive sub-decisions make the
// overall verdict inconclusive unless a failure was found first.
struct SubsetRamseyReport {
    ArrowOutcome outcome = ArrowOutcome::arrows;  // arrows here means "pass"
    bool pass = false;
    long subsets_tested = 0;
    long threshold = 0;  // ceil(mu * n)
    bool exhaustive = false;
    std::optional<std::vector<int>> witness;
};
SubsetRamseyReport subset_ramsey_audit(const Hypergraph3& host, const Hypergraph3& f1,
                                       const Hypergraph3& f2, double mu,
                                       long samples = 200,
                                       const RngSpec& spec = RngSpec{},
                                       long budget_per_subset = 2'000'000);

// Vertices of the A side (pair.xs) with degree at least k.  Requires
// e(pair) >= d|A||B| and k <= d|B|/2; under those the result provably holds
// at least d|A|/2 vertices, which is asserted.
std::vector<int> support_filter(const BipartitePair& pair, const Rational& d, long k);

// Star statistics in a bipartite pair with centers on the A side: the exact
// K_{1,m} copy count sum_v C(deg(v), m), plus a greedy maximal family of
// pairwise vertex-disjoint stars (centers ascending, each taking its m
// smallest unused neighbours) and the set of their centers.
struct StarFamilyReport {
    Rational copy_count;
    std::vector<std::pair<int, std::vector<int>>> disjoint_stars;
    std::vector<int> centers;
};
StarFamilyReport star_supersaturation(const BipartitePair& pair, int m);

// Stages of the constructive finder, in pipeline order.  `red_search`
// onward belong to the majority branch, `constructive` to the guard-failure
// branch.
enum class FinderStage {
    setup,
    majority,
    link_guard,
    constructive,
    red_search,
    half_search,
    star_harvest,
    center_search,
    assembly,
};

struct FinderParams {
    Rational d3{1, 2};  // reference densities for all thresholds
    Rational d2{1};
    Rational eps{1, 10};  // slack in the good-tuple link bound
    long budget = 5'000'000;
};

// Outcome of the staged search, with the measured sets and thresholds of
// whichever stage concluded the run.  A copy is only ever present when
// verify_copy (and the colour check) passed.
struct FinderDiagnostics {
    FinderStage stage = FinderStage::setup;
    bool found = false;
    std::optional<CopyCertificate> copy;
    Colour copy_colour = Colour::red;
    bool majority_red = false;
    bool majority_blue = false;
    Rational guard_threshold;   // required blue-link mass per X-vertex
    Rational family_threshold;  // required joint-link mass of a good tuple
    int guard_violator = -1;    // X-vertex with a small blue link, if any
    int opposite_pick = -1;     // the Z-vertex chosen in the constructive branch
    std::vector<int> a_v;       // Z-side support of the violator's red link
    std::vector<int> a_u;       // X-side support of the pick's red link
    long inner_edges = 0;       // host edges spanned by (a_u, Y, a_v)
    std::vector<int> centers;   // star centers harvested from the residual link
    std::string note;           // which quantitative precondition failed, if any
};

// Staged monochromatic K_t-clique search in a two-layer host: h carries the
// tripartite edges over the triad's parts (one vertex in each), r carries
// the non-crossing remainder (e.g. edges inside a part), and psi colours
// their union.
//
// Pipeline: (1) majority colour over h; (2) with a blue majority, require
// every X-vertex's blue link on the Y-Z carrier to hold at least
// d3^v * d2^(2v+1)/2 * |Y||Z| pairs, v = vertices of the half clique; a
// violator triggers the constructive branch (largest red co-degree pick in
// Z, degree->=t supports on both sides, inner majority between them, an
// exhaustive mono K_{t-1} inside the supports extended through the pick by
// matched Y-apexes); (3) otherwise search a red K_t, then a blue half
// clique inside X whose vertex set has joint blue link of at least
// (d3^v - eps) d2^(2v+1)|Y||Z| pairs, harvest vertex-disjoint K_{1,t/2}
// stars from that residual link, search a second blue half clique with
// branch on the star centers, and assemble the blue K_t with the star
// leaves as cross apexes.  Every exit with a copy re-verifies it in its
// colour; quantitative shortfalls return diagnostics instead.  t even >= 4.
FinderDiagnostics constructive_mono_finder(const Hypergraph3& h, const Hypergraph3& r,
                                           const Triad& p, const Coloring2& psi, int t,
                                           const FinderParams& params = FinderParams{});

}  // namespace hrl
