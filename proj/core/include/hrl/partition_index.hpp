#pragma once

#include <array>
#include <functional>
#include <vector>

#include "hrl/hypergraph.hpp"
#include "hrl/partition.hpp"
#include "hrl/random.hpp"
#include "hrl/regularity.hpp"

namespace hrl {

// Mean-square relative density of a pair partition.  For every part triple
// i<j<k and every choice of one cell per side pair, the triad holding T
// triangles, h of them edges of H, contributes (h^2 + (T-h)^2)/T; the total
// is divided by n^3.  Both H and its complement are weighed, which is what
// the (T-h)^2 term amounts to.  Triads without triangles contribute 0, and
// pairs inside one vertex part are never counted.  Always in [0,1].
//
// Cell counts per pair may be ragged (witness refinement below produces
// ragged families); only structural agreement of b with v is required.
Rational compute_index(const VertexPartition& v, const PairPartition& b,
                       const Hypergraph3& h);

// Edge mass of the cells of `bprime` that are not contained inside a single
// cell of `b`, divided by n^2.  Exact; a true refinement scores 0.  Both
// partitions must be built over the identical vertex partition v.
Rational beta_refinement_deficit(const PairPartition& bprime, const PairPartition& b,
                                 const VertexPartition& v);

// The objects the refinement loop threads through, with the index kept in
// sync.  The complement is materialised because downstream consumers audit
// both colour classes; the index itself already accounts for both.
struct IndexState {
    VertexPartition v;
    PairPartition b;
    Hypergraph3 h;
    Hypergraph3 hbar;
    Rational index;

    static IndexState make(VertexPartition v, PairPartition b, Hypergraph3 h);
};

// One violating family of r edge-subtriads found for a triad, kept as the
// per-cell restrictions of the family members' edge sets.
struct IncrementReport {
    PairPartition refined;        // cells split along witness-membership atoms
    Rational index_before;
    Rational index_after;
    Rational gain;                // index_after - index_before, never negative
    long triads_audited = 0;      // triads that reached the family sampler
    long witnesses_used = 0;      // triads whose violating family refined cells
    double irregular_mass = 0;    // triangle share of witness triads, over n^3
    bool budget_exhausted = false;  // more witness triads existed than the budget
    long cell_bound_exponent = 0;   // r * t * (max cells per pair) before refining
};

// Witness-driven refinement step.  Every triad of state.b is audited against
// its own density with `families_per_triad` random families of r
// edge-subtriads (edges kept with probability 1/2); a family is admissible
// when its triangle union covers at least delta3 * |K_3(P)| triangles, and
// violating when the H-density over the union deviates from the triad's by
// more than delta3.  The first violating family becomes the triad's witness.
// Witnesses are consumed in canonical triad order up to witness_budget; each
// affected cell is split into the atoms of edge membership across all
// witness graphs touching it.  The realized index change is measured, not
// assumed.
//
// Requires the crossing-triple mass of v to be at least
// (1 - delta3/2) * C(n,3); coarser vertex partitions are refused.
// Deterministic for fixed spec, independent of `threads`.
IncrementReport increment_refine(const IndexState& state, double delta3, int r,
                                 long witness_budget, long families_per_triad = 50,
                                 const RngSpec& spec = RngSpec{}, int threads = 1);

// Post-refinement cleanup gate.  Audits every cell for (delta2, own-density)
// regularity; within each part pair the failing cells' edges are pooled,
// shuffled, and redistributed into cells of the same sizes.  The
// symmetric-difference mass against the input cells is reported as `slack`
// (edges / n^2).  A pair with a single failing cell is left unchanged (its
// pool re-fills the one cell).
struct GateReport {
    PairPartition adjusted;
    long cells_tested = 0;
    long cells_failed = 0;
    long sym_diff_edges = 0;
    Rational slack;
};
GateReport approximation_gate(const VertexPartition& v, const PairPartition& b,
                              double delta2, long samples = 400,
                              const RngSpec& spec = RngSpec{});

// Largest zeta accepted by slice_partition for this target, halved for
// margin: 1 / (2 l^2 (l^2 + 1)).
double slice_zeta(int ell_target);

// Random re-equitization into exactly ell_target^2 cells per pair.  A cell
// of density d >= 1/l^2 is sliced edge-by-edge into k = floor(d l^2) classes
// of expected density exactly 1/l^2 plus a residue class hit with
// probability (d - k/l^2)/d; residues and sub-threshold cells are pooled per
// pair and re-sliced uniformly into the remaining l^2 - sum(k) classes.
// zeta must satisfy floor(1/(l^-2 - zeta)) = l^2 (checked numerically); it
// is the slack the caller intends to audit output densities against.
PairPartition slice_partition(const PairPartition& b, int ell_target, double zeta,
                              const RngSpec& spec = RngSpec{});

// Per-part-triple weak regularity survey: each triple of distinct parts is
// audited at (delta, own density); pass when the failing fraction is at most
// delta.  Fewer than three parts passes vacuously.
struct PartitionWeakReport {
    long triples_tested = 0;
    long irregular = 0;
    double irregular_fraction = 0;
    bool pass = false;
    std::vector<std::array<int, 3>> irregular_triples;
    std::vector<DeviationWitness> witnesses;  // parallel to irregular_triples
};
PartitionWeakReport partition_weak_regularity(const Hypergraph3& h,
                                              const VertexPartition& v, double delta,
                                              long samples_per_triple = 400,
                                              const RngSpec& spec = RngSpec{});

// Equitable refinement until partition_weak_regularity passes at delta or
// the round cap is hit.  Splitting halves every part, ordering witness-set
// vertices first so the cut tracks the worst deviations; parts of size 1 are
// kept.  The output refines v0, stays equitable, and has at least t_min
// parts.  max_t = 0 leaves the part count uncapped.
struct WeakRegularizeResult {
    VertexPartition partition;
    bool passed = false;
    int rounds = 0;
    PartitionWeakReport report;  // audit of the returned partition
};
WeakRegularizeResult weak_regularize(const Hypergraph3& h, const VertexPartition& v0,
                                     double delta, int t_min, int max_t = 0,
                                     int max_rounds = 6, long samples_per_triple = 400,
                                     const RngSpec& spec = RngSpec{});

// Iterative refinement driver.
struct PipelineCaps {
    int max_iterations = 0;        // 0: use ceil(8 / delta3^4)
    int max_t = 0;                 // part-count cap for the weak step; 0: none
    int max_ell = 2;               // cap on the slicing parameter
    long witness_budget = 32;
    long families_per_triad = 16;  // family samples per triad in the increment
    long audit_samples = 200;      // sampling effort for the cell/weak audits
    int weak_rounds = 4;
    int threads = 1;
};

enum class StopReason { regular, iteration_cap, budget };

// Exact index ledger for one iteration.  Between consecutive fields the
// pipeline ran, in order: witness refinement, approximation gate, slicing,
// weak re-partition with cell rebuild.  beta is the slicing step's
// non-refinement mass / n^2, slack the gate's shuffled mass / n^2.
struct IterationRecord {
    Rational index_before;
    Rational index_after_increment;
    Rational index_after_gate;
    Rational index_after_slice;
    Rational index_after;
    Rational beta;
    Rational slack;
    double irregular_mass = 0;
    long witnesses_used = 0;
    bool witness_budget_hit = false;
};

struct RefinementTrace {
    std::vector<IterationRecord> iterations;
    Rational initial_index;
    Rational final_index;
    StopReason reason = StopReason::regular;
    int ell_final = 1;
    // audits of the final state, at delta2(ell_final) / delta3
    bool equitable_pass = false;   // vertex sizes within 1, uniform cell counts
    bool cell_pass = false;        // cell regularity failing fraction <= delta2
    bool weak_pass = false;        // partition_weak_regularity verdict
    bool strong_pass = false;      // no triad witness found within budget
};

struct PipelineResult {
    VertexPartition v;
    PairPartition b;
    RefinementTrace trace;
};

// Full refinement loop: audit the four exit conditions (equitability, cell
// regularity at delta2(ell), weak regularity at delta2(ell), absence of
// triad witnesses at delta3); while any fails, run witness refinement, gate,
// re-slice at the smallest ell whose ell^2 holds the refined cell count
// (capped), then weak re-partition and rebuild cells on the new parts.
// Stops on success (reason regular) or at min(caps.max_iterations,
// ceil(8/delta3^4)) iterations; reason budget when the final iteration also
// ran out of witness budget.  Fully deterministic for a fixed spec,
// independent of caps.threads.
PipelineResult ghrl_pipeline(const Hypergraph3& h, double delta3,
                             const std::function<double(int)>& delta2,
                             const std::function<int(int)>& r_of_ell, int ell0, int t0,
                             const PipelineCaps& caps, const RngSpec& spec = RngSpec{});
// delta2(l) = min(0.1, l^-3), r = 2.
PipelineResult ghrl_pipeline(const Hypergraph3& h, double delta3, int ell0, int t0,
                             const PipelineCaps& caps, const RngSpec& spec = RngSpec{});

}  // namespace hrl
