#pragma once

#include <optional>
#include <vector>

#include "hrl/hypergraph.hpp"
#include "hrl/random.hpp"
#include "hrl/rational.hpp"

namespace hrl {

// Vertices of `side` adjacent in p to every member of the tuple.  The empty
// tuple returns the whole side.  Tuples are ordered and may repeat vertices;
// repeats do not change the result.
std::vector<int> joint_neighborhood(const Graph2& p, const std::vector<int>& tuple,
                                    const std::vector<int>& side);

// Joint link of an X-tuple inside a triad: the Y-Z pairs (y,z) with
// yz an edge of p, y and z adjacent in p to every tuple member, and
// {x, y, z} an edge of h for every tuple member x.  The empty tuple returns
// the Y-Z restriction of p itself.
Graph2 joint_link(const Hypergraph3& h, const std::vector<int>& tuple, const Triad& p);

// Tuple enumeration spaces: `ordered` walks all |X|^t ordered tuples
// (repeats included); `sets` walks the C(|X|,t) unordered supports and
// weighs each by t!, so reported totals stay comparable with the ordered
// count minus its repeating tuples.
enum class TupleMode { ordered, sets };
// Route selection: `automatic` enumerates when |X|^t (or C(|X|,t)) is at
// most 10^6 and samples otherwise; the explicit routes force the choice
// (forcing `exhaustive` past the cap throws).
enum class CensusRoute { automatic, exhaustive, sampled };

struct TupleAuditReport {
    int t = 0;
    Rational band_center;   // d3^t * d2^(2t+1) * |Y||Z|
    Rational band_radius;   // eps * d2^(2t+1) * |Y||Z|
    double bad_fraction_low = 0;   // tuples with joint link below the band
    double bad_fraction_high = 0;  // tuples above the band
    long tuples_tested = 0;        // t!-weighted in set mode
    bool exhaustive = false;
    bool lower_pass = false;  // bad_fraction_low <= eps
    bool pass = false;        // lower_pass and low + high <= 2*eps
};

// Census of e(joint_link(x, p)) over X-tuples against the band
// d3^t d2^(2t+1)|Y||Z| +- eps d2^(2t+1)|Y||Z|.  Pass needs the below-band
// fraction at most eps and the off-band fraction at most 2*eps (the
// below-band half is the one-sided criterion reported separately).  t = 0
// audits the single empty tuple, whose link is the Y-Z part of p.
// Band endpoints are exact rationals; a tuple is "bad" by exact comparison.
// Deterministic for fixed spec and independent of `threads`.
TupleAuditReport tuple_band_audit(const Hypergraph3& h, const Triad& p, int t,
                                  const Rational& d3, const Rational& d2,
                                  const Rational& eps,
                                  CensusRoute route = CensusRoute::automatic,
                                  TupleMode mode = TupleMode::ordered,
                                  long samples = 200000,
                                  const RngSpec& spec = RngSpec{}, int threads = 1);

// Extension survey for a prefix tuple of length t-1.  Writing s = t-1 and
// q = d2^(2t+1)|Y||Z|:
//   E.1  |N_p(prefix, Y)| and |N_p(prefix, Z)| lie in (1 +- gamma) d2^s |side|
//   E.2  e(joint_link(prefix)) lies in (d3^s +- gamma) d2^(2s+1)|Y||Z|
//   E.3  at most a gamma fraction of x in X extend to a joint link below
//        (d3^t - multiplier*gamma) q
//   E.4  at most a gamma fraction extend above (d3^t + multiplier*gamma) q
// The slack multiplier defaults to 13; every threshold is evaluated as an
// exact rational against integer counts.
struct ExtensionReport {
    int t = 0;  // extended tuple length (prefix length + 1)
    Rational gamma;
    Rational multiplier;
    bool e1_pass = false;
    bool e2_pass = false;
    bool e3_pass = false;
    bool e4_pass = false;
    long joint_y = 0;             // |N_p(prefix, Y)|
    long joint_z = 0;             // |N_p(prefix, Z)|
    long prefix_link_edges = 0;   // e(joint_link(prefix, p))
    Rational e3_threshold;        // per-extension lower edge bound
    Rational e4_threshold;        // per-extension upper edge bound
    long extensions_tested = 0;   // |X|
    long e3_failures = 0;
    long e4_failures = 0;
    double e3_fail_fraction = 0;
    double e4_fail_fraction = 0;
};
ExtensionReport extension_audit(const Hypergraph3& h, const Triad& p,
                                const std::vector<int>& prefix, const Rational& gamma,
                                const Rational& d3, const Rational& d2,
                                const Rational& multiplier = Rational(13));

// Witness assembly from a list of bad prefix tuples (all the same length
// t-1).  Two tuples are compatible when they are vertex-disjoint and the
// joint Y-neighborhood of their concatenation has size at most
// 2 d2^(2(t-1)) |Y|; an r-clique of the compatibility graph is taken
// greedily in input order with an exact maximum-clique fallback for at most
// 20 tuples.  Each selected tuple contributes the subgraph of p.g spanned by
//   p[X_x, N_p(x,Y)]  +  p[X_x, N_p(x,Z)]  +  joint_link(x, p)
// where X_x collects the extensions failing the E.3 lower threshold at
// (gamma, multiplier), trimmed to the first ceil(zeta |X|) in vertex order.
struct WitnessFamily {
    std::vector<Graph2> witnesses;         // edge-subgraphs of p.g
    std::vector<std::vector<int>> tuples;  // the selected compatible tuples
    bool complete = false;                 // found the full requested family
    bool exact_clique = false;             // exhaustive fallback was used
    long aux_vertices = 0;
    long aux_edges = 0;
    double triangle_ratio = 0;  // |union K_3(witness)| / |K_3(p)|
};
WitnessFamily irregularity_witness(const Hypergraph3& h, const Triad& p,
                                   const std::vector<std::vector<int>>& bad_tuples,
                                   const Rational& d3, const Rational& d2, double zeta,
                                   int r, const Rational& gamma,
                                   const Rational& multiplier = Rational(13));

// Dependent random choice.  Samples t vertex pairs uniformly, takes the set
// of vertices completing every sampled pair to an edge of h, then repeatedly
// deletes the last vertex of the first r-subset whose joint link (over the
// full vertex set) has fewer than m edges.  The feasibility condition
//   n^(1-2t) * delta1(h)^t  -  C(n,r) * (m / C(n,2))^t  >=  a
// is evaluated exactly and reported as `guarantee`; the op runs either way.
// The r-subset cleanup and the final certification are exhaustive only while
// C(|U|, r) <= 10^5; beyond that the set is returned uncertified.
// m = 0 short-circuits to the full vertex set.
struct DrcResult {
    std::vector<int> u;
    Rational condition_lhs;
    bool guarantee = false;
    bool certified = false;  // exhaustive check ran and every r-subset passed
    long subsets_checked = 0;
    long deletions = 0;
};
DrcResult dependent_random_choice(const Hypergraph3& h, int t, int r, long m,
                                  const Rational& a, const RngSpec& spec = RngSpec{});

// Smallest n0 in [r+2, n_cap] such that the dependent-random-choice
// condition holds on the complete 3-graph K_n^3 for every n in [n0, n_cap],
// with t = ceil(r/rho), m = ceil(n^(2-rho)), a = r.  nullopt when even n_cap
// fails.  Requires 0 < rho <= 2.
std::optional<int> drc_dense_threshold(double rho, int r, int n_cap);

// Double-counting census over the t-subsets of u: the sum of joint-link
// sizes equals the sum over all vertex pairs (w,v) of C(deg_h(w,v,u), t),
// where deg_h(w,v,u) counts members of u completing (w,v) to an edge.  Both
// sides are computed independently and must agree exactly (logic_error
// otherwise).  dense_tuples counts subsets whose joint link has at least
// `threshold` edges.
struct TupleCensusReport {
    long long sum_links = 0;
    long long sum_binomials = 0;
    long dense_tuples = 0;
    long threshold = 0;
    long subsets = 0;  // C(|u|, t)
};
TupleCensusReport weak_tuple_census(const Hypergraph3& h, const std::vector<int>& u,
                                    int t, long threshold);

// Consistent toy constants for the tuple machinery at prefix length t and
// slack eps: each dominated quantity is a tenth of the smallest bound it
// must sit below (zeta below eps; delta3 below zeta and d3^t; delta2 below
// delta3 and 1/r), with r = ceil(zeta / d2^(2t-2)).  The source analysis
// only orders these quantities; the 1/10 ratio is this library's convention.
struct TupleConstants {
    double zeta = 0;
    double delta3 = 0;
    double delta2 = 0;
    int r = 0;
};
TupleConstants tuple_constants(int t, double eps, double d3, double d2);

}  // namespace hrl
