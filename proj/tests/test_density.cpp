#include "doctest.h"

#include <cstdint>
#include <set>

#include "hrl/cliques.hpp"
#include "hrl/density.hpp"
#include "hrl/random.hpp"

using namespace hrl;

namespace {

// Oracle: direct edge-subset sweep with Rational arithmetic, no shared code
// with the library's search routes.
struct OracleBest {
    Rational value{0};
    bool unique_at_full = false;
};

Rational oracle_value_sym(long e, long v) {
    if (e == 1) return Rational(1, 3);
    return Rational(e - 1, v - 3);
}

OracleBest oracle_max(const Hypergraph3& h, int mode, const Rational& inv_m2 = Rational(0)) {
    // mode 0: (e-1)/(v-3) with single-edge 1/3; 1: e/v; 2: e/(v-3+inv_m2)
    const auto& edges = h.edges();
    size_t m = edges.size();
    REQUIRE(m <= 22);
    OracleBest best;
    bool any = false;
    long maximizers = 0;
    bool full_hit = false;
    for (uint64_t sub = 1; sub < (uint64_t{1} << m); ++sub) {
        std::set<int> verts;
        long e = 0;
        for (size_t i = 0; i < m; ++i)
            if (sub >> i & 1) {
                ++e;
                for (int v : edges[i]) verts.insert(v);
            }
        long v = static_cast<long>(verts.size());
        Rational val = mode == 0   ? oracle_value_sym(e, v)
                       : mode == 1 ? Rational(e, v)
                                   : Rational(e) / (Rational(v - 3) + inv_m2);
        if (!any || best.value < val) {
            best.value = val;
            any = true;
            maximizers = 1;
            full_hit = (e == static_cast<long>(m));
        } else if (val == best.value) {
            ++maximizers;
            if (e == static_cast<long>(m)) full_hit = true;
        }
    }
    best.unique_at_full = (maximizers == 1 && full_hit);
    return best;
}

}  // namespace

TEST_CASE("local density case split") {
    CHECK(local_density(Hypergraph3::empty(5)) == Rational(0));
    CHECK(local_density(Hypergraph3(5, {{0, 1, 2}})) == Rational(1, 3));
    CHECK(local_density(Hypergraph3::complete(5)) == Rational(9, 2));
    CHECK(local_density(Graph2(4, {{0, 1}})) == Rational(1, 2));
    CHECK(local_density_counts(0, 9, 3) == Rational(0));
    CHECK(local_density_counts(1, 3, 3) == Rational(1, 3));
    CHECK(local_density_counts(4, 7, 3) == Rational(3, 4));
    CHECK_THROWS(local_density_counts(2, 3, 3));
}

TEST_CASE("clique maximum densities: closed forms and brute force agree") {
    // Frozen values, cross-checked against the oracle below.
    CHECK(clique_m3_closed(3) == Rational(2, 3));
    CHECK(clique_m3_closed(4) == Rational(5, 7));
    CHECK(clique_m3_closed(5) == Rational(3, 4));
    CHECK(clique_m3_closed(6) == Rational(7, 9));
    for (int t = 3; t <= 6; ++t)
        CHECK(clique_m3_closed(t) == clique_max_density_closed(t, 3));
    // 2-uniform degenerate line: (C(t,2)-1)/(t-2).
    CHECK(clique_max_density_closed(3, 2) == Rational(2));
    CHECK(clique_max_density_closed(5, 2) == Rational(3));

    for (int t : {3, 4}) {
        Hypergraph3 k = linear_clique3(t);
        DensityWitness w = max_local_density(k);
        CHECK(w.value == clique_m3_closed(t));
        OracleBest ob = oracle_max(k, 0);
        CHECK(ob.value == w.value);
        CHECK(ob.unique_at_full == w.unique_at_full);
        CHECK(w.unique_at_full);
    }
    // Larger t through both library routes (vertex subsets and edge subsets).
    CHECK(max_local_density(linear_clique3(5)).value == Rational(3, 4));
    CHECK(max_local_density(linear_clique3(6)).value == Rational(7, 9));
}

TEST_CASE("edge/vertex ratio maximum") {
    CHECK(clique_ratio_closed(3) == Rational(1, 2));
    CHECK(clique_ratio_closed(4) == Rational(3, 5));
    CHECK(max_edge_vertex_ratio(linear_clique3(3)).value == Rational(1, 2));
    CHECK(max_edge_vertex_ratio(linear_clique3(4)).value == Rational(3, 5));
    OracleBest ob = oracle_max(linear_clique3(4), 1);
    CHECK(ob.value == Rational(3, 5));
    CHECK(max_edge_vertex_ratio(Hypergraph3(4, {{0, 1, 2}})).value == Rational(1, 3));
}

TEST_CASE("asymmetric maximum density: frozen pairs") {
    // (t,s) = (4,2): 6 / (10 - 3 + 3) = 3/5.
    DensityWitness a42 = asym_max_density(linear_clique3(4), linear_clique3(2));
    CHECK(a42.value == Rational(3, 5));
    CHECK(clique_asym_closed(4, 2) == Rational(3, 5));
    // (t,s) = (6,3): 15 / (21 - 3 + 3/2) = 10/13.
    DensityWitness a63 = asym_max_density(linear_clique3(6), linear_clique3(3));
    CHECK(a63.value == Rational(10, 13));
    CHECK(clique_asym_closed(6, 3) == Rational(10, 13));
    // Oracle agreement on the small pair.
    OracleBest ob = oracle_max(linear_clique3(4), 2, Rational(3));  // 1/m(single edge)=3
    CHECK(ob.value == Rational(3, 5));
}

TEST_CASE("strict balance") {
    for (int t : {3, 4})
        CHECK(is_strictly_balanced(linear_clique3(t)));
    // Two vertex-disjoint 4-cliques: each half attains the maximum.
    Hypergraph3 k4 = linear_clique3(4);
    std::vector<Triple> es = k4.edges();
    for (auto t : k4.edges())
        es.push_back({t[0] + k4.n(), t[1] + k4.n(), t[2] + k4.n()});
    Hypergraph3 pair(2 * k4.n(), std::move(es));
    CHECK(!is_strictly_balanced(pair));
    CHECK(max_local_density(pair).value == Rational(5, 7));
    CHECK(!is_strictly_balanced(Hypergraph3::empty(4)));
    CHECK(is_strictly_balanced(Hypergraph3(4, {{0, 1, 2}})));
    CHECK(is_strictly_balanced_asym(linear_clique3(4), linear_clique3(2)));
    CHECK(is_strictly_balanced_asym(linear_clique3(6), linear_clique3(3)));
}

TEST_CASE("random instances: library routes agree with the oracle") {
    for (int trial = 0; trial < 60; ++trial) {
        RngSpec spec{20260823, static_cast<uint64_t>(trial)};
        Rng rng(spec);
        int n = 6 + static_cast<int>(rng.below(5));
        double p = 0.15 + 0.05 * static_cast<double>(rng.below(5));
        Hypergraph3 h = sample_uniform_3graph(n, p, substream(spec, 1));
        if (h.e() == 0 || h.e() > 18) continue;
        DensityWitness w = max_local_density(h);
        OracleBest ob = oracle_max(h, 0);
        CHECK(w.value == ob.value);
        CHECK(w.unique_at_full == ob.unique_at_full);
        DensityWitness r = max_edge_vertex_ratio(h);
        CHECK(r.value == oracle_max(h, 1).value);
    }
}

TEST_CASE("threshold probability scale") {
    CHECK(threshold_probability(Rational(1), 100.0, 2.0) == doctest::Approx(0.02));
    CHECK(threshold_probability(Rational(1, 2), 100.0, 1.0) == doctest::Approx(1e-4));
    CHECK_THROWS(threshold_probability(Rational(0), 10.0, 1.0));
}

TEST_CASE("even-t comparison report flags the t=4 reversal") {
    auto rows = even_clique_density_report({4, 6});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].t == 4);
    CHECK(rows[0].asym_value == Rational(3, 5));
    CHECK(rows[0].sym_value == Rational(2, 3));
    CHECK(rows[0].cmp < 0);
    CHECK(rows[0].flagged);
    CHECK(rows[0].closed_forms_agree);
    CHECK(rows[1].t == 6);
    CHECK(rows[1].asym_value == Rational(10, 13));
    CHECK(rows[1].sym_value == Rational(3, 4));
    CHECK(rows[1].cmp > 0);
    CHECK(!rows[1].flagged);
}
