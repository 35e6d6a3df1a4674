#include "doctest.h"

#include <bit>
#include <cmath>
#include <vector>

#include "hrl/regularity.hpp"

using namespace hrl;

namespace {

std::vector<int> iota_vec(int from, int count) {
    std::vector<int> v;
    for (int i = 0; i < count; ++i) v.push_back(from + i);
    return v;
}

// Oracle: literal subset enumeration with direct density loops.
double oracle_max_deviation(const BipartitePair& p, double delta, double d) {
    int nx = static_cast<int>(p.xs.size()), ny = static_cast<int>(p.ys.size());
    long mx = std::max<long>(1, static_cast<long>(std::ceil(delta * nx - 1e-9)));
    long my = std::max<long>(1, static_cast<long>(std::ceil(delta * ny - 1e-9)));
    double worst = -1;
    for (uint64_t a = 1; a < (uint64_t{1} << nx); ++a) {
        if (std::popcount(a) < mx) continue;
        for (uint64_t b = 1; b < (uint64_t{1} << ny); ++b) {
            if (std::popcount(b) < my) continue;
            long e = 0;
            for (int i = 0; i < nx; ++i)
                for (int j = 0; j < ny; ++j)
                    if ((a >> i & 1) && (b >> j & 1) && p.g.has_edge(p.xs[i], p.ys[j]))
                        ++e;
            double dens = static_cast<double>(e) /
                          (static_cast<double>(std::popcount(a)) * std::popcount(b));
            worst = std::max(worst, std::abs(dens - d));
        }
    }
    return worst;
}

// Complete bipartite graph with an all-zero block X_hole × Y_hole.
BipartitePair hole_pair(int nx, int ny, int hx, int hy) {
    std::vector<VPair> es;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if (i >= hx || j >= hy) es.push_back({i, nx + j});
    Graph2 host(nx + ny, std::move(es));
    return BipartitePair::from(host, iota_vec(0, nx), iota_vec(nx, ny));
}

}  // namespace

TEST_CASE("bipartite pair basics") {
    Graph2 host(5, {{0, 2}, {0, 3}, {1, 2}, {2, 3}, {0, 1}});
    BipartitePair p = BipartitePair::from(host, {0, 1}, {2, 3});
    CHECK(p.e() == 3);  // inner edges {2,3} and {0,1} are dropped
    CHECK(p.density() == doctest::Approx(0.75));
    BipartitePair s = p.slice({0}, {2, 3});
    CHECK(s.e() == 2);
    CHECK_THROWS(p.slice({4}, {2}));
    CHECK_THROWS(BipartitePair::from(host, {0, 1}, {1, 2}));
}

TEST_CASE("exact pair audit: complete pair is regular") {
    Graph2 host = Graph2::complete_bipartite(12, iota_vec(0, 6), iota_vec(6, 6));
    BipartitePair p = BipartitePair::from(host, iota_vec(0, 6), iota_vec(6, 6));
    RegularityVerdict v = pair_regularity_audit(p, 0.1);
    CHECK(v.regular);
    CHECK(v.exhaustive);
    CHECK(v.d_ref == doctest::Approx(1.0));
    CHECK(v.delta_measured == doctest::Approx(0.0));
    CHECK(v.tested > 0);
}

TEST_CASE("exact pair audit: hole pair is irregular with a checkable witness") {
    BipartitePair p = hole_pair(8, 8, 4, 4);
    CHECK(p.density() == doctest::Approx(0.75));
    RegularityVerdict v = pair_regularity_audit(p, 0.2);
    CHECK(v.exhaustive);
    CHECK(!v.regular);
    CHECK(v.delta_measured == doctest::Approx(0.75));
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->deviation == doctest::Approx(v.delta_measured));
    // Recompute the witness density independently.
    BipartitePair w = p.slice(v.witness->subsets[0], v.witness->subsets[1]);
    CHECK(w.density() == doctest::Approx(v.witness->density));
    CHECK(std::abs(w.density() - 0.75) == doctest::Approx(0.75));
}

TEST_CASE("exact pair audit agrees with the subset oracle") {
    for (int trial = 0; trial < 25; ++trial) {
        RngSpec spec{55100, static_cast<uint64_t>(trial)};
        Rng rng(spec);
        int nx = 4 + static_cast<int>(rng.below(3));
        int ny = 4 + static_cast<int>(rng.below(3));
        std::vector<VPair> es;
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j)
                if (rng.bernoulli(0.5)) es.push_back({i, nx + j});
        Graph2 host(nx + ny, std::move(es));
        BipartitePair p = BipartitePair::from(host, iota_vec(0, nx), iota_vec(nx, ny));
        double delta = 0.25;
        double d = p.density();
        RegularityVerdict v = pair_regularity_audit(p, delta, d);
        REQUIRE(v.exhaustive);
        CHECK(v.delta_measured == doctest::Approx(oracle_max_deviation(p, delta, d)));
    }
}

TEST_CASE("sampled pair audit finds a planted hole") {
    BipartitePair p = hole_pair(16, 16, 8, 8);
    RegularityVerdict v = pair_regularity_audit(p, 0.2, p.density(), 3000, RngSpec{4, 0});
    CHECK(!v.exhaustive);
    CHECK(v.tested == 3000);
    // One-sided check: a violation this large is still found by sampling.
    CHECK(!v.regular);
    REQUIRE(v.witness.has_value());
    BipartitePair w = p.slice(v.witness->subsets[0], v.witness->subsets[1]);
    CHECK(w.density() == doctest::Approx(v.witness->density));
}

TEST_CASE("slicing deltas") {
    CHECK(sliced_delta(0.1, 0.5) == doctest::Approx(0.2));
    CHECK(sliced_delta(0.1, 0.25) == doctest::Approx(0.4));
    CHECK(sliced_delta(0.3, 1.0) == doctest::Approx(0.6));
    CHECK_THROWS(sliced_delta(0.1, 0.0));

    Graph2 host = Graph2::complete_bipartite(16, iota_vec(0, 8), iota_vec(8, 8));
    BipartitePair p = BipartitePair::from(host, iota_vec(0, 8), iota_vec(8, 8));
    RegularityVerdict ok = slicing_audit(p, iota_vec(0, 4), iota_vec(8, 4), 0.1, 1.0);
    CHECK(ok.regular);
    CHECK(ok.delta == doctest::Approx(0.2));  // alpha = 1/2

    BipartitePair hp = hole_pair(8, 8, 4, 4);
    RegularityVerdict bad =
        slicing_audit(hp, iota_vec(0, 4), iota_vec(8, 4), 0.1, hp.density());
    CHECK(!bad.regular);  // the slice is exactly the empty block
    CHECK(bad.delta_measured == doctest::Approx(0.75));
}

TEST_CASE("triangle count windows") {
    CountWindow w = triangle_count_window(10, 10, 10, 0.1, 0.5);
    CHECK(w.lo == doctest::Approx((1 - 0.2) * 0.4 * 0.4 * 0.4 * 1000));
    CHECK(w.hi == doctest::Approx((0.6 * 0.6 * 0.6 + 0.2) * 1000));
    CHECK(w.lo <= w.hi);
    CountWindow s = triangle_count_window_simple(10, 10, 10, 0.05, 0.5);
    CHECK(s.lo == 0.0);  // 0.125 - 4*0.05 < 0 clamps
    CHECK(s.hi == doctest::Approx((0.125 + 0.2) * 1000));

    // Degenerate d < delta: lower bound clamps to zero.
    CHECK(triangle_count_window(5, 5, 5, 0.3, 0.1).lo == 0.0);

    Triad full = Triad::complete(iota_vec(0, 4), iota_vec(4, 4), iota_vec(8, 4), 12);
    WindowAudit a = triad_triangle_audit(full, 0.1, 1.0);
    CHECK(a.count == 64);
    CHECK(a.inside);
    WindowAudit wrong = triad_triangle_audit(full, 0.05, 0.2);
    CHECK(!wrong.inside);  // declared density far below the truth
}

TEST_CASE("through-subset window audit") {
    Triad full = Triad::complete(iota_vec(0, 8), iota_vec(8, 6), iota_vec(14, 6), 20);
    std::vector<int> xsub = iota_vec(0, 4);
    WindowAudit a = through_subset_audit(full, xsub, 0.05, 1.0);
    CHECK(a.count == 4 * 36);
    CHECK(a.inside);
    WindowAudit b = through_subset_audit(full, xsub, 0.05, 0.2);
    CHECK(!b.inside);
    CHECK_THROWS(through_subset_audit(full, {8}, 0.05, 1.0));
}

TEST_CASE("graph tuple band audit") {
    // Complete pair: every pair of rows shares all of Y'.
    Graph2 host = Graph2::complete_bipartite(16, iota_vec(0, 8), iota_vec(8, 8));
    BipartitePair p = BipartitePair::from(host, iota_vec(0, 8), iota_vec(8, 8));
    TupleBandAudit ok = graph_tuple_audit(p, iota_vec(8, 8), 2, 0.1, 1.0);
    CHECK(ok.tuple_count == 64);
    CHECK(ok.violations == 0);
    CHECK(ok.ok);

    // Two disjoint complete halves: d = 1/2 but joint degrees are 0 or n/2,
    // so every ordered pair of rows violates the band.
    std::vector<VPair> es;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            es.push_back({i, 8 + j});
            es.push_back({4 + i, 12 + j});
        }
    Graph2 blocks(16, std::move(es));
    BipartitePair q = BipartitePair::from(blocks, iota_vec(0, 8), iota_vec(8, 8));
    CHECK(q.density() == doctest::Approx(0.5));
    TupleBandAudit bad = graph_tuple_audit(q, iota_vec(8, 8), 2, 0.1, 0.5);
    CHECK(bad.tuple_count == 64);
    CHECK(bad.violations == 64);
    CHECK(bad.allowed == doctest::Approx(2 * 0.1 * 2 * 64));
    CHECK(!bad.ok);

    // ell = 1 reduces to the degree band.
    TupleBandAudit deg = graph_tuple_audit(q, iota_vec(8, 8), 1, 0.45, 0.5);
    CHECK(deg.tuple_count == 8);
    CHECK(deg.violations == 0);  // degrees are 4 = 0.5 * 8 exactly
    CHECK(deg.ok);
}

TEST_CASE("weak 3-graph audit: exact") {
    std::vector<int> xs = iota_vec(0, 4), ys = iota_vec(4, 4), zs = iota_vec(8, 4);
    // All cross triples present.
    std::vector<Triple> es;
    for (int a : xs)
        for (int b : ys)
            for (int c : zs) es.push_back({a, b, c});
    Hypergraph3 full(12, es);
    CHECK(cross_edge_count(full, xs, ys, zs) == 64);
    CHECK(weak_density(full, xs, ys, zs) == doctest::Approx(1.0));
    RegularityVerdict v = weak_regularity_audit(full, xs, ys, zs, 0.3);
    CHECK(v.regular);
    CHECK(v.exhaustive);
    CHECK(v.delta_measured == doctest::Approx(0.0));

    // Remove everything meeting {0,1}: density 1/2, the hole is admissible
    // at delta = 1/2 only via subsets of size >= 2.
    std::vector<Triple> half;
    for (const auto& t : es)
        if (t[0] >= 2) half.push_back(t);
    Hypergraph3 hh(12, half);
    CHECK(weak_density(hh, xs, ys, zs) == doctest::Approx(0.5));
    RegularityVerdict bad = weak_regularity_audit(hh, xs, ys, zs, 0.3);
    CHECK(bad.exhaustive);
    CHECK(!bad.regular);
    CHECK(bad.delta_measured == doctest::Approx(0.5));
    REQUIRE(bad.witness.has_value());
    // The witness must reproduce its recorded density.
    double wd = weak_density(hh, bad.witness->subsets[0], bad.witness->subsets[1],
                             bad.witness->subsets[2]);
    CHECK(wd == doctest::Approx(bad.witness->density));
}

TEST_CASE("weak 3-graph audit matches a literal oracle") {
    for (int trial = 0; trial < 8; ++trial) {
        RngSpec spec{88200, static_cast<uint64_t>(trial)};
        Hypergraph3 h = sample_uniform_3graph(12, 0.4, spec);
        std::vector<int> xs = iota_vec(0, 4), ys = iota_vec(4, 4), zs = iota_vec(8, 4);
        double delta = 0.3;
        double d = weak_density(h, xs, ys, zs);
        RegularityVerdict v = weak_regularity_audit(h, xs, ys, zs, delta, d);
        REQUIRE(v.exhaustive);
        // literal enumeration
        double worst = -1;
        for (uint64_t a = 1; a < 16; ++a) {
            if (std::popcount(a) < 2) continue;  // ceil(0.3*4) = 2
            for (uint64_t b = 1; b < 16; ++b) {
                if (std::popcount(b) < 2) continue;
                for (uint64_t c = 1; c < 16; ++c) {
                    if (std::popcount(c) < 2) continue;
                    long e = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = 0; j < 4; ++j)
                            for (int k = 0; k < 4; ++k)
                                if ((a >> i & 1) && (b >> j & 1) && (c >> k & 1) &&
                                    h.has_edge(make_triple(xs[i], ys[j], zs[k])))
                                    ++e;
                    double dens = static_cast<double>(e) /
                                  (static_cast<double>(std::popcount(a)) *
                                   std::popcount(b) * std::popcount(c));
                    worst = std::max(worst, std::abs(dens - d));
                }
            }
        }
        CHECK(v.delta_measured == doctest::Approx(worst));
    }
}

TEST_CASE("strong regularity audit") {
    std::vector<int> xs = iota_vec(0, 4), ys = iota_vec(4, 4), zs = iota_vec(8, 4);
    Triad p = Triad::complete(xs, ys, zs, 12);

    std::vector<Triple> all;
    for (int a : xs)
        for (int b : ys)
            for (int c : zs) all.push_back({a, b, c});
    Hypergraph3 full(12, all);

    StrongVerdict v = strong_regularity_audit(full, p, 0.1, 1.0, 2, 200, RngSpec{7, 0});
    CHECK(v.regular);
    CHECK(v.base_triangles == 64);
    CHECK(v.families_tested >= 1);
    CHECK(v.delta_measured == doctest::Approx(0.0));

    // Empty H with truthful density 0 is perfectly regular; with a wrong
    // reference density the deterministic base family already convicts it.
    Hypergraph3 none = Hypergraph3::empty(12);
    CHECK(strong_regularity_audit(none, p, 0.1, 0.0, 2, 50, RngSpec{7, 1}).regular);
    StrongVerdict bad = strong_regularity_audit(none, p, 0.3, 0.5, 2, 1, RngSpec{7, 2});
    CHECK(!bad.regular);
    CHECK(bad.delta_measured == doctest::Approx(0.5));
    CHECK(bad.families_tested == 1);

    // A triad with no triangles is vacuously regular.
    Triad open({0}, {1}, {2}, Graph2(3, {{0, 1}}));
    StrongVerdict vac = strong_regularity_audit(none, open, 0.2, 0.9, 2, 50, RngSpec{7, 3});
    CHECK(vac.regular);
    CHECK(vac.base_triangles == 0);
    CHECK(vac.families_tested == 0);
}
