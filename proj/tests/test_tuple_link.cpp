#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hrl/regularity.hpp"
#include "hrl/tuple_link.hpp"

using namespace hrl;

namespace {

std::vector<int> iota_vec(int from, int count) {
    std::vector<int> v(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) v[static_cast<size_t>(i)] = from + i;
    return v;
}

// Oracle: intersect per-member neighborhoods computed one at a time.
std::vector<int> nbhd_oracle(const Graph2& p, const std::vector<int>& tuple,
                             const std::vector<int>& side) {
    std::vector<int> cur = side;
    for (int x : tuple) {
        std::vector<int> next;
        for (int v : cur)
            if (v != x && p.has_edge(x, v)) next.push_back(v);
        cur = next;
    }
    return cur;
}

// Oracle: joint link via Graph2 set algebra over whole-host links.
Graph2 link_oracle(const Hypergraph3& h, const std::vector<int>& tuple, const Triad& p) {
    VBitset ymask = VBitset::of(p.g.n(), joint_neighborhood(p.g, tuple, p.y));
    VBitset zmask = VBitset::of(p.g.n(), joint_neighborhood(p.g, tuple, p.z));
    Graph2 cur = p.g.cross_restriction(ymask, zmask);
    for (int x : tuple) cur = cur.intersect_with(h.link(x));
    return cur;
}

// All crossing triples over three parts except those whose X-vertex lies in
// the excluded set.
Hypergraph3 slab_host(int n, const std::vector<int>& xs, const std::vector<int>& ys,
                      const std::vector<int>& zs, const std::vector<int>& excluded) {
    std::vector<Triple> es;
    for (int x : xs) {
        if (std::find(excluded.begin(), excluded.end(), x) != excluded.end()) continue;
        for (int y : ys)
            for (int z : zs) es.push_back(make_triple(x, y, z));
    }
    return Hypergraph3(n, std::move(es));
}

}  // namespace

TEST_CASE("joint neighborhood: conventions and oracle") {
    Graph2 p = Graph2::complete_bipartite(8, iota_vec(0, 4), iota_vec(4, 4));
    std::vector<int> side = iota_vec(4, 4);
    CHECK(joint_neighborhood(p, {}, side) == side);
    CHECK(joint_neighborhood(p, {0}, side) == side);
    CHECK(joint_neighborhood(p, {0, 1, 2}, side) == side);

    for (int trial = 0; trial < 30; ++trial) {
        RngSpec spec{301, static_cast<uint64_t>(trial)};
        Rng rng(substream(spec, 0));
        std::vector<VPair> es;
        for (int u = 0; u < 4; ++u)
            for (int v = 4; v < 12; ++v)
                if (rng.bernoulli(0.5)) es.push_back({u, v});
        Graph2 g(12, std::move(es));
        std::vector<int> tup{rng.below_int(4), rng.below_int(4), rng.below_int(4)};
        std::vector<int> sd = iota_vec(4, 8);
        CHECK(joint_neighborhood(g, tup, sd) == nbhd_oracle(g, tup, sd));
    }
}

TEST_CASE("joint link: base case, monotonicity, oracle") {
    std::vector<int> xs = iota_vec(0, 4), ys = iota_vec(4, 4), zs = iota_vec(8, 4);
    for (int trial = 0; trial < 25; ++trial) {
        RngSpec spec{302, static_cast<uint64_t>(trial)};
        Hypergraph3 h = sample_uniform_3graph(12, 0.6, substream(spec, 0));
        Rng rng(substream(spec, 1));
        std::vector<VPair> pes;
        for (int a : xs)
            for (int b : ys)
                if (rng.bernoulli(0.8)) pes.push_back(make_pair(a, b));
        for (int a : xs)
            for (int c : zs)
                if (rng.bernoulli(0.8)) pes.push_back(make_pair(a, c));
        for (int b : ys)
            for (int c : zs)
                if (rng.bernoulli(0.8)) pes.push_back(make_pair(b, c));
        Triad p(xs, ys, zs, Graph2(12, std::move(pes)));

        Graph2 base = joint_link(h, {}, p);
        VBitset ym = VBitset::of(12, ys), zm = VBitset::of(12, zs);
        CHECK(base == p.g.cross_restriction(ym, zm));

        std::vector<int> tup;
        Graph2 prev = base;
        for (int step = 0; step < 3; ++step) {
            tup.push_back(rng.below_int(4));
            Graph2 cur = joint_link(h, tup, p);
            CHECK(cur == link_oracle(h, tup, p));
            // monotone under extension, and never beyond the Y-Z carrier
            for (const auto& [u, w] : cur.edges()) CHECK(prev.has_edge(u, w));
            CHECK(cur.e() <= base.e());
            prev = cur;
        }
    }
}

TEST_CASE("minimum 1-degree equals the smallest link") {
    for (int trial = 0; trial < 10; ++trial) {
        Hypergraph3 h =
            sample_uniform_3graph(9, 0.4, RngSpec{303, static_cast<uint64_t>(trial)});
        long mn = h.link(0).e();
        for (int v = 1; v < 9; ++v) mn = std::min(mn, h.link(v).e());
        CHECK(h.min_link_size() == mn);
    }
}

TEST_CASE("band census: complete instance sits at the band center") {
    std::vector<int> xs = iota_vec(0, 4), ys = iota_vec(4, 4), zs = iota_vec(8, 4);
    Triad p = Triad::complete(xs, ys, zs, 12);
    Hypergraph3 h = Hypergraph3::complete(12);
    for (int t : {0, 1, 2, 3}) {
        auto rep = tuple_band_audit(h, p, t, Rational(1), Rational(1), Rational(1, 10));
        CHECK(rep.exhaustive);
        CHECK(rep.band_center == Rational(16));
        CHECK(rep.band_radius == Rational(16, 10));
        CHECK(rep.bad_fraction_low == 0);
        CHECK(rep.bad_fraction_high == 0);
        CHECK(rep.lower_pass);
        CHECK(rep.pass);
        long expect = 1;
        for (int i = 0; i < t; ++i) expect *= 4;
        CHECK(rep.tuples_tested == expect);
    }
}

TEST_CASE("band census: the empty tuple audits the pair graph itself") {
    std::vector<int> xs = iota_vec(0, 4), ys = iota_vec(4, 4), zs = iota_vec(8, 4);
    std::vector<VPair> es;
    for (int a : xs)
        for (int b : ys) es.push_back(make_pair(a, b));
    for (int a : xs)
        for (int c : zs) es.push_back(make_pair(a, c));
    // exactly half of the Y-Z pairs: z slots 8,9 only
    for (int b : ys)
        for (int c : {8, 9}) es.push_back(make_pair(b, c));
    Triad p(xs, ys, zs, Graph2(12, std::move(es)));
    Hypergraph3 h = Hypergraph3::complete(12);

    auto at_half = tuple_band_audit(h, p, 0, Rational(1), Rational(1, 2), Rational(1, 10));
    CHECK(at_half.band_center == Rational(8));
    CHECK(at_half.tuples_tested == 1);
    CHECK(at_half.pass);

    auto at_one = tuple_band_audit(h, p, 0, Rational(1), Rational(1), Rational(1, 10));
    CHECK(at_one.bad_fraction_low == 1.0);
    CHECK_FALSE(at_one.lower_pass);
    CHECK_FALSE(at_one.pass);
}

TEST_CASE("band census: random host at its sampling density") {
    std::vector<int> xs = iota_vec(0, 10), ys = iota_vec(10, 10), zs = iota_vec(20, 10);
    Triad p = Triad::complete(xs, ys, zs, 30);
    Hypergraph3 h = sample_uniform_3graph(30, 0.5, RngSpec{304, 0});
    Rational d3(1, 2), d2(1), eps(15, 100);

    auto ordered = tuple_band_audit(h, p, 2, d3, d2, eps);
    CHECK(ordered.exhaustive);
    CHECK(ordered.tuples_tested == 100);
    CHECK(ordered.bad_fraction_low == 0);
    CHECK(ordered.pass);
    // repeated-entry tuples double up to the d3^1 band and land high
    CHECK(ordered.bad_fraction_high >= 0.08);

    auto sets = tuple_band_audit(h, p, 2, d3, d2, eps, CensusRoute::automatic,
                                 TupleMode::sets);
    CHECK(sets.tuples_tested == 90);  // C(10,2) supports, each weighted 2!
    CHECK(sets.bad_fraction_low == 0);
    CHECK(sets.bad_fraction_high == 0);
    CHECK(sets.pass);
}

TEST_CASE("band census: sampled route is deterministic and thread-stable") {
    std::vector<int> xs = iota_vec(0, 8), ys = iota_vec(8, 8), zs = iota_vec(16, 8);
    Triad p = Triad::complete(xs, ys, zs, 24);
    Hypergraph3 h = sample_uniform_3graph(24, 0.4, RngSpec{305, 0});
    auto a = tuple_band_audit(h, p, 3, Rational(2, 5), Rational(1), Rational(1, 5),
                              CensusRoute::sampled, TupleMode::ordered, 300,
                              RngSpec{305, 1});
    auto b = tuple_band_audit(h, p, 3, Rational(2, 5), Rational(1), Rational(1, 5),
                              CensusRoute::sampled, TupleMode::ordered, 300,
                              RngSpec{305, 1}, 4);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.tuples_tested == 300);
    CHECK(a.bad_fraction_low == b.bad_fraction_low);
    CHECK(a.bad_fraction_high == b.bad_fraction_high);

    CHECK_THROWS_AS(tuple_band_audit(h, p, 8, Rational(2, 5), Rational(1),
                                     Rational(1, 5), CensusRoute::exhaustive),
                    std::invalid_argument);
}

TEST_CASE("extension survey: complete instance passes everything") {
    std::vector<int> xs = iota_vec(0, 4), ys = iota_vec(4, 4), zs = iota_vec(8, 4);
    Triad p = Triad::complete(xs, ys, zs, 12);
    Hypergraph3 h = Hypergraph3::complete(12);
    auto rep = extension_audit(h, p, {0, 1}, Rational(1, 100), Rational(1), Rational(1));
    CHECK(rep.t == 3);
    CHECK(rep.e1_pass);
    CHECK(rep.e2_pass);
    CHECK(rep.e3_pass);
    CHECK(rep.e4_pass);
    CHECK(rep.joint_y == 4);
    CHECK(rep.joint_z == 4);
    CHECK(rep.prefix_link_edges == 16);
    CHECK(rep.e3_failures == 0);
    CHECK(rep.e4_failures == 0);
}

TEST_CASE("extension survey: empty prefix reduces to the base band") {
    std::vector<int> xs = iota_vec(0, 4), ys = iota_vec(4, 4), zs = iota_vec(8, 4);
    Triad p = Triad::complete(xs, ys, zs, 12);
    Hypergraph3 h = sample_uniform_3graph(12, 0.5, RngSpec{306, 0});
    auto rep = extension_audit(h, p, {}, Rational(1, 4), Rational(1, 2), Rational(1));
    CHECK(rep.t == 1);
    CHECK(rep.joint_y == 4);  // d2^0 = 1: the whole side
    CHECK(rep.joint_z == 4);
    CHECK(rep.e1_pass);
    CHECK(rep.prefix_link_edges == 16);
}

TEST_CASE("extension survey: failing fractions equal the per-vertex scan") {
    std::vector<int> xs = iota_vec(0, 5), ys = iota_vec(5, 5), zs = iota_vec(10, 5);
    for (int trial = 0; trial < 15; ++trial) {
        RngSpec spec{307, static_cast<uint64_t>(trial)};
        Hypergraph3 h = sample_uniform_3graph(15, 0.5, substream(spec, 0));
        Rng rng(substream(spec, 1));
        std::vector<VPair> pes;
        for (int a = 0; a < 15; ++a)
            for (int b = a + 1; b < 15; ++b)
                if (a / 5 != b / 5 && rng.bernoulli(0.7)) pes.push_back({a, b});
        Triad p(xs, ys, zs, Graph2(15, std::move(pes)));
        std::vector<int> prefix{rng.below_int(5)};
        Rational gamma(1, 20), d3(1, 2), d2(7, 10);
        auto rep = extension_audit(h, p, prefix, gamma, d3, d2);

        long low = 0, high = 0;
        for (int x : xs) {
            std::vector<int> ext = prefix;
            ext.push_back(x);
            long e = joint_link(h, ext, p).e();
            if (Rational(e) < rep.e3_threshold) ++low;
            if (Rational(e) > rep.e4_threshold) ++high;
        }
        CHECK(rep.e3_failures == low);
        CHECK(rep.e4_failures == high);
        CHECK(rep.extensions_tested == 5);
    }
}

TEST_CASE("witness family: compatibility graph matches the direct rule") {
    std::vector<int> xs = iota_vec(0, 6), ys = iota_vec(6, 6), zs = iota_vec(12, 6);
    Hypergraph3 h = sample_uniform_3graph(18, 0.5, RngSpec{308, 0});
    Rng rng(RngSpec{308, 1});
    std::vector<VPair> pes;
    for (int a = 0; a < 18; ++a)
        for (int b = a + 1; b < 18; ++b)
            if (a / 6 != b / 6 && rng.bernoulli(0.6)) pes.push_back({a, b});
    Triad p(xs, ys, zs, Graph2(18, std::move(pes)));
    std::vector<std::vector<int>> tuples{{0, 1}, {1, 2}, {2, 3}, {4, 5}, {0, 4}};
    Rational d2(3, 5);
    auto fam = irregularity_witness(h, p, tuples, Rational(1, 2), d2, 0.5, 2,
                                    Rational(1, 10));

    Rational bound = Rational(2) * rat_pow(d2, 4) * Rational(6);
    long edges = 0;
    for (size_t i = 0; i < tuples.size(); ++i) {
        for (size_t j = i + 1; j < tuples.size(); ++j) {
            std::vector<int> both = tuples[i];
            both.insert(both.end(), tuples[j].begin(), tuples[j].end());
            std::sort(both.begin(), both.end());
            if (std::adjacent_find(both.begin(), both.end()) != both.end()) continue;
            long joint = static_cast<long>(joint_neighborhood(p.g, both, p.y).size());
            if (Rational(joint) <= bound) ++edges;
        }
    }
    CHECK(fam.aux_vertices == 5);
    CHECK(fam.aux_edges == edges);
}

TEST_CASE("witness family: too few compatible tuples is flagged") {
    std::vector<int> xs = iota_vec(0, 6), ys = iota_vec(6, 6), zs = iota_vec(12, 6);
    Triad p = Triad::complete(xs, ys, zs, 18);
    Hypergraph3 h = Hypergraph3::complete(18);
    // overlapping tuples cap the clique at two members
    std::vector<std::vector<int>> tuples{{0, 1}, {1, 2}, {2, 3}};
    auto fam = irregularity_witness(h, p, tuples, Rational(1), Rational(1), 0.5, 3,
                                    Rational(1, 100));
    CHECK_FALSE(fam.complete);
    CHECK(fam.exact_clique);
    CHECK(fam.witnesses.size() == 2);
    CHECK(fam.tuples.size() == 2);
}

TEST_CASE("witness family: planted slab yields a violating strong family") {
    std::vector<int> xs = iota_vec(0, 6), ys = iota_vec(6, 6), zs = iota_vec(12, 6);
    Triad p = Triad::complete(xs, ys, zs, 18);
    std::vector<int> hollow{0, 1, 2};
    Hypergraph3 h = slab_host(18, xs, ys, zs, hollow);
    // triad density is 1/2: the X-half {3,4,5} is complete, the rest empty
    std::vector<std::vector<int>> tuples{{3}, {4}, {5}};
    auto fam = irregularity_witness(h, p, tuples, Rational(1, 2), Rational(1), 0.5, 3,
                                    Rational(1, 100));
    REQUIRE(fam.complete);
    REQUIRE(fam.witnesses.size() == 3);
    CHECK_FALSE(fam.exact_clique);
    CHECK(fam.triangle_ratio == doctest::Approx(0.5));

    auto check = strong_family_check(h, p, fam.witnesses, 0.3, 0.5);
    CHECK(check.admissible);
    CHECK(check.union_triangles == 108);
    CHECK(check.in_h == 0);
    CHECK(check.violating);
    CHECK(check.deviation == doctest::Approx(0.5));
}

TEST_CASE("dependent random choice: complete K_8 worked example") {
    Hypergraph3 h = Hypergraph3::complete(8);
    auto res = dependent_random_choice(h, 1, 2, 1, Rational(13, 8), RngSpec{309, 0});
    CHECK(res.condition_lhs == Rational(13, 8));
    CHECK(res.guarantee);
    CHECK(res.certified);
    CHECK(res.deletions == 0);
    CHECK(res.u.size() == 6);
    CHECK(res.subsets_checked == 15);
    // every pair's joint link is all pairs avoiding it: C(6,2)
    for (size_t i = 0; i < res.u.size(); ++i) {
        for (size_t j = i + 1; j < res.u.size(); ++j) {
            Graph2 l = h.link(res.u[i]).intersect_with(h.link(res.u[j]));
            CHECK(l.e() == 15);
        }
    }
}

TEST_CASE("dependent random choice: degenerate inputs") {
    Hypergraph3 h = Hypergraph3::complete(8);
    auto full = dependent_random_choice(h, 1, 2, 0, Rational(1), RngSpec{});
    CHECK(full.u.size() == 8);
    CHECK(full.certified);

    Hypergraph3 bare = Hypergraph3::empty(8);
    auto res = dependent_random_choice(bare, 1, 2, 1, Rational(1), RngSpec{310, 0});
    CHECK_FALSE(res.guarantee);
    CHECK(res.condition_lhs < Rational(0));
    CHECK(res.u.empty());

    CHECK_THROWS_AS(dependent_random_choice(Hypergraph3::empty(2), 1, 1, 1, Rational(0)),
                    std::invalid_argument);
}

TEST_CASE("dense-host feasibility threshold") {
    auto n0 = drc_dense_threshold(1.0, 2, 40);
    REQUIRE(n0.has_value());
    CHECK(*n0 == 22);
    CHECK_FALSE(drc_dense_threshold(1.0, 2, 21).has_value());
    CHECK_THROWS_AS(drc_dense_threshold(0.0, 2, 30), std::invalid_argument);
}

TEST_CASE("tuple census: identity, handshake, and an external oracle") {
    for (int trial = 0; trial < 100; ++trial) {
        RngSpec spec{311, static_cast<uint64_t>(trial)};
        Rng rng(substream(spec, 9));
        int n = 8 + rng.below_int(5);
        int t = 1 + rng.below_int(3);
        Hypergraph3 h = sample_uniform_3graph(n, 0.4, substream(spec, 0));
        std::vector<int> u;
        for (int v = 0; v < n; ++v)
            if (rng.bernoulli(0.7)) u.push_back(v);
        auto rep = weak_tuple_census(h, u, t, 2);
        CHECK(rep.sum_links == rep.sum_binomials);  // also enforced internally
        CHECK(rep.subsets == binomial(static_cast<long>(u.size()), t).num().get_si());

        if (t == 1) {
            long long direct = 0;
            for (int v : u) direct += h.degree(v);
            CHECK(rep.sum_links == direct);
        }
        // independent path: whole-host link intersections
        long long via_links = 0;
        if (t == 2) {
            for (size_t i = 0; i < u.size(); ++i)
                for (size_t j = i + 1; j < u.size(); ++j)
                    via_links += h.link(u[i]).intersect_with(h.link(u[j])).e();
            CHECK(rep.sum_links == via_links);
        }
    }
    auto zero = weak_tuple_census(Hypergraph3::empty(10), iota_vec(0, 10), 2, 1);
    CHECK(zero.sum_links == 0);
    CHECK(zero.dense_tuples == 0);
}

TEST_CASE("toy constant cascade keeps every ordering") {
    auto c = tuple_constants(2, 0.1, 0.5, 0.5);
    CHECK(c.zeta == doctest::Approx(0.01));
    CHECK(c.r == 1);
    CHECK(c.delta3 == doctest::Approx(0.001));
    CHECK(c.delta2 == doctest::Approx(0.0001));
    for (int t : {1, 2, 3}) {
        for (double d2 : {0.3, 0.6, 1.0}) {
            auto k = tuple_constants(t, 0.2, 0.4, d2);
            CHECK(k.zeta <= 0.2 / 10 + 1e-15);
            CHECK(k.delta3 <= k.zeta / 10 + 1e-15);
            CHECK(k.delta2 <= k.delta3 / 10 + 1e-15);
            CHECK(k.delta2 <= 1.0 / (10.0 * k.r) + 1e-15);
            CHECK(k.r >= 1);
            CHECK(static_cast<double>(k.r) >=
                  k.zeta / std::pow(d2, 2 * t - 2) - 1e-12);
        }
    }
}
