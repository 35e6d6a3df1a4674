#include "doctest.h"

#include <set>

#include "hrl/hypergraph.hpp"
#include "hrl/io.hpp"
#include "hrl/partition.hpp"

using namespace hrl;

namespace {

// Independent cubic-loop triangle oracle.
long naive_triangle_count(const Triad& t) {
    long c = 0;
    for (int a : t.x)
        for (int b : t.y)
            for (int w : t.z)
                if (t.g.has_edge(a, b) && t.g.has_edge(a, w) && t.g.has_edge(b, w)) ++c;
    return c;
}

}  // namespace

TEST_CASE("triple and pair canonicalisation") {
    CHECK(make_triple(5, 1, 3) == Triple{1, 3, 5});
    CHECK_THROWS(make_triple(1, 1, 2));
    CHECK(make_pair(4, 2) == VPair{2, 4});
    CHECK_THROWS(make_pair(3, 3));
}

TEST_CASE("graph basics and set algebra") {
    Graph2 g(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    CHECK(g.e() == 4);
    CHECK(g.has_edge(2, 0));
    CHECK(!g.has_edge(0, 3));
    CHECK(g.deg(1) == 2);
    CHECK_THROWS(Graph2(3, {{0, 1}, {1, 0}}));  // duplicate
    CHECK_THROWS(Graph2(3, {{0, 3}}));          // range

    Graph2 h(5, {{0, 1}, {2, 4}});
    CHECK(g.union_with(h).e() == 5);
    CHECK(g.intersect_with(h).e() == 1);
    CHECK(g.minus(h).e() == 3);

    VBitset s(5);
    s.set(0);
    s.set(1);
    s.set(2);
    CHECK(g.induced(s).e() == 3);
    VBitset a(5), b(5);
    a.set(0);
    b.set(1);
    b.set(2);
    CHECK(g.cross_restriction(a, b).e() == 2);
    CHECK(g.edges_between(a, b) == 2);
}

TEST_CASE("hypergraph edges, membership, links") {
    Hypergraph3 h = Hypergraph3::complete(5);
    CHECK(h.e() == 10);
    CHECK(h.has_edge(4, 0, 2));
    // Link of a vertex of the complete 3-graph is the complete graph on the
    // other four vertices.
    Graph2 l = h.link(0);
    CHECK(l.e() == 6);
    for (int u = 1; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(l.has_edge(u, v));

    // Sum of link sizes counts each edge three times.
    long sum = 0;
    for (int v = 0; v < 5; ++v) sum += h.link(v).e();
    CHECK(sum == 3 * h.e());

    CHECK(h.degree(0) == 6);
    CHECK(h.pair_degree(1, 2) == 3);
    CHECK(h.min_link_size() == 6);
}

TEST_CASE("induced and tripartite restriction") {
    Hypergraph3 h = Hypergraph3::complete(6);
    Hypergraph3 sub = h.induced(std::vector<int>{0, 1, 2, 3});
    CHECK(sub.e() == 4);
    VBitset x(6), y(6), z(6);
    x.set(0);
    x.set(1);
    y.set(2);
    y.set(3);
    z.set(4);
    z.set(5);
    CHECK(h.tripartite_restriction(x, y, z).e() == 8);
    CHECK(h.complement().e() == 0);
    Hypergraph3 one(4, {{0, 1, 2}});
    CHECK(one.complement().e() == 3);
}

TEST_CASE("triangle counts against cubic oracle") {
    std::vector<int> x{0, 1}, y{2, 3}, z{4, 5, 6};
    Triad full = Triad::complete(x, y, z, 7);
    CHECK(triangle_count(full) == 12);
    CHECK(naive_triangle_count(full) == 12);

    // Remove one cross pair; counts must stay in lockstep with the oracle.
    Graph2 g = full.g.minus(Graph2(7, {{0, 2}}));
    Triad t(x, y, z, g);
    CHECK(triangle_count(t) == naive_triangle_count(t));
    CHECK(triangle_count(t) == 9);
    CHECK(triangle_list(t).size() == 9);

    TriangleSet ts(t);
    CHECK(ts.count() == 9);
    Hypergraph3 h(7, {{0, 3, 4}, {1, 2, 5}});
    CHECK(ts.count_in(h) == 2);
    auto rel = relative_density(h, t);
    REQUIRE(rel.has_value());
    CHECK(*rel == Rational(2, 9));

    VBitset xs(7);
    xs.set(1);
    CHECK(triangle_count_through(t, xs) == 6);
}

TEST_CASE("triangle set unions across subgraphs") {
    std::vector<int> x{0, 1}, y{2, 3}, z{4, 5};
    Triad full = Triad::complete(x, y, z, 6);
    VBitset only0(6);
    only0.set(0);
    only0.set(2);
    only0.set(3);
    only0.set(4);
    only0.set(5);
    Graph2 q1 = full.g.induced(only0);
    TriangleSet a(full, q1);
    CHECK(a.count() == 4);  // triangles through x-vertex 0 only
    TriangleSet whole(full);
    TriangleSet b = whole;
    b &= a;
    CHECK(b.count() == 4);
    a |= whole;
    CHECK(a.count() == 8);
}

TEST_CASE("relative density of empty triad is undefined") {
    std::vector<int> x{0}, y{1}, z{2};
    Triad t(x, y, z, Graph2::empty(3));
    CHECK(!relative_density(Hypergraph3::complete(3), t).has_value());
}

TEST_CASE("vertex partition invariants") {
    VertexPartition p = VertexPartition::intervals(7, 3);
    CHECK(p.parts[0].size() == 2);
    CHECK(p.parts[2].size() == 3);
    CHECK(p.is_equitable());
    CHECK(p.refines(VertexPartition::trivial(7)));
    CHECK(!VertexPartition::trivial(7).refines(p));
    CHECK_THROWS(VertexPartition(3, {{0, 1}}));          // uncovered
    CHECK_THROWS(VertexPartition(3, {{0, 1}, {1, 2}}));  // overlap
}

TEST_CASE("pair partition: cells must tile each part pair") {
    VertexPartition p = VertexPartition::intervals(4, 2);  // {0,1},{2,3}
    Graph2 c1(4, {{0, 2}, {1, 3}});
    Graph2 c2(4, {{0, 3}, {1, 2}});
    PairPartition b(p, {{c1, c2}});
    CHECK(b.is_equitable(2));
    CHECK(b.cell_of(0, 2) == 0);
    CHECK(b.cell_of(3, 0) == 1);
    CHECK(b.total_cells() == 2);

    // Missing pair and double cover both rejected.
    CHECK_THROWS(PairPartition(p, {{c1}}));
    Graph2 offdiag(4, {{0, 2}, {1, 3}, {0, 3}, {1, 2}});
    CHECK_THROWS(PairPartition(p, {{c1, offdiag}}));

    PairPartition whole = PairPartition::complete_cells(p, 4);
    CHECK(whole.is_equitable(1));
    CHECK(whole.refines(whole));
    CHECK(b.refines(whole));
    CHECK(!whole.refines(b));
}

TEST_CASE("triad assembly from pair partition cells") {
    VertexPartition p = VertexPartition::intervals(6, 3);
    PairPartition b = PairPartition::complete_cells(p, 6);
    Triad t = triad_of(b, 0, 1, 2, 0, 0, 0);
    CHECK(triangle_count(t) == 8);
}

TEST_CASE("edge list round trip") {
    Hypergraph3 h(6, {{0, 1, 2}, {3, 4, 5}, {1, 3, 5}});
    Hypergraph3 back = parse_hypergraph3(serialize(h));
    CHECK(back == h);
    Graph2 g(4, {{0, 1}, {2, 3}});
    CHECK(parse_graph2(serialize(g)) == g);
}

TEST_CASE("edge list parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_hypergraph3("n=4 k=3\n0 1\n"), parse_error);
    try {
        parse_hypergraph3("n=4 k=3\n0 1 2\n0 2 1\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 3);  // duplicate reported on its own line
    }
    try {
        parse_hypergraph3("n=4 k=3\n0 1 9\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_hypergraph3("n=4 k=2\n0 1\n"), parse_error);
    CHECK_THROWS_AS(parse_hypergraph3("0 1 2\n"), parse_error);
}

TEST_CASE("partition file round trip and errors") {
    VertexPartition p = VertexPartition::intervals(5, 2);
    CHECK(parse_partition(serialize(p), 5).parts == p.parts);
    CHECK_THROWS_AS(parse_partition("part 1: 0 1\n", 2), parse_error);
    CHECK_THROWS_AS(parse_partition("part 0: 0\n", 2), parse_error);  // uncovered
}

TEST_CASE("config parsing") {
    auto cfg = parse_config("# comment\nn = 12\np_grid = 0.1,0.2  # inline\n");
    CHECK(cfg.at("n") == "12");
    CHECK(cfg.at("p_grid") == "0.1,0.2");
    CHECK_THROWS_AS(parse_config("novalue\n"), parse_error);
}
