#include "hrl/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hrl {

Triple make_triple(int a, int b, int c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
        throw std::invalid_argument("triple with repeated vertex");
    return t;
}

VPair make_pair(int u, int v) {
    if (u == v) throw std::invalid_argument("pair with repeated vertex");
    return u < v ? VPair{u, v} : VPair{v, u};
}

static void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                                " outside [0," + std::to_string(n) + ")");
}

Graph2::Graph2(int n, std::vector<VPair> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph2: negative n");
    for (auto& [u, v] : edges) {
        check_vertex(u, n, "Graph2");
        check_vertex(v, n, "Graph2");
        if (u == v) throw std::invalid_argument("Graph2: loop edge");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Graph2: duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n, VBitset(n));
    for (const auto& [u, v] : edges_) {
        adj_[u].set(v);
        adj_[v].set(u);
    }
}

Graph2 Graph2::complete(int n) {
    std::vector<VPair> es;
    es.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph2(n, std::move(es));
}

Graph2 Graph2::complete_bipartite(int n, const std::vector<int>& a,
                                  const std::vector<int>& b) {
    std::vector<VPair> es;
    es.reserve(a.size() * b.size());
    for (int u : a)
        for (int v : b) es.push_back(make_pair(u, v));
    return Graph2(n, std::move(es));
}

long Graph2::edges_between(const VBitset& x, const VBitset& y) const {
    long c = 0;
    x.for_each([&](int u) { c += adj_[u].count_and(y); });
    return c;
}

long Graph2::edges_inside(const VBitset& s) const {
    long c = 0;
    s.for_each([&](int u) { c += adj_[u].count_and(s); });
    return c / 2;
}

Graph2 Graph2::union_with(const Graph2& o) const {
    std::vector<VPair> es = edges_;
    for (const auto& e : o.edges_)
        if (!has_edge(e.first, e.second)) es.push_back(e);
    return Graph2(n_, std::move(es));
}

Graph2 Graph2::intersect_with(const Graph2& o) const {
    std::vector<VPair> es;
    for (const auto& e : edges_)
        if (o.has_edge(e.first, e.second)) es.push_back(e);
    return Graph2(n_, std::move(es));
}

Graph2 Graph2::minus(const Graph2& o) const {
    std::vector<VPair> es;
    for (const auto& e : edges_)
        if (!o.has_edge(e.first, e.second)) es.push_back(e);
    return Graph2(n_, std::move(es));
}

Graph2 Graph2::induced(const VBitset& s) const {
    std::vector<VPair> es;
    for (const auto& e : edges_)
        if (s.test(e.first) && s.test(e.second)) es.push_back(e);
    return Graph2(n_, std::move(es));
}

Graph2 Graph2::cross_restriction(const VBitset& x, const VBitset& y) const {
    std::vector<VPair> es;
    for (const auto& e : edges_) {
        bool a = x.test(e.first) && y.test(e.second);
        bool b = y.test(e.first) && x.test(e.second);
        if (a || b) es.push_back(e);
    }
    return Graph2(n_, std::move(es));
}

Hypergraph3::Hypergraph3(int n, std::vector<Triple> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("Hypergraph3: negative n");
    for (auto& t : edges) {
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2])
            throw std::invalid_argument("Hypergraph3: triple with repeated vertex");
        check_vertex(t[0], n, "Hypergraph3");
        check_vertex(t[2], n, "Hypergraph3");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("Hypergraph3: duplicate edge");
    edges_ = std::move(edges);
}

Hypergraph3 Hypergraph3::complete(int n) {
    std::vector<Triple> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) es.push_back({a, b, c});
    return Hypergraph3(n, std::move(es));
}

bool Hypergraph3::has_edge(int a, int b, int c) const {
    return edge_rank(make_triple(a, b, c)) >= 0;
}

long Hypergraph3::edge_rank(const Triple& t) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), t);
    if (it == edges_.end() || *it != t) return -1;
    return it - edges_.begin();
}

long Hypergraph3::degree(int v) const {
    long c = 0;
    for (const auto& t : edges_)
        if (t[0] == v || t[1] == v || t[2] == v) ++c;
    return c;
}

long Hypergraph3::pair_degree(int u, int v) const {
    long c = 0;
    for (const auto& t : edges_) {
        int hits = (t[0] == u || t[1] == u || t[2] == u) +
                   (t[0] == v || t[1] == v || t[2] == v);
        if (hits == 2) ++c;
    }
    return c;
}

long Hypergraph3::min_link_size() const {
    if (n_ == 0) return 0;
    std::vector<long> deg(n_, 0);
    for (const auto& t : edges_) {
        ++deg[t[0]];
        ++deg[t[1]];
        ++deg[t[2]];
    }
    return *std::min_element(deg.begin(), deg.end());
}

Graph2 Hypergraph3::link(int v) const {
    check_vertex(v, n_, "link");
    std::vector<VPair> es;
    for (const auto& t : edges_) {
        if (t[0] == v)
            es.push_back({t[1], t[2]});
        else if (t[1] == v)
            es.push_back({t[0], t[2]});
        else if (t[2] == v)
            es.push_back({t[0], t[1]});
    }
    return Graph2(n_, std::move(es));
}

Graph2 Hypergraph3::link_in(int v, const Graph2& g) const {
    return link(v).intersect_with(g);
}

Hypergraph3 Hypergraph3::induced(const VBitset& s) const {
    std::vector<Triple> es;
    for (const auto& t : edges_)
        if (s.test(t[0]) && s.test(t[1]) && s.test(t[2])) es.push_back(t);
    return Hypergraph3(n_, std::move(es));
}

Hypergraph3 Hypergraph3::induced(const std::vector<int>& s) const {
    return induced(VBitset::of(n_, s));
}

Hypergraph3 Hypergraph3::tripartite_restriction(const VBitset& x, const VBitset& y,
                                                const VBitset& z) const {
    std::vector<Triple> es;
    for (const auto& t : edges_) {
        int cx = x.test(t[0]) + x.test(t[1]) + x.test(t[2]);
        int cy = y.test(t[0]) + y.test(t[1]) + y.test(t[2]);
        int cz = z.test(t[0]) + z.test(t[1]) + z.test(t[2]);
        if (cx == 1 && cy == 1 && cz == 1) es.push_back(t);
    }
    return Hypergraph3(n_, std::move(es));
}

Hypergraph3 Hypergraph3::union_with(const Hypergraph3& o) const {
    if (o.n_ != n_) throw std::invalid_argument("union_with: ground sets differ");
    std::vector<Triple> es = edges_;
    for (const auto& t : o.edges_)
        if (edge_rank(t) < 0) es.push_back(t);
    return Hypergraph3(n_, std::move(es));
}

Hypergraph3 Hypergraph3::complement() const {
    long total = static_cast<long>(n_) * (n_ - 1) * (n_ - 2) / 6;
    if (total > 20'000'000)
        throw std::invalid_argument("complement: ground set too large to materialise");
    std::vector<Triple> es;
    es.reserve(static_cast<size_t>(total - e()));
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            for (int c = b + 1; c < n_; ++c) {
                Triple t{a, b, c};
                if (edge_rank(t) < 0) es.push_back(t);
            }
    return Hypergraph3(n_, std::move(es));
}

Triad::Triad(std::vector<int> x_, std::vector<int> y_, std::vector<int> z_, Graph2 g_)
    : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)), g(std::move(g_)) {
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    std::sort(z.begin(), z.end());
    int n = g.n();
    VBitset mx = VBitset::of(n, x), my = VBitset::of(n, y), mz = VBitset::of(n, z);
    if (mx.count() != static_cast<long>(x.size()) ||
        my.count() != static_cast<long>(y.size()) ||
        mz.count() != static_cast<long>(z.size()))
        throw std::invalid_argument("Triad: repeated vertex inside a part");
    if (mx.intersects(my) || mx.intersects(mz) || my.intersects(mz))
        throw std::invalid_argument("Triad: parts overlap");
    for (const auto& [u, v] : g.edges()) {
        int pu = mx.test(u) ? 0 : my.test(u) ? 1 : mz.test(u) ? 2 : -1;
        int pv = mx.test(v) ? 0 : my.test(v) ? 1 : mz.test(v) ? 2 : -1;
        if (pu < 0 || pv < 0 || pu == pv)
            throw std::invalid_argument("Triad: edge not crossing two distinct parts");
    }
}

Triad Triad::from_cells(const std::vector<int>& x, const std::vector<int>& y,
                        const std::vector<int>& z, const Graph2& xy, const Graph2& xz,
                        const Graph2& yz) {
    return Triad(x, y, z, xy.union_with(xz).union_with(yz));
}

Triad Triad::complete(const std::vector<int>& x, const std::vector<int>& y,
                      const std::vector<int>& z, int n) {
    std::vector<VPair> es;
    for (int u : x)
        for (int v : y) es.push_back(make_pair(u, v));
    for (int u : x)
        for (int v : z) es.push_back(make_pair(u, v));
    for (int u : y)
        for (int v : z) es.push_back(make_pair(u, v));
    return Triad(x, y, z, Graph2(n, std::move(es)));
}

namespace {

// Shared triangle walk: calls f(global x, global y, global z) per triangle.
template <typename F>
void walk_triangles(const Triad& t, const Graph2& g, F&& f) {
    int n = g.n();
    VBitset my = VBitset::of(n, t.y), mz = VBitset::of(n, t.z);
    for (int u : t.x) {
        VBitset yn = g.nbrs(u);
        yn &= my;
        yn.for_each([&](int v) {
            VBitset zn = g.nbrs(u);
            zn &= g.nbrs(v);
            zn &= mz;
            zn.for_each([&](int w) { f(u, v, w); });
        });
    }
}

}  // namespace

TriangleSet::TriangleSet(const Triad& t) : TriangleSet(t, t.g) {}

TriangleSet::TriangleSet(const Triad& frame, const Graph2& q)
    : px_(&frame.x), py_(&frame.y), pz_(&frame.z) {
    long total = frame.volume();
    bits_ = VBitset(static_cast<int>(total));
    std::vector<int> lx(q.n(), -1), ly(q.n(), -1), lz(q.n(), -1);
    for (size_t i = 0; i < frame.x.size(); ++i) lx[frame.x[i]] = static_cast<int>(i);
    for (size_t i = 0; i < frame.y.size(); ++i) ly[frame.y[i]] = static_cast<int>(i);
    for (size_t i = 0; i < frame.z.size(); ++i) lz[frame.z[i]] = static_cast<int>(i);
    long ys = static_cast<long>(frame.y.size()), zs = static_cast<long>(frame.z.size());
    walk_triangles(frame, q, [&](int u, int v, int w) {
        long idx = (static_cast<long>(lx[u]) * ys + ly[v]) * zs + lz[w];
        bits_.set(static_cast<int>(idx));
    });
}

TriangleSet& TriangleSet::operator|=(const TriangleSet& o) {
    bits_ |= o.bits_;
    return *this;
}

TriangleSet& TriangleSet::operator&=(const TriangleSet& o) {
    bits_ &= o.bits_;
    return *this;
}

long TriangleSet::count_in(const Hypergraph3& h) const {
    long ys = static_cast<long>(py_->size()), zs = static_cast<long>(pz_->size());
    long c = 0;
    bits_.for_each([&](int idx) {
        int iz = static_cast<int>(idx % zs);
        int iy = static_cast<int>((idx / zs) % ys);
        int ix = static_cast<int>(idx / (ys * zs));
        if (h.has_edge((*px_)[ix], (*py_)[iy], (*pz_)[iz])) ++c;
    });
    return c;
}

std::vector<Triple> TriangleSet::to_triples() const {
    long ys = static_cast<long>(py_->size()), zs = static_cast<long>(pz_->size());
    std::vector<Triple> out;
    bits_.for_each([&](int idx) {
        int iz = static_cast<int>(idx % zs);
        int iy = static_cast<int>((idx / zs) % ys);
        int ix = static_cast<int>(idx / (ys * zs));
        out.push_back(make_triple((*px_)[ix], (*py_)[iy], (*pz_)[iz]));
    });
    return out;
}

long triangle_count(const Triad& t) {
    long c = 0;
    walk_triangles(t, t.g, [&](int, int, int) { ++c; });
    return c;
}

std::vector<Triple> triangle_list(const Triad& t) {
    std::vector<Triple> out;
    walk_triangles(t, t.g, [&](int u, int v, int w) { out.push_back(make_triple(u, v, w)); });
    return out;
}

long triangle_count_through(const Triad& t, const VBitset& xs) {
    long c = 0;
    int n = t.g.n();
    VBitset my = VBitset::of(n, t.y), mz = VBitset::of(n, t.z);
    for (int u : t.x) {
        if (!xs.test(u)) continue;
        VBitset yn = t.g.nbrs(u);
        yn &= my;
        long cu = 0;
        yn.for_each([&](int v) {
            VBitset zn = t.g.nbrs(u);
            zn &= t.g.nbrs(v);
            cu += zn.count_and(mz);
        });
        c += cu;
    }
    return c;
}

std::pair<long, long> relative_density_counts(const Hypergraph3& h, const Triad& t) {
    long total = 0, inside = 0;
    walk_triangles(t, t.g, [&](int u, int v, int w) {
        ++total;
        if (h.has_edge(u, v, w)) ++inside;
    });
    return {inside, total};
}

std::optional<Rational> relative_density(const Hypergraph3& h, const Triad& t) {
    auto [inside, total] = relative_density_counts(h, t);
    if (total == 0) return std::nullopt;
    return Rational(inside, total);
}

}  // namespace hrl
