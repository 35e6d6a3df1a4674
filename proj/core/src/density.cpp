#include "hrl/density.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "hrl/cliques.hpp"

namespace hrl {

namespace {

enum class Objective { sym, ratio, asym };

struct Frac {
    long num = 0;
    long den = 1;
};

int frac_cmp(const Frac& a, const Frac& b) {
    long lhs = a.num * b.den, rhs = b.num * a.den;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

struct Eval {
    Objective obj;
    int k = 3;
    long qn = 0, qd = 1;  // asym: 1/m_k(h2) = qn/qd

    // Value of a subgraph with e edges and v non-isolated vertices, or
    // nullopt when the subgraph does not enter the maximization.
    std::optional<Frac> operator()(long e, long v) const {
        if (e == 0) return std::nullopt;
        switch (obj) {
            case Objective::sym:
                if (e == 1) return Frac{1, k};  // single edge: v = k exactly
                return Frac{e - 1, v - k};
            case Objective::ratio:
                return Frac{e, v};
            case Objective::asym:
                return Frac{e * qd, (v - k) * qd + qn};
        }
        return std::nullopt;
    }
};

struct SubgraphMasks {
    int support = 0;                    // non-isolated vertex count
    std::vector<uint64_t> edge_masks;   // over compressed support indices
    std::vector<int> support_ids;       // compressed index -> original vertex
};

SubgraphMasks compress(int n, const std::vector<Triple>& edges) {
    std::vector<int> idx(n, -1);
    SubgraphMasks m;
    for (const auto& t : edges)
        for (int v : t)
            if (idx[v] < 0) {
                idx[v] = m.support++;
                m.support_ids.push_back(v);
            }
    if (m.support > 64)
        throw std::invalid_argument("density search: more than 64 non-isolated vertices");
    for (const auto& t : edges) {
        uint64_t mask = 0;
        for (int v : t) mask |= uint64_t{1} << idx[v];
        m.edge_masks.push_back(mask);
    }
    return m;
}

SubgraphMasks compress(int n, const std::vector<VPair>& edges) {
    std::vector<int> idx(n, -1);
    SubgraphMasks m;
    auto touch = [&](int v) {
        if (idx[v] < 0) {
            idx[v] = m.support++;
            m.support_ids.push_back(v);
        }
    };
    for (const auto& [u, v] : edges) {
        touch(u);
        touch(v);
    }
    if (m.support > 64)
        throw std::invalid_argument("density search: more than 64 non-isolated vertices");
    for (const auto& [u, v] : edges)
        m.edge_masks.push_back((uint64_t{1} << idx[u]) | (uint64_t{1} << idx[v]));
    return m;
}

struct RawResult {
    bool any = false;
    Frac best;
    std::vector<long> edge_indices;
    long e = 0, v = 0;
    int maximizer_count = 0;  // saturates at 2
    bool full_attains = false;
};

void consider(RawResult& r, const Frac& val, long e, long v, bool is_full,
              const std::function<std::vector<long>()>& witness) {
    if (!r.any || frac_cmp(val, r.best) > 0) {
        r.any = true;
        r.best = val;
        r.e = e;
        r.v = v;
        r.maximizer_count = 1;
        r.full_attains = is_full;
        r.edge_indices = witness();
        return;
    }
    if (frac_cmp(val, r.best) == 0) {
        if (r.maximizer_count < 2) ++r.maximizer_count;
        if (is_full) r.full_attains = true;
    }
}

// Route 1: induced subgraphs on support subsets.  Each subset contributes the
// subgraph of all edges inside it; maxima over arbitrary subgraphs coincide
// with maxima over these because adding an edge at fixed vertex support never
// lowers any objective here.
RawResult search_vertex_subsets(const SubgraphMasks& m, const Eval& ev) {
    RawResult r;
    int s = m.support;
    size_t ecount = m.edge_masks.size();
    uint64_t full = (s == 64) ? ~uint64_t{0} : ((uint64_t{1} << s) - 1);
    for (uint64_t sub = 1; sub <= full; ++sub) {
        long e = 0;
        uint64_t used = 0;
        for (size_t i = 0; i < ecount; ++i)
            if ((m.edge_masks[i] & ~sub) == 0) {
                ++e;
                used |= m.edge_masks[i];
            }
        auto val = ev(e, std::popcount(used));
        if (!val) continue;
        bool is_full = (e == static_cast<long>(ecount));
        consider(r, *val, e, std::popcount(used), is_full, [&] {
            std::vector<long> w;
            for (size_t i = 0; i < ecount; ++i)
                if ((m.edge_masks[i] & ~sub) == 0) w.push_back(static_cast<long>(i));
            return w;
        });
    }
    return r;
}

// Route 2: direct edge-subset enumeration (e <= 20).
RawResult search_edge_subsets(const SubgraphMasks& m, const Eval& ev) {
    RawResult r;
    int e_total = static_cast<int>(m.edge_masks.size());
    for (uint64_t sub = 1; sub < (uint64_t{1} << e_total); ++sub) {
        uint64_t used = 0;
        uint64_t bits = sub;
        while (bits) {
            used |= m.edge_masks[std::countr_zero(bits)];
            bits &= bits - 1;
        }
        long e = std::popcount(sub);
        auto val = ev(e, std::popcount(used));
        if (!val) continue;
        consider(r, *val, e, std::popcount(used), e == e_total, [&] {
            std::vector<long> w;
            uint64_t b = sub;
            while (b) {
                w.push_back(std::countr_zero(b));
                b &= b - 1;
            }
            return w;
        });
    }
    return r;
}

// Route 3: meet-in-the-middle over edge subsets (20 < e <= 30).
RawResult search_edge_subsets_mitm(const SubgraphMasks& m, const Eval& ev) {
    int e_total = static_cast<int>(m.edge_masks.size());
    int h1 = e_total / 2, h2 = e_total - h1;
    auto expand = [&](int base, int count) {
        std::vector<std::pair<uint64_t, int>> table(size_t{1} << count);  // mask, edges
        table[0] = {0, 0};
        for (uint64_t sub = 1; sub < (uint64_t{1} << count); ++sub) {
            int low = std::countr_zero(sub);
            auto prev = table[sub & (sub - 1)];
            table[sub] = {prev.first | m.edge_masks[base + low], prev.second + 1};
        }
        return table;
    };
    auto t1 = expand(0, h1), t2 = expand(h1, h2);
    RawResult r;
    uint64_t best_a = 0, best_b = 0;
    for (uint64_t a = 0; a < t1.size(); ++a) {
        for (uint64_t b = 0; b < t2.size(); ++b) {
            long e = t1[a].second + t2[b].second;
            if (e == 0) continue;
            long v = std::popcount(t1[a].first | t2[b].first);
            auto val = ev(e, v);
            if (!val) continue;
            bool is_full = (e == e_total);
            if (!r.any || frac_cmp(*val, r.best) > 0) {
                r.any = true;
                r.best = *val;
                r.e = e;
                r.v = v;
                r.maximizer_count = 1;
                r.full_attains = is_full;
                best_a = a;
                best_b = b;
            } else if (frac_cmp(*val, r.best) == 0) {
                if (r.maximizer_count < 2) ++r.maximizer_count;
                if (is_full) r.full_attains = true;
            }
        }
    }
    if (r.any) {
        for (int i = 0; i < h1; ++i)
            if (best_a >> i & 1) r.edge_indices.push_back(i);
        for (int i = 0; i < h2; ++i)
            if (best_b >> i & 1) r.edge_indices.push_back(h1 + i);
    }
    return r;
}

RawResult search(const SubgraphMasks& m, const Eval& ev) {
    size_t e = m.edge_masks.size();
    if (e == 0) return {};
    double vertex_work = std::ldexp(static_cast<double>(e), m.support);
    if (m.support <= 25 && vertex_work <= 5e8) return search_vertex_subsets(m, ev);
    if (e <= 20) return search_edge_subsets(m, ev);
    if (e <= 30) return search_edge_subsets_mitm(m, ev);
    throw std::invalid_argument("density search: instance too large (v > 25 and e > 30)");
}

DensityWitness finish(const RawResult& r) {
    DensityWitness w;
    if (!r.any) {
        w.value = Rational(0);
        w.unique_at_full = false;
        return w;
    }
    w.value = Rational(r.best.num, r.best.den);
    w.edge_indices = r.edge_indices;
    w.e_count = r.e;
    w.v_count = r.v;
    w.unique_at_full = (r.maximizer_count == 1 && r.full_attains);
    return w;
}

}  // namespace

Rational local_density_counts(long e, long v, int k) {
    if (e == 0) return Rational(0);
    if (e == 1 && v == k) return Rational(1, k);
    if (v <= k)
        throw std::invalid_argument("local density: v must exceed k when e >= 2");
    return Rational(e - 1, v - k);
}

Rational local_density(const Hypergraph3& h) {
    SubgraphMasks m = compress(h.n(), h.edges());
    uint64_t used = 0;
    for (uint64_t em : m.edge_masks) used |= em;
    return local_density_counts(h.e(), std::popcount(used), 3);
}

Rational local_density(const Graph2& g) {
    SubgraphMasks m = compress(g.n(), g.edges());
    uint64_t used = 0;
    for (uint64_t em : m.edge_masks) used |= em;
    return local_density_counts(g.e(), std::popcount(used), 2);
}

DensityWitness max_local_density(const Hypergraph3& h) {
    return finish(search(compress(h.n(), h.edges()), Eval{Objective::sym, 3}));
}

DensityWitness max_local_density(const Graph2& g) {
    return finish(search(compress(g.n(), g.edges()), Eval{Objective::sym, 2}));
}

DensityWitness max_edge_vertex_ratio(const Hypergraph3& h) {
    return finish(search(compress(h.n(), h.edges()), Eval{Objective::ratio, 3}));
}

DensityWitness asym_max_density(const Hypergraph3& h1, const Hypergraph3& h2) {
    DensityWitness inner = max_local_density(h2);
    if (inner.value.sign() <= 0)
        throw std::invalid_argument("asym_max_density: m_3 of second graph must be > 0");
    // 1/m as qn/qd with small integer parts (inner values have tiny terms).
    long qn = inner.value.den().get_si();
    long qd = inner.value.num().get_si();
    return finish(
        search(compress(h1.n(), h1.edges()), Eval{Objective::asym, 3, qn, qd}));
}

bool is_strictly_balanced(const Hypergraph3& h) {
    if (h.e() == 0) return false;
    return max_local_density(h).unique_at_full;
}

bool is_strictly_balanced_asym(const Hypergraph3& h1, const Hypergraph3& h2) {
    if (h1.e() == 0) return false;
    return asym_max_density(h1, h2).unique_at_full;
}

Rational clique_max_density_closed(int t, int k) {
    if (t < 3) throw std::invalid_argument("clique_max_density_closed: need t >= 3");
    if (k < 2) throw std::invalid_argument("clique_max_density_closed: need k >= 2");
    long pairs = static_cast<long>(t) * (t - 1) / 2;
    return Rational(pairs - 1, t + (k - 2) * pairs - k);
}

Rational clique_m3_closed(int t) {
    if (t < 3) throw std::invalid_argument("clique_m3_closed: need t >= 3");
    long tt = t;
    return Rational(tt * tt - tt - 2, tt * tt + tt - 6);
}

Rational clique_ratio_closed(int t) {
    if (t < 2) throw std::invalid_argument("clique_ratio_closed: need t >= 2");
    long pairs = static_cast<long>(t) * (t - 1) / 2;
    return Rational(pairs, t + pairs);
}

Rational clique_asym_closed(int t, int s) {
    if (t < 3 || s < 2) throw std::invalid_argument("clique_asym_closed: need t>=3, s>=2");
    // Single-edge case s = 2 has maximum density 1/3 directly.
    Rational m2 = (s == 2) ? Rational(1, 3) : clique_max_density_closed(s, 3);
    long pairs = static_cast<long>(t) * (t - 1) / 2;
    Rational denom = Rational(t + pairs - 3) + Rational(1) / m2;
    return Rational(pairs) / denom;
}

double threshold_probability(const Rational& m, double n, double c) {
    if (m.sign() <= 0) throw std::invalid_argument("threshold_probability: m must be > 0");
    return c * std::pow(n, -1.0 / m.to_double());
}

std::vector<EvenCliqueComparison> even_clique_density_report(const std::vector<int>& ts) {
    std::vector<EvenCliqueComparison> out;
    for (int t : ts) {
        if (t < 4 || t % 2 != 0)
            throw std::invalid_argument("even_clique_density_report: need even t >= 4");
        EvenCliqueComparison row;
        row.t = t;
        Hypergraph3 big = linear_clique3(t);
        Hypergraph3 half = linear_clique3(t / 2);
        Hypergraph3 prev = linear_clique3(t - 1);
        row.asym_value = asym_max_density(big, half).value;
        row.sym_value = max_local_density(prev).value;
        int c = (row.asym_value < row.sym_value) ? -1
                : (row.sym_value < row.asym_value) ? 1 : 0;
        row.cmp = c;
        row.flagged = c < 0;
        row.closed_forms_agree = (row.asym_value == clique_asym_closed(t, t / 2)) &&
                                 (row.sym_value == clique_m3_closed(t - 1));
        out.push_back(row);
    }
    return out;
}

}  // namespace hrl
