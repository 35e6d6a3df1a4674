#include "hrl/cliques.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "hrl/matching.hpp"
#include "hrl/partition.hpp"

namespace hrl {

namespace {

long pair_rank(int i, int j, int t) {
    // lexicographic rank of (i,j), i<j, among pairs of {0..t-1}
    return static_cast<long>(i) * t - static_cast<long>(i) * (i + 1) / 2 + (j - i - 1);
}

std::string describe(const std::vector<int>& vs) {
    std::ostringstream out;
    for (size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
    return out.str();
}

}  // namespace

std::vector<Triple> CopyCertificate::edges() const {
    std::vector<Triple> out;
    for (const auto& [pr, a] : apex)
        out.push_back(make_triple(branch[pr.first], branch[pr.second], a));
    return out;
}

std::vector<int> CopyCertificate::vertices() const {
    std::vector<int> out = branch;
    for (const auto& [pr, a] : apex) out.push_back(a);
    return out;
}

long linear_clique_vertex_count(int t, int k) {
    return t + static_cast<long>(k - 2) * t * (t - 1) / 2;
}

long linear_clique_edge_count(int t) { return static_cast<long>(t) * (t - 1) / 2; }

Hypergraph3 linear_clique3(int t) {
    if (t < 2) throw std::invalid_argument("linear_clique3: need t >= 2");
    std::vector<Triple> es;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            es.push_back(make_triple(i, j, t + static_cast<int>(pair_rank(i, j, t))));
    return Hypergraph3(static_cast<int>(linear_clique_vertex_count(t, 3)), std::move(es));
}

Graph2 linear_clique2(int t) {
    if (t < 2) throw std::invalid_argument("linear_clique2: need t >= 2");
    return Graph2::complete(t);
}

CopyCertificate canonical_certificate(int t) {
    CopyCertificate c;
    for (int i = 0; i < t; ++i) c.branch.push_back(i);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            c.apex[{i, j}] = t + static_cast<int>(pair_rank(i, j, t));
    return c;
}

bool verify_copy(const Hypergraph3& host, const CopyCertificate& c, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    int t = c.t();
    if (t < 2) return fail("fewer than 2 branch vertices");
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (c.apex.find({i, j}) == c.apex.end())
                return fail("missing apex for branch pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
    if (static_cast<long>(c.apex.size()) != linear_clique_edge_count(t))
        return fail("extra apex entries");
    std::vector<int> vs = c.vertices();
    for (int v : vs)
        if (v < 0 || v >= host.n()) return fail("vertex out of host range");
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return fail("repeated vertex among branch/apex set: " + describe(vs));
    for (const auto& [pr, a] : c.apex) {
        Triple e = make_triple(c.branch[pr.first], c.branch[pr.second], a);
        if (!host.has_edge(e))
            return fail("missing host edge " + std::to_string(e[0]) + " " +
                        std::to_string(e[1]) + " " + std::to_string(e[2]));
    }
    return true;
}

bool verify_copy_coloured(const Coloring2& psi, const CopyCertificate& c, Colour col,
                          std::string* why) {
    if (!verify_copy(psi.host(), c, why)) return false;
    for (const auto& e : c.edges()) {
        if (psi.at(e) != col) {
            if (why)
                *why = std::string("edge not ") + colour_name(col) + ": " +
                       std::to_string(e[0]) + " " + std::to_string(e[1]) + " " +
                       std::to_string(e[2]);
            return false;
        }
    }
    return true;
}

namespace {

// Pair -> candidate apex set for all usable edges.
class PairLinks {
  public:
    PairLinks(const Hypergraph3& host, const std::function<bool(const Triple&)>& edge_ok,
              const VBitset& allowed) : n_(host.n()) {
        for (const auto& e : host.edges()) {
            if (edge_ok && !edge_ok(e)) continue;
            add(e[0], e[1], e[2], allowed);
            add(e[0], e[2], e[1], allowed);
            add(e[1], e[2], e[0], allowed);
        }
    }

    const VBitset* get(int u, int v) const {
        auto it = links_.find(key(u, v));
        return it == links_.end() ? nullptr : &it->second;
    }

  private:
    long key(int u, int v) const {
        if (u > v) std::swap(u, v);
        return static_cast<long>(u) * n_ + v;
    }
    void add(int u, int v, int w, const VBitset& allowed) {
        if (!allowed.test(u) || !allowed.test(v) || !allowed.test(w)) return;
        auto [it, fresh] = links_.try_emplace(key(u, v), VBitset(n_));
        it->second.set(w);
    }

    int n_;
    std::unordered_map<long, VBitset> links_;
};

// Enumerate systems of distinct apex representatives over per-pair candidate
// lists; emit returns true to halt the walk early.
struct AllMatchings {
    const std::vector<std::vector<int>>& cand;
    const std::vector<long>& order;  // pair slots sorted by candidate count
    std::vector<int> assigned;       // by original slot index
    VBitset used;
    long* nodes;
    long budget;
    bool budget_tripped = false;
    bool halted = false;
    std::function<bool(const std::vector<int>&)> emit;

    void rec(size_t depth) {
        if (budget_tripped || halted) return;
        if (++*nodes > budget) {
            budget_tripped = true;
            return;
        }
        if (depth == order.size()) {
            if (emit(assigned)) halted = true;
            return;
        }
        long slot = order[depth];
        for (int v : cand[slot]) {
            if (used.test(v)) continue;
            used.set(v);
            assigned[slot] = v;
            rec(depth + 1);
            used.reset(v);
            if (budget_tripped || halted) return;
        }
    }
};

std::vector<long> slots_by_candidate_count(const std::vector<std::vector<int>>& cand) {
    std::vector<long> order(cand.size());
    for (size_t s = 0; s < cand.size(); ++s) order[s] = static_cast<long>(s);
    std::sort(order.begin(), order.end(),
              [&](long a, long b) { return cand[a].size() < cand[b].size(); });
    return order;
}

struct BranchSearch {
    const Hypergraph3& host;
    const CliqueQuery& q;
    const PairLinks& links;
    const std::vector<int>& verts;
    CliqueSearch& out;
    std::vector<int> chosen;
    bool done = false;

    bool charge() {
        ++out.branch_sets_tried;
        if (out.branch_sets_tried > q.budget) {
            out.outcome = SearchOutcome::inconclusive;
            done = true;
            return false;
        }
        return true;
    }

    // Try to complete the current branch set with a system of distinct apexes.
    void try_leaf() {
        if (!charge()) return;
        int t = q.t;
        VBitset branch_mask = VBitset::of(host.n(), chosen);
        std::vector<std::vector<int>> cand(static_cast<size_t>(t) * (t - 1) / 2);
        size_t at = 0;
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) {
                const VBitset* lk = links.get(chosen[i], chosen[j]);
                if (!lk) return;
                VBitset c = *lk;
                c.subtract(branch_mask);
                cand[at] = c.to_vector();
                if (cand[at].empty()) return;
                ++at;
            }
        auto build = [&](const std::vector<int>& assigned) {
            CopyCertificate cert;
            cert.branch = chosen;
            size_t slot = 0;
            for (int i = 0; i < t; ++i)
                for (int j = i + 1; j < t; ++j) cert.apex[{i, j}] = assigned[slot++];
            return cert;
        };
        if (!q.accept) {
            auto assignment = perfect_assignment(cand);
            if (!assignment) return;
            out.copy = build(*assignment);
            out.outcome = SearchOutcome::found;
            done = true;
            return;
        }
        // With an accept filter a single matching is not enough: walk every
        // apex assignment of this branch set until one is accepted.
        std::vector<long> order = slots_by_candidate_count(cand);
        AllMatchings am{cand,          order, std::vector<int>(cand.size()),
                        VBitset(host.n()), &out.assignment_nodes, q.budget,
                        false,         false, nullptr};
        am.emit = [&](const std::vector<int>& assigned) {
            CopyCertificate cert = build(assigned);
            if (!q.accept(cert)) return false;
            out.copy = std::move(cert);
            out.outcome = SearchOutcome::found;
            done = true;
            return true;
        };
        am.rec(0);
        if (am.budget_tripped) {
            out.outcome = SearchOutcome::inconclusive;
            done = true;
        }
    }

    void recurse(size_t from) {
        if (done) return;
        if (static_cast<int>(chosen.size()) == q.t) {
            try_leaf();
            return;
        }
        int remaining = q.t - static_cast<int>(chosen.size());
        for (size_t vi = from; vi + remaining <= verts.size() && !done; ++vi) {
            int b = verts[vi];
            bool ok = true;
            for (int prev : chosen) {
                const VBitset* lk = links.get(prev, b);
                if (!lk) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(b);
            recurse(vi + 1);
            chosen.pop_back();
        }
    }
};

}  // namespace

CliqueSearch find_linear_clique(const Hypergraph3& host, const CliqueQuery& q) {
    if (q.t < 2) throw std::invalid_argument("find_linear_clique: need t >= 2");
    CliqueSearch out;
    out.budget = q.budget;
    VBitset allowed = q.allowed ? *q.allowed : [&] {
        VBitset a(host.n());
        for (int v = 0; v < host.n(); ++v) a.set(v);
        return a;
    }();
    PairLinks links(host, q.edge_ok, allowed);
    // Branch candidates: vertices on at least one usable edge.
    VBitset touched(host.n());
    for (const auto& e : host.edges()) {
        if (q.edge_ok && !q.edge_ok(e)) continue;
        if (!allowed.test(e[0]) || !allowed.test(e[1]) || !allowed.test(e[2])) continue;
        touched.set(e[0]);
        touched.set(e[1]);
        touched.set(e[2]);
    }
    std::vector<int> verts = touched.to_vector();
    BranchSearch search{host, q, links, verts, out};
    search.recurse(0);
    if (out.outcome == SearchOutcome::absent && out.branch_sets_tried > q.budget)
        out.outcome = SearchOutcome::inconclusive;
    return out;
}

CliqueSearch contains_linear_clique(const Hypergraph3& host, int t, long budget) {
    CliqueQuery q;
    q.t = t;
    q.budget = budget;
    return find_linear_clique(host, q);
}

CopyList all_linear_clique_copies(const Hypergraph3& host, int t, long budget) {
    if (t < 2) throw std::invalid_argument("all_linear_clique_copies: need t >= 2");
    CopyList out;
    VBitset allowed(host.n());
    for (int v = 0; v < host.n(); ++v) allowed.set(v);
    PairLinks links(host, nullptr, allowed);
    VBitset touched(host.n());
    for (const auto& e : host.edges()) {
        touched.set(e[0]);
        touched.set(e[1]);
        touched.set(e[2]);
    }
    std::vector<int> verts = touched.to_vector();
    long pair_total = linear_clique_edge_count(t);
    std::vector<int> chosen;

    std::function<void(size_t)> rec = [&](size_t from) {
        if (!out.complete) return;
        if (static_cast<int>(chosen.size()) == t) {
            if (++out.nodes > budget) {
                out.complete = false;
                return;
            }
            VBitset branch_mask = VBitset::of(host.n(), chosen);
            std::vector<std::vector<int>> cand(static_cast<size_t>(pair_total));
            size_t at = 0;
            for (int i = 0; i < t; ++i)
                for (int j = i + 1; j < t; ++j) {
                    const VBitset* lk = links.get(chosen[i], chosen[j]);
                    if (!lk) return;
                    VBitset c = *lk;
                    c.subtract(branch_mask);
                    cand[at] = c.to_vector();
                    if (cand[at].empty()) return;
                    ++at;
                }
            std::vector<long> order = slots_by_candidate_count(cand);
            AllMatchings am{cand,  order, std::vector<int>(cand.size()),
                            VBitset(host.n()), &out.nodes, budget,
                            false, false, nullptr};
            am.emit = [&](const std::vector<int>& assigned) {
                std::vector<long> ranks;
                size_t slot = 0;
                for (int i = 0; i < t; ++i)
                    for (int j = i + 1; j < t; ++j) {
                        Triple e = make_triple(chosen[i], chosen[j], assigned[slot++]);
                        ranks.push_back(host.edge_rank(e));
                    }
                std::sort(ranks.begin(), ranks.end());
                out.edge_sets.push_back(std::move(ranks));
                return false;
            };
            am.rec(0);
            if (am.budget_tripped) out.complete = false;
            return;
        }
        int remaining = t - static_cast<int>(chosen.size());
        for (size_t vi = from; vi + remaining <= verts.size() && out.complete; ++vi) {
            int b = verts[vi];
            bool ok = true;
            for (int prev : chosen)
                if (!links.get(prev, b)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(b);
            rec(vi + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    std::sort(out.edge_sets.begin(), out.edge_sets.end());
    out.edge_sets.erase(std::unique(out.edge_sets.begin(), out.edge_sets.end()),
                        out.edge_sets.end());
    return out;
}

namespace {

std::vector<int> pattern_order(const Hypergraph3& pattern) {
    int pv = pattern.n();
    for (int v = 0; v < pv; ++v)
        if (pattern.degree(v) == 0)
            throw std::invalid_argument("pattern has an isolated vertex");
    std::vector<int> order;
    std::vector<char> placed(pv, 0);
    for (int step = 0; step < pv; ++step) {
        int best = -1;
        long best_complete = -1, best_touch = -1, best_deg = -1;
        for (int v = 0; v < pv; ++v) {
            if (placed[v]) continue;
            long complete = 0, touch = 0;
            for (const auto& e : pattern.edges()) {
                bool has_v = (e[0] == v || e[1] == v || e[2] == v);
                if (!has_v) continue;
                int placed_cnt = 0;
                for (int u : e) placed_cnt += (u != v && placed[u]);
                if (placed_cnt == 2) ++complete;
                if (placed_cnt >= 1) ++touch;
            }
            long deg = pattern.degree(v);
            if (std::tie(complete, touch, deg) >
                std::tie(best_complete, best_touch, best_deg)) {
                best = v;
                best_complete = complete;
                best_touch = touch;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }
    return order;
}

struct PatternWalk {
    const Hypergraph3& host;
    const Hypergraph3& pattern;
    const std::vector<int>& order;
    std::vector<int> image;  // pattern vertex -> host vertex or -1
    VBitset used;
    std::vector<int> host_verts;
    long nodes = 0;
    long budget;
    bool complete = true;
    std::function<void(const std::vector<int>&)> on_copy;

    void rec(size_t depth) {
        if (!complete) return;
        if (depth == order.size()) {
            on_copy(image);
            return;
        }
        int pv = order[depth];
        for (int hv : host_verts) {
            if (used.test(hv)) continue;
            if (++nodes > budget) {
                complete = false;
                return;
            }
            image[pv] = hv;
            bool ok = true;
            for (const auto& e : pattern.edges()) {
                if (e[0] != pv && e[1] != pv && e[2] != pv) continue;
                int a = image[e[0]], b = image[e[1]], c = image[e[2]];
                if (a < 0 || b < 0 || c < 0) continue;
                if (!host.has_edge(a, b, c)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used.set(hv);
                rec(depth + 1);
                used.reset(hv);
            }
            image[pv] = -1;
            if (!complete) return;
        }
    }
};

PatternWalk make_walk(const Hypergraph3& host, const Hypergraph3& pattern,
                      const std::vector<int>& order, long budget) {
    PatternWalk w{host,
                  pattern,
                  order,
                  std::vector<int>(pattern.n(), -1),
                  VBitset(host.n()),
                  {},
                  0,
                  budget,
                  true,
                  nullptr};
    VBitset touched(host.n());
    for (const auto& e : host.edges()) {
        touched.set(e[0]);
        touched.set(e[1]);
        touched.set(e[2]);
    }
    w.host_verts = touched.to_vector();
    return w;
}

}  // namespace

PatternCount count_labelled_copies(const Hypergraph3& host, const Hypergraph3& pattern,
                                   long node_budget) {
    std::vector<int> order = pattern_order(pattern);
    PatternWalk w = make_walk(host, pattern, order, node_budget);
    PatternCount out;
    w.on_copy = [&](const std::vector<int>&) { ++out.count; };
    w.rec(0);
    out.complete = w.complete;
    out.nodes = w.nodes;
    return out;
}

CopyList enumerate_pattern_copies(const Hypergraph3& host, const Hypergraph3& pattern,
                                  long node_budget) {
    std::vector<int> order = pattern_order(pattern);
    PatternWalk w = make_walk(host, pattern, order, node_budget);
    CopyList out;
    w.on_copy = [&](const std::vector<int>& image) {
        std::vector<long> ranks;
        for (const auto& e : pattern.edges())
            ranks.push_back(host.edge_rank(make_triple(image[e[0]], image[e[1]], image[e[2]])));
        std::sort(ranks.begin(), ranks.end());
        out.edge_sets.push_back(std::move(ranks));
    };
    w.rec(0);
    out.complete = w.complete;
    out.nodes = w.nodes;
    std::sort(out.edge_sets.begin(), out.edge_sets.end());
    out.edge_sets.erase(std::unique(out.edge_sets.begin(), out.edge_sets.end()),
                        out.edge_sets.end());
    return out;
}

Hypergraph3 complete_tripartite3(int n, const std::vector<int>& v1,
                                 const std::vector<int>& v2,
                                 const std::vector<int>& v3) {
    std::vector<Triple> es;
    es.reserve(v1.size() * v2.size() * v3.size());
    for (int a : v1)
        for (int b : v2)
            for (int c : v3) es.push_back(make_triple(a, b, c));
    return Hypergraph3(n, std::move(es));
}

Hypergraph3 tripartite_seed(int n) {
    if (n < 3) throw std::invalid_argument("tripartite_seed: need n >= 3");
    VertexPartition p = VertexPartition::intervals(n, 3);
    return complete_tripartite3(n, p.parts[0], p.parts[1], p.parts[2]);
}

TripleCliqueEmbedding embed_triple_cliques(int n, const std::vector<int>& v1,
                                           const std::vector<int>& v2,
                                           const std::vector<int>& v3,
                                           const CopyCertificate& k1,
                                           const CopyCertificate& k2,
                                           const CopyCertificate& k3) {
    const std::vector<int>* parts[3] = {&v1, &v2, &v3};
    const CopyCertificate* ks[3] = {&k1, &k2, &k3};
    int r = k1.t();
    if (k2.t() != r || k3.t() != r)
        throw std::invalid_argument("embed_triple_cliques: branch counts differ");
    size_t s = v1.size();
    if (v2.size() != s || v3.size() != s)
        throw std::invalid_argument("embed_triple_cliques: parts must have equal size");
    long need = static_cast<long>(r) * r;
    long free_per_part = static_cast<long>(s) - linear_clique_vertex_count(r, 3);
    if (free_per_part < need)
        throw std::invalid_argument(
            "embed_triple_cliques: infeasible, need s - (r + C(r,2)) >= r^2, have " +
            std::to_string(free_per_part) + " < " + std::to_string(need));

    // Containment checks and per-part free pools.
    std::vector<VBitset> part_mask;
    for (int i = 0; i < 3; ++i) part_mask.push_back(VBitset::of(n, *parts[i]));
    if (part_mask[0].intersects(part_mask[1]) || part_mask[0].intersects(part_mask[2]) ||
        part_mask[1].intersects(part_mask[2]))
        throw std::invalid_argument("embed_triple_cliques: parts overlap");
    std::vector<std::vector<int>> pool(3);
    for (int i = 0; i < 3; ++i) {
        VBitset used(n);
        for (int v : ks[i]->vertices()) {
            if (!part_mask[i].test(v))
                throw std::invalid_argument(
                    "embed_triple_cliques: copy " + std::to_string(i + 1) +
                    " leaves its part");
            used.set(v);
        }
        VBitset free = part_mask[i];
        free.subtract(used);
        pool[i] = free.to_vector();  // ascending
    }

    Hypergraph3 host = complete_tripartite3(n, v1, v2, v3);
    for (int i = 0; i < 3; ++i)
        host = host.union_with(Hypergraph3(n, ks[i]->edges()));

    CopyCertificate big;
    for (int i = 0; i < 3; ++i)
        for (int b : ks[i]->branch) big.branch.push_back(b);
    // Within-part pairs keep their own apexes.
    for (int i = 0; i < 3; ++i)
        for (const auto& [pr, a] : ks[i]->apex)
            big.apex[{i * r + pr.first, i * r + pr.second}] = a;
    // Cross pairs: apexes drawn from the free pool of the third part,
    // row-major in (a,b).
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            int third = 3 - i - j;
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b)
                    big.apex[{i * r + a, j * r + b}] =
                        pool[third][static_cast<size_t>(a) * r + b];
        }

    std::string why;
    if (!verify_copy(host, big, &why))
        throw std::logic_error("embed_triple_cliques: assembled copy fails checks: " + why);
    return TripleCliqueEmbedding{std::move(big), std::move(host)};
}

}  // namespace hrl
