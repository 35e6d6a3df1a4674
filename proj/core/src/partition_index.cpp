#include "hrl/partition_index.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "hrl/parallel.hpp"

namespace hrl {
namespace {

void require_same_base(const PairPartition& b, const VertexPartition& v,
                       const char* who) {
    if (b.base.n != v.n || b.base.parts != v.parts)
        throw std::invalid_argument(std::string(who) +
                                    ": pair partition not built over this vertex partition");
}

struct TriadTally {
    int i, j, k;    // part triple
    int a, b, c;    // cell choices for pairs (i,j), (i,k), (j,k)
    long T = 0;     // triangles of the triad
    long in_h = 0;  // triangles that are edges of H
};

// One pass over all crossing triples, bucketed by (part triple, cell
// triple).  Only triads holding at least one triangle are emitted, in
// canonical (i,j,k,a,b,c) order.
std::vector<TriadTally> triad_tallies(const VertexPartition& v, const PairPartition& b,
                                      const Hypergraph3& h) {
    std::vector<TriadTally> out;
    int t = v.t();
    std::vector<long> hist;  // reused flat histogram, 2 slots per cell triple
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            int pij = b.pair_index(i, j);
            for (int k = j + 1; k < t; ++k) {
                int pik = b.pair_index(i, k), pjk = b.pair_index(j, k);
                long ca = static_cast<long>(b.cells[pij].size());
                long cb = static_cast<long>(b.cells[pik].size());
                long cc = static_cast<long>(b.cells[pjk].size());
                long prod = ca * cb * cc;
                if (prod > (1L << 26))
                    throw std::invalid_argument("triad_tallies: cell family too ragged");
                hist.assign(static_cast<size_t>(2 * prod), 0);
                for (int u : v.parts[i]) {
                    for (int w : v.parts[j]) {
                        long key_uw = static_cast<long>(b.cell_of(u, w)) * cb;
                        for (int x : v.parts[k]) {
                            long key = (key_uw + b.cell_of(u, x)) * cc + b.cell_of(w, x);
                            ++hist[static_cast<size_t>(2 * key)];
                            if (h.has_edge(u, w, x)) ++hist[static_cast<size_t>(2 * key + 1)];
                        }
                    }
                }
                for (long key = 0; key < prod; ++key) {
                    long cnt = hist[static_cast<size_t>(2 * key)];
                    if (cnt == 0) continue;
                    TriadTally tl;
                    tl.i = i;
                    tl.j = j;
                    tl.k = k;
                    tl.a = static_cast<int>(key / (cb * cc));
                    tl.b = static_cast<int>((key / cc) % cb);
                    tl.c = static_cast<int>(key % cc);
                    tl.T = cnt;
                    tl.in_h = hist[static_cast<size_t>(2 * key + 1)];
                    out.push_back(tl);
                }
            }
        }
    }
    return out;
}

Rational index_from_tallies(const std::vector<TriadTally>& tallies, long n) {
    Rational sum;
    for (const auto& tl : tallies) {
        long rest = tl.T - tl.in_h;
        sum += Rational(tl.in_h * tl.in_h + rest * rest, tl.T);
    }
    return sum / Rational(n * n * n);
}

// Elementary symmetric sum of degree 3 over the part sizes: the number of
// crossing triples.
long crossing_triples(const VertexPartition& v) {
    long e1 = 0, e2 = 0, e3 = 0;
    for (const auto& p : v.parts) {
        long s = static_cast<long>(p.size());
        e3 += e2 * s;
        e2 += e1 * s;
        e1 += s;
    }
    return e3;
}

int ceil_sqrt(long x) {
    int s = static_cast<int>(std::floor(std::sqrt(static_cast<double>(x))));
    while (static_cast<long>(s) * s < x) ++s;
    return s;
}

}  // namespace

Rational compute_index(const VertexPartition& v, const PairPartition& b,
                       const Hypergraph3& h) {
    if (v.n <= 0) throw std::invalid_argument("compute_index: empty vertex set");
    if (h.n() != v.n) throw std::invalid_argument("compute_index: vertex count mismatch");
    require_same_base(b, v, "compute_index");
    return index_from_tallies(triad_tallies(v, b, h), v.n);
}

Rational beta_refinement_deficit(const PairPartition& bprime, const PairPartition& b,
                                 const VertexPartition& v) {
    require_same_base(bprime, v, "beta_refinement_deficit");
    require_same_base(b, v, "beta_refinement_deficit");
    long bad = 0;
    for (const auto& cell_list : bprime.cells) {
        for (const auto& cell : cell_list) {
            if (cell.e() == 0) continue;
            const auto& es = cell.edges();
            int home = b.cell_of(es[0].first, es[0].second);
            bool contained = true;
            for (const auto& [u, w] : es) {
                if (b.cell_of(u, w) != home) {
                    contained = false;
                    break;
                }
            }
            if (!contained) bad += cell.e();
        }
    }
    return Rational(bad) / Rational(static_cast<long>(v.n) * v.n);
}

IndexState IndexState::make(VertexPartition v, PairPartition b, Hypergraph3 h) {
    IndexState s;
    s.v = std::move(v);
    s.b = std::move(b);
    s.h = std::move(h);
    if (s.h.n() != s.v.n)
        throw std::invalid_argument("IndexState: vertex count mismatch");
    s.hbar = s.h.complement();
    s.index = compute_index(s.v, s.b, s.h);
    return s;
}

IncrementReport increment_refine(const IndexState& state, double delta3, int r,
                                 long witness_budget, long families_per_triad,
                                 const RngSpec& spec, int threads) {
    const VertexPartition& v = state.v;
    if (delta3 <= 0 || delta3 > 1)
        throw std::invalid_argument("increment_refine: delta3 must lie in (0,1]");
    if (r < 1) throw std::invalid_argument("increment_refine: r must be positive");
    if (witness_budget < 0)
        throw std::invalid_argument("increment_refine: negative witness budget");
    require_same_base(state.b, v, "increment_refine");

    long n = v.n;
    double total_triples = static_cast<double>(n) * (n - 1) * (n - 2) / 6.0;
    if (static_cast<double>(crossing_triples(v)) + 1e-9 <
        (1.0 - delta3 / 2.0) * total_triples)
        throw std::invalid_argument(
            "increment_refine: vertex partition too coarse for this delta3");

    auto tallies = triad_tallies(v, state.b, state.h);

    struct FoundWitness {
        long T = 0;
        std::vector<Graph2> members;
    };
    std::vector<std::optional<FoundWitness>> found(tallies.size());
    std::atomic<long> audited{0};

    parallel_for(static_cast<long>(tallies.size()), threads, [&](long idx) {
        const auto& tl = tallies[static_cast<size_t>(idx)];
        // density 0 or 1 keeps every sub-family at deviation 0; a single
        // triangle forces any admissible family to cover exactly it
        if (tl.T < 2 || tl.in_h == 0 || tl.in_h == tl.T) return;
        ++audited;
        Rng rng(substream(spec, static_cast<uint64_t>(idx)));
        Triad p = triad_of(state.b, tl.i, tl.j, tl.k, tl.a, tl.b, tl.c);
        double dp = static_cast<double>(tl.in_h) / static_cast<double>(tl.T);
        const auto& pe = p.g.edges();
        for (long f = 0; f < families_per_triad; ++f) {
            std::vector<Graph2> members;
            members.reserve(static_cast<size_t>(r));
            std::optional<TriangleSet> uni;
            for (int m = 0; m < r; ++m) {
                std::vector<VPair> keep;
                for (const auto& e : pe)
                    if (rng.bernoulli(0.5)) keep.push_back(e);
                Graph2 q(p.g.n(), std::move(keep));
                TriangleSet ts(p, q);
                if (!uni)
                    uni.emplace(std::move(ts));
                else
                    *uni |= ts;
                members.push_back(std::move(q));
            }
            long cnt = uni->count();
            if (cnt == 0 ||
                static_cast<double>(cnt) + 1e-9 < delta3 * static_cast<double>(tl.T))
                continue;
            long in_u = uni->count_in(state.h);
            double dev = std::abs(static_cast<double>(in_u) / static_cast<double>(cnt) - dp);
            if (dev > delta3 + 1e-9) {
                found[static_cast<size_t>(idx)] = FoundWitness{tl.T, std::move(members)};
                return;
            }
        }
    });

    // consume witnesses in canonical order up to the budget
    std::vector<VBitset> part_bits;
    part_bits.reserve(v.parts.size());
    for (const auto& p : v.parts) {
        VBitset bs(n);
        for (int x : p) bs.set(x);
        part_bits.push_back(std::move(bs));
    }
    std::map<std::pair<int, int>, std::vector<Graph2>> cell_witnesses;
    IncrementReport rep;
    rep.triads_audited = audited.load();
    double irr_mass = 0;
    long found_count = 0;
    for (size_t idx = 0; idx < found.size(); ++idx) {
        if (!found[idx]) continue;
        ++found_count;
        irr_mass += static_cast<double>(found[idx]->T);
        if (rep.witnesses_used == witness_budget) continue;
        ++rep.witnesses_used;
        const auto& tl = tallies[idx];
        int pij = state.b.pair_index(tl.i, tl.j);
        int pik = state.b.pair_index(tl.i, tl.k);
        int pjk = state.b.pair_index(tl.j, tl.k);
        for (const auto& q : found[idx]->members) {
            cell_witnesses[{pij, tl.a}].push_back(
                q.cross_restriction(part_bits[static_cast<size_t>(tl.i)],
                                    part_bits[static_cast<size_t>(tl.j)]));
            cell_witnesses[{pik, tl.b}].push_back(
                q.cross_restriction(part_bits[static_cast<size_t>(tl.i)],
                                    part_bits[static_cast<size_t>(tl.k)]));
            cell_witnesses[{pjk, tl.c}].push_back(
                q.cross_restriction(part_bits[static_cast<size_t>(tl.j)],
                                    part_bits[static_cast<size_t>(tl.k)]));
        }
    }
    rep.budget_exhausted = found_count > rep.witnesses_used;
    rep.irregular_mass =
        irr_mass / (static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n));

    // split each witnessed cell into its edge-membership atoms
    std::vector<std::vector<Graph2>> new_cells(state.b.cells.size());
    for (size_t pi = 0; pi < state.b.cells.size(); ++pi) {
        for (size_t c = 0; c < state.b.cells[pi].size(); ++c) {
            const Graph2& cell = state.b.cells[pi][c];
            auto it = cell_witnesses.find({static_cast<int>(pi), static_cast<int>(c)});
            if (it == cell_witnesses.end() || cell.e() == 0) {
                new_cells[pi].push_back(cell);
                continue;
            }
            const auto& ws = it->second;
            size_t w_used = std::min(ws.size(), static_cast<size_t>(62));
            std::map<uint64_t, std::vector<VPair>> atoms;
            for (const auto& e : cell.edges()) {
                uint64_t mask = 0;
                for (size_t wi = 0; wi < w_used; ++wi)
                    if (ws[wi].has_edge(e.first, e.second)) mask |= uint64_t{1} << wi;
                atoms[mask].push_back(e);
            }
            for (auto& [mask, es] : atoms)
                new_cells[pi].push_back(Graph2(n, std::move(es)));
        }
    }

    long old_total = state.b.total_cells();
    rep.cell_bound_exponent = static_cast<long>(r) * v.t() * state.b.max_cells_per_pair();
    rep.refined = PairPartition(v, std::move(new_cells));
    long double bound = static_cast<long double>(old_total) *
                        std::pow(2.0L, static_cast<long double>(rep.cell_bound_exponent));
    if (static_cast<long double>(rep.refined.total_cells()) > bound)
        throw std::logic_error("increment_refine: cell growth exceeded its bound");

    rep.index_before = compute_index(v, state.b, state.h);
    if (rep.index_before != state.index)
        throw std::logic_error("increment_refine: stale index in state");
    rep.index_after = compute_index(v, rep.refined, state.h);
    rep.gain = rep.index_after - rep.index_before;
    if (rep.gain.sign() < 0)
        throw std::logic_error("increment_refine: refinement decreased the index");
    return rep;
}

GateReport approximation_gate(const VertexPartition& v, const PairPartition& b,
                              double delta2, long samples, const RngSpec& spec) {
    require_same_base(b, v, "approximation_gate");
    GateReport rep;
    std::vector<std::vector<Graph2>> out(b.cells.size());
    RngSpec audit_space = substream(spec, 1);
    RngSpec shuffle_space = substream(spec, 2);
    int t = v.t();
    long stream = 0;
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            int pi = b.pair_index(i, j);
            const auto& lst = b.cells[pi];
            std::vector<size_t> bad;
            for (size_t c = 0; c < lst.size(); ++c, ++stream) {
                ++rep.cells_tested;
                BipartitePair bp = BipartitePair::from(lst[c], v.parts[i], v.parts[j]);
                auto verdict = pair_regularity_audit(
                    bp, delta2, samples, substream(audit_space, static_cast<uint64_t>(stream)));
                if (!verdict.regular) bad.push_back(c);
            }
            rep.cells_failed += static_cast<long>(bad.size());
            out[pi] = lst;
            if (bad.size() < 2) continue;  // a lone cell re-fills itself
            std::vector<VPair> pool;
            for (size_t c : bad)
                pool.insert(pool.end(), lst[c].edges().begin(), lst[c].edges().end());
            Rng rng(substream(shuffle_space, static_cast<uint64_t>(pi)));
            rng.shuffle(pool);
            size_t at = 0;
            for (size_t c : bad) {
                size_t sz = static_cast<size_t>(lst[c].e());
                std::vector<VPair> es(pool.begin() + static_cast<long>(at),
                                      pool.begin() + static_cast<long>(at + sz));
                at += sz;
                Graph2 fresh(v.n, std::move(es));
                const auto& oe = lst[c].edges();
                const auto& ne = fresh.edges();
                std::vector<VPair> common;
                std::set_intersection(oe.begin(), oe.end(), ne.begin(), ne.end(),
                                      std::back_inserter(common));
                rep.sym_diff_edges += 2 * (static_cast<long>(sz) -
                                           static_cast<long>(common.size()));
                out[pi][c] = std::move(fresh);
            }
        }
    }
    rep.slack = Rational(rep.sym_diff_edges) / Rational(static_cast<long>(v.n) * v.n);
    rep.adjusted = PairPartition(v, std::move(out));
    return rep;
}

double slice_zeta(int ell_target) {
    double L = static_cast<double>(ell_target) * ell_target;
    return 1.0 / (2.0 * L * (L + 1.0));
}

PairPartition slice_partition(const PairPartition& b, int ell_target, double zeta,
                              const RngSpec& spec) {
    if (ell_target < 1)
        throw std::invalid_argument("slice_partition: ell_target must be >= 1");
    long L = static_cast<long>(ell_target) * ell_target;
    double inv = 1.0 / static_cast<double>(L) - zeta;
    if (!(zeta >= 0) || inv <= 0 ||
        std::floor(1.0 / inv) != static_cast<double>(L))
        throw std::invalid_argument("slice_partition: zeta incompatible with ell_target");
    const VertexPartition& v = b.base;
    int t = v.t();
    std::vector<std::vector<Graph2>> out(b.cells.size());
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            int pi = b.pair_index(i, j);
            Rng rng(substream(spec, static_cast<uint64_t>(pi)));
            long area = static_cast<long>(v.parts[i].size()) *
                        static_cast<long>(v.parts[j].size());
            std::vector<std::vector<VPair>> classes;
            std::vector<VPair> pool;
            long ktotal = 0;
            for (const Graph2& cell : b.cells[pi]) {
                long e = cell.e();
                long k = (e * L) / area;  // floor of density * L
                if (k < 1) {
                    pool.insert(pool.end(), cell.edges().begin(), cell.edges().end());
                    continue;
                }
                // residue probability (d - k/L)/d, class probability 1/(L d)
                double p0 = static_cast<double>(e * L - k * area) /
                            static_cast<double>(e * L);
                double pc = static_cast<double>(area) / static_cast<double>(L * e);
                size_t base_idx = classes.size();
                classes.resize(base_idx + static_cast<size_t>(k));
                ktotal += k;
                for (const auto& ed : cell.edges()) {
                    double u = rng.real01();
                    if (u < p0) {
                        pool.push_back(ed);
                        continue;
                    }
                    long cls = static_cast<long>((u - p0) / pc);
                    if (cls >= k) cls = k - 1;  // guards float rounding at u -> 1
                    classes[base_idx + static_cast<size_t>(cls)].push_back(ed);
                }
            }
            if (ktotal > L) throw std::logic_error("slice_partition: class overflow");
            long rem = L - ktotal;
            if (rem == 0 && !pool.empty())
                throw std::logic_error("slice_partition: residue with no class left");
            std::vector<std::vector<VPair>> rest(static_cast<size_t>(rem));
            for (const auto& ed : pool)
                rest[static_cast<size_t>(rng.below(static_cast<uint64_t>(rem)))].push_back(ed);
            auto& cells_out = out[pi];
            cells_out.reserve(static_cast<size_t>(L));
            for (auto& es : classes) cells_out.push_back(Graph2(v.n, std::move(es)));
            for (auto& es : rest) cells_out.push_back(Graph2(v.n, std::move(es)));
        }
    }
    return PairPartition(v, std::move(out));
}

PartitionWeakReport partition_weak_regularity(const Hypergraph3& h,
                                              const VertexPartition& v, double delta,
                                              long samples_per_triple,
                                              const RngSpec& spec) {
    if (delta <= 0 || delta > 1)
        throw std::invalid_argument("partition_weak_regularity: delta must lie in (0,1]");
    if (h.n() != v.n)
        throw std::invalid_argument("partition_weak_regularity: vertex count mismatch");
    PartitionWeakReport rep;
    int t = v.t();
    long rank = 0;
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            for (int k = j + 1; k < t; ++k, ++rank) {
                ++rep.triples_tested;
                auto verdict = weak_regularity_audit(
                    h, v.parts[i], v.parts[j], v.parts[k], delta, samples_per_triple,
                    substream(spec, static_cast<uint64_t>(rank)));
                if (!verdict.regular) {
                    ++rep.irregular;
                    rep.irregular_triples.push_back({i, j, k});
                    rep.witnesses.push_back(verdict.witness.value_or(DeviationWitness{}));
                }
            }
        }
    }
    rep.irregular_fraction =
        rep.triples_tested
            ? static_cast<double>(rep.irregular) / static_cast<double>(rep.triples_tested)
            : 0.0;
    rep.pass = rep.irregular_fraction <= delta + 1e-12;
    return rep;
}

namespace {

// Splits every part of size >= 2 into two near-equal halves, listing marked
// vertices first so the cut separates them when possible.  Keeps part order
// (children adjacent), so pair orientation downstream stays stable.
VertexPartition halve_parts(const VertexPartition& cur, const std::vector<char>& mark) {
    std::vector<std::vector<int>> parts;
    parts.reserve(cur.parts.size() * 2);
    for (const auto& vs : cur.parts) {
        if (vs.size() < 2) {
            parts.push_back(vs);
            continue;
        }
        std::vector<int> order;
        order.reserve(vs.size());
        for (int x : vs)
            if (!mark.empty() && mark[static_cast<size_t>(x)]) order.push_back(x);
        for (int x : vs)
            if (mark.empty() || !mark[static_cast<size_t>(x)]) order.push_back(x);
        size_t half = (vs.size() + 1) / 2;
        parts.emplace_back(order.begin(), order.begin() + static_cast<long>(half));
        parts.emplace_back(order.begin() + static_cast<long>(half), order.end());
    }
    return VertexPartition(cur.n, std::move(parts));
}

}  // namespace

WeakRegularizeResult weak_regularize(const Hypergraph3& h, const VertexPartition& v0,
                                     double delta, int t_min, int max_t, int max_rounds,
                                     long samples_per_triple, const RngSpec& spec) {
    if (h.n() != v0.n)
        throw std::invalid_argument("weak_regularize: vertex count mismatch");
    if (max_t > 0 && t_min > max_t)
        throw std::invalid_argument("weak_regularize: t_min above max_t");
    WeakRegularizeResult res;
    res.partition = v0;
    while (res.partition.t() < t_min) {
        VertexPartition next = halve_parts(res.partition, {});
        if (next.t() == res.partition.t()) break;  // all singletons already
        res.partition = std::move(next);
    }
    for (;;) {
        res.report = partition_weak_regularity(
            h, res.partition, delta, samples_per_triple,
            substream(spec, static_cast<uint64_t>(res.rounds)));
        if (res.report.pass) {
            res.passed = true;
            return res;
        }
        if (res.rounds >= max_rounds) return res;
        if (max_t > 0 && res.partition.t() * 2 > max_t) return res;
        std::vector<char> mark(static_cast<size_t>(res.partition.n), 0);
        for (const auto& w : res.report.witnesses)
            for (const auto& sub : w.subsets)
                for (int x : sub) mark[static_cast<size_t>(x)] = 1;
        VertexPartition next = halve_parts(res.partition, mark);
        if (next.t() == res.partition.t()) return res;  // stuck at singletons
        res.partition = std::move(next);
        ++res.rounds;
    }
}

namespace {

// Carries the cells of `b` over to a refinement of its vertex partition:
// cells restrict to sub-pairs of cross pairs, and pairs that used to live
// inside one part get a fresh uniform ell^2-slicing.
PairPartition rebuild_on(const VertexPartition& new_v, const VertexPartition& old_v,
                         const PairPartition& b, int ell, const RngSpec& spec) {
    long L = static_cast<long>(ell) * ell;
    int t = new_v.t();
    std::vector<VBitset> bits;
    bits.reserve(new_v.parts.size());
    for (const auto& p : new_v.parts) {
        VBitset bs(new_v.n);
        for (int x : p) bs.set(x);
        bits.push_back(std::move(bs));
    }
    std::vector<std::vector<Graph2>> cells(static_cast<size_t>(t) * (t - 1) / 2);
    long pr = 0;
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j, ++pr) {
            int oi = old_v.part_of[new_v.parts[static_cast<size_t>(i)][0]];
            int oj = old_v.part_of[new_v.parts[static_cast<size_t>(j)][0]];
            auto& lst = cells[static_cast<size_t>(pr)];
            if (oi != oj) {
                for (const Graph2& cell : b.cells[b.pair_index(oi, oj)])
                    lst.push_back(cell.cross_restriction(bits[static_cast<size_t>(i)],
                                                         bits[static_cast<size_t>(j)]));
            } else {
                Rng rng(substream(spec, static_cast<uint64_t>(pr)));
                std::vector<std::vector<VPair>> classes(static_cast<size_t>(L));
                for (int u : new_v.parts[static_cast<size_t>(i)])
                    for (int w : new_v.parts[static_cast<size_t>(j)])
                        classes[static_cast<size_t>(rng.below(static_cast<uint64_t>(L)))]
                            .push_back(make_pair(u, w));
                for (auto& es : classes) lst.push_back(Graph2(new_v.n, std::move(es)));
            }
        }
    }
    return PairPartition(new_v, std::move(cells));
}

struct CellAuditOutcome {
    long tested = 0;
    long failed = 0;
    bool pass = false;
};

CellAuditOutcome audit_cells(const VertexPartition& v, const PairPartition& b,
                             double delta2, long samples, const RngSpec& spec) {
    CellAuditOutcome res;
    int t = v.t();
    long stream = 0;
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            for (const Graph2& cell : b.cells[static_cast<size_t>(b.pair_index(i, j))]) {
                ++res.tested;
                BipartitePair bp = BipartitePair::from(cell, v.parts[i], v.parts[j]);
                auto verdict = pair_regularity_audit(
                    bp, delta2, samples, substream(spec, static_cast<uint64_t>(stream++)));
                if (!verdict.regular) ++res.failed;
            }
        }
    }
    res.pass = res.tested == 0 ||
               static_cast<double>(res.failed) <=
                   delta2 * static_cast<double>(res.tested) + 1e-12;
    return res;
}

}  // namespace

PipelineResult ghrl_pipeline(const Hypergraph3& h, double delta3,
                             const std::function<double(int)>& delta2,
                             const std::function<int(int)>& r_of_ell, int ell0, int t0,
                             const PipelineCaps& caps, const RngSpec& spec) {
    if (delta3 <= 0 || delta3 > 1)
        throw std::invalid_argument("ghrl_pipeline: delta3 must lie in (0,1]");
    if (ell0 < 1 || ell0 > caps.max_ell)
        throw std::invalid_argument("ghrl_pipeline: ell0 must lie in [1, max_ell]");
    if (t0 < 1 || t0 > h.n())
        throw std::invalid_argument("ghrl_pipeline: t0 must lie in [1, n]");
    long hard_cap = static_cast<long>(std::ceil(8.0 / std::pow(delta3, 4)));
    long cap = caps.max_iterations > 0 ? std::min<long>(caps.max_iterations, hard_cap)
                                       : hard_cap;

    PipelineResult res;
    res.v = VertexPartition::intervals(h.n(), t0);
    int ell = ell0;
    res.b = slice_partition(PairPartition::complete_cells(res.v, h.n()), ell,
                            slice_zeta(ell), substream(spec, 1u << 20));
    res.trace.initial_index = compute_index(res.v, res.b, h);

    for (long iter = 0;; ++iter) {
        RngSpec it_spec = substream(spec, static_cast<uint64_t>(iter));
        double d2 = delta2(ell);
        bool r1 = res.v.is_equitable() && res.b.is_equitable(ell * ell);
        auto cell_audit = audit_cells(res.v, res.b, d2, caps.audit_samples,
                                      substream(it_spec, 1));
        auto weak_rep = partition_weak_regularity(h, res.v, d2, caps.audit_samples,
                                                  substream(it_spec, 2));
        IndexState state = IndexState::make(res.v, res.b, h);
        auto inc = increment_refine(state, delta3, r_of_ell(ell), caps.witness_budget,
                                    caps.families_per_triad, substream(it_spec, 3),
                                    caps.threads);
        bool r4 = inc.witnesses_used == 0 && !inc.budget_exhausted;
        res.trace.equitable_pass = r1;
        res.trace.cell_pass = cell_audit.pass;
        res.trace.weak_pass = weak_rep.pass;
        res.trace.strong_pass = r4;
        if (r1 && cell_audit.pass && weak_rep.pass && r4) {
            res.trace.reason = StopReason::regular;
            break;
        }
        if (iter >= cap) {
            res.trace.reason =
                inc.budget_exhausted ? StopReason::budget : StopReason::iteration_cap;
            break;
        }

        IterationRecord rec;
        rec.index_before = state.index;
        rec.index_after_increment = inc.index_after;
        rec.irregular_mass = inc.irregular_mass;
        rec.witnesses_used = inc.witnesses_used;
        rec.witness_budget_hit = inc.budget_exhausted;

        auto gate = approximation_gate(res.v, inc.refined, d2, caps.audit_samples,
                                       substream(it_spec, 4));
        rec.slack = gate.slack;
        rec.index_after_gate = compute_index(res.v, gate.adjusted, h);

        int ell_next = std::min(
            caps.max_ell,
            std::max(ell, ceil_sqrt(gate.adjusted.max_cells_per_pair())));
        PairPartition sliced = slice_partition(gate.adjusted, ell_next,
                                               slice_zeta(ell_next), substream(it_spec, 5));
        rec.beta = beta_refinement_deficit(sliced, gate.adjusted, res.v);
        rec.index_after_slice = compute_index(res.v, sliced, h);

        auto wr = weak_regularize(h, res.v, delta2(ell_next), res.v.t(), caps.max_t,
                                  caps.weak_rounds, caps.audit_samples,
                                  substream(it_spec, 6));
        if (wr.partition.t() != res.v.t()) {
            res.b = rebuild_on(wr.partition, res.v, sliced, ell_next,
                               substream(it_spec, 7));
            res.v = std::move(wr.partition);
        } else {
            res.b = std::move(sliced);
        }
        ell = ell_next;
        rec.index_after = compute_index(res.v, res.b, h);
        res.trace.iterations.push_back(std::move(rec));
    }
    res.trace.final_index = compute_index(res.v, res.b, h);
    res.trace.ell_final = ell;
    return res;
}

PipelineResult ghrl_pipeline(const Hypergraph3& h, double delta3, int ell0, int t0,
                             const PipelineCaps& caps, const RngSpec& spec) {
    return ghrl_pipeline(
        h, delta3,
        [](int ell) {
            double l = static_cast<double>(ell);
            return std::min(0.1, 1.0 / (l * l * l));
        },
        [](int) { return 2; }, ell0, t0, caps, spec);
}

}  // namespace hrl
