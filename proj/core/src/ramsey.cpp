#include "hrl/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hrl/random.hpp"

namespace hrl {

namespace {

// Order of the canonical linear clique equal to `pattern`, or -1.
int clique_order_of(const Hypergraph3& pattern) {
    long e = pattern.e();
    for (int t = 2; t <= 64; ++t) {
        long ce = linear_clique_edge_count(t);
        if (ce == e) return pattern == linear_clique3(t) ? t : -1;
        if (ce > e) return -1;
    }
    return -1;
}

}  // namespace

CopyList pattern_copies(const Hypergraph3& host, const Hypergraph3& pattern,
                        long budget) {
    int t = clique_order_of(pattern);
    if (t >= 2) return all_linear_clique_copies(host, t, budget);
    return enumerate_pattern_copies(host, pattern, budget);
}

namespace {

std::vector<int> copy_vertex_set(const Hypergraph3& host, const std::vector<long>& ranks) {
    std::set<int> vs;
    for (long r : ranks)
        for (int v : host.edges()[static_cast<size_t>(r)]) vs.insert(v);
    return std::vector<int>(vs.begin(), vs.end());
}

std::set<std::vector<int>> normalize_family(const std::vector<std::vector<int>>& fam) {
    std::set<std::vector<int>> out;
    for (auto s : fam) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        out.insert(std::move(s));
    }
    return out;
}

// Copy lists rewritten in assignment-position space, plus incidence lists.
struct ArrowEngine {
    int e = 0;
    std::vector<std::vector<int>> c1, c2;      // copies as sorted position lists
    std::vector<std::vector<int>> inc1, inc2;  // position -> copy ids
    std::vector<int> sz1, sz2;
    std::vector<int> assigned1, blue1;  // per f1 copy
    std::vector<int> assigned2, red2;   // per f2 copy
    std::vector<int> col;               // per position: -1 unset, 0 red, 1 blue
    long explored = 0;
    long budget = 0;
    bool out_of_budget = false;
    bool pin_first_red = false;
    std::vector<int> good;  // colours by position once found

    // Applies one colour; false when some copy just went monochromatic.
    bool apply(int pos, int c) {
        col[pos] = c;
        bool ok = true;
        if (c == 0) {
            for (int id : inc1[pos])
                if (++assigned1[id] == sz1[id] && blue1[id] == 0) ok = false;
            for (int id : inc2[pos]) {
                ++assigned2[id];
                ++red2[id];
            }
        } else {
            for (int id : inc1[pos]) {
                ++assigned1[id];
                ++blue1[id];
            }
            for (int id : inc2[pos])
                if (++assigned2[id] == sz2[id] && red2[id] == 0) ok = false;
        }
        return ok;
    }

    void undo(int pos, int c) {
        col[pos] = -1;
        if (c == 0) {
            for (int id : inc1[pos]) --assigned1[id];
            for (int id : inc2[pos]) {
                --assigned2[id];
                --red2[id];
            }
        } else {
            for (int id : inc1[pos]) {
                --assigned1[id];
                --blue1[id];
            }
            for (int id : inc2[pos]) --assigned2[id];
        }
    }

    bool dfs(int pos) {
        if (pos == e) {
            good.assign(col.begin(), col.end());
            return true;
        }
        for (int c = 0; c < 2; ++c) {
            if (pos == 0 && pin_first_red && c == 1) continue;
            if (explored >= budget) {
                out_of_budget = true;
                return false;
            }
            ++explored;
            bool ok = apply(pos, c);
            if (ok && dfs(pos + 1)) return true;
            undo(pos, c);
            if (out_of_budget) return false;
        }
        return false;
    }
};

ArrowVerdict arrow_core(const Hypergraph3& host, const Hypergraph3& f1,
                        const Hypergraph3& f2,
                        const std::vector<std::vector<int>>& excl1,
                        const std::vector<std::vector<int>>& excl2, long budget) {
    if (f1.e() == 0 || f2.e() == 0)
        throw std::invalid_argument("arrow: patterns need at least one edge");
    if (budget <= 0) throw std::invalid_argument("arrow: budget must be positive");

    CopyList l1 = pattern_copies(host, f1);
    CopyList l2 = f2 == f1 ? l1 : pattern_copies(host, f2);

    ArrowVerdict v;
    if (!l1.complete || !l2.complete) {
        v.outcome = ArrowOutcome::inconclusive;
        return v;
    }

    auto fam1 = normalize_family(excl1);
    auto fam2 = normalize_family(excl2);
    auto keep = [&host](const CopyList& l, const std::set<std::vector<int>>& fam) {
        std::vector<std::vector<long>> out;
        for (const auto& c : l.edge_sets)
            if (fam.empty() || !fam.count(copy_vertex_set(host, c))) out.push_back(c);
        return out;
    };
    std::vector<std::vector<long>> copies1 = keep(l1, fam1);
    std::vector<std::vector<long>> copies2 = keep(l2, fam2);
    v.copies_f1 = static_cast<long>(copies1.size());
    v.copies_f2 = static_cast<long>(copies2.size());

    long e = host.e();
    // Edge order: descending total copy membership, ties by rank.
    std::vector<long> weight(static_cast<size_t>(e), 0);
    for (const auto& c : copies1)
        for (long r : c) ++weight[static_cast<size_t>(r)];
    for (const auto& c : copies2)
        for (long r : c) ++weight[static_cast<size_t>(r)];
    std::vector<long> order(static_cast<size_t>(e));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](long a, long b) { return weight[a] > weight[b]; });
    std::vector<int> pos_of(static_cast<size_t>(e));
    for (long i = 0; i < e; ++i) pos_of[static_cast<size_t>(order[i])] = static_cast<int>(i);

    ArrowEngine eng;
    eng.e = static_cast<int>(e);
    eng.budget = budget;
    eng.pin_first_red = e > 0 && f1 == f2 && fam1 == fam2;
    eng.col.assign(static_cast<size_t>(e), -1);
    eng.inc1.resize(static_cast<size_t>(e));
    eng.inc2.resize(static_cast<size_t>(e));
    auto load = [&](const std::vector<std::vector<long>>& copies,
                    std::vector<std::vector<int>>& cs, std::vector<std::vector<int>>& inc,
                    std::vector<int>& sz) {
        for (const auto& c : copies) {
            std::vector<int> ps;
            ps.reserve(c.size());
            for (long r : c) ps.push_back(pos_of[static_cast<size_t>(r)]);
            std::sort(ps.begin(), ps.end());
            int id = static_cast<int>(cs.size());
            for (int p : ps) inc[static_cast<size_t>(p)].push_back(id);
            sz.push_back(static_cast<int>(ps.size()));
            cs.push_back(std::move(ps));
        }
    };
    load(copies1, eng.c1, eng.inc1, eng.sz1);
    load(copies2, eng.c2, eng.inc2, eng.sz2);
    eng.assigned1.assign(eng.c1.size(), 0);
    eng.blue1.assign(eng.c1.size(), 0);
    eng.assigned2.assign(eng.c2.size(), 0);
    eng.red2.assign(eng.c2.size(), 0);

    bool found = eng.dfs(0);
    v.explored = eng.explored;
    if (found) {
        v.outcome = ArrowOutcome::colorable;
        std::vector<Colour> by_rank(static_cast<size_t>(e), Colour::red);
        for (long r = 0; r < e; ++r)
            by_rank[static_cast<size_t>(r)] =
                eng.good[static_cast<size_t>(pos_of[static_cast<size_t>(r)])] == 0
                    ? Colour::red
                    : Colour::blue;
        v.good_coloring = std::move(by_rank);
    } else if (eng.out_of_budget) {
        v.outcome = ArrowOutcome::inconclusive;
    } else {
        v.outcome = ArrowOutcome::arrows;
        v.arrows = true;
    }
    return v;
}

}  // namespace

ArrowVerdict decide_arrow(const Hypergraph3& host, const Hypergraph3& f1,
                          const Hypergraph3& f2, long budget) {
    return arrow_core(host, f1, f2, {}, {}, budget);
}

ArrowVerdict family_ramsey_audit(const Hypergraph3& host, const Hypergraph3& f1,
                                 const Hypergraph3& f2,
                                 const std::vector<std::vector<int>>& excl1,
                                 const std::vector<std::vector<int>>& excl2, long budget) {
    return arrow_core(host, f1, f2, excl1, excl2, budget);
}

bool colouring_avoids_mono(const Hypergraph3& host, const Hypergraph3& f1,
                           const Hypergraph3& f2, const std::vector<Colour>& col) {
    if (static_cast<long>(col.size()) != host.e())
        throw std::invalid_argument("colouring_avoids_mono: colour count != edge count");
    auto mono_free = [&](const CopyList& l, Colour bad) {
        for (const auto& c : l.edge_sets) {
            bool all = true;
            for (long r : c)
                if (col[static_cast<size_t>(r)] != bad) {
                    all = false;
                    break;
                }
            if (all) return false;
        }
        return true;
    };
    CopyList l1 = pattern_copies(host, f1);
    CopyList l2 = f2 == f1 ? l1 : pattern_copies(host, f2);
    if (!l1.complete || !l2.complete)
        throw std::runtime_error("colouring_avoids_mono: copy enumeration tripped its budget");
    return mono_free(l1, Colour::red) && mono_free(l2, Colour::blue);
}

SubsetRamseyReport subset_ramsey_audit(const Hypergraph3& host, const Hypergraph3& f1,
                                       const Hypergraph3& f2, double mu, long samples,
                                       const RngSpec& spec, long budget_per_subset) {
    if (!(mu > 0.0) || mu > 1.0)
        throw std::invalid_argument("subset_ramsey_audit: mu must lie in (0,1]");
    int n = host.n();
    SubsetRamseyReport rep;
    rep.threshold = static_cast<long>(std::ceil(mu * n - 1e-12));
    if (rep.threshold < 1) rep.threshold = 1;
    bool saw_inconclusive = false;

    auto decide_subset = [&](const std::vector<int>& u) -> bool {
        // true = keep scanning; false = stop (failure recorded)
        ArrowVerdict v = decide_arrow(host.induced(u), f1, f2, budget_per_subset);
        ++rep.subsets_tested;
        if (v.outcome == ArrowOutcome::colorable) {
            rep.outcome = ArrowOutcome::colorable;
            rep.witness = u;
            return false;
        }
        if (v.outcome == ArrowOutcome::inconclusive) saw_inconclusive = true;
        return true;
    };

    if (n <= 14) {
        rep.exhaustive = true;
        for (int s = n; s >= rep.threshold; --s) {
            // s-subsets in lexicographic order
            std::vector<int> c(static_cast<size_t>(s));
            std::iota(c.begin(), c.end(), 0);
            bool more = s <= n;
            while (more) {
                if (!decide_subset(c)) return rep;
                int i = s - 1;
                while (i >= 0 && c[static_cast<size_t>(i)] == n - s + i) --i;
                if (i < 0) break;
                ++c[static_cast<size_t>(i)];
                for (int j = i + 1; j < s; ++j)
                    c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            }
            if (s == 0) break;
        }
    } else {
        for (long i = 0; i < samples; ++i) {
            Rng rng(substream(spec, static_cast<uint64_t>(i)));
            int span = n - static_cast<int>(rep.threshold) + 1;
            int s = static_cast<int>(rep.threshold) + rng.below_int(span);
            std::vector<int> pool(static_cast<size_t>(n));
            std::iota(pool.begin(), pool.end(), 0);
            rng.shuffle(pool);
            std::vector<int> u(pool.begin(), pool.begin() + s);
            std::sort(u.begin(), u.end());
            if (!decide_subset(u)) return rep;
        }
    }
    if (saw_inconclusive) {
        rep.outcome = ArrowOutcome::inconclusive;
    } else {
        rep.outcome = ArrowOutcome::arrows;
        rep.pass = true;
    }
    return rep;
}

std::vector<int> support_filter(const BipartitePair& pair, const Rational& d, long k) {
    if (d.sign() < 0) throw std::invalid_argument("support_filter: d must be nonnegative");
    if (k < 0) throw std::invalid_argument("support_filter: k must be nonnegative");
    long na = static_cast<long>(pair.xs.size());
    long nb = static_cast<long>(pair.ys.size());
    if (Rational(pair.e()) < d * Rational(na * nb))
        throw std::invalid_argument("support_filter: edge mass below d|A||B|");
    if (Rational(2 * k) > d * Rational(nb))
        throw std::invalid_argument("support_filter: k exceeds d|B|/2");
    std::vector<int> out;
    for (int v : pair.xs)
        if (pair.g.deg(v) >= k) out.push_back(v);
    // Counting bound: vertices below k carry < k|A| edges, so the survivors
    // carry > d|A||B|/2 and number > d|A|/2.
    if (Rational(2 * static_cast<long>(out.size())) < d * Rational(na))
        throw std::logic_error("support_filter: postcondition |S| >= d|A|/2 failed");
    return out;
}

StarFamilyReport star_supersaturation(const BipartitePair& pair, int m) {
    if (m < 1) throw std::invalid_argument("star_supersaturation: m must be positive");
    StarFamilyReport rep;
    std::vector<int> centers_sorted = pair.xs;
    std::sort(centers_sorted.begin(), centers_sorted.end());
    for (int v : centers_sorted) rep.copy_count = rep.copy_count + binomial(pair.g.deg(v), m);
    VBitset used(pair.g.n());
    for (int v : centers_sorted) {
        if (used.test(v)) continue;
        std::vector<int> leaves;
        pair.g.nbrs(v).for_each([&](int w) {
            if (static_cast<int>(leaves.size()) < m && !used.test(w)) leaves.push_back(w);
        });
        if (static_cast<int>(leaves.size()) < m) continue;
        used.set(v);
        for (int w : leaves) used.set(w);
        rep.centers.push_back(v);
        rep.disjoint_stars.emplace_back(v, std::move(leaves));
    }
    return rep;
}

namespace {

Graph2 joint_coloured_link(const Coloring2& psi, const std::vector<int>& vs,
                           const Graph2& carrier, Colour c) {
    Graph2 acc = carrier;
    for (int v : vs) acc = acc.intersect_with(coloured_link(psi, v, carrier, c));
    return acc;
}

std::optional<std::vector<int>> try_support(const BipartitePair& pair, long k,
                                            std::string* why) {
    long na = static_cast<long>(pair.xs.size());
    long nb = static_cast<long>(pair.ys.size());
    if (na == 0 || nb == 0) {
        *why = "empty side";
        return std::nullopt;
    }
    Rational d{pair.e(), na * nb};
    try {
        return support_filter(pair, d, k);
    } catch (const std::invalid_argument& ex) {
        *why = ex.what();
        return std::nullopt;
    }
}

}  // namespace

FinderDiagnostics constructive_mono_finder(const Hypergraph3& h, const Hypergraph3& r,
                                           const Triad& p, const Coloring2& psi, int t,
                                           const FinderParams& params) {
    if (t < 4 || t % 2 != 0)
        throw std::invalid_argument("constructive_mono_finder: t must be even and >= 4");
    const Hypergraph3& host = psi.host();
    if (!(host == h.union_with(r)))
        throw std::invalid_argument("constructive_mono_finder: psi must colour h union r");
    int n = host.n();
    VBitset xb = VBitset::of(n, p.x), yb = VBitset::of(n, p.y), zb = VBitset::of(n, p.z);
    auto crossing = [&](const Triple& e) {
        int cx = xb.test(e[0]) + xb.test(e[1]) + xb.test(e[2]);
        int cy = yb.test(e[0]) + yb.test(e[1]) + yb.test(e[2]);
        int cz = zb.test(e[0]) + zb.test(e[1]) + zb.test(e[2]);
        return cx == 1 && cy == 1 && cz == 1;
    };
    for (const Triple& e : r.edges())
        if (crossing(e))
            throw std::invalid_argument(
                "constructive_mono_finder: r edges must not cross the triad parts");
    for (const Triple& e : h.edges())
        if (!crossing(e))
            throw std::invalid_argument(
                "constructive_mono_finder: h must be tripartite over the triad parts");

    FinderDiagnostics diag;
    int th = t / 2;
    long vhalf = th + static_cast<long>(th) * (th - 1) / 2;  // vertices of the half clique
    long area = static_cast<long>(p.y.size()) * static_cast<long>(p.z.size());
    Rational band = rat_pow(params.d2, static_cast<unsigned>(2 * vhalf + 1));
    diag.guard_threshold =
        rat_pow(params.d3, static_cast<unsigned>(vhalf)) * band * Rational(area) / Rational(2);
    diag.family_threshold =
        (rat_pow(params.d3, static_cast<unsigned>(vhalf)) - params.eps) * band * Rational(area);

    diag.stage = FinderStage::majority;
    MajorityReport mr = majority_colour(psi, h.edges());
    diag.majority_red = mr.red_majority;
    diag.majority_blue = mr.blue_majority;

    Graph2 carrier_yz = p.g.cross_restriction(yb, zb);
    auto is_red = [&psi](const Triple& e) { return psi.at(e) == Colour::red; };
    auto is_blue = [&psi](const Triple& e) { return psi.at(e) == Colour::blue; };

    if (mr.blue_majority) {
        diag.stage = FinderStage::link_guard;
        int violator = -1;
        Graph2 viol_red;
        for (int v : p.x) {
            auto links = red_blue_links(psi, v, carrier_yz);
            if (Rational(links.second.e()) < diag.guard_threshold) {
                violator = v;
                viol_red = links.first;
                break;
            }
        }
        if (violator >= 0) {
            // Constructive branch: the violator's link is red-heavy (or thin).
            diag.stage = FinderStage::constructive;
            diag.guard_violator = violator;
            if (viol_red.e() == 0) {
                diag.note = "guard violator has an empty red link on the carrier";
                return diag;
            }
            int u = -1;
            long best = -1;
            for (int z : p.z)
                if (viol_red.deg(z) > best) {
                    best = viol_red.deg(z);
                    u = z;
                }
            diag.opposite_pick = u;

            std::string why;
            BipartitePair pv = BipartitePair::from(viol_red, p.z, p.y);
            auto av = try_support(pv, t, &why);
            if (!av) {
                diag.note = "Z-side support refused: " + why;
                return diag;
            }
            diag.a_v = *av;

            Graph2 carrier_xy = p.g.cross_restriction(xb, yb);
            Graph2 pick_red = red_blue_links(psi, u, carrier_xy).first;
            BipartitePair pu = BipartitePair::from(pick_red, p.x, p.y);
            auto au = try_support(pu, t, &why);
            if (!au) {
                diag.note = "X-side support refused: " + why;
                return diag;
            }
            diag.a_u = *au;

            std::vector<Triple> inner;
            for (int a : *au)
                for (int y : p.y)
                    for (int z : *av)
                        if (h.has_edge(a, y, z)) inner.push_back(make_triple(a, y, z));
            diag.inner_edges = static_cast<long>(inner.size());
            if (inner.empty()) {
                diag.note = "no host edges between the two supports";
                return diag;
            }
            MajorityReport imr = majority_colour(psi, inner);

            if (imr.red_majority) {
                // Red K_{t-1} with branch in the X-side support, then extend
                // through the pick; each branch vertex has >= t red Y-partners.
                VBitset au_set = VBitset::of(n, *au);
                CliqueQuery q;
                q.t = t - 1;
                q.budget = params.budget;
                q.allowed = xb;
                q.edge_ok = [&](const Triple& e) { return r.has_edge(e) && is_red(e); };
                q.accept = [&](const CopyCertificate& c) {
                    for (int b : c.branch)
                        if (!au_set.test(b)) return false;
                    return true;
                };
                CliqueSearch s = find_linear_clique(r, q);
                if (s.outcome == SearchOutcome::found) {
                    CopyCertificate full = *s.copy;
                    int ui = full.t();
                    VBitset taken(n);
                    for (int v : full.vertices()) taken.set(v);
                    taken.set(u);
                    bool ok = true;
                    for (int i = 0; i < full.t() && ok; ++i) {
                        int b = full.branch[static_cast<size_t>(i)];
                        int apex = -1;
                        pick_red.nbrs(b).for_each([&](int y) {
                            if (apex < 0 && !taken.test(y)) apex = y;
                        });
                        if (apex < 0) {
                            ok = false;
                            break;
                        }
                        taken.set(apex);
                        full.apex[{i, ui}] = apex;
                    }
                    if (!ok) throw std::logic_error(
                        "constructive_mono_finder: apex matching exhausted below k=t");
                    full.branch.push_back(u);
                    std::string vw;
                    if (!verify_copy_coloured(psi, full, Colour::red, &vw))
                        throw std::logic_error("constructive_mono_finder: " + vw);
                    diag.found = true;
                    diag.copy = full;
                    diag.copy_colour = Colour::red;
                    return diag;
                }
                diag.note = "no red half structure with branch in the X-side support";
                if (!imr.blue_majority) return diag;
            }
            // Inner blue mass: fall back to an exhaustive blue clique over
            // the supports and the middle part.
            std::vector<int> ground = *au;
            ground.insert(ground.end(), p.y.begin(), p.y.end());
            ground.insert(ground.end(), av->begin(), av->end());
            CliqueQuery qb;
            qb.t = t;
            qb.budget = params.budget;
            qb.allowed = VBitset::of(n, ground);
            qb.edge_ok = is_blue;
            CliqueSearch sb = find_linear_clique(host, qb);
            if (sb.outcome == SearchOutcome::found) {
                std::string vw;
                if (!verify_copy_coloured(psi, *sb.copy, Colour::blue, &vw))
                    throw std::logic_error("constructive_mono_finder: " + vw);
                diag.found = true;
                diag.copy = sb.copy;
                diag.copy_colour = Colour::blue;
                return diag;
            }
            diag.note = "no blue clique across the supports";
            return diag;
        }
    }

    // Majority branch: red clique anywhere first.
    diag.stage = FinderStage::red_search;
    {
        CliqueQuery q;
        q.t = t;
        q.budget = params.budget;
        q.edge_ok = is_red;
        CliqueSearch s = find_linear_clique(host, q);
        if (s.outcome == SearchOutcome::found) {
            std::string vw;
            if (!verify_copy_coloured(psi, *s.copy, Colour::red, &vw))
                throw std::logic_error("constructive_mono_finder: " + vw);
            diag.found = true;
            diag.copy = s.copy;
            diag.copy_colour = Colour::red;
            return diag;
        }
    }

    // Blue half clique inside X whose vertex set keeps a large joint blue
    // link on the carrier (the good-tuple condition).
    diag.stage = FinderStage::half_search;
    CopyCertificate first_half;
    {
        CliqueQuery q;
        q.t = th;
        q.budget = params.budget;
        q.allowed = xb;
        q.edge_ok = [&](const Triple& e) { return r.has_edge(e) && is_blue(e); };
        q.accept = [&](const CopyCertificate& c) {
            Graph2 w = joint_coloured_link(psi, c.vertices(), carrier_yz, Colour::blue);
            return Rational(w.e()) >= diag.family_threshold;
        };
        CliqueSearch s = find_linear_clique(r, q);
        if (s.outcome != SearchOutcome::found) {
            diag.note = "no blue half clique in X with a good joint link";
            return diag;
        }
        first_half = *s.copy;
    }
    std::vector<int> v1 = first_half.vertices();
    Graph2 resid = joint_coloured_link(psi, v1, carrier_yz, Colour::blue);

    // Vertex-disjoint K_{1,t/2} stars from the residual link, centers in Y.
    diag.stage = FinderStage::star_harvest;
    StarFamilyReport stars = star_supersaturation(BipartitePair::from(resid, p.y, p.z), th);
    diag.centers = stars.centers;
    if (static_cast<int>(stars.centers.size()) < th) {
        diag.note = "residual link yields fewer than t/2 disjoint stars";
        return diag;
    }

    // Second blue half clique with branch on the star centers, avoiding the
    // first copy and every star leaf.
    diag.stage = FinderStage::center_search;
    CopyCertificate second_half;
    {
        VBitset allowed(n);
        for (int v = 0; v < n; ++v) allowed.set(v);
        for (int v : v1) allowed.reset(v);
        for (const auto& st : stars.disjoint_stars)
            for (int w : st.second) allowed.reset(w);
        VBitset center_set = VBitset::of(n, stars.centers);
        CliqueQuery q;
        q.t = th;
        q.budget = params.budget;
        q.allowed = allowed;
        q.edge_ok = is_blue;
        q.accept = [&](const CopyCertificate& c) {
            for (int b : c.branch)
                if (!center_set.test(b)) return false;
            return true;
        };
        CliqueSearch s = find_linear_clique(host, q);
        if (s.outcome != SearchOutcome::found) {
            diag.note = "no blue half clique on the star centers";
            return diag;
        }
        second_half = *s.copy;
    }

    // Assemble: both branches concatenated; cross pairs get star leaves.
    diag.stage = FinderStage::assembly;
    std::map<int, const std::vector<int>*> leaves_of;
    for (const auto& st : stars.disjoint_stars) leaves_of[st.first] = &st.second;
    CopyCertificate full;
    full.branch = first_half.branch;
    full.branch.insert(full.branch.end(), second_half.branch.begin(),
                       second_half.branch.end());
    for (const auto& kv : first_half.apex) full.apex[kv.first] = kv.second;
    for (const auto& kv : second_half.apex)
        full.apex[{kv.first.first + th, kv.first.second + th}] = kv.second;
    for (int i = 0; i < th; ++i)
        for (int j = 0; j < th; ++j) {
            int c = second_half.branch[static_cast<size_t>(j)];
            full.apex[{i, th + j}] = (*leaves_of.at(c))[static_cast<size_t>(i)];
        }
    std::string vw;
    if (!verify_copy_coloured(psi, full, Colour::blue, &vw))
        throw std::logic_error("constructive_mono_finder: assembled copy failed: " + vw);
    diag.found = true;
    diag.copy = full;
    diag.copy_colour = Colour::blue;
    return diag;
}

}  // namespace hrl
