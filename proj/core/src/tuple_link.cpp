#include "hrl/tuple_link.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "hrl/parallel.hpp"

namespace hrl {

namespace {

// Largest long <= a.
long rat_floor_long(const Rational& a) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.num().get_mpz_t(), a.den().get_mpz_t());
    return q.get_si();
}

// e < a and e > a decided through integer thresholds, so the per-tuple hot
// loop never touches GMP.
long strict_below_threshold(const Rational& a) {  // e <= this  <=>  e < a
    long f = rat_floor_long(a);
    return a.den() == 1 ? f - 1 : f;
}
long strict_above_threshold(const Rational& a) {  // e >= this  <=>  e > a
    return rat_floor_long(a) + 1;
}

std::vector<int> index_of(int n, const std::vector<int>& items) {
    std::vector<int> pos(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < items.size(); ++i) pos[static_cast<size_t>(items[i])] = static_cast<int>(i);
    return pos;
}

long factorial(int t) {
    long f = 1;
    for (int i = 2; i <= t; ++i) f *= i;
    return f;
}

// C(n, t) capped so the caller can compare against an enumeration budget
// without overflow.
long binom_capped(long n, int t, long cap) {
    if (t < 0 || t > n) return 0;
    long b = 1;
    for (int i = 1; i <= t; ++i) {
        b = b * (n - t + i) / i;
        if (b > cap) return cap + 1;
    }
    return b;
}

std::vector<std::vector<int>> combinations(int n, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(t));
    // odometer over increasing index tuples
    for (int i = 0; i < t; ++i) cur[static_cast<size_t>(i)] = i;
    if (t == 0) {
        out.push_back({});
        return out;
    }
    if (t > n) return out;
    while (true) {
        out.push_back(cur);
        int k = t - 1;
        while (k >= 0 && cur[static_cast<size_t>(k)] == n - t + k) --k;
        if (k < 0) break;
        ++cur[static_cast<size_t>(k)];
        for (int j = k + 1; j < t; ++j)
            cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace

std::vector<int> joint_neighborhood(const Graph2& p, const std::vector<int>& tuple,
                                    const std::vector<int>& side) {
    std::vector<int> out;
    for (int v : side) {
        bool all = true;
        for (int x : tuple)
            if (x == v || !p.has_edge(x, v)) {
                all = false;
                break;
            }
        if (all) out.push_back(v);
    }
    return out;
}

Graph2 joint_link(const Hypergraph3& h, const std::vector<int>& tuple, const Triad& p) {
    std::vector<int> ys = joint_neighborhood(p.g, tuple, p.y);
    std::vector<int> zs = joint_neighborhood(p.g, tuple, p.z);
    VBitset ymask = VBitset::of(p.g.n(), ys), zmask = VBitset::of(p.g.n(), zs);
    Graph2 cur = p.g.cross_restriction(ymask, zmask);
    for (int x : tuple) {
        std::vector<VPair> kept;
        for (const auto& [u, w] : cur.edges())
            if (u != x && w != x && h.has_edge(x, u, w)) kept.push_back({u, w});
        cur = Graph2(p.g.n(), std::move(kept));
    }
    return cur;
}

TupleAuditReport tuple_band_audit(const Hypergraph3& h, const Triad& p, int t,
                                  const Rational& d3, const Rational& d2,
                                  const Rational& eps, CensusRoute route,
                                  TupleMode mode, long samples, const RngSpec& spec,
                                  int threads) {
    if (t < 0 || t >= 16)
        throw std::invalid_argument("tuple audit: tuple length outside [0,15]");
    if (eps.sign() < 0) throw std::invalid_argument("tuple audit: negative eps");
    if (samples < 1) throw std::invalid_argument("tuple audit: need samples >= 1");
    int nx = static_cast<int>(p.x.size());
    int ny = static_cast<int>(p.y.size());
    int nz = static_cast<int>(p.z.size());

    TupleAuditReport out;
    out.t = t;
    Rational area(static_cast<long>(ny) * nz);
    Rational scale = rat_pow(d2, static_cast<unsigned>(2 * t + 1)) * area;
    out.band_center = rat_pow(d3, static_cast<unsigned>(t)) * scale;
    out.band_radius = eps * scale;
    long low_at = strict_below_threshold(out.band_center - out.band_radius);
    long high_at = strict_above_threshold(out.band_center + out.band_radius);

    // Per-x joint links in part-local (iy, iz) coordinates; entry nx is the
    // Y-Z restriction of p itself (the t = 0 link).
    std::vector<int> ypos = index_of(p.g.n(), p.y), zpos = index_of(p.g.n(), p.z);
    std::vector<VPair> yz_edges;
    for (const auto& [u, w] : p.g.edges()) {
        int iy = -1, iz = -1;
        if (ypos[static_cast<size_t>(u)] >= 0 && zpos[static_cast<size_t>(w)] >= 0) {
            iy = ypos[static_cast<size_t>(u)];
            iz = zpos[static_cast<size_t>(w)];
        } else if (zpos[static_cast<size_t>(u)] >= 0 && ypos[static_cast<size_t>(w)] >= 0) {
            iy = ypos[static_cast<size_t>(w)];
            iz = zpos[static_cast<size_t>(u)];
        }
        if (iy >= 0) yz_edges.push_back({iy, iz});
    }
    std::vector<VBitset> link(static_cast<size_t>(nx) + 1, VBitset(ny * nz));
    for (const auto& [iy, iz] : yz_edges) link[static_cast<size_t>(nx)].set(iy * nz + iz);
    for (int ix = 0; ix < nx; ++ix) {
        int x = p.x[static_cast<size_t>(ix)];
        VBitset& b = link[static_cast<size_t>(ix)];
        for (const auto& [iy, iz] : yz_edges) {
            int y = p.y[static_cast<size_t>(iy)], z = p.z[static_cast<size_t>(iz)];
            if (p.g.has_edge(x, y) && p.g.has_edge(x, z) && h.has_edge(x, y, z))
                b.set(iy * nz + iz);
        }
    }

    auto eval_digits = [&](const int* digits) -> unsigned char {
        long e;
        if (t == 0) {
            e = link[static_cast<size_t>(nx)].count();
        } else {
            VBitset acc = link[static_cast<size_t>(digits[0])];
            for (int i = 1; i < t; ++i) acc &= link[static_cast<size_t>(digits[i])];
            e = acc.count();
        }
        if (e <= low_at) return 1;
        if (e >= high_at) return 2;
        return 0;
    };

    constexpr long kEnumCap = 1000000;
    long weight = 1;
    long total;  // enumeration size of the chosen space
    if (mode == TupleMode::ordered) {
        total = 1;
        for (int i = 0; i < t; ++i) {
            total *= nx;
            if (total > kEnumCap) {
                total = kEnumCap + 1;
                break;
            }
        }
    } else {
        if (t > nx) throw std::invalid_argument("tuple audit: set mode needs t <= |X|");
        total = binom_capped(nx, t, kEnumCap);
        weight = factorial(t);
    }
    bool exhaustive;
    switch (route) {
        case CensusRoute::automatic: exhaustive = total <= kEnumCap; break;
        case CensusRoute::exhaustive:
            if (total > kEnumCap)
                throw std::invalid_argument("tuple audit: space too large to enumerate");
            exhaustive = true;
            break;
        default: exhaustive = false; break;
    }
    out.exhaustive = exhaustive;

    std::vector<unsigned char> flag;
    long tested = 0;
    if (exhaustive && mode == TupleMode::ordered) {
        tested = total;
        flag.assign(static_cast<size_t>(total), 0);
        parallel_for(total, threads, [&](long idx) {
            int digits[16];
            long rest = idx;
            for (int i = 0; i < t; ++i) {
                digits[i] = static_cast<int>(rest % nx);
                rest /= nx;
            }
            flag[static_cast<size_t>(idx)] = eval_digits(digits);
        });
    } else if (exhaustive) {
        std::vector<std::vector<int>> combos = combinations(nx, t);
        tested = static_cast<long>(combos.size());
        flag.assign(combos.size(), 0);
        parallel_for(tested, threads, [&](long idx) {
            flag[static_cast<size_t>(idx)] = eval_digits(combos[static_cast<size_t>(idx)].data());
        });
    } else {
        tested = samples;
        flag.assign(static_cast<size_t>(samples), 0);
        parallel_for(samples, threads, [&](long s) {
            Rng rng(substream(spec, static_cast<uint64_t>(s)));
            int digits[16];
            if (mode == TupleMode::ordered) {
                for (int i = 0; i < t; ++i) digits[i] = rng.below_int(nx);
            } else {
                // partial Fisher-Yates: distinct entries, uniform support
                std::vector<int> pool(static_cast<size_t>(nx));
                for (int i = 0; i < nx; ++i) pool[static_cast<size_t>(i)] = i;
                for (int i = 0; i < t; ++i) {
                    int j = i + rng.below_int(nx - i);
                    std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
                    digits[i] = pool[static_cast<size_t>(i)];
                }
            }
            flag[static_cast<size_t>(s)] = eval_digits(digits);
        });
    }
    long low = 0, high = 0;
    for (unsigned char f : flag) {
        if (f == 1) ++low;
        if (f == 2) ++high;
    }

    out.tuples_tested = tested * weight;
    if (tested > 0) {
        out.bad_fraction_low = static_cast<double>(low) / static_cast<double>(tested);
        out.bad_fraction_high = static_cast<double>(high) / static_cast<double>(tested);
        Rational fl(low, tested), fh(high, tested);
        out.lower_pass = fl <= eps;
        out.pass = out.lower_pass && fl + fh <= Rational(2) * eps;
    }
    return out;
}

ExtensionReport extension_audit(const Hypergraph3& h, const Triad& p,
                                const std::vector<int>& prefix, const Rational& gamma,
                                const Rational& d3, const Rational& d2,
                                const Rational& multiplier) {
    if (gamma.sign() < 0) throw std::invalid_argument("extension audit: negative gamma");
    int s = static_cast<int>(prefix.size());
    ExtensionReport out;
    out.t = s + 1;
    out.gamma = gamma;
    out.multiplier = multiplier;

    long ny = static_cast<long>(p.y.size()), nz = static_cast<long>(p.z.size());
    std::vector<int> nbr_y = joint_neighborhood(p.g, prefix, p.y);
    std::vector<int> nbr_z = joint_neighborhood(p.g, prefix, p.z);
    out.joint_y = static_cast<long>(nbr_y.size());
    out.joint_z = static_cast<long>(nbr_z.size());
    Rational d2s = rat_pow(d2, static_cast<unsigned>(s));
    auto within = [&](long v, const Rational& center, const Rational& slack) {
        return Rational(v) >= center - slack && Rational(v) <= center + slack;
    };
    out.e1_pass = within(out.joint_y, d2s * Rational(ny), gamma * d2s * Rational(ny)) &&
                  within(out.joint_z, d2s * Rational(nz), gamma * d2s * Rational(nz));

    Graph2 plink = joint_link(h, prefix, p);
    out.prefix_link_edges = plink.e();
    Rational area(ny * nz);
    Rational q2 = rat_pow(d2, static_cast<unsigned>(2 * s + 1)) * area;
    out.e2_pass = within(out.prefix_link_edges,
                         rat_pow(d3, static_cast<unsigned>(s)) * q2, gamma * q2);

    Rational q3 = rat_pow(d2, static_cast<unsigned>(2 * s + 3)) * area;
    Rational dt = rat_pow(d3, static_cast<unsigned>(s + 1));
    out.e3_threshold = (dt - multiplier * gamma) * q3;
    out.e4_threshold = (dt + multiplier * gamma) * q3;

    out.extensions_tested = static_cast<long>(p.x.size());
    for (int x : p.x) {
        long e = 0;
        for (const auto& [u, w] : plink.edges())
            if (u != x && w != x && p.g.has_edge(x, u) && p.g.has_edge(x, w) &&
                h.has_edge(x, u, w))
                ++e;
        if (Rational(e) < out.e3_threshold) ++out.e3_failures;
        if (Rational(e) > out.e4_threshold) ++out.e4_failures;
    }
    if (out.extensions_tested > 0) {
        out.e3_fail_fraction = static_cast<double>(out.e3_failures) /
                               static_cast<double>(out.extensions_tested);
        out.e4_fail_fraction = static_cast<double>(out.e4_failures) /
                               static_cast<double>(out.extensions_tested);
        out.e3_pass = Rational(out.e3_failures, out.extensions_tested) <= gamma;
        out.e4_pass = Rational(out.e4_failures, out.extensions_tested) <= gamma;
    } else {
        out.e3_pass = out.e4_pass = true;
    }
    return out;
}

namespace {

// Exact maximum clique by branch and bound; adj is a symmetric bool matrix.
void max_clique_rec(const std::vector<std::vector<bool>>& adj, std::vector<int>& cand,
                    std::vector<int>& cur, std::vector<int>& best) {
    if (cur.size() + cand.size() <= best.size()) return;
    if (cand.empty()) {
        if (cur.size() > best.size()) best = cur;
        return;
    }
    // branch on the first candidate: in, then out
    int v = cand.front();
    std::vector<int> next;
    for (int u : cand)
        if (u != v && adj[static_cast<size_t>(v)][static_cast<size_t>(u)]) next.push_back(u);
    cur.push_back(v);
    max_clique_rec(adj, next, cur, best);
    cur.pop_back();
    std::vector<int> rest(cand.begin() + 1, cand.end());
    max_clique_rec(adj, rest, cur, best);
}

}  // namespace

WitnessFamily irregularity_witness(const Hypergraph3& h, const Triad& p,
                                   const std::vector<std::vector<int>>& bad_tuples,
                                   const Rational& d3, const Rational& d2, double zeta,
                                   int r, const Rational& gamma,
                                   const Rational& multiplier) {
    if (r < 1) throw std::invalid_argument("witness family: need r >= 1");
    if (!(zeta > 0) || zeta > 1)
        throw std::invalid_argument("witness family: zeta outside (0,1]");
    WitnessFamily out;
    out.aux_vertices = static_cast<long>(bad_tuples.size());
    if (bad_tuples.empty()) return out;
    size_t s = bad_tuples.front().size();
    for (const auto& tup : bad_tuples)
        if (tup.size() != s)
            throw std::invalid_argument("witness family: mixed tuple lengths");

    long ny = static_cast<long>(p.y.size());
    Rational pair_bound = Rational(2) * rat_pow(d2, static_cast<unsigned>(2 * s)) *
                          Rational(ny);

    size_t m = bad_tuples.size();
    std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            const auto &a = bad_tuples[i], &b = bad_tuples[j];
            bool disjoint = true;
            for (int x : a)
                if (std::find(b.begin(), b.end(), x) != b.end()) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            std::vector<int> both = a;
            both.insert(both.end(), b.begin(), b.end());
            long joint = static_cast<long>(joint_neighborhood(p.g, both, p.y).size());
            if (Rational(joint) <= pair_bound) {
                adj[i][j] = adj[j][i] = true;
                ++out.aux_edges;
            }
        }
    }

    std::vector<int> chosen;
    for (size_t i = 0; i < m && static_cast<int>(chosen.size()) < r; ++i) {
        bool ok = true;
        for (int c : chosen)
            if (!adj[i][static_cast<size_t>(c)]) {
                ok = false;
                break;
            }
        if (ok) chosen.push_back(static_cast<int>(i));
    }
    if (static_cast<int>(chosen.size()) < r && m <= 20) {
        std::vector<int> cand(m), cur, best;
        for (size_t i = 0; i < m; ++i) cand[i] = static_cast<int>(i);
        max_clique_rec(adj, cand, cur, best);
        if (best.size() > chosen.size()) chosen = best;
        if (static_cast<int>(chosen.size()) > r) chosen.resize(static_cast<size_t>(r));
        out.exact_clique = true;
    }
    out.complete = static_cast<int>(chosen.size()) == r;

    long cap = static_cast<long>(
        std::ceil(zeta * static_cast<double>(p.x.size()) - 1e-9));
    cap = std::max<long>(cap, 1);
    std::optional<TriangleSet> covered;
    for (int ti : chosen) {
        const std::vector<int>& tup = bad_tuples[static_cast<size_t>(ti)];
        ExtensionReport ext = extension_audit(h, p, tup, gamma, d3, d2, multiplier);
        Graph2 plink = joint_link(h, tup, p);
        std::vector<int> fail;
        for (int x : p.x) {
            long e = 0;
            for (const auto& [u, w] : plink.edges())
                if (u != x && w != x && p.g.has_edge(x, u) && p.g.has_edge(x, w) &&
                    h.has_edge(x, u, w))
                    ++e;
            if (Rational(e) < ext.e3_threshold) fail.push_back(x);
            if (static_cast<long>(fail.size()) == cap) break;
        }
        std::vector<int> nbr_y = joint_neighborhood(p.g, tup, p.y);
        std::vector<int> nbr_z = joint_neighborhood(p.g, tup, p.z);
        std::vector<VPair> edges = plink.edges();
        for (int x : fail) {
            for (int y : nbr_y)
                if (p.g.has_edge(x, y)) edges.push_back(make_pair(x, y));
            for (int z : nbr_z)
                if (p.g.has_edge(x, z)) edges.push_back(make_pair(x, z));
        }
        Graph2 q(p.g.n(), std::move(edges));
        TriangleSet ts(p, q);
        if (!covered)
            covered.emplace(std::move(ts));
        else
            *covered |= ts;
        out.witnesses.push_back(std::move(q));
        out.tuples.push_back(tup);
    }
    long base = triangle_count(p);
    if (covered && base > 0)
        out.triangle_ratio =
            static_cast<double>(covered->count()) / static_cast<double>(base);
    return out;
}

namespace {

// Edge count of the joint link of `set` over the whole vertex set, counting
// stops at `stop_at` (the caller only needs the < m test).
long joint_link_count(const Hypergraph3& h, const std::vector<int>& set, long stop_at) {
    if (set.empty()) return stop_at;
    Graph2 first = h.link(set.front());
    long e = 0;
    for (const auto& [u, w] : first.edges()) {
        bool all = true;
        for (size_t i = 1; i < set.size(); ++i) {
            int x = set[i];
            if (x == u || x == w || !h.has_edge(x, u, w)) {
                all = false;
                break;
            }
        }
        if (all && ++e >= stop_at) return e;
    }
    return e;
}

}  // namespace

DrcResult dependent_random_choice(const Hypergraph3& h, int t, int r, long m,
                                  const Rational& a, const RngSpec& spec) {
    int n = h.n();
    if (n < 3) throw std::invalid_argument("dependent random choice: n too small");
    if (t < 1 || r < 1 || m < 0)
        throw std::invalid_argument("dependent random choice: bad parameters");
    DrcResult out;
    Rational delta1(h.min_link_size());
    out.condition_lhs =
        rat_pow(delta1, static_cast<unsigned>(t)) /
            rat_pow(Rational(n), static_cast<unsigned>(2 * t - 1)) -
        binomial(n, r) * rat_pow(Rational(m) / binomial(n, 2), static_cast<unsigned>(t));
    out.guarantee = out.condition_lhs >= a;

    if (m == 0) {
        out.u.resize(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) out.u[static_cast<size_t>(v)] = v;
        out.certified = true;
        return out;
    }

    Rng rng(spec);
    std::vector<VPair> pairs;
    for (int i = 0; i < t; ++i) {
        int u = rng.below_int(n), v = rng.below_int(n);
        while (v == u) v = rng.below_int(n);
        pairs.push_back(make_pair(u, v));
    }
    std::vector<int> u;
    for (int v = 0; v < n; ++v) {
        bool all = true;
        for (const auto& [x, y] : pairs)
            if (v == x || v == y || !h.has_edge(v, x, y)) {
                all = false;
                break;
            }
        if (all) u.push_back(v);
    }

    constexpr long kCheckCap = 100000;
    while (true) {
        if (static_cast<long>(u.size()) < r) {
            // no r-subsets left; the certified property is vacuous
            out.certified = true;
            out.subsets_checked = 0;
            break;
        }
        if (binom_capped(static_cast<long>(u.size()), r, kCheckCap) > kCheckCap) {
            out.certified = false;
            break;
        }
        bool deleted = false;
        long checked = 0;
        for (const auto& combo : combinations(static_cast<int>(u.size()), r)) {
            std::vector<int> set;
            for (int i : combo) set.push_back(u[static_cast<size_t>(i)]);
            ++checked;
            if (joint_link_count(h, set, m) < m) {
                u.erase(u.begin() + combo.back());
                ++out.deletions;
                deleted = true;
                break;
            }
        }
        if (!deleted) {
            out.certified = true;
            out.subsets_checked = checked;
            break;
        }
    }
    out.u = std::move(u);
    return out;
}

std::optional<int> drc_dense_threshold(double rho, int r, int n_cap) {
    if (!(rho > 0) || rho > 2)
        throw std::invalid_argument("drc threshold: rho outside (0,2]");
    if (r < 1) throw std::invalid_argument("drc threshold: need r >= 1");
    int t = static_cast<int>(std::ceil(static_cast<double>(r) / rho - 1e-12));
    int lo = std::max(4, r + 2);
    if (n_cap < lo) return std::nullopt;
    std::optional<int> first_of_run;
    for (int n = lo; n <= n_cap; ++n) {
        long m = static_cast<long>(
            std::ceil(std::pow(static_cast<double>(n), 2.0 - rho) - 1e-9));
        Rational delta1 = binomial(n - 1, 2);
        Rational lhs = rat_pow(delta1, static_cast<unsigned>(t)) /
                           rat_pow(Rational(n), static_cast<unsigned>(2 * t - 1)) -
                       binomial(n, r) *
                           rat_pow(Rational(m) / binomial(n, 2), static_cast<unsigned>(t));
        if (lhs >= Rational(r)) {
            if (!first_of_run) first_of_run = n;
        } else {
            first_of_run.reset();
        }
    }
    return first_of_run;
}

TupleCensusReport weak_tuple_census(const Hypergraph3& h, const std::vector<int>& u,
                                    int t, long threshold) {
    if (t < 0) throw std::invalid_argument("tuple census: negative t");
    std::vector<int> su = u;
    std::sort(su.begin(), su.end());
    if (std::adjacent_find(su.begin(), su.end()) != su.end())
        throw std::invalid_argument("tuple census: repeated vertex in u");
    int n = h.n();
    TupleCensusReport out;
    out.threshold = threshold;

    // direct side: per t-subset, scan all host pairs avoiding the subset
    for (const auto& combo : combinations(static_cast<int>(su.size()), t)) {
        std::vector<int> set;
        for (int i : combo) set.push_back(su[static_cast<size_t>(i)]);
        long e = 0;
        for (int w = 0; w < n; ++w) {
            if (std::find(set.begin(), set.end(), w) != set.end()) continue;
            for (int v = w + 1; v < n; ++v) {
                if (std::find(set.begin(), set.end(), v) != set.end()) continue;
                bool all = true;
                for (int x : set)
                    if (!h.has_edge(x, w, v)) {
                        all = false;
                        break;
                    }
                if (all) ++e;
            }
        }
        out.sum_links += e;
        if (e >= threshold) ++out.dense_tuples;
        ++out.subsets;
    }

    // pair side: degrees into u, then the binomial collapse
    for (int w = 0; w < n; ++w) {
        for (int v = w + 1; v < n; ++v) {
            long deg = 0;
            for (int x : su)
                if (x != w && x != v && h.has_edge(x, w, v)) ++deg;
            out.sum_binomials += binomial(deg, t).num().get_si();
        }
    }
    if (out.sum_links != out.sum_binomials)
        throw std::logic_error("tuple census: double-count identity failed");
    return out;
}

TupleConstants tuple_constants(int t, double eps, double d3, double d2) {
    if (t < 1) throw std::invalid_argument("tuple constants: need t >= 1");
    if (!(eps > 0) || !(d3 > 0) || !(d2 > 0))
        throw std::invalid_argument("tuple constants: need positive eps, d3, d2");
    TupleConstants out;
    out.zeta = eps / 10.0;
    double r_req = out.zeta / std::pow(d2, 2 * t - 2);
    out.r = std::max(1, static_cast<int>(std::ceil(r_req - 1e-12)));
    out.delta3 = std::min(out.zeta, std::pow(d3, t)) / 10.0;
    out.delta2 = std::min(out.delta3, 1.0 / static_cast<double>(out.r)) / 10.0;
    return out;
}

}  // namespace hrl
