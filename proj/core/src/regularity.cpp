#include "hrl/regularity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace hrl {

namespace {

constexpr double kEps = 1e-9;

long min_admissible(double delta, size_t side) {
    long m = static_cast<long>(std::ceil(delta * static_cast<double>(side) - kEps));
    return std::max<long>(1, m);
}

void require_delta(double delta) {
    if (!(delta > 0) || !(delta <= 1))
        throw std::invalid_argument("regularity audit: need 0 < delta <= 1");
}

VBitset mask_of(int n, const std::vector<int>& vs) { return VBitset::of(n, vs); }

// Local adjacency of a pair: row x -> bitset over local y indices.
std::vector<VBitset> local_rows(const BipartitePair& p) {
    std::vector<int> ypos(p.g.n(), -1);
    for (size_t i = 0; i < p.ys.size(); ++i) ypos[p.ys[i]] = static_cast<int>(i);
    std::vector<VBitset> rows(p.xs.size(), VBitset(static_cast<int>(p.ys.size())));
    for (size_t i = 0; i < p.xs.size(); ++i)
        for (const auto& [u, v] : p.g.edges()) {
            int a = u, b = v;
            if (b == p.xs[i]) std::swap(a, b);
            if (a == p.xs[i] && ypos[b] >= 0) rows[i].set(ypos[b]);
        }
    return rows;
}

std::vector<int> pick_subset(std::vector<int>& pool, long size, Rng& rng) {
    // partial Fisher-Yates: the first `size` entries after shuffling
    for (long i = 0; i < size; ++i) {
        long j = i + static_cast<long>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    return std::vector<int>(pool.begin(), pool.begin() + size);
}

}  // namespace

BipartitePair BipartitePair::from(const Graph2& host, std::vector<int> xs,
                                  std::vector<int> ys) {
    VBitset xm = mask_of(host.n(), xs), ym = mask_of(host.n(), ys);
    if (xm.intersects(ym))
        throw std::invalid_argument("BipartitePair: parts overlap");
    return BipartitePair{std::move(xs), std::move(ys), host.cross_restriction(xm, ym)};
}

long BipartitePair::e() const { return g.e(); }

double BipartitePair::density() const {
    double slots = static_cast<double>(xs.size()) * static_cast<double>(ys.size());
    return slots == 0 ? 0.0 : static_cast<double>(g.e()) / slots;
}

BipartitePair BipartitePair::slice(const std::vector<int>& xsub,
                                   const std::vector<int>& ysub) const {
    VBitset xm = mask_of(g.n(), xs), ym = mask_of(g.n(), ys);
    for (int v : xsub)
        if (!xm.test(v)) throw std::invalid_argument("slice: x subset leaves the pair");
    for (int v : ysub)
        if (!ym.test(v)) throw std::invalid_argument("slice: y subset leaves the pair");
    return BipartitePair{xsub, ysub,
                         g.cross_restriction(mask_of(g.n(), xsub), mask_of(g.n(), ysub))};
}

namespace {

// Exact audit over all admissible subset pairs.  Y'-major: for each Y' the
// per-row counts c_x = |N(x) ∩ Y'| refresh in O(|X|), then edge counts for
// all X' follow from the subset-sum recurrence e[S] = e[S \ low] + c[low].
RegularityVerdict pair_audit_exact(const BipartitePair& p, double delta, double d,
                                   const std::vector<VBitset>& rows) {
    size_t nx = p.xs.size(), ny = p.ys.size();
    long mx = min_admissible(delta, nx), my = min_admissible(delta, ny);
    RegularityVerdict out;
    out.delta = delta;
    out.d_ref = d;
    out.exhaustive = true;

    std::vector<long> edge_sum(size_t{1} << nx, 0);
    std::vector<long> csize(size_t{1} << nx, 0);
    for (uint64_t s = 1; s < (uint64_t{1} << nx); ++s)
        csize[s] = std::popcount(s);
    std::vector<long> c(nx, 0);

    double worst = -1;
    uint64_t worst_x = 0, worst_y = 0;
    double worst_density = 0;
    for (uint64_t ysub = 1; ysub < (uint64_t{1} << ny); ++ysub) {
        long ys_size = std::popcount(ysub);
        if (ys_size < my) continue;
        VBitset ymask(static_cast<int>(ny));
        for (size_t j = 0; j < ny; ++j)
            if (ysub >> j & 1) ymask.set(static_cast<int>(j));
        for (size_t i = 0; i < nx; ++i) c[i] = rows[i].count_and(ymask);
        for (uint64_t xs = 1; xs < (uint64_t{1} << nx); ++xs) {
            int low = std::countr_zero(xs);
            edge_sum[xs] = edge_sum[xs & (xs - 1)] + c[low];
            if (csize[xs] < mx) continue;
            ++out.tested;
            double dens = static_cast<double>(edge_sum[xs]) /
                          (static_cast<double>(csize[xs]) * static_cast<double>(ys_size));
            double dev = std::abs(dens - d);
            if (dev > worst) {
                worst = dev;
                worst_x = xs;
                worst_y = ysub;
                worst_density = dens;
            }
        }
    }
    if (worst >= 0) {
        out.delta_measured = worst;
        DeviationWitness w;
        w.subsets.resize(2);
        for (size_t i = 0; i < nx; ++i)
            if (worst_x >> i & 1) w.subsets[0].push_back(p.xs[i]);
        for (size_t j = 0; j < ny; ++j)
            if (worst_y >> j & 1) w.subsets[1].push_back(p.ys[j]);
        w.density = worst_density;
        w.deviation = worst;
        out.witness = std::move(w);
    }
    out.regular = out.delta_measured <= delta + kEps;
    return out;
}

RegularityVerdict pair_audit_sampled(const BipartitePair& p, double delta, double d,
                                     long samples, const RngSpec& spec,
                                     const std::vector<VBitset>& rows) {
    size_t nx = p.xs.size(), ny = p.ys.size();
    long mx = min_admissible(delta, nx), my = min_admissible(delta, ny);
    RegularityVerdict out;
    out.delta = delta;
    out.d_ref = d;
    out.exhaustive = false;

    Rng rng(spec);
    std::vector<int> xpool(nx), ypool(ny);
    for (size_t i = 0; i < nx; ++i) xpool[i] = static_cast<int>(i);
    for (size_t j = 0; j < ny; ++j) ypool[j] = static_cast<int>(j);

    double worst = -1;
    std::vector<int> worst_xl, worst_yl;
    double worst_density = 0;
    for (long s = 0; s < samples; ++s) {
        long sx = mx + static_cast<long>(rng.below(static_cast<uint64_t>(nx - mx + 1)));
        long sy = my + static_cast<long>(rng.below(static_cast<uint64_t>(ny - my + 1)));
        std::vector<int> xl = pick_subset(xpool, sx, rng);
        std::vector<int> yl = pick_subset(ypool, sy, rng);
        VBitset ymask(static_cast<int>(ny));
        for (int j : yl) ymask.set(j);
        long e = 0;
        for (int i : xl) e += rows[i].count_and(ymask);
        ++out.tested;
        double dens =
            static_cast<double>(e) / (static_cast<double>(sx) * static_cast<double>(sy));
        double dev = std::abs(dens - d);
        if (dev > worst) {
            worst = dev;
            worst_xl = xl;
            worst_yl = yl;
            worst_density = dens;
        }
    }
    if (worst >= 0) {
        out.delta_measured = worst;
        DeviationWitness w;
        w.subsets.resize(2);
        for (int i : worst_xl) w.subsets[0].push_back(p.xs[i]);
        for (int j : worst_yl) w.subsets[1].push_back(p.ys[j]);
        std::sort(w.subsets[0].begin(), w.subsets[0].end());
        std::sort(w.subsets[1].begin(), w.subsets[1].end());
        w.density = worst_density;
        w.deviation = worst;
        out.witness = std::move(w);
    }
    out.regular = out.delta_measured <= delta + kEps;
    return out;
}

}  // namespace

RegularityVerdict pair_regularity_audit(const BipartitePair& p, double delta, double d,
                                        long samples, const RngSpec& spec) {
    require_delta(delta);
    if (p.xs.empty() || p.ys.empty())
        throw std::invalid_argument("pair audit: empty side");
    std::vector<VBitset> rows = local_rows(p);
    size_t nx = p.xs.size(), ny = p.ys.size();
    if (nx <= 14 && ny <= 14) {
        double work = std::ldexp(static_cast<double>(ny) + std::ldexp(1.0, static_cast<int>(nx)),
                                 static_cast<int>(ny));
        if (work <= 6e7) return pair_audit_exact(p, delta, d, rows);
    }
    return pair_audit_sampled(p, delta, d, samples, spec, rows);
}

RegularityVerdict pair_regularity_audit(const BipartitePair& p, double delta,
                                        long samples, const RngSpec& spec) {
    return pair_regularity_audit(p, delta, p.density(), samples, spec);
}

double sliced_delta(double delta, double alpha) {
    if (!(alpha > 0) || alpha > 1)
        throw std::invalid_argument("sliced_delta: need 0 < alpha <= 1");
    return std::max(delta / alpha, 2 * delta);
}

RegularityVerdict slicing_audit(const BipartitePair& p, const std::vector<int>& xslice,
                                const std::vector<int>& yslice, double delta, double d,
                                long samples, const RngSpec& spec) {
    require_delta(delta);
    if (xslice.empty() || yslice.empty())
        throw std::invalid_argument("slicing_audit: empty slice");
    double ax = static_cast<double>(xslice.size()) / static_cast<double>(p.xs.size());
    double ay = static_cast<double>(yslice.size()) / static_cast<double>(p.ys.size());
    double dprime = std::min(1.0, sliced_delta(delta, std::min(ax, ay)));
    return pair_regularity_audit(p.slice(xslice, yslice), dprime, d, samples, spec);
}

CountWindow triangle_count_window(long nx, long ny, long nz, double delta, double d) {
    double vol = static_cast<double>(nx) * static_cast<double>(ny) * static_cast<double>(nz);
    double base = std::max(0.0, d - delta);
    CountWindow w;
    w.lo = std::max(0.0, (1 - 2 * delta) * base * base * base * vol);
    double hip = (d + delta) * (d + delta) * (d + delta) + 2 * delta;
    w.hi = std::min(vol, hip * vol);
    return w;
}

CountWindow triangle_count_window_simple(long nx, long ny, long nz, double delta,
                                         double d) {
    double vol = static_cast<double>(nx) * static_cast<double>(ny) * static_cast<double>(nz);
    CountWindow w;
    w.lo = std::max(0.0, (d * d * d - 4 * delta) * vol);
    w.hi = std::min(vol, (d * d * d + 4 * delta) * vol);
    return w;
}

WindowAudit triad_triangle_audit(const Triad& t, double delta, double d) {
    WindowAudit out;
    out.count = triangle_count(t);
    out.window = triangle_count_window(static_cast<long>(t.x.size()),
                                       static_cast<long>(t.y.size()),
                                       static_cast<long>(t.z.size()), delta, d);
    out.inside = out.window.contains(static_cast<double>(out.count));
    return out;
}

CountWindow through_subset_window(long xsub_size, long e_yz, long nx, long ny, long nz,
                                  double delta, double d) {
    double vol = static_cast<double>(nx) * static_cast<double>(ny) * static_cast<double>(nz);
    double main_lo = (d - delta) * d * static_cast<double>(xsub_size) *
                     static_cast<double>(e_yz);
    double main_hi = (d + delta) * d * static_cast<double>(xsub_size) *
                     static_cast<double>(e_yz);
    CountWindow w;
    w.lo = std::max(0.0, main_lo - 2 * delta * vol);
    w.hi = std::min(vol, main_hi + 2 * delta * vol);
    return w;
}

WindowAudit through_subset_audit(const Triad& t, const std::vector<int>& xsub,
                                 double delta, double d) {
    VBitset xm = mask_of(t.g.n(), xsub);
    for (int v : xsub)
        if (std::find(t.x.begin(), t.x.end(), v) == t.x.end())
            throw std::invalid_argument("through_subset_audit: subset leaves part x");
    long e_yz = t.g.edges_between(mask_of(t.g.n(), t.y), mask_of(t.g.n(), t.z));
    WindowAudit out;
    out.count = triangle_count_through(t, xm);
    out.window = through_subset_window(
        static_cast<long>(xsub.size()), e_yz, static_cast<long>(t.x.size()),
        static_cast<long>(t.y.size()), static_cast<long>(t.z.size()), delta, d);
    out.inside = out.window.contains(static_cast<double>(out.count));
    return out;
}

TupleBandAudit graph_tuple_audit(const BipartitePair& p, const std::vector<int>& ysub,
                                 int ell, double delta, double d) {
    require_delta(delta);
    if (ell < 1) throw std::invalid_argument("graph_tuple_audit: need ell >= 1");
    size_t nx = p.xs.size(), ny = p.ys.size();
    double tuples_d = std::pow(static_cast<double>(nx), ell);
    if (tuples_d > 2e7)
        throw std::invalid_argument("graph_tuple_audit: |X|^ell too large");
    std::vector<VBitset> rows = local_rows(p);
    std::vector<int> ypos(p.g.n(), -1);
    for (size_t j = 0; j < ny; ++j) ypos[p.ys[j]] = static_cast<int>(j);
    VBitset ymask(static_cast<int>(ny));
    for (int v : ysub) {
        if (ypos[v] < 0)
            throw std::invalid_argument("graph_tuple_audit: Y' leaves part y");
        ymask.set(ypos[v]);
    }

    TupleBandAudit out;
    double base_lo = std::max(0.0, d - delta), base_hi = d + delta;
    out.lo = std::pow(base_lo, ell) * static_cast<double>(ysub.size());
    out.hi = std::pow(base_hi, ell) * static_cast<double>(ysub.size());

    // Ordered tuples with repetition; prefix intersections are shared.
    std::function<void(int, const VBitset&)> rec = [&](int depth, const VBitset& cur) {
        if (depth == ell) {
            ++out.tuple_count;
            double joint = static_cast<double>(cur.count());
            if (joint < out.lo - kEps || joint > out.hi + kEps) ++out.violations;
            return;
        }
        for (size_t i = 0; i < nx; ++i) {
            VBitset next = cur;
            next &= rows[i];
            rec(depth + 1, next);
        }
    };
    rec(0, ymask);
    out.allowed = 2 * delta * ell * tuples_d;
    out.ok = static_cast<double>(out.violations) <= out.allowed + kEps;
    return out;
}

long cross_edge_count(const Hypergraph3& h, const std::vector<int>& xs,
                      const std::vector<int>& ys, const std::vector<int>& zs) {
    return h.tripartite_restriction(mask_of(h.n(), xs), mask_of(h.n(), ys),
                                    mask_of(h.n(), zs))
        .e();
}

double weak_density(const Hypergraph3& h, const std::vector<int>& xs,
                    const std::vector<int>& ys, const std::vector<int>& zs) {
    double vol = static_cast<double>(xs.size()) * static_cast<double>(ys.size()) *
                 static_cast<double>(zs.size());
    if (vol == 0) return 0;
    return static_cast<double>(cross_edge_count(h, xs, ys, zs)) / vol;
}

namespace {

// Per-part-x bitset over local (y,z) pairs, index iy*|Z| + iz.
std::vector<VBitset> pair_planes(const Hypergraph3& h, const std::vector<int>& xs,
                                 const std::vector<int>& ys, const std::vector<int>& zs) {
    int ny = static_cast<int>(ys.size()), nz = static_cast<int>(zs.size());
    std::vector<VBitset> planes(xs.size(), VBitset(ny * nz));
    for (size_t i = 0; i < xs.size(); ++i)
        for (int iy = 0; iy < ny; ++iy)
            for (int iz = 0; iz < nz; ++iz)
                if (h.has_edge(make_triple(xs[i], ys[iy], zs[iz])))
                    planes[i].set(iy * nz + iz);
    return planes;
}

}  // namespace

RegularityVerdict weak_regularity_audit(const Hypergraph3& h, const std::vector<int>& xs,
                                        const std::vector<int>& ys,
                                        const std::vector<int>& zs, double delta, double d,
                                        long samples, const RngSpec& spec) {
    require_delta(delta);
    if (xs.empty() || ys.empty() || zs.empty())
        throw std::invalid_argument("weak audit: empty part");
    const std::vector<int>* parts[3] = {&xs, &ys, &zs};
    // Exact route: enumerate subsets of the two smallest sides, subset-sum DP
    // over the largest.
    int order[3] = {0, 1, 2};
    std::sort(order, order + 3, [&](int a, int b) {
        return parts[a]->size() > parts[b]->size();
    });
    size_t na = parts[order[0]]->size(), nb = parts[order[1]]->size(),
           nc = parts[order[2]]->size();
    bool exact = na <= 14 && nb * nc <= 64;
    if (exact) {
        double work = std::ldexp(std::ldexp(static_cast<double>(nb * nc) +
                                                std::ldexp(1.0, static_cast<int>(na)),
                                            static_cast<int>(nb)),
                                 static_cast<int>(nc));
        exact = work <= 8e7;
    }

    RegularityVerdict out;
    out.delta = delta;
    out.d_ref = d;

    if (exact) {
        const std::vector<int>&A = *parts[order[0]], &B = *parts[order[1]],
                              &C = *parts[order[2]];
        long ma = min_admissible(delta, na), mb = min_admissible(delta, nb),
             mc = min_admissible(delta, nc);
        // plane bit i_b * nc + i_c per A-vertex
        std::vector<int> host_a = A, host_b = B, host_c = C;
        // role -> (x,y,z) ordering for has_edge is irrelevant (triples are
        // canonicalised), so planes can be built directly.
        std::vector<VBitset> planes = pair_planes(h, host_a, host_b, host_c);
        std::vector<uint64_t> plane_bits(na, 0);
        for (size_t i = 0; i < na; ++i) {
            uint64_t w = 0;
            planes[i].for_each([&](int b) { w |= uint64_t{1} << b; });
            plane_bits[i] = w;
        }
        out.exhaustive = true;
        double worst = -1;
        uint64_t worst_a = 0, worst_b = 0, worst_c = 0;
        double worst_density = 0;
        std::vector<long> t(na, 0);
        std::vector<long> esum(size_t{1} << na, 0);
        for (uint64_t sb = 1; sb < (uint64_t{1} << nb); ++sb) {
            long cb = std::popcount(sb);
            if (cb < mb) continue;
            for (uint64_t sc = 1; sc < (uint64_t{1} << nc); ++sc) {
                long cc = std::popcount(sc);
                if (cc < mc) continue;
                // mask over (i_b, i_c) pairs
                uint64_t bcmask = 0;
                uint64_t rowbits = sc;
                for (size_t ib = 0; ib < nb; ++ib)
                    if (sb >> ib & 1) bcmask |= rowbits << (ib * nc);
                for (size_t i = 0; i < na; ++i)
                    t[i] = std::popcount(plane_bits[i] & bcmask);
                double slots_bc = static_cast<double>(cb) * static_cast<double>(cc);
                for (uint64_t sa = 1; sa < (uint64_t{1} << na); ++sa) {
                    int low = std::countr_zero(sa);
                    esum[sa] = esum[sa & (sa - 1)] + t[low];
                    long ca = std::popcount(sa);
                    if (ca < ma) continue;
                    ++out.tested;
                    double dens = static_cast<double>(esum[sa]) /
                                  (static_cast<double>(ca) * slots_bc);
                    double dev = std::abs(dens - d);
                    if (dev > worst) {
                        worst = dev;
                        worst_a = sa;
                        worst_b = sb;
                        worst_c = sc;
                        worst_density = dens;
                    }
                }
            }
        }
        if (worst >= 0) {
            out.delta_measured = worst;
            DeviationWitness w;
            w.subsets.resize(3);
            auto fill = [&](int role, uint64_t mask) {
                const std::vector<int>& src = *parts[order[role]];
                for (size_t i = 0; i < src.size(); ++i)
                    if (mask >> i & 1) w.subsets[order[role]].push_back(src[i]);
            };
            fill(0, worst_a);
            fill(1, worst_b);
            fill(2, worst_c);
            w.density = worst_density;
            w.deviation = worst;
            out.witness = std::move(w);
        }
        out.regular = out.delta_measured <= delta + kEps;
        return out;
    }

    // Sampled route.
    out.exhaustive = false;
    Rng rng(spec);
    std::vector<std::vector<int>> pools(3);
    for (int k = 0; k < 3; ++k) {
        pools[k].resize(parts[k]->size());
        for (size_t i = 0; i < pools[k].size(); ++i) pools[k][i] = static_cast<int>(i);
    }
    long mins[3];
    for (int k = 0; k < 3; ++k) mins[k] = min_admissible(delta, parts[k]->size());
    std::vector<VBitset> planes = pair_planes(h, xs, ys, zs);
    int nz2 = static_cast<int>(zs.size());
    double worst = -1;
    std::vector<std::vector<int>> worst_sets(3);
    double worst_density = 0;
    for (long s = 0; s < samples; ++s) {
        std::vector<std::vector<int>> pick(3);
        for (int k = 0; k < 3; ++k) {
            long size = mins[k] + static_cast<long>(rng.below(
                                      static_cast<uint64_t>(pools[k].size() - mins[k] + 1)));
            pick[k] = pick_subset(pools[k], size, rng);
        }
        VBitset bc(static_cast<int>(ys.size()) * nz2);
        for (int iy : pick[1])
            for (int iz : pick[2]) bc.set(iy * nz2 + iz);
        long e = 0;
        for (int ix : pick[0]) e += planes[ix].count_and(bc);
        ++out.tested;
        double dens = static_cast<double>(e) /
                      (static_cast<double>(pick[0].size()) *
                       static_cast<double>(pick[1].size()) *
                       static_cast<double>(pick[2].size()));
        double dev = std::abs(dens - d);
        if (dev > worst) {
            worst = dev;
            worst_density = dens;
            for (int k = 0; k < 3; ++k) {
                worst_sets[k].clear();
                for (int i : pick[k]) worst_sets[k].push_back((*parts[k])[i]);
                std::sort(worst_sets[k].begin(), worst_sets[k].end());
            }
        }
    }
    if (worst >= 0) {
        out.delta_measured = worst;
        DeviationWitness w;
        w.subsets = worst_sets;
        w.density = worst_density;
        w.deviation = worst;
        out.witness = std::move(w);
    }
    out.regular = out.delta_measured <= delta + kEps;
    return out;
}

RegularityVerdict weak_regularity_audit(const Hypergraph3& h, const std::vector<int>& xs,
                                        const std::vector<int>& ys,
                                        const std::vector<int>& zs, double delta,
                                        long samples, const RngSpec& spec) {
    return weak_regularity_audit(h, xs, ys, zs, delta, weak_density(h, xs, ys, zs),
                                 samples, spec);
}

StrongVerdict strong_regularity_audit(const Hypergraph3& h, const Triad& p, double delta,
                                      double d, int r, long samples, const RngSpec& spec) {
    require_delta(delta);
    if (r < 1) throw std::invalid_argument("strong audit: need r >= 1");
    StrongVerdict out;
    out.delta = delta;
    out.d_ref = d;
    TriangleSet base(p);
    out.base_triangles = base.count();
    if (out.base_triangles == 0) {
        // No family can clear |∪ K_3(Q_i)| >= δ|K_3(P)| > 0; vacuously regular.
        out.regular = true;
        return out;
    }
    double threshold = delta * static_cast<double>(out.base_triangles);

    Rng rng(spec);
    auto eval_union = [&](TriangleSet& u) {
        double covered = static_cast<double>(u.count());
        if (covered + kEps < threshold || covered == 0) {
            ++out.families_skipped;
            return;
        }
        ++out.families_tested;
        double dens = static_cast<double>(u.count_in(h)) / covered;
        double dev = std::abs(dens - d);
        if (dev > out.delta_measured) out.delta_measured = dev;
    };

    // Family 0: the full triad itself (deterministic necessary condition).
    eval_union(base);

    for (long s = 1; s < samples; ++s) {
        std::optional<TriangleSet> u;
        for (int i = 0; i < r; ++i) {
            std::vector<VPair> kept;
            for (const auto& e : p.g.edges())
                if (rng.bernoulli(0.5)) kept.push_back(e);
            Graph2 q(p.g.n(), std::move(kept));
            TriangleSet ts(p, q);
            if (!u)
                u.emplace(std::move(ts));
            else
                *u |= ts;
        }
        eval_union(*u);
    }
    out.regular = out.delta_measured <= delta + kEps;
    return out;
}

FamilyCheck strong_family_check(const Hypergraph3& h, const Triad& p,
                                const std::vector<Graph2>& family, double delta,
                                double d) {
    require_delta(delta);
    FamilyCheck out;
    TriangleSet base(p);
    long total = base.count();
    if (total == 0 || family.empty()) return out;
    std::optional<TriangleSet> u;
    for (const Graph2& q : family) {
        TriangleSet ts(p, q);
        if (!u)
            u.emplace(std::move(ts));
        else
            *u |= ts;
    }
    out.union_triangles = u->count();
    double covered = static_cast<double>(out.union_triangles);
    if (out.union_triangles == 0 || covered + kEps < delta * static_cast<double>(total))
        return out;
    out.admissible = true;
    out.in_h = u->count_in(h);
    out.density = static_cast<double>(out.in_h) / covered;
    out.deviation = std::abs(out.density - d);
    out.violating = out.deviation > delta + kEps;
    return out;
}

}  // namespace hrl
