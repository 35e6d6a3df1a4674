#include "hrl/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hrl {

VertexPartition::VertexPartition(int n_, std::vector<std::vector<int>> parts_)
    : n(n_), parts(std::move(parts_)) {
    part_of.assign(n, -1);
    for (size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) throw std::invalid_argument("VertexPartition: empty part");
        std::sort(parts[p].begin(), parts[p].end());
        for (int v : parts[p]) {
            if (v < 0 || v >= n)
                throw std::out_of_range("VertexPartition: vertex out of range");
            if (part_of[v] != -1)
                throw std::invalid_argument("VertexPartition: vertex in two parts");
            part_of[v] = static_cast<int>(p);
        }
    }
    for (int v = 0; v < n; ++v)
        if (part_of[v] == -1)
            throw std::invalid_argument("VertexPartition: vertex " + std::to_string(v) +
                                        " uncovered");
}

VertexPartition VertexPartition::trivial(int n) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return VertexPartition(n, {all});
}

VertexPartition VertexPartition::intervals(int n, int t) {
    if (t <= 0 || t > n) throw std::invalid_argument("intervals: need 0 < t <= n");
    std::vector<std::vector<int>> parts(t);
    int small = n / t, big_count = n % t;
    int at = 0;
    for (int p = 0; p < t; ++p) {
        int sz = small + (p >= t - big_count ? 1 : 0);
        for (int i = 0; i < sz; ++i) parts[p].push_back(at++);
    }
    return VertexPartition(n, std::move(parts));
}

bool VertexPartition::is_equitable() const {
    size_t lo = parts[0].size(), hi = lo;
    for (const auto& p : parts) {
        lo = std::min(lo, p.size());
        hi = std::max(hi, p.size());
    }
    return hi - lo <= 1;
}

bool VertexPartition::refines(const VertexPartition& c) const {
    if (c.n != n) return false;
    for (const auto& p : parts) {
        int target = c.part_of[p[0]];
        for (int v : p)
            if (c.part_of[v] != target) return false;
    }
    return true;
}

PairPartition::PairPartition(VertexPartition base_, std::vector<std::vector<Graph2>> cells_)
    : base(std::move(base_)), cells(std::move(cells_)) {
    if (static_cast<int>(cells.size()) != pair_count())
        throw std::invalid_argument("PairPartition: need one cell list per part pair");
    build_lookup();
}

void PairPartition::build_lookup() {
    int t = base.t();
    cell_lookup_.assign(cells.size(), {});
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            int pi = pair_index(i, j);
            const auto& vi = base.parts[i];
            const auto& vj = base.parts[j];
            auto& table = cell_lookup_[pi];
            table.assign(vi.size() * vj.size(), -1);
            std::vector<int> li(base.n, -1), lj(base.n, -1);
            for (size_t a = 0; a < vi.size(); ++a) li[vi[a]] = static_cast<int>(a);
            for (size_t b = 0; b < vj.size(); ++b) lj[vj[b]] = static_cast<int>(b);
            for (size_t c = 0; c < cells[pi].size(); ++c) {
                for (const auto& [u, v] : cells[pi][c].edges()) {
                    int a = li[u], b = lj[v];
                    if (a < 0 && b < 0) {
                        a = li[v];
                        b = lj[u];
                    } else if (a < 0) {
                        a = li[v];
                    } else if (b < 0) {
                        b = lj[u];
                    }
                    if (a < 0 || b < 0)
                        throw std::invalid_argument(
                            "PairPartition: cell edge not between its parts");
                    long slot = static_cast<long>(a) * vj.size() + b;
                    if (table[slot] != -1)
                        throw std::invalid_argument(
                            "PairPartition: pair covered by two cells");
                    table[slot] = static_cast<int>(c);
                }
            }
            for (long s = 0; s < static_cast<long>(table.size()); ++s)
                if (table[s] == -1)
                    throw std::invalid_argument("PairPartition: pair not covered");
        }
    }
}

PairPartition PairPartition::complete_cells(const VertexPartition& v, int n) {
    int t = v.t();
    std::vector<std::vector<Graph2>> cells(t * (t - 1) / 2);
    int at = 0;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            cells[at++] = {Graph2::complete_bipartite(n, v.parts[i], v.parts[j])};
    return PairPartition(v, std::move(cells));
}

int PairPartition::pair_index(int i, int j) const {
    int t = base.t();
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= t || i == j) throw std::out_of_range("pair_index");
    // pairs (0,1),(0,2),...,(0,t-1),(1,2),...
    return i * t - i * (i + 1) / 2 + (j - i - 1);
}

int PairPartition::cell_of(int u, int v) const {
    int i = base.part_of[u], j = base.part_of[v];
    if (i == j) throw std::invalid_argument("cell_of: pair inside one part");
    if (i > j) {
        std::swap(i, j);
        std::swap(u, v);
    }
    const auto& vi = base.parts[i];
    const auto& vj = base.parts[j];
    int a = static_cast<int>(std::lower_bound(vi.begin(), vi.end(), u) - vi.begin());
    int b = static_cast<int>(std::lower_bound(vj.begin(), vj.end(), v) - vj.begin());
    return cell_lookup_[pair_index(i, j)][static_cast<long>(a) * vj.size() + b];
}

bool PairPartition::is_equitable(int ell) const {
    for (const auto& lst : cells)
        if (static_cast<int>(lst.size()) != ell) return false;
    return true;
}

int PairPartition::max_cells_per_pair() const {
    size_t m = 0;
    for (const auto& lst : cells) m = std::max(m, lst.size());
    return static_cast<int>(m);
}

long PairPartition::total_cells() const {
    long c = 0;
    for (const auto& lst : cells) c += static_cast<long>(lst.size());
    return c;
}

bool PairPartition::refines(const PairPartition& c) const {
    if (!(base.n == c.base.n) || base.parts != c.base.parts) return false;
    for (size_t pi = 0; pi < cells.size(); ++pi) {
        for (const auto& cell : cells[pi]) {
            if (cell.e() == 0) continue;
            int target = c.cell_of(cell.edges()[0].first, cell.edges()[0].second);
            for (const auto& [u, v] : cell.edges())
                if (c.cell_of(u, v) != target) return false;
        }
    }
    return true;
}

Triad triad_of(const PairPartition& b, int i, int j, int k, int alpha, int beta,
               int gamma) {
    if (!(i < j && j < k)) throw std::invalid_argument("triad_of: need i<j<k");
    const auto& xy = b.cells[b.pair_index(i, j)].at(alpha);
    const auto& xz = b.cells[b.pair_index(i, k)].at(beta);
    const auto& yz = b.cells[b.pair_index(j, k)].at(gamma);
    return Triad::from_cells(b.base.parts[i], b.base.parts[j], b.base.parts[k], xy, xz,
                             yz);
}

}  // namespace hrl
