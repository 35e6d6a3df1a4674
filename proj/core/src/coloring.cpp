#include "hrl/coloring.hpp"

#include <stdexcept>

namespace hrl {

const char* colour_name(Colour c) { return c == Colour::red ? "red" : "blue"; }

Coloring2::Coloring2(std::shared_ptr<const Hypergraph3> host, std::vector<Colour> col)
    : host_(std::move(host)), col_(std::move(col)) {
    if (!host_) throw std::invalid_argument("Coloring2: null host");
    if (static_cast<long>(col_.size()) != host_->e())
        throw std::invalid_argument("Coloring2: colour vector length != edge count");
}

Coloring2 Coloring2::constant(std::shared_ptr<const Hypergraph3> host, Colour c) {
    if (!host) throw std::invalid_argument("Coloring2: null host");
    std::vector<Colour> col(static_cast<size_t>(host->e()), c);
    return Coloring2(std::move(host), std::move(col));
}

Colour Coloring2::at(const Triple& t) const {
    long r = host_->edge_rank(t);
    if (r < 0) throw std::invalid_argument("Coloring2: triple is not a host edge");
    return col_[static_cast<size_t>(r)];
}

Coloring2 Coloring2::with(const std::vector<Triple>& edges, Colour c) const {
    std::vector<Colour> col = col_;
    for (const auto& t : edges) {
        long r = host_->edge_rank(t);
        if (r < 0) throw std::invalid_argument("Coloring2::with: triple not a host edge");
        col[static_cast<size_t>(r)] = c;
    }
    return Coloring2(host_, std::move(col));
}

MajorityReport majority_colour(const Coloring2& psi, const std::vector<Triple>& scope) {
    MajorityReport rep;
    for (const auto& t : scope) {
        if (psi.at(t) == Colour::red)
            ++rep.red_count;
        else
            ++rep.blue_count;
    }
    rep.red_majority = rep.red_count >= rep.blue_count;
    rep.blue_majority = rep.blue_count >= rep.red_count;
    return rep;
}

Graph2 coloured_link(const Coloring2& psi, int v, const Graph2& carrier, Colour c) {
    std::vector<VPair> es;
    for (const auto& t : psi.host().edges()) {
        int pos = (t[0] == v) ? 0 : (t[1] == v) ? 1 : (t[2] == v) ? 2 : -1;
        if (pos < 0) continue;
        int u = (pos == 0) ? t[1] : t[0];
        int w = (pos == 2) ? t[1] : t[2];
        if (!carrier.has_edge(u, w)) continue;
        if (psi.at_rank(psi.host().edge_rank(t)) == c) es.push_back(make_pair(u, w));
    }
    return Graph2(carrier.n(), std::move(es));
}

std::pair<Graph2, Graph2> red_blue_links(const Coloring2& psi, int v,
                                         const Graph2& carrier) {
    return {coloured_link(psi, v, carrier, Colour::red),
            coloured_link(psi, v, carrier, Colour::blue)};
}

}  // namespace hrl
