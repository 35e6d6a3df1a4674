#pragma once

#include <memory>
#include <vector>

#include "hrl/hypergraph.hpp"

namespace hrl {

enum class Colour : uint8_t { red = 0, blue = 1 };

inline Colour other(Colour c) { return c == Colour::red ? Colour::blue : Colour::red; }
const char* colour_name(Colour c);

// Two-colouring of the edges of a host 3-graph.  The host is shared and
// immutable; colours are indexed by the host's edge ranks.
class Coloring2 {
  public:
    Coloring2(std::shared_ptr<const Hypergraph3> host, std::vector<Colour> col);
    static Coloring2 constant(std::shared_ptr<const Hypergraph3> host, Colour c);

    const Hypergraph3& host() const { return *host_; }
    std::shared_ptr<const Hypergraph3> host_ptr() const { return host_; }

    Colour at(const Triple& t) const;
    Colour at_rank(long r) const { return col_[static_cast<size_t>(r)]; }
    const std::vector<Colour>& colours() const { return col_; }

    // Re-colour a set of host edges (triples must exist in the host).
    Coloring2 with(const std::vector<Triple>& edges, Colour c) const;

  private:
    std::shared_ptr<const Hypergraph3> host_;
    std::vector<Colour> col_;
};

struct MajorityReport {
    long red_count = 0;
    long blue_count = 0;
    bool red_majority = false;   // inclusive: ties set both flags
    bool blue_majority = false;
};

// Majority colour over a set of host edges (each must exist in the host).
MajorityReport majority_colour(const Coloring2& psi, const std::vector<Triple>& scope);

// Colour-c edges of the link of v, restricted to a carrier graph.
Graph2 coloured_link(const Coloring2& psi, int v, const Graph2& carrier, Colour c);

// Red and blue parts of the link of v restricted to a carrier; the two edge
// sets partition link_in(v, carrier).
std::pair<Graph2, Graph2> red_blue_links(const Coloring2& psi, int v,
                                         const Graph2& carrier);

}  // namespace hrl
