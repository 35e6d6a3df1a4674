// hrl: command-line front end for the 3-uniform hypergraph toolkit.
// One subcommand per task; --format selects text (default) or json output,
// sweeps additionally support csv.  All randomized subcommands take --seed
// and are deterministic for a fixed seed, independent of --threads.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hrl/cliques.hpp"
#include "hrl/coloring.hpp"
#include "hrl/density.hpp"
#include "hrl/experiments.hpp"
#include "hrl/hypergraph.hpp"
#include "hrl/io.hpp"
#include "hrl/janson.hpp"
#include "hrl/partition.hpp"
#include "hrl/partition_index.hpp"
#include "hrl/ramsey.hpp"
#include "hrl/random.hpp"
#include "hrl/rational.hpp"
#include "hrl/regularity.hpp"
#include "hrl/tuple_link.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
    uint64_t seed = 0;
    int threads = 1;
    std::string format = "text";
    std::string out;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        hrl::write_file(g.out, text);
    }
}

void emit_json(const GlobalOpts& g, const json& j) { emit(g, j.dump(2) + "\n"); }

void require_text_or_json(const GlobalOpts& g, const std::string& sub) {
    if (g.format == "csv")
        throw std::invalid_argument("csv output is only available for sweep; " + sub +
                                    " supports text or json");
}

// "p/q", an integer, or a plain decimal ("0.1" becomes exactly 1/10).
hrl::Rational parse_ratio(const std::string& s) {
    size_t dot = s.find('.');
    if (dot == std::string::npos) return hrl::Rational::from_string(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("cannot parse ratio '" + s + "'");
    hrl::Rational num = hrl::Rational::from_string(digits);
    hrl::Rational den(1);
    for (size_t i = 0; i < frac; ++i) den *= hrl::Rational(10);
    return num / den;
}

// Peek at the "n=<int> k=<2|3>" header of an edge-list file.
int sniff_k(const std::string& text) {
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        size_t kpos = line.find("k=");
        if (kpos == std::string::npos) break;
        return std::atoi(line.c_str() + kpos + 2);
    }
    throw std::invalid_argument("edge list is missing its 'n=<int> k=<2|3>' header");
}

hrl::Hypergraph3 load3(const std::string& path) {
    return hrl::parse_hypergraph3(hrl::read_file(path));
}

hrl::Graph2 load2(const std::string& path) {
    return hrl::parse_graph2(hrl::read_file(path));
}

// "clique:t=<T>" specs for search patterns.
hrl::Hypergraph3 parse_pattern(const std::string& spec) {
    const std::string prefix = "clique:t=";
    if (spec.rfind(prefix, 0) != 0)
        throw std::invalid_argument("pattern must look like clique:t=3, got '" + spec +
                                    "'");
    int t = std::atoi(spec.c_str() + prefix.size());
    if (t < 2) throw std::invalid_argument("pattern clique order must be >= 2");
    return hrl::linear_clique3(t);
}

// One vertex set per line, space-separated ids; '#' comments.
std::vector<std::vector<int>> parse_vertex_sets(const std::string& text) {
    std::vector<std::vector<int>> sets;
    size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::vector<int> set;
        const char* p = line.c_str();
        char* q = nullptr;
        while (true) {
            long v = std::strtol(p, &q, 10);
            if (q == p) break;
            if (v < 0) throw hrl::parse_error(lineno, "negative vertex id");
            set.push_back(static_cast<int>(v));
            p = q;
        }
        while (*p != '\0') {
            if (*p != ' ' && *p != '\t' && *p != '\r')
                throw hrl::parse_error(lineno, "unexpected characters");
            ++p;
        }
        if (!set.empty()) sets.push_back(std::move(set));
        if (end == text.size()) break;
    }
    return sets;
}

json certificate_json(const hrl::CopyCertificate& c) {
    json j;
    j["branch"] = c.branch;
    json apex = json::object();
    for (const auto& kv : c.apex)
        apex[std::to_string(kv.first.first) + "," + std::to_string(kv.first.second)] =
            kv.second;
    j["apex"] = apex;
    return j;
}

json edges_json(const hrl::Hypergraph3& h) {
    json j;
    j["n"] = h.n();
    j["k"] = 3;
    j["edges"] = json::array();
    for (const hrl::Triple& e : h.edges()) j["edges"].push_back({e[0], e[1], e[2]});
    return j;
}

json edges_json(const hrl::Graph2& g) {
    json j;
    j["n"] = g.n();
    j["k"] = 2;
    j["edges"] = json::array();
    for (const hrl::VPair& e : g.edges()) j["edges"].push_back({e.first, e.second});
    return j;
}

std::string outcome_name(hrl::SearchOutcome o) {
    switch (o) {
        case hrl::SearchOutcome::found: return "found";
        case hrl::SearchOutcome::absent: return "absent";
        case hrl::SearchOutcome::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string outcome_name(hrl::ArrowOutcome o) {
    switch (o) {
        case hrl::ArrowOutcome::arrows: return "arrows";
        case hrl::ArrowOutcome::colorable: return "colorable";
        case hrl::ArrowOutcome::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string fmt(double x) { return hrl::format_double(x); }

// ---------------------------------------------------------------- density --

struct DensityOpts {
    int clique_t = 0;
    int k = 3;
    std::string edges;
    std::string asym;
};

void run_density(const GlobalOpts& g, const DensityOpts& o) {
    require_text_or_json(g, "density");
    hrl::DensityWitness w;
    if (o.clique_t > 0) {
        if (o.k == 3) {
            w = hrl::max_local_density(hrl::linear_clique3(o.clique_t));
        } else {
            w = hrl::max_local_density(hrl::linear_clique2(o.clique_t));
        }
    } else if (!o.edges.empty()) {
        int k = sniff_k(hrl::read_file(o.edges));
        if (!o.asym.empty()) {
            if (k != 3)
                throw std::invalid_argument("asymmetric density needs two 3-graphs");
            w = hrl::asym_max_density(load3(o.edges), load3(o.asym));
        } else if (k == 3) {
            w = hrl::max_local_density(load3(o.edges));
        } else {
            w = hrl::max_local_density(load2(o.edges));
        }
    } else {
        throw std::invalid_argument("density needs --clique T or --edges FILE");
    }
    if (g.format == "json") {
        json j;
        j["value"] = w.value.str();
        j["e_count"] = w.e_count;
        j["v_count"] = w.v_count;
        j["unique_at_full"] = w.unique_at_full;
        j["witness_edges"] = w.edge_indices;
        emit_json(g, j);
    } else {
        emit(g, w.value.str() + "\n");
    }
}

// ----------------------------------------------------------------- clique --

void run_clique_gen(const GlobalOpts& g, int t, int k) {
    require_text_or_json(g, "clique gen");
    if (k == 3) {
        hrl::Hypergraph3 h = hrl::linear_clique3(t);
        if (g.format == "json")
            emit_json(g, edges_json(h));
        else
            emit(g, hrl::serialize(h));
    } else {
        hrl::Graph2 h = hrl::linear_clique2(t);
        if (g.format == "json")
            emit_json(g, edges_json(h));
        else
            emit(g, hrl::serialize(h));
    }
}

void run_clique_contains(const GlobalOpts& g, const std::string& edges, int t,
                         long budget) {
    require_text_or_json(g, "clique contains");
    hrl::CliqueSearch s = hrl::contains_linear_clique(load3(edges), t, budget);
    if (g.format == "json") {
        json j;
        j["outcome"] = outcome_name(s.outcome);
        j["branch_sets_tried"] = s.branch_sets_tried;
        j["assignment_nodes"] = s.assignment_nodes;
        j["certificate"] = s.copy ? certificate_json(*s.copy) : json(nullptr);
        emit_json(g, j);
    } else {
        std::string out = outcome_name(s.outcome) + "\n";
        if (s.copy) out += "certificate: " + certificate_json(*s.copy).dump() + "\n";
        emit(g, out);
    }
}

// ----------------------------------------------------------------- sample --

void run_sample(const GlobalOpts& g, int n, double p) {
    require_text_or_json(g, "sample");
    hrl::Hypergraph3 h = hrl::sample_uniform_3graph(n, p, hrl::RngSpec{g.seed, 0});
    if (g.format == "json")
        emit_json(g, edges_json(h));
    else
        emit(g, hrl::serialize(h));
}

// ------------------------------------------------------------------ arrow --

struct ArrowOpts {
    std::string edges, f1, f2, exclude1, exclude2;
    long budget = 20'000'000;
};

void run_arrow(const GlobalOpts& g, const ArrowOpts& o) {
    require_text_or_json(g, "arrow");
    hrl::Hypergraph3 host = load3(o.edges);
    hrl::Hypergraph3 f1 = parse_pattern(o.f1);
    hrl::Hypergraph3 f2 = parse_pattern(o.f2);
    hrl::ArrowVerdict v;
    if (o.exclude1.empty() && o.exclude2.empty()) {
        v = hrl::decide_arrow(host, f1, f2, o.budget);
    } else {
        std::vector<std::vector<int>> e1, e2;
        if (!o.exclude1.empty()) e1 = parse_vertex_sets(hrl::read_file(o.exclude1));
        if (!o.exclude2.empty()) e2 = parse_vertex_sets(hrl::read_file(o.exclude2));
        v = hrl::family_ramsey_audit(host, f1, f2, e1, e2, o.budget);
    }
    json cert(nullptr);
    if (v.good_coloring) {
        std::string colours;
        for (hrl::Colour c : *v.good_coloring)
            colours += c == hrl::Colour::red ? 'r' : 'b';
        cert = json{{"coloring", colours}};
    }
    if (g.format == "json") {
        json j;
        j["outcome"] = outcome_name(v.outcome);
        j["arrows"] = v.outcome == hrl::ArrowOutcome::inconclusive ? json(nullptr)
                                                                   : json(v.arrows);
        j["explored"] = v.explored;
        j["copies_f1"] = v.copies_f1;
        j["copies_f2"] = v.copies_f2;
        j["certificate"] = cert;
        emit_json(g, j);
    } else {
        std::string out = outcome_name(v.outcome) + "\n";
        out += "explored = " + std::to_string(v.explored) + "\n";
        out += "copies_f1 = " + std::to_string(v.copies_f1) + "\n";
        out += "copies_f2 = " + std::to_string(v.copies_f2) + "\n";
        if (!cert.is_null()) out += "coloring = " + cert["coloring"].get<std::string>() + "\n";
        emit(g, out);
    }
}

// ------------------------------------------------------------- regularity --

struct RegOpts {
    std::string edges, parts, pair_edges;
    std::string d;  // empty: audit against own density where supported
    double delta = 0.1;
    std::string mode = "auto";  // auto | exact | sampled
    long samples = 4000;
    int r = 2;
    bool force = false;
};

hrl::VertexPartition load_parts(const std::string& path, int n, size_t need) {
    hrl::VertexPartition v = hrl::load_partition(path, n);
    if (v.parts.size() < need)
        throw std::invalid_argument("partition has " + std::to_string(v.parts.size()) +
                                    " parts; this audit needs " + std::to_string(need));
    return v;
}

json verdict_json(const hrl::RegularityVerdict& v) {
    json j;
    j["regular"] = v.regular;
    j["delta"] = v.delta;
    j["d_ref"] = v.d_ref;
    j["delta_measured"] = v.delta_measured;
    j["tested"] = v.tested;
    j["exhaustive"] = v.exhaustive;
    if (v.witness) {
        j["witness"] = {{"subsets", v.witness->subsets},
                        {"density", v.witness->density},
                        {"deviation", v.witness->deviation}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

std::string verdict_text(const hrl::RegularityVerdict& v) {
    std::string out = std::string(v.regular ? "regular" : "irregular") + "\n";
    out += "d_ref = " + fmt(v.d_ref) + "\n";
    out += "delta_measured = " + fmt(v.delta_measured) + "\n";
    out += "tested = " + std::to_string(v.tested) + "\n";
    out += std::string("exhaustive = ") + (v.exhaustive ? "yes" : "no") + "\n";
    return out;
}

void enforce_mode(const RegOpts& o, bool exhaustive) {
    if (o.mode == "exact" && !exhaustive)
        throw std::runtime_error(
            "exact mode requested but the instance is too large for exhaustive "
            "enumeration");
}

void run_regularity_pair(const GlobalOpts& g, const RegOpts& o) {
    hrl::Graph2 host = load2(o.edges);
    hrl::VertexPartition parts = load_parts(o.parts, host.n(), 2);
    hrl::BipartitePair pair =
        hrl::BipartitePair::from(host, parts.parts[0], parts.parts[1]);
    hrl::RegularityVerdict v =
        o.d.empty()
            ? hrl::pair_regularity_audit(pair, o.delta, o.samples,
                                         hrl::RngSpec{g.seed, 0})
            : hrl::pair_regularity_audit(pair, o.delta, parse_ratio(o.d).to_double(),
                                         o.samples, hrl::RngSpec{g.seed, 0});
    enforce_mode(o, v.exhaustive);
    if (g.format == "json")
        emit_json(g, verdict_json(v));
    else
        emit(g, verdict_text(v));
}

void run_regularity_weak(const GlobalOpts& g, const RegOpts& o) {
    hrl::Hypergraph3 h = load3(o.edges);
    hrl::VertexPartition parts = load_parts(o.parts, h.n(), 3);
    const auto& xs = parts.parts[0];
    const auto& ys = parts.parts[1];
    const auto& zs = parts.parts[2];
    hrl::RegularityVerdict v =
        o.d.empty()
            ? hrl::weak_regularity_audit(h, xs, ys, zs, o.delta, o.samples,
                                         hrl::RngSpec{g.seed, 0})
            : hrl::weak_regularity_audit(h, xs, ys, zs, o.delta,
                                         parse_ratio(o.d).to_double(), o.samples,
                                         hrl::RngSpec{g.seed, 0});
    enforce_mode(o, v.exhaustive);
    if (g.format == "json")
        emit_json(g, verdict_json(v));
    else
        emit(g, verdict_text(v));
}

hrl::Triad triad_from(const hrl::Graph2& host, const hrl::VertexPartition& parts) {
    const auto& x = parts.parts[0];
    const auto& y = parts.parts[1];
    const auto& z = parts.parts[2];
    hrl::VBitset bx = hrl::VBitset::of(host.n(), x);
    hrl::VBitset by = hrl::VBitset::of(host.n(), y);
    hrl::VBitset bz = hrl::VBitset::of(host.n(), z);
    return hrl::Triad::from_cells(x, y, z, host.cross_restriction(bx, by),
                                  host.cross_restriction(bx, bz),
                                  host.cross_restriction(by, bz));
}

void run_regularity_triad(const GlobalOpts& g, const RegOpts& o) {
    if (o.d.empty()) throw std::invalid_argument("triad window needs --d");
    hrl::Graph2 host = load2(o.edges);
    hrl::VertexPartition parts = load_parts(o.parts, host.n(), 3);
    hrl::Triad triad = triad_from(host, parts);
    double d = parse_ratio(o.d).to_double();

    // The window is only meaningful on certified (delta,d)-regular pairs.
    const char* names[3] = {"xy", "xz", "yz"};
    hrl::BipartitePair pairs[3] = {
        hrl::BipartitePair::from(host, triad.x, triad.y),
        hrl::BipartitePair::from(host, triad.x, triad.z),
        hrl::BipartitePair::from(host, triad.y, triad.z)};
    json audits = json::object();
    bool all_regular = true;
    for (int i = 0; i < 3; ++i) {
        hrl::RegularityVerdict v = hrl::pair_regularity_audit(
            pairs[i], o.delta, d, o.samples, hrl::RngSpec{g.seed, static_cast<uint64_t>(i)});
        enforce_mode(o, v.exhaustive);
        audits[names[i]] = verdict_json(v);
        all_regular = all_regular && v.regular;
    }
    if (!all_regular && !o.force)
        throw std::runtime_error(
            "triad pairs failed the regularity audit; pass --force to compute the "
            "window anyway");

    hrl::WindowAudit w = hrl::triad_triangle_audit(triad, o.delta, d);
    if (g.format == "json") {
        json j;
        j["pair_audits"] = audits;
        j["count"] = w.count;
        j["lower"] = w.window.lo;
        j["upper"] = w.window.hi;
        j["inside"] = w.inside;
        j["forced"] = !all_regular;
        emit_json(g, j);
    } else {
        std::string out;
        out += "count = " + std::to_string(w.count) + "\n";
        out += "window = [" + fmt(w.window.lo) + ", " + fmt(w.window.hi) + "]\n";
        out += std::string("inside = ") + (w.inside ? "yes" : "no") + "\n";
        if (!all_regular) out += "warning: pairs uncertified (--force)\n";
        emit(g, out);
    }
}

void run_regularity_strong(const GlobalOpts& g, const RegOpts& o) {
    if (o.d.empty()) throw std::invalid_argument("strong audit needs --d");
    if (o.mode == "exact")
        throw std::invalid_argument(
            "the strong audit is search-based; there is no exact mode");
    hrl::Hypergraph3 h = load3(o.edges);
    hrl::VertexPartition parts = load_parts(o.parts, h.n(), 3);
    hrl::Triad triad =
        o.pair_edges.empty()
            ? hrl::Triad::complete(parts.parts[0], parts.parts[1], parts.parts[2], h.n())
            : triad_from(load2(o.pair_edges), parts);
    hrl::StrongVerdict v =
        hrl::strong_regularity_audit(h, triad, o.delta, parse_ratio(o.d).to_double(),
                                     o.r, o.samples, hrl::RngSpec{g.seed, 0});
    if (g.format == "json") {
        json j;
        j["regular"] = v.regular;
        j["delta_measured"] = v.delta_measured;
        j["families_tested"] = v.families_tested;
        j["families_skipped"] = v.families_skipped;
        j["base_triangles"] = v.base_triangles;
        emit_json(g, j);
    } else {
        std::string out =
            std::string(v.regular ? "no violation found" : "irregular") + "\n";
        out += "delta_measured = " + fmt(v.delta_measured) + "\n";
        out += "families_tested = " + std::to_string(v.families_tested) + "\n";
        out += "base_triangles = " + std::to_string(v.base_triangles) + "\n";
        emit(g, out);
    }
}

// ----------------------------------------------------------------- refine --

struct RefineOpts {
    std::string edges, trace;
    double delta3 = 0.1;
    int ell0 = 1;
    int t0 = 2;
    int max_iter = 0;
};

const char* stop_reason_name(hrl::StopReason r) {
    switch (r) {
        case hrl::StopReason::regular: return "regular";
        case hrl::StopReason::iteration_cap: return "iteration_cap";
        case hrl::StopReason::budget: return "budget";
    }
    return "?";
}

void run_refine(const GlobalOpts& g, const RefineOpts& o) {
    require_text_or_json(g, "refine");
    hrl::Hypergraph3 h = load3(o.edges);
    hrl::PipelineCaps caps;
    caps.max_iterations = o.max_iter;
    caps.threads = g.threads;
    hrl::PipelineResult res =
        hrl::ghrl_pipeline(h, o.delta3, o.ell0, o.t0, caps, hrl::RngSpec{g.seed, 0});
    const hrl::RefinementTrace& tr = res.trace;

    if (!o.trace.empty()) {
        json t;
        t["iterations"] = json::array();
        for (const hrl::IterationRecord& it : tr.iterations) {
            t["iterations"].push_back(
                {{"index_before", it.index_before.str()},
                 {"index_after_increment", it.index_after_increment.str()},
                 {"beta", it.beta.str()},
                 {"slack", it.slack.str()},
                 {"index_after", it.index_after.str()}});
        }
        t["reason"] = stop_reason_name(tr.reason);
        hrl::write_file(o.trace, t.dump(2) + "\n");
    }

    if (g.format == "json") {
        json j;
        j["reason"] = stop_reason_name(tr.reason);
        j["iterations"] = tr.iterations.size();
        j["initial_index"] = tr.initial_index.str();
        j["final_index"] = tr.final_index.str();
        j["ell_final"] = tr.ell_final;
        j["parts"] = res.v.t();
        j["equitable_pass"] = tr.equitable_pass;
        j["cell_pass"] = tr.cell_pass;
        j["weak_pass"] = tr.weak_pass;
        j["strong_pass"] = tr.strong_pass;
        emit_json(g, j);
    } else {
        std::string out;
        out += std::string("reason = ") + stop_reason_name(tr.reason) + "\n";
        out += "iterations = " + std::to_string(tr.iterations.size()) + "\n";
        out += "index: " + tr.initial_index.str() + " -> " + tr.final_index.str() + "\n";
        out += "parts = " + std::to_string(res.v.t()) +
               ", ell = " + std::to_string(tr.ell_final) + "\n";
        out += std::string("audits: equitable=") + (tr.equitable_pass ? "y" : "n") +
               " cell=" + (tr.cell_pass ? "y" : "n") +
               " weak=" + (tr.weak_pass ? "y" : "n") +
               " strong=" + (tr.strong_pass ? "y" : "n") + "\n";
        emit(g, out);
    }
}

// ------------------------------------------------------------ tuple-audit --

struct TupleOpts {
    std::string edges, parts, pair_edges;
    int t = 2;
    std::string d3 = "1/2", d2 = "1", eps = "0.1";
    std::string mode = "auto";
    long samples = 200'000;
};

void run_tuple_audit(const GlobalOpts& g, const TupleOpts& o) {
    require_text_or_json(g, "tuple-audit");
    hrl::Hypergraph3 h = load3(o.edges);
    hrl::VertexPartition parts = load_parts(o.parts, h.n(), 3);
    hrl::Triad triad =
        o.pair_edges.empty()
            ? hrl::Triad::complete(parts.parts[0], parts.parts[1], parts.parts[2], h.n())
            : triad_from(load2(o.pair_edges), parts);
    hrl::CensusRoute route = hrl::CensusRoute::automatic;
    if (o.mode == "exhaustive") route = hrl::CensusRoute::exhaustive;
    if (o.mode == "sampled") route = hrl::CensusRoute::sampled;
    hrl::TupleAuditReport r = hrl::tuple_band_audit(
        h, triad, o.t, parse_ratio(o.d3), parse_ratio(o.d2), parse_ratio(o.eps), route,
        hrl::TupleMode::ordered, o.samples, hrl::RngSpec{g.seed, 0}, g.threads);
    if (g.format == "json") {
        json j;
        j["t"] = r.t;
        j["band_center"] = r.band_center.str();
        j["band_radius"] = r.band_radius.str();
        j["bad_fraction_low"] = r.bad_fraction_low;
        j["bad_fraction_high"] = r.bad_fraction_high;
        j["tuples_tested"] = r.tuples_tested;
        j["exhaustive"] = r.exhaustive;
        j["lower_pass"] = r.lower_pass;
        j["pass"] = r.pass;
        emit_json(g, j);
    } else {
        std::string out = std::string(r.pass ? "pass" : "fail") + "\n";
        out += "band = " + r.band_center.str() + " +- " + r.band_radius.str() + "\n";
        out += "bad_low = " + fmt(r.bad_fraction_low) +
               ", bad_high = " + fmt(r.bad_fraction_high) + "\n";
        out += "tuples_tested = " + std::to_string(r.tuples_tested) + "\n";
        out += std::string("exhaustive = ") + (r.exhaustive ? "yes" : "no") + "\n";
        emit(g, out);
    }
}

// ----------------------------------------------------------------- janson --

struct JansonOpts {
    std::string edges, pattern = "clique:t=2";
    double p = 0.5;
    long budget = 50'000'000;
    long mc_trials = 0;
};

void run_janson(const GlobalOpts& g, const JansonOpts& o) {
    require_text_or_json(g, "janson");
    hrl::Hypergraph3 host = load3(o.edges);
    hrl::Hypergraph3 pattern = parse_pattern(o.pattern);
    hrl::CopyList copies = hrl::pattern_copies(host, pattern, o.budget);
    if (!copies.complete)
        throw std::runtime_error("copy enumeration exceeded its budget; raise --budget");
    hrl::JansonInput input{copies.edge_sets, o.p};
    hrl::JansonParameters params = hrl::janson_parameters(input, g.threads);
    double bound = hrl::janson_bound(params.lambda, params.delta);

    // The exact nonexistence probability is only enumerable on small unions.
    std::vector<long> support;
    for (const auto& c : copies.edge_sets) support.insert(support.end(), c.begin(), c.end());
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::optional<hrl::NonexistenceEstimate> est;
    if (support.size() <= 20) {
        est = hrl::exact_nonexistence_oracle(input);
    } else if (o.mc_trials > 0) {
        est = hrl::exact_nonexistence_oracle(input, o.mc_trials,
                                             hrl::RngSpec{g.seed, 0});
    }

    if (g.format == "json") {
        json j;
        j["copies"] = copies.edge_sets.size();
        j["support"] = support.size();
        j["p"] = o.p;
        j["lambda"] = params.lambda;
        j["delta"] = params.delta;
        j["bound"] = bound;
        if (est) {
            j["nonexistence"] = {{"probability", est->probability},
                                 {"exact", est->exact},
                                 {"trials", est->trials},
                                 {"ci_low", est->ci_low},
                                 {"ci_high", est->ci_high}};
        } else {
            j["nonexistence"] = nullptr;
        }
        emit_json(g, j);
    } else {
        std::string out;
        out += "copies = " + std::to_string(copies.edge_sets.size()) + "\n";
        out += "lambda = " + fmt(params.lambda) + "\n";
        out += "delta = " + fmt(params.delta) + "\n";
        out += "bound = " + fmt(bound) + "\n";
        if (est && est->exact)
            out += "exact_nonexistence = " + fmt(est->probability) + "\n";
        else if (est)
            out += "mc_nonexistence = " + fmt(est->probability) + " [" +
                   fmt(est->ci_low) + ", " + fmt(est->ci_high) + "]\n";
        emit(g, out);
    }
}

// ------------------------------------------------------------------ sweep --

struct SweepOpts {
    hrl::SweepConfig config;
    std::vector<double> grid;
    std::vector<double> c_list;
    std::string rho;
    int rho_clique = 0;
    int rho_asym = 0;
    std::string target = "containment";
    std::string seed_host = "tripartite";
    std::string seed_host_path;
    double seed_host_density = 1.0;
};

void run_sweep_cmd(const GlobalOpts& g, SweepOpts& o) {
    hrl::SweepConfig& c = o.config;
    c.seed = g.seed;
    c.target = hrl::sweep_target_from_string(o.target);
    c.seed_host.kind = hrl::seed_host_kind_from_string(o.seed_host);
    c.seed_host.path = o.seed_host_path;
    c.seed_host.density = o.seed_host_density;

    if (!o.grid.empty() && !o.c_list.empty())
        throw std::invalid_argument("give either --grid or --c-list, not both");
    if (!o.grid.empty()) {
        c.p_grid = o.grid;
    } else if (!o.c_list.empty()) {
        hrl::Rational rho;
        int sources = (!o.rho.empty()) + (o.rho_clique > 0) + (o.rho_asym > 0);
        if (sources != 1)
            throw std::invalid_argument(
                "--c-list needs exactly one of --rho, --rho-clique, --rho-asym");
        if (!o.rho.empty()) {
            rho = parse_ratio(o.rho);
        } else if (o.rho_clique > 0) {
            rho = hrl::max_local_density(hrl::linear_clique3(o.rho_clique)).value;
        } else {
            if (o.rho_asym % 2 != 0)
                throw std::invalid_argument("--rho-asym needs an even clique order");
            rho = hrl::asym_max_density(hrl::linear_clique3(o.rho_asym),
                                        hrl::linear_clique3(o.rho_asym / 2))
                      .value;
        }
        c.p_grid = hrl::threshold_grid(o.c_list, rho, c.n);
    } else {
        throw std::invalid_argument("sweep needs --grid or --c-list");
    }

    hrl::SweepReport report = hrl::run_sweep(c, g.threads);
    if (g.format == "csv") {
        emit(g, hrl::sweep_csv(report));
    } else if (g.format == "json") {
        emit(g, hrl::sweep_json(report));
    } else {
        std::string out;
        for (const hrl::SweepPoint& pt : report.points) {
            out += "p=" + fmt(pt.p) + "  successes=" + std::to_string(pt.successes) +
                   "/" + std::to_string(pt.trials) + "  estimate=" + fmt(pt.estimate) +
                   "  ci=[" + fmt(pt.ci_low) + ", " + fmt(pt.ci_high) + "]" +
                   "  inconclusive=" + std::to_string(pt.inconclusive);
            if (pt.all_inconclusive) out += "  ALL-INCONCLUSIVE";
            out += "\n";
        }
        auto viol = hrl::monotonicity_violation(report.points);
        out += std::string("monotone_within_ci = ") + (viol ? "no" : "yes");
        if (viol)
            out += " (points " + std::to_string(viol->first) + " and " +
                   std::to_string(viol->second) + ")";
        out += "\n";
        out += "wall_seconds = " + fmt(report.wall_seconds) + "\n";
        emit(g, out);
    }
}

// ------------------------------------------------------------------ embed --

void run_embed(const GlobalOpts& g, int r, int s, bool randomize) {
    require_text_or_json(g, "embed");
    int n = 3 * s;
    hrl::VertexPartition parts = hrl::VertexPartition::intervals(n, 3);
    auto place = [&](int part) {
        std::vector<int> verts = parts.parts[part];
        if (randomize) {
            hrl::Rng rng(hrl::substream(hrl::RngSpec{g.seed, 0},
                                        static_cast<uint64_t>(part)));
            rng.shuffle(verts);
        }
        long need = hrl::linear_clique_vertex_count(r, 3);
        if (static_cast<long>(verts.size()) < need)
            throw std::invalid_argument("part size " + std::to_string(verts.size()) +
                                        " cannot hold a " + std::to_string(r) +
                                        "-branch clique");
        hrl::CopyCertificate cert;
        cert.branch.assign(verts.begin(), verts.begin() + r);
        size_t at = r;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) cert.apex[{i, j}] = verts[at++];
        return cert;
    };
    hrl::TripleCliqueEmbedding emb = hrl::embed_triple_cliques(
        n, parts.parts[0], parts.parts[1], parts.parts[2], place(0), place(1),
        place(2));
    std::string why;
    bool ok = hrl::verify_copy(emb.host, emb.result, &why);
    if (g.format == "json") {
        json j;
        j["t"] = emb.result.t();
        j["certificate"] = certificate_json(emb.result);
        j["verified"] = ok;
        j["host_n"] = emb.host.n();
        j["host_edges"] = emb.host.e();
        if (!ok) j["why"] = why;
        emit_json(g, j);
    } else {
        std::string out;
        out += "t = " + std::to_string(emb.result.t()) + "\n";
        out += std::string("verified = ") + (ok ? "yes" : "no") + "\n";
        if (!ok) out += "why = " + why + "\n";
        out += "certificate: " + certificate_json(emb.result).dump() + "\n";
        emit(g, out);
    }
    if (!ok) throw std::runtime_error("embedding failed verification");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-uniform hypergraph toolkit: densities, linear cliques, "
                 "regularity audits, partition refinement, Ramsey arrows, moment "
                 "bounds, and Monte Carlo threshold sweeps"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a key = value file");
    app.set_version_flag("--version", hrl::library_version());

    GlobalOpts g;
    app.add_option("--seed", g.seed, "master seed for all randomized work");
    app.add_option("--threads", g.threads, "worker threads (results are unaffected)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", g.out, "write output to this file instead of stdout");

    auto sub = [&](const std::string& name, const std::string& desc) {
        CLI::App* s = app.add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    // density
    DensityOpts dopt;
    CLI::App* density = sub("density", "maximal local density, exact rational");
    density->add_option("--clique", dopt.clique_t, "linear clique branch order");
    density->add_option("--k", dopt.k, "uniformity for --clique")
        ->check(CLI::IsMember({2, 3}));
    density->add_option("--edges", dopt.edges, "edge-list file");
    density->add_option("--asym", dopt.asym,
                        "second 3-graph: asymmetric density of (edges, asym)");
    density->callback([&] { run_density(g, dopt); });

    // clique gen | contains
    CLI::App* clique = sub("clique", "linear clique generation and search");
    clique->require_subcommand(1);
    int gen_t = 3, gen_k = 3;
    CLI::App* gen = clique->add_subcommand("gen", "emit the canonical clique");
    gen->fallthrough();
    gen->add_option("--t", gen_t, "branch order")->check(CLI::Range(2, 10000));
    gen->add_option("--k", gen_k, "uniformity")->check(CLI::IsMember({2, 3}));
    gen->callback([&] { run_clique_gen(g, gen_t, gen_k); });
    std::string contains_edges;
    int contains_t = 3;
    long contains_budget = 50'000'000;
    CLI::App* contains = clique->add_subcommand("contains", "exhaustive copy search");
    contains->fallthrough();
    contains->add_option("--edges", contains_edges, "host 3-graph")->required();
    contains->add_option("--t", contains_t, "branch order")->check(CLI::Range(2, 64));
    contains->add_option("--budget", contains_budget, "branch-set budget");
    contains->callback([&] { run_clique_contains(g, contains_edges, contains_t,
                                                 contains_budget); });

    // sample
    int sample_n = 12;
    double sample_p = 0.5;
    CLI::App* sample = sub("sample", "binomial random 3-graph");
    sample->add_option("--n", sample_n, "vertex count")->check(CLI::PositiveNumber);
    sample->add_option("--p", sample_p, "edge probability")
        ->check(CLI::Range(0.0, 1.0));
    sample->callback([&] { run_sample(g, sample_n, sample_p); });

    // arrow
    ArrowOpts aopt;
    CLI::App* arrow = sub("arrow", "exact Ramsey arrow decision");
    arrow->add_option("--edges", aopt.edges, "host 3-graph")->required();
    arrow->add_option("--f1", aopt.f1, "red pattern, e.g. clique:t=3")->required();
    arrow->add_option("--f2", aopt.f2, "blue pattern")->required();
    arrow->add_option("--exclude1", aopt.exclude1, "vertex sets whose f1 copies are exempt");
    arrow->add_option("--exclude2", aopt.exclude2, "vertex sets whose f2 copies are exempt");
    arrow->add_option("--budget", aopt.budget, "search-node budget");
    arrow->callback([&] { run_arrow(g, aopt); });

    // regularity pair|weak|strong|triad
    RegOpts ropt;
    CLI::App* reg = sub("regularity", "regularity audits");
    reg->require_subcommand(1);
    auto reg_common = [&](CLI::App* s, bool with_pair_edges) {
        s->fallthrough();
        s->add_option("--edges", ropt.edges, "edge-list file")->required();
        s->add_option("--parts", ropt.parts, "partition file")->required();
        s->add_option("--d", ropt.d, "reference density (p/q or decimal)");
        s->add_option("--delta", ropt.delta, "regularity parameter");
        s->add_option("--mode", ropt.mode, "auto, exact, or sampled")
            ->check(CLI::IsMember({"auto", "exact", "sampled"}));
        s->add_option("--samples", ropt.samples, "sampling effort");
        if (with_pair_edges)
            s->add_option("--pair-edges", ropt.pair_edges,
                          "triad 2-graph (default: complete tripartite)");
    };
    CLI::App* rp = reg->add_subcommand("pair", "(delta,d) bipartite pair audit");
    reg_common(rp, false);
    rp->callback([&] { run_regularity_pair(g, ropt); });
    CLI::App* rw = reg->add_subcommand("weak", "weak tripartite audit of a 3-graph");
    reg_common(rw, false);
    rw->callback([&] { run_regularity_weak(g, ropt); });
    CLI::App* rt = reg->add_subcommand("triad", "triangle-count window of a triad");
    reg_common(rt, false);
    rt->add_flag("--force", ropt.force, "compute the window even if pairs fail");
    rt->callback([&] { run_regularity_triad(g, ropt); });
    CLI::App* rs = reg->add_subcommand("strong", "(delta,d,r) witness search");
    reg_common(rs, true);
    rs->add_option("--r", ropt.r, "family size")->check(CLI::PositiveNumber);
    rs->callback([&] { run_regularity_strong(g, ropt); });

    // refine
    RefineOpts fopt;
    CLI::App* refine = sub("refine", "index-driven partition refinement pipeline");
    refine->add_option("--edges", fopt.edges, "host 3-graph")->required();
    refine->add_option("--delta3", fopt.delta3, "target triad regularity");
    refine->add_option("--ell0", fopt.ell0, "initial cells per pair")
        ->check(CLI::PositiveNumber);
    refine->add_option("--t0", fopt.t0, "initial part count")
        ->check(CLI::PositiveNumber);
    refine->add_option("--max-iter", fopt.max_iter,
                       "iteration cap (0: ceil(8/delta3^4))");
    refine->add_option("--trace", fopt.trace, "write the per-iteration ledger here");
    refine->callback([&] { run_refine(g, fopt); });

    // tuple-audit
    TupleOpts topt;
    CLI::App* tuple = sub("tuple-audit", "joint-link band census over X-tuples");
    tuple->add_option("--edges", topt.edges, "host 3-graph")->required();
    tuple->add_option("--parts", topt.parts, "partition file (3 parts)")->required();
    tuple->add_option("--t", topt.t, "tuple length")->check(CLI::Range(0, 16));
    tuple->add_option("--d3", topt.d3, "3-graph density (p/q or decimal)");
    tuple->add_option("--d2", topt.d2, "pair density");
    tuple->add_option("--eps", topt.eps, "band slack");
    tuple->add_option("--mode", topt.mode, "auto, exhaustive, or sampled")
        ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
    tuple->add_option("--samples", topt.samples, "sampled-mode tuple draws");
    tuple->add_option("--pair-edges", topt.pair_edges,
                      "triad 2-graph (default: complete tripartite)");
    tuple->callback([&] { run_tuple_audit(g, topt); });

    // janson
    JansonOpts jopt;
    CLI::App* janson = sub("janson", "moment bound for pattern nonexistence");
    janson->add_option("--edges", jopt.edges, "host 3-graph")->required();
    janson->add_option("--pattern", jopt.pattern, "copy family, e.g. clique:t=2");
    janson->add_option("--p", jopt.p, "edge retention probability")
        ->check(CLI::Range(0.0, 1.0));
    janson->add_option("--budget", jopt.budget, "copy enumeration budget");
    janson->add_option("--mc-trials", jopt.mc_trials,
                       "Monte Carlo trials when the support exceeds 20");
    janson->callback([&] { run_janson(g, jopt); });

    // sweep
    SweepOpts sopt;
    CLI::App* sweep = sub("sweep", "Monte Carlo probability sweep over a p-grid");
    sweep->add_option("--n", sopt.config.n, "vertex count")->check(CLI::PositiveNumber);
    sweep->add_option("--t", sopt.config.t, "clique branch order");
    sweep->add_option("--t2", sopt.config.t2, "second order (0: t/2)");
    sweep->add_option("--trials", sopt.config.trials_per_point, "trials per grid point");
    sweep->add_option("--grid", sopt.grid, "explicit probabilities")->delimiter(',');
    sweep->add_option("--c-list", sopt.c_list, "grid constants C for C*n^(-1/rho)")
        ->delimiter(',');
    sweep->add_option("--rho", sopt.rho, "grid exponent as p/q or decimal");
    sweep->add_option("--rho-clique", sopt.rho_clique,
                      "derive rho from the clique density of this order");
    sweep->add_option("--rho-asym", sopt.rho_asym,
                      "derive rho from the asymmetric (t, t/2) density");
    sweep->add_option("--target", sopt.target, "what each trial decides")
        ->check(CLI::IsMember({"containment", "arrow_symmetric", "arrow_asymmetric"}));
    sweep->add_option("--seed-host", sopt.seed_host, "seed hypergraph kind")
        ->check(CLI::IsMember({"tripartite", "file", "tripartite_density"}));
    sweep->add_option("--seed-host-path", sopt.seed_host_path, "file seed host");
    sweep->add_option("--seed-host-density", sopt.seed_host_density,
                      "density for tripartite_density")
        ->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--budget", sopt.config.budget, "per-trial decision budget");
    sweep->callback([&] { run_sweep_cmd(g, sopt); });

    // embed
    int embed_r = 2, embed_s = 16;
    bool embed_randomize = false;
    CLI::App* embed = sub("embed", "merge three part-local cliques into one");
    embed->add_option("--r", embed_r, "branch order of the part cliques")
        ->check(CLI::Range(2, 64));
    embed->add_option("--s", embed_s, "part size")->check(CLI::PositiveNumber);
    embed->add_flag("--randomize", embed_randomize, "place the part cliques randomly");
    embed->callback([&] { run_embed(g, embed_r, embed_s, embed_randomize); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "hrl: %s\n", e.what());
        return 1;
    }
    return 0;
}
