#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hrl/hypergraph.hpp"
#include "hrl/rational.hpp"
#include "hrl/stats.hpp"

namespace hrl {

// Version string embedded in machine-readable reports.
const char* library_version();

// What a single trial decides on the perturbed host Γ = seed ∪ random:
//   containment       Γ contains a t-branch linear clique
//   arrow_symmetric   Γ arrows (clique_t, clique_t)
//   arrow_asymmetric  Γ arrows (clique_t, clique_t2)
enum class SweepTarget { containment, arrow_symmetric, arrow_asymmetric };
std::string to_string(SweepTarget target);
SweepTarget sweep_target_from_string(const std::string& s);

// Seed host selection.  `tripartite` is the complete tripartite 3-graph on
// near-equal interval parts; `tripartite_density` keeps each of its edges
// independently with probability `density` (drawn once per sweep from the
// sweep seed's stream 0, so the host is part of the reproducible state);
// `file` loads an edge list from `path`.
enum class SeedHostKind { tripartite, file, tripartite_density };
std::string to_string(SeedHostKind kind);
SeedHostKind seed_host_kind_from_string(const std::string& s);

struct SeedHostSpec {
    SeedHostKind kind = SeedHostKind::tripartite;
    std::string path;      // kind == file
    double density = 1.0;  // kind == tripartite_density

    bool operator==(const SeedHostSpec&) const = default;
};

// A probability sweep: at every grid point p, `trials_per_point` independent
// perturbations of the seed host are drawn and the target is decided on
// each.  Trial (point i, trial j) draws from substream({seed, i + 1}, j),
// so every trial is reproducible in isolation and the outcome of a run
// never depends on thread count or scheduling.
struct SweepConfig {
    int n = 12;
    int t = 4;
    // Second clique order for arrow_asymmetric; 0 resolves to t/2 (t must
    // then be even).  Ignored by the other targets.
    int t2 = 0;
    uint64_t seed = 0;
    int trials_per_point = 100;
    std::vector<double> p_grid;
    SweepTarget target = SweepTarget::containment;
    SeedHostSpec seed_host;
    // Per-trial decision budget (branch sets for containment, search nodes
    // for arrows).  Trials that exhaust it are counted as inconclusive.
    long budget = 2'000'000;

    bool operator==(const SweepConfig&) const = default;
};

int resolved_t2(const SweepConfig& config);
// Throws std::invalid_argument on: trials < 1, empty grid, probability or
// density outside [0,1], t < 2, unresolvable t2, budget < 1, file kind
// without a path.
void validate(const SweepConfig& config);

// Appearance-threshold grid: p_i = min(1, c_i * n^(-1/rho)) with rho > 0 an
// exact rational (a density-calculus value), c_i >= 0.
std::vector<double> threshold_grid(const std::vector<double>& c_list,
                                   const Rational& rho, int n);

struct SweepPoint {
    double p = 0.0;
    int successes = 0;
    int failures = 0;
    int inconclusive = 0;
    int trials = 0;
    double estimate = 0.0;  // successes / trials
    double ci_low = 0.0;    // Wilson 95% interval for (successes, trials)
    double ci_high = 0.0;
    // Every trial at this point hit its budget; the point carries no
    // information but is reported rather than dropped.
    bool all_inconclusive = false;

    bool operator==(const SweepPoint&) const = default;
};

struct SweepReport {
    SweepConfig config;
    std::vector<SweepPoint> points;  // one per grid entry, in grid order
    std::string version;
    // Informational only: excluded from serialization and report equality
    // so identical configs produce byte-identical artifacts.
    double wall_seconds = 0.0;

    bool operator==(const SweepReport& o) const {
        return config == o.config && points == o.points && version == o.version;
    }
};

SweepReport run_sweep(const SweepConfig& config, int threads = 1);

// First pair i < j whose estimates decrease by more than CI overlap allows:
// point i's lower Wilson bound exceeds point j's upper bound.  nullopt when
// the sweep is nondecreasing up to overlap.
std::optional<std::pair<int, int>> monotonicity_violation(
    const std::vector<SweepPoint>& points);

// CSV: header p,successes,trials,estimate,ci_lo,ci_hi,inconclusive then one
// row per point.  JSON carries the full config and per-point detail and
// re-parses to an equal report.  Both are byte-stable: doubles are printed
// in shortest round-trip form, keys in fixed order.
std::string sweep_csv(const SweepReport& report);
std::string sweep_json(const SweepReport& report);
SweepReport sweep_report_from_json(const std::string& text);

// Shortest decimal form that parses back to exactly x (std::to_chars);
// locale-independent.  parse_double rejects trailing garbage.
std::string format_double(double x);
double parse_double(const std::string& s);

}  // namespace hrl
