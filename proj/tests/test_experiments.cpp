#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hrl/cliques.hpp"
#include "hrl/density.hpp"
#include "hrl/experiments.hpp"
#include "hrl/io.hpp"
#include "hrl/ramsey.hpp"
#include "hrl/random.hpp"
#include "hrl/stats.hpp"

using namespace hrl;

namespace {

SweepConfig base_config() {
    SweepConfig c;
    c.n = 10;
    c.t = 3;
    c.seed = 42;
    c.trials_per_point = 20;
    c.p_grid = {0.05, 0.2};
    c.target = SweepTarget::containment;
    return c;
}

SweepPoint counted_point(double p, int successes, int trials) {
    SweepPoint pt;
    pt.p = p;
    pt.successes = successes;
    pt.failures = trials - successes;
    pt.trials = trials;
    pt.estimate = static_cast<double>(successes) / trials;
    WilsonInterval w = wilson_interval(successes, trials);
    pt.ci_low = w.low;
    pt.ci_high = w.high;
    return pt;
}

void check_point_invariants(const SweepPoint& pt) {
    CHECK(pt.successes + pt.failures + pt.inconclusive == pt.trials);
    CHECK(pt.estimate == static_cast<double>(pt.successes) / pt.trials);
    CHECK(pt.ci_low <= pt.estimate);
    CHECK(pt.estimate <= pt.ci_high);
    CHECK(pt.all_inconclusive == (pt.inconclusive == pt.trials));
}

}  // namespace

TEST_CASE("config validation rejects malformed sweeps") {
    CHECK_NOTHROW(validate(base_config()));

    SweepConfig c = base_config();
    c.trials_per_point = 0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);

    c = base_config();
    c.p_grid.clear();
    CHECK_THROWS_AS(validate(c), std::invalid_argument);

    c = base_config();
    c.p_grid = {0.5, 1.2};
    CHECK_THROWS_AS(validate(c), std::invalid_argument);

    c = base_config();
    c.p_grid = {-0.1};
    CHECK_THROWS_AS(validate(c), std::invalid_argument);

    c = base_config();
    c.t = 1;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);

    c = base_config();
    c.budget = 0;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);

    // t2 = 0 means t/2, which requires even t for the asymmetric target.
    c = base_config();
    c.target = SweepTarget::arrow_asymmetric;
    c.t = 5;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
    c.t2 = 3;
    CHECK_NOTHROW(validate(c));
    c.t2 = 1;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);

    c = base_config();
    c.seed_host.kind = SeedHostKind::file;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);

    c = base_config();
    c.seed_host.kind = SeedHostKind::tripartite_density;
    c.seed_host.density = 1.5;
    CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("threshold grid computes min(1, c n^{-1/rho}) exactly") {
    // rho = 1/2 gives n^{-2}.
    std::vector<double> g = threshold_grid({1.0, 2.0}, Rational(1, 2), 10);
    REQUIRE(g.size() == 2);
    CHECK(g[0] == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(g[1] == doctest::Approx(0.02).epsilon(1e-12));

    // Values above 1 clamp.
    g = threshold_grid({200.0}, Rational(1, 2), 10);
    CHECK(g[0] == 1.0);

    // A density-calculus exponent: rho = 5/7, p = c * n^{-7/5}.
    Rational rho = clique_m3_closed(4);
    REQUIRE(rho == Rational(5, 7));
    g = threshold_grid({0.5}, rho, 20);
    CHECK(g[0] == doctest::Approx(0.5 * std::pow(20.0, -1.4)).epsilon(1e-12));

    CHECK(threshold_grid({0.0}, Rational(2, 3), 5)[0] == 0.0);
    CHECK_THROWS_AS(threshold_grid({1.0}, Rational(0), 5), std::invalid_argument);
    CHECK_THROWS_AS(threshold_grid({-1.0}, Rational(1, 2), 5), std::invalid_argument);
    CHECK_THROWS_AS(threshold_grid({1.0}, Rational(1, 2), 0), std::invalid_argument);
}

TEST_CASE("containment sweep endpoints: bare seed misses, full perturbation hits") {
    SweepConfig c;
    c.n = 12;
    c.t = 4;
    c.seed = 7;
    c.trials_per_point = 6;
    c.p_grid = {0.0, 1.0};
    c.target = SweepTarget::containment;

    SweepReport r = run_sweep(c);
    REQUIRE(r.points.size() == 2);
    for (const SweepPoint& pt : r.points) check_point_invariants(pt);

    // p = 0: the tripartite seed alone has no 4-branch linear clique.
    CHECK(r.points[0].estimate == 0.0);
    CHECK(r.points[0].failures == 6);
    CHECK(r.points[0].inconclusive == 0);
    // p = 1: the perturbation is the complete 3-graph, which has one.
    CHECK(r.points[1].estimate == 1.0);
    CHECK(r.points[1].successes == 6);

    CHECK(r.version == library_version());
    CHECK(r.wall_seconds >= 0.0);
    CHECK(!monotonicity_violation(r.points).has_value());
}

TEST_CASE("sweep artifacts are byte-identical across reruns and thread counts") {
    SweepConfig c = base_config();
    c.p_grid = {0.05, 0.15, 0.3};
    c.trials_per_point = 30;

    SweepReport r1 = run_sweep(c, 1);
    SweepReport r1b = run_sweep(c, 1);
    SweepReport r3 = run_sweep(c, 3);
    SweepReport r8 = run_sweep(c, 8);

    CHECK(r1 == r1b);
    CHECK(r1 == r3);
    CHECK(r1 == r8);
    std::string json = sweep_json(r1);
    CHECK(json == sweep_json(r3));
    CHECK(json == sweep_json(r8));
    std::string csv = sweep_csv(r1);
    CHECK(csv == sweep_csv(r3));
    CHECK(csv == sweep_csv(r8));

    for (const SweepPoint& pt : r1.points) check_point_invariants(pt);

    // A different seed changes at least the artifacts' config block.
    SweepConfig c2 = c;
    c2.seed = 43;
    CHECK(sweep_json(run_sweep(c2)) != json);
}

TEST_CASE("json report round-trips to an equal in-memory report") {
    SweepConfig c = base_config();
    SweepReport r = run_sweep(c, 2);
    r.wall_seconds = 0.0;  // informational field, not serialized
    SweepReport back = sweep_report_from_json(sweep_json(r));
    CHECK(back == r);
    CHECK(back.config == c);

    // Hand-built report exercising every field, including uint64 extremes.
    SweepReport x;
    x.config.n = 30;
    x.config.t = 6;
    x.config.t2 = 3;
    x.config.seed = 0xFFFFFFFFFFFFFFFFull;
    x.config.trials_per_point = 4;
    x.config.p_grid = {0.1, 0.25, 1.0 / 3.0};
    x.config.target = SweepTarget::arrow_asymmetric;
    x.config.seed_host = {SeedHostKind::file, "hosts/h.txt", 0.25};
    x.config.budget = 123456789;
    x.version = "hrl-core 9.9.9";
    SweepPoint pt = counted_point(0.1, 1, 4);
    x.points.push_back(pt);
    pt = counted_point(1.0 / 3.0, 0, 4);
    pt.failures = 0;
    pt.inconclusive = 4;
    pt.all_inconclusive = true;
    x.points.push_back(pt);
    CHECK(sweep_report_from_json(sweep_json(x)) == x);

    CHECK_THROWS_AS(sweep_report_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(sweep_report_from_json("{\"kind\": \"other\"}"),
                    std::invalid_argument);
}

TEST_CASE("csv layout: pinned header, one row per point, exact fields") {
    SweepReport empty;
    CHECK(sweep_csv(empty) ==
          "p,successes,trials,estimate,ci_lo,ci_hi,inconclusive\n");

    SweepReport r;
    SweepPoint pt;
    pt.p = 0.125;
    pt.successes = 1;
    pt.failures = 1;
    pt.inconclusive = 2;
    pt.trials = 4;
    pt.estimate = 0.25;
    pt.ci_low = 0.1;
    pt.ci_high = 0.5;
    r.points.push_back(pt);
    CHECK(sweep_csv(r) ==
          "p,successes,trials,estimate,ci_lo,ci_hi,inconclusive\n"
          "0.125,1,4,0.25,0.1,0.5,2\n");

    // Row count matches the grid and numeric fields re-parse exactly.
    SweepConfig c = base_config();
    SweepReport run = run_sweep(c);
    std::string csv = sweep_csv(run);
    size_t rows = 0;
    for (char ch : csv)
        if (ch == '\n') ++rows;
    CHECK(rows == run.points.size() + 1);
    size_t line_start = csv.find('\n') + 1;
    for (const SweepPoint& p : run.points) {
        size_t line_end = csv.find('\n', line_start);
        std::string line = csv.substr(line_start, line_end - line_start);
        std::vector<std::string> fields;
        size_t pos = 0;
        while (pos <= line.size()) {
            size_t comma = line.find(',', pos);
            if (comma == std::string::npos) comma = line.size();
            fields.push_back(line.substr(pos, comma - pos));
            pos = comma + 1;
        }
        REQUIRE(fields.size() == 7);
        CHECK(parse_double(fields[0]) == p.p);
        CHECK(std::stoi(fields[1]) == p.successes);
        CHECK(std::stoi(fields[2]) == p.trials);
        CHECK(parse_double(fields[3]) == p.estimate);
        CHECK(parse_double(fields[4]) == p.ci_low);
        CHECK(parse_double(fields[5]) == p.ci_high);
        CHECK(std::stoi(fields[6]) == p.inconclusive);
        line_start = line_end + 1;
    }
}

TEST_CASE("double formatting is shortest round-trip form") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.125) == "0.125");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
    CHECK(format_double(0.1 + 0.2) == "0.30000000000000004");

    for (double x : {0.0, -0.0, 1.0, 0.3, 1e-7, 5e-324, 1.7976931348623157e308,
                     0.1 + 0.2, 1.0 / 3.0, 0.9999999999999999}) {
        CHECK(parse_double(format_double(x)) == x);
    }

    CHECK_THROWS_AS(parse_double("1.5x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_double(""), std::invalid_argument);
}

TEST_CASE("arrow targets run inside sweeps and agree with direct decisions") {
    // Single-edge cliques: the host arrows (e, e) exactly when it has an edge,
    // so an empty seed separates p = 0 from p = 1 deterministically.
    SweepConfig c;
    c.n = 6;
    c.t = 2;
    c.seed = 11;
    c.trials_per_point = 5;
    c.p_grid = {0.0, 1.0};
    c.target = SweepTarget::arrow_symmetric;
    c.seed_host.kind = SeedHostKind::tripartite_density;
    c.seed_host.density = 0.0;

    SweepReport r = run_sweep(c, 2);
    for (const SweepPoint& pt : r.points) check_point_invariants(pt);
    CHECK(r.points[0].estimate == 0.0);
    CHECK(r.points[0].inconclusive == 0);
    CHECK(r.points[1].estimate == 1.0);
    CHECK(!monotonicity_violation(r.points).has_value());

    // t = 3 at p = 1: the perturbed host is the complete 3-graph on 6
    // vertices every trial, so the sweep must reproduce the direct verdict.
    SweepConfig c3 = c;
    c3.t = 3;
    c3.p_grid = {1.0};
    c3.trials_per_point = 2;
    c3.budget = 20'000'000;
    SweepReport r3 = run_sweep(c3);
    ArrowVerdict direct = decide_arrow(Hypergraph3::complete(6), linear_clique3(3),
                                       linear_clique3(3), 20'000'000);
    REQUIRE(direct.outcome != ArrowOutcome::inconclusive);
    double expect = direct.outcome == ArrowOutcome::arrows ? 1.0 : 0.0;
    CHECK(r3.points[0].estimate == expect);
    CHECK(r3.points[0].inconclusive == 0);

    // Asymmetric wiring: t2 = 0 resolves to t/2 = 2 here; at p = 1 the
    // complete host arrows (clique_4, single edge) iff the direct call says so.
    SweepConfig ca = c;
    ca.n = 10;
    ca.t = 4;
    ca.target = SweepTarget::arrow_asymmetric;
    ca.p_grid = {1.0};
    ca.trials_per_point = 2;
    ca.budget = 20'000'000;
    SweepReport ra = run_sweep(ca);
    ArrowVerdict da = decide_arrow(Hypergraph3::complete(10), linear_clique3(4),
                                   linear_clique3(2), 20'000'000);
    double expect_a = da.outcome == ArrowOutcome::arrows ? 1.0 : 0.0;
    if (da.outcome == ArrowOutcome::inconclusive) {
        CHECK(ra.points[0].inconclusive == 2);
    } else {
        CHECK(ra.points[0].estimate == expect_a);
    }
}

TEST_CASE("budget exhaustion is counted and flagged, never dropped") {
    // A 4-branch clique needs 10 vertices, so on 9 vertices it never exists;
    // at p = 1 every branch 4-set of the complete host still reaches apex
    // matching and charges the budget, so budget 1 exhausts deterministically.
    // The bare tripartite seed instead refutes early (same-part pairs have
    // empty links), so p = 0 stays conclusive.
    SweepConfig c;
    c.n = 9;
    c.t = 4;
    c.seed = 5;
    c.trials_per_point = 6;
    c.p_grid = {0.0, 1.0};
    c.target = SweepTarget::containment;
    c.budget = 1;

    SweepReport r = run_sweep(c, 2);
    for (const SweepPoint& pt : r.points) check_point_invariants(pt);

    CHECK(r.points[0].failures == 6);
    CHECK(r.points[0].inconclusive == 0);
    CHECK(!r.points[0].all_inconclusive);

    CHECK(r.points[1].inconclusive == 6);
    CHECK(r.points[1].all_inconclusive);
    CHECK(r.points[1].successes == 0);
    CHECK(r.points[1].failures == 0);
    CHECK(r.points[1].estimate == 0.0);
}

TEST_CASE("wilson coverage self-test against a seeded bernoulli(0.3) stream") {
    const int sweeps = 10'000;
    const int draws = 50;
    const double p = 0.3;

    int covered = 0;
    for (int s = 0; s < sweeps; ++s) {
        Rng rng(substream(RngSpec{7001, static_cast<uint64_t>(s)}, 0));
        int k = 0;
        for (int i = 0; i < draws; ++i)
            if (rng.bernoulli(p)) ++k;
        WilsonInterval w = wilson_interval(k, draws);
        if (w.low <= p && p <= w.high) ++covered;
    }
    double mc = static_cast<double>(covered) / sweeps;

    // Exact coverage of the same interval under Binomial(50, 0.3).
    double exact = 0.0;
    for (int k = 0; k <= draws; ++k) {
        WilsonInterval w = wilson_interval(k, draws);
        if (!(w.low <= p && p <= w.high)) continue;
        double logpmf = std::lgamma(draws + 1.0) - std::lgamma(k + 1.0) -
                        std::lgamma(draws - k + 1.0) + k * std::log(p) +
                        (draws - k) * std::log1p(-p);
        exact += std::exp(logpmf);
    }

    CHECK(mc >= 0.93);
    CHECK(exact >= 0.93);
    CHECK(std::abs(mc - exact) < 0.01);
}

TEST_CASE("monotonicity check tolerates overlap, reports clear decreases") {
    std::vector<SweepPoint> pts;
    pts.push_back(counted_point(0.1, 10, 100));
    pts.push_back(counted_point(0.2, 50, 100));
    pts.push_back(counted_point(0.3, 90, 100));
    CHECK(!monotonicity_violation(pts).has_value());

    // A small dip within CI overlap is not a violation.
    pts.clear();
    pts.push_back(counted_point(0.1, 50, 100));
    pts.push_back(counted_point(0.2, 45, 100));
    CHECK(!monotonicity_violation(pts).has_value());

    // A collapse with disjoint intervals is.
    pts.clear();
    pts.push_back(counted_point(0.1, 90, 100));
    pts.push_back(counted_point(0.2, 10, 100));
    auto v = monotonicity_violation(pts);
    REQUIRE(v.has_value());
    CHECK(v->first == 0);
    CHECK(v->second == 1);

    // Non-adjacent decreases are caught even when neighbours overlap:
    // 0.65 vs 0.55 and 0.55 vs 0.45 overlap pairwise, 0.65 vs 0.45 does not.
    pts.clear();
    pts.push_back(counted_point(0.1, 65, 100));
    pts.push_back(counted_point(0.2, 55, 100));
    pts.push_back(counted_point(0.3, 45, 100));
    v = monotonicity_violation(pts);
    REQUIRE(v.has_value());
    CHECK(v->first == 0);
    CHECK(v->second == 2);
}

TEST_CASE("seed host kinds: density one matches tripartite, files load") {
    SweepConfig a = base_config();
    a.n = 9;

    SweepConfig b = a;
    b.seed_host.kind = SeedHostKind::tripartite_density;
    b.seed_host.density = 1.0;

    SweepReport ra = run_sweep(a);
    SweepReport rb = run_sweep(b);
    CHECK(ra.points == rb.points);

    // A host file with the same graph reproduces the same trial decisions.
    const std::string path = "/tmp/hrl_test_seed_host.txt";
    write_file(path, serialize(tripartite_seed(9)));
    SweepConfig f = a;
    f.seed_host.kind = SeedHostKind::file;
    f.seed_host.path = path;
    SweepReport rf = run_sweep(f);
    CHECK(rf.points == ra.points);

    // n mismatch between file and config is refused.
    SweepConfig bad = f;
    bad.n = 10;
    CHECK_THROWS_AS(run_sweep(bad), std::invalid_argument);
    std::remove(path.c_str());

    // Density zero: empty seed, so p = 0 trials find nothing.
    SweepConfig z = base_config();
    z.seed_host.kind = SeedHostKind::tripartite_density;
    z.seed_host.density = 0.0;
    z.p_grid = {0.0};
    SweepReport rz = run_sweep(z);
    CHECK(rz.points[0].estimate == 0.0);
    CHECK(rz.points[0].inconclusive == 0);
}

TEST_CASE("target and seed kind names round-trip") {
    for (SweepTarget t : {SweepTarget::containment, SweepTarget::arrow_symmetric,
                          SweepTarget::arrow_asymmetric})
        CHECK(sweep_target_from_string(to_string(t)) == t);
    for (SeedHostKind k : {SeedHostKind::tripartite, SeedHostKind::file,
                           SeedHostKind::tripartite_density})
        CHECK(seed_host_kind_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(sweep_target_from_string("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(seed_host_kind_from_string("bogus"), std::invalid_argument);
}
