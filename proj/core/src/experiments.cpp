#include "hrl/experiments.hpp"

#include <charconv>
#include <chrono>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

#include "hrl/cliques.hpp"
#include "hrl/density.hpp"
#include "hrl/io.hpp"
#include "hrl/parallel.hpp"
#include "hrl/ramsey.hpp"
#include "hrl/random.hpp"

namespace hrl {

const char* library_version() { return "hrl-core 0.1.0"; }

std::string to_string(SweepTarget target) {
    switch (target) {
        case SweepTarget::containment: return "containment";
        case SweepTarget::arrow_symmetric: return "arrow_symmetric";
        case SweepTarget::arrow_asymmetric: return "arrow_asymmetric";
    }
    throw std::logic_error("unreachable");
}

SweepTarget sweep_target_from_string(const std::string& s) {
    if (s == "containment") return SweepTarget::containment;
    if (s == "arrow_symmetric") return SweepTarget::arrow_symmetric;
    if (s == "arrow_asymmetric") return SweepTarget::arrow_asymmetric;
    throw std::invalid_argument("unknown sweep target: " + s);
}

std::string to_string(SeedHostKind kind) {
    switch (kind) {
        case SeedHostKind::tripartite: return "tripartite";
        case SeedHostKind::file: return "file";
        case SeedHostKind::tripartite_density: return "tripartite_density";
    }
    throw std::logic_error("unreachable");
}

SeedHostKind seed_host_kind_from_string(const std::string& s) {
    if (s == "tripartite") return SeedHostKind::tripartite;
    if (s == "file") return SeedHostKind::file;
    if (s == "tripartite_density") return SeedHostKind::tripartite_density;
    throw std::invalid_argument("unknown seed host kind: " + s);
}

int resolved_t2(const SweepConfig& config) {
    return config.t2 > 0 ? config.t2 : config.t / 2;
}

void validate(const SweepConfig& config) {
    if (config.n < 1) throw std::invalid_argument("sweep: n must be >= 1");
    if (config.t < 2) throw std::invalid_argument("sweep: t must be >= 2");
    if (config.trials_per_point < 1)
        throw std::invalid_argument("sweep: trials_per_point must be >= 1");
    if (config.p_grid.empty()) throw std::invalid_argument("sweep: empty grid");
    for (double p : config.p_grid)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("sweep: grid probability outside [0,1]");
    if (config.budget < 1) throw std::invalid_argument("sweep: budget must be >= 1");
    if (config.t2 < 0) throw std::invalid_argument("sweep: t2 must be >= 0");
    if (config.target == SweepTarget::arrow_asymmetric) {
        if (config.t2 == 0 && config.t % 2 != 0)
            throw std::invalid_argument(
                "sweep: t2 = 0 resolves to t/2, which needs even t");
        if (resolved_t2(config) < 2)
            throw std::invalid_argument("sweep: resolved t2 must be >= 2");
    }
    const SeedHostSpec& sh = config.seed_host;
    if (sh.kind == SeedHostKind::file && sh.path.empty())
        throw std::invalid_argument("sweep: file seed host needs a path");
    if (sh.kind == SeedHostKind::tripartite_density &&
        !(sh.density >= 0.0 && sh.density <= 1.0))
        throw std::invalid_argument("sweep: seed density outside [0,1]");
}

std::vector<double> threshold_grid(const std::vector<double>& c_list,
                                   const Rational& rho, int n) {
    if (rho.sign() <= 0)
        throw std::invalid_argument("threshold_grid: rho must be > 0");
    if (n < 1) throw std::invalid_argument("threshold_grid: n must be >= 1");
    std::vector<double> grid;
    grid.reserve(c_list.size());
    for (double c : c_list) {
        if (!(c >= 0.0))
            throw std::invalid_argument("threshold_grid: c must be >= 0");
        grid.push_back(std::min(1.0, threshold_probability(rho, n, c)));
    }
    return grid;
}

namespace {

// Seed hosts derive from the sweep seed's stream 0; trials use streams >= 1.
Hypergraph3 build_seed_host(const SweepConfig& config) {
    switch (config.seed_host.kind) {
        case SeedHostKind::tripartite:
            return tripartite_seed(config.n);
        case SeedHostKind::file: {
            Hypergraph3 h = load_hypergraph3(config.seed_host.path);
            if (h.n() != config.n)
                throw std::invalid_argument(
                    "sweep: seed host file has n=" + std::to_string(h.n()) +
                    ", config says n=" + std::to_string(config.n));
            return h;
        }
        case SeedHostKind::tripartite_density: {
            Hypergraph3 full = tripartite_seed(config.n);
            Rng rng(substream(RngSpec{config.seed, 0}, 0));
            std::vector<Triple> kept;
            for (const Triple& e : full.edges())
                if (rng.bernoulli(config.seed_host.density)) kept.push_back(e);
            return Hypergraph3(config.n, std::move(kept));
        }
    }
    throw std::logic_error("unreachable");
}

enum class TrialOutcome : signed char { failure = 0, success = 1, inconclusive = 2 };

TrialOutcome decide_trial(const Hypergraph3& gamma, const SweepConfig& config,
                          const Hypergraph3* f1, const Hypergraph3* f2) {
    if (config.target == SweepTarget::containment) {
        CliqueSearch s = contains_linear_clique(gamma, config.t, config.budget);
        if (s.outcome == SearchOutcome::found) return TrialOutcome::success;
        if (s.outcome == SearchOutcome::absent) return TrialOutcome::failure;
        return TrialOutcome::inconclusive;
    }
    ArrowVerdict v = decide_arrow(gamma, *f1, *f2, config.budget);
    if (v.outcome == ArrowOutcome::arrows) return TrialOutcome::success;
    if (v.outcome == ArrowOutcome::colorable) return TrialOutcome::failure;
    return TrialOutcome::inconclusive;
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config, int threads) {
    validate(config);
    auto start = std::chrono::steady_clock::now();

    const Hypergraph3 seed_host = build_seed_host(config);
    Hypergraph3 f1, f2;
    if (config.target != SweepTarget::containment) {
        f1 = linear_clique3(config.t);
        f2 = linear_clique3(config.target == SweepTarget::arrow_symmetric
                                ? config.t
                                : resolved_t2(config));
    }

    const long points = static_cast<long>(config.p_grid.size());
    const long per = config.trials_per_point;
    std::vector<TrialOutcome> outcomes(points * per, TrialOutcome::failure);
    parallel_for(points * per, threads, [&](long job) {
        const long pi = job / per;
        const long ti = job % per;
        RngSpec spec = substream(RngSpec{config.seed, static_cast<uint64_t>(pi) + 1},
                                 static_cast<uint64_t>(ti));
        Hypergraph3 gamma = perturb_union(seed_host, config.p_grid[pi], spec);
        outcomes[job] = decide_trial(gamma, config, &f1, &f2);
    });

    SweepReport report;
    report.config = config;
    report.version = library_version();
    report.points.reserve(points);
    for (long pi = 0; pi < points; ++pi) {
        SweepPoint pt;
        pt.p = config.p_grid[pi];
        pt.trials = config.trials_per_point;
        for (long ti = 0; ti < per; ++ti) {
            switch (outcomes[pi * per + ti]) {
                case TrialOutcome::success: ++pt.successes; break;
                case TrialOutcome::failure: ++pt.failures; break;
                case TrialOutcome::inconclusive: ++pt.inconclusive; break;
            }
        }
        pt.estimate = static_cast<double>(pt.successes) / pt.trials;
        WilsonInterval ci = wilson_interval(pt.successes, pt.trials);
        pt.ci_low = ci.low;
        pt.ci_high = ci.high;
        pt.all_inconclusive = pt.inconclusive == pt.trials;
        report.points.push_back(pt);
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

std::optional<std::pair<int, int>> monotonicity_violation(
    const std::vector<SweepPoint>& points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].ci_low > points[j].ci_high)
                return std::make_pair(static_cast<int>(i), static_cast<int>(j));
    return std::nullopt;
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    if (res.ec != std::errc())
        throw std::logic_error("format_double: to_chars failed");
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double x = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), x);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("parse_double: bad number: " + s);
    return x;
}

std::string sweep_csv(const SweepReport& report) {
    std::string out = "p,successes,trials,estimate,ci_lo,ci_hi,inconclusive\n";
    for (const SweepPoint& pt : report.points) {
        out += format_double(pt.p);
        out += ',';
        out += std::to_string(pt.successes);
        out += ',';
        out += std::to_string(pt.trials);
        out += ',';
        out += format_double(pt.estimate);
        out += ',';
        out += format_double(pt.ci_low);
        out += ',';
        out += format_double(pt.ci_high);
        out += ',';
        out += std::to_string(pt.inconclusive);
        out += '\n';
    }
    return out;
}

std::string sweep_json(const SweepReport& report) {
    nlohmann::json j;
    j["kind"] = "sweep_report";
    j["version"] = report.version;
    nlohmann::json c;
    c["n"] = report.config.n;
    c["t"] = report.config.t;
    c["t2"] = report.config.t2;
    c["seed"] = report.config.seed;
    c["trials_per_point"] = report.config.trials_per_point;
    c["p_grid"] = report.config.p_grid;
    c["target"] = to_string(report.config.target);
    c["seed_host"] = {{"kind", to_string(report.config.seed_host.kind)},
                      {"path", report.config.seed_host.path},
                      {"density", report.config.seed_host.density}};
    c["budget"] = report.config.budget;
    j["config"] = c;
    j["points"] = nlohmann::json::array();
    for (const SweepPoint& pt : report.points) {
        nlohmann::json p;
        p["p"] = pt.p;
        p["successes"] = pt.successes;
        p["failures"] = pt.failures;
        p["inconclusive"] = pt.inconclusive;
        p["trials"] = pt.trials;
        p["estimate"] = pt.estimate;
        p["ci_low"] = pt.ci_low;
        p["ci_high"] = pt.ci_high;
        p["all_inconclusive"] = pt.all_inconclusive;
        j["points"].push_back(p);
    }
    return j.dump(2) + "\n";
}

SweepReport sweep_report_from_json(const std::string& text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        if (j.at("kind").get<std::string>() != "sweep_report")
            throw std::invalid_argument("not a sweep_report document");
        SweepReport report;
        report.version = j.at("version").get<std::string>();
        const nlohmann::json& c = j.at("config");
        report.config.n = c.at("n").get<int>();
        report.config.t = c.at("t").get<int>();
        report.config.t2 = c.at("t2").get<int>();
        report.config.seed = c.at("seed").get<uint64_t>();
        report.config.trials_per_point = c.at("trials_per_point").get<int>();
        report.config.p_grid = c.at("p_grid").get<std::vector<double>>();
        report.config.target = sweep_target_from_string(c.at("target").get<std::string>());
        report.config.seed_host.kind =
            seed_host_kind_from_string(c.at("seed_host").at("kind").get<std::string>());
        report.config.seed_host.path = c.at("seed_host").at("path").get<std::string>();
        report.config.seed_host.density = c.at("seed_host").at("density").get<double>();
        report.config.budget = c.at("budget").get<long>();
        for (const nlohmann::json& p : j.at("points")) {
            SweepPoint pt;
            pt.p = p.at("p").get<double>();
            pt.successes = p.at("successes").get<int>();
            pt.failures = p.at("failures").get<int>();
            pt.inconclusive = p.at("inconclusive").get<int>();
            pt.trials = p.at("trials").get<int>();
            pt.estimate = p.at("estimate").get<double>();
            pt.ci_low = p.at("ci_low").get<double>();
            pt.ci_high = p.at("ci_high").get<double>();
            pt.all_inconclusive = p.at("all_inconclusive").get<bool>();
            report.points.push_back(pt);
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("sweep report parse: ") + e.what());
    }
}

}  // namespace hrl
