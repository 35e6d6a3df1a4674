#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hrl/cliques.hpp"
#include "hrl/janson.hpp"
#include "hrl/ramsey.hpp"
#include "hrl/stats.hpp"

using namespace hrl;

namespace {

// Naive reference: plain double loop, no blocking, no compensation.
std::pair<double, double> naive_parameters(const std::vector<std::vector<long>>& fam,
                                           double p) {
    double lambda = 0, delta = 0;
    for (const auto& c : fam) lambda += std::pow(p, static_cast<double>(c.size()));
    for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = i + 1; j < fam.size(); ++j) {
            std::vector<long> inter;
            std::set_intersection(fam[i].begin(), fam[i].end(), fam[j].begin(),
                                  fam[j].end(), std::back_inserter(inter));
            if (inter.empty()) continue;
            delta += std::pow(p, static_cast<double>(fam[i].size() + fam[j].size() -
                                                     inter.size()));
        }
    return {lambda, delta};
}

std::vector<std::vector<long>> clique_family(const Hypergraph3& host, int t) {
    CopyList l = pattern_copies(host, linear_clique3(t));
    REQUIRE(l.complete);
    return l.edge_sets;
}

}  // namespace

TEST_CASE("single-edge families have linear lambda and zero delta") {
    std::vector<std::vector<long>> fam;
    for (long i = 0; i < 20; ++i) fam.push_back({i});
    JansonParameters jp = janson_parameters({fam, 0.3});
    CHECK(jp.lambda == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(jp.delta == 0.0);
}

TEST_CASE("two overlapping triples give delta = p^5") {
    double p = 0.37;
    JansonParameters jp = janson_parameters({{{0, 1, 2}, {2, 3, 4}}, p});
    CHECK(jp.lambda == doctest::Approx(2 * std::pow(p, 3)).epsilon(1e-14));
    CHECK(jp.delta == doctest::Approx(std::pow(p, 5)).epsilon(1e-14));
}

TEST_CASE("parameters match the naive double loop on clique families") {
    for (uint64_t s = 0; s < 10; ++s) {
        Hypergraph3 h = sample_uniform_3graph(8, 0.35, RngSpec{1201, s});
        double p = 0.1 + 0.08 * static_cast<double>(s);
        for (int t : {2, 3}) {
            std::vector<std::vector<long>> fam = clique_family(h, t);
            JansonParameters jp = janson_parameters({fam, p});
            auto [nl, nd] = naive_parameters(fam, p);
            CHECK(jp.lambda == doctest::Approx(nl).epsilon(1e-9));
            CHECK(jp.delta == doctest::Approx(nd).epsilon(1e-9));
        }
    }
}

TEST_CASE("parameter computation is identical across thread counts") {
    Hypergraph3 h = sample_uniform_3graph(9, 0.4, RngSpec{1301, 0});
    std::vector<std::vector<long>> fam = clique_family(h, 3);
    REQUIRE(fam.size() > 50);
    JansonInput in{fam, 0.41};
    JansonParameters a = janson_parameters(in, 1);
    JansonParameters b = janson_parameters(in, 4);
    JansonParameters c = janson_parameters(in, 7);
    CHECK(a.lambda == b.lambda);
    CHECK(a.delta == b.delta);
    CHECK(a.lambda == c.lambda);
    CHECK(a.delta == c.delta);
}

TEST_CASE("bound closed forms and monotonicity") {
    CHECK(janson_bound(0, 0) == 1.0);
    CHECK(janson_bound(0, 3.5) == 1.0);
    CHECK(janson_bound(1.7, 0) == doctest::Approx(std::exp(-1.7)).epsilon(1e-15));
    CHECK(janson_bound(2, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK_THROWS_AS(janson_bound(-0.1, 0), std::invalid_argument);
    CHECK_THROWS_AS(janson_bound(1, -0.1), std::invalid_argument);
    for (double delta : {0.0, 0.5, 2.0}) {
        double prev = 2;
        for (int i = 0; i <= 50; ++i) {
            double lambda = 0.1 * i;
            double b = janson_bound(lambda, delta);
            CHECK(b > 0.0);
            CHECK(b <= 1.0);
            CHECK(b <= prev + 1e-15);
            prev = b;
        }
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(janson_parameters({{{0, 1}, {}}, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(janson_parameters({{{0}}, 1.5}), std::invalid_argument);
    CHECK_THROWS_AS(janson_parameters({{{0}}, -0.1}), std::invalid_argument);
    CHECK_THROWS_AS(janson_parameters({{{-3}}, 0.5}), std::invalid_argument);
    std::vector<std::vector<long>> huge(100001, std::vector<long>{0});
    CHECK_THROWS_AS(janson_parameters({huge, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(exact_nonexistence_oracle({{{0, 1}, {}}, 0.5}), std::invalid_argument);
}

TEST_CASE("single-edge oracle equals the closed form and respects exp(-lambda)") {
    std::vector<std::vector<long>> fam;
    for (long i = 0; i < 6; ++i) fam.push_back({i});
    for (double p : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
        NonexistenceEstimate est = exact_nonexistence_oracle({fam, p});
        CHECK(est.exact);
        CHECK(est.support == 6);
        CHECK(est.probability == doctest::Approx(std::pow(1 - p, 6)).epsilon(1e-12));
        JansonParameters jp = janson_parameters({fam, p});
        CHECK(est.probability <= std::exp(-jp.lambda) + 1e-12);
    }
}

TEST_CASE("degenerate probabilities") {
    std::vector<std::vector<long>> fam = {{0, 1, 2}, {1, 3}};
    CHECK(exact_nonexistence_oracle({fam, 1.0}).probability == doctest::Approx(0.0));
    CHECK(exact_nonexistence_oracle({fam, 0.0}).probability == doctest::Approx(1.0));
    NonexistenceEstimate empty = exact_nonexistence_oracle({{}, 0.5});
    CHECK(empty.exact);
    CHECK(empty.probability == doctest::Approx(1.0));
}

TEST_CASE("exact nonexistence probability never exceeds the bound") {
    long instances = 0;
    for (uint64_t s = 0; s < 12; ++s) {
        Hypergraph3 h = sample_uniform_3graph(6, 0.3 + 0.05 * (s % 5), RngSpec{1409, s});
        for (int t : {2, 3}) {
            std::vector<std::vector<long>> fam = clique_family(h, t);
            for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                JansonParameters jp = janson_parameters({fam, p});
                NonexistenceEstimate est = exact_nonexistence_oracle({fam, p});
                REQUIRE(est.exact);
                CHECK(est.probability <= janson_bound(jp.lambda, jp.delta) + 1e-12);
                ++instances;
            }
        }
    }
    CHECK(instances == 120);
}

TEST_CASE("pair scan equals the grouping-by-intersection form") {
    Hypergraph3 h = sample_uniform_3graph(8, 0.45, RngSpec{1511, 2});
    std::vector<std::vector<long>> fam = clique_family(h, 3);
    REQUIRE(fam.size() >= 3);
    double p = 0.23;
    // uniform copy size 3: delta = sum over s of count_s * p^(6-s)
    std::vector<long> count(4, 0);
    for (size_t i = 0; i < fam.size(); ++i)
        for (size_t j = i + 1; j < fam.size(); ++j) {
            std::vector<long> inter;
            std::set_intersection(fam[i].begin(), fam[i].end(), fam[j].begin(),
                                  fam[j].end(), std::back_inserter(inter));
            if (!inter.empty()) ++count[inter.size()];
        }
    double grouped = 0;
    for (long s = 1; s <= 3; ++s)
        grouped += static_cast<double>(count[static_cast<size_t>(s)]) *
                   std::pow(p, static_cast<double>(6 - s));
    JansonParameters jp = janson_parameters({fam, p});
    CHECK(jp.delta == doctest::Approx(grouped).epsilon(1e-12));
}

TEST_CASE("monte carlo fallback is deterministic and brackets the closed form") {
    std::vector<std::vector<long>> fam;
    for (long i = 0; i < 25; ++i) fam.push_back({i});
    double p = 0.05;
    RngSpec spec{1601, 1};
    NonexistenceEstimate a = exact_nonexistence_oracle({fam, p}, 20000, spec);
    CHECK_FALSE(a.exact);
    CHECK(a.support == 25);
    CHECK(a.trials == 20000);
    double closed = std::pow(1 - p, 25);
    CHECK(a.ci_low <= closed);
    CHECK(closed <= a.ci_high);
    CHECK(a.ci_low <= a.probability);
    CHECK(a.probability <= a.ci_high);
    NonexistenceEstimate b = exact_nonexistence_oracle({fam, p}, 20000, spec);
    CHECK(a.probability == b.probability);
    CHECK(a.ci_low == b.ci_low);
}

TEST_CASE("wilson interval basics") {
    CHECK_THROWS_AS(wilson_interval(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(wilson_interval(5, 4), std::invalid_argument);
    WilsonInterval z = wilson_interval(0, 10);
    CHECK(z.low == doctest::Approx(0.0));
    CHECK(z.high < 0.35);
    WilsonInterval o = wilson_interval(10, 10);
    CHECK(o.high == doctest::Approx(1.0));
    CHECK(o.low > 0.65);
    WilsonInterval m = wilson_interval(5, 10);
    CHECK(m.center == doctest::Approx(0.5));
    CHECK(m.low < 0.5);
    CHECK(m.high > 0.5);
    CHECK(m.high - m.low < 0.6);
}
