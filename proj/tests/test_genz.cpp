#include "lowwafom/genz.hpp"

#include "oracles/genz_quadrature.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

using namespace lowwafom;
using testing_support::test_rng;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }
double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST_CASE("family names round-trip") {
    for (auto f : kGenzFamilies) CHECK(parse_family(family_name(f)) == f);
    CHECK(parse_family("f1") == GenzFamily::oscillatory);
    CHECK(parse_family("f6") == GenzFamily::discontinuous);
    CHECK(parse_family("constant") == GenzFamily::constant);
    CHECK_THROWS_AS(parse_family("f7"), std::invalid_argument);
}

TEST_CASE("h presets") {
    CHECK(default_h(5) == kStandardH5);
    CHECK(default_h(10) == kStandardH10);
    const auto h8 = default_h(8);
    for (int j = 0; j < 6; ++j) CHECK(h8[j] == doctest::Approx(kStandardH5[j] * 8 / 5));
}

TEST_CASE("make_instance: renormalization") {
    auto rng = test_rng(40);
    const auto one = make_instance(GenzFamily::gaussian, 1, 2.5, rng);
    CHECK(one.a == std::vector<double>{2.5});
    for (int rep = 0; rep < 50; ++rep) {
        const auto inst = make_instance(GenzFamily::oscillatory, 5, 4.5, rng);
        CHECK(rel(sum(inst.a), 4.5) < 1e-12);
        for (double u : inst.u) CHECK((u >= 0.0 && u <= 1.0));
        for (double a : inst.a) CHECK(a > 0.0);
    }
    auto r1 = test_rng(41);
    auto r2 = test_rng(41);
    const auto a = make_instance(GenzFamily::corner_peak, 4, 0.925, r1);
    const auto b = make_instance(GenzFamily::corner_peak, 4, 0.925, r2);
    CHECK(a.a == b.a);
    CHECK(a.u == b.u);
}

TEST_CASE("renormalization is scale invariant") {
    const std::vector<double> a = {0.3, 0.9, 0.1};
    const std::vector<double> u = {0.2, 0.5, 0.7};
    const auto x = instance_from_params(GenzFamily::gaussian, a, u, 3.0);
    auto scaled = a;
    for (auto& v : scaled) v *= 17.0;
    const auto y = instance_from_params(GenzFamily::gaussian, scaled, u, 3.0);
    for (int i = 0; i < 3; ++i) CHECK(rel(x.a[i], y.a[i]) < 1e-15);
}

TEST_CASE("eval: special points") {
    const auto osc = instance_from_params(GenzFamily::oscillatory, {1.0, 2.0}, {0.3, 0.8});
    const std::vector<double> origin = {0.0, 0.0};
    CHECK(genz_eval(osc, origin) == doctest::Approx(std::cos(2 * std::numbers::pi * 0.3)));
    const std::vector<double> u = {0.3, 0.8};
    CHECK(genz_eval(instance_from_params(GenzFamily::gaussian, {1.0, 2.0}, u), u) == 1.0);
    CHECK(genz_eval(instance_from_params(GenzFamily::continuous, {1.0, 2.0}, u), u) == 1.0);
    const auto disc = instance_from_params(GenzFamily::discontinuous, {1.0, 2.0}, u);
    const std::vector<double> out1 = {0.31, 0.1};
    const std::vector<double> out2 = {0.1, 0.81};
    CHECK(genz_eval(disc, out1) == 0.0);
    CHECK(genz_eval(disc, out2) == 0.0);
    const auto disc1 = instance_from_params(GenzFamily::discontinuous, {1.0}, {0.5});
    const std::vector<double> in1 = {0.4};
    CHECK(genz_eval(disc1, in1) == doctest::Approx(std::exp(0.4)));
}

TEST_CASE("eval: range bounds") {
    auto rng = test_rng(42);
    for (int rep = 0; rep < 200; ++rep) {
        const int s = 1 + rep % 4;
        std::vector<double> x(s);
        for (auto& v : x) v = uniform01(rng);
        const auto pp = make_instance(GenzFamily::product_peak, s, 3.0, rng);
        CHECK(genz_eval(pp, x) > 0.0);
        for (auto f : {GenzFamily::gaussian, GenzFamily::continuous}) {
            const double v = genz_eval(make_instance(f, s, 3.0, rng), x);
            CHECK(v > 0.0);
            CHECK(v <= 1.0);
        }
    }
}

TEST_CASE("exact integrals: hand values") {
    const auto cont = instance_from_params(GenzFamily::continuous, {1.0}, {0.0});
    CHECK(exact_integral(cont) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
    const auto corner = instance_from_params(GenzFamily::corner_peak, {1.0}, {0.5});
    CHECK(exact_integral(corner) == doctest::Approx(0.5).epsilon(1e-15));
    const auto disc = instance_from_params(GenzFamily::discontinuous, {0.5, 1.5, 2.0}, {1.0, 1.0, 1.0});
    CHECK(exact_integral(disc) ==
          doctest::Approx(std::expm1(0.5) / 0.5 * std::expm1(1.5) / 1.5 * std::expm1(2.0) / 2.0).epsilon(1e-14));
    const auto k = instance_from_params(GenzFamily::constant, {1.0, 1.0}, {0.0, 0.0});
    CHECK(exact_integral(k) == 1.0);
}

TEST_CASE("exact integrals agree with Gauss-Legendre quadrature") {
    auto rng = test_rng(43);
    for (auto f : kGenzFamilies) {
        for (int rep = 0; rep < 12; ++rep) {
            const int s = 1 + rep % 3;
            const auto inst = make_instance(f, s, default_h(s)[family_index(f)], rng);
            CAPTURE(family_name(f));
            CAPTURE(s);
            CHECK(rel(exact_integral(inst), oracle::genz_quadrature(inst)) < 1e-10);
        }
    }
    // 64 nodes per axis, the gaussian S = 2 case.
    const auto g = make_instance(GenzFamily::gaussian, 2, 2.8, rng);
    CHECK(rel(exact_integral(g), oracle::genz_quadrature<32>(g)) < 1e-10);
}

TEST_CASE("log10 error and median") {
    CHECK(log10_relative_error(2.0, 2.0) == kLog10ErrorFloor);
    CHECK(log10_relative_error(1.0, 1.001) == doctest::Approx(-3.0));
    CHECK(log10_relative_error(1.0, 1.0 + 1e-18) == kLog10ErrorFloor);
    CHECK(median({3.0}) == 3.0);
    CHECK(median({4.0, 1.0, 3.0, 2.0}) == 2.5);
    CHECK(median({5.0, 1.0, 3.0}) == 3.0);
    CHECK_THROWS_AS(median({}), std::invalid_argument);
}

TEST_CASE("benchmark instances are redrawn near a zero integral") {
    int redraws = -1;
    for (int k = 0; k < 50; ++k) {
        const auto inst = benchmark_instance(9, GenzFamily::oscillatory, 5, 4.5, k, &redraws);
        CHECK(std::fabs(exact_integral(inst)) >= 1e-12);
        CHECK(redraws >= 0);
    }
}

TEST_CASE("benchmark: constant control is exact, one sample gives its own value") {
    GeneratingMatrixSet g(30, 10, 3);
    for (int t = 0; t < 3; ++t) {
        for (int c = 0; c < 10; ++c) g.set_column(t, c, unit_column(30, c + 1));
    }
    BenchmarkConfig cfg;
    cfg.families = {GenzFamily::constant, GenzFamily::gaussian};
    cfg.h = default_h(3);
    cfg.d_min = 4;
    cfg.d_max = 10;
    cfg.samples = 1;
    const auto rows = run_benchmark(g, cfg);
    REQUIRE(rows.size() == 14);
    for (int i = 0; i < 7; ++i) {
        CHECK(rows[i].family == GenzFamily::constant);
        CHECK(rows[i].median_log10_relerr == kLog10ErrorFloor);
    }
    CHECK(rows[7].samples == 1);
    CHECK(rows[7].baseline_median_log10_relerr.has_value());
    cfg.d_max = 11;
    CHECK_THROWS_AS(run_benchmark(g, cfg), std::invalid_argument);
}

TEST_CASE("benchmark results do not depend on the thread count") {
    auto rng = test_rng(44);
    const auto g = testing_support::random_regular_net(30, 12, 5, rng);
    BenchmarkConfig cfg;
    cfg.d_min = 8;
    cfg.d_max = 12;
    cfg.samples = 4;
    cfg.threads = 1;
    const auto a = run_benchmark(g, cfg);
    cfg.threads = 5;
    const auto b = run_benchmark(g, cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].median_log10_relerr == b[i].median_log10_relerr);
        CHECK(*a[i].baseline_median_log10_relerr == *b[i].baseline_median_log10_relerr);
    }
}
