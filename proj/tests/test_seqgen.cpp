#include "lowwafom/seqgen.hpp"

#include "oracles/rational_wafom.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace lowwafom;
using testing_support::test_rng;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

SeqGenConfig random_config(int n, int d, Rng& rng) {
    std::uint64_t init = 0;
    while (init == 0) init = rng() & low_mask(d);
    return {primitive_poly(d), n, random_regular_u(n, d, rng, false), init};
}

std::vector<NetPoint> sorted(std::vector<NetPoint> v) {
    std::sort(v.begin(), v.end());
    return v;
}

const PrimitivePoly kTrinomial2(2, 0b111);  // 1 + t + t^2

}  // namespace

TEST_CASE("shipped polynomials are primitive for every degree") {
    for (int d = 1; d <= 32; ++d) {
        const auto& p = primitive_poly(d);
        CHECK(p.degree() == d);
        CHECK(p.is_primitive());
    }
    CHECK_THROWS_AS(primitive_poly(33), std::out_of_range);
}

TEST_CASE("primitivity test rejects reducible and non-primitive irreducible polynomials") {
    CHECK_FALSE(PrimitivePoly(2, 0b101).is_primitive());       // (1 + t)^2
    CHECK_FALSE(PrimitivePoly(4, 0b11111).is_primitive());     // irreducible, order 5
    CHECK(PrimitivePoly(4, 0b10011).is_primitive());
    CHECK_THROWS_AS(PrimitivePoly(3, 0b1010), std::invalid_argument);
    CHECK_THROWS_AS(PrimitivePoly(33, 1), std::invalid_argument);
}

TEST_CASE("M-sequence: hand recursion for 1 + t + t^2") {
    const auto z = msequence(kTrinomial2, 0b01, 6);
    CHECK(z == std::vector<std::uint8_t>{1, 0, 1, 1, 0, 1});
    CHECK(msequence(kTrinomial2, 1, 0).empty());
    CHECK_THROWS_AS(msequence(kTrinomial2, 0, 4), std::invalid_argument);
}

TEST_CASE("M-sequence follows the recursion and visits every nonzero state once") {
    for (int d = 2; d <= 10; ++d) {
        const auto& p = primitive_poly(d);
        const std::uint64_t period = (std::uint64_t{1} << d) - 1;
        const auto z = msequence(p, 1, period + d);
        for (std::uint64_t j = 0; j + d < z.size(); ++j) {
            int v = 0;
            for (int i = 1; i <= d; ++i) v ^= p.coefficient(i) & z[j + d - i];
            CHECK(z[j + d] == v);
        }
        std::set<std::uint64_t> states;
        for (std::uint64_t j = 0; j < period; ++j) {
            std::uint64_t s = 0;
            for (int c = 0; c < d; ++c) s |= static_cast<std::uint64_t>(z[j + c]) << c;
            states.insert(s);
        }
        CHECK(states.size() == period);
        CHECK(states.count(0) == 0);
    }
}

TEST_CASE("companion matrix") {
    const auto a = companion_matrix(kTrinomial2);
    CHECK(a.at(0, 0) == 0);
    CHECK(a.at(0, 1) == 1);
    CHECK(a.at(1, 0) == 1);
    CHECK(a.at(1, 1) == 1);
    for (std::uint64_t z = 0; z < 4; ++z) {
        const std::uint64_t z0 = z & 1;
        const std::uint64_t z1 = z >> 1;
        CHECK(a.apply(z) == (z1 | ((z0 ^ z1) << 1)));
    }
}

TEST_CASE("companion matrix advances the recursion state and has full order") {
    for (int d = 2; d <= 8; ++d) {
        const auto& p = primitive_poly(d);
        const auto a = companion_matrix(p);
        const auto z = msequence(p, 1, 40);
        std::uint64_t state = 1;
        for (int j = 0; j + d < 40; ++j) {
            std::uint64_t expect = 0;
            for (int c = 0; c < d; ++c) expect |= static_cast<std::uint64_t>(z[j + 1 + c]) << c;
            state = a.apply(state);
            CHECK(state == expect);
        }
        const std::uint64_t order = (std::uint64_t{1} << d) - 1;
        auto power = BitSquareMatrix::identity(d);
        for (std::uint64_t k = 1; k <= order; ++k) {
            power = power * a;
            if (k < order) CHECK_FALSE(power == BitSquareMatrix::identity(d));
        }
        CHECK(power == BitSquareMatrix::identity(d));
    }
}

TEST_CASE("points: S = 1 hits every value of U, cardinality 2^d") {
    auto rng = test_rng(30);
    const auto cfg = random_config(12, 6, rng);
    const auto pts = seqgen_points(cfg, 1);
    REQUIRE(pts.size() == 64);
    std::set<BitColumn> values;
    for (const auto& x : pts) values.insert(x.coords[0]);
    std::set<BitColumn> image;
    for (std::uint64_t z = 0; z < 64; ++z) {
        BitColumn v = 0;
        for (int c = 0; c < 6; ++c) {
            if ((z >> c) & 1U) v ^= cfg.u[c];
        }
        image.insert(v);
    }
    CHECK(values == image);
    CHECK(seqgen_as_digital_net(cfg, 1).matrix(0).size() == 6);
    CHECK(std::equal(cfg.u.begin(), cfg.u.end(), seqgen_as_digital_net(cfg, 1).matrix(0).begin()));
}

TEST_CASE("points: d = 2, S = 2 by hand") {
    // U has the identity as its top block (n = 2), so U z = z read MSB-first.
    const SeqGenConfig cfg{kTrinomial2, 2, {0b10, 0b01}, 0b01};
    // z = 1,0,1,1,0,... ; windows (z_j, z_{j+1}) and (z_{j+1}, z_{j+2}).
    // U z_j has row 1 = z_j and row 2 = z_{j+1}.
    const auto pts = seqgen_points(cfg, 2);
    std::vector<NetPoint> expect;
    const std::vector<int> z = {1, 0, 1, 1, 0};
    for (int j = 0; j < 3; ++j) {
        NetPoint x(2, 2);
        x.coords[0] = static_cast<BitColumn>(z[j] << 1 | z[j + 1]);
        x.coords[1] = static_cast<BitColumn>(z[j + 1] << 1 | z[j + 2]);
        expect.push_back(x);
    }
    expect.emplace_back(2, 2);
    CHECK(pts == expect);
}

TEST_CASE("digital-net equivalence and projection property") {
    auto rng = test_rng(31);
    for (int rep = 0; rep < 30; ++rep) {
        const int d = 2 + rep % 11;
        const int s = 1 + rep % 5;
        const auto cfg = random_config(30, d, rng);
        const auto pts = seqgen_points(cfg, s);
        const auto g = seqgen_as_digital_net(cfg, s);
        CHECK(sorted(pts) == sorted(enumerate_points_gray(g, d)));
        std::set<NetPoint> unique(pts.begin(), pts.end());
        CHECK(unique.size() == (std::size_t{1} << d));
        for (int t = 0; t < s; ++t) CHECK(is_upper_square_regular(g.matrix(t), 30));
    }
}

TEST_CASE("C_3 = U A^2") {
    auto rng = test_rng(32);
    const auto cfg = random_config(20, 5, rng);
    const auto g = seqgen_as_digital_net(cfg, 3);
    const auto a = companion_matrix(cfg.poly);
    const auto a2 = a * a;
    for (int c = 0; c < 5; ++c) {
        BitColumn expect = 0;
        for (int r = 0; r < 5; ++r) {
            if (a2.at(r, c)) expect ^= cfg.u[r];
        }
        CHECK(g.column(2, c) == expect);
    }
}

TEST_CASE("sequential WAFOM matches the tabled evaluator") {
    auto rng = test_rng(33);
    const auto t = build_tables(30, 3);
    for (int rep = 0; rep < 10; ++rep) {
        const int d = 4 + rep % 7;
        const int s = 1 + rep % 5;
        const auto cfg = random_config(30, d, rng);
        const double seq = wafom_sequential(cfg, s, t).value;
        const double net = wafom_tabled(seqgen_as_digital_net(cfg, s), d, t).value;
        CHECK(rel(seq, net) < 1e-9);
    }
}

TEST_CASE("sequential WAFOM: tiny case against exact rationals") {
    const SeqGenConfig cfg{kTrinomial2, 4, {0b1011, 0b0110}, 0b01};
    const auto g = seqgen_as_digital_net(cfg, 2);
    const double exact = oracle::wafom(g, 2).convert_to<double>();
    CHECK(rel(wafom_sequential(cfg, 2, build_tables(4, 2)).value, exact) < 1e-13);
}

TEST_CASE("sliding product drift stays small over 2^20 steps") {
    auto rng = test_rng(34);
    const auto cfg = random_config(30, 20, rng);
    const auto t = build_tables(30, 3);
    const double anchored = wafom_sequential(cfg, 5, t).value;
    const double fresh = wafom_sequential(cfg, 5, t, 1).value;
    CHECK(rel(anchored, fresh) < 1e-9);
}

TEST_CASE("random U keeps the top block regular") {
    auto rng = test_rng(35);
    for (int rep = 0; rep < 100; ++rep) {
        const int d = 1 + rep % 30;
        const auto u = random_regular_u(30, d, rng, rep % 2 == 0);
        CHECK(is_upper_square_regular(u, 30));
        if (rep % 2 == 0) {
            for (BitColumn c : u) CHECK((c & low_mask(30 - d)) == 0);
        }
    }
    CHECK_THROWS_AS(random_regular_u(10, 11, rng, false), std::invalid_argument);
}

TEST_CASE("config validation") {
    const SeqGenConfig singular{kTrinomial2, 4, {0b1000, 0b1000}, 1};
    CHECK_THROWS_AS(singular.validate(), std::invalid_argument);
    const SeqGenConfig zero_init{kTrinomial2, 4, {0b1000, 0b0100}, 0};
    CHECK_THROWS_AS(zero_init.validate(), std::invalid_argument);
}

TEST_CASE("seqgen search: stage split, determinism, result matches its own evaluation") {
    SeqGenSearchConfig cfg;
    cfg.degree = 8;
    cfg.trials = 40;
    cfg.seed = 3;
    const auto a = seqgen_search(cfg);
    cfg.threads = 4;
    const auto b = seqgen_search(cfg);
    CHECK(a.stage1_trials == 20);
    CHECK(a.stage2_trials == 20);
    CHECK(a.best.u == b.best.u);
    CHECK(a.wafom == b.wafom);
    const auto t = build_tables(30, 3);
    CHECK(a.wafom == wafom_sequential(a.best, 5, t).value);
    CHECK(is_upper_square_regular(a.best.u, 30));
}
