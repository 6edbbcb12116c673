#include "lowwafom/seqgen.hpp"

#include "lowwafom/reduce.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

namespace lowwafom {

PrimitivePoly::PrimitivePoly(int degree, std::uint64_t coefficients)
    : degree_(degree), coeffs_(coefficients) {
    if (degree < 1 || degree > 32) {
        throw std::invalid_argument("polynomial degree must lie in [1, 32], got " +
                                    std::to_string(degree));
    }
    if ((coefficients >> (degree + 1)) != 0 || ((coefficients >> degree) & 1U) == 0 ||
        (coefficients & 1U) == 0) {
        throw std::invalid_argument("polynomial mask must have a_0 = a_d = 1 and degree " +
                                    std::to_string(degree));
    }
}

namespace {

// a * b mod p over F2, all of degree < deg(p) <= 32.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p, int degree) {
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1U) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> degree) & 1U) a ^= p;
    }
    return r;
}

std::uint64_t powmod_t(std::uint64_t e, std::uint64_t p, int degree) {
    // t mod p; for degree 1 the polynomial is 1 + t and t == 1.
    std::uint64_t base = degree == 1 ? 1 : 2;
    std::uint64_t r = 1;
    while (e != 0) {
        if (e & 1U) r = mulmod(r, base, p, degree);
        base = mulmod(base, base, p, degree);
        e >>= 1;
    }
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= v; ++f) {
        if (v % f == 0) {
            out.push_back(f);
            while (v % f == 0) v /= f;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

constexpr std::uint64_t terms(int degree, std::initializer_list<int> middle) {
    std::uint64_t m = 1 | (std::uint64_t{1} << degree);
    for (int e : middle) m |= std::uint64_t{1} << e;
    return m;
}

// One primitive polynomial per degree; the list holds the exponents besides 0 and d.
const std::array<std::uint64_t, 33> kPolyMasks = {
    0,
    terms(1, {}),
    terms(2, {1}),
    terms(3, {1}),
    terms(4, {1}),
    terms(5, {2}),
    terms(6, {1}),
    terms(7, {1}),
    terms(8, {4, 3, 2}),
    terms(9, {4}),
    terms(10, {3}),
    terms(11, {2}),
    terms(12, {6, 4, 1}),
    terms(13, {4, 3, 1}),
    terms(14, {5, 3, 1}),
    terms(15, {1}),
    terms(16, {5, 3, 2}),
    terms(17, {3}),
    terms(18, {7}),
    terms(19, {5, 2, 1}),
    terms(20, {3}),
    terms(21, {2}),
    terms(22, {1}),
    terms(23, {5}),
    terms(24, {4, 3, 1}),
    terms(25, {3}),
    terms(26, {6, 2, 1}),
    terms(27, {5, 2, 1}),
    terms(28, {3}),
    terms(29, {2}),
    terms(30, {6, 4, 1}),
    terms(31, {3}),
    terms(32, {7, 6, 2}),
};

}  // namespace

bool PrimitivePoly::is_primitive() const {
    const std::uint64_t order = (std::uint64_t{1} << degree_) - 1;
    if (powmod_t(order, coeffs_, degree_) != 1) return false;
    for (std::uint64_t f : prime_factors(order)) {
        if (powmod_t(order / f, coeffs_, degree_) == 1) return false;
    }
    return true;
}

const PrimitivePoly& primitive_poly(int degree) {
    if (degree < 1 || degree > 32) {
        throw std::out_of_range("no shipped primitive polynomial of degree " +
                                std::to_string(degree));
    }
    static std::array<std::once_flag, 33> verified;
    static std::vector<PrimitivePoly> polys = [] {
        std::vector<PrimitivePoly> v;
        for (int d = 1; d <= 32; ++d) v.emplace_back(d, kPolyMasks[d]);
        return v;
    }();
    const PrimitivePoly& p = polys[degree - 1];
    std::call_once(verified[degree], [&] {
        if (!p.is_primitive()) {
            throw std::logic_error("shipped polynomial of degree " + std::to_string(degree) +
                                   " is not primitive");
        }
    });
    return p;
}

BitSquareMatrix BitSquareMatrix::identity(int size) {
    BitSquareMatrix m{size, std::vector<std::uint64_t>(size)};
    for (int r = 0; r < size; ++r) m.rows[r] = std::uint64_t{1} << r;
    return m;
}

std::uint64_t BitSquareMatrix::apply(std::uint64_t v) const {
    std::uint64_t out = 0;
    for (int r = 0; r < size; ++r) {
        out |= static_cast<std::uint64_t>(std::popcount(rows[r] & v) & 1) << r;
    }
    return out;
}

BitSquareMatrix BitSquareMatrix::operator*(const BitSquareMatrix& rhs) const {
    if (size != rhs.size) throw std::invalid_argument("matrix product: size mismatch");
    BitSquareMatrix out{size, std::vector<std::uint64_t>(size, 0)};
    for (int r = 0; r < size; ++r) {
        for (std::uint64_t rest = rows[r]; rest != 0; rest &= rest - 1) {
            out.rows[r] ^= rhs.rows[std::countr_zero(rest)];
        }
    }
    return out;
}

BitSquareMatrix companion_matrix(const PrimitivePoly& poly) {
    const int d = poly.degree();
    BitSquareMatrix a{d, std::vector<std::uint64_t>(d, 0)};
    for (int r = 0; r + 1 < d; ++r) a.rows[r] = std::uint64_t{1} << (r + 1);
    for (int c = 0; c < d; ++c) {
        a.rows[d - 1] |= static_cast<std::uint64_t>(poly.coefficient(d - c)) << c;
    }
    return a;
}

namespace {

// Feedback taps on the packed state: bit c is a_{d-c}.
std::uint64_t feedback_mask(const PrimitivePoly& poly) {
    const int d = poly.degree();
    std::uint64_t m = 0;
    for (int c = 0; c < d; ++c) m |= static_cast<std::uint64_t>(poly.coefficient(d - c)) << c;
    return m;
}

}  // namespace

std::vector<std::uint8_t> msequence(const PrimitivePoly& poly, std::uint64_t init,
                                    std::size_t length) {
    const int d = poly.degree();
    if (init == 0 || (init >> d) != 0) {
        throw std::invalid_argument("M-sequence needs a nonzero initial state of " +
                                    std::to_string(d) + " bits");
    }
    const std::uint64_t taps = feedback_mask(poly);
    std::vector<std::uint8_t> out(length);
    std::uint64_t state = init;
    for (std::size_t j = 0; j < length; ++j) {
        out[j] = static_cast<std::uint8_t>(state & 1U);
        const std::uint64_t next = static_cast<std::uint64_t>(std::popcount(state & taps) & 1);
        state = (state >> 1) | (next << (d - 1));
    }
    return out;
}

void SeqGenConfig::validate() const {
    const int d = poly.degree();
    if (digits < 1 || digits > kMaxDigits) throw std::invalid_argument("seqgen: bad digit count");
    if (d > digits) throw std::invalid_argument("seqgen: degree exceeds digit count");
    if (static_cast<int>(u.size()) != d) {
        throw std::invalid_argument("seqgen: U must have " + std::to_string(d) + " columns");
    }
    for (BitColumn c : u) {
        if ((c & ~low_mask(digits)) != 0) throw std::invalid_argument("seqgen: U column too wide");
    }
    if (!is_upper_square_regular(u, digits)) {
        throw std::invalid_argument("seqgen: upper d x d block of U is singular");
    }
    if (init == 0 || (init >> d) != 0) throw std::invalid_argument("seqgen: bad initial state");
}

namespace {

BitColumn apply_u(std::span<const BitColumn> u, std::uint64_t state) {
    BitColumn out = 0;
    for (std::uint64_t rest = state; rest != 0; rest &= rest - 1) out ^= u[std::countr_zero(rest)];
    return out;
}

// U z_j for j = 0 .. count-1, generated by the state recursion itself.
std::vector<BitColumn> output_columns(const SeqGenConfig& cfg, std::uint64_t count) {
    const int d = cfg.poly.degree();
    std::vector<BitColumn> y(count);
    std::uint64_t state = cfg.init;
    const std::uint64_t first = std::min<std::uint64_t>(count, static_cast<std::uint64_t>(d));
    const std::uint64_t taps = feedback_mask(cfg.poly);
    for (std::uint64_t j = 0; j < first; ++j) {
        y[j] = apply_u(cfg.u, state);
        const std::uint64_t next = static_cast<std::uint64_t>(std::popcount(state & taps) & 1);
        state = (state >> 1) | (next << (d - 1));
    }
    // y obeys the same recursion as z: y_{j+d} = sum_i a_i y_{j+d-i}.
    std::vector<int> lags;
    for (int i = 1; i <= d; ++i) {
        if (cfg.poly.coefficient(i)) lags.push_back(i);
    }
    for (std::uint64_t j = d; j < count; ++j) {
        BitColumn v = 0;
        for (int i : lags) v ^= y[j - i];
        y[j] = v;
    }
    return y;
}

}  // namespace

std::vector<NetPoint> seqgen_points(const SeqGenConfig& cfg, int dimension) {
    cfg.validate();
    if (dimension < 1) throw std::invalid_argument("seqgen: dimension must be positive");
    const std::uint64_t period = (std::uint64_t{1} << cfg.poly.degree()) - 1;
    const auto y = output_columns(cfg, period + dimension - 1);
    std::vector<NetPoint> pts;
    pts.reserve(period + 1);
    for (std::uint64_t j = 0; j < period; ++j) {
        NetPoint x(cfg.digits, static_cast<std::size_t>(dimension));
        for (int i = 0; i < dimension; ++i) x.coords[i] = y[j + i];
        pts.push_back(std::move(x));
    }
    pts.emplace_back(cfg.digits, static_cast<std::size_t>(dimension));
    return pts;
}

GeneratingMatrixSet seqgen_as_digital_net(const SeqGenConfig& cfg, int dimension) {
    cfg.validate();
    if (dimension < 1) throw std::invalid_argument("seqgen: dimension must be positive");
    const int d = cfg.poly.degree();
    const BitSquareMatrix a = companion_matrix(cfg.poly);
    GeneratingMatrixSet g(cfg.digits, d, dimension);
    BitSquareMatrix power = BitSquareMatrix::identity(d);
    for (int i = 0; i < dimension; ++i) {
        // Column c of U A^i is U applied to column c of A^i.
        for (int c = 0; c < d; ++c) {
            std::uint64_t col = 0;
            for (int r = 0; r < d; ++r) col |= static_cast<std::uint64_t>(power.at(r, c)) << r;
            g.set_column(i, c, apply_u(cfg.u, col));
        }
        power = power * a;
    }
    return g;
}

WafomValue wafom_sequential(const SeqGenConfig& cfg, int dimension, const WafomTableSet& tables,
                            std::uint64_t reanchor) {
    cfg.validate();
    if (tables.digits() != cfg.digits) {
        throw std::invalid_argument("seqgen: tables built for a different digit count");
    }
    if (dimension < 1) throw std::invalid_argument("seqgen: dimension must be positive");
    if (reanchor == 0) reanchor = 1;
    const int d = cfg.poly.degree();
    const std::uint64_t period = (std::uint64_t{1} << d) - 1;
    const auto y = output_columns(cfg, period + dimension - 1);

    std::vector<double> factor(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) factor[j] = tables.coordinate_factor(y[j]);

    auto window_product = [&](std::uint64_t j) {
        double p = 1.0;
        for (int i = 0; i < dimension; ++i) p *= factor[j + i];
        return p;
    };

    CompensatedSum sum;
    sum.add(tables.point_term(std::vector<BitColumn>(dimension, 0)));
    double running = window_product(0);
    for (std::uint64_t j = 0; j < period; ++j) {
        if (j != 0) {
            // With one or two coordinates a fresh product is as cheap as sliding.
            if (dimension <= 2 || j % reanchor == 0) {
                running = window_product(j);
            } else {
                running = running * factor[j + dimension - 1] / factor[j - 1];
            }
        }
        sum.add(running - 1.0);
    }
    return {std::ldexp(sum.value(), -d), d, cfg.digits, dimension};
}

std::vector<BitColumn> random_regular_u(int digits, int degree, Rng& rng, bool top_block_only) {
    if (degree < 1 || degree > digits) {
        throw std::invalid_argument("random U: need 1 <= d <= n");
    }
    std::vector<BitColumn> u(degree);
    std::vector<std::uint64_t> basis;  // reduced top-block vectors, distinct leading bits
    const int low = digits - degree;
    for (int c = 0; c < degree; ++c) {
        for (;;) {
            const std::uint64_t top = rng() & low_mask(degree);
            std::uint64_t v = top;
            for (std::uint64_t b : basis) {
                if ((v ^ b) < v) v ^= b;
            }
            if (v == 0) continue;
            auto it = basis.begin();
            while (it != basis.end() && *it > v) ++it;
            basis.insert(it, v);
            u[c] = top << low;
            break;
        }
    }
    if (!top_block_only && low > 0) {
        for (auto& col : u) col |= rng() & low_mask(low);
    }
    return u;
}

SeqGenSearchResult seqgen_search(const SeqGenSearchConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("seqgen search: need at least one trial");
    if (cfg.degree < 1 || cfg.degree > cfg.digits) {
        throw std::invalid_argument("seqgen search: degree must lie in [1, n]");
    }
    const WafomTableSet tables(cfg.digits, cfg.segments);
    const PrimitivePoly& poly = primitive_poly(cfg.degree);
    const int low = cfg.digits - cfg.degree;

    SeqGenSearchResult result{SeqGenConfig{poly, cfg.digits, {}, 1}, 0.0, 0, 0};
    result.stage1_trials = std::max<std::uint64_t>(1, cfg.trials / 2);
    result.stage2_trials = cfg.trials - result.stage1_trials;

    auto run_stage = [&](std::uint64_t count, std::uint64_t stage, auto&& make_u) {
        std::vector<double> values(count);
        std::vector<std::vector<BitColumn>> us(count);
        parallel_for_chunks(count, cfg.threads, [&](std::uint64_t t) {
            Rng rng = make_stream(cfg.seed, StreamTag::seqgen_trial,
                                  {static_cast<std::uint64_t>(cfg.degree), stage, t});
            us[t] = make_u(rng);
            SeqGenConfig trial{poly, cfg.digits, us[t], 1};
            values[t] = wafom_sequential(trial, cfg.dimension, tables).value;
        });
        std::uint64_t best = 0;
        for (std::uint64_t t = 1; t < count; ++t) {
            if (values[t] < values[best]) best = t;
        }
        return std::pair{values[best], std::move(us[best])};
    };

    auto [w1, u1] = run_stage(result.stage1_trials, 1, [&](Rng& rng) {
        return random_regular_u(cfg.digits, cfg.degree, rng, true);
    });
    result.best.u = u1;
    result.wafom = w1;

    if (result.stage2_trials > 0 && low > 0) {
        const std::vector<BitColumn> block = u1;
        auto [w2, u2] = run_stage(result.stage2_trials, 2, [&](Rng& rng) {
            std::vector<BitColumn> u = block;
            for (auto& col : u) col |= rng() & low_mask(low);
            return u;
        });
        if (w2 < result.wafom) {
            result.wafom = w2;
            result.best.u = std::move(u2);
        }
    }
    return result;
}

}  // namespace lowwafom
