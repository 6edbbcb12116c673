#include "lowwafom/integrate.hpp"

#include "lowwafom/reduce.hpp"
#include "lowwafom/rng.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace lowwafom {

double half_cell_shift(int digits) { return std::ldexp(1.0, -(digits + 1)); }

namespace {

void check_request(const GeneratingMatrixSet& g, int d) {
    if (g.digits() > kMaxIntegrationDigits) {
        throw std::invalid_argument("integration needs n <= 52 for exact coordinates, got n=" +
                                    std::to_string(g.digits()));
    }
    if (d < 0 || d > g.columns()) {
        throw std::out_of_range("integration: d=" + std::to_string(d) + " outside [0, " +
                                std::to_string(g.columns()) + "]");
    }
}

[[noreturn]] void report_non_finite(double value, std::span<const double> x, const char* where,
                                    std::uint64_t index) {
    std::ostringstream msg;
    msg.precision(17);
    msg << where << ": integrand returned " << value << " at point #" << index << " (";
    for (std::size_t t = 0; t < x.size(); ++t) msg << (t ? ", " : "") << x[t];
    msg << ")";
    throw NonFiniteIntegrand(msg.str());
}

// Partial sums of f over Gray positions [begin, end). When `marks` is given,
// marks[k] receives the running sum after position 2^k - 1 for every 2^k
// inside (begin, end].
CompensatedSum qmc_chunk(const GeneratingMatrixSet& g, int d, const Integrand& f, double shift,
                         std::uint64_t begin, std::uint64_t end,
                         std::vector<CompensatedSum>* marks) {
    const double scale = std::ldexp(1.0, -g.digits());
    std::vector<double> x(g.dimension());
    CompensatedSum s;
    GrayCursor cursor(g, d, begin);
    for (std::uint64_t p = begin; p < end; ++p) {
        const auto c = cursor.coords();
        for (std::size_t t = 0; t < x.size(); ++t) x[t] = static_cast<double>(c[t]) * scale + shift;
        const double v = f(x);
        if (!std::isfinite(v)) report_non_finite(v, x, "qmc_integrate", p);
        s.add(v);
        cursor.advance();
        if (marks != nullptr && std::has_single_bit(p + 1)) {
            (*marks)[std::countr_zero(p + 1)] = s;
        }
    }
    return s;
}

std::vector<double> nested_from_chunks(int d_max, std::vector<CompensatedSum> marks,
                                       const std::vector<CompensatedSum>& chunk_sums) {
    std::vector<double> out(d_max + 1);
    const int chunk_log = std::countr_zero(kReduceChunk);
    for (int d = 0; d <= d_max; ++d) {
        CompensatedSum total;
        if (d <= chunk_log) {
            total.add(marks[d]);
        } else {
            const std::uint64_t used = std::uint64_t{1} << (d - chunk_log);
            for (std::uint64_t c = 0; c < used; ++c) total.add(chunk_sums[c]);
        }
        out[d] = std::ldexp(total.value(), -d);
    }
    return out;
}

}  // namespace

double qmc_integrate(const GeneratingMatrixSet& g, int d, const Integrand& f, bool shift,
                     int threads) {
    check_request(g, d);
    const double offset = shift ? half_cell_shift(g.digits()) : 0.0;
    const CompensatedSum total = chunked_sum(
        std::uint64_t{1} << d, threads, [&](std::uint64_t b, std::uint64_t e) {
            return qmc_chunk(g, d, f, offset, b, e, nullptr);
        });
    return std::ldexp(total.value(), -d);
}

std::vector<double> qmc_integrate_nested(const GeneratingMatrixSet& g, int d_max,
                                         const Integrand& f, bool shift, int threads) {
    check_request(g, d_max);
    const double offset = shift ? half_cell_shift(g.digits()) : 0.0;
    const std::uint64_t count = std::uint64_t{1} << d_max;
    const std::uint64_t chunks = (count + kReduceChunk - 1) / kReduceChunk;
    std::vector<CompensatedSum> chunk_sums(chunks);
    std::vector<CompensatedSum> marks(d_max + 1);
    parallel_for_chunks(chunks, threads, [&](std::uint64_t c) {
        const std::uint64_t b = c * kReduceChunk;
        const std::uint64_t e = std::min(count, b + kReduceChunk);
        chunk_sums[c] = qmc_chunk(g, d_max, f, offset, b, e, c == 0 ? &marks : nullptr);
    });
    return nested_from_chunks(d_max, std::move(marks), chunk_sums);
}

namespace {

CompensatedSum mc_chunk(const Integrand& f, int dimension, std::uint64_t seed, std::uint64_t chunk,
                        std::uint64_t begin, std::uint64_t end,
                        std::vector<CompensatedSum>* marks) {
    Rng rng = make_stream(seed, StreamTag::monte_carlo, {chunk});
    std::vector<double> x(dimension);
    CompensatedSum s;
    for (std::uint64_t k = begin; k < end; ++k) {
        for (auto& v : x) v = uniform01(rng);
        const double v = f(x);
        if (!std::isfinite(v)) report_non_finite(v, x, "mc_integrate", k);
        s.add(v);
        if (marks != nullptr && std::has_single_bit(k + 1)) (*marks)[std::countr_zero(k + 1)] = s;
    }
    return s;
}

void check_mc(int dimension, std::uint64_t samples) {
    if (dimension < 1) throw std::invalid_argument("mc_integrate: dimension must be positive");
    if (samples < 1) throw std::invalid_argument("mc_integrate: need at least one sample");
}

}  // namespace

double mc_integrate(const Integrand& f, int dimension, std::uint64_t samples, std::uint64_t seed,
                    int threads) {
    check_mc(dimension, samples);
    const CompensatedSum total =
        chunked_sum(samples, threads, [&](std::uint64_t b, std::uint64_t e) {
            return mc_chunk(f, dimension, seed, b / kReduceChunk, b, e, nullptr);
        });
    return total.value() / static_cast<double>(samples);
}

std::vector<double> mc_integrate_nested(const Integrand& f, int dimension, int d_max,
                                        std::uint64_t seed, int threads) {
    if (d_max < 0 || d_max > 62) throw std::invalid_argument("mc_integrate_nested: bad d_max");
    check_mc(dimension, 1);
    const std::uint64_t count = std::uint64_t{1} << d_max;
    const std::uint64_t chunks = (count + kReduceChunk - 1) / kReduceChunk;
    std::vector<CompensatedSum> chunk_sums(chunks);
    std::vector<CompensatedSum> marks(d_max + 1);
    parallel_for_chunks(chunks, threads, [&](std::uint64_t c) {
        const std::uint64_t b = c * kReduceChunk;
        const std::uint64_t e = std::min(count, b + kReduceChunk);
        chunk_sums[c] = mc_chunk(f, dimension, seed, c, b, e, c == 0 ? &marks : nullptr);
    });
    return nested_from_chunks(d_max, std::move(marks), chunk_sums);
}

}  // namespace lowwafom
