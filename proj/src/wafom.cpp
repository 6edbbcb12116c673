#include "lowwafom/wafom.hpp"

#include "lowwafom/reduce.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lowwafom {

WafomTableSet::WafomTableSet(int digits, int segments) : digits_(digits), segments_(segments) {
    if (digits < 1 || digits > kMaxDigits) {
        throw std::invalid_argument("tables: digit count out of range: " + std::to_string(digits));
    }
    if (segments < 1 || digits % segments != 0) {
        throw std::invalid_argument("tables: segment count " + std::to_string(segments) +
                                    " must divide digit count " + std::to_string(digits));
    }
    segment_bits_ = digits / segments;
    if (segment_bits_ > kMaxSegmentBits) {
        throw std::invalid_argument("tables: segment width " + std::to_string(segment_bits_) +
                                    " bits exceeds " + std::to_string(kMaxSegmentBits) + "; use more segments");
    }
    segment_mask_ = low_mask(segment_bits_);
    const std::size_t width = std::size_t{1} << segment_bits_;
    entries_.resize(static_cast<std::size_t>(segments) * width);
    for (int i = 0; i < segments; ++i) {
        for (std::size_t e = 0; e < width; ++e) {
            double p = 1.0;
            for (int j = 1; j <= segment_bits_; ++j) {
                const int bit = static_cast<int>((e >> (segment_bits_ - j)) & 1U);
                const double w = std::ldexp(1.0, -(i * segment_bits_ + j));
                p *= bit ? 1.0 - w : 1.0 + w;
            }
            entries_[static_cast<std::size_t>(i) * width + e] = p;
        }
    }
}

WafomTableSet build_tables(int digits, int segments) { return WafomTableSet(digits, segments); }

double wafom_point_term(std::span<const BitColumn> coords, int digits) {
    double p = 1.0;
    for (BitColumn c : coords) {
        double w = 1.0;
        for (int j = 1; j <= digits; ++j) {
            w *= 0.5;
            p *= ((c >> (digits - j)) & 1U) ? 1.0 - w : 1.0 + w;
        }
    }
    return p - 1.0;
}

double wafom_point_term(const NetPoint& x) { return wafom_point_term(x.coords, x.digits); }

namespace {

void check_depth(const GeneratingMatrixSet& g, int d) {
    if (d < 0 || d > g.columns()) {
        throw std::out_of_range("WAFOM: d=" + std::to_string(d) + " outside [0, " +
                                std::to_string(g.columns()) + "]");
    }
}

template <class Term>
WafomValue gray_mean(const GeneratingMatrixSet& g, int d, int threads, Term&& term) {
    const std::uint64_t count = std::uint64_t{1} << d;
    const CompensatedSum total =
        chunked_sum(count, threads, [&](std::uint64_t begin, std::uint64_t end) {
            CompensatedSum s;
            GrayCursor cursor(g, d, begin);
            for (std::uint64_t p = begin; p < end; ++p) {
                s.add(term(cursor.coords()));
                cursor.advance();
            }
            return s;
        });
    return {std::ldexp(total.value(), -d), d, g.digits(), g.dimension()};
}

}  // namespace

WafomValue wafom_naive(const GeneratingMatrixSet& g, int d, int threads) {
    check_depth(g, d);
    const int digits = g.digits();
    return gray_mean(g, d, threads, [digits](std::span<const BitColumn> coords) {
        return wafom_point_term(coords, digits);
    });
}

WafomValue wafom_tabled(const GeneratingMatrixSet& g, int d, const WafomTableSet& tables,
                        int threads) {
    check_depth(g, d);
    if (tables.digits() != g.digits()) {
        throw std::invalid_argument("WAFOM tables built for n=" + std::to_string(tables.digits()) +
                                    " but matrices have n=" + std::to_string(g.digits()));
    }
    return gray_mean(g, d, threads, [&tables](std::span<const BitColumn> coords) {
        return tables.point_term(coords);
    });
}

}  // namespace lowwafom
