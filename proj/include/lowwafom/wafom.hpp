#pragma once

// Walsh figure of merit of an F2-linear point set:
//
//   WAFOM(P) = 1/|P| * sum_{x in P} ( prod_T prod_j (1 + (-1)^{x_{j,T}} 2^-j) - 1 )
//
// Two evaluators are provided. The naive one walks every bit of every
// coordinate. The tabled one splits each n-bit coordinate into q segments of
// l = n/q bits and replaces the per-bit product with q table lookups.

#include "lowwafom/f2.hpp"

#include <span>
#include <vector>

namespace lowwafom {

/// Widest supported segment: 2^24 doubles (128 MiB) per table.
inline constexpr int kMaxSegmentBits = 24;

struct WafomValue {
    double value = 0.0;
    int d = 0;
    int digits = 0;
    int dimension = 0;
};

/// Precomputed per-segment products. Entry (i, e), i = 0..q-1, e = 0..2^l-1,
/// is prod_{j=1..l} (1 + (-1)^{e_j} 2^{-(i*l + j)}) where e_1 is the top bit
/// of e. Immutable after construction.
class WafomTableSet {
  public:
    /// Throws std::invalid_argument unless 1 <= segments, segments divides
    /// digits, and the segment width is at most kMaxSegmentBits.
    WafomTableSet(int digits, int segments);

    int digits() const { return digits_; }
    int segments() const { return segments_; }
    int segment_bits() const { return segment_bits_; }

    std::span<const double> table(int segment) const {
        const std::size_t width = std::size_t{1} << segment_bits_;
        return {entries_.data() + static_cast<std::size_t>(segment) * width, width};
    }

    /// Segment i (0-based) of a column read as an l-bit integer, rows
    /// i*l+1 .. (i+1)*l with the first of them as the most significant bit.
    std::uint32_t segment_index(BitColumn col, int segment) const {
        return static_cast<std::uint32_t>((col >> (digits_ - (segment + 1) * segment_bits_)) &
                                          segment_mask_);
    }

    /// prod_j (1 + (-1)^{x_j} 2^-j) for one coordinate column.
    double coordinate_factor(BitColumn col) const {
        const std::size_t width = std::size_t{1} << segment_bits_;
        const double* base = entries_.data();
        int shift = digits_ - segment_bits_;
        double p = base[(col >> shift) & segment_mask_];
        for (int i = 1; i < segments_; ++i) {
            base += width;
            shift -= segment_bits_;
            p *= base[(col >> shift) & segment_mask_];
        }
        return p;
    }

    /// The braced summand for one point: prod over coordinates minus one.
    double point_term(std::span<const BitColumn> coords) const {
        double p = 1.0;
        for (BitColumn c : coords) p *= coordinate_factor(c);
        return p - 1.0;
    }

  private:
    int digits_;
    int segments_;
    int segment_bits_;
    BitColumn segment_mask_;
    std::vector<double> entries_;
};

/// Same as the constructor; kept as a named operation.
WafomTableSet build_tables(int digits, int segments);

/// prod_T prod_j (1 + (-1)^{x_{j,T}} 2^-j) - 1, evaluated bit by bit.
double wafom_point_term(std::span<const BitColumn> coords, int digits);
double wafom_point_term(const NetPoint& x);

/// Naive O(n S N) evaluation of WAFOM(P_d) over the Gray-code enumeration.
/// `threads` = 0 uses all hardware threads; the result does not depend on it.
WafomValue wafom_naive(const GeneratingMatrixSet& g, int d, int threads = 1);

/// Lookup-table O(S N) evaluation; throws if the tables were built for a
/// different digit count.
WafomValue wafom_tabled(const GeneratingMatrixSet& g, int d, const WafomTableSet& tables,
                        int threads = 1);

}  // namespace lowwafom
