#pragma once

// Bit-exact F2 linear algebra for digital nets.
//
// Bit convention (used everywhere, including the WAFOM segment indexer and
// the matrix file format): an n-bit column is stored in the low n bits of a
// std::uint64_t, and row j (1-based, weight 2^-j) lives at bit (n - j). Row 1
// is therefore the most significant used bit, and the integer value of a
// coordinate column divided by 2^n is the coordinate itself.

#include <cstdint>
#include <span>
#include <vector>

namespace lowwafom {

using BitColumn = std::uint64_t;

inline constexpr int kMaxDigits = 62;

constexpr BitColumn low_mask(int bits) {
    return bits >= 64 ? ~BitColumn{0} : (BitColumn{1} << bits) - 1;
}

/// Column with a single 1 in row `row` (1-based) of an n-row column.
constexpr BitColumn unit_column(int digits, int row) {
    return BitColumn{1} << (digits - row);
}

/// Value of row `row` (1-based).
constexpr int row_bit(BitColumn col, int digits, int row) {
    return static_cast<int>((col >> (digits - row)) & 1U);
}

/// One point of a digital net: S coordinate columns of `digits` bits each.
struct NetPoint {
    int digits = 0;
    std::vector<BitColumn> coords;

    NetPoint() = default;
    NetPoint(int n, std::size_t dimension) : digits(n), coords(dimension, 0) {}

    std::size_t dimension() const { return coords.size(); }

    NetPoint& operator^=(const NetPoint& other);
    friend NetPoint operator^(NetPoint a, const NetPoint& b) { return a ^= b; }
    friend bool operator==(const NetPoint&, const NetPoint&) = default;
    friend auto operator<=>(const NetPoint&, const NetPoint&) = default;
};

/// S generating matrices over F2, each with `digits` rows and `columns` columns.
class GeneratingMatrixSet {
  public:
    GeneratingMatrixSet() = default;
    /// All-zero matrices.
    GeneratingMatrixSet(int digits, int columns, int dimension);
    /// `data` is coordinate-major: data[i * columns + c] is column c of C_{i+1}.
    GeneratingMatrixSet(int digits, int columns, int dimension, std::vector<BitColumn> data);

    int digits() const { return digits_; }
    int columns() const { return columns_; }
    int dimension() const { return dimension_; }

    BitColumn column(int coord, int col) const { return data_[index(coord, col)]; }
    void set_column(int coord, int col, BitColumn value);

    /// Columns of C_{coord+1}.
    std::span<const BitColumn> matrix(int coord) const {
        return {data_.data() + static_cast<std::size_t>(coord) * columns_,
                static_cast<std::size_t>(columns_)};
    }
    std::span<const BitColumn> data() const { return data_; }

    /// The first `count` columns of every matrix.
    GeneratingMatrixSet truncated(int count) const;

    /// True iff for every coordinate and every d = 1..columns the upper d x d
    /// block of the first d columns is invertible (each 1-d projection of P_d
    /// is a (0,d,1)-net).
    bool projection_regular() const;

    friend bool operator==(const GeneratingMatrixSet&, const GeneratingMatrixSet&) = default;

  private:
    std::size_t index(int coord, int col) const {
        return static_cast<std::size_t>(coord) * columns_ + col;
    }

    int digits_ = 0;
    int columns_ = 0;
    int dimension_ = 0;
    std::vector<BitColumn> data_;
};

/// Rank test of the d x d matrix formed by rows 1..d of `cols` (d = cols.size()).
/// Throws std::invalid_argument if d > digits or d == 0.
bool is_upper_square_regular(std::span<const BitColumn> cols, int digits);

/// Same check with an explicit d; throws if cols.size() != d.
bool is_upper_square_regular(std::span<const BitColumn> cols, int d, int digits);

/// Point x_k of P_d: column T is C_T (first d columns) times the LSB-first
/// digit vector of k. Throws std::out_of_range if d > columns or k >= 2^d.
NetPoint net_point(const GeneratingMatrixSet& g, std::uint64_t k, int d);

/// Binary-reflected Gray code.
constexpr std::uint64_t gray_code(std::uint64_t k) { return k ^ (k >> 1); }

/// Walks P_d in binary-reflected Gray-code order. Position p holds
/// net_point(g, gray_code(p), d); each step XORs in one generating column per
/// coordinate. The cursor borrows `g`, which must outlive it.
class GrayCursor {
  public:
    GrayCursor(const GeneratingMatrixSet& g, int d, std::uint64_t start = 0);

    std::uint64_t position() const { return position_; }
    std::uint64_t size() const { return std::uint64_t{1} << d_; }
    bool done() const { return position_ >= size(); }
    std::span<const BitColumn> coords() const { return coords_; }

    /// Advance to the next position. Returns false once past the end.
    bool advance();

  private:
    const GeneratingMatrixSet* g_;
    int d_;
    std::uint64_t position_;
    std::vector<BitColumn> coords_;
};

/// All 2^d points of P_d in Gray-code order.
std::vector<NetPoint> enumerate_points_gray(const GeneratingMatrixSet& g, int d);

/// Real coordinates sum_j x_{j,T} 2^-j + shift. Requires 0 <= shift < 2^-n.
std::vector<double> point_to_reals(const NetPoint& x, double shift);

/// sum_j row_j 2^-j for one column; exact for digits <= 52.
double column_value(BitColumn col, int digits);

}  // namespace lowwafom
