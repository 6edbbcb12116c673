#include "lowwafom/f2.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lowwafom {

NetPoint& NetPoint::operator^=(const NetPoint& other) {
    if (other.coords.size() != coords.size()) {
        throw std::invalid_argument("NetPoint XOR: dimension mismatch");
    }
    for (std::size_t t = 0; t < coords.size(); ++t) coords[t] ^= other.coords[t];
    return *this;
}

namespace {

void check_shape(int digits, int columns, int dimension) {
    if (digits < 1 || digits > kMaxDigits) {
        throw std::invalid_argument("digit count must lie in [1, " + std::to_string(kMaxDigits) +
                                    "], got " + std::to_string(digits));
    }
    if (columns < 0 || columns > 63) {
        throw std::invalid_argument("column count must lie in [0, 63], got " +
                                    std::to_string(columns));
    }
    if (dimension < 1) {
        throw std::invalid_argument("dimension must be positive, got " +
                                    std::to_string(dimension));
    }
}

}  // namespace

GeneratingMatrixSet::GeneratingMatrixSet(int digits, int columns, int dimension)
    : digits_(digits), columns_(columns), dimension_(dimension) {
    check_shape(digits, columns, dimension);
    data_.assign(static_cast<std::size_t>(columns) * dimension, 0);
}

GeneratingMatrixSet::GeneratingMatrixSet(int digits, int columns, int dimension,
                                         std::vector<BitColumn> data)
    : digits_(digits), columns_(columns), dimension_(dimension), data_(std::move(data)) {
    check_shape(digits, columns, dimension);
    if (data_.size() != static_cast<std::size_t>(columns) * dimension) {
        throw std::invalid_argument("generating matrix data has " + std::to_string(data_.size()) +
                                    " columns, expected " +
                                    std::to_string(static_cast<std::size_t>(columns) * dimension));
    }
    for (BitColumn c : data_) {
        if ((c & ~low_mask(digits)) != 0) {
            throw std::invalid_argument("generating column has bits above row 1");
        }
    }
}

void GeneratingMatrixSet::set_column(int coord, int col, BitColumn value) {
    if (coord < 0 || coord >= dimension_ || col < 0 || col >= columns_) {
        throw std::out_of_range("set_column: index out of range");
    }
    if ((value & ~low_mask(digits_)) != 0) {
        throw std::invalid_argument("set_column: value wider than digit count");
    }
    data_[index(coord, col)] = value;
}

GeneratingMatrixSet GeneratingMatrixSet::truncated(int count) const {
    if (count < 0 || count > columns_) {
        throw std::out_of_range("truncated: requested " + std::to_string(count) +
                                " columns of " + std::to_string(columns_));
    }
    GeneratingMatrixSet out(digits_, count, dimension_);
    for (int i = 0; i < dimension_; ++i) {
        for (int c = 0; c < count; ++c) out.data_[out.index(i, c)] = column(i, c);
    }
    return out;
}

bool GeneratingMatrixSet::projection_regular() const {
    if (columns_ > digits_) return false;
    for (int i = 0; i < dimension_; ++i) {
        auto cols = matrix(i);
        for (int d = 1; d <= columns_; ++d) {
            if (!is_upper_square_regular(cols.first(d), digits_)) return false;
        }
    }
    return true;
}

bool is_upper_square_regular(std::span<const BitColumn> cols, int digits) {
    const int d = static_cast<int>(cols.size());
    if (d < 1 || d > digits) {
        throw std::invalid_argument("upper square test: need 1 <= d <= n, got d=" +
                                    std::to_string(d) + ", n=" + std::to_string(digits));
    }
    // Gaussian elimination on the top-d-bit prefixes, viewed as vectors in F2^d.
    std::vector<BitColumn> rows;
    rows.reserve(d);
    for (BitColumn c : cols) {
        BitColumn v = c >> (digits - d);
        for (BitColumn r : rows) {
            // Each stored basis vector has a distinct leading bit.
            if ((v ^ r) < v) v ^= r;
        }
        if (v == 0) return false;
        // Keep the basis sorted by leading bit, highest first.
        auto it = rows.begin();
        while (it != rows.end() && *it > v) ++it;
        rows.insert(it, v);
    }
    return true;
}

bool is_upper_square_regular(std::span<const BitColumn> cols, int d, int digits) {
    if (static_cast<int>(cols.size()) != d) {
        throw std::invalid_argument("upper square test: expected " + std::to_string(d) +
                                    " columns, got " + std::to_string(cols.size()));
    }
    return is_upper_square_regular(cols, digits);
}

NetPoint net_point(const GeneratingMatrixSet& g, std::uint64_t k, int d) {
    if (d < 0 || d > g.columns()) {
        throw std::out_of_range("net_point: d=" + std::to_string(d) + " exceeds column count " +
                                std::to_string(g.columns()));
    }
    if (d < 64 && k >= (std::uint64_t{1} << d)) {
        throw std::out_of_range("net_point: index " + std::to_string(k) + " >= 2^" +
                                std::to_string(d));
    }
    NetPoint x(g.digits(), static_cast<std::size_t>(g.dimension()));
    for (int i = 0; i < g.dimension(); ++i) {
        auto cols = g.matrix(i);
        BitColumn acc = 0;
        for (std::uint64_t rest = k; rest != 0; rest &= rest - 1) {
            acc ^= cols[std::countr_zero(rest)];
        }
        x.coords[i] = acc;
    }
    return x;
}

GrayCursor::GrayCursor(const GeneratingMatrixSet& g, int d, std::uint64_t start)
    : g_(&g), d_(d), position_(start) {
    if (d < 0 || d > g.columns()) {
        throw std::out_of_range("GrayCursor: d=" + std::to_string(d) + " exceeds column count " +
                                std::to_string(g.columns()));
    }
    if (start > size()) throw std::out_of_range("GrayCursor: start beyond end");
    coords_ = start < size() ? net_point(g, gray_code(start), d).coords
                             : std::vector<BitColumn>(g.dimension(), 0);
}

bool GrayCursor::advance() {
    ++position_;
    if (done()) return false;
    // Gray code of p differs from p-1 in the lowest set bit of p.
    const int flip = std::countr_zero(position_);
    const int columns = g_->columns();
    const auto data = g_->data();
    for (std::size_t t = 0; t < coords_.size(); ++t) {
        coords_[t] ^= data[t * columns + flip];
    }
    return true;
}

std::vector<NetPoint> enumerate_points_gray(const GeneratingMatrixSet& g, int d) {
    GrayCursor cursor(g, d);
    std::vector<NetPoint> out;
    out.reserve(cursor.size());
    do {
        NetPoint x(g.digits(), static_cast<std::size_t>(g.dimension()));
        x.coords.assign(cursor.coords().begin(), cursor.coords().end());
        out.push_back(std::move(x));
    } while (cursor.advance());
    return out;
}

double column_value(BitColumn col, int digits) {
    return std::ldexp(static_cast<double>(col), -digits);
}

std::vector<double> point_to_reals(const NetPoint& x, double shift) {
    if (!(shift >= 0.0) || shift >= std::ldexp(1.0, -x.digits)) {
        throw std::invalid_argument("point_to_reals: shift must lie in [0, 2^-n)");
    }
    std::vector<double> out(x.coords.size());
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = column_value(x.coords[t], x.digits) + shift;
    return out;
}

}  // namespace lowwafom
