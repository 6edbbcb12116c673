#pragma once

// Sequential generators: point sets built from an M-sequence and a random
// n x d matrix U. The sliding windows (U z_j, U z_{j+1}, ..., U z_{j+S-1})
// over all nonzero states z_j, plus the origin, form the digital net with
// generating matrices U, U A, ..., U A^{S-1}, where A advances the state.
//
// Conventions: p(t) = a_0 + a_1 t + ... + a_d t^d is stored as a bit mask with
// bit i = a_i. The sequence obeys z_{j+d} = a_1 z_{j+d-1} + ... + a_d z_j.
// A state z_j = (z_j, ..., z_{j+d-1}) is packed with z_{j+c} at bit c, which is
// also the index of the U column it selects.

#include "lowwafom/f2.hpp"
#include "lowwafom/rng.hpp"
#include "lowwafom/wafom.hpp"

#include <cstdint>
#include <vector>

namespace lowwafom {

class PrimitivePoly {
  public:
    /// Throws std::invalid_argument unless degree is in [1, 32], a_0 = a_d = 1
    /// and the mask has no bits above the degree. Primitivity is checked
    /// separately by is_primitive().
    PrimitivePoly(int degree, std::uint64_t coefficients);

    int degree() const { return degree_; }
    std::uint64_t coefficients() const { return coeffs_; }
    int coefficient(int i) const { return static_cast<int>((coeffs_ >> i) & 1U); }

    /// Order of t modulo p equals 2^d - 1.
    bool is_primitive() const;

    friend bool operator==(const PrimitivePoly&, const PrimitivePoly&) = default;

  private:
    int degree_;
    std::uint64_t coeffs_;
};

/// The shipped primitive polynomial of the given degree (2..32). Verified for
/// primitivity the first time it is requested.
const PrimitivePoly& primitive_poly(int degree);

/// d x d matrix over F2, row r stored as a mask with column c at bit c.
struct BitSquareMatrix {
    int size = 0;
    std::vector<std::uint64_t> rows;

    static BitSquareMatrix identity(int size);
    int at(int r, int c) const { return static_cast<int>((rows[r] >> c) & 1U); }
    /// Matrix-vector product over F2; bit c of v is component c.
    std::uint64_t apply(std::uint64_t v) const;
    BitSquareMatrix operator*(const BitSquareMatrix& rhs) const;
    friend bool operator==(const BitSquareMatrix&, const BitSquareMatrix&) = default;
};

/// State-advance matrix: superdiagonal identity, last row (a_d, a_{d-1}, ..., a_1),
/// so that A z_j = z_{j+1}.
BitSquareMatrix companion_matrix(const PrimitivePoly& poly);

/// z_0 .. z_{length-1}. `init` packs z_0..z_{d-1} with z_c at bit c.
/// Throws std::invalid_argument for a zero or oversized initial state.
std::vector<std::uint8_t> msequence(const PrimitivePoly& poly, std::uint64_t init,
                                    std::size_t length);

struct SeqGenConfig {
    PrimitivePoly poly;
    int digits;
    std::vector<BitColumn> u;  // d columns of n bits, same convention as generating matrices
    std::uint64_t init = 1;

    /// Throws unless U has d columns, its upper d x d block is regular, and init != 0.
    void validate() const;
};

/// The 2^d - 1 window points followed by the origin.
std::vector<NetPoint> seqgen_points(const SeqGenConfig& cfg, int dimension);

/// C_i = U A^{i-1}, i = 1..S, each n x d.
GeneratingMatrixSet seqgen_as_digital_net(const SeqGenConfig& cfg, int dimension);

/// WAFOM over seqgen_points in O(N) table lookups by sliding the window: the
/// running product is multiplied by the entering coordinate's factor and
/// divided by the leaving one, re-anchored every `reanchor` steps. For S <= 2
/// the window product is recomputed at every step.
WafomValue wafom_sequential(const SeqGenConfig& cfg, int dimension, const WafomTableSet& tables,
                            std::uint64_t reanchor = std::uint64_t{1} << 12);

/// Random U with regular upper d x d block; rows below d are zero when
/// `top_block_only` is set.
std::vector<BitColumn> random_regular_u(int digits, int degree, Rng& rng, bool top_block_only);

struct SeqGenSearchConfig {
    int digits = 30;
    int dimension = 5;
    int degree = 10;
    std::uint64_t trials = 7000;  // total U draws, split evenly between the two stages
    int segments = 3;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct SeqGenSearchResult {
    SeqGenConfig best;
    double wafom = 0.0;
    std::uint64_t stage1_trials = 0;
    std::uint64_t stage2_trials = 0;
};

/// Two-stage random search over U: the first half of the trials draws only
/// the upper d x d block (lower rows zero); the second half keeps the winning
/// block and randomizes rows d+1..n. Ties go to the earliest trial.
SeqGenSearchResult seqgen_search(const SeqGenSearchConfig& cfg);

}  // namespace lowwafom
