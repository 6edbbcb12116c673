#pragma once

// Equal-weight QMC integration over a digital net, and a seeded Monte Carlo
// baseline. Sums are compensated and chunked deterministically, so estimates
// do not depend on the thread count.

#include "lowwafom/f2.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lowwafom {

using Integrand = std::function<double(std::span<const double>)>;

/// Thrown when the integrand returns NaN or infinity.
class NonFiniteIntegrand : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Largest digit count for which net coordinates (plus the half-cell shift)
/// are exact doubles.
inline constexpr int kMaxIntegrationDigits = 52;

/// 2^-(n+1): moves every point from the corner to the centre of its 2^-n cell.
double half_cell_shift(int digits);

/// (1/2^d) sum over P_d of f(x + shift), shift = 2^-(n+1) if `shift` else 0,
/// in Gray-code order.
double qmc_integrate(const GeneratingMatrixSet& g, int d, const Integrand& f, bool shift,
                     int threads = 1);

/// Estimates for every d = 0..d_max from one pass over P_{d_max}. Entry d is
/// bit-identical to qmc_integrate(g, d, f, shift).
std::vector<double> qmc_integrate_nested(const GeneratingMatrixSet& g, int d_max,
                                         const Integrand& f, bool shift, int threads = 1);

/// Mean of f over `samples` uniform points from the seeded stream.
double mc_integrate(const Integrand& f, int dimension, std::uint64_t samples, std::uint64_t seed,
                    int threads = 1);

/// Entry d is bit-identical to mc_integrate(f, dimension, 2^d, seed).
std::vector<double> mc_integrate_nested(const Integrand& f, int dimension, int d_max,
                                        std::uint64_t seed, int threads = 1);

}  // namespace lowwafom
