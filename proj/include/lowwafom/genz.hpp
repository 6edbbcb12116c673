#pragma once

// The Genz test-function package: six integrand families on [0,1)^S with
// closed-form integrals, random instances normalized so that sum_i a_i = h,
// and the median-of-log10-relative-error benchmark.

#include "lowwafom/f2.hpp"
#include "lowwafom/rng.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lowwafom {

enum class GenzFamily {
    oscillatory,
    product_peak,
    corner_peak,
    gaussian,
    continuous,
    discontinuous,
    constant,  // control: f = 1, not part of the package
};

inline constexpr std::array<GenzFamily, 6> kGenzFamilies = {
    GenzFamily::oscillatory, GenzFamily::product_peak, GenzFamily::corner_peak,
    GenzFamily::gaussian,    GenzFamily::continuous,   GenzFamily::discontinuous,
};

std::string_view family_name(GenzFamily f);
/// Accepts the names above and f1..f6. Throws std::invalid_argument otherwise.
GenzFamily parse_family(std::string_view name);
/// 0-based position in the package (constant maps to 6).
int family_index(GenzFamily f);

/// Difficulty per family, indexed by family_index.
using HVector = std::array<double, 6>;

inline constexpr HVector kStandardH5 = {4.5, 3.625, 0.925, 3.515, 1.02, 2.15};
inline constexpr HVector kStandardH10 = {9.0, 7.25, 1.85, 7.03, 2.04, 4.3};

/// The S = 5 or S = 10 vector, otherwise linear interpolation in S through
/// those two (which here reduces to kStandardH5 * S / 5).
HVector default_h(int dimension);

struct GenzInstance {
    GenzFamily family = GenzFamily::oscillatory;
    std::vector<double> a;
    std::vector<double> u;
    double h = 0.0;

    int dimension() const { return static_cast<int>(a.size()); }
    /// Throws std::invalid_argument if a/u sizes differ, a_i <= 0, or u_i outside [0,1].
    void validate() const;
};

/// Draws a and u uniformly in [0,1]^S (a redrawn while any component is 0)
/// and rescales a so that sum a_i = h.
GenzInstance make_instance(GenzFamily family, int dimension, double h, Rng& rng);

/// Builds an instance from explicit a and u; a is rescaled to sum to h when h > 0,
/// otherwise h is set to sum a_i.
GenzInstance instance_from_params(GenzFamily family, std::vector<double> a, std::vector<double> u,
                                  double h = 0.0);

double genz_eval(const GenzInstance& inst, std::span<const double> x);

double exact_integral(const GenzInstance& inst);

/// log10 of relative error reported when the error is exactly zero.
inline constexpr double kLog10ErrorFloor = -17.0;

double log10_relative_error(double exact, double estimate);

/// Median with the even-count convention: mean of the two middle order statistics.
double median(std::vector<double> values);

struct BenchmarkConfig {
    std::vector<GenzFamily> families{kGenzFamilies.begin(), kGenzFamilies.end()};
    HVector h = kStandardH5;
    int d_min = 8;
    int d_max = 25;
    int samples = 20;
    bool shift = true;
    bool baseline_mc = true;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct BenchmarkRow {
    GenzFamily family;
    int d;
    double median_log10_relerr;
    int samples;
    std::optional<double> baseline_median_log10_relerr;
    int redraws;  // instances redrawn for |I| < 1e-12
    double h;
};

/// Instance k of a family for a benchmark seed, redrawn while |I| < 1e-12.
/// `redraws` receives the number of rejected draws.
GenzInstance benchmark_instance(std::uint64_t seed, GenzFamily family, int dimension, double h,
                                int k, int* redraws = nullptr);

std::vector<BenchmarkRow> run_benchmark(const GeneratingMatrixSet& g, const BenchmarkConfig& cfg);

}  // namespace lowwafom
