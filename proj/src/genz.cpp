#include "lowwafom/genz.hpp"

#include "lowwafom/integrate.hpp"
#include "lowwafom/reduce.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace lowwafom {

std::string_view family_name(GenzFamily f) {
    switch (f) {
        case GenzFamily::oscillatory: return "oscillatory";
        case GenzFamily::product_peak: return "product_peak";
        case GenzFamily::corner_peak: return "corner_peak";
        case GenzFamily::gaussian: return "gaussian";
        case GenzFamily::continuous: return "continuous";
        case GenzFamily::discontinuous: return "discontinuous";
        case GenzFamily::constant: return "constant";
    }
    return "unknown";
}

GenzFamily parse_family(std::string_view name) {
    static constexpr std::array<GenzFamily, 7> all = {
        GenzFamily::oscillatory, GenzFamily::product_peak, GenzFamily::corner_peak,
        GenzFamily::gaussian,    GenzFamily::continuous,   GenzFamily::discontinuous,
        GenzFamily::constant,
    };
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (name == family_name(all[i])) return all[i];
        if (i < 6 && name.size() == 2 && name[0] == 'f' && name[1] == static_cast<char>('1' + i)) {
            return all[i];
        }
    }
    throw std::invalid_argument("unknown Genz family '" + std::string(name) + "'");
}

int family_index(GenzFamily f) { return static_cast<int>(f); }

HVector default_h(int dimension) {
    if (dimension == 5) return kStandardH5;
    if (dimension == 10) return kStandardH10;
    HVector h{};
    for (std::size_t j = 0; j < h.size(); ++j) {
        const double slope = (kStandardH10[j] - kStandardH5[j]) / 5.0;
        h[j] = kStandardH5[j] + slope * (dimension - 5);
    }
    return h;
}

void GenzInstance::validate() const {
    if (a.empty() || a.size() != u.size()) {
        throw std::invalid_argument("Genz instance: a and u must be nonempty and equally long");
    }
    for (double v : a) {
        if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument("Genz instance: a_i must be > 0");
    }
    for (double v : u) {
        if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("Genz instance: u_i must lie in [0,1]");
    }
}

GenzInstance instance_from_params(GenzFamily family, std::vector<double> a, std::vector<double> u,
                                  double h) {
    GenzInstance inst{family, std::move(a), std::move(u), h};
    inst.validate();
    const double total = std::accumulate(inst.a.begin(), inst.a.end(), 0.0);
    if (h > 0.0) {
        const double scale = h / total;
        for (auto& v : inst.a) v *= scale;
    } else {
        inst.h = total;
    }
    return inst;
}

GenzInstance make_instance(GenzFamily family, int dimension, double h, Rng& rng) {
    if (dimension < 1) throw std::invalid_argument("Genz instance: dimension must be positive");
    if (!(h > 0.0)) throw std::invalid_argument("Genz instance: h must be positive");
    std::vector<double> a(dimension);
    std::vector<double> u(dimension);
    for (auto& v : a) {
        do {
            v = uniform01(rng);
        } while (v == 0.0);
    }
    for (auto& v : u) v = uniform01(rng);
    return instance_from_params(family, std::move(a), std::move(u), h);
}

double genz_eval(const GenzInstance& inst, std::span<const double> x) {
    const auto& a = inst.a;
    const auto& u = inst.u;
    const std::size_t s = a.size();
    switch (inst.family) {
        case GenzFamily::oscillatory: {
            double arg = 2.0 * std::numbers::pi * u[0];
            for (std::size_t i = 0; i < s; ++i) arg += a[i] * x[i];
            return std::cos(arg);
        }
        case GenzFamily::product_peak: {
            double p = 1.0;
            for (std::size_t i = 0; i < s; ++i) {
                const double t = x[i] - u[i];
                p /= 1.0 / (a[i] * a[i]) + t * t;
            }
            return p;
        }
        case GenzFamily::corner_peak: {
            double base = 1.0;
            for (std::size_t i = 0; i < s; ++i) base += a[i] * x[i];
            return std::pow(base, -static_cast<double>(s + 1));
        }
        case GenzFamily::gaussian: {
            double e = 0.0;
            for (std::size_t i = 0; i < s; ++i) {
                const double t = x[i] - u[i];
                e += a[i] * a[i] * t * t;
            }
            return std::exp(-e);
        }
        case GenzFamily::continuous: {
            double e = 0.0;
            for (std::size_t i = 0; i < s; ++i) e += a[i] * std::fabs(x[i] - u[i]);
            return std::exp(-e);
        }
        case GenzFamily::discontinuous: {
            if (x[0] > u[0] || (s > 1 && x[1] > u[1])) return 0.0;
            double e = 0.0;
            for (std::size_t i = 0; i < s; ++i) e += a[i] * x[i];
            return std::exp(e);
        }
        case GenzFamily::constant: return 1.0;
    }
    return 0.0;
}

double exact_integral(const GenzInstance& inst) {
    inst.validate();
    const auto& a = inst.a;
    const auto& u = inst.u;
    const std::size_t s = a.size();
    switch (inst.family) {
        case GenzFamily::oscillatory: {
            double phase = 2.0 * std::numbers::pi * u[0];
            double p = 1.0;
            for (std::size_t i = 0; i < s; ++i) {
                phase += 0.5 * a[i];
                p *= 2.0 * std::sin(0.5 * a[i]) / a[i];
            }
            return std::cos(phase) * p;
        }
        case GenzFamily::product_peak: {
            double p = 1.0;
            for (std::size_t i = 0; i < s; ++i) {
                p *= a[i] * (std::atan(a[i] * (1.0 - u[i])) + std::atan(a[i] * u[i]));
            }
            return p;
        }
        case GenzFamily::corner_peak: {
            // Inclusion-exclusion over the corners of the cube.
            if (s > 30) throw std::invalid_argument("corner peak integral: dimension too large");
            CompensatedSum sum;
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << s); ++v) {
                double base = 1.0;
                for (std::size_t i = 0; i < s; ++i) {
                    if ((v >> i) & 1U) base += a[i];
                }
                sum.add((std::popcount(v) % 2 == 0 ? 1.0 : -1.0) / base);
            }
            double denom = 1.0;
            for (std::size_t i = 0; i < s; ++i) denom *= static_cast<double>(i + 1) * a[i];
            return sum.value() / denom;
        }
        case GenzFamily::gaussian: {
            double p = 1.0;
            for (std::size_t i = 0; i < s; ++i) {
                p *= std::sqrt(std::numbers::pi) / (2.0 * a[i]) *
                     (std::erf(a[i] * (1.0 - u[i])) + std::erf(a[i] * u[i]));
            }
            return p;
        }
        case GenzFamily::continuous: {
            double p = 1.0;
            for (std::size_t i = 0; i < s; ++i) {
                p *= (2.0 - std::exp(-a[i] * u[i]) - std::exp(-a[i] * (1.0 - u[i]))) / a[i];
            }
            return p;
        }
        case GenzFamily::discontinuous: {
            double p = 1.0;
            for (std::size_t i = 0; i < s; ++i) {
                const double upper = i < 2 ? std::min(u[i], 1.0) : 1.0;
                p *= std::expm1(a[i] * upper) / a[i];
            }
            return p;
        }
        case GenzFamily::constant: return 1.0;
    }
    return 0.0;
}

double log10_relative_error(double exact, double estimate) {
    const double rel = std::fabs(exact - estimate) / std::fabs(exact);
    if (rel == 0.0) return kLog10ErrorFloor;
    return std::max(kLog10ErrorFloor, std::log10(rel));
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of an empty sample");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

GenzInstance benchmark_instance(std::uint64_t seed, GenzFamily family, int dimension, double h,
                                int k, int* redraws) {
    int rejected = 0;
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng = make_stream(seed, StreamTag::genz_instance,
                              {static_cast<std::uint64_t>(family_index(family)),
                               static_cast<std::uint64_t>(k), attempt});
        GenzInstance inst = make_instance(family, dimension, h, rng);
        if (std::fabs(exact_integral(inst)) >= 1e-12) {
            if (redraws != nullptr) *redraws = rejected;
            return inst;
        }
        ++rejected;
    }
}

std::vector<BenchmarkRow> run_benchmark(const GeneratingMatrixSet& g, const BenchmarkConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("benchmark: samples must be >= 1");
    if (cfg.d_min < 0 || cfg.d_min > cfg.d_max) throw std::invalid_argument("benchmark: bad d range");
    if (cfg.d_max > g.columns()) {
        throw std::invalid_argument("benchmark: d_max=" + std::to_string(cfg.d_max) +
                                    " exceeds the matrices' " + std::to_string(g.columns()) +
                                    " columns");
    }
    const int dimension = g.dimension();
    const std::size_t families = cfg.families.size();
    const auto samples = static_cast<std::size_t>(cfg.samples);
    const int depths = cfg.d_max - cfg.d_min + 1;

    struct Cell {
        std::vector<double> qmc;
        std::vector<double> mc;
        int redraws = 0;
    };
    std::vector<Cell> cells(families * samples);

    // Each (family, sample) cell is computed single-threaded; cells run in parallel.
    parallel_for_chunks(cells.size(), cfg.threads, [&](std::uint64_t idx) {
        const GenzFamily family = cfg.families[idx / samples];
        const int k = static_cast<int>(idx % samples);
        const double h = family == GenzFamily::constant ? 1.0 : cfg.h[family_index(family)];
        Cell& cell = cells[idx];
        const GenzInstance inst = benchmark_instance(cfg.seed, family, dimension, h, k, &cell.redraws);
        const double exact = exact_integral(inst);
        const Integrand f = [&inst](std::span<const double> x) { return genz_eval(inst, x); };
        const auto qmc = qmc_integrate_nested(g, cfg.d_max, f, cfg.shift, 1);
        for (int d = cfg.d_min; d <= cfg.d_max; ++d) {
            cell.qmc.push_back(log10_relative_error(exact, qmc[d]));
        }
        if (cfg.baseline_mc) {
            Rng seeder = make_stream(cfg.seed, StreamTag::monte_carlo,
                                     {static_cast<std::uint64_t>(family_index(family)),
                                      static_cast<std::uint64_t>(k)});
            const auto mc = mc_integrate_nested(f, dimension, cfg.d_max, seeder(), 1);
            for (int d = cfg.d_min; d <= cfg.d_max; ++d) {
                cell.mc.push_back(log10_relative_error(exact, mc[d]));
            }
        }
    });

    std::vector<BenchmarkRow> rows;
    for (std::size_t j = 0; j < families; ++j) {
        const GenzFamily family = cfg.families[j];
        int redraws = 0;
        for (std::size_t k = 0; k < samples; ++k) redraws += cells[j * samples + k].redraws;
        for (int i = 0; i < depths; ++i) {
            std::vector<double> q;
            std::vector<double> m;
            for (std::size_t k = 0; k < samples; ++k) {
                const Cell& c = cells[j * samples + k];
                q.push_back(c.qmc[i]);
                if (cfg.baseline_mc) m.push_back(c.mc[i]);
            }
            BenchmarkRow row{family, cfg.d_min + i, median(q), cfg.samples, std::nullopt, redraws,
                             family == GenzFamily::constant ? 1.0 : cfg.h[family_index(family)]};
            if (cfg.baseline_mc) row.baseline_median_log10_relerr = median(m);
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace lowwafom
