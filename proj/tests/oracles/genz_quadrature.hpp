#pragma once

// Quadrature reference for Genz integrals on [0,1]^S, S <= 4. Every axis is
// split where the integrand has a kink or peak (at u_i), or is truncated to
// the support box for the discontinuous family.

#include "gauss_legendre.hpp"
#include "lowwafom/genz.hpp"

namespace oracle {

template <unsigned Points = 20>
double genz_quadrature(const lowwafom::GenzInstance& inst) {
    using lowwafom::GenzFamily;
    std::vector<Rule1d> axes;
    for (int i = 0; i < inst.dimension(); ++i) {
        double hi = 1.0;
        std::vector<double> breaks;
        switch (inst.family) {
            case GenzFamily::product_peak:
            case GenzFamily::gaussian:
            case GenzFamily::continuous: breaks.push_back(inst.u[i]); break;
            case GenzFamily::discontinuous:
                if (i < 2) hi = inst.u[i];
                break;
            default: break;
        }
        if (hi == 0.0) return 0.0;
        axes.push_back(composite_rule<Points>(0.0, hi, breaks));
    }
    return tensor_quadrature(axes, [&](std::span<const double> x) { return lowwafom::genz_eval(inst, x); });
}

}  // namespace oracle
