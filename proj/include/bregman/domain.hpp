#pragma once

#include <cmath>
#include <limits>

namespace bregman {

// Interval of validity for a scalar generator (and, coordinatewise, for points
// of M = J^K). Endpoints may be +-infinity; open endpoints exclude the value.
struct DomainInterval {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    bool open_lower = true;
    bool open_upper = true;

    // Finite open boundaries carry a 1e-12 guard band so that phi'' and the
    // quadrature stay well conditioned near the edge.
    static constexpr double boundary_guard = 1e-12;

    bool contains(double x) const {
        if (!std::isfinite(x)) return false;
        if (std::isfinite(lower)) {
            if (open_lower ? !(x > lower) : !(x >= lower)) return false;
        }
        if (std::isfinite(upper)) {
            if (open_upper ? !(x < upper) : !(x <= upper)) return false;
        }
        return true;
    }

    // Strict interior with the guard band; all evaluation points must pass this.
    bool contains_interior(double x) const {
        if (!contains(x)) return false;
        if (std::isfinite(lower) && x - lower < boundary_guard) return false;
        if (std::isfinite(upper) && upper - x < boundary_guard) return false;
        return true;
    }

    static DomainInterval real_line() { return {}; }
    static DomainInterval positive_half_line() {
        return {0.0, std::numeric_limits<double>::infinity(), true, true};
    }
};

} // namespace bregman
