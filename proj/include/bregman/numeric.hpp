#pragma once

#include <array>
#include <functional>
#include <span>

#include "bregman/generator.hpp"

namespace bregman {

// Adaptive Simpson quadrature of f over [a, b] (a > b allowed, with the usual
// sign convention). Throws quadrature_non_convergence when the refinement
// budget is exhausted before the tolerance is met.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-12, double abs_tol = 1e-14);

// Reference point for the numeric transform: 0 for domains containing 0 in the
// interior, 1 for (0, inf). Numeric and closed-form h then differ only by the
// constant h(x_ref), which cancels in all distances and predictors.
double default_h_ref(const Generator& gen);

// Quadrature realization of h: integral of sqrt(phi'') from x_ref to x.
double h_numeric(const Generator& gen, double x, double x_ref);

// Inverse of h_numeric(gen, ., x_ref) by bracket expansion plus safeguarded
// Newton/bisection. Throws root_out_of_range when u is outside the image of
// the shifted transform, root_non_convergence on iteration exhaustion.
double H_numeric(const Generator& gen, double u, double x_ref);

// Worst-case relative residual of central finite differences of phi against
// phi1/phi2/phi3, per derivative order. eps is honored as the boundary
// clearance and as a minimum step; each order uses a roundoff/truncation
// balanced step, since no single step validates a third derivative to 1e-5
// in double precision.
struct DerivativeReport {
    std::array<double, 3> max_residual{0.0, 0.0, 0.0}; // orders 1, 2, 3
    double worst() const { return std::max({max_residual[0], max_residual[1], max_residual[2]}); }
};

DerivativeReport check_derivatives(const Generator& gen, std::span<const double> xs, double eps);

} // namespace bregman
