#pragma once

#include "bregman/point.hpp"
#include "bregman/prob.hpp"

namespace bregman {

// Scalar Bregman divergence delta(x, y)^2 = phi(x) - phi(y) - (x - y) phi'(y).
// The gradient sits at the second argument; comparison records consume
// delta(y, x)^2 in that convention. Values are squared units throughout.
double bregman_scalar(const Generator& gen, double x, double y);

// Separable divergence on points: sum of bregman_scalar over coordinates.
double bregman_point(const Generator& gen, const Point& X, const Point& Y);

// Divergence between M-valued random vectors on a finite space:
// probability-weighted sum of bregman_point over outcomes.
double divergence_rv(const Generator& gen, const FiniteProbSpace& space, const RandomVector& X,
                     const RandomVector& Y);

// Residual of phi(y) - phi(x) - (y - x) phi'(x) = integral_x^y phi''(u)(y - u) du,
// the left side evaluated directly and the right side by adaptive quadrature.
double integral_identity_residual(const Generator& gen, double x, double y);

} // namespace bregman
