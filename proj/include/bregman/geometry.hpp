#pragma once

#include <span>
#include <vector>

#include "bregman/point.hpp"

namespace bregman {

// Geodesic through x (t=0) and y (t=1): x_i(t) = H(h(x_i) + k_i t) with
// integration constants k_i = h(y_i) - h(x_i). Immutable value, safe to share.
struct GeodesicPath {
    Generator gen;
    Point start;
    Point end;
    std::vector<double> k;

    // Point at parameter t; extension beyond [0,1] is permitted exactly while
    // the h-line stays inside the image of h, and throws geodesic_exits_domain
    // otherwise (possible for generators whose h has a bounded image side).
    Point sample(double t) const;
};

GeodesicPath geodesic(const Generator& gen, const Point& x, const Point& y);

// Geodesic distance d(x, y) = || h(y) - h(x) ||.
double distance(const Generator& gen, const Point& x, const Point& y);

// Midpoint z_i = H((h(x_i) + h(y_i)) / 2); equidistant from x and y.
Point midpoint(const Generator& gen, const Point& x, const Point& y);

// 2 d(v,x)^2 + 2 d(v,y)^2 - d(x,y)^2 - 4 d(v,z)^2 with z the midpoint of x, y.
// Zero for these metrics: h is an isometry onto a Euclidean image.
double semi_parallelogram_residual(const Generator& gen, const Point& x, const Point& y,
                                   const Point& v);

// Fixed-step classical 4th-order integration of the geodesic equation
//   phi''(x_i) x_i'' + (1/2) phi'''(x_i) (x_i')^2 = 0,
// started at x with velocity x_i'(0) = k_i / h'(x_i). Independent oracle for
// the closed form; deterministic by construction.
struct OdePath {
    std::vector<double> t;        // steps + 1 equispaced parameters in [0, 1]
    std::vector<Point> samples;   // integrated positions
};

OdePath geodesic_ode_oracle(const Generator& gen, const Point& x, const Point& y, int steps);

// delta(y,x)^2 against (1/2) d(y,x)^2. The declared-direction flag follows the
// sign of phi''': <= for phi''' > 0, >= for phi''' < 0, equality within 1e-12
// for quadratic. The pointwise ordering is guaranteed for componentwise-
// ordered pairs y >= x and can reverse otherwise; the record reports the raw
// numbers either way.
struct DivergenceDistanceComparison {
    double delta2 = 0.0;   // delta(y, x)^2
    double half_d2 = 0.0;  // (1/2) d(y, x)^2
    int phi3_sign = 0;
    bool satisfied = false;
};

DivergenceDistanceComparison compare_divergence_distance(const Generator& gen, const Point& x,
                                                         const Point& y);

// Minimizer of sum_k d(x_k, v)^2 over v, computed as H(mean h(x_k)), plus the
// aggregate costs at both candidate centers: the distance cost at the
// h-mean and the divergence cost at the arithmetic mean (the divergence
// minimizer). Exposed side by side for the aggregate comparison checks.
struct ClosestPointResult {
    Point minimizer;                 // H(mean of h(x_k))
    Point divergence_minimizer;      // arithmetic mean
    double distance_cost = 0.0;      // sum_k d(x_k, minimizer)^2
    double divergence_cost = 0.0;    // sum_k delta(x_k, divergence_minimizer)^2
};

ClosestPointResult closest_point_to_set(const Generator& gen, std::span<const Point> points);

} // namespace bregman
