#pragma once

#include <span>

#include "bregman/prob.hpp"

namespace bregman {

// d-mean E_d[X] = H(E[h(X)]) componentwise.
Point d_mean(const Generator& gen, const FiniteProbSpace& space, const RandomVector& X);

// Sample d-mean S_n = H(n^-1 sum h(x_k)); equals d_mean under the uniform
// empirical measure and shares its implementation with closest_point_to_set.
Point d_mean_sample(const Generator& gen, std::span<const Point> sample);

// d-variance sigma_d^2(X) = E[ || h(X) - h(E_d[X]) ||^2 ].
double d_variance(const Generator& gen, const FiniteProbSpace& space, const RandomVector& X);

// Unbiased sample estimator (n-1)^-1 sum || h(x_k) - h(S_n) ||^2, n >= 2.
double d_variance_sample(const Generator& gen, std::span<const Point> sample);

// d-conditional expectation E_d[X|G] = H(E[h(X)|G]) componentwise; constant on
// blocks, reduces to d_mean on the trivial partition and to X on the discrete
// partition.
RandomVector d_conditional_expectation(const Generator& gen, const FiniteProbSpace& space,
                                       const RandomVector& X, const Partition& part);

// Max over outcomes and coordinates of | h(E_d[X|G]) - E[h(X)|G] |.
double intertwining_residual(const Generator& gen, const FiniteProbSpace& space,
                             const RandomVector& X, const Partition& part);

// Conditional-expectation property report: trivial-partition reduction,
// tower composition through a refinement p1 of p2, measurability fixed point,
// and monotonicity of the predictor. p1 must refine p2.
struct CondexpPropertiesReport {
    double trivial_residual = 0.0;       // vs d_mean, max abs
    double tower_residual = 0.0;         // E_d[E_d[X|p1]|p2] vs E_d[X|p2], max abs
    double measurability_residual = 0.0; // E_d[Y|p1] vs Y for p1-measurable Y, max abs
    bool monotone = false;               // X <= X' componentwise => predictor ordered
    double worst() const {
        return std::max({trivial_residual, tower_residual, measurability_residual});
    }
};

CondexpPropertiesReport condexp_properties_check(const Generator& gen, const FiniteProbSpace& space,
                                                 const RandomVector& X, const Partition& p1,
                                                 const Partition& p2);

// Prediction errors of the two best predictors: divergence error
// Delta(X, E[X|G])^2 and distance error D(X, E_d[X|G])^2, with the ordering
// flag following the declared phi''' direction (<= for phi''' > 0, >= for
// phi''' < 0). The flag is an honest report; see the comparison notes on
// compare_divergence_distance for when the ordering can fail.
struct PredictionErrorRecord {
    double divergence_error = 0.0;
    double distance_error = 0.0;
    int phi3_sign = 0;
    bool ordering_satisfied = false;
};

PredictionErrorRecord prediction_error_compare(const Generator& gen, const FiniteProbSpace& space,
                                               const RandomVector& X, const Partition& part);

// Invariance of the metric under the shipped commutative group operations
// (quadratic: translation, neglog: componentwise scaling), plus the derived
// norm symmetry |x|_d = |x^{-1}|_d. Throws unsupported_generator otherwise.
struct GroupInvarianceReport {
    double metric_residual = 0.0; // | d(x o v, y o v) - d(x, y) |
    double norm_residual = 0.0;   // | |x|_d - |x^{-1}|_d |
    double worst() const { return std::max(metric_residual, norm_residual); }
};

GroupInvarianceReport group_invariance_check(const Generator& gen, const Point& x, const Point& y,
                                             const Point& v);

// Max componentwise residual of
//   E_d[X1^{a1} X2^{a2} | G] = (E_d[X1|G])^{a1} (E_d[X2|G])^{a2}
// under the neglog generator.
double multiplicative_linearity_check(const FiniteProbSpace& space, const RandomVector& X1,
                                      const RandomVector& X2, double a1, double a2,
                                      const Partition& part);

} // namespace bregman
