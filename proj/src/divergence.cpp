#include "bregman/divergence.hpp"

#include <cmath>

#include "bregman/errors.hpp"
#include "bregman/numeric.hpp"

namespace bregman {

double bregman_scalar(const Generator& gen, double x, double y) {
    gen.require_interior(x, "x");
    gen.require_interior(y, "y");
    return gen.phi(x) - gen.phi(y) - (x - y) * gen.phi1(y);
}

double bregman_point(const Generator& gen, const Point& X, const Point& Y) {
    require_same_dimension(X, Y);
    double acc = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) acc += bregman_scalar(gen, X[i], Y[i]);
    return acc;
}

double divergence_rv(const Generator& gen, const FiniteProbSpace& space, const RandomVector& X,
                     const RandomVector& Y) {
    require_rv_on_space(space, X, "X");
    require_rv_on_space(space, Y, "Y");
    if (X.dimension() != Y.dimension())
        fail(errc::dimension_mismatch, "X, Y: coordinate dimensions differ");
    double acc = 0.0;
    for (std::size_t w = 0; w < space.size(); ++w) {
        if (space.weights[w] == 0.0) continue;
        acc += space.weights[w] * bregman_point(gen, X.values[w], Y.values[w]);
    }
    return acc;
}

double integral_identity_residual(const Generator& gen, double x, double y) {
    gen.require_interior(x, "x");
    gen.require_interior(y, "y");
    const double lhs = gen.phi(y) - gen.phi(x) - (y - x) * gen.phi1(x);
    const double rhs =
        integrate_adaptive([&](double u) { return gen.phi2(u) * (y - u); }, x, y);
    return std::abs(lhs - rhs);
}

} // namespace bregman
