#include "bregman/geometry.hpp"

#include <cmath>
#include <string>

#include "bregman/divergence.hpp"
#include "bregman/errors.hpp"

namespace bregman {

Point GeodesicPath::sample(double t) const {
    Point out(start.size());
    for (std::size_t i = 0; i < start.size(); ++i) {
        const double u = gen.h(start[i]) + k[i] * t;
        if (!gen.h_image.contains(u))
            fail(errc::geodesic_exits_domain,
                 "t: extended geodesic leaves the image of h at coordinate " + std::to_string(i));
        out[i] = gen.H(u);
    }
    return out;
}

GeodesicPath geodesic(const Generator& gen, const Point& x, const Point& y) {
    require_point_in_domain(gen, x, "x");
    require_point_in_domain(gen, y, "y");
    require_same_dimension(x, y);
    GeodesicPath path{gen, x, y, {}};
    path.k.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) path.k[i] = gen.h(y[i]) - gen.h(x[i]);
    return path;
}

double distance(const Generator& gen, const Point& x, const Point& y) {
    require_point_in_domain(gen, x, "x");
    require_point_in_domain(gen, y, "y");
    require_same_dimension(x, y);
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = gen.h(y[i]) - gen.h(x[i]);
        acc += d * d;
    }
    return std::sqrt(acc);
}

Point midpoint(const Generator& gen, const Point& x, const Point& y) {
    require_point_in_domain(gen, x, "x");
    require_point_in_domain(gen, y, "y");
    require_same_dimension(x, y);
    Point z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        z[i] = gen.H(0.5 * (gen.h(x[i]) + gen.h(y[i])));
    return z;
}

double semi_parallelogram_residual(const Generator& gen, const Point& x, const Point& y,
                                   const Point& v) {
    require_point_in_domain(gen, v, "v");
    const Point z = midpoint(gen, x, y);
    const double dvx = distance(gen, v, x);
    const double dvy = distance(gen, v, y);
    const double dxy = distance(gen, x, y);
    const double dvz = distance(gen, v, z);
    return 2.0 * dvx * dvx + 2.0 * dvy * dvy - dxy * dxy - 4.0 * dvz * dvz;
}

OdePath geodesic_ode_oracle(const Generator& gen, const Point& x, const Point& y, int steps) {
    if (steps < 16) fail(errc::step_count_too_small, "steps: need at least 16");
    const GeodesicPath path = geodesic(gen, x, y);
    const std::size_t dim = x.size();

    // First-order system per coordinate: x' = v, v' = -phi'''(x) v^2 / (2 phi''(x)).
    std::vector<double> pos = x, vel(dim);
    for (std::size_t i = 0; i < dim; ++i) vel[i] = path.k[i] / std::sqrt(gen.phi2(x[i]));

    const auto accel = [&](double xi, double vi) {
        return -0.5 * gen.phi3(xi) * vi * vi / gen.phi2(xi);
    };

    OdePath out;
    out.t.reserve(static_cast<std::size_t>(steps) + 1);
    out.samples.reserve(static_cast<std::size_t>(steps) + 1);
    out.t.push_back(0.0);
    out.samples.push_back(pos);

    const double dt = 1.0 / static_cast<double>(steps);
    for (int s = 0; s < steps; ++s) {
        for (std::size_t i = 0; i < dim; ++i) {
            const auto guard = [&](double value) {
                if (!gen.domain.contains_interior(value) || !std::isfinite(value))
                    fail(errc::out_of_domain, "ode: integration left the domain at step " +
                                                  std::to_string(s) + ", coordinate " +
                                                  std::to_string(i) + " (position " +
                                                  std::to_string(value) + ")");
                return value;
            };
            const double x0 = pos[i], v0 = vel[i];
            const double k1x = v0, k1v = accel(x0, v0);
            const double x1 = guard(x0 + 0.5 * dt * k1x), v1 = v0 + 0.5 * dt * k1v;
            const double k2x = v1, k2v = accel(x1, v1);
            const double x2 = guard(x0 + 0.5 * dt * k2x), v2 = v0 + 0.5 * dt * k2v;
            const double k3x = v2, k3v = accel(x2, v2);
            const double x3 = guard(x0 + dt * k3x), v3 = v0 + dt * k3v;
            const double k4x = v3, k4v = accel(x3, v3);
            pos[i] = guard(x0 + dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x));
            vel[i] = v0 + dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
            if (!std::isfinite(vel[i]))
                fail(errc::out_of_domain, "ode: velocity blew up at step " + std::to_string(s) +
                                              ", coordinate " + std::to_string(i));
        }
        out.t.push_back(static_cast<double>(s + 1) * dt);
        out.samples.push_back(pos);
    }
    return out;
}

DivergenceDistanceComparison compare_divergence_distance(const Generator& gen, const Point& x,
                                                         const Point& y) {
    DivergenceDistanceComparison rec;
    rec.delta2 = bregman_point(gen, y, x);
    const double d = distance(gen, x, y);
    rec.half_d2 = 0.5 * d * d;
    rec.phi3_sign = gen.phi3_sign;
    if (gen.phi3_sign > 0) rec.satisfied = rec.delta2 <= rec.half_d2 + 1e-12;
    else if (gen.phi3_sign < 0) rec.satisfied = rec.delta2 >= rec.half_d2 - 1e-12;
    else rec.satisfied = std::abs(rec.delta2 - rec.half_d2) <= 1e-12 * std::max(1.0, rec.half_d2);
    return rec;
}

ClosestPointResult closest_point_to_set(const Generator& gen, std::span<const Point> points) {
    if (points.empty()) fail(errc::empty_set, "points: empty set");
    const std::size_t dim = points.front().size();
    for (const auto& pt : points) {
        require_point_in_domain(gen, pt, "points");
        if (pt.size() != dim) fail(errc::dimension_mismatch, "points: ragged dimensions");
    }

    ClosestPointResult res;
    res.minimizer.resize(dim);
    res.divergence_minimizer.resize(dim);
    const double n = static_cast<double>(points.size());
    for (std::size_t i = 0; i < dim; ++i) {
        double h_acc = 0.0, acc = 0.0;
        for (const auto& pt : points) {
            h_acc += gen.h(pt[i]);
            acc += pt[i];
        }
        res.minimizer[i] = gen.H(h_acc / n);
        res.divergence_minimizer[i] = acc / n;
    }
    for (const auto& pt : points) {
        const double d = distance(gen, pt, res.minimizer);
        res.distance_cost += d * d;
        res.divergence_cost += bregman_point(gen, pt, res.divergence_minimizer);
    }
    return res;
}

} // namespace bregman
