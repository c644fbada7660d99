#include "bregman/prediction.hpp"

#include <cmath>

#include "bregman/divergence.hpp"
#include "bregman/errors.hpp"
#include "bregman/geometry.hpp"

namespace bregman {

namespace {

// Per-coordinate view of h(X) as a real function on outcomes.
std::vector<double> h_coordinate(const Generator& gen, const RandomVector& X, std::size_t coord) {
    std::vector<double> f(X.values.size());
    for (std::size_t w = 0; w < X.values.size(); ++w) f[w] = gen.h(X.values[w][coord]);
    return f;
}

} // namespace

Point d_mean(const Generator& gen, const FiniteProbSpace& space, const RandomVector& X) {
    require_rv_on_space(space, X, "X");
    require_rv_in_domain(gen, X, "X");
    Point out(X.dimension());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = gen.H(expectation(space, h_coordinate(gen, X, i)));
    return out;
}

Point d_mean_sample(const Generator& gen, std::span<const Point> sample) {
    if (sample.empty()) fail(errc::empty_set, "sample: empty");
    return closest_point_to_set(gen, sample).minimizer;
}

double d_variance(const Generator& gen, const FiniteProbSpace& space, const RandomVector& X) {
    require_rv_on_space(space, X, "X");
    require_rv_in_domain(gen, X, "X");
    const Point mean = d_mean(gen, space, X);
    double acc = 0.0;
    for (std::size_t w = 0; w < space.size(); ++w) {
        double sq = 0.0;
        for (std::size_t i = 0; i < mean.size(); ++i) {
            const double dev = gen.h(X.values[w][i]) - gen.h(mean[i]);
            sq += dev * dev;
        }
        acc += space.weights[w] * sq;
    }
    return acc;
}

double d_variance_sample(const Generator& gen, std::span<const Point> sample) {
    if (sample.size() < 2) fail(errc::sample_too_small, "sample: need n >= 2");
    const Point center = d_mean_sample(gen, sample);
    double acc = 0.0;
    for (const auto& pt : sample) {
        for (std::size_t i = 0; i < center.size(); ++i) {
            const double dev = gen.h(pt[i]) - gen.h(center[i]);
            acc += dev * dev;
        }
    }
    return acc / static_cast<double>(sample.size() - 1);
}

RandomVector d_conditional_expectation(const Generator& gen, const FiniteProbSpace& space,
                                       const RandomVector& X, const Partition& part) {
    require_rv_on_space(space, X, "X");
    require_rv_in_domain(gen, X, "X");
    const std::size_t dim = X.dimension();
    RandomVector out;
    out.values.assign(space.size(), Point(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        const auto cond = conditional_expectation_real(space, h_coordinate(gen, X, i), part);
        for (std::size_t w = 0; w < space.size(); ++w) out.values[w][i] = gen.H(cond[w]);
    }
    return out;
}

double intertwining_residual(const Generator& gen, const FiniteProbSpace& space,
                             const RandomVector& X, const Partition& part) {
    const RandomVector predictor = d_conditional_expectation(gen, space, X, part);
    double worst = 0.0;
    for (std::size_t i = 0; i < X.dimension(); ++i) {
        const auto cond = conditional_expectation_real(space, h_coordinate(gen, X, i), part);
        for (std::size_t w = 0; w < space.size(); ++w)
            worst = std::max(worst, std::abs(gen.h(predictor.values[w][i]) - cond[w]));
    }
    return worst;
}

namespace {

double max_abs_diff(const RandomVector& a, const RandomVector& b) {
    double worst = 0.0;
    for (std::size_t w = 0; w < a.values.size(); ++w)
        for (std::size_t i = 0; i < a.values[w].size(); ++i)
            worst = std::max(worst, std::abs(a.values[w][i] - b.values[w][i]));
    return worst;
}

} // namespace

CondexpPropertiesReport condexp_properties_check(const Generator& gen, const FiniteProbSpace& space,
                                                 const RandomVector& X, const Partition& p1,
                                                 const Partition& p2) {
    if (!refines(p1, p2)) fail(errc::refinement_violation, "p1: does not refine p2");
    CondexpPropertiesReport report;

    // 1) Trivial partition reduces to the d-mean.
    {
        const auto trivial = Partition::trivial(space.size());
        const RandomVector via_cond = d_conditional_expectation(gen, space, X, trivial);
        const Point mean = d_mean(gen, space, X);
        for (const auto& pt : via_cond.values)
            for (std::size_t i = 0; i < pt.size(); ++i)
                report.trivial_residual = std::max(report.trivial_residual, std::abs(pt[i] - mean[i]));
    }

    // 2) Tower: conditioning on the finer p1 and then on p2 equals conditioning on p2.
    {
        const RandomVector fine = d_conditional_expectation(gen, space, X, p1);
        const RandomVector towered = d_conditional_expectation(gen, space, fine, p2);
        const RandomVector direct = d_conditional_expectation(gen, space, X, p2);
        report.tower_residual = max_abs_diff(towered, direct);
    }

    // 3) Measurability fixed point: a p1-measurable vector is its own predictor.
    {
        const RandomVector measurable = d_conditional_expectation(gen, space, X, p1);
        const RandomVector again = d_conditional_expectation(gen, space, measurable, p1);
        report.measurability_residual = max_abs_diff(again, measurable);
    }

    // 4) Monotonicity: shift X up componentwise and compare predictors.
    {
        RandomVector upper = X;
        for (auto& pt : upper.values)
            for (auto& c : pt)
                c = std::isfinite(gen.domain.lower) ? c * 1.25 : c + 0.5;
        const RandomVector lo = d_conditional_expectation(gen, space, X, p1);
        const RandomVector hi = d_conditional_expectation(gen, space, upper, p1);
        report.monotone = true;
        for (std::size_t w = 0; w < lo.values.size(); ++w)
            for (std::size_t i = 0; i < lo.values[w].size(); ++i)
                if (!(lo.values[w][i] <= hi.values[w][i] + 1e-12)) report.monotone = false;
    }
    return report;
}

PredictionErrorRecord prediction_error_compare(const Generator& gen, const FiniteProbSpace& space,
                                               const RandomVector& X, const Partition& part) {
    require_rv_on_space(space, X, "X");
    require_rv_in_domain(gen, X, "X");

    // Classical predictor: componentwise conditional expectation of X itself.
    RandomVector classical;
    classical.values.assign(space.size(), Point(X.dimension()));
    for (std::size_t i = 0; i < X.dimension(); ++i) {
        std::vector<double> f(space.size());
        for (std::size_t w = 0; w < space.size(); ++w) f[w] = X.values[w][i];
        const auto cond = conditional_expectation_real(space, f, part);
        for (std::size_t w = 0; w < space.size(); ++w) classical.values[w][i] = cond[w];
    }

    PredictionErrorRecord rec;
    rec.phi3_sign = gen.phi3_sign;
    rec.divergence_error = divergence_rv(gen, space, X, classical);

    const RandomVector d_predictor = d_conditional_expectation(gen, space, X, part);
    double acc = 0.0;
    for (std::size_t w = 0; w < space.size(); ++w) {
        const double d = distance(gen, X.values[w], d_predictor.values[w]);
        acc += space.weights[w] * d * d;
    }
    rec.distance_error = acc;

    if (gen.phi3_sign > 0) rec.ordering_satisfied = rec.divergence_error <= rec.distance_error + 1e-12;
    else if (gen.phi3_sign < 0) rec.ordering_satisfied = rec.divergence_error >= rec.distance_error - 1e-12;
    else
        rec.ordering_satisfied = std::abs(rec.divergence_error - 0.5 * rec.distance_error) <=
                                 1e-12 * std::max(1.0, rec.distance_error);
    return rec;
}

GroupInvarianceReport group_invariance_check(const Generator& gen, const Point& x, const Point& y,
                                             const Point& v) {
    require_point_in_domain(gen, x, "x");
    require_point_in_domain(gen, y, "y");
    require_point_in_domain(gen, v, "v");
    require_same_dimension(x, y);
    require_same_dimension(x, v);

    const bool additive = gen.kind == GenKind::quadratic;
    if (!additive && gen.kind != GenKind::neglog)
        fail(errc::unsupported_generator,
             "generator: no shipped invariant group operation for " + gen.name());

    Point xv(x.size()), yv(x.size()), identity(x.size()), x_inv(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        xv[i] = additive ? x[i] + v[i] : x[i] * v[i];
        yv[i] = additive ? y[i] + v[i] : y[i] * v[i];
        identity[i] = additive ? 0.0 : 1.0;
        x_inv[i] = additive ? -x[i] : 1.0 / x[i];
    }

    GroupInvarianceReport report;
    report.metric_residual = std::abs(distance(gen, xv, yv) - distance(gen, x, y));
    report.norm_residual =
        std::abs(distance(gen, identity, x) - distance(gen, identity, x_inv));
    return report;
}

double multiplicative_linearity_check(const FiniteProbSpace& space, const RandomVector& X1,
                                      const RandomVector& X2, double a1, double a2,
                                      const Partition& part) {
    const Generator gen = make_generator(GenKind::neglog);
    require_rv_on_space(space, X1, "X1");
    require_rv_on_space(space, X2, "X2");
    require_rv_in_domain(gen, X1, "X1");
    require_rv_in_domain(gen, X2, "X2");
    if (X1.dimension() != X2.dimension())
        fail(errc::dimension_mismatch, "X1, X2: coordinate dimensions differ");

    RandomVector product;
    product.values.assign(space.size(), Point(X1.dimension()));
    for (std::size_t w = 0; w < space.size(); ++w)
        for (std::size_t i = 0; i < X1.dimension(); ++i)
            product.values[w][i] =
                std::pow(X1.values[w][i], a1) * std::pow(X2.values[w][i], a2);

    const RandomVector lhs = d_conditional_expectation(gen, space, product, part);
    const RandomVector e1 = d_conditional_expectation(gen, space, X1, part);
    const RandomVector e2 = d_conditional_expectation(gen, space, X2, part);

    double worst = 0.0;
    for (std::size_t w = 0; w < space.size(); ++w)
        for (std::size_t i = 0; i < X1.dimension(); ++i) {
            const double rhs = std::pow(e1.values[w][i], a1) * std::pow(e2.values[w][i], a2);
            worst = std::max(worst, std::abs(lhs.values[w][i] - rhs));
        }
    return worst;
}

} // namespace bregman
