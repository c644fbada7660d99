#include "bregman/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "bregman/errors.hpp"

namespace bregman {

namespace {

struct SimpsonState {
    const std::function<double(double)>* f;
    double rel_tol, abs_tol;
    int evals = 0;
    int max_evals = 200000;
};

double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(SimpsonState& st, double a, double b, double fa, double fm, double fb,
                     double whole, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = (*st.f)(lm), frm = (*st.f)(rm);
    st.evals += 2;
    if (st.evals > st.max_evals)
        fail(errc::quadrature_non_convergence, "quadrature: refinement budget exhausted");
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double err = left + right - whole;
    const double tol = std::max(st.abs_tol, st.rel_tol * std::abs(left + right));
    if (depth <= 0 || std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
    return adaptive_step(st, a, m, fa, flm, fm, left, depth - 1) +
           adaptive_step(st, m, b, fm, frm, fb, right, depth - 1);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol) {
    if (a == b) return 0.0;
    SimpsonState st{&f, rel_tol, abs_tol};
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    st.evals = 3;
    return adaptive_step(st, a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), 48);
}

double default_h_ref(const Generator& gen) {
    return gen.domain.contains_interior(0.0) ? 0.0 : 1.0;
}

double h_numeric(const Generator& gen, double x, double x_ref) {
    gen.require_interior(x, "x");
    gen.require_interior(x_ref, "x_ref");
    if (x == x_ref) return 0.0;
    return integrate_adaptive([&](double t) { return std::sqrt(gen.phi2(t)); }, x_ref, x);
}

double H_numeric(const Generator& gen, double u, double x_ref) {
    gen.require_interior(x_ref, "x_ref");
    if (!std::isfinite(u)) fail(errc::root_out_of_range, "u: not finite");
    if (u == 0.0) return x_ref;

    // The image of x -> h_numeric(gen, x, x_ref) is the image of h shifted by
    // -h(x_ref); reject targets outside it before searching. Only this guard
    // consults the closed form; the root solve below is pure quadrature.
    if (!gen.h_image.contains(u + gen.h(x_ref)))
        fail(errc::root_out_of_range, "u: outside the image of h relative to x_ref");

    auto g = [&](double x) { return h_numeric(gen, x, x_ref) - u; };

    // g is strictly increasing with g(x_ref) = -u; expand away from x_ref in
    // the direction of the root until the sign changes.
    double lo, hi;
    const bool positive_domain = std::isfinite(gen.domain.lower);
    if (u > 0.0) {
        lo = x_ref;
        double step = std::max(0.5, 1e-3 * std::abs(x_ref));
        hi = x_ref + step;
        for (int i = 0; g(hi) < 0.0; ++i) {
            if (i >= 120) fail(errc::root_non_convergence, "H_numeric: bracket expansion failed");
            lo = hi;
            step *= 2.0;
            hi = x_ref + step;
        }
    } else {
        hi = x_ref;
        double step = std::max(0.5, 1e-3 * std::abs(x_ref));
        lo = positive_domain ? x_ref / (1.0 + step) : x_ref - step;
        for (int i = 0; g(lo) > 0.0; ++i) {
            if (i >= 120) fail(errc::root_non_convergence, "H_numeric: bracket expansion failed");
            hi = lo;
            step *= 2.0;
            lo = positive_domain ? x_ref / (1.0 + step) : x_ref - step;
        }
    }

    // Safeguarded Newton with bisection fallback; the derivative is sqrt(phi'').
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double gx = g(x);
        if (std::abs(gx) <= 1e-13 * std::max(1.0, std::abs(u))) return x;
        if (gx > 0.0) hi = x;
        else lo = x;
        double next = x - gx / std::sqrt(gen.phi2(x));
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 1e-15 * std::max(1.0, std::abs(next))) return next;
        x = next;
    }
    fail(errc::root_non_convergence, "H_numeric: iteration budget exhausted");
}

DerivativeReport check_derivatives(const Generator& gen, std::span<const double> xs, double eps) {
    DerivativeReport report;
    for (double x : xs) {
        gen.require_interior(x, "xs");
        if (std::isfinite(gen.domain.lower) && x - gen.domain.lower <= eps)
            fail(errc::out_of_domain, "xs: within eps of the lower domain boundary");
        if (std::isfinite(gen.domain.upper) && gen.domain.upper - x <= eps)
            fail(errc::out_of_domain, "xs: within eps of the upper domain boundary");

        const double scale = std::max(1.0, std::abs(x));
        // Roundoff/truncation balanced steps per order; eps acts as a floor.
        double e1 = std::max(eps, 6.0e-6 * scale);
        double e2 = std::max(eps, 1.2e-4 * scale);
        double e3 = std::max(eps, 5.0e-3 * scale);
        if (std::isfinite(gen.domain.lower)) {
            // keep the widest stencil point x - 2 e3 inside the domain
            e3 = std::min(e3, 0.4 * (x - gen.domain.lower));
            e2 = std::min(e2, e3);
            e1 = std::min(e1, e2);
        }

        const auto f = [&](double t) { return gen.phi(t); };
        const double fd1 = (f(x + e1) - f(x - e1)) / (2.0 * e1);
        const double fd2 = (f(x + e2) - 2.0 * f(x) + f(x - e2)) / (e2 * e2);
        const double fd3 =
            (f(x + 2.0 * e3) - 2.0 * f(x + e3) + 2.0 * f(x - e3) - f(x - 2.0 * e3)) /
            (2.0 * e3 * e3 * e3);

        const auto rel = [](double got, double want) {
            return std::abs(got - want) / std::max(1.0, std::abs(want));
        };
        report.max_residual[0] = std::max(report.max_residual[0], rel(fd1, gen.phi1(x)));
        report.max_residual[1] = std::max(report.max_residual[1], rel(fd2, gen.phi2(x)));
        report.max_residual[2] = std::max(report.max_residual[2], rel(fd3, gen.phi3(x)));
    }
    return report;
}

} // namespace bregman
