#include "bregman/generator.hpp"

#include <cmath>
#include <charconv>

#include "bregman/errors.hpp"

namespace bregman {

namespace {

double power_h_coeff(double p) { return (2.0 / p) * std::sqrt(p * (p - 1.0)); }

} // namespace

double Generator::phi(double x) const {
    switch (kind) {
        case GenKind::quadratic: return 0.5 * x * x;
        case GenKind::exp: return std::exp(x);
        case GenKind::neg_exp: return std::exp(-x);
        case GenKind::xlogx: return x * std::log(x);
        case GenKind::neglog: return -std::log(x);
        case GenKind::power: return std::pow(x, p);
    }
    fail(errc::unknown_kind, "generator kind");
}

double Generator::phi1(double x) const {
    switch (kind) {
        case GenKind::quadratic: return x;
        case GenKind::exp: return std::exp(x);
        case GenKind::neg_exp: return -std::exp(-x);
        case GenKind::xlogx: return std::log(x) + 1.0;
        case GenKind::neglog: return -1.0 / x;
        case GenKind::power: return p * std::pow(x, p - 1.0);
    }
    fail(errc::unknown_kind, "generator kind");
}

double Generator::phi2(double x) const {
    switch (kind) {
        case GenKind::quadratic: return 1.0;
        case GenKind::exp: return std::exp(x);
        case GenKind::neg_exp: return std::exp(-x);
        case GenKind::xlogx: return 1.0 / x;
        case GenKind::neglog: return 1.0 / (x * x);
        case GenKind::power: return p * (p - 1.0) * std::pow(x, p - 2.0);
    }
    fail(errc::unknown_kind, "generator kind");
}

double Generator::phi3(double x) const {
    switch (kind) {
        case GenKind::quadratic: return 0.0;
        case GenKind::exp: return std::exp(x);
        case GenKind::neg_exp: return -std::exp(-x);
        case GenKind::xlogx: return -1.0 / (x * x);
        case GenKind::neglog: return -2.0 / (x * x * x);
        case GenKind::power: return p * (p - 1.0) * (p - 2.0) * std::pow(x, p - 3.0);
    }
    fail(errc::unknown_kind, "generator kind");
}

double Generator::h(double x) const {
    switch (kind) {
        case GenKind::quadratic: return x;
        case GenKind::exp: return 2.0 * std::exp(0.5 * x);
        case GenKind::neg_exp: return -2.0 * std::exp(-0.5 * x);
        case GenKind::xlogx: return 2.0 * std::sqrt(x);
        case GenKind::neglog: return std::log(x);
        case GenKind::power: return power_h_coeff(p) * std::pow(x, 0.5 * p);
    }
    fail(errc::unknown_kind, "generator kind");
}

double Generator::H(double u) const {
    if (!h_image.contains(u))
        fail(errc::root_out_of_range, "u: outside the image of h for generator " + name());
    switch (kind) {
        case GenKind::quadratic: return u;
        case GenKind::exp: return 2.0 * std::log(0.5 * u);
        case GenKind::neg_exp: return -2.0 * std::log(-0.5 * u);
        case GenKind::xlogx: return 0.25 * u * u;
        case GenKind::neglog: return std::exp(u);
        case GenKind::power: return std::pow(u / power_h_coeff(p), 2.0 / p);
    }
    fail(errc::unknown_kind, "generator kind");
}

std::string Generator::name() const {
    switch (kind) {
        case GenKind::quadratic: return "quadratic";
        case GenKind::exp: return "exp";
        case GenKind::neg_exp: return "neg_exp";
        case GenKind::xlogx: return "xlogx";
        case GenKind::neglog: return "neglog";
        case GenKind::power: {
            char buf[48];
            auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), p);
            (void)ec;
            return "power:" + std::string(buf, end);
        }
    }
    fail(errc::unknown_kind, "generator kind");
}

void Generator::require_interior(double x, const char* field) const {
    if (!domain.contains_interior(x))
        fail(errc::out_of_domain,
             std::string(field) + ": value " + std::to_string(x) +
                 " outside the domain interior of generator " + name());
}

Generator make_generator(GenKind kind, std::optional<double> p) {
    if (kind == GenKind::power) {
        if (!p) fail(errc::invalid_power, "p: required for the power generator");
        if (!(*p > 1.0) || *p == 2.0)
            fail(errc::invalid_power, "p: must satisfy p > 1 and p != 2, got " + std::to_string(*p));
    } else if (p) {
        fail(errc::invalid_power, "p: only meaningful for the power generator");
    }

    Generator g;
    g.kind = kind;
    const auto inf = std::numeric_limits<double>::infinity();
    switch (kind) {
        case GenKind::quadratic:
            g.domain = DomainInterval::real_line();
            g.h_image = DomainInterval::real_line();
            g.phi3_sign = 0;
            break;
        case GenKind::exp:
            g.domain = DomainInterval::real_line();
            g.h_image = {0.0, inf, true, true};
            g.phi3_sign = +1;
            break;
        case GenKind::neg_exp:
            g.domain = DomainInterval::real_line();
            g.h_image = {-inf, 0.0, true, true};
            g.phi3_sign = -1;
            break;
        case GenKind::xlogx:
            g.domain = DomainInterval::positive_half_line();
            g.h_image = {0.0, inf, true, true};
            g.phi3_sign = -1;
            break;
        case GenKind::neglog:
            g.domain = DomainInterval::positive_half_line();
            g.h_image = DomainInterval::real_line();
            g.phi3_sign = -1;
            break;
        case GenKind::power:
            g.p = *p;
            g.domain = DomainInterval::positive_half_line();
            g.h_image = {0.0, inf, true, true};
            g.phi3_sign = (*p > 2.0) ? +1 : -1;
            break;
    }
    return g;
}

Generator parse_generator(std::string_view name) {
    if (name == "quadratic") return make_generator(GenKind::quadratic);
    if (name == "exp") return make_generator(GenKind::exp);
    if (name == "neg_exp") return make_generator(GenKind::neg_exp);
    if (name == "xlogx") return make_generator(GenKind::xlogx);
    if (name == "neglog") return make_generator(GenKind::neglog);
    if (name.rfind("power:", 0) == 0) {
        const auto num = name.substr(6);
        double p = 0.0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
        if (ec != std::errc{} || ptr != num.data() + num.size())
            fail(errc::unknown_kind, "generator: malformed power exponent in '" + std::string(name) + "'");
        return make_generator(GenKind::power, p);
    }
    fail(errc::unknown_kind, "generator: unknown kind '" + std::string(name) + "'");
}

const std::vector<Generator>& all_generators() {
    static const std::vector<Generator> gens = {
        make_generator(GenKind::quadratic), make_generator(GenKind::exp),
        make_generator(GenKind::neg_exp),   make_generator(GenKind::xlogx),
        make_generator(GenKind::neglog),    make_generator(GenKind::power, 1.5),
        make_generator(GenKind::power, 3.0),
    };
    return gens;
}

} // namespace bregman
