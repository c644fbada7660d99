#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bregman/domain.hpp"

namespace bregman {

enum class GenKind { quadratic, exp, neg_exp, xlogx, neglog, power };

// A strictly convex scalar generator phi together with its derivatives and the
// coordinate transform h with h' = sqrt(phi''), inverse H. The transform uses
// the exact normalization h' = (phi'')^{1/2}; constant rescalings of h cancel
// in every distance and predictor, so tabulated forms that drop constants are
// reproduced unchanged.
//
// Shipped kinds (phi, domain, h):
//   quadratic  x^2/2    on R        h(x) = x
//   exp        e^x      on R        h(x) = 2 e^{x/2}
//   neg_exp    e^{-x}   on R        h(x) = -2 e^{-x/2}
//   xlogx      x ln x   on (0,inf)  h(x) = 2 sqrt(x)
//   neglog     -ln x    on (0,inf)  h(x) = ln x
//   power(p)   x^p      on (0,inf)  h(x) = (2/p) sqrt(p(p-1)) x^{p/2},  p>1, p!=2
struct Generator {
    GenKind kind = GenKind::quadratic;
    double p = 0.0; // power exponent; meaningful only for GenKind::power
    DomainInterval domain;
    DomainInterval h_image; // image of h over the domain interior
    int phi3_sign = 0;      // constant sign of phi''' on the interior
    bool h_closed_form = true;

    double phi(double x) const;
    double phi1(double x) const;
    double phi2(double x) const;
    double phi3(double x) const;

    double h(double x) const;
    double H(double u) const;

    // Canonical kind string used by the CLI and in CSV headers
    // ("quadratic", "exp", "neg_exp", "xlogx", "neglog", "power:<p>").
    std::string name() const;

    void require_interior(double x, const char* field = "x") const;
};

// Builds a generator; p must be supplied iff kind == power, with p > 1, p != 2.
Generator make_generator(GenKind kind, std::optional<double> p = std::nullopt);

// Parses a canonical kind string, e.g. "neglog" or "power:1.5".
Generator parse_generator(std::string_view name);

// All seven shipped parameterizations (five closed-form kinds plus power
// p = 1.5 and p = 3), in a fixed order used by sweeps and the verify suite.
const std::vector<Generator>& all_generators();

} // namespace bregman
