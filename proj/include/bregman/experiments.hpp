#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "bregman/prediction.hpp"
#include "bregman/rng.hpp"

namespace bregman {

// Every Monte Carlo kernel has a serial reference loop and an OpenMP loop over
// the same per-trial RNG streams, with results written into trial-indexed
// storage and reduced in a fixed serial order, so the two policies produce
// bit-identical rows. The serial path is the reference the tests compare
// against; the bench tool times one against the other.
enum class RunPolicy { serial, parallel };

// Named sampler for experiment inputs: gaussian(mu, sigma) feeds generators on
// R, lognormal(mu, sigma) feeds generators on (0, inf).
struct SamplerSpec {
    enum class Dist { gaussian, lognormal };
    Dist dist = Dist::gaussian;
    double mu = 0.0;
    double sigma = 1.0;

    std::string name() const;
};

// Closed-form d-mean and d-variance of the sampled distribution under the
// given generator; throws domain_sampler_mismatch when the sampler does not
// feed the generator's domain.
double d_mean_truth(const Generator& gen, const SamplerSpec& sampler);
double d_variance_truth(const Generator& gen, const SamplerSpec& sampler);

// One draw from the sampler; validates sampler/domain compatibility upstream.
double sample_scalar(const SamplerSpec& sampler, Rng& rng);

// Tabular experiment output. Rows are keyed deterministically (trial index,
// n index, bin index) before emission, so reruns with one seed are
// bit-identical regardless of the run policy.
struct ExperimentResult {
    using Cell = std::variant<std::int64_t, double, std::string>;

    std::string name;
    std::string generator_kind;
    std::uint64_t seed = 0;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    std::size_t column_index(const std::string& column) const;
    double cell_double(std::size_t row, const std::string& column) const;
    std::int64_t cell_int(std::size_t row, const std::string& column) const;
    const std::string& cell_string(std::size_t row, const std::string& column) const;
};

// Full-precision CSV: header row, '.' decimal separator, LF terminators,
// shortest round-trip formatting for doubles.
void write_csv(const ExperimentResult& result, std::ostream& out);
void write_json(const ExperimentResult& result, std::ostream& out);
std::string format_double(double v);

// Parsed CSV cells (header + body) for the round-trip checks.
std::vector<std::vector<std::string>> parse_csv(std::istream& in);

// Sample-mean convergence toward the closed-form d-mean. Columns:
//   n, trials, mean_error, slope, slope_in_band
// where slope is the least-squares slope of log(mean_error) against log(n)
// over all n values and the band is -0.5 +/- 0.15.
ExperimentResult lln_experiment(const Generator& gen, const SamplerSpec& sampler,
                                const std::vector<std::int64_t>& n_values, std::int64_t trials,
                                std::uint64_t seed, RunPolicy policy = RunPolicy::parallel);

// Unbiasedness of the d-variance estimator. Columns:
//   n, trials, mean_estimate, truth, std_error, z, within_3se
ExperimentResult variance_unbiasedness_experiment(const Generator& gen, const SamplerSpec& sampler,
                                                  std::int64_t n, std::int64_t trials,
                                                  std::uint64_t seed,
                                                  RunPolicy policy = RunPolicy::parallel);

// Two-day asset model: S(1) = s0 e^X, S(2) = s0 e^{X+Y} with (X, Y) bivariate
// Gaussian, correlation rho. Conditioning on S(1) is realized by binning X
// into its theoretical quantile bins.
struct AssetModel {
    double s0 = 1.0;
    double mu1 = 0.0, mu2 = 0.0;
    double sigma1 = 1.0, sigma2 = 1.0;
    double rho = 0.0;
};

// Per-bin Monte Carlo conditional means of S(2) under the log distance and
// under the classical expectation, against the closed forms S(1)e^m and
// S(1)e^{m + (1-rho^2) sigma2^2 / 2} evaluated at the bin centers
// (center := E[X | bin], the truncated-Gaussian mean, which makes the E_d
// form exact per bin). The E-side tolerance is 3 SE plus the exactly computed
// bin-curvature term, the budget through which the bin width enters. Columns:
//   bin, x_lo, x_hi, x_center, count,
//   mc_ed, se_ed, cf_ed, ok_ed,
//   mc_e, se_e, cf_e, curv_e, ok_e,
//   ratio, cf_ratio, ratio_ok, ordering_ok,
//   pred_div_error, pred_dist_error, pred_ordering
// The last three repeat the whole-partition prediction-error comparison for
// phi = -ln x on every row.
ExperimentResult asset_experiment(const AssetModel& model, std::int64_t n_paths,
                                  std::int64_t n_bins, std::uint64_t seed,
                                  RunPolicy policy = RunPolicy::parallel);

// Conditional expectation computed via H(E[h(X)|G]) against the tabulated
// closed form written with the unnormalized transform (constants in h cancel).
// Columns: outcome, coord, predictor_h, predictor_table, residual
ExperimentResult table_reproduction(const Generator& gen, const FiniteProbSpace& space,
                                    const RandomVector& X, const Partition& part);

} // namespace bregman
