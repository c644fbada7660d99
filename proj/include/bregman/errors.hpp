#pragma once

#include <stdexcept>
#include <string>

namespace bregman {

// Error codes mirror the library's validation contracts. Every throw site
// names the offending field or argument in the message so the CLI can emit
// a one-line diagnostic.
enum class errc {
    unknown_kind,
    invalid_power,
    out_of_domain,
    dimension_mismatch,
    quadrature_non_convergence,
    root_out_of_range,
    root_non_convergence,
    geodesic_exits_domain,
    step_count_too_small,
    space_mismatch,
    length_mismatch,
    invalid_partition,
    refinement_violation,
    empty_set,
    sample_too_small,
    unsupported_generator,
    domain_sampler_mismatch,
    invalid_model,
    bad_input,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace bregman
