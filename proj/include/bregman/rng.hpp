#pragma once

#include <cstdint>

namespace bregman {

// SplitMix64 stream (Steele, Lea, Flood). Substreams are derived by feeding
// (seed, stream index) through the output mix, so trial t of a run with seed s
// sees the same draws whether trials execute serially or in parallel. All
// randomness in the library flows through this type; draw counts per trial are
// fixed (inverse-CDF sampling, no rejection), which keeps runs bit-reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    // Independent substream for (seed, index); index may be a trial number,
    // an outcome counter, or a purpose tag combined by the caller.
    static Rng stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();

    // Uniform on [0, 1) with 53 significant bits.
    double next_double();

    // Uniform on (0, 1), endpoints excluded (safe for inverse CDFs).
    double next_open();

    // Standard normal via the AS241 inverse CDF (Wichura's PPND16).
    double next_normal();

    // Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);

  private:
    std::uint64_t state_;
};

// Inverse standard normal CDF, AS241 PPND16; |error| < 1e-15 for p in (0, 1).
double normal_icdf(double p);

} // namespace bregman
