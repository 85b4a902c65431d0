#pragma once

#include <cstdint>

#include "batrel/network.hpp"

namespace batrel {

/// Default arc cap for exact enumeration (2^28 vectors).
inline constexpr int kDefaultExactArcCap = 28;
/// Exact enumeration refuses networks above this size whatever the cap.
inline constexpr int kExactArcHardCap = 40;

/// R(G) by full forward-BAT enumeration with a layered-search test per vector.
/// Throws CapabilityError if m exceeds min(arc_cap, kExactArcHardCap).
double exact_reliability(const Network& net, const ArcDistribution& dist,
                         int arc_cap = kDefaultExactArcCap);

struct McsEstimate {
    double estimate = 0.0;
    double standard_error = 0.0;  // sqrt(estimate (1 - estimate) / samples)
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Samples drawn from one derived random stream.
inline constexpr std::uint64_t kMcsBlockSize = std::uint64_t{1} << 16;

/// Crude Monte-Carlo estimate: draw each arc state independently, test s-t
/// connectivity, average. Samples are grouped in fixed blocks and block b uses
/// its own Xoshiro256 stream seeded with derive_seed(seed, b), so the result
/// depends only on (net, dist, samples, seed) and not on the worker count.
/// Throws InputError if samples == 0.
McsEstimate mcs_estimate(const Network& net, const ArcDistribution& dist, std::uint64_t samples,
                         std::uint64_t seed, int workers = 1);

}  // namespace batrel
