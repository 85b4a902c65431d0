#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "batrel/network.hpp"
#include "batrel/state_vector.hpp"

namespace batrel {

/// Threshold used when the delta stopping rule is enabled without a value.
inline constexpr double kDefaultDeltaThreshold = 1e-5;

/// Vectors evaluated between two time-budget checks.
inline constexpr std::uint64_t kBudgetCheckStride = std::uint64_t{1} << 16;

enum class Direction { ascending, descending };
enum class Termination { completed, delta_threshold, time_budget };

/// Result of evaluating every state vector with exactly `level` working arcs.
struct LevelStats {
    int level = 0;
    std::uint64_t total_vectors = 0;      // C(m, level)
    std::uint64_t connected_vectors = 0;
    double mass = 0.0;                    // Pr of the connected vectors
    double elapsed_seconds = 0.0;
};

struct AppBatOptions {
    /// Descending runs stop after the first completed level whose mass is
    /// below this value. Disabled when empty.
    std::optional<double> delta_threshold;
    /// Wall-clock budget. A level interrupted by the budget is dropped.
    std::optional<std::chrono::duration<double>> time_budget;
    Direction direction = Direction::descending;
    int workers = 1;
};

struct ReliabilityReport {
    /// Sum of the completed levels' masses: a lower bound on the reliability,
    /// equal to it when every level from min_ones up completed and min_ones
    /// is at most the arc count of a shortest source-sink path.
    double reliability = 0.0;
    std::vector<LevelStats> levels;  // evaluation order
    Termination termination = Termination::completed;
    Direction direction = Direction::descending;
    int min_ones = 0;
};

/// Pr(X) = prod_i (p_i if X(a_i) = 1 else 1 - p_i). Connectivity is not checked.
double state_probability(StateVector x, const ArcDistribution& dist);

/// Enumerates the level with the implicit BAT, tests each vector with the
/// layered search and sums Pr over the connected ones. With workers > 1 the
/// level is split into contiguous rank ranges; partial sums are merged in
/// range order, so the result does not depend on thread timing.
LevelStats level_mass(const Network& net, const ArcDistribution& dist, int level,
                      int workers = 1);

/// AppBAT lower bound R_z over levels z..m.
///
/// Descending order (m, m-1, ..., z) is the default: the heaviest levels of a
/// reliable network come first, so a run cut short by the budget or the
/// delta rule still reports a valid lower bound.
ReliabilityReport approximate_reliability(const Network& net, const ArcDistribution& dist,
                                          int min_ones, const AppBatOptions& options = {});

/// Converts "at most k failed arcs" to "at least m - k working arcs".
int max_failed_to_min_ones(const Network& net, int max_failed);

std::string_view to_string(Direction direction) noexcept;
std::string_view to_string(Termination termination) noexcept;

}  // namespace batrel
