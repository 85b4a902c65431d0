#include "batrel/appbat.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "batrel/detail/uint128.hpp"
#include "batrel/error.hpp"
#include "batrel/implicit_bat.hpp"
#include "batrel/kahan.hpp"
#include "batrel/plsa.hpp"

namespace batrel {

namespace {

using Clock = std::chrono::steady_clock;

struct ShardResult {
    std::uint64_t connected = 0;
    KahanSum mass;
};

// Shared between the shards of one level.
struct LevelControl {
    std::optional<Clock::time_point> deadline;
    std::atomic<bool> expired{false};
};

void run_shard(const Network& net, const ArcDistribution& dist, int level, std::uint64_t begin,
               std::uint64_t end, std::optional<double> uniform_weight, LevelControl& control,
               ShardResult& out) {
    if (begin == end) return;
    ConnectivityChecker checker(net);
    LevelCursor cursor(net.arc_count(), level, begin);
    std::uint64_t connected = 0;
    KahanSum mass;
    for (std::uint64_t k = begin;;) {
        const StateVector x = cursor.state();
        if (checker.connected(x)) {
            ++connected;
            if (!uniform_weight) mass.add(state_probability(x, dist));
        }
        if (++k == end) break;
        if (control.deadline && (k - begin) % kBudgetCheckStride == 0) {
            if (control.expired.load(std::memory_order_relaxed) || Clock::now() >= *control.deadline) {
                control.expired.store(true, std::memory_order_relaxed);
                return;
            }
        }
        cursor.advance();
    }
    out.connected = connected;
    if (uniform_weight) {
        out.mass.add(static_cast<double>(connected) * *uniform_weight);
    } else {
        out.mass = mass;
    }
}

// nullopt when the deadline interrupted the level.
std::optional<LevelStats> evaluate_level(const Network& net, const ArcDistribution& dist, int level,
                                         int workers, std::optional<Clock::time_point> deadline) {
    const int m = net.arc_count();
    const auto started = Clock::now();
    const std::uint64_t total = count_level(m, level);

    // Under a uniform distribution every vector of the level has the same
    // probability, so only the connected count is needed.
    std::optional<double> uniform_weight;
    if (dist.is_uniform()) {
        uniform_weight = state_probability(indicator_to_state(first_indicator(level, m)), dist);
    }

    const auto shards = static_cast<std::uint64_t>(
        std::clamp<std::uint64_t>(total, 1, static_cast<std::uint64_t>(std::max(workers, 1))));
    std::vector<ShardResult> results(shards);
    LevelControl control;
    control.deadline = deadline;

    auto bounds = [&](std::uint64_t s) {
        return static_cast<std::uint64_t>(static_cast<detail::uint128>(total) * s / shards);
    };
    if (shards == 1) {
        run_shard(net, dist, level, 0, total, uniform_weight, control, results[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(shards);
        for (std::uint64_t s = 0; s < shards; ++s) {
            threads.emplace_back([&, s] {
                run_shard(net, dist, level, bounds(s), bounds(s + 1), uniform_weight, control,
                          results[s]);
            });
        }
        for (auto& t : threads) t.join();
    }
    if (control.expired.load()) return std::nullopt;

    LevelStats stats;
    stats.level = level;
    stats.total_vectors = total;
    KahanSum mass;
    for (const auto& r : results) {
        stats.connected_vectors += r.connected;
        mass += r.mass;
    }
    stats.mass = stats.connected_vectors == 0 ? 0.0 : mass.value();
    stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - started).count();
    return stats;
}

void check_level_arg(const Network& net, int level, const char* name) {
    if (level < 0 || level > net.arc_count()) {
        throw InputError(std::string(name) + " " + std::to_string(level) + " outside 0.." +
                         std::to_string(net.arc_count()));
    }
}

}  // namespace

double state_probability(StateVector x, const ArcDistribution& dist) {
    if (x.size() != dist.size()) {
        throw InputError("state vector has " + std::to_string(x.size()) +
                         " arcs, distribution has " + std::to_string(dist.size()));
    }
    double pr = 1.0;
    for (int i = 0; i < x.size(); ++i) pr *= x[i] ? dist[i] : 1.0 - dist[i];
    return pr;
}

LevelStats level_mass(const Network& net, const ArcDistribution& dist, int level, int workers) {
    require_compatible(net, dist);
    check_level_arg(net, level, "level");
    if (workers < 1) throw InputError("worker count must be at least 1");
    return *evaluate_level(net, dist, level, workers, std::nullopt);
}

ReliabilityReport approximate_reliability(const Network& net, const ArcDistribution& dist,
                                          int min_ones, const AppBatOptions& options) {
    require_compatible(net, dist);
    check_level_arg(net, min_ones, "minimum working-arc count");
    if (options.workers < 1) throw InputError("worker count must be at least 1");
    if (options.delta_threshold && !(*options.delta_threshold >= 0.0)) {
        throw InputError("delta threshold must be non-negative");
    }
    if (options.time_budget && !(options.time_budget->count() >= 0.0)) {
        throw InputError("time budget must be non-negative");
    }

    std::optional<Clock::time_point> deadline;
    if (options.time_budget) {
        deadline = Clock::now() +
                   std::chrono::duration_cast<Clock::duration>(*options.time_budget);
    }

    ReliabilityReport report;
    report.direction = options.direction;
    report.min_ones = min_ones;

    const int m = net.arc_count();
    std::vector<int> order;
    for (int level = min_ones; level <= m; ++level) order.push_back(level);
    if (options.direction == Direction::descending) std::reverse(order.begin(), order.end());

    KahanSum total;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (deadline && Clock::now() >= *deadline) {
            report.termination = Termination::time_budget;
            break;
        }
        auto stats = evaluate_level(net, dist, order[k], options.workers, deadline);
        if (!stats) {
            report.termination = Termination::time_budget;
            break;
        }
        total.add(stats->mass);
        report.levels.push_back(*stats);
        const bool more = k + 1 < order.size();
        if (more && options.direction == Direction::descending && options.delta_threshold &&
            stats->mass < *options.delta_threshold) {
            report.termination = Termination::delta_threshold;
            break;
        }
    }
    report.reliability = std::min(total.value(), 1.0);
    return report;
}

int max_failed_to_min_ones(const Network& net, int max_failed) {
    check_level_arg(net, max_failed, "maximum failed-arc count");
    return net.arc_count() - max_failed;
}

std::string_view to_string(Direction direction) noexcept {
    return direction == Direction::ascending ? "ascending" : "descending";
}

std::string_view to_string(Termination termination) noexcept {
    switch (termination) {
        case Termination::completed: return "completed";
        case Termination::delta_threshold: return "delta_threshold";
        case Termination::time_budget: return "time_budget";
    }
    return "unknown";
}

}  // namespace batrel
