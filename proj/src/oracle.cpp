#include "batrel/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "batrel/appbat.hpp"
#include "batrel/bat.hpp"
#include "batrel/error.hpp"
#include "batrel/kahan.hpp"
#include "batrel/plsa.hpp"
#include "batrel/rng.hpp"

namespace batrel {

double exact_reliability(const Network& net, const ArcDistribution& dist, int arc_cap) {
    require_compatible(net, dist);
    const int cap = std::min(arc_cap, kExactArcHardCap);
    const int m = net.arc_count();
    if (m > cap) {
        throw CapabilityError("exact enumeration of " + std::to_string(m) +
                              " arcs exceeds the cap of " + std::to_string(cap) +
                              "; use appbat for a lower bound instead");
    }
    ConnectivityChecker checker(net);
    if (m == 0) return checker.connected(StateVector(0, 0)) ? 1.0 : 0.0;

    KahanSum r;
    for (const StateVector& x : enumerate_all(m, BatOrder::forward)) {
        if (checker.connected(x)) r.add(state_probability(x, dist));
    }
    return std::min(r.value(), 1.0);
}

McsEstimate mcs_estimate(const Network& net, const ArcDistribution& dist, std::uint64_t samples,
                         std::uint64_t seed, int workers) {
    require_compatible(net, dist);
    if (samples == 0) throw InputError("sample count must be at least 1");
    if (workers < 1) throw InputError("worker count must be at least 1");

    const int m = net.arc_count();
    const std::uint64_t blocks = (samples + kMcsBlockSize - 1) / kMcsBlockSize;
    std::vector<std::uint64_t> hits(blocks, 0);
    std::atomic<std::uint64_t> next_block{0};

    auto work = [&] {
        ConnectivityChecker checker(net);
        for (std::uint64_t b; (b = next_block.fetch_add(1)) < blocks;) {
            Xoshiro256 rng(derive_seed(seed, b));
            const std::uint64_t count = std::min(kMcsBlockSize, samples - b * kMcsBlockSize);
            std::uint64_t h = 0;
            for (std::uint64_t s = 0; s < count; ++s) {
                std::uint64_t bits = 0;
                for (int i = 0; i < m; ++i) {
                    if (rng.uniform() < dist[i]) bits |= std::uint64_t{1} << i;
                }
                if (checker.connected(StateVector(m, bits))) ++h;
            }
            hits[b] = h;
        }
    };

    const auto threads_wanted = static_cast<std::uint64_t>(workers);
    if (threads_wanted == 1 || blocks == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::uint64_t t = 0; t < std::min(threads_wanted, blocks); ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::uint64_t total_hits = 0;
    for (auto h : hits) total_hits += h;
    McsEstimate out;
    out.samples = samples;
    out.seed = seed;
    out.estimate = static_cast<double>(total_hits) / static_cast<double>(samples);
    out.standard_error =
        std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
    return out;
}

}  // namespace batrel
