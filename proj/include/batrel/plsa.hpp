#pragma once

#include <cstdint>
#include <vector>

#include "batrel/network.hpp"
#include "batrel/state_vector.hpp"

namespace batrel {

/// Layer decomposition produced by the path-based layered search.
///
/// layers[0] = {source}; layers[k] holds the nodes first reached from
/// layers[k-1] through working arcs, in ascending label order. The trace ends
/// at the first layer containing the sink (connected) or at the first empty
/// layer, which is included (disconnected).
struct LayerTrace {
    std::vector<std::vector<int>> layers;
    bool connected = false;
};

/// Reusable s-t connectivity tester for one network.
///
/// Adjacency is built once (both directions for undirected arcs); each query
/// masks it with the state vector. Queries cost O(n + m) and do not allocate.
/// Not thread-safe: give each worker its own checker.
class ConnectivityChecker {
public:
    explicit ConnectivityChecker(const Network& net);

    /// True iff the sink is reachable from the source in G(X).
    /// Throws InputError if x.size() != arc count.
    bool connected(StateVector x);

    LayerTrace trace(StateVector x);

    const Network& network() const noexcept { return *net_; }

private:
    struct Link {
        int arc;
        int node;  // 0-based
    };

    void check_size(StateVector x) const;
    void next_epoch();

    const Network* net_;
    std::vector<std::uint32_t> offsets_;
    std::vector<Link> links_;
    std::vector<std::uint32_t> seen_;
    std::uint32_t epoch_ = 0;
    std::vector<int> current_;
    std::vector<int> next_;
};

/// One-off query. Prefer ConnectivityChecker in loops.
bool is_connected(const Network& net, StateVector x);

LayerTrace layer_trace(const Network& net, StateVector x);

}  // namespace batrel
