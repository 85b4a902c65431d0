#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace batrel {

enum class Orientation { directed, undirected };

/// Arc endpoints, 1-based node labels. The arc index is its list position.
struct Arc {
    int tail = 0;
    int head = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Simple binary-state network: nodes 1..n, arcs a_0..a_{m-1}, one source and
/// one sink. Immutable once built; the constructor enforces
///   - labels in 1..n and source != sink unless n == 1,
///   - no self-loops and no parallel arcs (unordered pairs when undirected),
///   - m <= 64.
class Network {
public:
    /// `sink == 0` selects node n.
    Network(int node_count, std::vector<Arc> arcs, Orientation orientation,
            int source = 1, int sink = 0);

    int node_count() const noexcept { return node_count_; }
    int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
    std::span<const Arc> arcs() const noexcept { return arcs_; }
    const Arc& arc(int index) const { return arcs_.at(static_cast<std::size_t>(index)); }
    Orientation orientation() const noexcept { return orientation_; }
    bool directed() const noexcept { return orientation_ == Orientation::directed; }
    int source() const noexcept { return source_; }
    int sink() const noexcept { return sink_; }

    friend bool operator==(const Network&, const Network&) = default;

private:
    int node_count_;
    std::vector<Arc> arcs_;
    Orientation orientation_;
    int source_;
    int sink_;
};

/// Independent per-arc success probabilities p_i in [0,1].
class ArcDistribution {
public:
    ArcDistribution() = default;
    explicit ArcDistribution(std::vector<double> probabilities);

    int size() const noexcept { return static_cast<int>(p_.size()); }
    double operator[](int arc) const noexcept { return p_[static_cast<std::size_t>(arc)]; }
    std::span<const double> probabilities() const noexcept { return p_; }

    /// True when every arc has the same probability.
    bool is_uniform() const noexcept;

    friend bool operator==(const ArcDistribution&, const ArcDistribution&) = default;

private:
    std::vector<double> p_;
};

/// A network together with its arc distribution, as read from a network file.
struct NetworkInstance {
    Network network;
    ArcDistribution distribution;

    friend bool operator==(const NetworkInstance&, const NetworkInstance&) = default;
};

/// Throws InputError unless `dist` has one entry per arc of `net`.
void require_compatible(const Network& net, const ArcDistribution& dist);

/// All m entries equal p. Throws InputError unless 0 <= p <= 1.
ArcDistribution uniform_distribution(int arc_count, double p);

/// Reads the network text format:
///
///     # comment (also allowed after the fields on any line)
///     n m directed|undirected [source sink]
///     tail head p        (m lines, arc index = line order from 0)
///
/// Errors carry the 1-based line number (ParseError).
NetworkInstance parse_network(std::string_view text);

/// Reads and parses a file. Throws InputError if it cannot be opened.
NetworkInstance load_network(const std::string& path);

/// Inverse of parse_network. Probabilities are written in shortest
/// round-trip form, so parse_network(render_network(x)) == x.
std::string render_network(const NetworkInstance& instance);

/// The five-arc directed bridge network: a0 1->2, a1 1->3, a2 2->3, a3 2->4,
/// a4 3->4, source 1, sink 4, every arc working with probability p.
/// The arc layout is the one consistent with the known connected/disconnected
/// split of its 32 states.
NetworkInstance bridge_fixture(double p = 0.9);

/// Random simple network with source 1 and sink n, a pure function of its
/// arguments. A random spanning arborescence rooted at node 1 (oriented away
/// from the root when directed) guarantees the full graph connects source to
/// sink; the remaining arcs are drawn uniformly from the unused node pairs and
/// the final arc order is shuffled.
/// Throws InputError if m < n-1, m > 64, or m exceeds the simple-arc capacity.
Network generate_random_network(int node_count, int arc_count, Orientation orientation,
                                std::uint64_t seed);

std::string_view to_string(Orientation orientation) noexcept;

}  // namespace batrel
