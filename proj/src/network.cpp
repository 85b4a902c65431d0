#include "batrel/network.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "batrel/error.hpp"
#include "batrel/rng.hpp"
#include "batrel/state_vector.hpp"

namespace batrel {

namespace {

std::pair<int, int> endpoint_key(const Arc& a, Orientation orientation) {
    if (orientation == Orientation::undirected && a.head < a.tail) return {a.head, a.tail};
    return {a.tail, a.head};
}

std::string describe(const Arc& a) {
    return "(" + std::to_string(a.tail) + ", " + std::to_string(a.head) + ")";
}

std::uint64_t simple_capacity(int n, Orientation orientation) {
    const auto nn = static_cast<std::uint64_t>(n);
    const std::uint64_t ordered = nn * (nn - 1);
    return orientation == Orientation::directed ? ordered : ordered / 2;
}

}  // namespace

Network::Network(int node_count, std::vector<Arc> arcs, Orientation orientation, int source,
                 int sink)
    : node_count_(node_count),
      arcs_(std::move(arcs)),
      orientation_(orientation),
      source_(source),
      sink_(sink == 0 ? node_count : sink) {
    if (node_count_ < 1) throw ValidationError("node count must be positive");
    if (arcs_.size() > static_cast<std::size_t>(kMaxArcs)) {
        throw ValidationError("arc count " + std::to_string(arcs_.size()) +
                              " exceeds the supported maximum of " + std::to_string(kMaxArcs));
    }
    auto in_range = [&](int v) { return v >= 1 && v <= node_count_; };
    if (!in_range(source_)) throw ValidationError("source node " + std::to_string(source_) + " out of range");
    if (!in_range(sink_)) throw ValidationError("sink node " + std::to_string(sink_) + " out of range");
    if (source_ == sink_ && node_count_ != 1) throw ValidationError("source and sink coincide");

    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = arcs_[i];
        if (!in_range(a.tail) || !in_range(a.head)) {
            throw ValidationError("arc " + std::to_string(i) + " " + describe(a) +
                                      " has a node label outside 1.." + std::to_string(node_count_),
                                  i);
        }
        if (a.tail == a.head) {
            throw ValidationError("arc " + std::to_string(i) + " " + describe(a) + " is a self-loop", i);
        }
        if (!seen.insert(endpoint_key(a, orientation_)).second) {
            throw ValidationError("arc " + std::to_string(i) + " " + describe(a) + " is a parallel arc", i);
        }
    }
}

ArcDistribution::ArcDistribution(std::vector<double> probabilities) : p_(std::move(probabilities)) {
    for (std::size_t i = 0; i < p_.size(); ++i) {
        // Written so NaN fails too.
        if (!(p_[i] >= 0.0 && p_[i] <= 1.0)) {
            throw ValidationError("probability of arc " + std::to_string(i) + " is outside [0, 1]", i);
        }
    }
}

bool ArcDistribution::is_uniform() const noexcept {
    return std::adjacent_find(p_.begin(), p_.end(), std::not_equal_to<>{}) == p_.end();
}

void require_compatible(const Network& net, const ArcDistribution& dist) {
    if (dist.size() != net.arc_count()) {
        throw InputError("distribution has " + std::to_string(dist.size()) + " entries for " +
                         std::to_string(net.arc_count()) + " arcs");
    }
}

ArcDistribution uniform_distribution(int arc_count, double p) {
    if (arc_count < 0) throw InputError("negative arc count");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability outside [0, 1]");
    return ArcDistribution(std::vector<double>(static_cast<std::size_t>(arc_count), p));
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line, const char* what) {
    T value{};
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

NetworkInstance parse_network(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<std::string_view>>> records;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++line_no;
        line = line.substr(0, line.find('#'));
        auto tokens = split_ws(line);
        if (!tokens.empty()) {
            records.emplace_back(line_no, std::move(tokens));
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }

    if (records.empty()) throw ParseError(line_no == 0 ? 1 : line_no, "missing header line");

    const auto& [header_line, header] = records.front();
    if (header.size() != 3 && header.size() != 5) {
        throw ParseError(header_line, "header must be 'n m directed|undirected [source sink]'");
    }
    const int n = parse_number<int>(header[0], header_line, "node count");
    const int m = parse_number<int>(header[1], header_line, "arc count");
    if (n < 1) throw ParseError(header_line, "node count must be positive");
    if (m < 0) throw ParseError(header_line, "arc count must be non-negative");
    if (m > kMaxArcs) {
        throw ParseError(header_line, "arc count " + std::to_string(m) +
                                          " exceeds the supported maximum of " +
                                          std::to_string(kMaxArcs));
    }
    Orientation orientation;
    if (header[2] == "directed") {
        orientation = Orientation::directed;
    } else if (header[2] == "undirected") {
        orientation = Orientation::undirected;
    } else {
        throw ParseError(header_line, "orientation must be 'directed' or 'undirected'");
    }
    int source = 1;
    int sink = n;
    if (header.size() == 5) {
        source = parse_number<int>(header[3], header_line, "source node");
        sink = parse_number<int>(header[4], header_line, "sink node");
    }

    const std::size_t arc_lines = records.size() - 1;
    if (arc_lines < static_cast<std::size_t>(m)) {
        throw ParseError(line_no, "expected " + std::to_string(m) + " arc lines, found " +
                                      std::to_string(arc_lines));
    }
    if (arc_lines > static_cast<std::size_t>(m)) {
        throw ParseError(records[static_cast<std::size_t>(m) + 1].first,
                         "more arc lines than the header's arc count " + std::to_string(m));
    }

    std::vector<Arc> arcs;
    std::vector<double> probabilities;
    arcs.reserve(static_cast<std::size_t>(m));
    probabilities.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < records.size(); ++i) {
        const auto& [ln, tok] = records[i];
        if (tok.size() != 3) throw ParseError(ln, "arc line must be 'tail head p'");
        arcs.push_back({parse_number<int>(tok[0], ln, "tail node"),
                        parse_number<int>(tok[1], ln, "head node")});
        probabilities.push_back(parse_number<double>(tok[2], ln, "probability"));
    }

    try {
        Network net(n, std::move(arcs), orientation, source, sink);
        ArcDistribution dist(std::move(probabilities));
        return {std::move(net), std::move(dist)};
    } catch (const ValidationError& e) {
        const std::size_t ln = e.arc_index() ? records[*e.arc_index() + 1].first : header_line;
        throw ParseError(ln, e.what());
    }
}

NetworkInstance load_network(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open network file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_network(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.detail(), path);
    }
}

std::string render_network(const NetworkInstance& instance) {
    const Network& net = instance.network;
    require_compatible(net, instance.distribution);
    std::string out = std::to_string(net.node_count()) + " " + std::to_string(net.arc_count()) +
                      " " + std::string(to_string(net.orientation()));
    if (net.source() != 1 || net.sink() != net.node_count()) {
        out += " " + std::to_string(net.source()) + " " + std::to_string(net.sink());
    }
    out += '\n';
    char buf[64];
    for (int i = 0; i < net.arc_count(); ++i) {
        const Arc& a = net.arc(i);
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, instance.distribution[i]);
        out += std::to_string(a.tail) + " " + std::to_string(a.head) + " " +
               std::string(buf, end) + '\n';
    }
    return out;
}

NetworkInstance bridge_fixture(double p) {
    Network net(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}, Orientation::directed);
    return {std::move(net), uniform_distribution(5, p)};
}

Network generate_random_network(int n, int m, Orientation orientation, std::uint64_t seed) {
    if (n < 1) throw InputError("node count must be positive");
    if (m < n - 1) {
        throw InputError("arc count " + std::to_string(m) + " is below n - 1 = " +
                         std::to_string(n - 1));
    }
    if (m > kMaxArcs) throw InputError("arc count exceeds " + std::to_string(kMaxArcs));
    if (static_cast<std::uint64_t>(m) > simple_capacity(n, orientation)) {
        throw InputError("arc count " + std::to_string(m) + " exceeds the " +
                         std::string(to_string(orientation)) + " simple-graph capacity " +
                         std::to_string(simple_capacity(n, orientation)) + " for " +
                         std::to_string(n) + " nodes");
    }

    Xoshiro256 rng(seed);
    auto shuffle = [&rng](auto& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[rng.below(i)]);
        }
    };

    // Arborescence: visit nodes 2..n in random order, attach each to a random
    // already-attached node.
    std::vector<int> order(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    std::iota(order.begin(), order.end(), 2);
    shuffle(order);
    std::vector<int> attached{1};
    std::vector<Arc> arcs;
    std::set<std::pair<int, int>> used;
    for (int v : order) {
        const int parent = attached[rng.below(attached.size())];
        const Arc a{parent, v};
        arcs.push_back(a);
        used.insert(endpoint_key(a, orientation));
        attached.push_back(v);
    }

    std::vector<Arc> candidates;
    for (int u = 1; u <= n; ++u) {
        for (int v = 1; v <= n; ++v) {
            if (u == v) continue;
            if (orientation == Orientation::undirected && v < u) continue;
            if (!used.count({u, v})) candidates.push_back({u, v});
        }
    }
    shuffle(candidates);
    const auto extra = static_cast<std::size_t>(m) - arcs.size();
    arcs.insert(arcs.end(), candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(extra));
    if (orientation == Orientation::undirected) {
        for (auto& a : arcs) {
            if (rng.below(2)) std::swap(a.tail, a.head);
        }
    }
    shuffle(arcs);
    return Network(n, std::move(arcs), orientation);
}

std::string_view to_string(Orientation orientation) noexcept {
    return orientation == Orientation::directed ? "directed" : "undirected";
}

}  // namespace batrel
