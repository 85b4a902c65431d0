#include "batrel/plsa.hpp"

#include <algorithm>
#include <string>

#include "batrel/error.hpp"

namespace batrel {

ConnectivityChecker::ConnectivityChecker(const Network& net)
    : net_(&net), seen_(static_cast<std::size_t>(net.node_count()), 0) {
    const auto n = static_cast<std::size_t>(net.node_count());
    offsets_.assign(n + 1, 0);
    for (const Arc& a : net.arcs()) {
        ++offsets_[static_cast<std::size_t>(a.tail)];
        if (!net.directed()) ++offsets_[static_cast<std::size_t>(a.head)];
    }
    for (std::size_t v = 1; v <= n; ++v) offsets_[v] += offsets_[v - 1];

    links_.resize(offsets_[n]);
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (int i = 0; i < net.arc_count(); ++i) {
        const Arc& a = net.arc(i);
        links_[fill[static_cast<std::size_t>(a.tail - 1)]++] = {i, a.head - 1};
        if (!net.directed()) links_[fill[static_cast<std::size_t>(a.head - 1)]++] = {i, a.tail - 1};
    }
    current_.reserve(n);
    next_.reserve(n);
}

void ConnectivityChecker::check_size(StateVector x) const {
    if (x.size() != net_->arc_count()) {
        throw InputError("state vector has " + std::to_string(x.size()) + " arcs, network has " +
                         std::to_string(net_->arc_count()));
    }
}

void ConnectivityChecker::next_epoch() {
    if (++epoch_ == 0) {
        std::fill(seen_.begin(), seen_.end(), 0);
        epoch_ = 1;
    }
}

bool ConnectivityChecker::connected(StateVector x) {
    check_size(x);
    const int source = net_->source() - 1;
    const int sink = net_->sink() - 1;
    if (source == sink) return true;

    next_epoch();
    const std::uint64_t alive = x.bits();
    current_.clear();
    current_.push_back(source);
    seen_[static_cast<std::size_t>(source)] = epoch_;

    while (!current_.empty()) {
        next_.clear();
        for (int u : current_) {
            const auto end = offsets_[static_cast<std::size_t>(u) + 1];
            for (auto k = offsets_[static_cast<std::size_t>(u)]; k < end; ++k) {
                const Link& l = links_[k];
                if (!((alive >> l.arc) & 1U)) continue;
                auto& mark = seen_[static_cast<std::size_t>(l.node)];
                if (mark == epoch_) continue;
                mark = epoch_;
                next_.push_back(l.node);
            }
        }
        // The sink test happens once the whole layer is built.
        if (seen_[static_cast<std::size_t>(sink)] == epoch_) return true;
        current_.swap(next_);
    }
    return false;
}

LayerTrace ConnectivityChecker::trace(StateVector x) {
    check_size(x);
    LayerTrace out;
    const int source = net_->source() - 1;
    const int sink = net_->sink() - 1;
    out.layers.push_back({source + 1});
    if (source == sink) {
        out.connected = true;
        return out;
    }

    next_epoch();
    const std::uint64_t alive = x.bits();
    seen_[static_cast<std::size_t>(source)] = epoch_;
    std::vector<int> frontier{source};
    for (;;) {
        std::vector<int> layer;
        for (int u : frontier) {
            const auto end = offsets_[static_cast<std::size_t>(u) + 1];
            for (auto k = offsets_[static_cast<std::size_t>(u)]; k < end; ++k) {
                const Link& l = links_[k];
                if (!((alive >> l.arc) & 1U)) continue;
                auto& mark = seen_[static_cast<std::size_t>(l.node)];
                if (mark == epoch_) continue;
                mark = epoch_;
                layer.push_back(l.node);
            }
        }
        std::sort(layer.begin(), layer.end());
        std::vector<int> labels(layer.size());
        std::transform(layer.begin(), layer.end(), labels.begin(), [](int v) { return v + 1; });
        out.layers.push_back(std::move(labels));
        if (seen_[static_cast<std::size_t>(sink)] == epoch_) {
            out.connected = true;
            return out;
        }
        if (layer.empty()) return out;
        frontier = std::move(layer);
    }
}

bool is_connected(const Network& net, StateVector x) {
    return ConnectivityChecker(net).connected(x);
}

LayerTrace layer_trace(const Network& net, StateVector x) {
    return ConnectivityChecker(net).trace(x);
}

}  // namespace batrel
