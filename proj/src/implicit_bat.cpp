#include "batrel/implicit_bat.hpp"

#include <numeric>
#include <string>

#include "batrel/detail/uint128.hpp"
#include "batrel/error.hpp"

namespace batrel {

namespace {

void check_level(int m, int z) {
    if (m < 0 || m > kMaxArcs || z < 0 || z > m) {
        throw InputError("level z=" + std::to_string(z) + " invalid for m=" + std::to_string(m));
    }
}

// Shared by next_indicator and LevelCursor. `e` holds z entries followed by
// the sentinel m. Returns the position that was incremented, or -1.
int advance_entries(std::span<int> e, int z) noexcept {
    for (int i = 0; i < z; ++i) {
        const auto k = static_cast<std::size_t>(i);
        if (e[k] + 1 < e[k + 1]) {
            ++e[k];
            for (int j = 0; j < i; ++j) e[static_cast<std::size_t>(j)] = j;
            return i;
        }
    }
    return -1;
}

}  // namespace

IndicatorVector::IndicatorVector(int arc_count, std::vector<int> entries)
    : m_(arc_count), entries_(std::move(entries)) {
    check_level(m_, size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 0 || entries_[i] >= m_) {
            throw InputError("indicator entry " + std::to_string(entries_[i]) + " outside 0.." +
                             std::to_string(m_ - 1));
        }
        if (i > 0 && entries_[i - 1] >= entries_[i]) {
            throw InputError("indicator entries must be strictly increasing");
        }
    }
}

std::string IndicatorVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

IndicatorVector first_indicator(int z, int m) {
    check_level(m, z);
    std::vector<int> e(static_cast<std::size_t>(z));
    std::iota(e.begin(), e.end(), 0);
    return IndicatorVector(m, std::move(e));
}

std::optional<IndicatorVector> next_indicator(const IndicatorVector& indicator) {
    const int z = indicator.size();
    std::vector<int> e(indicator.entries().begin(), indicator.entries().end());
    e.push_back(indicator.arc_count());
    if (advance_entries(e, z) < 0) return std::nullopt;
    e.pop_back();
    return IndicatorVector(indicator.arc_count(), std::move(e));
}

StateVector indicator_to_state(const IndicatorVector& indicator) {
    std::uint64_t bits = 0;
    for (int j : indicator.entries()) bits |= std::uint64_t{1} << j;
    return StateVector(indicator.arc_count(), bits);
}

IndicatorVector state_to_indicator(StateVector x) {
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(x.ones()));
    for (int j = 0; j < x.size(); ++j) {
        if (x[j]) e.push_back(j);
    }
    return IndicatorVector(x.size(), std::move(e));
}

IndicatorVector complement(const IndicatorVector& indicator) {
    const StateVector x = indicator_to_state(indicator);
    return state_to_indicator(StateVector(x.size(), ~x.bits() & low_mask(x.size())));
}

std::uint64_t count_level(int m, int z) {
    check_level(m, z);
    if (z > m - z) z = m - z;
    // Each partial product is C(m-z+k, k), so every division is exact; the
    // 128-bit intermediate covers C(64,32) * 64.
    detail::uint128 c = 1;
    for (int k = 1; k <= z; ++k) {
        c = c * static_cast<unsigned>(m - z + k) / static_cast<unsigned>(k);
    }
    return static_cast<std::uint64_t>(c);
}

std::uint64_t rank_indicator(const IndicatorVector& indicator) {
    std::uint64_t r = 0;
    for (int i = 0; i < indicator.size(); ++i) {
        if (indicator[i] >= i + 1) r += count_level(indicator[i], i + 1);
    }
    return r;
}

IndicatorVector unrank_indicator(int m, int z, std::uint64_t rank) {
    const std::uint64_t total = count_level(m, z);
    if (rank >= total) {
        throw InputError("rank " + std::to_string(rank) + " out of range for C(" +
                         std::to_string(m) + ", " + std::to_string(z) + ") = " +
                         std::to_string(total));
    }
    std::vector<int> e(static_cast<std::size_t>(z));
    int upper = m;  // entries at position i are < upper
    for (int i = z - 1; i >= 0; --i) {
        // Largest c in [i, upper) with C(c, i+1) <= rank.
        int c = upper - 1;
        while (c > i && count_level(c, i + 1) > rank) --c;
        if (c >= i + 1) rank -= count_level(c, i + 1);
        e[static_cast<std::size_t>(i)] = c;
        upper = c;
    }
    return IndicatorVector(m, std::move(e));
}

LevelCursor::LevelCursor(int m, int z, std::uint64_t start_rank) : m_(m), z_(z) {
    const IndicatorVector start = unrank_indicator(m, z, start_rank);
    entries_.assign(start.entries().begin(), start.entries().end());
    entries_.push_back(m);
    bits_ = indicator_to_state(start).bits();
}

bool LevelCursor::advance() noexcept {
    // Positions 0..i change; drop their old bits, then set the new ones.
    int i = 0;
    while (i < z_ && entries_[static_cast<std::size_t>(i)] + 1 >= entries_[static_cast<std::size_t>(i) + 1]) ++i;
    if (i == z_) return false;
    for (int j = 0; j <= i; ++j) bits_ &= ~(std::uint64_t{1} << entries_[static_cast<std::size_t>(j)]);
    ++entries_[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) entries_[static_cast<std::size_t>(j)] = j;
    for (int j = 0; j <= i; ++j) bits_ |= std::uint64_t{1} << entries_[static_cast<std::size_t>(j)];
    return true;
}

}  // namespace batrel
