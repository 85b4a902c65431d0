#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "batrel/state_vector.hpp"

namespace batrel {

/// Strictly increasing tuple of the arc indices that work in a state vector
/// with exactly z working arcs. Indices are 0-based in 0..m-1.
class IndicatorVector {
public:
    /// Throws InputError unless entries are strictly increasing and inside 0..m-1.
    IndicatorVector(int arc_count, std::vector<int> entries);

    int arc_count() const noexcept { return m_; }
    int size() const noexcept { return static_cast<int>(entries_.size()); }
    std::span<const int> entries() const noexcept { return entries_; }
    int operator[](int i) const noexcept { return entries_[static_cast<std::size_t>(i)]; }

    std::string to_string() const;

    friend bool operator==(const IndicatorVector&, const IndicatorVector&) = default;

private:
    int m_;
    std::vector<int> entries_;
};

/// (0, 1, ..., z-1). Throws InputError unless 0 <= z <= m <= 64.
IndicatorVector first_indicator(int z, int m);

/// Colexicographic successor. Scanning up from position 0, with a sentinel
/// value m past the last entry, take the first position i whose entry can grow
/// without reaching the next one, increment it, and reset positions 0..i-1 to
/// 0..i-1. Returns nullopt at (m-z, ..., m-1).
std::optional<IndicatorVector> next_indicator(const IndicatorVector& indicator);

/// State vector with bit j set iff j is an entry.
StateVector indicator_to_state(const IndicatorVector& indicator);

/// Working-arc indicator of a state vector.
IndicatorVector state_to_indicator(StateVector x);

/// The sorted indices absent from the indicator (the failed arcs).
IndicatorVector complement(const IndicatorVector& indicator);

/// C(m, z), exact for every 0 <= z <= m <= 64 (the largest, C(64, 32), fits in
/// 64 bits). Throws InputError outside that range.
std::uint64_t count_level(int m, int z);

/// Position of the indicator in the level's emission order (0-based).
std::uint64_t rank_indicator(const IndicatorVector& indicator);

/// Inverse of rank_indicator. Throws InputError if rank >= C(m, z).
IndicatorVector unrank_indicator(int m, int z, std::uint64_t rank);

/// In-place walker over one level (all vectors with exactly z working arcs),
/// for hot loops. Keeps the indicator plus its state bits and applies the
/// same successor rule as next_indicator without allocating.
class LevelCursor {
public:
    /// Positioned at the vector of the given rank.
    LevelCursor(int m, int z, std::uint64_t start_rank = 0);

    StateVector state() const noexcept { return StateVector(m_, bits_); }
    std::span<const int> indicator() const noexcept {
        return std::span<const int>(entries_).first(static_cast<std::size_t>(z_));
    }

    /// Moves to the successor; false (and unchanged) at the level's last vector.
    bool advance() noexcept;

private:
    int m_;
    int z_;
    std::vector<int> entries_;  // z entries followed by the sentinel m
    std::uint64_t bits_ = 0;
};

}  // namespace batrel
