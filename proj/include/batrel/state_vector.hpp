#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace batrel {

/// Largest arc count a state vector can hold (one machine word).
inline constexpr int kMaxArcs = 64;

/// Mask with the low `m` bits set.
constexpr std::uint64_t low_mask(int m) noexcept {
    return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

/// m-bit arc-state word. Bit i is the state of arc a_i (1 = working).
class StateVector {
public:
    StateVector() = default;

    /// Throws InputError if m is outside 0..64 or bits has bits at or above m.
    StateVector(int m, std::uint64_t bits);

    static StateVector all_zeros(int m) { return StateVector(m, 0); }
    static StateVector all_ones(int m) { return StateVector(m, low_mask(m)); }

    /// Parses "10010": the first character is arc 0. Separators ',' and ' '
    /// and enclosing parentheses are accepted, so "(1, 0, 0, 1, 0)" works too.
    static StateVector parse(std::string_view text);

    int size() const noexcept { return m_; }
    std::uint64_t bits() const noexcept { return bits_; }

    bool operator[](int arc) const noexcept { return (bits_ >> arc) & 1U; }

    int ones() const noexcept { return std::popcount(bits_); }
    int zeros() const noexcept { return m_ - ones(); }

    bool is_all_ones() const noexcept { return bits_ == low_mask(m_); }

    StateVector with(int arc, bool working) const;

    /// "10010" style, arc 0 first.
    std::string to_string() const;
    /// "(1, 0, 0, 1, 0)" style.
    std::string to_tuple_string() const;

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    int m_ = 0;
    std::uint64_t bits_ = 0;
};

/// True when every working arc of `lo` also works in `hi` (same size).
inline bool dominated_by(StateVector lo, StateVector hi) noexcept {
    return lo.size() == hi.size() && (lo.bits() & ~hi.bits()) == 0;
}

}  // namespace batrel
