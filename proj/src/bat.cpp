#include "batrel/bat.hpp"

#include <string>

#include "batrel/error.hpp"

namespace batrel {

namespace {

std::uint64_t reverse_bits(std::uint64_t v, int m) noexcept {
    if (m == 0) return 0;
    v = ((v >> 1) & 0x5555555555555555ULL) | ((v & 0x5555555555555555ULL) << 1);
    v = ((v >> 2) & 0x3333333333333333ULL) | ((v & 0x3333333333333333ULL) << 2);
    v = ((v >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((v & 0x0F0F0F0F0F0F0F0FULL) << 4);
    v = ((v >> 8) & 0x00FF00FF00FF00FFULL) | ((v & 0x00FF00FF00FF00FFULL) << 8);
    v = ((v >> 16) & 0x0000FFFF0000FFFFULL) | ((v & 0x0000FFFF0000FFFFULL) << 16);
    v = (v >> 32) | (v << 32);
    return v >> (64 - m);
}

}  // namespace

StateVector mirror(StateVector x) noexcept {
    return StateVector(x.size(), reverse_bits(x.bits(), x.size()));
}

std::optional<StateVector> forward_successor(StateVector x) noexcept {
    if (x.is_all_ones()) return std::nullopt;
    return StateVector(x.size(), x.bits() + 1);
}

std::optional<StateVector> backward_successor(StateVector x) noexcept {
    if (x.is_all_ones()) return std::nullopt;
    const int m = x.size();
    return StateVector(m, reverse_bits(reverse_bits(x.bits(), m) + 1, m));
}

StateSequence::StateSequence(int m, BatOrder order) : m_(m), order_(order) {
    if (m < 1 || m > kMaxArcs) {
        throw InputError("enumeration size " + std::to_string(m) + " outside 1.." +
                         std::to_string(kMaxArcs));
    }
}

}  // namespace batrel
