#pragma once

#include <cstdint>
#include <iterator>
#include <optional>

#include "batrel/state_vector.hpp"

namespace batrel {

/// Which end of the vector is the low-order digit of the binary addition.
/// Forward: arc a_0. Backward: arc a_{m-1}.
enum class BatOrder { forward, backward };

/// W_f(X) = sum_i 2^i X(a_i). Forward emission rank (0-based).
inline std::uint64_t weight_forward(StateVector x) noexcept { return x.bits(); }

/// The vector with coordinates reversed: X(a_i) -> X(a_{m-1-i}).
StateVector mirror(StateVector x) noexcept;

/// W_b(X) = sum_i 2^{m-1-i} X(a_i). Backward emission rank (0-based).
inline std::uint64_t weight_backward(StateVector x) noexcept { return mirror(x).bits(); }

/// Next vector in forward BAT order, or nullopt after the all-ones vector.
/// Binary addition on W_f: the first 0 coordinate from a_0 becomes 1 and the
/// run of 1s before it is cleared.
std::optional<StateVector> forward_successor(StateVector x) noexcept;

/// Next vector in backward BAT order: the same addition started from a_{m-1}.
std::optional<StateVector> backward_successor(StateVector x) noexcept;

inline std::optional<StateVector> successor(StateVector x, BatOrder order) noexcept {
    return order == BatOrder::forward ? forward_successor(x) : backward_successor(x);
}

/// Lazy range over all 2^m vectors of size m in the given BAT order, starting
/// at the all-zeros vector. Nothing is materialised.
class StateSequence {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = StateVector;
        using difference_type = std::ptrdiff_t;
        using reference = const StateVector&;
        using pointer = const StateVector*;

        iterator() = default;
        iterator(StateVector start, BatOrder order) : current_(start), order_(order), done_(false) {}

        reference operator*() const noexcept { return current_; }
        pointer operator->() const noexcept { return &current_; }

        iterator& operator++() noexcept {
            if (auto next = successor(current_, order_)) {
                current_ = *next;
            } else {
                done_ = true;
            }
            return *this;
        }
        void operator++(int) noexcept { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept { return it.done_; }

    private:
        StateVector current_;
        BatOrder order_ = BatOrder::forward;
        bool done_ = true;
    };

    StateSequence(int m, BatOrder order);

    iterator begin() const { return {StateVector::all_zeros(m_), order_}; }
    std::default_sentinel_t end() const noexcept { return {}; }

    int size_bits() const noexcept { return m_; }
    BatOrder order() const noexcept { return order_; }

private:
    int m_;
    BatOrder order_;
};

/// All 2^m state vectors; throws InputError unless 1 <= m <= 64.
inline StateSequence enumerate_all(int m, BatOrder order = BatOrder::forward) {
    return StateSequence(m, order);
}

}  // namespace batrel
