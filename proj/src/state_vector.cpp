#include "batrel/state_vector.hpp"

#include "batrel/error.hpp"

namespace batrel {

StateVector::StateVector(int m, std::uint64_t bits) : m_(m), bits_(bits) {
    if (m < 0 || m > kMaxArcs) {
        throw InputError("state vector size " + std::to_string(m) + " outside 0.." +
                         std::to_string(kMaxArcs));
    }
    if ((bits & ~low_mask(m)) != 0) {
        throw InputError("state vector bits exceed size " + std::to_string(m));
    }
}

StateVector StateVector::parse(std::string_view text) {
    std::uint64_t bits = 0;
    int m = 0;
    for (char c : text) {
        if (c == '0' || c == '1') {
            if (m == kMaxArcs) {
                throw InputError("state vector longer than " + std::to_string(kMaxArcs) +
                                 " arcs");
            }
            if (c == '1') bits |= std::uint64_t{1} << m;
            ++m;
        } else if (c != ',' && c != ' ' && c != '(' && c != ')') {
            throw InputError("unexpected character '" + std::string(1, c) +
                             "' in state vector");
        }
    }
    return StateVector(m, bits);
}

StateVector StateVector::with(int arc, bool working) const {
    if (arc < 0 || arc >= m_) throw InputError("arc index out of range");
    const auto bit = std::uint64_t{1} << arc;
    return StateVector(m_, working ? (bits_ | bit) : (bits_ & ~bit));
}

std::string StateVector::to_string() const {
    std::string s(static_cast<std::size_t>(m_), '0');
    for (int i = 0; i < m_; ++i) {
        if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

std::string StateVector::to_tuple_string() const {
    std::string s = "(";
    for (int i = 0; i < m_; ++i) {
        if (i) s += ", ";
        s += (*this)[i] ? '1' : '0';
    }
    s += ')';
    return s;
}

}  // namespace batrel
