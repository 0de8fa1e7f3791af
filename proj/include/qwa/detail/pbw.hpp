#pragma once

// Normal-form multiplication shared by the quantum and classical Weyl
// algebras. Elements are maps (x-degree, delta-degree) -> coefficient with
// x-powers to the left. The only rewriting rule is
//
//     x^i d^j * x = [j] x^i d^{j-1} + q^j x^{i+1} d^j
//
// which is the relation d^j x = [j] d^{j-1} + q^j x d^j multiplied on the
// left by x^i. For the classical algebra [j] = j and q = 1.

#include <compare>
#include <map>

namespace qwa {

struct Exponent {
    int x = 0;
    int d = 0;
    auto operator<=>(const Exponent&) const = default;
};

namespace detail {

template <class Ring, class Terms>
void accumulate(const Ring& ring, Terms& into, const Exponent& e, const typename Terms::mapped_type& c) {
    if (ring.is_zero(c)) return;
    auto it = into.find(e);
    if (it == into.end()) {
        into.emplace(e, c);
        return;
    }
    it->second = ring.add(it->second, c);
    if (ring.is_zero(it->second)) into.erase(it);
}

template <class Ring, class Terms>
Terms right_multiply_by_x(const Ring& ring, const Terms& terms) {
    Terms out;
    for (const auto& [e, a] : terms) {
        if (e.d > 0) accumulate(ring, out, Exponent{e.x, e.d - 1}, ring.mul(a, ring.qint(e.d)));
        accumulate(ring, out, Exponent{e.x + 1, e.d}, ring.mul(a, ring.qpow(e.d)));
    }
    return out;
}

/// P * Q in normal form. Terms of Q are processed in increasing x-degree so
/// that P x^c is built incrementally from P x^{c-1}.
template <class Ring, class Terms>
Terms pbw_multiply(const Ring& ring, const Terms& lhs, const Terms& rhs) {
    Terms result;
    if (lhs.empty() || rhs.empty()) return result;
    std::map<int, std::map<int, typename Terms::mapped_type>> by_x;
    for (const auto& [e, b] : rhs) by_x[e.x].emplace(e.d, b);
    Terms current = lhs;
    int current_x = 0;
    for (const auto& [c, ds] : by_x) {
        while (current_x < c) {
            current = right_multiply_by_x(ring, current);
            ++current_x;
        }
        for (const auto& [d, b] : ds)
            for (const auto& [e, a] : current)
                accumulate(ring, result, Exponent{e.x, e.d + d}, ring.mul(a, b));
    }
    return result;
}

} // namespace detail
} // namespace qwa
