#pragma once

// Seeded generators for property runs. mt19937_64 output is fully
// specified by the standard; bounded draws are done here rather than with
// <random> distributions so sequences are identical across toolchains.

#include <cstdint>
#include <random>

#include "qwa/cyclotomic.hpp"
#include "qwa/polynomial.hpp"
#include "qwa/qweyl.hpp"

namespace qwa {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi].
    long uniform(long lo, long hi);
    bool coin() { return uniform(0, 1) == 1; }

    CycInt cyc_int(int p, long max_abs = 3);
    /// Raw coefficient vector of the given length (not canonical).
    std::vector<Integer> raw_vector(std::size_t length, long max_abs = 5);
    Polynomial polynomial(int p, int max_degree, long max_abs = 3);
    /// Up to max_terms monomials x^i d^j with i, j <= max_degree.
    QWeylElement weyl_element(int p, int max_terms, int max_degree, long max_abs = 3);
    /// Random element of R[x^p, d^p] (all exponents multiples of p).
    QWeylElement central_element(int p, int max_terms, int max_multiple, long max_abs = 3);

private:
    std::mt19937_64 engine_;
};

} // namespace qwa
