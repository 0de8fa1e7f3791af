#pragma once

// Exact arithmetic in R = Z[q]/(1 + q + ... + q^{p-1}), q a primitive p-th
// root of unity, together with q-integers and the explicit inverses of
// [i] for p not dividing i.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qwa/error.hpp"

namespace qwa {

using Integer = mpz_class;

inline constexpr int kDefaultPrimeCap = 13;

/// A prime p with 2 <= p <= cap, checked at construction.
class Prime {
public:
    explicit Prime(int p, int cap = kDefaultPrimeCap);

    int value() const noexcept { return value_; }
    operator int() const noexcept { return value_; }

    static bool is_prime(long n) noexcept;

private:
    int value_;
};

/// Element c_0 + c_1 q + ... + c_{p-2} q^{p-2} of R, always stored in the
/// canonical power basis (no q^{p-1} term).
class CycInt {
public:
    static CycInt zero(int p);
    static CycInt one(int p);
    static CycInt from_int(int p, const Integer& n);
    /// q^k for any integer k (negative allowed: q^{-1} = q^{p-1}).
    static CycInt q_power(int p, long k);
    /// Reduces an arbitrary-length coefficient vector sum_k raw[k] q^k.
    static CycInt from_raw(int p, const std::vector<Integer>& raw);
    /// Takes exactly p-1 coefficients already in canonical position.
    static CycInt from_coeffs(int p, std::vector<Integer> coeffs);

    int p() const noexcept { return p_; }
    const std::vector<Integer>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    CycInt operator-() const;
    CycInt& operator+=(const CycInt& b);
    CycInt& operator-=(const CycInt& b);
    CycInt& operator*=(const CycInt& b);
    CycInt& operator*=(const Integer& n);

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    friend CycInt operator*(CycInt a, const Integer& n) { return a *= n; }
    friend CycInt operator*(const Integer& n, CycInt a) { return a *= n; }

    friend bool operator==(const CycInt& a, const CycInt& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }

    CycInt pow(unsigned long e) const;

    /// Galois conjugate q -> q^k, gcd(k, p) = 1.
    CycInt conjugate(int k) const;
    /// Product of all p-1 conjugates; an ordinary integer.
    Integer norm() const;
    /// a / b when b divides a exactly in R, nullopt otherwise. Throws on b == 0.
    std::optional<CycInt> exact_quotient(const CycInt& b) const;
    /// Units of R are exactly the elements of norm +-1.
    bool is_unit() const;

    /// Substitute q = 1 and reduce mod p: the residue map R -> R/J = F_p.
    int reduce_mod_J() const;
    /// Image under q -> exp(2 pi i / p). Only a numeric sanity oracle.
    std::complex<double> complex_eval() const;

    std::string to_string() const;

private:
    CycInt(int p, std::vector<Integer> c) : p_(p), c_(std::move(c)) {}
    void check_same(const CycInt& b) const;

    int p_;
    std::vector<Integer> c_;
};

/// Canonicalize a raw vector: fold q^p = 1, then eliminate q^{p-1}.
std::vector<Integer> canonicalize(int p, const std::vector<Integer>& raw);

/// [n] = 1 + q + ... + q^{n-1}; [0] = 0 and [p] = 0.
CycInt q_int(int p, long n);
/// [n]! = [n][n-1]...[1], [0]! = 1. Any n >= 0 is accepted; n >= p gives 0.
CycInt q_factorial(int p, long n);
/// [i]^{-1} = sum_{k<j} q^{ik} with ij = 1 mod p. Throws UnitInversionError if p | i.
CycInt q_int_inverse(int p, long i);
/// ([p-1]!)^{-1} as the product of the q_int_inverse(i), 1 <= i < p.
CycInt q_factorial_inverse(int p, long n);

} // namespace qwa
