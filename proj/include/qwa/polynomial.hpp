#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qwa/cyclotomic.hpp"

namespace qwa {

/// Univariate polynomial over R. Used for R[x] (the module D_q acts on),
/// for R[x^p] (entries of the mod-I action matrices) and for the coordinate
/// ring of Higgs modules. Trailing zeros are never stored.
class Polynomial {
public:
    explicit Polynomial(int p) : p_(p) {}
    Polynomial(int p, std::vector<CycInt> coeffs);

    static Polynomial constant(const CycInt& c);
    static Polynomial monomial(const CycInt& c, int degree);
    static Polynomial variable(int p) { return monomial(CycInt::one(p), 1); }

    int p() const noexcept { return p_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// nullopt for the zero polynomial.
    std::optional<int> degree() const noexcept;
    CycInt coeff(int k) const;
    const std::vector<CycInt>& coeffs() const noexcept { return c_; }
    void set_coeff(int k, const CycInt& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& b);
    Polynomial& operator-=(const Polynomial& b);
    Polynomial& operator*=(const CycInt& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const CycInt& c) { return a *= c; }
    friend Polynomial operator*(const CycInt& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Quotient when b divides *this exactly in R[t]; nullopt otherwise.
    std::optional<Polynomial> exact_quotient(const Polynomial& b) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    int p_;
    std::vector<CycInt> c_;
};

} // namespace qwa
