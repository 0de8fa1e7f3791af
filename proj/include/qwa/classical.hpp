#pragma once

#include <map>
#include <string>

#include "qwa/detail/pbw.hpp"

namespace qwa {

/// Element of the ordinary Weyl algebra F_p<x, d>/(dx - xd - 1) in normal
/// form sum a_ij x^i d^j, coefficients in [0, p).
class ClassicalWeylElement {
public:
    using TermMap = std::map<Exponent, int>;

    explicit ClassicalWeylElement(int p) : p_(p) {}
    static ClassicalWeylElement monomial(int p, long c, int i, int j);
    static ClassicalWeylElement x(int p) { return monomial(p, 1, 1, 0); }
    static ClassicalWeylElement partial(int p) { return monomial(p, 1, 0, 1); }
    static ClassicalWeylElement one(int p) { return monomial(p, 1, 0, 0); }

    int p() const noexcept { return p_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int coeff(int i, int j) const;
    void add_term(int i, int j, long c);

    ClassicalWeylElement operator-() const;
    ClassicalWeylElement& operator+=(const ClassicalWeylElement& b);
    ClassicalWeylElement& operator-=(const ClassicalWeylElement& b);
    friend ClassicalWeylElement operator+(ClassicalWeylElement a, const ClassicalWeylElement& b) { return a += b; }
    friend ClassicalWeylElement operator-(ClassicalWeylElement a, const ClassicalWeylElement& b) { return a -= b; }
    friend ClassicalWeylElement operator*(const ClassicalWeylElement& a, const ClassicalWeylElement& b);
    friend ClassicalWeylElement operator*(long c, const ClassicalWeylElement& a);
    friend bool operator==(const ClassicalWeylElement& a, const ClassicalWeylElement& b) = default;

    std::string to_string() const;

private:
    int p_;
    TermMap terms_;
};

ClassicalWeylElement classical_mul(const ClassicalWeylElement& a, const ClassicalWeylElement& b);
ClassicalWeylElement classical_commutator(const ClassicalWeylElement& a, const ClassicalWeylElement& b);

} // namespace qwa
