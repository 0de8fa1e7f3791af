#pragma once

// The quantum Weyl algebra D_q = R<x, d>/(dx - qxd - 1) in PBW normal form,
// its action on R[x], and the center / centralizer tests.

#include <map>
#include <optional>
#include <string>

#include "qwa/classical.hpp"
#include "qwa/cyclotomic.hpp"
#include "qwa/detail/pbw.hpp"
#include "qwa/polynomial.hpp"

namespace qwa {

inline constexpr int kDefaultDegreeCap = 64;

class QWeylElement {
public:
    using TermMap = std::map<Exponent, CycInt>;

    explicit QWeylElement(int p) : p_(p) {}

    static QWeylElement constant(const CycInt& c) { return monomial(c, 0, 0); }
    static QWeylElement monomial(const CycInt& c, int i, int j);
    static QWeylElement one(int p) { return constant(CycInt::one(p)); }
    static QWeylElement x(int p) { return monomial(CycInt::one(p), 1, 0); }
    static QWeylElement delta(int p) { return monomial(CycInt::one(p), 0, 1); }
    /// Embeds f(x) in R[x] as an element of D_q.
    static QWeylElement from_polynomial(const Polynomial& f);

    int p() const noexcept { return p_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    CycInt coeff(int i, int j) const;
    void add_term(int i, int j, const CycInt& c);

    /// nullopt marks the zero element, which has no degree.
    std::optional<int> total_degree() const noexcept;
    std::optional<int> x_degree() const noexcept;
    std::optional<int> delta_degree() const noexcept;

    QWeylElement operator-() const;
    QWeylElement& operator+=(const QWeylElement& b);
    QWeylElement& operator-=(const QWeylElement& b);
    QWeylElement& operator*=(const CycInt& c);
    friend QWeylElement operator+(QWeylElement a, const QWeylElement& b) { return a += b; }
    friend QWeylElement operator-(QWeylElement a, const QWeylElement& b) { return a -= b; }
    friend QWeylElement operator*(const QWeylElement& a, const QWeylElement& b);
    friend QWeylElement operator*(const CycInt& c, QWeylElement a) { return a *= c; }
    friend bool operator==(const QWeylElement& a, const QWeylElement& b) { return a.p_ == b.p_ && a.terms_ == b.terms_; }
    friend bool operator!=(const QWeylElement& a, const QWeylElement& b) { return !(a == b); }

    /// Renders e.g. "q·xδ + 1".
    std::string to_string() const;

private:
    int p_;
    TermMap terms_;
};

/// Normal form of P*Q. Throws DegreeCapError when deg P + deg Q > degree_cap.
QWeylElement weyl_mul(const QWeylElement& P, const QWeylElement& Q, int degree_cap = kDefaultDegreeCap);
QWeylElement commutator(const QWeylElement& P, const QWeylElement& Q, int degree_cap = kDefaultDegreeCap);
QWeylElement weyl_pow(const QWeylElement& P, unsigned k, int degree_cap = kDefaultDegreeCap);

/// sigma = [d, x] = 1 - (1-q) x d.
QWeylElement sigma(int p);
QWeylElement sigma_power(int p, unsigned k, int degree_cap = kDefaultDegreeCap);

/// The action on R[x]: x multiplies, d(x^n) = [n] x^{n-1}.
Polynomial act(const QWeylElement& P, const Polynomial& f);
Polynomial delta_act(const Polynomial& f);
/// sigma(f)(x) = f(qx).
Polynomial sigma_act(const Polynomial& f);
/// d(fg) == d(f) g + sigma(f) d(g).
bool sigma_derivation_check(const Polynomial& f, const Polynomial& g);

/// [P, x] = 0 and [P, d] = 0, by commutator computation.
bool is_central(const QWeylElement& P);
/// [P, x] = 0, by commutator computation.
bool is_centralizing_Rx(const QWeylElement& P);
/// All exponents are multiples of p.
bool has_central_exponents(const QWeylElement& P);
/// All d-exponents are multiples of p.
bool has_centralizing_exponents(const QWeylElement& P);

/// Coefficientwise reduction mod J = (1 - q), landing in the classical Weyl algebra.
ClassicalWeylElement reduce_mod_p(const QWeylElement& P);

} // namespace qwa
