#pragma once

// The truncated completed center R[x^p][xi]/(xi^{N+1}), xi standing for
// d^p, and the rank-p module over it spanned by 1, x, ..., x^{p-1}.
// The generator x^p is kept as its own symbol; it is never renamed to x.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qwa/cyclotomic.hpp"
#include "qwa/polynomial.hpp"

namespace qwa {

class CenterElement {
public:
    /// (x^p-degree, xi-degree) -> coefficient.
    using TermMap = std::map<std::pair<int, int>, CycInt>;

    CenterElement(int p, int trunc);

    static CenterElement constant(int p, int trunc, const CycInt& c);
    static CenterElement monomial(int trunc, const CycInt& c, int xp_degree, int xi_degree);
    static CenterElement one(int p, int trunc) { return constant(p, trunc, CycInt::one(p)); }
    /// Lifts f(x^p) with no xi terms.
    static CenterElement from_polynomial(const Polynomial& f, int trunc);

    int p() const noexcept { return p_; }
    int trunc() const noexcept { return trunc_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    CycInt coeff(int xp_degree, int xi_degree) const;
    void add_term(int xp_degree, int xi_degree, const CycInt& c);

    /// Coefficient of xi^k as a polynomial in x^p.
    Polynomial xi_coefficient(int k) const;
    /// Lowest xi-degree present; nullopt for zero.
    std::optional<int> xi_valuation() const;
    /// Same element viewed modulo xi^{new_trunc+1}.
    CenterElement truncated(int new_trunc) const;

    CenterElement operator-() const;
    CenterElement& operator+=(const CenterElement& b);
    CenterElement& operator-=(const CenterElement& b);
    friend CenterElement operator+(CenterElement a, const CenterElement& b) { return a += b; }
    friend CenterElement operator-(CenterElement a, const CenterElement& b) { return a -= b; }
    friend CenterElement operator*(const CenterElement& a, const CenterElement& b);
    friend CenterElement operator*(const CycInt& c, const CenterElement& a);
    friend bool operator==(const CenterElement& a, const CenterElement& b) {
        return a.p_ == b.p_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CenterElement& a, const CenterElement& b) { return !(a == b); }

    CenterElement pow(unsigned k) const;

    std::string to_string() const;

private:
    void check_same(const CenterElement& b) const;

    int p_;
    int trunc_;
    TermMap terms_;
};

/// Element of the centralizer module, coordinates in the basis 1, x, ..., x^{p-1}.
struct CentralizerElement {
    std::vector<CenterElement> comps;

    int p() const { return comps.front().p(); }
    friend bool operator==(const CentralizerElement&, const CentralizerElement&) = default;
    std::string to_string() const;
};

} // namespace qwa
