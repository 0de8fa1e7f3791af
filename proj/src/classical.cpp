#include "qwa/classical.hpp"

#include <sstream>

#include "qwa/error.hpp"

namespace qwa {

namespace {

struct PrimeField {
    int p;
    static long mod(long a, int p) {
        long r = a % p;
        return r < 0 ? r + p : r;
    }
    bool is_zero(int a) const { return a == 0; }
    int add(int a, int b) const { return static_cast<int>(mod(long(a) + b, p)); }
    int mul(int a, int b) const { return static_cast<int>(mod(long(a) * b, p)); }
    int qint(int j) const { return static_cast<int>(mod(j, p)); }
    int qpow(int) const { return 1; }
};

} // namespace

ClassicalWeylElement ClassicalWeylElement::monomial(int p, long c, int i, int j) {
    ClassicalWeylElement r(p);
    r.add_term(i, j, c);
    return r;
}

int ClassicalWeylElement::coeff(int i, int j) const {
    auto it = terms_.find(Exponent{i, j});
    return it == terms_.end() ? 0 : it->second;
}

void ClassicalWeylElement::add_term(int i, int j, long c) {
    PrimeField f{p_};
    detail::accumulate(f, terms_, Exponent{i, j}, static_cast<int>(PrimeField::mod(c, p_)));
}

ClassicalWeylElement ClassicalWeylElement::operator-() const {
    ClassicalWeylElement r(p_);
    for (const auto& [e, c] : terms_) r.add_term(e.x, e.d, -long(c));
    return r;
}

ClassicalWeylElement& ClassicalWeylElement::operator+=(const ClassicalWeylElement& b) {
    if (p_ != b.p_) throw StructuralError("classical Weyl elements over different primes");
    for (const auto& [e, c] : b.terms_) add_term(e.x, e.d, c);
    return *this;
}

ClassicalWeylElement& ClassicalWeylElement::operator-=(const ClassicalWeylElement& b) {
    if (p_ != b.p_) throw StructuralError("classical Weyl elements over different primes");
    for (const auto& [e, c] : b.terms_) add_term(e.x, e.d, -long(c));
    return *this;
}

ClassicalWeylElement operator*(const ClassicalWeylElement& a, const ClassicalWeylElement& b) { return classical_mul(a, b); }

ClassicalWeylElement operator*(long c, const ClassicalWeylElement& a) {
    ClassicalWeylElement r(a.p_);
    for (const auto& [e, v] : a.terms_) r.add_term(e.x, e.d, c * v);
    return r;
}

ClassicalWeylElement classical_mul(const ClassicalWeylElement& a, const ClassicalWeylElement& b) {
    if (a.p() != b.p()) throw StructuralError("classical Weyl elements over different primes");
    ClassicalWeylElement r(a.p());
    auto terms = detail::pbw_multiply(PrimeField{a.p()}, a.terms(), b.terms());
    for (const auto& [e, c] : terms) r.add_term(e.x, e.d, c);
    return r;
}

ClassicalWeylElement classical_commutator(const ClassicalWeylElement& a, const ClassicalWeylElement& b) {
    return classical_mul(a, b) - classical_mul(b, a);
}

std::string ClassicalWeylElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest total degree first, the way one writes x∂ + 1
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        const bool bare = e.x == 0 && e.d == 0;
        if (c != 1 || bare) os << c;
        if (e.x > 0) os << "x" << (e.x > 1 ? "^" + std::to_string(e.x) : "");
        if (e.d > 0) os << "∂" << (e.d > 1 ? "^" + std::to_string(e.d) : "");
    }
    return os.str();
}

} // namespace qwa
