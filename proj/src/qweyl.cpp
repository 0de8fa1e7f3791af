#include "qwa/qweyl.hpp"

#include <algorithm>
#include <sstream>

namespace qwa {

namespace {

struct CyclotomicRing {
    int p;
    bool is_zero(const CycInt& a) const { return a.is_zero(); }
    CycInt add(const CycInt& a, const CycInt& b) const { return a + b; }
    CycInt mul(const CycInt& a, const CycInt& b) const { return a * b; }
    CycInt qint(int j) const { return q_int(p, j); }
    CycInt qpow(int j) const { return CycInt::q_power(p, j); }
};

void check_same(const QWeylElement& a, const QWeylElement& b) {
    if (a.p() != b.p())
        throw StructuralError("quantum Weyl elements over different primes: " + std::to_string(a.p()) + " vs " +
                              std::to_string(b.p()));
}

} // namespace

QWeylElement QWeylElement::monomial(const CycInt& c, int i, int j) {
    if (i < 0 || j < 0) throw InputError("negative exponent in a Weyl monomial");
    QWeylElement r(c.p());
    r.add_term(i, j, c);
    return r;
}

QWeylElement QWeylElement::from_polynomial(const Polynomial& f) {
    QWeylElement r(f.p());
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) r.add_term(static_cast<int>(k), 0, f.coeffs()[k]);
    return r;
}

CycInt QWeylElement::coeff(int i, int j) const {
    auto it = terms_.find(Exponent{i, j});
    return it == terms_.end() ? CycInt::zero(p_) : it->second;
}

void QWeylElement::add_term(int i, int j, const CycInt& c) {
    if (c.p() != p_) throw StructuralError("coefficient over the wrong prime");
    detail::accumulate(CyclotomicRing{p_}, terms_, Exponent{i, j}, c);
}

std::optional<int> QWeylElement::total_degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.x + e.d);
    return d;
}

std::optional<int> QWeylElement::x_degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.x);
    return d;
}

std::optional<int> QWeylElement::delta_degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.d);
    return d;
}

QWeylElement QWeylElement::operator-() const {
    QWeylElement r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

QWeylElement& QWeylElement::operator+=(const QWeylElement& b) {
    check_same(*this, b);
    for (const auto& [e, c] : b.terms_) add_term(e.x, e.d, c);
    return *this;
}

QWeylElement& QWeylElement::operator-=(const QWeylElement& b) {
    check_same(*this, b);
    for (const auto& [e, c] : b.terms_) add_term(e.x, e.d, -c);
    return *this;
}

QWeylElement& QWeylElement::operator*=(const CycInt& c) {
    if (c.p() != p_) throw StructuralError("scalar over the wrong prime");
    TermMap out;
    for (const auto& [e, a] : terms_) detail::accumulate(CyclotomicRing{p_}, out, e, a * c);
    terms_ = std::move(out);
    return *this;
}

QWeylElement operator*(const QWeylElement& a, const QWeylElement& b) { return weyl_mul(a, b); }

std::string QWeylElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        const bool bare = e.x == 0 && e.d == 0;
        bool negative = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos) {
            negative = true;
            cs = cs.substr(1);
        }
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        first = false;
        if (bare) {
            os << cs;
            continue;
        }
        if (cs != "1") os << (cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs) << "·";
        if (e.x > 0) os << "x" << (e.x > 1 ? "^" + std::to_string(e.x) : "");
        if (e.d > 0) os << "δ" << (e.d > 1 ? "^" + std::to_string(e.d) : "");
    }
    return os.str();
}

QWeylElement weyl_mul(const QWeylElement& P, const QWeylElement& Q, int degree_cap) {
    check_same(P, Q);
    QWeylElement r(P.p());
    if (P.is_zero() || Q.is_zero()) return r;
    const int bound = *P.total_degree() + *Q.total_degree();
    if (bound > degree_cap)
        throw DegreeCapError("product degree " + std::to_string(bound) + " exceeds cap " + std::to_string(degree_cap));
    auto terms = detail::pbw_multiply(CyclotomicRing{P.p()}, P.terms(), Q.terms());
    for (const auto& [e, c] : terms) r.add_term(e.x, e.d, c);
    return r;
}

QWeylElement commutator(const QWeylElement& P, const QWeylElement& Q, int degree_cap) {
    return weyl_mul(P, Q, degree_cap) - weyl_mul(Q, P, degree_cap);
}

QWeylElement weyl_pow(const QWeylElement& P, unsigned k, int degree_cap) {
    QWeylElement r = QWeylElement::one(P.p());
    for (unsigned i = 0; i < k; ++i) r = weyl_mul(r, P, degree_cap);
    return r;
}

QWeylElement sigma(int p) {
    QWeylElement s = QWeylElement::one(p);
    s.add_term(1, 1, CycInt::q_power(p, 1) - CycInt::one(p));
    return s;
}

QWeylElement sigma_power(int p, unsigned k, int degree_cap) { return weyl_pow(sigma(p), k, degree_cap); }

Polynomial delta_act(const Polynomial& f) {
    Polynomial r(f.p());
    const auto& c = f.coeffs();
    for (std::size_t n = 1; n < c.size(); ++n)
        if (!c[n].is_zero()) r.set_coeff(static_cast<int>(n) - 1, r.coeff(static_cast<int>(n) - 1) + q_int(f.p(), n) * c[n]);
    return r;
}

Polynomial sigma_act(const Polynomial& f) {
    std::vector<CycInt> c = f.coeffs();
    for (std::size_t n = 0; n < c.size(); ++n) c[n] *= CycInt::q_power(f.p(), static_cast<long>(n));
    return Polynomial(f.p(), std::move(c));
}

Polynomial act(const QWeylElement& P, const Polynomial& f) {
    if (P.p() != f.p()) throw StructuralError("operator and polynomial over different primes");
    Polynomial result(f.p());
    // group by d-degree so each d^j f is computed once
    std::map<int, Polynomial> derivatives;
    for (const auto& [e, c] : P.terms()) {
        auto it = derivatives.find(e.d);
        if (it == derivatives.end()) {
            Polynomial g = f;
            for (int k = 0; k < e.d && !g.is_zero(); ++k) g = delta_act(g);
            it = derivatives.emplace(e.d, std::move(g)).first;
        }
        result += Polynomial::monomial(c, e.x) * it->second;
    }
    return result;
}

bool sigma_derivation_check(const Polynomial& f, const Polynomial& g) {
    const Polynomial lhs = delta_act(f * g);
    const Polynomial rhs = delta_act(f) * g + sigma_act(f) * delta_act(g);
    return lhs == rhs;
}

bool is_centralizing_Rx(const QWeylElement& P) { return commutator(P, QWeylElement::x(P.p())).is_zero(); }

bool is_central(const QWeylElement& P) {
    return is_centralizing_Rx(P) && commutator(P, QWeylElement::delta(P.p())).is_zero();
}

bool has_central_exponents(const QWeylElement& P) {
    return std::all_of(P.terms().begin(), P.terms().end(),
                       [&](const auto& t) { return t.first.x % P.p() == 0 && t.first.d % P.p() == 0; });
}

bool has_centralizing_exponents(const QWeylElement& P) {
    return std::all_of(P.terms().begin(), P.terms().end(), [&](const auto& t) { return t.first.d % P.p() == 0; });
}

ClassicalWeylElement reduce_mod_p(const QWeylElement& P) {
    ClassicalWeylElement r(P.p());
    for (const auto& [e, c] : P.terms()) r.add_term(e.x, e.d, c.reduce_mod_J());
    return r;
}

} // namespace qwa
