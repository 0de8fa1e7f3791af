#include "qwa/polynomial.hpp"

#include <sstream>

namespace qwa {

Polynomial::Polynomial(int p, std::vector<CycInt> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (c.p() != p_) throw StructuralError("polynomial coefficient over the wrong prime");
    trim();
}

Polynomial Polynomial::constant(const CycInt& c) { return Polynomial(c.p(), {c}); }

Polynomial Polynomial::monomial(const CycInt& c, int degree) {
    std::vector<CycInt> v(degree + 1, CycInt::zero(c.p()));
    v[degree] = c;
    return Polynomial(c.p(), std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<int> Polynomial::degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
}

CycInt Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return CycInt::zero(p_);
    return c_[k];
}

void Polynomial::set_coeff(int k, const CycInt& c) {
    if (k >= static_cast<int>(c_.size())) c_.resize(k + 1, CycInt::zero(p_));
    c_[k] = c;
    trim();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
    if (p_ != b.p_) throw StructuralError("polynomials over different primes");
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), CycInt::zero(p_));
    for (std::size_t k = 0; k < b.c_.size(); ++k) c_[k] += b.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
    if (p_ != b.p_) throw StructuralError("polynomials over different primes");
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), CycInt::zero(p_));
    for (std::size_t k = 0; k < b.c_.size(); ++k) c_[k] -= b.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const CycInt& c) {
    for (auto& a : c_) a *= c;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.p_ != b.p_) throw StructuralError("polynomials over different primes");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.p_);
    std::vector<CycInt> r(a.c_.size() + b.c_.size() - 1, CycInt::zero(a.p_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Polynomial(a.p_, std::move(r));
}

std::optional<Polynomial> Polynomial::exact_quotient(const Polynomial& b) const {
    if (b.is_zero()) throw UnitInversionError("division by the zero polynomial");
    if (is_zero()) return Polynomial(p_);
    const int db = *b.degree();
    Polynomial rem = *this;
    if (*rem.degree() < db) return std::nullopt;
    std::vector<CycInt> quo(*rem.degree() - db + 1, CycInt::zero(p_));
    while (!rem.is_zero()) {
        const int dr = *rem.degree();
        if (dr < db) return std::nullopt;
        auto lead = rem.c_.back().exact_quotient(b.c_.back());
        if (!lead) return std::nullopt;
        quo[dr - db] = *lead;
        rem -= monomial(*lead, dr - db) * b;
        if (!rem.is_zero() && *rem.degree() >= dr) return std::nullopt;
    }
    return Polynomial(p_, std::move(quo));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const std::string cs = c_[k].to_string();
        const bool compound = cs.find(' ') != std::string::npos;
        if (k == 0) {
            os << cs;
            continue;
        }
        if (!c_[k].is_one()) os << (compound ? "(" + cs + ")" : cs) << "·";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

} // namespace qwa
