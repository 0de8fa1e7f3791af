#include "qwa/center.hpp"

#include <sstream>

namespace qwa {

CenterElement::CenterElement(int p, int trunc) : p_(p), trunc_(trunc) {
    if (trunc < 0) throw InputError("truncation order must be nonnegative");
}

CenterElement CenterElement::constant(int p, int trunc, const CycInt& c) {
    CenterElement r(p, trunc);
    r.add_term(0, 0, c);
    return r;
}

CenterElement CenterElement::monomial(int trunc, const CycInt& c, int xp_degree, int xi_degree) {
    CenterElement r(c.p(), trunc);
    r.add_term(xp_degree, xi_degree, c);
    return r;
}

CenterElement CenterElement::from_polynomial(const Polynomial& f, int trunc) {
    CenterElement r(f.p(), trunc);
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) r.add_term(static_cast<int>(k), 0, f.coeffs()[k]);
    return r;
}

CycInt CenterElement::coeff(int xp_degree, int xi_degree) const {
    auto it = terms_.find({xp_degree, xi_degree});
    return it == terms_.end() ? CycInt::zero(p_) : it->second;
}

void CenterElement::add_term(int xp_degree, int xi_degree, const CycInt& c) {
    if (c.p() != p_) throw StructuralError("center coefficient over the wrong prime");
    if (xi_degree > trunc_ || c.is_zero()) return;
    auto key = std::make_pair(xp_degree, xi_degree);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial CenterElement::xi_coefficient(int k) const {
    Polynomial f(p_);
    for (const auto& [e, c] : terms_)
        if (e.second == k) f.set_coeff(e.first, c);
    return f;
}

std::optional<int> CenterElement::xi_valuation() const {
    if (terms_.empty()) return std::nullopt;
    int v = trunc_;
    for (const auto& [e, c] : terms_) v = std::min(v, e.second);
    return v;
}

CenterElement CenterElement::truncated(int new_trunc) const {
    CenterElement r(p_, new_trunc);
    for (const auto& [e, c] : terms_) r.add_term(e.first, e.second, c);
    return r;
}

void CenterElement::check_same(const CenterElement& b) const {
    if (p_ != b.p_ || trunc_ != b.trunc_)
        throw StructuralError("center elements with different (p, N): (" + std::to_string(p_) + ", " +
                              std::to_string(trunc_) + ") vs (" + std::to_string(b.p_) + ", " +
                              std::to_string(b.trunc_) + ")");
}

CenterElement CenterElement::operator-() const {
    CenterElement r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

CenterElement& CenterElement::operator+=(const CenterElement& b) {
    check_same(b);
    for (const auto& [e, c] : b.terms_) add_term(e.first, e.second, c);
    return *this;
}

CenterElement& CenterElement::operator-=(const CenterElement& b) {
    check_same(b);
    for (const auto& [e, c] : b.terms_) add_term(e.first, e.second, -c);
    return *this;
}

CenterElement operator*(const CenterElement& a, const CenterElement& b) {
    a.check_same(b);
    CenterElement r(a.p_, a.trunc_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            if (ea.second + eb.second > a.trunc_) continue;
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        }
    return r;
}

CenterElement operator*(const CycInt& c, const CenterElement& a) {
    CenterElement r(a.p_, a.trunc_);
    for (const auto& [e, v] : a.terms_) r.add_term(e.first, e.second, c * v);
    return r;
}

CenterElement CenterElement::pow(unsigned k) const {
    CenterElement r = one(p_, trunc_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string CenterElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const std::string cs = c.to_string();
        const bool bare = e.first == 0 && e.second == 0;
        if (bare) {
            os << cs;
            continue;
        }
        if (!c.is_one()) os << (cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs) << "·";
        if (e.first > 0) os << "(x^" << p_ << ")" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second > 0) os << "ξ" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
    }
    return os.str();
}

std::string CentralizerElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < comps.size(); ++k) {
        if (comps[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << comps[k].to_string() << ")";
        if (k > 0) os << "·x" << (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (first) os << "0";
    return os.str();
}

} // namespace qwa
