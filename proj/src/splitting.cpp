#include "qwa/splitting.hpp"

#include <map>

namespace qwa {

namespace {

CenterElement cz(int p, int trunc) { return CenterElement(p, trunc); }

} // namespace

SplitMatrix split_zero(int p, int trunc) { return SplitMatrix(p, p, cz(p, trunc)); }

SplitMatrix split_identity(int p, int trunc) {
    return SplitMatrix::identity(p, cz(p, trunc), CenterElement::one(p, trunc));
}

SplitMatrix build_D(const Prime& prime, int trunc) {
    const int p = prime.value();
    if (trunc < 0) throw InputError("truncation order must be nonnegative");
    const CycInt inv_fact = q_factorial_inverse(p, p - 1);
    SplitMatrix d = split_zero(p, trunc);
    for (int i = 1; i <= p - 1; ++i) {
        CenterElement e = CenterElement::constant(p, trunc, q_int(p, i));
        e.add_term(1, 1, CycInt::q_power(p, i) * inv_fact);
        d(i - 1, i) = e;
    }
    d(p - 1, 0) = CenterElement::monomial(trunc, inv_fact, 0, 1);
    return d;
}

SplitMatrix build_X(const Prime& prime, int trunc) {
    const int p = prime.value();
    if (trunc < 0) throw InputError("truncation order must be nonnegative");
    SplitMatrix x = split_zero(p, trunc);
    x(0, p - 1) = CenterElement::monomial(trunc, CycInt::one(p), 1, 0);
    for (int i = 1; i < p; ++i) x(i, i - 1) = CenterElement::one(p, trunc);
    return x;
}

SplitMatrix weyl_relation_defect(const SplitMatrix& d, const SplitMatrix& x) {
    const CenterElement& z = d.zero();
    const int p = z.p();
    const CenterElement q = CenterElement::constant(p, z.trunc(), CycInt::q_power(p, 1));
    return d * x - q * (x * d) - split_identity(p, z.trunc());
}

bool verify_weyl_relation(const SplitMatrix& d, const SplitMatrix& x) { return weyl_relation_defect(d, x).is_zero(); }

bool verify_weyl_relation(const Prime& p, int trunc) { return verify_weyl_relation(build_D(p, trunc), build_X(p, trunc)); }

Rho::Rho(const Prime& p, int trunc) : d_(build_D(p, trunc)), x_(build_X(p, trunc)) {}

Rho::Rho(SplitMatrix d, SplitMatrix x) : d_(std::move(d)), x_(std::move(x)) {}

SplitMatrix Rho::operator()(const QWeylElement& P) const {
    const CenterElement& z = d_.zero();
    const int p = z.p();
    const int trunc = z.trunc();
    if (P.p() != p) throw StructuralError("rho: element over the wrong prime");
    SplitMatrix result = split_zero(p, trunc);
    if (P.is_zero()) return result;

    // group by x-degree: sum_i X^i (sum_j c_ij D^j)
    std::map<int, std::map<int, CycInt>> by_x;
    for (const auto& [e, c] : P.terms()) by_x[e.x].emplace(e.d, c);

    std::vector<SplitMatrix> d_pows{split_identity(p, trunc)};
    const int max_d = *P.delta_degree();
    for (int k = 1; k <= max_d; ++k) {
        d_pows.push_back(d_pows.back() * d_);
        if (d_pows.back().is_zero()) break; // D is nilpotent modulo xi^{N+1}
    }

    SplitMatrix x_pow = split_identity(p, trunc);
    int x_deg = 0;
    for (const auto& [i, row] : by_x) {
        while (x_deg < i) {
            x_pow = x_pow * x_;
            ++x_deg;
        }
        SplitMatrix inner = split_zero(p, trunc);
        for (const auto& [j, c] : row) {
            if (j >= static_cast<int>(d_pows.size())) continue;
            inner += CenterElement::constant(p, trunc, c) * d_pows[j];
        }
        result += x_pow * inner;
    }
    return result;
}

SplitMatrix rho(const QWeylElement& P, int trunc) { return Rho(Prime(P.p(), P.p()), trunc)(P); }

PolyMatrix action_matrix_mod_I(const QWeylElement& P) {
    const int p = P.p();
    PolyMatrix m(p, p, Polynomial(p));
    for (int k = 0; k < p; ++k) {
        const Polynomial image = act(P, Polynomial::monomial(CycInt::one(p), k));
        const auto& c = image.coeffs();
        for (std::size_t deg = 0; deg < c.size(); ++deg) {
            if (c[deg].is_zero()) continue;
            const int row = static_cast<int>(deg) % p;
            const int y_deg = static_cast<int>(deg) / p;
            m(row, k) += Polynomial::monomial(c[deg], y_deg);
        }
    }
    return m;
}

PolyMatrix reduce_mod_xi(const SplitMatrix& m) {
    return m.map([](const CenterElement& e) { return e.xi_coefficient(0); });
}

PolyMatrix mod_I_transition_matrix(const Prime& prime, bool kill_delta) {
    const int p = prime.value();
    PolyMatrix t(p * p, p * p, Polynomial(p));
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            if (kill_delta && b > 0) continue;
            const PolyMatrix m = action_matrix_mod_I(QWeylElement::monomial(CycInt::one(p), a, b));
            for (int k = 0; k < p; ++k)
                for (int l = 0; l < p; ++l) t(k * p + l, a * p + b) = m(k, l);
        }
    return t;
}

ModICertificate verify_mod_I_isomorphism(const Prime& prime, bool kill_delta) {
    const int p = prime.value();
    const Polynomial det = bareiss_determinant(mod_I_transition_matrix(prime, kill_delta));
    ModICertificate cert{p, det, CycInt::zero(p), 0, false};
    if (det.is_zero() || *det.degree() != 0) return cert;
    cert.norm = det.coeffs()[0].norm();
    if (auto inv = unit_constant_inverse(det)) {
        cert.unit_inverse = *inv;
        cert.passed = (det.coeffs()[0] * *inv).is_one();
    }
    return cert;
}

namespace {

// Inverse of the mod-I transition matrix; the seed of every lift.
PolyMatrix transition_inverse(const Prime& prime) {
    const int p = prime.value();
    const PolyMatrix t = mod_I_transition_matrix(prime);
    const PolyMatrix id = PolyMatrix::identity(p * p, Polynomial(p), Polynomial::constant(CycInt::one(p)));
    return solve_unimodular(t, id);
}

QWeylElement lift_with(const Rho& r, const PolyMatrix& t_inv, const SplitMatrix& target) {
    const CenterElement& z = target.zero();
    const int p = z.p();
    const int trunc = z.trunc();
    QWeylElement pre(p);
    for (int n = 0; n <= trunc; ++n) {
        const SplitMatrix residual = target - r(pre);
        PolyMatrix rhs(p * p, 1, Polynomial(p));
        for (int k = 0; k < p; ++k)
            for (int l = 0; l < p; ++l) {
                const CenterElement& e = residual(k, l);
                if (auto v = e.xi_valuation(); v && *v < n)
                    throw VerificationFailure("lift: residual has xi-valuation " + std::to_string(*v) +
                                              " below the current degree " + std::to_string(n));
                rhs(k * p + l, 0) = e.xi_coefficient(n);
            }
        const PolyMatrix c = t_inv * rhs;
        // d^{pn} is central, so x^{ps} d^{pn} x^a d^b = x^{ps+a} d^{pn+b}
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                const auto& coeffs = c(a * p + b, 0).coeffs();
                for (std::size_t s = 0; s < coeffs.size(); ++s)
                    pre.add_term(p * static_cast<int>(s) + a, p * n + b, coeffs[s]);
            }
    }
    return pre;
}

} // namespace

QWeylElement lift_preimage(const Prime& p, int trunc, const SplitMatrix& target) {
    return lift_with(Rho(p, trunc), transition_inverse(p), target);
}

LiftCertificate verify_surjectivity_trunc(const Prime& prime, int trunc) {
    const int p = prime.value();
    const Rho r(prime, trunc);
    const PolyMatrix t_inv = transition_inverse(prime);
    LiftCertificate cert{p, trunc, {}, true};
    for (int k = 0; k < p; ++k)
        for (int l = 0; l < p; ++l) {
            SplitMatrix unit = split_zero(p, trunc);
            unit(k, l) = CenterElement::one(p, trunc);
            QWeylElement pre = lift_with(r, t_inv, unit);
            SplitMatrix residual = r(pre) - unit;
            cert.passed = cert.passed && residual.is_zero();
            cert.units.push_back(LiftedUnit{k, l, std::move(pre), std::move(residual)});
        }
    return cert;
}

CentralizerElement phi_of(const QWeylElement& P, int trunc) {
    const SplitMatrix m = rho(P, trunc);
    CentralizerElement v;
    for (std::size_t i = 0; i < m.rows(); ++i) v.comps.push_back(m(i, 0));
    return v;
}

PhiOnCenter phi_on_center(const Prime& prime, int trunc) {
    const int p = prime.value();
    const Rho r(prime, trunc);
    const CenterElement one = CenterElement::one(p, trunc);
    const SplitMatrix xp = r.x().pow(p, one);
    const SplitMatrix dp = r.d().pow(p, one);
    if (!xp.is_scalar()) throw VerificationFailure("X^p is not a scalar matrix");
    if (!dp.is_scalar()) throw VerificationFailure("D^p is not a scalar matrix");

    PhiOnCenter out{xp(0, 0), dp(0, 0), false, false, false, false};
    out.xp_fixed = out.image_xp == CenterElement::monomial(trunc, CycInt::one(p), 1, 0);
    const CenterElement xi = CenterElement::monomial(trunc, CycInt::one(p), 0, 1);
    out.xi_moved = out.image_xi != xi;
    out.xi_invertible = out.image_xi.xi_coefficient(0).is_zero() &&
                        out.image_xi.xi_coefficient(1) == Polynomial::constant(CycInt::one(p));
    const SplitMatrix central = r(QWeylElement::monomial(CycInt::one(p), p, p));
    out.multiplicative = central == (out.image_xp * out.image_xi) * split_identity(p, trunc);
    return out;
}

} // namespace qwa
