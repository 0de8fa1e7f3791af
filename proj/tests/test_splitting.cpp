#include <doctest.h>

#include "qwa/random.hpp"
#include "qwa/splitting.hpp"

using namespace qwa;

namespace {

CycInt q(int p, long k = 1) { return CycInt::q_power(p, k); }
CenterElement ce(int trunc, const CycInt& c, int a, int b) { return CenterElement::monomial(trunc, c, a, b); }
QWeylElement mono(int p, int i, int j) { return QWeylElement::monomial(CycInt::one(p), i, j); }

} // namespace

TEST_CASE("D and X for p = 2") {
    const int N = 3;
    const SplitMatrix d = build_D(Prime(2), N);
    // [[0, 1 - x^2 xi], [xi, 0]]
    CHECK(d(0, 0).is_zero());
    CHECK(d(0, 1) == CenterElement::one(2, N) - ce(N, CycInt::one(2), 1, 1));
    CHECK(d(1, 0) == ce(N, CycInt::one(2), 0, 1));
    CHECK(d(1, 1).is_zero());

    const SplitMatrix x = build_X(Prime(2), N);
    CHECK(x(0, 1) == ce(N, CycInt::one(2), 1, 0));
    CHECK(x(1, 0) == CenterElement::one(2, N));
    CHECK(x(0, 0).is_zero());
    CHECK(x(1, 1).is_zero());
}

TEST_CASE("D for p = 3 and sparsity of D, X") {
    const int N = 2;
    const CycInt inv2 = q_int_inverse(3, 2);
    const SplitMatrix d = build_D(Prime(3), N);
    CHECK(d(0, 1) == CenterElement::one(3, N) + ce(N, q(3) * inv2, 1, 1));
    CHECK(d(1, 2) == CenterElement::constant(3, N, q_int(3, 2)) + ce(N, q(3, 2) * inv2, 1, 1));
    CHECK(d(2, 0) == ce(N, inv2, 0, 1));
    for (int p : {2, 3, 5, 7}) {
        const SplitMatrix dd = build_D(Prime(p), N);
        const SplitMatrix xx = build_X(Prime(p), N);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                const bool d_slot = (j == i + 1) || (i == p - 1 && j == 0);
                const bool x_slot = (i == 0 && j == p - 1) || (j == i - 1);
                if (!d_slot) CHECK(dd(i, j).is_zero());
                else CHECK_FALSE(dd(i, j).is_zero());
                if (!x_slot) CHECK(xx(i, j).is_zero());
                else CHECK_FALSE(xx(i, j).is_zero());
            }
    }
}

TEST_CASE("DX and XD are diagonal with the expected entries") {
    for (int p : {2, 3, 5}) {
        const int N = 2;
        const CycInt inv = q_factorial_inverse(p, p - 1);
        const SplitMatrix d = build_D(Prime(p), N);
        const SplitMatrix x = build_X(Prime(p), N);
        const SplitMatrix dx = d * x;
        const SplitMatrix xd = x * d;
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                if (i != j) {
                    CHECK(dx(i, j).is_zero());
                    CHECK(xd(i, j).is_zero());
                    continue;
                }
                const int jj = j + 1; // 1-based
                CHECK(dx(j, j) == CenterElement::constant(p, N, q_int(p, jj)) + ce(N, q(p, jj) * inv, 1, 1));
                CHECK(xd(j, j) == CenterElement::constant(p, N, q_int(p, jj - 1)) + ce(N, q(p, jj - 1) * inv, 1, 1));
            }
    }
}

TEST_CASE("the Weyl relation holds for D and X") {
    for (int p : {2, 3, 5, 7})
        for (int N : {1, 2, 3}) CHECK(verify_weyl_relation(Prime(p), N));
    CHECK(verify_weyl_relation(Prime(11), 1));
}

TEST_CASE("a mutated corner entry is detected on the first diagonal slot") {
    for (int p : {2, 3, 5}) {
        const int N = 2;
        SplitMatrix d = build_D(Prime(p), N);
        d(p - 1, 0) = CycInt::from_int(p, 2) * d(p - 1, 0);
        const SplitMatrix defect = weyl_relation_defect(d, build_X(Prime(p), N));
        CHECK_FALSE(defect.is_zero());
        CHECK_FALSE(defect(0, 0).is_zero());
    }
}

TEST_CASE("every single-entry mutation of D or X is detected") {
    for (int p : {2, 3}) {
        const int N = 1;
        const SplitMatrix d0 = build_D(Prime(p), N);
        const SplitMatrix x0 = build_X(Prime(p), N);
        const CenterElement bump = CenterElement::one(p, N);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                SplitMatrix d = d0;
                d(i, j) += bump;
                CHECK_FALSE(verify_weyl_relation(d, x0));
                SplitMatrix x = x0;
                x(i, j) += bump;
                CHECK_FALSE(verify_weyl_relation(d0, x));
            }
    }
}

TEST_CASE("rho is a homomorphism") {
    Rng rng(31);
    for (int p : {2, 3}) {
        const int N = 2;
        const Rho r(Prime(p), N);
        CHECK(r(QWeylElement::one(p)) == split_identity(p, N));
        const QWeylElement rel = QWeylElement::delta(p) * QWeylElement::x(p) -
                                 CycInt::q_power(p, 1) * (QWeylElement::x(p) * QWeylElement::delta(p)) -
                                 QWeylElement::one(p);
        CHECK(rel.is_zero());
        CHECK(r(mono(p, 0, 1)) * r(mono(p, 1, 0)) - CenterElement::constant(p, N, q(p)) * (r(mono(p, 1, 0)) * r(mono(p, 0, 1))) ==
              split_identity(p, N));
        for (int t = 0; t < 100; ++t) {
            const auto a = rng.weyl_element(p, 3, 3);
            const auto b = rng.weyl_element(p, 3, 3);
            CHECK(r(a * b) == r(a) * r(b));
        }
    }
}

TEST_CASE("sigma^p maps to a scalar matrix") {
    for (int p : {2, 3}) {
        const int N = 3;
        const SplitMatrix m = rho(sigma_power(p, p), N);
        CHECK(m.is_scalar());
        const CycInt c = (CycInt::one(p) - q(p)).pow(p);
        // 1 - (1-q)^p x^p Phi(xi), where Phi(xi) is the scalar of D^p
        const PhiOnCenter phi = phi_on_center(Prime(p), N);
        CHECK(m(0, 0) == CenterElement::one(p, N) - c * (phi.image_xp * phi.image_xi));
    }
}

TEST_CASE("central monomials map to scalar matrices") {
    for (int p : {2, 3}) {
        const int N = 2;
        const Rho r(Prime(p), N);
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= N; ++b) CHECK(r(mono(p, a * p, b * p)).is_scalar());
        CHECK_FALSE(r(mono(p, 1, 0)).is_scalar());
    }
}

TEST_CASE("action matrices modulo I") {
    for (int p : {2, 3, 5}) {
        CAPTURE(p);
        // x: the X matrix with xi-free entries
        CHECK(action_matrix_mod_I(QWeylElement::x(p)) == reduce_mod_xi(build_X(Prime(p), 1)));
        // d: superdiagonal [1], ..., [p-1], zero corner
        const PolyMatrix md = action_matrix_mod_I(QWeylElement::delta(p));
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                if (j == i + 1) CHECK(md(i, j) == Polynomial::constant(q_int(p, j)));
                else CHECK(md(i, j).is_zero());
            }
        CHECK(action_matrix_mod_I(mono(p, 0, p)).is_zero());
        // compatibility with rho at xi = 0 on the monomial basis
        const Rho r(Prime(p), 1);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) CHECK(reduce_mod_xi(r(mono(p, a, b))) == action_matrix_mod_I(mono(p, a, b)));
    }
}

TEST_CASE("mod-I transition determinant is a unit") {
    // values frozen from tests/oracles/cyclotomic_oracles.py
    const ModICertificate c2 = verify_mod_I_isomorphism(Prime(2));
    CHECK(c2.passed);
    CHECK(c2.determinant == Polynomial::constant(CycInt::one(2)));
    const ModICertificate c3 = verify_mod_I_isomorphism(Prime(3));
    CHECK(c3.passed);
    CHECK(c3.determinant == Polynomial::constant(-CycInt::one(3)));
    CHECK(abs(c3.norm) == 1);
    const ModICertificate dead = verify_mod_I_isomorphism(Prime(3), true);
    CHECK_FALSE(dead.passed);
    CHECK(dead.determinant.is_zero());
}

TEST_CASE("Bareiss determinant against cofactor expansion") {
    Rng rng(8);
    const int p = 3;
    for (int t = 0; t < 10; ++t) {
        PolyMatrix m(3, 3, Polynomial(p));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = rng.polynomial(p, 2);
        const Polynomial cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        CHECK(bareiss_determinant(m) == cof);
    }
}

TEST_CASE("truncated lifting of matrix units") {
    for (auto [p, N] : {std::pair{2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {3, 2}}) {
        CAPTURE(p);
        CAPTURE(N);
        const LiftCertificate cert = verify_surjectivity_trunc(Prime(p), N);
        CHECK(cert.passed);
        CHECK(cert.units.size() == static_cast<std::size_t>(p * p));
        const Rho r(Prime(p), N);
        for (const auto& u : cert.units) {
            SplitMatrix unit = split_zero(p, N);
            unit(u.row, u.col) = CenterElement::one(p, N);
            CHECK(r(u.preimage) == unit);
            if (N == 0) CHECK(action_matrix_mod_I(u.preimage) == reduce_mod_xi(unit));
        }
    }
}

TEST_CASE("lifting an arbitrary target") {
    const int p = 2, N = 2;
    SplitMatrix target = split_zero(p, N);
    target(0, 1) = ce(N, CycInt::one(p), 1, 2);
    target(1, 1) = CenterElement::constant(p, N, CycInt::from_int(p, 5));
    const QWeylElement pre = lift_preimage(Prime(p), N, target);
    CHECK(rho(pre, N) == target);
}

TEST_CASE("Phi on generators") {
    for (int p : {2, 3, 5}) {
        const int N = 2;
        const CycInt inv = q_factorial_inverse(p, p - 1);
        const CentralizerElement phi_d = phi_of(QWeylElement::delta(p), N);
        for (int k = 0; k < p; ++k) {
            if (k == p - 1) CHECK(phi_d.comps[k] == ce(N, inv, 0, 1));
            else CHECK(phi_d.comps[k].is_zero());
        }
        const CentralizerElement phi_x = phi_of(QWeylElement::x(p), N);
        for (int k = 0; k < p; ++k) CHECK(phi_x.comps[k] == (k == 1 ? CenterElement::one(p, N) : CenterElement(p, N)));
        const CentralizerElement phi_1 = phi_of(QWeylElement::one(p), N);
        CHECK(phi_1.comps[0] == CenterElement::one(p, N));
        // R[x^p] is fixed
        const CentralizerElement phi_xp = phi_of(mono(p, 2 * p, 0), N);
        CHECK(phi_xp.comps[0] == ce(N, CycInt::one(p), 2, 0));
    }
}

TEST_CASE("Phi on the center") {
    // p = 2: D^2 = (xi - x^2 xi^2) I
    const int N = 3;
    const PhiOnCenter c2 = phi_on_center(Prime(2), N);
    CHECK(c2.image_xi == ce(N, CycInt::one(2), 0, 1) - ce(N, CycInt::one(2), 1, 2));
    for (int p : {2, 3, 5}) {
        const PhiOnCenter c = phi_on_center(Prime(p), N);
        CHECK(c.xp_fixed);
        CHECK(c.xi_moved);
        CHECK(c.xi_invertible);
        CHECK(c.multiplicative);
    }
}
