// Acceptance run: one line per criterion, "criterion N: PASS|FAIL ...".
// Time budgets are wall-clock seconds; a criterion that passes its checks
// but exceeds its budget is reported as FAIL.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include "qwa/azumaya.hpp"
#include "qwa/higgs.hpp"
#include "qwa/random.hpp"
#include "qwa/splitting.hpp"

using namespace qwa;

namespace {

QWeylElement mono(const CycInt& c, int i, int j) { return QWeylElement::monomial(c, i, j); }

bool c1_q_integers() {
    for (int p : {2, 3, 5, 7, 11}) {
        if (!q_int(p, p).is_zero()) return false;
        if (!(CycInt::q_power(p, 1) * CycInt::q_power(p, p - 1)).is_one()) return false;
        for (int i = 1; i < p; ++i)
            if (!(q_int(p, i) * q_int_inverse(p, i)).is_one()) return false;
    }
    return true;
}

bool c2_rewriting() {
    for (int p : {2, 3, 5}) {
        const CycInt one = CycInt::one(p);
        for (int n = 1; n <= 2 * p; ++n) {
            if (mono(one, 0, n) * QWeylElement::x(p) != mono(q_int(p, n), 0, n - 1) + mono(CycInt::q_power(p, n), 1, n))
                return false;
            if (QWeylElement::delta(p) * mono(one, n, 0) != mono(q_int(p, n), n - 1, 0) + mono(CycInt::q_power(p, n), n, 1))
                return false;
        }
        if (!commutator(mono(one, 0, p), QWeylElement::x(p)).is_zero()) return false;
        if (!commutator(QWeylElement::delta(p), mono(one, p, 0)).is_zero()) return false;
    }
    return true;
}

bool c3_center() {
    for (int p : {2, 3, 5}) {
        Rng rng(3000 + p);
        for (int t = 0; t < 500; ++t) {
            QWeylElement a = (t % 2 == 0) ? rng.weyl_element(p, 4, 2 * p) : rng.central_element(p, 3, 2);
            if (t % 4 == 3)
                a.add_term(static_cast<int>(rng.uniform(0, 2 * p)), static_cast<int>(rng.uniform(0, 2 * p)), rng.cyc_int(p));
            if (is_central(a) != has_central_exponents(a)) return false;
            if (is_centralizing_Rx(a) != has_centralizing_exponents(a)) return false;
        }
    }
    return true;
}

bool c4_mod_p() {
    for (int p : {2, 3, 5}) {
        Rng rng(4000 + p);
        for (int t = 0; t < 200; ++t) {
            const auto a = rng.weyl_element(p, 4, 4);
            const auto b = rng.weyl_element(p, 4, 4);
            if (reduce_mod_p(a * b) != reduce_mod_p(a) * reduce_mod_p(b)) return false;
        }
        const auto x = ClassicalWeylElement::x(p);
        const auto d = ClassicalWeylElement::partial(p);
        if (d * x != x * d + ClassicalWeylElement::one(p)) return false;
        if (!classical_commutator(ClassicalWeylElement::monomial(p, 1, 0, p), x).is_zero()) return false;
    }
    return true;
}

bool c5_splitting() {
    for (int p : {2, 3, 5, 7})
        for (int n : {1, 2, 3}) {
            const SplitMatrix d = build_D(Prime(p), n);
            const SplitMatrix x = build_X(Prime(p), n);
            if (!verify_weyl_relation(d, x)) return false;
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j) {
                    SplitMatrix dm = d, xm = x;
                    dm(i, j) += CenterElement::one(p, n);
                    xm(i, j) += CenterElement::one(p, n);
                    if (verify_weyl_relation(dm, x) || verify_weyl_relation(d, xm)) return false;
                }
        }
    return true;
}

bool c6_mod_I() {
    for (int p : {2, 3, 5})
        if (!verify_mod_I_isomorphism(Prime(p)).passed) return false;
    return !verify_mod_I_isomorphism(Prime(3), true).passed;
}

bool c7_lift() {
    for (int p : {2, 3})
        for (int n : {0, 1, 2}) {
            const auto c = verify_surjectivity_trunc(Prime(p), n);
            if (!c.passed || static_cast<int>(c.units.size()) != p * p) return false;
            for (const auto& u : c.units)
                for (std::size_t i = 0; i < u.residual.rows(); ++i)
                    for (std::size_t j = 0; j < u.residual.cols(); ++j)
                        if (!u.residual(i, j).is_zero()) return false;
        }
    return true;
}

bool c8_sigma_p() {
    for (int p : {2, 3, 5}) {
        const CycInt c = (CycInt::one(p) - CycInt::q_power(p, 1)).pow(p);
        const QWeylElement sp = sigma_power(p, p);
        if (sp != QWeylElement::one(p) - mono(c, p, p)) return false;
        const int n = 2;
        const PhiOnCenter phi = phi_on_center(Prime(p), n);
        const CenterElement scalar = CenterElement::one(p, n) - c * (phi.image_xp * phi.image_xi);
        if (rho(sp, n) != Matrix<CenterElement>::identity(p, CenterElement(p, n), scalar)) return false;
    }
    return true;
}

bool c9_phi() {
    for (int p : {2, 3})
        for (int n : {1, 2, 3}) {
            const CentralizerElement pd = phi_of(QWeylElement::delta(p), n);
            for (int k = 0; k < p; ++k) {
                const CenterElement expected =
                    k == p - 1 ? CenterElement::monomial(n, q_factorial_inverse(p, p - 1), 0, 1) : CenterElement(p, n);
                if (pd.comps[k] != expected) return false;
            }
            const PhiOnCenter phi = phi_on_center(Prime(p), n);
            // modulo xi^2 the map is invisible: D^p = xi + O(xi^2)
            if (!phi.xp_fixed || (n >= 2) != phi.xi_moved) return false;
        }
    return true;
}

bool c10_p2() { return verify_p2_neutralization().passed && !verify_p2_neutralization(1, 1).passed; }

bool c11_kaneda() {
    for (int p : {2, 3})
        if (!verify_kaneda_mod_J(Prime(p)).passed) return false;
    return true;
}

bool c12_higgs() {
    for (int p : {2, 3})
        for (const auto& h : jordan_corpus(p, 3))
            if (!roundtrip_check(h).passed) return false;
    return true;
}

struct Captured {
    int code;
    std::string out;
};

Captured capture(const std::string& cmd) {
    Captured c{-1, {}};
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return c;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) c.out.append(buf.data(), n);
    const int status = pclose(f);
    c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return c;
}

bool c13_cli() {
    const std::string cmd = std::string(QWA_CLI_PATH) + " verify-all --p 2,3,5 --seed 7";
    const Captured a = capture(cmd);
    const Captured b = capture(cmd);
    return a.code == 0 && b.code == 0 && !a.out.empty() && a.out == b.out;
}

struct Criterion {
    int id;
    const char* what;
    double budget_s;
    std::function<bool()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "q-integer laws, p in {2,3,5,7,11}", 1, c1_q_integers},
        {2, "rewriting identities and vanishing commutators", 5, c2_rewriting},
        {3, "center characterization on 500 seeded elements per p", 30, c3_center},
        {4, "reduction mod p is a ring homomorphism", 10, c4_mod_p},
        {5, "splitting relation and single-entry mutations", 5, c5_splitting},
        {6, "unit determinant of the mod-I transition matrix", 60, c6_mod_I},
        {7, "truncated lifts of all matrix units", 60, c7_lift},
        {8, "closed form of sigma^p and its scalar image", 5, c8_sigma_p},
        {9, "Phi values on delta, x^p and xi", 5, c9_phi},
        {10, "explicit p = 2 identities and basis", 5, c10_p2},
        {11, "mod-J surjectivity onto matrix units", 60, c11_kaneda},
        {12, "Higgs roundtrip on the Jordan corpus", 120, c12_higgs},
        {13, "verify-all exits 0 with byte-identical reruns", 120, c13_cli},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string error;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = elapsed <= c.budget_s;
        const bool pass = ok && in_time;
        failures += pass ? 0 : 1;
        std::cout << "criterion " << std::setw(2) << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << std::fixed
                  << std::setprecision(3) << elapsed << " s (budget " << std::setprecision(0) << c.budget_s << " s)  "
                  << c.what;
        if (!error.empty()) std::cout << "  [exception: " << error << "]";
        else if (ok && !in_time) std::cout << "  [over budget]";
        std::cout << "\n";
    }
    return failures == 0 ? 0 : 1;
}
