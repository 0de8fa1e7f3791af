#include "qwa/suite.hpp"

#include <algorithm>

#include "qwa/random.hpp"

namespace qwa {

namespace {

json status_json(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "inconclusive";
    }
}

json cert(const std::string& check, int p, bool passed) {
    return {{"check", check + "[p=" + std::to_string(p) + "]"}, {"p", p}, {"status", status_json(passed ? Status::pass : Status::fail)}};
}

QWeylElement mono(const CycInt& c, int i, int j) { return QWeylElement::monomial(c, i, j); }

std::uint64_t mix(std::uint64_t seed, int p) { return seed * 1000003ULL + static_cast<std::uint64_t>(p); }

json q_integer_laws(int p) {
    int failures = 0;
    if (!q_int(p, p).is_zero()) ++failures;
    if (!(CycInt::q_power(p, 1) * CycInt::q_power(p, p - 1)).is_one()) ++failures;
    for (int i = 1; i < p; ++i)
        if (!(q_int(p, i) * q_int_inverse(p, i)).is_one()) ++failures;
    json c = cert("q_integer_laws", p, failures == 0);
    c["failures"] = failures;
    return c;
}

json rewriting_identities(int p) {
    const CycInt one = CycInt::one(p);
    int checked = 0, failures = 0;
    for (int n = 1; n <= 2 * p; ++n) {
        checked += 2;
        if (mono(one, 0, n) * QWeylElement::x(p) != mono(q_int(p, n), 0, n - 1) + mono(CycInt::q_power(p, n), 1, n))
            ++failures;
        if (QWeylElement::delta(p) * mono(one, n, 0) != mono(q_int(p, n), n - 1, 0) + mono(CycInt::q_power(p, n), n, 1))
            ++failures;
    }
    for (const auto& [a, b] : {std::pair{mono(one, 0, p), QWeylElement::x(p)},
                               {QWeylElement::delta(p), mono(one, p, 0)},
                               {mono(one, 0, p), mono(one, p, 0)}}) {
        ++checked;
        if (!commutator(a, b).is_zero()) ++failures;
    }
    json c = cert("rewriting_identities", p, failures == 0);
    c["checked"] = checked;
    c["failures"] = failures;
    return c;
}

json center_characterization(int p, std::uint64_t seed) {
    Rng rng(mix(seed, p));
    int discrepancies = 0, central = 0;
    const int samples = 500;
    for (int t = 0; t < samples; ++t) {
        QWeylElement a = (t % 2 == 0) ? rng.weyl_element(p, 4, 2 * p) : rng.central_element(p, 3, 2);
        if (t % 4 == 3) a.add_term(static_cast<int>(rng.uniform(0, 2 * p)), static_cast<int>(rng.uniform(0, 2 * p)), rng.cyc_int(p));
        const bool z = is_central(a);
        central += z ? 1 : 0;
        if (z != has_central_exponents(a)) ++discrepancies;
        if (is_centralizing_Rx(a) != has_centralizing_exponents(a)) ++discrepancies;
    }
    json c = cert("center_characterization", p, discrepancies == 0);
    c["samples"] = samples;
    c["central_samples"] = central;
    c["discrepancies"] = discrepancies;
    return c;
}

json reduce_mod_p_check(int p, std::uint64_t seed) {
    Rng rng(mix(seed, p) + 7);
    int failures = 0;
    const int pairs = 200;
    for (int t = 0; t < pairs; ++t) {
        const auto a = rng.weyl_element(p, 4, 4);
        const auto b = rng.weyl_element(p, 4, 4);
        if (reduce_mod_p(a * b) != reduce_mod_p(a) * reduce_mod_p(b)) ++failures;
        if (reduce_mod_p(a + b) != reduce_mod_p(a) + reduce_mod_p(b)) ++failures;
    }
    const auto x = ClassicalWeylElement::x(p);
    const auto d = ClassicalWeylElement::partial(p);
    const bool relations = d * x == x * d + ClassicalWeylElement::one(p) &&
                           classical_commutator(ClassicalWeylElement::monomial(p, 1, 0, p), x).is_zero();
    json c = cert("reduce_mod_p", p, failures == 0 && relations);
    c["pairs"] = pairs;
    c["failures"] = failures;
    c["classical_relations"] = relations;
    return c;
}

json weyl_relation(int p, bool mutate) {
    json runs = json::array();
    bool all = true;
    for (int n : {1, 2, 3}) {
        SplitMatrix d = build_D(Prime(p), n);
        if (mutate) d(0, 1) += CenterElement::one(p, n);
        const bool ok = verify_weyl_relation(d, build_X(Prime(p), n));
        all = all && ok;
        runs.push_back({{"N", n}, {"status", status_json(ok ? Status::pass : Status::fail)}});
    }
    json c = cert("verify_weyl_relation", p, all);
    c["runs"] = runs;
    return c;
}

json lift(int p) {
    json runs = json::array();
    bool all = true;
    for (int n : {1, 2}) {
        const auto lc = verify_surjectivity_trunc(Prime(p), n);
        all = all && lc.passed;
        runs.push_back(to_json(lc));
    }
    json c = cert("verify_surjectivity_trunc", p, all);
    c["runs"] = runs;
    return c;
}

json sigma_power_check(int p) {
    const CycInt one_minus_q_p = (CycInt::one(p) - CycInt::q_power(p, 1)).pow(p);
    const QWeylElement sp = sigma_power(p, p);
    const bool closed = sp == QWeylElement::one(p) - mono(one_minus_q_p, p, p);
    bool scalar = true;
    for (int n : {1, 2}) {
        const SplitMatrix img = rho(sp, n);
        const PhiOnCenter phi = phi_on_center(Prime(p), n);
        const CenterElement expected = CenterElement::one(p, n) - one_minus_q_p * (phi.image_xp * phi.image_xi);
        scalar = scalar && img == Matrix<CenterElement>::identity(p, CenterElement(p, n), expected);
    }
    json c = cert("sigma_power", p, closed && scalar);
    c["closed_form"] = closed;
    c["rho_scalar"] = scalar;
    c["sigma_p"] = to_json(sp);
    return c;
}

json phi_check(int p) {
    const int n = 2;
    const PhiOnCenter phi = phi_on_center(Prime(p), n);
    const CentralizerElement phi_d = phi_of(QWeylElement::delta(p), n);
    bool delta_ok = static_cast<int>(phi_d.comps.size()) == p;
    for (int k = 0; k < p && delta_ok; ++k) {
        const CenterElement expected =
            k == p - 1 ? CenterElement::monomial(n, q_factorial_inverse(p, p - 1), 0, 1) : CenterElement(p, n);
        delta_ok = phi_d.comps[k] == expected;
    }
    json c = cert("phi_on_center", p, delta_ok && phi.xp_fixed && phi.xi_moved && phi.xi_invertible && phi.multiplicative);
    c["phi_of_delta"] = delta_ok;
    c["detail"] = to_json(phi);
    return c;
}

json higgs_roundtrip(int p) {
    json runs = json::array();
    bool all = true;
    for (const auto& h : jordan_corpus(p, 3)) {
        const auto rc = roundtrip_check(h);
        all = all && rc.passed;
        runs.push_back(to_json(rc));
    }
    json c = cert("higgs_roundtrip", p, all);
    c["modules"] = runs;
    return c;
}

} // namespace

json run_suite(const SuiteOptions& options) {
    std::vector<json> certs;
    for (int p : options.primes) {
        Prime(p).value();
        certs.push_back(q_integer_laws(p));
        certs.push_back(rewriting_identities(p));
        certs.push_back(center_characterization(p, options.seed));
        certs.push_back(reduce_mod_p_check(p, options.seed));
        certs.push_back(weyl_relation(p, options.mutate == "split-d"));
        {
            json c = to_json(verify_mod_I_isomorphism(Prime(p), options.mutate == "kill-delta"));
            c["check"] = "verify_mod_I_isomorphism[p=" + std::to_string(p) + "]";
            c["p"] = p;
            certs.push_back(c);
        }
        certs.push_back(lift(p));
        certs.push_back(sigma_power_check(p));
        certs.push_back(phi_check(p));
        if (p <= 3) {
            json k = to_json(verify_kaneda_mod_J(Prime(p)));
            k["check"] = "verify_kaneda_mod_J[p=" + std::to_string(p) + "]";
            certs.push_back(k);
            certs.push_back(higgs_roundtrip(p));
        }
        if (p == 2) {
            json c = to_json(options.mutate == "p2-inner" ? verify_p2_neutralization(1, 1) : verify_p2_neutralization());
            c["p"] = 2;
            certs.push_back(c);
        }
    }
    std::stable_sort(certs.begin(), certs.end(), [](const json& a, const json& b) {
        return a["check"].get<std::string>() < b["check"].get<std::string>();
    });

    json primes = json::array();
    for (int p : options.primes) primes.push_back(p);
    json report = {{"primes", primes}, {"seed", options.seed}, {"status", "pass"}, {"certificates", certs}};
    report["status"] = status_json(overall_status(report));
    return report;
}

Status overall_status(const json& report) {
    bool inconclusive = false;
    for (const auto& c : report.at("certificates")) {
        const auto s = c.at("status").get<std::string>();
        if (s == "fail") return Status::fail;
        if (s == "inconclusive") inconclusive = true;
    }
    return inconclusive ? Status::inconclusive : Status::pass;
}

int exit_code(Status s) {
    switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    default: return 3;
    }
}

} // namespace qwa
