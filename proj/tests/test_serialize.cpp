#include <doctest.h>

#include "qwa/random.hpp"
#include "qwa/serialize.hpp"

using namespace qwa;

TEST_CASE("CycInt round trip, small and big") {
    const CycInt a = CycInt::q_power(5, 2) - CycInt::from_int(5, 7);
    CHECK(cyc_from_json(5, to_json(a)) == a);
    CHECK(to_json(a).dump() == "[-7,0,1,0]");
    const CycInt big = q_factorial_inverse(13, 12).pow(40);
    const json j = to_json(big);
    CHECK(cyc_from_json(13, j) == big);
    bool has_string = false;
    for (const auto& v : j) has_string = has_string || v.is_string();
    CHECK(has_string);
    // raw input is canonicalized
    CHECK(cyc_from_json(3, json::parse("[0,0,1]")) == CycInt::q_power(3, 2));
    CHECK(cyc_from_json(3, json(4)) == CycInt::from_int(3, 4));
}

TEST_CASE("element round trips") {
    Rng rng(12);
    for (int p : {2, 3, 5})
        for (int t = 0; t < 20; ++t) {
            const auto e = rng.weyl_element(p, 5, 6);
            CHECK(weyl_from_json(to_json(e)) == e);
            const auto c = reduce_mod_p(e);
            CHECK(classical_from_json(to_json(c)) == c);
        }
    const auto zero = weyl_from_json(json::parse(R"({"p":3,"terms":[]})"));
    CHECK(zero.is_zero());
    const auto dx = weyl_from_json(json::parse(R"({"p":3,"terms":[{"x":1,"d":1,"c":[0,1]},{"x":0,"d":0,"c":[1,0]}]})"));
    CHECK(dx == QWeylElement::delta(3) * QWeylElement::x(3));
}

TEST_CASE("center, split matrix and modules round trip") {
    const SplitMatrix d = build_D(Prime(3), 2);
    CHECK(split_matrix_from_json(to_json(d)) == d);
    const CenterElement e = CenterElement::monomial(2, CycInt::q_power(3, 1), 1, 2);
    CHECK(center_from_json(to_json(e)) == e);

    const HiggsModule h(2, jordan_nilpotent(2, {2, 1}));
    const HiggsModule h2 = higgs_from_json(to_json(h));
    CHECK(h2.theta() == h.theta());
    const SigmaModule s = higgs_to_sigma(h);
    const SigmaModule s2 = sigma_from_json(to_json(s));
    CHECK(s2.x_act() == s.x_act());
    CHECK(s2.d_act() == s.d_act());
}

TEST_CASE("schema violations are input errors") {
    CHECK_THROWS_AS(weyl_from_json(json::parse(R"({"terms":[]})")), InputError);
    CHECK_THROWS_AS(weyl_from_json(json::parse(R"({"p":4,"terms":[]})")), InputError);
    CHECK_THROWS_AS(weyl_from_json(json::parse(R"({"p":3,"terms":[{"x":-1,"d":0,"c":[1]}]})")), InputError);
    CHECK_THROWS_AS(weyl_from_json(json::parse(R"({"p":3,"terms":[{"x":1,"d":0,"c":"abc"}]})")), InputError);
    CHECK_THROWS_AS(polynomial_from_json(3, json::parse(R"({"x":[1]})")), InputError);
    CHECK_THROWS_AS(higgs_from_json(json::parse(R"({"p":2,"theta":[[{"0":[1]}]]})")), InputError);
    CHECK_THROWS_AS(poly_matrix_from_json(2, json::parse(R"([[{}],[{},{}]])")), InputError);
}

TEST_CASE("certificates serialize") {
    const auto cert = to_json(verify_mod_I_isomorphism(Prime(3)));
    CHECK(cert["status"] == "pass");
    CHECK(cert["check"] == "verify_mod_I_isomorphism");
    const auto k = to_json(verify_kaneda_mod_J(Prime(3), 1, 1));
    CHECK(k["status"] == "inconclusive");
}
