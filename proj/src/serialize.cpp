#include "qwa/serialize.hpp"

#include <limits>

namespace qwa {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int int_field(const json& j, const char* key, int lo = 0) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
    const long long n = v.get<long long>();
    if (n < lo || n > std::numeric_limits<int>::max())
        throw InputError(std::string("field \"") + key + "\" out of range");
    return static_cast<int>(n);
}

const json& array_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
    return v;
}

json status(bool passed, bool inconclusive = false) {
    return passed ? "pass" : (inconclusive ? "inconclusive" : "fail");
}

} // namespace

// ---------------------------------------------------------------- scalars

json integer_to_json(const Integer& n) {
    if (n.fits_slong_p()) return static_cast<long long>(n.get_si());
    return n.get_str();
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw InputError("expected an integer or a decimal string, got " + j.dump());
}

json to_json(const CycInt& c) {
    json a = json::array();
    for (const auto& v : c.coeffs()) a.push_back(integer_to_json(v));
    return a;
}

CycInt cyc_from_json(int p, const json& j) {
    if (j.is_number_integer() || j.is_string()) return CycInt::from_int(p, integer_from_json(j));
    if (!j.is_array() || j.empty()) throw InputError("coefficient must be a non-empty integer array");
    std::vector<Integer> raw;
    for (const auto& v : j) raw.push_back(integer_from_json(v));
    return CycInt::from_raw(p, raw);
}

int prime_field(const json& j) {
    const int p = int_field(j, "p");
    return Prime(p).value();
}

// --------------------------------------------------------------- elements

json to_json(const QWeylElement& e) {
    json terms = json::array();
    for (const auto& [ex, c] : e.terms()) terms.push_back({{"x", ex.x}, {"d", ex.d}, {"c", to_json(c)}});
    return {{"p", e.p()}, {"terms", terms}};
}

QWeylElement weyl_from_json(const json& j) {
    const int p = prime_field(j);
    QWeylElement e(p);
    for (const auto& t : array_field(j, "terms")) e.add_term(int_field(t, "x"), int_field(t, "d"), cyc_from_json(p, field(t, "c")));
    return e;
}

json to_json(const ClassicalWeylElement& e) {
    json terms = json::array();
    for (const auto& [ex, c] : e.terms()) terms.push_back({{"x", ex.x}, {"d", ex.d}, {"c", c}});
    return {{"p", e.p()}, {"terms", terms}};
}

ClassicalWeylElement classical_from_json(const json& j) {
    const int p = prime_field(j);
    ClassicalWeylElement e(p);
    for (const auto& t : array_field(j, "terms")) {
        const json& c = field(t, "c");
        if (!c.is_number_integer()) throw InputError("classical coefficient must be an integer");
        e.add_term(int_field(t, "x"), int_field(t, "d"), c.get<long>());
    }
    return e;
}

json center_terms_json(const CenterElement& e) {
    json terms = json::array();
    for (const auto& [k, c] : e.terms()) terms.push_back({{"xp", k.first}, {"xi", k.second}, {"c", to_json(c)}});
    return terms;
}

json to_json(const CenterElement& e) { return {{"p", e.p()}, {"N", e.trunc()}, {"terms", center_terms_json(e)}}; }

namespace {

CenterElement center_terms_from_json(int p, int n, const json& terms) {
    if (!terms.is_array()) throw InputError("center terms must be an array");
    CenterElement e(p, n);
    for (const auto& t : terms) e.add_term(int_field(t, "xp"), int_field(t, "xi"), cyc_from_json(p, field(t, "c")));
    return e;
}

} // namespace

CenterElement center_from_json(const json& j) {
    return center_terms_from_json(prime_field(j), int_field(j, "N"), array_field(j, "terms"));
}

json to_json(const SplitMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(center_terms_json(m(i, k)));
        rows.push_back(row);
    }
    return {{"p", m.zero().p()}, {"N", m.zero().trunc()}, {"rows", rows}};
}

SplitMatrix split_matrix_from_json(const json& j) {
    const int p = prime_field(j);
    const int n = int_field(j, "N");
    const json& rows = array_field(j, "rows");
    if (rows.empty() || !rows[0].is_array()) throw InputError("matrix rows must be non-empty arrays");
    SplitMatrix m(rows.size(), rows[0].size(), CenterElement(p, n));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != m.cols()) throw InputError("ragged matrix");
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = center_terms_from_json(p, n, rows[i][k]);
    }
    return m;
}

// ------------------------------------------------------------ polynomials

json to_json(const Polynomial& f) {
    json o = json::object();
    for (std::size_t k = 0; k < f.coeffs().size(); ++k)
        if (!f.coeffs()[k].is_zero()) o[std::to_string(k)] = to_json(f.coeffs()[k]);
    return o;
}

Polynomial polynomial_from_json(int p, const json& j) {
    if (!j.is_object()) throw InputError("polynomial must be an object mapping degrees to coefficients");
    Polynomial f(p);
    for (const auto& [key, value] : j.items()) {
        int deg = -1;
        try {
            std::size_t used = 0;
            deg = std::stoi(key, &used);
            if (used != key.size()) deg = -1;
        } catch (const std::exception&) {
        }
        if (deg < 0) throw InputError("polynomial degree key \"" + key + "\" is not a non-negative integer");
        f.set_coeff(deg, f.coeff(deg) + cyc_from_json(p, value));
    }
    return f;
}

json to_json(const PolyMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

PolyMatrix poly_matrix_from_json(int p, const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
        throw InputError("matrix must be a non-empty array of non-empty rows");
    PolyMatrix m(j.size(), j[0].size(), Polynomial(p));
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != m.cols()) throw InputError("ragged matrix");
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = polynomial_from_json(p, j[i][k]);
    }
    return m;
}

json to_json(const HiggsModule& h) {
    return {{"p", h.p()}, {"rank", h.rank()}, {"theta", to_json(h.theta())}, {"nilpotency_index", h.nilpotency_index()}};
}

HiggsModule higgs_from_json(const json& j) {
    const int p = prime_field(j);
    PolyMatrix theta = poly_matrix_from_json(p, field(j, "theta"));
    if (j.contains("rank") && int_field(j, "rank") != static_cast<int>(theta.rows()))
        throw InputError("rank does not match the size of theta");
    return HiggsModule(p, std::move(theta));
}

json to_json(const SigmaModule& m) {
    return {{"p", m.p()}, {"rank", m.rank()}, {"xAct", to_json(m.x_act())}, {"dAct", to_json(m.d_act())}};
}

SigmaModule sigma_from_json(const json& j) {
    const int p = prime_field(j);
    SigmaModule m(p, poly_matrix_from_json(p, field(j, "xAct")), poly_matrix_from_json(p, field(j, "dAct")));
    if (j.contains("rank") && int_field(j, "rank") != m.rank()) throw InputError("rank does not match the matrices");
    return m;
}

// ----------------------------------------------------------- certificates

json to_json(const ModICertificate& c) {
    return {{"check", "verify_mod_I_isomorphism"},
            {"status", status(c.passed)},
            {"p", c.p},
            {"determinant", to_json(c.determinant)},
            {"unit_inverse", to_json(c.unit_inverse)},
            {"norm", integer_to_json(c.norm)}};
}

json to_json(const LiftCertificate& c) {
    json units = json::array();
    for (const auto& u : c.units) {
        bool zero = true;
        for (std::size_t i = 0; i < u.residual.rows(); ++i)
            for (std::size_t k = 0; k < u.residual.cols(); ++k) zero = zero && u.residual(i, k).is_zero();
        units.push_back({{"row", u.row}, {"col", u.col}, {"preimage", to_json(u.preimage)}, {"residual_zero", zero}});
    }
    return {{"check", "verify_surjectivity_trunc"}, {"status", status(c.passed)}, {"p", c.p}, {"N", c.trunc}, {"units", units}};
}

json to_json(const PhiOnCenter& c) {
    const bool ok = c.xp_fixed && c.xi_moved && c.xi_invertible && c.multiplicative;
    const bool too_coarse = !c.xi_moved && c.image_xi.trunc() < 2;
    return {{"check", "phi_on_center"},
            {"status", status(ok, too_coarse)},
            {"image_xp", to_json(c.image_xp)},
            {"image_xi", to_json(c.image_xi)},
            {"xp_fixed", c.xp_fixed},
            {"xi_moved", c.xi_moved},
            {"xi_invertible", c.xi_invertible},
            {"multiplicative", c.multiplicative}};
}

json to_json(const P2Certificate& c) {
    json ids = json::array();
    for (const auto& i : c.identities)
        ids.push_back({{"name", i.name}, {"status", status(i.passed)}, {"reading", i.reading}, {"detail", i.detail}});
    return {{"check", "verify_p2_neutralization"},
            {"status", status(c.passed)},
            {"identities", ids},
            {"basis_determinant", to_json(c.basis_determinant)},
            {"sigma_exponent", c.sigma_exponent},
            {"unit", to_json(c.unit)},
            {"basis_ok", c.basis_ok}};
}

json to_json(const KanedaCertificate& c) {
    json units = json::array();
    for (const auto& u : c.units) {
        json terms = json::array();
        for (const auto& t : u.terms)
            terms.push_back({{"lambda", t.lambda}, {"c", t.c}, {"d", t.d}, {"a", t.a}, {"b", t.b}});
        units.push_back({{"row", u.row}, {"col", u.col}, {"found", u.found}, {"terms", terms}});
    }
    return {{"check", "verify_kaneda_mod_J"},
            {"status", status(c.passed, c.inconclusive)},
            {"p", c.p},
            {"degree_bound", c.degree_bound},
            {"units", units}};
}

json to_json(const RoundtripCertificate& c) {
    return {{"check", "roundtrip"},
            {"status", status(c.passed)},
            {"p", c.p},
            {"rank", c.rank},
            {"nilpotency_index", c.nilpotency_index},
            {"N", c.trunc},
            {"relation", c.relation},
            {"quasi_nilpotent", c.quasi_nilpotent},
            {"leibniz", c.leibniz},
            {"dp_blockwise_scalar", c.dp_blockwise_scalar},
            {"theta_recovered", c.theta_recovered}};
}

} // namespace qwa
