#include "qwa/higgs.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qwa/splitting.hpp"

namespace qwa {

PolyMatrix poly_identity(int p, int n) {
    return PolyMatrix::identity(n, Polynomial(p), Polynomial::constant(CycInt::one(p)));
}

std::optional<int> nilpotency_index(const PolyMatrix& m, int bound) {
    const int p = m.zero().p();
    PolyMatrix power = poly_identity(p, static_cast<int>(m.rows()));
    for (int d = 0; d <= bound; ++d) {
        if (power.is_zero()) return d;
        power = power * m;
    }
    return std::nullopt;
}

namespace {

Polynomial t_power(int p, int k) { return Polynomial::monomial(CycInt::one(p), k); }

PolyMatrix scaled(const Polynomial& f, const PolyMatrix& m) {
    return m.map([&](const Polynomial& e) { return f * e; });
}

PolyMatrix block(const PolyMatrix& m, int r, int bi, int bj) {
    PolyMatrix out(r, r, m.zero());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) out(i, j) = m(bi * r + i, bj * r + j);
    return out;
}

void set_block(PolyMatrix& m, int r, int bi, int bj, const PolyMatrix& b) {
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m(bi * r + i, bj * r + j) = b(i, j);
}

std::vector<Polynomial> series_mul(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, int n) {
    const int p = a.front().p();
    std::vector<Polynomial> out(n + 1, Polynomial(p));
    for (int i = 0; i <= n && i < int(a.size()); ++i)
        for (int j = 0; i + j <= n && j < int(b.size()); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<Polynomial> compose(const std::vector<Polynomial>& phi, const std::vector<Polynomial>& psi, int n) {
    const int p = phi.front().p();
    std::vector<Polynomial> out(n + 1, Polynomial(p));
    std::vector<Polynomial> power(n + 1, Polynomial(p));
    power[0] = Polynomial::constant(CycInt::one(p));
    for (int k = 0; k < int(phi.size()) && k <= n; ++k) {
        for (int i = 0; i <= n; ++i) out[i] += phi[k] * power[i];
        power = series_mul(power, psi, n);
    }
    return out;
}

} // namespace

// ------------------------------------------------------------------ modules

HiggsModule::HiggsModule(int p, PolyMatrix theta) : p_(p), theta_(std::move(theta)), nilpotency_(0) {
    if (theta_.rows() != theta_.cols() || theta_.rows() == 0) throw InputError("theta must be a non-empty square matrix");
    const auto d = qwa::nilpotency_index(theta_, rank() * p_);
    if (!d) throw InputError("theta is not nilpotent within the bound rank * p");
    nilpotency_ = *d;
}

SigmaModule::SigmaModule(int p, PolyMatrix x_act, PolyMatrix d_act)
    : p_(p), x_act_(std::move(x_act)), d_act_(std::move(d_act)) {
    const auto n = x_act_.rows();
    if (n == 0 || x_act_.cols() != n || d_act_.rows() != n || d_act_.cols() != n)
        throw InputError("xAct and dAct must be square matrices of the same size");
}

PolyMatrix SigmaModule::relation_defect() const {
    const Polynomial q = Polynomial::constant(CycInt::q_power(p_, 1));
    return d_act_ * x_act_ - scaled(q, x_act_ * d_act_) - poly_identity(p_, rank());
}

bool SigmaModule::x_power_is_base() const {
    return x_act_.pow(p_, Polynomial::constant(CycInt::one(p_))) == scaled(t_power(p_, 1), poly_identity(p_, rank()));
}

PolyMatrix SigmaModule::eval_x(const Polynomial& f) const {
    PolyMatrix out(rank(), rank(), Polynomial(p_));
    const auto& c = f.coeffs();
    for (auto k = c.size(); k-- > 0;) {
        out = out * x_act_;
        for (int i = 0; i < rank(); ++i) out(i, i) += Polynomial::constant(c[k]);
    }
    return out;
}

PolyMatrix SigmaModule::eval(const QWeylElement& P) const {
    std::vector<PolyMatrix> xs{poly_identity(p_, rank())}, ds{poly_identity(p_, rank())};
    auto power = [](std::vector<PolyMatrix>& cache, const PolyMatrix& m, int k) -> const PolyMatrix& {
        while (int(cache.size()) <= k) cache.push_back(cache.back() * m);
        return cache[k];
    };
    PolyMatrix out(rank(), rank(), Polynomial(p_));
    for (const auto& [e, c] : P.terms()) {
        const PolyMatrix term = power(xs, x_act_, e.x) * power(ds, d_act_, e.d);
        out += scaled(Polynomial::constant(c), term);
    }
    return out;
}

// ------------------------------------------------------------------- series

std::vector<Polynomial> phi_series(const Prime& p, int trunc) {
    const CenterElement phi = phi_on_center(p, trunc).image_xi;
    std::vector<Polynomial> out;
    for (int k = 0; k <= trunc; ++k) out.push_back(phi.xi_coefficient(k));
    return out;
}

std::vector<Polynomial> series_inverse(const std::vector<Polynomial>& phi) {
    const int n = static_cast<int>(phi.size()) - 1;
    const int p = phi.front().p();
    if (n < 1 || !phi[0].is_zero()) throw InputError("series must have zero constant term");
    const auto lead = unit_constant_inverse(phi[1]);
    if (!lead) throw UnitInversionError("linear coefficient of the series is not a unit");
    std::vector<Polynomial> psi(n + 1, Polynomial(p));
    psi[1] = Polynomial::constant(*lead);
    for (int k = 2; k <= n; ++k) {
        const auto err = compose(phi, psi, n);
        psi[k] -= *lead * err[k];
    }
    return psi;
}

PolyMatrix eval_series(const std::vector<Polynomial>& s, const PolyMatrix& m) {
    const int p = m.zero().p();
    PolyMatrix out(m.rows(), m.cols(), m.zero());
    PolyMatrix power = poly_identity(p, static_cast<int>(m.rows()));
    for (const auto& c : s) {
        if (!c.is_zero()) out += scaled(c, power);
        power = power * m;
    }
    return out;
}

// ------------------------------------------------------------------ functors

SigmaModule higgs_to_sigma(const HiggsModule& h, std::optional<int> trunc) {
    const int p = h.p();
    const int r = h.rank();
    const int n = trunc.value_or(std::max(kDefaultTrunc, h.nilpotency_index()));
    if (n < 1) throw InputError("truncation must be at least 1");
    if (n + 1 < h.nilpotency_index()) throw InputError("truncation below the nilpotency index of theta");

    std::vector<PolyMatrix> theta_pow{poly_identity(p, r)};
    for (int k = 1; k <= n; ++k) theta_pow.push_back(theta_pow.back() * h.theta());

    // x^p -> t, xi -> theta
    auto substitute = [&](const CenterElement& e) {
        PolyMatrix out(r, r, Polynomial(p));
        for (const auto& [key, c] : e.terms())
            out += scaled(Polynomial::monomial(c, key.first), theta_pow[key.second]);
        return out;
    };
    auto assemble = [&](const SplitMatrix& s) {
        PolyMatrix out(p * r, p * r, Polynomial(p));
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                if (!s(i, j).is_zero()) set_block(out, r, i, j, substitute(s(i, j)));
        return out;
    };
    const Prime prime(p);
    return SigmaModule(p, assemble(build_X(prime, n)), assemble(build_D(prime, n)));
}

SigmaToHiggs sigma_to_higgs(const SigmaModule& m) {
    const int p = m.p();
    if (m.rank() % p != 0) throw InputError("sigma-module rank is not a multiple of p");
    if (!m.verify_relation()) throw InputError("dAct xAct - q xAct dAct != 1");
    if (!m.x_power_is_base()) throw InputError("xAct^p is not multiplication by the base variable");
    const int r = m.rank() / p;

    const PolyMatrix dp = m.d_act().pow(p, Polynomial::constant(CycInt::one(p)));
    const auto nilp = nilpotency_index(dp, m.rank());
    if (!nilp) throw InputError("dAct^p is not nilpotent; the module is not quasi-nilpotent");
    const int n = std::max(1, *nilp - 1);
    const Prime prime(p);

    SplitMatrix e11 = split_zero(p, n);
    e11(0, 0) = CenterElement::one(p, n);
    const QWeylElement projector = lift_preimage(prime, n, e11);
    const PolyMatrix pi = m.eval(projector);
    for (int i = 0; i < m.rank(); ++i)
        for (int j = 0; j < m.rank(); ++j) {
            const bool in_block = i < r;
            const Polynomial expected =
                (j < r && i == j) ? Polynomial::constant(CycInt::one(p)) : Polynomial(p);
            if ((j < r || !in_block) && pi(i, j) != expected)
                throw VerificationFailure("projector image is not the first coordinate block");
        }

    const PolyMatrix restricted = block(dp, r, 0, 0);
    const PolyMatrix theta = eval_series(series_inverse(phi_series(prime, n)), restricted);
    return SigmaToHiggs{HiggsModule(p, theta), n, projector,
                        "theta = Psi(dAct^p on the image of e1), Psi the compositional inverse of "
                        "Phi(xi) = D^p; the inv([p-1]!) factors of D are absorbed by Phi"};
}

bool check_sigma_leibniz(const SigmaModule& m, const Polynomial& f, int generator) {
    if (generator < 0 || generator >= m.rank()) throw InputError("generator index out of range");
    const PolyMatrix lhs = m.d_act() * m.eval_x(f);
    const PolyMatrix rhs = m.eval_x(delta_act(f)) + m.eval_x(sigma_act(f)) * m.d_act();
    for (int i = 0; i < m.rank(); ++i)
        if (lhs(i, generator) != rhs(i, generator)) return false;
    return true;
}

bool is_quasi_nilpotent(const SigmaModule& m, std::optional<int> bound) {
    return nilpotency_index(m.d_act(), bound.value_or(m.rank() + m.p())).has_value();
}

RoundtripCertificate roundtrip_check(const HiggsModule& h) {
    const int p = h.p();
    const int r = h.rank();
    const SigmaModule s = higgs_to_sigma(h);
    RoundtripCertificate cert{p, r, h.nilpotency_index(), 0, s.verify_relation(), is_quasi_nilpotent(s), true,
                              false, false, false};

    const Polynomial x = Polynomial::variable(p);
    for (const Polynomial& f : {Polynomial::constant(CycInt::one(p)), x, x * x, Polynomial::monomial(CycInt::one(p), p)})
        for (int g = 0; g < s.rank(); ++g) cert.leibniz = cert.leibniz && check_sigma_leibniz(s, f, g);

    try {
        const SigmaToHiggs back = sigma_to_higgs(s);
        cert.trunc = back.trunc;
        cert.theta_recovered = back.higgs.theta() == h.theta();
        const PolyMatrix phi_theta = eval_series(phi_series(Prime(p), back.trunc), h.theta());
        PolyMatrix expected(p * r, p * r, Polynomial(p));
        for (int b = 0; b < p; ++b) set_block(expected, r, b, b, phi_theta);
        cert.dp_blockwise_scalar = s.d_act().pow(p, Polynomial::constant(CycInt::one(p))) == expected;
    } catch (const VerificationFailure&) {
        cert.theta_recovered = false;
    }
    cert.passed = cert.relation && cert.quasi_nilpotent && cert.leibniz && cert.dp_blockwise_scalar && cert.theta_recovered;
    return cert;
}

// ------------------------------------------------------------------- corpus

PolyMatrix jordan_nilpotent(int p, const std::vector<int>& blocks) {
    int n = 0;
    for (int b : blocks) n += b;
    PolyMatrix m(n, n, Polynomial(p));
    int offset = 0;
    for (int b : blocks) {
        for (int i = 0; i + 1 < b; ++i) m(offset + i, offset + i + 1) = Polynomial::constant(CycInt::one(p));
        offset += b;
    }
    return m;
}

std::vector<HiggsModule> jordan_corpus(int p, int max_rank) {
    std::vector<HiggsModule> out;
    std::function<void(int, int, std::vector<int>&)> partitions = [&](int rest, int largest, std::vector<int>& parts) {
        if (rest == 0) {
            out.emplace_back(p, jordan_nilpotent(p, parts));
            return;
        }
        for (int k = std::min(rest, largest); k >= 1; --k) {
            parts.push_back(k);
            partitions(rest - k, k, parts);
            parts.pop_back();
        }
    };
    for (int n = 1; n <= max_rank; ++n) {
        std::vector<int> parts;
        partitions(n, n, parts);
    }
    return out;
}

} // namespace qwa
