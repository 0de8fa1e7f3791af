#pragma once

// Finite-rank free modules on both sides of the splitting.
//
// A Higgs module is R[t]^r with a nilpotent R[t]-linear theta; t is the
// coordinate of the base and plays the role of x^p. A sigma-module is
// R[t]^m with matrices xAct, dAct satisfying dAct xAct - q xAct dAct = 1
// and xAct^p = t (so it is an R[x]-module through xAct).
//
// higgs_to_sigma substitutes x^p -> t and xi -> theta in the splitting
// matrices, blockwise. sigma_to_higgs cuts out the first block with the
// idempotent e1 = rho^{-1}(E11) evaluated at (xAct, dAct), then recovers
// theta from dAct^p = Phi(theta) by inverting the series Phi.

#include <optional>
#include <string>
#include <vector>

#include "qwa/linalg.hpp"
#include "qwa/qweyl.hpp"

namespace qwa {

class HiggsModule {
public:
    /// Throws InputError unless theta is square and theta^{r p} = 0.
    HiggsModule(int p, PolyMatrix theta);

    int p() const noexcept { return p_; }
    int rank() const noexcept { return static_cast<int>(theta_.rows()); }
    const PolyMatrix& theta() const noexcept { return theta_; }
    /// Least d with theta^d = 0.
    int nilpotency_index() const noexcept { return nilpotency_; }

private:
    int p_;
    PolyMatrix theta_;
    int nilpotency_;
};

class SigmaModule {
public:
    /// Checks shapes only; the relation is checked by verify_relation().
    SigmaModule(int p, PolyMatrix x_act, PolyMatrix d_act);

    int p() const noexcept { return p_; }
    int rank() const noexcept { return static_cast<int>(x_act_.rows()); }
    const PolyMatrix& x_act() const noexcept { return x_act_; }
    const PolyMatrix& d_act() const noexcept { return d_act_; }

    /// dAct xAct - q xAct dAct - 1.
    PolyMatrix relation_defect() const;
    bool verify_relation() const { return relation_defect().is_zero(); }
    /// xAct^p == t * 1.
    bool x_power_is_base() const;

    /// f(xAct) for f in R[x].
    PolyMatrix eval_x(const Polynomial& f) const;
    /// sum c x^i d^j -> sum c xAct^i dAct^j.
    PolyMatrix eval(const QWeylElement& P) const;

private:
    int p_;
    PolyMatrix x_act_;
    PolyMatrix d_act_;
};

PolyMatrix poly_identity(int p, int n);
/// Least d <= bound with m^d = 0, or nullopt.
std::optional<int> nilpotency_index(const PolyMatrix& m, int bound);

/// Series Phi(xi) = dAct^p scalar, coefficients in R[t], xi^0..xi^trunc.
std::vector<Polynomial> phi_series(const Prime& p, int trunc);
/// Compositional inverse of a series with zero constant term and unit
/// linear coefficient, modulo xi^{trunc+1}.
std::vector<Polynomial> series_inverse(const std::vector<Polynomial>& phi);
/// sum_k s_k(t) m^k.
PolyMatrix eval_series(const std::vector<Polynomial>& s, const PolyMatrix& m);

/// Throws InputError if trunc + 1 < nilpotency index.
SigmaModule higgs_to_sigma(const HiggsModule& h, std::optional<int> trunc = std::nullopt);

struct SigmaToHiggs {
    HiggsModule higgs;
    int trunc;               ///< truncation used for the projector and Phi
    QWeylElement projector;  ///< lift of E11
    std::string normalization;
};

/// Throws InputError when M violates its invariants and VerificationFailure
/// when the projector image is not the first coordinate block.
SigmaToHiggs sigma_to_higgs(const SigmaModule& m);

/// D(f g) == d(f) g + sigma(f) D(g) for the generator with the given index.
bool check_sigma_leibniz(const SigmaModule& m, const Polynomial& f, int generator);

/// dAct^d = 0 for some d <= bound. Default bound: m + p.
bool is_quasi_nilpotent(const SigmaModule& m, std::optional<int> bound = std::nullopt);

struct RoundtripCertificate {
    int p;
    int rank;
    int nilpotency_index;
    int trunc;
    bool relation;
    bool quasi_nilpotent;
    bool leibniz; ///< f in {1, x, x^2, x^p} on every generator
    bool dp_blockwise_scalar;
    bool theta_recovered;
    bool passed;
};

RoundtripCertificate roundtrip_check(const HiggsModule& h);

/// Nilpotent Jordan-type matrices with blocks of the given sizes.
PolyMatrix jordan_nilpotent(int p, const std::vector<int>& blocks);
/// Every partition of 1..max_rank, as Higgs modules.
std::vector<HiggsModule> jordan_corpus(int p, int max_rank);

} // namespace qwa
