#pragma once

// Explicit splitting of the I-adically completed quantum Weyl algebra:
// delta and x act on the centralizer module (basis 1, x, ..., x^{p-1})
// through the matrices D and X below, realized modulo xi^{N+1}.
//
//   D: d_{i,i+1} = [i] + q^i x^p xi / [p-1]!   (1 <= i <= p-1)
//      d_{p,1}   = xi / [p-1]!
//   X: x_{1,p}   = x^p,   x_{i,i-1} = 1        (2 <= i <= p)
//
// Matrices act on column vectors; column k is the image of the k-th basis
// vector.

#include <vector>

#include "qwa/center.hpp"
#include "qwa/linalg.hpp"
#include "qwa/matrix.hpp"
#include "qwa/qweyl.hpp"

namespace qwa {

inline constexpr int kDefaultTrunc = 3;

using SplitMatrix = Matrix<CenterElement>;

SplitMatrix split_zero(int p, int trunc);
SplitMatrix split_identity(int p, int trunc);

SplitMatrix build_D(const Prime& p, int trunc);
SplitMatrix build_X(const Prime& p, int trunc);

/// D X - q X D - I for the given pair of matrices.
SplitMatrix weyl_relation_defect(const SplitMatrix& d, const SplitMatrix& x);
bool verify_weyl_relation(const Prime& p, int trunc);
bool verify_weyl_relation(const SplitMatrix& d, const SplitMatrix& x);

/// Evaluates the normal form of P at (X, D): the homomorphism delta -> D, x -> X.
class Rho {
public:
    Rho(const Prime& p, int trunc);
    /// Uses caller-supplied matrices (mutation harness).
    Rho(SplitMatrix d, SplitMatrix x);

    SplitMatrix operator()(const QWeylElement& P) const;
    const SplitMatrix& d() const noexcept { return d_; }
    const SplitMatrix& x() const noexcept { return x_; }

private:
    SplitMatrix d_;
    SplitMatrix x_;
};

SplitMatrix rho(const QWeylElement& P, int trunc);

/// Matrix of act(P, .) on R[x] in the R[x^p]-basis 1, ..., x^{p-1};
/// entries are polynomials in x^p.
PolyMatrix action_matrix_mod_I(const QWeylElement& P);

/// Entrywise xi -> 0, read as polynomials in x^p.
PolyMatrix reduce_mod_xi(const SplitMatrix& m);

struct ModICertificate {
    int p;
    Polynomial determinant;
    CycInt unit_inverse; ///< witness: determinant * unit_inverse = 1
    Integer norm;        ///< N(determinant) = +-1
    bool passed;
};

/// The p^2 x p^2 matrix over R[x^p] whose column (a, b) is the flattened
/// action matrix of x^a d^b, 0 <= a, b < p.
/// kill_delta replaces the action of d by zero (mutation harness).
PolyMatrix mod_I_transition_matrix(const Prime& p, bool kill_delta = false);
ModICertificate verify_mod_I_isomorphism(const Prime& p, bool kill_delta = false);

struct LiftedUnit {
    int row;
    int col;
    QWeylElement preimage;
    SplitMatrix residual; ///< rho(preimage) - E_{row,col} mod xi^{N+1}
};

struct LiftCertificate {
    int p;
    int trunc;
    std::vector<LiftedUnit> units;
    bool passed;
};

/// Preimages under rho of every matrix unit E_kl, lifted xi-degree by
/// xi-degree from the mod-I inverse.
LiftCertificate verify_surjectivity_trunc(const Prime& p, int trunc);
/// Preimage of a single target, same procedure.
QWeylElement lift_preimage(const Prime& p, int trunc, const SplitMatrix& target);

/// rho(P) applied to the basis vector 1.
CentralizerElement phi_of(const QWeylElement& P, int trunc);

struct PhiOnCenter {
    CenterElement image_xp; ///< X^p = image_xp * I
    CenterElement image_xi; ///< D^p = image_xi * I
    bool xp_fixed;          ///< image_xp == x^p
    bool xi_moved;          ///< image_xi != xi
    bool xi_invertible;     ///< image_xi = xi * (1 + O(xi)) up to truncation
    bool multiplicative;    ///< rho(x^p d^p) == image_xp * image_xi * I
};

/// Throws VerificationFailure if X^p or D^p is not scalar.
PhiOnCenter phi_on_center(const Prime& p, int trunc);

} // namespace qwa
