#pragma once

// Desk-scale checks of the Azumaya map Q (x) Q' -> (P -> Q P Q').
//
// D_q is viewed as a left module over the centralizer Z(R[x]) = R[x, d^p],
// free with basis 1, d, ..., d^{p-1}: P = sum_k z_k d^k. A tensor term
// pairs a centralizer element Q (acting on the left) with an arbitrary
// Q' in D_q (acting on the right), so every P -> Q P Q' is Z(R[x])-linear.
// Endomorphisms are p x p matrices over Z(R[x]) localized at sigma^p;
// column k holds the coordinates of the image of d^k.

#include <functional>
#include <string>
#include <vector>

#include "qwa/classical.hpp"
#include "qwa/matrix.hpp"
#include "qwa/qweyl.hpp"

namespace qwa {

struct TensorTerm {
    QWeylElement left;  ///< in R[x, d^p]
    QWeylElement right; ///< any element of D_q
};

class TensorElement {
public:
    explicit TensorElement(int p) : p_(p) {}
    TensorElement(QWeylElement left, QWeylElement right);

    int p() const noexcept { return p_; }
    const std::vector<TensorTerm>& terms() const noexcept { return terms_; }

    /// Throws StructuralError unless `left` centralizes R[x].
    void add(QWeylElement left, QWeylElement right);

    TensorElement& operator+=(const TensorElement& b);
    TensorElement& operator-=(const TensorElement& b);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const CycInt& c, const TensorElement& t);

    /// sum Q (Q' a): right factors multiplied on the right by a.
    TensorElement times_right(const QWeylElement& a) const;
    /// Composition (this o other): P -> Q1 Q2 P Q2' Q1'.
    TensorElement compose(const TensorElement& other) const;

    /// P -> sum Q P Q'.
    QWeylElement apply(const QWeylElement& P) const;

private:
    int p_;
    std::vector<TensorTerm> terms_;
};

/// Coordinates z_0..z_{p-1} in R[x, d^p] with P = sum z_k d^k.
std::vector<QWeylElement> left_coordinates(const QWeylElement& P);
QWeylElement from_left_coordinates(const std::vector<QWeylElement>& z);

/// Endomorphism numerator / (sigma^p)^sigma_power.
class BimoduleEndo {
public:
    BimoduleEndo(Matrix<QWeylElement> numerator, int sigma_power = 0);

    /// Matrix of a Z(R[x])-linear map, from its values on 1, d, ..., d^{p-1}.
    static BimoduleEndo from_map(int p, const std::function<QWeylElement(const QWeylElement&)>& f);
    static BimoduleEndo identity(int p);

    int p() const { return numerator_.zero().p(); }
    const Matrix<QWeylElement>& numerator() const noexcept { return numerator_; }
    int sigma_power() const noexcept { return sigma_power_; }

    /// Cross-multiplied equality; sigma^p is a non-zero-divisor.
    friend bool operator==(const BimoduleEndo& a, const BimoduleEndo& b);
    friend bool operator!=(const BimoduleEndo& a, const BimoduleEndo& b) { return !(a == b); }
    friend BimoduleEndo operator*(const BimoduleEndo& a, const BimoduleEndo& b);
    friend BimoduleEndo operator-(const BimoduleEndo& a, const BimoduleEndo& b);

    std::string to_string() const;

private:
    Matrix<QWeylElement> numerator_;
    int sigma_power_;
};

BimoduleEndo tensor_to_endo(const TensorElement& t);

/// Determinant of a square matrix over a commutative subring of D_q
/// (Leibniz expansion; meant for the 4 x 4 coordinate check).
QWeylElement commutative_determinant(const Matrix<QWeylElement>& m);

struct IdentityCheck {
    std::string name;
    std::string reading; ///< which parsing of the expression was validated
    bool passed;
    std::string detail;
};

struct P2Certificate {
    std::vector<IdentityCheck> identities;
    QWeylElement basis_determinant;
    int sigma_exponent;     ///< basis_determinant = unit * (sigma^2)^sigma_exponent
    CycInt unit;
    bool basis_ok;
    bool passed;
};

/// The four p = 2 matrices E1..E4 (entries sigma^2 on one slot each).
std::vector<BimoduleEndo> p2_targets();
/// u = (1 (x) x - x (x) 1) + 2 [x (x) xd - x^2 (x) d], with the integer 2
/// and 1 replaced by the given coefficients (mutation harness).
TensorElement p2_u(long outer = 1, long inner = 2);
P2Certificate verify_p2_neutralization(long outer = 1, long inner = 2);

struct KanedaPreimage {
    int row;
    int col;
    /// (lambda, c, d, a, b): lambda * x^c dd^{pd} (x) x^a dd^b.
    struct Term {
        int lambda;
        int c, d, a, b;
    };
    std::vector<Term> terms;
    bool found;
};

struct KanedaCertificate {
    int p;
    int degree_bound; ///< last bound tried
    std::vector<KanedaPreimage> units;
    bool passed;       ///< every matrix unit has a verified preimage
    bool inconclusive; ///< some unit has no preimage within the bound
};

/// Image of x^c dd^{pd} (x) x^a dd^b in End over F_p[x, dd^p]:
/// column k holds left coordinates of x^c dd^{pd} . dd^k . x^a dd^b.
Matrix<ClassicalWeylElement> classical_tensor_image(int p, int c, int d, int a, int b);

/// Bounded search for preimages of all p^2 matrix units under the mod-J
/// tensor map. Tries bound 3p, then 6p.
KanedaCertificate verify_kaneda_mod_J(const Prime& p);
KanedaCertificate verify_kaneda_mod_J(const Prime& p, int initial_bound, int attempts);

} // namespace qwa
