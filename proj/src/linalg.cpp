#include "qwa/linalg.hpp"

namespace qwa {

namespace {

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    auto q = a.exact_quotient(b);
    if (!q) throw StructuralError("Bareiss step is not an exact division; input is not over an integral domain?");
    return *q;
}

// In-place Bareiss elimination on the first n columns of an n x m matrix.
// Returns the sign of the row permutation, or 0 if the leading block is singular.
int bareiss_eliminate(PolyMatrix& a) {
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    int sign = 1;
    Polynomial prev = Polynomial::constant(CycInt::one(a.zero().p()));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t j = 0; j < m; ++j) std::swap(a(k, j), a(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                Polynomial t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                a(i, j) = divide_exact(t, prev);
            }
            a(i, k) = a.zero();
        }
        prev = a(k, k);
    }
    return sign;
}

} // namespace

Polynomial bareiss_determinant(PolyMatrix a) {
    if (a.rows() != a.cols()) throw StructuralError("determinant of a non-square matrix");
    if (a.rows() == 0) return Polynomial::constant(CycInt::one(a.zero().p()));
    const int sign = bareiss_eliminate(a);
    if (sign == 0) return a.zero();
    Polynomial det = a(a.rows() - 1, a.rows() - 1);
    return sign > 0 ? det : -det;
}

std::optional<CycInt> unit_constant_inverse(const Polynomial& f) {
    if (f.is_zero() || *f.degree() != 0) return std::nullopt;
    const CycInt& c = f.coeffs()[0];
    if (!c.is_unit()) return std::nullopt;
    return CycInt::one(c.p()).exact_quotient(c);
}

PolyMatrix solve_unimodular(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n) throw StructuralError("solve: shape mismatch");
    const std::size_t r = b.cols();
    PolyMatrix aug(n, n + r, a.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < r; ++j) aug(i, n + j) = b(i, j);
    }
    const int sign = bareiss_eliminate(aug);
    if (sign == 0) throw UnitInversionError("solve: singular matrix");
    const Polynomial last = aug(n - 1, n - 1);
    auto inv = unit_constant_inverse(last);
    if (!inv) throw UnitInversionError("solve: determinant " + last.to_string() + " is not a unit of R");

    // y = det * x is integral (adjugate); back-substitute with exact divisions
    PolyMatrix x(n, r, a.zero());
    for (std::size_t col = 0; col < r; ++col) {
        for (std::size_t ii = n; ii-- > 0;) {
            Polynomial acc = last * aug(ii, n + col);
            for (std::size_t j = ii + 1; j < n; ++j) acc -= aug(ii, j) * x(j, col);
            x(ii, col) = divide_exact(acc, aug(ii, ii));
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < r; ++j) x(i, j) *= *inv;
    return x;
}

} // namespace qwa
