"""Independent sympy computations whose outputs are frozen into the C++ tests.

Run: python3 tests/oracles/cyclotomic_oracles.py
"""
import sympy as sp

q, y = sp.symbols("q y")


def phi(p):
    return sum(q**k for k in range(p))


def canon(expr, p):
    """Coefficients c_0..c_{p-2} of expr reduced mod Phi_p."""
    r = sp.rem(sp.expand(expr), phi(p), q)
    poly = sp.Poly(r, q)
    return [int(poly.coeff_monomial(q**k)) for k in range(p - 1)]


def qint(n):
    return sum(q**k for k in range(n))


def qfact(n):
    out = sp.Integer(1)
    for k in range(1, n + 1):
        out *= qint(k)
    return out


def transition_det(p):
    """det of the p^2 x p^2 matrix: column (a,b) is the action of x^a d^b on
    R[x] written over R[y], y = x^p, basis 1..x^{p-1}."""
    n = p * p
    M = sp.zeros(n, n)
    for a in range(p):
        for b in range(p):
            col = a * p + b
            for k in range(p):
                # d^b x^k = [k][k-1]...[k-b+1] x^{k-b}, then x^a
                if b > k:
                    continue
                c = sp.Integer(1)
                for t in range(b):
                    c *= qint(k - t)
                deg = k - b + a
                row = (deg % p) * p + k
                M[row, col] += c * y ** (deg // p)
    d = sp.expand(M.det(method="berkowitz"))
    d = sp.rem(d, phi(p), q)
    return sp.Poly(sp.expand(d), y, q)


if __name__ == "__main__":
    print("p=5 (1+q)(1+q^4):", canon((1 + q) * (1 + q**4), 5))
    print("p=5 [4]!:", canon(qfact(4), 5))
    for p in (2, 3):
        print(f"p={p} transition det:", transition_det(p))
