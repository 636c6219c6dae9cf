"""Independent reference computations used as test oracles.

None of these import the code paths they check.
"""
from math import gcd, isqrt

import sympy


def mukai_gram(g):
    """Gram matrix written down from H^2 = 2g - 2 and the pairing
    (r, c, s).(r', c', s') = c c' H^2 - r s' - r' s."""
    h2 = 2 * g - 2
    return sympy.Matrix([[0, 0, -1], [0, h2, 0], [-1, 0, 0]])


def pair(v, w, g):
    return int((sympy.Matrix([v]) * mukai_gram(g) * sympy.Matrix(w))[0, 0])


def ch_product(v, d, g):
    """Multiply the graded class (r, cH, s) by ch(O(dH)) = (1, dH, d^2 H^2 / 2).

    Degree-4 part: s + r d^2 H^2/2 + (cH)(dH), with H.H = 2g - 2.
    """
    r, c, s = v
    h2 = 2 * g - 2
    top = sympy.Rational(s) + sympy.Rational(r * d * d * h2, 2) + c * d * h2
    assert top.q == 1
    return (r, c + d * r, int(top))


def reflection_matrix(s, g):
    """I + s s^T G: the map x -> x + (x.s) s."""
    G = mukai_gram(g)
    col = sympy.Matrix(s)
    return sympy.eye(3) + col * (col.T * G)


def dual_matrix():
    return sympy.diag(1, -1, 1)


def tensor_matrix(d, g):
    cols = [ch_product(e, d, g) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    return sympy.Matrix(cols).T


def phi_matrix(s, d, g):
    """Tensor(d) . (-1) . Dual . Reflect(s) as a sympy matrix."""
    return tensor_matrix(d, g) * (-sympy.eye(3)) * dual_matrix() * reflection_matrix(s, g)


def chakravala(D):
    """Fundamental solution of z^2 - D y^2 = 1 by the cyclic (chakravala) method."""
    a = isqrt(D)
    if a * a == D:
        raise ValueError("square D")
    if (a + 1) ** 2 - D < D - a * a:
        a += 1
    b, k = 1, a * a - D
    while k != 1:
        absk = abs(k)
        # m = b' with a + b m = 0 mod |k|, minimizing |m^2 - D|
        m0 = next(m for m in range(absk) if (a + b * m) % absk == 0)
        root = isqrt(D)
        candidates = []
        base = m0 + ((root - m0) // absk) * absk
        for m in (base - absk, base, base + absk, base + 2 * absk):
            if m > 0:
                candidates.append(m)
        m = min(candidates, key=lambda x: abs(x * x - D))
        a, b, k = (a * m + D * b) // absk, (a + b * m) // absk, (m * m - D) // k
    return abs(a), abs(b)


def brute_pell(D, y_max):
    """Smallest y <= y_max with 1 + D y^2 a perfect square, or None."""
    for y in range(1, y_max + 1):
        z2 = 1 + D * y * y
        z = isqrt(z2)
        if z * z == z2:
            return z, y
    return None


def squares_mod(m):
    return {(x * x) % m for x in range(m)}


def snf_sympy(rows):
    from sympy.matrices.normalforms import smith_normal_form

    M = sympy.Matrix(rows)
    D = smith_normal_form(M, domain=sympy.ZZ)
    k = min(M.shape)
    return sorted(abs(int(D[i, i])) for i in range(k))


def is_primitive(v):
    return gcd(*v) == 1
