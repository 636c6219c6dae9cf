"""Picard lattice of M(v) and the invariant lattice of the rank-two involution.

For ``v`` fixed by ``Phi_{S,1}`` (``s = (2, H, g/2)``) the classes

    d_v = (2, 1, g/2 - 1),   f_v = (v0, 0, -v2) / delta,   delta = gcd(v0, v2)

span ``v^perp`` inside the algebraic Mukai lattice, so they give a basis of
``Pic(M(v))`` with determinant ``-4 (g-1)(n-1) / delta^2``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Dict, List, Optional, Tuple

from .actions import Dual, Reflect, Tensor, fixed_condition, PhiConfig, rank_two_spherical
from .errors import InconsistentDimension, MukaiError, NotInComplement, NotInvertible
from .families import FamilyInstance
from .intmat import determinant, hermite_kernel
from .lattice import GenusLike, MukaiVector, genus_value, mukai_pairing, n_from_v, pairing_functional


def d_vector(g: GenusLike) -> MukaiVector:
    g = genus_value(g)
    return MukaiVector(2, 1, g // 2 - 1)


def f_vector(v: MukaiVector) -> MukaiVector:
    delta = gcd(v.r, v.s)
    if delta == 0:
        raise ValueError("f_v is undefined when v0 = v2 = 0")
    return MukaiVector(v.r // delta, 0, -v.s // delta)


@dataclass(frozen=True)
class PicardData:
    g: int
    v: MukaiVector
    d_v: MukaiVector
    f_v: MukaiVector
    gram: Tuple[Tuple[int, int], Tuple[int, int]]
    discriminant: int
    delta: int
    n: int

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "v": self.v.to_dict(),
            "d_v": self.d_v.to_dict(),
            "f_v": self.f_v.to_dict(),
            "gram": [list(row) for row in self.gram],
            "discriminant": self.discriminant,
            "delta": self.delta,
            "n": self.n,
        }


def picard_data_for_vector(v: MukaiVector, g: GenusLike) -> PicardData:
    g = genus_value(g)
    if g % 2:
        raise MukaiError(f"the rank-two involution needs an even genus, got g={g}")
    if not fixed_condition(PhiConfig(rank_two_spherical(g), 1, g), v):
        raise MukaiError(f"v = {v} does not satisfy 2 v2 = (2g-2) v1 - v0 (g/2 - 1) on genus {g}")
    n = n_from_v(v, g)
    delta = gcd(v.r, v.s)
    # closed-form entries
    off, rem_off = divmod(2 * v.s - (g // 2 - 1) * v.r, delta)
    ff, rem_ff = divmod(2 * v.r * v.s, delta * delta)
    if rem_off or rem_ff:
        raise InconsistentDimension(f"non-integral Picard Gram entry for v = {v}, g = {g}")
    gram = ((2, off), (off, ff))
    return PicardData(
        g=g,
        v=v,
        d_v=d_vector(g),
        f_v=f_vector(v),
        gram=gram,
        discriminant=determinant(gram),
        delta=delta,
        n=n,
    )


def picard_data(inst: FamilyInstance) -> PicardData:
    return picard_data_for_vector(inst.v, inst.g)


def expected_discriminant(g: int, n: int, delta: int) -> int:
    num = -4 * (g - 1) * (n - 1)
    q, rem = divmod(num, delta * delta)
    if rem:
        raise InconsistentDimension(f"delta^2 = {delta * delta} does not divide 4(g-1)(n-1) = {-num}")
    return q


def orthogonal_complement(v: MukaiVector, g: GenusLike) -> List[MukaiVector]:
    """Saturated basis of ``{x : v.x = 0}`` in the rank-3 algebraic lattice."""
    g = genus_value(g)
    if v.is_zero():
        raise ValueError("orthogonal complement of the zero vector is the whole lattice")
    kernel = hermite_kernel([pairing_functional(v, g)])
    return [MukaiVector(*col) for col in zip(*kernel)]


def reflection_map(x: MukaiVector, g: GenusLike) -> MukaiVector:
    """``R_S o D o T`` with ``T`` = tensor by ``O(-H)`` and ``s = (2, H, g/2)``."""
    g = genus_value(g)
    x = Tensor(-1).apply(x, g)
    x = Dual().apply(x, g)
    return Reflect(rank_two_spherical(g)).apply(x, g)


def reflection_closed_form(x: MukaiVector, g: GenusLike) -> MukaiVector:
    """``-x + (d_v . x) d_v``."""
    g = genus_value(g)
    d = d_vector(g)
    return -x + mukai_pairing(d, x, g) * d


def reflection_identity_holds(x: MukaiVector, v: MukaiVector, g: GenusLike) -> bool:
    """Compare both sides of the identity at ``x``; ``x`` must lie in ``v^perp``."""
    g = genus_value(g)
    if mukai_pairing(v, x, g) != 0:
        raise NotInComplement(f"x = {x} is not orthogonal to v = {v} on genus {g}")
    return reflection_map(x, g) == reflection_closed_form(x, g)


@dataclass(frozen=True)
class ReflectionCheck:
    holds: bool
    basis: Tuple[MukaiVector, ...]
    witness: Optional[MukaiVector] = None

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "basis": [b.to_dict() for b in self.basis],
            "witness": self.witness.to_dict() if self.witness else None,
        }


def verify_reflection_identity(inst: FamilyInstance) -> ReflectionCheck:
    basis = tuple(orthogonal_complement(inst.v, inst.g))
    for x in basis:
        if not reflection_identity_holds(x, inst.v, inst.g):
            return ReflectionCheck(False, basis, x)
    return ReflectionCheck(True, basis)


# --- modular arithmetic -----------------------------------------------------


def mod_inverse(a: int, m: int) -> int:
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if gcd(a, m) != 1:
        raise NotInvertible(f"{a} is not invertible modulo {m}")
    return pow(a, -1, m)


@lru_cache(maxsize=4096)
def _factorize(m: int) -> Tuple[Tuple[int, int], ...]:
    out: Dict[int, int] = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return tuple(out.items())


def _square_mod_prime_power(a: int, p: int, e: int) -> bool:
    pe = p**e
    a %= pe
    if a == 0:
        return True
    t = 0
    while a % p == 0:
        a //= p
        t += 1
    if t % 2:
        return False
    rest = e - t
    if p == 2:
        if rest == 1:
            return True
        if rest == 2:
            return a % 4 == 1
        return a % 8 == 1
    return pow(a, (p - 1) // 2, p) == 1


def residue_is_square(a: int, m: int) -> bool:
    """Whether ``x^2 = a (mod m)`` has a solution (``0`` counts as a square)."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    return all(_square_mod_prime_power(a, p, e) for p, e in _factorize(m))


# --- invariant lattice classification ----------------------------------------


@dataclass(frozen=True)
class ClassificationResult:
    """Invariant-lattice types not excluded by the necessary conditions.

    ``possible`` lists lattice types ``(m)`` (rank one, generator of square
    ``m``); it is a set of candidates, not a determination.
    """

    n: int
    delta: int
    possible: Tuple[str, ...]
    reasons: Dict[str, dict] = field(default_factory=dict)
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "possible": list(self.possible),
            "reasons": self.reasons,
        }


def _lattice_label(m: int) -> str:
    return f"({m})"


def classify_invariant(inst: FamilyInstance) -> ClassificationResult:
    g, n, delta = inst.g, inst.n, inst.delta
    if n < 2:
        raise InconsistentDimension(f"classification needs dim M(v) >= 4, got n = {n}")
    reasons: Dict[str, dict] = {"(2)": {"lattice": "(2)", "included": True, "why": "always possible"}}
    if n == 2:
        reasons["note"] = {"why": "n = 2: the (n-1) and (2(n-1)) cases require n > 2"}
        return ClassificationResult(n, delta, ("(2)",), reasons, degenerate=True)

    m = n - 1
    possible = ["(2)"]

    # rank-one lattice of square 2(n-1)
    key, label = "(2(n-1))", _lattice_label(2 * m)
    if delta != 1:
        reasons[key] = {"lattice": label, "included": False, "why": f"delta = {delta} != 1"}
    else:
        residue = (-mod_inverse(g - 1, m)) % m
        square = residue_is_square(residue, m)
        reasons[key] = {
            "lattice": label,
            "included": square,
            "residue": residue,
            "modulus": m,
            "why": f"-1/(g-1) = {residue} mod {m} is {'a square' if square else 'not a square'}",
        }
        if square:
            possible.append(label)

    # rank-one lattice of square n-1 (n even only)
    key, label = "(n-1)", _lattice_label(m)
    if n % 2:
        reasons[key] = {"lattice": label, "included": False, "why": f"n = {n} is odd"}
    elif delta != 1:
        reasons[key] = {"lattice": label, "included": False, "why": f"delta = {delta} != 1"}
    else:
        residue = (-mod_inverse(2 * (g - 1), m)) % m
        square = residue_is_square(residue, m)
        reasons[key] = {
            "lattice": label,
            "included": square,
            "residue": residue,
            "modulus": m,
            "why": f"-1/(2(g-1)) = {residue} mod {m} is {'a square' if square else 'not a square'}",
        }
        if square:
            possible.append(label)

    possible.sort(key=lambda lab: int(lab.strip("()")))
    return ClassificationResult(n, delta, tuple(possible), reasons)
