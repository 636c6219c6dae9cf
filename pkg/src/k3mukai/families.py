"""Involution data: the rank ``2k+1`` family, Markman-O'Grady vectors, Hilbert schemes.

The rank ``2k+1`` family lives on genus ``g = 4 g0 + 2`` with

    v = (2k+1, k+1, g0 (2k+3) + k + 1),   v^2 = 2 (g0 - k(k+1)),

and ``Phi_{S,1}`` with ``s = (2, H, g/2)`` fixes ``v``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List

from .errors import AdmissibilityError, InvalidGenus
from .lattice import GenusLike, MukaiVector, genus_value, moduli_dim, n_from_v, square_norm


def family_vector(g0: int, k: int) -> MukaiVector:
    return MukaiVector(2 * k + 1, k + 1, g0 * (2 * k + 3) + k + 1)


def family_genus(g0: int) -> int:
    return 4 * g0 + 2


@dataclass(frozen=True)
class FamilyInstance:
    g0: int
    k: int
    g: int
    v: MukaiVector
    n: int
    delta: int
    v_squared: int
    admissible: bool = True

    @property
    def dim(self) -> int:
        return self.v_squared + 2

    @property
    def k3_moduli(self) -> bool:
        """True on the boundary ``v^2 = 0``, where M(v) is a K3 surface."""
        return self.v_squared == 0

    def to_dict(self) -> dict:
        return {
            "g0": self.g0,
            "k": self.k,
            "g": self.g,
            "v": self.v.to_dict(),
            "n": self.n,
            "delta": self.delta,
            "v_squared": self.v_squared,
            "admissible": self.admissible,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FamilyInstance":
        return cls(
            g0=int(d["g0"]),
            k=int(d["k"]),
            g=int(d["g"]),
            v=MukaiVector.from_dict(d["v"]),
            n=int(d["n"]),
            delta=int(d["delta"]),
            v_squared=int(d["v_squared"]),
            admissible=bool(d["admissible"]),
        )


def build_family_instance(g0: int, k: int) -> FamilyInstance:
    if g0 < 1 or k < 0:
        raise ValueError(f"need g0 >= 1 and k >= 0, got g0={g0}, k={k}")
    g = family_genus(g0)
    v = family_vector(g0, k)
    v2 = square_norm(v, g)
    if v2 < 0:
        raise AdmissibilityError(
            f"g0 = {g0} < k(k+1) = {k * (k + 1)} (v^2 = {v2} < 0)", g0=g0, k=k, v_squared=v2
        )
    return FamilyInstance(
        g0=g0,
        k=k,
        g=g,
        v=v,
        n=n_from_v(v, g),
        delta=gcd(v.r, v.s),
        v_squared=v2,
        admissible=True,
    )


def enumerate_families(g0_max: int, k_max: int) -> List[FamilyInstance]:
    """All admissible instances with ``1 <= g0 <= g0_max`` and ``0 <= k <= k_max``."""
    out = []
    for k in range(k_max + 1):
        # admissibility is g0 >= k(k+1)
        for g0 in range(max(1, k * (k + 1)), g0_max + 1):
            out.append(build_family_instance(g0, k))
    out.sort(key=lambda inst: (inst.g, inst.k))
    return out


def hilbert_scheme_n(g: GenusLike) -> int:
    """``n`` such that the ``k = 0`` involution acts on ``X^[n]``: ``(g + 2) / 4``."""
    g = genus_value(g)
    if g % 4 != 2:
        raise InvalidGenus(f"need g = 2 mod 4, got g={g}")
    return (g + 2) // 4


@dataclass(frozen=True)
class MarkmanInstance:
    g: int
    r: int
    v: MukaiVector
    dim: int
    regular: bool

    def to_dict(self) -> dict:
        return {"g": self.g, "r": self.r, "v": self.v.to_dict(), "dim": self.dim, "regular": self.regular}


def markman_instances(g: GenusLike) -> List[MarkmanInstance]:
    """Vectors ``(r, H, r)`` with ``dim M(v) = 2g - 2r^2 >= 0``.

    ``regular`` marks the window ``r^2 <= g < (r+1)^2`` where the involution is
    biregular; outside it only birationality is known.
    """
    g = genus_value(g)
    out = []
    r = 1
    while r * r <= g:
        v = MukaiVector(r, 1, r)
        out.append(MarkmanInstance(g, r, v, moduli_dim(v, g), g < (r + 1) ** 2))
        r += 1
    return out
