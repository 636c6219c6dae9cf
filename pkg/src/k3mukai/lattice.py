"""The algebraic Mukai lattice ``H^0 + Z.H + H^4`` of a K3 surface with ``Pic = Z.H``.

A vector ``(r, c, s)`` stands for ``(r, cH, s)`` with ``H^2 = 2g - 2``, and the
pairing is

    v.w = 2(g-1) c_v c_w - r_v s_w - r_w s_v.

Component order is always ``(r, c, s)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Union

from .errors import InconsistentDimension, InvalidGenus


@dataclass(frozen=True)
class AmbientGenus:
    """Genus ``g >= 2`` of the polarization, so that ``H^2 = 2g - 2``."""

    g: int

    def __post_init__(self):
        if not isinstance(self.g, int) or isinstance(self.g, bool):
            raise InvalidGenus(f"genus must be an integer, got {self.g!r}")
        if self.g < 2:
            raise InvalidGenus(f"genus must be >= 2, got {self.g}")

    @property
    def h_squared(self) -> int:
        return 2 * self.g - 2

    @property
    def is_even(self) -> bool:
        return self.g % 2 == 0

    @property
    def is_2_mod_4(self) -> bool:
        return self.g % 4 == 2

    def __int__(self) -> int:
        return self.g


GenusLike = Union[int, AmbientGenus]


def genus_value(g: GenusLike) -> int:
    """Validate ``g`` and return it as a plain int."""
    if isinstance(g, AmbientGenus):
        return g.g
    return AmbientGenus(g).g


@dataclass(frozen=True)
class MukaiVector:
    r: int
    c: int
    s: int

    def __iter__(self) -> Iterator[int]:
        yield self.r
        yield self.c
        yield self.s

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r + other.r, self.c + other.c, self.s + other.s)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r - other.r, self.c - other.c, self.s - other.s)

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(-self.r, -self.c, -self.s)

    def __mul__(self, k: int) -> "MukaiVector":
        return MukaiVector(k * self.r, k * self.c, k * self.s)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.r == 0 and self.c == 0 and self.s == 0

    def as_tuple(self) -> tuple:
        return (self.r, self.c, self.s)

    def to_dict(self) -> dict:
        return {"r": self.r, "c": self.c, "s": self.s}

    @classmethod
    def from_dict(cls, d: dict) -> "MukaiVector":
        return cls(int(d["r"]), int(d["c"]), int(d["s"]))

    @classmethod
    def parse(cls, text: str) -> "MukaiVector":
        """Parse ``"r,c,s"`` (parentheses and spaces allowed)."""
        parts = text.strip().strip("()").split(",")
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated integers, got {text!r}")
        return cls(*(int(p) for p in parts))

    def __str__(self) -> str:
        return f"({self.r},{self.c},{self.s})"


def vec(r: int, c: int, s: int) -> MukaiVector:
    return MukaiVector(r, c, s)


def mukai_pairing(v: MukaiVector, w: MukaiVector, g: GenusLike) -> int:
    g = genus_value(g)
    return 2 * (g - 1) * v.c * w.c - v.r * w.s - w.r * v.s


def square_norm(v: MukaiVector, g: GenusLike) -> int:
    g = genus_value(g)
    return 2 * (g - 1) * v.c * v.c - 2 * v.r * v.s


def gram_matrix(g: GenusLike) -> List[List[int]]:
    """Gram matrix of the pairing in the basis ``(1,0,0), (0,1,0), (0,0,1)``."""
    g = genus_value(g)
    return [[0, 0, -1], [0, 2 * (g - 1), 0], [-1, 0, 0]]


def pairing_functional(v: MukaiVector, g: GenusLike) -> List[int]:
    """Row ``f`` with ``f . (r, c, s) = v . (r, c, s)``."""
    g = genus_value(g)
    return [-v.s, 2 * (g - 1) * v.c, -v.r]


def moduli_dim(v: MukaiVector, g: GenusLike) -> int:
    """Expected dimension ``v^2 + 2`` of M(v); negative values mean empty."""
    return square_norm(v, g) + 2


def moduli_regime(dim: int) -> str:
    if dim < 0:
        return "empty"
    if dim == 0:
        return "rigid"
    if dim == 2:
        return "k3"
    return "ihs"


def n_from_v(v: MukaiVector, g: GenusLike) -> int:
    """Half-dimension ``n`` of M(v), from ``n - 1 = (g-1)c^2 - rs``."""
    g = genus_value(g)
    dim = moduli_dim(v, g)
    if dim < 2 or dim % 2:
        raise InconsistentDimension(f"dim M{v} = {dim} on genus {g}; need an even value >= 2")
    n = (g - 1) * v.c * v.c - v.r * v.s + 1
    if 2 * n != dim:
        raise InconsistentDimension(f"n = {n} disagrees with dim M(v) = {dim}")
    return n
