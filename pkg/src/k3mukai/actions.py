"""Cohomological actions of derived (anti-)equivalences on the Mukai lattice.

Four generators act linearly on ``(r, c, s)``:

* ``Dual``       -- derived dual, ``(r, c, s) -> (r, -c, s)``
* ``Tensor(d)``  -- tensor with ``O(dH)``
* ``Shift``      -- ``[1]``, i.e. ``v -> -v``
* ``Reflect(s)`` -- ``x -> x + (x.s) s`` for a (-2)-vector ``s``; the spherical
  twist acts as ``-Reflect(s)``.

The involution ``Phi_{S,d}(E) = RHom(T_S(E), O(dH)[1])`` acts on Mukai vectors
as ``Tensor(d) o Shift o Dual o Reflect(s)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Union

from .errors import NotSpherical
from .intmat import IntegerMatrix, identity, matmul
from .lattice import (
    GenusLike,
    MukaiVector,
    genus_value,
    mukai_pairing,
    square_norm,
)


@dataclass(frozen=True)
class Dual:
    def apply(self, v: MukaiVector, g: int) -> MukaiVector:
        return MukaiVector(v.r, -v.c, v.s)

    def to_json(self):
        return "dual"

    def __str__(self):
        return "dual"


@dataclass(frozen=True)
class Shift:
    def apply(self, v: MukaiVector, g: int) -> MukaiVector:
        return -v

    def to_json(self):
        return "shift"

    def __str__(self):
        return "shift"


@dataclass(frozen=True)
class Tensor:
    d: int

    def apply(self, v: MukaiVector, g: int) -> MukaiVector:
        d = self.d
        return MukaiVector(
            v.r,
            v.c + d * v.r,
            v.s + d * d * (g - 1) * v.r + 2 * d * (g - 1) * v.c,
        )

    def to_json(self):
        return {"tensor": self.d}

    def __str__(self):
        return f"tensor:{self.d}"


@dataclass(frozen=True)
class Reflect:
    s: MukaiVector

    def apply(self, v: MukaiVector, g: int) -> MukaiVector:
        norm = square_norm(self.s, g)
        if norm != -2:
            raise NotSpherical(f"reflection vector {self.s} has square {norm} != -2 on genus {g}")
        return v + mukai_pairing(v, self.s, g) * self.s

    def to_json(self):
        return {"reflect": self.s.to_dict()}

    def __str__(self):
        return f"reflect:{self.s.r},{self.s.c},{self.s.s}"


Generator = Union[Dual, Shift, Tensor, Reflect]
EquivalenceWord = List[Generator]


def apply_generator(gen: Generator, v: MukaiVector, g: GenusLike) -> MukaiVector:
    return gen.apply(v, genus_value(g))


def apply_word(word: Sequence[Generator], v: MukaiVector, g: GenusLike) -> MukaiVector:
    """Apply generators in list order (the first one acts first)."""
    g = genus_value(g)
    for gen in word:
        v = gen.apply(v, g)
    return v


_BASIS = (MukaiVector(1, 0, 0), MukaiVector(0, 1, 0), MukaiVector(0, 0, 1))


def generator_matrix(gen: Generator, g: GenusLike) -> IntegerMatrix:
    g = genus_value(g)
    cols = [list(gen.apply(e, g)) for e in _BASIS]
    return [[cols[j][i] for j in range(3)] for i in range(3)]


def compile_word(word: Sequence[Generator], g: GenusLike) -> IntegerMatrix:
    """3x3 matrix ``M`` with ``apply_word(word, v) == M v``."""
    g = genus_value(g)
    m = identity(3)
    for gen in word:
        m = matmul(generator_matrix(gen, g), m)
    return m


def parse_word(text: str) -> EquivalenceWord:
    """Parse ``"reflect:2,1,5;dual;shift;tensor:1"`` (applied left to right)."""
    word: EquivalenceWord = []
    for token in (t.strip() for t in text.split(";")):
        if not token:
            continue
        name, _, arg = token.partition(":")
        name = name.strip().lower()
        if name == "dual" and not arg:
            word.append(Dual())
        elif name == "shift" and not arg:
            word.append(Shift())
        elif name == "tensor" and arg:
            word.append(Tensor(int(arg)))
        elif name == "reflect" and arg:
            word.append(Reflect(MukaiVector.parse(arg)))
        else:
            raise ValueError(f"bad generator {token!r}")
    return word


def word_to_json(word: Sequence[Generator]) -> list:
    return [gen.to_json() for gen in word]


def word_from_json(data) -> EquivalenceWord:
    if isinstance(data, str):
        data = json.loads(data)
    word: EquivalenceWord = []
    for item in data:
        if item == "dual":
            word.append(Dual())
        elif item == "shift":
            word.append(Shift())
        elif isinstance(item, dict) and set(item) == {"tensor"}:
            word.append(Tensor(int(item["tensor"])))
        elif isinstance(item, dict) and set(item) == {"reflect"}:
            word.append(Reflect(MukaiVector.from_dict(item["reflect"])))
        else:
            raise ValueError(f"bad generator {item!r}")
    return word


# --- the involution Phi_{S,d} -------------------------------------------------

UNIT_SPHERICAL = MukaiVector(1, 0, 1)


def rank_two_spherical(g: GenusLike) -> MukaiVector:
    g = genus_value(g)
    if g % 2:
        raise NotSpherical(f"(2,H,g/2) needs an even genus, got g={g}")
    return MukaiVector(2, 1, g // 2)


@dataclass(frozen=True)
class PhiConfig:
    """Spherical vector ``s``, twist degree ``d`` and genus ``g`` of ``Phi_{S,d}``."""

    s: MukaiVector
    d: int
    g: int

    def __post_init__(self):
        g = genus_value(self.g)
        object.__setattr__(self, "g", g)
        norm = square_norm(self.s, g)
        if norm != -2:
            raise NotSpherical(f"s = {self.s} has square {norm} != -2 on genus {g}")

    @property
    def case(self) -> Optional[str]:
        """``"i"`` for ``(O_X, 0)``, ``"ii"`` for ``((2,H,g/2), 1)``, else None."""
        if self.s == UNIT_SPHERICAL and self.d == 0:
            return "i"
        if self.g % 2 == 0 and self.s == MukaiVector(2, 1, self.g // 2) and self.d == 1:
            return "ii"
        return None

    @property
    def admissible(self) -> bool:
        return self.case is not None

    def word(self) -> EquivalenceWord:
        return [Reflect(self.s), Dual(), Shift(), Tensor(self.d)]

    def to_dict(self) -> dict:
        return {"s": self.s.to_dict(), "d": self.d, "g": self.g}


def phi_on_mukai(cfg: PhiConfig, v: MukaiVector) -> MukaiVector:
    return apply_word(cfg.word(), v, cfg.g)


def derive_admissible_configs(g: GenusLike) -> List[PhiConfig]:
    """Configurations making ``Phi_{S,d}`` involutive with ``d in {0, 1}``."""
    g = genus_value(g)
    configs = [PhiConfig(UNIT_SPHERICAL, 0, g)]
    if g % 2 == 0:
        configs.append(PhiConfig(rank_two_spherical(g), 1, g))
    return configs


def fixed_condition(cfg: PhiConfig, v: MukaiVector) -> Optional[bool]:
    """Linear criterion for ``v`` to be fixed by Phi, for admissible configs.

    Case i: ``r == s``. Case ii: ``2 s = (2g - 2) c - r (g/2 - 1)``.
    Returns None when the configuration is not one of the two admissible ones.
    """
    if cfg.case == "i":
        return v.r == v.s
    if cfg.case == "ii":
        g = cfg.g
        return 2 * v.s == (2 * g - 2) * v.c - v.r * (g // 2 - 1)
    return None


@dataclass(frozen=True)
class FixedReport:
    config: PhiConfig
    v: MukaiVector
    image: MukaiVector
    fixed: bool
    condition: Optional[bool]
    s_dot_v: int
    warnings: tuple = field(default=())

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "case": self.config.case,
            "v": self.v.to_dict(),
            "image": self.image.to_dict(),
            "fixed": self.fixed,
            "condition": self.condition,
            "s_dot_v": self.s_dot_v,
            "warnings": list(self.warnings),
        }


def fixed_report(cfg: PhiConfig, v: MukaiVector) -> FixedReport:
    image = phi_on_mukai(cfg, v)
    sv = mukai_pairing(cfg.s, v, cfg.g)
    warnings = []
    if sv == 0:
        warnings.append("s.v = 0: outside the hypothesis s.v != 0 of the fixed-vector criterion")
    if not cfg.admissible:
        warnings.append("configuration is not one of the two involutive ones")
    return FixedReport(cfg, v, image, image == v, fixed_condition(cfg, v), sv, tuple(warnings))


@dataclass(frozen=True)
class NormalizedConfig:
    s: MukaiVector
    d: int
    v: MukaiVector
    m: int
    g: int

    def config(self) -> PhiConfig:
        return PhiConfig(self.s, self.d, self.g)

    def to_dict(self) -> dict:
        return {"s": self.s.to_dict(), "d": self.d, "v": self.v.to_dict(), "m": self.m, "g": self.g}


def normalize_config(s: MukaiVector, d: int, v: MukaiVector, g: GenusLike) -> NormalizedConfig:
    """Conjugate by ``O(mH)`` so the twist degree ``d + 2m`` lands in ``{0, 1}``.

    ``(S, O(dH), v)`` becomes ``(S(mH), O((d+2m)H), v.ch(O(mH)))``.
    """
    g = genus_value(g)
    norm = square_norm(s, g)
    if norm != -2:
        raise NotSpherical(f"s = {s} has square {norm} != -2 on genus {g}")
    m = -(d // 2)
    t = Tensor(m)
    return NormalizedConfig(t.apply(s, g), d + 2 * m, t.apply(v, g), m, g)


__all__ = [
    "Dual",
    "Shift",
    "Tensor",
    "Reflect",
    "Generator",
    "EquivalenceWord",
    "apply_generator",
    "apply_word",
    "generator_matrix",
    "compile_word",
    "parse_word",
    "word_to_json",
    "word_from_json",
    "PhiConfig",
    "phi_on_mukai",
    "derive_admissible_configs",
    "fixed_condition",
    "FixedReport",
    "fixed_report",
    "NormalizedConfig",
    "normalize_config",
    "rank_two_spherical",
    "UNIT_SPHERICAL",
]
