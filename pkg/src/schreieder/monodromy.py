"""Integer 2x2 matrices, the presentation of the monodromy group, and cusp data.

The monodromy group of ``X_c`` is generated by parabolic classes attached to
the singular fibers, subject to one product relation.  What can be checked
without realizing the relation by explicit matrices:

* every class representative is unimodular with trace +-2;
* the relation survives abelianization, ``SL(2, Z)^ab = Z/12``;
* the cusp widths give index, genus and (Wohlfahrt) level.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import fibers as fc
from .errors import DomainError, InconsistentConfiguration, NonUnimodular
from .fibers import JValue
from .invariants import SurfaceConfig, schreieder_config

__all__ = [
    "IntMatrix2",
    "IDENTITY",
    "S",
    "T",
    "mat_mul",
    "mat_inv",
    "mat_trace",
    "mat_conj",
    "st_word",
    "abelianization",
    "Presentation",
    "gamma_presentation",
    "presentation_from_config",
    "abelianization_check",
    "CuspSignature",
    "cusp_signature",
    "signature_from_config",
]


@dataclass(frozen=True)
class IntMatrix2:
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_rows(cls, rows) -> IntMatrix2:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __matmul__(self, other: IntMatrix2) -> IntMatrix2:
        return IntMatrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> IntMatrix2:
        return IntMatrix2(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, k: int) -> IntMatrix2:
        base = self if k >= 0 else mat_inv(self)
        out = IDENTITY
        for _ in range(abs(k)):
            out = out @ base
        return out

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


IDENTITY = IntMatrix2(1, 0, 0, 1)
S = IntMatrix2(0, -1, 1, 0)
T = IntMatrix2(1, 1, 0, 1)


def _check(*ms: IntMatrix2):
    for m in ms:
        if m.det != 1:
            raise NonUnimodular(f"{m} has determinant {m.det}")


def mat_mul(x: IntMatrix2, y: IntMatrix2) -> IntMatrix2:
    _check(x, y)
    return x @ y


def mat_inv(x: IntMatrix2) -> IntMatrix2:
    _check(x)
    return IntMatrix2(x.d, -x.b, -x.c, x.a)


def mat_trace(x: IntMatrix2) -> int:
    _check(x)
    return x.trace


def mat_conj(x: IntMatrix2, h: IntMatrix2) -> IntMatrix2:
    """``h x h^-1``."""
    _check(x, h)
    return h @ x @ mat_inv(h)


def st_word(m: IntMatrix2) -> list[tuple[str, int]]:
    """Write ``m`` as a word in ``S`` and ``T``: list of ``(letter, exponent)``.

    Euclid on the first column: ``S T^-q`` reduces ``(a, c)`` to ``(c, a - q c)``
    up to sign.  What remains is ``+-T^k``; ``-Id`` is recorded as ``S^2``.
    """
    _check(m)
    word: list[tuple[str, int]] = []
    cur = m
    while cur.c != 0:
        q = cur.a // cur.c
        # cur = T^q S (S^-1 T^-q cur), and S^-1 T^-q cur has lower-left a - q c
        word.append(("T", q))
        word.append(("S", 1))
        cur = mat_inv(S) @ IntMatrix2(1, -q, 0, 1) @ cur
    if cur.a == -1:
        word.append(("S", 2))
        cur = -cur
    word.append(("T", cur.b))
    return [(x, k) for x, k in word if k]


def abelianization(m: IntMatrix2) -> int:
    """Image of ``m`` in ``SL(2, Z)^ab = Z/12`` with ``T -> 1`` (hence ``S -> 9``)."""
    weights = {"T": 1, "S": 9}
    return sum(weights[x] * k for x, k in st_word(m)) % 12


@dataclass(frozen=True)
class Presentation:
    """Named class representatives and the single relation ``A_0 A_1 ... A_inf = Id``."""

    classes: tuple[tuple[str, IntMatrix2], ...]

    @property
    def relation(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.classes)

    def relation_string(self) -> str:
        return "".join(self.relation) + "=Id"


def presentation_from_config(cfg: SurfaceConfig) -> Presentation:
    """One parabolic class per ``I_b`` / ``I_b*`` fiber, in placement order."""
    classes = []
    index = 0
    for p in cfg.placements:
        if fc.j_value(p.fiber) is not JValue.INFINITY:
            raise DomainError(f"{p.fiber} has no parabolic monodromy class")
        rep = IntMatrix2.from_rows(fc.monodromy_class(p.fiber))
        for _ in range(p.count):
            classes.append((f"A_{p.label}" if p.count == 1 else f"A_{index + 1}", rep))
            if p.count > 1:
                index += 1
    return Presentation(tuple(classes))


def gamma_presentation(c: int) -> Presentation:
    """``A_0 ~ T^(4*3^c)``, ``A_1..A_(3^c) ~ T``, ``A_inf ~ -T^(3^c)``, in relation order."""
    cfg = schreieder_config(c)
    # relation order: 0, then the roots of unity, then infinity
    order = {"0": 0, "inf": 2}
    placements = tuple(sorted(cfg.placements, key=lambda p: order.get(p.label, 1)))
    return presentation_from_config(SurfaceConfig(cfg.base_genus, placements, cfg.has_section))


def abelianization_check(p: Presentation) -> bool:
    """Necessary condition for the relation: the class images sum to 0 in Z/12."""
    return sum(abelianization(m) for _, m in p.classes) % 12 == 0


@dataclass(frozen=True)
class CuspSignature:
    """Cusp data of a finite-index subgroup; ``index`` is the width sum (PSL index)."""

    cusp_widths: tuple[int, ...]
    cusp_count: int
    index: int
    genus: int
    level: int

    @classmethod
    def from_widths(cls, widths) -> CuspSignature:
        """Genus by the torsion-free formula ``1 + index/12 - cusps/2``."""
        widths = tuple(sorted(widths, reverse=True))
        if not widths or any(w < 1 for w in widths):
            raise DomainError("cusp widths must be positive and nonempty")
        index = sum(widths)
        genus = 1 + Fraction(index, 12) - Fraction(len(widths), 2)
        if genus.denominator != 1 or genus < 0:
            raise InconsistentConfiguration(f"genus formula gives {genus}")
        return cls(widths, len(widths), index, int(genus), lcm(*widths))

    def width_multiset(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for w in self.cusp_widths:
            out[w] = out.get(w, 0) + 1
        return out

    def as_dict(self) -> dict:
        return {
            "cuspWidths": [{"width": w, "count": k}
                           for w, k in sorted(self.width_multiset().items(), reverse=True)],
            "cuspCount": self.cusp_count,
            "index": self.index,
            "indexConvention": "PSL(2,Z) index = sum of cusp widths",
            "genus": self.genus,
            "level": self.level,
        }


def signature_from_config(cfg: SurfaceConfig) -> CuspSignature:
    """Cusps sit under the poles of ``j``; the width is the pole order ``b``."""
    widths = []
    for p in cfg.placements:
        if fc.j_value(p.fiber) is JValue.INFINITY:
            widths.extend([p.fiber.b] * p.count)
    return CuspSignature.from_widths(widths)


def cusp_signature(c: int) -> CuspSignature:
    return signature_from_config(schreieder_config(c))
