"""Kodaira's catalogue of singular fibers of an elliptic fibration.

Each fiber type carries its component count, topological Euler number,
component group, monodromy class and the value the j-invariant takes
beneath it.  Dual graphs (with component multiplicities) are available
for every type and double as an independent check on the tabulated data.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import DomainError, UnsupportedFiber

__all__ = [
    "KodairaFiber",
    "ComponentGroup",
    "DualGraph",
    "JValue",
    "I",
    "I_star",
    "parse_fiber",
    "components",
    "euler_number",
    "component_group",
    "monodromy_class",
    "j_value",
    "dual_graph",
    "fiber_to_dot",
]

_ADDITIVE = {"II": 1, "III": 2, "IV": 3, "IV*": 7, "III*": 8, "II*": 9}
KINDS = ("I", "I*") + tuple(_ADDITIVE)


@dataclass(frozen=True, order=True)
class KodairaFiber:
    kind: str
    b: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown Kodaira type {self.kind!r}")
        if self.b < 0:
            raise DomainError("fiber parameter must be nonnegative")
        if self.kind in _ADDITIVE and self.b:
            raise DomainError(f"type {self.kind} takes no parameter")

    @property
    def is_smooth(self) -> bool:
        return self.kind == "I" and self.b == 0

    @property
    def is_multiplicative(self) -> bool:
        return self.kind == "I" and self.b > 0

    def __str__(self):
        if self.kind == "I":
            return f"I_{self.b}"
        if self.kind == "I*":
            return f"I_{self.b}*"
        return self.kind


def I(b: int) -> KodairaFiber:  # noqa: E741,E743
    return KodairaFiber("I", b)


def I_star(b: int) -> KodairaFiber:
    return KodairaFiber("I*", b)


_FIBER_RE = re.compile(r"^I_?(\d+)(\*?)$")


def parse_fiber(text: str) -> KodairaFiber:
    """Parse ``I_36``, ``I9*``, ``I_0*``, ``III*`` and friends."""
    text = text.strip()
    if text in _ADDITIVE:
        return KodairaFiber(text)
    m = _FIBER_RE.match(text)
    if not m:
        raise DomainError(f"cannot parse fiber type {text!r}")
    return KodairaFiber("I*" if m.group(2) else "I", int(m.group(1)))


@dataclass(frozen=True)
class ComponentGroup:
    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        n = 1
        for k in self.invariant_factors:
            n *= k
        return n

    @property
    def is_cyclic(self) -> bool:
        return len([k for k in self.invariant_factors if k > 1]) <= 1

    def __str__(self):
        factors = [k for k in self.invariant_factors if k > 1]
        return " x ".join(f"Z/{k}" for k in factors) if factors else "0"


class JValue(str, enum.Enum):
    ZERO = "0"
    J1728 = "1728"
    INFINITY = "inf"
    UNCONSTRAINED = "finite"


def components(f: KodairaFiber) -> int:
    """Number of irreducible components; a smooth fiber counts as one."""
    if f.kind == "I":
        return max(f.b, 1)
    if f.kind == "I*":
        return f.b + 5
    return _ADDITIVE[f.kind]


def euler_number(f: KodairaFiber) -> int:
    if f.is_smooth:
        return 0
    if f.kind == "I":
        return components(f)
    return components(f) + 1


def _require_semistable_or_star(f: KodairaFiber):
    if f.kind not in ("I", "I*") or f.is_smooth:
        raise UnsupportedFiber(f"{f} is not of type I_b (b>0) or I_b*")


def component_group(f: KodairaFiber) -> ComponentGroup:
    _require_semistable_or_star(f)
    if f.kind == "I":
        return ComponentGroup((f.b,))
    return ComponentGroup((2, 2) if f.b % 2 == 0 else (4,))


def monodromy_class(f: KodairaFiber) -> tuple[tuple[int, int], tuple[int, int]]:
    """Upper-triangular representative of the local monodromy's conjugacy class."""
    _require_semistable_or_star(f)
    if f.kind == "I":
        return ((1, f.b), (0, 1))
    return ((-1, -f.b), (0, -1))


def j_value(f: KodairaFiber) -> JValue:
    if f.kind in ("I", "I*"):
        return JValue.INFINITY if f.b > 0 else JValue.UNCONSTRAINED
    if f.kind in ("III", "III*"):
        return JValue.J1728
    return JValue.ZERO


@dataclass(frozen=True)
class DualGraph:
    """Components with multiplicities and their intersection matrix."""

    multiplicities: tuple[int, ...]
    intersection: tuple[tuple[int, ...], ...]

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        n = len(self.multiplicities)
        return [(i, j, self.intersection[i][j])
                for i in range(n) for j in range(i + 1, n) if self.intersection[i][j]]


def _graph(mults, edges, loops=()):
    n = len(mults)
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        M[i][i] = -2 if n > 1 else 0
    for i, j in edges:
        M[i][j] += 1
        M[j][i] += 1
    return DualGraph(tuple(mults), tuple(tuple(r) for r in M))


def _star_graph(arms, centre_mult, arm_mults):
    # a centre node with arms; arm_mults[k] lists multiplicities moving outward
    mults = [centre_mult]
    edges = []
    for arm in arm_mults[:arms]:
        prev = 0
        for m in arm:
            mults.append(m)
            edges.append((prev, len(mults) - 1))
            prev = len(mults) - 1
    return _graph(mults, edges)


def dual_graph(f: KodairaFiber) -> DualGraph:
    """Dual graph: affine Dynkin diagram of type A, D or E (smooth: one node)."""
    if f.kind == "I":
        b = f.b
        if b <= 1:
            return _graph([1], [])
        return _graph([1] * b, [(i, (i + 1) % b) for i in range(b)])
    if f.kind == "I*":
        # chain of b+1 double components, two simple leaves at each end
        b = f.b
        mults = [2] * (b + 1) + [1, 1, 1, 1]
        edges = [(i, i + 1) for i in range(b)]
        edges += [(0, b + 1), (0, b + 2), (b, b + 3), (b, b + 4)]
        return _graph(mults, edges)
    if f.kind == "II":
        return _graph([1], [])
    if f.kind == "III":
        return _graph([1, 1], [(0, 1), (0, 1)])
    if f.kind == "IV":
        return _graph([1, 1, 1], [(0, 1), (1, 2), (0, 2)])
    if f.kind == "IV*":
        return _star_graph(3, 3, [[2, 1], [2, 1], [2, 1]])
    if f.kind == "III*":
        return _star_graph(3, 4, [[3, 2, 1], [3, 2, 1], [2]])
    return _star_graph(3, 6, [[5, 4, 3, 2, 1], [4, 2], [3]])


def fiber_to_dot(f: KodairaFiber, name: str | None = None) -> str:
    g = dual_graph(f)
    ident = (name or str(f)).replace('"', "'")
    lines = [f'graph "{ident}" {{']
    for i, m in enumerate(g.multiplicities):
        lines.append(f'  C{i} [label="{m}"];')
    for i, j, k in g.edges:
        for _ in range(k):
            lines.append(f"  C{i} -- C{j};")
    if f.kind == "I" and f.b == 1:
        lines.append("  C0 -- C0;")
    lines.append("}")
    return "\n".join(lines) + "\n"
