"""Cyclic quotient surface singularities and their Hirzebruch-Jung resolutions.

A cyclic quotient singularity is written ``1/r(1, a)``: the group ``Z/r``
acts on ``C^2`` by ``(z1, z2) -> (e z1, e^a z2)``.  Its minimal resolution
is a chain of rational curves whose self-intersections are the negated
coefficients of the Hirzebruch-Jung continued fraction of ``r/a``.

The module also tabulates the nine fixed points of ``psi^{-1} x psi`` on
``C_g x C_g`` together with their local weights.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import DomainError

__all__ = [
    "QuotientSingularity",
    "HJChain",
    "FixedPoint",
    "normalize_weights",
    "hj_expansion",
    "hj_value",
    "resolve",
    "chain_determinant",
    "schreieder_genus",
    "schreieder_fixed_points",
    "chain_to_dot",
]


@dataclass(frozen=True, order=True)
class QuotientSingularity:
    r: int
    a: int

    def __post_init__(self):
        if self.r < 1:
            raise DomainError(f"group order must be positive, got {self.r}")
        if self.r == 1:
            if self.a != 0:
                raise DomainError("the smooth point is written 1/1(1, 0)")
            return
        if not 1 <= self.a < self.r or gcd(self.r, self.a) != 1:
            raise DomainError(f"1/{self.r}(1, {self.a}) is not a normalized singularity")

    @property
    def is_smooth(self) -> bool:
        return self.r == 1

    def dual(self) -> QuotientSingularity:
        """Same singularity with the two coordinates swapped: 1/r(1, a^-1)."""
        if self.r == 1:
            return self
        return QuotientSingularity(self.r, pow(self.a, -1, self.r))

    def canonical(self) -> QuotientSingularity:
        """Orientation with the larger second weight.

        ``1/r(1, a)`` and ``1/r(1, a^-1)`` are the same singularity read in
        opposite coordinate order; their chains are reverses of each other.
        Picking the larger weight puts the smallest leading coefficient first.
        """
        return max(self, self.dual())

    def __str__(self):
        return f"1/{self.r}(1,{self.a})"


@dataclass(frozen=True)
class HJChain:
    """Exceptional chain of a resolved cyclic quotient singularity."""

    coefficients: tuple[int, ...]
    order: int
    intersection_matrix: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    @property
    def self_intersections(self) -> list[int]:
        return [-b for b in self.coefficients]

    def __len__(self):
        return len(self.coefficients)


def normalize_weights(r: int, w1: int, w2: int) -> QuotientSingularity:
    """Rewrite the action with weights ``(w1, w2)`` mod ``r`` as ``1/r(1, a)``.

    >>> normalize_weights(9, -1, 4)
    QuotientSingularity(r=9, a=5)
    """
    if r < 1:
        raise DomainError(f"group order must be positive, got {r}")
    if r == 1:
        return QuotientSingularity(1, 0)
    if gcd(w1, r) != 1 or gcd(w2, r) != 1:
        raise DomainError("weights not coprime to order")
    return QuotientSingularity(r, (w2 * pow(w1, -1, r)) % r)


def hj_expansion(s: QuotientSingularity) -> HJChain:
    """Hirzebruch-Jung continued fraction ``r/a = b0 - 1/(b1 - 1/(...))``."""
    coefficients = []
    num, den = s.r, s.a
    while den:
        b = -(-num // den)
        coefficients.append(b)
        num, den = den, b * den - num
    return HJChain(tuple(coefficients), s.r)


def hj_value(coefficients) -> Fraction:
    """Evaluate ``[b0, ..., bs]`` back into the rational number it encodes."""
    if not coefficients:
        raise DomainError("empty continued fraction has no value")
    # p/q <- b - q/p, carried as an integer pair
    p, q = coefficients[-1], 1
    for b in reversed(coefficients[:-1]):
        p, q = b * p - q, p
    return Fraction(p, q)


def _chain_matrix(coefficients) -> tuple[tuple[int, ...], ...]:
    n = len(coefficients)
    if n == 1:
        return ((-coefficients[0],),)
    rows = []
    for i, b in enumerate(coefficients):
        if i == 0:
            rows.append((-b, 1) + (0,) * (n - 2))
        elif i == n - 1:
            rows.append((0,) * (n - 2) + (1, -b))
        else:
            rows.append((0,) * (i - 1) + (1, -b, 1) + (0,) * (n - i - 2))
    return tuple(rows)


def chain_determinant(coefficients) -> int:
    """Determinant of the chain's intersection matrix by the tridiagonal recurrence.

    The empty chain has determinant 1.
    """
    prev, cur = 0, 1
    for b in coefficients:
        prev, cur = cur, -b * cur - prev
    return cur


def resolve(s: QuotientSingularity) -> HJChain:
    """Minimal resolution: the HJ chain with its intersection matrix filled in."""
    chain = hj_expansion(s)
    resolved = HJChain(chain.coefficients, chain.order, _chain_matrix(chain.coefficients))
    if abs(chain_determinant(resolved.coefficients)) != s.r:
        raise AssertionError(f"chain of {s} has |det| != {s.r}")
    return resolved


def schreieder_genus(c: int) -> int:
    """Genus ``(3^c - 1)/2`` of the hyperelliptic curve ``y^2 = x^(2g+1) + 1``."""
    return (3**c - 1) // 2


@dataclass(frozen=True)
class FixedPoint:
    """A fixed point of ``psi^{-1} x psi`` with its local weights mod ``3^c``."""

    factor_pair: tuple[str, str]
    weights: tuple[int, int]
    order: int
    kind: str

    @property
    def name(self) -> str:
        return f"({self.factor_pair[0]},{self.factor_pair[1]})"

    def singularity(self) -> QuotientSingularity:
        """The image singularity in canonical orientation."""
        return normalize_weights(self.order, *self.weights).canonical()

    def chain(self) -> HJChain:
        return resolve(self.singularity())


def schreieder_fixed_points(c: int) -> list[FixedPoint]:
    """The nine fixed points, Type I before Type II."""
    if c < 2:
        raise DomainError(f"c must be at least 2, got {c}")
    g = schreieder_genus(c)
    n = 3**c
    # psi acts with weight 1 at P1, P2 (coordinate x) and g at Q (coordinate v);
    # the first factor carries psi^{-1}.
    local = {"P1": 1, "P2": 1, "Q": g}
    type_one, type_two = [], []
    for left in ("P1", "P2", "Q"):
        for right in ("P1", "P2", "Q"):
            weights = (-local[left], local[right])
            kind = "I" if (left == "Q") == (right == "Q") else "II"
            point = FixedPoint((left, right), weights, n, kind)
            (type_one if kind == "I" else type_two).append(point)
    return type_one + type_two


def chain_to_dot(chain: HJChain, name: str = "chain") -> str:
    """Graphviz rendering: one node per exceptional curve, edges for adjacency."""
    ident = name.replace('"', "'")
    lines = [f'graph "{ident}" {{']
    for i, b in enumerate(chain.coefficients):
        lines.append(f'  E{i} [label="{-b}"];')
    for i in range(len(chain) - 1):
        lines.append(f"  E{i} -- E{i + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
