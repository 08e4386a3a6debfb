"""Pluricanonical forms on ``C_g x C_g`` pushed through the resolution tower.

A section of ``K^m`` on ``Y_0 = C_g x C_g`` descends to ``X_c`` only if its
vanishing sequence at the two Type II points ``(Q, P1)`` and ``(P1, Q)`` stays
nonnegative after the two blow-ups and ``c`` successive ``Z/3`` quotients.
Everything here is bookkeeping on vanishing orders; forms are represented by
their exponent data only.

Vanishing orders are exact :class:`~fractions.Fraction` values because the
intermediate quotient steps divide by 3.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .singularities import schreieder_genus

__all__ = [
    "BasisForm",
    "ProductForm",
    "VanishSeq",
    "TowerTrace",
    "kock_tait_basis",
    "vanishing_orders",
    "blowup_transform",
    "quotient_transform_point",
    "tower_pushforward",
    "section_survives",
    "gc_invariant",
    "surviving_exponents",
    "shape_census",
    "plurigenus",
    "plurigenera",
    "growth_class",
    "kodaira_dimension",
    "is_rational_normal_curve",
    "iitaka_base_check",
]


@dataclass(frozen=True)
class BasisForm:
    """``x^a omega`` or ``x^a y omega`` with ``omega = dx^m / y^m``."""

    a: int
    uses_y: bool
    m: int
    g: int

    def __str__(self):
        x = "" if self.a == 0 else ("x" if self.a == 1 else f"x^{self.a}")
        return f"{x}{'y' if self.uses_y else ''}w" if x or self.uses_y else "w"


@dataclass(frozen=True)
class ProductForm:
    left: BasisForm
    right: BasisForm

    def __post_init__(self):
        if (self.left.m, self.left.g) != (self.right.m, self.right.g):
            raise DomainError("product factors must share m and g")

    @property
    def shape(self) -> int:
        """1: no y factor, 2: exactly one y factor, 3: y on both sides."""
        return 1 + self.left.uses_y + self.right.uses_y

    @property
    def exponents(self) -> tuple[int, int]:
        return (self.left.a, self.right.a)


@dataclass(frozen=True)
class VanishSeq:
    first: Fraction
    second: Fraction

    def __init__(self, first, second):
        object.__setattr__(self, "first", Fraction(first))
        object.__setattr__(self, "second", Fraction(second))

    def swapped(self) -> VanishSeq:
        return VanishSeq(self.second, self.first)

    def is_nonnegative(self) -> bool:
        return self.first >= 0 and self.second >= 0

    def is_integral(self) -> bool:
        return self.first.denominator == 1 and self.second.denominator == 1

    def __iter__(self):
        yield self.first
        yield self.second


@dataclass(frozen=True)
class TowerTrace:
    levels: tuple[tuple[int, VanishSeq], ...]

    @property
    def final(self) -> VanishSeq:
        return self.levels[-1][1]


def kock_tait_basis(g: int, m: int) -> list[BasisForm]:
    """Monomial basis of ``H^0(C, K^m)`` for ``y^2 = f(x)`` hyperelliptic of genus ``g``."""
    if g < 2:
        raise DomainError(f"genus must be at least 2, got {g}")
    if m < 1:
        raise DomainError(f"weight m must be positive, got {m}")
    if m == 1:
        return [BasisForm(a, False, 1, g) for a in range(g)]
    if m == 2 and g == 2:
        return [BasisForm(a, False, 2, 2) for a in range(3)]
    basis = [BasisForm(a, False, m, g) for a in range(m * (g - 1) + 1)]
    basis += [BasisForm(a, True, m, g) for a in range((m - 1) * (g - 1) - 1)]
    return basis


def _genus_for(c: int) -> int:
    if c < 1:
        raise DomainError(f"c must be positive, got {c}")
    return schreieder_genus(c)


def vanishing_orders(f: BasisForm, c: int) -> tuple[int, int]:
    """Order of vanishing at ``P1`` (= ``P2``) and at ``Q``.

    ``omega`` has order ``2m(g-1)`` at ``Q`` and ``x = 1/u`` has a pole of
    order 2 there; ``y`` contributes ``-(2g+1) = -3^c``.
    """
    if _genus_for(c) != f.g:
        raise DomainError(f"form of genus {f.g} does not live on C_g for c={c}")
    at_q = 2 * f.m * (f.g - 1) - 2 * f.a
    if f.uses_y:
        at_q -= 3**c
    return f.a, at_q


def blowup_transform(v: VanishSeq, m: int) -> VanishSeq:
    """Pull back along the blow-up of the origin, chart ``z2 = z1 z2'``."""
    return VanishSeq(v.first + v.second + m, v.second)


def quotient_transform_point(v: VanishSeq, m: int) -> VanishSeq:
    """Push down along a ``Z/3`` quotient ramified along ``z1 = 0``."""
    return VanishSeq((v.first - 2 * m) / 3, v.second)


def _threshold(c: int, m: int) -> int:
    # 3m(3^{c-1} - 1) = 2m(g - 1)
    return 3 * m * (3 ** (c - 1) - 1)


def tower_pushforward(v: VanishSeq, c: int, m: int) -> tuple[VanishSeq, TowerTrace]:
    """Vanishing sequence at the top of the tower, closed form plus stepwise trace."""
    if c < 2:
        raise DomainError(f"c must be at least 2, got {c}")
    closed = VanishSeq(Fraction(v.first + 2 * v.second - _threshold(c, m), 3**c), v.second)

    levels = [(0, v)]
    cur = blowup_transform(blowup_transform(v, m), m)
    cur = quotient_transform_point(cur, m)
    levels.append((1, cur))
    # above level 1 the fixed locus is a curve, so the blow-ups are isomorphisms
    for i in range(2, c + 1):
        cur = quotient_transform_point(cur, m)
        levels.append((i, cur))
    return closed, TowerTrace(tuple(levels))


def _type_two_sequences(p: ProductForm, c: int) -> tuple[VanishSeq, VanishSeq]:
    p_left, q_left = vanishing_orders(p.left, c)
    p_right, q_right = vanishing_orders(p.right, c)
    alpha = VanishSeq(q_left, p_right)  # at (Q, P1)
    beta = VanishSeq(p_left, q_right)  # at (P1, Q)
    return alpha, beta


def section_survives(p: ProductForm, c: int) -> bool:
    """Whether the product form stays regular at both Type II points on ``Y_c``.

    At ``(P1, Q)`` the fixed curve is the second coordinate axis, so the
    tower is run on the swapped sequence.
    """
    alpha, beta = _type_two_sequences(p, c)
    m = p.left.m
    top_alpha, _ = tower_pushforward(alpha, c, m)
    top_beta, _ = tower_pushforward(beta.swapped(), c, m)
    return top_alpha.is_nonnegative() and top_beta.is_nonnegative()


def _weight(f: BasisForm, sign: int) -> int:
    # psi: x -> zeta x, y -> y, omega -> zeta^m omega
    return sign * (f.a + f.m)


def gc_invariant(p: ProductForm, c: int) -> bool:
    """Invariance under ``psi^{-1} x psi``: total character weight is 0 mod ``3^c``."""
    return (_weight(p.left, -1) + _weight(p.right, +1)) % 3**c == 0


def _enumerate(c: int, m: int):
    g = _genus_for(c)
    basis = kock_tait_basis(g, m)
    orders = [(f, *vanishing_orders(f, c)) for f in basis]
    K = _threshold(c, m)
    n = 3**c
    survivors = []
    by_shape = {1: 0, 2: 0, 3: 0}
    # integer form of the closed-form tower condition, numerator only
    for left, p_l, q_l in orders:
        w_l = -(left.a + m)
        for right, p_r, q_r in orders:
            if p_r < 0 or q_l + 2 * p_r - K < 0:
                continue
            if p_l < 0 or 2 * p_l + q_r - K < 0:
                continue
            if (w_l + right.a + m) % n:
                continue
            survivors.append(ProductForm(left, right))
            by_shape[1 + left.uses_y + right.uses_y] += 1
    return survivors, by_shape


def surviving_exponents(c: int, m: int) -> list[tuple[int, int]]:
    """Exponent pairs ``(a1, a2)`` of every surviving invariant product form."""
    survivors, _ = _enumerate(c, m)
    return [p.exponents for p in survivors]


def shape_census(c: int, m: int) -> dict[int, int]:
    """Survivor counts by shape: 1 = no ``y``, 2 = one ``y`` factor, 3 = two."""
    return _enumerate(c, m)[1]


def plurigenus(c: int, m: int) -> int:
    """``P_m(X_c)`` by exhaustive enumeration of product basis forms."""
    if c < 2:
        raise DomainError(f"c must be at least 2, got {c}")
    if m < 2:
        raise DomainError(f"the tower analysis needs m >= 2, got {m}")
    survivors, _ = _enumerate(c, m)
    return len(survivors)


def plurigenera(c: int, ms=range(2, 13)) -> dict[int, int]:
    return {m: plurigenus(c, m) for m in ms}


def growth_class(values: dict[int, int]):
    """Kodaira-dimension-style growth class of ``m -> P_m``.

    Returns ``None`` for identically zero (kappa = -inf), 0 for constant,
    1 for linear nonconstant.  Anything else raises.
    """
    ms = sorted(values)
    ps = [values[m] for m in ms]
    if len(ms) < 3 or any(b - a != 1 for a, b in zip(ms, ms[1:])):
        raise DomainError("growth fitting needs at least three consecutive weights")
    if all(p == 0 for p in ps):
        return None
    first = [b - a for a, b in zip(ps, ps[1:])]
    if all(d == 0 for d in first):
        return 0
    second = [b - a for a, b in zip(first, first[1:])]
    if all(d == 0 for d in second) and first[0] > 0:
        return 1
    raise AssertionError(f"plurigenera {ps} are not of linear growth")


def kodaira_dimension(c: int, ms=range(2, 13)) -> int:
    kappa = growth_class(plurigenera(c, ms))
    if kappa is None:
        raise AssertionError("all plurigenera vanish although p_g = g > 0")
    return kappa


def is_rational_normal_curve(exponents: list[tuple[int, int]]) -> bool:
    """Whether ``[s_0 : ... : s_N]`` is ``(t, t^2, ..., t^N)`` in the chart ``s_0 != 0``.

    ``s_a`` must equal ``s_0 * (x1 x2)^a`` for ``a = 0..N``, i.e. each exponent
    vector differs from the first by ``a * (1, 1)``.
    """
    if not exponents:
        return False
    ordered = sorted(exponents)
    base = ordered[0]
    return all(
        (e[0] - base[0], e[1] - base[1]) == (a, a) for a, e in enumerate(ordered)
    )


def iitaka_base_check(c: int, m: int) -> bool:
    exps = surviving_exponents(c, m)
    if len(exps) < 2:
        return False
    return is_rational_normal_curve(exps)
