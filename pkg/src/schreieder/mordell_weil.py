"""Sections and Mordell-Weil torsion of ``X_c -> P^1``.

Sections are located in two steps: a Riemann-Hurwitz genus bound rules out
every curve not contracted by ``X_c -> (C_g x C_g)/G``, and the canonical
bundle formula ``O.O = -chi`` leaves exactly the four ``-(g+1)``-curves of
the Type II resolutions.

The group structure is then pinned down by brute force over embeddings
into the product of the component groups of the two reducible fibers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import fibers as fc
from .errors import DomainError, InconsistentConfiguration
from .invariants import schreieder_config, section_self_intersection
from .singularities import schreieder_fixed_points, schreieder_genus

__all__ = [
    "ExceptionalCurve",
    "SectionIncidence",
    "TorsionClassification",
    "section_genus_bound",
    "exceptional_curves",
    "section_curves",
    "section_count",
    "fiber_at_zero_cycle",
    "fiber_at_infinity_leaves",
    "section_incidence",
    "incidence_image",
    "is_subgroup",
    "classify_torsion",
    "component_groups",
    "mw_torsion_group",
]

ORDER_FOUR_GROUPS = ((4,), (2, 2))


def section_genus_bound(c: int, l: int) -> Fraction:
    """Genus of the preimage in ``C_g x C_g`` of a rational curve meeting ``l`` fixed points.

    ``2g - 2 = 3^c (-2) + (3^c - 1) l``; a negative value means no such curve.
    """
    if not 0 <= l <= 2:
        raise DomainError(f"a section meets at most two fixed points, got l={l}")
    n = 3**c
    genus = Fraction(2 + n * -2 + (n - 1) * l, 2)
    if genus > 1:
        raise AssertionError(f"genus bound {genus} exceeds 1")
    return genus


@dataclass(frozen=True)
class ExceptionalCurve:
    point: str
    position: int
    self_intersection: int


def exceptional_curves(c: int) -> list[ExceptionalCurve]:
    """All curves of the minimal resolutions of the nine singular points."""
    curves = []
    for fp in schreieder_fixed_points(c):
        for k, e in enumerate(fp.chain().self_intersections):
            curves.append(ExceptionalCurve(fp.name, k, e))
    return curves


def section_curves(c: int) -> list[ExceptionalCurve]:
    g = schreieder_genus(c)
    # images of other curves have genus >= g > 1 upstairs; the bound forbids that
    worst = max(section_genus_bound(c, l) for l in range(3))
    if worst >= g:
        raise AssertionError("genus bound does not exclude non-exceptional sections")
    target = section_self_intersection(schreieder_config(c))
    return [e for e in exceptional_curves(c) if e.self_intersection == target]


def section_count(c: int) -> int:
    return len(section_curves(c))


# -- incidence of the four sections with the two reducible fibers -----------

_TYPE_TWO = {"C1": ("Q", "P1"), "C2": ("Q", "P2"), "C3": ("P1", "Q"), "C4": ("P2", "Q")}
# strict transforms lying in the fiber over 0
_S_CURVES = {"S1": ("*", "P1"), "S2": ("*", "P2"), "S3": ("P1", "*"), "S4": ("P2", "*")}


@dataclass(frozen=True)
class SectionIncidence:
    section_id: str
    component_at_zero: int
    component_at_inf: str


def fiber_at_zero_cycle(c: int) -> list[str]:
    """Components of the ``I_{4*3^c}`` fiber in cyclic order, starting at ``S3``.

    The chain resolving ``(Pi, Pj)`` joins ``Pi x C_g`` at one end to
    ``C_g x Pj`` at the other.
    """
    n = 3**c
    ends = {}
    for fp in schreieder_fixed_points(c):
        left, right = fp.factor_pair
        if "Q" in fp.factor_pair:
            continue
        a = next(k for k, v in _S_CURVES.items() if v == (left, "*"))
        b = next(k for k, v in _S_CURVES.items() if v == ("*", right))
        ends[fp.name] = (a, b)
    # walk the cycle S -> chain -> S -> ...
    cycle = []
    cur, used = "S3", set()
    while True:
        cycle.append(cur)
        name, (a, b) = next((k, v) for k, v in ends.items() if k not in used and cur in v)
        used.add(name)
        cycle.extend(f"{name}#{k}" for k in range(n - 1)) if a == cur else \
            cycle.extend(f"{name}#{k}" for k in reversed(range(n - 1)))
        cur = b if a == cur else a
        if cur == "S3":
            break
    if len(cycle) != 4 * n:
        raise AssertionError(f"cycle has {len(cycle)} components, expected {4 * n}")
    return cycle


def fiber_at_infinity_leaves(c: int) -> dict[str, str]:
    """Which end of the ``I_{3^c}*`` chain each ``(-2)``-curve ``T_i`` hangs from."""
    return {f"T{k[1]}": ("Q x C_g" if pair[0] == "Q" else "C_g x Q")
            for k, pair in _TYPE_TWO.items()}


def section_incidence(c: int) -> list[SectionIncidence]:
    cycle = fiber_at_zero_cycle(c)
    out = []
    for k in sorted(_TYPE_TWO):
        i = k[1]
        out.append(SectionIncidence(k, cycle.index(f"S{i}"), f"T{i}"))
    return out


def _star_element(b: int, zero_leaf: str, leaf: str, ends: dict[str, str],
                  orientation: dict[str, int]) -> tuple[int, ...]:
    """Component-group element of a simple component of ``I_b*``, relative to ``zero_leaf``."""
    if leaf == zero_leaf:
        return (0,) if b % 2 else (0, 0)
    same_end = ends[leaf] == ends[zero_leaf]
    if b % 2:
        return (2,) if same_end else (orientation[leaf],)
    if same_end:
        return (1, 1)
    return (1, 0) if orientation[leaf] == 1 else (0, 1)


def incidence_image(c: int, zero_section: str = "C3") -> list[tuple[int, ...]]:
    """Images ``gamma(C_i)`` in ``Z/(4*3^c) x G(I_{3^c}*)`` with ``zero_section`` as origin."""
    n = 3**c
    inc = {s.section_id: s for s in section_incidence(c)}
    if zero_section not in inc:
        raise DomainError(f"unknown section {zero_section}")
    ends = fiber_at_infinity_leaves(c)
    zero = inc[zero_section]
    far = sorted(t for t in ends if ends[t] != ends[zero.component_at_inf])
    orientation = {far[0]: 1, far[1]: 3 if n % 2 else 2}
    out = []
    for sid in sorted(inc):
        s = inc[sid]
        first = (s.component_at_zero - zero.component_at_zero) % (4 * n)
        second = _star_element(n, zero.component_at_inf, s.component_at_inf, ends, orientation)
        out.append((first, *second))
    return out


def _add(x, y, moduli):
    return tuple((a + b) % m for a, b, m in zip(x, y, moduli))


def is_subgroup(elements, moduli) -> bool:
    s = set(elements)
    return all(_add(x, y, moduli) in s for x in s for y in s)


@dataclass(frozen=True)
class TorsionClassification:
    admitted: tuple[tuple[int, ...], ...]
    witnesses: dict

    @property
    def ambiguous(self) -> bool:
        return len(self.admitted) > 1

    @property
    def group(self) -> tuple[int, ...] | None:
        return self.admitted[0] if len(self.admitted) == 1 else None


def _embeddings(source: tuple[int, ...], groups: tuple[tuple[int, ...], ...],
                distinct: tuple[int, ...]):
    """Injective homomorphisms ``prod Z/k -> prod_v G_v`` with pairwise distinct ``G_v``-parts.

    ``groups`` lists each ``G_v`` by invariant factors; ``distinct`` indexes
    the factors ``G_v`` on which the images must be pairwise different.
    """
    moduli = tuple(k for grp in groups for k in grp)
    spans, start = [], 0
    for grp in groups:
        spans.append(slice(start, start + len(grp)))
        start += len(grp)
    targets = list(product(*(range(m) for m in moduli)))
    zero = tuple(0 for _ in moduli)
    per_gen = [[x for x in targets if tuple(k * xi % m for xi, m in zip(x, moduli)) == zero]
               for k in source]
    elements = list(product(*(range(k) for k in source)))
    for gens in product(*per_gen):
        images = []
        for e in elements:
            img = zero
            for coeff, x in zip(e, gens):
                img = _add(img, tuple(coeff * xi for xi in x), moduli)
            images.append(img)
        if len(set(images)) != len(images):
            continue
        if all(len({im[spans[j]] for im in images}) == len(images) for j in distinct):
            yield gens


def classify_torsion(groups, distinct: tuple[int, ...] = (),
                     order: int = 4) -> TorsionClassification:
    """Which abelian groups of order 4 inject into ``prod_v G_v`` under the constraints.

    ``groups`` gives each ``G_v`` as invariant factors, e.g. ``[(36,), (4,)]``.
    """
    if order != 4:
        raise DomainError("only order 4 candidates are enumerated")
    groups = tuple(tuple(g) for g in groups)
    if any(j not in range(len(groups)) for j in distinct):
        raise DomainError(f"distinct indices {distinct} out of range")
    admitted, witnesses = [], {}
    for cand in ORDER_FOUR_GROUPS:
        found = sum(1 for _ in _embeddings(cand, groups, distinct))
        if found:
            admitted.append(cand)
            witnesses[cand] = found
    return TorsionClassification(tuple(admitted), witnesses)


def component_groups(c: int) -> tuple[tuple[int, ...], ...]:
    """Invariant factors of ``G(F_v)`` for each reducible fiber of ``X_c``."""
    return tuple(fc.component_group(p.fiber).invariant_factors
                 for p in schreieder_config(c).placements if fc.components(p.fiber) > 1)


def mw_torsion_group(c: int) -> tuple[int, ...]:
    """Invariant factors of ``MW(X_c)``.

    The sections meet four distinct components of each reducible fiber, so
    images differ in both the ``I_{4*3^c}`` and the ``I_{3^c}*`` coordinate.
    """
    groups = component_groups(c)
    result = classify_torsion(groups, distinct=tuple(range(len(groups))))
    if not result.admitted:
        raise InconsistentConfiguration("no group of order 4 embeds under the incidence constraints")
    if result.ambiguous:
        raise InconsistentConfiguration(f"incidence constraints admit {result.admitted}")
    if len(section_curves(c)) != 4:
        raise AssertionError("section count and group order disagree")
    return result.group
