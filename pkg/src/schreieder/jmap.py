"""Degree and ramification of the j-invariant ``j: P^1 -> P^1`` of an elliptic surface.

For an extremal surface whose singular fibers are all of type ``I_b`` or
``I_b*`` (b > 0), Nori's relations force the ramification over 0 and 1728
completely: every point over 0 has index 3 and every point over 1728 has
index 2.  The resulting profile is then checked against Riemann-Hurwitz
rather than trusted.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import fibers as fc
from .errors import InconsistentConfiguration, UnsupportedFiber
from .fibers import JValue
from .invariants import SurfaceConfig, mw_rank_and_extremality

__all__ = [
    "RamificationProfile",
    "j_degree",
    "j_nonconstant",
    "nori_profile",
    "riemann_hurwitz_total",
    "modularity_certificate",
]


@dataclass(frozen=True)
class RamificationProfile:
    """Fibers of ``j`` over 0, 1728 and infinity.

    ``over0`` and ``over1728`` are ``(point count, ramification index)`` pairs;
    ``over_inf`` holds ``(location label, pole order, count)``.  When Nori's
    bounds are not forced to equality ``status`` is ``"indeterminate"`` and
    only ``bounds`` is meaningful.
    """

    degree: int
    over0: tuple[tuple[int, int], ...]
    over1728: tuple[tuple[int, int], ...]
    over_inf: tuple[tuple[str, int, int], ...]
    status: str = "forced"
    bounds: tuple[tuple[str, Fraction], ...] = ()

    def ramification_over(self, point: str) -> int:
        """``sum (e_v - 1)`` over the given branch value (``"0"``, ``"1728"``, ``"inf"``)."""
        if point == "0":
            return sum(n * (e - 1) for n, e in self.over0)
        if point == "1728":
            return sum(n * (e - 1) for n, e in self.over1728)
        return sum(k * (e - 1) for _, e, k in self.over_inf)

    def degree_over(self, point: str) -> int:
        if point == "0":
            return sum(n * e for n, e in self.over0)
        if point == "1728":
            return sum(n * e for n, e in self.over1728)
        return sum(k * e for _, e, k in self.over_inf)

    def as_dict(self) -> dict:
        out = {
            "degree": self.degree,
            "status": self.status,
            "over0": [{"points": n, "index": e} for n, e in self.over0],
            "over1728": [{"points": n, "index": e} for n, e in self.over1728],
            "overInf": [{"location": lab, "poleOrder": e, "count": k}
                        for lab, e, k in self.over_inf],
        }
        if self.bounds:
            out["bounds"] = {name: {"num": v.numerator, "den": v.denominator}
                             for name, v in self.bounds}
        return out


def j_nonconstant(cfg: SurfaceConfig) -> bool:
    """A pole of ``j`` (some ``I_b`` or ``I_b*`` with b > 0) forces ``j`` non-constant."""
    return any(fc.j_value(p.fiber) is JValue.INFINITY for p in cfg.placements)


def j_degree(cfg: SurfaceConfig) -> int:
    """Total pole order of ``j``: ``sum b`` over ``I_b`` and ``I_b*`` fibers."""
    if not j_nonconstant(cfg):
        raise UnsupportedFiber("j is constant: no fiber of type I_b or I_b* with b > 0")
    return cfg.total(lambda f: f.b if f.kind in ("I", "I*") else 0)


def _poles(cfg: SurfaceConfig):
    return tuple((p.label, p.fiber.b, p.count) for p in cfg.placements
                 if fc.j_value(p.fiber) is JValue.INFINITY)


def riemann_hurwitz_total(profile: RamificationProfile) -> int:
    return sum(profile.ramification_over(pt) for pt in ("0", "1728", "inf"))


def nori_profile(cfg: SurfaceConfig) -> RamificationProfile:
    """Ramification profile of ``j`` for an extremal configuration."""
    if cfg.base_genus != 0:
        raise UnsupportedFiber("profile is only derived over a rational base")
    _, extremal = mw_rank_and_extremality(cfg)
    if not extremal:
        raise UnsupportedFiber("Nori's relations need an extremal surface")
    if any(p.fiber.kind == "III*" for p in cfg.placements):
        raise UnsupportedFiber("a III* fiber breaks e_v = 2 over 1728")
    d = j_degree(cfg)
    poles = _poles(cfg)
    r0_min = Fraction(2 * d, 3)
    r1728_min = Fraction(d, 2)
    total = Fraction(7 * d, 6)
    bounds = (("R0+R1728", total), ("R0_min", r0_min), ("R1728_min", r1728_min))

    others = [p for p in cfg.placements
              if not p.fiber.is_smooth and fc.j_value(p.fiber) is not JValue.INFINITY]
    if others:
        # fibers sitting over 0 or 1728 change the local counts; not resolved here
        return RamificationProfile(d, (), (), poles, "indeterminate", bounds)
    if d % 6:
        raise InconsistentConfiguration(f"deg j = {d} is not divisible by 6")

    profile = RamificationProfile(
        degree=d,
        over0=((d // 3, 3),),
        over1728=((d // 2, 2),),
        over_inf=poles,
        bounds=bounds,
    )
    if profile.ramification_over("0") + profile.ramification_over("1728") != total:
        raise InconsistentConfiguration("R0 + R1728 != 7 deg(j) / 6")
    for pt in ("0", "1728", "inf"):
        if profile.degree_over(pt) != d:
            raise InconsistentConfiguration(f"fiber of j over {pt} has degree != {d}")
    if riemann_hurwitz_total(profile) != 2 * d - 2:
        raise InconsistentConfiguration(
            f"Riemann-Hurwitz fails: total ramification {riemann_hurwitz_total(profile)}"
            f" != {2 * d - 2}")
    return profile


def modularity_certificate(cfg: SurfaceConfig) -> bool:
    """Extremal, with a section, non-constant ``j`` and no ``II*``/``III*`` fibers."""
    if not cfg.has_section or not j_nonconstant(cfg):
        return False
    if any(p.fiber.kind in ("II*", "III*") for p in cfg.placements):
        return False
    try:
        _, extremal = mw_rank_and_extremality(cfg)
    except InconsistentConfiguration:
        return False
    return extremal
