"""Global invariants of an elliptic surface read off from its singular fibers.

A :class:`SurfaceConfig` lists the singular fibers over the base curve.
Repeated fibers are stored once with a count, so the configuration for
``X_c`` has three placements regardless of how large ``3^c`` gets.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import fibers as fc
from .errors import DomainError, InconsistentConfiguration
from .fibers import KodairaFiber

__all__ = [
    "FiberPlacement",
    "SurfaceConfig",
    "InvariantReport",
    "schreieder_config",
    "euler_total",
    "hodge_numbers",
    "shioda_tate",
    "mw_rank_and_extremality",
    "section_self_intersection",
    "invariant_report",
]


@dataclass(frozen=True)
class FiberPlacement:
    """``count`` copies of ``fiber``; copies are labelled ``label^0 .. label^(count-1)``."""

    label: str
    fiber: KodairaFiber
    count: int = 1

    def __post_init__(self):
        if self.count < 1:
            raise DomainError("placement count must be positive")

    def labels(self):
        if self.count == 1:
            yield self.label
        else:
            for k in range(self.count):
                yield f"{self.label}^{k}"


@dataclass(frozen=True)
class SurfaceConfig:
    base_genus: int = 0
    placements: tuple[FiberPlacement, ...] = ()
    has_section: bool = True

    @classmethod
    def from_fibers(cls, fibers, base_genus=0, has_section=True):
        """Build from ``(label, fiber)`` pairs; fibers may be given as strings."""
        placements = []
        for label, f in fibers:
            if isinstance(f, str):
                f = fc.parse_fiber(f)
            placements.append(FiberPlacement(label, f))
        return cls(base_genus, tuple(placements), has_section)

    @property
    def fibers(self):
        """Expanded ``(label, fiber)`` list.  Materializes every copy."""
        return [(lab, p.fiber) for p in self.placements for lab in p.labels()]

    @property
    def singular_fiber_count(self) -> int:
        return sum(p.count for p in self.placements if not p.fiber.is_smooth)

    def total(self, fn) -> int:
        """Sum of ``fn(fiber)`` over all fibers, respecting counts."""
        return sum(p.count * fn(p.fiber) for p in self.placements)


@dataclass(frozen=True)
class InvariantReport:
    chiTop: int
    chiHolo: int
    p_g: int
    h11: int
    picard: int
    mwRank: int
    extremal: bool
    sectionSelfIntersection: int

    def as_dict(self) -> dict:
        return {
            "chiTop": self.chiTop,
            "chiHolo": self.chiHolo,
            "p_g": self.p_g,
            "h11": self.h11,
            "picard": self.picard,
            "mwRank": self.mwRank,
            "extremal": self.extremal,
            "sectionSelfIntersection": self.sectionSelfIntersection,
        }


def schreieder_config(c: int) -> SurfaceConfig:
    """Singular fibers of ``X_c -> P^1``: ``I_{4*3^c}`` at 0, ``I_{3^c}*`` at infinity,
    and ``3^c`` nodal fibers at the ``3^c``-th roots of unity."""
    if c < 2:
        raise DomainError(f"c must be at least 2, got {c}")
    n = 3**c
    return SurfaceConfig(
        base_genus=0,
        placements=(
            FiberPlacement("0", fc.I(4 * n)),
            FiberPlacement("inf", fc.I_star(n)),
            FiberPlacement("zeta", fc.I(1), count=n),
        ),
        has_section=True,
    )


def euler_total(cfg: SurfaceConfig) -> int:
    return cfg.total(fc.euler_number)


def _chi_holo(cfg: SurfaceConfig) -> int:
    e = euler_total(cfg)
    if e % 12:
        raise InconsistentConfiguration(f"Euler number {e} is not divisible by 12")
    return e // 12


def hodge_numbers(cfg: SurfaceConfig) -> tuple[int, int]:
    """``(p_g, h^{1,1})`` from Noether's formula and ``h11 = 10 p_g - 8 q + 10``."""
    chi = _chi_holo(cfg)
    q = cfg.base_genus
    p_g = chi - 1 + q
    return p_g, 10 * p_g - 8 * q + 10


def _reducible_excess(cfg: SurfaceConfig) -> int:
    return cfg.total(lambda f: fc.components(f) - 1)


def shioda_tate(cfg: SurfaceConfig, mw_rank: int) -> int:
    """Picard number ``2 + sum_(reducible v) (m_v - 1) + r``."""
    if mw_rank < 0:
        raise DomainError("Mordell-Weil rank is nonnegative")
    return 2 + _reducible_excess(cfg) + mw_rank


def mw_rank_and_extremality(cfg: SurfaceConfig) -> tuple[int, bool]:
    """Rank forced by Shioda-Tate under maximal Picard number ``rho = h^{1,1}``."""
    if not cfg.has_section:
        raise InconsistentConfiguration("Shioda-Tate needs a section")
    _, h11 = hodge_numbers(cfg)
    rank = h11 - 2 - _reducible_excess(cfg)
    if rank < 0:
        raise InconsistentConfiguration(f"fiber components exceed h11: rank would be {rank}")
    return rank, rank == 0


def section_self_intersection(cfg: SurfaceConfig) -> int:
    """A section ``O`` satisfies ``O.O = -chi(O_S)``."""
    return -_chi_holo(cfg)


def invariant_report(cfg: SurfaceConfig) -> InvariantReport:
    chi_top = euler_total(cfg)
    p_g, h11 = hodge_numbers(cfg)
    rank, extremal = mw_rank_and_extremality(cfg)
    return InvariantReport(
        chiTop=chi_top,
        chiHolo=chi_top // 12,
        p_g=p_g,
        h11=h11,
        picard=shioda_tate(cfg, rank),
        mwRank=rank,
        extremal=extremal,
        sectionSelfIntersection=section_self_intersection(cfg),
    )
