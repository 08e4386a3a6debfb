import pytest

from schreieder.errors import DomainError, InconsistentConfiguration
from schreieder.fibers import I, I_star
from schreieder.invariants import (
    FiberPlacement,
    SurfaceConfig,
    euler_total,
    hodge_numbers,
    invariant_report,
    mw_rank_and_extremality,
    schreieder_config,
    section_self_intersection,
    shioda_tate,
)
from schreieder.singularities import schreieder_genus

RATIONAL_GENERIC = SurfaceConfig(0, (FiberPlacement("p", I(1), count=12),))


def test_schreieder_config_c2():
    cfg = schreieder_config(2)
    fibers = dict((lab, f) for lab, f in cfg.fibers)
    assert fibers["0"] == I(36) and fibers["inf"] == I_star(9)
    assert sum(1 for lab, f in cfg.fibers if f == I(1)) == 9
    assert cfg.singular_fiber_count == 11
    assert len({lab for lab, _ in cfg.fibers}) == 11


def test_schreieder_config_c3():
    cfg = schreieder_config(3)
    assert [(p.fiber, p.count) for p in cfg.placements] == [(I(108), 1), (I_star(27), 1), (I(1), 27)]


@pytest.mark.parametrize("c", [2, 3, 4, 5, 6])
def test_global_invariants(c):
    cfg = schreieder_config(c)
    g = schreieder_genus(c)
    assert euler_total(cfg) == 6 * 3**c + 6 == 12 * (g + 1)
    p_g, h11 = hodge_numbers(cfg)
    assert p_g == g
    assert h11 == 5 * 3**c + 5 == 10 * (g + 1)
    assert shioda_tate(cfg, 0) == h11
    assert mw_rank_and_extremality(cfg) == (0, True)
    assert section_self_intersection(cfg) == -(g + 1)


def test_examples():
    assert euler_total(schreieder_config(2)) == 60
    assert euler_total(schreieder_config(3)) == 168
    assert euler_total(SurfaceConfig()) == 0
    assert hodge_numbers(schreieder_config(3)) == (13, 140)
    assert shioda_tate(schreieder_config(2), 0) == 2 + 35 + 13
    assert shioda_tate(SurfaceConfig(), 0) == 2


def test_rational_elliptic_surface():
    assert hodge_numbers(RATIONAL_GENERIC) == (0, 10)
    assert mw_rank_and_extremality(RATIONAL_GENERIC) == (8, False)
    assert section_self_intersection(RATIONAL_GENERIC) == -1


def test_shioda_tate_slope():
    cfg = schreieder_config(2)
    assert [shioda_tate(cfg, r) - shioda_tate(cfg, 0) for r in range(5)] == list(range(5))
    with pytest.raises(DomainError):
        shioda_tate(cfg, -1)


def test_inconsistent_configs():
    with pytest.raises(InconsistentConfiguration):
        hodge_numbers(SurfaceConfig.from_fibers([("a", "I_5")]))
    # 12 components cannot fit into h11 = 10
    with pytest.raises(InconsistentConfiguration):
        mw_rank_and_extremality(SurfaceConfig.from_fibers([("a", "I_12")]))
    with pytest.raises(InconsistentConfiguration):
        mw_rank_and_extremality(SurfaceConfig(0, RATIONAL_GENERIC.placements, has_section=False))


def test_report_fields():
    rep = invariant_report(schreieder_config(2))
    d = rep.as_dict()
    assert list(d) == ["chiTop", "chiHolo", "p_g", "h11", "picard", "mwRank", "extremal",
                       "sectionSelfIntersection"]
    assert d == {"chiTop": 60, "chiHolo": 5, "p_g": 4, "h11": 50, "picard": 50, "mwRank": 0,
                 "extremal": True, "sectionSelfIntersection": -5}
    assert rep.chiTop == 12 * rep.chiHolo and rep.picard <= rep.h11


def test_large_c_is_closed_form():
    rep = invariant_report(schreieder_config(17))
    assert rep.chiTop == 6 * 3**17 + 6


def test_domain():
    with pytest.raises(DomainError):
        schreieder_config(1)
    with pytest.raises(DomainError):
        FiberPlacement("x", I(1), count=0)
