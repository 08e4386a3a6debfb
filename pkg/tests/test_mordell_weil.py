import time
from fractions import Fraction
from itertools import product

import pytest

from schreieder.errors import DomainError
from schreieder.invariants import schreieder_config, section_self_intersection
from schreieder.mordell_weil import (
    classify_torsion,
    component_groups,
    exceptional_curves,
    fiber_at_infinity_leaves,
    fiber_at_zero_cycle,
    incidence_image,
    is_subgroup,
    mw_torsion_group,
    section_count,
    section_curves,
    section_genus_bound,
    section_incidence,
)
from schreieder.singularities import schreieder_genus


@pytest.mark.parametrize("c,l,genus", [(2, 2, 0), (2, 0, -8), (3, 2, 0), (2, 1, -4)])
def test_genus_bound_examples(c, l, genus):
    assert section_genus_bound(c, l) == Fraction(genus)


@pytest.mark.parametrize("c,l", list(product(range(2, 7), range(3))))
def test_genus_bound_at_most_one(c, l):
    assert section_genus_bound(c, l) <= 1


def test_genus_bound_domain():
    with pytest.raises(DomainError):
        section_genus_bound(2, 3)


@pytest.mark.parametrize("c", [2, 3, 4])
def test_sections(c):
    g = schreieder_genus(c)
    curves = section_curves(c)
    assert section_count(c) == 4
    assert {e.self_intersection for e in curves} == {-(g + 1)}
    assert section_self_intersection(schreieder_config(c)) == -(g + 1)
    assert {e.point for e in curves} == {"(Q,P1)", "(Q,P2)", "(P1,Q)", "(P2,Q)"}
    # every other exceptional curve is a (-2)-curve
    others = [e for e in exceptional_curves(c) if e not in curves]
    assert {e.self_intersection for e in others} == {-2}
    assert len(others) == 5 * (3**c - 1) + 4


@pytest.mark.parametrize("c", [2, 3, 4])
def test_fiber_at_zero_model(c):
    n = 3**c
    cycle = fiber_at_zero_cycle(c)
    assert len(cycle) == 4 * n == len(set(cycle))
    pos = {s: cycle.index(s) for s in ("S1", "S2", "S3", "S4")}
    assert pos == {"S3": 0, "S1": n, "S4": 2 * n, "S2": 3 * n}


def test_leaves():
    ends = fiber_at_infinity_leaves(2)
    assert ends["T1"] == ends["T2"] != ends["T3"] == ends["T4"]


@pytest.mark.parametrize("c", [2, 3])
def test_incidence_distinct(c):
    inc = section_incidence(c)
    assert [s.section_id for s in inc] == ["C1", "C2", "C3", "C4"]
    assert len({s.component_at_zero for s in inc}) == 4
    assert len({s.component_at_inf for s in inc}) == 4


@pytest.mark.parametrize("c", [2, 3, 4])
@pytest.mark.parametrize("zero", ["C1", "C2", "C3", "C4"])
def test_zero_section_choice_independent(c, zero):
    n = 3**c
    image = incidence_image(c, zero)
    assert (0, 0) in image
    assert is_subgroup(image, (4 * n, 4))
    # cyclic: some element has order 4 in both coordinates
    assert any(x[0] % (4 * n) and (2 * x[0]) % (4 * n) and x[1] in (1, 3) for x in image)


def test_incidence_image_unknown_section():
    with pytest.raises(DomainError):
        incidence_image(2, "C5")


@pytest.mark.parametrize("c", [2, 3, 4])
def test_mw_group(c):
    assert component_groups(c) == ((4 * 3**c,), (4,))
    assert mw_torsion_group(c) == (4,)


@pytest.mark.parametrize("c", [2, 3])
def test_klein_search_empty(c):
    n = 3**c
    # (Z/2)^2 lands in {0, 2} on the Z/4 factor
    assert (2, 2) not in classify_torsion([(4 * n,), (4,)], distinct=(1,)).admitted
    full = classify_torsion([(4 * n,), (4,)], distinct=(0, 1))
    assert full.admitted == ((4,),) and not full.ambiguous


def _brute_klein(n):
    # direct scan over pairs of generators of order <= 2
    two = [(a, b) for a in range(4 * n) for b in range(4) if (2 * a) % (4 * n) == 0 and (2 * b) % 4 == 0]
    for x, y in product(two, repeat=2):
        imgs = {(0, 0), x, y, ((x[0] + y[0]) % (4 * n), (x[1] + y[1]) % 4)}
        if len(imgs) == 4 and len({i[1] for i in imgs}) == 4:
            return True
    return False


@pytest.mark.parametrize("c", [2, 3])
def test_klein_independent_scan(c):
    assert not _brute_klein(3**c)


def test_even_b_oracle_variant():
    n = 9
    target = [(4 * n,), (2, 2)]
    loose = classify_torsion(target)
    assert loose.admitted == ((4,), (2, 2)) and loose.ambiguous and loose.group is None
    # distinct first coordinates alone force an element of order 4
    assert classify_torsion(target, distinct=(0,)).admitted == ((4,),)
    # distinct I_b* components alone force the Klein group
    assert classify_torsion(target, distinct=(1,)).admitted == ((2, 2),)
    assert classify_torsion(target, distinct=(0, 1)).admitted == ()


def test_classify_domain():
    with pytest.raises(DomainError):
        classify_torsion([(4,)], order=6)
    with pytest.raises(DomainError):
        classify_torsion([(4,)], distinct=(3,))


def test_brute_force_is_fast():
    t = time.perf_counter()
    for c in (2, 3):
        mw_torsion_group(c)
    assert time.perf_counter() - t < 1.0
