import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schreieder.errors import DomainError
from schreieder.singularities import schreieder_genus
from schreieder.tower import (
    BasisForm,
    ProductForm,
    VanishSeq,
    blowup_transform,
    gc_invariant,
    growth_class,
    iitaka_base_check,
    is_rational_normal_curve,
    kock_tait_basis,
    kodaira_dimension,
    plurigenera,
    plurigenus,
    quotient_transform_point,
    section_survives,
    shape_census,
    surviving_exponents,
    tower_pushforward,
    vanishing_orders,
)


def form(a, y=False, m=2, c=2):
    return BasisForm(a, y, m, schreieder_genus(c))


def stepwise(v, c, m):
    # independent re-derivation of the tower: two blow-ups, then c quotients
    a1, a2 = Fraction(v[0]), Fraction(v[1])
    a1 = a1 + a2 + m
    a1 = a1 + a2 + m
    for _ in range(c):
        a1 = (a1 - 2 * m) / 3
    return a1, a2


def test_basis_examples():
    assert [str(f) for f in kock_tait_basis(4, 1)] == ["w", "xw", "x^2w", "x^3w"]
    assert len(kock_tait_basis(2, 2)) == 3
    assert not any(f.uses_y for f in kock_tait_basis(2, 2))
    assert len(kock_tait_basis(4, 2)) == 9


@pytest.mark.parametrize("g,m", [(g, m) for g in range(3, 15) for m in range(2, 9)])
def test_basis_riemann_roch(g, m):
    assert len(kock_tait_basis(g, m)) == (2 * m - 1) * (g - 1)


def test_basis_domain():
    with pytest.raises(DomainError):
        kock_tait_basis(1, 2)
    with pytest.raises(DomainError):
        kock_tait_basis(4, 0)


@pytest.mark.parametrize("f,orders", [(form(0), (0, 12)), (form(6), (6, 0)),
                                      (form(0, True, m=3), (0, 9))])
def test_vanishing_orders(f, orders):
    assert vanishing_orders(f, 2) == orders


def test_vanishing_orders_wrong_genus():
    with pytest.raises(DomainError):
        vanishing_orders(form(0, c=3), 2)


@pytest.mark.parametrize("v,m,out", [((0, 0), 1, (1, 0)), ((12, 0), 2, (14, 0)), ((3, 5), 2, (10, 5))])
def test_blowup(v, m, out):
    assert tuple(blowup_transform(VanishSeq(*v), m)) == out


@pytest.mark.parametrize("v,m,out", [((16, 0), 2, (4, 0)), ((2, 7), 1, (0, 7)), ((4, 0), 2, (0, 0))])
def test_quotient(v, m, out):
    assert tuple(quotient_transform_point(VanishSeq(*v), m)) == out


@pytest.mark.parametrize("c,m,v,out", [(2, 2, (12, 0), (0, 0)), (2, 2, (0, 6), (0, 6)),
                                       (3, 2, (48, 0), (0, 0))])
def test_pushforward_examples(c, m, v, out):
    closed, trace = tower_pushforward(VanishSeq(*v), c, m)
    assert tuple(closed) == out
    assert trace.final == closed
    assert trace.levels[0] == (0, VanishSeq(*v))
    assert [i for i, _ in trace.levels] == list(range(c + 1))


def test_pushforward_trace_c2():
    _, trace = tower_pushforward(VanishSeq(12, 0), 2, 2)
    assert [tuple(s) for _, s in trace.levels] == [(12, 0), (4, 0), (0, 0)]


def test_midtower_is_fractional():
    closed, trace = tower_pushforward(VanishSeq(1, 0), 2, 2)
    assert not trace.levels[1][1].is_integral()
    assert closed.first == Fraction(1 - 12, 9)


@given(st.integers(0, 100), st.integers(0, 100), st.sampled_from([2, 3, 4]), st.integers(2, 6))
def test_closed_form_matches_stepwise(a1, a2, c, m):
    closed, trace = tower_pushforward(VanishSeq(a1, a2), c, m)
    assert tuple(closed) == stepwise((a1, a2), c, m) == tuple(trace.final)


@pytest.mark.parametrize("c,m", [(c, m) for c in (2, 3, 4) for m in range(2, 7)])
def test_closed_form_1000_random(c, m):
    rng = random.Random(1000 * c + m)
    for _ in range(1000):
        v = VanishSeq(rng.randint(0, 100), rng.randint(0, 100))
        closed, trace = tower_pushforward(v, c, m)
        assert closed == trace.final


def test_survival_examples():
    assert section_survives(ProductForm(form(3), form(3)), 2)
    assert not section_survives(ProductForm(form(2), form(5)), 2)
    for a1, a2 in product(range(3), repeat=2):
        assert not section_survives(ProductForm(form(a1, m=3), form(a2, True, m=3)), 2)


def _explicit(p, c):
    # the two constraint pairs, written out directly
    m, g = p.left.m, p.left.g
    K = 3 * m * (3 ** (c - 1) - 1)
    y = 3**c
    q1 = 2 * m * (g - 1) - 2 * p.left.a - (y if p.left.uses_y else 0)
    q2 = 2 * m * (g - 1) - 2 * p.right.a - (y if p.right.uses_y else 0)
    alpha = (q1, p.right.a)
    beta = (p.left.a, q2)
    return (alpha[0] + 2 * alpha[1] >= K and alpha[1] >= 0
            and beta[0] >= 0 and 2 * beta[0] + beta[1] >= K)


@pytest.mark.parametrize("c,m", [(2, 2), (2, 3), (2, 5), (3, 2), (3, 4)])
def test_survival_matches_inequalities(c, m):
    basis = kock_tait_basis(schreieder_genus(c), m)
    for left, right in product(basis, repeat=2):
        p = ProductForm(left, right)
        assert section_survives(p, c) == _explicit(p, c)


@pytest.mark.parametrize("c,m", [(2, 2), (2, 4), (3, 3)])
def test_survival_symmetry(c, m):
    basis = kock_tait_basis(schreieder_genus(c), m)
    for left, right in product(basis, repeat=2):
        assert section_survives(ProductForm(left, right), c) == \
            section_survives(ProductForm(right, left), c)


def test_gc_invariant():
    assert gc_invariant(ProductForm(form(0), form(0)), 2)
    assert gc_invariant(ProductForm(form(6), form(6)), 2)
    assert not gc_invariant(ProductForm(form(1), form(2)), 2)


def test_product_form_mismatch():
    with pytest.raises(DomainError):
        ProductForm(form(0, m=2), form(0, m=3))


def slow_plurigenus(c, m):
    basis = kock_tait_basis(schreieder_genus(c), m)
    pairs = [ProductForm(a, b) for a, b in product(basis, repeat=2)]
    return pairs, [p for p in pairs if section_survives(p, c) and gc_invariant(p, c)]


@pytest.mark.parametrize("c,m", [(c, m) for c in (2, 3) for m in range(2, 9)])
def test_plurigenus_two_paths(c, m):
    g = schreieder_genus(c)
    _, slow = slow_plurigenus(c, m)
    assert plurigenus(c, m) == len(slow) == m * (g - 1) + 1
    assert sorted(surviving_exponents(c, m)) == [(a, a) for a in range(m * (g - 1) + 1)]
    assert all(p.shape == 1 for p in slow)
    census = shape_census(c, m)
    assert census[2] == census[3] == 0


def test_pair_count_c2_m2():
    pairs, survivors = slow_plurigenus(2, 2)
    # 7 forms without y and 2 with y on each side
    assert len(pairs) == 81
    assert len(survivors) == 7


def test_plurigenus_examples():
    assert plurigenus(2, 2) == 7
    assert plurigenus(2, 3) == 10
    assert plurigenus(3, 2) == 25


def test_plurigenus_domain():
    with pytest.raises(DomainError):
        plurigenus(1, 2)
    with pytest.raises(DomainError):
        plurigenus(2, 1)


@pytest.mark.parametrize("c", [2, 3, 4])
def test_kodaira_dimension(c):
    assert kodaira_dimension(c) == 1


def test_plurigenera_range():
    assert plurigenera(2, range(2, 5)) == {2: 7, 3: 10, 4: 13}


def test_growth_class():
    assert growth_class({2: 0, 3: 0, 4: 0}) is None
    assert growth_class({2: 5, 3: 5, 4: 5}) == 0
    assert growth_class({2: 7, 3: 10, 4: 13}) == 1
    with pytest.raises(AssertionError):
        growth_class({2: 1, 3: 4, 4: 9})
    with pytest.raises(DomainError):
        growth_class({2: 1, 4: 2, 5: 3})


@pytest.mark.parametrize("c,m", [(2, 2), (3, 2), (2, 7)])
def test_iitaka(c, m):
    assert iitaka_base_check(c, m)


def test_rational_normal_curve_helper():
    assert is_rational_normal_curve([(0, 0)])
    assert is_rational_normal_curve([(2, 2), (0, 0), (1, 1)])
    assert not is_rational_normal_curve([(0, 0), (1, 2)])
    assert not is_rational_normal_curve([(0, 0), (2, 2)])
    assert not is_rational_normal_curve([])
