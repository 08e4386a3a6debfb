from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from schreieder.errors import DomainError
from schreieder.singularities import (
    QuotientSingularity,
    chain_determinant,
    chain_to_dot,
    hj_expansion,
    hj_value,
    normalize_weights,
    resolve,
    schreieder_fixed_points,
    schreieder_genus,
)


@pytest.mark.parametrize("r,w1,w2,a", [(9, -1, 4, 5), (9, -1, 1, 8), (5, 1, 1, 1), (27, -13, 1, 2)])
def test_normalize_weights(r, w1, w2, a):
    s = normalize_weights(r, w1, w2)
    assert s == QuotientSingularity(r, a)
    assert (a * w1 - w2) % r == 0


def test_normalize_rejects_non_units():
    with pytest.raises(DomainError, match="weights not coprime to order"):
        normalize_weights(9, 3, 1)
    with pytest.raises(DomainError):
        normalize_weights(9, 1, 6)


@pytest.mark.parametrize("r,a", [(0, 0), (9, 3), (9, 9), (9, 0), (1, 1)])
def test_invalid_singularity(r, a):
    with pytest.raises(DomainError):
        QuotientSingularity(r, a)


@pytest.mark.parametrize("r,a,coeffs", [
    (9, 8, (2,) * 8),
    (9, 5, (2, 5)),
    (7, 3, (3, 2, 2)),
    (2, 1, (2,)),
    (5, 1, (5,)),
])
def test_hj_examples(r, a, coeffs):
    assert hj_expansion(QuotientSingularity(r, a)).coefficients == coeffs
    assert hj_value(coeffs) == Fraction(r, a)


def test_smooth_point_has_empty_chain():
    smooth = QuotientSingularity(1, 0)
    assert smooth.is_smooth
    assert hj_expansion(smooth).coefficients == ()
    assert chain_determinant(()) == 1


def test_resolve_examples():
    ch = resolve(QuotientSingularity(9, 5))
    assert ch.self_intersections == [-2, -5]
    assert ch.intersection_matrix == ((-2, 1), (1, -5))
    a1 = resolve(QuotientSingularity(2, 1))
    assert a1.self_intersections == [-2]
    assert abs(chain_determinant(a1.coefficients)) == 2
    a8 = resolve(QuotientSingularity(9, 8))
    assert a8.self_intersections == [-2] * 8
    assert abs(sympy.Matrix(a8.intersection_matrix).det()) == 9


def test_dual_reverses_chain():
    s = QuotientSingularity(7, 3)
    assert s.dual() == QuotientSingularity(7, 5)
    assert hj_expansion(s.dual()).coefficients == tuple(reversed(hj_expansion(s).coefficients))


coprime_pairs = st.integers(2, 500).flatmap(
    lambda r: st.tuples(st.just(r), st.integers(1, r - 1).filter(lambda a: gcd(a, r) == 1)))


@given(coprime_pairs)
def test_hj_reconstruction_property(pair):
    r, a = pair
    coeffs = hj_expansion(QuotientSingularity(r, a)).coefficients
    assert all(b >= 2 for b in coeffs)
    assert hj_value(coeffs) == Fraction(r, a)


@given(coprime_pairs)
def test_chain_determinant_property(pair):
    r, a = pair
    ch = resolve(QuotientSingularity(r, a))
    assert abs(chain_determinant(ch.coefficients)) == r
    m = ch.intersection_matrix
    n = len(m)
    assert all(m[i][j] == m[j][i] for i in range(n) for j in range(n))
    assert all(m[i][j] == (1 if abs(i - j) == 1 else 0) for i in range(n) for j in range(n) if i != j)


def test_exhaustive_small_orders_against_sympy():
    # slow exact oracle, kept to small r
    for r in range(2, 40):
        for a in range(1, r):
            if gcd(a, r) == 1:
                ch = resolve(QuotientSingularity(r, a))
                assert abs(sympy.Matrix(ch.intersection_matrix).det()) == r


@pytest.mark.parametrize("c", [2, 3, 4])
def test_fixed_points(c):
    n, g = 3**c, schreieder_genus(c)
    pts = schreieder_fixed_points(c)
    assert len(pts) == 9
    assert sum(p.kind == "I" for p in pts) == 5
    assert sum(p.kind == "II" for p in pts) == 4
    for p in pts:
        w = {x % n for x in p.weights}
        if p.kind == "I":
            assert w in ({n - 1, 1}, {n - g, g})
            assert p.singularity() == QuotientSingularity(n, n - 1)
            assert p.chain().coefficients == (2,) * (n - 1)
        else:
            assert w in ({n - 1, g}, {n - g, 1})
            assert p.chain().coefficients == (2, g + 1)


def test_fixed_point_weights_c2():
    pts = {p.factor_pair: p for p in schreieder_fixed_points(2)}
    assert pts[("Q", "P1")].weights == (-4, 1) and pts[("Q", "P1")].kind == "II"
    assert pts[("P1", "P2")].weights == (-1, 1) and pts[("P1", "P2")].kind == "I"
    assert pts[("P1", "Q")].weights == (-1, 4)


def test_type_two_raw_orientation_is_reversed_chain():
    # (-g, 1) normalizes to 1/3^c(1, 2), whose chain is [g+1, 2]
    raw = normalize_weights(9, -4, 1)
    assert raw == QuotientSingularity(9, 2)
    assert hj_expansion(raw).coefficients == (5, 2)


@pytest.mark.parametrize("c", [0, 1, -3])
def test_fixed_points_domain(c):
    with pytest.raises(DomainError):
        schreieder_fixed_points(c)


def test_chain_dot():
    dot = chain_to_dot(resolve(QuotientSingularity(9, 5)), "x")
    assert dot.startswith('graph "x" {')
    assert 'E0 [label="-2"]' in dot and 'E1 [label="-5"]' in dot
    assert dot.count("--") == 1
