"""Cross-checks tying every module together for one value of ``c``."""
from __future__ import annotations

from .congruence import CongruenceTable, congruence_lookup
from .errors import SchreiederError
from .invariants import (
    euler_total,
    hodge_numbers,
    mw_rank_and_extremality,
    schreieder_config,
    section_self_intersection,
    shioda_tate,
)
from .jmap import j_degree, modularity_certificate, nori_profile, riemann_hurwitz_total
from .monodromy import CuspSignature, abelianization_check, cusp_signature, gamma_presentation
from .mordell_weil import classify_torsion, component_groups, mw_torsion_group, section_curves
from .report import SKIP, Check
from .singularities import schreieder_fixed_points, schreieder_genus
from .tower import iitaka_base_check, kodaira_dimension, plurigenus, shape_census

__all__ = ["VERIFY_WEIGHTS", "CONTROL_WIDTHS", "run_checks", "congruence_checks"]

VERIFY_WEIGHTS = range(2, 9)
# principal congruence subgroup of level 2: three cusps of width 2
CONTROL_WIDTHS = (2, 2, 2)


def _guard(name, fn) -> Check:
    try:
        return fn()
    except (SchreiederError, AssertionError, ValueError) as exc:
        return Check(name, "fail", f"{type(exc).__name__}: {exc}")


def _hj(c: int) -> Check:
    n, g = 3**c, schreieder_genus(c)
    bad = []
    for fp in schreieder_fixed_points(c):
        want = [-2] * (n - 1) if fp.kind == "I" else [-2, -(g + 1)]
        if fp.chain().self_intersections != want:
            bad.append(fp.name)
    return Check.of("hj_chains", not bad,
                    f"Type I: {n - 1} x (-2), Type II: [-2, -{g + 1}]"
                    + (f"; mismatched {bad}" if bad else ""))


def _euler(c: int) -> Check:
    e = euler_total(schreieder_config(c))
    g = schreieder_genus(c)
    return Check.of("euler_sum", e == 6 * 3**c + 6 == 12 * (g + 1), f"chi_top = {e}")


def _shioda_tate(c: int) -> Check:
    cfg = schreieder_config(c)
    _, h11 = hodge_numbers(cfg)
    rank, extremal = mw_rank_and_extremality(cfg)
    rho = shioda_tate(cfg, rank)
    ok = rho == h11 == 5 * 3**c + 5 and rank == 0 and extremal
    return Check.of("shioda_tate_vs_h11", ok, f"rho = {rho}, h11 = {h11}, rank = {rank}")


def _plurigenera(c: int) -> list[Check]:
    g = schreieder_genus(c)
    wrong, mixed = [], []
    for m in VERIFY_WEIGHTS:
        shapes = shape_census(c, m)
        if plurigenus(c, m) != m * (g - 1) + 1:
            wrong.append(m)
        if shapes[2] or shapes[3]:
            mixed.append(m)
    span = f"m = {VERIFY_WEIGHTS.start}..{VERIFY_WEIGHTS.stop - 1}"
    return [
        Check.of("plurigenus_formula", not wrong, f"P_m = m(g-1)+1 for {span}"
                 + (f"; fails at {wrong}" if wrong else "")),
        Check.of("plurigenus_y_shapes_empty", not mixed, f"no survivor uses y, {span}"),
        Check.of("kodaira_dimension", kodaira_dimension(c, VERIFY_WEIGHTS) == 1, "kappa = 1"),
        Check.of("iitaka_base", all(iitaka_base_check(c, m) for m in VERIFY_WEIGHTS),
                 "surviving exponents (a, a) trace a rational normal curve"),
    ]


def _jmap(c: int) -> list[Check]:
    cfg = schreieder_config(c)
    d = j_degree(cfg)
    prof = nori_profile(cfg)
    rh = riemann_hurwitz_total(prof)
    return [
        Check.of("j_degree", d == 6 * 3**c, f"deg j = {d}"),
        Check.of("riemann_hurwitz", rh == 2 * d - 2,
                 f"sum(e-1) = {rh} = 2*{d}-2; {d // 3} triple points over 0,"
                 f" {d // 2} double points over 1728"),
        Check.of("modularity_certificate", modularity_certificate(cfg),
                 "extremal, section, nonconstant j, no II*/III*"),
    ]


def _gamma(c: int) -> list[Check]:
    sig = cusp_signature(c)
    d = j_degree(schreieder_config(c))
    pres = gamma_presentation(c)
    return [
        Check.of("index_equals_j_degree", sig.index == d == 6 * 3**c,
                 f"index = {sig.index}, deg j = {d}"),
        Check.of("abelianization", abelianization_check(pres), "class images sum to 0 mod 12"),
        Check.of("genus_zero", sig.genus == 0, f"1 + {sig.index}/12 - {sig.cusp_count}/2 = {sig.genus}"),
        Check.of("wohlfahrt_level", sig.level == 4 * 3**c, f"level = {sig.level}"),
    ]


def congruence_checks(c: int, table: CongruenceTable | None, reason: str = "") -> list[Check]:
    """Table-dependent checks; reported as skipped when no table could be read."""
    names = ("non_congruence", "congruence_control")
    if table is None:
        why = f"skipped: table unavailable{f' ({reason})' if reason else ''}"
        return [Check(n, SKIP, why) for n in names]
    hit = congruence_lookup(cusp_signature(c), table)
    control = congruence_lookup(CuspSignature.from_widths(CONTROL_WIDTHS), table)
    return [
        Check.of(names[0], not hit, f"Gamma_{c} signature absent from {len(table)} records"),
        Check.of(names[1], control, "principal level-2 signature present"),
    ]


def _mordell_weil(c: int) -> list[Check]:
    g = schreieder_genus(c)
    curves = section_curves(c)
    target = section_self_intersection(schreieder_config(c))
    # distinct I_{3^c}* components alone already rule out (Z/2)^2
    klein = classify_torsion(component_groups(c), distinct=(1,))
    return [
        Check.of("mw_sections", len(curves) == 4 and target == -(g + 1),
                 f"{len(curves)} sections of self-intersection {target}"),
        Check.of("mw_group", mw_torsion_group(c) == (4,), "MW = Z/4"),
        Check.of("mw_klein_excluded", (2, 2) not in klein.admitted,
                 "(Z/2)^2 cannot meet four distinct I* components"),
    ]


def run_checks(c: int, table: CongruenceTable | None, reason: str = "") -> list[Check]:
    checks = [
        _guard("hj_chains", lambda: _hj(c)),
        _guard("euler_sum", lambda: _euler(c)),
        _guard("shioda_tate_vs_h11", lambda: _shioda_tate(c)),
    ]
    for name, group in (("plurigenera", _plurigenera), ("j_profile", _jmap),
                        ("gamma", _gamma), ("mordell_weil", _mordell_weil)):
        try:
            checks.extend(group(c))
        except (SchreiederError, AssertionError, ValueError) as exc:
            checks.append(Check(name, "fail", f"{type(exc).__name__}: {exc}"))
    try:
        checks.extend(congruence_checks(c, table, reason))
    except SchreiederError as exc:
        checks.append(Check("non_congruence", "fail", str(exc)))
    return checks
