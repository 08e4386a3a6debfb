"""Command-line front end: ``schreieder <command> [options]``.

Exit status is 0 when every check passes, 1 when a check fails (or a
table-dependent check is skipped without ``--allow-skip``) and 2 on
usage errors.
"""
from __future__ import annotations

import argparse
import logging
import sys

from . import fibers as fc
from .congruence import TABLE_ENV, default_table, load_table
from .errors import DomainError, SchreiederError, TableUnavailable, UnsupportedFiber
from .invariants import invariant_report, schreieder_config
from .jmap import j_degree, nori_profile, riemann_hurwitz_total
from .monodromy import abelianization, abelianization_check, cusp_signature, gamma_presentation
from .mordell_weil import (
    incidence_image,
    is_subgroup,
    mw_torsion_group,
    section_curves,
    section_incidence,
)
from .report import Check, Report
from .singularities import chain_to_dot, normalize_weights, resolve, schreieder_fixed_points
from .singularities import schreieder_genus
from .tower import (
    growth_class,
    iitaka_base_check,
    plurigenera,
    plurigenus,
    shape_census,
    surviving_exponents,
)
from .verify import congruence_checks, run_checks

__all__ = ["main", "run", "build_parser"]

log = logging.getLogger("schreieder")


class UsageError(Exception):
    pass


def _group_name(factors) -> str:
    return " x ".join(f"Z/{k}" for k in factors)


# -- commands ----------------------------------------------------------------
# Each returns the report and a zero-argument dot renderer (or None); dot
# output is built only on request since fibers can have millions of nodes.

def cmd_resolve(args):
    s = normalize_weights(args.r, 1, args.a)
    if s.is_smooth:
        raise DomainError("the trivial group gives a smooth point")
    chain = resolve(s)
    det = _tridiagonal_det(chain.intersection_matrix)
    results = {
        "singularity": str(s),
        "r": s.r,
        "a": s.a,
        "coefficients": list(chain.coefficients),
        "chain": chain.self_intersections,
        "length": len(chain),
        "det": abs(det),
        "intersectionMatrix": [list(row) for row in chain.intersection_matrix],
    }
    checks = [Check.of("det_equals_order", abs(det) == s.r, f"|det| = {abs(det)}")]
    return Report("resolve", {"r": args.r, "a": args.a}, results, checks), lambda: chain_to_dot(chain, str(s))


def _tridiagonal_det(matrix) -> int:
    """Determinant read off the filled matrix by the leading-minor recurrence."""
    prev, cur = 1, 1
    for i, row in enumerate(matrix):
        off = matrix[i - 1][i] * row[i - 1] if i else 0
        prev, cur = cur, row[i] * cur - off * prev
    return cur


def cmd_fixed_points(args):
    points = []
    dots = []
    for fp in schreieder_fixed_points(args.c):
        s = fp.singularity()
        chain = fp.chain()
        points.append({
            "point": fp.name,
            "kind": fp.kind,
            "weights": list(fp.weights),
            "singularity": str(s),
            "chain": chain.self_intersections,
        })
        dots.append((chain, fp.name))
    g = schreieder_genus(args.c)
    n = 3**args.c
    ok = all(p["chain"] == ([-2] * (n - 1) if p["kind"] == "I" else [-2, -(g + 1)])
             for p in points)
    checks = [Check.of("chain_shapes", ok, f"Type I: {n - 1} x (-2), Type II: [-2, -{g + 1}]")]
    report = Report("fixed-points", {"c": args.c}, {"g": g, "points": points}, checks)
    return report, lambda: "".join(chain_to_dot(ch, nm) for ch, nm in dots)


def cmd_invariants(args):
    cfg = schreieder_config(args.c)
    rep = invariant_report(cfg)
    n = 3**args.c
    results = dict(rep.as_dict())
    results["fibers"] = [{"location": p.label, "type": str(p.fiber), "count": p.count}
                         for p in cfg.placements]
    checks = [
        Check.of("euler_sum", rep.chiTop == 6 * n + 6, f"chi_top = {rep.chiTop}"),
        Check.of("shioda_tate_vs_h11", rep.picard == rep.h11 and rep.mwRank == 0,
                 f"rho = {rep.picard}, h11 = {rep.h11}"),
    ]

    def dot():
        return "".join(fc.fiber_to_dot(p.fiber, p.label) for p in cfg.placements
                       if fc.components(p.fiber) > 1)
    return Report("invariants", {"c": args.c}, results, checks), dot


def cmd_plurigenus(args):
    if args.m is None:
        raise UsageError("plurigenus needs --m")
    c, m = args.c, args.m
    g = schreieder_genus(c)
    pm = plurigenus(c, m)
    exps = sorted(surviving_exponents(c, m))
    shapes = shape_census(c, m)
    results = {
        "g": g,
        "plurigenus": pm,
        "formula": m * (g - 1) + 1,
        "survivingExponents": [list(e) for e in exps],
        "byShape": {"noY": shapes[1], "oneY": shapes[2], "twoY": shapes[3]},
    }
    checks = [
        Check.of("formula", pm == m * (g - 1) + 1, f"P_{m} = {pm}"),
        Check.of("y_shapes_empty", shapes[2] == shapes[3] == 0, ""),
        Check.of("iitaka_base", iitaka_base_check(c, m), "exponents (a, a), a = 0..m(g-1)"),
    ]
    return Report("plurigenus", {"c": c, "m": m}, results, checks), None


def cmd_kodaira_dim(args):
    top = args.m if args.m is not None else 8
    if top < 4:
        raise UsageError("kodaira-dim needs --m >= 4 to fit a growth class")
    values = plurigenera(args.c, range(2, top + 1))
    kappa = growth_class(values)
    results = {
        "plurigenera": [{"m": m, "P_m": p} for m, p in values.items()],
        "kodairaDimension": "-inf" if kappa is None else kappa,
    }
    checks = [Check.of("kappa_one", kappa == 1, "linear growth of P_m")]
    return Report("kodaira-dim", {"c": args.c, "m": top}, results, checks), None


def cmd_jprofile(args):
    cfg = schreieder_config(args.c)
    prof = nori_profile(cfg)
    d = j_degree(cfg)
    rh = riemann_hurwitz_total(prof)
    results = dict(prof.as_dict())
    results["ramification"] = {pt: prof.ramification_over(pt) for pt in ("0", "1728", "inf")}
    results["riemannHurwitzTotal"] = rh
    checks = [
        Check.of("riemann_hurwitz", rh == 2 * d - 2, f"{rh} = 2*{d}-2"),
        Check.of("degree_6_3c", d == 6 * 3**args.c, f"deg j = {d}"),
    ]
    return Report("jprofile", {"c": args.c}, results, checks), None


def _table(args):
    """Congruence table from ``--table``, the environment, or the packaged file."""
    try:
        if args.table:
            return load_table(args.table), ""
        return default_table(), ""
    except TableUnavailable as exc:
        log.warning("%s", exc)
        return None, str(exc)


def cmd_gamma(args):
    pres = gamma_presentation(args.c)
    sig = cusp_signature(args.c)
    d = j_degree(schreieder_config(args.c))
    classes = []
    for name, m in pres.classes:
        rep = [list(r) for r in m.rows]
        if classes and classes[-1]["representative"] == rep:
            classes[-1]["names"].append(name)
        else:
            classes.append({"names": [name], "representative": rep,
                            "abelianization": abelianization(m)})
    classes = [{"name": e["names"][0] if len(e["names"]) == 1
                else f"{e['names'][0]}..{e['names'][-1]}",
                "count": len(e["names"]),
                "representative": e["representative"],
                "abelianization": e["abelianization"]} for e in classes]
    table, reason = _table(args)
    checks = [
        Check.of("abelianization", abelianization_check(pres), "sum of images = 0 mod 12"),
        Check.of("genus_zero", sig.genus == 0, ""),
        Check.of("index_equals_j_degree", sig.index == d, f"{sig.index} = {d}"),
        Check.of("wohlfahrt_level", sig.level == 4 * 3**args.c, f"level = {sig.level}"),
        *congruence_checks(args.c, table, reason),
    ]
    results = {
        "presentation": {"classes": classes,
                         "relation": f"A_0 A_1 ... A_{3**args.c} A_inf = Id"},
        "signature": sig.as_dict(),
        "table": table.source if table else None,
    }
    params = {"c": args.c, "table": args.table}
    return Report("gamma", params, results, checks), None


def cmd_mordell_weil(args):
    c = args.c
    g = schreieder_genus(c)
    curves = section_curves(c)
    group = mw_torsion_group(c)
    n = 3**c
    incidence = section_incidence(c)
    choice_free = all(is_subgroup(incidence_image(c, z.section_id), (4 * n, 4))
                      for z in incidence)
    results = {
        "sections": len(curves),
        "group": _group_name(group),
        "selfIntersection": curves[0].self_intersection if curves else None,
        "incidence": [{"section": s.section_id, "componentAtZero": s.component_at_zero,
                       "componentAtInf": s.component_at_inf} for s in incidence],
        "image": [list(x) for x in incidence_image(c)],
    }
    checks = [
        Check.of("four_sections", len(curves) == 4, ""),
        Check.of("self_intersection", all(e.self_intersection == -(g + 1) for e in curves),
                 f"-(g+1) = {-(g + 1)}"),
        Check.of("cyclic_of_order_4", group == (4,), ""),
        Check.of("zero_section_choice_free", choice_free,
                 "every choice of zero section gives a subgroup"),
    ]
    return Report("mordell-weil", {"c": c}, results, checks), None


def cmd_verify(args):
    table, reason = _table(args)
    checks = run_checks(args.c, table, reason)
    counts = {s: sum(1 for ch in checks if ch.status == s) for s in ("pass", "fail", "skipped")}
    results = {"checkCount": len(checks), **counts,
               "table": table.source if table else None}
    params = {"c": args.c, "table": args.table, "allowSkip": args.allow_skip}
    return Report("verify", params, results, checks), None


COMMANDS = {
    "resolve": cmd_resolve,
    "fixed-points": cmd_fixed_points,
    "invariants": cmd_invariants,
    "plurigenus": cmd_plurigenus,
    "kodaira-dim": cmd_kodaira_dim,
    "jprofile": cmd_jprofile,
    "gamma": cmd_gamma,
    "mordell-weil": cmd_mordell_weil,
    "verify": cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(lo):
    def parse(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be at least {lo}")
        return v
    return parse


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "dot"), default="table")
    common.add_argument("-v", "--verbose", action="store_true")
    with_c = _Parser(add_help=False)
    with_c.add_argument("--c", type=_positive(2), default=2, help="tower height (default 2)")
    with_table = _Parser(add_help=False)
    with_table.add_argument("--table", help=f"congruence table (default: ${TABLE_ENV} or packaged)")

    parser = _Parser(prog="schreieder", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("resolve", parents=[common], help="resolve 1/r(1,a)")
    p.add_argument("r", type=_positive(2))
    p.add_argument("a", type=int)
    sub.add_parser("fixed-points", parents=[common, with_c], help="the nine singular points")
    sub.add_parser("invariants", parents=[common, with_c], help="Euler number, Hodge, Picard")
    p = sub.add_parser("plurigenus", parents=[common, with_c], help="P_m by enumeration")
    p.add_argument("--m", type=_positive(2))
    p = sub.add_parser("kodaira-dim", parents=[common, with_c], help="growth of P_2..P_m")
    p.add_argument("--m", type=_positive(2))
    sub.add_parser("jprofile", parents=[common, with_c], help="ramification of j")
    sub.add_parser("gamma", parents=[common, with_c, with_table], help="monodromy group data")
    sub.add_parser("mordell-weil", parents=[common, with_c], help="sections and torsion")
    p = sub.add_parser("verify", parents=[common, with_c, with_table], help="all cross-checks")
    p.add_argument("--allow-skip", action="store_true",
                   help="exit 0 even if table-dependent checks were skipped")
    return parser


def run(argv=None) -> tuple[int, str]:
    """Parse, execute and render.  Returns ``(exit code, output text)``."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return 2, f"usage error: {exc}\n"
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        report, dot = COMMANDS[args.command](args)
    except UsageError as exc:
        return 2, f"usage error: {exc}\n"
    except (DomainError, UnsupportedFiber) as exc:
        return 2, f"error: {exc}\n"
    except SchreiederError as exc:
        return 1, f"error: {exc}\n"
    if args.format == "dot":
        if dot is None:
            return 2, f"usage error: no dot rendering for {args.command}\n"
        text = dot()
    elif args.format == "json":
        text = report.to_json()
    else:
        text = report.to_table()
    code = 1 if report.failed(getattr(args, "allow_skip", False)) else 0
    return code, text


def main(argv=None) -> int:
    code, text = run(argv)
    (sys.stdout if code != 2 else sys.stderr).write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
