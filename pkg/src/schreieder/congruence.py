"""Genus-0 congruence subgroup signatures: table format, lookup and generation.

Table format, one record per line::

    # name level index genus cuspCount widths
    Gamma(2) 2 6 0 3 2,2,2

``index`` is the index in PSL(2, Z) (the sum of the cusp widths) and
``level`` is the lcm of the widths.

Tables are generated by :func:`generate_table`, which builds standard
congruence subgroups of PSL(2, Z) as preimages of subgroups of
SL(2, Z/N), enumerates their cosets and reads cusp widths, elliptic points
and genus off the permutation action of ``S`` and ``T``.
"""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import combinations
from math import gcd, lcm
from pathlib import Path

from .errors import DomainError, TableUnavailable
from .monodromy import CuspSignature

__all__ = [
    "TABLE_ENV",
    "CongruenceRecord",
    "CongruenceTable",
    "load_table",
    "default_table",
    "congruence_lookup",
    "CosetAction",
    "coset_action",
    "family_signatures",
    "generate_table",
    "format_table",
]

log = logging.getLogger(__name__)

TABLE_ENV = "SCHREIEDER_CONGRUENCE_TABLE"
_PACKAGED = "congruence_genus0.txt"


@dataclass(frozen=True)
class CongruenceRecord:
    name: str
    level: int
    index: int
    genus: int
    cusp_count: int
    widths: tuple[int, ...]

    def line(self) -> str:
        return (f"{self.name} {self.level} {self.index} {self.genus} "
                f"{self.cusp_count} {','.join(map(str, self.widths))}")


@dataclass(frozen=True)
class CongruenceTable:
    records: tuple[CongruenceRecord, ...]
    source: str = "<memory>"

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


def _parse_line(line: str, where: str) -> CongruenceRecord:
    parts = line.split()
    if len(parts) != 6:
        raise DomainError(f"{where}: expected 6 fields, got {len(parts)}")
    name, level, index, genus, count, widths = parts
    ws = tuple(sorted((int(w) for w in widths.split(",") if w), reverse=True))
    rec = CongruenceRecord(name, int(level), int(index), int(genus), int(count), ws)
    if rec.cusp_count != len(ws) or rec.index != sum(ws) or rec.level != lcm(*ws):
        raise DomainError(f"{where}: record {name} is internally inconsistent")
    return rec


def load_table(path) -> CongruenceTable:
    path = Path(path)
    if not path.is_file():
        raise TableUnavailable(f"table unavailable: {path}")
    records = []
    with path.open(encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            records.append(_parse_line(line, f"{path}:{lineno}"))
    log.debug("loaded %d congruence records from %s", len(records), path)
    return CongruenceTable(tuple(records), str(path))


def default_table() -> CongruenceTable:
    """Table named by ``$SCHREIEDER_CONGRUENCE_TABLE``, else the packaged one."""
    env = os.environ.get(TABLE_ENV)
    if env:
        return load_table(env)
    ref = resources.files("schreieder") / "data" / _PACKAGED
    with resources.as_file(ref) as p:
        return load_table(p)


def congruence_lookup(sig: CuspSignature, table: CongruenceTable | None) -> bool:
    """Whether some table record has the same level/index and cusp-width multiset."""
    if table is None:
        raise TableUnavailable("table unavailable")
    widths = tuple(sorted(sig.cusp_widths, reverse=True))
    for rec in table:
        if (rec.level == sig.level or rec.index == sig.index) and rec.widths == widths:
            return True
    return False


# ---------------------------------------------------------------------------
# generation by coset enumeration

Mat = tuple[int, int, int, int]


def _mul(x: Mat, y: Mat, n: int) -> Mat:
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % n, (a * f + b * h) % n, (c * e + d * g) % n, (c * f + d * h) % n)


def _sl2(n: int) -> list[Mat]:
    if n == 1:
        return [(0, 0, 0, 0)]
    out = []
    rng = range(n)
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    if (a * d - b * c) % n == 1:
                        out.append((a, b, c, d))
    return out


@dataclass(frozen=True)
class CosetAction:
    """Right action of ``S`` and ``T`` on the cosets of a subgroup of PSL(2, Z)."""

    s: tuple[int, ...]
    t: tuple[int, ...]

    @property
    def index(self) -> int:
        return len(self.t)

    def cusp_widths(self) -> tuple[int, ...]:
        seen = [False] * self.index
        widths = []
        for i in range(self.index):
            if seen[i]:
                continue
            k, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = self.t[j]
                k += 1
            widths.append(k)
        return tuple(sorted(widths, reverse=True))

    def elliptic_points(self) -> tuple[int, int]:
        e2 = sum(1 for i, j in enumerate(self.s) if i == j)
        e3 = sum(1 for i in range(self.index) if self.t[self.s[i]] == i)
        return e2, e3

    def genus(self) -> int:
        e2, e3 = self.elliptic_points()
        g = (1 + Fraction(self.index, 12) - Fraction(e2, 4) - Fraction(e3, 3)
             - Fraction(len(self.cusp_widths()), 2))
        if g.denominator != 1 or g < 0:
            raise AssertionError(f"genus formula gave {g}")
        return int(g)


def coset_action(n: int, member, group: list[Mat] | None = None) -> CosetAction:
    """Coset action for the preimage of ``{g in SL(2, Z/n) : member(g)}``, with ``+-1``."""
    group = group if group is not None else _sl2(n)
    neg = (-1 % n, 0, 0, -1 % n)
    sub = [h for h in group if member(h) or member(_mul(neg, h, n))]
    coset_of: dict[Mat, int] = {}
    reps: list[Mat] = []
    for g in group:
        if g in coset_of:
            continue
        cid = len(reps)
        reps.append(g)
        for h in sub:
            coset_of[_mul(h, g, n)] = cid
    S = (0, -1 % n, 1 % n, 0)
    T = (1 % n, 1 % n, 0, 1 % n)
    s = tuple(coset_of[_mul(g, S, n)] for g in reps)
    t = tuple(coset_of[_mul(g, T, n)] for g in reps)
    return CosetAction(s, t)


def _unit_subgroups(n: int) -> list[frozenset[int]]:
    units = [u for u in range(1, n) if gcd(u, n) == 1] if n > 1 else [0]
    found = set()
    for k in (1, 2, 3):
        for gens in combinations(units, k):
            sub = {1 % n}
            frontier = list(sub)
            while frontier:
                x = frontier.pop()
                for gen in gens:
                    y = x * gen % n
                    if y not in sub:
                        sub.add(y)
                        frontier.append(y)
            found.add(frozenset(sub))
    return sorted(found, key=lambda h: (len(h), sorted(h)))


def family_signatures(n: int):
    """Yield ``(name, CosetAction)`` for the standard families at level ``n``."""
    group = _sl2(n)
    one = 1 % n

    def gamma(M):
        def member(h):
            return (h[0] - 1) % M == 0 and (h[3] - 1) % M == 0 and h[1] % M == 0 and h[2] % M == 0
        return member

    yield f"Gamma({n})", coset_action(n, gamma(n), group)
    yield f"Gamma0({n})", coset_action(n, lambda h: h[2] == 0, group)
    yield f"Gamma1({n})", coset_action(n, lambda h: h[2] == 0 and h[3] == one, group)
    phi = sum(1 for u in range(1, n + 1) if gcd(u, n) == 1)
    for H in _unit_subgroups(n):
        # trivial H gives Gamma1, the full unit group gives Gamma0
        if 1 < len(H) < phi:
            label = ".".join(map(str, sorted(H)))
            yield (f"GammaH({n};{label})",
                   coset_action(n, lambda h, H=H: h[2] == 0 and h[3] in H, group))
    for M in range(2, n):
        if n % M:
            continue
        gm = gamma(M)
        yield (f"Gamma0({n})&Gamma({M})",
               coset_action(n, lambda h, gm=gm: h[2] == 0 and gm(h), group))
        yield (f"Gamma1({n})&Gamma({M})",
               coset_action(n, lambda h, gm=gm: h[2] == 0 and h[3] == one and gm(h), group))


def generate_table(max_level: int) -> list[CongruenceRecord]:
    """Genus-0 signatures from the standard families up to ``max_level``.

    Records with identical ``(level, widths)`` are kept once, under the
    first name encountered.
    """
    seen = set()
    records = []
    for n in range(1, max_level + 1):
        for name, act in family_signatures(n):
            if act.genus() != 0:
                continue
            widths = act.cusp_widths()
            rec = CongruenceRecord(name, lcm(*widths), act.index, 0, len(widths), widths)
            key = (rec.level, rec.widths)
            if key in seen:
                continue
            seen.add(key)
            records.append(rec)
        log.info("level %d done, %d records so far", n, len(records))
    return records


def format_table(records, header: str = "") -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" if h else "#" for h in header.splitlines())
    lines.append("# name level index genus cuspCount widths")
    lines.extend(r.line() for r in records)
    return "\n".join(lines) + "\n"
