"""Structured command reports and their exact JSON / text renderings."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

__all__ = ["Check", "Report", "exact", "PASS", "FAIL", "SKIP"]

PASS, FAIL, SKIP = "pass", "fail", "skipped"


def exact(value):
    """Convert to JSON-native data; rationals become ``{"num", "den"}``."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(v) for v in value]
    if isinstance(value, float):
        raise TypeError("floating point values are not allowed in reports")
    raise TypeError(f"cannot serialize {type(value).__name__}")


@dataclass
class Check:
    name: str
    status: str
    details: str = ""

    @classmethod
    def of(cls, name: str, ok: bool, details: str = "") -> Check:
        return cls(name, PASS if ok else FAIL, details)

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "details": self.details}


@dataclass
class Report:
    command: str
    parameters: dict
    results: dict
    checks: list[Check] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": exact(self.parameters),
            "results": exact(self.results),
            "checks": [c.as_dict() for c in self.checks],
        }

    def failed(self, allow_skip: bool = False) -> bool:
        bad = {FAIL} if allow_skip else {FAIL, SKIP}
        return any(c.status in bad for c in self.checks)

    def to_json(self) -> str:
        return dumps(self.as_dict())

    def to_table(self) -> str:
        lines = [f"{self.command}"]
        for k, v in exact(self.parameters).items():
            lines.append(f"  {k} = {_inline(v)}")
        lines.append("results:")
        _render(exact(self.results), lines, 1)
        if self.checks:
            lines.append("checks:")
            width = max(len(c.name) for c in self.checks)
            for c in self.checks:
                tail = f"  {c.details}" if c.details else ""
                lines.append(f"  [{c.status.upper():7}] {c.name:<{width}}{tail}")
        return "\n".join(lines) + "\n"


def dumps(data) -> str:
    """Canonical JSON: insertion order, two-space indent, trailing newline."""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _is_leaf(v) -> bool:
    if isinstance(v, dict):
        return set(v) == {"num", "den"}
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return True


def _inline(v) -> str:
    if isinstance(v, dict):
        return f"{v['num']}/{v['den']}"
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, bool):
        return str(v).lower()
    if v is None:
        return "-"
    return str(v)


def _render(v, lines: list[str], depth: int):
    pad = "  " * depth
    if _is_leaf(v):
        lines.append(f"{pad}{_inline(v)}")
    elif isinstance(v, dict):
        for k, x in v.items():
            if _is_leaf(x):
                lines.append(f"{pad}{k}: {_inline(x)}")
            else:
                lines.append(f"{pad}{k}:")
                _render(x, lines, depth + 1)
    else:
        for x in v:
            if isinstance(x, dict) and not _is_leaf(x):
                lines.append(f"{pad}- " + ", ".join(f"{k}={_render_flat(y)}" for k, y in x.items()))
            else:
                lines.append(f"{pad}- {_render_flat(x)}")


def _render_flat(v) -> str:
    if _is_leaf(v):
        return _inline(v)
    if isinstance(v, list):
        return "[" + ", ".join(_render_flat(x) for x in v) + "]"
    return "{" + ", ".join(f"{k}={_render_flat(y)}" for k, y in v.items()) + "}"
