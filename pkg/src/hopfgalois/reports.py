"""Report values emitted by the CLI: JSON with exact rational strings (no
floating point anywhere) and a markdown table renderer.  Reports round-trip
losslessly through their JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .matrices import Matrix
from .poly import MultiPoly
from .scalars import QuadUnit


def encode_scalar(x) -> str:
    if isinstance(x, QuadUnit):
        if x.y == 0:
            return str(x.x)
        sign = "+" if x.y >= 0 else "-"
        return f"{x.x}{sign}{abs(x.y)}t"
    return str(Fraction(x))


def encode_matrix(m: Matrix) -> list[list[str]]:
    return [[encode_scalar(x) for x in row] for row in m.rows]


def encode_vector(v) -> list[str]:
    return [encode_scalar(x) for x in v]


def encode_multipoly(mp: MultiPoly) -> list[list]:
    return [
        [str(c), list(e)]
        for e, c in sorted(mp.terms.items(), reverse=True)
    ]


@dataclass(frozen=True)
class Report:
    command: str
    payload: dict  # JSON-plain: str/int/bool/None/list/dict only

    def to_json(self) -> str:
        return json.dumps(
            {"command": self.command, "payload": self.payload},
            indent=2,
            ensure_ascii=False,
        )

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        return cls(command=data["command"], payload=data["payload"])


def render_markdown_table(headers: list[str], rows: list[list[str]]) -> str:
    out = ["| " + " | ".join(headers) + " |"]
    out.append("|" + "|".join("---" for _ in headers) + "|")
    for row in rows:
        out.append("| " + " | ".join(str(x) for x in row) + " |")
    return "\n".join(out)


def render_matrix_md(m: list[list[str]]) -> str:
    width = max((len(x) for row in m for x in row), default=1)
    lines = []
    for row in m:
        lines.append("  [ " + "  ".join(x.rjust(width) for x in row) + " ]")
    return "\n".join(lines)
