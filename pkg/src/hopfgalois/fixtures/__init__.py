"""Loader for the pinned reference values (expected matrices, polynomials and
table rows), each annotated with the table location it was transcribed from.

The fixture directory can be overridden with the HOPFGALOIS_FIXTURE_DIR
environment variable (used by the tamper tests and by verify-fixtures).
"""

from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path

SUPPORTED_VERSION = 1
ENV_VAR = "HOPFGALOIS_FIXTURE_DIR"


class FixtureError(RuntimeError):
    pass


def fixture_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent


def load(p: int) -> dict:
    path = fixture_dir() / f"p{p}.json"
    if not path.exists():
        raise FixtureError(f"missing fixture file {path}")
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FixtureError(f"corrupt fixture file {path}: {exc}") from exc
    if data.get("version") != SUPPORTED_VERSION:
        raise FixtureError(
            f"fixture version {data.get('version')!r} unsupported (want {SUPPORTED_VERSION})"
        )
    if data.get("p") != p:
        raise FixtureError(f"fixture file {path} is for p={data.get('p')}")
    return data


def case_fixtures(p: int, label: str) -> dict | None:
    try:
        data = load(p)
    except FixtureError:
        raise
    return data["cases"].get(label)


def frac(s) -> Fraction:
    return Fraction(s)


def frac_row(row) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in row)


def frac_rows(rows) -> list[tuple[Fraction, ...]]:
    return [frac_row(r) for r in rows]
