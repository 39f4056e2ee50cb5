"""JSON report assembly.

Every report has exactly three top-level keys: ``header`` (tool version and
the full config echo), ``body`` (command payload) and ``findings`` (identity
discrepancies).  Rationals are written as ``{"num": "...", "den": "..."}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .lattice import AmbientClass
from .restriction import RestrictedClass

TOOL = "grassblow"


@dataclass
class RunConfig:
    command: str
    s: int | None = None
    p: int | None = None
    n: int | None = None
    max_n: int | None = None
    side: str | None = None
    j: int | None = None
    l: int | None = None
    points: int | None = None
    seed: int = 0
    sign_convention: str = "listed"
    output: str = "human"

    def echo(self) -> dict:
        return {
            "command": self.command,
            "s": self.s,
            "p": self.p,
            "n": self.n,
            "max_n": self.max_n,
            "side": self.side,
            "j": self.j,
            "l": self.l,
            "points": self.points,
            "seed": self.seed,
            "sign_convention": self.sign_convention,
            "output": self.output,
        }


@dataclass
class Report:
    config: RunConfig
    body: dict = field(default_factory=dict)
    findings: list = field(default_factory=list)
    extra_header: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        header = {"tool": TOOL, "version": __version__, "config": self.config.echo()}
        header.update(self.extra_header)
        return {"header": jsonable(header), "body": jsonable(self.body), "findings": jsonable(self.findings)}


def rational(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def parse_rational(d: dict) -> Fraction:
    return Fraction(int(d["num"]), int(d["den"]))


def class_dict(c) -> dict:
    return {label: rational(v) for label, v in zip(c.labels(), c.vector()) if v}


def jsonable(obj):
    """Convert report payloads to plain JSON types."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, (AmbientClass, RestrictedClass)):
        return class_dict(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(report: Report) -> str:
    return json.dumps(report.as_dict(), sort_keys=True, indent=2)
