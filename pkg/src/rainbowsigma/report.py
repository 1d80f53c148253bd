"""Per-instance bound reports and their key/value text serialisation."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

TIMING_KEYS = ("runtime_ms",)


def fmt_rational(q: Optional[Fraction]) -> str:
    if q is None:
        return "undefined"
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Optional[Fraction]:
    if text == "undefined":
        return None
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


@dataclass
class BoundReport:
    kind: str
    n: int
    m: int
    sigma2: Optional[int]
    branch: str = ""
    sizes: dict[str, int] = field(default_factory=dict)
    k1: Optional[int] = None
    k2: Optional[int] = None
    palette_size: Optional[int] = None
    implemented_bound: Optional[Fraction] = None
    statement_bound: Optional[Fraction] = None
    verified: bool = False
    seed: Optional[int] = None
    runtime_ms: float = 0.0
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def within_bound(self) -> bool:
        if self.palette_size is None or self.implemented_bound is None:
            return True
        return self.palette_size <= self.implemented_bound

    @property
    def ok(self) -> bool:
        return self.verified and self.within_bound

    def to_record(self) -> list[tuple[str, str]]:
        rows = [
            ("kind", self.kind),
            ("n", str(self.n)),
            ("m", str(self.m)),
            ("sigma2", "undefined" if self.sigma2 is None else str(self.sigma2)),
            ("branch", self.branch),
        ]
        rows += [(f"size.{k}", str(v)) for k, v in self.sizes.items()]
        if self.k1 is not None:
            rows.append(("k1", str(self.k1)))
        if self.k2 is not None:
            rows.append(("k2", str(self.k2)))
        if self.palette_size is not None:
            rows.append(("palette_size", str(self.palette_size)))
        rows.append(("implemented_bound", fmt_rational(self.implemented_bound)))
        rows.append(("statement_bound", fmt_rational(self.statement_bound)))
        rows.append(("within_bound", str(self.within_bound).lower()))
        rows.append(("verified", str(self.verified).lower()))
        rows.append(("seed", "none" if self.seed is None else str(self.seed)))
        for k, v in self.extra.items():
            rows.append((k, fmt_rational(v) if isinstance(v, Fraction) else str(v)))
        rows.append(("runtime_ms", f"{self.runtime_ms:.3f}"))
        return rows

    def to_text(self) -> str:
        return "".join(f"{k}: {v}\n" for k, v in self.to_record())

    def to_json(self) -> dict[str, Any]:
        return {k: v for k, v in self.to_record()}


def format_records(records: list[list[tuple[str, str]]]) -> str:
    """Blank-line separated key: value blocks."""
    return "\n".join("".join(f"{k}: {v}\n" for k, v in rec) for rec in records)


def strip_timing(text: str) -> str:
    return "".join(
        line + "\n" for line in text.splitlines()
        if not any(line.startswith(f"{k}:") for k in TIMING_KEYS)
    )


def dump_aggregate(path, records: list[list[tuple[str, str]]]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump([dict(r) for r in records], fh, indent=2, sort_keys=True)
        fh.write("\n")
