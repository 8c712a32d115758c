"""Run reports: JSON, CSV and plain-text serialization.

Items are stored already in their serialized shape (plain dicts whose
numeric values are decimal strings), so ``RunReport.from_json(r.to_json())``
reproduces ``r`` exactly.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .qseries import LaurentPolynomial, RationalFunction

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


def format_value(x) -> str:
    """Exact text for an integer, Fraction, Laurent polynomial or rational function."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, LaurentPolynomial):
        return str(x)
    if isinstance(x, RationalFunction):
        if x.denominator == LaurentPolynomial.constant(1):
            return str(x.numerator)
        return f"({x.numerator}) / ({x.denominator})"
    return str(x)


def oracle_item(r) -> dict:
    item = {
        "kind": "oracle",
        "statistic": r.statistic,
        "geometry": r.geometry,
        "params": {"q": r.q, **r.parameters},
        "status": r.status,
        "oracle_value": format_value(r.oracle_value),
        "formula_value": format_value(r.formula_value),
        "enumerated_objects": str(r.enumerated_objects),
        "elapsed_ms": str(int(r.elapsed * 1000)),
    }
    if r.skipped:
        item["reason"] = r.skipped
    if r.error:
        item["reason"] = r.error
    return item


def bound_item(c) -> dict:
    return {
        "kind": "bound",
        "bound_id": c.bound_id,
        "params": dict(c.parameters),
        "status": PASS if c.holds else FAIL,
        "lhs": format_value(c.lhs),
        "relation": c.relation,
        "rhs": format_value(c.rhs),
        "is_equality": format_value(c.is_equality),
    }


def identity_item(res, geometry: str = "") -> dict:
    item = {
        "kind": "identity",
        "identity": res.name,
        "params": dict(res.parameters),
        "status": PASS if res.holds else FAIL,
        "witness": format_value(res.witness) if res.witness is not None else "0",
    }
    if res.detail:
        item["detail"] = "; ".join(res.detail)
    return item


def value_item(geometry: str, statistic: str, params: dict, value) -> dict:
    return {
        "kind": "value",
        "geometry": geometry,
        "statistic": statistic,
        "params": dict(params),
        "status": PASS,
        "value": format_value(value),
    }


def _sort_key(item: dict):
    head = item.get("statistic") or item.get("bound_id") or item.get("identity") or ""
    return (item.get("geometry", ""), head, tuple(sorted(item["params"].items())))


@dataclass
class RunReport:
    command: str
    grid: dict = field(default_factory=dict)
    items: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def summary(self) -> dict[str, int]:
        counts = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for item in self.items:
            counts[item["status"]] += 1
        return {
            "checked": counts[PASS] + counts[FAIL],
            "passed": counts[PASS],
            "failed": counts[FAIL],
            "skipped": counts[SKIPPED],
        }

    @property
    def exit_code(self) -> int:
        return 0 if self.summary["failed"] == 0 else 1

    def sort(self) -> None:
        self.items.sort(key=_sort_key)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "grid": self.grid,
            "items": self.items,
            "summary": self.summary,
            "elapsed_ms": str(self.elapsed_ms),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> RunReport:
        data = json.loads(text)
        report = cls(data["command"], data["grid"], data["items"], int(data["elapsed_ms"]))
        if report.summary != data["summary"]:
            raise ValueError("summary does not match the items")
        return report

    def to_csv(self) -> str:
        param_names = sorted({k for item in self.items for k in item["params"]})
        other = sorted({k for item in self.items for k in item if k != "params"})
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(other + param_names)
        for item in sorted(self.items, key=_sort_key):
            writer.writerow([item.get(k, "") for k in other] + [item["params"].get(k, "") for k in param_names])
        return buf.getvalue()

    def to_plain(self) -> str:
        lines = []
        for item in self.items:
            params = " ".join(f"{k}={v}" for k, v in sorted(item["params"].items()))
            if item["kind"] == "oracle":
                body = f"{item['geometry']} {item['statistic']} {params}: oracle={item['oracle_value']} formula={item['formula_value']}"
            elif item["kind"] == "bound":
                body = f"{item['bound_id']} {params}: {item['lhs']} {item['relation']} {item['rhs']}"
            elif item["kind"] == "identity":
                body = f"{item['identity']} {params}"
                if item["status"] == FAIL:
                    body += f": difference {item['witness']}"
            else:
                body = f"{item['geometry']} {item['statistic']} {params}: {item['value']}"
            if "reason" in item:
                body += f" ({item['reason']})"
            lines.append(f"{item['status'].upper():7} {body}")
        s = self.summary
        lines.append(
            f"{s['checked']} checked, {s['passed']} passed, {s['failed']} failed, {s['skipped']} skipped in {self.elapsed_ms} ms"
        )
        return "\n".join(lines)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_plain()
