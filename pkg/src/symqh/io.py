"""JSON and CSV documents for multiplication tables."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .quantum import QClass, qprod_eta
from .ring import Ambient, CohClass

FORMAT_VERSION = "1"
UNKNOWN_MARKER = "unknown"


def class_to_json(x: QClass) -> list[dict]:
    out = []
    for e in range(x.N + 1):
        if e in x.unknown:
            out.append({"qpow": e, "terms": UNKNOWN_MARKER})
            continue
        c = x.orders[e]
        if not c:
            continue
        terms = [{"theta": m.a, "eta": m.b, "num": coeff.numerator, "den": coeff.denominator}
                 for m, coeff in sorted(c.items(), key=lambda mc: (mc[0].degree, -mc[0].a))]
        out.append({"qpow": e, "terms": terms})
    return out


def class_from_json(data: list[dict], amb: Ambient, N: int) -> QClass:
    orders = [CohClass.zero(amb) for _ in range(N + 1)]
    unknown = []
    for entry in data:
        e = int(entry["qpow"])
        if not 0 <= e <= N:
            raise ValueError(f"q power {e} outside 0..{N}")
        if entry["terms"] == UNKNOWN_MARKER:
            unknown.append(e)
            continue
        terms = {}
        for t in entry["terms"]:
            if t["den"] <= 0:
                raise ValueError("denominator must be positive")
            terms[(t["theta"], t["eta"])] = Fraction(t["num"], t["den"])
        orders[e] = CohClass(amb, terms)
    return QClass(amb, N, orders, unknown)


@dataclass
class TableDocument:
    g: int
    d: int
    qmax: int
    rows: list[tuple[int, int, QClass]] = field(default_factory=list)
    format_version: str = FORMAT_VERSION

    @property
    def ambient(self) -> Ambient:
        return Ambient(self.g, self.d)

    @property
    def has_unknown(self) -> bool:
        return any(x.unknown for _, _, x in self.rows)

    @classmethod
    def build(cls, amb: Ambient, qmax: int, bound: int) -> TableDocument:
        """Rows et^u * et^v for all u + v <= bound."""
        rows = [(u, v, qprod_eta(u, v, amb, qmax))
                for u in range(bound + 1) for v in range(bound + 1 - u)]
        return cls(amb.g, amb.d, qmax, rows)

    def to_json(self) -> str:
        doc = {
            "format_version": self.format_version,
            "g": self.g,
            "d": self.d,
            "qmax": self.qmax,
            "rows": [{"u": u, "v": v, "product": class_to_json(x)} for u, v, x in self.rows],
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> TableDocument:
        doc = json.loads(text)
        amb = Ambient(doc["g"], doc["d"])
        rows = [(r["u"], r["v"], class_from_json(r["product"], amb, doc["qmax"])) for r in doc["rows"]]
        return cls(doc["g"], doc["d"], doc["qmax"], rows, doc["format_version"])

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["u", "v", "product"])
        for u, v, x in self.rows:
            writer.writerow([u, v, x.render()])
        return buf.getvalue()
