"""Machine-readable run records: JSON (exact + float) and CSV (float only).

Exact quantities are serialized as rational strings "num/den" and survive a
round trip bit for bit.  CSV carries float midpoints only, for plotting; the
JSON record is the source of truth.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

SCHEMA_VERSION = "1"


def rat(x) -> str:
    """Exact rational as a canonical string."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}" if f.denominator != 1 else str(f.numerator)


def unrat(s: str) -> Fraction:
    return Fraction(s)


@dataclass
class ResultRecord:
    command: str
    inputs: dict
    outputs: dict
    notes: list = field(default_factory=list)
    timing_seconds: float = 0.0
    schema_version: str = SCHEMA_VERSION

    def to_json(self) -> str:
        payload = {
            "schema_version": self.schema_version,
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "notes": self.notes,
            "timing_seconds": self.timing_seconds,
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "ResultRecord":
        d = json.loads(text)
        return ResultRecord(
            command=d["command"],
            inputs=d["inputs"],
            outputs=d["outputs"],
            notes=d.get("notes", []),
            timing_seconds=d.get("timing_seconds", 0.0),
            schema_version=d.get("schema_version", SCHEMA_VERSION),
        )

    def to_csv(self) -> str:
        """Flat float view: one row per element of outputs['rows'] (when
        present), else a single row of scalar float-able outputs."""
        buf = io.StringIO()
        rows = self.outputs.get("rows")
        if rows:
            fieldnames = list(rows[0].keys())
            w = csv.DictWriter(buf, fieldnames=fieldnames)
            w.writeheader()
            for row in rows:
                w.writerow({k: _floatish(v) for k, v in row.items()})
        else:
            scalars = {k: v for k, v in self.outputs.items() if _is_scalar(v)}
            w = csv.DictWriter(buf, fieldnames=list(scalars.keys()))
            w.writeheader()
            w.writerow({k: _floatish(v) for k, v in scalars.items()})
        return buf.getvalue()


def _is_scalar(v) -> bool:
    return isinstance(v, (int, float, str, bool)) or v is None


def _floatish(v):
    if isinstance(v, str) and "/" in v:
        try:
            return float(Fraction(v))
        except (ValueError, ZeroDivisionError):
            return v
    return v


def juddian_point_payload(point) -> dict:
    """JSON-ready view of a JuddianPoint: exact bounds plus float midpoints."""
    val = point.validation
    return {
        "kappa_sq_lower": rat(point.kappa_sq.lower),
        "kappa_sq_upper": rat(point.kappa_sq.upper),
        "kappa_lower": point.kappa[0],
        "kappa_upper": point.kappa[1],
        "kappa_mid": point.kappa_mid,
        "multiplicity": point.multiplicity,
        "minimal_factor": [rat(c) for c in point.modulus.coeffs],
        "energy": point.energy,
        "energy_expression": "E = 2*(k - j/2 - 1/2 - t) + j + 3/2 at the enclosed root t",
        "exact_eigencheck": val.exact_eigencheck,
        "realizable_sector": val.realizable,
        "oracle_distance": val.oracle_distance,
        "oracle_truncation": val.oracle_truncation,
        "reconstruction_residual": val.reconstruction_residual,
    }


def juddian_point_row(point) -> dict:
    """CSV row (floats only)."""
    val = point.validation
    return {
        "kappa": point.kappa_mid,
        "kappa_sq": 0.5 * (float(point.kappa_sq.lower) + float(point.kappa_sq.upper)),
        "energy": point.energy,
        "multiplicity": point.multiplicity,
        "exact_eigencheck": int(val.exact_eigencheck),
        "oracle_distance": val.oracle_distance if val.oracle_distance is not None else "",
        "reconstruction_residual": (val.reconstruction_residual
                                    if val.reconstruction_residual is not None else ""),
    }
