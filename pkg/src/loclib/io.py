"""
JSON code files and text formatting.

A code file looks like::

    {"field": {"m": 8, "poly": 285},
     "params": {"n": 8, "k": 4, "d": 4},
     "H": [[...], ...], "G": [[...], ...],
     "tanner": {"n": 8, "checks": [{"support": [0, 1, 2], "local": true}, ...]},
     "meta": {"class": 3, "seed": 1, "theta_star": 2}}

``G``, ``tanner`` and ``meta`` are optional.  Entries are decimal integers.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Union

from .code import CodeParams, LinearCode
from .field import field_from_dict
from .linalg import FieldMatrix, generator_from_parity
from .locality import TannerGraph


def fmt_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator} ({float(x):g})"


def rational_dict(x: Optional[Fraction]) -> Optional[Dict[str, Any]]:
    if x is None:
        return None
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator, "decimal": float(x)}


def code_to_dict(code: LinearCode, tanner: Optional[TannerGraph] = None) -> Dict[str, Any]:
    p = code.params
    meta = {k: v for k, v in code.meta.items() if k in ("class", "seed", "theta_star", "attempts", "name")}
    out: Dict[str, Any] = {
        "field": code.field.to_dict(),
        "params": {"n": p.n, "k": p.k, "d": p.d},
        "H": code.H.to_list(),
        "G": code.G.to_list(),
    }
    if tanner is not None:
        out["tanner"] = tanner.to_dict()
    if meta:
        out["meta"] = meta
    return out


class CodeFile:
    """Raw contents of a code file, parsed but not yet verified."""

    def __init__(self, obj: Dict[str, Any]):
        self.raw = obj
        self.field = field_from_dict(obj["field"])
        prm = obj["params"]
        self.n, self.k, self.d = int(prm["n"]), int(prm["k"]), int(prm["d"])
        self.H_rows = [[int(v) for v in r] for r in obj["H"]]
        self.G_rows = [[int(v) for v in r] for r in obj["G"]] if obj.get("G") is not None else None
        self.tanner = TannerGraph.from_dict(obj["tanner"]) if obj.get("tanner") else None
        self.meta = dict(obj.get("meta") or {})

    @property
    def params(self) -> CodeParams:
        return CodeParams(self.n, self.k, self.d, self.field)

    def H(self) -> FieldMatrix:
        return FieldMatrix.from_rows(self.field, self.H_rows, self.n)

    def G(self) -> Optional[FieldMatrix]:
        if self.G_rows is None:
            return None
        return FieldMatrix.from_rows(self.field, self.G_rows, self.n)

    def to_code(self) -> LinearCode:
        """Build the LinearCode; raises if any invariant fails."""
        H = self.H()
        G = self.G()
        if G is None:
            G, _ = generator_from_parity(H)
        return LinearCode(self.params, G, H, dict(self.meta))


def dump_code(code: LinearCode, path: Union[str, Path], tanner: Optional[TannerGraph] = None) -> None:
    Path(path).write_text(json.dumps(code_to_dict(code, tanner), indent=1) + "\n")


def load_code_file(path: Union[str, Path]) -> CodeFile:
    return CodeFile(json.loads(Path(path).read_text()))


def load_code(path: Union[str, Path]) -> LinearCode:
    return load_code_file(path).to_code()
