"""JSON code-spec files: a field, a GRS code over it, and what it claims to be.

Schema (``version`` 1)::

    {
      "format": "grsdual-codespec",
      "version": 1,
      "field": {"p": 3, "m": 2, "modulus": [1, 0, 1], "g": 4},
      "construction": {"kind": "selfdual", "case": "thm1-ii", "r": 3, "s": 1, "t": 1, "k": 3},
      "claim": "self_dual",
      "n": 6,
      "k": 3,
      "extended": false,
      "a": [1, 7, 2, 5, 4, 8],
      "v": [...],
      "generator_matrix": [[...], ...]        # optional
    }

Elements are canonical integer encodings.  ``construction`` may be null for
hand-made codes.  ``claim`` is one of ``self_orthogonal``, ``self_dual``,
``almost_self_dual``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .gf import FieldError, FieldSpec, field_from_spec
from .grs import CodeError, EvalPoints, GrsCode, generator_matrix

FORMAT = "grsdual-codespec"
VERSION = 1
CLAIMS = ("self_orthogonal", "self_dual", "almost_self_dual")
CLAIM_OF_KIND = {"selfdual": "self_dual", "selforthogonal": "self_orthogonal", "almost": "almost_self_dual"}


class CodeSpecError(ValueError):
    """Malformed or inconsistent code-spec file."""


@dataclass
class CodeSpec:
    code: GrsCode
    claim: str
    construction: dict | None = None
    include_matrix: bool = False
    stored_matrix: list | None = None

    @property
    def field(self) -> FieldSpec:
        return self.code.field

    def to_dict(self) -> dict:
        F = self.field
        d = {
            "format": FORMAT,
            "version": VERSION,
            "field": {"p": F.p, "m": F.m, "modulus": list(F.modulus), "g": F.g},
            "construction": self.construction,
            "claim": self.claim,
            "n": self.code.n,
            "k": self.code.k,
            "extended": self.code.extended,
            "a": list(self.code.points.a),
            "v": list(self.code.v),
        }
        if self.stored_matrix is not None:
            d["generator_matrix"] = self.stored_matrix
        elif self.include_matrix:
            d["generator_matrix"] = generator_matrix(self.code).tolist()
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def matrix_matches(self) -> bool:
        """Whether a stored generator matrix (if any) is the one ``a``, ``v`` define."""
        if self.stored_matrix is None:
            return True
        return np.array_equal(np.asarray(self.stored_matrix, dtype=np.int64), generator_matrix(self.code))


def _req(d: dict, key: str, typ):
    if key not in d:
        raise CodeSpecError(f"missing field {key!r}")
    val = d[key]
    if typ is int and isinstance(val, bool) or not isinstance(val, typ):
        raise CodeSpecError(f"field {key!r} has the wrong type")
    return val


def from_dict(d) -> CodeSpec:
    if not isinstance(d, dict):
        raise CodeSpecError("top level must be a JSON object")
    if d.get("format") != FORMAT:
        raise CodeSpecError(f"not a {FORMAT} file")
    if d.get("version") != VERSION:
        raise CodeSpecError(f"unsupported version {d.get('version')!r}")
    fd = _req(d, "field", dict)
    try:
        F = field_from_spec(_req(fd, "p", int), _req(fd, "m", int), _req(fd, "modulus", list), _req(fd, "g", int))
    except FieldError as exc:
        raise CodeSpecError(str(exc)) from exc
    a, v = _req(d, "a", list), _req(d, "v", list)
    if not all(isinstance(x, int) and not isinstance(x, bool) and 0 <= x < F.q for x in a + v):
        raise CodeSpecError("elements must be integers in [0, q)")
    claim = _req(d, "claim", str)
    if claim not in CLAIMS:
        raise CodeSpecError(f"unknown claim {claim!r}")
    construction = d.get("construction")
    if construction is not None and not isinstance(construction, dict):
        raise CodeSpecError("construction must be an object or null")
    try:
        code = GrsCode(EvalPoints(F, a), v, _req(d, "k", int), _req(d, "extended", bool))
    except CodeError as exc:
        raise CodeSpecError(str(exc)) from exc
    if _req(d, "n", int) != code.n:
        raise CodeSpecError(f"n={d['n']} does not match {code.n} evaluation points")
    stored = d.get("generator_matrix")
    if stored is not None:
        if not (isinstance(stored, list) and all(isinstance(row, list) for row in stored)):
            raise CodeSpecError("generator_matrix must be a list of rows")
    return CodeSpec(code, claim, construction, stored_matrix=stored)


def loads(text: str) -> CodeSpec:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeSpecError(f"invalid JSON: {exc}") from exc
    return from_dict(d)


def load(path) -> CodeSpec:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
