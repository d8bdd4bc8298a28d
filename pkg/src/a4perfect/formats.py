"""JSON file formats for complexes and classifying triples."""

from __future__ import annotations

import json
from pathlib import Path

from .bgg import LABELS, ClassifyingTriple
from .errors import DomainError
from .exactfield import Field, Matrix, get_field, scalar_from_json, scalar_to_json
from .perfcx import ModuleRep, PerfectComplex, validate, zero_complex
from .polys import GradedIdeal, is_invariant_ideal, is_parameter_ideal
from .skewalg import GroupTag


def matrix_to_json(M: Matrix) -> list[list]:
    return [[scalar_to_json(M.field, x) for x in row] for row in M.to_lists()]


def matrix_from_json(field: Field, rows: list, nrows: int, ncols: int, what: str) -> Matrix:
    if len(rows) != nrows:
        raise DomainError(f"{what}: expected {nrows} rows, got {len(rows)}")
    entries = []
    for r in rows:
        if len(r) != ncols:
            raise DomainError(f"{what}: expected {ncols} columns, got {len(r)}")
        entries.append([scalar_from_json(field, x) for x in r])
    return Matrix.from_lists(field, entries, ncols)


def complex_to_json(C: PerfectComplex) -> dict:
    return {
        "field": C.field.name,
        "group": C.group.value,
        "lo": C.lo,
        "hi": C.hi,
        "terms": [
            {
                "dim": T.dim,
                "act_y1": matrix_to_json(T.act_y1),
                "act_y2": matrix_to_json(T.act_y2),
                "act_q": matrix_to_json(T.act_q),
            }
            for T in C.terms
        ],
        "diffs": [matrix_to_json(d) for d in C.diffs],
    }


def complex_from_json(doc: dict, check: bool = True) -> PerfectComplex:
    try:
        field = get_field(doc.get("field", "F2"))
        group = GroupTag.parse(doc.get("group", "C3"))
        lo, hi = int(doc["lo"]), int(doc["hi"])
        raw_terms = doc["terms"]
        raw_diffs = doc.get("diffs", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed complex file: {exc}") from exc
    if len(raw_terms) != hi - lo + 1:
        raise DomainError(f"{len(raw_terms)} terms do not fill degrees {lo}..{hi}")
    if not raw_terms:
        return PerfectComplex(field, group, lo, ())
    if len(raw_diffs) != len(raw_terms) - 1:
        raise DomainError(f"expected {len(raw_terms) - 1} differentials, got {len(raw_diffs)}")
    try:
        terms = []
        for i, t in enumerate(raw_terms):
            n = int(t["dim"])
            mats = [matrix_from_json(field, t[k], n, n, f"term {lo + i} {k}") for k in ("act_y1", "act_y2", "act_q")]
            terms.append(ModuleRep(field, group, n, *mats))
        diffs = [
            matrix_from_json(field, d, terms[i + 1].dim, terms[i].dim, f"d^{lo + i}")
            for i, d in enumerate(raw_diffs)
        ]
    except DomainError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed complex file: {exc}") from exc
    C = PerfectComplex(field, group, lo, tuple(terms), tuple(diffs))
    if check:
        rep = validate(C)
        if not rep.ok:
            raise DomainError(rep.first())
    return C


def triple_to_json(T: ClassifyingTriple, group: GroupTag = GroupTag.C3) -> dict:
    return {
        "l": T.l,
        "L": T.L,
        "J": T.J.to_strings(),
        "field": T.J.field.name,
        "group": group.value,
    }


def triple_from_json(doc: dict) -> tuple[ClassifyingTriple, GroupTag]:
    try:
        field = get_field(doc.get("field", "F2"))
        group = GroupTag.parse(doc.get("group", "C3"))
        l = int(doc["l"])
        L = doc.get("L", "triv")
        gens = list(doc["J"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed triple file: {exc}") from exc
    if L not in LABELS:
        raise DomainError(f"L must be one of {LABELS}, got {L!r}")
    try:
        J = GradedIdeal.parse(gens, field)
    except DomainError:
        raise
    except (TypeError, ValueError) as exc:
        raise DomainError(f"cannot parse J: {exc}") from exc
    chk = is_parameter_ideal(J)
    if not chk.ok:
        raise DomainError(f"J is not a parameter ideal: {chk.reason}")
    if group is GroupTag.C3 and not is_invariant_ideal(J):
        raise DomainError("J is not invariant under C3")
    return ClassifyingTriple(l, L, J), group


def load_json(path: str | Path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path} is not valid JSON: {exc}") from exc


def is_triple_doc(doc: dict) -> bool:
    return "J" in doc and "terms" not in doc


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=1)


__all__ = [
    "complex_to_json",
    "complex_from_json",
    "triple_to_json",
    "triple_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "load_json",
    "dump_json",
    "is_triple_doc",
    "zero_complex",
]
