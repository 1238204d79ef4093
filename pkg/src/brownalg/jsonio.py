"""JSON artifact schemas with bit-exact round-trips.

involutive-algebra/v1: {dim, labels[], unit, mult: [[i, j, [[k, coeff]...]]...],
                        invol: [[i, [[k, coeff]...]]...], trace?}
grading/v1:            {group, degrees: [elt...], g0?, verified, fingerprint?}
lie/v1:                {dim, labels, brackets: [[i, j, [[k, coeff]...]]...],
                        degrees?, certificates}

Coefficients are the exact "a/b+c/d*i" strings; group elements are
{"free": [...], "torsion": [...]}.  Serialization sorts keys and indices so
equal objects produce byte-identical files.
"""

from __future__ import annotations

import json

from .qi import QI, ONE, format_qi, parse_qi
from .groups import AbelianGroup, GroupElt
from .linalg import QMatrix, Vec
from .structurable import Algebra
from .gradings import Grading, Fingerprint
from .lie import LieAlg

__all__ = ["vec_json", "vec_from_json", "algebra_json", "algebra_from_json",
           "group_json", "group_from_json", "elt_json", "elt_from_json",
           "grading_json", "grading_from_json", "lie_json", "lie_from_json",
           "dumps", "write_artifact"]

SCHEMA_ALGEBRA = "involutive-algebra/v1"
SCHEMA_GRADING = "grading/v1"
SCHEMA_LIE = "lie/v1"
GENERATOR = "brownalg 0.1.0"


def vec_json(v: Vec):
    return [[k, format_qi(c)] for k, c in sorted(v.items())]


def vec_from_json(data) -> Vec:
    return {int(k): parse_qi(c) for k, c in data}


def algebra_json(alg: Algebra, seed=None):
    doc = {
        "schema": SCHEMA_ALGEBRA,
        "generator": GENERATOR,
        "dim": alg.dim,
        "labels": list(alg.labels),
        "unit": alg.unit_index if alg.unit_index is not None else vec_json(alg.one),
        "mult": [[i, j, vec_json(alg.mult[i][j])]
                 for i in range(alg.dim) for j in range(alg.dim)
                 if alg.mult[i][j]],
        "invol": [[i, vec_json(alg.invol.cols[i])] for i in range(alg.dim)],
    }
    if alg.trace is not None:
        doc["trace"] = [format_qi(t) for t in alg.trace]
    if seed is not None:
        doc["seed"] = seed
    return doc


def algebra_from_json(doc) -> Algebra:
    if doc.get("schema") != SCHEMA_ALGEBRA:
        raise ValueError("not an involutive-algebra/v1 document")
    n = doc["dim"]
    mult = [[dict() for _ in range(n)] for _ in range(n)]
    for i, j, entries in doc["mult"]:
        mult[i][j] = vec_from_json(entries)
    invol = QMatrix(n, [dict() for _ in range(n)])
    for i, entries in doc["invol"]:
        invol.cols[i] = vec_from_json(entries)
    unit = doc["unit"]
    if not isinstance(unit, int):
        unit = vec_from_json(unit)
    trace = [parse_qi(t) for t in doc["trace"]] if "trace" in doc else None
    return Algebra(doc["labels"], mult, invol, unit, trace=trace)


def group_json(g: AbelianGroup):
    return {"free_rank": g.free_rank, "torsion": list(g.torsion)}


def group_from_json(doc) -> AbelianGroup:
    return AbelianGroup(doc["free_rank"], tuple(doc["torsion"]))


def elt_json(e: GroupElt):
    return {"free": list(e.free), "torsion": list(e.tors)}


def elt_from_json(group: AbelianGroup, doc) -> GroupElt:
    return GroupElt(group, tuple(doc["free"]), tuple(doc["torsion"]))


def grading_json(grading: Grading, g0: GroupElt | None = None,
                 fingerprint: Fingerprint | None = None, seed=None):
    doc = {
        "schema": SCHEMA_GRADING,
        "generator": GENERATOR,
        "group": group_json(grading.group),
        "degrees": [elt_json(d) for d in grading.degrees],
        "verified": grading.verified,
    }
    if g0 is not None:
        doc["g0"] = elt_json(g0)
    if fingerprint is not None:
        doc["fingerprint"] = fingerprint.as_json()
    if seed is not None:
        doc["seed"] = seed
    return doc


def grading_from_json(doc, algebra: Algebra) -> tuple[Grading, GroupElt | None]:
    if doc.get("schema") != SCHEMA_GRADING:
        raise ValueError("not a grading/v1 document")
    group = group_from_json(doc["group"])
    degrees = [elt_from_json(group, d) for d in doc["degrees"]]
    grading = Grading(algebra, group, degrees, verified=doc.get("verified", False))
    g0 = elt_from_json(group, doc["g0"]) if "g0" in doc else None
    return grading, g0


def lie_json(L: LieAlg, seed=None):
    doc = {
        "schema": SCHEMA_LIE,
        "generator": GENERATOR,
        "dim": L.dim,
        "labels": list(L.labels),
        "brackets": [[i, j, vec_json(v)] for (i, j), v in sorted(L.brk.items())],
        "certificates": L.certs,
    }
    if L.degrees is not None:
        doc["group"] = group_json(L.group)
        doc["degrees"] = [elt_json(d) for d in L.degrees]
    if seed is not None:
        doc["seed"] = seed
    return doc


def lie_from_json(doc) -> LieAlg:
    if doc.get("schema") != SCHEMA_LIE:
        raise ValueError("not a lie/v1 document")
    brk = {}
    for i, j, entries in doc["brackets"]:
        brk[(i, j)] = vec_from_json(entries)
    L = LieAlg(doc["labels"], brk)
    if "degrees" in doc:
        L.group = group_from_json(doc["group"])
        L.degrees = [elt_from_json(L.group, d) for d in doc["degrees"]]
    L.certs = doc.get("certificates", {})
    return L


def dumps(doc) -> str:
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def write_artifact(path, doc) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(doc))
