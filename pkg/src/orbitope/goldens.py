"""Checked-in ground-truth tables used by the test suite.

Each golden record is one JSON file under goldens/<chapter>/<id>.json with
the shape {"id": ..., "kind": ..., "payload": ...}.  The payload formats:

  horn_triples      {"sets": {"r,n": [{"I": [...], "J": [...], "L": [...]}]}}
  admissible_sets   {"instances": {"<spec>": [[int, ...], ...]}}
  polytope_rows     {"instances": {"<rank key>": [row, ...]}} with each row
                    {"xi": [...], "lam": [...], "op": ">="|"<="|"="}; the
                    right side of a row is <lam, Lambda> at test time; rows
                    with "lam" omitted have right side 0.
  coset_table       {"rows": [...]} (see the 7.3.3 tables)
  pair_table        {"pairs": [{"w": words, "w_prime": words}, ...]}

Inequality templates keep Lambda symbolic exactly so parametric statements
are instantiated at test time; tests never read expected data from the
code under test.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from typing import Iterable

from .exactmath import AffineIneq, HPolyhedron, RatVec, ineq_eq, ineq_ge, ineq_le
from .horn import HornTriple

_KINDS = {"horn_triples", "admissible_sets", "polytope_rows", "coset_table", "pair_table"}


@dataclass(frozen=True)
class GoldenRecord:
    id: str
    kind: str
    payload: dict


def _chapter_of(golden_id: str) -> str:
    m = re.search(r"(\d+)", golden_id)
    if not m:
        raise KeyError(f"golden id {golden_id!r} carries no chapter number")
    return f"{int(m.group(1)):02d}"


def load(golden_id: str) -> GoldenRecord:
    """Load and validate one golden record by id."""
    chapter = _chapter_of(golden_id)
    ref = resources.files(__package__).joinpath("goldens", chapter, f"{golden_id}.json")
    try:
        raw = ref.read_text()
    except FileNotFoundError as exc:
        raise KeyError(f"unknown golden id {golden_id!r}") from exc
    obj = json.loads(raw)
    if obj.get("id") != golden_id:
        raise ValueError(f"golden file for {golden_id!r} carries id {obj.get('id')!r}")
    kind = obj.get("kind")
    if kind not in _KINDS:
        raise ValueError(f"golden {golden_id!r} has unknown kind {kind!r}")
    return GoldenRecord(golden_id, kind, obj["payload"])


def all_ids() -> list[str]:
    ids = []
    root = resources.files(__package__).joinpath("goldens")
    for chapter in root.iterdir():
        if not chapter.is_dir():
            continue
        for f in chapter.iterdir():
            name = f.name
            if name.endswith(".json"):
                ids.append(name[: -len(".json")])
    return sorted(ids)


# -- typed payload accessors -------------------------------------------------


def triples(rec: GoldenRecord, r: int, n: int) -> list[HornTriple]:
    if rec.kind != "horn_triples":
        raise ValueError(f"{rec.id} is not a horn_triples golden")
    key = f"{r},{n}"
    return [
        HornTriple(n, tuple(t["I"]), tuple(t["J"]), tuple(t["L"]))
        for t in rec.payload["sets"][key]
    ]


def admissible_vectors(rec: GoldenRecord, spec: str) -> set[tuple[int, ...]]:
    if rec.kind != "admissible_sets":
        raise ValueError(f"{rec.id} is not an admissible_sets golden")
    return {tuple(v) for v in rec.payload["instances"][spec]}


def instantiate_rows(rows: Iterable[dict], Lambda: RatVec, dim: int) -> HPolyhedron:
    """Turn symbolic rows into a concrete inequality system at Lambda."""
    out: list[AffineIneq] = []
    for row in rows:
        xi = row["xi"]
        lamc = row.get("lam", [0] * dim)
        bound = RatVec(lamc).dot(Lambda) if any(c != 0 for c in lamc) else 0
        op = row["op"]
        if op == ">=":
            out.append(ineq_ge(xi, bound))
        elif op == "<=":
            out.append(ineq_le(xi, bound))
        elif op == "=":
            out.append(ineq_eq(xi, bound))
        else:
            raise ValueError(f"bad op {op!r}")
    return HPolyhedron(dim, out)


def polytope_system(rec: GoldenRecord, instance: str, Lambda: RatVec) -> HPolyhedron:
    if rec.kind != "polytope_rows":
        raise ValueError(f"{rec.id} is not a polytope_rows golden")
    rows = rec.payload["instances"][instance]
    return instantiate_rows(rows, Lambda, Lambda.dim)
