"""Moment polyhedra of holomorphic orbit projections.

`assemble` builds the polyhedron from first principles: for every dominant
indivisible admissible cocharacter lam and every m = 0 well-covering pair
(w, w') it adds the inequality

    <w lam, xi>  <=  <w0 w' lam, Lambda>,

intersects with the dominant chamber, canonicalizes and removes redundant
rows.  `closed_form` returns the literal inequality lists known for
sp (any rank), su(n, 1) (any rank), so*(6), so*(8) and su(2, 2).

`horn_oracle_member` is the independent route: a rational point mu lies in
the polyhedron iff some point of the strongly-orthogonal-family cone is a
Horn-admissible "difference spectrum" between mu and the dual of Lambda,
blockwise over the unitary factors.  That condition is one exact LP
feasibility test; `cross_check` compares the two routes over a grid.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import horn
from .admissible import OneParamSubgroup, enumerate_admissible, sorted_admissible
from .exactmath import (
    EQ,
    LE,
    AffineIneq,
    HPolyhedron,
    RatVec,
    cone_hull,
    implies,
    ineq_eq,
    ineq_ge,
    ineq_le,
    lp_feasible,
    lp_witness,
    poly_equal,
    rat,
    rat_str,
    remove_redundant,
)
from .rootdata import (
    SO,
    SO_STAR,
    SP,
    SU,
    GroupData,
    UnsupportedFamilyError,
    dual_weight,
    in_hol_chamber,
    pairing,
)
from .wellcover import WCPair, enumerate_m0, enumerate_m0_dominant


class DomainError(ValueError):
    """An argument violates a documented precondition (wrong chamber, wrong
    trace, no closed form for the family/rank, ...)."""


@dataclass(frozen=True)
class Provenance:
    """Where one assembled inequality came from, and whether redundancy
    elimination kept it."""

    ineq: AffineIneq
    source: str  # "chamber" | "pair" | "closed-form"
    lam: Optional[tuple[int, ...]] = None
    w: Optional[str] = None
    w_prime: Optional[str] = None
    kept: bool = True

    def to_json_obj(self):
        obj = {
            "a": [rat_str(c) for c in self.ineq.normal],
            "b": rat_str(self.ineq.bound),
            "eq": self.ineq.kind == EQ,
            "source": self.source,
            "kept": self.kept,
        }
        if self.lam is not None:
            obj["lambda"] = list(self.lam)
            obj["w"] = self.w
            obj["w_prime"] = self.w_prime
        return obj


@dataclass(frozen=True)
class OrbitPolytope:
    group: GroupData
    Lambda: RatVec
    system: HPolyhedron
    provenance: tuple[Provenance, ...]

    def to_json_obj(self):
        return {
            "group": self.group.label(),
            "Lambda": [rat_str(c) for c in self.Lambda],
            "ineqs": self.system.to_json_obj()["ineqs"],
            "provenance": [p.to_json_obj() for p in self.provenance],
        }

    def pretty(self) -> str:
        return "; ".join(display_ineq(r) for r in self.system.ineqs)


def display_ineq(row: AffineIneq) -> str:
    """Human form 'xi1 - xi2 >= 0'; rows whose canonical <= form has a
    negative leading coefficient are flipped to >=."""
    normal, bound, op = row.normal, row.bound, "<=" if row.kind == LE else "="
    if row.kind == LE:
        lead = next((c for c in normal if c != 0), Fraction(0))
        if lead < 0:
            normal, bound, op = -normal, -bound, ">="
    parts = []
    for i, c in enumerate(normal):
        if c == 0:
            continue
        mag = abs(c)
        coef = "" if mag == 1 else f"{rat_str(mag)}*"
        if not parts:
            sign = "-" if c < 0 else ""
            parts.append(f"{sign}{coef}xi{i+1}")
        else:
            parts.append(f"{'-' if c < 0 else '+'} {coef}xi{i+1}")
    lhs = " ".join(parts) if parts else "0"
    return f"{lhs} {op} {rat_str(bound)}"


def _require_assemblable(g: GroupData):
    if g.family.tag == SO:
        raise UnsupportedFamilyError(
            f"{g.label()}: no polytope pipeline for the orthogonal family"
        )


def _validate_lambda(g: GroupData, Lambda: RatVec):
    if Lambda.dim != g.dim:
        raise DomainError(f"Lambda dimension {Lambda.dim} != {g.dim}")
    if not in_hol_chamber(g, Lambda):
        raise DomainError(f"Lambda {Lambda!r} is not strictly holomorphic for {g.label()}")


def assemble(g: GroupData, Lambda, relaxed: bool = False) -> OrbitPolytope:
    """The moment polyhedron from admissible cocharacters and their m = 0
    well-covering pairs (dominant pairs instead when relaxed=True)."""
    _require_assemblable(g)
    Lambda = Lambda if isinstance(Lambda, RatVec) else RatVec(Lambda)
    _validate_lambda(g, Lambda)
    enumerate_pairs = enumerate_m0_dominant if relaxed else enumerate_m0
    records: list[Provenance] = []
    rows: list[AffineIneq] = []
    for row in g.chamber.ineqs:
        rows.append(row)
        records.append(Provenance(row.canonical(), "chamber"))
    pair_rows = []
    w0 = g.weyl.longest()
    for lam in sorted_admissible(enumerate_admissible(g)):
        for pair in enumerate_pairs(g, lam):
            normal = g.weyl.act(pair.w, lam.coords)
            bound = pairing(g.weyl.act(w0 * pair.w_prime, lam.coords), Lambda)
            row = ineq_le(list(normal), bound)
            pair_rows.append(
                (
                    row.canonical().normal.entries,
                    row,
                    Provenance(
                        row.canonical(), "pair",
                        lam=lam.ints(), w=pair.w.text(), w_prime=pair.w_prime.text(),
                    ),
                )
            )
    pair_rows.sort(key=lambda t: (t[0], t[1].canonical().bound))
    for _, row, rec in pair_rows:
        rows.append(row)
        records.append(rec)
    system = remove_redundant(HPolyhedron(g.dim, rows))
    kept_keys = {(r.normal.entries, r.bound, r.kind) for r in system.ineqs}
    final_records = tuple(
        Provenance(
            rec.ineq, rec.source, rec.lam, rec.w, rec.w_prime,
            kept=(rec.ineq.normal.entries, rec.ineq.bound, rec.ineq.kind) in kept_keys,
        )
        for rec in records
    )
    return OrbitPolytope(g, Lambda, system, final_records)


def member(p: OrbitPolytope, xi) -> bool:
    xi = xi if isinstance(xi, RatVec) else RatVec(xi)
    return p.system.contains(xi)


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


def closed_form(g: GroupData, Lambda) -> OrbitPolytope:
    """The literal inequality lists known in closed form."""
    _require_assemblable(g)
    Lambda = Lambda if isinstance(Lambda, RatVec) else RatVec(Lambda)
    _validate_lambda(g, Lambda)
    tag, params = g.family.tag, g.family.params
    rows: list[AffineIneq] = list(g.chamber.ineqs)
    n = g.dim

    if tag == SP:
        for i in range(n):
            e_i = [1 if j == i else 0 for j in range(n)]
            rows.append(ineq_ge(e_i, Lambda[i]))
    elif tag == SU and params[1] == 1 and g.unitary_coords:
        lams = [RatVec([(n + 1 if j == k else 0) - 1 for j in range(n)]) for k in range(n)]
        for k in range(n):
            rows.append(ineq_ge(list(lams[k]), pairing(lams[k], Lambda)))
        for k in range(n - 1):
            rows.append(ineq_le(list(lams[k + 1]), pairing(lams[k], Lambda)))
    elif tag == SO_STAR and params[0] == 3:
        L1, L2, L3 = Lambda
        for signs in [(-1, 1, 1), (1, -1, 1), (1, 1, -1), (1, -1, -1), (-1, 1, -1)]:
            rhs = {
                (-1, 1, 1): -L1 + L2 + L3,
                (1, -1, 1): L1 - L2 + L3,
                (1, 1, -1): L1 + L2 - L3,
                (1, -1, -1): -L1 + L2 - L3,
                (-1, 1, -1): -L1 - L2 + L3,
            }[signs]
            rows.append(ineq_ge(list(signs), rhs))
    elif tag == SO_STAR and params[0] == 4:
        L = Lambda
        # The affine-cone rows: all-but-one positive, and coordinatewise.
        for k in range(4):
            signs = [1] * 4
            signs[k] = -1
            rows.append(ineq_ge(signs, sum(s * x for s, x in zip(signs, L))))
        for i in range(4):
            e_i = [1 if j == i else 0 for j in range(4)]
            rows.append(ineq_ge(e_i, L[i]))
        # The six extra rows.
        extra = [
            ((1, -1, 1, -1), (1, 1, -1, -1)),
            ((-1, 1, 1, -1), (1, -1, 1, -1)),
            ((1, -1, -1, 1), (1, -1, 1, -1)),
            ((-1, 1, -1, 1), (-1, 1, 1, -1)),
            ((-1, 1, -1, 1), (1, -1, -1, 1)),
            ((-1, -1, 1, 1), (-1, 1, -1, 1)),
        ]
        for lhs, lam_coeff in extra:
            rows.append(ineq_le(lhs, sum(c * x for c, x in zip(lam_coeff, L))))
    elif tag == SU and params == (2, 2):
        L1, L2, L3, L4 = Lambda
        rows.append(ineq_ge([1, 0, 0, 0], L1))
        rows.append(ineq_ge([0, 1, 0, 0], L2))
        rows.append(ineq_le([0, 0, 1, 0], L3))
        rows.append(ineq_le([0, 0, 0, 1], L4))
        c1 = L1 - L2 + L3 - L4
        rows.append(ineq_le([1, -1, -1, 1], c1))
        rows.append(ineq_le([-1, 1, 1, -1], c1))
        c2 = L1 - L2 - L3 + L4
        rows.append(ineq_le([-1, 1, -1, 1], c2))
        rows.append(ineq_le([-1, 1, -1, 1], -c2))
    else:
        raise DomainError(f"no closed-form polytope for {g.label()}")

    # The literal lists are kept as stated (canonicalized and deduplicated
    # but not redundancy-reduced).
    system = HPolyhedron(g.dim, rows)
    records = tuple(Provenance(r.canonical(), "closed-form") for r in rows)
    return OrbitPolytope(g, Lambda, system, records)


# ---------------------------------------------------------------------------
# The Horn oracle
# ---------------------------------------------------------------------------


def _oracle_system(g: GroupData, Lambda: RatVec, mu: RatVec) -> HPolyhedron:
    """The feasibility system deciding mu in Delta via the Horn route.

    Variables: the chain coefficients m_1 >= ... >= m_r >= 0 of the
    strongly orthogonal cone, plus (for the two-block family su(p, q),
    q >= 2) one central shift k.  Rows: per unitary factor, the Horn
    trace equality and all T inequalities for the triple
    (mu_block, dual(Lambda)_block, gamma(m)_block + k).
    """
    r = len(g.schmid)
    two_block = g.family.tag == SU and not g.unitary_coords
    nvars = r + (1 if two_block else 0)
    lam_star = dual_weight(g, Lambda)

    def gamma_coeff(coord: int) -> list[Fraction]:
        """Coefficients of gamma(m)_coord as a linear form in m (and k)."""
        row = [g.schmid[i][coord] for i in range(r)]
        if two_block:
            row.append(Fraction(1))  # the central shift k on every coordinate
        return row

    rows: list[AffineIneq] = []
    # Chain: m_1 >= m_2 >= ... >= m_r >= 0.
    for i in range(r - 1):
        c = [Fraction(0)] * nvars
        c[i], c[i + 1] = Fraction(-1), Fraction(1)
        rows.append(ineq_le(c, 0))
    last = [Fraction(0)] * nvars
    last[r - 1] = Fraction(-1)
    rows.append(ineq_le(last, 0))

    for start, stop in g.weyl.block_ranges():
        nb = stop - start
        mu_b = mu.entries[start:stop]
        ls_b = lam_star.entries[start:stop]
        # Trace equality: sum(mu) + sum(lam*) = sum(gamma + k) over the block.
        tr = [Fraction(0)] * nvars
        for coord in range(start, stop):
            for j, c in enumerate(gamma_coeff(coord)):
                tr[j] += c
        rows.append(ineq_eq(tr, sum(mu_b) + sum(ls_b)))
        for rr in range(1, nb):
            for t in horn.enum_T(rr, nb):
                lhs_const = sum(mu_b[i - 1] for i in t.I) + sum(ls_b[j - 1] for j in t.J)
                coeffs = [Fraction(0)] * nvars
                for ell in t.L:
                    for j, c in enumerate(gamma_coeff(start + ell - 1)):
                        coeffs[j] += c
                rows.append(ineq_le(coeffs, lhs_const))
    return HPolyhedron(nvars, rows)


def horn_oracle_member(g: GroupData, Lambda, mu, witness: bool = False):
    """Membership of mu in the moment polyhedron by the Horn route only.

    Returns a bool, or (bool, schmid-cone witness RatVec or None) when
    witness=True.  Points outside the dominant chamber are rejected
    outright (the polyhedron lives inside it).
    """
    _require_assemblable(g)
    Lambda = Lambda if isinstance(Lambda, RatVec) else RatVec(Lambda)
    mu = mu if isinstance(mu, RatVec) else RatVec(mu)
    _validate_lambda(g, Lambda)
    if mu.dim != g.dim:
        raise DomainError(f"mu dimension {mu.dim} != {g.dim}")
    if not g.chamber.contains(mu):
        return (False, None) if witness else False
    sys = _oracle_system(g, Lambda, mu)
    if not witness:
        return lp_feasible(sys)
    point = lp_witness(sys)
    if point is None:
        return False, None
    r = len(g.schmid)
    gamma = RatVec([0] * g.dim)
    for i in range(r):
        gamma = gamma + g.schmid[i].scale(point[i])
    return True, gamma


# ---------------------------------------------------------------------------
# Cross-check grid
# ---------------------------------------------------------------------------


@dataclass
class CrossCheckReport:
    group: str
    Lambda: tuple
    radius: int
    points_checked: int
    disagreements: list

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def summary(self) -> str:
        return (
            f"{self.group} Lambda={self.Lambda} radius={self.radius}: "
            f"{self.points_checked} dominant grid points, "
            f"{len(self.disagreements)} disagreements"
        )


def _grid_candidates(g: GroupData, Lambda: RatVec, radius: int):
    """Dominant points Lambda + delta, delta in the half-integer box."""
    steps = [Fraction(k, 2) for k in range(-2 * radius, 2 * radius + 1)]
    for delta in itertools.product(steps, repeat=g.dim):
        if g.trace_zero and sum(delta) != 0:
            continue
        mu = RatVec([a + d for a, d in zip(Lambda, delta)])
        if g.chamber.contains(mu):
            yield mu


def _check_point(args):
    pol_system, g, Lambda, mu = args
    a = pol_system.contains(mu)
    b = horn_oracle_member(g, Lambda, mu)
    return mu, a, b


def threads_from_env() -> int:
    """Worker cap from ORBITOPE_THREADS (default 1)."""
    try:
        return max(1, int(os.environ.get("ORBITOPE_THREADS", "1")))
    except ValueError:
        return 1


def cross_check(g: GroupData, Lambda, radius: int) -> CrossCheckReport:
    """Compare assembled membership against the Horn oracle on the grid
    Lambda + [-radius, radius]^dim refined to half-integers."""
    Lambda = Lambda if isinstance(Lambda, RatVec) else RatVec(Lambda)
    pol = assemble(g, Lambda)
    jobs = [(pol.system, g, Lambda, mu) for mu in _grid_candidates(g, Lambda, radius)]
    nworkers = threads_from_env()
    disagreements = []
    if nworkers > 1 and len(jobs) > 64:
        import multiprocessing

        with multiprocessing.Pool(nworkers) as pool:
            results = pool.map(_check_point, jobs, chunksize=64)
    else:
        results = map(_check_point, jobs)
    count = 0
    for mu, a, b in results:
        count += 1
        if a != b:
            disagreements.append(
                {"mu": [rat_str(x) for x in mu], "assembled": a, "oracle": b}
            )
    return CrossCheckReport(
        group=g.label(),
        Lambda=tuple(rat_str(x) for x in Lambda),
        radius=radius,
        points_checked=count,
        disagreements=disagreements,
    )


# ---------------------------------------------------------------------------
# Geometric property helpers (used by tests and the CLI `check` verb)
# ---------------------------------------------------------------------------

_CONE_CACHE: dict = {}


def noncompact_cone(g: GroupData) -> HPolyhedron:
    """H-representation of the cone spanned by the noncompact positive
    roots (facets used for the shifted-cone inclusion test)."""
    if g not in _CONE_CACHE:
        _CONE_CACHE[g] = cone_hull(list(g.noncompact_pos), g.dim)
    return _CONE_CACHE[g]


def contained_in_shifted_cone(p: OrbitPolytope) -> bool:
    """polyhedron(Lambda) inside Lambda + cone(noncompact positives)."""
    g, Lambda = p.group, p.Lambda
    for row in noncompact_cone(g).ineqs:
        shifted = AffineIneq(row.normal, row.bound + row.normal.dot(Lambda), row.kind)
        if not implies(p.system, shifted):
            return False
    return True


def contained_in_hol_closure(p: OrbitPolytope) -> bool:
    """polyhedron inside the closure of the holomorphic chamber."""
    g = p.group
    for beta in g.noncompact_pos:
        if not implies(p.system, ineq_ge(list(beta), 0)):
            return False
    return True
