"""Exact rational vectors, affine inequality systems and linear programming.

Everything here is computed over Fraction; there is no floating point
anywhere.  The three public data types are

  RatVec       -- an immutable vector of Fractions,
  AffineIneq   -- one constraint <a, x> <= b  or  <a, x> = b,
  HPolyhedron  -- a finite system of such constraints in a fixed dimension.

On top of these the module provides an exact feasibility / optimization
solver (a dense rational simplex with Bland's rule, equalities removed by
substitution beforehand), Fourier-Motzkin elimination (used as an
independent feasibility oracle and to project parametrized cones), and the
derived predicates `implies`, `remove_redundant` and `poly_equal`.

The empty polyhedron has the distinguished canonical form { 0 <= -1 }.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Rational = Fraction

LE = "le"
EQ = "eq"


def rat(x) -> Fraction:
    """Coerce ints, strings like '3/4' and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


def rat_str(x: Fraction) -> str:
    """Serialize a Fraction as 'p' or 'p/q' (q > 1)."""
    x = rat(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RatVec:
    """Immutable rational vector."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable):
        self.entries = tuple(rat(e) for e in entries)
        if len(self.entries) < 1:
            raise ValueError("RatVec needs dimension >= 1")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, RatVec) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "RatVec(%s)" % ", ".join(rat_str(e) for e in self.entries)

    def _check(self, other: "RatVec"):
        if self.dim != other.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "RatVec") -> "RatVec":
        self._check(other)
        return RatVec(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "RatVec") -> "RatVec":
        self._check(other)
        return RatVec(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self) -> "RatVec":
        return RatVec(-a for a in self.entries)

    def scale(self, c) -> "RatVec":
        c = rat(c)
        return RatVec(c * a for a in self.entries)

    def dot(self, other: "RatVec") -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.entries, other.entries)), Fraction(0))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.entries)

    def content_gcd(self) -> int:
        """gcd of the numerators of an integral vector (0 for the zero vector)."""
        g = 0
        for a in self.entries:
            if a.denominator != 1:
                raise ValueError("content_gcd needs an integral vector")
            g = gcd(g, abs(a.numerator))
        return g


class DimensionError(ValueError):
    """Raised when vectors or constraints of unequal dimension are mixed."""


@dataclass(frozen=True)
class AffineIneq:
    """One affine constraint <normal, x> (<=|=) bound.

    Canonical form (see `canonical`) scales the row so all coefficients are
    integers of gcd 1; equalities are additionally sign-normalized so the
    leading nonzero coefficient is positive.  A zero normal is only kept for
    the degenerate rows 0 <= b / 0 = b.
    """

    normal: RatVec
    bound: Fraction
    kind: str = LE

    def __post_init__(self):
        object.__setattr__(self, "bound", rat(self.bound))
        if self.kind not in (LE, EQ):
            raise ValueError(f"kind must be {LE!r} or {EQ!r}")

    @property
    def dim(self) -> int:
        return self.normal.dim

    def canonical(self) -> "AffineIneq":
        """Scale by a positive rational to primitive-integer form.

        Invariant under scaling by any positive rational; equalities are
        also invariant under scaling by -1, resolved by making the leading
        nonzero coefficient positive.
        """
        if self.normal.is_zero():
            if self.kind == EQ:
                b = Fraction(0) if self.bound == 0 else Fraction(-1)
                kind = EQ if self.bound == 0 else LE
                return AffineIneq(RatVec([0] * self.dim), b, kind)
            # 0 <= b : trivial when b >= 0, else the infeasible marker.
            b = Fraction(0) if self.bound >= 0 else Fraction(-1)
            return AffineIneq(RatVec([0] * self.dim), b, LE)
        denom_lcm = 1
        for a in list(self.normal) + [self.bound]:
            denom_lcm = denom_lcm * a.denominator // gcd(denom_lcm, a.denominator)
        scaled = [a * denom_lcm for a in self.normal]
        b = self.bound * denom_lcm
        g = 0
        for a in scaled:
            g = gcd(g, abs(a.numerator))
        g = gcd(g, abs(b.numerator))
        if g > 1:
            scaled = [a / g for a in scaled]
            b = b / g
        if self.kind == EQ:
            lead = next(a for a in scaled if a != 0)
            if lead < 0:
                scaled = [-a for a in scaled]
                b = -b
        return AffineIneq(RatVec(scaled), b, self.kind)

    def is_trivial(self) -> bool:
        """0 <= b with b >= 0 or 0 = 0."""
        return self.normal.is_zero() and (self.bound >= 0 if self.kind == LE else self.bound == 0)

    def is_infeasible_marker(self) -> bool:
        return self.normal.is_zero() and (self.bound < 0 if self.kind == LE else self.bound != 0)

    def satisfied_by(self, x: RatVec) -> bool:
        v = self.normal.dot(x)
        return v == self.bound if self.kind == EQ else v <= self.bound

    def __str__(self):
        lhs = " + ".join(f"{rat_str(a)}*x{i+1}" for i, a in enumerate(self.normal) if a != 0) or "0"
        op = "=" if self.kind == EQ else "<="
        return f"{lhs} {op} {rat_str(self.bound)}"


def ineq_le(coeffs: Sequence, bound) -> AffineIneq:
    return AffineIneq(RatVec(coeffs), rat(bound), LE)


def ineq_ge(coeffs: Sequence, bound) -> AffineIneq:
    """<coeffs, x> >= bound stored as <-coeffs, x> <= -bound."""
    return AffineIneq(-RatVec(coeffs), -rat(bound), LE)


def ineq_eq(coeffs: Sequence, bound) -> AffineIneq:
    return AffineIneq(RatVec(coeffs), rat(bound), EQ)


class HPolyhedron:
    """A finite canonicalized inequality system in a fixed dimension.

    Construction canonicalizes every row, drops trivial rows and removes
    duplicates while preserving first-occurrence order.  The point set is
    unchanged by any of this.
    """

    __slots__ = ("dim", "ineqs")

    def __init__(self, dim: int, ineqs: Iterable[AffineIneq]):
        if dim < 1:
            raise DimensionError("dimension must be >= 1")
        self.dim = dim
        seen = set()
        rows = []
        for raw in ineqs:
            if raw.dim != dim:
                raise DimensionError(f"constraint dim {raw.dim} in system dim {dim}")
            row = raw.canonical()
            if row.is_trivial():
                continue
            key = (row.normal.entries, row.bound, row.kind)
            if key in seen:
                continue
            seen.add(key)
            rows.append(row)
        self.ineqs = tuple(rows)

    @staticmethod
    def empty(dim: int) -> "HPolyhedron":
        """The distinguished canonical infeasible system {0 <= -1}."""
        return HPolyhedron(dim, [AffineIneq(RatVec([0] * dim), Fraction(-1), LE)])

    @staticmethod
    def whole_space(dim: int) -> "HPolyhedron":
        return HPolyhedron(dim, [])

    def with_rows(self, extra: Iterable[AffineIneq]) -> "HPolyhedron":
        return HPolyhedron(self.dim, list(self.ineqs) + list(extra))

    def contains(self, x: RatVec) -> bool:
        if x.dim != self.dim:
            raise DimensionError(f"point dim {x.dim} vs system dim {self.dim}")
        return all(row.satisfied_by(x) for row in self.ineqs)

    def __eq__(self, other):
        # Syntactic equality of canonical rows (as sets); semantic equality
        # is poly_equal.
        return (
            isinstance(other, HPolyhedron)
            and self.dim == other.dim
            and set(self.ineqs) == set(other.ineqs)
        )

    def __hash__(self):
        return hash((self.dim, frozenset(self.ineqs)))

    def __repr__(self):
        return f"HPolyhedron(dim={self.dim}, {len(self.ineqs)} rows)"

    def pretty(self) -> str:
        return "\n".join(str(r) for r in self.ineqs) or "(whole space)"

    # -- JSON wire format ------------------------------------------------
    def to_json_obj(self) -> dict:
        return {
            "dim": self.dim,
            "ineqs": [
                {
                    "a": [rat_str(a) for a in row.normal],
                    "b": rat_str(row.bound),
                    "eq": row.kind == EQ,
                }
                for row in self.ineqs
            ],
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "HPolyhedron":
        dim = int(obj["dim"])
        rows = [
            AffineIneq(
                RatVec([Fraction(s) for s in rec["a"]]),
                Fraction(rec["b"]),
                EQ if rec.get("eq", False) else LE,
            )
            for rec in obj["ineqs"]
        ]
        return HPolyhedron(dim, rows)


# ---------------------------------------------------------------------------
# Equality substitution
# ---------------------------------------------------------------------------


def _substitute_equalities(sys: HPolyhedron):
    """Gaussian-eliminate the equality rows of `sys`.

    Returns (consistent, le_rows, recover) where `le_rows` is a list of
    (coeff list over free variables, bound) inequality pairs and
    `recover(y)` maps a free-variable assignment back to full coordinates.
    If the equalities are inconsistent, consistent is False.
    """
    dim = sys.dim
    eq_rows = [([*(r.normal)], r.bound) for r in sys.ineqs if r.kind == EQ]
    le_rows = [([*(r.normal)], r.bound) for r in sys.ineqs if r.kind == LE]

    pivots = []  # (row, col) in reduced order
    for row_i in range(len(eq_rows)):
        coeffs, b = eq_rows[row_i]
        col = next((j for j in range(dim) if coeffs[j] != 0), None)
        if col is None:
            if b != 0:
                return False, [], None
            continue
        piv = coeffs[col]
        coeffs = [c / piv for c in coeffs]
        b = b / piv
        eq_rows[row_i] = (coeffs, b)
        for other_i in range(len(eq_rows)):
            if other_i == row_i:
                continue
            ocoeffs, ob = eq_rows[other_i]
            f = ocoeffs[col]
            if f != 0:
                eq_rows[other_i] = ([oc - f * c for oc, c in zip(ocoeffs, coeffs)], ob - f * b)
        for k in range(len(le_rows)):
            lcoeffs, lb = le_rows[k]
            f = lcoeffs[col]
            if f != 0:
                le_rows[k] = ([lc - f * c for lc, c in zip(lcoeffs, coeffs)], lb - f * b)
        pivots.append((row_i, col))

    pivot_cols = {col for _, col in pivots}
    free_cols = [j for j in range(dim) if j not in pivot_cols]
    reduced = [([coeffs[j] for j in free_cols], b) for (coeffs, b) in le_rows]

    pivot_data = [(col, eq_rows[row_i][0], eq_rows[row_i][1]) for row_i, col in pivots]

    def recover(y: Sequence[Fraction]) -> RatVec:
        full = [Fraction(0)] * dim
        for j, col in enumerate(free_cols):
            full[col] = rat(y[j]) if j < len(y) else Fraction(0)
        for col, coeffs, b in pivot_data:
            full[col] = b - sum(
                (coeffs[j] * full[j] for j in range(dim) if j != col), Fraction(0)
            )
        return RatVec(full)

    return True, (reduced, len(free_cols)), recover


# ---------------------------------------------------------------------------
# Exact simplex
# ---------------------------------------------------------------------------

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
OPTIMAL = "optimal"


def _simplex_le(rows, nvars: int, objective):
    """Maximize <objective, x> over {rows: <a,x> <= b} with x free.

    rows: list of (coeff list, bound).  Returns (status, value, x) with
    status in {INFEASIBLE, UNBOUNDED, OPTIMAL}; for UNBOUNDED the witness x
    is a feasible point.  Free variables are split x = u - v internally.
    Bland's rule everywhere, so termination is guaranteed.
    """
    m = len(rows)
    if nvars == 0:
        ok = all(b >= 0 for _, b in rows)
        return (OPTIMAL, Fraction(0), []) if ok else (INFEASIBLE, None, None)
    if m == 0:
        if all(c == 0 for c in objective):
            return OPTIMAL, Fraction(0), [Fraction(0)] * nvars
        return UNBOUNDED, None, [Fraction(0)] * nvars

    # Columns: u_1..u_n, v_1..v_n, s_1..s_m, then artificials as needed.
    n_struct = 2 * nvars + m
    tableau = []
    basis = []
    art_cols = []
    for i, (coeffs, b) in enumerate(rows):
        row = [Fraction(0)] * n_struct
        for j in range(nvars):
            row[j] = coeffs[j]
            row[nvars + j] = -coeffs[j]
        row[2 * nvars + i] = Fraction(1)
        if b < 0:
            row = [-c for c in row]
            b = -b
            row.append(b)
            tableau.append(row)
            basis.append(None)  # artificial to be added
        else:
            row.append(b)
            tableau.append(row)
            basis.append(2 * nvars + i)

    n_total = n_struct
    for i in range(m):
        if basis[i] is None:
            for r in tableau:
                r.insert(-1, Fraction(0))
            tableau[i][-2] = Fraction(1)
            basis[i] = n_total
            art_cols.append(n_total)
            n_total += 1

    objrow = [Fraction(0)] * (n_total + 1)  # reduced costs, kept in step

    def pivot(irow: int, jcol: int):
        piv = tableau[irow][jcol]
        tableau[irow] = [c / piv for c in tableau[irow]]
        prow = tableau[irow]
        for i in range(m):
            if i == irow:
                continue
            f = tableau[i][jcol]
            if f != 0:
                tableau[i] = [c - f * p for c, p in zip(tableau[i], prow)]
        f = objrow[jcol]
        if f != 0:
            for j in range(n_total + 1):
                objrow[j] -= f * prow[j]
        basis[irow] = jcol

    def run(cost, banned=frozenset()):
        """Maximize <cost, columns>; Bland's rule; returns True if optimal,
        False if unbounded.  Columns in `banned` never enter the basis."""
        # Seed the reduced-cost row c_j - c_B B^-1 A_j once; pivots keep it
        # current after that.
        for j in range(n_total + 1):
            objrow[j] = cost[j] if j < n_total else Fraction(0)
        for i in range(m):
            cb = cost[basis[i]]
            if cb != 0:
                row = tableau[i]
                for j in range(n_total + 1):
                    if row[j]:
                        objrow[j] -= cb * row[j]
        while True:
            entering = None
            for j in range(n_total):
                if objrow[j] > 0 and j not in banned:
                    entering = j
                    break
            if entering is None:
                value = sum(
                    (cost[basis[i]] * tableau[i][n_total] for i in range(m)),
                    Fraction(0),
                )
                return True, value
            leaving = None
            best = None
            for i in range(m):
                a = tableau[i][entering]
                if a > 0:
                    ratio = tableau[i][n_total] / a
                    if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                        best = ratio
                        leaving = i
            if leaving is None:
                return False, None
            pivot(leaving, entering)

    if art_cols:
        cost1 = [Fraction(0)] * n_total
        for j in art_cols:
            cost1[j] = Fraction(-1)
        _, val = run(cost1)
        if val != 0:
            return INFEASIBLE, None, None
        # Drive remaining artificials out of the basis (they sit at value 0).
        art_set = set(art_cols)
        for i in range(m):
            if basis[i] in art_set:
                j = next(
                    (jj for jj in range(n_total) if jj not in art_set and tableau[i][jj] != 0),
                    None,
                )
                if j is not None:
                    pivot(i, j)
        # Any row still basic in an artificial is all-zero in structurals:
        # redundant; freeze the artificial by forbidding re-entry below.

    cost2 = [Fraction(0)] * n_total
    for j in range(nvars):
        cost2[j] = rat(objective[j])
        cost2[nvars + j] = -rat(objective[j])

    def extract():
        x = [Fraction(0)] * nvars
        for i in range(m):
            bj = basis[i]
            if bj < nvars:
                x[bj] += tableau[i][n_total]
            elif bj < 2 * nvars:
                x[bj - nvars] -= tableau[i][n_total]
        return x

    bounded, val = run(cost2, banned=frozenset(art_cols))
    if not bounded:
        return UNBOUNDED, None, extract()
    return OPTIMAL, val, extract()


def _solve(sys: HPolyhedron, objective: Optional[Sequence] = None):
    """Maximize <objective, x> over sys (objective None = pure feasibility).

    Returns (status, value, witness RatVec or None).
    """
    consistent, reduced, recover = _substitute_equalities(sys)
    if not consistent:
        return INFEASIBLE, None, None
    rows, nfree = reduced
    # Drop trivially-true reduced rows, detect trivially-false ones.
    clean = []
    for coeffs, b in rows:
        if all(c == 0 for c in coeffs):
            if b < 0:
                return INFEASIBLE, None, None
            continue
        clean.append((coeffs, b))
    if objective is None:
        obj_free = [Fraction(0)] * nfree
    else:
        # Objective in full coordinates: restrict to free variables through
        # the substitution x = recover(y); the map is affine, so evaluate
        # on unit directions.
        obj = RatVec(objective) if not isinstance(objective, RatVec) else objective
        base = recover([Fraction(0)] * nfree)
        const = obj.dot(base)
        obj_free = []
        for j in range(nfree):
            unit = [Fraction(0)] * nfree
            unit[j] = Fraction(1)
            obj_free.append(obj.dot(recover(unit)) - const)
    status, val, y = _simplex_le(clean, nfree, obj_free)
    if status == INFEASIBLE:
        return INFEASIBLE, None, None
    witness = recover(y if y is not None else [Fraction(0)] * nfree)
    if objective is None:
        return FEASIBLE, None, witness
    if status == UNBOUNDED:
        return UNBOUNDED, None, witness
    obj = RatVec(objective) if not isinstance(objective, RatVec) else objective
    return OPTIMAL, obj.dot(witness), witness


def lp_feasible(sys: HPolyhedron) -> bool:
    """Exact feasibility of a rational inequality system."""
    status, _, _ = _solve(sys, None)
    return status != INFEASIBLE


def lp_witness(sys: HPolyhedron) -> Optional[RatVec]:
    """A rational point of sys, or None if infeasible."""
    status, _, w = _solve(sys, None)
    return w if status != INFEASIBLE else None


def lp_max(sys: HPolyhedron, objective: Sequence):
    """(status, value, witness) for max <objective, x> on sys."""
    return _solve(sys, objective)


def implies(sys: HPolyhedron, row: AffineIneq) -> bool:
    """True iff every point of sys satisfies `row` (vacuously if empty)."""
    if row.dim != sys.dim:
        raise DimensionError("constraint dimension mismatch")
    status, val, _ = _solve(sys, row.normal)
    if status == INFEASIBLE:
        return True
    if status == UNBOUNDED:
        return False
    if row.kind == LE:
        return val <= row.bound
    if val != row.bound:
        return False
    status2, val2, _ = _solve(sys, -row.normal)
    return status2 == OPTIMAL and val2 == -row.bound


def remove_redundant(sys: HPolyhedron) -> HPolyhedron:
    """Drop every constraint implied by the others.

    The result defines the same point set; infeasible input collapses to
    the canonical empty system.  Idempotent.
    """
    if not lp_feasible(sys):
        return HPolyhedron.empty(sys.dim)
    # Cheap prepass: among <= rows sharing a normal only the least bound
    # can survive.
    tightest: dict = {}
    for row in sys.ineqs:
        if row.kind == LE:
            cur = tightest.get(row.normal.entries)
            if cur is None or row.bound < cur:
                tightest[row.normal.entries] = row.bound
    rows = [
        r for r in sys.ineqs
        if r.kind != LE or r.bound == tightest[r.normal.entries]
    ]
    kept = list(rows)
    for row in rows:
        rest = [r for r in kept if r is not row]
        if implies(HPolyhedron(sys.dim, rest), row):
            kept = rest
    return HPolyhedron(sys.dim, kept)


def poly_equal(p: HPolyhedron, q: HPolyhedron) -> bool:
    """Same point set: each system's rows are implied by the other.

    Rows whose canonical forms coincide on both sides are implied for
    free; only the symmetric difference goes through the LP.
    """
    if p.dim != q.dim:
        raise DimensionError("comparing systems of different dimension")
    p_feas = lp_feasible(p)
    q_feas = lp_feasible(q)
    if not p_feas or not q_feas:
        return p_feas == q_feas
    common = set(p.ineqs) & set(q.ineqs)
    return all(implies(p, r) for r in q.ineqs if r not in common) and all(
        implies(q, r) for r in p.ineqs if r not in common
    )


# ---------------------------------------------------------------------------
# Fourier-Motzkin elimination
# ---------------------------------------------------------------------------


def _fm_eliminate_last(rows):
    """One Fourier-Motzkin step removing the last variable of `rows`.

    rows: list of (coeffs, bound) over k variables; result over k-1.
    """
    pos, neg, zero = [], [], []
    for coeffs, b in rows:
        a = coeffs[-1]
        if a > 0:
            pos.append(([c / a for c in coeffs[:-1]], b / a))
        elif a < 0:
            neg.append(([c / -a for c in coeffs[:-1]], b / -a))
        else:
            zero.append((coeffs[:-1], b))
    out = list(zero)
    for pc, pb in pos:
        for nc, nb in neg:
            out.append(([p + n for p, n in zip(pc, nc)], pb + nb))
    return out


def fm_feasible_with_witness(sys: HPolyhedron):
    """Fourier-Motzkin feasibility with back-substituted witness.

    Independent of the simplex path; intended as a testing oracle for small
    dimensions.  Returns (feasible, witness RatVec or None).
    """
    consistent, reduced, recover = _substitute_equalities(sys)
    if not consistent:
        return False, None
    rows, nfree = reduced
    stages = []
    cur = rows
    for _ in range(nfree):
        stages.append(cur)
        cur = _fm_eliminate_last(cur)
    for coeffs, b in cur:
        if b < 0:
            return False, None
    # Back-substitute a witness; assigned[i] holds the value of variable i.
    # Variable k was eliminated at step nfree-1-k, so its bounds live in
    # stages[nfree-1-k] and depend only on variables 0..k-1.
    assigned = [Fraction(0)] * nfree
    for k in range(nfree):
        stage = stages[nfree - 1 - k]  # rows over variables 0..k
        lo, hi = None, None
        for coeffs, b in stage:
            a = coeffs[k]
            if a == 0:
                continue
            rest = sum((coeffs[j] * assigned[j] for j in range(k)), Fraction(0))
            bound = (b - rest) / a
            if a > 0:
                hi = bound if hi is None or bound < hi else hi
            else:
                lo = bound if lo is None or bound > lo else lo
        if lo is None and hi is None:
            assigned[k] = Fraction(0)
        elif lo is None:
            assigned[k] = hi - 1
        elif hi is None:
            assigned[k] = lo + 1
        else:
            assigned[k] = (lo + hi) / 2
    witness = recover(assigned)
    return True, witness


def fm_feasible(sys: HPolyhedron) -> bool:
    ok, _ = fm_feasible_with_witness(sys)
    return ok


def eliminate_variables(sys: HPolyhedron, keep: int) -> HPolyhedron:
    """Project a system onto its first `keep` coordinates.

    Equalities are used to substitute away eliminated variables where
    possible (pivoting on eliminated columns first); the remaining
    eliminated variables go through Fourier-Motzkin with light redundancy
    pruning between steps.  Result rows are over the first `keep` variables.
    """
    dim = sys.dim
    if not 1 <= keep <= dim:
        raise DimensionError("keep out of range")
    if keep == dim:
        return sys
    eq_rows = [([*(r.normal)], r.bound) for r in sys.ineqs if r.kind == EQ]
    le_rows = [([*(r.normal)], r.bound) for r in sys.ineqs if r.kind == LE]

    kept_eqs = []
    for _ in range(len(eq_rows)):
        # Pick an unprocessed equality with a nonzero eliminated column.
        pick = None
        for idx, (coeffs, b) in enumerate(eq_rows):
            col = next((j for j in range(dim - 1, keep - 1, -1) if coeffs[j] != 0), None)
            if col is not None:
                pick = (idx, col)
                break
        if pick is None:
            break
        idx, col = pick
        coeffs, b = eq_rows.pop(idx)
        piv = coeffs[col]
        coeffs = [c / piv for c in coeffs]
        b = b / piv
        for rows in (eq_rows, le_rows):
            for k in range(len(rows)):
                rc, rb = rows[k]
                f = rc[col]
                if f != 0:
                    rows[k] = ([a - f * c for a, c in zip(rc, coeffs)], rb - f * b)
    # Leftover equalities touch only kept variables (or are degenerate).
    for coeffs, b in eq_rows:
        if any(coeffs[j] != 0 for j in range(keep, dim)):
            raise AssertionError("substitution left an eliminated column")
        kept_eqs.append((coeffs[:keep], b))

    # Fourier-Motzkin on remaining eliminated columns of the <= rows.
    rows = [(coeffs[:], b) for coeffs, b in le_rows]
    for col in range(dim - 1, keep - 1, -1):
        rows = [(c[:col] + c[col + 1 :], b) for c, b in _fm_step(rows, col)]
        rows = _prune_rows(rows, keep_cols=len(rows[0][0]) if rows else col)

    out = [ineq_eq(c, b) for c, b in kept_eqs]
    out += [ineq_le(c, b) for c, b in rows]
    return HPolyhedron(keep, out)


def _fm_step(rows, col: int):
    """Fourier-Motzkin combine on column `col`, keeping that column zeroed."""
    pos, neg, zero = [], [], []
    for coeffs, b in rows:
        a = coeffs[col]
        if a > 0:
            pos.append(([c / a for c in coeffs], b / a))
        elif a < 0:
            neg.append(([c / -a for c in coeffs], b / -a))
        else:
            zero.append((coeffs, b))
    out = list(zero)
    for pc, pb in pos:
        for nc, nb in neg:
            merged = [p + n for p, n in zip(pc, nc)]
            merged[col] = Fraction(0)
            out.append((merged, pb + nb))
    return out


def _prune_rows(rows, keep_cols: int):
    """Cheap syntactic pruning after an elimination step: canonicalize,
    deduplicate and drop rows dominated by an identical-normal row."""
    best = {}
    order = []
    for coeffs, b in rows:
        if all(c == 0 for c in coeffs):
            if b < 0:
                return [([Fraction(0)] * keep_cols, Fraction(-1))]
            continue
        row = ineq_le(coeffs, b).canonical()
        key = row.normal.entries
        if key not in best:
            best[key] = row.bound
            order.append(key)
        elif row.bound < best[key]:
            best[key] = row.bound
    return [([*k], best[k]) for k in order]


def cone_hull(generators: Sequence[RatVec], dim: int) -> HPolyhedron:
    """H-representation of the convex cone spanned by `generators`.

    Built by eliminating the nonnegative coefficients from
    { x = sum c_i g_i, c_i >= 0 }.  For no generators this is {0}.
    """
    gens = list(generators)
    if not gens:
        return HPolyhedron(dim, [ineq_eq([1 if j == i else 0 for j in range(dim)], 0) for i in range(dim)])
    k = len(gens)
    rows = []
    ext = dim + k
    for j in range(dim):
        coeffs = [Fraction(0)] * ext
        coeffs[j] = Fraction(1)
        for i, g in enumerate(gens):
            coeffs[dim + i] = -g[j]
        rows.append(ineq_eq(coeffs, 0))
    for i in range(k):
        coeffs = [Fraction(0)] * ext
        coeffs[dim + i] = Fraction(-1)
        rows.append(ineq_le(coeffs, 0))
    projected = eliminate_variables(HPolyhedron(ext, rows), dim)
    return remove_redundant(projected)
