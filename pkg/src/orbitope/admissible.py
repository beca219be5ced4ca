"""Dominant, indivisible, admissible one-parameter subgroups.

A one-parameter subgroup of the maximal torus is an integer vector lam in
the coordinates of the group data.  It is admissible (for the compact
group acting on the negative off-diagonal part) when its line is exactly
the common kernel of dim(t) - 1 linearly independent noncompact positive
roots; dominant when it pairs >= 0 with every compact positive root;
indivisible when its entries have gcd 1.

`enumerate_admissible` runs the generic hyperplane-intersection algorithm;
`closed_form_admissible` returns the literal per-family lists.  The two
must agree as sets, which the test suite verifies across the supported
desk-scale ranges.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional

from .exactmath import RatVec
from .rootdata import SO, SO_STAR, SP, SU, GroupData, pairing

SUBSET_CAP = 10**5


class OneParamSubgroup:
    """An indivisible integer cocharacter vector."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        vec = RatVec(coords)
        if not vec.is_integral():
            raise ValueError("one-parameter subgroup needs integer coordinates")
        if vec.content_gcd() != 1:
            raise ValueError(f"not indivisible: {vec!r}")
        self.coords = vec

    @property
    def dim(self) -> int:
        return self.coords.dim

    def __eq__(self, other):
        return isinstance(other, OneParamSubgroup) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"OneParamSubgroup({tuple(int(c) for c in self.coords)})"

    def ints(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.coords)


def is_dominant_ops(g: GroupData, lam: RatVec) -> bool:
    """lam pairs >= 0 with every compact positive root (the torus/SO(2)
    coordinates left unconstrained fall out automatically)."""
    return all(pairing(alpha, lam) >= 0 for alpha in g.compact_pos)


def _ambient_constraints(g: GroupData) -> list[RatVec]:
    """Extra linear constraints the cocharacter must satisfy (trace-zero
    for su(p, q) in full coordinates)."""
    if g.trace_zero:
        return [RatVec([1] * g.dim)]
    return []


def _torus_rank(g: GroupData) -> int:
    return g.dim - len(_ambient_constraints(g))


def _primitive_kernel_vector(rows: list[RatVec], dim: int) -> Optional[RatVec]:
    """A primitive integer generator of the kernel of the row system, or
    None when the kernel is not a line."""
    mat = [list(r.entries) for r in rows]
    ncols = dim
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        mat[rank] = [x / pv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
    if rank != ncols - 1:
        return None
    free_col = next(c for c in range(ncols) if c not in pivots)
    vec = [Fraction(0)] * ncols
    vec[free_col] = Fraction(1)
    for row_idx, col in enumerate(pivots):
        vec[col] = -mat[row_idx][free_col]
    denom_lcm = 1
    for x in vec:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [x * denom_lcm for x in vec]
    g_all = 0
    for x in ints:
        g_all = gcd(g_all, abs(x.numerator))
    return RatVec([x / g_all for x in ints])


def kernel_root_span_dim(g: GroupData, lam: RatVec) -> int:
    """Rank of { b in noncompact_pos : <lam, b> = 0 } (plain matrix rank;
    the roots already lie in the torus-rank subspace for su(p, q))."""
    rows = [b for b in g.noncompact_pos if pairing(lam, b) == 0]
    if not rows:
        return 0
    mat = [list(r.entries) for r in rows]
    rank = 0
    for col in range(g.dim):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        mat[rank] = [x / pv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def is_admissible(g: GroupData, lam: RatVec) -> bool:
    """The defining property: the roots vanishing on lam span a hyperplane
    of the torus (rank dim(t) - 1)."""
    return kernel_root_span_dim(g, lam) == _torus_rank(g) - 1


def enumerate_admissible(g: GroupData) -> set[OneParamSubgroup]:
    """All dominant indivisible admissible cocharacters, by scanning the
    full-rank (rank-1-short) subsets of the noncompact positive roots and
    taking primitive kernel generators of both signs."""
    roots = list(g.noncompact_pos)
    extra = _ambient_constraints(g)
    need = _torus_rank(g) - 1
    found: set[OneParamSubgroup] = set()
    if need == 0:
        # Rank-1 torus: the whole torus line is admissible; dominance and
        # sign selection still apply.
        vec = _primitive_kernel_vector(extra, g.dim) if extra else RatVec([1])
        if vec is not None:
            for cand in (vec, -vec):
                if is_dominant_ops(g, cand):
                    found.add(OneParamSubgroup(cand))
        return found
    total = 1
    for i in range(need):
        total = total * (len(roots) - i) // (i + 1)
    if total > SUBSET_CAP:
        raise ValueError(f"subset enumeration too large: C({len(roots)},{need}) = {total}")
    for subset in combinations(roots, need):
        vec = _primitive_kernel_vector(list(subset) + extra, g.dim)
        if vec is None:
            continue
        for cand in (vec, -vec):
            if is_dominant_ops(g, cand) and is_admissible(g, cand):
                found.add(OneParamSubgroup(cand))
    return found


def _lam_kl(n: int, k: int, l: int) -> OneParamSubgroup:
    """(1,...,1, 0,...,0, -1,...,-1) with k ones and l minus-ones."""
    return OneParamSubgroup([1] * k + [0] * (n - k - l) + [-1] * l)


def closed_form_admissible(g: GroupData) -> set[OneParamSubgroup]:
    """The literal admissible lists, family by family."""
    tag = g.family.tag
    if tag == SP:
        n = g.family.params[0]
        out = {OneParamSubgroup([1] + [0] * (n - 1)), OneParamSubgroup([0] * (n - 1) + [-1])}
        for k in range(1, n):
            for l in range(1, n - k + 1):
                out.add(_lam_kl(n, k, l))
        return out

    if tag == SU:
        p, q = g.family.params
        if q == 1 and g.unitary_coords:
            n = p
            return {
                OneParamSubgroup([n] + [-1] * (n - 1)),
                OneParamSubgroup([1] * (n - 1) + [-n]),
            }
        out: set[OneParamSubgroup] = set()
        if q >= 2:
            for k in range(1, p):
                for l in range(1, q):
                    d = gcd(p + q - k - l, k + l)
                    a = (p + q - k - l) // d
                    b = -(k + l) // d
                    out.add(OneParamSubgroup([a] * k + [b] * (p - k) + [a] * l + [b] * (q - l)))
        out.add(OneParamSubgroup([1] * (p + q - 1) + [1 - p - q]))          # lam_{p,q-1}
        out.add(OneParamSubgroup([1] * (p - 1) + [1 - p - q] + [1] * q))    # lam_{p-1,q}
        out.add(OneParamSubgroup([-1] * p + [p + q - 1] + [-1] * (q - 1)))  # lam_{0,1}
        out.add(OneParamSubgroup([p + q - 1] + [-1] * (p + q - 1)))         # lam_{1,0}
        if q == 1:
            # In full coordinates only the two kernel-spanning ones remain.
            out = {
                OneParamSubgroup([p + q - 1] + [-1] * (p + q - 1)),
                OneParamSubgroup([1] * (p - 1) + [1 - p - q] + [1] * q),
            }
        return out

    if tag == SO_STAR:
        n = g.family.params[0]
        if n == 3:
            return {OneParamSubgroup([1, -1, -1]), OneParamSubgroup([1, 1, -1])}
        out = {OneParamSubgroup([1] + [0] * (n - 1)), OneParamSubgroup([0] * (n - 1) + [-1])}
        for k in range(1, n):
            out.add(_lam_kl(n, k, n - k))
        for k in range(1, n - 3):
            for l in range(1, n - k - 2):
                out.add(_lam_kl(n, k, l))
        return out

    if tag == SO:
        p = g.family.params[0]
        m = p // 2
        odd = p % 2 == 1
        lam0 = OneParamSubgroup([1] + [0] * m)
        lam1p = OneParamSubgroup([1] * m + [1])
        lam1m = OneParamSubgroup([1] * m + [-1])
        if odd:
            return {lam0, lam1p, lam1m}
        lamm1p = OneParamSubgroup([1] * (m - 1) + [-1, 1])
        lamm1m = OneParamSubgroup([1] * (m - 1) + [-1, -1])
        return {lam0, lam1p, lam1m, lamm1p, lamm1m}

    raise ValueError(f"unknown family {tag!r}")


def sorted_admissible(lams) -> list[OneParamSubgroup]:
    """Deterministic ordering for output files and assembly."""
    return sorted(lams, key=lambda l: l.coords.entries)
