"""Horn index triples and Horn-cone membership.

T_r^n is the recursively defined family of index triples (I, J, L) whose
inequalities cut out the spectra (a, b, c) of Hermitian triples A + B = C:
U_r^n holds the triples balanced by sum(I) + sum(J) = sum(L) + r(r+1)/2,
T_1^n = U_1^n, and for r >= 2 a triple of U_r^n belongs to T_r^n when
sum_{f in F} i_f + sum_{g in G} j_g <= sum_{h in H} l_h + p(p+1)/2 for
every p < r and every (F, G, H) in T_p^r.

`horn_member` decides the spectrum question for rational inputs, and via
saturation the same inequalities decide tensor-product containment
V_nu <= V_lam (x) V_mu for the unitary group (`lr_nonzero`).  The dual
route `triple_via_eigen` re-derives membership of a triple in T_r^n from
the spectrum test on the associated partitions.

Everything is memoized per (r, n) and enumerated in lexicographic order so
emitted files are reproducible byte for byte.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactmath import rat

DESK_CAP = 8

_T_MEMO: dict[tuple[int, int], tuple] = {}


@dataclass(frozen=True)
class HornTriple:
    """A triple of strictly increasing equal-cardinality index sets."""

    n: int
    I: tuple[int, ...]
    J: tuple[int, ...]
    L: tuple[int, ...]

    def __post_init__(self):
        r = len(self.I)
        if not (len(self.J) == len(self.L) == r):
            raise ValueError("index sets must have equal cardinality")
        if not 1 <= r < self.n:
            raise ValueError("need 1 <= r < n")
        for part in (self.I, self.J, self.L):
            if list(part) != sorted(set(part)) or part[0] < 1 or part[-1] > self.n:
                raise ValueError(f"not a strictly increasing subset of 1..{self.n}: {part}")

    @property
    def r(self) -> int:
        return len(self.I)

    def balanced(self) -> bool:
        r = self.r
        return sum(self.I) + sum(self.J) == sum(self.L) + r * (r + 1) // 2

    def sort_key(self):
        return (self.I, self.J, self.L)

    def to_json_obj(self):
        return {"I": list(self.I), "J": list(self.J), "L": list(self.L)}


def enum_U(r: int, n: int) -> tuple[HornTriple, ...]:
    """All balanced triples of cardinality r, lexicographic in (I, J, L)."""
    _check_bounds(r, n)
    subsets = list(itertools.combinations(range(1, n + 1), r))
    shift = r * (r + 1) // 2
    by_sum: dict[int, list] = {}
    for L in subsets:
        by_sum.setdefault(sum(L), []).append(L)
    out = []
    for I in subsets:
        for J in subsets:
            for L in by_sum.get(sum(I) + sum(J) - shift, ()):
                out.append(HornTriple(n, I, J, L))
    out.sort(key=HornTriple.sort_key)
    return tuple(out)


def enum_T(r: int, n: int) -> tuple[HornTriple, ...]:
    """The Horn triples T_r^n, lexicographic in (I, J, L); memoized."""
    _check_bounds(r, n)
    key = (r, n)
    if key in _T_MEMO:
        return _T_MEMO[key]
    if r == 1:
        result = enum_U(1, n)
    else:
        filters = [enum_T(p, r) for p in range(1, r)]
        result = tuple(
            t for t in enum_U(r, n)
            if all(_subtriple_ok(t, f) for level in filters for f in level)
        )
    _T_MEMO[key] = result
    return result


def _subtriple_ok(t: HornTriple, f: HornTriple) -> bool:
    p = f.r
    lhs = sum(t.I[i - 1] for i in f.I) + sum(t.J[j - 1] for j in f.J)
    rhs = sum(t.L[k - 1] for k in f.L) + p * (p + 1) // 2
    return lhs <= rhs


def _check_bounds(r: int, n: int):
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r={r}, n={n}")
    if n > DESK_CAP:
        raise ValueError(f"n={n} exceeds the desk cap {DESK_CAP}")


class Spectrum:
    """A weakly decreasing list of rationals."""

    __slots__ = ("values",)

    def __init__(self, values: Sequence):
        vals = tuple(rat(v) for v in values)
        for a, b in zip(vals, vals[1:]):
            if a < b:
                raise ValueError(f"not weakly decreasing: {vals}")
        self.values = vals

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        return isinstance(other, Spectrum) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"Spectrum{self.values}"


def horn_member(alpha, beta, gamma) -> bool:
    """True iff (alpha, beta, gamma) are spectra of Hermitian A + B = C.

    Requires the trace equality and every T_r^n inequality; inputs may be
    any weakly decreasing rational sequences of one common length.
    """
    a, b, c = Spectrum(alpha), Spectrum(beta), Spectrum(gamma)
    n = len(a)
    if not len(b) == len(c) == n:
        raise ValueError("spectra must have equal lengths")
    if sum(a.values) + sum(b.values) != sum(c.values):
        return False
    for r in range(1, n):
        for t in enum_T(r, n):
            lhs = sum(a[i - 1] for i in t.I) + sum(b[j - 1] for j in t.J)
            if lhs < sum(c[k - 1] for k in t.L):
                return False
    return True


def lr_nonzero(lam, mu, nu) -> bool:
    """True iff V_nu appears in V_lam (x) V_mu for the unitary group.

    Valid through the saturation property of GL_n: tensor containment at
    some positive multiple already implies it on the nose, which makes the
    Horn inequalities an exact criterion for integer highest weights.
    """
    for spec in (lam, mu, nu):
        for v in spec:
            if rat(v).denominator != 1:
                raise ValueError("lr_nonzero expects integer weights")
    return horn_member(lam, mu, nu)


def partition_of(index_set: Sequence[int]) -> tuple[int, ...]:
    """lambda(I) = (i_r - r >= ... >= i_2 - 2 >= i_1 - 1) for I increasing."""
    idx = list(index_set)
    r = len(idx)
    return tuple(idx[r - 1 - k] - (r - k) for k in range(r))


def triple_via_eigen(t: HornTriple) -> bool:
    """Membership test of Theorem-style duality: (I, J, L) lies in T_r^n
    exactly when (lambda(I), lambda(J), lambda(L)) is an admissible
    Hermitian spectrum triple at size r."""
    lam_i = partition_of(t.I)
    lam_j = partition_of(t.J)
    lam_l = partition_of(t.L)
    if t.r == 1:
        # Size-1 spectra: only the trace condition is in play.
        return lam_i[0] + lam_j[0] == lam_l[0]
    return horn_member(lam_i, lam_j, lam_l)


def family_bar(I: Sequence[int], n: int) -> tuple[int, ...]:
    """Ibar = { n - i + 1 : i in I }."""
    return tuple(sorted(n - i + 1 for i in I))


def family_L(r: int, n: int) -> tuple[int, ...]:
    """L_r^n = { n-r+1, ..., n }."""
    return tuple(range(n - r + 1, n + 1))


def family_bar_star(I: Sequence[int], n: int) -> tuple[int, ...]:
    """Ibar* = {1} u { n - i + 2 : i in I, i > 1 }; requires 1 in I."""
    if 1 not in I:
        raise ValueError("family_bar_star needs 1 in I")
    return tuple(sorted([1] + [n - i + 2 for i in I if i != 1]))


def family_L_tilde(r: int, n: int) -> tuple[int, ...]:
    """Ltilde_r^n = {1, n-r+2, ..., n}."""
    return tuple([1] + list(range(n - r + 2, n + 1)))
