"""Well-covering pairs for the projective setup attached to the negative
off-diagonal module.

Fix a group datum g with a type-A compact Weyl carrier and a dominant
indivisible admissible cocharacter lam.  The variety under consideration
is flag x flag x P(M) with M the direct sum of the negative off-diagonal
module and a trivial line; its lam-fixed components are indexed by
(w, w', m) with w, w' longest coset representatives mod the stabilizer
W_lam and m a weight level of M.

The combinatorial criterion implemented by `is_well_covering`:

  the pair is well-covering  iff  either  w' = w0 w w_lam and M_{<m} = 0,
  or both
    (i)  s_{w0 w} . s_{w0 w'} . prod_{b in weights(M_{<m})} Theta(-b)
         equals s_{w0 w_lam} in the Borel model, and
    (ii) <w lam + w' lam, rho> + sum_{k<m} (m - k) dim M_{lam,k} = 0.

`is_dominant_pair` drops the equality in (i) to mere nonvanishing; every
well-covering pair is dominant.  `enumerate_m0` lists the m = 0
well-covering pairs after the length prefilter
l(w) + l(w') = l(w0) + l(w_lam) + dim M_{<0}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .admissible import OneParamSubgroup, is_dominant_ops
from .exactmath import RatVec
from .rootdata import GroupData, UnsupportedFamilyError, pairing
from .schubert import CohClass, SchubertRing
from .weyl import ParabolicData, WeylElt, max_coset_reps, stabilizer_parabolic


@dataclass(frozen=True)
class WCPair:
    """A candidate pair: w, w' longest coset representatives, a level m
    and the cocharacter lam."""

    w: WeylElt
    w_prime: WeylElt
    m: int
    lam: OneParamSubgroup

    def to_json_obj(self):
        return {
            "w": self.w.text(),
            "w_prime": self.w_prime.text(),
            "m": self.m,
            "lambda": list(self.lam.ints()),
        }


class GradedModule:
    """Weight levels of (negative off-diagonal module) + trivial line under
    a cocharacter: level(b) = <lam, b>, the trivial line sits at level 0."""

    __slots__ = ("dim", "levels", "dims")

    def __init__(self, g: GroupData, lam: OneParamSubgroup):
        self.dim = g.dim
        levels: dict[int, list[RatVec]] = {}
        for beta in g.weights_p_minus:
            k = pairing(lam.coords, beta)
            assert k.denominator == 1
            levels.setdefault(int(k), []).append(beta)
        self.levels = {k: tuple(v) for k, v in sorted(levels.items())}
        dims = {k: len(v) for k, v in self.levels.items()}
        dims[0] = dims.get(0, 0) + 1  # the trivial line
        self.dims = dict(sorted(dims.items()))

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def weights_below(self, m: int) -> list[RatVec]:
        """Module weights of level < m, with multiplicity, including the
        zero weight of the trivial line when m > 0."""
        out = []
        for k, betas in self.levels.items():
            if k < m:
                out.extend(betas)
        if m > 0:
            out.append(RatVec([0] * self.dim))
        return out

    def dim_below(self, m: int) -> int:
        return sum(d for k, d in self.dims.items() if k < m)

    def level_nonempty(self, m: int) -> bool:
        """Nonemptiness of the m-component of P(M): level 0 always holds
        the trivial line."""
        return m == 0 or m in self.levels

    def min_level(self) -> int:
        return min(min(self.levels), 0)

    def max_level(self) -> int:
        return max(max(self.levels), 0)


_RING_CACHE: dict[tuple[int, ...], SchubertRing] = {}
_CTX_CACHE: dict[tuple, "LambdaContext"] = {}


def ring_for(g: GroupData) -> SchubertRing:
    if not g.schubert_carrier:
        raise UnsupportedFamilyError(
            f"{g.label()} has no type-A Schubert carrier; well-covering "
            "pairs are not defined here"
        )
    key = g.weyl.degrees
    if key not in _RING_CACHE:
        _RING_CACHE[key] = SchubertRing(key)
    return _RING_CACHE[key]


@dataclass(frozen=True)
class LambdaContext:
    """Everything enumerate/is_well_covering needs for one (g, lam)."""

    g: GroupData
    lam: OneParamSubgroup
    pd: ParabolicData
    reps: tuple[WeylElt, ...]
    graded: GradedModule

    @property
    def ring(self) -> SchubertRing:
        return ring_for(self.g)


def context(g: GroupData, lam: OneParamSubgroup) -> LambdaContext:
    key = (g, lam.coords)
    if key in _CTX_CACHE:
        return _CTX_CACHE[key]
    if not g.schubert_carrier:
        raise UnsupportedFamilyError(
            f"{g.label()} has no type-A Schubert carrier; well-covering "
            "pairs are not defined here"
        )
    if not is_dominant_ops(g, lam.coords):
        raise ValueError(f"cocharacter {lam!r} is not dominant for {g.label()}")
    pd = stabilizer_parabolic(g.weyl, lam.coords)
    reps = tuple(max_coset_reps(g.weyl, pd))
    ctx = LambdaContext(g, lam, pd, reps, GradedModule(g, lam))
    _CTX_CACHE[key] = ctx
    return ctx


def grade(g: GroupData, lam: OneParamSubgroup) -> GradedModule:
    """The level decomposition of the module under lam."""
    if not is_dominant_ops(g, lam.coords):
        raise ValueError("grade needs a dominant cocharacter")
    return GradedModule(g, lam)


def _criterion_product(ctx: LambdaContext, pair: WCPair) -> CohClass:
    """s_{w0 w} . s_{w0 w'} . prod Theta(-b) over weights of M_{<m}."""
    ring = ctx.ring
    w0 = ring.group.longest()
    below = ctx.graded.weights_below(pair.m)
    acc = ring.basis_class(w0 * pair.w_prime)
    for beta in below:
        acc = ring.chevalley_mult(acc, -beta)
        if acc.is_zero():
            return acc
    return ring.cup(ring.basis_class(w0 * pair.w), acc)


def _check_pair_shape(ctx: LambdaContext, pair: WCPair):
    if pair.w not in ctx.reps or pair.w_prime not in ctx.reps:
        raise ValueError("w and w' must be longest coset representatives mod W_lambda")


def is_well_covering(g: GroupData, pair: WCPair) -> bool:
    """The combinatorial well-covering criterion (see module docstring)."""
    ctx = context(g, pair.lam)
    _check_pair_shape(ctx, pair)
    if not ctx.graded.level_nonempty(pair.m):
        return False
    ring = ctx.ring
    w0 = ring.group.longest()
    wl = ctx.pd.w_lambda
    below_dim = ctx.graded.dim_below(pair.m)
    if below_dim == 0:
        return pair.w_prime == w0 * pair.w * wl
    # Numeric condition (ii) first, it is cheap.
    lamvec = pair.lam.coords
    s = pairing(g.weyl.act(pair.w, lamvec) + g.weyl.act(pair.w_prime, lamvec), g.rho)
    s += sum((pair.m - k) * d for k, d in ctx.graded.dims.items() if k < pair.m)
    if s != 0:
        return False
    target = ring.basis_class(w0 * wl)
    return _criterion_product(ctx, pair) == target


def is_dominant_pair(g: GroupData, pair: WCPair) -> bool:
    """Nonvanishing version of the criterion; strictly weaker than
    well-covering."""
    ctx = context(g, pair.lam)
    _check_pair_shape(ctx, pair)
    if not ctx.graded.level_nonempty(pair.m):
        return False
    return not _criterion_product(ctx, pair).is_zero()


_PAIR_CACHE: dict[tuple, tuple[WCPair, ...]] = {}


def enumerate_m0(g: GroupData, lam: OneParamSubgroup) -> list[WCPair]:
    """All m = 0 well-covering pairs for lam, in sorted order.

    Candidates are prefiltered by the length equation
    l(w) + l(w') = l(w0) + l(w_lambda) + dim M_{<0} before any cup product
    is computed.  Results are cached: the pair set does not depend on the
    orbit parameter, only on (g, lam).
    """
    key = (g, lam.coords, "wc")
    if key in _PAIR_CACHE:
        return list(_PAIR_CACHE[key])
    ctx = context(g, lam)
    w0 = ctx.ring.group.longest()
    target_len = w0.length() + ctx.pd.w_lambda.length() + ctx.graded.dim_below(0)
    out = []
    for w in ctx.reps:
        for w_prime in ctx.reps:
            if w.length() + w_prime.length() != target_len:
                continue
            pair = WCPair(w, w_prime, 0, lam)
            if is_well_covering(g, pair):
                out.append(pair)
    out.sort(key=lambda p: (p.w.sort_key(), p.w_prime.sort_key()))
    _PAIR_CACHE[key] = tuple(out)
    return out


def enumerate_m0_dominant(g: GroupData, lam: OneParamSubgroup) -> list[WCPair]:
    """All m = 0 dominant pairs for lam (relaxed enumeration; superset of
    enumerate_m0)."""
    key = (g, lam.coords, "dom")
    if key in _PAIR_CACHE:
        return list(_PAIR_CACHE[key])
    ctx = context(g, lam)
    out = []
    for w in ctx.reps:
        for w_prime in ctx.reps:
            pair = WCPair(w, w_prime, 0, lam)
            if is_dominant_pair(g, pair):
                out.append(pair)
    out.sort(key=lambda p: (p.w.sort_key(), p.w_prime.sort_key()))
    _PAIR_CACHE[key] = tuple(out)
    return out


def scan_well_covering(g: GroupData, lam: OneParamSubgroup,
                       m_lo: Optional[int] = None, m_hi: Optional[int] = None):
    """All well-covering triples (w, w', m) for m in [m_lo, m_hi]
    (defaults: [min level, max level + 2])."""
    ctx = context(g, lam)
    lo = ctx.graded.min_level() if m_lo is None else m_lo
    hi = ctx.graded.max_level() + 2 if m_hi is None else m_hi
    out = []
    for m in range(lo, hi + 1):
        for w in ctx.reps:
            for w_prime in ctx.reps:
                pair = WCPair(w, w_prime, m, lam)
                if ctx.graded.level_nonempty(m) and is_well_covering(g, pair):
                    out.append(pair)
    return out


def trivial_pair(g: GroupData, lam: OneParamSubgroup, w: WeylElt, m: int = 0) -> WCPair:
    """The pair (w, w0 w w_lambda, m)."""
    ctx = context(g, lam)
    w0 = ctx.ring.group.longest()
    return WCPair(w, w0 * w * ctx.pd.w_lambda, m, lam)
