"""Integer cohomology of products of type-A complete flag varieties.

The ring H*(GL_n/B, Z) is realized in the polynomial model: the class of a
permutation w is its Schubert polynomial, computed by divided differences
descending from the staircase monomial of the longest element.  Products
are multiplied as polynomials and re-expanded in the (stable) Schubert
basis by repeatedly stripping the leading monomial, which for a Schubert
polynomial is x^code(w) with coefficient 1 in the reverse-reading
lexicographic order; permutations that do not fit in S_n are then
truncated away.  The degree-2 multiplication rule (Chevalley / Monk)

    Theta(mu) . s_w = sum over positive roots a with l(w t_a) = l(w) + 1
                      of  mu(a^) . s_{w t_a}

is implemented independently of the polynomial model and serves as its
cross-check throughout the test suite.

Products of factors are handled factor-wise: a class of
H*(prod GL_{n_f}/B) is a Z-combination of tuples of factor permutations,
and cup products distribute over the tensor decomposition.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .exactmath import RatVec, rat
from .weyl import ParabolicData, Perm, WeylDescriptor, WeylElt

Mono = Tuple[int, ...]
Poly = Dict[Mono, int]


# ---------------------------------------------------------------------------
# Integer polynomials in x_1..x_k (monomial dicts, zero terms absent)
# ---------------------------------------------------------------------------


def _pad(mono: Mono, width: int) -> Mono:
    return mono + (0,) * (width - len(mono))


def _trim(mono: Mono) -> Mono:
    k = len(mono)
    while k > 0 and mono[k - 1] == 0:
        k -= 1
    return mono[:k]


def poly_add(f: Poly, g: Poly, scale: int = 1) -> Poly:
    out = dict(f)
    for m, c in g.items():
        c = c * scale
        nc = out.get(m, 0) + c
        if nc:
            out[m] = nc
        else:
            out.pop(m, None)
    return out


def poly_mul(f: Poly, g: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in f.items():
        for mb, cb in g.items():
            w = max(len(ma), len(mb))
            m = tuple(a + b for a, b in zip(_pad(ma, w), _pad(mb, w)))
            nc = out.get(m, 0) + ca * cb
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
    return out


def divided_difference(f: Poly, i: int) -> Poly:
    """The operator (f - s_i f) / (x_i - x_{i+1}), i >= 1.

    Computed monomial by monomial: with exponents (p, q) at positions
    (i, i+1), the image is sign(p - q) * sum of monomials with those
    exponents replaced by (t, p+q-1-t) for t between min(p,q) and
    max(p,q)-1.
    """
    out: Poly = {}
    for mono, coeff in f.items():
        w = max(len(mono), i + 1)
        m = list(_pad(mono, w))
        p, q = m[i - 1], m[i]
        if p == q:
            continue
        sign = 1 if p > q else -1
        lo, hi = min(p, q), max(p, q)
        for t in range(lo, hi):
            m2 = list(m)
            m2[i - 1], m2[i] = t, p + q - 1 - t
            key = _trim(tuple(m2))
            nc = out.get(key, 0) + sign * coeff
            if nc:
                out[key] = nc
            else:
                out.pop(key, None)
    return out


# ---------------------------------------------------------------------------
# Schubert polynomials and stable expansion
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def schubert_poly(images: Tuple[int, ...]) -> "frozenset":
    """Schubert polynomial of the permutation with the given (trimmed)
    one-line notation, as a frozenset of (monomial, coeff) items."""
    w = Perm(images) if images else Perm((1,))
    n = w.degree
    if w == Perm.longest(n):
        mono = _trim(tuple(range(n - 1, -1, -1)))
        return frozenset({(mono, 1)})
    # Pick the first ascent; S_w = d_i S_{w s_i} with l(w s_i) = l(w) + 1.
    i = next(k for k in range(1, n) if w(k) < w(k + 1))
    higher = dict(schubert_poly((w * Perm.simple(n, i)).trim()))
    # The trimmed higher permutation may live in a smaller symmetric group,
    # but the divided difference only needs exponent positions i, i+1.
    return frozenset(divided_difference(higher, i).items())


def schubert_poly_dict(perm: Perm) -> Poly:
    return dict(schubert_poly(perm.trim()))


def _rev_key(mono: Mono, width: int) -> Tuple[int, ...]:
    return tuple(reversed(_pad(mono, width)))


def perm_from_code(code: Sequence[int]) -> Perm:
    """The unique permutation with the given Lehmer code (trailing zeros
    extend by fixed points as needed)."""
    code = list(code)
    n = max([i + 1 + c for i, c in enumerate(code)] + [len(code), 1])
    values = list(range(1, n + 1))
    images = []
    for i in range(n):
        c = code[i] if i < len(code) else 0
        images.append(values.pop(c))
    return Perm(images)


def expand_in_schubert(f: Poly) -> Dict[Tuple[int, ...], int]:
    """Expansion of a polynomial over the stable Schubert basis.

    Returns {trimmed one-line notation: integer coefficient}.  Relies on
    the leading-monomial property: max monomial of S_w in the
    reverse-reading lex order is x^code(w) with coefficient 1.
    """
    out: Dict[Tuple[int, ...], int] = {}
    rest = dict(f)
    guard = 0
    while rest:
        guard += 1
        if guard > 100000:
            raise AssertionError("schubert expansion did not terminate")
        width = max(len(m) for m in rest)
        mono = max(rest, key=lambda m: _rev_key(m, width))
        coeff = rest[mono]
        w = perm_from_code(_pad(mono, width))
        key = w.trim()
        out[key] = out.get(key, 0) + coeff
        rest = poly_add(rest, dict(schubert_poly(key)), scale=-coeff)
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _factor_cup(n: int, u_images: Tuple[int, ...], v_images: Tuple[int, ...]):
    """sigma_u . sigma_v inside H*(GL_n/B): multiply the Schubert
    polynomials, expand stably, drop permutations outside S_n."""
    if not u_images:
        u_images = (1,)
    if not v_images:
        v_images = (1,)
    prod = poly_mul(dict(schubert_poly(_trim_images(u_images))),
                    dict(schubert_poly(_trim_images(v_images))))
    terms = expand_in_schubert(prod)
    return tuple(
        (w, c) for w, c in sorted(terms.items()) if len(w) <= n
    )


def _trim_images(images: Tuple[int, ...]) -> Tuple[int, ...]:
    return Perm(images).trim() if images else (1,)


# ---------------------------------------------------------------------------
# Classes and the ring
# ---------------------------------------------------------------------------


class CohClass:
    """A graded integer combination of Schubert basis classes.

    All stored terms share one length (half the cohomological degree); the
    zero class has no terms and no degree.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[WeylElt, int]):
        self.terms = {w: c for w, c in terms.items() if c != 0}
        lengths = {w.length() for w in self.terms}
        if len(lengths) > 1:
            raise ValueError("inhomogeneous cohomology class")

    @property
    def degree(self) -> Optional[int]:
        """Cohomological degree 2 l(w); None for the zero class."""
        for w in self.terms:
            return 2 * w.length()
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, CohClass) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "CohClass") -> "CohClass":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return CohClass(terms)

    def __sub__(self, other: "CohClass") -> "CohClass":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) - c
        return CohClass(terms)

    def scale(self, c: int) -> "CohClass":
        return CohClass({w: c * v for w, v in self.terms.items()})

    def text(self) -> str:
        """Debug form '3*s1.s3.s2 + 1*s2' with factor words joined by '|'."""
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=WeylElt.sort_key):
            words = []
            for f in w.factors:
                word = _reduced_word(f)
                words.append(".".join(f"s{i}" for i in word) if word else "id")
            parts.append(f"{self.terms[w]}*{'|'.join(words)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"CohClass({self.text()})"


def _reduced_word(p: Perm) -> list[int]:
    """The lexicographically smallest reduced word of p (greedy smallest
    left descent)."""
    word = []
    cur = p
    while cur.length() > 0:
        inv = cur.inverse()
        i = next(k for k in range(1, cur.degree) if inv(k) > inv(k + 1))
        word.append(i)
        cur = Perm.simple(cur.degree, i) * cur
    return word


class SchubertRing:
    """H* of a product of type-A complete flag varieties.

    degrees are the factor sizes (n_1, ..., n_f); classes are indexed by
    WeylElt over the matching WeylDescriptor.  Weight arguments are given
    in the blockwise coordinates of the owning group (dimension
    sum(degrees)).
    """

    def __init__(self, degrees: Sequence[int]):
        self.degrees = tuple(int(d) for d in degrees)
        if any(d < 1 for d in self.degrees):
            raise ValueError("factor degrees must be positive")
        self.group = WeylDescriptor(self.degrees)
        self.top_length = sum(d * (d - 1) // 2 for d in self.degrees)

    # -- basic classes -----------------------------------------------------
    def one(self) -> CohClass:
        return CohClass({self.group.identity(): 1})

    def zero(self) -> CohClass:
        return CohClass({})

    def basis_class(self, w: WeylElt) -> CohClass:
        return CohClass({w: 1})

    def point_class(self) -> CohClass:
        return CohClass({self.group.longest(): 1})

    def _blocks(self, mu: RatVec):
        if mu.dim != self.group.dim:
            raise ValueError("weight dimension does not match ring")
        return [mu.entries[a:b] for a, b in self.group.block_ranges()]

    # -- degree-2 classes and the Chevalley rule ---------------------------
    def theta(self, mu: RatVec) -> CohClass:
        """The degree-2 class of a weight: expand over the factor simple
        reflections with coefficients mu(a^) = mu_i - mu_{i+1} blockwise.
        Central (trace) parts of mu contribute nothing."""
        blocks = self._blocks(mu)
        terms: Dict[WeylElt, int] = {}
        for f, blk in enumerate(blocks):
            for i in range(1, len(blk)):
                c = blk[i - 1] - blk[i]
                if c != 0:
                    if rat(c).denominator != 1:
                        raise ValueError("theta needs an integral weight")
                    w = self.group.simple(f, i)
                    terms[w] = terms.get(w, 0) + int(c)
        return CohClass(terms)

    def chevalley_mult(self, c: CohClass, mu: RatVec) -> CohClass:
        """Theta(mu) . c by the degree-2 multiplication rule."""
        blocks = self._blocks(mu)
        out: Dict[WeylElt, int] = {}
        for w, coeff in c.terms.items():
            for f, d in enumerate(self.degrees):
                blk = blocks[f]
                wf = w.factors[f]
                lf = wf.length()
                for a in range(1, d):
                    for b in range(a + 1, d + 1):
                        cv = blk[a - 1] - blk[b - 1]
                        if cv == 0:
                            continue
                        if rat(cv).denominator != 1:
                            raise ValueError("chevalley needs an integral weight")
                        wt = wf * Perm.transposition(d, a, b)
                        if wt.length() != lf + 1:
                            continue
                        nw = WeylElt(
                            wt if k == f else w.factors[k] for k in range(len(self.degrees))
                        )
                        nc = out.get(nw, 0) + coeff * int(cv)
                        if nc:
                            out[nw] = nc
                        else:
                            out.pop(nw, None)
        return CohClass(out)

    # -- full cup product (polynomial model) -------------------------------
    def cup(self, a: CohClass, b: CohClass) -> CohClass:
        if a.is_zero() or b.is_zero():
            return self.zero()
        if a.degree + b.degree > 2 * self.top_length:
            return self.zero()
        out: Dict[WeylElt, int] = {}
        for w, cw in a.terms.items():
            for v, cv in b.terms.items():
                factor_terms = []
                for f, d in enumerate(self.degrees):
                    prods = _factor_cup(d, w.factors[f].images, v.factors[f].images)
                    if not prods:
                        factor_terms = None
                        break
                    factor_terms.append(prods)
                if factor_terms is None:
                    continue
                for combo in itertools.product(*factor_terms):
                    coeff = cw * cv
                    perms = []
                    for (imgs, c), d in zip(combo, self.degrees):
                        coeff *= c
                        perms.append(Perm(tuple(imgs) + tuple(range(len(imgs) + 1, d + 1))))
                    nw = WeylElt(perms)
                    nc = out.get(nw, 0) + coeff
                    if nc:
                        out[nw] = nc
                    else:
                        out.pop(nw, None)
        return CohClass(out)

    def cup_many(self, classes: Iterable[CohClass]) -> CohClass:
        acc = self.one()
        for c in classes:
            acc = self.cup(acc, c)
            if acc.is_zero():
                return acc
        return acc

    # -- Poincare duality on a parabolic quotient ---------------------------
    def duality_check(self, w: WeylElt, w_prime: WeylElt, pd: ParabolicData) -> bool:
        """Whether sigma_w . sigma_{w'} = [pt] on the quotient by the
        parabolic of pd, for w, w' longest coset representatives with
        l(w) + l(w') >= l(w0) + l(w_lambda).

        Verified in the Borel model through the injective pullback: the
        shortest representatives w w_lambda and w' w_lambda multiply to the
        class of w0 w_lambda exactly when w' = w0 w w_lambda.
        """
        w0 = self.group.longest()
        wl = pd.w_lambda
        if w.length() + w_prime.length() < w0.length() + wl.length():
            raise ValueError("duality_check needs l(w) + l(w') >= l(w0) + l(w_lambda)")
        for u in (w, w_prime):
            if (u * wl).length() != u.length() - wl.length():
                raise ValueError("w and w' must be longest coset representatives")
        com = self.cup(self.basis_class(w * wl), self.basis_class(w_prime * wl))
        expected = w_prime == w0 * w * wl
        got = com == self.basis_class(w0 * wl)
        if got != expected:
            raise AssertionError(
                "polynomial model disagrees with the coset duality rule"
            )
        return got
