"""Permutations and products of symmetric groups.

Elements are stored in one-line notation (1-indexed images); products are
function composition, so (a * b)(i) = a(b(i)) and words like s1*s2 are read
right to left.  Lengths are inversion counts, never reduced-word lengths.

A WeylElt is a tuple of factor permutations, one per unitary factor of the
maximal compact subgroup; it acts on coordinate vectors blockwise.  The
special elements what_k = s1...s_{k-1} (the cycle (1 2 ... k)) and
wcheck_k = s_{r-1}...s_k (the cycle (r r-1 ... k)) drive the coset
combinatorics used everywhere downstream.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exactmath import DimensionError, RatVec


class Perm:
    """A permutation of {1..n} in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(i) for i in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        self.images = imgs

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm{self.images}"

    def one_line(self) -> str:
        return " ".join(str(i) for i in self.images)

    @staticmethod
    def identity(n: int) -> "Perm":
        return Perm(range(1, n + 1))

    @staticmethod
    def longest(n: int) -> "Perm":
        return Perm(range(n, 0, -1))

    @staticmethod
    def transposition(n: int, a: int, b: int) -> "Perm":
        imgs = list(range(1, n + 1))
        imgs[a - 1], imgs[b - 1] = imgs[b - 1], imgs[a - 1]
        return Perm(imgs)

    @staticmethod
    def simple(n: int, i: int) -> "Perm":
        """s_i = t_{i,i+1}, 1 <= i <= n-1."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"simple reflection index {i} out of range for S_{n}")
        return Perm.transposition(n, i, i + 1)

    @staticmethod
    def from_word(n: int, word: Sequence[int]) -> "Perm":
        """Product s_{a1} s_{a2} ... s_{ak}, composed right to left."""
        w = Perm.identity(n)
        for a in word:
            w = w * Perm.simple(n, a)
        return w

    def __mul__(self, other: "Perm") -> "Perm":
        if self.degree != other.degree:
            raise ValueError("composing permutations of different degree")
        return Perm(self.images[other.images[i] - 1] for i in range(self.degree))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Perm(inv)

    def length(self) -> int:
        """Number of inversions."""
        inv = 0
        imgs = self.images
        n = self.degree
        for i in range(n):
            for j in range(i + 1, n):
                if imgs[i] > imgs[j]:
                    inv += 1
        return inv

    def code(self) -> tuple[int, ...]:
        """Lehmer code c_i = #{j > i : w(j) < w(i)}."""
        imgs = self.images
        n = self.degree
        return tuple(sum(1 for j in range(i + 1, n) if imgs[j] < imgs[i]) for i in range(n))

    def act_tuple(self, values: Sequence) -> tuple:
        """Coordinate action: (w . v)_{w(i)} = v_i."""
        out = [None] * self.degree
        for i in range(self.degree):
            out[self.images[i] - 1] = values[i]
        return tuple(out)

    def trim(self) -> tuple[int, ...]:
        """One-line notation with trailing fixed points removed."""
        imgs = list(self.images)
        while len(imgs) > 1 and imgs[-1] == len(imgs):
            imgs.pop()
        return tuple(imgs)


def special_elements(r: int):
    """The elements what_k = s1...s_{k-1} and wcheck_k = s_{r-1}...s_k of S_r.

    what_1 = wcheck_r = identity; l(what_k) = k-1 and l(wcheck_k) = r-k.
    They satisfy w0 * wQhat * what_k = wcheck_k, where wQhat is the longest
    element of the stabilizer of 1.
    """
    if r < 1:
        raise ValueError("r >= 1 required")
    hats = [Perm.from_word(r, list(range(1, k))) for k in range(1, r + 1)]
    checks = [Perm.from_word(r, list(range(r - 1, k - 1, -1))) for k in range(1, r + 1)]
    return hats, checks


def hat_stabilizer_longest(r: int) -> Perm:
    """Longest element of the stabilizer of 1 in S_r (S_{r-1} on {2..r})."""
    return Perm([1] + list(range(r, 1, -1))) if r > 1 else Perm.identity(1)


class WeylElt:
    """An element of a product of symmetric groups."""

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable[Perm]):
        self.factors = tuple(factors)
        if not self.factors:
            raise ValueError("WeylElt needs at least one factor")

    def __eq__(self, other):
        return isinstance(other, WeylElt) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return f"WeylElt({self.text()!r})"

    def text(self) -> str:
        """Factor one-line notations joined by '|', e.g. '2 1 3|1 2'."""
        return "|".join(f.one_line() for f in self.factors)

    @staticmethod
    def from_text(text: str) -> "WeylElt":
        return WeylElt(Perm(int(t) for t in part.split()) for part in text.split("|"))

    def sort_key(self) -> tuple:
        return tuple(f.images for f in self.factors)

    def length(self) -> int:
        return sum(f.length() for f in self.factors)

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        if len(self.factors) != len(other.factors):
            raise ValueError("mismatched factor counts")
        return WeylElt(a * b for a, b in zip(self.factors, other.factors))

    def inverse(self) -> "WeylElt":
        return WeylElt(f.inverse() for f in self.factors)


@dataclass(frozen=True)
class WeylDescriptor:
    """A product of symmetric groups S_{d1} x ... x S_{df} acting blockwise
    on vectors of dimension d1 + ... + df.

    `sign_action` marks the orthogonal families whose actual Weyl group also
    flips coordinate signs; those never carry Schubert data here and the
    flag only documents that the permutation model is a proxy.
    """

    degrees: tuple[int, ...]
    sign_action: bool = False

    def __post_init__(self):
        if not self.degrees or any(d < 1 for d in self.degrees):
            raise ValueError("factor degrees must be positive")

    @property
    def dim(self) -> int:
        return sum(self.degrees)

    @property
    def order(self) -> int:
        n = 1
        for d in self.degrees:
            for k in range(2, d + 1):
                n *= k
        return n

    def block_ranges(self):
        """(start, stop) index pairs of each factor block."""
        out = []
        start = 0
        for d in self.degrees:
            out.append((start, start + d))
            start += d
        return out

    def identity(self) -> WeylElt:
        return WeylElt(Perm.identity(d) for d in self.degrees)

    def longest(self) -> WeylElt:
        return WeylElt(Perm.longest(d) for d in self.degrees)

    def simple(self, factor: int, i: int) -> WeylElt:
        perms = [Perm.identity(d) for d in self.degrees]
        perms[factor] = Perm.simple(self.degrees[factor], i)
        return WeylElt(perms)

    def simple_reflections(self):
        """All (factor, i) simple reflection labels."""
        return [(f, i) for f, d in enumerate(self.degrees) for i in range(1, d)]

    def from_words(self, words: Sequence[Sequence[int]]) -> WeylElt:
        return WeylElt(Perm.from_word(d, w) for d, w in zip(self.degrees, words))

    def elements(self):
        """All elements (cartesian product of factor symmetric groups)."""
        if self.order > 10**6:
            raise ValueError(f"group too large to enumerate: order {self.order}")
        pools = [
            [Perm(p) for p in itertools.permutations(range(1, d + 1))] for d in self.degrees
        ]
        for combo in itertools.product(*pools):
            yield WeylElt(combo)

    def act(self, w: WeylElt, v: RatVec) -> RatVec:
        """Blockwise coordinate permutation action on a vector."""
        if v.dim != self.dim:
            raise DimensionError(f"vector dim {v.dim} vs group dim {self.dim}")
        out = []
        for (start, stop), perm in zip(self.block_ranges(), w.factors):
            out.extend(perm.act_tuple(v.entries[start:stop]))
        return RatVec(out)


@dataclass(frozen=True)
class ParabolicData:
    """The stabilizer W_lambda of a dominant vector, with its combinatorics.

    generators are the simple reflections (factor, i) fixing lam; W_lambda
    is exactly the subgroup they generate, and w_lambda its longest element.
    """

    group: WeylDescriptor
    lam: RatVec
    generators: tuple[tuple[int, int], ...]
    subgroup: tuple[WeylElt, ...]
    w_lambda: WeylElt

    @property
    def order(self) -> int:
        return len(self.subgroup)


def stabilizer_parabolic(group: WeylDescriptor, lam: RatVec) -> ParabolicData:
    """Build W_lambda for a dominant vector lam (equal adjacent coordinates
    inside each block give the generating simple reflections)."""
    if lam.dim != group.dim:
        raise DimensionError("lambda dimension does not match group")
    for start, stop in group.block_ranges():
        for j in range(start, stop - 1):
            if lam[j] < lam[j + 1]:
                raise ValueError("lambda must be dominant (blockwise weakly decreasing)")
    gens = []
    for f, (start, stop) in enumerate(group.block_ranges()):
        for i in range(1, stop - start):
            if lam[start + i - 1] == lam[start + i]:
                gens.append((f, i))
    # The subgroup generated is a product of symmetric groups on the equal
    # runs; enumerate by closing under the generators.
    gen_elts = [group.simple(f, i) for f, i in gens]
    seen = {group.identity()}
    frontier = [group.identity()]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gen_elts:
                u = w * g
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    subgroup = tuple(sorted(seen, key=WeylElt.sort_key))
    w_lambda = max(subgroup, key=WeylElt.length)
    return ParabolicData(group, lam, tuple(gens), subgroup, w_lambda)


def max_coset_reps(group: WeylDescriptor, pd: ParabolicData) -> list[WeylElt]:
    """Longest representatives of the cosets w W_lambda, one per coset.

    Found by exhaustive scan: the coset of w is keyed by the orbit point
    w . lambda (W_lambda is exactly the stabilizer of lambda).  The longest
    element of each coset is unique; this is asserted.
    """
    best: dict[tuple, WeylElt] = {}
    tied: dict[tuple, bool] = {}
    for w in group.elements():
        key = group.act(w, pd.lam).entries
        cur = best.get(key)
        if cur is None or w.length() > cur.length():
            best[key] = w
            tied[key] = False
        elif w.length() == cur.length():
            tied[key] = True
    if any(tied.values()):
        raise AssertionError("longest coset representative was not unique")
    reps = sorted(best.values(), key=WeylElt.sort_key)
    expected = group.order // pd.order
    if len(reps) != expected:
        raise AssertionError(f"coset count {len(reps)} != {expected}")
    return reps
