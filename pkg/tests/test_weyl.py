"""Permutation combinatorics: lengths, special elements, coset reps."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitope import goldens
from orbitope.exactmath import RatVec
from orbitope.weyl import (
    Perm,
    WeylDescriptor,
    WeylElt,
    hat_stabilizer_longest,
    max_coset_reps,
    special_elements,
    stabilizer_parabolic,
)


def perms(n):
    return [Perm(p) for p in itertools.permutations(range(1, n + 1))]


class TestLength:
    def test_identity_and_longest(self):
        assert Perm.identity(5).length() == 0
        for n in (2, 3, 4, 5, 6):
            assert Perm.longest(n).length() == n * (n - 1) // 2

    def test_hat_length(self):
        for r in range(1, 7):
            hats, _ = special_elements(r)
            assert [h.length() for h in hats] == list(range(r))

    @given(st.integers(2, 6), st.data())
    @settings(max_examples=80, deadline=None)
    def test_descent_law(self, n, data):
        images = data.draw(st.permutations(list(range(1, n + 1))))
        w = Perm(images)
        i = data.draw(st.integers(1, n - 1))
        ws = w * Perm.simple(n, i)
        expected = w.length() + (1 if w(i) < w(i + 1) else -1)
        assert ws.length() == expected

    def test_inverse_and_longest_laws(self):
        for w in perms(4):
            assert w.inverse().length() == w.length()
            assert (Perm.longest(4) * w).length() == 6 - w.length()


class TestSpecialElements:
    def test_check_lengths(self):
        for r in range(1, 7):
            _, checks = special_elements(r)
            assert [c.length() for c in checks] == list(range(r - 1, -1, -1))

    def test_boundary_identities(self):
        for r in range(1, 7):
            hats, checks = special_elements(r)
            assert hats[0] == Perm.identity(r)
            assert checks[-1] == Perm.identity(r)

    def test_conversion_identity(self):
        # w0 wQhat what_k = wcheck_k
        for r in range(1, 7):
            hats, checks = special_elements(r)
            w0 = Perm.longest(r)
            wq = hat_stabilizer_longest(r)
            for k in range(r):
                assert w0 * wq * hats[k] == checks[k]

    def test_check2_in_s3(self):
        _, checks = special_elements(3)
        assert checks[1] == Perm.simple(3, 2)

    def test_hat_one_line_by_direct_composition(self):
        # r=4: what_3 = s1 s2 applied right to left maps 1->2, 2->3, 3->1
        hats, _ = special_elements(4)
        direct = Perm.simple(4, 1) * Perm.simple(4, 2)
        assert hats[2] == direct
        assert hats[2].images == (2, 3, 1, 4)

    def test_hat_multiplication_law(self):
        # l(w what_k) = l(w) + k - 1 for w stabilizing 1
        for r in (3, 4, 5):
            hats, _ = special_elements(r)
            stab = [w for w in perms(r) if w(1) == 1]
            for w in stab:
                for k, h in enumerate(hats, start=1):
                    assert (w * h).length() == w.length() + k - 1

    def test_check_transposition_lengths(self):
        # l(wcheck_k t_{k-1,k+1}) = l(wcheck_k) + 1; other t_{i,j} with
        # i <= k < j jump by >= 2; t_{k,j} drops.
        for r in range(3, 7):
            _, checks = special_elements(r)
            for k in range(2, r):
                ck = checks[k - 1]
                t = Perm.transposition(r, k - 1, k + 1)
                assert (ck * t).length() == ck.length() + 1
                for i in range(1, k + 1):
                    for j in range(k + 1, r + 1):
                        tij = Perm.transposition(r, i, j)
                        if (i, j) == (k - 1, k + 1):
                            continue
                        if i == k:
                            assert (ck * tij).length() <= ck.length() - 1
                        else:
                            assert (ck * tij).length() >= ck.length() + 2
                # wcheck_k t_{k-1,k} = wcheck_{k-1}
                assert ck * Perm.transposition(r, k - 1, k) == checks[k - 2]


class TestCosetReps:
    def test_regular_gives_whole_group(self):
        G = WeylDescriptor((3,))
        pd = stabilizer_parabolic(G, RatVec([3, 2, 1]))
        assert len(max_coset_reps(G, pd)) == 6

    def test_hat_representatives(self):
        # stabilizer S_{n-1}: reps are what_k^{-1} w_lambda with the
        # expected lengths
        for n in (2, 3, 4, 5):
            G = WeylDescriptor((n,))
            pd = stabilizer_parabolic(G, RatVec([n] + [-1] * (n - 1)))
            reps = max_coset_reps(G, pd)
            hats, _ = special_elements(n)
            wl = pd.w_lambda.factors[0]
            expect = sorted(
                (WeylElt([h.inverse() * wl]) for h in hats), key=WeylElt.sort_key
            )
            assert reps == expect
            lengths = sorted(r.length() for r in reps)
            assert lengths == sorted(wl.length() + k for k in range(n))

    def test_gl4_table_reps(self):
        # the six longest representatives for the (2,2)-block stabilizer
        rec = goldens.load("Tab7.3.3-reps")
        G = WeylDescriptor((4,))
        lam = RatVec([1, 1, -1, -1])
        pd = stabilizer_parabolic(G, lam)
        reps = max_coset_reps(G, pd)
        w0 = G.longest()
        rho = RatVec(["3/2", "1/2", "-1/2", "-3/2"])
        table = {}
        for row in rec.payload["rows"]:
            w = WeylElt([Perm.from_word(4, row["w"])])
            table[w] = row
        assert set(reps) == set(table)
        for w, row in table.items():
            assert w.length() == row["length"]
            assert w0 * w == WeylElt([Perm.from_word(4, row["w0w"])])
            wlam = G.act(w, lam)
            assert wlam == RatVec(row["w_lam"])
            assert wlam.dot(rho) == row["rho_pairing"]

    def test_uniqueness_assertion(self):
        G = WeylDescriptor((2, 2))
        pd = stabilizer_parabolic(G, RatVec([1, 1, 2, 0]))
        reps = max_coset_reps(G, pd)
        assert len(reps) == 2

    def test_dominance_required(self):
        G = WeylDescriptor((2,))
        with pytest.raises(ValueError):
            stabilizer_parabolic(G, RatVec([0, 1]))


class TestAction:
    def test_identity(self):
        G = WeylDescriptor((3,))
        v = RatVec([5, -1, 2])
        assert G.act(G.identity(), v) == v

    def test_simple_swap(self):
        G = WeylDescriptor((2,))
        assert G.act(G.simple(0, 1), RatVec([3, 1])) == RatVec([1, 3])

    def test_su31_lambda_orbit(self):
        # (s2 s1) lambda_1 = lambda_3 with lambda_k = 4 e_k - sum e
        G = WeylDescriptor((3,))
        s1, s2 = G.simple(0, 1), G.simple(0, 2)
        assert G.act(s2 * s1, RatVec([3, -1, -1])) == RatVec([-1, -1, 3])

    def test_blockwise(self):
        G = WeylDescriptor((2, 2))
        w = WeylElt([Perm((2, 1)), Perm((1, 2))])
        assert G.act(w, RatVec([1, 2, 3, 4])) == RatVec([2, 1, 3, 4])

    def test_text_round_trip(self):
        w = WeylElt([Perm((2, 1, 3)), Perm((1, 2))])
        assert w.text() == "2 1 3|1 2"
        assert WeylElt.from_text(w.text()) == w
