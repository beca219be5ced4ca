"""Polytope assembly, closed forms, the Horn oracle and cross-checks."""

import json
import random
from fractions import Fraction as F

import pytest

from orbitope import goldens
from orbitope.exactmath import (
    AffineIneq,
    HPolyhedron,
    RatVec,
    ineq_eq,
    ineq_ge,
    ineq_le,
    poly_equal,
)
from orbitope.polytope import (
    DomainError,
    assemble,
    closed_form,
    contained_in_hol_closure,
    contained_in_shifted_cone,
    cross_check,
    display_ineq,
    horn_oracle_member,
    member,
)
from orbitope.rootdata import GroupFamily, UnsupportedFamilyError, build, in_hol_chamber


def g_of(spec):
    return build(GroupFamily.parse(spec))


class TestAssembleExamples:
    def test_sp4(self):
        p = assemble(g_of("sp:n=2"), [3, 1])
        assert p.pretty() == "xi1 - xi2 >= 0; xi1 >= 3; xi2 >= 1"
        expect = HPolyhedron(2, [ineq_ge([1, -1], 0), ineq_ge([1, 0], 3),
                                 ineq_ge([0, 1], 1)])
        assert poly_equal(p.system, expect)

    def test_su21(self):
        # the chain 2x1 - x2 >= 4 >= -x1 + 2x2 >= -2 plus dominance
        p = assemble(g_of("su:p=2,q=1"), [2, 0])
        expect = HPolyhedron(2, [
            ineq_ge([2, -1], 4), ineq_le([-1, 2], 4), ineq_ge([-1, 2], -2),
            ineq_ge([1, -1], 0),
        ])
        assert poly_equal(p.system, expect)

    def test_so_star6_bounds(self):
        # right sides (0, 2, 4, -2, -4) for Lambda = (3, 2, 1)
        p = assemble(g_of("so_star:n=3"), [3, 2, 1])
        expect = HPolyhedron(3, [
            ineq_ge([1, -1, 0], 0), ineq_ge([0, 1, -1], 0),
            ineq_ge([-1, 1, 1], 0), ineq_ge([1, -1, 1], 2), ineq_ge([1, 1, -1], 4),
            ineq_ge([1, -1, -1], -2), ineq_ge([-1, 1, -1], -4),
        ])
        assert poly_equal(p.system, expect)

    def test_lambda_validation(self):
        with pytest.raises(DomainError):
            assemble(g_of("sp:n=2"), [3, 0])       # boundary of the chamber
        with pytest.raises(DomainError):
            assemble(g_of("sp:n=2"), [1, 3])       # not dominant
        with pytest.raises(DomainError):
            assemble(g_of("su:p=2,q=2"), [3, 1, -1, -2])   # trace not zero
        with pytest.raises(UnsupportedFamilyError):
            assemble(g_of("so:p=5"), [2, 1, 0])

    def test_provenance(self):
        p = assemble(g_of("sp:n=2"), [3, 1])
        sources = {rec.source for rec in p.provenance}
        assert sources == {"chamber", "pair"}
        kept = [rec for rec in p.provenance if rec.kept]
        assert len(kept) >= len(p.system.ineqs)
        pair_recs = [rec for rec in p.provenance if rec.source == "pair"]
        assert all(rec.lam is not None and rec.w is not None for rec in pair_recs)

    def test_json_shape(self):
        p = assemble(g_of("sp:n=2"), [3, 1])
        obj = p.to_json_obj()
        assert obj["group"] == "sp:n=2"
        assert obj["Lambda"] == ["3", "1"]
        assert {"a", "b", "eq"} <= set(obj["ineqs"][0])
        blob = json.dumps(obj)
        assert json.loads(blob) == obj


class TestClosedFormAgainstGoldens:
    CASES = [
        ("sp:n=2", "Thm7.3.1", "n=2", [3, 2]),
        ("sp:n=3", "Thm7.3.1", "n=3", [4, 3, 2]),
        ("sp:n=4", "Thm7.3.1", "n=4", [5, 4, 3, 2]),
        ("su:p=2,q=1", "Thm7.3.4", "n=2", [2, 0]),
        ("su:p=3,q=1", "Thm7.3.4", "n=3", [3, 1, 0]),
        ("su:p=4,q=1", "Thm7.3.4", "n=4", [4, 2, 1, 0]),
        ("so_star:n=3", "Thm7.3.6", "n=3", [3, 2, 1]),
        ("so_star:n=4", "Thm7.3.8", "n=4", [4, 3, 2, 1]),
        ("su:p=2,q=2", "Thm7.3.11", "p=2,q=2", [3, 1, -1, -3]),
    ]

    @pytest.mark.parametrize("spec,golden_id,instance,lam", CASES)
    def test_matches_golden_rows(self, spec, golden_id, instance, lam):
        g = g_of(spec)
        Lambda = RatVec(lam)
        rec = goldens.load(golden_id)
        golden_sys = goldens.polytope_system(rec, instance, Lambda)
        cf = closed_form(g, Lambda)
        assert poly_equal(cf.system, golden_sys)

    def test_no_closed_form(self):
        with pytest.raises(DomainError):
            closed_form(g_of("so_star:n=5"), [5, 4, 3, 2, 1])
        with pytest.raises(DomainError):
            closed_form(g_of("su:p=3,q=2"), [4, 2, 0, -2, -4])

    def test_su22_abs_value_bound(self):
        # |x1 - x2 - x3 + x4| <= 4 at Lambda = (3, 1, -1, -3)
        cf = closed_form(g_of("su:p=2,q=2"), [3, 1, -1, -3])
        xi_in = RatVec([3, 1, -1, -3])
        for row in (ineq_le([1, -1, -1, 1], 4), ineq_ge([1, -1, -1, 1], -4)):
            sys2 = HPolyhedron(4, [row])
            from orbitope.exactmath import implies
            assert implies(cf.system, row)


class TestMember:
    def test_lambda_inside(self):
        for spec, lam in [("sp:n=2", [3, 1]), ("su:p=2,q=1", [2, 0]),
                          ("so_star:n=3", [3, 2, 1]), ("su:p=2,q=2", [3, 1, -1, -3])]:
            p = assemble(g_of(spec), lam)
            assert member(p, lam)

    def test_outside_chamber(self):
        p = assemble(g_of("sp:n=2"), [3, 1])
        assert not member(p, [1, 3])

    def test_schmid_shift(self):
        p = assemble(g_of("sp:n=2"), [3, 1])
        assert member(p, [5, 1])   # Lambda + first strongly orthogonal root

    def test_dim_mismatch(self):
        p = assemble(g_of("sp:n=2"), [3, 1])
        with pytest.raises(Exception):
            member(p, [1, 2, 3])


class TestOracle:
    def test_lambda_member(self):
        for spec, lam in [("sp:n=2", [3, 1]), ("su:p=2,q=1", [2, 0]),
                          ("so_star:n=3", [3, 2, 1]), ("su:p=2,q=2", [3, 1, -1, -3])]:
            assert horn_oracle_member(g_of(spec), lam, lam)

    def test_sp4_examples(self):
        g = g_of("sp:n=2")
        assert not horn_oracle_member(g, [3, 1], [2, 1])
        assert horn_oracle_member(g, [3, 1], [4, 2])
        ok, gamma = horn_oracle_member(g, [3, 1], [4, 2], witness=True)
        assert ok and gamma is not None
        # the witness lies in the strongly orthogonal cone and is a valid
        # difference spectrum
        from orbitope.rootdata import schmid_cone
        assert schmid_cone(g).contains(gamma)

    def test_rational_points(self):
        g = g_of("su:p=2,q=1")
        p = assemble(g, [2, 0])
        for mu in ([F(5, 2), F(1, 2)], [F(7, 2), 1], [2, F(1, 2)]):
            assert horn_oracle_member(g, [2, 0], mu) == member(p, mu)

    def test_so_family_rejected(self):
        with pytest.raises(UnsupportedFamilyError):
            horn_oracle_member(g_of("so:p=5"), [2, 1, 0], [2, 1, 0])


class TestCrossCheck:
    def test_small_grids(self):
        for spec, lam, radius in [("sp:n=2", [3, 1], 2), ("su:p=2,q=1", [2, 0], 2),
                                  ("su:p=2,q=2", [3, 1, -1, -3], 1)]:
            rep = cross_check(g_of(spec), lam, radius)
            assert rep.ok, rep.disagreements[:3]
            assert rep.points_checked > 0

    def test_parallel_matches_sequential(self, monkeypatch):
        g = g_of("sp:n=2")
        rep1 = cross_check(g, [3, 1], 2)
        monkeypatch.setenv("ORBITOPE_THREADS", "2")
        rep2 = cross_check(g, [3, 1], 2)
        assert rep1.points_checked == rep2.points_checked
        assert rep1.ok and rep2.ok


class TestGeometricProperties:
    FAMILIES = ["sp:n=2", "sp:n=3", "su:p=2,q=1", "su:p=3,q=1",
                "su:p=2,q=2", "so_star:n=3", "so_star:n=4"]

    def _random_holomorphic(self, g, rng):
        for _ in range(200):
            vals = sorted((F(rng.randint(0, 12), rng.choice([1, 2])) for _ in range(g.dim)),
                          reverse=True)
            if g.trace_zero:
                shift = sum(vals) / g.dim
                vals = [v - shift for v in vals]
            cand = RatVec(vals)
            if in_hol_chamber(g, cand):
                return cand
        raise AssertionError("could not sample a holomorphic point")

    def test_random_lambdas(self):
        rng = random.Random(20260811)
        for spec in self.FAMILIES:
            g = g_of(spec)
            for _ in range(3):
                Lambda = self._random_holomorphic(g, rng)
                p = assemble(g, Lambda)
                assert member(p, Lambda)
                assert contained_in_shifted_cone(p)
                assert contained_in_hol_closure(p)

    def test_relaxed_assembly_equal(self):
        for spec, lam in [("sp:n=2", [3, 1]), ("su:p=2,q=1", [2, 0]),
                          ("so_star:n=3", [3, 2, 1]), ("su:p=2,q=2", [3, 1, -1, -3])]:
            g = g_of(spec)
            strict = assemble(g, lam)
            relaxed = assemble(g, lam, relaxed=True)
            assert poly_equal(strict.system, relaxed.system)

    def test_strict_chamber_at_interior_points(self):
        # the strict-pairing claim is only assertable pointwise: every grid
        # point satisfying all inequality rows strictly must pair strictly
        # positively with every noncompact positive root
        import itertools as it

        for spec, lam, radius in [("sp:n=2", [3, 1], 2), ("su:p=2,q=1", [2, 0], 2),
                                  ("so_star:n=3", [3, 2, 1], 1)]:
            g = g_of(spec)
            p = assemble(g, lam)
            found = 0
            steps = [F(k, 2) for k in range(-2 * radius, 2 * radius + 1)]
            for delta in it.product(steps, repeat=g.dim):
                mu = RatVec([a + d for a, d in zip(RatVec(lam), delta)])
                strict = all(
                    row.normal.dot(mu) < row.bound
                    for row in p.system.ineqs if row.kind == "le"
                )
                if strict and member(p, mu):
                    found += 1
                    assert all(beta.dot(mu) > 0 for beta in g.noncompact_pos)
            assert found > 0, spec

    def test_central_shift_su22(self):
        # central Lambda = (c, c, -c, -c): the polyhedron is the shifted
        # cone {(x1, x2, -x2, -x1): x1 >= x2 >= 0}
        g = g_of("su:p=2,q=2")
        for c in (1, 2, F(5, 2)):
            Lambda = RatVec([c, c, -c, -c])
            p = assemble(g, Lambda)
            shifted = HPolyhedron(4, [
                ineq_eq([1, 0, 0, 1], 0),
                ineq_eq([0, 1, 1, 0], 0),
                ineq_ge([1, -1, 0, 0], 0),
                ineq_ge([0, 1, 0, 0], c),
            ])
            # shift: x = xi - Lambda satisfies x1+x4 = 0, x2+x3 = 0,
            # x1 >= x2, x2 >= 0; rewritten in xi with Lambda central
            expect = HPolyhedron(4, [
                ineq_eq([1, 0, 0, 1], 0),
                ineq_eq([0, 1, 1, 0], 0),
                ineq_ge([1, -1, 0, 0], 0),
                ineq_ge([0, 1, 0, 0], c),
            ])
            assert poly_equal(p.system, expect)


class TestRedundancyBehavior:
    def test_so_star8_duplicate_normal(self):
        # at Lambda = (3,2,1,0) the two pair rows with normal (-1,1,-1,1)
        # carry the same bound 0; after reduction at most one survivor with
        # that normal remains (here even it is implied by the rest), both
        # generated rows stay in the provenance log, and the row with
        # normal (-1,-1,1,1) has bound -2
        g = g_of("so_star:n=4")
        Lambda = RatVec([3, 2, 1, 0])
        p = assemble(g, Lambda)
        golden = goldens.polytope_system(goldens.load("Thm7.3.8"), "n=4", Lambda)
        assert poly_equal(p.system, golden)
        key1 = tuple(F(x) for x in (-1, 1, -1, 1))
        key2 = tuple(F(x) for x in (-1, -1, 1, 1))
        logged = [rec for rec in p.provenance if rec.ineq.normal.entries == key1]
        assert len(logged) == 2
        assert {rec.ineq.bound for rec in logged} == {0}
        assert sum(1 for r in p.system.ineqs if r.normal.entries == key1) <= 1
        rows = {r.normal.entries: r.bound for r in p.system.ineqs}
        assert rows[key2] == -2

    def test_generic_lambda_keeps_tighter_bound(self):
        g = g_of("so_star:n=4")
        p = assemble(g, [5, 3, 2, 1])
        # bounds -5+3+2-1 = -1 and 5-3-2+1 = 1: only the -1 side survives
        key = tuple(F(x) for x in (-1, 1, -1, 1))
        rows = {r.normal.entries: r.bound for r in p.system.ineqs}
        assert rows[key] == -1

    def test_display_forms(self):
        assert display_ineq(ineq_ge([1, -1], 0).canonical()) == "xi1 - xi2 >= 0"
        assert display_ineq(ineq_le([0, 1], 5).canonical()) == "xi2 <= 5"
        assert display_ineq(ineq_eq([1, 1], 0).canonical()) == "xi1 + xi2 = 0"
        assert display_ineq(ineq_le([2, -4], 1).canonical()) == "2*xi1 - 4*xi2 <= 1"
