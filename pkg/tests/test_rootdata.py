import math
import random

import pytest

from weylinv.laurent import LaurentPoly, augmentation
from weylinv.rootdata import (
    GroupSpec,
    SimpleFactor,
    cartan_rows,
    compile_spec,
    killing_coeffs,
    killing_forms,
    orbit_poly,
    orbit_size,
    parabolic_order,
    weyl_orbit,
    weyl_order,
)


def model(*factors, kernel=()):
    return compile_spec(GroupSpec(tuple(factors), tuple(kernel)))


class TestCompile:
    def test_simply_connected_trivial(self):
        m = model(SimpleFactor("C", 2))
        assert m.congruences == ()
        assert m.tstar_index == 1
        assert m.grading.moduli == ()

    def test_type_a_congruence(self):
        # (SL4 x SL4)/mu2 diagonal: sum i*a_i + sum i*a'_i = 0 mod 2
        m = model(SimpleFactor("A", 3), SimpleFactor("A", 3), kernel=[(2, 2)])
        assert m.tstar_index == 2
        for i, expected in [(0, 1), (1, 0), (2, 1)]:
            w = m.fundamental_weight(0, i)
            assert m.grade_of_weight(w) == (expected % 2,)

    def test_type_b_congruence(self):
        # (Spin5 x Spin7)/mu2: a_m = a'_n mod 2, i.e. only spinor weights odd
        m = model(SimpleFactor("B", 2), SimpleFactor("B", 3), kernel=[(1, 1)])
        assert m.fw_degrees == ((0,), (1,), (0,), (0,), (1,))
        assert m.in_tstar((0, 1, 0, 0, 1))
        assert not m.in_tstar((0, 1, 0, 0, 0))

    def test_type_d_mu4(self):
        # Spin10 x Spin10 / mu4: index 4
        m = model(SimpleFactor("D", 5), SimpleFactor("D", 5), kernel=[(1, 1)])
        assert m.tstar_index == 4
        assert m.grading.moduli == (4,)

    def test_pgo8_grading(self):
        m = model(SimpleFactor("D", 4), kernel=[((1, 0),), ((0, 1),)])
        assert m.tstar_index == 4
        assert sorted(m.grading.moduli) == [2, 2]
        # T* = integer coordinates with even sum: w2 = e1+e2 is in T*
        assert m.in_tstar((0, 1, 0, 0))
        assert not m.in_tstar((1, 0, 0, 0))

    def test_residues_vanish_on_roots(self):
        for kind, rank in [("A", 4), ("B", 3), ("C", 4), ("D", 4), ("D", 5),
                           ("E6", 6), ("E7", 7)]:
            m = model(SimpleFactor(kind, rank))
            rows = cartan_rows(kind, rank)
            for alpha in rows:
                res = m.center_residues(tuple(alpha))
                assert all(x == 0 for x in res[0]), (kind, rank, alpha, res)

    def test_bad_kernel(self):
        with pytest.raises(ValueError):
            model(SimpleFactor("A", 2), kernel=[(1, 1)])


class TestOrbits:
    def test_origin(self):
        m = model(SimpleFactor("C", 2))
        assert weyl_orbit(m, (0, 0)) == {(0, 0)}

    def test_c2_short_orbit(self):
        m = model(SimpleFactor("C", 2))
        orb = weyl_orbit(m, (1, 0))
        assert len(orb) == 4

    def test_orbit_size_formulas(self):
        for n in (2, 3, 4, 5):
            m = model(SimpleFactor("C", n))
            for i in range(n):
                w = m.fundamental_weight(0, i)
                assert orbit_size(m, w) == 2 ** (i + 1) * math.comb(n, i + 1)
        for n in (1, 2, 3, 4):
            m = model(SimpleFactor("A", n))
            assert orbit_size(m, m.fundamental_weight(0, 0)) == n + 1
        m = model(SimpleFactor("D", 4))
        assert orbit_size(m, m.fundamental_weight(0, 0)) == 8
        m = model(SimpleFactor("E7", 7))
        assert orbit_size(m, m.fundamental_weight(0, 6)) == 56
        assert orbit_size(m, m.fundamental_weight(0, 0)) == 126
        m = model(SimpleFactor("E6", 6))
        assert orbit_size(m, m.fundamental_weight(0, 0)) == 27

    def test_enumeration_matches_parabolic_formula(self):
        rng = random.Random(6)
        for kind, rank in [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("E6", 6)]:
            m = model(SimpleFactor(kind, rank))
            for _ in range(6):
                w = tuple(rng.randint(0, 2) for _ in range(rank))
                assert len(m.orbit_local(0, w)) == m.orbit_size_local(0, w)

    def test_e7_interior_orbit(self):
        m = model(SimpleFactor("E7", 7))
        w = m.fundamental_weight(0, 3)
        assert len(weyl_orbit(m, w)) == orbit_size(m, w) == 10080

    def test_parabolic_order_full(self):
        assert parabolic_order("E7", 7, frozenset(range(7))) == weyl_order("E7", 7)
        assert parabolic_order("B", 4, frozenset(range(4))) == weyl_order("B", 4)
        assert parabolic_order("D", 5, frozenset(range(5))) == weyl_order("D", 5)

    def test_product_orbit(self):
        m = model(SimpleFactor("A", 1), SimpleFactor("A", 1))
        orb = weyl_orbit(m, (1, 1))
        assert orb == {(1, 1), (1, -1), (-1, 1), (-1, -1)}


class TestOrbitPoly:
    def test_augmented_zero(self):
        m = model(SimpleFactor("A", 1))
        assert orbit_poly(m, (0,), augmented=True).is_zero()

    def test_sl2(self):
        m = model(SimpleFactor("A", 1))
        assert orbit_poly(m, (1,)) == LaurentPoly(1, 0, {(1,): 1, (-1,): 1})

    def test_homogeneous(self):
        m = model(SimpleFactor("C", 2), kernel=[(1,)])
        p = orbit_poly(m, m.fundamental_weight(0, 0))
        classes = {m.grade_of_weight(e) for e in p.terms}
        assert classes == {(1,)}

    def test_reflection_invariance(self):
        for kind, rank in [("A", 2), ("B", 3), ("C", 3), ("D", 4), ("E6", 6)]:
            m = model(SimpleFactor(kind, rank))
            for j in range(rank):
                p = orbit_poly(m, m.fundamental_weight(0, j))
                for i in range(rank):
                    reflected = {m.reflect_local(0, e, i) for e in p.terms}
                    assert reflected == set(p.terms)

    def test_augmentation_counts(self):
        m = model(SimpleFactor("B", 2))
        p = orbit_poly(m, m.fundamental_weight(0, 1))
        assert augmentation(p) == 4
        assert augmentation(orbit_poly(m, m.fundamental_weight(0, 1), augmented=True)) == 0


class TestGradingWeights:
    def test_additivity(self):
        rng = random.Random(8)
        m = model(SimpleFactor("A", 3), SimpleFactor("A", 3), kernel=[(2, 2)])
        for _ in range(30):
            a = tuple(rng.randint(-3, 3) for _ in range(6))
            b = tuple(rng.randint(-3, 3) for _ in range(6))
            ab = tuple(x + y for x, y in zip(a, b))
            assert m.grade_of_weight(ab) == m.grading.add(
                m.grade_of_weight(a), m.grade_of_weight(b))


class TestKillingForms:
    @staticmethod
    def _reflect_symbols(q, rows, k):
        """Substitute w_k -> w_k - alpha_k in a quadratic symbol table."""
        rank = len(rows)
        sub = {i: {i: 1} for i in range(rank)}
        sub[k] = {j: -rows[k][j] for j in range(rank) if rows[k][j]}
        sub[k][k] = sub[k].get(k, 0) + 1
        out = {}
        for (i, j), c in q.items():
            for a, ca in sub[i].items():
                for b, cb in sub[j].items():
                    key = (min(a, b), max(a, b))
                    out[key] = out.get(key, 0) + c * ca * cb
        return {key: v for key, v in out.items() if v}

    def test_w_invariance(self):
        # invariance in S^2 of the weight symbols, under every simple reflection
        for kind, rank in [("A", 3), ("B", 2), ("B", 4), ("C", 2), ("C", 4),
                           ("D", 4), ("D", 5), ("E6", 6), ("E7", 7)]:
            q = killing_coeffs(kind, rank)
            rows = cartan_rows(kind, rank)
            for k in range(rank):
                assert self._reflect_symbols(q, rows, k) == q, (kind, rank, k)

    def test_standard_coordinate_expressions(self):
        # the fw-symbol tables expand from sum e_i^2 (C) and (sum e_i^2)/2 (B, D)
        from fractions import Fraction

        from weylinv.rootdata import standard_e_basis

        for kind, rank in [("B", 2), ("B", 4), ("C", 2), ("C", 5),
                           ("D", 4), ("D", 5)]:
            rows = standard_e_basis(kind, rank)
            acc = {}
            for r in rows:
                for i in range(rank):
                    for j in range(i, rank):
                        c = r[i] * r[j] * (1 if i == j else 2)
                        if c:
                            acc[(i, j)] = acc.get((i, j), 0) + Fraction(c)
            scale = Fraction(1) if kind == "C" else Fraction(1, 2)
            acc = {k: v * scale for k, v in acc.items() if v}
            assert {k: Fraction(v) for k, v in killing_coeffs(kind, rank).items()} == acc

    def test_values(self):
        from weylinv.rootdata import killing_value

        # type C: q(e1) = 1
        assert killing_value("C", 3, (1, 0, 0)) == 1
        # type B: q = (sum e_i^2)/2, so q(e1) = 1/2 and q(spinor) = m/8
        from fractions import Fraction
        assert killing_value("B", 3, (1, 0, 0)) == Fraction(1, 2)
        assert killing_value("B", 3, (0, 0, 1)) == Fraction(3, 8)
        # type D: q(e1 + e2) = 1
        assert killing_value("D", 4, (0, 1, 0, 0)) == 1
