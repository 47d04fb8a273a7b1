import math
import random

import pytest

from weylinv.laurent import LaurentPoly, augmentation, homogeneous_component, reduce_coefficients
from weylinv.rootdata import GroupSpec, SimpleFactor, compile_spec, orbit_poly, orbit_size
from weylinv.syzygy import (
    FlatnessError,
    NotASyzygyError,
    SyzygyCertificate,
    check_flatness,
    degree_one_gcd,
    is_unit_monomial,
    lift_syzygy,
    model_transform,
    newton_transform,
    normalize_coefficients,
    trivialize_generalized,
    trivialize_syzygy,
)


def P(rank, terms, modulus=0):
    return LaurentPoly(rank, modulus, terms)


def random_poly(rng, rank, modulus, nterms=3, lo=-2, hi=2, clo=-4, chi=4):
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randint(lo, hi) for _ in range(rank))
        terms[e] = terms.get(e, 0) + rng.randint(clo, chi)
    return LaurentPoly(rank, modulus, terms)


def random_flat_tuple(rng, rank, modulus):
    from weylinv.laurent import is_divisor
    out = []
    for i in range(rank):
        k = rng.randint(0, 2)
        lead = [0] * rank
        lead[i] = k
        for j in range(i):
            lead[j] = rng.randint(-2, 2)
        terms = {tuple(lead): 1}
        for _ in range(rng.randint(0, 3)):
            e = [0] * rank
            e[i] = rng.randint(k - 3, k - 1)
            for j in range(i):
                e[j] = rng.randint(-2, 2)
            c = rng.randint(-4, 4)
            if c:
                key = tuple(e)
                terms[key] = terms.get(key, 0) + c
        p = LaurentPoly(rank, modulus, terms)
        if p.is_zero() or not is_divisor(p, i):
            p = LaurentPoly(rank, modulus, {tuple(lead): 1})
        out.append(p)
    return tuple(out)


def random_cert(rng, rank, modulus, density=0.5, nterms=2):
    entries = {}
    for i in range(rank):
        for j in range(i + 1, rank):
            if rng.random() < density:
                g = random_poly(rng, rank, modulus, nterms)
                if not g.is_zero():
                    entries[(i, j)] = g
    return SyzygyCertificate(rank, rank, modulus, entries)


class TestFlatness:
    def test_examples(self):
        t = (P(2, {(1, 0): 1, (0, 0): -1}), P(2, {(1, 1): 1, (0, 0): 1}))
        assert check_flatness(t)[0]
        t = (P(2, {(0, 1): 1, (0, 0): -1}), P(2, {(1, 0): 1, (0, 0): 1}))
        ok, notes = check_flatness(t)
        assert not ok and "higher axes" in notes[0]

    def test_monomial_normalization_allowed(self):
        # entry 0 carries a unit monomial x2^3: wdeg on axis 1 is still zero
        t = (P(2, {(1, 3): 1, (0, 3): -1}), P(2, {(1, 1): 1, (0, 0): 1}))
        assert check_flatness(t)[0]

    def test_newton_tuples_are_flat(self):
        for n in (2, 3, 4):
            flat, _, _ = newton_transform("C", n)
            assert check_flatness(flat)[0]


class TestTrivialize:
    def test_zero_syzygy(self):
        t = random_flat_tuple(random.Random(0), 3, 0)
        z = tuple(P(3, {}) for _ in range(3))
        assert trivialize_syzygy(t, z).is_empty()

    def test_generator_round_trip(self):
        t = random_flat_tuple(random.Random(1), 3, 0)
        cert_in = SyzygyCertificate(3, 3, 0, {(0, 1): P(3, {(0, 0, 0): 1})})
        f = cert_in.expand(t)
        cert = trivialize_syzygy(t, f)
        assert cert.expand(t) == f

    @pytest.mark.parametrize("modulus", [0, 2, 4, 6])
    @pytest.mark.parametrize("rank", [2, 3, 4])
    def test_random_round_trips(self, modulus, rank):
        rng = random.Random(1000 * rank + modulus)
        for _ in range(10):
            t = random_flat_tuple(rng, rank, modulus)
            f = random_cert(rng, rank, modulus).expand(t)
            cert = trivialize_syzygy(t, f)
            assert cert.expand(t) == f

    def test_monomial_scaled_tuple(self):
        rng = random.Random(77)
        base = random_flat_tuple(rng, 3, 0)
        t = (base[0].mul_monomial((0, 2, -1)), base[1].mul_monomial((0, 0, 3)), base[2])
        assert check_flatness(t)[0]
        f = random_cert(rng, 3, 0).expand(t)
        cert = trivialize_syzygy(t, f)
        assert cert.expand(t) == f

    def test_rejects_non_syzygy(self):
        t = random_flat_tuple(random.Random(5), 2, 0)
        with pytest.raises(NotASyzygyError):
            trivialize_syzygy(t, (P(2, {(0, 0): 1}), P(2, {})))

    def test_rejects_non_flat(self):
        t = (P(2, {(0, 1): 1, (0, 0): 1}), P(2, {(1, 1): 1, (0, 0): 1}))
        with pytest.raises(FlatnessError):
            trivialize_syzygy(t, (P(2, {}), P(2, {})))


class TestLift:
    def test_empty(self):
        t = random_flat_tuple(random.Random(2), 2, 6)
        cert = SyzygyCertificate(2, 2, 6, {})
        assert lift_syzygy(t, cert).entries == {}

    def test_constants(self):
        t = random_flat_tuple(random.Random(3), 2, 6)
        cert = SyzygyCertificate(2, 2, 6, {(0, 1): P(2, {(0, 0): 4}, modulus=6)})
        lifted = lift_syzygy(t, cert)
        assert lifted.entries[(0, 1)] == P(2, {(0, 0): 4})

    def test_round_trip(self):
        rng = random.Random(4)
        t0 = random_flat_tuple(rng, 3, 0)
        t6 = tuple(reduce_coefficients(p, 6) for p in t0)
        cert = trivialize_syzygy(t6, random_cert(rng, 3, 6).expand(t6))
        lifted = lift_syzygy(t6, cert)
        back = {k: reduce_coefficients(g, 6) for k, g in lifted.entries.items()}
        assert back == cert.entries


class TestNewtonTransform:
    @pytest.mark.parametrize("kind,lo", [("A", 1), ("C", 2)])
    def test_flat_and_unimodular(self, kind, lo):
        for n in range(lo, 6):
            flat, tr, rho = newton_transform(kind, n)
            ok, notes = check_flatness(flat)
            assert ok, notes
            assert is_unit_monomial(tr.det)

    def test_matches_orbit_polys(self):
        for kind, n in [("A", 2), ("A", 3), ("C", 2), ("C", 3)]:
            m = compile_spec(GroupSpec((SimpleFactor(kind, n),)))
            _, _, rho = newton_transform(kind, n)
            for i in range(n):
                assert rho[i] == orbit_poly(m, m.fundamental_weight(0, i), augmented=True)

    def test_rank_bounds(self):
        with pytest.raises(ValueError):
            newton_transform("C", 1)
        with pytest.raises(ValueError):
            newton_transform("B", 3)

    def test_generalized_trivialization(self):
        rng = random.Random(6)
        for kind, n in [("A", 2), ("C", 3)]:
            flat, tr, rho = newton_transform(kind, n)
            f = random_cert(rng, n, 0, density=0.7, nterms=1).expand(rho)
            cert = trivialize_generalized(rho, tr, f)
            assert cert.expand(rho) == f


class TestNormalizeCoefficients:
    def _model(self):
        return compile_spec(GroupSpec(
            (SimpleFactor("C", 2), SimpleFactor("C", 2)), ((1, 1),)))

    def test_degree_one_gcd(self):
        m = self._model()
        sizes = [orbit_size(m, m._basis_vec(i))
                 for i in range(4) if m.fw_degrees[i] == (1,)]
        assert degree_one_gcd(m) == math.gcd(*sizes) == 4

    def test_zero_syzygy_branch(self):
        m = self._model()
        n = m.total_rank
        d = degree_one_gcd(m)
        # f_i already satisfying the conclusion: wrong-degree components
        # divisible by d, so the mod-d syzygy is zero and f is unchanged
        f = []
        for i in range(n):
            cls = m.fw_degrees[i]
            terms = {}
            for e in [(1, 0, 1, 0), (0, 1, 0, 0)]:
                if m.grade_of_weight(e) == cls:
                    terms[e] = 3 * d
            f.append(LaurentPoly(n, 0, terms))
        g = normalize_coefficients(m, tuple(f))
        assert g == tuple(f)

    def test_construction_round_trip(self):
        from weylinv.generators import build_generators, combination_to_tuple

        rng = random.Random(8)
        m = self._model()
        n = m.total_rank
        d = degree_one_gcd(m)
        transform = model_transform(m)
        rho = transform[2]
        gs = build_generators(m)
        labels = [name for name, _ in gs.labeled()]
        for _ in range(5):
            # f = (lift of a random mod-d trivial syzygy) + (generator combo)
            cert = random_cert(rng, n, d, density=0.5, nterms=1)
            lifted = {k: LaurentPoly(n, 0, dict(g.terms))
                      for k, g in cert.entries.items()}
            h = SyzygyCertificate(n, n, 0, lifted).expand(rho)
            combo_in = {}
            for name in labels:
                if rng.random() < 0.5:
                    combo_in[name] = LaurentPoly.const(n, rng.randint(-2, 2), 0)
            base = combination_to_tuple(gs, combo_in)
            f = tuple(b + hh for b, hh in zip(base, h))
            combo = LaurentPoly.zero(n, 0)
            for fi, ri in zip(f, rho):
                combo = combo + fi * ri
            g = normalize_coefficients(m, f, transform)
            combo2 = LaurentPoly.zero(n, 0)
            for gi, ri in zip(g, rho):
                combo2 = combo2 + gi * ri
            assert combo2 == combo
            for i in range(n):
                want = ((1 - m.fw_degrees[i][0]) % 2,)
                comp = homogeneous_component(g[i], m.grading, want)
                assert reduce_coefficients(comp, d).is_zero()

    def test_refuses_other_types(self):
        m = compile_spec(GroupSpec(
            (SimpleFactor("B", 2), SimpleFactor("B", 2)), ((1, 1),)))
        f = tuple(LaurentPoly.zero(4, 0) for _ in range(4))
        with pytest.raises(FlatnessError):
            normalize_coefficients(m, f)
