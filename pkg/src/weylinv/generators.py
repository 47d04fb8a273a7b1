"""Generator sets for the W-invariant augmentation ideal intersected with R[T*].

Builds, for an index-2 character lattice, the three families of generators
(h1 / h2 / h3) from the gcd chain of degree-1 orbit sizes, and implements the
four-step reduction that rewrites any combination sum f_i rho_i lying in
R[T*] as an explicit combination of the generators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .intlinalg import xgcd
from .laurent import LaurentPoly, augmentation, homogeneous_component
from .rootdata import LatticeModel, orbit_poly, orbit_size
from .syzygy import normalize_coefficients, validate_tuple


class ReductionError(ValueError):
    pass


@dataclass
class GcdChain:
    """gcd chain d_i over the degree-1 orbit sizes with Bezout data.

    `order` maps chain position -> fundamental-weight index of the model
    (degree-1 weights first, then degree-0, each in natural order).
    """

    order: tuple[int, ...]
    nprime: int
    sizes: tuple[int, ...]          # s_1..s_{n'}
    d_chain: tuple[int, ...]        # d_1..d_{n'}
    bezout: tuple[tuple[int, ...], ...]  # a[i][j] for i <= j (0-based, padded)

    @property
    def d(self):
        return self.d_chain[0]


def gcd_chain(model: LatticeModel) -> GcdChain:
    """Compute the chain d_i = gcd(s_i..s_n') and small Bezout coefficients."""
    if model.grading.moduli != (2,):
        raise ValueError("gcd chain requires an index-2 grading")
    deg1 = [i for i in range(model.total_rank) if model.fw_degrees[i] == (1,)]
    deg0 = [i for i in range(model.total_rank) if model.fw_degrees[i] == (0,)]
    order = tuple(deg1 + deg0)
    np_ = len(deg1)
    sizes = tuple(orbit_size(model, model._basis_vec(i)) for i in deg1)
    d_chain = [0] * np_
    bez = [[0] * np_ for _ in range(np_)]
    d_chain[np_ - 1] = sizes[np_ - 1]
    bez[np_ - 1][np_ - 1] = 1
    for i in range(np_ - 2, -1, -1):
        g, alpha, beta = xgcd(sizes[i], d_chain[i + 1])
        d_chain[i] = g
        bez[i][i] = alpha
        for j in range(i + 1, np_):
            bez[i][j] = beta * bez[i + 1][j]
        # rebalance so the tail coefficients stay small: shifting the pair
        # (a_ii, a_ij) by (s_j/g', -s_i/g') keeps the combination fixed
        for j in range(i + 1, np_):
            gij = math.gcd(sizes[i], sizes[j])
            step = sizes[i] // gij
            if abs(bez[i][j]) > step // 2 and step:
                t = (bez[i][j] + step // 2) // step if step else 0
                bez[i][j] -= t * step
                bez[i][i] += t * (sizes[j] // gij)
        assert sum(bez[i][j] * sizes[j] for j in range(i, np_)) == d_chain[i]
    for i in range(np_ - 1):
        assert d_chain[i + 1] % d_chain[i] == 0
    return GcdChain(order, np_, sizes, tuple(d_chain), tuple(tuple(r) for r in bez))


@dataclass
class GeneratorSet:
    """The h1/h2/h3 generators together with the data they were built from."""

    model: LatticeModel
    chain: GcdChain
    lambda0: tuple[int, ...]
    h1: tuple[LaurentPoly, ...]
    h2: tuple[LaurentPoly, ...]
    h3: tuple[LaurentPoly, ...]
    rho: tuple[LaurentPoly, ...]     # natural fw order
    # expansion of each generator over the rho's (natural order)
    h1_rows: tuple
    h2_rows: tuple
    h3_rows: tuple

    def labeled(self):
        out = []
        for k, h in enumerate(self.h1):
            out.append((f"h1[{k + 1}]", h))
        for k, h in enumerate(self.h2):
            out.append((f"h2[{k + 1}]", h))
        for k, h in enumerate(self.h3):
            out.append((f"h3[{k + 1}]", h))
        return out

    def rows_for(self, name):
        fam, idx = name.split("[")
        k = int(idx.rstrip("]")) - 1
        return {"h1": self.h1_rows, "h2": self.h2_rows, "h3": self.h3_rows}[fam][k]


def _rho_tilde(chain, rho_ord, i):
    """rho~_i = sum_j a_ij rho_j over chain positions j >= i (0-based i)."""
    n = rho_ord[0].rank
    acc = LaurentPoly.zero(n, 0)
    for j in range(i, chain.nprime):
        a = chain.bezout[i][j]
        if a:
            acc = acc + rho_ord[j].scale(a)
    return acc


def build_generators(model: LatticeModel, chain: GcdChain | None = None,
                     lambda0=None) -> GeneratorSet:
    """Generator families per the gcd-chain definition, verified degree 0."""
    if chain is None:
        chain = gcd_chain(model)
    n = model.total_rank
    np_ = chain.nprime
    rho_nat = tuple(orbit_poly(model, model._basis_vec(i), augmented=True)
                    for i in range(n))
    rho_ord = tuple(rho_nat[chain.order[k]] for k in range(n))
    rho_w_ord = tuple(rho_ord[k] + LaurentPoly.const(n, s, 0)
                      for k, s in enumerate(chain.sizes)) if np_ else ()
    if lambda0 is None:
        lambda0 = model._basis_vec(chain.order[0])
    lambda0 = tuple(lambda0)
    if model.grade_of_weight(lambda0) != (1,):
        raise ValueError("lambda0 must have degree 1")
    d = chain.d

    def rho_tilde_w(i):
        # rho~(omega_i) = rho~_i + d_i, a pure degree-1 element
        return _rho_tilde(chain, rho_ord, i) + LaurentPoly.const(n, chain.d_chain[i], 0)

    e_l0 = LaurentPoly.monomial(n, lambda0)
    h1, h1_rows = [], []
    for i in range(np_ - 1):
        s_i = chain.sizes[i]
        d_next = chain.d_chain[i + 1]
        r_i = s_i * d_next // math.gcd(s_i, d_next)
        gen = e_l0 * (rho_w_ord[i].scale(r_i // s_i)
                      - rho_tilde_w(i + 1).scale(r_i // d_next))
        h1.append(gen)
        row = [LaurentPoly.zero(n, 0) for _ in range(n)]
        row[chain.order[i]] = e_l0.scale(r_i // s_i)
        for j in range(i + 1, np_):
            a = chain.bezout[i + 1][j]
            if a:
                row[chain.order[j]] = (-e_l0).scale(r_i // d_next * a)
        h1_rows.append(tuple(row))
    h2, h2_rows = [], []
    for i in range(np_):
        s_i = chain.sizes[i]
        gen = rho_w_ord[i] * rho_tilde_w(0) - LaurentPoly.const(n, d * s_i, 0)
        h2.append(gen)
        row = [LaurentPoly.zero(n, 0) for _ in range(n)]
        for j in range(np_):
            a = chain.bezout[0][j]
            if a:
                row[chain.order[j]] = rho_w_ord[i].scale(a)
        row[chain.order[i]] = row[chain.order[i]] + LaurentPoly.const(n, d, 0)
        h2_rows.append(tuple(row))
    h3, h3_rows = [], []
    for k in range(np_, n):
        gen = rho_ord[k]
        h3.append(gen)
        row = [LaurentPoly.zero(n, 0) for _ in range(n)]
        row[chain.order[k]] = LaurentPoly.const(n, 1, 0)
        h3_rows.append(tuple(row))

    gs = GeneratorSet(model, chain, lambda0, tuple(h1), tuple(h2), tuple(h3),
                      rho_nat, tuple(h1_rows), tuple(h2_rows), tuple(h3_rows))
    for name, h in gs.labeled():
        if homogeneous_component(h, model.grading, (1,)):
            raise AssertionError(f"generator {name} is not homogeneous of degree 0")
        if augmentation(h) != 0:
            raise AssertionError(f"generator {name} has nonzero augmentation")
    for name, rows in [("h1", h1_rows), ("h2", h2_rows), ("h3", h3_rows)]:
        fam = {"h1": h1, "h2": h2, "h3": h3}[name]
        for gen, row in zip(fam, rows):
            acc = LaurentPoly.zero(n, 0)
            for j in range(n):
                acc = acc + row[j] * rho_nat[j]
            if acc != gen:
                raise AssertionError(f"{name} expansion over rho is wrong")
    return gs


def expand_combination(gs: GeneratorSet, combo: dict) -> LaurentPoly:
    """Evaluate sum coeff * generator for {label: coefficient poly}."""
    n = gs.model.total_rank
    acc = LaurentPoly.zero(n, 0)
    by_label = dict(gs.labeled())
    for name, coeff in combo.items():
        acc = acc + coeff * by_label[name]
    return acc


def combination_to_tuple(gs: GeneratorSet, combo: dict) -> tuple:
    """Rewrite a generator combination as an f-tuple with sum f_i rho_i."""
    n = gs.model.total_rank
    out = [LaurentPoly.zero(n, 0) for _ in range(n)]
    for name, coeff in combo.items():
        rows = gs.rows_for(name)
        for j in range(n):
            if rows[j]:
                out[j] = out[j] + coeff * rows[j]
    return tuple(out)


def reduce_to_generators(model: LatticeModel, f, gs: GeneratorSet | None = None,
                         transform=None) -> dict:
    """Express sum f_i rho_i (in R[T*]) as a generator combination.

    Runs the coefficient normalization and then the four elimination steps,
    asserting the running equality after each one.  Returns {label: coeff}.
    """
    if gs is None:
        gs = build_generators(model)
    chain = gs.chain
    n = model.total_rank
    np_ = chain.nprime
    f = list(validate_tuple(f))
    if len(f) != n:
        raise ValueError("tuple length must equal the model rank")
    rho = gs.rho
    d = chain.d
    grading = model.grading

    def combo_of(fs):
        acc = LaurentPoly.zero(n, 0)
        for fi, ri in zip(fs, rho):
            acc = acc + fi * ri
        return acc

    target = combo_of(f)
    if homogeneous_component(target, grading, (1,)):
        raise ValueError("the combination is not in R[T*]")

    f = list(normalize_coefficients(model, tuple(f), transform))
    result: dict[str, LaurentPoly] = {}
    by_label = dict(gs.labeled())

    def add_coeff(name, coeff):
        if coeff.is_zero():
            return
        cur = result.get(name)
        result[name] = coeff if cur is None else cur + coeff

    def running_check():
        acc = combo_of(f)
        for name, coeff in result.items():
            acc = acc + coeff * by_label[name]
        if acc != target:
            raise AssertionError("running combination equality broken")

    # step 1: kill f_i^(0) for chain positions i <= n'
    for i in range(np_):
        gi = chain.order[i]
        comp0 = homogeneous_component(f[gi], grading, (0,))
        if comp0.is_zero():
            continue
        c = _exact_div(comp0, d, "step 1")
        add_coeff(f"h2[{i + 1}]", c)
        rows = gs.h2_rows[i]
        for j in range(n):
            if rows[j]:
                f[j] = f[j] - c * rows[j]
    running_check()

    # step 2: kill f_i^(1) for chain positions i > n'
    rho_tilde_w1 = None
    for i in range(np_, n):
        gi = chain.order[i]
        comp1 = homogeneous_component(f[gi], grading, (1,))
        if comp1.is_zero():
            continue
        c = _exact_div(comp1, d, "step 2")
        if rho_tilde_w1 is None:
            rho_ord = tuple(rho[chain.order[k]] for k in range(n))
            rho_tilde_w1 = _rho_tilde(chain, rho_ord, 0) + LaurentPoly.const(n, d, 0)
        add_coeff(f"h3[{i - np_ + 1}]", c * rho_tilde_w1)
        for j in range(np_):
            a = chain.bezout[0][j]
            if a:
                f[chain.order[j]] = f[chain.order[j]] - (c * rho[gi]).scale(a)
        f[gi] = f[gi] - c.scale(d)
    running_check()

    # step 3: absorb the remaining degree-0 coefficients of the h3 positions
    for i in range(np_, n):
        gi = chain.order[i]
        if f[gi].is_zero():
            continue
        if homogeneous_component(f[gi], grading, (1,)):
            raise AssertionError("step 2 left a degree-1 component behind")
        add_coeff(f"h3[{i - np_ + 1}]", f[gi])
        f[gi] = LaurentPoly.zero(n, 0)
    running_check()

    # step 4: eliminate the degree-1 coefficients at chain positions 1..n'
    e_l0_inv = LaurentPoly.monomial(n, tuple(-x for x in gs.lambda0))
    for i in range(np_ - 1):
        gi = chain.order[i]
        if homogeneous_component(f[gi], grading, (0,)):
            raise AssertionError("step 4 precondition broken: degree-0 part present")
        comp1 = f[gi]
        if comp1.is_zero():
            continue
        s_i = chain.sizes[i]
        d_next = chain.d_chain[i + 1]
        r_i = s_i * d_next // math.gcd(s_i, d_next)
        scale = r_i // s_i
        cdiv = _exact_div(comp1, scale, "step 4 divisibility")
        c = cdiv * e_l0_inv
        add_coeff(f"h1[{i + 1}]", c)
        rows = gs.h1_rows[i]
        for j in range(n):
            if rows[j]:
                f[j] = f[j] - c * rows[j]
        if not f[gi].is_zero():
            raise AssertionError("step 4 failed to clear the position")
    running_check()

    # the last degree-1 position must now vanish identically
    if np_:
        gi = chain.order[np_ - 1]
        if not f[gi].is_zero():
            raise ReductionError("nonzero residue at the last degree-1 position")
    if any(not fi.is_zero() for fi in f):
        raise ReductionError("reduction left nonzero coefficients")
    final = LaurentPoly.zero(n, 0)
    for name, coeff in result.items():
        final = final + coeff * by_label[name]
    if final != target:
        raise AssertionError("final combination does not reproduce the input")
    return result


def _exact_div(poly: LaurentPoly, k: int, where: str) -> LaurentPoly:
    if k == 1:
        return poly
    terms = {}
    for e, c in poly.terms.items():
        if c % k:
            raise ReductionError(f"{where}: coefficient {c} not divisible by {k}")
        terms[e] = c // k
    return LaurentPoly(poly.rank, poly.modulus, terms)
