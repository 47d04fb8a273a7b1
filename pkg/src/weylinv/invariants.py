"""Degree-3 invariant groups of a compiled lattice model.

Pipeline: the degree-2 truncation of the exponential ring map (c2), exact
computation of Q(G) from integrality of Killing-form coefficients on a T*
basis, the decomposable subgroup Dec(G) by bounded orbit enumeration with
closed-form cross-checks, the semi-decomposable subgroup Sdec(G) in three
modes, factor groups via Smith normal form, reduction homomorphisms onto
finite quotient group rings, and the parity report used for the adjoint D4
computation.

Sign convention: the truncated ring map gives c2(rho-bar(lambda)) =
+1/2 sum chi^2 while the orbit formula is -1/2 sum chi^2; subgroup
computations are sign-insensitive, single-value checks compare up to a
global sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .intlinalg import (
    congruence_kernel,
    hnf,
    inverse_fraction,
    lattice_contains,
    snf_diagonal,
    snf_with_left,
)
from .laurent import LaurentPoly, augmentation, graded_components
from .rootdata import (
    GroupSpec,
    LatticeModel,
    SimpleFactor,
    compile_spec,
    killing_coeffs,
    orbit_poly,
    parabolic_order,
    residue_functionals,
    cartan_rows,
    weyl_order,
)


class KillingDecomposeError(ValueError):
    pass


class DecMismatchError(AssertionError):
    """Enumerated and closed-form decomposable groups disagree."""


# --------------------------------------------------------------------------
# truncated characteristic map


@dataclass(frozen=True)
class TruncatedForm:
    """Element of the symmetric algebra truncated in degree 2."""

    c0: int
    c1: tuple
    c2: tuple  # sorted ((i, j), coeff) with i <= j

    def c2_dict(self):
        return dict(self.c2)

    def __add__(self, other):
        c2 = dict(self.c2)
        for k, v in other.c2:
            c2[k] = c2.get(k, 0) + v
        return TruncatedForm(
            self.c0 + other.c0,
            tuple(a + b for a, b in zip(self.c1, other.c1)),
            _pack(c2),
        )

    def __mul__(self, other):
        c2 = {k: self.c0 * v for k, v in other.c2}
        for k, v in self.c2:
            c2[k] = c2.get(k, 0) + other.c0 * v
        for i, a in enumerate(self.c1):
            if not a:
                continue
            for j, b in enumerate(other.c1):
                if not b:
                    continue
                key = (min(i, j), max(i, j))
                c2[key] = c2.get(key, 0) + a * b
        return TruncatedForm(
            self.c0 * other.c0,
            tuple(self.c0 * b + other.c0 * a
                  for a, b in zip(self.c1, other.c1)),
            _pack(c2),
        )


def _pack(d):
    return tuple(sorted((k, v) for k, v in d.items() if v))


def c2(f: LaurentPoly) -> TruncatedForm:
    """Truncated exponential image of an integral polynomial.

    A monomial e^chi with chi = sum a_i w_i maps to
    1 + chi + (chi^2 + sum a_i w_i^2)/2 in degrees 0..2; the map is additive
    over terms and multiplicative modulo degree-3 truncation.  The degree-2
    coefficients depend on the chosen fundamental-weight basis except on
    elements with vanishing degree <=1 image.
    """
    if f.modulus:
        raise ValueError("c2 is defined over Z")
    n = f.rank
    c0 = 0
    c1 = [0] * n
    cq = {}
    for e, c in f.terms.items():
        c0 += c
        for i, a in enumerate(e):
            if not a:
                continue
            c1[i] += c * a
            cq[(i, i)] = cq.get((i, i), 0) + c * (a * (a + 1) // 2)
        nz = [i for i, a in enumerate(e) if a]
        for ii in range(len(nz)):
            for jj in range(ii + 1, len(nz)):
                i, j = nz[ii], nz[jj]
                cq[(i, j)] = cq.get((i, j), 0) + c * e[i] * e[j]
    return TruncatedForm(c0, tuple(c1), _pack(cq))


def killing_decompose(model: LatticeModel, quad) -> tuple:
    """Express a degree-2 coefficient table as sum d_i q_i, exactly.

    Raises KillingDecomposeError when the table has cross-factor terms or a
    factor block is not an integer multiple of that factor's Killing form.
    """
    quad = dict(quad)
    out = []
    for fi, kf in enumerate(model.killing):
        off = model.offsets[fi]
        rank = model.factors[fi].rank
        qloc = kf.as_dict()
        ratio = None
        for (i, j), c in qloc.items():
            have = quad.pop((off + i, off + j), 0)
            r = Fraction(have, c)
            if ratio is None:
                ratio = r
            elif r != ratio:
                raise KillingDecomposeError(
                    f"factor {fi}: block not proportional to its Killing form")
        if ratio is None or ratio.denominator != 1:
            raise KillingDecomposeError(f"factor {fi}: non-integral multiple {ratio}")
        out.append(int(ratio))
    if any(quad.values()):
        raise KillingDecomposeError(f"leftover cross terms: {quad}")
    return tuple(out)


def c2_orbit(model: LatticeModel, weight) -> tuple:
    """Killing-basis vector of c2(rho(weight)) = -1/2 sum_chi chi^2.

    Enumerates the orbit factor by factor (cross terms vanish because each
    factor orbit sums to zero), asserts the division by 2 is exact, and
    cross-checks against the truncated ring map on the augmented orbit sum.
    """
    if not model.in_tstar(weight):
        raise ValueError("weight is not in T*")
    per, sizes = [], []
    for fi in range(len(model.factors)):
        loc = model.slice_of(weight, fi)
        orb = model.orbit_local(fi, loc)
        sizes.append(len(orb))
        acc = {}
        for chi in orb:
            nz = [i for i, a in enumerate(chi) if a]
            for ii, i in enumerate(nz):
                acc[(i, i)] = acc.get((i, i), 0) + chi[i] * chi[i]
                for j in nz[ii + 1:]:
                    acc[(i, j)] = acc.get((i, j), 0) + 2 * chi[i] * chi[j]
        per.append(acc)
    total = {}
    for fi, acc in enumerate(per):
        mult = 1
        for fj, s in enumerate(sizes):
            if fj != fi:
                mult *= s
        off = model.offsets[fi]
        for (i, j), v in acc.items():
            if v:
                total[(off + i, off + j)] = v * mult
    half = {}
    for k, v in total.items():
        if v % 2:
            raise AssertionError("sum of squared orbit weights is odd")
        if v // 2:
            half[k] = v // 2
    ring = c2(orbit_poly(model, weight, augmented=True))
    if any(ring.c1):
        raise AssertionError("augmented orbit sum has a degree-1 image")
    if ring.c2_dict() != half:
        raise AssertionError("ring-map and orbit-formula c2 disagree beyond sign")
    vec = killing_decompose(model, half)
    return tuple(-x for x in vec)


# --------------------------------------------------------------------------
# invariant lattices


@dataclass(frozen=True)
class InvariantLattice:
    """Subgroup of (+) Z q_i, by canonical HNF rows over the factor index."""

    dim: int
    rows: tuple
    exact: bool = True
    mode: str = "exact"

    @staticmethod
    def from_rows(dim, rows, exact=True, mode="exact"):
        return InvariantLattice(dim, tuple(tuple(r) for r in hnf([list(r) for r in rows])),
                                exact, mode)

    def contains(self, vec):
        return lattice_contains([list(r) for r in self.rows], list(vec))

    def includes(self, other: "InvariantLattice"):
        return all(self.contains(r) for r in other.rows)

    def join(self, vectors, exact=None, mode=None):
        rows = [list(r) for r in self.rows] + [list(v) for v in vectors]
        return InvariantLattice.from_rows(
            self.dim, rows,
            self.exact if exact is None else exact,
            self.mode if mode is None else mode)

    def same_rows(self, other):
        return self.rows == other.rows


class _Accumulator:
    def __init__(self, dim):
        self.dim = dim
        self.rows = []
        self._pivots = []

    def _refresh(self):
        self._pivots = []
        for r in self.rows:
            col = next(j for j, x in enumerate(r) if x)
            self._pivots.append((col, r))

    def contains(self, vec):
        v = list(vec)
        for col, row in self._pivots:
            x = v[col]
            if x:
                p = row[col]
                if x % p:
                    return False
                q = x // p
                for j in range(col, self.dim):
                    v[j] -= q * row[j]
        return not any(v)

    def add(self, vec):
        if not any(vec):
            return
        if self.contains(vec):
            return
        self.rows = hnf(self.rows + [list(vec)])
        self._refresh()

    def lattice(self, exact, mode):
        return InvariantLattice.from_rows(self.dim, self.rows, exact, mode)


@dataclass(frozen=True)
class FactorGroup:
    invariant_factors: tuple
    free_rank: int = 0

    def order(self):
        if self.free_rank:
            return 0
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out


def factor_group(sub: InvariantLattice, super_: InvariantLattice) -> FactorGroup:
    """Invariant factors of super/sub (requires sub a finite-index sublattice)."""
    if not super_.includes(sub):
        raise ValueError("sub is not contained in super")
    if len(sub.rows) < len(super_.rows):
        free = len(super_.rows) - len(sub.rows)
    else:
        free = 0
    sup = [list(r) for r in super_.rows]
    inv = inverse_fraction(_square(sup)) if len(sup) == super_.dim else None
    if inv is None:
        raise ValueError("factor groups need full-rank lattices")
    coords = []
    for r in sub.rows:
        row = [sum(Fraction(r[k]) * inv[k][j] for k in range(super_.dim))
               for j in range(super_.dim)]
        if any(x.denominator != 1 for x in row):
            raise AssertionError("membership solved non-integrally")
        coords.append([int(x) for x in row])
    diag = snf_diagonal(coords)
    return FactorGroup(tuple(d for d in diag if d > 1), free)


def _square(rows):
    return [list(r) for r in rows]


# --------------------------------------------------------------------------
# Q(G)


def compute_Q(model: LatticeModel, basis=None) -> InvariantLattice:
    """Exact S^2(T*)^W as the set of d with sum d_i q_i in S^2(T*).

    Writes each q_i on a Z-basis of T* (rationally) and collects the
    integrality congruences of the diagonal and doubled off-diagonal
    coefficients.
    """
    n = model.total_rank
    m = len(model.factors)
    b = [list(r) for r in (basis if basis is not None else model.tstar_basis)]
    binv = inverse_fraction(b)
    grams = []
    for fi, kf in enumerate(model.killing):
        off = model.offsets[fi]
        g = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), c in kf.as_dict().items():
            if i == j:
                g[off + i][off + i] = Fraction(c)
            else:
                g[off + i][off + j] = Fraction(c, 2)
                g[off + j][off + i] = Fraction(c, 2)
        grams.append(g)
    congs = []
    for j in range(n):
        for k in range(j, n):
            coeffs = []
            for g in grams:
                # (B^-T G B^-1)[j][k]
                v = Fraction(0)
                for a in range(n):
                    if binv[a][j]:
                        row = g[a]
                        v += binv[a][j] * sum(row[bb] * binv[bb][k] for bb in range(n)
                                              if row[bb])
                if j != k:
                    v *= 2
                coeffs.append(v)
            den = math.lcm(*[x.denominator for x in coeffs]) if coeffs else 1
            if den == 1:
                continue
            congs.append(([int(x * den) % den for x in coeffs], den))
    rows = congruence_kernel(congs, m)
    return InvariantLattice.from_rows(m, rows, True, "exact")


# --------------------------------------------------------------------------
# Dec(G): bounded orbit enumeration with closed-form tables


@lru_cache(maxsize=None)
def _coroot_gram(kind: str, rank: int):
    """Gram matrix of a W-invariant quadratic value-form from a coroot orbit."""
    m = cartan_rows(kind, rank)
    start = tuple(int(i == 0) for i in range(rank))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for c in frontier:
            for i in range(rank):
                pair = sum(m[i][k] * c[k] for k in range(rank) if c[k])
                if pair:
                    v = tuple(x - pair * int(k == i) for k, x in enumerate(c))
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
        frontier = nxt
    g = [[0] * rank for _ in range(rank)]
    for c in seen:
        for i in range(rank):
            if c[i]:
                for j in range(rank):
                    if c[j]:
                        g[i][j] += c[i] * c[j]
    return tuple(tuple(r) for r in g)


@lru_cache(maxsize=None)
def _factor_gamma(kind: str, rank: int) -> Fraction:
    """Constant gamma with sum_{chi in W(lam)} chi^2 = gamma*|W(lam)|*v(lam)*q.

    Exists because the reflection representation is rationally irreducible;
    computed from the orbit of the first fundamental weight.
    """
    model = compile_spec(GroupSpec((SimpleFactor(kind, rank),)))
    w1 = tuple(int(i == 0) for i in range(rank))
    orb = model.orbit_local(0, w1)
    acc = {}
    for chi in orb:
        nz = [i for i, a in enumerate(chi) if a]
        for ii, i in enumerate(nz):
            acc[(i, i)] = acc.get((i, i), 0) + chi[i] * chi[i]
            for j in nz[ii + 1:]:
                acc[(i, j)] = acc.get((i, j), 0) + 2 * chi[i] * chi[j]
    qloc = killing_coeffs(kind, rank)
    ratio = None
    for key, c in qloc.items():
        r = Fraction(acc.get(key, 0), c)
        if ratio is None:
            ratio = r
        elif r != ratio:
            raise AssertionError("orbit form not proportional to the Killing form")
    for key in acc:
        if key not in qloc and acc[key]:
            raise AssertionError("orbit form has terms outside the Killing form")
    gram = _coroot_gram(kind, rank)
    v_ref = gram[0][0]
    return Fraction(ratio, len(orb) * v_ref)


@lru_cache(maxsize=None)
def _factor_scan(kind: str, rank: int, height: int):
    """Per-factor dominant-orbit data up to the given height.

    Returns {h: {residue: {orbit_size: (t0, gcd_of_t_differences)}}} where t
    is the integer with c2(rho-bar(lam)) = +- t * q for the orbit of the
    dominant weight lam; h is the largest coordinate of lam.
    """
    gamma = _factor_gamma(kind, rank)
    gram = _coroot_gram(kind, rank)
    resfun = residue_functionals(kind, rank)
    worder = weyl_order(kind, rank)
    gn, gd = gamma.numerator, gamma.denominator * 2
    out = {h: {} for h in range(1, height + 1)}
    for a in iproduct(range(height + 1), repeat=rank):
        h = max(a)
        if h == 0:
            continue
        nz = [i for i, x in enumerate(a) if x]
        v = 0
        for i in nz:
            gi = gram[i]
            v += a[i] * sum(gi[j] * a[j] for j in nz)
        zeros = frozenset(i for i, x in enumerate(a) if not x)
        w = worder // parabolic_order(kind, rank, zeros)
        num = gn * w * v
        if num % gd:
            raise AssertionError("non-integral c2 multiple in the scan")
        t = num // gd
        res = tuple(sum(c * x for c, x in zip(vec, a)) % m for vec, m in resfun)
        bucket = out[h].setdefault(res, {})
        cur = bucket.get(w)
        if cur is None:
            bucket[w] = (t, 0)
        else:
            t0, g = cur
            bucket[w] = (t0, math.gcd(g, abs(t - t0)))
    return out


def _merged_buckets(kind, rank, height):
    scan = _factor_scan(kind, rank, height)
    merged = {}
    for h in range(1, height + 1):
        for res, classes in scan[h].items():
            tgt = merged.setdefault(res, {})
            for w, (t0, g) in classes.items():
                cur = tgt.get(w)
                if cur is None:
                    tgt[w] = (t0, g)
                else:
                    t00, g0 = cur
                    tgt[w] = (t00, math.gcd(g0, g, abs(t0 - t00)))
    return merged


def _enumerate_dec(model: LatticeModel, height: int) -> InvariantLattice:
    """Lattice generated by c2(rho(lam)) over W-orbits in T* whose dominant
    representative has coordinates <= h, growing h until stable twice."""
    m = len(model.factors)
    prev, prev2 = None, None
    lat = None
    for h in range(1, height + 1):
        acc = _enumerate_dec_with_zero_slices(model, h)
        lat = acc.lattice(False, f"enumerate(h={h})")
        if prev is not None and prev2 is not None \
                and lat.same_rows(prev) and prev.same_rows(prev2):
            break
        prev2, prev = prev, lat
    return lat


def _enumerate_dec_with_zero_slices(model, height):
    """Accumulate generators allowing any subset of factors to carry 0.

    Within one residue combination the axis contributions compress exactly:
    gcd{g_c * prod_j w_j} over independent class choices factors as the
    product of per-slot gcds, so only the base vectors need the full loop.
    """
    m = len(model.factors)
    acc = _Accumulator(m)
    buckets = []
    for f in model.factors:
        b = {res: dict(classes)
             for res, classes in _merged_buckets(f.kind, f.rank, height).items()}
        zero_res = tuple(0 for _ in residue_functionals(f.kind, f.rank))
        zb = b.setdefault(zero_res, {})
        # the zero weight contributes orbit size 1 and t = 0
        if 1 in zb:
            t0, g = zb[1]
            zb[1] = (0, math.gcd(g, abs(t0)))
        else:
            zb[1] = (0, 0)
        buckets.append(b)
    res_options = [sorted(b.keys()) for b in buckets]
    for res_combo in iproduct(*res_options):
        if not model.residue_allowed(res_combo):
            continue
        class_lists = [sorted(buckets[i][res_combo[i]].items()) for i in range(m)]
        w_gcds, g_gcds = [], []
        for i in range(m):
            wg = 0
            gg = 0
            for w, (_, g) in class_lists[i]:
                wg = math.gcd(wg, w)
                gg = math.gcd(gg, g)
            w_gcds.append(wg)
            g_gcds.append(gg)
        for i in range(m):
            if g_gcds[i]:
                mag = g_gcds[i]
                for j in range(m):
                    if j != i:
                        mag *= w_gcds[j]
                vec = [0] * m
                vec[i] = mag
                acc.add(vec)
        for picks in iproduct(*class_lists):
            # prefix/suffix products of the orbit sizes
            pre = [1] * (m + 1)
            for i in range(m):
                pre[i + 1] = pre[i] * picks[i][0]
            suf = [1] * (m + 1)
            for i in range(m - 1, -1, -1):
                suf[i] = suf[i + 1] * picks[i][0]
            base = [picks[i][1][0] * pre[i] * suf[i + 1] for i in range(m)]
            if not acc.contains(base):
                acc.add(base)
    return acc


def _is_diag_kernel(model):
    """Diagonal mu_k kernel: a single generator of equal order on all factors."""
    spec = model.spec
    if len(spec.center_kernel) != 1:
        return None
    gen = spec.center_kernel[0]
    orders = []
    for fi, t in enumerate(gen):
        grp = model._center[fi]
        tt = model._entry_tuple(t, fi)
        o = 1
        for x, mm in zip(tt, grp):
            if x:
                o = math.lcm(o, mm // math.gcd(x, mm))
        orders.append(o)
    if len(set(orders)) == 1 and orders[0] > 1:
        return orders[0]
    return None


def _per_factor_kernels(model):
    """True when every kernel generator is supported on a single factor."""
    for gen in model.spec.center_kernel:
        support = 0
        for fi, t in enumerate(gen):
            tt = model._entry_tuple(t, fi)
            if any(tt):
                support += 1
        if support > 1:
            return False
    return True


def _single_factor_dec(kind, rank, kernel_entry, model, fi):
    """Closed-form Dec for one factor with its own central kernel, if known."""
    tt = model._entry_tuple(kernel_entry, fi) if kernel_entry is not None else None
    trivial = tt is None or not any(tt)
    if kind == "E6":
        return 6
    if kind == "E7":
        return 12
    if trivial:
        if kind == "A":
            return 1
        if kind == "C":
            return 1   # Dec(Sp) = Q(Sp) = Z q
        if kind == "B":
            return 2 if rank >= 3 else 1
        return None
    if kind == "B" and tt == (1,):
        return 2      # SO(2r+1)
    if kind == "C" and tt == (1,):
        return 4 // math.gcd(2, rank)  # PGSp(2r)
    return None


def dec_table(model: LatticeModel):
    """Closed-form Dec generators when a known closed form covers the spec."""
    m = len(model.factors)
    kinds = [f.kind for f in model.factors]
    ranks = [f.rank for f in model.factors]
    spec = model.spec

    def diag_rows(vals):
        return [[vals[i] * int(i == j) for j in range(m)] for i in range(m)]

    # E-type products: Dec is insensitive to the central subgroup
    if all(k == "E6" for k in kinds):
        return diag_rows([6] * m)
    if all(k == "E7" for k in kinds):
        return diag_rows([12] * m)

    # PGO8 = D4 / full center
    if m == 1 and kinds[0] == "D" and ranks[0] == 4 \
            and len(spec.center_kernel) == 2:
        classes = set()
        for gen in spec.center_kernel:
            classes.add(model._entry_tuple(gen[0], 0))
        if classes == {(1, 0), (0, 1)} or len(classes) == 2:
            return [[4]]

    k = _is_diag_kernel(model)

    if k is not None and m == 2 and all(x == "A" for x in kinds):
        mm, nn = ranks[0] + 1, ranks[1] + 1
        # p-primary diagonal mu_k only
        ps = {p for p in range(2, k + 1) if k % p == 0 and _isprime(p)}
        if len(ps) == 1 and mm % k == 0 and nn % k == 0:
            p = ps.pop()
            v2 = lambda x: (x & -x).bit_length() - 1
            if p != 2 or min(v2(mm), v2(nn)) > v2(k):
                return diag_rows([k, k])
            if v2(mm) == v2(nn) == v2(k):
                return [[k, -k], [k, k]]
            if v2(mm) > v2(k) == v2(nn):
                return diag_rows([k, 2 * k])
            if v2(nn) > v2(k) == v2(mm):
                return diag_rows([2 * k, k])

    if k == 2 and all(x == "B" for x in kinds) and m >= 2:
        return diag_rows([2] * m)

    if k == 2 and m == 2 and all(x in ("C", "A") for x in kinds) \
            and all(x == "C" or r == 1 for x, r in zip(kinds, ranks)):
        mm, nn = ranks
        if mm % 2 == 0 and nn % 2 == 0:
            return diag_rows([2, 2])
        if mm % 2 == 1 and nn % 2 == 1:
            return [[2, 2], [0, 4]]
        if mm % 2 == 0:
            return diag_rows([2, 4])
        return diag_rows([4, 2])

    if all(x == "D" for x in kinds) and m >= 2 and k is not None:
        if k == 4 and all(r % 2 == 1 for r in ranks):
            rows = [[0] * m for _ in range(m)]
            for i in range(1, m):
                rows[i - 1][0] = 4
                rows[i - 1][i] = -4
            rows[m - 1][0] = 4
            rows[m - 1][1] = 4
            return rows
        if k == 2 and (all(r % 2 == 0 for r in ranks) or all(r % 2 for r in ranks)):
            return diag_rows([2] * m)

    # products of independently-quotiented factors
    if _per_factor_kernels(model):
        vals = []
        per_factor = [None] * m
        for gen in spec.center_kernel:
            for fi, t in enumerate(gen):
                if any(model._entry_tuple(t, fi)):
                    if per_factor[fi] is not None:
                        return None
                    per_factor[fi] = t
        for fi, f in enumerate(model.factors):
            v = _single_factor_dec(f.kind, f.rank, per_factor[fi], model, fi)
            if v is None:
                return None
            vals.append(v)
        return diag_rows(vals)
    return None


def _isprime(p):
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def compute_Dec(model: LatticeModel, height: int = 4,
                mode: str = "both") -> InvariantLattice:
    """Decomposable subgroup: bounded enumeration, closed form, or both."""
    m = len(model.factors)
    if mode not in ("enumerate", "table", "both"):
        raise ValueError(f"unknown Dec mode {mode!r}")
    table_rows = dec_table(model) if mode in ("table", "both") else None
    if mode in ("table", "both") and table_rows is None:
        mode = "enumerate"
    if mode == "table":
        return InvariantLattice.from_rows(m, table_rows, True, "table")
    enum = _enumerate_dec(model, height)
    if mode == "enumerate":
        return enum
    table = InvariantLattice.from_rows(m, table_rows, True, "table")
    if not table.same_rows(enum):
        raise DecMismatchError(
            f"enumerate {enum.rows} vs table {table.rows} for {model.spec}")
    return InvariantLattice(m, table.rows, True, "both")


# --------------------------------------------------------------------------
# Sdec(G)


def _symplectic_like(f: SimpleFactor):
    return f.kind == "C" or (f.kind == "A" and f.rank == 1)


def sdec_table(model: LatticeModel, dec: InvariantLattice):
    """Closed-form Sdec where a known case analysis covers the spec."""
    m = len(model.factors)
    kinds = [f.kind for f in model.factors]
    ranks = [f.rank for f in model.factors]
    k = _is_diag_kernel(model)

    if all(x in ("E6", "E7") for x in kinds):
        return dec
    if m == 1 and kinds[0] == "D" and ranks[0] == 4 \
            and len(model.spec.center_kernel) == 2:
        return dec  # PGO8: semi-decomposable = decomposable
    if m == 1:
        return dec  # simple groups: Sdec = Dec
    if _per_factor_kernels(model):
        return dec  # kernels do not couple factors; products of simple pieces
    if k is not None and all(x == "A" for x in kinds):
        q = compute_Q(model)
        return InvariantLattice(m, q.rows, True, "table")  # Q = Sdec, type A diagonal
    if k == 2 and all(x == "B" for x in kinds):
        vecs = []
        for i in range(m):
            for j in range(i + 1, m):
                if ranks[i] == 2 and ranks[j] == 2:
                    v = [0] * m
                    v[i], v[j] = 1, -1
                    vecs.append(v)
        return dec.join(vecs, exact=dec.exact, mode="table")
    if k == 2 and all(_symplectic_like(f) for f in model.factors):
        vecs = []
        for i in range(m):
            for j in range(i + 1, m):
                g = math.gcd(ranks[i], ranks[j])
                v = [0] * m
                v[i], v[j] = ranks[j] // g, -(ranks[i] // g)
                vecs.append(v)
        return dec.join(vecs, exact=dec.exact, mode="table")
    if all(x == "D" for x in kinds) and k is not None:
        if k == 2:
            return dec
        if k == 4 and all(r % 2 for r in ranks):
            vecs = []
            for i in range(1, m):
                g = math.gcd(ranks[0], ranks[i])
                v = [0] * m
                v[0], v[i] = 2 * (ranks[i] // g), -2 * (ranks[0] // g)
                vecs.append(v)
            return dec.join(vecs, exact=dec.exact, mode="table")
    return None


def explicit_elements(model: LatticeModel):
    """Explicit semi-decomposable elements (the pairwise z's) for C/B2/D pairs."""
    out = []
    m = len(model.factors)
    kinds = [f.kind for f in model.factors]
    ranks = [f.rank for f in model.factors]
    k = _is_diag_kernel(model)
    n = model.total_rank

    def shifted_z(i, j, wt_idx_i, wt_idx_j, ci, cj, shift_weight):
        zi = orbit_poly(model, model.fundamental_weight(i, wt_idx_i), augmented=True)
        zj = orbit_poly(model, model.fundamental_weight(j, wt_idx_j), augmented=True)
        z = zi.scale(ci) - zj.scale(cj)
        y = LaurentPoly.monomial(n, shift_weight) * z
        return z, y

    if k == 2 and all(_symplectic_like(f) for f in model.factors):
        for i in range(m):
            for j in range(i + 1, m):
                g = math.gcd(ranks[i], ranks[j])
                z, y = shifted_z(i, j, 0, 0, ranks[j] // g, ranks[i] // g,
                                 model.fundamental_weight(i, 0))
                out.append((f"z[{i + 1},{j + 1}]", z, y))
    if k == 2 and all(x == "B" for x in kinds):
        for i in range(m):
            for j in range(i + 1, m):
                if ranks[i] == 2 and ranks[j] == 2:
                    z, y = shifted_z(i, j, 1, 1, 1, 1,
                                     model.fundamental_weight(i, 1))
                    out.append((f"z[{i + 1},{j + 1}]", z, y))
    if k == 4 and all(x == "D" for x in kinds) and all(r % 2 for r in ranks):
        for i in range(m):
            for j in range(i + 1, m):
                g = math.gcd(ranks[i], ranks[j])
                z, y = shifted_z(i, j, 0, 0, ranks[j] // g, ranks[i] // g,
                                 model.fundamental_weight(i, 0))
                out.append((f"z[{i + 1},{j + 1}]", z, y))
    return out


def compute_Sdec(model: LatticeModel, mode: str = "table",
                 dec: InvariantLattice | None = None,
                 height: int = 4) -> InvariantLattice:
    """Semi-decomposable subgroup in 'generators', 'elements' or 'table' mode."""
    if dec is None:
        dec = compute_Dec(model, height=height)
    if mode == "table":
        out = sdec_table(model, dec)
        if out is None:
            raise ValueError(f"no closed form for Sdec of {model.spec}")
        return InvariantLattice(out.dim, out.rows, dec.exact, "table")
    if mode == "generators":
        from .generators import build_generators
        if model.grading.moduli != (2,):
            raise ValueError("generators mode needs an index-2 grading")
        if not all(f.kind in ("A", "C") for f in model.factors):
            raise ValueError("generators mode needs type A/C factors")
        gs = build_generators(model)
        vecs = []
        for name, h in gs.labeled():
            tf = c2(h)
            if tf.c0 != 0 or any(tf.c1):
                raise AssertionError(f"{name}: nonzero degree <=1 image")
            vecs.append(killing_decompose(model, tf.c2_dict()))
        return dec.join(vecs, exact=dec.exact, mode="generators")
    if mode == "elements":
        vecs = []
        for name, z, y in explicit_elements(model):
            comps = graded_components(y, model.grading)
            if set(comps) - {model.grading.zero}:
                raise AssertionError(f"{name}: shifted element leaves Z[T*]")
            if augmentation(z) != 0:
                raise AssertionError(f"{name}: element is not augmented")
            tf = c2(z)
            vecs.append(killing_decompose(model, tf.c2_dict()))
        return dec.join(vecs, exact=False, mode="elements")
    raise ValueError(f"unknown Sdec mode {mode!r}")


# --------------------------------------------------------------------------
# quotient reduction homomorphisms


class QuotientRing:
    """(Z/m)[Lambda / Lambda'] for a finite-index sublattice of Z^n."""

    def __init__(self, rank: int, congruences, modulus: int = 0):
        self.rank = rank
        self.modulus = modulus
        basis = congruence_kernel([(list(v), mm) for v, mm in congruences], rank)
        if len(basis) < rank:
            raise ValueError("sublattice is not of finite index")
        cols = [[basis[j][i] for j in range(rank)] for i in range(rank)]
        diag, u = snf_with_left(cols)
        self.moduli = tuple(d for d in diag if d > 1)
        self._rows = [u[i] for i, d in enumerate(diag) if d > 1]

    def class_of(self, vec):
        return tuple(sum(r[j] * vec[j] for j in range(self.rank)) % d
                     for r, d in zip(self._rows, self.moduli))

    @property
    def zero_class(self):
        return (0,) * len(self.moduli)

    def reduce(self, f: LaurentPoly) -> dict:
        out = {}
        for e, c in f.terms.items():
            cls = self.class_of(e)
            v = out.get(cls, 0) + c
            if self.modulus:
                v %= self.modulus
            if v:
                out[cls] = v
            else:
                out.pop(cls, None)
        return out

    def mul(self, a: dict, b: dict) -> dict:
        out = {}
        for ca, va in a.items():
            for cb, vb in b.items():
                cls = tuple((x + y) % d for x, y, d in zip(ca, cb, self.moduli))
                v = out.get(cls, 0) + va * vb
                if self.modulus:
                    v %= self.modulus
                if v:
                    out[cls] = v
                else:
                    out.pop(cls, None)
        return out


def quotient_reduction(f: LaurentPoly, congruences, modulus: int,
                       rank: int | None = None):
    """Image of f in (Z/modulus)[Lambda/Lambda'] for the congruence sublattice."""
    ring = QuotientRing(rank if rank is not None else f.rank, congruences, modulus)
    return ring.reduce(f), ring


# --------------------------------------------------------------------------
# the adjoint D4 check


@lru_cache(maxsize=None)
def pgo8_model() -> LatticeModel:
    return compile_spec(GroupSpec(
        (SimpleFactor("D", 4),), (((1, 0),), ((0, 1),))
    ))


def pgo8_lambda_prime():
    """The index-8 sublattice used by the adjoint D4 parity argument,
    in fundamental-weight coordinates."""
    return (
        ((2, 2, 1, 1), 4),   # x1 even (e-coordinates)
        ((0, 2, -1, 1), 4),  # x2 + x3 + x4 even
    )


def pgo8_parity_check(f_tuple) -> dict:
    """Parity report for x = sum f_i rho_i on the adjoint D4 lattice."""
    model = pgo8_model()
    n = model.total_rank
    f_tuple = tuple(f_tuple)
    if len(f_tuple) != 4:
        raise ValueError("expected a 4-tuple")
    rho = [orbit_poly(model, model.fundamental_weight(0, i), augmented=True)
           for i in range(4)]
    x = LaurentPoly.zero(n, 0)
    for fi, ri in zip(f_tuple, rho):
        x = x + fi * ri
    comps = graded_components(x, model.grading)
    in_tstar = set(comps) <= {model.grading.zero}
    report = {
        "in_tstar": in_tstar,
        "augmentations": tuple(augmentation(fi) for fi in f_tuple),
        "parities_even": tuple(augmentation(f_tuple[i]) % 2 == 0 for i in (0, 2, 3)),
    }
    comp_sums = []
    for i in (0, 2, 3):
        sums = {}
        for cls, comp in graded_components(f_tuple[i], model.grading).items():
            sums[cls] = augmentation(comp)
        comp_sums.append(sums)
    report["component_sums"] = tuple(comp_sums)
    ring = QuotientRing(n, model.congruences, 16)
    img = ring.reduce(x)
    report["z16_constant"] = set(img) <= {ring.zero_class}
    return report


# --------------------------------------------------------------------------
# top-level pipeline


@dataclass
class InvariantReport:
    spec: GroupSpec
    Q: InvariantLattice
    Dec: InvariantLattice
    Sdec: InvariantLattice | None
    inv_ind: FactorGroup
    inv_sd: FactorGroup | None


def invariants_of(model: LatticeModel, height: int = 4,
                  dec_mode: str = "both", sdec_mode: str | None = None) -> InvariantReport:
    q = compute_Q(model)
    dec = compute_Dec(model, height=height, mode=dec_mode)
    sdec = None
    if sdec_mode is None:
        try:
            sdec = compute_Sdec(model, "table", dec=dec)
        except ValueError:
            for fallback in ("generators", "elements"):
                try:
                    sdec = compute_Sdec(model, fallback, dec=dec)
                    break
                except (ValueError, AssertionError):
                    continue
    else:
        sdec = compute_Sdec(model, sdec_mode, dec=dec)
    if not q.includes(dec):
        raise AssertionError("Dec is not contained in Q")
    inv_ind = factor_group(dec, q)
    inv_sd = None
    if sdec is not None:
        if not q.includes(sdec) or not sdec.includes(dec):
            raise AssertionError("inclusion chain Dec <= Sdec <= Q violated")
        inv_sd = factor_group(dec, sdec)
    return InvariantReport(model.spec, q, dec, sdec, inv_ind, inv_sd)
