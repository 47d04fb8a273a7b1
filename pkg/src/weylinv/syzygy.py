"""Syzygy calculus for flat tuples of Laurent polynomials.

Implements flatness checking, constructive trivialization of syzygies
(including composite moduli via the prime recursion), lifting of trivial
syzygies through coefficient reduction, the Newton-relation transforms that
give generalized flatness in types A and C, and the coefficient
normalization step used by the generator reduction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations

from .laurent import (
    LaurentPoly,
    bounded_divide,
    degrees,
    homogeneous_component,
    is_divisor,
    leading_slice,
    lift_coefficients,
    reduce_coefficients,
)
from .rootdata import LatticeModel, orbit_size


class NotASyzygyError(ValueError):
    pass


class FlatnessError(ValueError):
    pass


def validate_tuple(t):
    t = tuple(t)
    if not t:
        raise ValueError("empty tuple")
    r, m = t[0].rank, t[0].modulus
    for p in t:
        if p.rank != r or p.modulus != m:
            raise ValueError("mixed rings/ranks in tuple")
    return t


def check_flatness(t) -> tuple[bool, list[str]]:
    """Entry i may use axes 0..i (up to a monomial factor in higher axes)
    and must be a divisor with respect to axis i. Returns (ok, diagnostics)."""
    t = validate_tuple(t)
    notes = []
    ok = True
    for i, p in enumerate(t):
        if p.is_zero():
            ok = False
            notes.append(f"entry {i}: zero polynomial")
            continue
        bad_axes = []
        for j in range(i + 1, p.rank):
            if degrees(p, j)[2] != 0:
                bad_axes.append(j)
        if bad_axes:
            ok = False
            notes.append(f"entry {i}: uses higher axes {bad_axes}")
            continue
        if not is_divisor(p, i):
            ok = False
            notes.append(f"entry {i}: leading coefficient along axis {i} not a monic monomial")
            continue
        notes.append(f"entry {i}: ok")
    return ok, notes


def _strip_units(t):
    """Divide out the constant higher-axis monomial of each entry.

    Returns (stripped tuple, list of stripped monomial exponent vectors).
    """
    out = []
    units = []
    for i, p in enumerate(t):
        exp = [0] * p.rank
        some = next(iter(p.terms))
        for j in range(i + 1, p.rank):
            exp[j] = some[j]
        units.append(tuple(exp))
        out.append(p.mul_monomial(tuple(-x for x in exp)))
    return tuple(out), units


@dataclass
class SyzygyCertificate:
    """Expression of a syzygy as sum of g_ij * S_ij over pairs i < j."""

    length: int
    rank: int
    modulus: int
    entries: dict

    def expand(self, t) -> tuple:
        t = validate_tuple(t)
        if len(t) != self.length:
            raise ValueError("tuple length mismatch")
        out = [LaurentPoly.zero(self.rank, self.modulus) for _ in range(self.length)]
        for (i, j), g in self.entries.items():
            out[i] = out[i] + g * t[j]
            out[j] = out[j] - g * t[i]
        return tuple(out)

    def is_empty(self):
        return all(g.is_zero() for g in self.entries.values())


def _empty_cert(n, rank, modulus):
    return SyzygyCertificate(n, rank, modulus, {})


def _add_entry(cert, i, j, g):
    if g.is_zero():
        return
    key = (i, j)
    cur = cert.entries.get(key)
    cert.entries[key] = g if cur is None else cur + g


def _check_syzygy(t, f):
    acc = LaurentPoly.zero(t[0].rank, t[0].modulus)
    for fi, ti in zip(f, t):
        acc = acc + fi * ti
    if not acc.is_zero():
        raise NotASyzygyError("tuple is not a syzygy")


def _axis_slices(p, axis):
    """{exponent j: slice polynomial with axis exponent set to 0}."""
    out = {}
    for e, c in p.terms.items():
        j = e[axis]
        e0 = e[:axis] + (0,) + e[axis + 1:]
        out.setdefault(j, {})[e0] = c
    return {j: LaurentPoly(p.rank, p.modulus, terms) for j, terms in out.items()}


def _trivialize_domain(t, f, n, cert):
    """Constructive trivialization over a domain coefficient ring (Z or Z/p)."""
    rank, modulus = t[0].rank, t[0].modulus
    live = [i for i in range(n) if not f[i].is_zero()]
    if not live:
        return
    if n == 1:
        raise NotASyzygyError("nonzero syzygy of a single nonzero divisor")
    axis = n - 1
    d = min(degrees(f[i], axis)[1] for i in live)
    tn = t[n - 1]
    wp = degrees(tn, axis)[2]
    hs = []
    new_fn = f[n - 1]
    for i in range(n - 1):
        g_i, h_i = bounded_divide(f[i], tn, axis, d)
        _add_entry(cert, i, n - 1, g_i)
        hs.append(h_i)
        if g_i:
            new_fn = new_fn + g_i * t[i]
    if not new_fn.is_zero():
        raise AssertionError(
            "internal degree argument violated: residual last entry nonzero"
        )
    # slice the residual by the axis degree and recurse in rank n-1
    slices = {}
    for i in range(n - 1):
        if hs[i].is_zero():
            continue
        for j, sl in _axis_slices(hs[i], axis).items():
            if not (d <= j <= d + wp - 1):
                raise AssertionError("slice outside the remainder window")
            slices.setdefault(j, {})[i] = sl
    for j, comp in sorted(slices.items()):
        sub_f = tuple(comp.get(i, LaurentPoly.zero(rank, modulus))
                      for i in range(n - 1))
        sub_cert = _empty_cert(n - 1, rank, modulus)
        _trivialize_domain(t, sub_f, n - 1, sub_cert)
        shift = tuple(j if k == axis else 0 for k in range(rank))
        for (a, b), g in sub_cert.entries.items():
            _add_entry(cert, a, b, g.mul_monomial(shift))


def _smallest_prime(m):
    p = 2
    while p * p <= m:
        if m % p == 0:
            return p
        p += 1
    return m


def _trivialize(t, f):
    """Dispatch on the ring: domain directly, composite modulus recursively."""
    n = len(t)
    rank, modulus = t[0].rank, t[0].modulus
    cert = _empty_cert(n, rank, modulus)
    if all(fi.is_zero() for fi in f):
        return cert
    p = _smallest_prime(modulus) if modulus else 0
    if modulus == 0 or p == modulus:
        _trivialize_domain(t, f, n, cert)
        return cert
    ell = modulus // p
    t_l = tuple(reduce_coefficients(x, ell) for x in t)
    f_l = tuple(reduce_coefficients(x, ell) for x in f)
    cert_l = _trivialize(t_l, f_l)
    lifted = {k: LaurentPoly(rank, modulus, dict(g.terms))
              for k, g in cert_l.entries.items()}
    cert1 = SyzygyCertificate(n, rank, modulus, lifted)
    residual = [a - b for a, b in zip(f, cert1.expand(t))]
    f2 = []
    for r in residual:
        terms = {}
        for e, c in r.terms.items():
            if c % ell:
                raise AssertionError("residual not divisible by the cofactor")
            terms[e] = (c // ell) % p
        f2.append(LaurentPoly(rank, p, terms))
    t_p = tuple(reduce_coefficients(x, p) for x in t)
    cert_p = _trivialize(t_p, tuple(f2))
    for k, g in cert_p.entries.items():
        _add_entry(cert1, k[0], k[1],
                   LaurentPoly(rank, modulus, dict(g.terms)).scale(ell))
    return cert1


def trivialize_syzygy(t, f) -> SyzygyCertificate:
    """Express a syzygy f of a flat tuple t as a combination of the S_ij."""
    t = validate_tuple(t)
    f = validate_tuple(f)
    if len(t) != len(f) or t[0].rank != f[0].rank or t[0].modulus != f[0].modulus:
        raise ValueError("shape mismatch between tuple and syzygy")
    ok, notes = check_flatness(t)
    if not ok:
        raise FlatnessError("; ".join(notes))
    _check_syzygy(t, f)
    stripped, units = _strip_units(t)
    f_adj = tuple(fi.mul_monomial(u) for fi, u in zip(f, units))
    cert = _trivialize(stripped, f_adj)
    # undo the unit scaling: d_ij = c_ij * mu_i^-1 * mu_j^-1
    fixed = {}
    for (i, j), g in cert.entries.items():
        back = tuple(-a - b for a, b in zip(units[i], units[j]))
        fixed[(i, j)] = g.mul_monomial(back)
    out = SyzygyCertificate(len(t), t[0].rank, t[0].modulus, fixed)
    if out.expand(t) != tuple(f):
        raise AssertionError("certificate does not expand back to the syzygy")
    return out


def lift_syzygy(t, cert: SyzygyCertificate) -> SyzygyCertificate:
    """Lift a certificate over Z/d to Z, coefficients chosen in [0, d)."""
    if cert.modulus < 2:
        raise ValueError("certificate is not modular")
    entries = {k: lift_coefficients(g) for k, g in cert.entries.items()}
    return SyzygyCertificate(cert.length, cert.rank, 0, entries)


# --------------------------------------------------------------------------
# polynomial matrices over the Laurent ring


@dataclass
class TransformMatrix:
    """Square matrix over the Laurent ring with unit (monomial) determinant."""

    entries: tuple  # tuple of tuples of LaurentPoly
    det: LaurentPoly

    @property
    def size(self):
        return len(self.entries)

    def column(self, j):
        return [row[j] for row in self.entries]

    def reduce(self, m):
        return TransformMatrix(
            tuple(tuple(reduce_coefficients(p, m) for p in row) for row in self.entries),
            reduce_coefficients(self.det, m),
        )


def mat_det(rows) -> LaurentPoly:
    n = len(rows)
    rank, modulus = rows[0][0].rank, rows[0][0].modulus
    acc = LaurentPoly.zero(rank, modulus)
    for perm in permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if seen[i]:
                continue
            ln, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                ln += 1
            if ln % 2 == 0:
                sign = -sign
        term = LaurentPoly.const(rank, sign, modulus)
        for i in range(n):
            term = term * rows[i][perm[i]]
        acc = acc + term
    return acc


def is_unit_monomial(p: LaurentPoly) -> bool:
    if len(p.terms) != 1:
        return False
    ((_, c),) = p.terms.items()
    if p.modulus:
        return math.gcd(c, p.modulus) == 1
    return c in (1, -1)


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    rank, modulus = a[0][0].rank, a[0][0].modulus
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = LaurentPoly.zero(rank, modulus)
            for s in range(k):
                if a[i][s] and b[s][j]:
                    acc = acc + a[i][s] * b[s][j]
            row.append(acc)
        out.append(row)
    return out


def vec_mat(vec, a):
    n, m = len(a), len(a[0])
    rank, modulus = a[0][0].rank, a[0][0].modulus
    out = []
    for j in range(m):
        acc = LaurentPoly.zero(rank, modulus)
        for i in range(n):
            if vec[i] and a[i][j]:
                acc = acc + vec[i] * a[i][j]
        out.append(acc)
    return out


def mat_inverse_unit(rows) -> list:
    """Inverse of a Laurent-matrix with monomial-unit determinant (adjugate)."""
    n = len(rows)
    rank, modulus = rows[0][0].rank, rows[0][0].modulus
    det = mat_det(rows)
    if not is_unit_monomial(det):
        raise ValueError("matrix determinant is not a unit monomial")
    ((dexp, dc),) = det.terms.items()
    if modulus:
        dc_inv = pow(dc, -1, modulus)
    else:
        dc_inv = dc  # +-1
    inv_exp = tuple(-x for x in dexp)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[rows[r][c] for c in range(n) if c != j]
                     for r in range(n) if r != i]
            if minor:
                cof = mat_det(minor)
            else:
                cof = LaurentPoly.const(rank, 1, modulus)
            if (i + j) % 2:
                cof = -cof
            out[j][i] = cof.mul_monomial(inv_exp, dc_inv)
    return out


def trivialize_generalized(q, transform: TransformMatrix, f) -> SyzygyCertificate:
    """Trivialize a syzygy of q, given (q) * A = flat tuple.

    Pushes the syzygy through A^{-1}, trivializes against the flat tuple,
    and pulls the certificate back through the skew decomposition of
    A M_ij A^T, which keeps every step constructive.
    """
    q = validate_tuple(q)
    f = validate_tuple(f)
    _check_syzygy(q, f)
    a = [list(row) for row in transform.entries]
    n = len(q)
    flat = vec_mat(list(q), a)
    a_inv = mat_inverse_unit(a)
    # g = A^{-1} f^t  (row convention: g_i = sum_j a_inv[i][j] f_j)
    g = [None] * n
    for i in range(n):
        acc = LaurentPoly.zero(q[0].rank, q[0].modulus)
        for j in range(n):
            if a_inv[i][j] and f[j]:
                acc = acc + a_inv[i][j] * f[j]
        g[i] = acc
    cert_r = trivialize_syzygy(tuple(flat), tuple(g))
    out = _empty_cert(n, q[0].rank, q[0].modulus)
    for (i, j), c in cert_r.entries.items():
        for k in range(n):
            for l in range(k + 1, n):
                coeff = a[k][i] * a[l][j] - a[k][j] * a[l][i]
                if not coeff.is_zero():
                    _add_entry(out, k, l, c * coeff)
    if out.expand(q) != tuple(f):
        raise AssertionError("generalized certificate does not expand back")
    return out


# --------------------------------------------------------------------------
# Newton-relation transforms (types A and C)


def _sigma(rank, k, nvars, modulus=0):
    """Elementary symmetric polynomial sigma_k(y_1..y_nvars)."""
    terms = {}
    for comb in combinations(range(nvars), k):
        e = [0] * rank
        for i in comb:
            e[i] = 1
        terms[tuple(e)] = 1
    return LaurentPoly(rank, modulus, terms)


def _complete(rank, k, nvars, modulus=0):
    """Complete homogeneous sum g_k(y_1..y_nvars)."""
    terms = {}
    for comb in combinations_with_replacement(range(nvars), k):
        e = [0] * rank
        for i in comb:
            e[i] += 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    return LaurentPoly(rank, modulus, terms)


def _tau(poly: LaurentPoly, c: int) -> LaurentPoly:
    """Substitute y_i -> c - y_i (polynomial exponents only)."""
    rank, modulus = poly.rank, poly.modulus
    out = LaurentPoly.zero(rank, modulus)
    base = {}
    for e, coeff in poly.terms.items():
        term = LaurentPoly.const(rank, coeff, modulus)
        for i, a in enumerate(e):
            if a < 0:
                raise ValueError("tau needs polynomial exponents")
            for _ in range(a):
                fac = LaurentPoly(rank, modulus, {
                    (0,) * rank: c,
                    tuple(int(k == i) for k in range(rank)): -1,
                })
                term = term * fac
        out = out + term
    return out


def _phi_a(poly: LaurentPoly, n: int) -> LaurentPoly:
    """Quotient-presentation map for type A: y-monomials to x-monomials."""
    images = []
    for j in range(n + 1):
        v = [0] * n
        if j == 0:
            v[0] = 1
        elif j < n:
            v[j - 1] -= 1
            v[j] += 1
        else:
            v[n - 1] -= 1
        images.append(tuple(v))
    terms = {}
    for e, c in poly.terms.items():
        out = [0] * n
        for j, a in enumerate(e):
            if a:
                for k in range(n):
                    out[k] += a * images[j][k]
        key = tuple(out)
        terms[key] = terms.get(key, 0) + c
    return LaurentPoly(n, poly.modulus, terms)


def _phi_c(poly: LaurentPoly, n: int) -> LaurentPoly:
    """Type C map y_j -> e^{e_j} + e^{-e_j} in fundamental-weight coordinates."""
    evecs = []
    for j in range(n):
        v = [0] * n
        v[j] = 1
        if j > 0:
            v[j - 1] = -1
        evecs.append(tuple(v))
    out = LaurentPoly.zero(n, poly.modulus)
    for e, c in poly.terms.items():
        term = LaurentPoly.const(n, c, poly.modulus)
        for j, a in enumerate(e):
            if a:
                fac = LaurentPoly(n, poly.modulus, {
                    evecs[j]: 1,
                    tuple(-x for x in evecs[j]): 1,
                })
                for _ in range(a):
                    term = term * fac
        out = out + term
    return out


def newton_transform(kind: str, n: int):
    """Flat tuple and transform with (rho_1..rho_n) * A = flat, for A or C.

    Returns (flat, TransformMatrix, rho) where rho are the augmented orbit
    sums of the rank-n factor in its fundamental-weight coordinates.
    """
    if kind == "A":
        if n < 1:
            raise ValueError("type A needs rank >= 1")
        nv, c_shift, phi = n + 1, 1, _phi_a
    elif kind == "C":
        if n < 2:
            raise ValueError("type C needs rank >= 2")
        nv, c_shift, phi = n, 2, _phi_c
    else:
        raise ValueError("generalized flatness transform exists for types A and C only")

    sig = [_sigma(nv, k, nv) for k in range(nv + 1)]
    big_g = [None] + [_complete(nv, j, nv + 1 - j) for j in range(1, nv + 1)]

    # A-tilde: E = G * A~ with A~[j][i] = (-1)^(j-1) sigma_{i-j}(y_1..y_{nv-j})
    atil = [[LaurentPoly.zero(nv, 0) for _ in range(nv)] for _ in range(nv)]
    for j in range(1, nv + 1):
        for i in range(j, nv + 1):
            s = _sigma(nv, i - j, nv - j)
            if (j - 1) % 2:
                s = -s
            atil[j - 1][i - 1] = s
    # sanity: the Newton-style identity E_i = sum_j G_j A~[j][i]
    for i in range(1, nv + 1):
        acc = LaurentPoly.zero(nv, 0)
        for j in range(1, i + 1):
            acc = acc + big_g[j] * atil[j - 1][i - 1]
        if acc != sig[i]:
            raise AssertionError("Newton identity failed; convention bug")

    tau_atil = [[_tau(p, c_shift) for p in row] for row in atil]

    # W with (tau E) = (sigma - s) * W
    w = [[LaurentPoly.zero(nv, 0) for _ in range(nv)] for _ in range(nv)]
    for k in range(1, nv + 1):
        for i in range(k, nv + 1):
            val = (-1) ** k * c_shift ** (i - k) * math.comb(nv - k, i - k)
            if val:
                w[k - 1][i - 1] = LaurentPoly.const(nv, val, 0)

    # invert the upper-unitriangular tau(A~) by back substitution
    x = [[LaurentPoly.zero(nv, 0) for _ in range(nv)] for _ in range(nv)]
    for j in range(nv - 1, -1, -1):
        dj = tau_atil[j][j]
        ((_, dcoef),) = dj.terms.items()
        x[j][j] = LaurentPoly.const(nv, dcoef, 0)  # +-1
        for k in range(j + 1, nv):
            acc = LaurentPoly.zero(nv, 0)
            for l in range(j + 1, k + 1):
                if tau_atil[j][l] and x[l][k]:
                    acc = acc + tau_atil[j][l] * x[l][k]
            x[j][k] = (-acc).scale(dcoef)
    m_full = mat_mul(w, x)

    rho = []
    for i in range(1, n + 1):
        s_i = c_shift ** i * math.comb(nv, i)
        im = phi(sig[i], n)
        rho.append(im - LaurentPoly.const(n, s_i, 0))

    # columns of the final square matrix: column for r_i is the column of
    # tau(G_{nv + 1 - i}); for type A that drops the G_1 column (= r_{n+1}).
    cols = [nv - i for i in range(1, n + 1)]  # 0-based column of G_{nv+1-i}
    a_out = [[None] * n for _ in range(n)]
    flat = []
    for out_i, col in enumerate(cols):
        r = phi(_tau(big_g[col + 1], c_shift), n)
        # make the leading axis coefficient monic
        axis = out_i
        _, lead = leading_slice(r, axis)
        ((_, lc),) = lead.terms.items()
        sign = 1 if lc == 1 else -1
        if lc not in (1, -1):
            raise AssertionError("unexpected leading coefficient in flat entry")
        flat.append(r if sign == 1 else -r)
        for k in range(n):
            entry = phi(m_full[k][col], n)
            a_out[k][out_i] = entry if sign == 1 else -entry
    det = mat_det(a_out)
    if not is_unit_monomial(det):
        raise AssertionError("transform determinant is not a unit monomial")
    transform = TransformMatrix(tuple(tuple(row) for row in a_out), det)
    # exact verification of (rho) * A = flat
    check = vec_mat(rho, a_out)
    if tuple(check) != tuple(flat):
        raise AssertionError("transform does not map rho to the flat tuple")
    return tuple(flat), transform, tuple(rho)


# --------------------------------------------------------------------------
# model-level transforms and coefficient normalization


def model_transform(model: LatticeModel):
    """Block-diagonal transform for all factors of an A/C model.

    Returns (flat tuple, TransformMatrix, rho tuple), all in the model's
    global coordinates and natural fundamental-weight order.
    """
    n = model.total_rank
    blocks = []
    for f in model.factors:
        kind = f.kind
        if kind not in ("A", "C"):
            raise FlatnessError(
                f"generalized flatness is available for types A and C, not {kind}"
            )
        if kind == "C" and f.rank == 1:
            kind = "A"
        blocks.append(newton_transform(kind, f.rank))

    def embed(poly, off):
        terms = {}
        for e, c in poly.terms.items():
            e2 = [0] * n
            e2[off:off + len(e)] = e
            terms[tuple(e2)] = c
        return LaurentPoly(n, poly.modulus, terms)

    zero = LaurentPoly.zero(n, 0)
    rows = [[zero] * n for _ in range(n)]
    flat, rho = [], []
    for fi, (bflat, btr, brho) in enumerate(blocks):
        off = model.offsets[fi]
        for i in range(len(bflat)):
            flat.append(embed(bflat[i], off))
            rho.append(embed(brho[i], off))
            for k in range(len(bflat)):
                rows[off + k][off + i] = embed(btr.entries[k][i], off)
    det = mat_det(rows)
    if not is_unit_monomial(det):
        raise AssertionError("block transform determinant is not a unit")
    return tuple(flat), TransformMatrix(tuple(tuple(r) for r in rows), det), tuple(rho)


def degree_one_gcd(model: LatticeModel) -> int:
    """gcd of the orbit sizes of the degree-1 fundamental weights."""
    if model.grading.moduli != (2,):
        raise ValueError("model grading is not Z/2")
    sizes = [orbit_size(model, model._basis_vec(i))
             for i in range(model.total_rank) if model.fw_degrees[i] == (1,)]
    if not sizes:
        raise ValueError("no degree-1 fundamental weights")
    return math.gcd(*sizes)


def normalize_coefficients(model: LatticeModel, f, transform=None):
    """Rewrite (f_i) so the reduction mod d of each wrong-degree component dies.

    Given deg(sum f_i rho_i) = 0, returns (g_i) with the same combination and
    g_i^{(1-|i|)} == 0 mod d, where d is the gcd of degree-1 orbit sizes.
    """
    if model.grading.moduli != (2,):
        raise ValueError("coefficient normalization needs an index-2 grading")
    f = validate_tuple(f)
    if f[0].modulus != 0:
        raise ValueError("expected integral coefficients")
    n = model.total_rank
    if len(f) != n:
        raise ValueError("tuple length must equal the model rank")
    if transform is None:
        flat, transform, rho = model_transform(model)
    else:
        flat, transform, rho = transform
    d = degree_one_gcd(model)
    combo = LaurentPoly.zero(n, 0)
    for fi, ri in zip(f, rho):
        combo = combo + fi * ri
    if homogeneous_component(combo, model.grading, (1,)):
        raise ValueError("the combination is not of degree 0")

    syz = []
    for i in range(n):
        want = ((1 - model.fw_degrees[i][0]) % 2,)
        comp = homogeneous_component(f[i], model.grading, want)
        syz.append(reduce_coefficients(comp, d))
    rho_d = tuple(reduce_coefficients(r, d) for r in rho)
    cert = trivialize_generalized(rho_d, transform.reduce(d), tuple(syz))
    lifted = lift_syzygy(rho_d, cert)
    h = lifted.expand(rho)
    g = tuple(a - b for a, b in zip(f, h))
    combo2 = LaurentPoly.zero(n, 0)
    for gi, ri in zip(g, rho):
        combo2 = combo2 + gi * ri
    if combo2 != combo:
        raise AssertionError("normalization changed the combination")
    for i in range(n):
        want = ((1 - model.fw_degrees[i][0]) % 2,)
        comp = homogeneous_component(g[i], model.grading, want)
        if not reduce_coefficients(comp, d).is_zero():
            raise AssertionError("normalized component does not vanish mod d")
    return g
