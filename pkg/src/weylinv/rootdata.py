"""Weight-lattice models for products of simple factors modulo a central subgroup.

Conventions (fixed, not configurable):
  * every weight is stored by its fundamental-weight coordinates (integer
    tuple over the concatenated bases of the factors), so all arithmetic is
    integral even for spin weights;
  * type A_{n} models SL(n+1) on the quotient presentation of Z^{n+1};
  * types B/C/D use the usual e_i presentations only implicitly (through the
    Cartan matrices and the hardcoded residue/Killing data);
  * E6/E7 use the node numbering in which the Killing form has cross terms
    exactly on diagram edges (chain 1-3-4-5-6(-7) with node 2 hanging off 4).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .intlinalg import congruence_kernel, det_int, snf_with_left
from .laurent import Grading, LaurentPoly

KINDS = ("A", "B", "C", "D", "E6", "E7")


@dataclass(frozen=True)
class SimpleFactor:
    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown factor kind {self.kind!r}")
        lo = {"A": 1, "B": 2, "C": 2, "D": 4, "E6": 6, "E7": 7}[self.kind]
        if self.rank < lo:
            raise ValueError(f"rank {self.rank} too small for type {self.kind}")
        if self.kind in ("E6", "E7") and self.rank != lo:
            raise ValueError(f"type {self.kind} has fixed rank {lo}")

    def __str__(self):
        return f"{self.kind}{self.rank}"


@dataclass(frozen=True)
class GroupSpec:
    """Product of simple factors with a central kernel.

    Each kernel generator assigns to every factor an element of that factor's
    center character group: an int mod (n+1, 2, 2, 4, 3, 2) for types
    (A_n, B, C, D-odd, E6, E7), and a pair (s, v) of bits for D-even.
    """

    factors: tuple[SimpleFactor, ...]
    center_kernel: tuple[tuple, ...] = ()

    def __str__(self):
        prod = " x ".join(str(f) for f in self.factors)
        if not self.center_kernel:
            return prod
        return f"({prod}) / <{len(self.center_kernel)} kernel generator(s)>"


# --------------------------------------------------------------------------
# per-type static data


def cartan_rows(kind: str, n: int) -> list[list[int]]:
    """M[i][j] = <alpha_i, alpha_j^vee>; row i gives alpha_i in fw coordinates."""
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2
    if kind in ("A", "B", "C"):
        for i in range(n - 1):
            m[i][i + 1] = -1
            m[i + 1][i] = -1
        if kind == "B" and n >= 2:
            m[n - 2][n - 1] = -2
        if kind == "C" and n >= 2:
            m[n - 1][n - 2] = -2
    elif kind == "D":
        for i in range(n - 2):
            m[i][i + 1] = -1
            m[i + 1][i] = -1
        m[n - 3][n - 1] = -1
        m[n - 1][n - 3] = -1
    else:
        for i, j in diagram_edges(kind, n):
            m[i][j] = -1
            m[j][i] = -1
    return m


def diagram_edges(kind: str, n: int) -> list[tuple[int, int]]:
    if kind in ("A", "B", "C"):
        return [(i, i + 1) for i in range(n - 1)]
    if kind == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if kind == "E6":
        return [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)]
    if kind == "E7":
        return [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3)]
    raise ValueError(kind)


_E_ORDERS = {"E6": 51840, "E7": 2903040}


def weyl_order(kind: str, n: int) -> int:
    if kind == "A":
        return math.factorial(n + 1)
    if kind in ("B", "C"):
        return (1 << n) * math.factorial(n)
    if kind == "D":
        return (1 << (n - 1)) * math.factorial(n)
    return _E_ORDERS[kind]


def center_group(kind: str, n: int):
    """Invariant factors of the center character group of the factor."""
    if kind == "A":
        return (n + 1,)
    if kind in ("B", "C", "E7"):
        return (2,)
    if kind == "E6":
        return (3,)
    if kind == "D":
        return (4,) if n % 2 else (2, 2)
    raise ValueError(kind)


def residue_functionals(kind: str, n: int) -> list[tuple[list[int], int]]:
    """Linear forms (vector, modulus) computing the center class of a weight.

    The class of sum a_i w_i in the weight/root quotient is the tuple of
    vec . a mod m over the returned rows, in the same coordinates as
    center_group().  Conventions follow the worked congruences of the source
    results (type A: sum i*a_i; B: a_m; C: alternating sum; D as below).
    """
    if kind == "A":
        return [([i + 1 for i in range(n)], n + 1)]
    if kind == "B":
        return [([0] * (n - 1) + [1], 2)]
    if kind == "C":
        return [([(i + 1) % 2 for i in range(n)], 2)]
    if kind == "E6":
        return [([1, 0, -1, 0, 1, -1], 3)]
    if kind == "E7":
        return [([0, 1, 0, 0, 1, 0, 1], 2)]
    if kind == "D":
        if n % 2:
            vec = [2 * ((i + 1) % 2) for i in range(n - 2)] + [1, 3]
            return [(vec, 4)]
        rs = [0] * (n - 2) + [1, 1]
        rv = [(i + 1) % 2 for i in range(n - 2)] + [(n // 2 - 1) % 2, (n // 2) % 2]
        return [(rs, 2), (rv, 2)]
    raise ValueError(kind)


def killing_coeffs(kind: str, n: int) -> dict[tuple[int, int], int]:
    """Normalized Killing form as {(i, j): c} with i <= j, fw coordinates.

    Simply-laced types: sum w_i^2 minus the product over each diagram edge.
    Type B: extra 2*w_m^2 with doubled last cross term; type C: doubled
    squares except the last (the expansion of sum e_i^2).
    """
    q = {}
    if kind in ("A", "D", "E6", "E7"):
        for i in range(n):
            q[(i, i)] = 1
        for i, j in diagram_edges(kind, n):
            a, b = min(i, j), max(i, j)
            q[(a, b)] = -1
    elif kind == "B":
        for i in range(n - 1):
            q[(i, i)] = 1
        q[(n - 1, n - 1)] = 2
        for i in range(n - 2):
            q[(i, i + 1)] = -1
        q[(n - 2, n - 1)] = -2
    elif kind == "C":
        for i in range(n - 1):
            q[(i, i)] = 2
        q[(n - 1, n - 1)] = 1
        for i in range(n - 1):
            q[(i, i + 1)] = -2
    else:
        raise ValueError(kind)
    return q


def standard_e_basis(kind: str, n: int):
    """Rows expressing the standard vectors e_i in fundamental-weight symbols.

    Defined for the types whose presentations use standard coordinates
    (B, C, D); the expressions are integral in all three cases.
    """
    rows = []
    if kind == "C":
        for i in range(n):
            r = [0] * n
            r[i] = 1
            if i:
                r[i - 1] = -1
            rows.append(r)
    elif kind == "B":
        for i in range(n - 1):
            r = [0] * n
            r[i] = 1
            if i:
                r[i - 1] = -1
            rows.append(r)
        r = [0] * n
        r[n - 1], r[n - 2] = 2, -1
        rows.append(r)
    elif kind == "D":
        for i in range(n - 2):
            r = [0] * n
            r[i] = 1
            if i:
                r[i - 1] = -1
            rows.append(r)
        r = [0] * n
        r[n - 2], r[n - 1] = 1, 1
        if n > 2:
            r[n - 3] = -1
        rows.append(list(r))
        r = [0] * n
        r[n - 2], r[n - 1] = -1, 1
        rows.append(r)
    else:
        raise ValueError(f"no standard-coordinate presentation for type {kind}")
    return rows


@dataclass(frozen=True)
class KillingForm:
    """Normalized Killing form of one factor, in its local fw coordinates."""

    factor_index: int
    coeffs: tuple  # ((i, j, c), ...) with i <= j

    def as_dict(self):
        return {(i, j): c for i, j, c in self.coeffs}


def killing_value(kind: str, n: int, local_weight) -> Fraction:
    """Value of the normalized Killing form at a weight (types B, C, D).

    Uses the standard-coordinate expressions: sum e_i^2 for C and
    (sum e_i^2)/2 for B and D, evaluated at the e-coordinates of the weight.
    """
    from .intlinalg import inverse_fraction

    rows = standard_e_basis(kind, n)
    inv = inverse_fraction(rows)
    b = [sum(Fraction(local_weight[j]) * inv[j][i] for j in range(n))
         for i in range(n)]
    total = sum(x * x for x in b)
    return total if kind == "C" else total / 2


def killing_forms(spec: GroupSpec) -> list[KillingForm]:
    out = []
    for fi, f in enumerate(spec.factors):
        q = killing_coeffs(f.kind, f.rank)
        out.append(KillingForm(fi, tuple(sorted((i, j, c) for (i, j), c in q.items()))))
    return out


# --------------------------------------------------------------------------
# parabolic subgroup orders (stabilizers of dominant weights)


@lru_cache(maxsize=None)
def _component_order(kind: str, rank: int, comp: frozenset) -> int:
    """Weyl group order of the sub-diagram spanned by `comp` (connected)."""
    size = len(comp)
    edges = [(i, j) for i, j in diagram_edges(kind, rank) if i in comp and j in comp]
    if kind in ("B", "C") and (rank - 2, rank - 1) in edges:
        return (1 << size) * math.factorial(size)
    if kind in ("A", "B", "C"):
        return math.factorial(size + 1)
    deg = {i: 0 for i in comp}
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
    tri = [i for i in comp if deg[i] == 3]
    if not tri:
        return math.factorial(size + 1)
    if len(tri) != 1:
        raise ValueError("unexpected diagram shape")
    t = tri[0]
    adj = {i: [] for i in comp}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    lengths = []
    for start in adj[t]:
        ln, prev, cur = 1, t, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        lengths.append(ln)
    lengths.sort()
    if lengths[0] == 1 and lengths[1] == 1:
        return (1 << (size - 1)) * math.factorial(size)
    if lengths == [1, 2, 2]:
        return _E_ORDERS["E6"]
    if lengths == [1, 2, 3]:
        return _E_ORDERS["E7"]
    raise ValueError(f"unrecognized diagram component {sorted(comp)}")


@lru_cache(maxsize=None)
def parabolic_order(kind: str, rank: int, zeros: frozenset) -> int:
    """Order of the parabolic Weyl subgroup generated by the given nodes."""
    if not zeros:
        return 1
    seen = set()
    total = 1
    adj = {i: [] for i in zeros}
    for i, j in diagram_edges(kind, rank):
        if i in zeros and j in zeros:
            adj[i].append(j)
            adj[j].append(i)
    for start in zeros:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        total *= _component_order(kind, rank, frozenset(comp))
    return total


# --------------------------------------------------------------------------
# the compiled model


class LatticeModel:
    """A group spec compiled to a concrete weight-lattice model."""

    def __init__(self, spec: GroupSpec):
        self.spec = spec
        self.factors = spec.factors
        self.offsets = []
        off = 0
        for f in self.factors:
            self.offsets.append(off)
            off += f.rank
        self.total_rank = off
        self.fundamental_weights = tuple(
            (fi, j) for fi, f in enumerate(self.factors) for j in range(f.rank)
        )
        self._cartan = [cartan_rows(f.kind, f.rank) for f in self.factors]
        self.killing = killing_forms(spec)
        self._residue = [residue_functionals(f.kind, f.rank) for f in self.factors]
        self._center = [center_group(f.kind, f.rank) for f in self.factors]
        self._validate_kernel()
        self.congruences = self._build_congruences()
        self.tstar_basis = congruence_kernel(
            [(list(v), m) for v, m in self.congruences], self.total_rank
        )
        self.tstar_index = abs(det_int(self.tstar_basis)) if self.total_rank else 1
        self.grading = self._build_grading()
        self.fw_degrees = tuple(
            self.grading.of_exponent(self._basis_vec(i)) for i in range(self.total_rank)
        )

    # -- construction helpers ----------------------------------------------
    def _basis_vec(self, i):
        return tuple(int(j == i) for j in range(self.total_rank))

    def _validate_kernel(self):
        for gen in self.spec.center_kernel:
            if len(gen) != len(self.factors):
                raise ValueError("kernel tuple length != number of factors")
            for t, grp in zip(gen, self._center):
                if len(grp) == 1:
                    if not isinstance(t, int):
                        raise ValueError(f"kernel entry {t!r} must be an int")
                else:
                    if not (isinstance(t, tuple) and len(t) == len(grp)):
                        raise ValueError(f"kernel entry {t!r} must be a {len(grp)}-tuple")

    def _entry_tuple(self, t, fi):
        grp = self._center[fi]
        return (t % grp[0],) if len(grp) == 1 else tuple(x % m for x, m in zip(t, grp))

    def _build_congruences(self):
        out = []
        n = self.total_rank
        for gen in self.spec.center_kernel:
            dens = []
            for fi, t in enumerate(gen):
                tt = self._entry_tuple(t, fi)
                for x, (_, m) in zip(tt, self._residue[fi]):
                    if x:
                        dens.append(m // math.gcd(x, m))
            if not dens:
                continue
            big = math.lcm(*dens)
            vec = [0] * n
            for fi, t in enumerate(gen):
                tt = self._entry_tuple(t, fi)
                off = self.offsets[fi]
                for x, (fvec, m) in zip(tt, self._residue[fi]):
                    if x:
                        scale = big * x // m
                        for j, coeff in enumerate(fvec):
                            vec[off + j] += scale * coeff
                vec = [v % big for v in vec]
            out.append((tuple(vec), big))
        return tuple(out)

    def _build_grading(self):
        # quotient Z^n / T* from the SNF of the T*-basis written in columns
        n = self.total_rank
        cols = [[self.tstar_basis[j][i] for j in range(n)] for i in range(n)]
        diag, u = snf_with_left(cols)
        moduli = [d for d in diag if d > 1]
        rows = [u[i] for i, d in enumerate(diag) if d > 1]
        images = [tuple(rows[k][j] % moduli[k] for k in range(len(moduli)))
                  for j in range(n)]
        return Grading(tuple(moduli), images)

    # -- weight utilities ----------------------------------------------------
    def slice_of(self, weight, fi):
        off = self.offsets[fi]
        return tuple(weight[off:off + self.factors[fi].rank])

    def assemble(self, local_weights):
        out = []
        for w in local_weights:
            out.extend(w)
        return tuple(out)

    def fundamental_weight(self, fi, j):
        """Global fw vector for local index j (0-based) of factor fi."""
        off = self.offsets[fi]
        return tuple(int(k == off + j) for k in range(self.total_rank))

    def grade_of_weight(self, weight):
        return self.grading.of_exponent(weight)

    def in_tstar(self, weight):
        return all(
            sum(c * a for c, a in zip(vec, weight)) % m == 0
            for vec, m in self.congruences
        )

    def center_residues(self, weight):
        """Per-factor center classes of the weight, as tuples."""
        out = []
        for fi in range(len(self.factors)):
            loc = self.slice_of(weight, fi)
            out.append(tuple(
                sum(c * a for c, a in zip(vec, loc)) % m
                for vec, m in self._residue[fi]
            ))
        return tuple(out)

    def residue_allowed(self, residues):
        """Does a tuple of per-factor center classes satisfy all kernel relations?"""
        for gen in self.spec.center_kernel:
            tot = Fraction(0)
            for fi, t in enumerate(gen):
                tt = self._entry_tuple(t, fi)
                moduli = [m for _, m in self._residue[fi]]
                for x, r, m in zip(tt, residues[fi], moduli):
                    tot += Fraction(x * r, m)
            if tot.denominator != 1:
                return False
        return True

    # -- Weyl group action ---------------------------------------------------
    def reflect_local(self, fi, local, i):
        a_i = local[i]
        if a_i == 0:
            return tuple(local)
        row = self._cartan[fi][i]
        return tuple(a - a_i * row[j] if row[j] else a
                     for j, a in enumerate(local))

    def dominant_local(self, fi, local):
        cur = list(local)
        rows = self._cartan[fi]
        n = len(cur)
        while True:
            for i in range(n):
                if cur[i] < 0:
                    a_i = cur[i]
                    row = rows[i]
                    for j in range(n):
                        if row[j]:
                            cur[j] -= a_i * row[j]
                    break
            else:
                return tuple(cur)

    def orbit_local(self, fi, local):
        """Full Weyl orbit of a local weight (descent from the dominant point)."""
        dom = self.dominant_local(fi, local)
        rows = self._cartan[fi]
        n = len(dom)
        seen = {dom}
        frontier = [dom]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(n):
                    if w[i] > 0:
                        a_i = w[i]
                        row = rows[i]
                        v = tuple(a - a_i * row[j] if row[j] else a
                                  for j, a in enumerate(w))
                        if v not in seen:
                            seen.add(v)
                            nxt.append(v)
            frontier = nxt
        return seen

    def orbit_size_local(self, fi, local) -> int:
        dom = self.dominant_local(fi, local)
        f = self.factors[fi]
        zeros = frozenset(i for i, a in enumerate(dom) if a == 0)
        return weyl_order(f.kind, f.rank) // parabolic_order(f.kind, f.rank, zeros)


def compile_spec(spec: GroupSpec) -> LatticeModel:
    return LatticeModel(spec)


def weyl_orbit(model: LatticeModel, weight) -> set:
    """Closure of the weight under all simple reflections of every factor."""
    locals_ = [sorted(model.orbit_local(fi, model.slice_of(weight, fi)))
               for fi in range(len(model.factors))]
    return {model.assemble(combo) for combo in iproduct(*locals_)}


def orbit_size(model: LatticeModel, weight) -> int:
    total = 1
    for fi in range(len(model.factors)):
        total *= model.orbit_size_local(fi, model.slice_of(weight, fi))
    return total


def orbit_poly(model: LatticeModel, weight, augmented: bool = False) -> LaurentPoly:
    """Orbit sum rho(weight); subtract the orbit size if augmented."""
    orb = weyl_orbit(model, weight)
    terms = {w: 1 for w in orb}
    zero = (0,) * model.total_rank
    if augmented:
        terms[zero] = terms.get(zero, 0) - len(orb)
    return LaurentPoly(model.total_rank, 0, terms)
