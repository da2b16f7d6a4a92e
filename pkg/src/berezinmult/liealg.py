"""Root data and basic fundamental representations for A_n and C_2.

Weights are integer tuples of Dynkin labels throughout.  The positive roots
are stored in a frozen canonical order: simple roots first, then by height,
ties broken by the first simple root in the expansion.  For A_2 this is
``a1, a2, a1+a2`` and for C_2 it is ``a1, a2, a1+a2, 2a1+a2``.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .polyalg import (
    PreconditionError,
    commutator,
    identity,
    inverse,
    is_diagonal,
    matmul,
    transpose,
    zeros,
)

Weight = tuple[int, ...]


class UnsupportedAlgebra(ValueError):
    pass


class DomainError(ValueError):
    """A weight argument is malformed or a highest weight is not dominant."""


class ConsistencyError(RuntimeError):
    """An internal convention check failed (never caused by user input)."""


_SPEC_RE = re.compile(r"^\s*([A-Za-z])\s*(\d+)\s*$")


@dataclass(frozen=True)
class GroupSpec:
    family: str
    rank: int

    def __post_init__(self):
        if self.family == "A" and self.rank >= 1:
            return
        if self.family == "C" and self.rank == 2:
            return
        raise UnsupportedAlgebra(f"unsupported algebra {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse ``"A2"``, ``"C2"`` and similar strings."""
        m = _SPEC_RE.match(text)
        if not m:
            raise UnsupportedAlgebra(f"cannot parse algebra {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class PositiveRoot:
    expansion: tuple[int, ...]  # coefficients on the simple roots
    labels: Weight  # Dynkin labels

    @property
    def height(self) -> int:
        return sum(self.expansion)


@dataclass(frozen=True)
class RootDatum:
    spec: GroupSpec
    cartan: tuple[tuple[int, ...], ...]  # row i = Dynkin labels of simple root i
    positive_roots: tuple[PositiveRoot, ...]
    symmetrizers: tuple[int, ...]  # (a_i, a_i)/2, short roots have d = 1
    weight_metric: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def root_labels(self) -> list[Weight]:
        return [r.labels for r in self.positive_roots]

    def is_dominant(self, w: Weight) -> bool:
        return len(w) == self.rank and all(x >= 0 for x in w)

    def check_weight(self, w) -> Weight:
        w = tuple(int(x) for x in w)
        if len(w) != self.rank:
            raise DomainError(f"weight {w} must have {self.rank} Dynkin labels")
        return w

    def reflect(self, i: int, w: Weight) -> Weight:
        """Simple reflection ``s_i(w) = w - w_i * a_i``."""
        wi = w[i]
        return tuple(x - wi * a for x, a in zip(w, self.cartan[i]))

    def root_lattice_coords(self, w: Weight) -> tuple[Fraction, ...]:
        """Coefficients of ``w`` on the simple roots (rational in general)."""
        inv = _cartan_transpose_inverse(self.cartan)
        return tuple(sum((inv[i][j] * w[j] for j in range(self.rank)), Fraction(0))
                     for i in range(self.rank))

    def weyl_group_order(self) -> int:
        if self.spec.family == "A":
            return factorial(self.spec.rank + 1)
        return 8


@lru_cache(maxsize=None)
def _cartan_transpose_inverse(cartan):
    return tuple(tuple(r) for r in inverse(transpose([list(r) for r in cartan])))


def _cartan_matrix(spec: GroupSpec) -> list[list[int]]:
    n = spec.rank
    if spec.family == "A":
        return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)]
                for i in range(n)]
    # C2 with a2 long: <a1, H2> = -1, <a2, H1> = -2
    return [[2, -1], [-2, 2]]


def _positive_root_expansions(spec: GroupSpec) -> list[tuple[int, ...]]:
    n = spec.rank
    if spec.family == "A":
        # root e_ij (i < j) = a_i + ... + a_{j-1}
        roots = []
        for i in range(n):
            for j in range(i + 1, n + 1):
                roots.append((j - i, i, tuple(1 if i <= k < j else 0 for k in range(n))))
        roots.sort(key=lambda t: (t[0], t[1]))
        return [r[2] for r in roots]
    return [(1, 0), (0, 1), (1, 1), (2, 1)]


def _symmetrizers(cartan: list[list[int]]) -> tuple[int, ...]:
    # minimal positive d with A[i][j]*d[j] symmetric, i.e. (a_i, a_j) = A_ij d_j
    n = len(cartan)
    d = [None] * n
    d[0] = Fraction(1)
    queue = deque([0])
    while queue:
        j = queue.popleft()
        for i in range(n):
            if i != j and cartan[i][j] and d[i] is None:
                # A_ij d_j = A_ji d_i
                d[i] = Fraction(cartan[i][j]) * d[j] / cartan[j][i]
                queue.append(i)
    if any(x is None for x in d):
        raise ConsistencyError("Cartan matrix is not connected")
    den = 1
    for x in d:
        den = den * x.denominator // _gcd(den, x.denominator)
    ints = [int(x * den) for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    return tuple(x // g for x in ints)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


@lru_cache(maxsize=None)
def build_root_datum(spec: GroupSpec) -> RootDatum:
    cartan = _cartan_matrix(spec)
    roots = []
    for exp in _positive_root_expansions(spec):
        labels = tuple(sum(exp[k] * cartan[k][i] for k in range(spec.rank))
                       for i in range(spec.rank))
        roots.append(PositiveRoot(exp, labels))
    d = _symmetrizers(cartan)
    # (w_i, a_j) = delta_ij d_j  =>  G A^T = diag(d)
    inv_at = inverse(transpose(cartan))
    metric = [[d[i] * inv_at[i][j] for j in range(spec.rank)] for i in range(spec.rank)]
    return RootDatum(
        spec=spec,
        cartan=tuple(tuple(r) for r in cartan),
        positive_roots=tuple(roots),
        symmetrizers=d,
        weight_metric=tuple(tuple(r) for r in metric),
    )


def inner_product(datum: RootDatum, a: Weight, b: Weight) -> Fraction:
    g = datum.weight_metric
    n = datum.rank
    return sum((a[i] * g[i][j] * b[j] for i in range(n) for j in range(n)), Fraction(0))


def coordinate_weights(datum: RootDatum) -> list[Weight]:
    """Torus weight of each affine coordinate, in canonical root order."""
    return [r.labels for r in datum.positive_roots]


def weyl_orbit(datum: RootDatum, m: Weight) -> set[Weight]:
    m = datum.check_weight(m)
    seen = {m}
    queue = deque([m])
    while queue:
        w = queue.popleft()
        for i in range(datum.rank):
            v = datum.reflect(i, w)
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def dominant_conjugate(datum: RootDatum, m: Weight) -> Weight:
    m = tuple(m)
    while True:
        i = next((k for k, x in enumerate(m) if x < 0), None)
        if i is None:
            return m
        m = datum.reflect(i, m)


# ---------------------------------------------------------------------------
# basic fundamental representation


@dataclass(frozen=True)
class FundamentalRep:
    spec: GroupSpec
    dim: int
    E: tuple  # one matrix per positive root, canonical order
    H: tuple  # one per simple root
    Y: tuple = field(default=())
    eta: tuple = field(default=())


def _unit(n, i, j, value=1):
    m = zeros(n)
    m[i][j] = Fraction(value)
    return m


def _kron(a, b):
    return [[Fraction(x) * y for x in ra for y in rb] for ra in a for rb in b]


def _lin(coeffs, mats):
    n = len(mats[0])
    out = zeros(n)
    for c, m in zip(coeffs, mats):
        for i in range(n):
            for j in range(n):
                out[i][j] += c * m[i][j]
    return out


def _freeze(m):
    return tuple(tuple(r) for r in m)


def _raw_generators(spec: GroupSpec):
    if spec.family == "A":
        n = spec.rank + 1
        E = []
        for exp in _positive_root_expansions(spec):
            i = exp.index(1)
            j = i + sum(exp)
            E.append(_unit(n, i, j))
        H = [_lin([1, -1], [_unit(n, i, i), _unit(n, i + 1, i + 1)]) for i in range(spec.rank)]
        return n, E, H
    one = identity(2)
    sp = [[0, 1], [0, 0]]
    sm = [[0, 0], [1, 0]]
    s0 = [[1, 0], [0, -1]]
    E = [_kron(one, sp), _kron(sp, sm), _kron(sp, s0), _kron(sp, sp)]
    H = [_kron(one, s0), _lin([Fraction(1, 2), Fraction(-1, 2)], [_kron(s0, one), _kron(one, s0)])]
    return 4, E, H


def _is_multiple(a, b, c) -> bool:
    """a == c * b entrywise."""
    return all(x == c * y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def central_charges(rep: FundamentalRep, datum: RootDatum) -> list[list[list[Fraction]]]:
    """Cartan elements ``Y_j`` with ``<a_i, Y_j> = (w_j, a_i) = delta_ij d_i``.

    Equivalently ``Y_j = sum_k G_jk H_k`` with ``G`` the weight metric.
    """
    g = datum.weight_metric
    return [_lin(list(g[j]), rep.H) for j in range(datum.rank)]


def lowest_projectors(Y) -> list[list[list[Fraction]]]:
    out = []
    for y in Y:
        if not is_diagonal(y):
            raise PreconditionError("central charge must be diagonal")
        diag = [y[i][i] for i in range(len(y))]
        low = min(diag)
        out.append([[Fraction(int(i == j and diag[i] == low)) for j in range(len(y))]
                    for i in range(len(y))])
    return out


def _verify(rep: FundamentalRep, datum: RootDatum):
    n = rep.dim
    for a, E in enumerate(rep.E):
        if any(E[i][j] for i in range(n) for j in range(i + 1)):
            raise ConsistencyError(f"E[{a}] is not strictly upper triangular")
    for a, E in enumerate(rep.E):
        for i, H in enumerate(rep.H):
            if not _is_multiple(commutator(H, E), E, datum.positive_roots[a].labels[i]):
                raise ConsistencyError(f"[H{i + 1}, E{a + 1}] has the wrong eigenvalue")
    simple = [k for k, r in enumerate(datum.positive_roots) if r.height == 1]
    for j, Y in enumerate(rep.Y):
        for i, k in enumerate(simple):
            want = datum.symmetrizers[i] if i == j else 0
            if not _is_multiple(commutator(Y, rep.E[k]), rep.E[k], want):
                raise ConsistencyError(f"[Y{j + 1}, E{k + 1}] has the wrong eigenvalue")
    for j, eta in enumerate(rep.eta):
        if _freeze(matmul(eta, eta)) != _freeze(eta):
            raise ConsistencyError(f"eta{j + 1} is not idempotent")


@lru_cache(maxsize=None)
def build_rep(spec: GroupSpec) -> FundamentalRep:
    datum = build_root_datum(spec)
    dim, E, H = _raw_generators(spec)
    rep = FundamentalRep(spec, dim, tuple(map(_freeze, E)), tuple(map(_freeze, H)))
    Y = central_charges(rep, datum)
    eta = lowest_projectors(Y)
    rep = replace(rep, Y=tuple(map(_freeze, Y)), eta=tuple(map(_freeze, eta)))
    _verify(rep, datum)
    return rep


def labels_from_commutators(rep: FundamentalRep) -> list[Weight]:
    """Recover each root's Dynkin labels from ``[H_i, E_a]`` directly."""
    out = []
    for E in rep.E:
        i, j = next((i, j) for i, r in enumerate(E) for j, x in enumerate(r) if x)
        labels = []
        for H in rep.H:
            c = commutator(H, E)[i][j] / E[i][j]
            labels.append(int(c))
        out.append(tuple(labels))
    return out
