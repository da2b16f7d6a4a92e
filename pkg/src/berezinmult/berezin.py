"""Weight multiplicities from reproducing kernels on the flag manifold.

The pipeline is::

    coset representative -> basic kernels L^j -> L^lambda = prod (L^j)^l_j
        -> weight-m part of L^lambda -> Hermitian form -> exact rank

The torus projection is done by exact monomial selection: averaging a
monomial ``zeta^n`` against a torus character keeps it iff the torus weight
``sum_a n_a * a`` equals ``lambda - m``.  No quadrature is involved.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .liealg import (
    ConsistencyError,
    DomainError,
    FundamentalRep,
    GroupSpec,
    RootDatum,
    Weight,
    build_rep,
    build_root_datum,
    coordinate_weights,
)
from .polyalg import (
    PolyMatrix,
    SesquiPoly,
    conj_transpose,
    nilpotent_exp,
    poly_det,
    psd_certificate,
    rational_rank,
)


@dataclass(frozen=True)
class Kernel:
    algebra: GroupSpec
    highest_weight: Weight
    poly: SesquiPoly
    projected_to: Optional[Weight] = None


@dataclass(frozen=True)
class HermitianForm:
    basis: tuple[tuple[int, ...], ...]  # zeta exponent vectors, lexicographic
    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.basis)

    def permuted(self, order: Sequence[Sequence[int]]) -> "HermitianForm":
        """Re-express the form on the basis listed in ``order``."""
        idx = [self.basis.index(tuple(b)) for b in order]
        return HermitianForm(
            tuple(self.basis[i] for i in idx),
            tuple(tuple(self.matrix[i][j] for j in idx) for i in idx),
        )


@dataclass(frozen=True)
class MultiplicityResult:
    weight: Weight
    multiplicity: int
    basis_size: int
    form: Optional[HermitianForm] = None


def coset_rep(rep: FundamentalRep) -> PolyMatrix:
    """``exp(sum_a zeta_a E_a)`` as a unit upper triangular polynomial matrix."""
    D = len(rep.E)
    n = rep.dim
    entries = [[SesquiPoly.zero(D) for _ in range(n)] for _ in range(n)]
    for a, E in enumerate(rep.E):
        z = SesquiPoly.zeta(D, a)
        for i in range(n):
            for j in range(n):
                if E[i][j]:
                    entries[i][j] = entries[i][j] + z * E[i][j]
    return nilpotent_exp(PolyMatrix(D, entries))


def basic_kernel(rep: FundamentalRep, j: int) -> Kernel:
    """``det(eta_j xi(z)^+ xi(zeta) eta_j + 1 - eta_j)`` for ``j`` in ``1..rank``."""
    rank = len(rep.H)
    if not 1 <= j <= rank:
        raise IndexError(f"basic kernel index {j} outside 1..{rank}")
    D = len(rep.E)
    xi = coset_rep(rep)
    eta = PolyMatrix.from_rational(D, rep.eta[j - 1])
    one = PolyMatrix.identity(D, rep.dim)
    m = eta @ conj_transpose(xi) @ xi @ eta + (one - eta)
    label = tuple(int(k == j - 1) for k in range(rank))
    return Kernel(rep.spec, label, poly_det(m))


def kernel_for_highest_weight(rep: FundamentalRep, datum: RootDatum, highest: Weight) -> Kernel:
    highest = _dominant(datum, highest)
    D = len(rep.E)
    poly = SesquiPoly.const(D, 1)
    for j, power in enumerate(highest, start=1):
        if power:
            poly = poly * basic_kernel(rep, j).poly ** power
    return Kernel(rep.spec, highest, poly)


def monomial_weight(labels: Sequence[Weight], exponents: Sequence[int]) -> Weight:
    rank = len(labels[0]) if labels else 0
    return tuple(sum(n * a[i] for n, a in zip(exponents, labels)) for i in range(rank))


def project_weight(k: Kernel, m: Weight) -> Kernel:
    """Keep the monomials whose zeta-part has torus weight ``lambda - m``."""
    datum = build_root_datum(k.algebra)
    m = datum.check_weight(m)
    target = tuple(l - x for l, x in zip(k.highest_weight, m))
    labels = coordinate_weights(datum)
    kept = {mono: c for mono, c in k.poly.items()
            if monomial_weight(labels, mono.zeta) == target}
    return Kernel(k.algebra, k.highest_weight, SesquiPoly(k.poly.nvars, kept), m)


def split_by_weight(k: Kernel) -> dict[Weight, SesquiPoly]:
    """Partition the kernel's terms by the weight ``m`` they project to."""
    datum = build_root_datum(k.algebra)
    labels = coordinate_weights(datum)
    parts: dict[Weight, dict] = {}
    for mono, c in k.poly.items():
        shift = monomial_weight(labels, mono.zeta)
        m = tuple(l - s for l, s in zip(k.highest_weight, shift))
        parts.setdefault(m, {})[mono] = c
    return {m: SesquiPoly(k.poly.nvars, t) for m, t in parts.items()}


def hermitian_form(k: Kernel) -> HermitianForm:
    poly = k.poly
    rows = sorted({mono.zeta for mono in poly})
    cols = sorted({mono.zbar for mono in poly})
    if rows != cols:
        raise ConsistencyError("holomorphic and antiholomorphic monomial sets differ")
    index = {b: i for i, b in enumerate(rows)}
    n = len(rows)
    mat = [[Fraction(0)] * n for _ in range(n)]
    for mono, c in poly.items():
        mat[index[mono.zeta]][index[mono.zbar]] = c
    for i in range(n):
        for j in range(i):
            if mat[i][j] != mat[j][i]:
                raise ConsistencyError("kernel coefficient table is not symmetric")
    return HermitianForm(tuple(rows), tuple(tuple(r) for r in mat))


def _dominant(datum: RootDatum, w) -> Weight:
    w = datum.check_weight(w)
    if not datum.is_dominant(w):
        raise DomainError(f"highest weight {w} is not dominant")
    return w


def multiplicity(spec: GroupSpec, highest: Weight, m: Weight, *, keep_form: bool = False,
                 kernel: Optional[Kernel] = None, check_psd: bool = False) -> MultiplicityResult:
    """Multiplicity of weight ``m`` in the irreducible representation ``highest``.

    Parameters
    ----------
    spec : GroupSpec
    highest, m : tuple of int
        Dynkin labels.  ``highest`` must be dominant.
    keep_form : bool
        Attach the Hermitian form to the result.
    kernel : Kernel, optional
        A precomputed ``L^highest`` to share across many target weights.
    check_psd : bool
        Certify the form positive semidefinite; raises ``ConsistencyError``
        otherwise.
    """
    datum = build_root_datum(spec)
    highest = _dominant(datum, highest)
    m = datum.check_weight(m)
    if kernel is None:
        kernel = kernel_for_highest_weight(build_rep(spec), datum, highest)
    elif kernel.algebra != spec or kernel.highest_weight != highest:
        raise ValueError("supplied kernel does not match the request")
    form = hermitian_form(project_weight(kernel, m))
    if check_psd and form.size and not psd_certificate(form.matrix):
        raise ConsistencyError(f"Hermitian form for weight {m} is not positive semidefinite")
    rank = rational_rank(form.matrix)
    return MultiplicityResult(m, rank, form.size, form if keep_form else None)


def multiplicities(spec: GroupSpec, highest: Weight, weights: Iterable[Weight],
                   **kwargs) -> list[MultiplicityResult]:
    """Evaluate many target weights against one shared kernel, sorted by weight."""
    datum = build_root_datum(spec)
    highest = _dominant(datum, highest)
    kernel = kernel_for_highest_weight(build_rep(spec), datum, highest)
    return [multiplicity(spec, highest, m, kernel=kernel, **kwargs)
            for m in sorted(set(map(tuple, weights)))]
