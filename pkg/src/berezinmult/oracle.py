"""Freudenthal recursion and the Weyl dimension formula.

This path shares only :class:`~berezinmult.liealg.RootDatum` with the kernel
pipeline and is used to cross-check it.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .liealg import DomainError, RootDatum, Weight, dominant_conjugate, inner_product, weyl_orbit


def _require_dominant(datum: RootDatum, lam) -> Weight:
    lam = tuple(int(x) for x in lam)
    if not datum.is_dominant(lam):
        raise DomainError(f"highest weight {lam} is not dominant")
    return lam


def _below(datum: RootDatum, lam: Weight, mu: Weight) -> bool:
    """``lam - mu`` is a nonnegative integer combination of simple roots."""
    diff = tuple(a - b for a, b in zip(lam, mu))
    coords = datum.root_lattice_coords(diff)
    return all(c.denominator == 1 and c >= 0 for c in coords)


def dominant_weights(datum: RootDatum, lam: Weight) -> list[Weight]:
    """Dominant ``mu`` with ``lam - mu`` in the nonnegative root cone."""
    lam = _require_dominant(datum, lam)
    simple = datum.cartan
    seen = {lam}
    queue = deque([lam])
    found = []
    while queue:
        mu = queue.popleft()
        found.append(mu)
        for a in simple:
            nu = tuple(x - y for x, y in zip(mu, a))
            # weights of V(lam) form a saturated set reachable by lowering from lam
            if nu not in seen and _below(datum, lam, dominant_conjugate(datum, nu)):
                seen.add(nu)
                queue.append(nu)
    return sorted(w for w in found if datum.is_dominant(w))


class _Freudenthal:
    """Memoised recursion over the dominant weights of one representation."""

    def __init__(self, datum: RootDatum, lam: Weight):
        self.datum = datum
        self.lam = lam
        rho = datum.rho
        lr = tuple(a + b for a, b in zip(lam, rho))
        self.norm_lr = inner_product(datum, lr, lr)
        self.memo: dict[Weight, int] = {lam: 1}

    def __call__(self, m: Weight) -> int:
        datum = self.datum
        mu = dominant_conjugate(datum, m)
        if mu in self.memo:
            return self.memo[mu]
        if not _below(datum, self.lam, mu):
            self.memo[mu] = 0
            return 0
        rho = datum.rho
        mr = tuple(a + b for a, b in zip(mu, rho))
        denom = self.norm_lr - inner_product(datum, mr, mr)
        total = Fraction(0)
        for root in datum.positive_roots:
            alpha = root.labels
            k = 1
            while True:
                nu = tuple(x + k * a for x, a in zip(mu, alpha))
                if not _below(datum, self.lam, dominant_conjugate(datum, nu)):
                    break
                n = self(nu)
                total += inner_product(datum, nu, alpha) * n
                k += 1
        if denom == 0:
            raise ArithmeticError(f"vanishing Freudenthal prefactor at {mu}")
        value = 2 * total / denom
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(f"non-integral multiplicity {value} at {mu}")
        self.memo[mu] = int(value)
        return self.memo[mu]


def freudenthal_multiplicity(datum: RootDatum, lam: Weight, m: Weight) -> int:
    lam = _require_dominant(datum, lam)
    return _Freudenthal(datum, lam)(datum.check_weight(m))


@dataclass(frozen=True)
class WeightSystem:
    highest_weight: Weight
    entries: dict = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return sum(self.entries.values())

    def weights(self) -> list[Weight]:
        return sorted(self.entries)


def weight_system(datum: RootDatum, lam: Weight) -> WeightSystem:
    lam = _require_dominant(datum, lam)
    rec = _Freudenthal(datum, lam)
    entries = {}
    for mu in dominant_weights(datum, lam):
        n = rec(mu)
        for w in weyl_orbit(datum, mu):
            entries[w] = n
    return WeightSystem(lam, entries)


def weyl_dimension(datum: RootDatum, lam: Weight) -> int:
    lam = _require_dominant(datum, lam)
    rho = datum.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    dim = Fraction(1)
    for root in datum.positive_roots:
        dim *= inner_product(datum, lr, root.labels) / inner_product(datum, rho, root.labels)
    if dim.denominator != 1:
        raise ArithmeticError(f"Weyl dimension formula gave non-integer {dim}")
    return int(dim)
