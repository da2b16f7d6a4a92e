from dataclasses import replace
from itertools import product
import random

import pytest

from berezinmult.liealg import DomainError, GroupSpec, build_root_datum, weyl_orbit
from berezinmult.oracle import (
    dominant_weights,
    freudenthal_multiplicity,
    weight_system,
    weyl_dimension,
)

A2, C2 = GroupSpec("A", 2), GroupSpec("C", 2)


def test_trivial_rep():
    ws = weight_system(build_root_datum(A2), (0, 0))
    assert ws.entries == {(0, 0): 1}


def test_defining_rep():
    ws = weight_system(build_root_datum(A2), (1, 0))
    assert ws.entries == {(1, 0): 1, (-1, 1): 1, (0, -1): 1}


def test_adjoint_rep():
    d = build_root_datum(A2)
    ws = weight_system(d, (1, 1))
    assert len(ws.entries) == 7
    assert ws.entries[(0, 0)] == 2
    assert all(ws.entries[w] == 1 for w in weyl_orbit(d, (1, 1)))
    assert freudenthal_multiplicity(d, (1, 1), (0, 0)) == 2


def test_a2_42_at_m2m1():
    assert freudenthal_multiplicity(build_root_datum(A2), (4, 2), (-2, -1)) == 2


def test_base_case_and_outside():
    d = build_root_datum(C2)
    assert freudenthal_multiplicity(d, (1, 1), (1, 1)) == 1
    assert freudenthal_multiplicity(d, (1, 1), (5, 5)) == 0
    assert freudenthal_multiplicity(d, (1, 1), (0, 0)) == 0  # wrong root-lattice coset
    assert freudenthal_multiplicity(d, (1, 1), (1, 0)) == 2


def test_weyl_dimension_examples():
    d = build_root_datum(A2)
    assert weyl_dimension(d, (0, 0)) == 1
    assert weyl_dimension(d, (1, 0)) == 3
    assert weyl_dimension(d, (4, 2)) == 60
    assert weyl_dimension(build_root_datum(C2), (1, 1)) == 16


def test_su3_closed_form_dimension():
    # (p+1)(q+1)(p+q+2)/2
    d = build_root_datum(A2)
    for p, q in product(range(5), repeat=2):
        assert weyl_dimension(d, (p, q)) == (p + 1) * (q + 1) * (p + q + 2) // 2


def test_rejects_non_dominant():
    with pytest.raises(DomainError):
        weight_system(build_root_datum(A2), (1, -1))
    with pytest.raises(DomainError):
        weyl_dimension(build_root_datum(A2), (-1, 0))


REPS = [(GroupSpec("A", 1), (3,)), (A2, (2, 1)), (A2, (3, 3)), (A2, (4, 2)),
        (GroupSpec("A", 3), (1, 1, 1)), (C2, (1, 0)), (C2, (0, 1)), (C2, (1, 1)), (C2, (2, 2))]


@pytest.mark.parametrize("spec,lam", REPS)
def test_weight_system_invariants(spec, lam):
    d = build_root_datum(spec)
    ws = weight_system(d, lam)
    assert ws.entries[lam] == 1
    assert ws.dimension == weyl_dimension(d, lam)
    for w in weyl_orbit(d, lam):
        assert ws.entries[w] == 1
    for w, n in ws.entries.items():
        assert n > 0
        assert all(ws.entries[v] == n for v in weyl_orbit(d, w))


@pytest.mark.parametrize("spec,lam", REPS)
def test_freudenthal_weyl_invariant(spec, lam):
    d = build_root_datum(spec)
    rng = random.Random(7)
    ws = weight_system(d, lam)
    for m in rng.sample(sorted(ws.entries), min(4, len(ws.entries))):
        values = {freudenthal_multiplicity(d, lam, v) for v in weyl_orbit(d, m)}
        assert values == {ws.entries[m]}


@pytest.mark.parametrize("spec,lam", [(A2, (4, 2)), (C2, (1, 1)), (C2, (2, 1))])
def test_metric_normalisation_cancels(spec, lam):
    d = build_root_datum(spec)
    doubled = replace(d, weight_metric=tuple(tuple(2 * x for x in r) for r in d.weight_metric))
    assert weight_system(doubled, lam).entries == weight_system(d, lam).entries
    assert weyl_dimension(doubled, lam) == weyl_dimension(d, lam)


@pytest.mark.parametrize("spec,lam", [(A2, (4, 2)), (C2, (2, 1))])
def test_dominant_weights_brute_force(spec, lam):
    # lam - k1*a1 - k2*a2 over a box of k, keeping dominant results
    d = build_root_datum(spec)
    expected = set()
    for k1, k2 in product(range(12), repeat=2):
        mu = tuple(l - k1 * a - k2 * b for l, a, b in zip(lam, d.cartan[0], d.cartan[1]))
        if min(mu) >= 0:
            expected.add(mu)
    assert dominant_weights(d, lam) == sorted(expected)
