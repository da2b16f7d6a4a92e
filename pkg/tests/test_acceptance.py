"""Acceptance criteria; see the summary section printed by conftest."""
from fractions import Fraction as F
from itertools import product
import io
import random
import subprocess
import sys
import time

import pytest

from berezinmult.berezin import (
    hermitian_form,
    kernel_for_highest_weight,
    monomial_weight,
    multiplicities,
    multiplicity,
    project_weight,
)
from berezinmult.cli import execute, parse_request
from berezinmult.liealg import GroupSpec, build_rep, build_root_datum, weyl_orbit
from berezinmult.oracle import weight_system, weyl_dimension
from berezinmult.polyalg import SesquiPoly, char_poly, psd_certificate

A2, C2 = GroupSpec("A", 2), GroupSpec("C", 2)

C1 = pytest.mark.criterion(1, "A2 (4,2) at (-2,-1): multiplicity 2, 5x5 reference form")
C2_ = pytest.mark.criterion(2, "A2 (4,2) at (-6,4): multiplicity 1, 3x3 reference pattern")
C3 = pytest.mark.criterion(3, "C2 (1,1) at (-1,0): multiplicity 2, 5x5 reference form")
C4 = pytest.mark.criterion(4, "rank equals Freudenthal on full sweeps, sums equal Weyl dimension")
C5 = pytest.mark.criterion(5, "kernel symmetry, weight balance, partition, PSD, Weyl invariance")
C6 = pytest.mark.criterion(6, "degenerate inputs, CLI exit codes, verify sweeps exit 0")

# reference matrices, rows/columns in the reference monomial order
REF_A2_M2M1 = [
    [20, -8, -6, 2, F(1, 4)],
    [-8, 20, -6, -5, 2],
    [-6, -6, 6, F(3, 2), F(-9, 8)],
    [2, -5, F(3, 2), F(5, 4), F(-1, 2)],
    [F(1, 4), 2, F(-9, 8), F(-1, 2), F(17, 64)],
]
REF_A2_M64 = [
    [F(1, 256), F(1, 128), F(1, 256)],
    [F(1, 128), F(1, 64), F(1, 128)],
    [F(1, 256), F(1, 128), F(1, 256)],
]
REF_C2_M10 = [
    [F(7, 144), F(1, 18), F(1, 3), F(-1, 4), F(-1, 12)],
    [F(1, 18), F(1, 12), F(1, 2), F(-1, 6), F(1, 12)],
    [F(1, 3), F(1, 2), 3, -1, F(1, 2)],
    [F(-1, 4), F(-1, 6), -1, 2, F(3, 2)],
    [F(-1, 12), F(1, 12), F(1, 2), F(3, 2), F(7, 4)],
]
# reference monomial order u1..u5 as zeta exponent vectors
C2_REF_ORDER = [(3, 2, 0, 0), (2, 1, 1, 0), (0, 0, 1, 1), (1, 0, 2, 0), (1, 1, 0, 1)]


def _as_frac(m):
    return [[F(x) for x in row] for row in m]


def _pm1_congruent(a, b):
    """True if b = S a S for some diagonal S with entries +-1."""
    n = len(a)
    if len(b) != n:
        return False
    for signs in product((1, -1), repeat=n):
        if all(signs[i] * signs[j] * a[i][j] == b[i][j] for i in range(n) for j in range(n)):
            return True
    return False


def _timed(fn, limit):
    t0 = time.perf_counter()
    out = fn()
    assert time.perf_counter() - t0 < limit
    return out


# -- criterion 1 -------------------------------------------------------------

@C1
def test_c1_multiplicity_and_form():
    r = _timed(lambda: multiplicity(A2, (4, 2), (-2, -1), keep_form=True, check_psd=True), 5.0)
    assert r.multiplicity == 2
    got = [list(row) for row in r.form.matrix]
    ref = _as_frac(REF_A2_M2M1)
    assert [[abs(x) for x in row] for row in got] == [[abs(x) for x in row] for row in ref]
    assert _pm1_congruent(got, ref)


# -- criterion 2 -------------------------------------------------------------

@C2_
def test_c2_multiplicity():
    r = _timed(lambda: multiplicity(A2, (4, 2), (-6, 4), keep_form=True, check_psd=True), 5.0)
    assert r.multiplicity == 1
    assert r.basis_size == 3


@C2_
def test_c2_form_matches_reference_pattern():
    # known red: our form is [[1,1,1/4],[1,1,1/4],[1/4,1/4,1/16]]; the reference
    # pattern is a positive diagonal rescaling of it, not a +-1 congruence
    r = multiplicity(A2, (4, 2), (-6, 4), keep_form=True)
    assert [list(row) for row in r.form.matrix] == REF_A2_M64


# -- criterion 3 -------------------------------------------------------------

@C3
def test_c3_multiplicity_and_form():
    r = _timed(lambda: multiplicity(C2, (1, 1), (-1, 0), keep_form=True, check_psd=True), 10.0)
    assert r.multiplicity == 2
    form = r.form.permuted(C2_REF_ORDER)
    got = [list(row) for row in form.matrix]
    ref = _as_frac(REF_C2_M10)
    assert [[abs(x) for x in row] for row in got] == [[abs(x) for x in row] for row in ref]
    assert _pm1_congruent(got, ref)
    # diagonal entries are invariant under any +-1 congruence
    assert [got[i][i] for i in range(5)] == [ref[i][i] for i in range(5)]


# -- criterion 4 -------------------------------------------------------------

SWEEP = [(A2, (1, 0)), (A2, (1, 1)), (A2, (2, 1)), (A2, (4, 2)),
         (C2, (1, 0)), (C2, (0, 1)), (C2, (1, 1))]


@C4
def test_c4_oracle_sweep():
    def run():
        for spec, lam in SWEEP:
            d = build_root_datum(spec)
            ws = weight_system(d, lam)
            res = multiplicities(spec, lam, ws.entries)
            assert {r.weight: r.multiplicity for r in res} == ws.entries
            assert sum(r.multiplicity for r in res) == weyl_dimension(d, lam)
    _timed(run, 60.0)


@C4
def test_c4_dimensions():
    assert weyl_dimension(build_root_datum(A2), (4, 2)) == 60
    assert weyl_dimension(build_root_datum(C2), (1, 1)) == 16


# -- criterion 5 -------------------------------------------------------------

@C5
def test_c5_property_suite():
    def run():
        for spec, lam in SWEEP:
            d = build_root_datum(spec)
            k = kernel_for_highest_weight(build_rep(spec), d, lam)
            labels = d.root_labels()
            for mono, c in k.poly.items():
                assert k.poly.coefficient(mono.zbar, mono.zeta) == c
                assert monomial_weight(labels, mono.zeta) == monomial_weight(labels, mono.zbar)
            ws = weight_system(d, lam)
            if spec == A2 and lam in ((1, 1), (2, 1)):
                total = SesquiPoly.zero(k.poly.nvars)
                for m in ws.entries:
                    total = total + project_weight(k, m).poly
                assert total == k.poly
            for m in ws.entries:
                form = hermitian_form(project_weight(k, m))
                assert psd_certificate(form.matrix)
                assert char_poly(form.matrix)[0] == 1
            rng = random.Random(11)
            for m in rng.sample(sorted(ws.entries), min(3, len(ws.entries))):
                values = {multiplicity(spec, lam, v, kernel=k).multiplicity
                          for v in weyl_orbit(d, m)}
                assert values == {ws.entries[m]}
    _timed(run, 30.0)


# -- criterion 6 -------------------------------------------------------------

@C6
def test_c6_outside_weight_system():
    r = multiplicity(A2, (4, 2), (7, 7), keep_form=True)
    assert r.multiplicity == 0 and r.form.size == 0
    r = multiplicity(C2, (1, 1), (0, 0), keep_form=True)
    assert r.multiplicity == 0 and r.form.size == 0


@C6
def test_c6_trivial_rep():
    for spec in (A2, C2):
        ws = weight_system(build_root_datum(spec), (0, 0))
        assert ws.entries == {(0, 0): 1}
        assert multiplicity(spec, (0, 0), (0, 0)).multiplicity == 1


@C6
@pytest.mark.parametrize("args", [
    ["--algebra", "Z9", "--highest", "1", "--all"],
    ["--algebra", "A2", "--highest", "1,-1", "--all"],
    ["--algebra", "A2", "--highest", "a,b", "--all"],
    ["--algebra", "A2", "--highest", "1,1", "--weight", "1,1,1"],
])
def test_c6_malformed_cli(args):
    proc = subprocess.run([sys.executable, "-m", "berezinmult", *args],
                          capture_output=True, text=True)
    assert proc.returncode == 2


@C6
@pytest.mark.parametrize("spec,lam", SWEEP)
def test_c6_verify_sweeps_exit_0(spec, lam):
    argv = ["--algebra", str(spec), "--highest", ",".join(map(str, lam)), "--all", "--verify"]
    assert execute(parse_request(argv), io.StringIO()) == 0
