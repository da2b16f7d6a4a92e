"""Exact sesquilinear polynomial arithmetic and rational linear algebra.

A :class:`SesquiPoly` is a sparse polynomial in ``D`` holomorphic variables
``z1..zD`` and ``D`` antiholomorphic variables ``w1..wD`` (``w`` stands for
the conjugate coordinate).  Coefficients are :class:`fractions.Fraction`, so
every computation in this module is exact.

Rational matrices are plain nested sequences of ``Fraction``; polynomial
matrices are :class:`PolyMatrix` instances.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial, lcm
from typing import Iterable, Mapping, NamedTuple, Sequence

Rational = Fraction
RationalMatrix = Sequence[Sequence[Fraction]]


class DimensionError(ValueError):
    """Operands live in polynomial rings with different variable counts."""


class PreconditionError(ValueError):
    """An operation was called on input violating its precondition."""


class Monomial(NamedTuple):
    zeta: tuple[int, ...]
    zbar: tuple[int, ...]

    def conj(self) -> "Monomial":
        return Monomial(self.zbar, self.zeta)

    def __mul__(self, other):  # type: ignore[override]
        return Monomial(
            tuple(a + b for a, b in zip(self.zeta, other.zeta)),
            tuple(a + b for a, b in zip(self.zbar, other.zbar)),
        )


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient {c!r} is not an exact rational")


class SesquiPoly:
    """Sparse polynomial in ``z1..zD`` and their conjugates ``w1..wD``.

    Instances are immutable; no stored coefficient is ever zero, so equality
    of two polynomials is equality of their term maps.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            mono = Monomial(tuple(mono[0]), tuple(mono[1]))
            if len(mono.zeta) != nvars or len(mono.zbar) != nvars:
                raise DimensionError(
                    f"monomial {mono} does not have {nvars} variable slots")
            c = clean.get(mono, Fraction(0)) + _as_fraction(coeff)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "SesquiPoly":
        # terms must already be canonical
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "SesquiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, value=1) -> "SesquiPoly":
        c = _as_fraction(value)
        if not c:
            return cls.zero(nvars)
        return cls._raw(nvars, {Monomial((0,) * nvars, (0,) * nvars): c})

    @classmethod
    def zeta(cls, nvars: int, index: int) -> "SesquiPoly":
        """The holomorphic coordinate ``z{index+1}``."""
        e = [0] * nvars
        e[index] = 1
        return cls._raw(nvars, {Monomial(tuple(e), (0,) * nvars): Fraction(1)})

    @classmethod
    def zbar(cls, nvars: int, index: int) -> "SesquiPoly":
        """The antiholomorphic coordinate ``w{index+1}``."""
        return cls.zeta(nvars, index).conj()

    # -- accessors --------------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, zeta: Sequence[int], zbar: Sequence[int]) -> Fraction:
        return self._terms.get(Monomial(tuple(zeta), tuple(zbar)), Fraction(0))

    def constant_term(self) -> Fraction:
        z = (0,) * self.nvars
        return self.coefficient(z, z)

    def is_constant(self) -> bool:
        z = (0,) * self.nvars
        return all(m == (z, z) for m in self._terms)

    def degree_bounds(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Per-variable maximal exponents ``(zeta_max, zbar_max)``."""
        zmax = [0] * self.nvars
        wmax = [0] * self.nvars
        for m in self._terms:
            for i in range(self.nvars):
                zmax[i] = max(zmax[i], m.zeta[i])
                wmax[i] = max(wmax[i], m.zbar[i])
        return tuple(zmax), tuple(wmax)

    def total_degree(self) -> int:
        return max((sum(m.zeta) + sum(m.zbar) for m in self._terms), default=0)

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "SesquiPoly":
        if isinstance(other, SesquiPoly):
            if other.nvars != self.nvars:
                raise DimensionError(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return SesquiPoly.const(self.nvars, other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SesquiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SesquiPoly._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SesquiPoly):
            try:
                c = _as_fraction(other)
            except TypeError:
                return NotImplemented
            if not c:
                return SesquiPoly.zero(self.nvars)
            return SesquiPoly._raw(self.nvars, {m: c * v for m, v in self._terms.items()})
        return sesqui_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _as_fraction(other)
        return self * (1 / c)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only natural-number powers are defined")
        result = SesquiPoly.const(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conj(self) -> "SesquiPoly":
        """Formal conjugate: swap every zeta exponent vector with its zbar one."""
        return SesquiPoly._raw(self.nvars, {m.conj(): c for m, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, SesquiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            return self == SesquiPoly.const(self.nvars, other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items())

    def render(self) -> str:
        """Canonical dump format, one term per line.

        Terms are sorted lexicographically by ``(zeta, zbar)`` exponents and
        written as ``p/q * z1^a1 ... * w1^b1 ...`` with zero exponents omitted.
        """
        if not self._terms:
            return "0/1"
        return "\n".join(render_term(m, c) for m, c in self.sorted_terms())

    def __repr__(self):
        if not self._terms:
            return "SesquiPoly(0)"
        body = " + ".join(render_term(m, c) for m, c in self.sorted_terms())
        return f"SesquiPoly({body})"


def render_monomial(mono: Monomial) -> str:
    """``z1^a1 * ... * w1^b1 * ...``; the empty monomial renders as ``1``."""
    factors = [f"z{i + 1}^{e}" for i, e in enumerate(mono.zeta) if e]
    factors += [f"w{i + 1}^{e}" for i, e in enumerate(mono.zbar) if e]
    return " * ".join(factors) if factors else "1"


def render_term(mono: Monomial, coeff: Fraction) -> str:
    head = f"{coeff.numerator}/{coeff.denominator}"
    if not any(mono.zeta) and not any(mono.zbar):
        return head
    return f"{head} * {render_monomial(mono)}"


def sesqui_mul(a: SesquiPoly, b: SesquiPoly) -> SesquiPoly:
    """Exact product of two sesquilinear polynomials."""
    if a.nvars != b.nvars:
        raise DimensionError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    out: dict[Monomial, Fraction] = {}
    bt = list(b._terms.items())
    for ma, ca in a._terms.items():
        za, wa = ma
        for mb, cb in bt:
            key = Monomial(tuple(x + y for x, y in zip(za, mb[0])),
                           tuple(x + y for x, y in zip(wa, mb[1])))
            out[key] = out.get(key, 0) + ca * cb
    return SesquiPoly._raw(a.nvars, {m: c for m, c in out.items() if c})


# ---------------------------------------------------------------------------
# polynomial matrices


class PolyMatrix:
    """Dense square matrix of :class:`SesquiPoly` entries."""

    __slots__ = ("nvars", "rows")

    def __init__(self, nvars: int, rows: Sequence[Sequence]):
        self.nvars = nvars
        n = len(rows)
        built = []
        for row in rows:
            if len(row) != n:
                raise PreconditionError("polynomial matrices must be square")
            built.append(tuple(
                e if isinstance(e, SesquiPoly) else SesquiPoly.const(nvars, e)
                for e in row))
        for row in built:
            for e in row:
                if e.nvars != nvars:
                    raise DimensionError("entry variable count mismatch")
        self.rows = tuple(built)

    @classmethod
    def identity(cls, nvars: int, n: int) -> "PolyMatrix":
        return cls(nvars, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_rational(cls, nvars: int, m: RationalMatrix) -> "PolyMatrix":
        return cls(nvars, [[Fraction(x) for x in row] for row in m])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.nvars == other.nvars
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.nvars, self.rows))

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        return PolyMatrix(self.nvars, [[a + b for a, b in zip(r, s)]
                                       for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        return PolyMatrix(self.nvars, [[a - b for a, b in zip(r, s)]
                                       for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> "PolyMatrix":
        return PolyMatrix(self.nvars, [[e * c for e in r] for r in self.rows])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check(other)
        n = self.size
        zero = SesquiPoly.zero(self.nvars)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.nvars, out)

    def _check(self, other):
        if self.nvars != other.nvars:
            raise DimensionError("variable count mismatch")
        if self.size != other.size:
            raise PreconditionError("matrix size mismatch")

    def is_strictly_upper(self) -> bool:
        return all(not self.rows[i][j] for i in range(self.size) for j in range(i + 1))

    def __repr__(self):
        return f"PolyMatrix({[[repr(e) for e in r] for r in self.rows]})"


def nilpotent_exp(n: PolyMatrix) -> PolyMatrix:
    """``sum(N**k / k!)`` for a strictly upper triangular ``N``."""
    if not n.is_strictly_upper():
        raise PreconditionError("nilpotent_exp needs a strictly upper triangular matrix")
    size = n.size
    result = PolyMatrix.identity(n.nvars, size)
    power = PolyMatrix.identity(n.nvars, size)
    for k in range(1, size):
        power = power @ n
        result = result + power.scale(Fraction(1, factorial(k)))
    return result


def conj_transpose(m: PolyMatrix) -> PolyMatrix:
    n = m.size
    return PolyMatrix(m.nvars, [[m.rows[j][i].conj() for j in range(n)] for i in range(n)])


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def poly_det(m: PolyMatrix) -> SesquiPoly:
    """Exact determinant by Leibniz expansion (matrices up to 8x8)."""
    n = m.size
    if n > 8:
        raise PreconditionError("poly_det is limited to matrices of size <= 8")
    total = SesquiPoly.zero(m.nvars)
    if n == 0:
        return SesquiPoly.const(m.nvars, 1)
    for p in permutations(range(n)):
        factors = [m.rows[i][p[i]] for i in range(n)]
        if not all(factors):
            continue
        prod = factors[0]
        for f in factors[1:]:
            prod = prod * f
        total = total + prod * _perm_sign(p)
    return total


# ---------------------------------------------------------------------------
# rational matrices


def to_rational_matrix(m) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in m]


def transpose(m: RationalMatrix) -> list[list[Fraction]]:
    return [list(col) for col in zip(*m)] if m else []


def is_symmetric(m: RationalMatrix) -> bool:
    n = len(m)
    return all(len(row) == n for row in m) and all(
        m[i][j] == m[j][i] for i in range(n) for j in range(i))


def rational_rank(m: RationalMatrix) -> int:
    """Exact rank by fraction-free (Bareiss) elimination.

    Each row is first scaled by the lcm of its denominators, which leaves the
    rank unchanged and puts the matrix over the integers.
    """
    rows = []
    for row in m:
        row = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * scale) for x in row])
    if not rows or not rows[0]:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for r in range(min(nrows, ncols)):
        # pivot search over the remaining submatrix; column swaps allowed
        pivot = next(((i, j) for j in range(r, ncols) for i in range(r, nrows)
                      if rows[i][j]), None)
        if pivot is None:
            break
        pi, pj = pivot
        rows[r], rows[pi] = rows[pi], rows[r]
        if pj != r:
            for row in rows:
                row[r], row[pj] = row[pj], row[r]
        p = rows[r][r]
        for i in range(r + 1, nrows):
            ri = rows[i]
            f = ri[r]
            for j in range(r + 1, ncols):
                # exact division is guaranteed by Sylvester's identity
                ri[j] = (p * ri[j] - f * rows[r][j]) // prev
            ri[r] = 0
        prev = p
        rank += 1
    return rank


def char_poly(m: RationalMatrix) -> list[Fraction]:
    """Coefficients of ``det(tI - M)`` in descending degree (Faddeev-LeVerrier)."""
    n = len(m)
    if not is_symmetric(m):
        raise PreconditionError("char_poly expects a square symmetric matrix")
    a = to_rational_matrix(m)
    coeffs = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]  # M_0 = 0
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I ; c_k = -tr(A M_k)/k
        prod = matmul(a, mk)
        c_prev = coeffs[-1]
        mk = [[prod[i][j] + (c_prev if i == j else 0) for j in range(n)] for i in range(n)]
        am = matmul(a, mk)
        coeffs.append(-sum(am[i][i] for i in range(n)) / k)
    return coeffs


def psd_certificate(m: RationalMatrix) -> bool:
    """True iff the symmetric matrix ``m`` is positive semidefinite.

    For a real symmetric matrix all eigenvalues are real, so PSD is equivalent
    to the coefficients of ``det(tI - M)`` alternating in sign (zeros allowed
    only as a trailing block).
    """
    coeffs = char_poly(m)
    seen_zero = False
    for k, c in enumerate(coeffs):
        if c == 0:
            seen_zero = True
            continue
        if seen_zero:
            return False
        if (c > 0) != (k % 2 == 0):
            return False
    return True


def rank_from_char_poly(coeffs: Sequence[Fraction]) -> int:
    n = len(coeffs) - 1
    trailing = 0
    for c in reversed(coeffs):
        if c:
            break
        trailing += 1
    return n - trailing


def matmul(a: RationalMatrix, b: RationalMatrix) -> list[list[Fraction]]:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def inverse(m: RationalMatrix) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over the rationals."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(n: int, m: int | None = None) -> list[list[Fraction]]:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def commutator(a: RationalMatrix, b: RationalMatrix) -> list[list[Fraction]]:
    ab, ba = matmul(a, b), matmul(b, a)
    return [[x - y for x, y in zip(r, s)] for r, s in zip(ab, ba)]


def is_diagonal(m: RationalMatrix) -> bool:
    return all(not m[i][j] for i in range(len(m)) for j in range(len(m)) if i != j)
