"""Exact dense linear algebra over the rationals.

Determinants use fraction-free (Bareiss) elimination on an integer-scaled copy;
characteristic polynomials use Faddeev-LeVerrier on the same scaled copy, so
the inner loops run on Python ints.  Polynomial determinants are obtained by
evaluation at rational points followed by interpolation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import count
from math import lcm
from typing import Callable, Iterable, Iterator, Sequence

from .errors import DegreeBoundError, PoleError
from .poly import Poly, as_fraction


class RatMatrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        rs = tuple(tuple(as_fraction(v) for v in r) for r in rows)
        ncols = len(rs[0]) if rs else 0
        if any(len(r) != ncols for r in rs):
            raise ValueError("ragged matrix")
        self.rows = rs
        self.nrows = len(rs)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int, scale=1) -> RatMatrix:
        s = as_fraction(scale)
        return cls([[s if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> RatMatrix:
        return cls([[0] * c for _ in range(r)])

    @classmethod
    def diag(cls, values: Sequence) -> RatMatrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in r) for r in self.rows)
        return f"RatMatrix([{body}])"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    @property
    def T(self) -> RatMatrix:
        return RatMatrix(zip(*self.rows)) if self.nrows else RatMatrix.zeros(self.ncols, 0)

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def __add__(self, other: RatMatrix) -> RatMatrix:
        _same_shape(self, other)
        return RatMatrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        _same_shape(self, other)
        return RatMatrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def __neg__(self) -> RatMatrix:
        return RatMatrix([-v for v in r] for r in self.rows)

    def __mul__(self, scalar) -> RatMatrix:
        s = as_fraction(scalar)
        return RatMatrix([v * s for v in r] for r in self.rows)

    __rmul__ = __mul__

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        return RatMatrix(
            [sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols]
            for r in self.rows
        )

    def kron(self, other: RatMatrix) -> RatMatrix:
        return RatMatrix(
            [a * b for a in ra for b in rb] for ra in self.rows for rb in other.rows
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> RatMatrix:
        return RatMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def det(self) -> Fraction:
        return det(self)

    def charpoly(self) -> Poly:
        return charpoly_exact(self)

    def solve(self, rhs: RatMatrix) -> RatMatrix:
        return solve(self, rhs)

    def inverse(self) -> RatMatrix:
        return solve(self, RatMatrix.identity(self.nrows))


def block(blocks: Sequence[Sequence[RatMatrix]]) -> RatMatrix:
    """Assemble a block matrix from a grid of conforming blocks."""
    rows: list[list[Fraction]] = []
    for brow in blocks:
        height = brow[0].nrows
        for b in brow:
            if b.nrows != height:
                raise ValueError("non-conforming block row")
        for i in range(height):
            rows.append([v for b in brow for v in b.rows[i]])
    return RatMatrix(rows)


def block_diag(mats: Sequence[RatMatrix]) -> RatMatrix:
    n = sum(m.nrows for m in mats)
    out = [[Fraction(0)] * n for _ in range(n)]
    off = 0
    for m in mats:
        for i, r in enumerate(m.rows):
            out[off + i][off : off + m.ncols] = r
        off += m.nrows
    return RatMatrix(out)


def _same_shape(a: RatMatrix, b: RatMatrix) -> None:
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def _scaled_int(m: RatMatrix) -> tuple[list[list[int]], int]:
    """Integer matrix ``N`` and common denominator ``d`` with ``m = N / d``."""
    d = lcm(1, *(v.denominator for r in m.rows for v in r))
    return [[int(v * d) for v in r] for r in m.rows], d


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    if n == 0:
        return 1
    a = [r[:] for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det(m: RatMatrix) -> Fraction:
    """Exact determinant."""
    if not m.is_square():
        raise ValueError(f"determinant of non-square {m.shape} matrix")
    n = m.nrows
    # scale each row separately to keep integers small
    ints, scale = [], Fraction(1)
    for r in m.rows:
        d = lcm(1, *(v.denominator for v in r))
        ints.append([int(v * d) for v in r])
        scale /= d
    return _bareiss(ints) * scale if n else Fraction(1)


def charpoly_exact(m: RatMatrix) -> Poly:
    """``det(λI - M)`` by Faddeev-LeVerrier on an integer-scaled copy.

    With ``M = N/d``: ``f_M(λ) = d^{-n} f_N(dλ)``; the recurrence for ``N``
    has exact integer divisions.
    """
    if not m.is_square():
        raise ValueError(f"characteristic polynomial of non-square {m.shape} matrix")
    n = m.nrows
    if n == 0:
        return Poly([1])
    N, d = _scaled_int(m)
    c = [0] * (n + 1)
    c[n] = 1
    Mk = [[0] * n for _ in range(n)]
    colsN = None
    for k in range(1, n + 1):
        # Mk <- N @ Mk + c[n-k+1] I
        if k == 1:
            Mk = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        else:
            colsM = list(zip(*Mk))
            prod = [[sum(a * b for a, b in zip(r, col) if a) for col in colsM] for r in N]
            ck = c[n - k + 1]
            for i in range(n):
                prod[i][i] += ck
            Mk = prod
        # trace(N @ Mk)
        if colsN is None:
            colsN = list(zip(*N))
        tr = 0
        for i in range(n):
            Mrow = Mk[i]
            tr += sum(a * b for a, b in zip(Mrow, colsN[i]) if a)
        q, r = divmod(-tr, k)
        assert r == 0, "Faddeev-LeVerrier division must be exact over Z"
        c[n - k] = q
    return Poly(Fraction(c[k], d ** (n - k)) for k in range(n + 1))


def solve(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Solve ``a X = b`` by Gauss-Jordan elimination; singular ``a`` raises PoleError."""
    if not a.is_square() or a.nrows != b.nrows:
        raise ValueError("incompatible system")
    n = a.nrows
    w = b.ncols
    aug = [list(ra) + list(rb) for ra, rb in zip(a.rows, b.rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise PoleError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        prow = [v / p for v in aug[col]]
        aug[col] = prow
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], prow)]
    return RatMatrix(r[n : n + w] for r in aug)


def evaluation_points() -> Iterator[Fraction]:
    """0, 1, -1, 2, -2, ..."""
    yield Fraction(0)
    for k in count(1):
        yield Fraction(k)
        yield Fraction(-k)


def interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> Poly:
    """Interpolating polynomial through the given points (Newton divided differences)."""
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = Poly([coef[-1]]) if coef else Poly()
    for i in range(n - 2, -1, -1):
        out = out * Poly([-xs[i], 1]) + coef[i]
    return out


def det_poly_matrix(
    entries: Callable[[Fraction], RatMatrix],
    order: int,
    degree_bound: int,
    checks: int = 1,
) -> Poly:
    """Determinant of a polynomial matrix by evaluation and interpolation.

    ``entries(x)`` returns the scalar matrix at ``λ = x``.  Points where it
    raises ZeroDivisionError are skipped.  ``checks`` extra points guard the
    degree bound.
    """
    if degree_bound < 0:
        raise ValueError("degree_bound must be non-negative")
    xs: list[Fraction] = []
    ys: list[Fraction] = []
    needed = degree_bound + 1 + checks
    for x in evaluation_points():
        try:
            m = entries(x)
        except ZeroDivisionError:
            continue
        if m.shape != (order, order):
            raise ValueError(f"entries({x}) has shape {m.shape}, expected {order}x{order}")
        xs.append(x)
        ys.append(det(m))
        if len(xs) == needed:
            break
    p = interpolate(xs[: degree_bound + 1], ys[: degree_bound + 1])
    for x, y in zip(xs[degree_bound + 1 :], ys[degree_bound + 1 :]):
        if p.eval(x) != y:
            raise DegreeBoundError(f"determinant exceeds degree bound {degree_bound}")
    return p


def sylvester(f: Sequence[Fraction], g: Sequence[Fraction]) -> RatMatrix:
    """Sylvester matrix of coefficient lists (ascending) with formal degrees
    ``len(f) - 1`` and ``len(g) - 1``."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    if size == 0:
        return RatMatrix([])
    fr = list(reversed(f))
    gr = list(reversed(g))
    rows = []
    for i in range(n):
        rows.append([0] * i + fr + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gr + [0] * (size - n - 1 - i))
    return RatMatrix(rows)


def resultant(f: Poly, g: Poly) -> Fraction:
    """``Res(f, g) = lc(f)^deg g · ∏_{f(x)=0} g(x)``."""
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    if f.degree == 0 and g.degree == 0:
        return Fraction(1)
    return det(sylvester(f.coeffs, g.coeffs))


def resultant_in_lambda(f: Poly, g_coeffs: Sequence[Poly]) -> Poly:
    """``Res_μ(f(μ), g(λ, μ))`` where ``g = Σ_k g_coeffs[k](λ) μ^k``.

    The formal μ-degree of ``g`` is ``len(g_coeffs) - 1`` regardless of
    cancellation at particular λ.  Computed by evaluating the Sylvester
    determinant in λ and interpolating.
    """
    m = f.degree
    n = len(g_coeffs) - 1
    bound = m * max((c.degree for c in g_coeffs), default=0)
    bound = max(bound, 0)

    def at(x: Fraction) -> RatMatrix:
        return sylvester(f.coeffs, [c.eval(x) for c in g_coeffs])

    if m + n == 0:
        return Poly([1])
    return det_poly_matrix(at, m + n, bound)
