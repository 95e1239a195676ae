"""Real-root isolation (Sturm sequences) and rational-root extraction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .poly import Poly, as_fraction, poly_gcd

DEFAULT_PRECISION = Fraction(1, 10**9)


@dataclass(frozen=True)
class RootInterval:
    """A real root known to lie in ``[lo, hi]``; ``lo == hi`` means exact."""

    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def approx(self) -> float:
        return float((self.lo + self.hi) / 2)

    @property
    def exact(self) -> Fraction | None:
        return self.lo if self.lo == self.hi else None


def square_free_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``p = lc · ∏ s_k^k`` with the ``s_k`` square-free and coprime.

    Only factors of positive degree are returned.
    """
    if p.degree <= 0:
        return []
    p = p.monic()
    dp = p.deriv()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.deriv()
    out: list[tuple[Poly, int]] = []
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, k))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.deriv()
        k += 1
    return out


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, p.deriv()]
    while not seq[-1].is_zero():
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _sign_changes(seq: list[Poly], x: Fraction) -> int:
    changes = 0
    last = 0
    for q in seq:
        v = q.eval(x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            changes += 1
        last = s
    return changes


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: every root has absolute value below this."""
    lc = abs(p.lc)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


def _isolate(s: Poly, precision: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the distinct real roots of square-free ``s``."""
    seq = sturm_sequence(s)
    bound = root_bound(s)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound, _sign_changes(seq, -bound) - _sign_changes(seq, bound))]
    while stack:
        lo, hi, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append(_refine(s, lo, hi, precision))
            continue
        mid = (lo + hi) / 2
        vm = _sign_changes(seq, mid)
        stack.append((mid, hi, vm - _sign_changes(seq, hi)))
        stack.append((lo, mid, _sign_changes(seq, lo) - vm))
    out.sort()
    return out


def _refine(s: Poly, lo: Fraction, hi: Fraction, precision: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink ``(lo, hi]`` holding exactly one simple root to width ≤ precision."""
    fhi = s.eval(hi)
    if fhi == 0:
        return hi, hi
    while hi - lo > precision:
        mid = (lo + hi) / 2
        fm = s.eval(mid)
        if fm == 0:
            return mid, mid
        if (fm > 0) == (fhi > 0):
            hi, fhi = mid, fm
        else:
            lo = mid
    return lo, hi


def real_roots(p: Poly, precision=DEFAULT_PRECISION) -> list[RootInterval]:
    """All real roots of ``p`` with multiplicities, isolated to width ≤ precision."""
    precision = as_fraction(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    found: list[RootInterval] = []
    for factor, mult in square_free_decomposition(p):
        for lo, hi in _isolate(factor, precision):
            found.append(RootInterval(lo, hi, mult))
    found.sort(key=lambda r: (r.lo, r.hi))
    return found


def _rational_roots_squarefree(s: Poly) -> list[Fraction]:
    ints, _ = s.primitive_integer()
    a = abs(ints[-1])
    # a rational root p/q has q | a; fractions with denominator ≤ a are 1/a² apart
    width = Fraction(1, 4 * a * a)
    roots = []
    for lo, hi in _isolate(s, width):
        if lo == hi:
            roots.append(lo)
            continue
        cand = ((lo + hi) / 2).limit_denominator(a)
        if s.eval(cand) == 0:
            roots.append(cand)
    return roots


def rational_roots(p: Poly) -> list[tuple[Fraction, int]]:
    """Rational roots of ``p`` with multiplicities, ascending."""
    out = []
    for factor, mult in square_free_decomposition(p):
        for r in _rational_roots_squarefree(factor):
            out.append((r, mult))
    out.sort()
    return out


def factor_rational(p: Poly) -> tuple[list[tuple[Fraction, int]], Poly]:
    """Split off rational linear factors: ``p = lc · ∏(λ - r)^k · rest``.

    ``rest`` is monic with no rational root.
    """
    roots = rational_roots(p)
    rest = p.monic()
    for r, k in roots:
        rest = rest.exact_div(Poly.linear(r) ** k)
    return roots, rest


def is_rational_square(x: Fraction) -> Fraction | None:
    """The non-negative rational square root of ``x`` if it exists."""
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None
