"""The A_α matrix ``αD + (1-α)A``, its characteristic polynomial and coronals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph
from .linalg import RatMatrix, charpoly_exact, det_poly_matrix
from .poly import LAMBDA, Poly, RatFunc, as_fraction


@dataclass(frozen=True)
class AlphaParam:
    value: Fraction

    def __post_init__(self):
        v = as_fraction(self.value)
        if not 0 <= v <= 1:
            raise ValueError(f"alpha must lie in [0, 1], got {v}")
        object.__setattr__(self, "value", v)

    def __str__(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}"


def as_alpha(alpha) -> Fraction:
    """Accept an AlphaParam, Fraction, int or ``"p/q"`` string; return the checked value."""
    if isinstance(alpha, AlphaParam):
        return alpha.value
    return AlphaParam(as_fraction(alpha)).value


def alpha_matrix(g: Graph, alpha) -> RatMatrix:
    a = as_alpha(alpha)
    off = 1 - a
    degs = g.degrees
    rows = []
    for i in range(g.n):
        nb = g.neighbors(i)
        rows.append([a * degs[i] if i == j else (off if j in nb else 0) for j in range(g.n)])
    return RatMatrix(rows)


def alpha_charpoly(g: Graph, alpha) -> Poly:
    """``det(λI - A_α(G))``; the direct oracle every closed form is checked against."""
    return charpoly_exact(alpha_matrix(g, alpha))


def adjacency_charpoly(g: Graph) -> Poly:
    return charpoly_exact(g.adjacency())


def signless_laplacian_charpoly(g: Graph) -> Poly:
    return charpoly_exact(g.degree_matrix() + g.adjacency())


def coronal(g: Graph, alpha) -> RatFunc:
    """``1ᵀ((λ-α)I - A_α(G))⁻¹ 1``.

    Uses ``det(M + J) = det(M) + 1ᵀ adj(M) 1`` with ``M = (λ-α)I - A_α``, so
    the coronal is ``(det(M+J) - det(M)) / det(M)``.
    """
    a = as_alpha(alpha)
    n = g.n
    if n == 0:
        return RatFunc(Poly())
    A = alpha_matrix(g, a).rows

    def m_at(x: Fraction, plus_j: bool) -> RatMatrix:
        shift = x - a
        extra = 1 if plus_j else 0
        return RatMatrix(
            [(shift if i == j else 0) - A[i][j] + extra for j in range(n)] for i in range(n)
        )

    det_mj = det_poly_matrix(lambda x: m_at(x, True), n, n)
    det_m = det_poly_matrix(lambda x: m_at(x, False), n, n)
    return RatFunc(det_mj - det_m, det_m)


def coronal_regular(n: int, r: int, alpha) -> RatFunc:
    """Coronal of an ``r``-regular graph of order ``n``: ``n / (λ - r - α)``."""
    a = as_alpha(alpha)
    if n < 1 or not 0 <= r <= n - 1:
        raise ValueError(f"need n >= 1 and 0 <= r <= n-1, got n={n}, r={r}")
    return RatFunc(Poly([n]), LAMBDA - r - a)


def coronal_complete_bipartite(p: int, q: int, alpha, *, shifted: bool = False) -> RatFunc:
    """Closed-form coronal of ``K_{p,q}``.

    Returns ``((p+q)λ - α(p+q)² + 2pq) / (λ² - α(p+q)λ + (2α-1)pq)``.  This is
    the entry sum of ``(λI - A_α)⁻¹``, so it equals ``coronal(K_{p,q}, α)``
    only at α = 0.  The coronal proper uses ``(λ-α)I - A_α``; ``shifted=True``
    returns that, i.e. the same expression evaluated at ``λ - α``.
    """
    a = as_alpha(alpha)
    if p < 1 or q < 1:
        raise ValueError("complete bipartite parts must be non-empty")
    s = p + q
    num = Poly([-a * s * s + 2 * p * q, s])
    den = Poly([(2 * a - 1) * p * q, -a * s, 1])
    if shifted:
        num, den = num.shift(a), den.shift(a)
    return RatFunc(num, den)
