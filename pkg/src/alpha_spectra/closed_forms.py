"""Closed-form A_α characteristic polynomials of generalized coronas.

Every function here returns an exact :class:`Poly` assembled from the pieces
of the factorization (component polynomials, coronals, the base graph), never
from the product graph itself.  Comparing against
:func:`alpha_spectra.alpha.alpha_charpoly` of the constructed product is the
test oracle.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .alpha import (
    alpha_charpoly,
    alpha_matrix,
    as_alpha,
    coronal,
    coronal_complete_bipartite,
    coronal_regular,
)
from .corona import generalized_corona
from .errors import HypothesisError, IdentityViolation
from .graphs import (
    BipartitionInfo,
    Graph,
    complete_bipartite,
    regular_degree,
    semiregular_bipartition,
    two_coloring,
)
from .linalg import RatMatrix, charpoly_exact, det_poly_matrix
from .poly import LAMBDA, ONE, Poly, RatFunc

CoronalProvider = Callable[[Graph, Fraction], RatFunc]


def clear_to_poly(r: RatFunc) -> Poly:
    """The polynomial ``r`` must be; a nonzero remainder is an identity violation."""
    return r.num.exact_div(r.den)


def _product(polys) -> Poly:
    out = ONE
    for p in polys:
        out = out * p
    return out


# -- arbitrary components ------------------------------------------------------

def g_alpha(g: Graph, coronals: Sequence[RatFunc], orders: Sequence[int], alpha) -> RatFunc:
    """``det(diag(λ - α t_i - (1-α)² χ_i) - A_α(G))`` as a reduced rational function.

    Row ``i`` is multiplied by the denominator of ``χ_i`` so the matrix is
    polynomial; its determinant comes from evaluation-interpolation and is
    divided by the product of those denominators.
    """
    a = as_alpha(alpha)
    n = g.n
    if len(coronals) != n or len(orders) != n:
        raise ValueError(f"need {n} coronals and orders, got {len(coronals)} and {len(orders)}")
    for chi in coronals:
        if chi.den.is_zero():
            raise ValueError("degenerate coronal")
    A = alpha_matrix(g, a).rows
    w = (1 - a) ** 2
    diag_polys = []
    bound = 0
    for i in range(n):
        chi = coronals[i]
        d = (LAMBDA - a * orders[i]) * chi.den - chi.num * w
        diag_polys.append(d)
        bound += max(d.degree, chi.den.degree, 0)

    def at(x: Fraction) -> RatMatrix:
        rows = []
        for i in range(n):
            di = coronals[i].den.eval(x)
            rows.append(
                [diag_polys[i].eval(x) - A[i][i] * di if i == j else -A[i][j] * di for j in range(n)]
            )
        return RatMatrix(rows)

    if n == 0:
        return RatFunc(ONE)
    num = det_poly_matrix(at, n, bound)
    return RatFunc(num, _product(chi.den for chi in coronals))


def thm31_charpoly(g: Graph, components: Sequence[Graph], alpha) -> Poly:
    """``∏ f_{A_α(H_i)}(λ - α) · g_α(χ_1, ..., χ_n; G)`` cleared to a polynomial."""
    a = as_alpha(alpha)
    if len(components) != g.n:
        raise ValueError(f"need {g.n} components, got {len(components)}")
    pre = _product(alpha_charpoly(h, a).shift(a) for h in components)
    chis = [coronal(h, a) for h in components]
    ga = g_alpha(g, chis, [h.n for h in components], a)
    return clear_to_poly(ga * pre)


def _composite_argument(q: int, chi: RatFunc, a: Fraction) -> RatFunc:
    """``λ - α q - (1-α)² χ(λ)``."""
    return RatFunc(LAMBDA - a * q) - chi * ((1 - a) ** 2)


def cor31_corona_charpoly(g: Graph, h: Graph, alpha) -> Poly:
    """Corona ``G ∘ H``: ``f_{A_α(H)}(λ-α)^n · f_{A_α(G)}(λ - α n' - (1-α)² χ_H(λ))``."""
    a = as_alpha(alpha)
    pre = alpha_charpoly(h, a).shift(a) ** g.n
    arg = _composite_argument(h.n, coronal(h, a), a)
    return clear_to_poly(alpha_charpoly(g, a).eval(arg) * pre)


def cor32_uniform(
    g: Graph,
    components: Sequence[Graph],
    alpha,
    coronal_provider: CoronalProvider | None = None,
) -> Poly:
    """Components of one common order and one common coronal χ:
    ``∏ f_{A_α(H_i)}(λ-α) · f_{A_α(G)}(λ - α q - (1-α)² χ(λ))``."""
    a = as_alpha(alpha)
    provider = coronal_provider or coronal
    if len(components) != g.n:
        raise ValueError(f"need {g.n} components, got {len(components)}")
    if not components:
        return alpha_charpoly(g, a)
    orders = {h.n for h in components}
    if len(orders) != 1:
        raise HypothesisError(f"components have different orders {sorted(orders)}")
    chis = [provider(h, a) for h in components]
    if any(c != chis[0] for c in chis[1:]):
        raise HypothesisError("components have different coronals")
    pre = _product(alpha_charpoly(h, a).shift(a) for h in components)
    arg = _composite_argument(orders.pop(), chis[0], a)
    return clear_to_poly(alpha_charpoly(g, a).eval(arg) * pre)


def regular_coronal(h: Graph, alpha) -> RatFunc:
    """Coronal of a regular graph by the ``n/(λ - r - α)`` closed form."""
    r = regular_degree(h)
    if r is None:
        raise HypothesisError("component is not regular")
    return coronal_regular(h.n, r, alpha)


# -- semiregular bipartite base -----------------------------------------------

def _bipartition(g: Graph, bip: BipartitionInfo | None) -> BipartitionInfo:
    if bip is None:
        bip = semiregular_bipartition(g)
        if bip is None or g.m == 0:
            raise HypothesisError("base graph is not semiregular bipartite")
    else:
        try:
            bip.check(g)
        except AssertionError as exc:
            raise HypothesisError(f"invalid bipartition: {exc}") from None
    return bip


def biadjacency(g: Graph, bip: BipartitionInfo) -> RatMatrix:
    """The ``p × (n-p)`` block ``W`` with ``A(G) = [[0, W], [Wᵀ, 0]]`` in (P, Q) order."""
    return RatMatrix([[1 if g.has_edge(i, j) else 0 for j in bip.Q] for i in bip.P])


def lw_polys(g: Graph, bip: BipartitionInfo | None = None) -> tuple[Poly, Poly]:
    """``L(y) = det(yI_p - WWᵀ)`` and ``H(y) = det(yI_{n-p} - WᵀW)``.

    With ``y = λ²``: ``f_A(λ) = λ^{n-2p} L(λ²) = λ^{2p-n} H(λ²)``.
    """
    bip = _bipartition(g, bip)
    W = biadjacency(g, bip)
    return charpoly_exact(W @ W.T), charpoly_exact(W.T @ W)


def bipartite_parts(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Parts ``(P, Q)`` of any bipartite graph, ``|P| ≤ |Q|``; no degree condition."""
    color = two_coloring(g)
    if color is None:
        raise HypothesisError("graph is not bipartite")
    a = tuple(v for v in range(g.n) if color[v] == 0)
    b = tuple(v for v in range(g.n) if color[v] == 1)
    return (a, b) if len(a) <= len(b) else (b, a)


def bipartite_identity(g: Graph) -> bool:
    """Check ``f_A(λ) = λ^{n-2p} L(λ²)`` and ``λ^{n-2p} f_A(λ) = H(λ²)`` with ``p = |P| ≤ n/2``."""
    P, Q = bipartite_parts(g)
    W = RatMatrix([[1 if g.has_edge(i, j) else 0 for j in Q] for i in P])
    L = charpoly_exact(W @ W.T)
    # an empty P leaves W with no rows, so WᵀW is the zero matrix on Q
    H = charpoly_exact(W.T @ W) if P else LAMBDA ** len(Q)
    sq = LAMBDA**2
    f = charpoly_exact(g.adjacency())
    k = g.n - 2 * len(P)
    return f == LAMBDA**k * L.eval(sq) and LAMBDA**k * f == H.eval(sq)


def semiregular_corona(g: Graph, z1: Graph, z2: Graph, bip: BipartitionInfo | None = None):
    """Generalized corona with ``Z1`` on every P-vertex and ``Z2`` on every Q-vertex."""
    bip = _bipartition(g, bip)
    pset = set(bip.P)
    return generalized_corona(g, [z1 if v in pset else z2 for v in range(g.n)])


def _semiregular_assembly(
    g: Graph,
    bip: BipartitionInfo,
    prefactor: Poly,
    chi1: RatFunc,
    chi2: RatFunc,
    n1: int,
    n2: int,
    a: Fraction,
) -> tuple[Poly, Poly]:
    """Both displayed forms (via ``L`` and via ``H``), each cleared to a polynomial.

    The square root in the printed statement is never formed: ``L`` and ``H``
    are polynomials in ``y = λ²``, so they are evaluated at
    ``y = a(λ)·b(λ)/(1-α)²`` directly.
    """
    if a == 1:
        raise HypothesisError("alpha = 1 puts (1 - alpha) in a denominator")
    n, p = g.n, bip.p
    w = (1 - a) ** 2
    A1 = RatFunc(LAMBDA - a * n1 - a * bip.r1) - chi1 * w
    B2 = RatFunc(LAMBDA - a * n2 - a * bip.r2) - chi2 * w
    y = A1 * B2 * (1 / w)
    L, H = lw_polys(g, bip)
    l_form = B2 ** (n - 2 * p) * (w**p) * L.eval(y) * prefactor
    h_form = A1 ** (2 * p - n) * (w ** (n - p)) * H.eval(y) * prefactor
    return clear_to_poly(l_form), clear_to_poly(h_form)


def _pick(forms: tuple[Poly, Poly], form: str) -> Poly:
    l_form, h_form = forms
    if form == "l":
        return l_form
    if form == "h":
        return h_form
    if form != "both":
        raise ValueError("form must be 'l', 'h' or 'both'")
    if l_form != h_form:
        raise IdentityViolation("L-form and H-form disagree")
    return l_form


def thm32_forms(
    g: Graph,
    z1: Graph,
    z2: Graph,
    alpha,
    coronal_provider: CoronalProvider | None = None,
    bip: BipartitionInfo | None = None,
) -> tuple[Poly, Poly]:
    """(L-form, H-form) for a semiregular bipartite base with ``Z1`` on P and ``Z2`` on Q."""
    a = as_alpha(alpha)
    bip = _bipartition(g, bip)
    provider = coronal_provider or coronal
    p, n = bip.p, g.n
    pre = alpha_charpoly(z1, a).shift(a) ** p * alpha_charpoly(z2, a).shift(a) ** (n - p)
    return _semiregular_assembly(g, bip, pre, provider(z1, a), provider(z2, a), z1.n, z2.n, a)


def thm32_semiregular_charpoly(
    g: Graph,
    z1: Graph,
    z2: Graph,
    alpha,
    coronal_provider: CoronalProvider | None = None,
    form: str = "both",
    bip: BipartitionInfo | None = None,
) -> Poly:
    return _pick(thm32_forms(g, z1, z2, alpha, coronal_provider, bip), form)


def cor35_charpoly(g: Graph, n1: int, n2: int, alpha, form: str = "both") -> Poly:
    """Edgeless components ``\\overline{K_{n1}}`` on P and ``\\overline{K_{n2}}`` on Q."""
    a = as_alpha(alpha)
    bip = _bipartition(g, None)
    p, n = bip.p, g.n
    pre = Poly.linear(a) ** (p * n1 + (n - p) * n2)
    chi1 = RatFunc(Poly([n1]), LAMBDA - a)
    chi2 = RatFunc(Poly([n2]), LAMBDA - a)
    return _pick(_semiregular_assembly(g, bip, pre, chi1, chi2, n1, n2, a), form)


def cor36_charpoly(g: Graph, z1: Graph, z2: Graph, alpha, form: str = "both") -> Poly:
    """Regular components: ``χ_i = n_i / (λ - α - r_i')``."""
    a = as_alpha(alpha)
    bip = _bipartition(g, None)
    r1p, r2p = regular_degree(z1), regular_degree(z2)
    if r1p is None or r2p is None:
        raise HypothesisError("Z1 and Z2 must be regular")
    p, n = bip.p, g.n
    pre = alpha_charpoly(z1, a).shift(a) ** p * alpha_charpoly(z2, a).shift(a) ** (n - p)
    chi1 = coronal_regular(z1.n, r1p, a)
    chi2 = coronal_regular(z2.n, r2p, a)
    return _pick(_semiregular_assembly(g, bip, pre, chi1, chi2, z1.n, z2.n, a), form)


def cor37_charpoly(
    g: Graph,
    part1: tuple[int, int],
    part2: tuple[int, int],
    alpha,
    form: str = "both",
    *,
    shifted: bool = False,
) -> Poly:
    """Complete bipartite components ``K_{p1,q1}`` on P and ``K_{p2,q2}`` on Q.

    The quantities ``a`` and ``b`` are built from the closed form of
    ``coronal_complete_bipartite``.  With the default ``shifted=False`` that
    is the unshifted expression, which agrees with the product graph only at
    α = 0 (elsewhere the cleared form usually leaves a remainder and
    ``IdentityViolation`` is raised).  ``shifted=True`` uses the coronal proper.
    """
    a = as_alpha(alpha)
    bip = _bipartition(g, None)
    z1, z2 = complete_bipartite(*part1), complete_bipartite(*part2)
    p, n = bip.p, g.n
    pre = alpha_charpoly(z1, a).shift(a) ** p * alpha_charpoly(z2, a).shift(a) ** (n - p)
    chi1 = coronal_complete_bipartite(*part1, a, shifted=shifted)
    chi2 = coronal_complete_bipartite(*part2, a, shifted=shifted)
    return _pick(_semiregular_assembly(g, bip, pre, chi1, chi2, z1.n, z2.n, a), form)


def cor38_charpoly(
    g: Graph,
    z1: Graph,
    part2: tuple[int, int],
    alpha,
    form: str = "both",
    *,
    shifted: bool = False,
) -> Poly:
    """Regular ``Z1`` on P, ``K_{p2,q2}`` on Q; ``shifted`` as for ``cor37_charpoly``."""
    a = as_alpha(alpha)
    bip = _bipartition(g, None)
    r1p = regular_degree(z1)
    if r1p is None:
        raise HypothesisError("Z1 must be regular")
    z2 = complete_bipartite(*part2)
    p, n = bip.p, g.n
    pre = alpha_charpoly(z1, a).shift(a) ** p * alpha_charpoly(z2, a).shift(a) ** (n - p)
    chi1 = coronal_regular(z1.n, r1p, a)
    chi2 = coronal_complete_bipartite(*part2, a, shifted=shifted)
    return _pick(_semiregular_assembly(g, bip, pre, chi1, chi2, z1.n, z2.n, a), form)


__all__ = [
    "clear_to_poly",
    "g_alpha",
    "thm31_charpoly",
    "cor31_corona_charpoly",
    "cor32_uniform",
    "regular_coronal",
    "biadjacency",
    "lw_polys",
    "semiregular_corona",
    "thm32_forms",
    "thm32_semiregular_charpoly",
    "cor35_charpoly",
    "cor36_charpoly",
    "cor37_charpoly",
    "cor38_charpoly",
]
