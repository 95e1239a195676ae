"""Generalized edge corona over a regular base with regular components of one order."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .alpha import adjacency_charpoly, alpha_charpoly, alpha_matrix, as_alpha
from .errors import HypothesisError, IdentityViolation, PoleError
from .graphs import Graph, incidence_matrix, regular_degree
from .linalg import RatMatrix, block_diag, resultant_in_lambda, solve
from .poly import ONE, Poly, as_fraction, fraction_str
from .roots import factor_rational, is_rational_square, real_roots, square_free_decomposition


@dataclass(frozen=True)
class EdgeHypotheses:
    r1: int
    q: int
    r2: int


def edge_hypotheses(g: Graph, components: Sequence[Graph]) -> EdgeHypotheses:
    """Check: base ``r1``-regular with ≥ 1 edge, every component ``r2``-regular of order ``q ≥ 1``."""
    r1 = regular_degree(g)
    if r1 is None:
        raise HypothesisError("base graph is not regular")
    if g.m == 0:
        raise HypothesisError("base graph has no edges")
    if len(components) != g.m:
        raise HypothesisError(f"need {g.m} components (one per edge), got {len(components)}")
    orders = {h.n for h in components}
    if len(orders) != 1 or 0 in orders:
        raise HypothesisError(f"components must share one positive order, got {sorted(orders)}")
    degs = {regular_degree(h) for h in components}
    if None in degs or len(degs) != 1:
        raise HypothesisError("components must all be regular of the same degree")
    return EdgeHypotheses(r1, orders.pop(), degs.pop())


def kron_incidence(g: Graph, q: int) -> RatMatrix:
    """``R ⊗ 1_qᵀ`` (``n × qm``)."""
    R = incidence_matrix(g).matrix()
    return R.kron(RatMatrix([[1] * q]))


def bridge_lhs(g: Graph, components: Sequence[Graph], alpha, lam) -> RatMatrix:
    """``(R⊗1ᵀ) ((λ-2α)I - A_α(H_1 ⊕ ... ⊕ H_m))⁻¹ (Rᵀ⊗1)`` at a rational λ."""
    a = as_alpha(alpha)
    lam = as_fraction(lam)
    q = components[0].n
    S = kron_incidence(g, q)
    blocks = block_diag([alpha_matrix(h, a) for h in components])
    k = blocks.nrows
    M = RatMatrix.identity(k, lam - 2 * a) - blocks
    try:
        X = solve(M, S.T)
    except PoleError:
        raise PoleError(f"λ = {lam} is an eigenvalue of the component block") from None
    return S @ X


def bridge_rhs(g: Graph, q: int, r1: int, r2: int, alpha, lam) -> RatMatrix:
    """``q / (λ - 2α - r2) · (A(G) + r1 I)``."""
    a = as_alpha(alpha)
    lam = as_fraction(lam)
    d = lam - 2 * a - r2
    if d == 0:
        raise PoleError(f"λ = {lam} is the pole 2α + r2")
    return (g.adjacency() + RatMatrix.identity(g.n, r1)) * (Fraction(q) / d)


def edge_bridge_identity_check(
    g: Graph, components: Sequence[Graph], alpha, samples: Iterable
) -> bool:
    """Exact check of the bridge identity at each sample λ."""
    h = edge_hypotheses(g, components)
    for lam in samples:
        rhs = bridge_rhs(g, h.q, h.r1, h.r2, alpha, lam)
        if bridge_lhs(g, components, alpha, lam) != rhs:
            return False
    return True


def kronecker_gram_check(g: Graph, q: int) -> bool:
    """``(R⊗1ᵀ)(Rᵀ⊗1) = q (A(G) + D(G))``; for ``r1``-regular G that is ``q(A + r1 I)``."""
    S = kron_incidence(g, q)
    return S @ S.T == (g.adjacency() + g.degree_matrix()) * q


def _quadratic_coeffs(h: EdgeHypotheses, a: Fraction) -> tuple[Poly, Poly]:
    """``(c0, c1)`` with the per-eigenvalue quadratic ``c0(λ) + c1(λ)·μ``.

    ``λ² - (2α + r2 + α r1 (q+1) + (1-α)μ) λ + (2α + r2)(α r1 (q+1) + (1-α)μ) - q(1-α)²(r1 + μ)``
    """
    s = 2 * a + h.r2
    t = a * h.r1 * (h.q + 1)
    w = (1 - a) ** 2
    c0 = Poly([s * t - h.q * w * h.r1, -(s + t), 1])
    c1 = Poly([s * (1 - a) - h.q * w, -(1 - a)])
    return c0, c1


def edge_quadratic(g: Graph, components: Sequence[Graph], alpha, mu) -> Poly:
    """The monic quadratic attached to adjacency eigenvalue ``mu`` of the base."""
    a = as_alpha(alpha)
    c0, c1 = _quadratic_coeffs(edge_hypotheses(g, components), a)
    return c0 + c1 * as_fraction(mu)


def thm41_edge_corona_charpoly(g: Graph, components: Sequence[Graph], alpha) -> Poly:
    """``∏ f_{A_α(H_i)}(λ-2α) · ∏_j Q(λ, λ_j) / (λ - 2α - r2)^n``.

    The product over the adjacency eigenvalues ``λ_j`` of the base is the
    resultant ``Res_μ(f_{A(G)}(μ), c0(λ) + c1(λ) μ)``, so irrational
    eigenvalues never need to be represented.
    """
    a = as_alpha(alpha)
    h = edge_hypotheses(g, components)
    c0, c1 = _quadratic_coeffs(h, a)
    quad_product = resultant_in_lambda(adjacency_charpoly(g), [c0, c1])
    pre = ONE
    for comp in components:
        pre = pre * alpha_charpoly(comp, a).shift(2 * a)
    pole = Poly.linear(2 * a + h.r2)
    return (pre * quad_product).exact_div(pole**g.n)


# -- spectrum report ---------------------------------------------------------


@dataclass(frozen=True)
class SpectrumReport:
    """Exact description of a spectrum as a product of factors.

    ``linear``: (eigenvalue, multiplicity); ``quadratic``: (b, c) for an
    irreducible ``λ² - bλ + c``; ``higher``: monic irreducible-over-linear
    factors of degree ≥ 3.  ``formal`` records the multiplicity printed for
    the top eigenvalue ``2α + r2`` (``m - n``), which may be negative.
    """

    linear: tuple[tuple[Fraction, int], ...]
    quadratic: tuple[tuple[Fraction, Fraction], ...]
    higher: tuple[Poly, ...] = ()
    float_view: tuple[float, ...] | None = None
    formal: tuple[Fraction, int] | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def order(self) -> int:
        return (
            sum(k for _, k in self.linear)
            + 2 * len(self.quadratic)
            + sum(p.degree for p in self.higher)
        )

    def product(self) -> Poly:
        out = ONE
        for r, k in self.linear:
            out = out * Poly.linear(r) ** k
        for b, c in self.quadratic:
            out = out * Poly([c, -b, 1])
        for p in self.higher:
            out = out * p
        return out

    def multiplicity(self, value) -> int:
        value = as_fraction(value)
        return sum(k for r, k in self.linear if r == value)

    def to_json(self) -> dict:
        out = {
            "linear": [[fraction_str(r), k] for r, k in self.linear],
            "quadratic": [[fraction_str(b), fraction_str(c)] for b, c in self.quadratic],
            "float": list(self.float_view) if self.float_view is not None else [],
        }
        if self.higher:
            out["higher"] = [p.to_json() for p in self.higher]
        if self.formal is not None:
            out["formal"] = [fraction_str(self.formal[0]), self.formal[1]]
        if self.notes:
            out["notes"] = list(self.notes)
        return out


FLOAT_PRECISION = Fraction(1, 2**52)


def spectrum_from_factors(
    linear: Counter, quadratic: list[tuple[Fraction, Fraction]], higher: list[Poly], floats: bool
) -> tuple:
    lin = tuple(sorted((r, k) for r, k in linear.items() if k))
    quad = tuple(sorted(quadratic))
    high = tuple(higher)
    fv = None
    if floats:
        vals: list[float] = []
        for r, k in lin:
            vals += [float(r)] * k
        for b, c in quad:
            for root in real_roots(Poly([c, -b, 1]), FLOAT_PRECISION):
                vals += [root.approx] * root.multiplicity
        for p in high:
            for root in real_roots(p, FLOAT_PRECISION):
                vals += [root.approx] * root.multiplicity
        fv = tuple(sorted(vals))
    return lin, quad, high, fv


def _absorb(poly: Poly, linear: Counter, quadratic: list, higher: list, times: int = 1) -> None:
    roots, rest = factor_rational(poly)
    for r, k in roots:
        linear[r] += k * times
    for f, k in square_free_decomposition(rest):
        if f.degree == 2:
            quadratic.extend([(-f.coeff(1), f.coeff(0))] * (k * times))
        else:
            higher.extend([f] * (k * times))


def cor41_spectrum(
    g: Graph,
    components: Sequence[Graph],
    alpha,
    *,
    strict: bool = False,
    floats: bool = True,
) -> SpectrumReport:
    """Spectrum of the edge corona as linear/quadratic factor data.

    Component eigenvalues are shifted by ``2α``; each rational adjacency
    eigenvalue of the base contributes its quadratic (split when its roots are
    rational); irrational ones are grouped through a resultant.  ``n`` copies
    of ``2α + r2`` are then cancelled.  With ``m < n`` the printed
    multiplicity ``m - n`` is negative: ``strict=True`` refuses, otherwise
    the cancellation against a quadratic root is recorded in ``notes``.
    """
    a = as_alpha(alpha)
    h = edge_hypotheses(g, components)
    n, m = g.n, g.m
    if strict and m < n:
        raise HypothesisError(f"m - n = {m - n} < 0: no per-entry spectrum with that multiplicity")
    top = 2 * a + h.r2
    linear: Counter = Counter()
    quadratic: list[tuple[Fraction, Fraction]] = []
    higher: list[Poly] = []
    for comp in components:
        _absorb(alpha_charpoly(comp, a).shift(2 * a), linear, quadratic, higher)
    c0, c1 = _quadratic_coeffs(h, a)
    base_roots, base_rest = factor_rational(adjacency_charpoly(g))
    for mu, k in base_roots:
        quad = c0 + c1 * mu
        b, c = -quad.coeff(1), quad.coeff(0)
        root = is_rational_square(b * b - 4 * c)
        if root is not None:
            linear[(b + root) / 2] += k
            linear[(b - root) / 2] += k
        else:
            quadratic.extend([(b, c)] * k)
    for f, k in square_free_decomposition(base_rest):
        _absorb(resultant_in_lambda(f, [c0, c1]), linear, quadratic, higher, k)
    if linear[top] < n:
        raise IdentityViolation(f"cannot cancel (λ - {top})^{n}: only {linear[top]} copies")
    linear[top] -= n
    notes = []
    if m < n:
        notes.append(
            f"printed multiplicity of {top} is m - n = {m - n}; "
            f"the pole cancels against quadratic roots, leaving {linear[top]}"
        )
    lin, quad, high, fv = spectrum_from_factors(linear, quadratic, higher, floats)
    report = SpectrumReport(lin, quad, high, fv, (top, m - n), tuple(notes))
    if report.order != n + h.q * m:
        raise IdentityViolation("spectrum report has the wrong number of eigenvalues")
    return report
