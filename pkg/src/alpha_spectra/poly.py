"""Dense univariate polynomials and rational functions over the rationals.

Coefficients are :class:`fractions.Fraction`, stored ascending by degree.
The indeterminate is printed as ``λ``.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import IdentityViolation, PoleError

Scalar = Union[int, Fraction]

VAR = "λ"


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: they would silently poison exact arithmetic.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        try:
            return Fraction(text)
        except ValueError as exc:
            raise ValueError(f"not an exact rational: {value!r}") from exc
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def fraction_str(value: Fraction) -> str:
    """Canonical ``num/den`` text (denominator always present)."""
    return f"{value.numerator}/{value.denominator}"


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def linear(cls, root) -> Poly:
        """The monic polynomial ``λ - root``."""
        return cls([-as_fraction(root), 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> Poly:
        out = cls([1])
        for r in roots:
            out = out * cls.linear(r)
        return out

    @classmethod
    def from_json(cls, data: Sequence[str]) -> Poly:
        return cls(as_fraction(s) for s in data)

    # -- basic properties -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        lc = self.lc
        return Poly(c / lc for c in self.coeffs)

    def to_json(self) -> list[str]:
        return [fraction_str(c) for c in self.coeffs]

    def primitive_integer(self) -> tuple[list[int], Fraction]:
        """Return ``(ints, scale)`` with ``self == scale * Poly(ints)``.

        ``ints`` has content 1 and positive leading coefficient.
        """
        if self.is_zero():
            return [], Fraction(1)
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = _gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return [v // g for v in ints], Fraction(g, den)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other) -> Poly | None:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly([other])
        return None

    def __add__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = Fraction(other)
            return Poly(x * c for x in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power of a polynomial; use RatFunc")
        result = Poly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        o = Poly._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        lc = o.lc
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            f = c / lc
            quot[k - dq] = f
            for j, b in enumerate(o.coeffs):
                rem[k - dq + j] -= f * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> Poly:
        """Quotient ``self / other``; a nonzero remainder raises IdentityViolation."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise IdentityViolation(f"inexact division: remainder {r}")
        return q

    def __eq__(self, other) -> bool:
        o = Poly._coerce(other)
        if o is None:
            if isinstance(other, RatFunc):
                return other == self
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- evaluation / substitution ---------------------------------------
    def __call__(self, x):
        return self.eval(x)

    def eval(self, x):
        """Horner evaluation; ``x`` may be a scalar, Poly or RatFunc."""
        if isinstance(x, (int, str)) and not isinstance(x, bool):
            x = as_fraction(x)
        if isinstance(x, Fraction):
            acc = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        if isinstance(x, (Poly, RatFunc)):
            acc = x * 0 if isinstance(x, RatFunc) else Poly()
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        raise TypeError(f"cannot evaluate at {type(x).__name__}")

    compose = eval

    def shift(self, c) -> Poly:
        """``p(λ - c)``."""
        return self.eval(Poly([-as_fraction(c), 1]))

    def scale_arg(self, s) -> Poly:
        """``p(s·λ)``."""
        s = as_fraction(s)
        out, f = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * f)
            f *= s
        return Poly(out)

    def deriv(self) -> Poly:
        return Poly(c * k for k, c in enumerate(self.coeffs) if k)

    # -- display ----------------------------------------------------------
    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if k == 0:
                body = str(a)
            else:
                mono = VAR if k == 1 else f"{VAR}^{k}"
                if a == 1:
                    body = mono
                elif a.denominator == 1:
                    body = f"{a}{mono}"
                else:
                    body = f"({a}){mono}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


LAMBDA = Poly.x()
ONE = Poly([1])


class RatFunc:
    """A reduced quotient ``num / den`` with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = ONE if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), ONE
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        self.num = num * (1 / lc) if lc != 1 else num
        self.den = den * (1 / lc) if lc != 1 else den

    @classmethod
    def from_json(cls, data: dict) -> RatFunc:
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def to_poly(self) -> Poly:
        if not self.is_poly():
            raise IdentityViolation(f"not a polynomial: {self}")
        return self.num

    @staticmethod
    def _coerce(other) -> RatFunc | None:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly) or (
            isinstance(other, (int, Fraction)) and not isinstance(other, bool)
        ):
            return RatFunc(other)
        return None

    def __add__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        r = RatFunc.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> RatFunc:
        if k < 0:
            if self.num.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RatFunc(self.den**-k, self.num**-k)
        return RatFunc(self.num**k, self.den**k)

    def eval(self, x) -> Fraction:
        x = as_fraction(x)
        d = self.den.eval(x)
        if d == 0:
            raise PoleError(f"pole of {self} at {x}")
        return self.num.eval(x) / d

    __call__ = eval

    def __eq__(self, other) -> bool:
        o = RatFunc._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __str__(self) -> str:
        if self.is_poly():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _as_poly(v) -> Poly:
    if isinstance(v, Poly):
        return v
    return Poly([v])
