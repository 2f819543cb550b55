"""Exact coefficient arithmetic.

Every coefficient of the algebras in this package is a rational function in
two formal variables ``s1`` and ``s2``.  They stand for square roots of the
curve parameters, so that::

    q1 = s1**2,  q2 = s2**2,  L = q1*q2,  sqrt(L) = s1*s2,  v = 1/sqrt(L).

:class:`Scalar` is an immutable element of ``Frac(Q[s1, s2])`` kept in lowest
terms with a monic denominator, so that equal values have equal
representations.  :class:`TruncSeries` is a power series in ``z`` truncated
at a fixed order, with ``exp`` and ``log``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, List, Sequence

import flint

__all__ = [
    "Scalar",
    "ZERO",
    "ONE",
    "s1",
    "s2",
    "q1",
    "q2",
    "L",
    "sqrtL",
    "v",
    "quantum_integer",
    "gaussian_binomial",
    "swap_s1_s2",
    "TruncSeries",
    "series_exp",
    "series_log",
]

_CTX = flint.fmpq_mpoly_ctx.get(("s1", "s2"), "deglex")
_S1, _S2 = _CTX.gens()
_PZERO = _CTX.from_dict({})
_PONE = _CTX.from_dict({(0, 0): 1})


def _poly_const(c) -> flint.fmpq_mpoly:
    c = flint.fmpq(c.numerator, c.denominator) if isinstance(c, Fraction) else c
    return _CTX.from_dict({(0, 0): c}) if c != 0 else _PZERO


class Scalar:
    """An element of ``Q(s1, s2)`` in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=None, _reduced: bool = False):
        if isinstance(num, Scalar):
            self.num, self.den, self._hash = num.num, num.den, num._hash
            return
        if not isinstance(num, flint.fmpq_mpoly):
            num = _poly_const(num)
        if den is None:
            den = _PONE
        elif not isinstance(den, flint.fmpq_mpoly):
            den = _poly_const(den)
        if not _reduced:
            if den.is_zero():
                raise ZeroDivisionError("Scalar with zero denominator")
            if num.is_zero():
                den = _PONE
            elif not den.is_constant():
                g = num.gcd(den)
                if not g.is_one():
                    num = num / g
                    den = den / g
            lc = den.leading_coefficient()
            if lc != 1:
                num = num / lc
                den = den / lc
        self.num = num
        self.den = den
        self._hash = None

    # -- construction helpers -------------------------------------------
    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((tuple(self.num.to_dict().items()),
                               tuple(self.den.to_dict().items())))
        return self._hash

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other) -> "Scalar":
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.num, self.den, _reduced=True)

    def __sub__(self, other) -> "Scalar":
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        return Scalar.coerce(other) - self

    def __mul__(self, other) -> "Scalar":
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.num * other.num, _PONE, _reduced=True)
        # cross-cancel before multiplying to keep the gcds small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n = (self.num / g1) * (other.num / g2)
        d = (self.den / g2) * (other.den / g1)
        return Scalar(n, d, _reduced=False)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero Scalar")
        return Scalar(self.den, self.num)

    def __truediv__(self, other) -> "Scalar":
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            raise TypeError("Scalar powers must be integers")
        if n >= 0:
            return Scalar(self.num ** n, self.den ** n, _reduced=True)
        if self.num.is_zero():
            raise ZeroDivisionError("negative power of zero")
        return Scalar(self.den ** (-n), self.num ** (-n))

    # -- substitutions ----------------------------------------------------
    def swap(self) -> "Scalar":
        """Return the image under the field automorphism ``s1 <-> s2``."""
        return Scalar(_swap_poly(self.num), _swap_poly(self.den))

    def evaluate(self, a, b):
        """Evaluate at ``s1 = a``, ``s2 = b`` (exact rationals)."""
        num = _eval_poly(self.num, a, b)
        den = _eval_poly(self.den, a, b)
        return num / den

    # -- rendering --------------------------------------------------------
    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"

    def latex(self) -> str:
        return format_scalar(self, latex=True)


def _swap_poly(p: flint.fmpq_mpoly) -> flint.fmpq_mpoly:
    return _CTX.from_dict({(b, a): c for (a, b), c in p.to_dict().items()})


def _eval_poly(p, a, b) -> Fraction:
    a, b = Fraction(a), Fraction(b)
    total = Fraction(0)
    for (i, j), c in p.to_dict().items():
        total += Fraction(int(c.p), int(c.q)) * a ** int(i) * b ** int(j)
    return total


ZERO = Scalar(0)
ONE = Scalar(1)
s1 = Scalar(_S1)
s2 = Scalar(_S2)
q1 = s1 * s1
q2 = s2 * s2
sqrtL = s1 * s2
L = sqrtL * sqrtL
v = sqrtL.inverse()


def swap_s1_s2(x: Scalar) -> Scalar:
    return x.swap()


# ---------------------------------------------------------------------------
# canonical text rendering


def _monomial_factors(a: int, b: int) -> List[tuple]:
    """Split ``s1^a s2^b`` into alias factors ``(name, exponent)``."""
    m = min(a, b)
    factors = []
    if m >= 2:
        factors.append(("L", m // 2))
    a -= 2 * (m // 2)
    b -= 2 * (m // 2)
    if a % 2 == 1 and b % 2 == 1:
        factors.append(("sqrtL", 1))
        a -= 1
        b -= 1
    if a // 2:
        factors.append(("q1", a // 2))
    if b // 2:
        factors.append(("q2", b // 2))
    if a % 2:
        factors.append(("s1", 1))
    if b % 2:
        factors.append(("s2", 1))
    return factors


_LATEX_NAMES = {"L": "L", "sqrtL": "L^{1/2}", "q1": "q_1", "q2": "q_2",
                "s1": "s_1", "s2": "s_2"}


def _format_monomial(a: int, b: int, latex: bool) -> str:
    parts = []
    for name, e in _monomial_factors(a, b):
        if latex:
            base = _LATEX_NAMES[name]
            if e == 1:
                parts.append(base)
            elif name == "sqrtL":
                parts.append(f"L^{{{e}/2}}")
            else:
                parts.append(f"{base}^{{{e}}}")
        else:
            parts.append(name if e == 1 else f"{name}^{e}")
    return ("" if latex else "*").join(parts)


def _format_coeff(c) -> str:
    return str(c) if c.q == 1 else f"{c.p}/{c.q}"


def format_poly(p: flint.fmpq_mpoly, latex: bool = False) -> str:
    if p.is_zero():
        return "0"
    items = sorted(p.to_dict().items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0]))
    out = []
    for (a, b), c in items:
        mono = _format_monomial(a, b, latex)
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = _format_coeff(mag) if not latex or mag.q == 1 else rf"\frac{{{mag.p}}}{{{mag.q}}}"
        elif mag == 1:
            body = mono
        elif latex:
            coef = str(mag.p) if mag.q == 1 else rf"\frac{{{mag.p}}}{{{mag.q}}}"
            body = f"{coef}{mono}"
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def format_scalar(x: Scalar, latex: bool = False) -> str:
    num = format_poly(x.num, latex)
    if x.den.is_one():
        return num
    den = format_poly(x.den, latex)
    if latex:
        return rf"\frac{{{num}}}{{{den}}}"
    if len(x.num.to_dict()) > 1:
        num = f"({num})"
    if len(x.den.to_dict()) > 1 or "*" in den:
        den = f"({den})"
    return f"{num}/{den}"


# ---------------------------------------------------------------------------
# classical q-numbers


@lru_cache(maxsize=None)
def quantum_integer(d: int) -> Scalar:
    """The balanced quantum integer ``(L^{d/2} - L^{-d/2}) / (L^{1/2} - L^{-1/2})``."""
    if d == 0:
        return ZERO
    if d < 0:
        return -quantum_integer(-d)
    total = ZERO
    for k in range(d):
        total = total + L ** k
    return total * sqrtL ** (-(d - 1))


@lru_cache(maxsize=None)
def _plus_factorial(n: int) -> Scalar:
    out = ONE
    for k in range(1, n + 1):
        out = out * (L ** k - 1) / (L - 1)
    return out


def gaussian_binomial(n: int, d: int) -> Scalar:
    """Gaussian binomial coefficient in ``L``."""
    if d < 0 or d > n:
        raise ValueError(f"gaussian_binomial needs 0 <= d <= n, got n={n}, d={d}")
    return _plus_factorial(n) / (_plus_factorial(d) * _plus_factorial(n - d))


# ---------------------------------------------------------------------------
# truncated power series


class TruncSeries:
    """Power series ``c_0 + c_1 z + ... + c_N z^N`` modulo ``z^{N+1}``.

    Coefficients may be Scalars or any commutative algebra elements that
    support ``+``, ``*`` and multiplication by a Scalar.  ``zero`` and
    ``one`` give the additive and multiplicative units of that algebra.
    """

    __slots__ = ("coeffs", "zero", "one")

    def __init__(self, coeffs: Sequence, zero=ZERO, one=ONE, order: int | None = None):
        coeffs = list(coeffs)
        if order is not None:
            coeffs = coeffs[: order + 1] + [zero] * (order + 1 - len(coeffs))
        if not coeffs:
            raise ValueError("a truncated series needs order >= 0")
        self.coeffs = coeffs
        self.zero = zero
        self.one = one

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def _like(self, coeffs) -> "TruncSeries":
        return TruncSeries(coeffs, self.zero, self.one)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return self._like([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        n = min(self.order, other.order)
        return self._like([self.coeffs[i] + other.coeffs[i] * Scalar(-1) for i in range(n + 1)])

    def __mul__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return self._like([c * other for c in self.coeffs])
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = self.zero
            for i in range(k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return self._like(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))

    def __repr__(self) -> str:
        return "TruncSeries([" + ", ".join(str(c) for c in self.coeffs) + "])"


def _is_zero(c) -> bool:
    if isinstance(c, Scalar):
        return c.is_zero()
    return not c


def _is_one(c, one) -> bool:
    return c == one


def series_exp(f: TruncSeries) -> TruncSeries:
    """Exponential of a series with vanishing constant term.

    Uses ``n g_n = sum_{k=1}^n k f_k g_{n-k}`` for ``g = exp(f)``.
    """
    if not _is_zero(f.coeffs[0]):
        raise ValueError("series_exp needs a series with zero constant term")
    g = [f.one]
    for n in range(1, f.order + 1):
        acc = f.zero
        for k in range(1, n + 1):
            if _is_zero(f.coeffs[k]):
                continue
            acc = acc + f.coeffs[k] * g[n - k] * Scalar(k)
        g.append(acc * Scalar(Fraction(1, n)))
    return f._like(g)


def series_log(g: TruncSeries) -> TruncSeries:
    """Logarithm of a series with constant term one.

    Uses ``n f_n = n g_n - sum_{k=1}^{n-1} k f_k g_{n-k}``.
    """
    if not _is_one(g.coeffs[0], g.one):
        raise ValueError("series_log needs a series with constant term 1")
    f = [g.zero]
    for n in range(1, g.order + 1):
        acc = g.coeffs[n] * Scalar(n)
        for k in range(1, n):
            if _is_zero(f[k]):
                continue
            acc = acc + f[k] * g.coeffs[n - k] * Scalar(-k)
        f.append(acc * Scalar(Fraction(1, n)))
    return g._like(f)


def series_from_function(fn: Callable[[int], Scalar], order: int) -> TruncSeries:
    return TruncSeries([fn(n) for n in range(order + 1)])


def scalar_sum(xs: Iterable[Scalar]) -> Scalar:
    total = ZERO
    for x in xs:
        total = total + x
    return total
