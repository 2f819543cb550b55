"""Grothendieck-ring classes and motivic zeta functions of curves.

Classes live in the Scalar field, with ``L`` the class of the affine line.
A zeta function of a curve of genus ``g`` is stored through its numerator
``f(z)``, so that ``zeta(z) = f(z) / ((1 - z)(1 - L z))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .scalars import ONE, ZERO, L, Scalar, TruncSeries, gaussian_binomial, q1, q2, series_log

__all__ = [
    "class_gl",
    "class_grassmannian",
    "coprime_pair_class",
    "ZetaFunction",
    "make_zeta",
    "sym_class",
    "log_classes",
    "rationality_check",
]


def class_gl(d: int) -> Scalar:
    """``[GL_d] = L^{d(d-1)/2} prod_{k=1}^d (L^k - 1)``."""
    if d < 0:
        raise ValueError(f"class_gl needs d >= 0, got {d}")
    out = L ** (d * (d - 1) // 2)
    for k in range(1, d + 1):
        out = out * (L ** k - 1)
    return out


def class_grassmannian(d: int, n: int) -> Scalar:
    """Class of the Grassmannian of ``d``-planes in ``n``-space."""
    if d < 0 or d > n:
        raise ValueError(f"class_grassmannian needs 0 <= d <= n, got d={d}, n={n}")
    return gaussian_binomial(n, d)


def coprime_pair_class(a: int, b: int) -> Scalar:
    """Class of pairs of coprime binary forms of degrees ``a`` and ``b``."""
    if a < 0 or b < 0:
        raise ValueError(f"coprime_pair_class needs a, b >= 0, got {a}, {b}")
    if a == 0 or b == 0:
        return (L - 1) * (L ** (a + b + 1) - 1)
    return (L - 1) * (L ** 2 - 1) * L ** (a + b - 1)


@dataclass(frozen=True)
class ZetaFunction:
    """``f(z) / ((1 - z)(1 - L z))`` with ``f = numerator[0] + numerator[1] z + ...``."""

    numerator: Tuple[Scalar, ...]
    genus: int
    label: str = "custom"

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(Scalar.coerce(c) for c in self.numerator))

    def series(self, order: int) -> TruncSeries:
        """Expansion ``sum_n [Sym^n X] z^n`` up to ``z^order``."""
        return TruncSeries([sym_class(self, n) for n in range(order + 1)])

    def to_json(self) -> dict:
        return {"genus": self.genus, "numerator": [str(c) for c in self.numerator]}


def make_zeta(kind: str, a: Scalar | None = None, pic0: Scalar | None = None) -> ZetaFunction:
    """Build a zeta function.

    ``kind`` is ``"p1"`` (projective line), ``"genus_one"`` (numerator
    ``1 + a z + L z^2``), ``"elliptic"`` (``genus_one`` with
    ``a = -(q1 + q2)``) or ``"from_pic0"`` (``a = pic0 - L - 1``).
    """
    if kind == "p1":
        return ZetaFunction((ONE,), 0, "p1")
    if kind == "elliptic":
        return ZetaFunction((ONE, -(q1 + q2), L), 1, "elliptic")
    if kind == "genus_one":
        if a is None:
            raise ValueError("genus_one zeta needs the parameter a")
        return ZetaFunction((ONE, Scalar.coerce(a), L), 1, "genus_one")
    if kind == "from_pic0":
        if pic0 is None:
            raise ValueError("from_pic0 zeta needs the class of Pic^0")
        return ZetaFunction((ONE, Scalar.coerce(pic0) - L - 1, L), 1, "genus_one")
    raise ValueError(f"unknown zeta kind {kind!r}")


def _projective_space_class(m: int) -> Scalar:
    out = ZERO
    for j in range(m + 1):
        out = out + L ** j
    return out


def sym_class(zeta: ZetaFunction, n: int) -> Scalar:
    """Coefficient of ``z^n`` in the expansion of ``zeta``."""
    if n < 0:
        raise ValueError(f"sym_class needs n >= 0, got {n}")
    # 1/((1-z)(1-Lz)) = sum_m [P^m] z^m
    out = ZERO
    for i, f in enumerate(zeta.numerator):
        if i > n:
            break
        out = out + f * _projective_space_class(n - i)
    return out


def log_classes(zeta: ZetaFunction, d: int) -> Scalar:
    """``[C_(d)] = d * [z^d] log zeta``, the motivic count over degree-``d`` extensions."""
    if d <= 0:
        raise ValueError(f"log_classes needs d >= 1, got {d}")
    return series_log(zeta.series(d))[d] * d


def rationality_check(zeta: ZetaFunction) -> bool:
    """``f(0) = 1`` and ``deg f <= 2g``."""
    coeffs = list(zeta.numerator)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    if not coeffs or coeffs[0] != ONE:
        return False
    return len(coeffs) - 1 <= 2 * zeta.genus
