"""The central extension of SL(2,Z) acting on the genus-one double.

Directions ``(r, d)`` are placed on ``R / 2Z`` by ``arg(r + i d) / pi``.  A
lift of a matrix ``M`` to ``R`` is a monotone map ``F`` with
``F(theta + 1) = F(theta) + 1`` covering the action on directions; its
displacement ``F(theta) - theta`` is 1-periodic and varies by less than 1,
so a lift is pinned down by its value at the direction ``(1, 0)``.
``lift_offset`` counts full turns (deck shifts by 2) away from the
principal lift, whose displacement at ``(1, 0)`` lies in ``(-1, 1]``.

Matrices act on column vectors ``(r, d)^T``.  Winding numbers count the
vertical directions (angle in ``1/2 + Z``) in the half-open interval from
a lift of ``x`` to its image, and the action is

    t_x -> t_{M x} k_{M x}^{-w},   k_a -> k_{M a}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from ..scalars import ONE, ZERO, Scalar
from .algebra import EllElem, Word, _add_into
from .lattice import Point

__all__ = ["GammaLift", "winding_number", "sl2z_apply", "apply_matrix"]

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]


def apply_matrix(m: Matrix, x: Point) -> Point:
    return (m[0][0] * x[0] + m[0][1] * x[1], m[1][0] * x[0] + m[1][1] * x[1])


def _angle(x: Point) -> float:
    return math.atan2(x[1], x[0]) / math.pi


def _wrap(a: float) -> float:
    """Representative of ``a`` modulo 2 in ``(-1, 1]``."""
    a = math.fmod(a, 2.0)
    if a <= -1.0:
        a += 2.0
    elif a > 1.0:
        a -= 2.0
    return a


@dataclass(frozen=True)
class GammaLift:
    """A matrix in SL(2,Z) together with a choice of lift to the universal cover."""

    matrix: Matrix
    lift_offset: int = 0

    def __post_init__(self):
        m = tuple(tuple(int(v) for v in row) for row in self.matrix)
        if len(m) != 2 or any(len(row) != 2 for row in m):
            raise ValueError("GammaLift needs a 2x2 matrix")
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 1:
            raise ValueError(f"matrix {m} is not in SL(2,Z)")
        object.__setattr__(self, "matrix", m)

    # named elements -------------------------------------------------------
    @classmethod
    def identity(cls) -> "GammaLift":
        return cls(((1, 0), (0, 1)))

    @classmethod
    def deck_shift(cls, turns: int = 1) -> "GammaLift":
        """The full turn of the universal cover; it acts as the shift of complexes squared."""
        return cls(((1, 0), (0, 1)), turns)

    @classmethod
    def spherical_twist(cls) -> "GammaLift":
        return cls(((1, -1), (0, 1)))

    @classmethod
    def poincare_transform(cls) -> "GammaLift":
        return cls(((0, -1), (1, 0)))

    @classmethod
    def rotation(cls) -> "GammaLift":
        """``[[0, 1], [-1, 0]]``, the matrix whose lift induces Miki's automorphism."""
        return cls(((0, 1), (-1, 0)))

    # the lift -------------------------------------------------------------
    def base_displacement(self) -> float:
        return _wrap(_angle(apply_matrix(self.matrix, (1, 0)))) + 2 * self.lift_offset

    def displacement(self, x: Point) -> float:
        """``F(theta_x) - theta_x`` for this lift."""
        base = self.base_displacement()
        raw = _angle(apply_matrix(self.matrix, x)) - _angle(x)
        # the representative of raw modulo 2 within distance < 1 of base
        return raw + 2 * round((base - raw) / 2)

    def image_angle(self, theta: float, x: Point) -> float:
        return theta + self.displacement(x)

    def __mul__(self, other: "GammaLift") -> "GammaLift":
        m = tuple(tuple(sum(self.matrix[i][k] * other.matrix[k][j] for k in range(2)) for j in range(2))
                  for i in range(2))
        moved = apply_matrix(other.matrix, (1, 0))
        total = other.base_displacement() + self.displacement(moved)
        principal = GammaLift(m).base_displacement()
        return GammaLift(m, int(round((total - principal) / 2)))

    def __str__(self) -> str:
        (a, b), (c, d) = self.matrix
        return f"[[{a},{b}],[{c},{d}]]@{self.lift_offset}"


def _ceil_marked(value: float, exact: bool) -> int:
    return int(round(value)) if exact else math.ceil(value)


def winding_number(gamma: GammaLift, x) -> int:
    """Signed number of vertical directions in ``[theta_x, F(theta_x))``.

    ``x`` is a lattice point or a slope (``Fraction``/int, or ``math.inf``
    and ``-math.inf`` for the vertical directions); the count depends
    only on the slope.
    """
    if not isinstance(x, tuple):
        if x == math.inf:
            x = (0, 1)
        elif x == -math.inf:
            x = (0, -1)
        else:
            q = Fraction(x)
            x = (q.denominator, q.numerator)
    theta = _angle(x) - 0.5
    target = theta + gamma.displacement(x)
    gx = apply_matrix(gamma.matrix, x)
    lo = _ceil_marked(theta, x[0] == 0)
    hi = _ceil_marked(target, gx[0] == 0)
    return hi - lo


def sl2z_apply(gamma: GammaLift, a: EllElem) -> EllElem:
    """Image of ``a`` under the automorphism attached to ``gamma``."""
    alg = a.algebra
    out = EllElem({}, alg)
    images: Dict[Point, EllElem] = {}
    for (pts, k2), c in a.terms.items():
        term = alg.k(apply_matrix(gamma.matrix, k2)) * c
        for p in pts:
            img = images.get(p)
            if img is None:
                gp = apply_matrix(gamma.matrix, p)
                w = winding_number(gamma, p)
                img = alg.t(gp) * alg.k((-2 * w * gp[0], -2 * w * gp[1]))
                images[p] = img
            term = term * img
        out = out + term
    return out
