"""Lattice bookkeeping for the genus-one double.

Points of ``Z^2 \\ {0}`` are plain ``(r, d)`` tuples (rank, degree).  The
upper half ``(Z^2)^+`` holds the points with ``r > 0`` or ``r = 0, d > 0``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Tuple

Point = Tuple[int, int]

__all__ = [
    "Point",
    "det",
    "gcd_signed",
    "primitive",
    "in_upper",
    "eps",
    "eps_pair",
    "slope",
    "same_line",
    "same_ray",
    "order_key",
    "triangle_interior_count",
    "alpha_weight2",
    "euler_form",
]


def det(x: Point, y: Point) -> int:
    return x[0] * y[1] - x[1] * y[0]


def in_upper(x: Point) -> bool:
    r, d = x
    return r > 0 or (r == 0 and d > 0)


def eps(x: Point) -> int:
    """``+1`` on the upper half, ``-1`` on the lower half."""
    if x == (0, 0):
        raise ValueError("eps is undefined at the origin")
    return 1 if in_upper(x) else -1


def gcd_signed(x: Point) -> int:
    """Lattice length of ``x``, negative on the lower half."""
    return eps(x) * math.gcd(x[0], x[1])


def primitive(x: Point) -> Point:
    g = math.gcd(x[0], x[1])
    return (x[0] // g, x[1] // g)


def eps_pair(x: Point, y: Point) -> int:
    d = det(x, y)
    return (d > 0) - (d < 0)


def slope(x: Point):
    """``d/r`` as a Fraction, or ``+inf``/``-inf`` for vertical points."""
    r, d = x
    if r == 0:
        return math.inf if d > 0 else -math.inf
    return Fraction(d, r)


def same_line(x: Point, y: Point) -> bool:
    return det(x, y) == 0


def same_ray(x: Point, y: Point) -> bool:
    return det(x, y) == 0 and x[0] * y[0] + x[1] * y[1] > 0


def order_key(x: Point):
    """Sort key of the PBW order.

    Directions are read clockwise starting at the ray of ``(0, 1)``: first
    the upper half by decreasing slope (vertical first), then the lower half
    in the same pattern transported by ``x -> -x``.  Points on a common ray
    are sorted by lattice length.
    """
    half = 0 if in_upper(x) else 1
    r, d = x if half == 0 else (-x[0], -x[1])
    g = math.gcd(r, d)
    if r == 0:
        return (half, 0, Fraction(0), g)
    return (half, 1, Fraction(-d, r), g)


def direction_key(x: Point):
    return order_key(x)[:3]


def triangle_interior_count(x: Point, y: Point) -> int:
    """Interior lattice points of the triangle ``(0, x, x+y)`` (Pick)."""
    z = (x[0] + y[0], x[1] + y[1])
    twice_area = abs(det(x, z))
    if twice_area == 0:
        return 0
    boundary = math.gcd(*x) + math.gcd(*y) + math.gcd(*z)
    return (twice_area - boundary + 2) // 2


def alpha_weight2(x: Point, y: Point) -> Point:
    """Doubled kappa-weight ``2*alpha(x, y)`` of the mixed-sign relation."""
    s = (x[0] + y[0], x[1] + y[1])
    if s == (0, 0):
        raise ValueError("alpha_weight needs x + y != 0")
    e = eps_pair(x, y)
    if e == 0:
        raise ValueError("alpha_weight needs det(x, y) != 0")
    ex, ey, es = eps(x), eps(y), eps(s)
    lead = ex if e == 1 else ey
    return (lead * (ex * x[0] + ey * y[0] - es * s[0]),
            lead * (ex * x[1] + ey * y[1] - es * s[1]))


def euler_form(genus: int, x: Point, y: Point) -> int:
    """``(1-g) r1 r2 + r1 d2 - r2 d1``."""
    return (1 - genus) * x[0] * y[0] + x[0] * y[1] - y[0] * x[1]
