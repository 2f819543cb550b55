"""The genus-one double: generators ``t_x`` and central weights ``k_a``.

Elements are Scalar combinations of normal words.  A normal word is a tuple
of lattice points sorted by :func:`lattice.order_key` together with a
doubled kappa weight; the kappa part is central at genus one, so it is only
bookkeeping.  Products are straightened by moving generators past each other
with ``t_y t_x = t_x t_y + [t_y, t_x]``, where the commutator comes from
:meth:`EllipticDouble.comm`.
"""

from __future__ import annotations

import math
import sys
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from ..scalars import ONE, ZERO, Scalar, quantum_integer, s1, s2, sqrtL
from ..combinat import partitions
from .lattice import (
    Point,
    alpha_weight2,
    det,
    direction_key,
    eps_pair,
    order_key,
    primitive,
    triangle_interior_count,
)

Word = Tuple[Tuple[Point, ...], Tuple[int, int]]

BETA = sqrtL - sqrtL.inverse()

__all__ = [
    "BETA",
    "c_coeff",
    "EllElem",
    "EllipticDouble",
    "WindowOverflow",
    "default_double",
]


class RecursionCycle(RuntimeError):
    """The commutator recursion asked for a pair that is still being computed."""


class WindowOverflow(ValueError):
    """A lattice point left the configured window during a computation."""

    def __init__(self, point: Point, window: Tuple[int, int]):
        super().__init__(f"lattice point {point} outside window |r|<={window[0]}, |d|<={window[1]}")
        self.point = point
        self.window = window


_C_CACHE: Dict[int, Scalar] = {}


def c_coeff(i: int) -> Scalar:
    """``(q1^{i/2}-q1^{-i/2})(q2^{i/2}-q2^{-i/2}) [i] / i`` for ``i >= 1``."""
    if i <= 0:
        raise ValueError(f"c_coeff needs i >= 1, got {i}")
    c = _C_CACHE.get(i)
    if c is None:
        c = (s1 ** i - s1 ** (-i)) * (s2 ** i - s2 ** (-i)) * quantum_integer(i) / i
        _C_CACHE[i] = c
    return c


def kappa_of_relation(x: Point, y: Point) -> Point:
    """Doubled kappa weight carried by ``[t_y, t_x]`` in the base relation.

    This is ``-alpha(x, y)``: with ``+alpha`` the Jacobi identity fails on
    mixed-sign triples such as ``(-1,-1), (-1,1), (1,0)``.
    """
    a = alpha_weight2(x, y)
    return (-a[0], -a[1])


# ---------------------------------------------------------------------------
# elements


def _add_into(acc: Dict[Word, Scalar], key: Word, c: Scalar) -> None:
    old = acc.get(key)
    new = c if old is None else old + c
    if new.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = new


def _kshift(word: Word, k2: Tuple[int, int]) -> Word:
    return (word[0], (word[1][0] + k2[0], word[1][1] + k2[1]))


class EllElem:
    """A Scalar combination of normal words in the genus-one double."""

    __slots__ = ("terms", "algebra")

    def __init__(self, terms: Optional[Dict[Word, Scalar]] = None, algebra: "EllipticDouble" = None):
        self.terms = {} if terms is None else {w: c for w, c in terms.items() if not c.is_zero()}
        self.algebra = algebra if algebra is not None else default_double()

    # -- constructors ---------------------------------------------------
    @classmethod
    def scalar(cls, c, algebra=None) -> "EllElem":
        return cls({((), (0, 0)): Scalar.coerce(c)}, algebra)

    @classmethod
    def t(cls, x: Point, algebra=None) -> "EllElem":
        return cls({((tuple(x),), (0, 0)): ONE}, algebra)

    @classmethod
    def k(cls, a2: Tuple[int, int], algebra=None) -> "EllElem":
        """The central element ``k_a`` for the doubled weight ``a2 = 2a``."""
        return cls({((), tuple(a2)): ONE}, algebra)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other) -> "EllElem":
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _add_into(out, w, c)
        return EllElem(out, self.algebra)

    __radd__ = __add__

    def __neg__(self) -> "EllElem":
        return EllElem({w: -c for w, c in self.terms.items()}, self.algebra)

    def __sub__(self, other) -> "EllElem":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "EllElem":
        return self._coerce(other) - self

    def __mul__(self, other) -> "EllElem":
        if isinstance(other, EllElem):
            return self.algebra.multiply(self, other)
        c = Scalar.coerce(other)
        return EllElem({w: x * c for w, x in self.terms.items()}, self.algebra)

    def __rmul__(self, other) -> "EllElem":
        c = Scalar.coerce(other)
        return EllElem({w: c * x for w, x in self.terms.items()}, self.algebra)

    def __truediv__(self, other) -> "EllElem":
        return self * Scalar.coerce(other).inverse()

    def _coerce(self, other) -> "EllElem":
        if isinstance(other, EllElem):
            return other
        return EllElem.scalar(other, self.algebra)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EllElem):
            other = EllElem.scalar(other, self.algebra)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator[Tuple[Word, Scalar]]:
        return iter(sorted(self.terms.items(), key=lambda kv: _word_sort_key(kv[0])))

    def __len__(self) -> int:
        return len(self.terms)

    def coefficients(self) -> List[Scalar]:
        return list(self.terms.values())

    def map_coefficients(self, fn) -> "EllElem":
        return EllElem({w: fn(c) for w, c in self.terms.items()}, self.algebra)

    def degree_set(self) -> set:
        out = set()
        for (pts, _k), _c in self.terms.items():
            out.add((sum(p[0] for p in pts), sum(p[1] for p in pts)))
        return out

    def __str__(self) -> str:
        from ..render import render_ell

        return render_ell(self)

    __repr__ = __str__


def _word_sort_key(w: Word):
    pts, k2 = w
    return (len(pts), [order_key(p) for p in pts], k2)


def bracket(a: EllElem, b: EllElem) -> EllElem:
    return a * b - b * a


# ---------------------------------------------------------------------------
# the straightening engine


class EllipticDouble:
    """Normal-form engine for the genus-one double.

    ``window`` bounds ``|r|`` and ``|d|`` of every lattice point an
    operation may touch; intermediate points of the commutator recursion
    count, and leaving the window raises :class:`WindowOverflow`.
    ``theta_convention`` selects the generating series of the theta
    elements: ``"bs"`` uses ``exp(beta * sum t_j z^j)``, ``"divided"``
    divides each ``t_j`` by the quantum integer ``[j]``.
    """

    def __init__(self, window: Tuple[int, int] = (12, 12), theta_convention: str = "bs"):
        if theta_convention not in ("bs", "divided"):
            raise ValueError(f"unknown theta convention {theta_convention!r}")
        self.window = tuple(window)
        self.theta_convention = theta_convention
        self._comm_cache: Dict[Tuple[Point, Point], Dict[Word, Scalar]] = {}
        self._rmul_cache: Dict[Tuple[Tuple[Point, ...], Point], Dict[Word, Scalar]] = {}
        self._in_progress: set = set()

    # -- helpers ----------------------------------------------------------
    def check_point(self, x: Point) -> None:
        if abs(x[0]) > self.window[0] or abs(x[1]) > self.window[1]:
            raise WindowOverflow(x, self.window)

    def elem(self, terms: Dict[Word, Scalar]) -> EllElem:
        return EllElem(terms, self)

    def t(self, x: Point) -> EllElem:
        self.check_point(tuple(x))
        return EllElem.t(tuple(x), self)

    def k(self, a2: Tuple[int, int]) -> EllElem:
        return EllElem.k(a2, self)

    def one(self) -> EllElem:
        return EllElem.scalar(1, self)

    # -- theta elements ---------------------------------------------------
    def theta_terms(self, z: Point) -> Dict[Word, Scalar]:
        """``theta_z`` as a polynomial in the ``t`` along the ray of ``z``."""
        z0 = primitive(z)
        n = math.gcd(*z)
        out: Dict[Word, Scalar] = {}
        for lam in partitions(n):
            coeff = ONE
            mult: Dict[int, int] = {}
            for part in lam:
                mult[part] = mult.get(part, 0) + 1
                coeff = coeff * BETA
                if self.theta_convention == "divided":
                    coeff = coeff / quantum_integer(part)
            for m in mult.values():
                coeff = coeff / math.factorial(m)
            pts = tuple(sorted(((j * z0[0], j * z0[1]) for j in lam), key=order_key))
            for p in pts:
                self.check_point(p)
            _add_into(out, (pts, (0, 0)), coeff)
        return out

    def theta(self, z: Point) -> EllElem:
        return self.elem(self.theta_terms(z))

    # -- commutators ------------------------------------------------------
    def comm(self, x: Point, y: Point) -> EllElem:
        """Normal form of ``[t_x, t_y]``."""
        return self.elem(self._comm(tuple(x), tuple(y)))

    def _comm(self, x: Point, y: Point) -> Dict[Word, Scalar]:
        key = (x, y)
        hit = self._comm_cache.get(key)
        if hit is not None:
            return hit
        swapped = self._comm_cache.get((y, x))
        if swapped is not None:
            res = {w: -c for w, c in swapped.items()}
            self._comm_cache[key] = res
            return res
        self.check_point(x)
        self.check_point(y)
        if key in self._in_progress or (y, x) in self._in_progress:
            raise RecursionCycle(f"commutator recursion revisited the pair {x}, {y}")
        self._in_progress.add(key)
        try:
            res = self._comm_compute(x, y)
        finally:
            self._in_progress.discard(key)
        self._comm_cache[key] = res
        return res

    def base_relation(self, x: Point, y: Point) -> Optional[Dict[Word, Scalar]]:
        """``[t_y, t_x]`` when ``x`` is primitive and the triangle is empty."""
        if math.gcd(*x) != 1 or det(x, y) == 0 or triangle_interior_count(x, y) != 0:
            return None
        z = (x[0] + y[0], x[1] + y[1])
        scale = eps_pair(x, y) * c_coeff(math.gcd(*y)) / BETA
        a2 = kappa_of_relation(x, y)
        return {_kshift(w, a2): c * scale for w, c in self.theta_terms(z).items()}

    def _comm_compute(self, x: Point, y: Point) -> Dict[Word, Scalar]:
        if det(x, y) == 0:
            if x == (-y[0], -y[1]):
                c = c_coeff(math.gcd(*x)) / BETA
                return {((), (2 * x[0], 2 * x[1])): c, ((), (-2 * x[0], -2 * x[1])): -c}
            return {}
        rel = self.base_relation(x, y)          # [t_y, t_x]
        if rel is not None:
            return {w: -c for w, c in rel.items()}
        rel = self.base_relation(y, x)          # [t_x, t_y]
        if rel is not None:
            return rel
        return self._comm_split(x, y)

    def candidate_splits(self, other: Point, target: Point) -> List[Tuple[tuple, Point, Point]]:
        """Base pairs ``(u, w)`` with ``u + w = target``, best first.

        The relation ``[t_w, t_u] ~ theta_target`` rewrites ``t_target``.
        Both ``det(other, u)`` and ``det(other, w)`` are required to lie
        weakly between 0 and ``det(other, target)``, so the two commutators
        with ``t_other`` that the expansion starts from have smaller
        determinant.  Pairs are ranked by
        ``(max |det(other, .)|, |det(u, w)|, size, u)``.
        """
        D = det(other, target)
        bound = max(abs(target[0]), abs(target[1]), abs(other[0]), abs(other[1])) + 1
        found = []
        for ur in range(-bound, bound + 1):
            for ud in range(-bound, bound + 1):
                u = (ur, ud)
                if u == (0, 0) or math.gcd(ur, ud) != 1:
                    continue
                w = (target[0] - ur, target[1] - ud)
                if w == (0, 0) or det(u, w) == 0:
                    continue
                du, dw = det(other, u), det(other, w)
                if D > 0 and not (0 <= du < D and 0 <= dw < D):
                    continue
                if D < 0 and not (D < du <= 0 and D < dw <= 0):
                    continue
                if triangle_interior_count(u, w) != 0:
                    continue
                size = max(abs(ur), abs(ud), abs(w[0]), abs(w[1]))
                found.append(((max(abs(du), abs(dw)), abs(det(u, w)), size, u), u, w))
        found.sort(key=lambda item: item[0])
        return found

    def _comm_split(self, x: Point, y: Point) -> Dict[Word, Scalar]:
        # [t_x, t_y] = sign * [t_o, t_g] where t_g is rewritten through a split
        options = []
        for other, target, sign in ((x, y, 1), (y, x, -1)):
            for score, u, w in self.candidate_splits(other, target):
                options.append((score, sign, other, target, u, w))
        if not options:
            raise AssertionError(f"no admissible split for the pair {x}, {y}")
        options.sort(key=lambda item: item[:2])
        last_error = None
        for _score, sign, o, g, u, w in options:
            try:
                return self._expand_split(o, g, u, w, sign)
            except (RecursionCycle, WindowOverflow) as err:
                last_error = err
        raise last_error

    def _expand_split(self, o: Point, g: Point, u: Point, w: Point, sign: int) -> Dict[Word, Scalar]:
        for p in (u, w):
            self.check_point(p)
        # [t_w, t_u] = eps c k theta_g / beta  =>  t_g = k^{-1} [t_w,t_u] / (eps c) - R / beta
        a2 = kappa_of_relation(u, w)
        lead = Scalar(eps_pair(u, w)) * c_coeff(math.gcd(*w))
        to, tu, tw = self.t(o), self.t(u), self.t(w)
        inner = bracket(self.comm(o, w), tu) + bracket(tw, self.comm(o, u))
        total = inner * self.k((-a2[0], -a2[1])) / lead
        rest = {wd: c for wd, c in self.theta_terms(g).items() if wd[0] != (g,)}
        if rest:
            total = total - bracket(to, self.elem(rest)) / BETA
        if sign < 0:
            total = -total
        return total.terms

    # -- products ---------------------------------------------------------
    def _rmul(self, pts: Tuple[Point, ...], x: Point) -> Dict[Word, Scalar]:
        """Normal form of ``(normal word pts) * t_x``, kappa weight zero."""
        if not pts or order_key(pts[-1]) <= order_key(x):
            return {(pts + (x,), (0, 0)): ONE}
        key = (pts, x)
        hit = self._rmul_cache.get(key)
        if hit is not None:
            return hit
        y = pts[-1]
        head = pts[:-1]
        out: Dict[Word, Scalar] = {}
        # (head * x) * y
        for (p, k2), c in self._rmul(head, x).items():
            for (p2, k22), c2 in self._rmul(p, y).items():
                _add_into(out, (p2, (k2[0] + k22[0], k2[1] + k22[1])), c * c2)
        if direction_key(x) != direction_key(y):
            # head * [t_y, t_x]
            for (p, k2), c in self._comm(y, x).items():
                for (p2, k22), c2 in self._mul_words(head, p).items():
                    _add_into(out, (p2, (k2[0] + k22[0], k2[1] + k22[1])), c * c2)
        self._rmul_cache[key] = out
        return out

    def _mul_words(self, left: Tuple[Point, ...], right: Tuple[Point, ...]) -> Dict[Word, Scalar]:
        current: Dict[Word, Scalar] = {(left, (0, 0)): ONE}
        for x in right:
            nxt: Dict[Word, Scalar] = {}
            for (p, k2), c in current.items():
                for (p2, k22), c2 in self._rmul(p, x).items():
                    _add_into(nxt, (p2, (k2[0] + k22[0], k2[1] + k22[1])), c * c2)
            current = nxt
        return current

    def multiply(self, a: EllElem, b: EllElem) -> EllElem:
        out: Dict[Word, Scalar] = {}
        for (pa, ka), ca in a.terms.items():
            for (pb, kb), cb in b.terms.items():
                k2 = (ka[0] + kb[0], ka[1] + kb[1])
                for (p, kk), c in self._mul_words(pa, pb).items():
                    _add_into(out, (p, (k2[0] + kk[0], k2[1] + kk[1])), ca * cb * c)
        return EllElem(out, self)

    def normal_form(self, factors: Iterable[EllElem]) -> EllElem:
        """Normal form of an ordered product of elements."""
        out = self.one()
        for f in factors:
            out = out * f
        return out


_DEFAULT: Optional[EllipticDouble] = None


def default_double() -> EllipticDouble:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = EllipticDouble()
    return _DEFAULT
