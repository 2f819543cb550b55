"""Brute-force oracles used by the tests.

Everything here counts or evaluates directly (finite fields, explicit
variables, exhaustive enumeration) and shares no code with the package.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

# ---------------------------------------------------------------------------
# the fields F_{2^k}

_MODULI = {1: 0b11, 2: 0b111, 4: 0b10011, 6: 0b1000011, 8: 0b100011011}


class GF2k:
    """The field with ``2^k`` elements; elements are ints below ``2^k``."""

    def __init__(self, k: int):
        self.k = k
        self.size = 1 << k
        self.modulus = _MODULI[k]

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        out = 0
        while b:
            if b & 1:
                out ^= a
            b >>= 1
            a <<= 1
            if a & self.size:
                a ^= self.modulus
        return out

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError
        out, base, e = 1, a, self.size - 2
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def elements(self) -> range:
        return range(self.size)


def det(rows: Sequence[Sequence[int]], F: GF2k) -> int:
    m = [list(r) for r in rows]
    n = len(m)
    out = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return 0
        m[col], m[piv] = m[piv], m[col]
        out = F.mul(out, m[col][col])
        inv = F.inv(m[col][col])
        for r in range(col + 1, n):
            if m[r][col]:
                f = F.mul(m[r][col], inv)
                m[r] = [F.add(a, F.mul(f, b)) for a, b in zip(m[r], m[col])]
    return out


def count_invertible(n: int, F: GF2k) -> int:
    total = 0
    for entries in itertools.product(F.elements(), repeat=n * n):
        rows = [entries[i * n:(i + 1) * n] for i in range(n)]
        if det(rows, F):
            total += 1
    return total


def count_subspaces(n: int, d: int, F: GF2k) -> int:
    """Distinct spans of ``d``-tuples of vectors in ``F^n`` of dimension exactly ``d``."""
    vectors = list(itertools.product(F.elements(), repeat=n))
    seen = set()
    for basis in itertools.combinations(vectors, d):
        span = set()
        for coeffs in itertools.product(F.elements(), repeat=d):
            v = tuple(0 for _ in range(n))
            for c, b in zip(coeffs, basis):
                v = tuple(F.add(x, F.mul(c, y)) for x, y in zip(v, b))
            span.add(v)
        if len(span) == F.size ** d:
            seen.add(frozenset(span))
    return len(seen)


def resultant(f: Sequence[int], g: Sequence[int], F: GF2k) -> int:
    """Sylvester resultant of binary forms given by coefficient lists of length ``deg+1``."""
    a, b = len(f) - 1, len(g) - 1
    n = a + b
    if n == 0:
        return 1
    rows = []
    for i in range(b):
        rows.append([0] * i + list(f) + [0] * (n - a - 1 - i))
    for i in range(a):
        rows.append([0] * i + list(g) + [0] * (n - b - 1 - i))
    return det(rows, F)


def count_coprime_forms(a: int, b: int, F: GF2k) -> int:
    """Pairs of nonzero binary forms of degrees ``a``, ``b`` with no common factor."""
    total = 0
    forms_a = [f for f in itertools.product(F.elements(), repeat=a + 1) if any(f)]
    forms_b = [g for g in itertools.product(F.elements(), repeat=b + 1) if any(g)]
    for f in forms_a:
        for g in forms_b:
            if resultant(f, g, F):
                total += 1
    return total


def elliptic_points(F: GF2k) -> int:
    """Projective points of ``y^2 + x y = x^3 + 1`` over ``F``."""
    total = 1
    for x in F.elements():
        rhs = F.add(F.mul(F.mul(x, x), x), 1)
        for y in F.elements():
            if F.add(F.mul(y, y), F.mul(x, y)) == rhs:
                total += 1
    return total


def moebius(n: int) -> int:
    out, f = 1, 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            out = -out
        f += 1
    return -out if n > 1 else out


def closed_points(counts: Dict[int, int], e: int) -> int:
    total = sum(moebius(e // k) * counts[k] for k in range(1, e + 1) if e % k == 0)
    assert total % e == 0
    return total // e


def effective_divisors(counts: Dict[int, int], n: int) -> int:
    """Number of effective divisors of degree ``n`` from point counts over ``F_{q^k}``, ``k <= n``."""
    series = [1] + [0] * n
    for e in range(1, n + 1):
        p = closed_points(counts, e)
        # multiply by (1 - z^e)^{-p}
        for _ in range(p):
            for i in range(e, n + 1):
                series[i] += series[i - e]
    return series[n]


# ---------------------------------------------------------------------------
# symmetric functions in explicit variables


def elementary(k: int, xs: Sequence[Fraction]) -> Fraction:
    return sum((math.prod(c) for c in itertools.combinations(xs, k)), Fraction(0))


def complete(k: int, xs: Sequence[Fraction]) -> Fraction:
    return sum((math.prod(c) for c in itertools.combinations_with_replacement(xs, k)), Fraction(0))


def power(k: int, xs: Sequence[Fraction]) -> Fraction:
    return sum((x ** k for x in xs), Fraction(0))


def monomial(lam: Sequence[int], xs: Sequence[Fraction]) -> Fraction:
    n = len(xs)
    if len(lam) > n:
        return Fraction(0)
    exps = list(lam) + [0] * (n - len(lam))
    total = Fraction(0)
    for perm in set(itertools.permutations(exps)):
        total += math.prod(x ** e for x, e in zip(xs, perm))
    return total


def basis_value(basis: str, lam: Sequence[int], xs: Sequence[Fraction]) -> Fraction:
    if basis == "m":
        return monomial(lam, xs)
    fn = {"e": elementary, "h": complete, "p": power}[basis]
    return math.prod((fn(k, xs) for k in lam), start=Fraction(1))


def lattice_points_inside(x: Tuple[int, int], y: Tuple[int, int]) -> int:
    """Strict interior points of the triangle ``(0, x, x+y)`` by enumeration."""
    a, b, c = (0, 0), x, (x[0] + y[0], x[1] + y[1])
    xs, ys = [p[0] for p in (a, b, c)], [p[1] for p in (a, b, c)]

    def cross(o, p, q):
        return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])

    total = 0
    for px in range(min(xs), max(xs) + 1):
        for py in range(min(ys), max(ys) + 1):
            pt = (px, py)
            s = [cross(a, b, pt), cross(b, c, pt), cross(c, a, pt)]
            if all(v > 0 for v in s) or all(v < 0 for v in s):
                total += 1
    return total


def all_partitions(n: int) -> List[Tuple[int, ...]]:
    def rec(n, cap):
        if n == 0:
            yield ()
            return
        for k in range(min(n, cap), 0, -1):
            for rest in rec(n - k, k):
                yield (k,) + rest

    return list(rec(n, n))


def scalar_at(x, s1=2, s2=1) -> Fraction:
    """Value of a package scalar at ``s1``, ``s2`` (so ``L = (s1 s2)^2``)."""
    return Fraction(x.evaluate(Fraction(s1), Fraction(s2)))


def iter_pairs(values: Iterable) -> Iterable[tuple]:
    values = list(values)
    return itertools.product(values, repeat=2)


# ---------------------------------------------------------------------------
# torsion sheaves on a curve over F_q


def module_automorphisms(lam: Sequence[int], Q: int) -> int:
    """``|Aut(+_i O/m^{lam_i})|`` over a discrete valuation ring with residue field of size ``Q``."""
    if not lam:
        return 1
    conj = [sum(1 for part in lam if part > i) for i in range(max(lam))]
    out = Fraction(Q) ** sum(c * c for c in conj)
    for part in set(lam):
        for j in range(1, list(lam).count(part) + 1):
            out *= 1 - Fraction(1, Q ** j)
    assert out.denominator == 1
    return int(out)


def torsion_mass(counts: Dict[int, int], q: int, n: int) -> Fraction:
    """``sum 1/|Aut M|`` over torsion sheaves ``M`` of length ``n``, from point counts over ``F_{q^k}``."""
    series = [Fraction(0)] * (n + 1)
    series[0] = Fraction(1)
    for e in range(1, n + 1):
        local = [Fraction(0)] * (n + 1)
        for size in range(0, n // e + 1):
            local[size * e] = sum((Fraction(1, module_automorphisms(lam, q ** e)) for lam in all_partitions(size)),
                                  Fraction(0))
        for _ in range(closed_points(counts, e)):
            series = [sum(series[i] * local[k - i] for i in range(k + 1)) for k in range(n + 1)]
    return series[n]
