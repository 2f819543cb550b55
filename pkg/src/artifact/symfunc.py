"""Symmetric functions in the power-sum basis, with a q-dependent Hopf pairing.

A :class:`SymElem` is a finite Scalar combination of power-sum products
``p_lambda``.  Change of basis to ``e``, ``h`` and ``m`` goes through exact
transition matrices built from the Newton identities and from direct
monomial counting.  The Hopf pairing is computed by the recursion
``(x*y, z) = (x (x) y, Delta z)`` starting from ``(p_m, p_n) = delta n/(q^n-1)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Tuple

from .combinat import Partition, partitions, z_lambda
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "Partition",
    "partitions",
    "SymElem",
    "p",
    "e",
    "h",
    "m",
    "to_power_sums",
    "from_power_sums",
    "convert_basis",
    "coproduct",
    "coproduct_from_e",
    "hopf_pairing",
    "tensor_pairing",
    "hall_littlewood",
    "dominates",
    "WEIGHT_BOUND",
]

WEIGHT_BOUND = 12
BASES = ("e", "h", "m", "p")


def _norm(lam: Iterable[int]) -> Partition:
    return tuple(sorted((int(x) for x in lam), reverse=True))


class SymElem:
    """A symmetric function stored in the power-sum basis."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Partition, Scalar] | None = None):
        self.terms: Dict[Partition, Scalar] = {}
        for lam, c in (terms or {}).items():
            c = Scalar.coerce(c)
            if not c.is_zero():
                key = _norm(lam)
                self.terms[key] = self.terms.get(key, ZERO) + c
        self.terms = {k: c for k, c in self.terms.items() if not c.is_zero()}

    @classmethod
    def one(cls) -> "SymElem":
        return cls({(): ONE})

    def __add__(self, other: "SymElem") -> "SymElem":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, ZERO) + c
        return SymElem(out)

    def __neg__(self) -> "SymElem":
        return SymElem({lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other: "SymElem") -> "SymElem":
        return self + (-other)

    def __mul__(self, other) -> "SymElem":
        if isinstance(other, SymElem):
            out: Dict[Partition, Scalar] = {}
            for la, ca in self.terms.items():
                for lb, cb in other.terms.items():
                    key = _norm(la + lb)
                    out[key] = out.get(key, ZERO) + ca * cb
            return SymElem(out)
        c = Scalar.coerce(other)
        return SymElem({lam: x * c for lam, x in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "SymElem":
        return self * Scalar.coerce(other).inverse()

    def __pow__(self, n: int) -> "SymElem":
        out = SymElem.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, SymElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def weights(self) -> set:
        return {sum(lam) for lam in self.terms}

    def homogeneous_part(self, n: int) -> "SymElem":
        return SymElem({lam: c for lam, c in self.terms.items() if sum(lam) == n})

    def map_coefficients(self, fn) -> "SymElem":
        return SymElem({lam: fn(c) for lam, c in self.terms.items()})

    def __str__(self) -> str:
        return render(self.terms, "p")

    __repr__ = __str__


def render(coeffs: Dict[Partition, Scalar], basis: str) -> str:
    if not coeffs:
        return "0"
    parts = []
    for lam in sorted(coeffs, key=lambda la: (sum(la), [-x for x in la])):
        c = coeffs[lam]
        name = f"{basis}({','.join(str(x) for x in lam)})" if lam else "1"
        parts.append(f"({c})*{name}" if lam else f"({c})")
    return " + ".join(parts)


def p(*lam: int) -> SymElem:
    return SymElem({_norm(lam): ONE})


# ---------------------------------------------------------------------------
# transition matrices (rational entries), cached per weight


@lru_cache(maxsize=None)
def _e_in_p(n: int) -> Dict[Partition, Fraction]:
    """``e_n = sum_lambda (-1)^{n - l(lambda)} p_lambda / z_lambda``."""
    return {lam: Fraction((-1) ** (n - len(lam)), z_lambda(lam)) for lam in partitions(n)}


@lru_cache(maxsize=None)
def _h_in_p(n: int) -> Dict[Partition, Fraction]:
    """``h_n = sum_lambda p_lambda / z_lambda``."""
    return {lam: Fraction(1, z_lambda(lam)) for lam in partitions(n)}


def _multiply_rational(a: Dict[Partition, Fraction], b: Dict[Partition, Fraction]) -> Dict[Partition, Fraction]:
    out: Dict[Partition, Fraction] = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            key = _norm(la + lb)
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return out


@lru_cache(maxsize=None)
def _product_basis_in_p(basis: str, lam: Partition) -> Dict[Partition, Fraction]:
    single = _e_in_p if basis == "e" else _h_in_p
    out: Dict[Partition, Fraction] = {(): Fraction(1)}
    for part in lam:
        out = _multiply_rational(out, single(part))
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _p_in_m(mu: Partition) -> Dict[Partition, int]:
    """Monomial expansion of ``p_mu``.

    The coefficient of ``m_lam`` counts maps from the parts of ``mu`` to the
    rows of ``lam`` whose fibres sum to the row lengths.
    """
    out = {}
    for lam in partitions(sum(mu)):
        count = _fill_count(mu, lam)
        if count:
            out[lam] = count
    return out


@lru_cache(maxsize=None)
def _fill_count(parts: Partition, capacities: Partition) -> int:
    if not parts:
        return 1 if not any(capacities) else 0
    head, rest = parts[0], parts[1:]
    total = 0
    for j, cap in enumerate(capacities):
        if cap >= head:
            nxt = list(capacities)
            nxt[j] -= head
            total += _fill_count(rest, tuple(sorted(nxt, reverse=True)))
    return total


def _invert(matrix: Dict[Partition, Dict[Partition, Fraction]], index: Tuple[Partition, ...]):
    """Invert a square rational matrix given as rows ``row -> {col: value}``."""
    n = len(index)
    pos = {lam: i for i, lam in enumerate(index)}
    a = [[Fraction(0)] * (2 * n) for _ in range(n)]
    for lam, row in matrix.items():
        for mu, val in row.items():
            a[pos[lam]][pos[mu]] = Fraction(val)
        a[pos[lam]][n + pos[lam]] = Fraction(1)
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return {index[i]: {index[j]: a[i][n + j] for j in range(n) if a[i][n + j] != 0} for i in range(n)}


@lru_cache(maxsize=None)
def _basis_to_p_matrix(basis: str, n: int) -> Dict[Partition, Dict[Partition, Fraction]]:
    if basis == "p":
        return {lam: {lam: Fraction(1)} for lam in partitions(n)}
    if basis in ("e", "h"):
        return {lam: _product_basis_in_p(basis, lam) for lam in partitions(n)}
    if basis == "m":
        p_to_m = {mu: {lam: Fraction(c) for lam, c in _p_in_m(mu).items()} for mu in partitions(n)}
        return _invert(p_to_m, partitions(n))
    raise ValueError(f"unsupported basis {basis!r}; expected one of {BASES}")


@lru_cache(maxsize=None)
def _p_to_basis_matrix(basis: str, n: int) -> Dict[Partition, Dict[Partition, Fraction]]:
    if basis == "p":
        return _basis_to_p_matrix("p", n)
    if basis == "m":
        return {mu: {lam: Fraction(c) for lam, c in _p_in_m(mu).items()} for mu in partitions(n)}
    return _invert(_basis_to_p_matrix(basis, n), partitions(n))


def _check(basis: str, lam: Partition) -> None:
    if basis not in BASES:
        raise ValueError(f"unsupported basis {basis!r}; expected one of {BASES}")
    if sum(lam) > WEIGHT_BOUND:
        raise ValueError(f"weight {sum(lam)} exceeds the bound {WEIGHT_BOUND}")


def to_power_sums(coeffs: Dict[Partition, Scalar], basis: str) -> SymElem:
    """Re-express ``sum c_lambda b_lambda`` (``b`` in ``basis``) in power sums."""
    out: Dict[Partition, Scalar] = {}
    for lam, c in coeffs.items():
        lam = _norm(lam)
        _check(basis, lam)
        for mu, val in _basis_to_p_matrix(basis, sum(lam))[lam].items():
            out[mu] = out.get(mu, ZERO) + Scalar.coerce(c) * Scalar(val)
    return SymElem(out)


def from_power_sums(x: SymElem, basis: str) -> Dict[Partition, Scalar]:
    """Coefficients of ``x`` in ``basis``."""
    out: Dict[Partition, Scalar] = {}
    for lam, c in x.terms.items():
        _check(basis, lam)
        for mu, val in _p_to_basis_matrix(basis, sum(lam))[lam].items():
            out[mu] = out.get(mu, ZERO) + c * Scalar(val)
    return {k: v for k, v in out.items() if not v.is_zero()}


def convert_basis(coeffs: Dict[Partition, Scalar], basis: str) -> SymElem:
    """Alias of :func:`to_power_sums`: an element given in ``basis`` as a SymElem."""
    return to_power_sums(coeffs, basis)


def e(*lam: int) -> SymElem:
    return to_power_sums({_norm(lam): ONE}, "e")


def h(*lam: int) -> SymElem:
    return to_power_sums({_norm(lam): ONE}, "h")


def m(*lam: int) -> SymElem:
    return to_power_sums({_norm(lam): ONE}, "m")


# ---------------------------------------------------------------------------
# coproduct

Tensor = Dict[Tuple[Partition, Partition], Scalar]


def _tensor_add(out: Tensor, key, c: Scalar) -> None:
    new = out.get(key, ZERO) + c
    if new.is_zero():
        out.pop(key, None)
    else:
        out[key] = new


def coproduct(x: SymElem) -> Tensor:
    """``Delta`` on power sums: each ``p_n`` is primitive.

    This is the working form; :func:`coproduct_from_e` computes the same map
    from the defining rule on elementary functions, and the test suite checks
    that the two agree.
    """
    out: Tensor = {}
    for lam, c in x.terms.items():
        n = len(lam)
        for mask in range(1 << n):
            left = _norm(lam[i] for i in range(n) if mask >> i & 1)
            right = _norm(lam[i] for i in range(n) if not mask >> i & 1)
            _tensor_add(out, (left, right), c)
    return out


def coproduct_from_e(x: SymElem) -> Tensor:
    """``Delta`` from ``Delta(e_n) = sum_r e_r (x) e_{n-r}``, extended multiplicatively."""
    out: Tensor = {}
    for lam, c in from_power_sums(x, "e").items():
        # Delta(e_lam) in e (x) e, then convert both legs to power sums
        acc: Dict[Tuple[Partition, Partition], Fraction] = {((), ()): Fraction(1)}
        for part in lam:
            nxt: Dict[Tuple[Partition, Partition], Fraction] = {}
            for (a, b), val in acc.items():
                for r in range(part + 1):
                    key = (_norm(a + ((r,) if r else ())), _norm(b + ((part - r,) if part - r else ())))
                    nxt[key] = nxt.get(key, Fraction(0)) + val
            acc = nxt
        for (a, b), val in acc.items():
            left = to_power_sums({a: ONE}, "e") if a else SymElem.one()
            right = to_power_sums({b: ONE}, "e") if b else SymElem.one()
            for la, ca in left.terms.items():
                for lb, cb in right.terms.items():
                    _tensor_add(out, (la, lb), c * ca * cb * Scalar(val))
    return out


# ---------------------------------------------------------------------------
# Hopf pairing


def _pair_power_sums(lam: Partition, mu: Partition, q: Scalar, cache: dict) -> Scalar:
    key = (lam, mu)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if sum(lam) != sum(mu):
        val = ZERO
    elif not lam:
        val = ONE
    elif len(lam) == 1 and len(mu) == 1:
        n = lam[0]
        val = Scalar(n) / (q ** n - 1)
    elif len(lam) == 1:
        # (p_n, y z) = (Delta p_n, y (x) z): a primitive element pairs to zero
        # with any product of two positive-degree elements
        val = ZERO
    else:
        # (p_a * p_rest, z) = (p_a (x) p_rest, Delta z)
        head, rest = lam[:1], lam[1:]
        val = ZERO
        for (left, right), c in coproduct(SymElem({mu: ONE})).items():
            if sum(left) != head[0]:
                continue
            a = _pair_power_sums(head, left, q, cache)
            if a.is_zero():
                continue
            val = val + c * a * _pair_power_sums(rest, right, q, cache)
    cache[key] = val
    return val


_PAIR_CACHES: Dict[Scalar, dict] = {}


def hopf_pairing(x: SymElem, y: SymElem, q: Scalar) -> Scalar:
    """The Hopf pairing with ``(p_m, p_n) = delta_{mn} n / (q^n - 1)``."""
    q = Scalar.coerce(q)
    cache = _PAIR_CACHES.setdefault(q, {})
    total = ZERO
    for la, ca in x.terms.items():
        for lb, cb in y.terms.items():
            if sum(la) != sum(lb):
                continue
            val = _pair_power_sums(la, lb, q, cache)
            if not val.is_zero():
                total = total + ca * cb * val
    return total


def tensor_pairing(a: Tensor, b: Tensor, q: Scalar) -> Scalar:
    """``(x (x) y, z (x) w) = (x, z)(y, w)`` extended bilinearly."""
    total = ZERO
    for (la, lb), ca in a.items():
        for (ma, mb), cb in b.items():
            if sum(la) != sum(ma) or sum(lb) != sum(mb):
                continue
            left = hopf_pairing(SymElem({la: ONE}), SymElem({ma: ONE}), q)
            if left.is_zero():
                continue
            total = total + ca * cb * left * hopf_pairing(SymElem({lb: ONE}), SymElem({mb: ONE}), q)
    return total


# ---------------------------------------------------------------------------
# Hall-Littlewood functions


def dominates(lam: Partition, mu: Partition) -> bool:
    """``lam >= mu`` in dominance order (same weight assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def hall_littlewood(lam: Partition, q: Scalar) -> SymElem:
    """Gram-Schmidt of monomial functions against :func:`hopf_pairing`.

    Partitions of ``|lam|`` are processed from ``(1, ..., 1)`` upwards in
    reverse lexicographic order, a linear extension of dominance.  The
    result is ``m_lam`` plus a combination of lower monomials.
    """
    lam = _norm(lam)
    n = sum(lam)
    if n > WEIGHT_BOUND:
        raise ValueError(f"weight {n} exceeds the bound {WEIGHT_BOUND}")
    q = Scalar.coerce(q)
    return _hall_littlewood_all(n, q)[lam]


@lru_cache(maxsize=None)
def _hall_littlewood_all(n: int, q: Scalar) -> Dict[Partition, SymElem]:
    order = list(reversed(partitions(n)))  # (1^n) first, (n) last
    done: Dict[Partition, SymElem] = {}
    norms: Dict[Partition, Scalar] = {}
    for lam in order:
        vec = m(*lam) if lam else SymElem.one()
        for mu, pmu in done.items():
            coeff = hopf_pairing(vec, pmu, q) / norms[mu]
            if not coeff.is_zero():
                vec = vec - pmu * coeff
        done[lam] = vec
        norms[lam] = hopf_pairing(vec, vec, q)
    return done
