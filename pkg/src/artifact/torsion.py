"""Torsion Hall algebras: the local Steinitz algebra and the global torsion part.

Locally, words in the generators ``e_{d,x}`` of a closed point ``x`` of
degree ``deg x`` embed into symmetric functions with ``q = L^{deg x}``.
Globally, the torsion part of the composition algebra is the commutative
polynomial algebra in ``t_1, t_2, ...``; its second generating set
``1_{(0,d)}`` is related to the ``t_d`` through
``1 + sum 1_{(0,d)} z^d = exp(sum t_d / [d] z^d)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .motive import ZetaFunction, log_classes
from .scalars import ONE, ZERO, L, Scalar, TruncSeries, quantum_integer, series_exp, series_log, sqrtL
from .symfunc import SymElem, hopf_pairing, p as power_sum, to_power_sums

__all__ = [
    "BETA",
    "steinitz_embed",
    "local_coproduct",
    "local_pairing",
    "TorsionElem",
    "t_gen",
    "one_gen",
    "convert_t_one",
    "theta_series",
    "torsion_coproduct",
    "torsion_pairing",
    "generator_pairing",
    "generator_pairing_from_points",
    "points_of_degree",
]

BETA = sqrtL - sqrtL.inverse()
THETA_CONVENTIONS = ("bs", "divided")


def _theta_convention(name: str) -> str:
    aliases = {"no_division": "bs", "bs": "bs", "divided": "divided"}
    if name not in aliases:
        raise ValueError(f"unknown theta convention {name!r}; expected bs or divided")
    return aliases[name]


# ---------------------------------------------------------------------------
# local Steinitz algebra


def steinitz_embed(word: Sequence[int], point_degree: int = 1) -> SymElem:
    """Image of ``e_{d1,x} e_{d2,x} ...`` under ``e_{d,x} -> L_x^{-d(d-1)/2} e_d``."""
    if point_degree < 1:
        raise ValueError(f"point degree must be positive, got {point_degree}")
    lx = L ** point_degree
    out = SymElem.one()
    for d in word:
        if d < 0:
            raise ValueError(f"e_{{d,x}} needs d >= 0, got {d}")
        if d == 0:
            continue
        out = out * to_power_sums({(d,): ONE}, "e") * lx ** (-(d * (d - 1) // 2))
    return out


def local_coproduct(d: int, point_degree: int = 1) -> Dict[Tuple[int, int], Scalar]:
    """``Delta(e_{d,x}) = sum_r L_x^{-r(d-r)} e_{d-r,x} (x) e_{r,x}``, keyed by ``(d-r, r)``."""
    lx = L ** point_degree
    return {(d - r, r): lx ** (-r * (d - r)) for r in range(d + 1)}


def local_pairing(m: int, n: int, point_degree: int = 1) -> Scalar:
    """The local pairing of ``e_{m,x}`` and ``e_{n,x}`` in its printed closed form.

    It is ``delta_{mn} / (L_x^n (1 - L_x^{-1}))``; the pairing pulled back
    through :func:`steinitz_embed` equals ``1 / [GL_n](L_x)``, and the two
    agree for ``n <= 1``.
    """
    if m != n:
        return ZERO
    lx = L ** point_degree
    if n == 0:
        return ONE
    return (lx ** n * (1 - lx.inverse())).inverse()


# ---------------------------------------------------------------------------
# global torsion part

Monomial = Tuple[Tuple[int, ...], int]  # (sorted generator degrees, kappa weight m of k_{(0,m)})


class TorsionElem:
    """Polynomial in commuting generators ``t_d`` (or ``1_{(0,d)}``) times ``k_{(0,m)}``.

    ``kind`` names the generating set: ``"t"`` or ``"one"``.
    """

    __slots__ = ("terms", "kind")

    def __init__(self, terms: Dict[Monomial, Scalar] | None = None, kind: str = "t"):
        if kind not in ("t", "one"):
            raise ValueError(f"unknown torsion generator kind {kind!r}")
        self.kind = kind
        clean: Dict[Monomial, Scalar] = {}
        for (gens, kappa), c in (terms or {}).items():
            key = (tuple(sorted(gens)), int(kappa))
            c = clean.get(key, ZERO) + Scalar.coerce(c)
            clean[key] = c
        self.terms = {k: c for k, c in clean.items() if not c.is_zero()}

    @classmethod
    def scalar(cls, c, kind: str = "t") -> "TorsionElem":
        return cls({((), 0): Scalar.coerce(c)}, kind)

    def _same(self, other: "TorsionElem") -> None:
        if self.kind != other.kind and self.terms and other.terms:
            if not (self.is_scalar() or other.is_scalar()):
                raise TypeError(f"cannot combine {self.kind}-generators with {other.kind}-generators")

    def is_scalar(self) -> bool:
        return all(mon == ((), 0) for mon in self.terms)

    def _kind_with(self, other: "TorsionElem") -> str:
        if self.is_scalar():
            return other.kind
        return self.kind

    def __add__(self, other) -> "TorsionElem":
        if not isinstance(other, TorsionElem):
            other = TorsionElem.scalar(other, self.kind)
        self._same(other)
        out = dict(self.terms)
        for mon, c in other.terms.items():
            out[mon] = out.get(mon, ZERO) + c
        return TorsionElem(out, self._kind_with(other))

    __radd__ = __add__

    def __neg__(self) -> "TorsionElem":
        return TorsionElem({mon: -c for mon, c in self.terms.items()}, self.kind)

    def __sub__(self, other) -> "TorsionElem":
        if not isinstance(other, TorsionElem):
            other = TorsionElem.scalar(other, self.kind)
        return self + (-other)

    def __mul__(self, other) -> "TorsionElem":
        if isinstance(other, TorsionElem):
            self._same(other)
            out: Dict[Monomial, Scalar] = {}
            for (ga, ka), ca in self.terms.items():
                for (gb, kb), cb in other.terms.items():
                    key = (tuple(sorted(ga + gb)), ka + kb)
                    out[key] = out.get(key, ZERO) + ca * cb
            return TorsionElem(out, self._kind_with(other))
        c = Scalar.coerce(other)
        return TorsionElem({mon: x * c for mon, x in self.terms.items()}, self.kind)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TorsionElem":
        return self * Scalar.coerce(other).inverse()

    def __pow__(self, n: int) -> "TorsionElem":
        out = TorsionElem.scalar(ONE, self.kind)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, TorsionElem):
            if self.terms != other.terms:
                return False
            return self.kind == other.kind or self.is_scalar()
        if isinstance(other, (int, Fraction, Scalar)):
            return self == TorsionElem.scalar(other, self.kind)
        return NotImplemented

    def __hash__(self):
        return hash((self.kind, frozenset(self.terms.items())))

    def degree_set(self) -> set:
        return {sum(g) for g, _ in self.terms}

    def __str__(self) -> str:
        return render_torsion(self.terms, self.kind)

    __repr__ = __str__


def render_monomial(gens: Tuple[int, ...], kappa: int, kind: str) -> str:
    parts = []
    for d in sorted(set(gens)):
        name = f"t[{d}]" if kind == "t" else f"one[0,{d}]"
        e = gens.count(d)
        parts.append(name if e == 1 else f"{name}^{e}")
    if kappa:
        parts.append(f"k[0,{kappa}]")
    return "*".join(parts) if parts else "1"


def render_torsion(terms: Dict[Monomial, Scalar], kind: str) -> str:
    if not terms:
        return "0"
    out = []
    for (gens, kappa) in sorted(terms, key=lambda m: (sum(m[0]), m[0], m[1])):
        c = terms[(gens, kappa)]
        mon = render_monomial(gens, kappa, kind)
        out.append(f"({c})" if mon == "1" else f"({c})*{mon}")
    return " + ".join(out)


def t_gen(d: int) -> TorsionElem:
    if d < 1:
        raise ValueError(f"t_d needs d >= 1, got {d}")
    return TorsionElem({((d,), 0): ONE}, "t")


def one_gen(d: int) -> TorsionElem:
    if d < 0:
        raise ValueError(f"1_(0,d) needs d >= 0, got {d}")
    if d == 0:
        return TorsionElem.scalar(ONE, "one")
    return TorsionElem({((d,), 0): ONE}, "one")


@lru_cache(maxsize=None)
def _one_in_t(order: int) -> Tuple[TorsionElem, ...]:
    """``1_{(0,d)}`` as polynomials in ``t``, for ``d = 0..order``."""
    zero, one = TorsionElem({}, "t"), TorsionElem.scalar(ONE, "t")
    f = TruncSeries([zero] + [t_gen(d) / quantum_integer(d) for d in range(1, order + 1)], zero, one)
    return tuple(series_exp(f).coeffs)


@lru_cache(maxsize=None)
def _t_in_one(order: int) -> Tuple[TorsionElem, ...]:
    """``t_d`` as polynomials in ``1_{(0,*)}``, for ``d = 0..order`` (entry 0 unused)."""
    zero, one = TorsionElem({}, "one"), TorsionElem.scalar(ONE, "one")
    g = TruncSeries([one] + [one_gen(d) for d in range(1, order + 1)], zero, one)
    logs = series_log(g).coeffs
    return tuple(logs[d] * quantum_integer(d) if d else zero for d in range(order + 1))


def convert_t_one(x: TorsionElem, direction: str) -> TorsionElem:
    """Rewrite ``x`` in the other generating set.

    ``direction`` is ``"one_to_t"`` (input in ``1_{(0,d)}``) or ``"t_to_one"``.
    """
    if direction == "one_to_t":
        source, target, table = "one", "t", _one_in_t
    elif direction == "t_to_one":
        source, target, table = "t", "one", _t_in_one
    else:
        raise ValueError(f"unknown direction {direction!r}; expected one_to_t or t_to_one")
    if x.kind != source and not x.is_scalar():
        raise TypeError(f"{direction} needs an element in {source}-generators")
    top = max((max(g) for g, _ in x.terms if g), default=0)
    images = table(top)
    out = TorsionElem({}, target)
    for (gens, kappa), c in x.terms.items():
        term = TorsionElem({((), kappa): c}, target)
        for d in gens:
            term = term * images[d]
        out = out + term
    return out


def theta_series(order: int, convention: str = "bs") -> List[TorsionElem]:
    """``theta_0 .. theta_order`` from ``sum theta_l z^l = exp(beta sum t_d z^d)``.

    With ``convention="divided"`` each ``t_d`` is divided by ``[d]``.
    """
    convention = _theta_convention(convention)
    zero, one = TorsionElem({}, "t"), TorsionElem.scalar(ONE, "t")
    coeffs = [zero]
    for d in range(1, order + 1):
        c = BETA if convention == "bs" else BETA / quantum_integer(d)
        coeffs.append(t_gen(d) * c)
    return list(series_exp(TruncSeries(coeffs, zero, one)).coeffs)


Tensor = Dict[Tuple[Monomial, Monomial], Scalar]


def torsion_coproduct(x: TorsionElem) -> Tensor:
    """``Delta(t_d) = t_d (x) 1 + k_{(0,d)} (x) t_d``, extended multiplicatively.

    Torsion kappa weights commute with torsion generators, so every term is
    written with the kappa factor collected on the right of each leg.
    """
    if x.kind != "t" and not x.is_scalar():
        raise TypeError("torsion_coproduct needs an element in t-generators")
    out: Tensor = {}
    for (gens, kappa), c in x.terms.items():
        n = len(gens)
        for mask in range(1 << n):
            left = tuple(gens[i] for i in range(n) if mask >> i & 1)
            right = tuple(gens[i] for i in range(n) if not mask >> i & 1)
            key = ((left, kappa + sum(right)), (right, kappa))
            out[key] = out.get(key, ZERO) + c
    return {k: c for k, c in out.items() if not c.is_zero()}


def generator_pairing(d: int, zeta: ZetaFunction) -> Scalar:
    """``(t_d, t_d) = (1/d) [d]^2 [C_(d)] / (L^d - 1)``."""
    qd = quantum_integer(d)
    return qd * qd * log_classes(zeta, d) / (Scalar(d) * (L ** d - 1))


def points_of_degree(e: int, zeta: ZetaFunction) -> Scalar:
    """Motivic number of closed points of degree ``e``, by Moebius inversion of ``[C_(d)]``."""
    total = ZERO
    for k in range(1, e + 1):
        if e % k == 0:
            total = total + log_classes(zeta, k) * _moebius(e // k)
    return total / e


def _moebius(n: int) -> int:
    out, m, f = 1, n, 2
    while f * f <= m:
        if m % f == 0:
            m //= f
            if m % f == 0:
                return 0
            out = -out
        f += 1
    return -out if m > 1 else out


def generator_pairing_from_points(d: int, zeta: ZetaFunction) -> Scalar:
    """``(t_d, t_d)`` summed over closed points from the local symmetric-function side.

    Each point ``x`` of degree ``e | d`` contributes the pairing of
    ``t_{d,x} = [d] (e/d) p_{d/e}`` in symmetric functions at ``q = L^e``.
    """
    total = ZERO
    for e in range(1, d + 1):
        if d % e:
            continue
        local = power_sum(d // e) * (quantum_integer(d) * Fraction(e, d))
        total = total + points_of_degree(e, zeta) * hopf_pairing(local, local, L ** e)
    return total


def _pair_monomials(a: Tuple[int, ...], b: Tuple[int, ...], zeta: ZetaFunction, cache: dict) -> Scalar:
    key = (a, b)
    if key in cache:
        return cache[key]
    if sum(a) != sum(b):
        val = ZERO
    elif not a:
        val = ONE
    elif len(a) == 1 and len(b) == 1:
        val = generator_pairing(a[0], zeta)
    elif len(a) == 1:
        # Delta(t_d) has one leg of degree 0 in each term, so t_d pairs to
        # zero with any product of two positive-degree monomials
        val = ZERO
    else:
        # (t_head * t_rest, y) = (t_head (x) t_rest, Delta y); torsion kappa
        # weights pair to 1 because the symmetrised Euler form vanishes on them
        head, rest = a[:1], a[1:]
        val = ZERO
        for ((left, _), (right, _)), c in torsion_coproduct(TorsionElem({(b, 0): ONE})).items():
            if sum(left) != head[0]:
                continue
            first = _pair_monomials(head, tuple(sorted(left)), zeta, cache)
            if first.is_zero():
                continue
            val = val + c * first * _pair_monomials(rest, tuple(sorted(right)), zeta, cache)
    cache[key] = val
    return val


_PAIR_CACHES: Dict[ZetaFunction, dict] = {}


def torsion_pairing(a: TorsionElem, b: TorsionElem, zeta: ZetaFunction) -> Scalar:
    """Hopf pairing on the torsion part, from the generator rule and the coproduct."""
    if a.kind == "one" and not a.is_scalar():
        a = convert_t_one(a, "one_to_t")
    if b.kind == "one" and not b.is_scalar():
        b = convert_t_one(b, "one_to_t")
    cache = _PAIR_CACHES.setdefault(zeta, {})
    total = ZERO
    for (ga, ka), ca in a.terms.items():
        for (gb, kb), cb in b.terms.items():
            val = _pair_monomials(ga, gb, zeta, cache)
            if not val.is_zero():
                total = total + ca * cb * val
    return total
