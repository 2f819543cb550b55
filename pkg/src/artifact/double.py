"""Cross relations of a reduced Drinfeld double, computed from coproducts and pairings.

For ``a`` in the lower copy and ``b`` in the upper copy the double satisfies

    sum a1^- b2^+ (a2, b1) = sum b1^+ a2^- (a1, b2).

The two terms ``a^- b^+`` and ``b^+ a^-`` appear with coefficient one, so
the commutator ``[b^+, a^-]`` equals the remaining terms of the left side
minus those of the right side.  Here this is done for the rank <= 1 part of
a composition algebra of a curve: generators ``1_{(1,n)}``, the torsion
generators ``t_d`` and the weights ``k_{(r,d)}``.  The reduction identifies
``k^-_alpha`` with ``k_{-alpha}``.

Results are dictionaries keyed by ``(side, l, k_power, c_half_power)``
meaning ``theta~^{side}_l k^{k_power} c^{c_half_power/2}`` with
``theta~^{+-}_l = theta^{+-}_l c^{-+l/2}``; ``side`` is ``"0"`` when ``l = 0``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .motive import ZetaFunction, make_zeta
from .scalars import ONE, ZERO, L, Scalar
from .torsion import TorsionElem, generator_pairing, t_gen, theta_series, torsion_pairing

__all__ = [
    "HallMon",
    "hall_coproduct",
    "hall_pairing",
    "double_commutator",
    "hall_cross_commutator",
    "printed_cross_commutator",
    "format_hall_form",
]

P1 = make_zeta("p1")

# torsion factor: None | ("one", n) | ("t", d) | ("theta", l); kappa: (r, doubled d)
HallMon = Tuple[Optional[Tuple[str, int]], Tuple[int, int]]
HallForm = Dict[Tuple[str, int, int, int], Scalar]

UNIT: HallMon = (None, (0, 0))


def hall_coproduct(x: HallMon, depth: int) -> List[Tuple[Scalar, HallMon, HallMon]]:
    """Coproduct terms of a generator times a weight; sums over ``theta_l`` stop at ``l = depth``."""
    tors, (r, c2) = x
    if tors is None:
        return [(ONE, x, x)]
    kind, n = tors
    if kind == "one":
        # Delta(1_n) = 1_n (x) 1 + sum_l theta_l k c^{n-l} (x) 1_{n-l}
        out = [(ONE, (tors, (r, c2)), (None, (r, c2)))]
        for l in range(depth + 1):
            left = (("theta", l) if l else None, (r + 1, c2 + 2 * (n - l)))
            out.append((ONE, left, (("one", n - l), (r, c2))))
        return out
    if kind == "t":
        # Delta(t_d) = t_d (x) 1 + c^d (x) t_d
        return [(ONE, (tors, (r, c2)), (None, (r, c2))),
                (ONE, (None, (r, c2 + 2 * n)), (tors, (r, c2)))]
    raise NotImplementedError(f"coproduct of {kind} is not needed by the cross relations")


def _weight_pairing(a: Tuple[int, int], b: Tuple[int, int], genus: int) -> Scalar:
    # (k_alpha, k_beta) = L^{<alpha,beta>_sym / 2}; the symmetrised Euler form is 2(1-g) r r'
    e = (1 - genus) * a[0] * b[0]
    return L ** e


def _pic_class(zeta: ZetaFunction) -> Scalar:
    total = ZERO
    for c in zeta.numerator:
        total = total + c
    return total


def hall_pairing(x: HallMon, y: HallMon, zeta: ZetaFunction = P1) -> Scalar:
    """``(u k_alpha, w k_beta) = (u, w) (k_alpha, k_beta)``."""
    (tx, kx), (ty, ky) = x, y
    weights = _weight_pairing(kx, ky, zeta.genus)
    if tx is None or ty is None:
        return weights if tx is None and ty is None else ZERO
    if (tx[0] == "one") != (ty[0] == "one"):
        return ZERO
    if tx[0] == "one":
        return weights * _pic_class(zeta) / (L - 1) if tx[1] == ty[1] else ZERO
    if tx[0] == "t" and ty[0] == "t":
        return weights * generator_pairing(tx[1], zeta) if tx[1] == ty[1] else ZERO
    return weights * torsion_pairing(_torsion(tx), _torsion(ty), zeta)


def _torsion(tors: Tuple[str, int]) -> TorsionElem:
    kind, n = tors
    return t_gen(n) if kind == "t" else theta_series(n)[n]


def _to_form(x: HallMon, copy: str) -> Tuple[str, int, int, int]:
    tors, (r, c2) = x
    if tors is not None and tors[0] != "theta":
        raise NotImplementedError(f"cross term {tors} outside the theta/weight span")
    l = tors[1] if tors is not None else 0
    if copy == "+":
        return ("+" if l else "0", l, r, c2 + l)
    return ("-" if l else "0", l, -r, -c2 - l)


def _is_weight(x: HallMon) -> bool:
    return x[0] is None or (x[0][0] == "theta" and x[0][1] == 0)


def double_commutator(b: HallMon, a: HallMon, zeta: ZetaFunction = P1, depth: int = 8) -> HallForm:
    """``[b^+, a^-]`` in the reduced double, from the cross relation alone."""
    out: HallForm = {}

    def add(key, c):
        out[key] = out.get(key, ZERO) + c

    da = hall_coproduct(a, depth)
    db = hall_coproduct(b, depth)
    # left side: a1^- b2^+ (a2, b1); the term a1 = a, b2 = b is a^- b^+
    for ca, a1, a2 in da:
        for cb, b1, b2 in db:
            w = hall_pairing(a2, b1, zeta)
            if w.is_zero():
                continue
            if a1 == a and b2 == b:
                if w != ONE or ca != ONE or cb != ONE:
                    raise ArithmeticError("leading term of the cross relation is not a^- b^+")
                continue
            if _is_weight(b2) and b2[1] == (0, 0):
                add(_to_form(a1, "-"), ca * cb * w)
            elif _is_weight(a1) and a1[1] == (0, 0):
                add(_to_form(b2, "+"), ca * cb * w)
            else:
                raise NotImplementedError("cross term with two non-trivial factors")
    # right side: b1^+ a2^- (a1, b2); the term b1 = b, a2 = a is b^+ a^-
    for ca, a1, a2 in da:
        for cb, b1, b2 in db:
            w = hall_pairing(a1, b2, zeta)
            if w.is_zero():
                continue
            if b1 == b and a2 == a:
                if w != ONE or ca != ONE or cb != ONE:
                    raise ArithmeticError("leading term of the cross relation is not b^+ a^-")
                continue
            if _is_weight(a2) and a2[1] == (0, 0):
                add(_to_form(b1, "+"), -ca * cb * w)
            elif _is_weight(b1) and b1[1] == (0, 0):
                add(_to_form(a2, "-"), -ca * cb * w)
            else:
                raise NotImplementedError("cross term with two non-trivial factors")
    return {k: c for k, c in out.items() if not c.is_zero()}


@lru_cache(maxsize=None)
def _cached_cross(m: int, n: int, zeta: ZetaFunction) -> Tuple[Tuple[Tuple[str, int, int, int], Scalar], ...]:
    depth = abs(m - n) + 1
    form = double_commutator((("one", m), (0, 0)), (("one", n), (0, 0)), zeta, depth)
    return tuple(sorted(form.items(), key=lambda kv: kv[0]))


def hall_cross_commutator(m: int, n: int, zeta: ZetaFunction = P1) -> HallForm:
    """``[1^+_{(1,m)}, 1^-_{(1,n)}]`` computed in the reduced double."""
    return dict(_cached_cross(m, n, zeta))


def printed_cross_commutator(m: int, n: int) -> HallForm:
    """The closed formula with the case split on ``n - m`` as it is usually quoted.

    ``(1/(1-L)) theta~^+_{n-m} k c^{(m+n)/2}`` for ``n > m``, ``0`` for
    ``n = m``, ``(1/(L-1)) theta~^-_{m-n} k^{-1} c^{-(m+n)/2}`` for ``n < m``.
    It agrees with :func:`hall_cross_commutator` at ``(n, m)`` off the
    diagonal, and not on it.
    """
    if n > m:
        return {("+", n - m, 1, m + n): ONE / (1 - L)}
    if n < m:
        return {("-", m - n, -1, -(m + n)): ONE / (L - 1)}
    return {}


def format_hall_form(form: HallForm) -> str:
    if not form:
        return "0"
    parts = []
    for (side, l, kp, c2), c in sorted(form.items()):
        factors = []
        if l:
            factors.append(f"thetaT{side}[{l}]")
        if kp:
            factors.append("k" if kp == 1 else f"k^({kp})")
        if c2:
            factors.append("c2" if c2 == 1 else f"c2^({c2})")
        parts.append(f"({c})" + "".join("*" + f for f in factors))
    return " + ".join(parts)
