"""Quantum toroidal gl(1) inside the genus-one double.

The toroidal algebra is given by current relations in ``E(z)``, ``F(z)``,
``K^{+-}(z)``.  Every relation is a finite identity once a coefficient of
``z^a w^b`` (or ``z1^a z2^b w^c``) is extracted, so each mode relation is
transported through a dictionary

    E_k -> n_E t_(1,k),  F_k -> n_F t_(-1,k),  H_r -> n_H(r) t_(0,r),
    K -> k_K,  q^c -> k_C

and normalised in the double.  The normalisations, the weights ``k_K``,
``k_C``, and the parameters ``q``, ``{q1, q2, q3}`` of the toroidal
algebra are fixed by :func:`calibrate`, which solves the low ``[E, F]``
relations for ``n_F`` and ``n_H`` and keeps the first variant under which
every checked relation vanishes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..scalars import ONE, ZERO, L, Scalar, TruncSeries, q1, q2, s1, s2, series_exp, sqrtL
from .algebra import EllElem, EllipticDouble, default_double
from .lattice import Point
from .sl2z import GammaLift, sl2z_apply

__all__ = [
    "DimDictionary",
    "RelationFailure",
    "dim_dictionary",
    "dim_relation_check",
    "miki_check",
    "miki_commutator_test",
    "calibrate",
    "mode_relations",
    "RELATION_KINDS",
    "QBRACKET_SERRE",
]


class RelationFailure(ArithmeticError):
    """A transported relation did not normalise to zero."""

    def __init__(self, relation: str, modes: tuple, residue: EllElem):
        super().__init__(f"relation {relation} at modes {modes} leaves residue {residue}")
        self.relation = relation
        self.modes = modes
        self.residue = residue


@dataclass
class DimDictionary:
    """Images of the toroidal generators in the double, with the parameters used."""

    q: Scalar
    params: Tuple[Scalar, Scalar, Scalar]
    kappa_K: Point
    kappa_C: Point
    n_E: Scalar = ONE
    n_F: Scalar = ONE
    n_H: Dict[int, Scalar] = field(default_factory=dict)
    algebra: EllipticDouble = field(default_factory=default_double)
    label: str = ""

    # generators -----------------------------------------------------------
    def K(self, power: int = 1) -> EllElem:
        return self.algebra.k((2 * power * self.kappa_K[0], 2 * power * self.kappa_K[1]))

    def qc(self, power: int = 1) -> EllElem:
        return self.algebra.k((2 * power * self.kappa_C[0], 2 * power * self.kappa_C[1]))

    def E(self, k: int) -> EllElem:
        return self.algebra.t((1, k)) * self.n_E

    def F(self, k: int) -> EllElem:
        return self.algebra.t((-1, k)) * self.n_F

    def H(self, r: int) -> EllElem:
        if r not in self.n_H:
            raise KeyError(f"n_H({r}) is not calibrated")
        return self.algebra.t((0, r)) * self.n_H[r]

    def psi(self, sign: int, r: int) -> EllElem:
        """Coefficient of ``u^r`` in ``exp(+-(q - q^{-1}) sum_s H_{+-s} u^s)``."""
        if r < 0:
            return EllElem({}, self.algebra)
        cache = self.__dict__.setdefault("_psi_cache", {})
        key = (sign, r)
        if key not in cache:
            zero, one = EllElem({}, self.algebra), self.algebra.one()
            coeffs = [zero] + [self.H(sign * s) * ((self.q - self.q.inverse()) * sign) for s in range(1, r + 1)]
            series = series_exp(TruncSeries(coeffs, zero, one))
            for s, c in enumerate(series.coeffs):
                cache[(sign, s)] = c
        return cache[key]

    def g_coeffs(self) -> Dict[Tuple[int, int], Scalar]:
        """``g(z, w) = (z - q1 w)(z - q2 w)(z - q3 w)`` as ``{(deg z, deg w): coeff}``."""
        a, b, c = self.params
        e1, e2, e3 = a + b + c, a * b + a * c + b * c, a * b * c
        return {(3, 0): ONE, (2, 1): -e1, (1, 2): e2, (0, 3): -e3}

    def describe(self) -> dict:
        return {
            "q": str(self.q),
            "q1,q2,q3": [str(p) for p in self.params],
            "K": f"k{self.kappa_K}",
            "q^c": f"k{self.kappa_C}",
            "n_E": str(self.n_E),
            "n_F": str(self.n_F),
            "n_H": {r: str(v) for r, v in sorted(self.n_H.items())},
        }


# ---------------------------------------------------------------------------
# mode relations


def _swap(g: Dict[Tuple[int, int], Scalar]) -> Dict[Tuple[int, int], Scalar]:
    return {(j, i): c for (i, j), c in g.items()}


def _current(D: DimDictionary, kind: str, exponent: int, shift: int = 0) -> Optional[EllElem]:
    """Coefficient of ``z^exponent`` in a current; ``shift`` rescales ``z -> q^{shift c} z``."""
    if kind == "E":
        return D.E(-exponent)
    if kind == "F":
        return D.F(-exponent)
    if kind == "K+":
        r = -exponent
        if r < 0:
            return None
        out = D.K() * D.psi(1, r)
        return out * D.qc(-shift * r) if shift and r else out
    if kind == "K-":
        r = exponent
        if r < 0:
            return None
        out = D.K(-1) * D.psi(-1, r)
        return out * D.qc(shift * r) if shift and r else out
    raise ValueError(kind)


def _two_current_term(D, poly, first, second, target, order):
    """Coefficient of ``z^A w^B`` in ``poly(z, w) X(first var) Y(second var)``.

    ``first``/``second`` are ``(kind, var, shift)``; ``order`` lists the
    variables in the multiplication order of the two currents.
    """
    A, B = target
    total = EllElem({}, D.algebra)
    for (i, j), c in poly.items():
        want = {"z": A - i, "w": B - j}
        x = _current(D, first[0], want[first[1]], first[2])
        y = _current(D, second[0], want[second[1]], second[2])
        if x is None or y is None:
            continue
        total = total + (x * y) * c
    return total


def _poly_with_qc(D: DimDictionary, factors) -> Dict[Tuple[int, int], EllElem]:
    """Product of linear forms ``(a z^{..} + b w)`` whose coefficients may carry ``q^c`` powers.

    ``factors`` is a list of ``((cz, pz), (cw, pw))`` meaning
    ``cz q^{pz c} z + cw q^{pw c} w``.
    """
    poly: Dict[Tuple[int, int], EllElem] = {(0, 0): D.algebra.one()}
    for (cz, pz), (cw, pw) in factors:
        nxt: Dict[Tuple[int, int], EllElem] = {}
        for (i, j), c in poly.items():
            for (di, dj), (cc, pp) in (((1, 0), (cz, pz)), ((0, 1), (cw, pw))):
                term = c * D.qc(pp) * cc if pp else c * cc
                key = (i + di, j + dj)
                nxt[key] = nxt[key] + term if key in nxt else term
        poly = nxt
    return poly


def _g_factors(D: DimDictionary, first_shift: int, second_shift: int, reverse: bool):
    """Linear factors of ``g(q^{s1 c} z, q^{s2 c} w)`` (or of ``g(w', z')`` when ``reverse``)."""
    out = []
    for p in D.params:
        if not reverse:
            out.append(((ONE, first_shift), (-p, second_shift)))
        else:
            out.append(((-p, first_shift), (ONE, second_shift)))
    return out


def mode_relations(D: DimDictionary, kind: str, modes) -> EllElem:
    """Residue of one mode relation of the toroidal algebra, transported to the double."""
    g = D.g_coeffs()
    if kind == "EE":
        A, B = modes
        return (_two_current_term(D, g, ("E", "z", 0), ("E", "w", 0), (A, B), "zw")
                + _two_current_term(D, _swap(g), ("E", "w", 0), ("E", "z", 0), (A, B), "wz"))
    if kind == "FF":
        A, B = modes
        return (_two_current_term(D, _swap(g), ("F", "z", 0), ("F", "w", 0), (A, B), "zw")
                + _two_current_term(D, g, ("F", "w", 0), ("F", "z", 0), (A, B), "wz"))
    if kind in ("K+E", "K-E", "K+F", "K-F"):
        sign = kind[1]
        target = kind[2]
        A, B = modes
        if target == "E":
            shift = 0 if sign == "+" else 1
            gl, gr = g, _swap(g)
        else:
            shift = 1 if sign == "+" else 0
            gl, gr = _swap(g), g
        kk = "K" + sign
        return (_two_current_term(D, gl, (kk, "z", shift), (target, "w", 0), (A, B), "zw")
                + _two_current_term(D, gr, (target, "w", 0), (kk, "z", shift), (A, B), "wz"))
    if kind == "EF":
        k, l = modes
        lhs = D.E(k) * D.F(l) - D.F(l) * D.E(k)
        rhs = EllElem({}, D.algebra)
        if k + l >= 0:
            rhs = rhs + D.qc(-l) * D.K() * D.psi(1, k + l)
        if k + l <= 0:
            rhs = rhs - D.qc(-k) * D.K(-1) * D.psi(-1, -(k + l))
        return lhs - rhs * (D.q - D.q.inverse()).inverse()
    if kind == "KK":
        # g(q^{-c}z,w) g(w,q^c z) K-(z)K+(w) = g(w,q^{-c}z) g(q^c z,w) K+(w)K-(z)
        A, B = modes
        left = _poly_with_qc(D, _g_factors(D, -1, 0, False) + _g_factors(D, 1, 0, True))
        right = _poly_with_qc(D, _g_factors(D, -1, 0, True) + _g_factors(D, 1, 0, False))
        total = EllElem({}, D.algebra)
        for poly, order, sgn in ((left, "zw", 1), (right, "wz", -1)):
            for (i, j), c in poly.items():
                x = _current(D, "K-", A - i)
                y = _current(D, "K+", B - j)
                if x is None or y is None:
                    continue
                prod = c * x * y if order == "zw" else c * y * x
                total = total + prod * sgn
        return total
    if kind in ("SerreE", "SerreF"):
        # coefficient of z1^-a z2^-b z3^-c in Sym z2/z3 [X(z1), [X(z2), X(z3)]]
        X = D.E if kind == "SerreE" else D.F
        total = EllElem({}, D.algebra)
        for a, b, c in itertools.permutations(modes):
            inner = X(b + 1) * X(c - 1) - X(c - 1) * X(b + 1)
            total = total + X(a) * inner - inner * X(a)
        return total
    if kind in ("SerreE-qbracket", "SerreF-qbracket"):
        # Sym_{z1,z2} [X(z1), [X(z2), X(w)]_q]_{q^-1}, modes (a, b, c) of (z1, z2, w)
        a, b, c = modes
        X = D.E if kind.startswith("SerreE") else D.F
        q = D.q
        total = EllElem({}, D.algebra)
        for m, n in ((a, b), (b, a)):
            x1, x2, xw = X(m), X(n), X(c)
            inner = x2 * xw - xw * x2 * q
            total = total + x1 * inner - inner * x1 * q.inverse()
        return total
    if kind == "current":
        # zeta(w/z) x(z) x(w) = zeta(z/w) x(w) x(z) with x(z) = sum_n t_(1,n) z^n and
        # zeta(u) = (1 - q1 u)(1 - q2 u) / ((1 - u)(1 - L u)), cleared of denominators:
        # (z - q1 w)(z - q2 w)(w - L z) x(z) x(w) + (w - q1 z)(w - q2 z)(z - L w) x(w) x(z) = 0
        A, B = modes
        t = D.algebra.t
        factors = [{(1, 0): ONE, (0, 1): -q1}, {(1, 0): ONE, (0, 1): -q2}, {(1, 0): -L, (0, 1): ONE}]
        poly: Dict[Tuple[int, int], Scalar] = {(0, 0): ONE}
        for f in factors:
            nxt: Dict[Tuple[int, int], Scalar] = {}
            for (i, j), c in poly.items():
                for (di, dj), cc in f.items():
                    key = (i + di, j + dj)
                    nxt[key] = nxt.get(key, ZERO) + c * cc
            poly = nxt
        total = EllElem({}, D.algebra)
        for (i, j), c in poly.items():
            # the second term is the first with z and w exchanged
            total = total + t((1, A - i)) * t((1, B - j)) * c + t((1, B - i)) * t((1, A - j)) * c
        return total
    raise ValueError(f"unknown relation {kind!r}")


RELATION_KINDS = ("EE", "FF", "K+E", "K-E", "K+F", "K-F", "EF", "KK", "SerreE", "SerreF", "current")
QBRACKET_SERRE = ("SerreE-qbracket", "SerreF-qbracket")


def _mode_grid(kind: str, window: int) -> List[tuple]:
    rng = range(-window, window + 1)
    if kind in ("SerreE", "SerreF"):
        return [m for m in itertools.product(rng, repeat=3) if m[0] <= m[1] <= m[2]]
    if kind in QBRACKET_SERRE:
        return [m for m in itertools.product(rng, repeat=3) if m[0] <= m[1]]
    if kind == "KK":
        return [(A, B) for A in range(-window, window + 1) for B in range(-window, window + 1)]
    return list(itertools.product(rng, repeat=2))


# ---------------------------------------------------------------------------
# calibration


def _variants(algebra: EllipticDouble) -> Iterable[DimDictionary]:
    inv = lambda x: x.inverse()
    mot = {1: (q1, q2, L.inverse()), -1: (inv(q1), inv(q2), L)}
    roots = [(sqrtL, -1), (sqrtL.inverse(), 1), (s1, 1), (s1.inverse(), -1), (s2, 1), (s2.inverse(), -1)]
    kappas = []
    for a, b in itertools.product((1, -1), repeat=2):
        kappas.append(((a, 0), (0, b), f"K=k({a},0), q^c=k(0,{b})"))
    for a, b in itertools.product((1, -1), repeat=2):
        kappas.append(((0, b), (a, 0), f"K=k(0,{b}), q^c=k({a},0)"))
    for (root, side), sgn in itertools.product(roots, (1, -1)):
        q = root * sgn
        for kK, kC, klabel in kappas:
            yield DimDictionary(q=q, params=mot[side], kappa_K=kK, kappa_C=kC, algebra=algebra,
                                label=f"q={q}; {klabel}")


def _solve_scalar(lhs: EllElem, rhs: EllElem) -> Optional[Scalar]:
    """``s`` with ``lhs = s * rhs``, or None."""
    if rhs.is_zero():
        return None
    word, coeff = next(iter(rhs.terms.items()))
    if word not in lhs.terms:
        return None
    s = lhs.terms[word] / coeff
    return s if lhs == rhs * s else None


def _fit(D: DimDictionary, max_r: int) -> bool:
    A = D.algebra
    # [E_0, F_0] = (K - K^{-1}) / (q - q^{-1})
    target = (D.K() - D.K(-1)) / (D.q - D.q.inverse())
    s = _solve_scalar(D.E(0) * A.t((-1, 0)) - A.t((-1, 0)) * D.E(0), target)
    if s is None:
        return False
    D.n_F = s.inverse()
    # [E_r, F_0] = K psi^+_r / (q - q^{-1}) and [E_0, F_-r] = -K^{-1} psi^-_r / (q - q^{-1})
    for r in range(1, max_r + 1):
        for sign in (1, -1):
            k, l = (r, 0) if sign > 0 else (0, -r)
            # the residue is affine in n_H(sign r): res(n) = res(0) + n (res(1) - res(0))
            residues = []
            for trial in (ZERO, ONE):
                D.n_H[sign * r] = trial
                D.__dict__.pop("_psi_cache", None)
                residues.append(mode_relations(D, "EF", (k, l)))
            n = _solve_scalar(-residues[0], residues[1] - residues[0])
            if n is None:
                return False
            D.n_H[sign * r] = n
            D.__dict__.pop("_psi_cache", None)
    return True


_SCREEN = (("EF", (1, 1)), ("EF", (-1, 2)), ("K+E", (0, 0)), ("K-E", (0, 0)), ("K+F", (0, 0)),
           ("K-F", (0, 0)), ("EE", (0, 0)), ("EE", (1, -1)), ("FF", (0, 0)), ("KK", (1, -1)),
           ("SerreE", (-1, 0, 1)), ("SerreF", (-1, 0, 1)))


def calibrate(algebra: Optional[EllipticDouble] = None, max_r: int = 9, log: Optional[list] = None) -> DimDictionary:
    """First dictionary variant whose screening relations all vanish."""
    algebra = algebra or default_double()
    for D in _variants(algebra):
        if not _fit(D, max_r):
            if log is not None:
                log.append((D.label, "no normalisation solves [E,F]"))
            continue
        failed = None
        for kind, modes in _SCREEN:
            try:
                if not mode_relations(D, kind, modes).is_zero():
                    failed = (kind, modes)
                    break
            except KeyError:
                continue
        if log is not None:
            log.append((D.label, failed or "ok"))
        if failed is None:
            return D
    raise RelationFailure("calibration", (), EllElem({}, algebra))


_CALIBRATED: Optional[DimDictionary] = None


def dim_dictionary(algebra: Optional[EllipticDouble] = None) -> DimDictionary:
    global _CALIBRATED
    if algebra is not None:
        return calibrate(algebra)
    if _CALIBRATED is None:
        _CALIBRATED = calibrate()
    return _CALIBRATED


def dim_relation_check(window: int = 1, kinds: Sequence[str] = RELATION_KINDS,
                       D: Optional[DimDictionary] = None) -> Dict[str, List[Tuple[tuple, EllElem]]]:
    """Residues of every mode relation with modes in ``[-window, window]``; all zero on success."""
    D = D or dim_dictionary()
    report: Dict[str, List[Tuple[tuple, EllElem]]] = {}
    for kind in kinds:
        rows = []
        for modes in _mode_grid(kind, window):
            try:
                rows.append((modes, mode_relations(D, kind, modes)))
            except KeyError:
                continue
        report[kind] = rows
    return report


def miki_check(D: Optional[DimDictionary] = None) -> Dict[str, object]:
    """Apply the lift of ``[[0,1],[-1,0]]`` to the images of ``E_0, F_0, H_{+-1}, q^c, K``.

    Each image is compared with the target of Miki's automorphism
    ``E_0 -> -q^c H_-1, F_0 -> a q^c H_1, H_1 -> E_0, H_-1 -> -a F_0,
    q^c -> K, K -> q^{-c}`` and the scalar ratios are returned (``None``
    when the image is not a multiple of the target).  The image of ``F_0``
    is also compared with ``q^{-c} H_1``, the only central factor compatible
    with ``[E_0, F_0] = (K - K^{-1})/(q - q^{-1})``; the coefficient ``a`` is
    reported from ``F_0`` (against that target) and from ``H_-1``.
    """
    D = D or dim_dictionary()
    rho = GammaLift.rotation()
    targets = {
        "E_0": (D.E(0), D.qc() * D.H(-1) * (-1)),
        "F_0": (D.F(0), D.qc() * D.H(1)),
        "H_1": (D.H(1), D.E(0)),
        "H_-1": (D.H(-1), D.F(0) * (-1)),
        "q^c": (D.qc(), D.K()),
        "K": (D.K(), D.qc(-1)),
    }
    ratios: Dict[str, Optional[Scalar]] = {}
    for name, (src, target) in targets.items():
        ratios[name] = _solve_scalar(sl2z_apply(rho, src), target)
    f0_inverse = _solve_scalar(sl2z_apply(rho, D.F(0)), D.qc(-1) * D.H(1))
    return {
        "ratios": ratios,
        "pattern_ok": all(v is not None for v in ratios.values()),
        "central_exact": {name: ratios[name] == ONE for name in ("q^c", "K")},
        "F_0 against q^{-c} H_1": f0_inverse,
        "a_from_F0": f0_inverse,
        "a_from_H-1": ratios["H_-1"],
    }


def miki_commutator_test(D: Optional[DimDictionary] = None) -> Dict[str, Optional[Scalar]]:
    """Coefficient ``a`` forced by ``[E_0, F_0]`` for each central factor on the image of ``F_0``.

    With ``E_0 -> -q^c H_-1`` and ``F_0 -> a q^{e c} H_1`` the images must
    satisfy ``[theta E_0, theta F_0] = theta(K - K^{-1})/(q - q^{-1})``;
    ``None`` means no ``a`` works for that exponent ``e``.
    """
    D = D or dim_dictionary()
    rhs = (D.qc(-1) - D.qc()) * (D.q - D.q.inverse()).inverse()
    out: Dict[str, Optional[Scalar]] = {}
    for e in (1, -1):
        x, y = D.qc() * D.H(-1) * (-1), D.qc(e) * D.H(1)
        out[f"q^({e}c)"] = _solve_scalar(rhs, x * y - y * x)
    return out
