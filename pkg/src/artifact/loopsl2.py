"""The quantum loop algebra of sl2 in Drinfeld generators, with a PBW normal form.

Generators are ``E+[n]``, ``E-[n]`` (``n`` in Z), ``H[r]`` (``r != 0``),
``K^{+-1}`` and ``C^{+-1/2}``; the loop parameter is ``v = 1/sqrtL``.
Normal words have the shape

    E+[l1] E+[l2] ... H[r1] H[r2] ... K^a C^{b/2} E-[n1] ... H[-s1] ...

with each run of ``E`` modes weakly increasing and each run of ``H``
indices sorted.  :func:`normal_form` straightens arbitrary words by
adjacent rewrites; the rules are the defining relations solved for the
out-of-order product.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, List, Sequence, Tuple

from .scalars import ONE, ZERO, L, Scalar, TruncSeries, quantum_integer, series_exp, sqrtL

__all__ = [
    "V",
    "LoopWindowOverflow",
    "LoopMonomial",
    "LoopElem",
    "E_plus",
    "E_minus",
    "H",
    "K",
    "C_half",
    "normal_form",
    "psi",
    "psi_series",
    "heisenberg_coefficient",
    "he_coefficient",
    "cross_commutator",
    "cross_commutator_oracle",
    "bracket",
    "relation_residues",
    "hall_dictionary",
    "loop_from_hall",
]

V = sqrtL.inverse()
BETA = sqrtL - V  # v^{-1} - v
CROSS_FACTOR = V / (V - sqrtL)  # v/(v - v^{-1}) = 1/(1 - L)

DEFAULT_WINDOW = 12


class LoopWindowOverflow(ValueError):
    """A rewrite produced a mode outside the configured window."""

    def __init__(self, letter, window: int):
        super().__init__(f"mode window {window} exceeded by intermediate generator {render_letter(letter)}")
        self.letter = letter
        self.window = window


# A letter is one of
#   ("E+", n) | ("E-", n) | ("H", r) with r != 0 | ("KC", a, b) meaning K^a C^{b/2}
Letter = tuple
Word = Tuple[Letter, ...]


def _klass(letter: Letter) -> int:
    tag = letter[0]
    if tag == "E+":
        return 0
    if tag == "H":
        return 1 if letter[1] > 0 else 4
    if tag == "KC":
        return 2
    return 3  # E-


def _sort_key(letter: Letter):
    tag = letter[0]
    if tag == "H":
        return (_klass(letter), abs(letter[1]))
    if tag == "KC":
        return (2, 0)
    return (_klass(letter), letter[1])


def render_letter(letter: Letter) -> str:
    tag = letter[0]
    if tag in ("E+", "E-"):
        return f"{tag}[{letter[1]}]"
    if tag == "H":
        return f"H[{letter[1]}]"
    a, b = letter[1], letter[2]
    parts = []
    if a:
        parts.append("K" if a == 1 else f"K^{a}" if a > 0 else f"K^({a})")
    if b:
        parts.append("C2" if b == 1 else f"C2^{b}" if b > 0 else f"C2^({b})")
    return "*".join(parts) or "1"


def render_word(word: Word) -> str:
    if not word:
        return "1"
    out = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = render_letter(word[i])
        out.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(out)


class LoopMonomial(tuple):
    """PBW monomial ``(lam, mu_plus, a, b, nu, mu_minus)``; see the module docstring."""

    __slots__ = ()

    def __new__(cls, lam=(), mu_plus=(), a=0, b=0, nu=(), mu_minus=()):
        return super().__new__(cls, (tuple(sorted(lam)), tuple(sorted(mu_plus)), int(a), int(b),
                                     tuple(sorted(nu)), tuple(sorted(mu_minus))))

    @classmethod
    def from_word(cls, word: Word) -> "LoopMonomial":
        lam, mp, nu, mm = [], [], [], []
        a = b = 0
        for letter in word:
            tag = letter[0]
            if tag == "E+":
                lam.append(letter[1])
            elif tag == "E-":
                nu.append(letter[1])
            elif tag == "KC":
                a, b = letter[1], letter[2]
            elif letter[1] > 0:
                mp.append(letter[1])
            else:
                mm.append(-letter[1])
        return cls(lam, mp, a, b, nu, mm)

    def to_word(self) -> Word:
        lam, mp, a, b, nu, mm = self
        word: List[Letter] = [("E+", n) for n in lam] + [("H", r) for r in mp]
        if a or b:
            word.append(("KC", a, b))
        word += [("E-", n) for n in nu] + [("H", -s) for s in mm]
        return tuple(word)

    def degree(self) -> Tuple[int, int]:
        lam, mp, _, _, nu, mm = self
        return (len(lam) - len(nu), sum(lam) + sum(nu) + sum(mp) - sum(mm))


class LoopElem:
    """Scalar combination of normal words."""

    __slots__ = ("terms", "window")

    def __init__(self, terms: Dict[Word, Scalar] | None = None, window: int = DEFAULT_WINDOW):
        self.window = window
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def scalar(cls, c, window: int = DEFAULT_WINDOW) -> "LoopElem":
        return cls({(): Scalar.coerce(c)}, window)

    def __add__(self, other) -> "LoopElem":
        if not isinstance(other, LoopElem):
            other = LoopElem.scalar(other, self.window)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return LoopElem(out, self.window)

    __radd__ = __add__

    def __neg__(self) -> "LoopElem":
        return LoopElem({w: -c for w, c in self.terms.items()}, self.window)

    def __sub__(self, other) -> "LoopElem":
        if not isinstance(other, LoopElem):
            other = LoopElem.scalar(other, self.window)
        return self + (-other)

    def __rsub__(self, other) -> "LoopElem":
        return (-self) + other

    def __mul__(self, other) -> "LoopElem":
        if isinstance(other, LoopElem):
            window = max(self.window, other.window)
            out: Dict[Word, Scalar] = {}
            for wa, ca in self.terms.items():
                for wb, cb in other.terms.items():
                    for w, c in _normal_word(wa + wb, window).items():
                        out[w] = out.get(w, ZERO) + ca * cb * c
            return LoopElem(out, window)
        c = Scalar.coerce(other)
        return LoopElem({w: x * c for w, x in self.terms.items()}, self.window)

    def __rmul__(self, other) -> "LoopElem":
        return self * other

    def __truediv__(self, other) -> "LoopElem":
        return self * Scalar.coerce(other).inverse()

    def __pow__(self, n: int) -> "LoopElem":
        out = LoopElem.scalar(ONE, self.window)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, LoopElem):
            return self.terms == other.terms
        if isinstance(other, (int, Scalar)):
            return self == LoopElem.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def monomials(self) -> Dict[LoopMonomial, Scalar]:
        return {LoopMonomial.from_word(w): c for w, c in self.terms.items()}

    def degrees(self) -> set:
        return {LoopMonomial.from_word(w).degree() for w in self.terms}

    def map_coefficients(self, fn) -> "LoopElem":
        return LoopElem({w: fn(c) for w, c in self.terms.items()}, self.window)

    def sorted_terms(self) -> List[Tuple[Word, Scalar]]:
        return sorted(self.terms.items(), key=lambda wc: (len(wc[0]), [_sort_key(x) + x[1:] for x in wc[0]]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            name = render_word(w)
            parts.append(f"({c})" if name == "1" else f"({c})*{name}")
        return " + ".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# generators


def _gen(letter: Letter, window: int = DEFAULT_WINDOW) -> LoopElem:
    return LoopElem({_canonical((letter,)): ONE}, window)


def _canonical(word: Word) -> Word:
    # drop trivial KC letters
    return tuple(x for x in word if not (x[0] == "KC" and x[1] == 0 and x[2] == 0))


def E_plus(n: int, window: int = DEFAULT_WINDOW) -> LoopElem:
    return _gen(("E+", int(n)), window)


def E_minus(n: int, window: int = DEFAULT_WINDOW) -> LoopElem:
    return _gen(("E-", int(n)), window)


def H(r: int, window: int = DEFAULT_WINDOW) -> LoopElem:
    if r == 0:
        raise ValueError("H[r] needs r != 0")
    return _gen(("H", int(r)), window)


def K(a: int = 1, window: int = DEFAULT_WINDOW) -> LoopElem:
    return _gen(("KC", int(a), 0), window)


def C_half(b: int = 1, window: int = DEFAULT_WINDOW) -> LoopElem:
    """``C^{b/2}``."""
    return _gen(("KC", 0, int(b)), window)


# ---------------------------------------------------------------------------
# structure constants


@lru_cache(maxsize=None)
def he_coefficient(r: int) -> Scalar:
    """``[2r]_v / r``, the coefficient in ``[H_r, E_n]``."""
    return quantum_integer(2 * r) / r


@lru_cache(maxsize=None)
def heisenberg_coefficient(r: int) -> Scalar:
    """``[2r]/r / (v^{-1} - v)``: ``[H_r, H_-r] = coeff * (C^r - C^-r)`` for ``r > 0``."""
    return he_coefficient(r) / BETA


@lru_cache(maxsize=None)
def _psi_table(side: int, order: int, window: int) -> Tuple[Dict[Word, Scalar], ...]:
    """``Psi^{side}_{side*d}`` for ``d = 0..order`` as plain dicts of normal words."""
    zero = LoopElem({}, window)
    one = LoopElem.scalar(ONE, window)
    coeffs = [zero] + [H(side * d, window) * (BETA * side) for d in range(1, order + 1)]
    series = series_exp(TruncSeries(coeffs, zero, one))
    return tuple(dict(c.terms) for c in series.coeffs)


def psi(side: int, d: int, window: int = DEFAULT_WINDOW) -> LoopElem:
    """``Psi^{+}_{d}`` (side=+1, d>=0) or ``Psi^{-}_{-d}`` (side=-1, d>=0); zero off that range."""
    if side not in (1, -1):
        raise ValueError("side must be +1 or -1")
    if d < 0:
        return LoopElem({}, window)
    return LoopElem(_psi_table(side, d, window)[d], window)


def psi_series(side: str, d: int, window: int = DEFAULT_WINDOW) -> LoopElem:
    """``psi_series("+", d) = Psi^+_d`` and ``psi_series("-", d) = Psi^-_{-d}``."""
    if side not in ("+", "-"):
        raise ValueError("side must be '+' or '-'")
    if d < 0:
        raise ValueError("psi_series needs d >= 0")
    return psi(1 if side == "+" else -1, d, window)


def _scaled_words(elem_terms: Dict[Word, Scalar], scale: Scalar, prefix: Word = (), suffix: Word = ()):
    return {prefix + w + suffix: c * scale for w, c in elem_terms.items()}


def _cross_words(m: int, n: int, window: int) -> Dict[Word, Scalar]:
    """``[E+_m, E-_n]`` as words (already in normal shape)."""
    s = m + n
    out: Dict[Word, Scalar] = {}
    if s >= 0:
        # Psi^+_s K C^{(m-n)/2}
        for w, c in _psi_table(1, s, window)[s].items():
            key = _canonical(w + (("KC", 1, m - n),))
            out[key] = out.get(key, ZERO) + c * CROSS_FACTOR
    if s <= 0:
        # - K^{-1} C^{(n-m)/2} Psi^-_s
        for w, c in _psi_table(-1, -s, window)[-s].items():
            key = _canonical((("KC", -1, n - m),) + w)
            out[key] = out.get(key, ZERO) - c * CROSS_FACTOR
    return {w: c for w, c in out.items() if not c.is_zero()}


def cross_commutator(m: int, n: int, window: int = DEFAULT_WINDOW) -> LoopElem:
    """``[E+_m, E-_n] = v/(v - v^{-1}) (Psi^+_{m+n} K C^{(m-n)/2} - Psi^-_{m+n} K^{-1} C^{(n-m)/2})``."""
    return LoopElem(_cross_words(m, n, window), window)


# ---------------------------------------------------------------------------
# straightening


def _check(letter: Letter, window: int) -> Letter:
    if letter[0] in ("E+", "E-", "H") and abs(letter[1]) > window:
        raise LoopWindowOverflow(letter, window)
    return letter


def _swap_rule(x: Letter, y: Letter, window: int) -> List[Tuple[Scalar, Word]] | None:
    """Rewrite of the adjacent pair ``x y`` when it is out of normal order, else None."""
    kx, ky = _klass(x), _klass(y)
    tx, ty = x[0], y[0]
    if kx == ky:
        if tx == "KC":
            return [(ONE, (("KC", x[1] + y[1], x[2] + y[2]),))]
        if tx == "H":
            if abs(x[1]) > abs(y[1]):
                return [(ONE, (y, x))]
            return None
        a, b = x[1], y[1]
        if a <= b:
            return None
        # same-sign E reorder from E_m E_{n+1} + E_n E_{m+1} = v^{+-2}(E_{n+1} E_m + E_{m+1} E_n)
        q = V ** -2 if tx == "E+" else V ** 2
        if a == b + 1:
            return [(q, (y, x))]
        lo, hi = _check((tx, b + 1), window), _check((tx, a - 1), window)
        return [(q, (y, x)), (q, (hi, lo)), (-ONE, (lo, hi))]
    if kx < ky:
        return None
    # x belongs to a later block than y: move y left past x
    if tx == "KC":
        a = x[1]
        if ty == "E+":
            # K E+ K^{-1} = v^{-2} E+
            return [(V ** (-2 * a), (y, x))]
        return [(ONE, (y, x))]  # H_r with r > 0 commutes with K, C
    if tx == "H" and x[1] > 0:
        # y is E+: H_r E_n = E_n H_r + [2r]/r E_{n+r} C^{-r/2}
        r = x[1]
        shifted = _check(("E+", y[1] + r), window)
        return [(ONE, (y, x)), (he_coefficient(r), (shifted, ("KC", 0, -r)))]
    if tx == "E-":
        if ty == "E+":
            out = [(ONE, (y, x))]
            for w, c in _cross_words(y[1], x[1], window).items():
                out.append((-c, w))
            return out
        if ty == "H":
            # E-_n H_r = H_r E-_n - [H_r, E-_n] = H_r E-_n + [2r]/r E-_{n+r} C^{r/2}
            r = y[1]
            shifted = _check(("E-", x[1] + r), window)
            return [(ONE, (y, x)), (he_coefficient(r), (shifted, ("KC", 0, r)))]
        # y is KC: E- K = v^{-2} K E-
        return [(V ** (-2 * y[1]), (y, x))]
    # x is H_{-s}, s > 0
    s = -x[1]
    if ty == "E+":
        shifted = _check(("E+", y[1] - s), window)
        return [(ONE, (y, x)), (he_coefficient(s), (shifted, ("KC", 0, -s)))]
    if ty == "H":
        out = [(ONE, (y, x))]
        if y[1] == s:
            coeff = heisenberg_coefficient(s)
            out.append((-coeff, (("KC", 0, 2 * s),)))
            out.append((coeff, (("KC", 0, -2 * s),)))
        return out
    if ty == "KC":
        return [(ONE, (y, x))]
    # y is E-: H_{-s} E-_n = E-_n H_{-s} - [2s]/s E-_{n-s} C^{s/2}
    shifted = _check(("E-", y[1] - s), window)
    return [(ONE, (y, x)), (-he_coefficient(s), (shifted, ("KC", 0, s)))]


_NF_CACHE: Dict[Tuple[Word, int], Dict[Word, Scalar]] = {}


def _normal_word(word: Word, window: int) -> Dict[Word, Scalar]:
    word = _canonical(word)
    key = (word, window)
    hit = _NF_CACHE.get(key)
    if hit is not None:
        return hit
    for letter in word:
        _check(letter, window)
    result: Dict[Word, Scalar] = {}
    for i in range(len(word) - 1):
        rule = _swap_rule(word[i], word[i + 1], window)
        if rule is None:
            continue
        for c, middle in rule:
            for w, d in _normal_word(word[:i] + middle + word[i + 2:], window).items():
                result[w] = result.get(w, ZERO) + c * d
        break
    else:
        result = {word: ONE}
    result = {w: c for w, c in result.items() if not c.is_zero()}
    _NF_CACHE[key] = result
    return result


def normal_form(word: Iterable, window: int = DEFAULT_WINDOW) -> LoopElem:
    """Straighten a product of generators (letters or LoopElems) into PBW form."""
    out = LoopElem.scalar(ONE, window)
    for factor in word:
        if isinstance(factor, LoopElem):
            out = out * factor
        else:
            out = out * _gen(tuple(factor), window)
    return out


def bracket(a: LoopElem, b: LoopElem) -> LoopElem:
    return a * b - b * a


# ---------------------------------------------------------------------------
# relation suite


def relation_residues(mode_range: Sequence[int] = range(-3, 4), r_range: Sequence[int] = range(1, 4),
                      window: int = DEFAULT_WINDOW) -> Dict[str, List[Tuple[tuple, LoopElem]]]:
    """Each defining relation, moved to one side and normalised, over the given modes.

    Returns ``{relation name: [(indices, residue)]}``; a consistent
    straightening gives only zero residues.
    """
    modes = list(mode_range)
    rs = list(r_range) + [-r for r in r_range]
    out: Dict[str, List[Tuple[tuple, LoopElem]]] = {k: [] for k in
                                                     ("C central", "K H", "K E", "H H", "H E", "E E", "E+ E-")}
    Kp, Km, C2 = K(1, window), K(-1, window), C_half(1, window)
    for n in modes:
        for sign, E in (("+", E_plus), ("-", E_minus)):
            e = E(n, window)
            out["C central"].append(((sign, n), C2 * e - e * C2))
            # K E K^{-1} = v^{-+2} E
            q = V ** (-2) if sign == "+" else V ** 2
            out["K E"].append(((sign, n), Kp * e * Km - e * q))
    for r in rs:
        h = H(r, window)
        out["K H"].append(((r,), Kp * h - h * Kp))
        out["C central"].append((("H", r), C2 * h - h * C2))
        for s in rs:
            expect = LoopElem({}, window)
            if r + s == 0:
                expect = (C_half(2 * r, window) - C_half(-2 * r, window)) * (he_coefficient(r) / BETA)
            out["H H"].append(((r, s), bracket(h, H(s, window)) - expect))
        for n in modes:
            for sign, E, pm in (("+", E_plus, 1), ("-", E_minus, -1)):
                expect = E(n + r, window) * C_half(-pm * abs(r), window) * (he_coefficient(r) * pm)
                out["H E"].append(((r, sign, n), bracket(h, E(n, window)) - expect))
    for m in modes:
        for n in modes:
            for sign, E in (("+", E_plus), ("-", E_minus)):
                q = V ** 2 if sign == "+" else V ** -2
                lhs = E(m, window) * E(n + 1, window) + E(n, window) * E(m + 1, window)
                rhs = E(n + 1, window) * E(m, window) + E(m + 1, window) * E(n, window)
                out["E E"].append(((sign, m, n), lhs - rhs * q))
            out["E+ E-"].append(((m, n), bracket(E_plus(m, window), E_minus(n, window)) - cross_commutator(m, n, window)))
    return out


# ---------------------------------------------------------------------------
# dictionary to the Hall-algebra generators


def hall_dictionary(symbol: str) -> Tuple[int, str]:
    """Loop-side generator name to ``(sign, Hall-side name)``.

    ``E+[n] -> oneSS+[1,n]``, ``E-[n] -> oneSS-[1,-n]``, ``H[d] -> tt+[d]``,
    ``H[-d] -> -tt-[d]``, ``K -> k``, ``C2 -> c2``.  Hall-side names are
    mapped back by the inverse table.
    """
    s = symbol.replace(" ", "")
    if s == "K":
        return 1, "k"
    if s == "C2":
        return 1, "c2"
    if s == "k":
        return 1, "K"
    if s == "c2":
        return 1, "C2"
    try:
        if s.startswith("E+[") and s.endswith("]"):
            return 1, f"oneSS+[1,{int(s[3:-1])}]"
        if s.startswith("E-[") and s.endswith("]"):
            return 1, f"oneSS-[1,{-int(s[3:-1])}]"
        if s.startswith("H[") and s.endswith("]"):
            r = int(s[2:-1])
            if r == 0:
                raise ValueError
            return (1, f"tt+[{r}]") if r > 0 else (-1, f"tt-[{-r}]")
        if s.startswith("oneSS+[1,") and s.endswith("]"):
            return 1, f"E+[{int(s[9:-1])}]"
        if s.startswith("oneSS-[1,") and s.endswith("]"):
            return 1, f"E-[{-int(s[9:-1])}]"
        if s.startswith("tt+[") and s.endswith("]"):
            d = int(s[4:-1])
            if d < 1:
                raise ValueError
            return 1, f"H[{d}]"
        if s.startswith("tt-[") and s.endswith("]"):
            d = int(s[4:-1])
            if d < 1:
                raise ValueError
            return -1, f"H[{-d}]"
    except ValueError:
        pass
    raise KeyError(f"unknown generator symbol {symbol!r}")


def loop_from_hall(side: str, l: int, k_power: int, c_half_power: int, window: int = DEFAULT_WINDOW) -> LoopElem:
    """Image of ``theta~^{side}_l k^{k_power} c^{c_half_power/2}``; ``side`` is ``"+"`` or ``"-"``."""
    kc = LoopElem({_canonical((("KC", k_power, c_half_power),)): ONE}, window)
    if l == 0:
        return kc
    if side == "+":
        return psi(1, l, window) * kc
    return kc * psi(-1, l, window)


def cross_commutator_oracle(m: int, n: int, zeta=None, window: int = DEFAULT_WINDOW) -> LoopElem:
    """``[E+_m, E-_n]`` from the Drinfeld-double cross relation, mapped to the loop side.

    Independent of :func:`cross_commutator`: it uses only the coproduct of
    ``1_{(1,n)}`` and the Hopf pairing (see :mod:`artifact.double`).
    """
    from .double import P1, hall_cross_commutator

    for mode in (m, n):
        if abs(mode) > window:
            raise LoopWindowOverflow(("E+", mode), window)
    form = hall_cross_commutator(m, -n, zeta if zeta is not None else P1)
    out = LoopElem({}, window)
    for (side, l, kp, c2), c in form.items():
        out = out + loop_from_hall(side, l, kp, c2, window) * c
    return out
