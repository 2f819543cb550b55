"""Canonical text and LaTeX rendering shared by the engines and the CLI.

Every element renders as a sum of ``coefficient*word`` terms.  The text
form is accepted back by the CLI parser in the matching context, so
``parse(render(eval(parse(s))))`` evaluates to the same element.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, List, Tuple

from .scalars import Scalar, format_scalar

__all__ = [
    "join_terms",
    "half",
    "ell_word",
    "render_ell",
    "loop_word",
    "torsion_word",
    "sym_word",
]

_ATOM = re.compile(r"^[A-Za-z0-9_*^]+$")


def _atomic(text: str) -> bool:
    """A coefficient that can be glued to a word with ``*`` without brackets."""
    return bool(_ATOM.match(text))


def _term(c: Scalar, word: str, latex: bool, alone: bool) -> str:
    if word in ("", "1"):
        text = format_scalar(c, latex)
        if alone or _atomic(text) or (text.startswith("-") and _atomic(text[1:])):
            return text
        return rf"\left({text}\right)" if latex else f"({text})"
    if c.is_one():
        return word
    if (-c).is_one():
        return f"-{word}"
    text = format_scalar(c, latex)
    glue = " " if latex else "*"
    if _atomic(text):
        return f"{text}{glue}{word}"
    neg = format_scalar(-c, latex)
    if _atomic(neg):
        return f"-{neg}{glue}{word}"
    return rf"\left({text}\right) {word}" if latex else f"({text})*{word}"


def join_terms(items: Iterable[Tuple[str, Scalar]], latex: bool = False) -> str:
    """Render ``[(word, coefficient), ...]`` in the given order; ``"1"`` is the empty word."""
    items = [(w, c) for w, c in items if not c.is_zero()]
    if not items:
        return "0"
    out: List[str] = []
    alone = len(items) == 1
    for i, (word, c) in enumerate(items):
        text = _term(c, word, latex, alone)
        if i == 0:
            out.append(text)
        elif text.startswith("-"):
            out.append(" - " + text[1:])
        else:
            out.append(" + " + text)
    return "".join(out)


def half(n2: int, latex: bool = False) -> str:
    """A doubled integer as ``n`` or ``n/2``."""
    if n2 % 2 == 0:
        return str(n2 // 2)
    if latex:
        sign = "-" if n2 < 0 else ""
        return rf"{sign}\tfrac{{{abs(n2)}}}{{2}}"
    return f"{n2}/2"


def _power(base: str, e: int, latex: bool) -> str:
    if e == 1:
        return base
    if latex:
        return f"{base}^{{{e}}}"
    return f"{base}^{e}" if e > 0 else f"{base}^({e})"


def _runs(seq):
    i = 0
    while i < len(seq):
        j = i
        while j < len(seq) and seq[j] == seq[i]:
            j += 1
        yield seq[i], j - i
        i = j


# ---------------------------------------------------------------------------
# elliptic double


def ell_word(word, latex: bool = False) -> str:
    pts, k2 = word
    parts = []
    for (r, d), e in _runs(list(pts)):
        base = rf"t_{{({r},{d})}}" if latex else f"t[{r},{d}]"
        parts.append(_power(base, e, latex))
    if tuple(k2) != (0, 0):
        a, b = half(k2[0], latex), half(k2[1], latex)
        parts.append(rf"k_{{({a},{b})}}" if latex else f"k[{a},{b}]")
    return (" " if latex else "*").join(parts) or "1"


def render_ell(e, latex: bool = False) -> str:
    return join_terms(((ell_word(w, latex), c) for w, c in e), latex)


# ---------------------------------------------------------------------------
# loop algebra of sl2 and the torsion part


def _loop_letter(letter, latex: bool) -> List[str]:
    tag = letter[0]
    if tag in ("E+", "E-"):
        return [rf"E^{{{tag[1]}}}_{{{letter[1]}}}" if latex else f"{tag}[{letter[1]}]"]
    if tag == "H":
        return [rf"H_{{{letter[1]}}}" if latex else f"H[{letter[1]}]"]
    a, b = letter[1], letter[2]
    out = []
    if a:
        out.append(_power("K", a, latex))
    if b:
        if latex:
            out.append(rf"C^{{{half(b, True)}}}")
        else:
            out.append(_power("C2", b, latex))
    return out


def loop_word(word, latex: bool = False) -> str:
    parts: List[str] = []
    for letter, e in _runs(list(word)):
        names = _loop_letter(letter, latex)
        if len(names) == 1:
            parts.append(_power(names[0], e, latex))
        else:
            parts.extend(names)
    return (" " if latex else "*").join(parts) or "1"


def torsion_word(mon, kind: str, latex: bool = False) -> str:
    gens, kappa = mon
    parts = []
    for d, e in _runs(sorted(gens)):
        if latex:
            base = rf"t_{{{d}}}" if kind == "t" else rf"1_{{(0,{d})}}"
        else:
            base = f"t[{d}]" if kind == "t" else f"one[0,{d}]"
        parts.append(_power(base, e, latex))
    if kappa:
        parts.append(rf"k_{{(0,{kappa})}}" if latex else f"k[0,{kappa}]")
    return (" " if latex else "*").join(parts) or "1"


def sym_word(lam, basis: str, latex: bool = False) -> str:
    if not lam:
        return "1"
    if latex:
        return rf"{basis}_{{({','.join(str(x) for x in lam)})}}"
    return f"{basis}({','.join(str(x) for x in lam)})"


def fraction_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
