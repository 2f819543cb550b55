"""Text, JSON and LaTeX output for evaluated statements."""

from __future__ import annotations

import json
from typing import Dict, List, Tuple

from ..elliptic.algebra import EllElem
from ..elliptic.sl2z import GammaLift
from ..loopsl2 import LoopElem
from ..motive import ZetaFunction
from ..render import ell_word, join_terms, loop_word, sym_word, torsion_word
from ..scalars import Scalar, format_scalar
from ..suites import SuiteResult
from ..symfunc import SymElem, from_power_sums
from ..torsion import TorsionElem
from .evaluate import HallForm, HallName, Result, Tensor

__all__ = ["value_type", "value_terms", "render_value", "result_json", "emit"]


def _sym_terms(x: SymElem, basis: str) -> Dict[tuple, Scalar]:
    return from_power_sums(x, basis) if basis != "p" else dict(x.terms)


def _tensor_in_basis(t: Tensor, basis: str) -> Dict[tuple, Scalar]:
    if basis == "p":
        return dict(t.terms)
    left: Dict[tuple, Scalar] = {}
    for (la, mu), c in t.terms.items():
        for lb, cb in from_power_sums(SymElem({la: c}), basis).items():
            key = (lb, mu)
            left[key] = left.get(key, Scalar(0)) + cb
    out: Dict[tuple, Scalar] = {}
    for (la, mu), c in left.items():
        if c.is_zero():
            continue
        for mb, cb in from_power_sums(SymElem({mu: c}), basis).items():
            key = (la, mb)
            out[key] = out.get(key, Scalar(0)) + cb
    return {k: c for k, c in out.items() if not c.is_zero()}


def _hall_factor_word(key, latex: bool) -> str:
    side, l, kp, c2 = key
    parts = []
    if l:
        parts.append(rf"\tilde\theta^{{{side}}}_{{{l}}}" if latex else f"thetaT{side}[{l}]")
    if kp:
        parts.append(("k" if kp == 1 else f"k^{{{kp}}}") if latex else ("k" if kp == 1 else f"k^({kp})"))
    if c2:
        if latex:
            parts.append(rf"c^{{{c2}/2}}")
        else:
            parts.append("c2" if c2 == 1 else f"c2^({c2})")
    return (" " if latex else "*").join(parts) or "1"


def value_type(value) -> str:
    table = [(bool, "bool"), (int, "int"), (Scalar, "scalar"), (EllElem, "elliptic-double"),
             (LoopElem, "loop-sl2"), (TorsionElem, "torsion"), (SymElem, "symfunc"), (Tensor, "tensor"),
             (GammaLift, "sl2z-lift"), (ZetaFunction, "zeta"), (HallName, "hall-name"), (HallForm, "hall-form"),
             (SuiteResult, "report"), (tuple, "tuple"), (list, "list"), (dict, "record")]
    for t, name in table:
        if isinstance(value, t):
            return name
    if isinstance(value, float):
        return "slope"
    return type(value).__name__


def value_terms(value, basis: str = "p", latex: bool = False) -> List[Tuple[str, Scalar]]:
    """The ``(word, coefficient)`` terms of a linear value, in display order."""
    if isinstance(value, Scalar):
        return [("1", value)]
    if isinstance(value, EllElem):
        return [(ell_word(w, latex), c) for w, c in value]
    if isinstance(value, LoopElem):
        return [(loop_word(w, latex), c) for w, c in value.sorted_terms()]
    if isinstance(value, TorsionElem):
        return [(torsion_word(m, value.kind, latex), c) for m, c in sorted(value.terms.items())]
    if isinstance(value, SymElem):
        terms = _sym_terms(value, basis)
        return [(sym_word(lam, basis, latex), c) for lam, c in sorted(terms.items(), key=_partition_order)]
    if isinstance(value, Tensor):
        sep = r" \otimes " if latex else " & "
        if value.family == "sym":
            terms = _tensor_in_basis(value, basis)
            return [(sym_word(a, basis, latex) + sep + sym_word(b, basis, latex), c)
                    for (a, b), c in sorted(terms.items(), key=lambda kv: (_partition_order((kv[0][0], 0)),
                                                                           _partition_order((kv[0][1], 0))))]
        return [(torsion_word(a, "t", latex) + sep + torsion_word(b, "t", latex), c)
                for (a, b), c in sorted(value.terms.items())]
    if isinstance(value, HallForm):
        return [(_hall_factor_word(k, latex), c) for k, c in sorted(value.terms.items())]
    return []


def _partition_order(kv):
    lam = kv[0]
    return (sum(lam), tuple(-x for x in lam))


def render_value(value, basis: str = "p", latex: bool = False) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return "inf" if value > 0 else "-inf"
    if isinstance(value, Scalar):
        return format_scalar(value, latex)
    if isinstance(value, (EllElem, LoopElem, TorsionElem, SymElem, Tensor, HallForm)):
        return join_terms(value_terms(value, basis, latex), latex)
    if isinstance(value, GammaLift):
        (a, b), (c, d) = value.matrix
        if latex:
            return rf"\begin{{pmatrix}}{a}&{b}\\{c}&{d}\end{{pmatrix}}_{{{value.lift_offset}}}"
        return str(value)
    if isinstance(value, ZetaFunction):
        num = join_terms([(f"z^{i}" if i > 1 else ("z" if i == 1 else "1"), c)
                          for i, c in enumerate(value.numerator)], latex)
        if latex:
            return rf"\frac{{{num}}}{{(1-z)(1-Lz)}}"
        return f"({num})/((1 - z)*(1 - L*z))"
    if isinstance(value, HallName):
        return ("-" if value.sign < 0 else "") + value.name
    if isinstance(value, SuiteResult):
        return value.summary()
    if isinstance(value, tuple):
        return "(" + ", ".join(render_value(x, basis, latex) for x in value) + ")"
    if isinstance(value, list):
        return "[" + ", ".join(render_value(x, basis, latex) for x in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {render_value(x, basis, latex)}" for k, x in value.items()) + "}"
    if value is None:
        return "none"
    return str(value)


def _json_value(value, basis: str):
    if isinstance(value, (bool, int)) or value is None:
        return value
    if isinstance(value, float):
        return "inf" if value > 0 else "-inf"
    if isinstance(value, (list, tuple)):
        return [_json_value(x, basis) for x in value]
    if isinstance(value, dict):
        return {str(k): _json_value(x, basis) for k, x in value.items()}
    return render_value(value, basis)


def result_json(res: Result) -> dict:
    cfg = res.config
    out = {
        "config": cfg.to_json(),
        "input": res.input,
        "context": res.context,
        "type": value_type(res.value),
        "text": render_value(res.value, cfg.basis),
        "warnings": cfg.warnings(),
    }
    terms = value_terms(res.value, cfg.basis)
    if terms or value_type(res.value) in ("elliptic-double", "loop-sl2", "torsion", "symfunc", "tensor"):
        out["terms"] = [{"word": w, "coeff": format_scalar(c)} for w, c in terms]
    if isinstance(res.value, SuiteResult):
        out["passed"] = res.value.passed
        out["parts"] = [{"name": p.name, "passed": p.passed, "detail": p.detail} for p in res.value.parts]
        out["elapsed"] = round(res.value.elapsed, 3)
    elif isinstance(res.value, (tuple, list, dict)):
        out["value"] = _json_value(res.value, cfg.basis)
    return out


def emit(results: List[Result], fmt: str) -> str:
    """All results of one run in the requested format."""
    if fmt == "json":
        payload = [result_json(r) for r in results]
        return json.dumps(payload[0] if len(payload) == 1 else payload, sort_keys=True, indent=2)
    latex = fmt == "latex"
    lines = [render_value(r.value, r.config.basis, latex) for r in results]
    return "\n".join(lines)
