"""Evaluation of parsed expressions against the engines.

A :class:`Session` holds the configuration (context, zeta function,
window, series order, theta convention, output basis) and evaluates
statements to plain engine values: :class:`Scalar`, ``EllElem``,
``LoopElem``, ``TorsionElem``, ``SymElem``, :class:`Tensor`,
``GammaLift``, ``ZetaFunction``, :class:`HallName`, :class:`HallForm`,
``SuiteResult`` and small Python values (``bool``, ``int``, tuples, lists).
"""

from __future__ import annotations

import difflib
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .. import loopsl2 as lp
from ..double import hall_cross_commutator, printed_cross_commutator
from ..elliptic.algebra import EllElem, EllipticDouble, c_coeff, default_double
from ..elliptic.lattice import alpha_weight2, euler_form, triangle_interior_count
from ..elliptic.sl2z import GammaLift, sl2z_apply, winding_number
from ..motive import (ZetaFunction, class_gl, class_grassmannian, coprime_pair_class, log_classes, make_zeta,
                      rationality_check, sym_class)
from ..scalars import ONE, ZERO, L, Scalar, gaussian_binomial, q1, q2, quantum_integer, s1, s2, sqrtL, v
from ..suites import SuiteResult, run_suite
from ..symfunc import BASES, SymElem, coproduct, hall_littlewood, hopf_pairing, to_power_sums
from ..torsion import TorsionElem, convert_t_one, one_gen, t_gen, theta_series, torsion_coproduct, torsion_pairing
from .syntax import (Binary, Bracket, Call, CliSyntaxError, InBlock, Indexed, Matrix, Name, Node, Num, Power, Span,
                     TupleExpr, Unary, matrix_rows, parse, parse_program)

__all__ = ["CONTEXTS", "Config", "Session", "EvalError", "Tensor", "HallName", "HallForm", "Result"]

CONTEXTS = ("elliptic-double", "p1-double", "symfunc", "motive")
THETA_CONVENTIONS = ("bs", "divided")

SCALAR_NAMES: Dict[str, Scalar] = {"s1": s1, "s2": s2, "q1": q1, "q2": q2, "L": L, "sqrtL": sqrtL, "v": v}


class EvalError(ValueError):
    def __init__(self, message: str, span: Optional[Span] = None, source: str = ""):
        where = f"line {span.line}, column {span.start}: " if span is not None else ""
        super().__init__(where + message)
        self.message = message
        self.span = span
        self.source = source

    def pretty(self) -> str:
        if self.span is None:
            return f"error: {self}"
        return CliSyntaxError(self.message, self.span, self.source).pretty()


@dataclass(frozen=True)
class Config:
    context: str = "elliptic-double"
    zeta: str = "p1"
    window: Tuple[int, int] = (12, 12)
    order: int = 8
    theta_convention: str = "bs"
    format: str = "text"
    basis: str = "p"

    def to_json(self) -> dict:
        return {"basis": self.basis, "context": self.context, "format": self.format, "order": self.order,
                "theta_convention": self.theta_convention, "window": list(self.window), "zeta": self.zeta}

    def warnings(self) -> List[str]:
        out = []
        if self.theta_convention != "bs":
            out.append(f"theta convention {self.theta_convention!r} overrides the certified default 'bs'")
        if self.zeta != "p1":
            out.append(f"zeta {self.zeta!r} overrides the certified default 'p1' of the P1 double")
        return out


@dataclass
class Tensor:
    """Element of a tensor square: ``{(left key, right key): coefficient}``.

    ``family`` is ``"sym"`` (keys are partitions in the power-sum basis) or
    ``"torsion"`` (keys are torsion monomials in ``t``-generators).
    """

    terms: Dict[tuple, Scalar]
    family: str

    def __add__(self, other: "Tensor") -> "Tensor":
        _same_family(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return Tensor({k: c for k, c in out.items() if not c.is_zero()}, self.family)

    def scale(self, c: Scalar) -> "Tensor":
        return Tensor({k: x * c for k, x in self.terms.items() if not (x * c).is_zero()}, self.family)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, Tensor) and self.family == other.family and self.terms == other.terms


def _same_family(a: Tensor, b: Tensor) -> None:
    if a.family != b.family:
        raise TypeError(f"cannot combine {a.family} tensors with {b.family} tensors")


@dataclass(frozen=True)
class HallName:
    """A generator name on the other side of the loop/Hall dictionary, with a sign."""

    sign: int
    name: str


@dataclass
class HallForm:
    """``{(side, l, k power, doubled c power): coefficient}`` from the double computations."""

    terms: Dict[tuple, Scalar]


@dataclass
class Result:
    input: str
    value: object
    context: str
    config: Config


def _suggest(name: str, known) -> str:
    close = difflib.get_close_matches(name, sorted(known), n=3, cutoff=0.5)
    return f"; did you mean {', '.join(close)}?" if close else ""


class Session:
    """Evaluates statements under a fixed configuration."""

    def __init__(self, config: Config = Config()):
        if config.context not in CONTEXTS:
            raise EvalError(f"unknown context {config.context!r}{_suggest(config.context, CONTEXTS)}")
        if config.theta_convention not in THETA_CONVENTIONS:
            raise EvalError(f"unknown theta convention {config.theta_convention!r}")
        if config.basis not in BASES:
            raise EvalError(f"unknown basis {config.basis!r}; expected one of {', '.join(BASES)}")
        self.config = config
        self.zeta = self._zeta_from_flag(config.zeta)
        self._algebra: Optional[EllipticDouble] = None
        self.source = ""

    # -- configuration ----------------------------------------------------
    def _zeta_from_flag(self, text: str) -> ZetaFunction:
        if text in ("p1", "elliptic"):
            return make_zeta(text)
        if text.startswith("genus_one:a="):
            sub = Session(replace(self.config, zeta="p1", context="motive"))
            value = sub.evaluate_text(text[len("genus_one:a="):])[0].value
            if not isinstance(value, Scalar):
                raise EvalError("the genus_one parameter a must be a scalar")
            return make_zeta("genus_one", value)
        raise EvalError(f"unknown zeta {text!r}; expected p1, elliptic or genus_one:a=<expr>")

    @property
    def algebra(self) -> EllipticDouble:
        if self._algebra is None:
            if tuple(self.config.window) == (12, 12) and self.config.theta_convention == "bs":
                self._algebra = default_double()
            else:
                self._algebra = EllipticDouble(tuple(self.config.window), self.config.theta_convention)
        return self._algebra

    @property
    def loop_window(self) -> int:
        return self.config.window[0]

    # -- entry points -----------------------------------------------------
    def evaluate_text(self, source: str) -> List[Result]:
        self.source = source
        out: List[Result] = []
        for stmt in parse_program(source):
            out.extend(self.run_statement(stmt, self.config.context))
        return out

    def run_statement(self, stmt: Node, context: str) -> List[Result]:
        if isinstance(stmt, InBlock):
            if stmt.context not in CONTEXTS:
                raise EvalError(f"unknown context {stmt.context!r}{_suggest(stmt.context, CONTEXTS)}", stmt.span,
                                self.source)
            out: List[Result] = []
            for inner in stmt.body:
                out.extend(self.run_statement(inner, stmt.context))
            return out
        value = self.eval(stmt, context)
        text = self.source_text(stmt)
        return [Result(text, value, context, replace(self.config, context=context))]

    def source_text(self, node: Node) -> str:
        lines = self.source.splitlines()
        if not 0 < node.span.line <= len(lines):
            return ""
        return lines[node.span.line - 1][node.span.start - 1:node.span.end - 1].strip()

    def err(self, message: str, node: Node) -> EvalError:
        return EvalError(message, node.span, self.source)

    # -- evaluation -------------------------------------------------------
    def eval(self, node: Node, ctx: str):
        try:
            return self._eval(node, ctx)
        except EvalError:
            raise
        except CliSyntaxError:
            raise
        except (TypeError, ValueError, KeyError, ArithmeticError, NotImplementedError) as exc:
            raise self.err(str(exc).strip("'\""), node) from exc

    def _eval(self, node: Node, ctx: str):
        if isinstance(node, Num):
            return Scalar(node.value)
        if isinstance(node, Name):
            return self.name(node, ctx)
        if isinstance(node, Indexed):
            return self.generator(node, ctx)
        if isinstance(node, Call):
            return self.call(node, ctx)
        if isinstance(node, Matrix):
            return GammaLift(node.rows, node.offset)
        if isinstance(node, TupleExpr):
            return tuple(self.eval(x, ctx) for x in node.items)
        if isinstance(node, Bracket):
            a, b = self.eval(node.left, ctx), self.eval(node.right, ctx)
            return self.sub(self.mul(a, b, node), self.mul(b, a, node), node)
        if isinstance(node, Unary):
            return self.neg(self.eval(node.operand, ctx), node)
        if isinstance(node, Power):
            base = self.eval(node.base, ctx)
            exp = self.as_int(self.eval(node.exponent, ctx), node.exponent)
            return self.power(base, exp, node)
        if isinstance(node, Binary):
            a, b = self.eval(node.left, ctx), self.eval(node.right, ctx)
            if node.op == "+":
                return self.add(a, b, node)
            if node.op == "-":
                return self.sub(a, b, node)
            if node.op == "*":
                return self.mul(a, b, node)
            if node.op == "/":
                if not isinstance(b, Scalar):
                    raise self.err("division is only by scalars", node.right)
                if b.is_zero():
                    raise self.err("division by zero", node.right)
                return self.scale(a, b.inverse(), node)
            if node.op == "&":
                return self.tensor(a, b, node)
        raise self.err(f"cannot evaluate {type(node).__name__}", node)

    # -- arithmetic -------------------------------------------------------
    def as_int(self, value, node: Node) -> int:
        if isinstance(value, int) and not isinstance(value, bool):
            return value
        if isinstance(value, Scalar) and value.is_constant():
            num, den = value.num.to_dict().get((0, 0), 0), value.den.to_dict().get((0, 0), 1)
            q = Fraction(int(num.p), int(num.q)) / Fraction(int(den.p), int(den.q)) if num else Fraction(0)
            if q.denominator == 1:
                return int(q)
        raise self.err("expected an integer", node)

    def unit_like(self, x):
        if isinstance(x, EllElem):
            return x.algebra.one()
        if isinstance(x, lp.LoopElem):
            return lp.LoopElem.scalar(ONE, x.window)
        if isinstance(x, TorsionElem):
            return TorsionElem.scalar(ONE, x.kind)
        if isinstance(x, SymElem):
            return SymElem.one()
        return None

    def _promote(self, a, b, node):
        if isinstance(a, Scalar) and not isinstance(b, Scalar):
            u = self.unit_like(b)
            if u is None:
                raise self.err(f"cannot combine a scalar with {_kind(b)}", node)
            return u * a if not isinstance(u, SymElem) else u * a, b
        if isinstance(b, Scalar) and not isinstance(a, Scalar):
            u = self.unit_like(a)
            if u is None:
                raise self.err(f"cannot combine {_kind(a)} with a scalar", node)
            return a, u * b
        return a, b

    def _check_same(self, a, b, node) -> None:
        if type(a) is not type(b):
            raise self.err(f"cannot combine {_kind(a)} with {_kind(b)}", node)
        if isinstance(a, TorsionElem) and a.kind != b.kind and not (a.is_scalar() or b.is_scalar()):
            raise self.err("cannot combine t-generators with one-generators; use convert(...)", node)

    def add(self, a, b, node):
        a, b = self._promote(a, b, node)
        self._check_same(a, b, node)
        if isinstance(a, (Scalar, EllElem, lp.LoopElem, TorsionElem, SymElem, Tensor)):
            return a + b
        raise self.err(f"cannot add {_kind(a)}", node)

    def neg(self, a, node):
        if isinstance(a, Tensor):
            return a.scale(-ONE)
        if isinstance(a, (Scalar, EllElem, lp.LoopElem, TorsionElem, SymElem)):
            return -a
        raise self.err(f"cannot negate {_kind(a)}", node)

    def sub(self, a, b, node):
        return self.add(a, self.neg(b, node), node)

    def scale(self, a, c: Scalar, node):
        if isinstance(a, Tensor):
            return a.scale(c)
        if isinstance(a, Scalar):
            return a * c
        if isinstance(a, (EllElem, lp.LoopElem, TorsionElem, SymElem)):
            return a * c
        raise self.err(f"cannot scale {_kind(a)}", node)

    def mul(self, a, b, node):
        if isinstance(a, GammaLift) and isinstance(b, GammaLift):
            return a * b
        if isinstance(a, Scalar):
            return self.scale(b, a, node)
        if isinstance(b, Scalar):
            return self.scale(a, b, node)
        self._check_same(a, b, node)
        if isinstance(a, (EllElem, lp.LoopElem, TorsionElem, SymElem)):
            return a * b
        raise self.err(f"cannot multiply {_kind(a)} by {_kind(b)}", node)

    def power(self, base, exp: int, node):
        if isinstance(base, Scalar):
            if base.is_zero() and exp < 0:
                raise self.err("zero to a negative power", node)
            return base ** exp
        if isinstance(base, GammaLift):
            out = GammaLift.identity()
            step = base if exp >= 0 else _gamma_inverse(base)
            for _ in range(abs(exp)):
                out = out * step
            return out
        if exp < 0:
            inverse = _weight_inverse(base)
            if inverse is None:
                raise self.err("negative powers are only defined for scalars, lifts and pure weights", node)
            return self.power(inverse, -exp, node)
        u = self.unit_like(base)
        if u is None:
            raise self.err(f"cannot raise {_kind(base)} to a power", node)
        out = u
        for _ in range(exp):
            out = out * base
        return out

    def tensor(self, a, b, node):
        a, b = self._promote(a, b, node)
        if isinstance(a, SymElem) and isinstance(b, SymElem):
            return Tensor({(la, lb): ca * cb for la, ca in a.terms.items() for lb, cb in b.terms.items()}, "sym")
        if isinstance(a, TorsionElem) and isinstance(b, TorsionElem):
            if (a.kind == "one" and not a.is_scalar()) or (b.kind == "one" and not b.is_scalar()):
                raise self.err("tensors of torsion elements use t-generators", node)
            return Tensor({(ma, mb): ca * cb for ma, ca in a.terms.items() for mb, cb in b.terms.items()}, "torsion")
        raise self.err(f"no tensor product of {_kind(a)} and {_kind(b)}", node)

    # -- names and generators ---------------------------------------------
    def name(self, node: Name, ctx: str):
        if node.id in SCALAR_NAMES:
            return SCALAR_NAMES[node.id]
        table = self.context_names(ctx)
        if node.id in table:
            return table[node.id]()
        known = list(SCALAR_NAMES) + list(table) + list(FUNCTIONS)
        raise self.err(f"unknown name {node.id!r} in context {ctx}{_suggest(node.id, known)}", node)

    def context_names(self, ctx: str) -> Dict[str, Callable[[], object]]:
        if ctx == "p1-double":
            w = self.loop_window
            return {"K": lambda: lp.K(1, w), "C2": lambda: lp.C_half(1, w)}
        if ctx == "elliptic-double":
            return {
                "tO": GammaLift.spherical_twist,
                "phiP": GammaLift.poincare_transform,
                "rho": GammaLift.rotation,
                "shift": GammaLift.deck_shift,
                "id": GammaLift.identity,
                "inf": lambda: math.inf,
            }
        if ctx == "motive":
            return {"p1": lambda: make_zeta("p1"), "elliptic": lambda: make_zeta("elliptic")}
        return {}

    GENERATORS = {
        "elliptic-double": ("t", "k", "theta"),
        "p1-double": ("E+", "E-", "H", "t", "one", "theta", "k", "oneSS+", "oneSS-", "tt+", "tt-"),
        "symfunc": (),
        "motive": (),
    }

    def _ints(self, node: Indexed, count: int) -> List[int]:
        if len(node.indices) != count:
            raise self.err(f"{node.name}[...] takes {count} ind{'ex' if count == 1 else 'ices'}", node)
        out = []
        for x in node.indices:
            if x.denominator != 1:
                raise self.err(f"{node.name}[...] needs integer indices", node)
            out.append(int(x))
        return out

    def generator(self, node: Indexed, ctx: str):
        name = node.name
        known = self.GENERATORS[ctx]
        if name not in known:
            hint = _suggest(name, known)
            others = [c for c, names in self.GENERATORS.items() if name in names and c != ctx]
            where = f" (it belongs to {', '.join(others)}; use 'in {others[0]} {{ ... }}')" if others else ""
            raise self.err(f"unknown generator {name}[...] in context {ctx}{where}{hint}", node)
        if ctx == "elliptic-double":
            A = self.algebra
            if name == "k":
                if len(node.indices) != 2:
                    raise self.err("k[r,d] takes two indices", node)
                doubled = [2 * x for x in node.indices]
                if any(x.denominator != 1 for x in doubled):
                    raise self.err("k[r,d] indices must be integers or halves", node)
                return A.k((int(doubled[0]), int(doubled[1])))
            r, d = self._ints(node, 2)
            if (r, d) == (0, 0):
                raise self.err(f"{name}[0,0] is not a generator", node)
            return A.t((r, d)) if name == "t" else A.theta((r, d))
        w = self.loop_window
        if name in ("E+", "E-"):
            (n,) = self._ints(node, 1)
            return lp.E_plus(n, w) if name == "E+" else lp.E_minus(n, w)
        if name == "H":
            (r,) = self._ints(node, 1)
            if r == 0:
                raise self.err("H[0] is not a generator", node)
            return lp.H(r, w)
        if name == "t":
            (d,) = self._ints(node, 1)
            return t_gen(d)
        if name == "one":
            r, d = self._ints(node, 2)
            if r != 0:
                raise self.err("one[0,d] is the torsion generator; rank-one classes are oneSS+[1,n]", node)
            return one_gen(d)
        if name == "theta":
            (l,) = self._ints(node, 1)
            if l < 0:
                raise self.err("theta[l] needs l >= 0", node)
            return theta_series(l, self.config.theta_convention)[l]
        if name == "k":
            r, m = self._ints(node, 2)
            if r != 0:
                raise self.err("torsion weights are k[0,m]", node)
            return TorsionElem({((), m): ONE}, "t")
        # Hall-side names: translate through the loop dictionary
        text = f"{name}[{','.join(str(int(x)) for x in node.indices)}]"
        sign, loop_name = lp.hall_dictionary(text)
        inner = Session(replace(self.config, context="p1-double")).evaluate_text(loop_name)[0].value
        return inner * Scalar(sign)

    # -- calls --------------------------------------------------------------
    def call(self, node: Call, ctx: str):
        entry = FUNCTIONS.get(node.name)
        if entry is None:
            known = list(FUNCTIONS) + list(self.context_names(ctx))
            raise self.err(f"unknown function {node.name!r}{_suggest(node.name, known)}", node)
        contexts, raw, fn = entry
        if contexts is not None and ctx not in contexts:
            raise self.err(f"{node.name}(...) is not available in context {ctx} (available in {', '.join(contexts)})",
                           node)
        if raw:
            return fn(self, node, ctx)
        args = [self.eval(a, ctx) for a in node.args]
        opts = {k: self.eval(v, ctx) for k, v in node.options.items()}
        return fn(self, node, ctx, args, opts)

    def want_args(self, node: Call, args: list, count: int, opts: dict = None, allowed=()) -> None:
        if len(args) != count:
            raise self.err(f"{node.name}(...) takes {count} argument{'s' if count != 1 else ''}, got {len(args)}", node)
        for k in (opts or {}):
            if k not in allowed:
                raise self.err(f"{node.name}(...) has no option {k!r}{_suggest(k, allowed)}", node)

    def point(self, value, node: Node) -> Tuple[int, int]:
        if isinstance(value, tuple) and len(value) == 2:
            return (self.as_int(value[0], node), self.as_int(value[1], node))
        raise self.err("expected a lattice point (r, d)", node)

    def gamma(self, node: Node, ctx: str) -> GammaLift:
        rows = matrix_rows(node)
        if rows is not None:
            return GammaLift(rows, 0)
        value = self.eval(node, ctx)
        if not isinstance(value, GammaLift):
            raise self.err("expected an SL(2,Z) lift such as rho, tO or [[a,b],[c,d]]@n", node)
        return value


def _weight_inverse(x):
    """Inverse of a single weight monomial (``K``, ``C2``, ``k[a,b]``, ``k[0,m]``), else ``None``."""
    if len(getattr(x, "terms", {})) != 1:
        return None
    (word, c), = x.terms.items()
    if isinstance(x, lp.LoopElem):
        if len(word) == 1 and word[0][0] == "KC":
            _, a, b = word[0]
            return lp.LoopElem({(("KC", -a, -b),): c.inverse()}, x.window)
        return None
    if isinstance(x, EllElem):
        pts, k2 = word
        return EllElem({((), (-k2[0], -k2[1])): c.inverse()}, x.algebra) if not pts else None
    if isinstance(x, TorsionElem):
        gens, kappa = word
        return TorsionElem({((), -kappa): c.inverse()}, x.kind) if not gens else None
    return None


def _gamma_inverse(g: GammaLift) -> GammaLift:
    (a, b), (c, d) = g.matrix
    inv = GammaLift(((d, -b), (-c, a)))
    # choose the offset so that g * inv is the identity lift
    prod = g * inv
    return GammaLift(inv.matrix, inv.lift_offset - prod.lift_offset)


def _kind(x) -> str:
    names = {Scalar: "a scalar", EllElem: "an elliptic-double element", lp.LoopElem: "a loop-algebra element",
             TorsionElem: "a torsion element", SymElem: "a symmetric function", Tensor: "a tensor",
             GammaLift: "an SL(2,Z) lift", ZetaFunction: "a zeta function", HallName: "a generator name",
             HallForm: "a Hall-side form", SuiteResult: "a check report"}
    for t, n in names.items():
        if isinstance(x, t):
            return n
    return type(x).__name__


# ---------------------------------------------------------------------------
# function table: name -> (contexts or None for all, raw arguments?, handler)

ALL = None
P1 = ("p1-double",)
ELL = ("elliptic-double",)
SYM = ("symfunc", "p1-double")
MOT = ("motive",)


def _f_nf(s: Session, node, ctx, args, opts):
    s.want_args(node, args, 1)
    return args[0]


def _f_qint(s, node, ctx, args, opts):
    s.want_args(node, args, 1)
    return quantum_integer(s.as_int(args[0], node.args[0]))


def _f_gauss(s, node, ctx, args, opts):
    s.want_args(node, args, 2)
    return gaussian_binomial(s.as_int(args[0], node.args[0]), s.as_int(args[1], node.args[1]))


def _f_c(s, node, ctx, args, opts):
    s.want_args(node, args, 1)
    return c_coeff(s.as_int(args[0], node.args[0]))


def _f_swap(s, node, ctx, args, opts):
    s.want_args(node, args, 1)
    x = args[0]
    if isinstance(x, Scalar):
        return x.swap()
    if hasattr(x, "map_coefficients"):
        return x.map_coefficients(lambda c: c.swap())
    raise s.err(f"swap(...) needs a scalar or an element, got {_kind(x)}", node)


def _f_check(s: Session, node: Call, ctx):
    if len(node.args) != 1 or not isinstance(node.args[0], (Name, Indexed, Binary)):
        raise s.err("check(...) takes one suite name", node)
    name = s.source_text(node.args[0]).replace(" ", "")
    from ..suites import SUITES

    if name not in SUITES:
        raise s.err(f"unknown check suite {name!r}{_suggest(name, SUITES)}; known: {', '.join(SUITES)}", node.args[0])
    kwargs = {k: s.as_int(s.eval(v, ctx), v) for k, v in node.options.items()}
    if name == "elliptic-double":
        kwargs.setdefault("theta_convention", s.config.theta_convention)
    try:
        return run_suite(name, **kwargs)
    except TypeError as exc:
        raise s.err(str(exc), node) from exc


# motive ---------------------------------------------------------------------


def _f_zeta(s: Session, node: Call, ctx):
    if not node.args:
        return s.zeta
    if len(node.args) != 1 or not isinstance(node.args[0], Name):
        raise s.err("zeta(...) takes one of p1, elliptic, genus_one, from_pic0", node)
    kind = node.args[0].id
    opts = {k: s.eval(v, ctx) for k, v in node.options.items()}
    if kind in ("p1", "elliptic"):
        return make_zeta(kind)
    if kind == "genus_one":
        if "a" not in opts:
            raise s.err("zeta(genus_one; a=...) needs the option a", node)
        return make_zeta("genus_one", opts["a"])
    if kind == "from_pic0":
        if "pic0" not in opts:
            raise s.err("zeta(from_pic0; pic0=...) needs the option pic0", node)
        return make_zeta("from_pic0", pic0=opts["pic0"])
    raise s.err(f"unknown zeta kind {kind!r}{_suggest(kind, ('p1', 'elliptic', 'genus_one', 'from_pic0'))}",
                node.args[0])


def _zeta_arg(s, value, node) -> ZetaFunction:
    if not isinstance(value, ZetaFunction):
        raise s.err("expected a zeta function, e.g. zeta(p1)", node)
    return value


def _f_sym(s, node, ctx, args, opts):
    s.want_args(node, args, 2)
    return sym_class(_zeta_arg(s, args[0], node.args[0]), s.as_int(args[1], node.args[1]))


def _f_logclass(s, node, ctx, args, opts):
    s.want_args(node, args, 2)
    return log_classes(_zeta_arg(s, args[0], node.args[0]), s.as_int(args[1], node.args[1]))


def _f_rational(s, node, ctx, args, opts):
    s.want_args(node, args, 1)
    return rationality_check(_zeta_arg(s, args[0], node.args[0]))


def _f_series(s, node, ctx, args, opts):
    s.want_args(node, args, 1)
    z = _zeta_arg(s, args[0], node.args[0])
    return [sym_class(z, n) for n in range(s.config.order + 1)]


def _f_gl(s, node, ctx, args, opts):
    s.want_args(node, args, 1)
    return class_gl(s.as_int(args[0], node.args[0]))


def _f_grass(s, node, ctx, args, opts):
    s.want_args(node, args, 2)
    return class_grassmannian(s.as_int(args[0], node.args[0]), s.as_int(args[1], node.args[1]))


def _f_coprime(s, node, ctx, args, opts):
    s.want_args(node, args, 2)
    return coprime_pair_class(s.as_int(args[0], node.args[0]), s.as_int(args[1], node.args[1]))


# symmetric functions ----------------------------------------------------------


def _basis_fn(basis: str):
    def fn(s, node, ctx, args, opts):
        s.want_args(node, args, len(args))
        lam = tuple(s.as_int(a, n) for a, n in zip(args, node.args))
        if any(x <= 0 for x in lam):
            raise s.err("partition parts must be positive", node)
        return to_power_sums({tuple(sorted(lam, reverse=True)): ONE}, basis) if lam else SymElem.one()

    return fn


def _q_option(s, node, opts) -> Scalar:
    q = opts.get("q", L)
    if not isinstance(q, Scalar):
        raise s.err("the option q must be a scalar", node)
    return q


def _f_hl(s, node, ctx, args, opts):
    s.want_args(node, args, len(args), opts, ("q",))
    lam = tuple(s.as_int(a, n) for a, n in zip(args, node.args))
    return hall_littlewood(lam, _q_option(s, node, opts))


def _f_pair(s, node, ctx, args, opts):
    s.want_args(node, args, 2, opts, ("q",))
    a, b = args
    if isinstance(a, SymElem) and isinstance(b, SymElem):
        return hopf_pairing(a, b, _q_option(s, node, opts))
    if isinstance(a, TorsionElem) and isinstance(b, TorsionElem):
        if "q" in opts:
            raise s.err("the torsion pairing has no q option; it uses the session zeta", node)
        return torsion_pairing(a, b, s.zeta)
    raise s.err(f"pair(...) needs two symmetric functions or two torsion elements, got {_kind(a)} and {_kind(b)}",
                node)


def _f_delta(s, node, ctx, args, opts):
    s.want_args(node, args, 1)
    x = args[0]
    if isinstance(x, SymElem):
        return Tensor(coproduct(x), "sym")
    if isinstance(x, TorsionElem):
        if x.kind == "one" and not x.is_scalar():
            x = convert_t_one(x, "one_to_t")
        return Tensor(torsion_coproduct(x), "torsion")
    raise s.err(f"delta(...) needs a symmetric function or a torsion element, got {_kind(x)}", node)


def _f_steinitz(s, node, ctx, args, opts):
    s.want_args(node, args, len(args), opts, ("deg",))
    from ..torsion import steinitz_embed

    word = [s.as_int(a, n) for a, n in zip(args, node.args)]
    deg = s.as_int(opts.get("deg", Scalar(1)), node)
    return steinitz_embed(word, deg)


# P1 double ---------------------------------------------------------------------


def _f_convert(s, node, ctx, args, opts):
    s.want_args(node, args, 1)
    x = args[0]
    if not isinstance(x, TorsionElem):
        raise s.err(f"convert(...) needs a torsion element, got {_kind(x)}", node)
    return convert_t_one(x, "t_to_one" if x.kind == "t" else "one_to_t")


def _f_hall(s: Session, node: Call, ctx):
    if len(node.args) != 1:
        raise s.err("hall(...) takes one generator name", node)
    text = s.source_text(node.args[0]).replace(" ", "")
    try:
        sign, name = lp.hall_dictionary(text)
    except KeyError as exc:
        raise s.err(f"no dictionary entry for {text!r}", node.args[0]) from exc
    return HallName(sign, name)


def _two_ints(s, node, args):
    s.want_args(node, args, 2)
    return s.as_int(args[0], node.args[0]), s.as_int(args[1], node.args[1])


def _f_cross(s, node, ctx, args, opts):
    m, n = _two_ints(s, node, args)
    return lp.cross_commutator(m, n, s.loop_window)


def _f_oracle(s, node, ctx, args, opts):
    m, n = _two_ints(s, node, args)
    return lp.cross_commutator_oracle(m, n, s.zeta, s.loop_window)


def _f_hallcross(s, node, ctx, args, opts):
    m, n = _two_ints(s, node, args)
    return HallForm(hall_cross_commutator(m, n, s.zeta))


def _f_printed(s, node, ctx, args, opts):
    m, n = _two_ints(s, node, args)
    return HallForm(printed_cross_commutator(m, n))


# elliptic double ---------------------------------------------------------------


def _f_apply(s: Session, node: Call, ctx):
    if len(node.args) != 2:
        raise s.err("apply(gamma, x) takes two arguments", node)
    g = s.gamma(node.args[0], ctx)
    x = s.eval(node.args[1], ctx)
    if isinstance(x, Scalar):
        return x
    if not isinstance(x, EllElem):
        raise s.err(f"apply(...) acts on elliptic-double elements, got {_kind(x)}", node.args[1])
    return sl2z_apply(g, x)


def _f_winding(s: Session, node: Call, ctx):
    if len(node.args) != 2:
        raise s.err("winding(gamma, x) takes a lift and a point or slope", node)
    g = s.gamma(node.args[0], ctx)
    x = s.eval(node.args[1], ctx)
    if isinstance(x, tuple):
        return winding_number(g, s.point(x, node.args[1]))
    if isinstance(x, float):
        return winding_number(g, x)
    if isinstance(x, Scalar) and x.is_constant():
        num, den = x.num.to_dict().get((0, 0), 0), x.den.to_dict().get((0, 0), 1)
        q = Fraction(int(num.p), int(num.q)) / Fraction(int(den.p), int(den.q)) if num else Fraction(0)
        return winding_number(g, q)
    raise s.err("winding(...) needs a point (r, d), a rational slope, inf or -inf", node.args[1])


def _f_euler(s, node, ctx, args, opts):
    s.want_args(node, args, 3)
    return euler_form(s.as_int(args[0], node.args[0]), s.point(args[1], node.args[1]), s.point(args[2], node.args[2]))


def _f_triangle(s, node, ctx, args, opts):
    s.want_args(node, args, 2)
    return triangle_interior_count(s.point(args[0], node.args[0]), s.point(args[1], node.args[1]))


def _f_alpha(s, node, ctx, args, opts):
    s.want_args(node, args, 2)
    a = alpha_weight2(s.point(args[0], node.args[0]), s.point(args[1], node.args[1]))
    return (Scalar(a[0]) / 2, Scalar(a[1]) / 2)


def _f_comm(s, node, ctx, args, opts):
    s.want_args(node, args, 2)
    return s.algebra.comm(s.point(args[0], node.args[0]), s.point(args[1], node.args[1]))


def _dim(s: Session):
    from ..elliptic.dim import dim_dictionary

    A = s.algebra
    return dim_dictionary() if A is default_double() else dim_dictionary(A)


def _f_dim(s: Session, node: Call, ctx):
    if not node.args or not isinstance(node.args[0], Name):
        raise s.err("dim(...) takes a toroidal generator name: E, F, H (with a mode), K or qc", node)
    which = node.args[0].id
    D = _dim(s)
    rest = [s.as_int(s.eval(a, ctx), a) for a in node.args[1:]]
    if which in ("E", "F", "H"):
        if len(rest) != 1:
            raise s.err(f"dim({which}, k) needs one mode", node)
        if which == "H" and rest[0] == 0:
            raise s.err("H_0 is not a generator", node)
        return {"E": D.E, "F": D.F, "H": D.H}[which](rest[0])
    if which in ("K", "qc"):
        power = rest[0] if rest else 1
        return D.K(power) if which == "K" else D.qc(power)
    raise s.err(f"unknown toroidal generator {which!r}{_suggest(which, ('E', 'F', 'H', 'K', 'qc'))}", node.args[0])


def _f_miki(s, node, ctx, args, opts):
    from ..elliptic.dim import miki_check

    s.want_args(node, args, 0)
    return miki_check(_dim(s))


FUNCTIONS: Dict[str, Tuple[Optional[tuple], bool, Callable]] = {
    "nf": (ALL, False, _f_nf),
    "qint": (ALL, False, _f_qint),
    "gauss": (ALL, False, _f_gauss),
    "c": (ALL, False, _f_c),
    "swap": (ALL, False, _f_swap),
    "check": (ALL, True, _f_check),
    "zeta": (MOT, True, _f_zeta),
    "sym": (MOT, False, _f_sym),
    "logclass": (MOT, False, _f_logclass),
    "rational": (MOT, False, _f_rational),
    "series": (MOT, False, _f_series),
    "gl": (MOT, False, _f_gl),
    "grass": (MOT, False, _f_grass),
    "coprime": (MOT, False, _f_coprime),
    "p": (("symfunc",), False, _basis_fn("p")),
    "e": (("symfunc",), False, _basis_fn("e")),
    "h": (("symfunc",), False, _basis_fn("h")),
    "m": (("symfunc",), False, _basis_fn("m")),
    "hl": (("symfunc",), False, _f_hl),
    "pair": (SYM, False, _f_pair),
    "delta": (SYM, False, _f_delta),
    "steinitz": (SYM, False, _f_steinitz),
    "convert": (P1, False, _f_convert),
    "hall": (P1, True, _f_hall),
    "cross": (P1, False, _f_cross),
    "oracle": (P1, False, _f_oracle),
    "hallcross": (P1, False, _f_hallcross),
    "printed": (P1, False, _f_printed),
    "apply": (ELL, True, _f_apply),
    "winding": (ELL, True, _f_winding),
    "euler": (ELL, False, _f_euler),
    "triangle": (ELL, False, _f_triangle),
    "alpha": (ELL, False, _f_alpha),
    "comm": (ELL, False, _f_comm),
    "dim": (ELL, True, _f_dim),
    "miki": (ELL, False, _f_miki),
}
