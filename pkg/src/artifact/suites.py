"""Check suites shared by the command line ``check(...)`` call and the acceptance tests.

Each suite returns a :class:`SuiteResult`: a list of named parts, each with a
pass flag and a short detail line.  Sizes are parameters so the CLI can run
small versions and the acceptance script the full ones.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .scalars import ONE, ZERO, L, Scalar, q1, q2, sqrtL, quantum_integer, swap_s1_s2

__all__ = ["SuitePart", "SuiteResult", "SUITES", "run_suite"]


@dataclass
class SuitePart:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    parts: List[SuitePart] = field(default_factory=list)
    elapsed: float = 0.0
    time_limit: Optional[float] = None

    @property
    def passed(self) -> bool:
        in_time = self.time_limit is None or self.elapsed <= self.time_limit
        return in_time and all(p.passed for p in self.parts)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.parts.append(SuitePart(name, bool(passed), detail))

    def summary(self) -> str:
        bad = [p.name for p in self.parts if not p.passed]
        limit = f" (limit {self.time_limit:g}s)" if self.time_limit is not None else ""
        status = "PASS" if self.passed else "FAIL"
        tail = f"; failing: {', '.join(bad)}" if bad else ""
        return f"{status} {self.name}: {len(self.parts) - len(bad)}/{len(self.parts)} parts in {self.elapsed:.2f}s{limit}{tail}"


def _timed(name: str, limit: Optional[float], body: Callable[[SuiteResult], None]) -> SuiteResult:
    res = SuiteResult(name, time_limit=limit)
    start = time.perf_counter()
    body(res)
    res.elapsed = time.perf_counter() - start
    return res


# ---------------------------------------------------------------------------
# motive / scalars


def grothendieck_suite(max_n: int = 6, limit: Optional[float] = 5.0) -> SuiteResult:
    from .motive import class_gl, class_grassmannian

    def body(res: SuiteResult) -> None:
        bad = []
        for n in range(max_n + 1):
            for d in range(n + 1):
                rhs = class_grassmannian(d, n) * class_gl(d) * class_gl(n - d) * L ** (d * (n - d))
                if class_gl(n) != rhs:
                    bad.append((d, n))
        res.add(f"GL_n = Gr(d,n) GL_d GL_(n-d) L^(d(n-d)), 0<=d<=n<={max_n}", not bad, f"failures {bad}")

    return _timed("grothendieck", limit, body)


def zeta_suite(max_sym: int = 10, max_log: int = 8, limit: Optional[float] = 5.0) -> SuiteResult:
    from .motive import log_classes, make_zeta, rationality_check, sym_class

    def body(res: SuiteResult) -> None:
        p1 = make_zeta("p1")
        bad = [n for n in range(max_sym + 1)
               if sym_class(p1, n) != sum((L ** i for i in range(n + 1)), ZERO)]
        res.add(f"Sym^n P1 = 1+L+...+L^n, n<={max_sym}", not bad, f"failures {bad}")
        ell = make_zeta("genus_one", -(q1 + q2))
        bad = [d for d in range(1, max_log + 1)
               if log_classes(ell, d) != 1 + L ** d - q1 ** d - q2 ** d]
        res.add(f"log classes of the genus-one zeta, d<={max_log}", not bad, f"failures {bad}")
        res.add("rationality", rationality_check(p1) and rationality_check(ell))

    return _timed("zeta", limit, body)


# ---------------------------------------------------------------------------
# symmetric functions


def symfunc_suite(hopf_weight: int = 5, hl_weight: int = 4, round_trip_weight: int = 12,
                  limit: Optional[float] = 30.0) -> SuiteResult:
    from .combinat import partitions
    from .symfunc import (BASES, SymElem, coproduct, from_power_sums, hall_littlewood, hopf_pairing,
                          tensor_pairing, to_power_sums)

    q = L

    def body(res: SuiteResult) -> None:
        bad = []
        count = 0
        for wz in range(hopf_weight + 1):
            for wx in range(wz + 1):
                for lx in partitions(wx):
                    for ly in partitions(wz - wx):
                        for lz in partitions(wz):
                            x, y, z = SymElem({lx: ONE}), SymElem({ly: ONE}), SymElem({lz: ONE})
                            lhs = hopf_pairing(x * y, z, q)
                            rhs = tensor_pairing({(lx, ly): ONE}, coproduct(z), q)
                            count += 1
                            if lhs != rhs:
                                bad.append((lx, ly, lz))
        res.add(f"(xy, z) = (x (x) y, Delta z) on {count} p-basis triples", not bad, f"failures {bad[:5]}")
        bad = []
        for n in range(hl_weight + 1):
            lams = partitions(n)
            for a, b in itertools.combinations(lams, 2):
                if not hopf_pairing(hall_littlewood(a, q), hall_littlewood(b, q), q).is_zero():
                    bad.append((a, b))
        res.add(f"Hall-Littlewood orthogonality through weight {hl_weight}", not bad, f"failures {bad[:5]}")
        bad = []
        for n in range(round_trip_weight + 1):
            for basis in BASES:
                for lam in partitions(n):
                    back = from_power_sums(to_power_sums({lam: ONE}, basis), basis)
                    if back != {lam: ONE}:
                        bad.append((basis, lam))
        res.add(f"basis round trips to weight {round_trip_weight}", not bad, f"failures {bad[:5]}")

    return _timed("symfunc", limit, body)


# ---------------------------------------------------------------------------
# torsion


def torsion_suite(round_trip_degree: int = 8, pairing_degree: int = 6, limit: Optional[float] = 10.0) -> SuiteResult:
    from .combinat import partitions
    from .motive import make_zeta
    from .torsion import BETA, TorsionElem, convert_t_one, t_gen, torsion_pairing

    def body(res: SuiteResult) -> None:
        bad = []
        for n in range(1, round_trip_degree + 1):
            for lam in partitions(n):
                x = TorsionElem({(lam, 0): ONE}, "t")
                if convert_t_one(convert_t_one(x, "t_to_one"), "one_to_t") != x:
                    bad.append(("t", lam))
                y = TorsionElem({(lam, 0): ONE}, "one")
                if convert_t_one(convert_t_one(y, "one_to_t"), "t_to_one") != y:
                    bad.append(("one", lam))
        res.add(f"t <-> 1_(0,d) round trips to degree {round_trip_degree}", not bad, f"failures {bad[:5]}")
        p1 = make_zeta("p1")
        bad = []
        for d in range(1, pairing_degree + 1):
            closed = quantum_integer(2 * d) / (Scalar(d) * BETA)
            if torsion_pairing(t_gen(d), t_gen(d), p1) != closed:
                bad.append(d)
        res.add(f"(t_d, t_d) = [2d]/(d (L^1/2 - L^-1/2)) on P1, d<={pairing_degree}", not bad, f"failures {bad}")

    return _timed("torsion", limit, body)


# ---------------------------------------------------------------------------
# the P1 double


def _loop_generators(modes: Sequence[int], rs: Sequence[int]):
    from . import loopsl2 as lp

    gens = []
    for n in modes:
        gens += [(f"E+[{n}]", lp.E_plus(n)), (f"E-[{n}]", lp.E_minus(n))]
    for r in rs:
        gens += [(f"H[{r}]", lp.H(r)), (f"H[{-r}]", lp.H(-r))]
    gens += [("K", lp.K(1)), ("K^-1", lp.K(-1)), ("C2", lp.C_half(1))]
    return gens


def p1_double_suite(mode_bound: int = 3, samples: int = 200, oracle_bound: int = 2, seed: int = 7,
                    limit: Optional[float] = 300.0) -> SuiteResult:
    from . import loopsl2 as lp
    from .double import hall_cross_commutator, printed_cross_commutator

    def body(res: SuiteResult) -> None:
        modes = range(-mode_bound, mode_bound + 1)
        rs = range(1, mode_bound + 1)
        report = lp.relation_residues(modes, rs)
        for name, rows in report.items():
            bad = [idx for idx, r in rows if not r.is_zero()]
            res.add(f"relation {name} on modes [-{mode_bound},{mode_bound}]", not bad, f"{len(rows)} checked, failures {bad[:5]}")
        gens = _loop_generators(modes, rs)
        rng = random.Random(seed)
        bad = []
        for _ in range(samples):
            (na, a), (nb, b), (nc, c) = (rng.choice(gens) for _ in range(3))
            if (a * b) * c != a * (b * c):
                bad.append((na, nb, nc))
        res.add(f"associativity on {samples} random generator triples", not bad, f"failures {bad[:5]}")
        pairs = list(itertools.product(range(-oracle_bound, oracle_bound + 1), repeat=2))
        bad = [(m, n) for m, n in pairs if lp.cross_commutator_oracle(m, n) != lp.cross_commutator(m, n)]
        res.add("double oracle equals the loop cross relation", not bad, f"{len(pairs)} pairs, failures {bad}")
        bad = [(m, n) for m, n in pairs if hall_cross_commutator(m, n) != printed_cross_commutator(m, n)]
        swapped = [(m, n) for m, n in pairs if m != n and hall_cross_commutator(n, m) != printed_cross_commutator(m, n)]
        res.add("double oracle equals the printed [1+_(1,m), 1-_(1,n)] case split", not bad,
                f"{len(pairs) - len(bad)}/{len(pairs)} agree; with m,n exchanged "
                f"{len(pairs) - oracle_bound * 2 - 1 - len(swapped)}/{len(pairs) - 2 * oracle_bound - 1} off-diagonal agree")

    return _timed("p1-double", limit, body)


# ---------------------------------------------------------------------------
# the elliptic double


def _window_points(bound: int) -> List[Tuple[int, int]]:
    return [(r, d) for r in range(-bound, bound + 1) for d in range(-bound, bound + 1) if (r, d) != (0, 0)]


def elliptic_suite(bound: int = 3, jacobi_samples: int = 100, assoc_samples: int = 200, seed: int = 11,
                   theta_convention: str = "bs", limit: Optional[float] = 600.0) -> SuiteResult:
    from .elliptic.algebra import EllipticDouble, bracket

    def body(res: SuiteResult) -> None:
        pts = _window_points(bound)
        pairs = [(x, y) for x in pts for y in pts]
        forward = EllipticDouble(theta_convention=theta_convention)
        backward = EllipticDouble(theta_convention=theta_convention)
        fw = {(x, y): forward.comm(x, y) for x, y in pairs}
        bad = [(x, y) for x, y in reversed(pairs) if not (fw[(x, y)] + backward.comm(y, x)).is_zero()]
        res.add(f"antisymmetry [t_x,t_y] + [t_y,t_x] = 0, |r|,|d|<={bound}", not bad,
                f"{len(pairs)} pairs in two independent engines, failures {bad[:5]}")
        A = forward
        rng = random.Random(seed)
        bad = []
        for _ in range(jacobi_samples):
            x, y, z = (A.t(rng.choice(pts)) for _ in range(3))
            jac = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)
            if not jac.is_zero():
                bad.append(1)
        res.add(f"Jacobi on {jacobi_samples} random triples", not bad, f"{len(bad)} failures")
        bad = []
        for _ in range(assoc_samples):
            a, b, c = (A.t(rng.choice(pts)) for _ in range(3))
            if (a * b) * c != a * (b * c):
                bad.append(1)
        res.add(f"associativity on {assoc_samples} random triples", not bad, f"{len(bad)} failures")
        bad = []
        for _ in range(50):
            a = A.t(rng.choice(pts)) * A.t(rng.choice(pts))
            kw = rng.choice(pts)
            k = A.k((kw[0], kw[1]))
            if k * a != a * k:
                bad.append(kw)
        res.add("kappa weights are central", not bad, f"failures {bad[:5]}")
        bad = []
        for (x, y), val in fw.items():
            if any(c != swap_s1_s2(c) for c in val.coefficients()):
                bad.append((x, y))
        res.add("structure constants invariant under s1 <-> s2", not bad, f"{len(fw)} commutators, failures {bad[:5]}")

    return _timed("elliptic-double", limit, body)


def sl2z_suite(bound: int = 2, samples: int = 50, seed: int = 5, limit: Optional[float] = 300.0) -> SuiteResult:
    from .elliptic.algebra import EllipticDouble, bracket
    from .elliptic.sl2z import GammaLift, sl2z_apply, winding_number

    def body(res: SuiteResult) -> None:
        A = EllipticDouble()
        pts = _window_points(bound)
        lifts = {"t_O": GammaLift.spherical_twist(), "rho": GammaLift.rotation()}
        for name, g in lifts.items():
            bad = []
            for x, y in itertools.product(pts, repeat=2):
                tx, ty = sl2z_apply(g, A.t(x)), sl2z_apply(g, A.t(y))
                if bracket(tx, ty) != sl2z_apply(g, A.comm(x, y)):
                    bad.append((x, y))
            res.add(f"relation images under {name}, |r|,|d|<={bound}", not bad, f"{len(pts) ** 2} pairs, failures {bad[:5]}")
        rng = random.Random(seed)
        for name, g in lifts.items():
            bad = []
            for _ in range(samples):
                a = A.t(rng.choice(pts)) + A.t(rng.choice(pts)) * 2
                b = A.t(rng.choice(pts)) - A.k(rng.choice(pts))
                if sl2z_apply(g, a * b) != sl2z_apply(g, a) * sl2z_apply(g, b):
                    bad.append(1)
            res.add(f"gamma(ab) = gamma(a) gamma(b) for {name} on {samples} products", not bad, f"{len(bad)} failures")
        bad = []
        shift = GammaLift.deck_shift()
        for g in list(lifts.values()) + [GammaLift.poincare_transform(), GammaLift.identity()]:
            for x in pts:
                if winding_number(g * shift, x) != winding_number(g, x) + 2 or \
                        winding_number(shift * g, x) != winding_number(g, x) + 2:
                    bad.append((str(g), x))
        res.add("a full deck shift adds 2 to every winding number", not bad, f"failures {bad[:5]}")

    return _timed("sl2z", limit, body)


def dim_suite(window: int = 2, limit: Optional[float] = 600.0) -> SuiteResult:
    from .elliptic.dim import QBRACKET_SERRE, RELATION_KINDS, dim_dictionary, dim_relation_check, miki_check

    def body(res: SuiteResult) -> None:
        D = dim_dictionary()
        report = dim_relation_check(window, RELATION_KINDS + QBRACKET_SERRE, D)
        for kind in RELATION_KINDS:
            rows = report[kind]
            bad = [m for m, r in rows if not r.is_zero()]
            res.add(f"{kind} residues, modes |k|<={window}", not bad and bool(rows), f"{len(rows)} checked, failures {bad[:5]}")
        qb = sum(len(report[k]) for k in QBRACKET_SERRE)
        qb_bad = sum(1 for k in QBRACKET_SERRE for _, r in report[k] if not r.is_zero())
        report_line = f"q-bracket Serre form (diagnostic): {qb_bad}/{qb} nonzero"
        miki = miki_check(D)
        ratios = miki["ratios"]
        res.add("Miki: q^c -> K and K -> q^-c exactly", all(miki["central_exact"].values()))
        for name in ("E_0", "F_0", "H_1", "H_-1"):
            r = ratios[name]
            res.add(f"Miki: image of {name} proportional to its target", r is not None,
                    f"ratio {r}" if r is not None else f"no multiple; against q^-c H_1: {miki['F_0 against q^{-c} H_1']}")
        res.add("Miki: measured coefficient a", True,
                f"a from F_0 = {miki['a_from_F0']}, a from H_-1 = {miki['a_from_H-1']}; {report_line}")

    return _timed("dim", limit, body)


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "grothendieck": grothendieck_suite,
    "zeta": zeta_suite,
    "symfunc": symfunc_suite,
    "torsion": torsion_suite,
    "p1-double": p1_double_suite,
    "elliptic-double": elliptic_suite,
    "sl2z": sl2z_suite,
    "dim": dim_suite,
}


def run_suite(name: str, **kwargs) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown check suite {name!r}; known: {', '.join(SUITES)}")
    return SUITES[name](**kwargs)
