"""Balanced n-th root quantum mutation and the flip coordinate change.

One step maps an element over the seed ``D_k`` to the seed
``D_{k-1} = mu_k(D_k)``:

1. exponent transport ``t -> t'`` (``nu_prime_exponent``);
2. multiplication by ``F^q(X_k, m)`` with ``m = (1/n) sum_v Q(k, v) t'_v``.

Negative ``m`` puts binomials in the denominator.  ``mutate_polynomial``
clears them with a common right factor and divides it back out exactly;
a nonzero remainder means the result is not a Laurent polynomial.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .balance import is_balanced, is_mutable_balanced
from .coeff import ONE, ScalarLaurent, q_exponent
from .quiver import MutationAtFrozenVertex, Seed, mutate_seed
from .surface import (
    Lattice, P4, build_lattice, build_polygon, flip, flip_identification,
    flip_mutation_sequence, flipped_edge_id, triangulate_polygon,
)
from .torus import NotDivisible, TorusElement, right_divide_binomial, skew_pairing
from .trace import corner_arc_trace, diagonal_exponent, polygon_arc


class NotMutableBalanced(ArithmeticError):
    pass


class StepFailure(RuntimeError):
    def __init__(self, step, vertex, cause):
        super().__init__(f"step {step} at {vertex!r}: {cause}")
        self.step = step
        self.vertex = vertex
        self.cause = cause


def nu_prime_exponent(t, k, target: Seed) -> tuple:
    """t'_k = -t_k + sum_v [Q(v, k)]_+ t_v; other entries unchanged."""
    if k not in target.mutable:
        raise MutationAtFrozenVertex(f"vertex {k!r} is frozen")
    ki = target.index(k)
    col = target.twoQ[:, ki]
    pos = np.where(col > 0, col, 0) // 2
    pos[ki] = 0
    out = list(int(x) for x in t)
    out[ki] = -out[ki] + int(np.dot(pos, np.asarray(t, dtype=np.int64)))
    return tuple(out)


def adjoint_multiplicity(t, k, seed: Seed, n: int) -> int:
    """m = (1/n) sum_v Q(k, v) t_v."""
    twice = int(seed.twoQ[seed.index(k)] @ np.asarray(t, dtype=np.int64))
    if twice % (2 * n):
        raise NotMutableBalanced(f"sum_v Q({k!r}, v) t_v = {twice}/2 is not divisible by {n}")
    return twice // (2 * n)


def _binomial_product(coeffs: list) -> list:
    """Expand prod_r (1 + c_r x) as scalar coefficients of x^0, x^1, ..."""
    poly = [ONE]
    for c in coeffs:
        nxt = poly + [ScalarLaurent()]
        for d in range(len(poly)):
            nxt[d + 1] = nxt[d + 1] + poly[d] * c
        poly = nxt
    return poly


@dataclass
class StepRecord:
    step: int
    vertex: object
    m_values: list
    denominator_degree: int
    divisible: bool
    mutable_balanced: bool
    terms_in: int = 0
    terms_out: int = 0

    def to_json(self) -> dict:
        return {"step": self.step, "vertex": _jv(self.vertex), "m_values": self.m_values,
                "denominator_degree": self.denominator_degree, "divisible": self.divisible,
                "mutable_balanced": self.mutable_balanced,
                "terms_in": self.terms_in, "terms_out": self.terms_out}


def _jv(v):
    return list(v) if isinstance(v, tuple) else v


def mutate_polynomial(P: TorusElement, k, target: Seed, n: int,
                      record: StepRecord | None = None) -> TorusElement:
    """nu_k(P) as an exact element over ``target``."""
    qe = q_exponent(n)
    ki = target.index(k)
    xk = [0] * len(target)
    xk[ki] = n
    xk = tuple(xk)
    T = target.twoQ
    balanced = all(is_mutable_balanced(t, P.seed, n) for t in P.support())
    if record is not None:
        record.mutable_balanced = balanced
        record.terms_in = len(P)
    if not balanced:
        raise NotMutableBalanced("input is not termwise mutable-balanced")

    moved = []
    for t, c in P.items():
        tp = nu_prime_exponent(t, k, target)
        moved.append((tp, c, adjoint_multiplicity(tp, k, target, n)))
    M = max([0] + [-m for _, _, m in moved])
    if record is not None:
        record.m_values = sorted({m for _, _, m in moved})
        record.denominator_degree = M

    numerator: dict = {}
    for tp, c, m in moved:
        factors = [ScalarLaurent.monomial(qe * (2 * r - 1)) for r in range(1, m + 1)]
        factors += [ScalarLaurent.monomial(-qe * (2 * r - 1)) for r in range(abs(min(m, 0)) + 1, M + 1)]
        poly = _binomial_product(factors)
        # Z^{t'} X^d = u^{d L(t', X)} Z^{t' + d X}
        twist = skew_pairing(T, tp, xk)
        for d, s in enumerate(poly):
            if s.is_zero():
                continue
            key = tuple(a + d * b for a, b in zip(tp, xk))
            val = (c * s).shift(d * twist)
            numerator[key] = numerator[key] + val if key in numerator else val
    out = TorusElement(target, numerator)
    try:
        for r in range(1, M + 1):
            out = right_divide_binomial(out, xk, ScalarLaurent.monomial(-qe * (2 * r - 1)))
    except NotDivisible:
        if record is not None:
            record.divisible = False
        raise
    if record is not None:
        record.divisible = True
        record.terms_out = len(out)
    return out


# ---------------------------------------------------------------------------
# flip plans


class FlipPlan:
    """Seed chain D_0 = seed(source), ..., D_r = mu_{v_r} ... mu_{v_1}(D_0).

    Elements over D_r use the source vertex order; ``to_chain_end`` moves an
    element over the flipped lattice there through the vertex identification.
    """

    def __init__(self, source: Lattice, edge_id: str, rng: random.Random | None = None,
                 stages: list | None = None):
        self.source = source
        self.edge_id = edge_id
        self.n = source.n
        self.stages = flip_mutation_sequence(source, edge_id)
        if stages is not None:
            if [set(s) for s in stages] != [set(s) for s in self.stages]:
                raise ValueError("stages are not a reordering of the flip mutation sequence")
            self.stages = [list(s) for s in stages]
        elif rng is not None:
            self.stages = [rng.sample(s, len(s)) for s in self.stages]
        self.sequence = [v for s in self.stages for v in s]
        seeds = [source.seed]
        for v in self.sequence:
            seeds.append(mutate_seed(seeds[-1], v))
        self.seeds = seeds
        self.target = build_lattice(flip(source.surface, edge_id), self.n)
        self.identification = flip_identification(source, self.target, edge_id)
        self._perm = [self.target.index(w) for w in self._target_order()]
        expected = self.target.seed.relabel(self._target_order())
        if not np.array_equal(expected.twoQ, seeds[-1].twoQ):
            raise AssertionError("mutation sequence does not reach the flipped seed")
        if {self.identification[w] for w in self.target.seed.mutable} != source.seed.mutable:
            raise AssertionError("vertex identification does not preserve mutable roles")

    def _target_order(self):
        inv = {v: w for w, v in self.identification.items()}
        return [inv[v] for v in self.source.vertices]

    @property
    def length(self) -> int:
        return len(self.sequence)

    def to_chain_end(self, A: TorusElement) -> TorusElement:
        """Element over the flipped lattice -> element over D_r."""
        terms = {tuple(t[i] for i in self._perm): c for t, c in A.items()}
        return TorusElement(self.seeds[-1], terms)

    def from_chain_start(self, A: TorusElement) -> TorusElement:
        return TorusElement(self.source.seed, A.terms)

    def to_json(self) -> dict:
        return {
            "edge": self.edge_id,
            "n": self.n,
            "surface": self.source.surface.to_json(),
            "stages": [[_jv(v) for v in s] for s in self.stages],
        }


def theta_apply(plan: FlipPlan, P: TorusElement, records: list | None = None) -> TorusElement:
    """nu_{v_1} o ... o nu_{v_r} applied to ``P`` over D_r; returns over D_0."""
    cur = P
    r = plan.length
    for step in range(r, 0, -1):
        v = plan.sequence[step - 1]
        rec = StepRecord(step, v, [], 0, False, False)
        if records is not None:
            records.append(rec)
        try:
            cur = mutate_polynomial(cur, v, plan.seeds[step - 1], plan.n, rec)
        except (NotDivisible, NotMutableBalanced) as exc:
            raise StepFailure(step, v, exc) from exc
    return TorusElement(plan.source.seed, cur.terms)


@lru_cache(maxsize=None)
def p4_plan(n: int, shuffle_seed: int | None = None) -> FlipPlan:
    rng = random.Random(shuffle_seed) if shuffle_seed is not None else None
    return FlipPlan(build_lattice(P4("lambda"), n), "e1", rng)


# ---------------------------------------------------------------------------
# verification


@dataclass
class CaseResult:
    key: str
    ok: bool
    steps: list = field(default_factory=list)
    error: str | None = None
    balanced_endpoints: bool = True
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"case": self.key, "ok": self.ok, "error": self.error,
                "balanced_endpoints": self.balanced_endpoints,
                "steps": [s.to_json() for s in self.steps], **self.detail}


@dataclass
class VerificationReport:
    kind: str
    params: dict
    cases: list
    wall_time: float = 0.0

    @property
    def verdict(self) -> bool:
        return bool(self.cases) and all(c.ok for c in self.cases)

    def to_json(self) -> dict:
        return {"kind": self.kind, "params": self.params, "verdict": self.verdict,
                "wall_time": self.wall_time, "cases": [c.to_json() for c in self.cases]}

    @staticmethod
    def recheck(data: dict) -> bool:
        """Recompute the verdict from the per-step certificates of a stored report."""
        ok = bool(data["cases"])
        for c in data["cases"]:
            steps_ok = all(s["divisible"] and s["mutable_balanced"] for s in c["steps"])
            ok = ok and c["ok"] and steps_ok and c.get("balanced_endpoints", True)
        return ok


def _run_theta_case(plan: FlipPlan, key: str, source_elem: TorusElement,
                    expected: TorusElement, lat_src: Lattice, lat_dst: Lattice) -> CaseResult:
    steps: list = []
    bal = all(is_balanced(t, lat_dst) for t in source_elem.support()) and \
        all(is_balanced(t, lat_src) for t in expected.support())
    try:
        got = theta_apply(plan, plan.to_chain_end(source_elem), steps)
    except StepFailure as exc:
        return CaseResult(key, False, steps, str(exc), bal)
    ok = got == expected
    detail = {} if ok else {"got": got.to_json(), "expected": expected.to_json()}
    return CaseResult(key, ok and bal, steps, None, bal, detail)


def naturality_case(n: int, arc: str, i: int, j: int, shuffle_seed: int | None = None) -> CaseResult:
    plan = p4_plan(n, shuffle_seed)
    lam, lamp = plan.source, plan.target
    src = corner_arc_trace(lamp, polygon_arc(lamp, arc, i, j))
    exp = corner_arc_trace(lam, polygon_arc(lam, arc, i, j))
    return _run_theta_case(plan, f"{arc}{i}{j}", src, exp, lam, lamp)


def normalizer_case(n: int, arc: str = "a") -> CaseResult:
    """Theta(Z^{K'}) = Z^K with m = 0 at every step."""
    plan = p4_plan(n)
    lam, lamp = plan.source, plan.target
    Kp = diagonal_exponent(lamp, polygon_arc(lamp, arc, 1, 1))
    K = diagonal_exponent(lam, polygon_arc(lam, arc, 1, 1))
    res = _run_theta_case(plan, f"normalizer-{arc}", TorusElement(lamp.seed, {Kp: ONE}),
                          TorusElement(lam.seed, {K: ONE}), lam, lamp)
    res.detail["m_zero"] = all(s.m_values == [0] for s in res.steps)
    res.ok = res.ok and res.detail["m_zero"] and len(res.steps) == plan.length
    return res


def _threads(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("QTRACE_THREADS", "1"))
    return max(1, threads)


def _run_cases(fn, args: list, threads: int | None) -> list:
    threads = _threads(threads)
    if threads == 1 or len(args) == 1:
        results = [fn(*a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_star_call, [(fn, a) for a in args]))
    return sorted(results, key=lambda r: r.key)


def _star_call(pair):
    fn, a = pair
    return fn(*a)


def verify_naturality(n: int, arcs=("a", "b", "c"), threads: int | None = None,
                      shuffle_seed: int | None = None) -> VerificationReport:
    start = time.perf_counter()
    args = [(n, arc, i, j, shuffle_seed) for arc in arcs
            for i in range(1, n + 1) for j in range(1, i + 1)]
    cases = _run_cases(naturality_case, args, threads)
    return VerificationReport("naturality", {"surface": "P4", "n": n, "arcs": list(arcs)},
                              cases, time.perf_counter() - start)


# ---------------------------------------------------------------------------
# consistency around flip cycles


def apply_flip_chain(lat: Lattice, edges: list, A: TorusElement, steps: list | None = None):
    """Carry ``A`` (over the end of the chain) back to ``lat``.

    ``edges`` lists the flipped edge ids in order starting at ``lat``.  For
    each flip the coordinate change from the flipped triangulation back to
    the previous one is applied, last flip first.
    """
    plans = []
    cur = lat
    for e in edges:
        plan = FlipPlan(cur, e)
        plans.append(plan)
        cur = plan.target
    if A.seed != cur.seed:
        raise ValueError("element does not live on the end of the flip chain")
    for plan in reversed(plans):
        A = theta_apply(plan, plan.to_chain_end(TorusElement(plan.target.seed, A.terms)), steps)
    return A, cur


def _rebuild(lat: Lattice, end: Lattice, A: TorusElement) -> TorusElement:
    """Reindex an element over ``end`` (same vertex keys as ``lat``) onto ``lat``."""
    perm = [end.index(v) for v in lat.vertices]
    return TorusElement(lat.seed, {tuple(t[i] for i in perm): c for t, c in A.items()})


def cycle_case(lat: Lattice, edges: list, arc, key: str) -> CaseResult:
    """Go around a flip cycle and demand the identity on a corner-arc trace."""
    n = lat.n
    # the end of the cycle is the start triangulation with possibly relabelled seed order
    plans_end = lat
    for e in edges:
        plans_end = build_lattice(flip(plans_end.surface, e), n)
    if set(plans_end.vertices) != set(lat.vertices):
        return CaseResult(key, False, error="flip cycle does not close up")
    elem = corner_arc_trace(lat, arc)
    start_on_end = TorusElement(plans_end.seed, {
        tuple(t[lat.index(v)] for v in plans_end.vertices): c for t, c in elem.items()})
    steps: list = []
    try:
        out, _ = apply_flip_chain(lat, edges, start_on_end, steps)
    except StepFailure as exc:
        return CaseResult(key, False, steps, str(exc))
    ok = out == elem
    return CaseResult(key, ok, steps, None, True,
                      {} if ok else {"got": out.to_json(), "expected": elem.to_json()})


def p4_round_trip_case(n: int, arc: str, i: int, j: int) -> CaseResult:
    lam = build_lattice(P4("lambda"), n)
    return cycle_case(lam, ["e1", "e1p"], polygon_arc(lam, arc, i, j), f"roundtrip-{arc}{i}{j}")


PENTAGON_START = [(0, 2), (0, 3)]
PENTAGON_FLIPS = ["d0_2", "d0_3", "d1_3", "d1_4", "d2_4"]


def pentagon_case(n: int, i: int, j: int, corner: int = 0) -> CaseResult:
    lat = build_lattice(triangulate_polygon(build_polygon(5), PENTAGON_START), n)
    return cycle_case(lat, PENTAGON_FLIPS, polygon_arc(lat, corner, i, j), f"pentagon-{corner}:{i}{j}")


def verify_consistency(surface: str, n: int, threads: int | None = None,
                       arcs=("a", "b", "c")) -> VerificationReport:
    start = time.perf_counter()
    if surface == "P4":
        args = [(n, arc, i, j) for arc in arcs for i in range(1, n + 1) for j in range(1, i + 1)]
        cases = _run_cases(p4_round_trip_case, args, threads)
    elif surface == "P5":
        args = [(n, i, j) for i in range(1, n + 1) for j in range(1, i + 1)]
        cases = _run_cases(pentagon_case, args, threads)
    else:
        raise ValueError(f"no flip cycle known for {surface}")
    return VerificationReport("consistency", {"surface": surface, "n": n}, cases,
                              time.perf_counter() - start)
