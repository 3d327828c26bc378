"""Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

Run under pytest (lines are collected into the terminal summary) or directly
with ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import ACCEPTANCE_LINES, p3_lattice, p4_lattice  # noqa: E402
from qtrace import mutation as mut  # noqa: E402
from qtrace.balance import is_balanced, is_balanced_via_H  # noqa: E402
from qtrace.coeff import u_power  # noqa: E402
from qtrace.mutation import nu_prime_exponent, p4_plan, theta_apply  # noqa: E402
from qtrace.network import enumerate_paths  # noqa: E402
from qtrace.quiver import Seed, mutate_seed  # noqa: E402
from qtrace.surface import (  # noqa: E402
    build_lattice, build_polygon, cut_edge, flip_mutation_sequence, triangulate_polygon,
)
from qtrace.torus import TorusElement, binomial, right_divide_binomial, star, weyl_monomial  # noqa: E402
from qtrace.trace import _network, check_split_compatibility, corner_arc_trace, polygon_arc  # noqa: E402


def record(number: int, ok: bool, detail: str, elapsed: float) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail} ({elapsed:.2f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pairs(n):
    return [(i, j) for i in range(1, n + 1) for j in range(1, i + 1)]


# --------------------------------------------------------------------------


def check_flip_sequence():
    expected = {2: [1], 3: [2, 2], 4: [3, 4, 3], 5: [4, 6, 6, 4]}
    got = {}
    for n in expected:
        lat = p4_lattice("lambda", n)
        stages = flip_mutation_sequence(lat, "e1")
        got[n] = [len(s) for s in stages]
    ok = got == expected and all(sum(v) == (n ** 3 - n) // 6 for n, v in got.items())
    return ok, f"stage sizes {got}", 1.0


def check_network_facts():
    """Verbatim counts: one 3-edge path for (1,1), paths of 6 and 8 edges for (2,1)."""
    structural = True
    lengths = {}
    for tri in ("lambda", "lambda'"):
        for n in (2, 3, 4):
            lat = p4_lattice(tri, n)
            net, _ = _network(lat, polygon_arc(lat, "a", 1, 1))
            structural = structural and net.is_acyclic() and not net.degree_violations()
            structural = structural and not any(
                enumerate_paths(net, i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))
            p11 = sorted(len(p.edges) for p in enumerate_paths(net, 1, 1))
            p21 = sorted(len(p.edges) for p in enumerate_paths(net, 2, 1))
            lengths.setdefault(tri, set()).add((tuple(p11), tuple(p21)))
    counts_ok = all(v == {((3,), (6, 8))} for v in lengths.values())
    found = ", ".join(f"{tri} N(11)={list(a)} N(21)={list(b)}"
                      for tri, v in lengths.items() for a, b in sorted(v))
    detail = (f"acyclic/degree/upper-empty {'ok' if structural else 'BROKEN'}; "
              f"edge counts {found}; required N(11)=[3] N(21)=[6, 8] on both")
    return structural and counts_ok, detail, 1.0


def check_balancedness():
    count = 0
    for n in (2, 3, 4):
        lats = [p3_lattice(n), p4_lattice("lambda", n), p4_lattice("lambda'", n)]
        for lat in lats:
            corners = 3 if lat is lats[0] else 4
            for corner in range(corners):
                for i, j in pairs(n):
                    for t in corner_arc_trace(lat, polygon_arc(lat, corner, i, j)).support():
                        if not (is_balanced(t, lat) and is_balanced_via_H(t, lat)):
                            return False, f"unbalanced summand n={n} corner={corner} ({i},{j})", 10
                        count += 1
    return True, f"{count} summand exponents balanced and pass the H test", 10.0


def check_normalizer():
    res = [mut.normalizer_case(n) for n in (2, 3, 4)]
    ok = all(r.ok and r.detail["m_zero"] for r in res)
    steps = [len(r.steps) for r in res]
    return ok, f"Theta(Z^k') = Z^k with m = 0 at {steps} steps", 10.0


def check_naturality():
    out = []
    ok = True
    for n, budget in ((2, 60), (3, 60), (4, 600)):
        start = time.perf_counter()
        rep = mut.verify_naturality(n, arcs=("a", "b", "c"))
        took = time.perf_counter() - start
        good = rep.verdict and took < budget and all(
            s.divisible and s.mutable_balanced for c in rep.cases for s in c.steps)
        ok = ok and good and len(rep.cases) == 3 * len(pairs(n))
        out.append(f"n={n} {sum(c.ok for c in rep.cases)}/{len(rep.cases)}")
    return ok, "arcs a,b,c: " + ", ".join(out), 660.0


def check_splitting():
    total = 0
    for n in (2, 3):
        for tri in ("lambda", "lambda'"):
            lat = p4_lattice(tri, n)
            (diag,) = lat.surface.internal_edges
            for corner in diag.ends:
                for i, j in pairs(n):
                    if not check_split_compatibility(lat, i, j, corner, diag.id).ok:
                        return False, f"split mismatch {tri} n={n} corner={corner} ({i},{j})", 60
                    total += 1
    return True, f"{total} split checks exact", 60.0


def check_consistency():
    parts = []
    ok = True
    for n in (2, 3):
        rep = mut.verify_consistency("P4", n, arcs=("a", "b", "c", "d"))
        ok = ok and rep.verdict
        parts.append(f"P4 n={n} {len(rep.cases)} round trips")
    rep = mut.verify_consistency("P5", 2)
    ok = ok and rep.verdict
    parts.append(f"P5 n=2 {len(rep.cases)} pentagon cases")
    return ok, ", ".join(parts), 120.0


def _random_seed(rng, size):
    a = np.zeros((size, size), dtype=np.int64)
    for x in range(size):
        for y in range(x + 1, size):
            a[x, y] = 2 * rng.randrange(-2, 3)
            a[y, x] = -a[x, y]
    return Seed(tuple(range(size)), frozenset(range(size - 1)), a)


def check_properties():
    rng = random.Random(2024)
    failures = []

    for _ in range(30):
        s = _random_seed(rng, 6)
        k = rng.randrange(5)
        if mutate_seed(mutate_seed(s, k), k) != s:
            failures.append("involution")
            break

    seed = _random_seed(rng, 4)
    vec = lambda: tuple(rng.randrange(-3, 4) for _ in range(4))  # noqa: E731

    def elem():
        return sum((weyl_monomial(seed, vec(), u_power(rng.randrange(-5, 6)) * rng.choice([1, -1, 2]))
                    for _ in range(rng.randrange(1, 4))), TorusElement.zero(seed))

    for _ in range(25):
        a, b, c = elem(), elem(), elem()
        if (a * b) * c != a * (b * c):
            failures.append("associativity")
        t, s = vec(), vec()
        pair = int(np.asarray(t) @ seed.twoQ @ np.asarray(s))
        lhs = weyl_monomial(seed, t) * weyl_monomial(seed, s)
        rhs = weyl_monomial(seed, s) * weyl_monomial(seed, t)
        if lhs != rhs * TorusElement.one(seed).__rmul__(u_power(2 * pair)):
            failures.append("commutation")
        if star(a * b) != star(b) * star(a):
            failures.append("star")
        base = vec()
        if any(base):
            alpha = u_power(rng.randrange(-9, 10))
            if right_divide_binomial(a * binomial(seed, base, alpha), base, alpha) != a:
                failures.append("division")

    lat = p4_lattice("lambda", 3)
    for k in lat.seed.mutable:
        target = mutate_seed(lat.seed, k)
        row = lat.seed.twoQ[lat.index(k)] // 2
        fix = next(i for i, x in enumerate(row) if abs(x) == 1)
        for _ in range(10):
            t = [rng.randrange(-5, 6) for _ in lat.vertices]
            t[fix] -= int(row[fix]) * (int(row @ np.asarray(t)) % 3)
            tp = nu_prime_exponent(t, k, target)
            if int((target.twoQ[target.index(k)] // 2) @ np.asarray(tp)) % 3:
                failures.append("commute transport")

    fan = build_lattice(triangulate_polygon(build_polygon(5), [(0, 2), (0, 3)]), 3)
    cut = cut_edge(fan, "d0_3")
    clat = cut.lattice
    for u in fan.seed.mutable:
        if u[:2] == ("e", "d0_3"):
            continue
        for v in fan.vertices:
            total = sum(clat.seed.twoQ[clat.index(u), clat.index(w)]
                        for w, pv in cut.projection.items() if pv == v)
            if total != fan.seed.twoQ[fan.index(u), fan.index(v)]:
                failures.append("Q additivity")

    base, shuffled = p4_plan(3), p4_plan(3, shuffle_seed=7)
    src = corner_arc_trace(base.target, polygon_arc(base.target, "a", 3, 2))
    if base.sequence == shuffled.sequence or theta_apply(base, base.to_chain_end(src)) != \
            theta_apply(shuffled, shuffled.to_chain_end(src)):
        failures.append("shuffled order")

    failures = sorted(set(failures))
    return not failures, "all property suites hold" if not failures else f"failed: {failures}", 30.0


CRITERIA = [
    (1, check_flip_sequence),
    (2, check_network_facts),
    (3, check_balancedness),
    (4, check_normalizer),
    (5, check_naturality),
    (6, check_splitting),
    (7, check_consistency),
    (8, check_properties),
]


def evaluate(number, fn):
    start = time.perf_counter()
    ok, detail, budget = fn()
    elapsed = time.perf_counter() - start
    if elapsed > budget:
        ok, detail = False, detail + f"; over the {budget:.0f}s budget"
    record(number, ok, detail, elapsed)
    return ok, detail


@pytest.mark.parametrize("number,fn", CRITERIA, ids=[f"criterion_{n}" for n, _ in CRITERIA])
def test_criterion(number, fn):
    ok, detail = evaluate(number, fn)
    assert ok, detail


if __name__ == "__main__":
    results = [evaluate(n, fn)[0] for n, fn in CRITERIA]
    sys.exit(0 if all(results) else 1)
