import itertools
import random

import numpy as np
import pytest

from qtrace.balance import balance_certificate, is_balanced, is_balanced_via_H, is_mutable_balanced
from conftest import p3_lattice, p4_lattice


def random_balanced(lat, rng):
    """Random element of the balanced lattice: per corner weights, extended
    barycentrically, plus arbitrary multiples of n."""
    n = lat.n
    corner_w = {c: rng.randrange(-3, 4) for c in lat.surface.positions}
    vec = [0] * len(lat)
    for f in lat.surface.faces:
        for (i, j, k), v in lat.face_maps[f.id].items():
            w = [corner_w[c] for c in f.corners]
            vec[lat.index(v)] = i * w[0] + j * w[1] + k * w[2]
    return tuple(x + n * rng.randrange(-2, 3) for x in vec)


def test_p3_examples():
    lat = p3_lattice(2)
    mids = {v[1]: v for v in lat.vertices}
    assert is_balanced({}, lat)
    # one at the midpoints of two sides meeting at a corner
    assert is_balanced({mids["s0"]: 1, mids["s2"]: 1}, lat)
    for v in lat.vertices:
        assert not is_balanced({v: 1}, lat)


def test_certificate_witnesses():
    lat = p3_lattice(2)
    mids = {v[1]: v for v in lat.vertices}
    cert = balance_certificate({mids["s0"]: 1, mids["s2"]: 1}, lat)
    (f,) = lat.surface.faces
    a, b, c = cert.witnesses[f.id]
    for (i, j, k), v in lat.face_maps[f.id].items():
        want = 1 if v in (mids["s0"], mids["s2"]) else 0
        assert (a * i + b * j + c * k - want) % 2 == 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_balanced_implies_H_and_mutable(n):
    rng = random.Random(n)
    for tri in ("lambda", "lambda'"):
        lat = p4_lattice(tri, n)
        for _ in range(30):
            k = random_balanced(lat, rng)
            assert is_balanced(k, lat)
            assert is_balanced_via_H(k, lat)
            assert is_mutable_balanced(k, lat.seed, n)


def test_subgroup_closure():
    rng = random.Random(7)
    lat = p4_lattice("lambda", 3)
    for _ in range(20):
        a, b = random_balanced(lat, rng), random_balanced(lat, rng)
        assert is_balanced(tuple(x + y for x, y in zip(a, b)), lat)
        assert is_balanced(tuple(-x for x in a), lat)


def test_mutable_balanced_examples():
    lat = p4_lattice("lambda", 3)
    assert is_mutable_balanced((0,) * len(lat), lat.seed, 3)
    rng = random.Random(1)
    t = tuple(3 * rng.randrange(-5, 5) for _ in lat.vertices)
    assert is_mutable_balanced(t, lat.seed, 3)


def test_H_criterion_is_exact_on_square_n2():
    # exhaustive over {0,1}^V: the H test and the face test agree on P4 (no interior punctures)
    lat = p4_lattice("lambda", 2)
    for bits in itertools.product((0, 1), repeat=len(lat)):
        assert is_balanced(bits, lat) == is_balanced_via_H(bits, lat)
