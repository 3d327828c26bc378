"""Balanced and mutable-balanced exponent vectors.

Exponent vectors are accepted either as dense tuples in lattice vertex
order or as sparse ``{vertex: int}`` maps.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .quiver import Seed
from .surface import Lattice


def _dense(k, vertices) -> np.ndarray:
    if isinstance(k, dict):
        idx = {v: i for i, v in enumerate(vertices)}
        out = np.zeros(len(vertices), dtype=np.int64)
        for v, c in k.items():
            out[idx[v]] += int(c)
        return out
    return np.asarray(k, dtype=np.int64)


@dataclass(frozen=True)
class BalanceCertificate:
    """Per-face witnesses (a, b, c) mod n, or the first failing face."""

    balanced: bool
    witnesses: dict
    failing_face: str | None = None

    def to_json(self) -> dict:
        return {"balanced": self.balanced,
                "witnesses": {f: list(w) for f, w in self.witnesses.items()},
                "failing_face": self.failing_face}


def balance_certificate(k, lat: Lattice) -> BalanceCertificate:
    """Brute-force search for a k1, k2, k3 combination matching each face mod n.

    The basis function k1 takes the value i at the small vertex with
    barycentric coordinates (i, j, k); k2 and k3 likewise take j and k.
    """
    n = lat.n
    vec = _dense(k, lat.vertices)
    witnesses = {}
    for f in lat.surface.faces:
        pts = list(lat.face_maps[f.id].items())
        vals = [int(vec[lat.index(v)]) % n for _, v in pts]
        found = None
        for a, b, c in itertools.product(range(n), repeat=3):
            if all((a * i + b * j + c * kk - x) % n == 0 for ((i, j, kk), _), x in zip(pts, vals)):
                found = (a, b, c)
                break
        if found is None:
            return BalanceCertificate(False, witnesses, f.id)
        witnesses[f.id] = found
    return BalanceCertificate(True, witnesses)


def is_balanced(k, lat: Lattice) -> bool:
    return balance_certificate(k, lat).balanced


def is_balanced_via_H(k, lat: Lattice) -> bool:
    """Necessary condition: k H has every entry divisible by n."""
    vec = _dense(k, lat.vertices)
    return bool(np.all((vec @ lat.H) % lat.n == 0))


def mutable_residues(t, seed: Seed) -> np.ndarray:
    """sum_v twoQ(u, v) t_v at every vertex (twice the defining sum)."""
    vec = _dense(t, seed.vertices)
    return seed.twoQ @ vec


def is_mutable_balanced(t, seed: Seed, n: int) -> bool:
    """sum_v Q(u, v) t_v = 0 mod n for every mutable u."""
    twice = mutable_residues(t, seed)
    mask = seed.mutable_mask
    # at mutable rows every twoQ entry is even, so halving is exact
    return bool(np.all((twice[mask] // 2) % n == 0))
