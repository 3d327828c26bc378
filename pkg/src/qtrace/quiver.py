"""Cluster seeds and classical mutation of exchange matrices.

The exchange matrix Q of a triangulation quiver takes half-integer values
between frozen vertices, so a seed stores ``twoQ = 2*Q`` as an integer
array and all formulas carry the factor explicitly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Hashable, Sequence

import numpy as np


class MutationAtFrozenVertex(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Seed:
    """Vertices, mutable subset and the doubled exchange matrix."""

    vertices: tuple
    mutable: frozenset
    twoQ: np.ndarray
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        twoQ = np.asarray(self.twoQ, dtype=np.int64)
        if twoQ.shape != (len(self.vertices), len(self.vertices)):
            raise ValueError("twoQ must be square and match the vertex list")
        twoQ.setflags(write=False)
        object.__setattr__(self, "twoQ", twoQ)
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "mutable", frozenset(self.mutable))
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})
        if not self.mutable <= set(self._index):
            raise ValueError("mutable vertices must be seed vertices")

    def __len__(self):
        return len(self.vertices)

    def index(self, v: Hashable) -> int:
        return self._index[v]

    def Q(self, u, v):
        """Exchange matrix entry as a float-free Fraction-like half integer."""
        from fractions import Fraction

        return Fraction(int(self.twoQ[self._index[u], self._index[v]]), 2)

    @property
    def mutable_mask(self) -> np.ndarray:
        return np.array([v in self.mutable for v in self.vertices], dtype=bool)

    def check(self) -> None:
        """Raise if the antisymmetry or half-arrow rule is violated."""
        T = self.twoQ
        if not np.array_equal(T, -T.T):
            raise ValueError("twoQ is not antisymmetric")
        mask = self.mutable_mask
        touching = mask[:, None] | mask[None, :]
        if np.any(T[touching] % 2):
            raise ValueError("half-arrow incident to a mutable vertex")

    def __eq__(self, other):
        if not isinstance(other, Seed):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.mutable == other.mutable
            and np.array_equal(self.twoQ, other.twoQ)
        )

    def __hash__(self):
        return hash((self.vertices, self.mutable, self.twoQ.tobytes()))

    def relabel(self, order: Sequence) -> "Seed":
        """Same seed with vertices listed in ``order``."""
        idx = [self._index[v] for v in order]
        return Seed(tuple(order), self.mutable, self.twoQ[np.ix_(idx, idx)])

    def to_json(self) -> dict:
        return {
            "vertices": [_jsonable(v) for v in self.vertices],
            "mutable": [_jsonable(v) for v in self.vertices if v in self.mutable],
            "twoQ": self.twoQ.tolist(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Seed":
        verts = [_unjson(v) for v in data["vertices"]]
        return cls(tuple(verts), frozenset(_unjson(v) for v in data["mutable"]),
                   np.array(data["twoQ"], dtype=np.int64))

    def to_dot(self, name: str = "quiver") -> str:
        """DOT digraph; arrows carry weight labels 1 (or multiples) and 1/2."""
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            shape = "circle" if v in self.mutable else "box"
            lines.append(f'  "{_label(v)}" [shape={shape}];')
        T = self.twoQ
        for i, u in enumerate(self.vertices):
            for j, v in enumerate(self.vertices):
                if T[i, j] > 0:
                    w = T[i, j]
                    lab = str(w // 2) if w % 2 == 0 else f"{w}/2"
                    lines.append(f'  "{_label(u)}" -> "{_label(v)}" [label="{lab}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _label(v) -> str:
    if isinstance(v, tuple):
        return ":".join(str(x) for x in v)
    return str(v)


def _jsonable(v):
    return list(v) if isinstance(v, tuple) else v


def _unjson(v):
    return tuple(v) if isinstance(v, list) else v


def mutate_twoQ(twoQ: np.ndarray, k: int) -> np.ndarray:
    """Mutation of a doubled exchange matrix at index ``k``.

    With T = 2Q the rule Q' = Q + (Q_uk|Q_kv| + |Q_uk|Q_kv)/2 becomes
    T' = T + (T_uk|T_kv| + |T_uk|T_kv)/4, and rows/columns through k flip sign.
    """
    T = np.asarray(twoQ, dtype=np.int64)
    col = T[:, k]
    row = T[k, :]
    corr = np.outer(col, np.abs(row)) + np.outer(np.abs(col), row)
    if np.any(corr % 4):
        raise ValueError("half-integer entries at a mutation vertex")
    out = T + corr // 4
    out[k, :] = -T[k, :]
    out[:, k] = -T[:, k]
    return out


def mutate_seed(s: Seed, k) -> Seed:
    if k not in s.mutable:
        raise MutationAtFrozenVertex(f"vertex {k!r} is frozen")
    return Seed(s.vertices, s.mutable, mutate_twoQ(s.twoQ, s.index(k)))


def seed_from_json_text(text: str) -> Seed:
    return Seed.from_json(json.loads(text))
