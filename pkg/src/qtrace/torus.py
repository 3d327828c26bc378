"""Quantum torus elements in the Weyl-ordered basis.

An element is a finite sum of ``c_t * Z^t`` where ``t`` is an integer
exponent vector over the seed vertices (stored as a tuple in seed vertex
order) and ``c_t`` is a :class:`ScalarLaurent`.  Products follow

    Z^t Z^s = u^{L(t, s)} Z^{t+s},   L(t, s) = t^T (2Q) s.
"""

from __future__ import annotations

from typing import Iterable, Mapping

import numpy as np

from .coeff import ONE, ScalarLaurent, _coerce
from .quiver import Seed, _jsonable, _unjson


class SeedMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    """Right division left a nonzero remainder (attached as ``remainder``)."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


def skew_pairing(twoQ: np.ndarray, t, s) -> int:
    """L(t, s) = sum_{v,w} twoQ(v,w) t_v s_w as a Python int."""
    tv = np.asarray(t, dtype=np.int64)
    sv = np.asarray(s, dtype=np.int64)
    return int(tv @ twoQ @ sv)


def _add(t, s):
    return tuple(a + b for a, b in zip(t, s))


class TorusElement:
    """Immutable element of the quantum torus of ``seed``."""

    __slots__ = ("seed", "_terms")

    def __init__(self, seed: Seed, terms: Mapping | None = None):
        self.seed = seed
        clean = {}
        if terms:
            N = len(seed)
            for t, c in terms.items():
                c = _coerce(c)
                if c.is_zero():
                    continue
                t = tuple(int(x) for x in t)
                if len(t) != N:
                    raise ValueError("exponent vector length does not match the seed")
                clean[t] = c
        self._terms = clean

    # construction
    @classmethod
    def zero(cls, seed: Seed) -> "TorusElement":
        return cls(seed)

    @classmethod
    def one(cls, seed: Seed) -> "TorusElement":
        return cls(seed, {(0,) * len(seed): ONE})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "TorusElement"):
        if self.seed is not other.seed and self.seed != other.seed:
            raise SeedMismatch("elements live over different seeds")

    def __add__(self, other):
        self._check(other)
        out = dict(self._terms)
        for t, c in other._terms.items():
            out[t] = out[t] + c if t in out else c
        return TorusElement(self.seed, out)

    def __neg__(self):
        return TorusElement(self.seed, {t: -c for t, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, ScalarLaurent)):
            c = _coerce(other)
            return TorusElement(self.seed, {t: a * c for t, a in self._terms.items()})
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, ScalarLaurent)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.seed == other.seed and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def support(self) -> list:
        return sorted(self._terms)

    def to_json(self) -> list:
        verts = self.seed.vertices
        out = []
        for t in sorted(self._terms):
            out.append({
                "exponents": [[_jsonable(verts[i]), x] for i, x in enumerate(t) if x],
                "coeff": self._terms[t].to_pairs(),
            })
        return out

    @classmethod
    def from_json(cls, seed: Seed, data: Iterable) -> "TorusElement":
        terms: dict = {}
        for entry in data:
            t = [0] * len(seed)
            for v, x in entry["exponents"]:
                t[seed.index(_unjson(v))] += int(x)
            c = ScalarLaurent.from_pairs(entry["coeff"])
            key = tuple(t)
            terms[key] = terms[key] + c if key in terms else c
        return cls(seed, terms)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for t in sorted(self._terms):
            mono = " ".join(
                f"Z[{self.seed.vertices[i]}]^{x}" for i, x in enumerate(t) if x) or "1"
            parts.append(f"({self._terms[t]}) {mono}")
        return " + ".join(parts)


def weyl_monomial(seed: Seed, t, c=ONE) -> TorusElement:
    return TorusElement(seed, {tuple(t): c})


def multiply(A: TorusElement, B: TorusElement) -> TorusElement:
    A._check(B)
    T = A.seed.twoQ
    out: dict = {}
    if not A._terms or not B._terms:
        return TorusElement(A.seed)
    a_keys = list(A._terms)
    b_keys = list(B._terms)
    pair = np.asarray(a_keys, dtype=np.int64) @ T @ np.asarray(b_keys, dtype=np.int64).T
    for ia, t in enumerate(a_keys):
        ca = A._terms[t]
        for ib, s in enumerate(b_keys):
            c = (ca * B._terms[s]).shift(int(pair[ia, ib]))
            key = _add(t, s)
            out[key] = out[key] + c if key in out else c
    return TorusElement(A.seed, out)


def star(A: TorusElement) -> TorusElement:
    """Anti-involution fixing Weyl monomials and sending u to u^-1."""
    return TorusElement(A.seed, {t: c.conj() for t, c in A._terms.items()})


def binomial(seed: Seed, a, alpha) -> TorusElement:
    """1 + alpha Z^a."""
    zero = (0,) * len(seed)
    return TorusElement(seed, {zero: ONE, tuple(a): _coerce(alpha)})


def right_divide_binomial(N: TorusElement, a, alpha) -> TorusElement:
    """Exact quotient N' with N = N' (1 + alpha Z^a), else :class:`NotDivisible`.

    Terms are grouped into classes t + Z a; along a class the divisor acts
    as the univariate polynomial 1 + beta y with beta = alpha u^{L(s, a)}.
    """
    alpha = _coerce(alpha)
    if not alpha.is_unit():
        raise ValueError("alpha must be a unit +-u^k")
    a = tuple(int(x) for x in a)
    if not any(a):
        raise ValueError("binomial exponent must be nonzero")
    p = next(i for i, x in enumerate(a) if x)
    ap = a[p]
    T = N.seed.twoQ

    classes: dict = {}
    for t, c in N._terms.items():
        j = t[p] // ap
        base = tuple(x - j * y for x, y in zip(t, a))
        classes.setdefault(base, {})[j] = c

    out: dict = {}
    remainder: dict = {}
    for base, coeffs in classes.items():
        beta = alpha.shift(skew_pairing(T, base, a))
        lo, hi = min(coeffs), max(coeffs)
        prev = None
        for j in range(lo, hi):
            c = coeffs.get(j, ScalarLaurent())
            if prev is not None:
                c = c - beta * prev
            prev = c
            if not c.is_zero():
                out[tuple(x + j * y for x, y in zip(base, a))] = c
        top = coeffs[hi] - (beta * prev if prev is not None else ScalarLaurent())
        if not top.is_zero():
            remainder[tuple(x + hi * y for x, y in zip(base, a))] = top
    if remainder:
        raise NotDivisible("nonzero remainder in right division",
                           TorusElement(N.seed, remainder))
    return TorusElement(N.seed, out)


def rebase(A: TorusElement, seed: Seed) -> TorusElement:
    """Same terms, reinterpreted over another seed on the same vertex list."""
    if seed.vertices != A.seed.vertices:
        raise SeedMismatch("vertex lists differ")
    return TorusElement(seed, A._terms)
