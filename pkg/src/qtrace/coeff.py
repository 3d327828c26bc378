"""Exact Laurent polynomials in u = omega^(1/2) with integer coefficients.

Every scalar that shows up in the quantum torus computations
(omega^(2Q), q^(2r-1), Weyl normalisation factors) is an integer power
of u, so ``Z[u, u^-1]`` is the only coefficient ring needed.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class ScalarLaurent:
    """Immutable element of Z[u, u^-1], stored as {exponent: coefficient}."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = int(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    # constructors
    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "ScalarLaurent":
        return cls({exponent: coeff})

    @classmethod
    def one(cls) -> "ScalarLaurent":
        return cls({0: 1})

    @classmethod
    def zero(cls) -> "ScalarLaurent":
        return cls()

    @classmethod
    def from_pairs(cls, pairs: Iterable) -> "ScalarLaurent":
        """Inverse of :meth:`to_pairs` (JSON form)."""
        out: dict[int, int] = {}
        for e, c in pairs:
            out[int(e)] = out.get(int(e), 0) + int(c)
        return cls(out)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        """True for +-u^k, the only invertible elements."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def inverse(self) -> "ScalarLaurent":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of Z[u^+-1]")
        (e, c), = self._terms.items()
        return ScalarLaurent({-e: c})

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return ScalarLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return ScalarLaurent({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return ScalarLaurent(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "ScalarLaurent":
        """Multiply by u^k."""
        if k == 0:
            return self
        return ScalarLaurent({e + k: c for e, c in self._terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = ScalarLaurent.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "ScalarLaurent":
        return scalar_conj(self)

    def __eq__(self, other):
        if isinstance(other, int):
            other = ScalarLaurent({0: other})
        if not isinstance(other, ScalarLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def to_pairs(self) -> list:
        """JSON form: [[u-exponent, "decimal coefficient"], ...] sorted by exponent."""
        return [[e, str(self._terms[e])] for e in sorted(self._terms)]

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            if e == 0:
                parts.append(str(c))
            else:
                mono = "u" if e == 1 else f"u^{e}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(x) -> ScalarLaurent:
    if isinstance(x, ScalarLaurent):
        return x
    if isinstance(x, int):
        return ScalarLaurent({0: x})
    raise TypeError(f"cannot coerce {type(x).__name__} to ScalarLaurent")


def scalar_mul(a: ScalarLaurent, b: ScalarLaurent) -> ScalarLaurent:
    return a * b


def scalar_conj(a: ScalarLaurent) -> ScalarLaurent:
    """Bar involution u -> u^-1."""
    return ScalarLaurent({-e: c for e, c in a.items()})


def u_power(k: int) -> ScalarLaurent:
    return ScalarLaurent({k: 1})


def q_exponent(n: int) -> int:
    """u-exponent of q = omega^(n^2) = u^(2 n^2)."""
    return 2 * n * n


ONE = ScalarLaurent.one()
ZERO = ScalarLaurent.zero()
