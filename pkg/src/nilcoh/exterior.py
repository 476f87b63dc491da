"""Sparse elements of the exterior algebra Λ(x_1, ..., x_n) over Q.

A monomial is a strictly increasing tuple of 1-based generator indices; the
empty tuple is the unit.  Degree-k monomials are ordered lexicographically,
which is the order ``itertools.combinations`` produces.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import InputError
from .linalg import as_fraction


@lru_cache(maxsize=None)
def monomial_basis(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def monomial_index(n: int, k: int) -> dict[tuple[int, ...], int]:
    return {m: i for i, m in enumerate(monomial_basis(n, k))}


def merge_sign(a: Sequence[int], b: Sequence[int]) -> int:
    """Sign of the shuffle sorting ``a + b``; 0 if they share an index."""
    inversions = 0
    for x in a:
        for y in b:
            if x == y:
                return 0
            if x > y:
                inversions += 1
    return -1 if inversions % 2 else 1


def sort_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sort a word of generators, returning (sign, sorted tuple); sign 0 on repeats."""
    if len(set(idx)) != len(idx):
        return 0, ()
    inv = sum(1 for i in range(len(idx)) for j in range(i + 1, len(idx)) if idx[i] > idx[j])
    return (-1 if inv % 2 else 1), tuple(sorted(idx))


class ExteriorElement:
    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], object] | None = None):
        if n < 0:
            raise InputError("ambient dimension must be non-negative")
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if any(b <= a for a, b in zip(mono, mono[1:])):
                raise InputError(f"monomial {mono} is not strictly increasing")
            if mono and not (1 <= mono[0] and mono[-1] <= n):
                raise InputError(f"monomial {mono} has an index outside 1..{n}")
            c = as_fraction(c)
            if c:
                clean[mono] = c
        self.n = n
        self._terms = clean

    @classmethod
    def zero(cls, n: int) -> ExteriorElement:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> ExteriorElement:
        return cls(n, {(): 1})

    @classmethod
    def generator(cls, n: int, i: int) -> ExteriorElement:
        return cls(n, {(i,): 1})

    @classmethod
    def monomial(cls, n: int, idx: Sequence[int], coef=1) -> ExteriorElement:
        """Product x_{idx[0]} ∧ x_{idx[1]} ∧ ... in the given (unsorted) order."""
        s, mono = sort_sign(tuple(idx))
        return cls(n, {mono: s * as_fraction(coef)} if s else {})

    @classmethod
    def from_vector(cls, n: int, k: int, vec: Sequence) -> ExteriorElement:
        basis = monomial_basis(n, k)
        if len(vec) != len(basis):
            raise InputError(f"expected {len(basis)} coordinates for degree {k}")
        return cls(n, {m: c for m, c in zip(basis, vec) if c})

    @property
    def terms(self) -> Mapping[tuple[int, ...], Fraction]:
        return MappingProxyType(self._terms)

    def degrees(self) -> set[int]:
        return {len(m) for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int | None:
        """Degree of a homogeneous element; None for zero."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise InputError(f"element is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def component(self, k: int) -> ExteriorElement:
        return ExteriorElement(self.n, {m: c for m, c in self._terms.items() if len(m) == k})

    def to_vector(self, k: int) -> tuple:
        idx = monomial_index(self.n, k)
        v = [Fraction(0)] * len(idx)
        for m, c in self._terms.items():
            if len(m) != k:
                raise InputError(f"element has a degree-{len(m)} term, expected degree {k}")
            v[idx[m]] = c
        return tuple(v)

    def _check(self, other):
        if not isinstance(other, ExteriorElement):
            return NotImplemented
        if other.n != self.n:
            raise InputError(f"ambient dimensions differ ({self.n} vs {other.n})")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return ExteriorElement(self.n, terms)

    def __neg__(self):
        return ExteriorElement(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, ExteriorElement):
            return NotImplemented
        s = as_fraction(scalar)
        return ExteriorElement(self.n, {m: s * c for m, c in self._terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, ExteriorElement):
            return self.n == other.n and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self):
        return f"ExteriorElement({format_element(self)!r}, n={self.n})"


def wedge(u: ExteriorElement, v: ExteriorElement) -> ExteriorElement:
    if not isinstance(u, ExteriorElement) or not isinstance(v, ExteriorElement):
        raise InputError("wedge needs two exterior elements")
    if u.n != v.n:
        raise InputError(f"ambient dimensions differ ({u.n} vs {v.n})")
    out: dict[tuple[int, ...], Fraction] = {}
    for a, ca in u.terms.items():
        sa = set(a)
        for b, cb in v.terms.items():
            if sa.intersection(b):
                continue
            s = merge_sign(a, b)
            key = tuple(sorted(a + b))
            out[key] = out.get(key, 0) + s * ca * cb
    return ExteriorElement(u.n, out)


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(mono: tuple[int, ...]) -> str:
    return "^".join(f"e{i}" for i in mono) if mono else "1"


def format_element(u: ExteriorElement) -> str:
    """Render as a class expression, e.g. ``e1^e4 + e2^e3`` or ``-1/2*e3``."""
    if not u:
        return "0"
    out = []
    for mono, c in sorted(u.terms.items(), key=lambda t: (len(t[0]), t[0])):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        body = format_monomial(mono)
        if a != 1:
            body = f"{format_coefficient(a)}*{body}" if mono else format_coefficient(a)
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text
