"""Exact linear algebra over the rationals.

Matrices are sparse maps ``(row, col) -> Fraction``; vectors are plain
tuples of :class:`fractions.Fraction`.  Nothing here ever touches a float.

Polynomials are coefficient sequences in *ascending* order, so ``[-1, 0, 1]``
is ``t**2 - 1``.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from types import MappingProxyType
from typing import Iterable, Sequence

from .errors import InputError

Vector = tuple  # tuple[Fraction, ...]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise InputError(f"refusing floating-point value {x!r}; use a rational")
    return Fraction(x)


class RatMatrix:
    """Immutable sparse rational matrix."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise InputError("matrix shape must be non-negative")
        clean = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise InputError(f"entry ({r}, {c}) outside {rows}x{cols} matrix")
            v = as_fraction(v)
            if v:
                clean[(r, c)] = v
        self.rows = rows
        self.cols = cols
        self._entries = clean

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> RatMatrix:
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = {}
        for r, row in enumerate(rows):
            if len(row) != cols:
                raise InputError("ragged rows")
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = v
        return cls(len(rows), cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> RatMatrix:
        entries = {}
        for c, col in enumerate(columns):
            if len(col) != rows:
                raise InputError("column length mismatch")
            for r, v in enumerate(col):
                if v:
                    entries[(r, c)] = v
        return cls(rows, len(columns), entries)

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @property
    def entries(self):
        return MappingProxyType(self._entries)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, rc):
        return self._entries.get(rc, Fraction(0))

    def to_rows(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def row_dicts(self) -> list[dict[int, Fraction]]:
        out = [{} for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            out[r][c] = v
        return out

    def column(self, c: int) -> Vector:
        col = [Fraction(0)] * self.rows
        for (r, cc), v in self._entries.items():
            if cc == c:
                col[r] = v
        return tuple(col)

    def transpose(self) -> RatMatrix:
        return RatMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self._entries.items()})

    def matvec(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise InputError(f"vector of length {len(v)} against {self.cols} columns")
        out = [Fraction(0)] * self.rows
        for (r, c), x in self._entries.items():
            if v[c]:
                out[r] += x * v[c]
        return tuple(out)

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise InputError(f"cannot multiply {self.shape} by {other.shape}")
        by_row = other.row_dicts()
        acc: dict[tuple[int, int], Fraction] = {}
        for (r, k), x in self._entries.items():
            for c, y in by_row[k].items():
                acc[(r, c)] = acc.get((r, c), 0) + x * y
        return RatMatrix(self.rows, other.cols, acc)

    def is_zero(self) -> bool:
        return not self._entries

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._entries.items())))

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols}, nnz={len(self._entries)})"


def _rref_rows(rows: list[dict[int, Fraction]], ncols: int):
    """Gauss-Jordan on sparse row dicts. Returns (nonzero rref rows, pivots)."""
    rows = [dict(r) for r in rows if r]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if c in rows[i]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r]
        lead = p[c]
        if lead != 1:
            p = {k: v / lead for k, v in p.items()}
            rows[r] = p
        for i, row in enumerate(rows):
            if i == r or c not in row:
                continue
            f = row[c]
            for k, v in p.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: RatMatrix) -> tuple[RatMatrix, list[int], int]:
    """Reduced row-echelon form, pivot columns (increasing) and rank.

    The returned matrix keeps the shape of ``m``; zero rows sit at the bottom.
    """
    rows, pivots = _rref_rows(m.row_dicts(), m.cols)
    entries = {(r, c): v for r, row in enumerate(rows) for c, v in row.items()}
    return RatMatrix(m.rows, m.cols, entries), pivots, len(pivots)


def rank(m: RatMatrix) -> int:
    return rref(m)[2]


def kernel_basis(m: RatMatrix) -> list[Vector]:
    """Canonical null-space basis: one vector per free column, in increasing order."""
    rows, pivots = _rref_rows(m.row_dicts(), m.cols)
    pivset = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            x = row.get(f)
            if x:
                v[p] = -x
        basis.append(tuple(v))
    return basis


def image_basis(m: RatMatrix) -> list[Vector]:
    """The pivot columns of ``m`` itself; a basis of its column space."""
    _, pivots = _rref_rows(m.row_dicts(), m.cols)
    return [m.column(c) for c in pivots]


def solve_in_span(target: Sequence, generators: Sequence[Sequence]):
    """Coefficients ``c`` with ``sum(c[i] * generators[i]) == target``, or None.

    Free variables are set to zero, so the solution is the one read straight
    off the reduced augmented system.
    """
    target = tuple(as_fraction(x) for x in target)
    n = len(target)
    for g in generators:
        if len(g) != n:
            raise InputError(f"generator of length {len(g)} against target of length {n}")
    k = len(generators)
    rows = [{} for _ in range(n)]
    for c, g in enumerate(generators):
        for r, x in enumerate(g):
            if x:
                rows[r][c] = as_fraction(x)
    for r, x in enumerate(target):
        if x:
            rows[r][k] = x
    red, pivots = _rref_rows(rows, k + 1)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for row, p in zip(red, pivots):
        coeffs[p] = row.get(k, Fraction(0))
    return coeffs


def inverse(m: RatMatrix) -> RatMatrix:
    n = m.rows
    if m.cols != n:
        raise InputError("inverse of a non-square matrix")
    rows = m.row_dicts()
    for i in range(n):
        rows[i][n + i] = Fraction(1)
    red, pivots = _rref_rows(rows, 2 * n)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise InputError("matrix is singular")
    return RatMatrix(n, n, {(r, c - n): v for r, row in enumerate(red) for c, v in row.items() if c >= n})


class IncrementalSpan:
    """Grows a subspace one vector at a time and answers membership queries."""

    def __init__(self, length: int):
        self.length = length
        self._rows: list[tuple[int, dict[int, Fraction]]] = []  # (pivot, normalized row)

    def __len__(self):
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return [p for p, _ in self._rows]

    def residual(self, v) -> dict[int, Fraction]:
        """Sparse remainder of ``v`` after elimination against the span."""
        res = {i: as_fraction(x) for i, x in enumerate(v) if x}
        for p, row in self._rows:
            f = res.get(p)
            if f:
                for k, x in row.items():
                    nv = res.get(k, 0) - f * x
                    if nv:
                        res[k] = nv
                    else:
                        res.pop(k, None)
        return res

    def contains(self, v) -> bool:
        return not self.residual(v)

    def add(self, v) -> bool:
        """Insert ``v``; returns False when it was already in the span."""
        if len(v) != self.length:
            raise InputError("vector length mismatch")
        res = self.residual(v)
        if not res:
            return False
        p = min(res)
        lead = res[p]
        res = {k: x / lead for k, x in res.items()}
        # keep earlier rows reduced against the new pivot
        for _, row in self._rows:
            f = row.get(p)
            if f:
                for k, x in res.items():
                    nv = row.get(k, 0) - f * x
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self._rows.append((p, res))
        return True


# ---------- polynomials (ascending coefficients) ----------

def _trim(p):
    p = [as_fraction(x) for x in p]
    while p and not p[-1]:
        p.pop()
    return p


def poly_deriv(p):
    return _trim([i * c for i, c in enumerate(p)][1:])


def poly_divmod(a, b):
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b):
        shift = len(r) - len(b)
        f = r[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            r[shift + i] -= f * c
        r = _trim(r)
    return _trim(q), r


def poly_gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return a
    return [c / a[-1] for c in a]


def poly_eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sturm_sequence(p):
    p = _trim(p)
    seq = [p, poly_deriv(p)]
    while seq[-1]:
        r = poly_divmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _sign_changes(signs):
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_distinct_real_roots(p) -> int:
    p = _trim(p)
    if not p:
        raise InputError("zero polynomial has no finite root count")
    if len(p) == 1:
        return 0
    seq = sturm_sequence(p)

    def sgn(x):
        return (x > 0) - (x < 0)

    at_pos = [sgn(s[-1]) for s in seq]
    at_neg = [sgn(s[-1]) * (-1) ** (len(s) - 1) for s in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def square_free_part(p):
    p = _trim(p)
    g = poly_gcd(p, poly_deriv(p))
    if len(g) <= 1:
        return p
    return poly_divmod(p, g)[0]


def sturm_real_rooted(p) -> bool:
    """True iff every complex root of ``p`` is real.

    Repeated roots are handled by passing to the square-free part, which has
    the same root set with multiplicity one.
    """
    p = _trim(p)
    if not p:
        raise InputError("the zero polynomial is not allowed")
    sf = square_free_part(p)
    return count_distinct_real_roots(sf) == len(sf) - 1


def charpoly(m: RatMatrix):
    """Characteristic polynomial det(t*I - m), ascending, via Faddeev-LeVerrier."""
    n = m.rows
    if m.cols != n:
        raise InputError("characteristic polynomial of a non-square matrix")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = RatMatrix(n, n)
    c = Fraction(1)
    for k in range(1, n + 1):
        # mk holds A*M_k, with M_k = A*M_{k-1} + c_{n-k+1}*I
        shifted = dict(mk.entries)
        for i in range(n):
            shifted[(i, i)] = shifted.get((i, i), 0) + c
        mk = m @ RatMatrix(n, n, shifted)
        c = -sum((mk[(i, i)] for i in range(n)), Fraction(0)) / k
        coeffs[n - k] = c
    return coeffs


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(p) -> list[Fraction]:
    """Distinct rational roots of ``p`` in increasing order."""
    p = _trim(p)
    if not p:
        raise InputError("the zero polynomial is not allowed")
    roots = set()
    while p and not p[0]:
        roots.add(Fraction(0))
        p = p[1:]
    if len(p) <= 1:
        return sorted(roots)
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    for num in _divisors(ints[0]):
        for dd in _divisors(ints[-1]):
            for s in (1, -1):
                x = Fraction(s * num, dd)
                if x not in roots and poly_eval(p, x) == 0:
                    roots.add(x)
    return sorted(roots)


def span_basis(vectors: Iterable[Sequence], length: int) -> list[Vector]:
    """Rref basis rows (as dense tuples) of the span of ``vectors``."""
    rows = [{i: as_fraction(x) for i, x in enumerate(v) if x} for v in vectors]
    red, _ = _rref_rows(rows, length)
    out = []
    for row in red:
        v = [Fraction(0)] * length
        for k, x in row.items():
            v[k] = x
        out.append(tuple(v))
    return out
