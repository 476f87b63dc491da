"""Finite-dimensional Lie algebras over Q given by structure constants.

Basis vectors are 1-based, ``[e_i, e_j] = sum_k c[i, j, k] e_k``, and only
keys with ``i < j`` are stored.  Coordinate vectors handed to :meth:`bracket`
are 0-based sequences of length ``dim``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from . import linalg
from .errors import InputError, InvalidAlgebraError
from .linalg import RatMatrix, as_fraction


class LieAlgebra:
    """Immutable Lie algebra with rational structure constants.

    ``brackets`` may be a mapping ``(i, j, k) -> c`` or an iterable of
    ``(i, j, k, c)``.  Keys with ``i > j`` are folded by antisymmetry; a
    nonzero ``i == j`` constant is an :class:`InputError`, and a folded key
    that disagrees with its partner raises :class:`InvalidAlgebraError`.
    Jacobi is *not* checked here, see :func:`validate`.
    """

    __slots__ = ("name", "dim", "_brackets", "_table")

    def __init__(self, dim: int, brackets=(), name: str = "algebra"):
        if not isinstance(dim, int) or dim < 1:
            raise InputError(f"dimension must be a positive integer, got {dim!r}")
        items = brackets.items() if isinstance(brackets, Mapping) else (
            ((i, j, k), c) for i, j, k, c in brackets)
        consts: dict[tuple[int, int, int], Fraction] = {}
        seen: set[tuple[int, int, int]] = set()
        for (i, j, k), c in items:
            for idx in (i, j, k):
                if not isinstance(idx, int) or not 1 <= idx <= dim:
                    raise InputError(f"index {idx!r} out of range 1..{dim} in ({i}, {j}, {k})")
            c = as_fraction(c)
            if i == j:
                if c:
                    raise InputError(f"[e{i}, e{i}] must vanish, got coefficient {c} on e{k}")
                continue
            key, val = ((i, j, k), c) if i < j else ((j, i, k), -c)
            if key in seen:
                if consts.get(key, Fraction(0)) != val:
                    raise InvalidAlgebraError(
                        f"inconsistent constants for [e{key[0]}, e{key[1]}] on e{k}: "
                        f"antisymmetry violated", triple=key)
                continue
            seen.add(key)
            if val:
                consts[key] = val
        self.name = name
        self.dim = dim
        self._brackets = dict(sorted(consts.items()))
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j, k), c in self._brackets.items():
            table.setdefault((i, j), {})[k] = c
            table.setdefault((j, i), {})[k] = -c
        self._table = table

    @property
    def brackets(self) -> Mapping[tuple[int, int, int], Fraction]:
        return MappingProxyType(self._brackets)

    def constant(self, i: int, j: int, k: int) -> Fraction:
        return self._table.get((i, j), {}).get(k, Fraction(0))

    def bracket_basis(self, i: int, j: int) -> Mapping[int, Fraction]:
        """[e_i, e_j] as a sparse map k -> coefficient (1-based)."""
        return self._table.get((i, j), {})

    def bracket(self, u, v) -> tuple:
        n = self.dim
        if len(u) != n or len(v) != n:
            raise InputError("coordinate vectors must have length dim")
        out = [Fraction(0)] * n
        for (i, j), col in self._table.items():
            a, b = u[i - 1], v[j - 1]
            if a and b:
                ab = a * b
                for k, c in col.items():
                    out[k - 1] += ab * c
        return tuple(out)

    def ad(self, i: int) -> RatMatrix:
        """Matrix of ad e_i in the basis e_1..e_n (column j holds [e_i, e_j])."""
        entries = {}
        for j in range(1, self.dim + 1):
            for k, c in self.bracket_basis(i, j).items():
                entries[(k - 1, j - 1)] = c
        return RatMatrix(self.dim, self.dim, entries)

    def ad_vector(self, v) -> RatMatrix:
        n = self.dim
        cols = [self.bracket(v, _unit(n, j)) for j in range(n)]
        return RatMatrix.from_columns(cols, n)

    def is_abelian(self) -> bool:
        return not self._brackets

    def renamed(self, name: str) -> LieAlgebra:
        return LieAlgebra(self.dim, self._brackets, name=name)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._brackets == other._brackets

    def __hash__(self):
        return hash((self.dim, tuple(self._brackets.items())))

    def __repr__(self):
        parts = []
        for (i, j), col in sorted(self._table.items()):
            if i < j:
                rhs = " + ".join(f"{c}*e{k}" if c != 1 else f"e{k}" for k, c in sorted(col.items()))
                parts.append(f"[e{i},e{j}]={rhs}")
        return f"LieAlgebra({self.name!r}, dim={self.dim}, {', '.join(parts) or 'abelian'})"


def _unit(n, j):
    v = [Fraction(0)] * n
    v[j] = Fraction(1)
    return tuple(v)


@dataclass(frozen=True)
class Validation:
    ok: bool
    triple: tuple[int, int, int] | None = None
    residual: tuple = ()

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "Jacobi identity holds"
        i, j, k = self.triple
        terms = " + ".join(f"{c}*e{m + 1}" for m, c in enumerate(self.residual) if c)
        return f"Jacobi identity fails on (e{i}, e{j}, e{k}): cyclic sum = {terms}"


def jacobiator(a: LieAlgebra, i: int, j: int, k: int) -> tuple:
    n = a.dim
    ei, ej, ek = _unit(n, i - 1), _unit(n, j - 1), _unit(n, k - 1)
    t1 = a.bracket(a.bracket(ei, ej), ek)
    t2 = a.bracket(a.bracket(ej, ek), ei)
    t3 = a.bracket(a.bracket(ek, ei), ej)
    return tuple(x + y + z for x, y, z in zip(t1, t2, t3))


def validate(a: LieAlgebra) -> Validation:
    """Check Jacobi on every triple i < j < k; report the first failure."""
    n = a.dim
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                res = jacobiator(a, i, j, k)
                if any(res):
                    return Validation(False, (i, j, k), res)
    return Validation(True)


def require_valid(a: LieAlgebra) -> None:
    v = validate(a)
    if not v:
        raise InvalidAlgebraError(v.describe(), triple=v.triple)


# ---------- subspaces and series ----------

def _bracket_span(a: LieAlgebra, left: list, right: list) -> list:
    vecs = [a.bracket(u, v) for u in left for v in right]
    return linalg.span_basis(vecs, a.dim)


def _full_basis(a):
    return [_unit(a.dim, j) for j in range(a.dim)]


def lower_central_subspaces(a: LieAlgebra) -> list[list]:
    g = _full_basis(a)
    terms = [g]
    while True:
        nxt = _bracket_span(a, g, terms[-1])
        if len(nxt) == len(terms[-1]):
            return terms
        terms.append(nxt)


def derived_subspaces(a: LieAlgebra) -> list[list]:
    terms = [_full_basis(a)]
    while True:
        nxt = _bracket_span(a, terms[-1], terms[-1])
        if len(nxt) == len(terms[-1]):
            return terms
        terms.append(nxt)


def lower_central_series(a: LieAlgebra) -> list[int]:
    """Dimensions of g, [g,g], [g,[g,g]], ... stopping once a term repeats."""
    return [len(t) for t in lower_central_subspaces(a)]


def derived_series(a: LieAlgebra) -> list[int]:
    return [len(t) for t in derived_subspaces(a)]


def is_nilpotent(a: LieAlgebra) -> bool:
    return lower_central_series(a)[-1] == 0


def is_solvable(a: LieAlgebra) -> bool:
    return derived_series(a)[-1] == 0


# ---------- complete solvability ----------

_SEARCH_NODE_LIMIT = 5000


class _Quotient:
    """Coordinates on g/I, with I given by a list of spanning vectors."""

    def __init__(self, a: LieAlgebra, ideal: list):
        self.a = a
        self.span = linalg.IncrementalSpan(a.dim)
        for v in ideal:
            self.span.add(v)
        pivots = set(self.span.pivots)
        self.free = [j for j in range(a.dim) if j not in pivots]

    def project(self, v) -> tuple:
        res = self.span.residual(v)
        return tuple(res.get(j, Fraction(0)) for j in self.free)

    def lift(self, q) -> tuple:
        v = [Fraction(0)] * self.a.dim
        for j, x in zip(self.free, q):
            v[j] = x
        return tuple(v)

    def operator(self, i: int) -> RatMatrix:
        """ad e_i acting on g/I."""
        n = self.a.dim
        cols = []
        for j in self.free:
            cols.append(self.project(self.a.bracket(_unit(n, i - 1), _unit(n, j))))
        return RatMatrix.from_columns(cols, len(self.free))


def _joint_eigenvectors(ops: list[RatMatrix], dim: int) -> list[tuple]:
    """Rational common eigenvectors of ``ops``, one basis per joint eigenspace.

    Within each eigenspace the basis prefers the highest coordinates, which
    makes abelian and Heisenberg flags come out as span{e_n} ⊂ span{e_{n-1}, e_n} ⊂ ...
    """
    found: list[tuple] = []
    eig = [linalg.rational_roots(linalg.charpoly(op)) for op in ops]

    def walk(idx, basis):
        if not basis:
            return
        if idx == len(ops):
            # canonical basis of span(basis), preferring high coordinates
            rev = [tuple(reversed(v)) for v in basis]
            for v in linalg.span_basis(rev, dim):
                found.append(tuple(reversed(v)))
            return
        op = ops[idx]
        for lam in eig[idx]:
            # vectors w = B x with (op - lam) B x = 0
            cols = []
            for b in basis:
                ob = op.matvec(b)
                cols.append(tuple(x - lam * y for x, y in zip(ob, b)))
            kern = linalg.kernel_basis(RatMatrix.from_columns(cols, dim))
            new = []
            for x in kern:
                w = [Fraction(0)] * dim
                for coef, b in zip(x, basis):
                    if coef:
                        for t in range(dim):
                            w[t] += coef * b[t]
                new.append(tuple(w))
            walk(idx + 1, new)

    walk(0, [_unit(dim, j) for j in range(dim)])
    out, keys = [], set()
    for v in found:
        if v not in keys:
            keys.add(v)
            out.append(v)
    return out


def find_ideal_flag(a: LieAlgebra):
    """Search a full flag of ideals 0 ⊂ I_1 ⊂ ... ⊂ I_n with dim I_k = k.

    Each step adjoins a rational common eigenvector of ad(g) on g/I_k.  The
    search backtracks over candidates and gives up (returns None) after a
    fixed node budget or when no rational candidate exists.
    """
    n = a.dim
    budget = [_SEARCH_NODE_LIMIT]

    def extend(chain: list) -> list | None:
        if len(chain) == n:
            return chain
        budget[0] -= 1
        if budget[0] < 0:
            return None
        q = _Quotient(a, chain)
        ops = [q.operator(i) for i in range(1, n + 1)]
        for cand in _joint_eigenvectors(ops, len(q.free)):
            res = extend(chain + [q.lift(cand)])
            if res is not None:
                return res
        return None

    if not is_solvable(a):
        return None
    chain = extend([])
    if chain is None:
        return None
    return [linalg.span_basis(chain[:k], n) for k in range(1, n + 1)]


def is_ideal(a: LieAlgebra, basis: list) -> bool:
    span = linalg.IncrementalSpan(a.dim)
    for v in basis:
        span.add(v)
    return all(span.contains(a.bracket(_unit(a.dim, i), v)) for i in range(a.dim) for v in basis)


@dataclass(frozen=True)
class ClassificationReport:
    is_abelian: bool
    is_nilpotent: bool
    lower_central_series: tuple
    is_solvable: bool
    derived_series: tuple
    real_spectrum_on_basis: bool
    # tuple of subspace bases I_1 ⊂ ... ⊂ I_n, or None for "not-found"
    completely_solvable_certificate: tuple | None = field(default=None)

    @property
    def certified_completely_solvable(self) -> bool:
        return self.completely_solvable_certificate is not None


def classify(a: LieAlgebra) -> ClassificationReport:
    lcs = lower_central_series(a)
    ds = derived_series(a)
    real = all(linalg.sturm_real_rooted(linalg.charpoly(a.ad(i))) for i in range(1, a.dim + 1))
    flag = None
    # a full flag of ideals with rational eigenvalues needs real spectrum
    if ds[-1] == 0 and real:
        flag = find_ideal_flag(a)
    return ClassificationReport(
        is_abelian=a.is_abelian(),
        is_nilpotent=lcs[-1] == 0,
        lower_central_series=tuple(lcs),
        is_solvable=ds[-1] == 0,
        derived_series=tuple(ds),
        real_spectrum_on_basis=real,
        completely_solvable_certificate=None if flag is None else tuple(tuple(b) for b in flag),
    )


# ---------- constructions and catalog ----------

def direct_sum(a: LieAlgebra, b: LieAlgebra, name: str | None = None) -> LieAlgebra:
    shift = a.dim
    brackets = dict(a.brackets)
    for (i, j, k), c in b.brackets.items():
        brackets[(i + shift, j + shift, k + shift)] = c
    return LieAlgebra(a.dim + b.dim, brackets, name=name or f"{a.name}+{b.name}")


def change_basis(a: LieAlgebra, p: RatMatrix, name: str | None = None) -> LieAlgebra:
    """Structure constants in the basis f_j = sum_i p[i, j] e_i."""
    n = a.dim
    if p.shape != (n, n):
        raise InputError("basis change must be an n x n matrix")
    pinv = linalg.inverse(p)
    cols = [p.column(j) for j in range(n)]
    brackets = {}
    for i in range(n):
        for j in range(i + 1, n):
            coords = pinv.matvec(a.bracket(cols[i], cols[j]))
            for k, c in enumerate(coords):
                if c:
                    brackets[(i + 1, j + 1, k + 1)] = c
    return LieAlgebra(n, brackets, name=name or a.name)


def torus(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, name=f"torus({n})")


def heisenberg(n: int) -> LieAlgebra:
    if n < 3 or n % 2 == 0:
        raise InputError("Heisenberg algebras have odd dimension >= 3")
    k = (n - 1) // 2
    return LieAlgebra(n, {(2 * i - 1, 2 * i, n): 1 for i in range(1, k + 1)}, name=f"heisenberg({n})")


def filiform(n: int) -> LieAlgebra:
    """Standard graded filiform algebra: [e_1, e_i] = e_{i+1} for 2 <= i < n."""
    if n < 3:
        raise InputError("filiform algebras need dimension >= 3")
    return LieAlgebra(n, {(1, i, i + 1): 1 for i in range(2, n)}, name=f"filiform({n})")


def kodaira_thurston() -> LieAlgebra:
    return direct_sum(heisenberg(3), torus(1), name="kodaira_thurston")


def solv3() -> LieAlgebra:
    return LieAlgebra(3, {(1, 3, 1): 1, (2, 3, 2): -1}, name="solv3")


def _fixed_entries():
    return [
        heisenberg(3),
        heisenberg(5),
        kodaira_thurston(),
        filiform(4),
        direct_sum(heisenberg(3), heisenberg(3), name="h3_sum_h3"),
        direct_sum(heisenberg(5), torus(1), name="h5_sum_r"),
        direct_sum(heisenberg(3), torus(3), name="h3_sum_r3"),
        solv3(),
        direct_sum(solv3(), torus(1), name="solv3_sum_r"),
    ]


CATALOG_TORUS_DIMS = range(1, 7)


def catalog() -> dict[str, LieAlgebra]:
    """Named algebras shipped with the package, in a fixed order."""
    out = {f"torus({n})": torus(n) for n in CATALOG_TORUS_DIMS}
    for a in _fixed_entries():
        out[a.name] = a
    return out


_FAMILY = re.compile(r"^(torus|heisenberg|filiform)\((\d+)\)$")


def lookup(name: str) -> LieAlgebra:
    """Catalog entry by name; the parametric families accept any valid size."""
    name = name.strip()
    m = _FAMILY.match(name)
    if m:
        family, size = m.group(1), int(m.group(2))
        return {"torus": torus, "heisenberg": heisenberg, "filiform": filiform}[family](size)
    entries = catalog()
    if name not in entries:
        raise KeyError(f"unknown catalog algebra {name!r}")
    return entries[name]
