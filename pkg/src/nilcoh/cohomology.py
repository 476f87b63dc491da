"""H*(Λ, d) = Ker d / Im d over Q, with representatives and cup product.

Everything is computed once when the ring is built; afterwards a
:class:`CohomologyRing` is read-only, so ``reduce`` and ``cup`` can be called
from several threads without coordination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .complex import CEComplex, apply_d, build_complex
from .errors import InputError
from .exterior import ExteriorElement, format_coefficient, format_element, wedge
from .lie import LieAlgebra
from .linalg import RatMatrix


@dataclass(frozen=True)
class CohClass:
    """A class in H^degree, as coordinates in the ring's representative basis.

    Degrees above the top dimension are allowed as "virtual" zero classes
    (empty coordinates); cup products overflowing the top land there.
    """

    degree: int
    coords: tuple

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero

    def __add__(self, other: CohClass) -> CohClass:
        if self.degree != other.degree:
            raise InputError("cannot add classes of different degrees")
        return CohClass(self.degree, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return CohClass(self.degree, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> CohClass:
        s = linalg.as_fraction(s)
        return CohClass(self.degree, tuple(s * a for a in self.coords))


class _Degree:
    """Per-degree data: cocycles, coboundaries, representatives and a solver."""

    def __init__(self, c: CEComplex, k: int):
        n = c.n
        self.k = k
        self.cocycles = linalg.kernel_basis(c.matrix(k))
        self.coboundaries = linalg.image_basis(c.matrix(k - 1)) if k > 0 else []
        span = linalg.IncrementalSpan(c.dim(k))
        for b in self.coboundaries:
            span.add(b)
        reps = []
        for z in self.cocycles:
            if span.add(z):
                reps.append(z)
        self.representatives = [ExteriorElement.from_vector(n, k, z) for z in reps]
        self.rep_vectors = reps
        self.betti = len(reps)
        if len(self.coboundaries) + self.betti != len(self.cocycles):
            raise AssertionError(f"cocycle space in degree {k} is not split by coboundaries + reps")
        # solve [B | R] x = z through an invertible square block on chosen rows
        cols = list(self.coboundaries) + reps
        self._nb = len(self.coboundaries)
        if cols:
            basis = RatMatrix.from_columns(cols, c.dim(k))
            _, rows, _ = linalg.rref(basis.transpose())
            block = RatMatrix.from_rows([[col[r] for col in cols] for r in rows])
            self._rows = rows
            self._inv = linalg.inverse(block)
        else:
            self._rows = []
            self._inv = RatMatrix(0, 0)

    def coordinates(self, vec) -> tuple:
        x = self._inv.matvec([vec[r] for r in self._rows])
        return tuple(x[self._nb:])


class CohomologyRing:
    def __init__(self, complex_: CEComplex):
        self.complex = complex_
        self.algebra = complex_.algebra
        self.n = complex_.n
        self._deg = [_Degree(complex_, k) for k in range(self.n + 1)]

    @classmethod
    def of(cls, a: LieAlgebra) -> CohomologyRing:
        return cls(build_complex(a))

    # -- per-degree data --
    def _check_degree(self, k):
        if not 0 <= k <= self.n:
            raise InputError(f"degree {k} outside 0..{self.n}")

    def betti(self, k: int) -> int:
        self._check_degree(k)
        return self._deg[k].betti

    @property
    def betti_numbers(self) -> tuple[int, ...]:
        return tuple(d.betti for d in self._deg)

    def representatives(self, k: int) -> tuple[ExteriorElement, ...]:
        self._check_degree(k)
        return tuple(self._deg[k].representatives)

    def coboundary_basis(self, k: int) -> tuple:
        self._check_degree(k)
        return tuple(self._deg[k].coboundaries)

    def cocycle_basis(self, k: int) -> tuple:
        self._check_degree(k)
        return tuple(self._deg[k].cocycles)

    # -- classes --
    def zero(self, k: int) -> CohClass:
        if k < 0:
            raise InputError("negative degree")
        return CohClass(k, (Fraction(0),) * (self._deg[k].betti if k <= self.n else 0))

    def unit(self) -> CohClass:
        return self.basis_class(0, 0)

    def basis_class(self, k: int, i: int) -> CohClass:
        b = self.betti(k)
        if not 0 <= i < b:
            raise InputError(f"H^{k} has dimension {b}, no basis class {i}")
        return CohClass(k, tuple(Fraction(int(j == i)) for j in range(b)))

    def basis_classes(self, k: int) -> list[CohClass]:
        return [self.basis_class(k, i) for i in range(self.betti(k))]

    def positive_basis(self) -> list[CohClass]:
        return [c for k in range(1, self.n + 1) for c in self.basis_classes(k)]

    def representative(self, u: CohClass) -> ExteriorElement:
        if u.degree > self.n:
            return ExteriorElement.zero(self.n)
        out = ExteriorElement.zero(self.n)
        for coef, rep in zip(u.coords, self._deg[u.degree].representatives):
            if coef:
                out = out + coef * rep
        return out

    def is_closed(self, z: ExteriorElement) -> bool:
        return not apply_d(self.complex, z)

    def reduce(self, z: ExteriorElement, degree: int | None = None) -> CohClass:
        """Coordinates of the class of the cocycle ``z``.

        The zero element needs an explicit ``degree``.  A non-closed ``z``
        raises :class:`InputError` quoting dz.
        """
        if z.n != self.n:
            raise InputError(f"element has {z.n} generators, ring has {self.n}")
        k = z.degree if z else degree
        if k is None:
            raise InputError("degree of the zero element is ambiguous; pass degree=")
        if degree is not None and z and degree != k:
            raise InputError(f"element has degree {k}, not {degree}")
        if k > self.n:
            return CohClass(k, ())
        self._check_degree(k)
        dz = apply_d(self.complex, z)
        if dz:
            raise InputError(f"{format_element(z)} is not closed: d = {format_element(dz)}")
        return CohClass(k, self._deg[k].coordinates(z.to_vector(k)))

    def is_exact(self, z: ExteriorElement, degree: int | None = None) -> bool:
        return self.reduce(z, degree).is_zero

    def cup(self, u: CohClass, v: CohClass) -> CohClass:
        k = u.degree + v.degree
        if k > self.n:
            return CohClass(k, ())
        if u.is_zero or v.is_zero:
            return self.zero(k)
        w = wedge(self.representative(u), self.representative(v))
        return self.reduce(w, degree=k)

    def product(self, classes) -> CohClass:
        acc = self.unit()
        for c in classes:
            acc = self.cup(acc, c)
        return acc

    def power(self, u: CohClass, m: int) -> CohClass:
        return self.product([u] * m)

    # -- global checks --
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti_numbers))

    def poincare_check(self) -> bool:
        b = self.betti_numbers
        return all(b[k] == b[self.n - k] for k in range(self.n + 1))

    def format_class(self, u: CohClass) -> str:
        """e.g. ``2·[e1^e2^e3^e4]`` or ``[e1^e3] - [e2^e4]``; ``0`` for the zero class."""
        if u.is_zero:
            return "0"
        parts = []
        for coef, rep in zip(u.coords, self._deg[u.degree].representatives):
            if not coef:
                continue
            body = f"[{format_element(rep)}]"
            a = abs(coef)
            if a != 1:
                body = f"{format_coefficient(a)}·{body}"
            parts.append(("-" if coef < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def cohomology_ring(c: CEComplex) -> CohomologyRing:
    return CohomologyRing(c)


def cohomology(c: CEComplex, k: int) -> tuple[int, tuple[ExteriorElement, ...]]:
    """(betti_k, representative cocycles) for one degree."""
    if not 0 <= k <= c.n:
        raise InputError(f"degree {k} outside 0..{c.n}")
    d = _Degree(c, k)
    return d.betti, tuple(d.representatives)


def betti_by_ranks(c: CEComplex) -> tuple[int, ...]:
    """Betti numbers from ranks alone: dim Λ^k - rank d_k - rank d_{k-1}."""
    ranks = [linalg.rank(m) for m in c.matrices]
    return tuple(c.dim(k) - ranks[k] - (ranks[k - 1] if k else 0) for k in range(c.n + 1))


def reduce(ring: CohomologyRing, z: ExteriorElement, degree: int | None = None) -> CohClass:
    return ring.reduce(z, degree)


def cup(ring: CohomologyRing, u: CohClass, v: CohClass) -> CohClass:
    return ring.cup(u, v)


def euler_characteristic(ring: CohomologyRing) -> int:
    return ring.euler_characteristic()


def poincare_check(ring: CohomologyRing) -> bool:
    return ring.poincare_check()
