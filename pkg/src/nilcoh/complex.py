"""The Chevalley-Eilenberg complex (Λ(x_1, ..., x_n), d) of a Lie algebra.

Sign convention: ``d x_k = + sum_{i<j} c_ij^k x_i ∧ x_j``, so the
Heisenberg bracket [e_1, e_2] = e_3 gives d x_3 = x_1 ∧ x_2.  The textbook
differential is the negative of this one.  Negating d is a chain isomorphism
(flip the sign on odd degrees), so kernels, images, Betti numbers and the
cup product are the same either way.
"""

from __future__ import annotations

from .errors import ComplexError, InputError
from .exterior import ExteriorElement, monomial_basis, monomial_index, wedge
from .lie import LieAlgebra
from .linalg import RatMatrix


def differential_on_generator(a: LieAlgebra, k: int) -> ExteriorElement:
    if not 1 <= k <= a.dim:
        raise InputError(f"generator index {k} outside 1..{a.dim}")
    terms = {(i, j): c for (i, j, kk), c in a.brackets.items() if kk == k}
    return ExteriorElement(a.dim, terms)


def _d_monomial(dgen: list[ExteriorElement], n: int, mono: tuple[int, ...]) -> ExteriorElement:
    # graded Leibniz: d(x_{i1}...x_{ip}) = sum_r (-1)^r x_{i1}..(d x_{ir})..x_{ip}
    out = ExteriorElement.zero(n)
    for r, i in enumerate(mono):
        dx = dgen[i - 1]
        if not dx:
            continue
        left = ExteriorElement(n, {mono[:r]: 1})
        right = ExteriorElement(n, {mono[r + 1:]: 1})
        term = wedge(wedge(left, dx), right)
        out = out - term if r % 2 else out + term
    return out


class CEComplex:
    """Differential matrices d_k: Λ^k -> Λ^{k+1} for k = 0..n.

    Rows and columns are indexed by lexicographically ordered monomials.
    Built once by :func:`build_complex`, read-only afterwards.
    """

    def __init__(self, algebra: LieAlgebra, matrices: list[RatMatrix]):
        self.algebra = algebra
        self.n = algebra.dim
        self._d = tuple(matrices)

    def matrix(self, k: int) -> RatMatrix:
        if not 0 <= k <= self.n:
            raise InputError(f"degree {k} outside 0..{self.n}")
        return self._d[k]

    @property
    def matrices(self) -> tuple[RatMatrix, ...]:
        return self._d

    def dim(self, k: int) -> int:
        return len(monomial_basis(self.n, k))

    def apply(self, u: ExteriorElement) -> ExteriorElement:
        return apply_d(self, u)


def build_complex(a: LieAlgebra) -> CEComplex:
    """Assemble every d_k and check d_{k+1} d_k = 0.

    Raises :class:`ComplexError` if the square of d is nonzero, which happens
    exactly when the structure constants violate Jacobi.
    """
    n = a.dim
    dgen = [differential_on_generator(a, k) for k in range(1, n + 1)]
    mats = []
    for k in range(n + 1):
        src = monomial_basis(n, k)
        tgt_index = monomial_index(n, k + 1)
        entries = {}
        for col, mono in enumerate(src):
            for m, c in _d_monomial(dgen, n, mono).terms.items():
                entries[(tgt_index[m], col)] = c
        mats.append(RatMatrix(len(tgt_index), len(src), entries))
    for k in range(n):
        sq = mats[k + 1] @ mats[k]
        if not sq.is_zero():
            (r, c) = next(iter(sq.entries))
            raise ComplexError(
                f"d∘d != 0 on Λ^{k} of {a.name}: d(d({monomial_basis(n, k)[c]})) has a "
                f"nonzero {monomial_basis(n, k + 2)[r]} coefficient (Jacobi violated?)")
    return CEComplex(a, mats)


def apply_d(c: CEComplex, u: ExteriorElement) -> ExteriorElement:
    if u.n != c.n:
        raise InputError(f"element lives in Λ of {u.n} generators, complex has {c.n}")
    if not u:
        return ExteriorElement.zero(c.n)
    k = u.degree  # raises on non-homogeneous input
    v = c.matrix(k).matvec(u.to_vector(k))
    return ExteriorElement.from_vector(c.n, k + 1, v)


def d_squared_is_zero(c: CEComplex) -> bool:
    return all((c.matrix(k + 1) @ c.matrix(k)).is_zero() for k in range(c.n))

