"""Random algebras and independent oracles shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from nilcoh import lie
from nilcoh.exterior import ExteriorElement, monomial_basis
from nilcoh.linalg import RatMatrix, rank


def small_fraction(rng: random.Random, span: int = 3) -> Fraction:
    while True:
        c = Fraction(rng.randint(-span, span), rng.randint(1, 2))
        if c:
            return c


def random_two_step(rng: random.Random, n: int | None = None) -> lie.LieAlgebra:
    """Brackets of e_1..e_p land in span(e_{p+1}..e_n), which is central: Jacobi is automatic."""
    n = n or rng.randint(3, 6)
    p = rng.randint(2, n - 1)
    brackets = {}
    for i in range(1, p + 1):
        for j in range(i + 1, p + 1):
            for k in range(p + 1, n + 1):
                if rng.random() < 0.4:
                    brackets[(i, j, k)] = small_fraction(rng)
    return lie.LieAlgebra(n, brackets, name=f"two_step_{n}")


def random_invertible(rng: random.Random, n: int) -> RatMatrix:
    while True:
        m = RatMatrix.from_rows([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        if rank(m) == n:
            return m


SMALL_CATALOG = ["heisenberg(3)", "kodaira_thurston", "filiform(4)", "solv3", "solv3_sum_r",
                 "heisenberg(5)", "filiform(5)"]


def random_valid_algebra(rng: random.Random) -> lie.LieAlgebra:
    kind = rng.choice(["two_step", "rebased", "sum"])
    if kind == "two_step":
        return random_two_step(rng)
    if kind == "rebased":
        a = lie.lookup(rng.choice(SMALL_CATALOG))
        return lie.change_basis(a, random_invertible(rng, a.dim), name=f"rebased_{a.name}")
    a = random_two_step(rng, rng.randint(3, 4))
    b = lie.lookup(rng.choice(["torus(1)", "torus(2)", "heisenberg(3)", "solv3"]))
    return lie.direct_sum(a, b)


def ad_matrices(a: lie.LieAlgebra) -> list[list[list[Fraction]]]:
    """ad e_i as dense matrices, read straight from the bracket table (antisymmetry folded here)."""
    n = a.dim
    mats = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j, k), c in a.brackets.items():
        mats[i - 1][k - 1][j - 1] += c   # [e_i, e_j] = c e_k
        mats[j - 1][k - 1][i - 1] -= c   # [e_j, e_i] = -c e_k
    return mats


def jacobi_holds_oracle(a: lie.LieAlgebra) -> bool:
    """Jacobi ⇔ ad is a homomorphism: ad[e_i,e_j] = ad e_i ad e_j - ad e_j ad e_i."""
    n = a.dim
    ad = ad_matrices(a)

    def mul(x, y):
        return [[sum(x[r][t] * y[t][c] for t in range(n)) for c in range(n)] for r in range(n)]

    for i in range(n):
        for j in range(i + 1, n):
            comm = [[p - q for p, q in zip(r1, r2)] for r1, r2 in zip(mul(ad[i], ad[j]), mul(ad[j], ad[i]))]
            lhs = [[Fraction(0)] * n for _ in range(n)]
            for k in range(n):
                c = a.constant(i + 1, j + 1, k + 1)
                if c:
                    for r in range(n):
                        for s in range(n):
                            lhs[r][s] += c * ad[k][r][s]
            if lhs != comm:
                return False
    return True


def random_homogeneous(rng: random.Random, n: int, k: int, max_terms: int = 4) -> ExteriorElement:
    basis = monomial_basis(n, k)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(basis)] = small_fraction(rng)
    return ExteriorElement(n, terms)
