"""Ring-level invariants: cup-length and cohomological symplecticness.

Both existence questions range over infinitely many classes; both are
settled by multilinearity.  A k-fold cup product map H+ x ... x H+ -> H* is
zero iff it vanishes on every tuple of basis classes, and in characteristic
zero the symmetric m-linear map (w_1, ..., w_m) -> w_1...w_m on H^2 is zero
iff its diagonal w -> w^m is (polarization).
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from . import linalg
from .cohomology import CohClass, CohomologyRing
from .errors import InputError, UnsupportedQueryError
from .exterior import ExteriorElement, wedge

DEFAULT_ORACLE_CAP = 64
RANDOM_WITNESS_THRESHOLD = 12
RANDOM_WITNESS_ATTEMPTS = 10_000
RANDOM_WITNESS_SEED = 20260


@dataclass(frozen=True)
class CupLengthResult:
    cl: int
    witness: tuple[CohClass, ...]
    # spans_by_stage[k] = dim of the span of all k-fold products, k = 0..cl+1
    spans_by_stage: tuple[int, ...]


def cup_length(ring: CohomologyRing) -> CupLengthResult:
    """Exact cup-length via the span recursion V_{k+1} = span(V_k · H+).

    Each basis element kept for V_k is a literal product of k representative
    classes, so the witness is read off whichever survives longest.
    """
    gens = ring.positive_basis()
    # stage: degree -> list of (class, factor tuple)
    stage: dict[int, list[tuple[CohClass, tuple[CohClass, ...]]]] = {}
    for g in gens:
        stage.setdefault(g.degree, []).append((g, (g,)))
    spans = [1]
    cl, witness = 0, ()
    while stage:
        cl += 1
        spans.append(sum(len(v) for v in stage.values()))
        first_deg = min(stage)
        witness = stage[first_deg][0][1]
        nxt: dict[int, list] = {}
        spaces: dict[int, linalg.IncrementalSpan] = {}
        for deg in sorted(stage):
            for w, factors in stage[deg]:
                for b in gens:
                    k = deg + b.degree
                    if k > ring.n:
                        continue
                    p = ring.cup(w, b)
                    if p.is_zero:
                        continue
                    sp = spaces.setdefault(k, linalg.IncrementalSpan(ring.betti(k)))
                    if sp.add(p.coords):
                        nxt.setdefault(k, []).append((p, factors + (b,)))
        stage = nxt
    spans.append(0)
    return CupLengthResult(cl, tuple(witness), tuple(spans))


def oracle_cap() -> int:
    raw = os.environ.get("NILCOH_ORACLE_CAP")
    if raw is None:
        return DEFAULT_ORACLE_CAP
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"NILCOH_ORACLE_CAP must be an integer, got {raw!r}") from None


def cup_length_oracle(ring: CohomologyRing, max_k: int | None = None, cap: int | None = None) -> int:
    """Brute-force cup-length for small rings, independent of :func:`cup_length`.

    Walks every multiset of positive-degree representatives with total
    degree <= n, wedging forms directly and testing exactness against a
    fresh image basis of d.  A prefix whose product is exact is not extended,
    since exact ∧ closed is exact.
    """
    cap = oracle_cap() if cap is None else cap
    total = sum(ring.betti_numbers[1:])
    if total > cap:
        raise InputError(f"oracle refuses rings with {total} positive basis classes (cap {cap})")
    n = ring.n
    max_k = n if max_k is None else max_k
    c = ring.complex
    images = {k: linalg.image_basis(c.matrix(k - 1)) for k in range(1, n + 1)}

    def exact(form: ExteriorElement, k: int) -> bool:
        if not form:
            return True
        vec = form.to_vector(k)
        return linalg.solve_in_span(vec, images[k]) is not None

    reps = [(k, r) for k in range(1, n + 1) for r in ring.representatives(k)]
    best = 0

    def walk(start, form, deg, length):
        nonlocal best
        best = max(best, length)
        if length == max_k:
            return
        for idx in range(start, len(reps)):
            k, r = reps[idx]
            if deg + k > n:
                continue
            f = wedge(form, r)
            if exact(f, deg + k):
                continue
            walk(idx, f, deg + k, length + 1)

    walk(0, ExteriorElement.one(n), 0, 0)
    return best


@dataclass(frozen=True)
class SymplecticnessResult:
    is_cohomologically_symplectic: bool
    witness: CohClass | None = None
    witness_form: ExteriorElement | None = None
    top_power: CohClass | None = None


def _half_dim(ring: CohomologyRing) -> int:
    if ring.n % 2:
        raise UnsupportedQueryError(f"dimension {ring.n} is odd: not a candidate symplectic dimension")
    return ring.n // 2


def symplectic_decision(ring: CohomologyRing) -> bool:
    """Some m-fold product of H^2 basis classes is nonzero."""
    m = _half_dim(ring)
    basis = ring.basis_classes(2)
    for combo in combinations_with_replacement(basis, m):
        if not ring.product(combo).is_zero:
            return True
    return False


def _compositions(total: int, size: int, bound: int):
    if size == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, bound) + 1):
        for rest in _compositions(total - first, size - 1, bound):
            yield (first,) + rest


def graded_lex_grid(size: int, bound: int):
    for total in range(1, size * bound + 1):
        yield from _compositions(total, size, bound)


def _combine(ring: CohomologyRing, coeffs) -> CohClass:
    return CohClass(2, tuple(Fraction(a) for a in coeffs))


def is_cohomologically_symplectic(ring: CohomologyRing, seed: int = RANDOM_WITNESS_SEED) -> SymplecticnessResult:
    m = _half_dim(ring)
    if not symplectic_decision(ring):
        return SymplecticnessResult(False)
    b2 = ring.betti(2)

    def attempt(coeffs):
        w = _combine(ring, coeffs)
        top = ring.power(w, m)
        if not top.is_zero:
            return SymplecticnessResult(True, w, ring.representative(w), top)
        return None

    if b2 > RANDOM_WITNESS_THRESHOLD:
        rng = random.Random(seed)
        span = m * b2
        for _ in range(RANDOM_WITNESS_ATTEMPTS):
            res = attempt([rng.randint(-span, span) for _ in range(b2)])
            if res:
                return res
    for coeffs in graded_lex_grid(b2, m):
        res = attempt(coeffs)
        if res:
            return res
    # unreachable: a nonzero polynomial of degree <= m in each variable
    # cannot vanish on all of {0..m}^b2
    raise AssertionError("decision was positive but the grid held no witness")


@dataclass(frozen=True)
class ClassVerdict:
    closed: bool
    exact: bool | None
    top_power: CohClass | None
    symplectic: bool
    d_omega: ExteriorElement | None = None


def verify_class(ring: CohomologyRing, omega: ExteriorElement) -> ClassVerdict:
    """Closedness, exactness and the top power [ω]^m of a given 2-form."""
    if omega.n != ring.n:
        raise InputError(f"form has {omega.n} generators, ring has {ring.n}")
    if omega and omega.degree != 2:
        raise InputError(f"expected a 2-form, got degree {omega.degree}")
    m = _half_dim(ring)
    d_omega = ring.complex.apply(omega)
    if d_omega:
        return ClassVerdict(False, None, None, False, d_omega)
    w = ring.reduce(omega, degree=2)
    top = ring.power(w, m)
    return ClassVerdict(True, w.is_zero, top, not top.is_zero, d_omega)
