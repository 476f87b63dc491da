"""Category, strict category weight and closed-orbit lower bounds.

Nothing here computes LS category or strict category weight directly.  The
module instantiates proved inequalities with concrete numbers and records
each instantiation as a :class:`DerivationStep`, whose value is a linear
combination of earlier steps' values; :func:`check_steps` re-does that
arithmetic.

Category is normalized so that cat(point) = 0.  Some of the dynamics
literature uses cat(point) = 1; the orbit counts below already account for
the shift.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .cohomology import CohomologyRing
from .errors import InputError, UnsupportedQueryError
from .exterior import format_element
from .invariants import SymplecticnessResult, cup_length, is_cohomologically_symplectic
from .lie import ClassificationReport, LieAlgebra, classify, require_valid

CAT_CONVENTION = "LS category normalized with cat(point) = 0"

# named facts used as citations in derivation steps
CITE_SWGT_OMEGA = "strict category weight of an aspherical class: [ω]|π₂ = 0 ⇒ swgt[ω] ≥ 2"
CITE_SWGT_POSITIVE = "strict category weight of a positive-degree class: deg u > 0 ⇒ swgt u ≥ 1"
CITE_SWGT_PRODUCT = "superadditivity: swgt(uv) ≥ swgt u + swgt v"
CITE_SWGT_PULLBACK = "naturality: swgt f*u ≥ swgt u"
CITE_CAT_SWGT = "category vs weight: f*u ≠ 0 ⇒ cat f ≥ swgt u (with f = identity)"
CITE_LERAY_HIRSCH = "Leray-Hirsch for the ℂPⁿ-fibration: (p*[ω])ᵐ vⁿ ≠ 0 in H*(E; ℝ)"
CITE_EILENBERG_GANEA = "Eilenberg-Ganea: cat V = dim V for a closed aspherical manifold V"
CITE_MALCEV = "Malcev: rational structure constants ⇒ the nilpotent group admits a lattice Γ"
CITE_COVERED_BY_RN = "N/Γ is covered by ℝⁿ, hence aspherical and π₂(N/Γ) = 0"
CITE_HOMOGENEOUS = "homogeneous (left-invariant) forms compute H*(N/Γ), so cohomologically symplectic ⇒ symplectic"
CITE_ASPHERICITY_CRITERION = (
    "[ω] ∈ Im(f*: H²(K(π₁,1); ℝ) → H²(M; ℝ)) ⇔ symplectically aspherical; holds when π₂(M) = 0")
CITE_COMPLETELY_SOLVABLE = (
    "completely solvable G (ad with real spectrum) with co-compact Γ: cohomologically symplectic ⇒ "
    "symplectically aspherical")
CITE_CUP_LENGTH_CAT = "cat X ≥ cl X"
CITE_KERMAN_COUNT = "Kerman: #closed trajectories on a low energy level ≥ 1 + cat(Σ/S¹)"
CITE_KERMAN_FIBRATION = "Σ/S¹ → M is a ℂP^{m-1}-bundle, so cl(Σ/S¹) ≥ cl M + m - 1"
CITE_SIGMA_FIBRATION = "Σ/S¹ → M is a ℂP^{m-1}-fibration over an aspherical base: cat ≥ 2m + (m - 1)"


@dataclass(frozen=True)
class DerivationStep:
    """One instantiated inequality or equality.

    ``formula`` is a tuple of ``(coefficient, source)`` pairs; ``source`` is
    the index of an earlier step or None for the constant 1.  ``value`` must
    equal the sum of coefficient * source value.  Purely logical steps carry
    an empty formula and a boolean value.
    """

    statement: str
    citation: str
    value: int | bool
    formula: tuple = ()
    uses: tuple = ()


def check_steps(steps) -> bool:
    """Recompute every numeric step from its formula; True iff all agree."""
    for idx, s in enumerate(steps):
        if any(u >= idx for u in s.uses):
            return False
        if not s.formula:
            continue
        total = 0
        for coef, src in s.formula:
            if src is None:
                total += coef
            else:
                if src >= idx:
                    return False
                total += coef * steps[src].value
        if total != s.value:
            return False
    return True


def _step(steps: list, statement, citation, value, formula=(), uses=None) -> int:
    if uses is None:
        uses = tuple(sorted({src for _, src in formula if src is not None}))
    steps.append(DerivationStep(statement, citation, value, tuple(formula), tuple(uses)))
    return len(steps) - 1


def _offset(steps, base: int):
    out = []
    for s in steps:
        out.append(DerivationStep(
            s.statement, s.citation, s.value,
            tuple((c, None if src is None else src + base) for c, src in s.formula),
            tuple(u + base for u in s.uses)))
    return out


def swgt_chain(m: int, fiber_n: int) -> tuple[int, list[DerivationStep]]:
    """Lower bound cat E ≥ 2m + n for a ℂPⁿ-fibration E over an aspherical M^{2m}.

    The chain is cat E ≥ swgt((p*[ω])ᵐ vⁿ) ≥ swgt(p*[ω]ᵐ) + swgt(vⁿ) ≥ 2m + n.
    """
    if m < 1 or fiber_n < 0:
        raise InputError(f"need m ≥ 1 and n ≥ 0, got m={m}, n={fiber_n}")
    steps: list[DerivationStep] = []
    w = _step(steps, "swgt[ω] ≥ 2", CITE_SWGT_OMEGA, 2, ((2, None),))
    wm = _step(steps, f"swgt([ω]^{m}) ≥ {m}·swgt[ω] = {2 * m}", CITE_SWGT_PRODUCT, 2 * m, ((m, w),))
    pw = _step(steps, f"swgt(p*[ω]^{m}) ≥ swgt([ω]^{m}) = {2 * m}", CITE_SWGT_PULLBACK, 2 * m, ((1, wm),))
    if fiber_n:
        v = _step(steps, "swgt v ≥ 1 (v ∈ H²(E) restricting to a generator of H²(ℂPⁿ))",
                  CITE_SWGT_POSITIVE, 1, ((1, None),))
        vn = _step(steps, f"swgt(v^{fiber_n}) ≥ {fiber_n}·swgt v = {fiber_n}", CITE_SWGT_PRODUCT,
                   fiber_n, ((fiber_n, v),))
        prod = _step(steps,
                     f"swgt((p*[ω])^{m} v^{fiber_n}) ≥ swgt(p*[ω]^{m}) + swgt(v^{fiber_n}) = {2 * m + fiber_n}",
                     CITE_SWGT_PRODUCT, 2 * m + fiber_n, ((1, pw), (1, vn)))
        product_name = f"(p*[ω])^{m} v^{fiber_n}"
    else:
        prod = pw
        product_name = f"p*[ω]^{m}"
    nz = _step(steps, f"{product_name} ≠ 0", CITE_LERAY_HIRSCH, True)
    _step(steps, f"cat E ≥ swgt({product_name}) ≥ {2 * m + fiber_n}", CITE_CAT_SWGT,
          2 * m + fiber_n, ((1, prod),), uses=(prod, nz))
    return 2 * m + fiber_n, steps


def asphericity_report(a: LieAlgebra, symp: SymplecticnessResult,
                       cls: ClassificationReport | None = None) -> tuple[bool | None, list[DerivationStep]]:
    """True with a justification chain, or None (indeterminate).  Never False."""
    cls = cls or classify(a)
    steps: list[DerivationStep] = []
    if not symp.is_cohomologically_symplectic:
        _step(steps, f"{a.name}: no class ω ∈ H² with ωᵐ ≠ 0, so there is no symplectic form to test",
              "cohomological symplecticness is necessary for a symplectic structure", None)
        return None, steps
    if cls.is_nilpotent:
        s0 = _step(steps, f"{a.name} is nilpotent with rational structure constants ⇒ N/Γ is a closed nilmanifold",
                   CITE_MALCEV, True)
        s1 = _step(steps, "N/Γ aspherical ⇒ π₂ = 0 ⇒ [ω]|π₂ = 0", CITE_COVERED_BY_RN, True, uses=(s0,))
        _step(steps, "cohomologically symplectic nilmanifold ⇒ symplectic and symplectically aspherical",
              f"{CITE_HOMOGENEOUS}; {CITE_ASPHERICITY_CRITERION}", True, uses=(s0, s1))
        return True, steps
    if cls.certified_completely_solvable:
        s0 = _step(steps, f"{a.name} has a full flag of ideals ⇒ completely solvable",
                   "a full flag of ideals makes every ad V triangular with real eigenvalues", True)
        s1 = _step(steps, "G/Γ is covered by ℝⁿ (Γ a co-compact lattice, assumed; existence not certified)",
                   CITE_COVERED_BY_RN.replace("N/Γ", "G/Γ"), True, uses=(s0,))
        _step(steps, "cohomologically symplectic ⇒ symplectically aspherical",
              f"{CITE_COMPLETELY_SOLVABLE}; {CITE_ASPHERICITY_CRITERION}", True, uses=(s0, s1))
        return True, steps
    _step(steps, f"{a.name} is neither nilpotent nor certified completely solvable",
          "hypothesis of the completely solvable criterion unmet; asphericity undecided", None)
    return None, steps


def cat_of_nilmanifold(a: LieAlgebra, cls: ClassificationReport | None = None) -> int:
    """cat(G/Γ) = dim for the closed aspherical manifold of a nilpotent (or certified) algebra."""
    cls = cls or classify(a)
    if not (cls.is_nilpotent or cls.certified_completely_solvable):
        raise UnsupportedQueryError(
            f"{a.name} is not nilpotent and has no completely-solvable certificate; "
            "its quotient is not known to be a closed aspherical manifold")
    return a.dim


@dataclass(frozen=True)
class OrbitBounds:
    m: int
    cl: int
    kerman: int
    aspherical: int | None
    stronger: str | None  # "aspherical", "kerman", "tie" or None when only one bound exists
    steps: tuple


def orbit_bounds(m: int, cl: int, aspherical: bool) -> OrbitBounds:
    if m < 1:
        raise InputError(f"half-dimension must be ≥ 1, got {m}")
    if not 1 <= cl <= 2 * m:
        raise InputError(f"cup-length {cl} outside 1..{2 * m}")
    steps: list[DerivationStep] = []
    c = _step(steps, f"cl M = {cl}", "exact cup-length of the cohomology ring", cl, ((cl, None),))
    fib = _step(steps, f"cl(Σ/S¹) ≥ cl M + m - 1 = {cl + m - 1}", CITE_KERMAN_FIBRATION,
                cl + m - 1, ((1, c), (m - 1, None)))
    cat = _step(steps, f"cat(Σ/S¹) ≥ cl(Σ/S¹) ≥ {cl + m - 1}", CITE_CUP_LENGTH_CAT,
                cl + m - 1, ((1, fib),))
    _step(steps, f"closed trajectories ≥ 1 + cat(Σ/S¹) ≥ m + cl M = {m + cl}", CITE_KERMAN_COUNT,
          m + cl, ((1, cat), (1, None)))
    kerman = m + cl
    asph = None
    stronger = None
    if aspherical:
        bound, chain = swgt_chain(m, m - 1)
        base = len(steps)
        steps.extend(_offset(chain, base))
        last = len(steps) - 1
        s = _step(steps, f"cat(Σ/S¹) ≥ 2m + (m - 1) = {bound} (ℂP^{m - 1}-fibration over aspherical M)",
                  CITE_SIGMA_FIBRATION, bound, ((1, last),))
        _step(steps, f"closed trajectories ≥ 1 + cat(Σ/S¹) ≥ 3m = {bound + 1}", CITE_KERMAN_COUNT,
              bound + 1, ((1, s), (1, None)))
        asph = bound + 1
        stronger = "aspherical" if asph > kerman else ("tie" if asph == kerman else "kerman")
    return OrbitBounds(m, cl, kerman, asph, stronger, tuple(steps))


@dataclass(frozen=True)
class BoundsReport:
    name: str
    manifold_dim: int
    betti: tuple
    nilpotent: bool
    solvable: bool
    completely_solvable_certified: bool
    cl: int
    cat_manifold: int | None
    symplectic: bool | None
    symplectic_witness: str | None
    aspherical: bool | None
    swgt_omega: int | None
    fiber_n: int | None
    cat_total_space_bound: int | None
    orbit_bound_kerman: int | None
    orbit_bound_aspherical: int | None
    stronger: str | None
    steps: tuple = field(default=())
    convention: str = CAT_CONVENTION

    def to_dict(self) -> dict:
        d = asdict(self)
        d["betti"] = list(self.betti)
        d["steps"] = [
            {"statement": s.statement, "citation": s.citation, "value": s.value,
             "formula": [[c, src] for c, src in s.formula], "uses": list(s.uses)}
            for s in self.steps]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    def to_text(self) -> str:
        lines = [
            f"algebra: {self.name} (dim {self.manifold_dim})",
            f"betti: {' '.join(map(str, self.betti))}",
            f"nilpotent: {_yn(self.nilpotent)}; solvable: {_yn(self.solvable)}; "
            f"completely solvable (certified): {_yn(self.completely_solvable_certified)}",
            f"cup-length: {self.cl}",
            f"cat: {self.cat_manifold if self.cat_manifold is not None else 'unknown'} ({self.convention})",
        ]
        if self.symplectic is not None:
            lines.append(f"cohomologically symplectic: {_yn(self.symplectic)}"
                         + (f" (ω = {self.symplectic_witness})" if self.symplectic_witness else ""))
            lines.append(f"symplectically aspherical: "
                         f"{'yes' if self.aspherical else 'indeterminate'}")
        if self.orbit_bound_kerman is not None:
            if self.orbit_bound_aspherical is not None:
                tag = {"aspherical": " (stronger)", "tie": " (tie)", "kerman": ""}[self.stronger]
                lines.append(f"orbit bounds: Kerman m+cl = {self.orbit_bound_kerman}; "
                             f"aspherical 3m = {self.orbit_bound_aspherical}{tag}")
            else:
                lines.append(f"orbit bounds: Kerman m+cl = {self.orbit_bound_kerman}")
        if self.cat_total_space_bound is not None:
            lines.append(f"cat(Σ/S¹) ≥ {self.cat_total_space_bound} (ℂP^{self.fiber_n} fiber)")
        lines.append("derivation:")
        for i, s in enumerate(self.steps):
            lines.append(f"  [{i}] {s.statement}    -- {s.citation}")
        return "\n".join(lines)


def _yn(b):
    return "yes" if b else "no"


def full_report(a: LieAlgebra, ring: CohomologyRing | None = None) -> BoundsReport:
    """classify → complex → ring → cup-length → symplecticness → asphericity → bounds."""
    require_valid(a)
    cls = classify(a)
    ring = ring or CohomologyRing.of(a)
    cl = cup_length(ring).cl
    steps: list[DerivationStep] = []
    cat = None
    if cls.is_nilpotent or cls.certified_completely_solvable:
        cat = cat_of_nilmanifold(a, cls)
        _step(steps, f"cat = dim = {cat}", CITE_EILENBERG_GANEA, cat, ((cat, None),))
        _step(steps, f"cat = {cat} ≥ cl = {cl}", CITE_CUP_LENGTH_CAT, True)
    common = dict(name=a.name, manifold_dim=a.dim, betti=ring.betti_numbers, nilpotent=cls.is_nilpotent,
                  solvable=cls.is_solvable, completely_solvable_certified=cls.certified_completely_solvable,
                  cl=cl, cat_manifold=cat)
    if a.dim % 2:
        return BoundsReport(**common, symplectic=None, symplectic_witness=None, aspherical=None,
                            swgt_omega=None, fiber_n=None, cat_total_space_bound=None,
                            orbit_bound_kerman=None, orbit_bound_aspherical=None, stronger=None,
                            steps=tuple(steps))
    m = a.dim // 2
    symp = is_cohomologically_symplectic(ring)
    asph, asteps = asphericity_report(a, symp, cls)
    steps.extend(_offset(asteps, len(steps)))
    witness = None
    if symp.witness_form is not None:
        witness = format_element(symp.witness_form)
    if symp.is_cohomologically_symplectic and cl >= 1:
        ob = orbit_bounds(m, cl, bool(asph))
        steps.extend(_offset(list(ob.steps), len(steps)))
        kerman, abound, stronger = ob.kerman, ob.aspherical, ob.stronger
    else:
        kerman = abound = stronger = None
    return BoundsReport(
        **common,
        symplectic=symp.is_cohomologically_symplectic,
        symplectic_witness=witness,
        aspherical=asph,
        swgt_omega=2 if asph else None,
        fiber_n=m - 1 if asph else None,
        cat_total_space_bound=3 * m - 1 if asph else None,
        orbit_bound_kerman=kerman,
        orbit_bound_aspherical=abound,
        stronger=stronger,
        steps=tuple(steps),
    )
