import pytest

from nilcoh import bounds, lie
from nilcoh.bounds import (
    CAT_CONVENTION,
    DerivationStep,
    asphericity_report,
    cat_of_nilmanifold,
    check_steps,
    full_report,
    orbit_bounds,
    swgt_chain,
)
from nilcoh.cohomology import CohomologyRing
from nilcoh.errors import InputError, UnsupportedQueryError
from nilcoh.invariants import SymplecticnessResult, cup_length, is_cohomologically_symplectic


def symp(name):
    return is_cohomologically_symplectic(CohomologyRing.of(lie.lookup(name)))


def test_asphericity_examples():
    ok, steps = asphericity_report(lie.kodaira_thurston(), symp("kodaira_thurston"))
    assert ok is True and len(steps) == 3 and check_steps(steps)
    assert "nilmanifold" in steps[-1].statement
    ok, _ = asphericity_report(lie.torus(4), symp("torus(4)"))
    assert ok is True


def test_asphericity_indeterminate_without_certificate():
    # rotation algebra ⊕ R: solvable, complex spectrum, no flag of ideals
    rot = lie.LieAlgebra(3, {(1, 3, 2): -1, (2, 3, 1): 1}, name="rot")
    a = lie.direct_sum(rot, lie.torus(1), name="rot_sum_r")
    fake = SymplecticnessResult(True)
    ok, steps = asphericity_report(a, fake)
    assert ok is None and "completely solvable" in steps[-1].citation
    ok, _ = asphericity_report(lie.lookup("h5_sum_r"), symp("h5_sum_r"))
    assert ok is None


def test_asphericity_certified_solvable():
    ok, steps = asphericity_report(lie.lookup("solv3_sum_r"), symp("solv3_sum_r"))
    assert ok is True and "existence not certified" in steps[1].statement


def test_cat_examples():
    assert cat_of_nilmanifold(lie.kodaira_thurston()) == 4
    for n in range(1, 7):
        assert cat_of_nilmanifold(lie.torus(n)) == n
    assert cat_of_nilmanifold(lie.heisenberg(5)) == 5
    rot = lie.LieAlgebra(3, {(1, 3, 2): -1, (2, 3, 1): 1})
    with pytest.raises(UnsupportedQueryError):
        cat_of_nilmanifold(rot)


def test_swgt_chain_examples():
    v, steps = swgt_chain(2, 1)
    assert v == 5 and check_steps(steps) and steps[-1].value == 5
    assert steps[-1].statement.startswith("cat E ≥ swgt((p*[ω])^2 v^1)")
    cited = {s.citation for s in steps}
    assert {bounds.CITE_SWGT_OMEGA, bounds.CITE_SWGT_PRODUCT, bounds.CITE_SWGT_PULLBACK,
            bounds.CITE_CAT_SWGT} <= cited
    v, steps = swgt_chain(1, 0)
    assert v == 2 and check_steps(steps)
    with pytest.raises(InputError):
        swgt_chain(0, 1)
    with pytest.raises(InputError):
        swgt_chain(1, -1)


@pytest.mark.parametrize("m", range(1, 11))
def test_swgt_chain_arithmetic(m):
    for n in range(0, 11):
        v, steps = swgt_chain(m, n)
        assert v == 2 * m + n == steps[-1].value
        assert check_steps(steps)


def test_check_steps_catches_bad_arithmetic():
    _, steps = swgt_chain(2, 1)
    s = steps[1]
    tampered = list(steps)
    tampered[1] = DerivationStep(s.statement, s.citation, s.value + 1, s.formula, s.uses)
    assert not check_steps(tampered)
    forward = [DerivationStep("x", "c", 1, ((1, 1),), (1,)), DerivationStep("y", "c", 1, ((1, None),))]
    assert not check_steps(forward)


def test_orbit_bound_examples():
    kt = orbit_bounds(2, 3, True)
    assert (kt.kerman, kt.aspherical, kt.stronger) == (5, 6, "aspherical")
    t4 = orbit_bounds(2, 4, True)
    assert (t4.kerman, t4.aspherical, t4.stronger) == (6, 6, "tie")
    small = orbit_bounds(1, 1, True)
    assert (small.kerman, small.aspherical) == (2, 3)
    only = orbit_bounds(2, 3, False)
    assert only.kerman == 5 and only.aspherical is None and only.stronger is None
    for ob in (kt, t4, small, only):
        assert check_steps(ob.steps)


def test_orbit_bound_validation():
    with pytest.raises(InputError):
        orbit_bounds(2, 0, True)
    with pytest.raises(InputError):
        orbit_bounds(2, 5, True)


def test_orbit_bound_arithmetic_grid():
    for m in range(1, 8):
        for cl in range(1, 2 * m + 1):
            ob = orbit_bounds(m, cl, True)
            assert ob.kerman == m + cl and ob.aspherical == 3 * m
            assert (ob.aspherical > ob.kerman) == (cl < 2 * m)
            assert check_steps(ob.steps)


def test_full_report_kt():
    r = full_report(lie.kodaira_thurston())
    assert (r.manifold_dim, r.betti, r.cl, r.cat_manifold) == (4, (1, 3, 4, 3, 1), 3, 4)
    assert r.symplectic and r.aspherical is True
    assert (r.orbit_bound_kerman, r.orbit_bound_aspherical, r.stronger) == (5, 6, "aspherical")
    assert (r.swgt_omega, r.fiber_n, r.cat_total_space_bound) == (2, 1, 5)
    assert r.convention == CAT_CONVENTION
    assert check_steps(r.steps)
    assert "orbit bounds: Kerman m+cl = 5; aspherical 3m = 6 (stronger)" in r.to_text()


def test_full_report_torus2():
    # m = 1 and cl = 2, so m + cl = 3 and 3m = 3
    r = full_report(lie.torus(2))
    assert (r.cl, r.cat_manifold) == (2, 2)
    assert (r.orbit_bound_kerman, r.orbit_bound_aspherical, r.stronger) == (3, 3, "tie")


def test_full_report_h5_sum_r():
    a = lie.lookup("h5_sum_r")
    r = full_report(a)
    assert r.cl < 6 and r.cl == 4
    # no class ω with ω^3 ≠ 0, so there is no symplectic manifold to bound orbits on
    assert r.symplectic is False and r.aspherical is None
    assert r.orbit_bound_kerman is None and r.orbit_bound_aspherical is None
    ob = orbit_bounds(3, r.cl, True)
    assert (ob.kerman, ob.aspherical) == (3 + r.cl, 9)


def test_full_report_odd_dimension():
    r = full_report(lie.heisenberg(3))
    assert r.cat_manifold == 3 and r.cl == 2
    assert r.symplectic is None and r.orbit_bound_kerman is None


def test_report_invariants_over_catalog():
    for a in lie.catalog().values():
        r = full_report(a)
        assert check_steps(r.steps)
        if r.cat_manifold is not None:
            assert r.cat_manifold == r.manifold_dim
        if r.orbit_bound_kerman is not None:
            m = r.manifold_dim // 2
            assert r.orbit_bound_kerman == m + r.cl
            if r.orbit_bound_aspherical is not None:
                assert r.orbit_bound_aspherical == 3 * m
                assert r.cat_total_space_bound == 2 * m + r.fiber_n


def test_report_deterministic():
    a = lie.lookup("h3_sum_h3")
    assert full_report(a).to_json() == full_report(a).to_json()
    assert full_report(a).to_text() == full_report(a).to_text()


def test_cl_consistent_with_invariants():
    a = lie.lookup("h3_sum_h3")
    assert full_report(a).cl == cup_length(CohomologyRing.of(a)).cl
