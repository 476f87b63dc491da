import random
from fractions import Fraction as F

import pytest

from helpers import jacobi_holds_oracle, random_invertible, random_two_step, random_valid_algebra
from nilcoh import lie
from nilcoh.errors import InputError, InvalidAlgebraError
from nilcoh.linalg import charpoly


def test_abelian_and_heisenberg_valid():
    assert lie.validate(lie.torus(4))
    assert lie.validate(lie.heisenberg(3))


def test_jacobi_violation_reported_on_first_triple():
    a = lie.LieAlgebra(3, {(1, 2, 1): 1, (1, 3, 2): 1})
    v = lie.validate(a)
    assert not v and v.triple == (1, 2, 3)
    assert "(e1, e2, e3)" in v.describe()
    with pytest.raises(InvalidAlgebraError) as exc:
        lie.require_valid(a)
    assert exc.value.triple == (1, 2, 3)


def test_adding_e2e3_bracket_restores_jacobi():
    # [e1,e2]=e1, [e1,e3]=e2, [e2,e3]=e3: the cyclic sum on (1,2,3) cancels,
    # so this one is a genuine Lie algebra (it is sl2 in disguise)
    a = lie.LieAlgebra(3, {(1, 2, 1): 1, (1, 3, 2): 1, (2, 3, 3): 1})
    assert lie.validate(a)
    assert jacobi_holds_oracle(a)
    assert lie.derived_series(a) == [3]
    assert not lie.is_solvable(a)


def test_index_and_shape_errors():
    with pytest.raises(InputError):
        lie.LieAlgebra(3, {(1, 4, 2): 1})
    with pytest.raises(InputError):
        lie.LieAlgebra(0)
    with pytest.raises(InputError):
        lie.LieAlgebra(3, {(2, 2, 1): 1})


def test_antisymmetry_folding():
    a = lie.LieAlgebra(3, [(2, 1, 3, 1)])
    assert dict(a.brackets) == {(1, 2, 3): -1}
    assert lie.LieAlgebra(3, [(2, 1, 3, -1), (1, 2, 3, 1)]).brackets == {(1, 2, 3): 1}
    with pytest.raises(InvalidAlgebraError):
        lie.LieAlgebra(3, [(2, 1, 3, 1), (1, 2, 3, 1)])


def test_zero_constants_not_stored():
    assert dict(lie.LieAlgebra(3, {(1, 2, 3): 0}).brackets) == {}


def test_series_examples():
    h3 = lie.heisenberg(3)
    assert lie.lower_central_series(h3) == [3, 1, 0] and lie.is_nilpotent(h3)
    assert lie.derived_series(h3) == [3, 1, 0] and lie.is_solvable(h3)
    assert lie.lower_central_series(lie.torus(4)) == [4, 0]
    assert lie.derived_series(lie.torus(4)) == [4, 0]
    aff = lie.LieAlgebra(2, {(1, 2, 2): 1})
    lcs = lie.lower_central_series(aff)
    assert lcs[:2] == [2, 1] and lcs[-1] == 1 and not lie.is_nilpotent(aff)
    assert lie.derived_series(aff) == [2, 1, 0] and lie.is_solvable(aff)


def test_classify_examples():
    r = lie.classify(lie.heisenberg(3))
    assert r.is_nilpotent and r.real_spectrum_on_basis
    e1, e2, e3 = [tuple(F(int(i == j)) for j in range(3)) for i in range(3)]
    assert r.completely_solvable_certificate == ((e3,), (e2, e3), (e1, e2, e3))

    t = lie.classify(lie.torus(3))
    assert t.is_abelian and t.certified_completely_solvable
    for basis in t.completely_solvable_certificate:
        assert all(sum(1 for x in v if x) == 1 for v in basis)  # coordinate flag

    aff = lie.LieAlgebra(2, {(1, 2, 2): 1})
    ra = lie.classify(aff)
    assert ra.is_solvable and not ra.is_nilpotent and ra.real_spectrum_on_basis
    assert charpoly(aff.ad(1)) == [0, -1, 1]  # t(t - 1)


def test_rotation_algebra_has_no_real_flag():
    # [e3,e1]=e2, [e3,e2]=-e1: ad e3 is a rotation, eigenvalues ±i
    a = lie.LieAlgebra(3, {(1, 3, 2): -1, (2, 3, 1): 1})
    assert lie.validate(a)
    r = lie.classify(a)
    assert r.is_solvable and not r.real_spectrum_on_basis
    assert r.completely_solvable_certificate is None


def test_solv3_certified():
    r = lie.classify(lie.solv3())
    assert r.is_solvable and not r.is_nilpotent and r.certified_completely_solvable
    a = lie.solv3()
    for k in range(1, 4):
        assert lie.is_ideal(a, list(r.completely_solvable_certificate[k - 1]))


def test_direct_sum_examples():
    kt = lie.direct_sum(lie.heisenberg(3), lie.torus(1))
    assert kt.dim == 4 and dict(kt.brackets) == {(1, 2, 3): 1}
    assert lie.direct_sum(lie.torus(2), lie.torus(3)).is_abelian()
    hh = lie.direct_sum(lie.heisenberg(3), lie.heisenberg(3))
    assert dict(hh.brackets) == {(1, 2, 3): 1, (4, 5, 6): 1}


def test_direct_sum_associative_and_nilpotency():
    a, b, c = lie.heisenberg(3), lie.solv3(), lie.torus(1)
    left = lie.direct_sum(lie.direct_sum(a, b), c)
    right = lie.direct_sum(a, lie.direct_sum(b, c))
    assert left.brackets == right.brackets and left.dim == right.dim
    assert lie.is_nilpotent(lie.direct_sum(a, c))
    assert not lie.is_nilpotent(lie.direct_sum(a, b))


def test_catalog_contract():
    cat = lie.catalog()
    for name in ["torus(1)", "heisenberg(3)", "heisenberg(5)", "kodaira_thurston", "solv3"]:
        assert name in cat
    for a in cat.values():
        assert lie.validate(a), a.name
    kt = lie.lookup("kodaira_thurston")
    assert kt.dim == 4 and kt.constant(1, 2, 3) == 1
    assert lie.lookup("torus(1)").dim == 1 and not lie.lookup("torus(1)").brackets
    assert dict(lie.lookup("heisenberg(5)").brackets) == {(1, 2, 5): 1, (3, 4, 5): 1}
    s = lie.lookup("solv3")
    assert dict(s.brackets) == {(1, 3, 1): 1, (2, 3, 2): -1}
    with pytest.raises(KeyError):
        lie.lookup("no_such_algebra")


def test_catalog_classification_properties():
    for a in lie.catalog().values():
        r = lie.classify(a)
        assert not r.is_nilpotent or r.is_solvable
        assert not r.is_abelian or r.is_nilpotent
        assert r.is_abelian == (not a.brackets) == (r.lower_central_series == (a.dim, 0))
        for series in (r.lower_central_series, r.derived_series):
            assert all(x > y for x, y in zip(series, series[1:]))
        if r.is_nilpotent:
            assert r.real_spectrum_on_basis and r.certified_completely_solvable
            for i in range(1, a.dim + 1):
                assert charpoly(a.ad(i)) == [0] * a.dim + [1]


def test_random_valid_algebras_agree_with_oracle():
    rng = random.Random(7)
    for _ in range(30):
        a = random_valid_algebra(rng)
        assert lie.validate(a) and jacobi_holds_oracle(a)


def test_nilpotent_certificate_always_found():
    rng = random.Random(11)
    for _ in range(20):
        a = random_two_step(rng)
        assert lie.classify(a).certified_completely_solvable


def test_change_basis_preserves_structure():
    rng = random.Random(3)
    for name in ["kodaira_thurston", "solv3", "filiform(4)"]:
        a = lie.lookup(name)
        b = lie.change_basis(a, random_invertible(rng, a.dim))
        assert lie.validate(b)
        assert lie.lower_central_series(b) == lie.lower_central_series(a)
        assert lie.derived_series(b) == lie.derived_series(a)
