from fractions import Fraction

import pytest

from hopfact.doubles import (
    QT_CHECKS,
    check_quasitriangular,
    double_biperfect_check,
    drinfeld_double,
    embeddings_are_algebra_maps,
    r_matrix,
)
from hopfact.hopf import _associativity_sparse, check_axiom, count_one_dim_reps, group_algebra, verify_hopf_axioms
from hopfact.permcore import ResourceError, build_bsgs, cyclic_group, identity, symmetric_group


@pytest.fixture(scope="module")
def inputs(h_s3):
    return {"C[Z2]": group_algebra(cyclic_group(2)), "C[S3]": group_algebra(symmetric_group(3)),
            "H(S3,A3,Z2)": h_s3}


@pytest.fixture(scope="module")
def doubles(inputs):
    return {name: drinfeld_double(H) for name, H in inputs.items()}


NAMES = ["C[Z2]", "C[S3]", "H(S3,A3,Z2)"]


@pytest.mark.parametrize("name", NAMES)
def test_axioms_and_qt(name, doubles):
    qt = doubles[name]
    assert qt.axioms.ok
    assert all(qt.qt_checks[c] for c in QT_CHECKS)
    assert qt.ok


@pytest.mark.parametrize("name", NAMES)
def test_dimension(name, inputs, doubles):
    assert doubles[name].host.dim == inputs[name].dim ** 2


@pytest.mark.parametrize("name", NAMES)
def test_embeddings(name, inputs, doubles):
    assert embeddings_are_algebra_maps(inputs[name], doubles[name].host) == {"H": True, "dual": True}


def test_z2_double_is_commutative_group_like(doubles):
    # D(C[Z2]) = C[Z2 x Z2]: commutative and cocommutative with four characters
    D = doubles["C[Z2]"].host
    assert D.is_commutative() and D.is_cocommutative()
    assert count_one_dim_reps(D) == 4


def test_s3_double_is_noncommutative(doubles):
    assert not doubles["C[S3]"].host.is_commutative()


def test_corrupted_r_matrix_fails(doubles):
    qt = doubles["C[S3]"]
    R = dict(qt.r_matrix)
    key = next(iter(R))
    R[key] = R[key] * 2
    results = check_quasitriangular(qt.host, R)
    assert not all(results.values())


def test_dropped_r_term_fails(doubles):
    qt = doubles["C[Z2]"]
    R = dict(qt.r_matrix)
    R.pop(next(iter(R)))
    assert not check_quasitriangular(qt.host, R)["invertible"]


def test_r_matrix_terms(inputs):
    # the unit of C[S3]^* is the sum of all six delta functions
    assert len(r_matrix(inputs["C[S3]"])) == 36


def test_dim_bound():
    with pytest.raises(ResourceError):
        drinfeld_double(group_algebra(cyclic_group(5)), dim_bound=4)


class TestBiperfectCheck:
    def test_c_s3(self, inputs):
        r = double_biperfect_check(inputs["C[S3]"])
        assert r["counts"]["H"] == 2
        assert r["counts"]["D"] > 1
        assert not r["H_biperfect"] and not r["D_biperfect"]
        assert r["equivalence_holds"]

    def test_c_z2(self, inputs):
        r = double_biperfect_check(inputs["C[Z2]"])
        assert (r["counts"]["H"], r["counts"]["H_dual"]) == (2, 2)
        assert r["counts"]["D"] > 1 and r["counts"]["D_dual"] > 1
        assert r["equivalence_holds"]

    def test_bicrossproduct(self, inputs):
        r = double_biperfect_check(inputs["H(S3,A3,Z2)"])
        assert (r["counts"]["H"], r["counts"]["H_dual"]) == (6, 2)
        assert r["equivalence_holds"] and r["dim_D"] == 36

    def test_trivial(self):
        H = group_algebra(build_bsgs([identity(1)]))
        r = double_biperfect_check(H)
        assert r["counts"] == {"H": 1, "H_dual": 1, "D": 1, "D_dual": 1}
        assert r["H_biperfect"] and r["D_biperfect"]


class TestSparseAssociativity:
    def test_agrees_on_double(self, doubles):
        D = doubles["C[S3]"].host
        assert _associativity_sparse(D) is None

    def test_detects_corruption(self):
        H = group_algebra(cyclic_group(36))
        assert check_axiom(H, "associativity") is None
        H.mult[(1, 1)] = {0: Fraction(1)}
        failure = _associativity_sparse(H)
        assert failure is not None and failure is not NotImplemented
        assert not verify_hopf_axioms(H, ["associativity"]).ok

    def test_small_dims_use_loop(self):
        assert _associativity_sparse(group_algebra(cyclic_group(4))) is NotImplemented
