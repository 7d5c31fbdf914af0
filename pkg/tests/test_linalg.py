import pytest

from core.linalg import EchelonBasis, LinearMap, dense_rank, determinant, rank_of, vec_add
from core.qrat import ONE, ZERO, RatQ, hbar, qint, qpow


def test_vec_add_drops_cancelled_coordinates():
    assert vec_add({"a": ONE, "b": qpow(1)}, {"a": ONE}, -ONE) == {"b": qpow(1)}


def test_echelon_membership_and_expression():
    basis = EchelonBasis(track=True)
    assert basis.add({"x": ONE, "y": qpow(1)}, tag="u")
    assert basis.add({"y": ONE}, tag="v")
    assert not basis.add({"x": qint(2), "y": ONE}, tag="w")
    assert basis.rank == 2
    assert basis.contains({"x": hbar()})
    assert not basis.contains({"z": ONE})
    coeffs = basis.express({"x": ONE})
    assert coeffs == {"u": ONE, "v": -qpow(1)}
    assert basis.express({"z": ONE}) is None


def test_express_needs_tracking():
    with pytest.raises(RuntimeError):
        EchelonBasis().express({"x": ONE})


def test_rank_over_rational_functions():
    rows = [{0: ONE, 1: qpow(1)}, {0: qpow(-1), 1: ONE}, {1: hbar()}]
    assert rank_of(rows) == 2


def test_determinant():
    assert determinant([[RatQ(1), RatQ(2)], [RatQ(3), RatQ(4)]]) == RatQ(-2)
    assert determinant([[ZERO, ONE], [ONE, ZERO]]) == -ONE
    assert determinant([[qpow(1), ONE], [ONE, qpow(-1)]]) == ZERO
    assert determinant([]) == ONE


def test_dense_rank():
    assert dense_rank([[ONE, qpow(1)], [qpow(-1), ONE]]) == 1


def test_linear_map_algebra():
    basis = ["a", "b"]
    swap = LinearMap(basis, {"a": {"b": ONE}, "b": {"a": ONE}})
    one = LinearMap.identity(basis)
    assert swap @ swap == one
    assert (swap - one).rank() == 1
    assert (swap + one).kernel_dim() == 1
    assert (swap - swap).is_zero()
    assert swap({"a": qint(2)}) == {"b": qint(2)}
