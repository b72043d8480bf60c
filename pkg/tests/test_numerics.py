import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eigencount import (
    DEFAULT,
    NormKind,
    SingularResolventError,
    as_matrix,
    eigenvalues,
    induced_norm,
    numerical_rank,
    resolvent,
    singular_values,
)
from eigencount.errors import MatrixError


def test_norm_kind_parse():
    assert NormKind.parse("l1") is NormKind.L1
    assert NormKind.parse("l2") is NormKind.L2
    assert NormKind.parse("linf") is NormKind.LINF
    with pytest.raises(ValueError):
        NormKind.parse("l3")
    with pytest.raises(ValueError):
        NormKind.parse("L2")  # tags are exact, lowercase


def test_as_matrix_rejects_non_square():
    with pytest.raises(MatrixError):
        as_matrix(np.zeros((2, 3)))
    with pytest.raises(MatrixError):
        as_matrix([[1.0, np.nan], [0.0, 1.0]])


def test_eigenvalues_exact_diagonal_clusters():
    m = np.diag([2.0, 2.0, 3.0, 0.0])
    spec = eigenvalues(m)
    pairs = sorted(((complex(v).real, complex(v).imag), int(c))
                   for v, c in zip(spec.values, spec.multiplicities))
    assert pairs == [((0.0, 0.0), 1), ((2.0, 0.0), 2), ((3.0, 0.0), 1)]
    assert spec.dim == 4
    assert spec.count_where(lambda lam: abs(lam) > 1.0) == 3


def test_eigenvalues_flat_preserves_total_multiplicity():
    rng = np.random.default_rng(3)
    m = rng.standard_normal((7, 7)) + 1j * rng.standard_normal((7, 7))
    spec = eigenvalues(m)
    assert spec.flat().shape == (7,)
    # same multiset as the raw solver, up to ordering
    raw = np.sort_complex(np.linalg.eigvals(m))
    assert np.allclose(np.sort_complex(spec.flat()), raw, atol=1e-8)


def test_singular_values_known():
    m = np.array([[3.0, 0.0], [0.0, 4.0]], dtype=complex)
    assert np.allclose(singular_values(m), [4.0, 3.0])


def test_numerical_rank_outer_product():
    u = np.arange(1, 6, dtype=float)
    assert numerical_rank(np.outer(u, u)) == 1
    assert numerical_rank(np.zeros((4, 4))) == 0
    assert numerical_rank(np.eye(4)) == 4


def test_induced_norms_hand_values():
    m = np.array([[1.0, -2.0], [3.0, 4.0]], dtype=complex)
    assert induced_norm(m, NormKind.L1) == 6.0   # worst column
    assert induced_norm(m, NormKind.LINF) == 7.0  # worst row
    # L2 induced norm is the top singular value
    top = float(np.sqrt(np.max(np.linalg.eigvalsh(m.conj().T @ m)).real))
    assert abs(induced_norm(m, NormKind.L2) - top) < 1e-12


@settings(deadline=None, max_examples=30)
@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_induced_norm_is_submultiplicative_on_vectors(seed):
    rng = np.random.default_rng(seed)
    m = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
    v = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    for kind, order in ((NormKind.L1, 1), (NormKind.L2, 2), (NormKind.LINF, np.inf)):
        lhs = np.linalg.norm(m @ v, ord=order)
        rhs = induced_norm(m, kind) * np.linalg.norm(v, ord=order)
        assert lhs <= rhs * (1 + 1e-12)


def test_resolvent_convention_and_singularity():
    m = np.diag([1.0, 2.0]).astype(complex)
    r = resolvent(m, 3.0)
    assert np.allclose(r, np.diag([0.5, 1.0]))
    with pytest.raises(SingularResolventError) as info:
        resolvent(m, 2.0)
    assert "2" in str(info.value)


def test_resolvent_residual_check_near_spectrum():
    m = np.diag([1.0, 2.0]).astype(complex)
    with pytest.raises(SingularResolventError):
        resolvent(m, 2.0 + 1e-16, DEFAULT)
