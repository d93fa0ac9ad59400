"""Integer kernel routines against hand oracles, random cross-checks, and
the compiled/pure backend parity contract."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hklattice import _pykernels, kernels

try:
    from hklattice import _speedups
except ImportError:
    _speedups = None

BACKENDS = [_pykernels] if _speedups is None else [_pykernels, _speedups]


def _ids(mods):
    return ["python" if m is _pykernels else "compiled" for m in mods]


small_entry = st.integers(min_value=-9, max_value=9)


def small_matrix(max_dim=5):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(
                st.lists(small_entry, min_size=n, max_size=n),
                min_size=m,
                max_size=m,
            )
        )
    )


def _det_fraction(mat):
    """Plain Gaussian elimination over Fraction, the independent oracle."""
    a = [[Fraction(x) for x in row] for row in mat]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            for k in range(c, n):
                a[r][k] -= f * a[c][k]
    return det


def _is_hnf(H):
    pivots = []
    for row in H:
        nz = [j for j, x in enumerate(row) if x]
        assert nz, "zero row in HNF output"
        p = nz[0]
        assert row[p] > 0
        if pivots:
            assert p > pivots[-1]
        for prev in range(len(pivots)):
            assert 0 <= H[prev][p] < row[p]
        pivots.append(p)
    return True


@pytest.mark.parametrize("mod", BACKENDS, ids=_ids(BACKENDS))
class TestPerBackend:
    def test_hnf_known(self, mod):
        # span{(2,0),(0,2),(1,1)} = {(a,b): a+b even}, basis (1,1),(0,2)
        assert mod.hnf([[2, 0], [0, 2], [1, 1]]) == [[1, 1], [0, 2]]
        # a matrix already in HNF is a fixed point
        fixed = [[1, 0, 50, -11], [0, 3, 28, -2], [0, 0, 61, -13]]
        assert mod.hnf(fixed) == fixed

    def test_snf_known(self, mod):
        # Z^2 / <(2,0),(0,3)> = Z/6, so the chain is (1, 6)
        assert mod.snf_diagonal([[2, 0], [0, 3]]) == [1, 6]
        assert mod.snf_diagonal([[1, 2], [3, 4]]) == [1, 2]

    def test_hnf_zero_rows_dropped(self, mod):
        assert mod.hnf([[0, 0], [0, 0]]) == []
        assert mod.hnf([[2, 4], [1, 2], [3, 6]]) == [[1, 2]]

    def test_hnf_transform_contract(self, mod):
        A = [[6, 2, 0], [2, 4, 1], [0, 0, 0], [8, 6, 1]]
        H, U, rank = mod.hnf_transform(A)
        assert rank == len([r for r in H if any(r)])
        assert abs(mod.det_bareiss(U)) == 1
        m, n = len(A), len(A[0])
        prod = [
            [sum(U[i][k] * A[k][j] for k in range(m)) for j in range(n)]
            for i in range(m)
        ]
        assert prod[:rank] == H[:rank]
        assert all(not any(row) for row in prod[rank:])

    def test_pivot_columns(self, mod):
        H = [[1, 0, 5], [0, 0, 3]]
        assert mod.pivot_columns(H) == [0, 2]

    def test_solve_left_int_row(self, mod):
        H = mod.hnf([[2, 0, 1], [0, 3, 1]])
        piv = mod.pivot_columns(H)
        x = mod.solve_left_int_row(H, piv, [2, 3, 2])
        assert x is not None
        n = len(H[0])
        back = [sum(x[i] * H[i][j] for i in range(len(H))) for j in range(n)]
        assert back == [2, 3, 2]
        assert mod.solve_left_int_row(H, piv, [1, 0, 0]) is None

    def test_det_bareiss_known(self, mod):
        assert mod.det_bareiss([[1, 2], [3, 4]]) == -2
        assert mod.det_bareiss([[2, 0], [0, 3]]) == 6
        assert mod.det_bareiss([[1]]) == 1
        assert mod.det_bareiss([[1, 1], [1, 1]]) == 0

    def test_row_echelon_bareiss_contract(self, mod):
        A = [[2, 4, 6], [1, 2, 3], [0, 1, 5]]
        rows, piv = mod.row_echelon_bareiss(A)
        assert len(rows) == len(piv) == 2
        assert piv == sorted(piv)
        for r, p in zip(rows, piv):
            assert r[p] != 0
            assert all(x == 0 for x in r[:p])

    def test_smith_diag_divisibility(self, mod):
        d, _, _ = mod.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
        nz = [x for x in d if x]
        assert all(x > 0 for x in nz)
        for a, b in zip(nz, nz[1:]):
            assert b % a == 0
        prod = 1
        for x in nz:
            prod *= x
        assert prod == abs(mod.det_bareiss([[2, 4, 4], [-6, 6, 12], [10, 4, 16]]))

    def test_smith_transform_contract(self, mod):
        A = [[4, 2], [2, 8]]
        d, V, Vinv = mod.smith_normal_form(A, want_v=True, want_vinv=True)
        assert abs(mod.det_bareiss(V)) == 1
        n = len(V)
        prod = [
            [sum(V[i][k] * Vinv[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        assert prod == [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        assert mod.snf_diagonal(A) == d


@settings(max_examples=60, deadline=None)
@given(small_matrix())
def test_hnf_idempotent_and_canonical(mat):
    H = kernels.hnf(mat)
    if H:
        _is_hnf(H)
        assert kernels.hnf(H) == H


@settings(max_examples=60, deadline=None)
@given(small_matrix())
def test_hnf_preserves_row_lattice(mat):
    # A and A stacked with its own HNF generate the same integer row span
    H = kernels.hnf(mat)
    assert kernels.hnf(mat + H) == H


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small_entry, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_fraction_elimination(mat):
    assert kernels.det_bareiss(mat) == _det_fraction(mat)


@settings(max_examples=40, deadline=None)
@given(small_matrix())
def test_echelon_rank_matches_hnf(mat):
    rows, piv = kernels.row_echelon_bareiss(mat)
    _, _, rank = kernels.hnf_transform(mat)
    assert len(rows) == rank
    # Q-row-span preserved: HNF of scaled stacks agree after saturation
    assert kernels.hnf_transform(mat + rows)[2] == rank


@settings(max_examples=40, deadline=None)
@given(small_matrix())
def test_snf_diag_consistent_with_transform(mat):
    assert kernels.snf_diagonal(mat) == kernels.smith_normal_form(mat)[0]


@pytest.mark.skipif(_speedups is None, reason="compiled extension not built")
def test_backend_parity_randomized():
    rng = random.Random(99)
    for trial in range(30):
        m = rng.randint(1, 6)
        n = rng.randint(1, 6)
        A = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(m)]
        assert _pykernels.hnf(A) == _speedups.hnf(A), A
        h1, u1, r1 = _pykernels.hnf_transform(A)
        h2, u2, r2 = _speedups.hnf_transform(A)
        assert (h1, r1) == (h2, r2), A
        assert abs(_pykernels.det_bareiss(u2)) == 1
        assert _pykernels.snf_diagonal(A) == _speedups.snf_diagonal(A), A
        e1 = _pykernels.row_echelon_bareiss(A)
        e2 = _speedups.row_echelon_bareiss(A)
        assert e1 == e2, A
        if m == n:
            assert _pykernels.det_bareiss(A) == _speedups.det_bareiss(A), A


def test_active_backend_is_reported():
    assert kernels.IMPLEMENTATION in ("python", "compiled")
    if _speedups is not None:
        assert kernels.IMPLEMENTATION == "compiled"
