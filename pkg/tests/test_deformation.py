"""The linear fixed-point system attached to a polarized instance: its
solution space is always two-dimensional with explicit generators."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hklattice.deformation_fix import (
    FixInstance,
    FixSolution,
    expected_generators,
    polarization_kernel,
    random_instance,
    solve_fixed_space,
    verify_generators,
)
from hklattice.exact_linalg import Mat

F = Fraction


class TestFixInstance:
    def test_validation(self):
        with pytest.raises(ValueError):
            FixInstance(Mat([[1, 2], [3, 4]]), [1, 0])  # not symmetric
        with pytest.raises(ValueError):
            FixInstance(Mat([[1, 1], [1, 1]]), [1, 0])  # singular
        with pytest.raises(ValueError):
            FixInstance(Mat.identity(2), [0, 0])  # zero polarization

    def test_json_roundtrip(self):
        inst = FixInstance(Mat([[2, 1], [1, 2]]), [1, -1])
        back = FixInstance.from_json(inst.to_json())
        assert back.A == inst.A and back.s == inst.s


class TestKernel:
    def test_orthogonality_and_count(self, rng):
        for _ in range(5):
            inst = random_instance(rng, rng.randint(2, 7))
            mus = polarization_kernel(inst)
            assert len(mus) == inst.n - 1
            As = [
                sum(inst.A[(i, j)] * inst.s[j] for j in range(inst.n))
                for i in range(inst.n)
            ]
            for mu in mus:
                assert sum(F(m) * a for m, a in zip(mu, As)) == 0


class TestSolve:
    def test_identity_2x2(self):
        inst = FixInstance(Mat.identity(2), [1, 0])
        sol = solve_fixed_space(inst)
        assert sol.dimension == 2
        assert not sol.extra_solutions
        assert verify_generators(sol, inst)

    def test_expected_generators_satisfy_system(self):
        # (A^-1, 2): c0*mu - 2*A^-1*A*mu = 2mu - 2mu = 0 for every mu
        inst = FixInstance(Mat([[2, 1], [1, 3]]), [1, 1])
        gens = expected_generators(inst)
        assert len(gens) == 2
        C, c0 = gens[0]
        assert C == inst.A.inverse() and c0 == 2
        C, c0 = gens[1]
        assert c0 == 0
        assert C == Mat(
            [[inst.s[i] * inst.s[j] for j in range(inst.n)] for i in range(inst.n)]
        )

    def test_random_small(self, rng):
        for _ in range(8):
            inst = random_instance(rng, rng.randint(3, 8))
            sol = solve_fixed_space(inst)
            assert sol.dimension == 2, inst.to_json()
            assert verify_generators(sol, inst), inst.to_json()

    def test_scaling_polarization_keeps_space(self, rng):
        inst = random_instance(rng, 5)
        scaled = FixInstance(inst.A, [3 * x for x in inst.s])
        a = solve_fixed_space(inst)
        b = solve_fixed_space(scaled)
        assert a.dimension == b.dimension == 2
        # each spans the other's solution space
        assert verify_generators(a, scaled)
        assert verify_generators(b, inst)

    def test_solution_json(self, rng):
        inst = random_instance(rng, 4)
        sol = solve_fixed_space(inst)
        obj = sol.to_json()
        assert obj["dimension"] == 2
        assert len(obj["pairs"]) == 2


@settings(max_examples=10, deadline=None)
@given(st.integers(2, 6), st.integers(0, 10**6))
def test_dimension_always_two(n, seed):
    import random

    inst = random_instance(random.Random(seed), n)
    sol = solve_fixed_space(inst)
    assert sol.dimension == 2
    assert verify_generators(sol, inst)


def test_solution_type_shape(rng):
    inst = random_instance(rng, 3)
    sol = solve_fixed_space(inst)
    assert isinstance(sol, FixSolution)
    for mat, c0 in sol.pairs:
        assert mat.is_symmetric()
        assert mat.shape == (3, 3)
