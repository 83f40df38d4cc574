"""Tests for homomorphism application, verification, and kernel lattices."""

import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from latile.abelian import (
    GroupElement,
    GroupSpec,
    add,
    elements,
    identity,
    rank_of,
    scalar_mul,
)
from latile.ball import generate_ball
from latile.construct import golay11_tiling
from latile.tiling import (
    TilingHomomorphism,
    apply_homomorphism,
    induced_code_set,
    kernel_basis,
    kernel_determinant,
    verify_tiling,
)

Z3 = GroupSpec((3,))


def hom(spec, image_residues):
    return TilingHomomorphism(
        n=len(image_residues),
        spec=spec,
        images=tuple(GroupElement(spec, r) for r in image_residues),
    )


class TestApply:
    def test_linear_combination_of_images(self):
        phi = hom(GroupSpec((7,)), [(1,), (3,)])
        assert apply_homomorphism(phi, (2, 1)).residues == (5,)
        assert apply_homomorphism(phi, (0, 0)).residues == (0,)
        assert apply_homomorphism(phi, (-1, 0)).residues == (6,)

    def test_dimension_mismatch_rejected(self):
        phi = hom(GroupSpec((7,)), [(1,), (3,)])
        with pytest.raises(ValueError):
            apply_homomorphism(phi, (1, 0, 0))


class TestInducedCodeSet:
    def test_one_dimensional_map_covers_z3(self):
        phi = hom(Z3, [(1,)])
        code = induced_code_set(phi)
        # ball vectors -1, 0, 1 land on 2, 0, 1
        assert code.coefficients == (1, 1, 1)

    def test_golay_map_gives_23_point_code(self):
        code = induced_code_set(golay11_tiling())
        assert sum(code.coefficients) == 23
        assert set(code.coefficients) <= {0, 1}
        assert code.coefficients[0] == 1

    def test_collisions_show_up_as_multiplicity(self):
        phi = hom(GroupSpec((19,)), [(1,), (1,), (4,)])
        code = induced_code_set(phi)
        # repeated image 1 (and its negation) keeps multiplicity 2
        assert sum(code.coefficients) == 7
        assert code.coefficients[1] == 2
        assert code.coefficients[18] == 2
        assert code.coefficients[4] == 1
        assert code.coefficients[0] == 1


class TestVerify:
    def test_golay_tiling_is_bijective(self):
        report = verify_tiling(golay11_tiling(), generate_ball(11, 2, 1, 1))
        assert report.bijective
        assert report.collision_count == 0
        assert report.uncovered == ()
        assert report.reason is None

    def test_degenerate_all_identity_map(self):
        spec = GroupSpec((3, 3, 3, 3, 3))
        phi = hom(spec, [(0, 0, 0, 0, 0)] * 11)
        report = verify_tiling(phi, generate_ball(11, 2, 1, 1))
        assert not report.bijective
        # all 243 vectors collapse onto the identity: 242 excess vectors
        assert report.collision_count == 242
        assert len(report.collisions) == 1
        assert len(report.uncovered) == 242

    def test_group_order_mismatch_reported_not_raised(self):
        phi = hom(GroupSpec((5,)), [(1,), (2,), (3,)])
        report = verify_tiling(phi, generate_ball(3, 2, 1, 1))
        assert not report.bijective
        assert "order" in report.reason

    def test_dimension_mismatch_raises(self):
        phi = hom(GroupSpec((19,)), [(1,), (2,)])
        with pytest.raises(ValueError):
            verify_tiling(phi, generate_ball(3, 2, 1, 1))

    def test_near_miss_in_z19(self):
        # images 1, 2, 3: (1,1,-1) and (0,0,0) both hit 0, etc.
        phi = hom(GroupSpec((19,)), [(1,), (2,), (3,)])
        report = verify_tiling(phi, generate_ball(3, 2, 1, 1))
        assert not report.bijective
        assert report.collision_count >= 1
        u, v, g = report.collisions[0]
        lhs = apply_homomorphism(phi, u)
        rhs = apply_homomorphism(phi, v)
        assert lhs == rhs == g

    def test_report_dict_is_json_safe(self):
        phi = hom(GroupSpec((19,)), [(1,), (2,), (3,)])
        report = verify_tiling(phi, generate_ball(3, 2, 1, 1))
        json.dumps(report.as_dict())


class TestSerialization:
    def test_round_trip(self):
        phi = golay11_tiling()
        again = TilingHomomorphism.from_dict(phi.as_dict())
        assert again == phi

    def test_dict_shape(self):
        d = golay11_tiling().as_dict()
        assert d["n"] == 11
        assert d["group"] == {"invariant_factors": [3, 3, 3, 3, 3]}
        assert len(d["images"]) == 11
        assert all(len(col) == 5 for col in d["images"])


def subgroup_size(phi):
    """Order of the image subgroup, by closure from the generators."""
    seen = {identity(phi.spec)}
    frontier = [identity(phi.spec)]
    while frontier:
        g = frontier.pop()
        for img in phi.images:
            h = add(g, img)
            if h not in seen:
                seen.add(h)
                frontier.append(h)
    return len(seen)


class TestKernel:
    def test_one_dimensional_examples(self):
        assert kernel_basis(hom(Z3, [(1,)])) == [[3]]
        assert kernel_basis(hom(Z3, [(0,)])) == [[1]]

    def test_golay_kernel_has_index_243(self):
        basis = kernel_basis(golay11_tiling())
        assert len(basis) == 11
        assert kernel_determinant(basis) == 243

    def test_basis_vectors_map_to_identity(self):
        phi = golay11_tiling()
        for row in kernel_basis(phi):
            assert apply_homomorphism(phi, row) == identity(phi.spec)

    def test_normal_form_shape(self):
        basis = kernel_basis(golay11_tiling())
        n = len(basis)
        for i in range(n):
            assert basis[i][i] > 0
            for j in range(i + 1, n):
                assert basis[i][j] == 0
            for j in range(i):
                assert 0 <= basis[i][j] < basis[j][j]

    def test_identity_map_kernel_is_standard_lattice(self):
        spec = GroupSpec((4,))
        phi = hom(spec, [(0,), (0,), (0,)])
        assert kernel_basis(phi) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_determinant_equals_image_subgroup_order(self, data):
        spec = data.draw(
            st.sampled_from(
                [GroupSpec((6,)), GroupSpec((8,)), GroupSpec((2, 4)), GroupSpec((3, 3)), GroupSpec((12,))]
            )
        )
        n = data.draw(st.integers(min_value=1, max_value=4))
        images = [
            tuple(
                data.draw(st.integers(min_value=0, max_value=d - 1))
                for d in spec.invariant_factors
            )
            for _ in range(n)
        ]
        phi = hom(spec, images)
        basis = kernel_basis(phi)
        assert kernel_determinant(basis) == subgroup_size(phi)
        for row in basis:
            assert apply_homomorphism(phi, row) == identity(spec)

    def test_random_sublattice_points_map_to_identity(self):
        rng = random.Random(11)
        phi = golay11_tiling()
        basis = kernel_basis(phi)
        for _ in range(25):
            coeffs = [rng.randint(-4, 4) for _ in range(11)]
            point = [
                sum(c * basis[k][i] for k, c in enumerate(coeffs))
                for i in range(11)
            ]
            assert apply_homomorphism(phi, point) == identity(phi.spec)
