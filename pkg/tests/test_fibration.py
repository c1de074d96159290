"""
Tests for genus-one fibration invariants
"""

import pytest

from k3lat.exceptions import K3LatPreconditionError, K3LatValidationError
from k3lat.fibration import (
    discriminant_form,
    fibration_index,
    is_valid,
    j_degree,
    jacobian_kernel,
    nodal_fiber_count,
    scan_models,
    weierstrass_summary,
)
from k3lat.lattice import standard, sublattice_index
from k3lat.models.binform import BinForm
from k3lat.models.fibration import FibrationData, WeierstrassModel
from k3lat.models.lattice import Character, Lattice
from k3lat.reproduce import load_sample_weierstrass
from k3lat.utils.serialization import parse_weierstrass


@pytest.fixture
def sample():
    return load_sample_weierstrass()


@pytest.fixture
def collision():
    """t^4 s^4, t^6 s^6: multiplicities (4, 6) at t = 0 and at infinity"""
    return WeierstrassModel(BinForm.monomial(8, 4), BinForm.monomial(12, 6))


@pytest.fixture
def degenerate():
    """3 t^4 s^4, t^6 s^6: Delta = 27 - 27 = 0"""
    return WeierstrassModel(BinForm.monomial(8, 4, 3), BinForm.monomial(12, 6))


class TestFibrationIndex:
    """Test fibration indices on the catalog Picard lattices"""

    def test_m_alpha(self):
        """Test D - e on <2> + <-2> has index 2"""
        d = FibrationData(Lattice([[2, 0], [0, -2]]), (1, -1))
        assert fibration_index(d) == 2

    def test_m_beta(self):
        """Test F on the (D, F) lattice has index 3"""
        assert fibration_index(FibrationData(Lattice([[2, 3], [3, 0]]), (0, 1))) == 3

    def test_unimodular_has_section(self):
        """Test a fiber in U has index 1"""
        assert fibration_index(FibrationData(standard("U"), (1, 0))) == 1

    def test_not_isotropic(self):
        """Test fiber classes must be isotropic"""
        with pytest.raises(K3LatPreconditionError, match="isotropic"):
            fibration_index(FibrationData(Lattice([[2, 3], [3, 0]]), (1, 0)))

    def test_zero_fiber(self):
        """Test the zero class is rejected"""
        with pytest.raises(K3LatPreconditionError, match="zero"):
            fibration_index(FibrationData(standard("U"), (0, 0)))

    def test_wrong_length(self):
        """Test the fiber must match the NS rank"""
        with pytest.raises(K3LatValidationError, match="length"):
            fibration_index(FibrationData(standard("U"), (1,)))


class TestWeierstrass:
    """Test Weierstrass validity, nodal counts and j-degree"""

    def test_sample_summary(self, sample):
        """Test the shipped sample is valid with 24 nodes and j of degree 24"""
        assert weierstrass_summary(sample) == {
            "valid": True,
            "delta_nonzero": True,
            "nodal_count": 24,
            "j_degree": 24,
        }

    def test_discriminant_degree(self, sample):
        """Test Delta = g2^3 - 27 g3^2 has degree 24"""
        delta = discriminant_form(sample)
        assert delta.degree == 24
        assert delta.coeffs[0] == 1
        assert delta.coeffs[24] == 1 - 27

    def test_collision_is_invalid(self, collision):
        """Test (4, 6) vanishing makes the model invalid"""
        assert not is_valid(collision)
        assert nodal_fiber_count(collision) == 0

    def test_vanishing_discriminant(self, degenerate):
        """Test Delta = 0 is invalid and has no counts"""
        assert not is_valid(degenerate)
        with pytest.raises(K3LatPreconditionError, match="vanishes"):
            nodal_fiber_count(degenerate)
        with pytest.raises(K3LatPreconditionError, match="vanishes"):
            j_degree(degenerate)
        summary = weierstrass_summary(degenerate)
        assert summary["delta_nonzero"] is False
        assert summary["nodal_count"] is None

    def test_constant_j(self):
        """Test g2 = 0 gives a valid model with constant j"""
        w = WeierstrassModel(BinForm.zero(8), BinForm(12, [1] + [0] * 11 + [1]))
        assert is_valid(w)
        assert j_degree(w) == 0
        assert nodal_fiber_count(w) == 0

    def test_wrong_degrees(self):
        """Test g2 and g3 degrees are validated"""
        with pytest.raises(K3LatValidationError, match="g2 must have degree 8"):
            parse_weierstrass({"g2": ["1", "0"], "g3": ["0"] * 12 + ["1"]})

    def test_missing_key(self):
        """Test g3 is required"""
        with pytest.raises(K3LatValidationError, match="g3"):
            parse_weierstrass({"g2": ["0"] * 9})

    def test_scan_models_order(self, sample, collision, degenerate):
        """Test parallel scans keep input order"""
        models = [sample, collision, degenerate, sample]
        serial = scan_models(models, threads=1)
        parallel = scan_models(models, threads=4)
        assert serial == parallel
        assert [s["valid"] for s in parallel] == [True, False, False, True]


class TestJacobianKernel:
    """Test T_X as the kernel of a character on T_J"""

    @pytest.mark.parametrize("order", [2, 3])
    def test_index_is_order(self, order):
        """Test [T_J : T_X] equals the order of alpha"""
        t_j = Lattice([[2, 1], [1, 2]])
        kernel, index = jacobian_kernel(t_j, Character(t_j, order, (1, 0)))
        assert index == order
        assert sublattice_index(kernel) == order

    def test_domain_mismatch(self):
        """Test alpha must be defined on T_J"""
        with pytest.raises(K3LatValidationError, match="not defined"):
            jacobian_kernel(standard("U"), Character(Lattice([[2]]), 2, (1,)))
