"""
Tests for the family catalog, series arithmetic and index chains
"""

import logging

import pytest

from k3lat import constants
from k3lat.exceptions import K3LatConsistencyError, K3LatPreconditionError, K3LatValidationError
from k3lat.families import (
    builtin,
    catalog,
    correspondence_lambda,
    enumerate_pairs,
    index_chain,
    obstruction_residues,
    reproduce_index_embeddings,
    series_ambient_dim,
    series_degree,
    solve_partner,
    squarefree_part,
    x3k_x3m2_obstruction,
)
from k3lat.models.family import CorrespondencePair, SeriesId


class TestCatalog:
    """Test built-in family specs"""

    def test_catalog_names(self):
        """Test every family is present in catalog order"""
        assert [spec.name for spec in catalog()] == constants.FAMILY_NAMES

    def test_m_beta(self):
        """Test M_beta has degree 8 in P^5"""
        spec = builtin("M_beta")
        assert spec.degree == 8
        assert spec.ambient_dim == 5
        assert spec.fiber == (0, 1)

    def test_degrees(self):
        """Test polarization degrees of the catalog"""
        degrees = {spec.name: spec.degree for spec in catalog()}
        assert degrees == {"M": 2, "M_alpha": 2, "M_beta": 8, "Y": 8, "J0": 4, "J3": 4}

    def test_unknown_family(self):
        """Test unknown names are rejected"""
        with pytest.raises(K3LatValidationError, match="Unknown family"):
            builtin("Z")

    def test_to_dict_drops_missing_fiber(self):
        """Test families without a fiber omit the key"""
        assert "fiber" not in builtin("Y").to_dict()
        assert builtin("J3").to_dict()["fiber"] == [1, 0]


class TestSeries:
    """Test series degrees, partners and square tests"""

    @pytest.mark.parametrize(
        "series,parameter,degree,dim",
        [
            ("X3k", 1, 4, 3),
            ("X3k1", 1, 6, 4),
            ("X3k2", 1, 8, 5),
            ("Y4m5", 1, 16, 9),
            ("X3k", 3, 16, 9),
        ],
    )
    def test_degree_and_dim(self, series, parameter, degree, dim):
        """Test polarization degree and projective dimension"""
        s = SeriesId(series, parameter)
        assert series_degree(s) == degree
        assert series_ambient_dim(s) == dim

    def test_unknown_series(self):
        """Test series names are validated"""
        with pytest.raises(K3LatValidationError, match="Unknown series"):
            series_degree(SeriesId("X9", 1))

    def test_non_positive_parameter(self):
        """Test parameters start at 1"""
        with pytest.raises(K3LatValidationError, match="parameter"):
            series_degree(SeriesId("X3k", 0))

    def test_squarefree_part(self):
        """Test rho with n = rho * square"""
        assert squarefree_part(12) == 3
        assert squarefree_part(1) == 1
        assert squarefree_part(72) == 2
        with pytest.raises(K3LatPreconditionError):
            squarefree_part(0)

    def test_correspondence_lambda(self):
        """Test square roots of degree products"""
        assert correspondence_lambda(2, 8) == 4
        assert correspondence_lambda(4, 6) is None
        with pytest.raises(K3LatValidationError, match="positive"):
            correspondence_lambda(0, 4)

    def test_solve_partner(self):
        """Test l = 3 rho d^2"""
        assert solve_partner(1, 1) == 6
        assert solve_partner(2, 1) == 15
        assert solve_partner(1, 2) == 24
        assert correspondence_lambda(4, 6 * 6) == 12

    def test_solve_partner_x3k2(self):
        """Test the X3k2 partner rule"""
        l = solve_partner(1, 1, series="X3k2")  # noqa: E741
        assert l == 3
        assert correspondence_lambda(8, 6 * l) == 12

    def test_solve_partner_invalid(self):
        """Test bad inputs"""
        with pytest.raises(K3LatValidationError):
            solve_partner(0, 1)
        with pytest.raises(K3LatValidationError, match="No partner rule"):
            solve_partner(1, 1, series="Y4m5")


class TestObstruction:
    """Test the X3k x X3k2 obstruction"""

    def test_residues(self):
        """Test corrected residue 2 and variant residue 1"""
        assert obstruction_residues(1, 1) == {"corrected_residue": 2, "variant_residue": 1}

    def test_variant_logged_at_debug(self, caplog):
        """Test differing residues are logged at DEBUG and never as warnings"""
        with caplog.at_level(logging.DEBUG, logger="k3lat.families"):
            obstruction_residues(2, 3)
        records = [r for r in caplog.records if "Variant obstruction residue" in r.getMessage()]
        assert [r.levelno for r in records] == [logging.DEBUG]

    def test_variant_silent_at_default_level(self, caplog):
        """Test nothing is logged at WARNING level"""
        with caplog.at_level(logging.WARNING, logger="k3lat.families"):
            obstruction_residues(4, 5)
        assert caplog.records == []

    def test_obstructed_everywhere(self):
        """Test no pair with k, m <= 30 has a square degree product"""
        assert all(x3k_x3m2_obstruction(k, m) for k in range(1, 31) for m in range(1, 31))

    def test_invalid_parameters(self):
        """Test parameters start at 1"""
        with pytest.raises(K3LatValidationError):
            x3k_x3m2_obstruction(0, 1)


class TestEnumeratePairs:
    """Test bounded enumeration of correspondence pairs"""

    def test_x3k_x3k2_empty(self):
        """Test the obstructed pair of series has no solutions"""
        assert enumerate_pairs("X3k", "X3k2", 20, 200) == []

    def test_x3k_y4m5(self):
        """Test X3 x Y9 has lambda = 8 and X3 x Y33 has lambda = 16"""
        assert enumerate_pairs("X3k", "Y4m5", 1, 9) == [
            CorrespondencePair(1, 1, 8),
            CorrespondencePair(1, 7, 16),
        ]

    def test_partner_is_found(self):
        """Test the constructed partner appears in the enumeration"""
        pairs = enumerate_pairs("X3k", "X3k1", 1, 10)
        assert CorrespondencePair(1, 6, 12) in pairs

    def test_thread_count_does_not_change_results(self):
        """Test sharded enumeration matches the serial one"""
        serial = enumerate_pairs("X3k", "X3k1", 25, 100, threads=1)
        parallel = enumerate_pairs("X3k", "X3k1", 25, 100, threads=4)
        assert serial == parallel
        assert serial == sorted(serial)

    def test_bad_bounds(self):
        """Test bounds must be positive"""
        with pytest.raises(K3LatValidationError, match="Bounds"):
            enumerate_pairs("X3k", "X3k1", 0, 10)

    def test_bad_series(self):
        """Test series names are checked"""
        with pytest.raises(K3LatValidationError, match="Unknown series"):
            enumerate_pairs("X3k", "nope", 1, 1)


class TestIndexChains:
    """Test the explicit K3-lattice embeddings"""

    def test_chains(self):
        """Test index 2, index 9 and the trivial chain"""
        reports = {r.chain: r for r in reproduce_index_embeddings()}
        assert reports["M_alpha->M"].discriminant_index == 2
        assert reports["M_alpha->M"].explicit_index == 2
        assert reports["M_beta->Y"].discriminant_index == 9
        assert reports["M_beta->Y"].explicit_index == 9
        assert reports["M_beta->Y"].extra_norm == -72
        assert reports["M->M"].explicit_index == 1
        assert all(r.passed for r in reports.values())

    def test_trivial_chain_omits_norm(self):
        """Test the chain without an added vector drops extra_norm"""
        report = next(r for r in reproduce_index_embeddings() if r.chain == "M->M")
        assert "extra_norm" not in report.to_dict()

    def test_single_chain(self):
        """Test one chain can be computed on its own"""
        report = index_chain("M_alpha->M")
        assert report.passed
        assert report.error is None

    def test_unknown_chain(self):
        """Test unknown chain names"""
        with pytest.raises(K3LatValidationError, match="Unknown index chain"):
            index_chain("M->Y")

    def test_broken_chain_is_isolated(self, monkeypatch):
        """Test a wrong M_beta Gram matrix fails only the M_beta chain"""
        monkeypatch.setattr(constants, "M_BETA_GRAM", [[4, 3], [3, 0]])
        reports = {r.chain: r for r in reproduce_index_embeddings()}
        assert reports["M_alpha->M"].passed
        assert reports["M->M"].passed
        broken = reports["M_beta->Y"]
        assert not broken.passed
        assert "wrong Gram matrix" in broken.error
        assert broken.to_dict() == {
            "chain": "M_beta->Y",
            "expected": 9,
            "pass": False,
            "error": broken.error,
        }
        with pytest.raises(K3LatConsistencyError):
            index_chain("M_beta->Y")
