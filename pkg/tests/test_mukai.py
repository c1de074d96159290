"""
Tests for Mukai vectors, fineness and splitting types
"""

import pytest

from k3lat.exceptions import K3LatPreconditionError, K3LatValidationError
from k3lat.models.lattice import Lattice
from k3lat.models.mukai import MukaiVector, NSContext
from k3lat.mukai import (
    fineness_index,
    from_chern,
    is_isotropic,
    is_primitive,
    mukai_lattice,
    mukai_orthogonal,
    mukai_pairing,
    obstruction_residue,
    p1_splitting_types,
    quasi_universal_rank,
    schubert_pairing,
    split_h0,
)
from k3lat.utils.validators import ensure_valid


@pytest.fixture
def degree8():
    return NSContext(Lattice([[8]]))


@pytest.fixture
def v():
    return MukaiVector(2, (1,), 2)


class TestMukaiPairing:
    """Test the Mukai pairing and vectors"""

    def test_isotropic(self, v, degree8):
        """Test (2,H,2) on <8> pairs to 8 - 4 - 4 = 0"""
        assert mukai_pairing(v, v, degree8) == 0
        assert is_isotropic(v, degree8)

    def test_pairing_formula(self, degree8):
        """Test <c1,c1'> - r s' - s r'"""
        assert mukai_pairing(MukaiVector(2, (1,), 2), MukaiVector(1, (1,), 0), degree8) == 6

    def test_dimension_mismatch(self, v):
        """Test c1 must match the NS rank"""
        ctx = NSContext(Lattice([[8, 1], [1, -2]]))
        with pytest.raises(K3LatValidationError, match="rank"):
            mukai_pairing(v, v, ctx)

    def test_non_integer_coordinates(self):
        """Test Mukai vectors are integral"""
        with pytest.raises(K3LatValidationError, match="r must be an integer"):
            MukaiVector(0.5, (1,), 2)

    def test_is_primitive(self):
        """Test gcd of coordinates"""
        assert is_primitive(MukaiVector(2, (1,), 2))
        assert not is_primitive(MukaiVector(2, (2,), 2))
        assert not is_primitive(MukaiVector(0, (0,), 0))

    def test_from_chern(self, degree8):
        """Test rank 2, c1 = H, c2 = 4 gives (2, H, 2)"""
        assert from_chern(2, (1,), 4, degree8) == MukaiVector(2, (1,), 2)

    def test_from_chern_odd_square(self):
        """Test odd c1^2 has no K3 Mukai vector"""
        with pytest.raises(K3LatPreconditionError, match="odd"):
            from_chern(1, (1,), 0, NSContext(Lattice([[1]])))

    def test_odd_context_is_invalid(self):
        """Test NS contexts validate evenness"""
        with pytest.raises(K3LatValidationError, match="even"):
            ensure_valid(NSContext(Lattice([[1]])))

    def test_mukai_lattice_agrees_with_pairing(self, degree8):
        """Test the Mukai lattice form reproduces the pairing"""
        lattice = mukai_lattice(degree8)
        a, b = MukaiVector(2, (1,), 2), MukaiVector(1, (1,), 0)
        assert lattice.rank == 3
        assert lattice.pair(a.coordinates(), b.coordinates()) == mukai_pairing(a, b, degree8)

    def test_mukai_orthogonal(self, v, degree8):
        """Test v-perp has rank 2 and pairs to zero with v"""
        perp = mukai_orthogonal(v, degree8)
        lattice = mukai_lattice(degree8)
        assert perp.rank == 2
        for i in range(perp.rank):
            assert lattice.pair(list(perp.basis.row(i)), v.coordinates()) == 0

    def test_mukai_orthogonal_zero(self, degree8):
        """Test v-perp of the zero vector"""
        with pytest.raises(K3LatPreconditionError):
            mukai_orthogonal(MukaiVector(0, (0,), 0), degree8)


class TestFineness:
    """Test fineness indices and obstruction residues"""

    def test_degree8_not_fine(self, v, degree8):
        """Test (2,H,2) on <8> has n = 2 and quasi-universal rank 4"""
        assert fineness_index(v, degree8) == 2
        assert quasi_universal_rank(v, degree8) == 4

    def test_line_makes_fine(self):
        """Test a line L with <(0,L,0), v> = 1 gives n = 1"""
        ctx = NSContext(Lattice([[8, 1], [1, -2]]))
        v = MukaiVector(2, (1, 0), 2)
        u = MukaiVector(0, (0, 1), 0)
        assert mukai_pairing(u, v, ctx) == 1
        assert fineness_index(v, ctx) == 1
        assert obstruction_residue(u, v, ctx) == 0

    def test_explicit_modulus(self):
        """Test the residue read against an explicit modulus"""
        ctx = NSContext(Lattice([[8, 3], [3, 0]]))
        v = MukaiVector(2, (1, 0), 2)
        u = MukaiVector(0, (0, 1), 0)
        assert mukai_pairing(u, v, ctx) == 3
        assert obstruction_residue(u, v, ctx, modulus=2) == 1

    def test_double_cover_parity(self):
        """Test (2, D, 2m) on <2> always has even index"""
        ctx = NSContext(Lattice([[2]]))
        for m in range(1, 6):
            assert fineness_index(MukaiVector(2, (1,), 2 * m), ctx) % 2 == 0

    def test_zero_vector(self, degree8):
        """Test the zero vector has no fineness index"""
        with pytest.raises(K3LatPreconditionError, match="zero vector"):
            fineness_index(MukaiVector(0, (0,), 0), degree8)

    def test_degenerate_pairing(self):
        """Test a vector orthogonal to every algebraic class"""
        with pytest.raises(K3LatPreconditionError, match="pairs to zero"):
            fineness_index(MukaiVector(0, (1,), 0), NSContext(Lattice([[0]])))

    def test_bad_modulus(self, v, degree8):
        """Test explicit moduli must be positive"""
        with pytest.raises(K3LatValidationError, match="modulus"):
            obstruction_residue(v, v, degree8, modulus=0)


class TestSplittingTypes:
    """Test splitting types of bundles on P^1"""

    def test_no_sections(self):
        """Test rank 2, degree -2, h^0 = 0 is O(-1) + O(-1)"""
        assert p1_splitting_types(2, -2, 0) == [(-1, -1)]

    def test_one_section(self):
        """Test rank 2, degree -2, h^0 = 1 is O + O(-2)"""
        assert p1_splitting_types(2, -2, 1) == [(0, -2)]

    def test_line_bundle(self):
        """Test rank 1 has one type"""
        assert p1_splitting_types(1, 2, 3) == [(2,)]

    def test_no_solution(self):
        """Test impossible data returns an empty list"""
        assert p1_splitting_types(1, 2, 0) == []

    def test_matches_brute_force(self):
        """Test against a direct scan of rank-3 types"""
        for degree in range(-4, 3):
            for h0 in range(0, 5):
                brute = sorted(
                    (
                        (a, b, degree - a - b)
                        for a in range(-12, 6)
                        for b in range(-12, a + 1)
                        if b >= degree - a - b and split_h0((a, b, degree - a - b)) == h0
                    ),
                    reverse=True,
                )
                assert p1_splitting_types(3, degree, h0) == brute

    def test_invalid_rank(self):
        """Test rank >= 1"""
        with pytest.raises(K3LatValidationError, match="rank"):
            p1_splitting_types(0, 0, 0)


class TestSchubert:
    """Test middle-degree Schubert pairings on Gr(2, 4)"""

    def test_table(self):
        """Test (p,p) = 1, (p,h) = 0, (h,h) = 1"""
        p, h = (2,), (1, 1)
        assert schubert_pairing(p, p) == 1
        assert schubert_pairing(p, h) == 0
        assert schubert_pairing(h, p) == 0
        assert schubert_pairing(h, h) == 1

    def test_wrong_degree(self):
        """Test partitions of size other than 2"""
        with pytest.raises(K3LatValidationError, match="middle degree"):
            schubert_pairing((1,), (2,))

    def test_outside_box(self):
        """Test partitions must fit in the 2x2 box"""
        with pytest.raises(K3LatValidationError, match="box"):
            schubert_pairing((3,), (1,))
